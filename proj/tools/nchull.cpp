#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "nchull/check.hpp"
#include "nchull/hullposet.hpp"
#include "nchull/lattice.hpp"
#include "nchull/oracle.hpp"
#include "nchull/render.hpp"
#include "nchull/scd.hpp"
#include "nchull/trees.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(out_file);
        os << text;
    }
}

int cmd_stats(const std::string& shape, bool json, const std::string& out,
              const nchull::BuildOptions& budget) {
    nchull::HullConfig config = nchull::parse_shape(shape);
    nchull::NCLattice L = nchull::build_lattice(config, budget);
    if (json) {
        emit(nchull::lattice_json(L), out);
        return exit_ok;
    }
    std::vector<long> ranks = nchull::rank_polynomial(L);
    std::ostringstream os;
    os << "shape: " << config.to_string() << "\n";
    os << "elements: " << L.elements.size() << "\n";
    os << "rank vector:";
    for (long r : ranks) os << ' ' << r;
    os << "\n";
    os << "graded: " << (nchull::is_graded(L) ? "true" : "false") << "\n";
    os << "rank-symmetric: " << (nchull::is_rank_symmetric(L) ? "true" : "false") << "\n";
    os << "atoms: " << L.atoms().size() << "\n";
    os << "coatoms: " << L.coatoms().size() << "\n";
    emit(os.str(), out);
    return exit_ok;
}

int cmd_scd(const std::string& shape, bool verify, bool json, std::optional<int> blank_side,
            const std::string& out, const nchull::BuildOptions& budget) {
    nchull::HullConfig config = nchull::parse_shape(shape);
    if (!config.is_segment() && !config.has_blank_side()) {
        std::cerr << "error: " << config.to_string()
                  << " has no blank side; the symmetric chain decomposition "
                     "theorem requires one\n";
        return exit_usage;
    }
    nchull::NCLattice L = nchull::build_lattice(config, budget);
    nchull::ChainDecomposition d = nchull::scd(L, blank_side);
    std::ostringstream os;
    if (json) {
        emit(nchull::scd_json(L, d), out);
    } else {
        os << "shape: " << config.to_string() << "\n";
        os << "chains: " << d.chains.size() << "\n";
        for (const auto& chain : d.chains) {
            for (size_t i = 0; i < chain.size(); ++i)
                os << (i ? " < " : "  ") << L.elements[chain[i]].to_string();
            os << "\n";
        }
        emit(os.str(), out);
    }
    if (verify) {
        nchull::ScdReport rep = nchull::verify_scd(L, d);
        std::cout << "disjoint: " << (rep.disjoint ? "true" : "false") << "\n"
                  << "covering: " << (rep.covering ? "true" : "false") << "\n"
                  << "saturated: " << (rep.saturated ? "true" : "false") << "\n"
                  << "centered: " << (rep.centered ? "true" : "false") << "\n";
        if (!rep.all()) {
            std::cerr << "counterexample: " << rep.witness << "\n";
            return exit_counterexample;
        }
    }
    return exit_ok;
}

int cmd_trees(const std::string& shape, bool count_only, bool list, bool check_union,
              bool check_bijection, const std::string& out, const nchull::BuildOptions& budget) {
    nchull::HullConfig config = nchull::parse_shape(shape);
    std::vector<nchull::Forest> trees = nchull::enumerate_cg_trees(config, budget.max_n);
    std::ostringstream os;
    if (count_only) {
        os << trees.size() << "\n";
    } else if (list) {
        for (const nchull::Forest& t : trees) os << t.to_string() << "\n";
    } else {
        os << "shape: " << config.to_string() << "\n";
        os << "cg trees: " << trees.size() << "\n";
    }
    emit(os.str(), out);
    if (check_bijection) {
        nchull::NCLattice L = nchull::build_lattice(config, budget);
        std::vector<std::vector<int>> sets = nchull::maximal_boolean_atom_sets(L);
        std::cout << "maximal Boolean atom sets: " << sets.size() << "\n";
        if (sets.size() != trees.size()) {
            std::cerr << "counterexample: " << trees.size() << " cg trees vs " << sets.size()
                      << " maximal Boolean atom sets\n";
            return exit_counterexample;
        }
    }
    if (check_union) {
        nchull::NCLattice L = nchull::build_lattice(config, budget);
        nchull::UnionCheck uc = nchull::boolean_union_check(L, trees);
        std::cout << "union covered: " << (uc.covered ? "true" : "false") << "\n";
        if (!uc.covered) {
            std::cerr << "counterexample: element "
                      << L.elements[uc.missing_element].to_string()
                      << " lies in no maximal Boolean subposet\n";
            return exit_counterexample;
        }
    }
    return exit_ok;
}

int cmd_hullposet(int n, bool counts, bool dot, bool json, const std::string& out) {
    nchull::HullPosetCache cache;
    std::ostringstream os;
    if (counts) {
        for (int k = 2; k <= n; ++k)
            os << "rank " << k << ": " << nchull::enumerate_hull(n, k).size() << "\n";
        emit(os.str(), out);
        return exit_ok;
    }
    nchull::HullPosetDiagram d = nchull::hull_poset_diagram(n, cache);
    if (dot)
        emit(nchull::hull_poset_dot(d), out);
    else if (json)
        emit(nchull::hull_poset_json(d), out);
    else {
        os << "elements: " << d.elements.size() << "\ncover edges: " << d.edges.size() << "\n";
        emit(os.str(), out);
    }
    return exit_ok;
}

int cmd_render(const std::string& shape, const std::string& object, const std::string& out,
               const nchull::BuildOptions& budget) {
    nchull::HullConfig config = nchull::parse_shape(shape);
    if (object == "hasse") {
        nchull::NCLattice L = nchull::build_lattice(config, budget);
        emit(nchull::lattice_dot(L), out);
        return exit_ok;
    }
    std::optional<nchull::Partition> partition;
    std::optional<nchull::Forest> forest;
    if (object.find('-') != std::string::npos)
        forest = nchull::Forest::parse(object, config.n());
    else
        partition = nchull::Partition::parse(object, config.n());
    emit(nchull::render_svg(config, partition, forest), out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncrossing partition lattices of hull configurations"};
    app.require_subcommand(1);

    nchull::BuildOptions budget;
    std::string shape, out, object;
    bool json = false, verify = false;
    bool count_only = false, list = false, check_union = false, check_bijection = false;
    bool counts = false, dot = false;
    int n = 4;
    int max_n_check = 6;
    std::optional<int> blank_side;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", budget.max_n, "largest point count to enumerate");
        cmd->add_option("--max-partitions", budget.max_partitions, "largest element count");
        cmd->add_option("--out", out, "write output to a file");
    };

    CLI::App* stats = app.add_subcommand("stats", "lattice size, rank vector, symmetry");
    stats->add_option("--shape", shape, "shape string")->required();
    stats->add_flag("--json", json, "emit the lattice as JSON");
    add_budget(stats);

    CLI::App* scd_cmd = app.add_subcommand("scd", "symmetric chain decomposition");
    scd_cmd->add_option("--shape", shape, "shape string")->required();
    scd_cmd->add_flag("--verify", verify, "run the four verifier checks");
    scd_cmd->add_flag("--json", json, "emit chains as JSON");
    int blank_side_raw = 0;
    CLI::Option* bs =
        scd_cmd->add_option("--blank-side", blank_side_raw, "use this blank side (1-based)");
    add_budget(scd_cmd);

    CLI::App* trees_cmd = app.add_subcommand("trees", "noncrossing trees with convex geodesics");
    trees_cmd->add_option("--shape", shape, "shape string")->required();
    trees_cmd->add_flag("--count", count_only, "print only the count");
    trees_cmd->add_flag("--list", list, "print one tree per line");
    trees_cmd->add_flag("--check-union", check_union, "check every element has a Boolean witness");
    trees_cmd->add_flag("--check-bijection", check_bijection,
                        "compare tree count with maximal Boolean atom sets");
    add_budget(trees_cmd);

    CLI::App* hull_cmd = app.add_subcommand("hullposet", "the poset of hull configurations");
    hull_cmd->add_option("--n", n, "number of points")->required();
    hull_cmd->add_flag("--counts", counts, "rank counts only");
    hull_cmd->add_flag("--dot", dot, "emit the Hasse diagram as DOT");
    hull_cmd->add_flag("--json", json, "emit the Hasse diagram as JSON");
    hull_cmd->add_option("--out", out, "write output to a file");

    CLI::App* check_cmd = app.add_subcommand("check", "cross-validate against the geometry oracle");
    check_cmd->add_option("--max-n", max_n_check, "largest point count to sweep");

    CLI::App* render_cmd = app.add_subcommand("render", "SVG of a partition or tree, DOT of the lattice");
    render_cmd->add_option("--shape", shape, "shape string")->required();
    render_cmd->add_option("--object", object, "partition string, tree string, or 'hasse'")->required();
    add_budget(render_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return cmd_stats(shape, json, out, budget);
        if (scd_cmd->parsed()) {
            if (bs->count()) blank_side = blank_side_raw;
            return cmd_scd(shape, verify, json, blank_side, out, budget);
        }
        if (trees_cmd->parsed())
            return cmd_trees(shape, count_only, list, check_union, check_bijection, out, budget);
        if (hull_cmd->parsed()) return cmd_hullposet(n, counts, dot, json, out);
        if (check_cmd->parsed()) {
            bool ok = nchull::run_check_suite(max_n_check,
                                              [](const std::string& line) { std::cout << line << "\n"; });
            return ok ? exit_ok : exit_counterexample;
        }
        if (render_cmd->parsed()) return cmd_render(shape, object, out, budget);
    } catch (const nchull::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_counterexample;
    }
    return exit_usage;
}
