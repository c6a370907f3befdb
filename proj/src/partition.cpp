#include "nchull/partition.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace nchull {

namespace {

void canonicalize(std::vector<uint32_t>& masks) {
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
}

} // namespace

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    uint32_t all = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        uint32_t m = 0;
        for (int p : b) {
            if (p < 0 || p >= n) throw std::invalid_argument("point out of range");
            if (m & (1u << p)) throw std::invalid_argument("duplicate point in block");
            m |= 1u << p;
        }
        if (all & m) throw std::invalid_argument("blocks overlap");
        all |= m;
        masks_.push_back(m);
    }
    if (n > 32) throw std::invalid_argument("partition size limit is 32");
    if (all != (n == 32 ? ~0u : (1u << n) - 1)) throw std::invalid_argument("blocks do not cover 0..n-1");
    canonicalize(masks_);
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
    Partition p;
    p.n_ = static_cast<int>(rgs.size());
    for (int i = 0; i < p.n_; ++i) {
        int b = rgs[i];
        if (b == static_cast<int>(p.masks_.size()))
            p.masks_.push_back(0);
        else if (b > static_cast<int>(p.masks_.size()))
            throw std::invalid_argument("not a restricted growth string");
        p.masks_[b] |= 1u << i;
    }
    // RGS block ids are already ordered by minimum element.
    return p;
}

Partition Partition::singletons(int n) {
    Partition p;
    p.n_ = n;
    for (int i = 0; i < n; ++i) p.masks_.push_back(1u << i);
    return p;
}

Partition Partition::one_block(int n) {
    Partition p;
    p.n_ = n;
    p.masks_.push_back(n == 32 ? ~0u : (1u << n) - 1);
    return p;
}

Partition Partition::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    std::istringstream is(text);
    std::string blocktext;
    while (std::getline(is, blocktext, '|')) {
        std::vector<int> block;
        std::istringstream bs(blocktext);
        std::string tok;
        while (std::getline(bs, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed partition: " + text);
            block.push_back(std::stoi(tok));
        }
        blocks.push_back(std::move(block));
    }
    return Partition(n, std::move(blocks));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out;
    for (uint32_t m : masks_) {
        std::vector<int> b;
        for (int i = 0; i < n_; ++i)
            if (m & (1u << i)) b.push_back(i);
        out.push_back(std::move(b));
    }
    return out;
}

int Partition::block_of(int p) const {
    for (size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] & (1u << p)) return static_cast<int>(i);
    throw std::invalid_argument("point out of range");
}

bool Partition::refines(const Partition& o) const {
    for (uint32_t m : masks_) {
        uint32_t container = o.masks_[o.block_of(std::countr_zero(m))];
        if ((m & container) != m) return false;
    }
    return true;
}

Partition Partition::meet_with(const Partition& o) const {
    Partition p;
    p.n_ = n_;
    for (uint32_t a : masks_)
        for (uint32_t b : o.masks_)
            if (a & b) p.masks_.push_back(a & b);
    canonicalize(p.masks_);
    return p;
}

Partition Partition::join_with(const Partition& o) const {
    std::vector<uint32_t> merged = masks_;
    merged.insert(merged.end(), o.masks_.begin(), o.masks_.end());
    // Union-find by mask overlap.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < merged.size() && !changed; ++i)
            for (size_t j = i + 1; j < merged.size() && !changed; ++j)
                if (merged[i] & merged[j]) {
                    merged[i] |= merged[j];
                    merged.erase(merged.begin() + j);
                    changed = true;
                }
    }
    Partition p;
    p.n_ = n_;
    p.masks_ = std::move(merged);
    canonicalize(p.masks_);
    return p;
}

Partition Partition::merge_blocks(int b1, int b2) const {
    Partition p;
    p.n_ = n_;
    for (int i = 0; i < block_count(); ++i) {
        if (i == b2) continue;
        p.masks_.push_back(i == b1 ? (masks_[b1] | masks_[b2]) : masks_[i]);
    }
    canonicalize(p.masks_);
    return p;
}

Partition Partition::restrict_map(const std::vector<int>& old_to_new, int new_n) const {
    std::vector<std::vector<int>> blocks;
    for (uint32_t m : masks_) {
        std::vector<int> b;
        for (int i = 0; i < n_; ++i)
            if ((m & (1u << i)) && old_to_new[i] >= 0) b.push_back(old_to_new[i]);
        if (!b.empty()) blocks.push_back(std::move(b));
    }
    return Partition(new_n, std::move(blocks));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    bool first_block = true;
    for (uint32_t m : masks_) {
        if (!first_block) os << '|';
        first_block = false;
        bool first = true;
        for (int i = 0; i < n_; ++i)
            if (m & (1u << i)) {
                if (!first) os << ',';
                first = false;
                os << i;
            }
    }
    return os.str();
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == n) {
            out.push_back(Partition::from_rgs(rgs));
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(maxb, b));
        }
    };
    if (n == 0) return out;
    rec(rec, 1, 0);
    return out;
}

size_t PartitionHash::operator()(const Partition& p) const {
    size_t h = static_cast<size_t>(p.n()) * 1000003u;
    for (uint32_t m : p.masks()) h = h * 1099511628211ULL + m;
    return h;
}

} // namespace nchull
