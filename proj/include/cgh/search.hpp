#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgh/bounds.hpp"
#include "cgh/core.hpp"
#include "cgh/patterns.hpp"

namespace cgh {

enum class PatternKind { tight_path, zigzag, stack, disjoint_segments };

inline std::string to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::tight_path: return "tight-path";
        case PatternKind::zigzag: return "zigzag";
        case PatternKind::stack: return "stack";
        case PatternKind::disjoint_segments: return "disjoint-segments";
    }
    return "unknown";
}

inline PatternKind parse_pattern_kind(const std::string& name) {
    if (name == "tight-path" || name == "tight_path") return PatternKind::tight_path;
    if (name == "zigzag") return PatternKind::zigzag;
    if (name == "stack") return PatternKind::stack;
    if (name == "disjoint-segments" || name == "disjoint_segments" || name == "matching")
        return PatternKind::disjoint_segments;
    throw std::invalid_argument("unknown pattern kind '" + name + "'");
}

/// A forbidden pattern. Convex patterns are closed under reflection of the
/// circle: a zigzag or stack counts in either orientation.
struct PatternPredicate {
    PatternKind kind = PatternKind::tight_path;
    std::size_t k = 1;
    bool convex = false;

    void validate(std::size_t r) const {
        if (k == 0) throw std::invalid_argument("pattern size k must be positive");
        switch (kind) {
            case PatternKind::tight_path: break;
            case PatternKind::zigzag:
            case PatternKind::stack:
                if (r % 2 != 0) throw std::invalid_argument(to_string(kind) + " needs even uniformity");
                if (!convex) throw std::invalid_argument(to_string(kind) + " is a convex pattern");
                break;
            case PatternKind::disjoint_segments:
                if (r != 2) throw std::invalid_argument("disjoint segments need r = 2");
                if (!convex) throw std::invalid_argument("disjoint segments is a convex pattern");
                break;
        }
    }
};

/// Full (non-incremental) detector with the search's semantics.
inline bool contains_pattern(const Cgh& h, const PatternPredicate& p) {
    p.validate(h.r());
    switch (p.kind) {
        case PatternKind::tight_path: return contains_tight_path(h, p.k);
        case PatternKind::zigzag: return contains_zigzag(h, p.k) || contains_zigzag(reflect(h), p.k);
        case PatternKind::stack: return contains_stack(h, p.k) || contains_stack(reflect(h), p.k);
        case PatternKind::disjoint_segments: return contains_disjoint_segments(h, p.k);
    }
    return false;
}

struct ExtremalResult {
    std::size_t n = 0, r = 0;
    PatternPredicate pattern;
    std::size_t max_edges = 0;
    Cgh witness{CyclicGround(1), 1};
    std::uint64_t nodes_explored = 0;
    bool exact = false;
};

struct SearchOptions {
    std::uint64_t budget = 100'000'000;  // search-tree nodes
    bool use_symmetry = true;
    std::size_t symmetry_frontier = std::numeric_limits<std::size_t>::max();  // lex-leader checks at depth <= this
    std::size_t max_symmetric_group_n = 8;  // larger n falls back to the dihedral subgroup
};

namespace detail {

/// All r-subsets of a small ground set, indexed lexicographically, with
/// bitmask lookup.
class EdgeUniverse {
public:
    EdgeUniverse(std::size_t n, std::size_t r) : n_(n), r_(r), id_of_(std::size_t{1} << n, -1) {
        for_each_subset(n, r, [&](const Edge& e) {
            std::uint32_t mask = 0;
            for (Vertex v : e) mask |= 1U << v;
            id_of_[mask] = static_cast<std::int32_t>(edges_.size());
            edges_.push_back(e);
            masks_.push_back(mask);
        });
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    std::int32_t id(std::uint32_t mask) const { return id_of_[mask]; }

    /// Image of every edge under a vertex permutation.
    std::vector<std::int32_t> edge_permutation(const std::vector<Vertex>& perm) const {
        std::vector<std::int32_t> out(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            std::uint32_t mask = 0;
            for (Vertex v : edges_[i]) mask |= 1U << perm[v];
            out[i] = id_of_[mask];
        }
        return out;
    }

private:
    std::size_t n_, r_;
    std::vector<std::int32_t> id_of_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> masks_;
};

inline std::vector<std::vector<Vertex>> dihedral_group(std::size_t n) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<Vertex> rot(n), ref(n);
        for (std::size_t v = 0; v < n; ++v) {
            rot[v] = static_cast<Vertex>((v + t) % n);
            ref[v] = static_cast<Vertex>((t + n - v) % n);
        }
        out.push_back(std::move(rot));
        out.push_back(std::move(ref));
    }
    return out;
}

inline std::vector<std::vector<Vertex>> symmetric_group(std::size_t n) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

class ExtremalSearch {
public:
    ExtremalSearch(std::size_t n, std::size_t r, PatternPredicate pattern, SearchOptions options)
        : universe_(n, r), pattern_(pattern), options_(options), state_(universe_.size(), -1) {
        if (options_.use_symmetry) {
            const bool full = pattern_.kind == PatternKind::tight_path && !pattern_.convex &&
                              n <= options_.max_symmetric_group_n;
            for (const auto& perm : full ? symmetric_group(n) : dihedral_group(n)) {
                auto img = universe_.edge_permutation(perm);
                bool identity = true;
                for (std::size_t i = 0; i < img.size(); ++i) identity = identity && img[i] == static_cast<std::int32_t>(i);
                if (!identity) group_.push_back(std::move(img));
            }
        }
        upper_ = universe_.size();
        if (pattern_.kind == PatternKind::tight_path)
            upper_ = std::min<std::size_t>(upper_, (pattern_.k - 1) * binomial(n, r - 1));
    }

    ExtremalResult run() {
        descend(0);
        ExtremalResult res;
        res.n = universe_.n();
        res.r = universe_.r();
        res.pattern = pattern_;
        res.max_edges = best_ < 0 ? 0 : static_cast<std::size_t>(best_);
        res.witness = Cgh(CyclicGround(universe_.n()), universe_.r(), best_edges_);
        res.nodes_explored = nodes_;
        res.exact = !exhausted_;
        return res;
    }

private:
    bool has(std::uint32_t mask, std::size_t candidate) const {
        const auto id = universe_.id(mask);
        return id >= 0 && (state_[static_cast<std::size_t>(id)] == 1 || static_cast<std::size_t>(id) == candidate);
    }

    /// Canonical graphs have the lexicographically largest indicator vector in
    /// their orbit; prune when some group element provably beats the prefix.
    bool lex_leader_possible(std::size_t depth) const {
        for (const auto& img : group_) {
            for (std::size_t i = 0; i < depth; ++i) {
                const auto j = static_cast<std::size_t>(img[i]);
                if (j >= depth) break;
                if (state_[j] > state_[i]) return false;
                if (state_[j] < state_[i]) break;
            }
        }
        return true;
    }

    bool accept_leaf(const std::vector<Vertex>& seq) const {
        if (pattern_.kind == PatternKind::tight_path) return true;
        if (zigzag_order_holds(universe_.r(), seq)) return true;
        std::vector<Vertex> mirrored(seq);
        for (auto& v : mirrored) v = static_cast<Vertex>(universe_.n() - 1 - v);
        return zigzag_order_holds(universe_.r(), mirrored);
    }

    /// Is there a tight k-path (accepted at the leaf) using edge `cand`?
    bool path_through(std::size_t cand) const {
        const std::size_t n = universe_.n(), r = universe_.r(), k = pattern_.k;
        if (k + r - 1 > n) return false;
        Edge order = universe_.edge(cand);
        std::vector<Vertex> seq;
        std::uint32_t used = 0;

        auto key_mask = [&](std::size_t from, std::size_t count, Vertex extra) {
            std::uint32_t mask = 1U << extra;
            for (std::size_t i = 0; i < count; ++i) mask |= 1U << seq[from + i];
            return mask;
        };
        auto grow = [&](auto&& self, std::size_t right, std::size_t left) -> bool {
            if (right == 0 && left == 0) return accept_leaf(seq);
            for (Vertex w = 0; w < n; ++w) {
                if (used & (1U << w)) continue;
                if (right > 0) {
                    if (!has(key_mask(seq.size() - (r - 1), r - 1, w), cand)) continue;
                    seq.push_back(w);
                    used |= 1U << w;
                    bool ok = self(self, right - 1, left);
                    used &= ~(1U << w);
                    seq.pop_back();
                    if (ok) return true;
                } else {
                    if (!has(key_mask(0, r - 1, w), cand)) continue;
                    seq.insert(seq.begin(), w);
                    used |= 1U << w;
                    bool ok = self(self, 0, left - 1);
                    used &= ~(1U << w);
                    seq.erase(seq.begin());
                    if (ok) return true;
                }
            }
            return false;
        };

        std::sort(order.begin(), order.end());
        do {
            for (std::size_t pos = 0; pos < k; ++pos) {
                seq = order;
                used = 0;
                for (Vertex v : order) used |= 1U << v;
                if (grow(grow, k - 1 - pos, pos)) return true;
            }
        } while (std::next_permutation(order.begin(), order.end()));
        return false;
    }

    Cgh current_with(std::size_t cand) const {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < state_.size(); ++i)
            if (state_[i] == 1 || i == cand) edges.push_back(universe_.edge(i));
        return Cgh(CyclicGround(universe_.n()), universe_.r(), std::move(edges));
    }

    bool creates_pattern(std::size_t cand) const {
        switch (pattern_.kind) {
            case PatternKind::tight_path:
            case PatternKind::zigzag: return path_through(cand);
            case PatternKind::stack:
            case PatternKind::disjoint_segments: return contains_pattern(current_with(cand), pattern_);
        }
        return true;
    }

    void descend(std::size_t depth) {
        if (stop_) return;
        if (++nodes_ > options_.budget) {
            exhausted_ = stop_ = true;
            return;
        }
        const auto m = universe_.size();
        if (static_cast<long long>(count_ + (m - depth)) <= best_) return;
        if (depth == m) {
            best_ = static_cast<long long>(count_);
            best_edges_.clear();
            for (std::size_t i = 0; i < m; ++i)
                if (state_[i] == 1) best_edges_.push_back(universe_.edge(i));
            if (count_ >= upper_) stop_ = true;
            return;
        }
        if (!group_.empty() && depth <= options_.symmetry_frontier && !lex_leader_possible(depth)) return;
        if (!creates_pattern(depth)) {
            state_[depth] = 1;
            ++count_;
            descend(depth + 1);
            --count_;
        }
        state_[depth] = 0;
        descend(depth + 1);
        state_[depth] = -1;
    }

    EdgeUniverse universe_;
    PatternPredicate pattern_;
    SearchOptions options_;
    std::vector<std::vector<std::int32_t>> group_;
    std::vector<std::int8_t> state_;  // -1 undecided, 0 excluded, 1 included
    std::size_t count_ = 0;
    std::size_t upper_ = 0;
    long long best_ = -1;
    std::vector<Edge> best_edges_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool stop_ = false;
};

}  // namespace detail

/// Exact ex(n, F) / ex_cyc(n, F) by include-first branch and bound over the
/// lexicographic edge order, with lex-leader symmetry pruning. If the node
/// budget runs out the result is a lower bound with exact = false.
inline ExtremalResult max_edges_avoiding(std::size_t n, std::size_t r, const PatternPredicate& pattern,
                                         const SearchOptions& options = {}) {
    if (r == 0) throw std::invalid_argument("uniformity must be positive");
    if (r > n) throw std::invalid_argument("uniformity exceeds n");
    if (n > 16) throw std::invalid_argument("exact search supports n <= 16");
    if (options.budget == 0) throw std::invalid_argument("node budget must be positive");
    pattern.validate(r);
    return detail::ExtremalSearch(n, r, pattern, options).run();
}

struct TableSpec {
    std::vector<std::size_t> ns, rs, ks;
    std::vector<PatternKind> kinds;
    bool convex = false;  // tight paths only; other kinds are always convex
};

/// Runs every valid (n, r, k, kind) cell of the grid in that nesting order.
/// Cells whose parameters are invalid for the pattern are skipped.
inline std::vector<ExtremalResult> extremal_table(const TableSpec& spec, const SearchOptions& options = {}) {
    std::vector<ExtremalResult> out;
    for (auto n : spec.ns)
        for (auto r : spec.rs)
            for (auto k : spec.ks)
                for (auto kind : spec.kinds) {
                    PatternPredicate p{kind, k, kind == PatternKind::tight_path ? spec.convex : true};
                    if (r < 2 || r > n || n > 16 || k == 0) continue;
                    try {
                        p.validate(r);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    out.push_back(max_edges_avoiding(n, r, p, options));
                }
    return out;
}

inline void write_table_csv(std::ostream& out, const std::vector<ExtremalResult>& rows) {
    out << "n,r,k,pattern,max_edges,exact,bound_thm2,bound_conj1,bound_trivial,bound_thm3,bound_thm4,bound_link,convex\n";
    for (const auto& row : rows) {
        const auto b = bound_values(row.n, row.r, row.pattern.k);
        out << row.n << ',' << row.r << ',' << row.pattern.k << ',' << to_string(row.pattern.kind) << ','
            << row.max_edges << ',' << (row.exact ? "true" : "false") << ',' << to_string(b.thm2) << ','
            << to_string(b.conj1) << ',' << to_string(b.trivial) << ',' << (b.thm3 ? to_string(*b.thm3) : "") << ','
            << (b.thm4 ? to_string(*b.thm4) : "") << ','
            << (b.link_applies ? to_string(b.link) : "") << ',' << (row.pattern.convex ? "true" : "false") << '\n';
    }
}

}  // namespace cgh
