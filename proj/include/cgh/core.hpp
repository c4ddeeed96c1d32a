#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/container_hash/hash.hpp>

namespace cgh {

using Vertex = std::uint32_t;

/// An unordered edge, stored as its vertices in ascending order.
using Edge = std::vector<Vertex>;

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept { return boost::hash_range(e.begin(), e.end()); }
};

/// Vertices 0..n-1 placed clockwise on a circle; the successor of n-1 is 0.
class CyclicGround {
public:
    explicit CyclicGround(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("cyclic ground set must have at least one vertex");
    }

    std::size_t size() const noexcept { return n_; }

    void check(Vertex v) const {
        if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }

    Vertex successor(Vertex v) const {
        check(v);
        return static_cast<Vertex>((v + 1) % n_);
    }

    /// Number of clockwise steps from `from` to `to`, i.e. (to - from) mod n.
    std::size_t offset(Vertex from, Vertex to) const noexcept {
        return (static_cast<std::size_t>(to) + n_ - from) % n_;
    }

    /// Mirror image v -> n-1-v; reverses the cyclic order.
    Vertex reflect(Vertex v) const noexcept { return static_cast<Vertex>(n_ - 1 - v); }

    Vertex rotate(Vertex v, std::size_t by) const noexcept { return static_cast<Vertex>((v + by) % n_); }

    friend bool operator==(const CyclicGround&, const CyclicGround&) = default;

private:
    std::size_t n_;
};

/// The clockwise arc from u to v with both endpoints included. [u,u] = {u}.
struct Segment {
    Vertex u = 0;
    Vertex v = 0;

    std::size_t size(const CyclicGround& ground) const { return ground.offset(u, v) + 1; }

    bool contains(const CyclicGround& ground, Vertex w) const { return ground.offset(u, w) <= ground.offset(u, v); }

    friend bool operator==(const Segment&, const Segment&) = default;
};

inline bool in_segment(const CyclicGround& ground, Vertex u, Vertex w, Vertex v) {
    ground.check(u);
    ground.check(w);
    ground.check(v);
    return Segment{u, v}.contains(ground, w);
}

/// Number of sides on the shorter arc between u and v.
inline std::size_t ell(const CyclicGround& ground, Vertex u, Vertex v) {
    ground.check(u);
    ground.check(v);
    return std::min(ground.offset(u, v), ground.offset(v, u));
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

/// Calls fn(subset) for every r-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return;
    Edge subset(r);
    for (std::size_t i = 0; i < r; ++i) subset[i] = static_cast<Vertex>(i);
    while (true) {
        fn(static_cast<const Edge&>(subset));
        std::size_t i = r;
        while (i > 0 && subset[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++subset[i - 1];
        for (std::size_t j = i; j < r; ++j) subset[j] = subset[j - 1] + 1;
    }
}

/// An r-uniform hypergraph on a cyclic ground set. Immutable after construction;
/// edges are kept sorted ascending inside and lexicographically across.
class Cgh {
public:
    Cgh(CyclicGround ground, std::size_t r) : ground_(ground), r_(r) {
        if (r == 0) throw std::invalid_argument("uniformity must be positive");
    }

    /// Edges may list their vertices in any order. Throws on repeated vertices
    /// within an edge, wrong arity, out-of-range vertices, or duplicate edges.
    Cgh(CyclicGround ground, std::size_t r, std::vector<Edge> edges) : Cgh(ground, r) {
        for (auto& e : edges) normalize(e);
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edges);
        index_.reserve(edges_.size());
        index_.insert(edges_.begin(), edges_.end());
    }

    /// Same as the edge-list constructor but silently merges duplicates.
    static Cgh from_edges_dedup(CyclicGround ground, std::size_t r, std::vector<Edge> edges) {
        for (auto& e : edges) std::sort(e.begin(), e.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Cgh(ground, r, std::move(edges));
    }

    const CyclicGround& ground() const noexcept { return ground_; }
    std::size_t n() const noexcept { return ground_.size(); }
    std::size_t r() const noexcept { return r_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Membership for an unordered vertex list.
    bool contains(std::span<const Vertex> vs) const {
        if (vs.size() != r_) return false;
        Edge key(vs.begin(), vs.end());
        std::sort(key.begin(), key.end());
        return index_.contains(key);
    }

    bool contains(std::initializer_list<Vertex> vs) const { return contains(std::span<const Vertex>(vs.begin(), vs.size())); }

    bool contains_sorted(const Edge& e) const { return index_.contains(e); }

    std::size_t degree(Vertex v) const {
        ground_.check(v);
        return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
            return std::binary_search(e.begin(), e.end(), v);
        }));
    }

    friend bool operator==(const Cgh& a, const Cgh& b) {
        return a.ground_ == b.ground_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    void normalize(Edge& e) const {
        if (e.size() != r_)
            throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r_));
        for (Vertex v : e) ground_.check(v);
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("edge repeats a vertex");
    }

    CyclicGround ground_;
    std::size_t r_;
    std::vector<Edge> edges_;
    std::unordered_set<Edge, EdgeHash> index_;
};

inline Cgh complete_cgh(std::size_t n, std::size_t r) {
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const Edge& e) { edges.push_back(e); });
    return Cgh(CyclicGround(n), r, std::move(edges));
}

/// { e \ {x} : e in H, x in e }, deduplicated.
inline Cgh shadow(const Cgh& h) {
    if (h.r() < 2) throw std::invalid_argument("shadow needs uniformity at least 2");
    std::vector<Edge> out;
    out.reserve(h.size() * h.r());
    for (const auto& e : h.edges()) {
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            Edge f;
            f.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != skip) f.push_back(e[i]);
            out.push_back(std::move(f));
        }
    }
    return Cgh::from_edges_dedup(h.ground(), h.r() - 1, std::move(out));
}

/// The link H_v = { e \ {v} : v in e in H } as an (r-1)-graph on the same ground set.
inline Cgh link(const Cgh& h, Vertex v) {
    h.ground().check(v);
    if (h.r() < 2) throw std::invalid_argument("link needs uniformity at least 2");
    std::vector<Edge> out;
    for (const auto& e : h.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        Edge f;
        for (Vertex x : e)
            if (x != v) f.push_back(x);
        out.push_back(std::move(f));
    }
    return Cgh(h.ground(), h.r() - 1, std::move(out));
}

inline std::vector<Vertex> neighborhood(const Cgh& h, Vertex v) {
    h.ground().check(v);
    std::vector<Vertex> out;
    for (const auto& e : h.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        for (Vertex x : e)
            if (x != v) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Cgh reflect(const Cgh& h) {
    std::vector<Edge> out;
    out.reserve(h.size());
    for (const auto& e : h.edges()) {
        Edge f;
        for (Vertex v : e) f.push_back(h.ground().reflect(v));
        out.push_back(std::move(f));
    }
    return Cgh(h.ground(), h.r(), std::move(out));
}

inline Cgh rotate(const Cgh& h, std::size_t by) {
    std::vector<Edge> out;
    out.reserve(h.size());
    for (const auto& e : h.edges()) {
        Edge f;
        for (Vertex v : e) f.push_back(h.ground().rotate(v, by));
        out.push_back(std::move(f));
    }
    return Cgh(h.ground(), h.r(), std::move(out));
}

/// Returns h with the extra edges; duplicates of existing edges are ignored.
inline Cgh with_edges(const Cgh& h, std::vector<Edge> extra) {
    extra.insert(extra.end(), h.edges().begin(), h.edges().end());
    return Cgh::from_edges_dedup(h.ground(), h.r(), std::move(extra));
}

/// True iff the sequence, read as a cyclic sequence, visits its (distinct)
/// vertices in clockwise order starting somewhere, i.e. it is a rotation of the
/// clockwise order of its own vertex set.
inline bool is_cyclically_sorted(std::span<const Vertex> seq) {
    if (seq.size() <= 2) return true;
    std::size_t descents = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[(i + 1) % seq.size()] < seq[i]) ++descents;
    return descents == 1;
}

}  // namespace cgh
