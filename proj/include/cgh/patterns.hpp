#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cgh/core.hpp"
#include "cgh/random.hpp"

namespace cgh {

/// The ordered last edge (v_{k-1}, v_k, ..., v_{k+r-2}) of a k-zigzag or good k-path.
struct End {
    std::vector<Vertex> vs;
    std::size_t k = 1;

    auto operator<=>(const End&) const = default;
};

/// A zigzag (or good path) vertex sequence with one minimal segment per index class.
struct PathWitness {
    std::vector<Vertex> seq;
    std::vector<Segment> segments;
};

/// Assignment V -> {0..s-1}; class i is B_i with the cyclic order inherited from the ground set.
class Coloring {
public:
    Coloring(std::vector<std::uint32_t> colors, std::size_t s) : colors_(std::move(colors)), s_(s) {
        if (s == 0) throw std::invalid_argument("coloring needs at least one class");
        for (auto c : colors_)
            if (c >= s) throw std::invalid_argument("color " + std::to_string(c) + " outside [0, s)");
    }

    static Coloring constant(std::size_t n) { return Coloring(std::vector<std::uint32_t>(n, 0), 1); }

    static Coloring random(std::size_t n, std::size_t s, Rng& rng) {
        std::vector<std::uint32_t> colors(n);
        for (auto& c : colors) c = static_cast<std::uint32_t>(uniform_below(rng, s));
        return Coloring(std::move(colors), s);
    }

    std::size_t s() const noexcept { return s_; }
    std::size_t n() const noexcept { return colors_.size(); }
    std::uint32_t operator[](Vertex v) const { return colors_.at(v); }
    const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

    std::vector<Vertex> members(std::uint32_t cls) const {
        std::vector<Vertex> out;
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] == cls) out.push_back(static_cast<Vertex>(v));
        return out;
    }

    /// Number of vertices of `vs` in class `cls`.
    std::size_t count_in(std::span<const Vertex> vs, std::uint32_t cls) const {
        return static_cast<std::size_t>(std::count_if(vs.begin(), vs.end(), [&](Vertex v) { return colors_.at(v) == cls; }));
    }

    /// Throws unless this is an (r/2)-coloring of the ground set of h.
    void check_for(const Cgh& h) const {
        if (h.r() % 2 != 0) throw std::invalid_argument("colorings are defined for even uniformity only");
        if (colors_.size() != h.n()) throw std::invalid_argument("coloring does not cover the ground set");
        if (s_ != h.r() / 2) throw std::invalid_argument("coloring must use exactly r/2 classes");
    }

private:
    std::vector<std::uint32_t> colors_;
    std::size_t s_;
};

namespace detail {

inline void require_even(std::size_t r) {
    if (r % 2 != 0) throw std::invalid_argument("zigzags are defined for even uniformity only");
}

inline void check_sequence(const Cgh& h, std::span<const Vertex> seq) {
    if (seq.size() < h.r()) throw std::invalid_argument("sequence shorter than the uniformity");
    std::vector<Vertex> sorted(seq.begin(), seq.end());
    for (Vertex v : sorted) h.ground().check(v);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("sequence repeats a vertex");
}

/// Residue class j (indices ≡ j mod r) in increasing index order for even j,
/// decreasing for odd j, classes concatenated 0..r-1. Also reports block bounds.
inline std::vector<Vertex> class_reading(std::size_t r, std::span<const Vertex> seq,
                                         std::vector<std::pair<std::size_t, std::size_t>>* blocks = nullptr) {
    std::vector<Vertex> out;
    out.reserve(seq.size());
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t begin = out.size();
        std::vector<Vertex> cls;
        for (std::size_t i = j; i < seq.size(); i += r) cls.push_back(seq[i]);
        if (j % 2 == 1) std::reverse(cls.begin(), cls.end());
        out.insert(out.end(), cls.begin(), cls.end());
        if (blocks) blocks->emplace_back(begin, out.size());
    }
    return out;
}

}  // namespace detail

inline bool is_tight_path(const Cgh& h, std::span<const Vertex> seq) {
    detail::check_sequence(h, seq);
    for (std::size_t i = 0; i + h.r() <= seq.size(); ++i)
        if (!h.contains(seq.subspan(i, h.r()))) return false;
    return true;
}

/// The cyclic-order half of the zigzag definition, independent of any host:
/// index classes occupy consecutive arcs 0..r-1 clockwise, even classes in
/// increasing index order and odd classes in decreasing order.
inline bool zigzag_order_holds(std::size_t r, std::span<const Vertex> seq) {
    return is_cyclically_sorted(detail::class_reading(r, seq));
}

/// Returns a witness iff seq (a tight path of h) is a zigzag.
inline std::optional<PathWitness> is_zigzag(const Cgh& h, std::span<const Vertex> seq) {
    detail::require_even(h.r());
    if (!is_tight_path(h, seq)) throw std::invalid_argument("sequence is not a tight path of the host");
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    auto reading = detail::class_reading(h.r(), seq, &blocks);
    if (!is_cyclically_sorted(reading)) return std::nullopt;
    PathWitness w{std::vector<Vertex>(seq.begin(), seq.end()), {}};
    for (auto [b, e] : blocks) w.segments.push_back(Segment{reading[b], reading[e - 1]});
    return w;
}

inline Segment interval_of_end(const End& end) {
    if (end.vs.size() < 2) throw std::invalid_argument("end must have at least two vertices");
    if (end.k % 2 == 1) return Segment{end.vs[0], end.vs[1]};
    return Segment{end.vs.back(), end.vs[0]};
}

namespace detail {

template <class Filter>
std::vector<Vertex> extension_candidates(const Cgh& h, const End& end, Filter&& keep) {
    const auto& ground = h.ground();
    const Segment iv = interval_of_end(end);
    std::vector<Vertex> key(end.vs.begin() + 1, end.vs.end());
    key.push_back(0);
    std::vector<Vertex> out;
    const std::size_t len = iv.size(ground);
    for (std::size_t step = 0; step < len; ++step) {
        Vertex w = ground.rotate(iv.u, step);
        if (std::find(end.vs.begin(), end.vs.end(), w) != end.vs.end()) continue;
        if (!keep(w)) continue;
        key.back() = w;
        if (h.contains(key)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Layers S_1..S_{k_max}; each layer is sorted and duplicate-free.
template <class Base, class Filter>
std::vector<std::vector<End>> grow_layers(const Cgh& h, std::size_t k_max, Base&& base, Filter&& filter_for) {
    std::vector<std::vector<End>> layers;
    if (k_max == 0) return layers;
    layers.push_back(base());
    for (std::size_t k = 1; k < k_max; ++k) {
        std::vector<End> next;
        for (const End& e : layers.back()) {
            for (Vertex x : extension_candidates(h, e, filter_for(k))) {
                End f{std::vector<Vertex>(e.vs.begin() + 1, e.vs.end()), k + 1};
                f.vs.push_back(x);
                next.push_back(std::move(f));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layers.push_back(std::move(next));
    }
    return layers;
}

inline std::vector<End> stuck_subset(const Cgh& h, const std::vector<End>& layer, auto&& filter) {
    std::vector<End> out;
    for (const End& e : layer)
        if (extension_candidates(h, e, filter).empty()) out.push_back(e);
    return out;
}

}  // namespace detail

/// X(end): vertices w of the end's interval, not on the end, such that
/// {w, v_k, ..., v_{k+r-2}} is an edge.
inline std::vector<Vertex> extension_set(const Cgh& h, const End& end) {
    if (end.vs.size() != h.r()) throw std::invalid_argument("end arity differs from the uniformity");
    return detail::extension_candidates(h, end, [](Vertex) { return true; });
}

/// S_1..S_{k_max}: S_1 holds the r rotations of each edge's clockwise order;
/// S_{k+1} is every extension of S_k by a vertex of its extension set.
inline std::vector<std::vector<End>> end_layers(const Cgh& h, std::size_t k_max) {
    detail::require_even(h.r());
    auto base = [&] {
        std::vector<End> s1;
        s1.reserve(h.size() * h.r());
        for (const auto& e : h.edges()) {
            for (std::size_t start = 0; start < e.size(); ++start) {
                End end{{}, 1};
                for (std::size_t i = 0; i < e.size(); ++i) end.vs.push_back(e[(start + i) % e.size()]);
                s1.push_back(std::move(end));
            }
        }
        std::sort(s1.begin(), s1.end());
        return s1;
    };
    return detail::grow_layers(h, k_max, base, [](std::size_t) { return [](Vertex) { return true; }; });
}

inline std::vector<End> enumerate_ends(const Cgh& h, std::size_t k) {
    if (k == 0) throw std::invalid_argument("path length must be positive");
    return end_layers(h, k).back();
}

inline std::vector<End> stuck_ends(const Cgh& h, std::size_t k) {
    return detail::stuck_subset(h, enumerate_ends(h, k), [](Vertex) { return true; });
}

/// f: extends by the extension vertex nearest to v_{k-1} along the interval.
inline End extend_f(const Cgh& h, const End& end) {
    const auto xs = extension_set(h, end);
    if (xs.empty()) throw std::logic_error("extend_f called on a stuck end");
    const auto& ground = h.ground();
    const Vertex anchor = end.vs[0];
    auto distance = [&](Vertex x) { return end.k % 2 == 1 ? ground.offset(anchor, x) : ground.offset(x, anchor); };
    Vertex best = *std::min_element(xs.begin(), xs.end(), [&](Vertex a, Vertex b) { return distance(a) < distance(b); });
    End out{std::vector<Vertex>(end.vs.begin() + 1, end.vs.end()), end.k + 1};
    out.vs.push_back(best);
    return out;
}

/// g: drops v_{k-1}.
inline std::vector<Vertex> project_g(const End& end) { return {end.vs.begin() + 1, end.vs.end()}; }

inline bool contains_zigzag(const Cgh& h, std::size_t k) { return !enumerate_ends(h, k).empty(); }

/// Reconstructs one k-zigzag by walking back through the end layers.
inline std::optional<PathWitness> find_zigzag(const Cgh& h, std::size_t k) {
    auto layers = end_layers(h, k);
    if (layers.back().empty()) return std::nullopt;
    std::vector<End> chain{layers.back().front()};
    for (std::size_t level = k; level > 1; --level) {
        const End& cur = chain.back();
        const auto& prev_layer = layers[level - 2];
        bool found = false;
        for (Vertex w = 0; w < h.n() && !found; ++w) {
            End cand{{w}, level - 1};
            cand.vs.insert(cand.vs.end(), cur.vs.begin(), cur.vs.end() - 1);
            if (!std::binary_search(prev_layer.begin(), prev_layer.end(), cand)) continue;
            auto xs = extension_set(h, cand);
            if (std::binary_search(xs.begin(), xs.end(), cur.vs.back())) {
                chain.push_back(std::move(cand));
                found = true;
            }
        }
        if (!found) throw std::logic_error("end layer without a predecessor");
    }
    std::reverse(chain.begin(), chain.end());
    std::vector<Vertex> seq = chain.front().vs;
    for (std::size_t i = 1; i < chain.size(); ++i) seq.push_back(chain[i].vs.back());
    return is_zigzag(h, seq);
}

// ---------------------------------------------------------------------------
// Tight paths in the abstract sense (no cyclic-order condition).

/// For each vertex, the smaller vertices it is interchangeable with: swapping
/// the two is an automorphism of h.
inline std::vector<std::vector<Vertex>> smaller_twins(const Cgh& h) {
    const std::size_t n = h.n();
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : h.edges())
        for (Vertex v : e) ++deg[v];
    std::vector<std::vector<Vertex>> out(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (deg[u] != deg[v]) continue;
            bool twin = true;
            for (const auto& e : h.edges()) {
                bool has_u = std::binary_search(e.begin(), e.end(), u);
                bool has_v = std::binary_search(e.begin(), e.end(), v);
                if (has_u == has_v) continue;
                Edge swapped = e;
                for (auto& x : swapped) {
                    if (x == u) x = v;
                    else if (x == v) x = u;
                }
                if (!h.contains(swapped)) {
                    twin = false;
                    break;
                }
            }
            if (twin) out[v].push_back(u);
        }
    }
    return out;
}

/// Finds a tight k-path of h (k windows, k+r-1 distinct vertices). Among
/// unused interchangeable vertices only the smallest is tried.
inline std::optional<std::vector<Vertex>> find_tight_path(const Cgh& h, std::size_t k) {
    if (k == 0) throw std::invalid_argument("path length must be positive");
    const std::size_t n = h.n(), r = h.r();
    if (k + r - 1 > n) return std::nullopt;
    const auto twins = smaller_twins(h);
    std::vector<char> used(n, 0);
    std::vector<Vertex> seq;
    std::vector<Vertex> key(r);

    auto grow = [&](auto&& self, std::size_t windows_left) -> bool {
        if (windows_left == 0) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w]) continue;
            bool dominated = std::any_of(twins[w].begin(), twins[w].end(), [&](Vertex u) { return !used[u]; });
            if (dominated) continue;
            std::copy(seq.end() - static_cast<std::ptrdiff_t>(r - 1), seq.end(), key.begin());
            key.back() = w;
            if (!h.contains(key)) continue;
            used[w] = 1;
            seq.push_back(w);
            if (self(self, windows_left - 1)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };

    for (const auto& e : h.edges()) {
        Edge order = e;
        do {
            seq = order;
            for (Vertex v : order) used[v] = 1;
            if (grow(grow, k - 1)) return seq;
            for (Vertex v : order) used[v] = 0;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return std::nullopt;
}

inline bool contains_tight_path(const Cgh& h, std::size_t k) { return find_tight_path(h, k).has_value(); }

// ---------------------------------------------------------------------------
// Stacks: k disjoint edges placed as every r-th edge of a zigzag path on kr vertices.

struct Exhaustive {};

struct Sampled {
    std::size_t budget = 0;
    std::uint64_t seed = 0;
};

using StackMode = std::variant<Exhaustive, Sampled>;

/// Checks that the k windows seq[ir .. ir+r-1] are edges of h and that seq
/// satisfies the zigzag cyclic order.
inline bool is_stack_witness(const Cgh& h, std::span<const Vertex> seq) {
    const std::size_t r = h.r();
    if (seq.empty() || seq.size() % r != 0) return false;
    detail::check_sequence(h, seq);
    for (std::size_t i = 0; i < seq.size(); i += r)
        if (!h.contains(seq.subspan(i, r))) return false;
    return zigzag_order_holds(r, seq);
}

namespace detail {

/// Two edges, each given as its vertex positions after cutting the circle,
/// sorted ascending. a precedes b in a stack iff even coordinates increase,
/// odd coordinates decrease, and coordinate blocks do not overlap.
inline bool stack_precedes(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    const std::size_t r = a.size();
    for (std::size_t j = 0; j < r; ++j) {
        if (j % 2 == 0 ? !(a[j] < b[j]) : !(a[j] > b[j])) return false;
        if (j + 1 < r && std::max(a[j], b[j]) >= std::min(a[j + 1], b[j + 1])) return false;
    }
    return true;
}

struct CutEdges {
    std::vector<std::vector<std::size_t>> pos;  // sorted positions after the cut
    std::vector<std::size_t> order;              // edge indices by first position
};

inline CutEdges cut_at(const Cgh& h, std::size_t origin) {
    CutEdges c;
    const auto& ground = h.ground();
    for (const auto& e : h.edges()) {
        std::vector<std::size_t> p;
        for (Vertex v : e) p.push_back(ground.offset(static_cast<Vertex>(origin), v));
        std::sort(p.begin(), p.end());
        c.pos.push_back(std::move(p));
    }
    c.order.resize(h.size());
    for (std::size_t i = 0; i < c.order.size(); ++i) c.order[i] = i;
    std::sort(c.order.begin(), c.order.end(), [&](std::size_t a, std::size_t b) { return c.pos[a][0] < c.pos[b][0]; });
    return c;
}

inline std::vector<Vertex> stack_sequence(const Cgh& h, std::size_t origin, const CutEdges& c,
                                          const std::vector<std::size_t>& chain) {
    std::vector<Vertex> seq;
    for (std::size_t idx : chain)
        for (std::size_t p : c.pos[idx]) seq.push_back(h.ground().rotate(static_cast<Vertex>(origin), p));
    return seq;
}

}  // namespace detail

/// Returns the kr-vertex sequence of a k-stack if one is found.
/// Exhaustive: longest chain of the precedence order for every cut of the circle.
/// Sampled: randomized greedy chains; a result is always a verified witness.
inline std::optional<std::vector<Vertex>> find_stack(const Cgh& h, std::size_t k, const StackMode& mode) {
    detail::require_even(h.r());
    if (k == 0) throw std::invalid_argument("stack size must be positive");
    if (const auto* sampled = std::get_if<Sampled>(&mode); sampled && sampled->budget == 0)
        throw std::invalid_argument("sampled stack search needs a positive trial budget");
    if (h.empty() || k * h.r() > h.n()) return std::nullopt;

    if (std::holds_alternative<Exhaustive>(mode)) {
        for (std::size_t origin = 0; origin < h.n(); ++origin) {
            auto c = detail::cut_at(h, origin);
            const std::size_t m = c.order.size();
            std::vector<std::size_t> length(m, 1), parent(m, m);
            for (std::size_t bi = 0; bi < m; ++bi) {
                const std::size_t b = c.order[bi];
                for (std::size_t ai = 0; ai < bi; ++ai) {
                    const std::size_t a = c.order[ai];
                    if (length[a] + 1 > length[b] && detail::stack_precedes(c.pos[a], c.pos[b])) {
                        length[b] = length[a] + 1;
                        parent[b] = a;
                    }
                }
                if (length[b] >= k) {
                    std::vector<std::size_t> chain;
                    for (std::size_t x = b; chain.size() < k; x = parent[x]) chain.push_back(x);
                    std::reverse(chain.begin(), chain.end());
                    auto seq = detail::stack_sequence(h, origin, c, chain);
                    if (!is_stack_witness(h, seq)) throw std::logic_error("stack chain failed verification");
                    return seq;
                }
            }
        }
        return std::nullopt;
    }

    const auto& sampled = std::get<Sampled>(mode);
    Rng rng(sampled.seed);
    for (std::size_t trial = 0; trial < sampled.budget; ++trial) {
        const std::size_t origin = uniform_below(rng, h.n());
        auto c = detail::cut_at(h, origin);
        std::vector<std::size_t> candidates(h.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
        shuffle(candidates, rng);
        std::vector<std::size_t> chain;  // kept sorted by first position
        for (std::size_t cand : candidates) {
            auto it = std::lower_bound(chain.begin(), chain.end(), cand, [&](std::size_t a, std::size_t b) {
                return c.pos[a][0] < c.pos[b][0];
            });
            if (it != chain.begin() && !detail::stack_precedes(c.pos[*(it - 1)], c.pos[cand])) continue;
            if (it != chain.end() && !detail::stack_precedes(c.pos[cand], c.pos[*it])) continue;
            chain.insert(it, cand);
            if (chain.size() == k) {
                auto seq = detail::stack_sequence(h, origin, c, chain);
                if (is_stack_witness(h, seq)) return seq;
                break;
            }
        }
    }
    return std::nullopt;
}

inline bool contains_stack(const Cgh& h, std::size_t k, const StackMode& mode = Exhaustive{}) {
    return find_stack(h, k, mode).has_value();
}

// ---------------------------------------------------------------------------
// Pairwise disjoint (vertex-disjoint, non-crossing) chords of a geometric graph.

/// A maximum family of pairwise disjoint segments, by interval dynamic programming.
inline std::vector<Edge> max_disjoint_segments(const Cgh& g) {
    if (g.r() != 2) throw std::invalid_argument("disjoint segments are defined for graphs (r = 2)");
    const std::size_t n = g.n();
    std::vector<std::vector<std::size_t>> best(n + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<std::size_t>> choice(n + 1, std::vector<std::size_t>(n + 1, n));
    // best[i][j]: maximum over chords inside the vertex range [i, j); chords {a<b} cross iff a<c<b<d.
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            best[i][j] = best[i + 1][j];
            for (std::size_t m = i + 1; m < j; ++m) {
                if (!g.contains({static_cast<Vertex>(i), static_cast<Vertex>(m)})) continue;
                std::size_t val = 1 + best[i + 1][m] + best[m + 1][j];
                if (val > best[i][j]) {
                    best[i][j] = val;
                    choice[i][j] = m;
                }
            }
        }
    }
    std::vector<Edge> out;
    auto collect = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (j <= i + 1) return;
        const std::size_t m = choice[i][j];
        if (m == n || best[i][j] == best[i + 1][j]) {
            self(self, i + 1, j);
            return;
        }
        out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(m)});
        self(self, i + 1, m);
        self(self, m + 1, j);
    };
    collect(collect, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains_disjoint_segments(const Cgh& g, std::size_t k) { return max_disjoint_segments(g).size() >= k; }

// ---------------------------------------------------------------------------

/// Splits a graph into E = {v f(v)}, f(v) the first neighbour of v clockwise
/// after v, and the remainder F.
inline std::pair<Cgh, Cgh> peel_graph(const Cgh& g) {
    if (g.r() != 2) throw std::invalid_argument("peel_graph expects a graph (r = 2)");
    const auto& ground = g.ground();
    std::vector<Edge> first;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto nb = neighborhood(g, v);
        if (nb.empty()) continue;
        Vertex f = *std::min_element(nb.begin(), nb.end(), [&](Vertex a, Vertex b) {
            return ground.offset(v, a) < ground.offset(v, b);
        });
        first.push_back({std::min(v, f), std::max(v, f)});
    }
    Cgh e = Cgh::from_edges_dedup(ground, 2, std::move(first));
    std::vector<Edge> rest;
    for (const auto& edge : g.edges())
        if (!e.contains_sorted(edge)) rest.push_back(edge);
    return {std::move(e), Cgh(ground, 2, std::move(rest))};
}

// ---------------------------------------------------------------------------
// Good paths relative to a coloring with s = r/2 classes.

/// The class that index j of a good path must lie in: floor(j/2) mod s.
inline std::uint32_t good_class(std::size_t j, std::size_t s) { return static_cast<std::uint32_t>((j / 2) % s); }

/// Every class meets the edge in exactly two vertices.
inline bool is_color_regular(std::span<const Vertex> e, const Coloring& coloring) {
    for (std::uint32_t i = 0; i < coloring.s(); ++i)
        if (coloring.count_in(e, i) != 2) return false;
    return true;
}

/// The color-regular part of h: edges with two vertices in every class.
inline Cgh restrict_color_regular(const Cgh& h, const Coloring& coloring) {
    coloring.check_for(h);
    std::vector<Edge> kept;
    for (const auto& e : h.edges())
        if (is_color_regular(e, coloring)) kept.push_back(e);
    return Cgh(h.ground(), h.r(), std::move(kept));
}

inline bool is_good_path(const Cgh& h, const Coloring& coloring, std::span<const Vertex> seq) {
    detail::require_even(h.r());
    coloring.check_for(h);
    if (!is_tight_path(h, seq)) throw std::invalid_argument("sequence is not a tight path of the host");
    const std::size_t r = h.r(), s = coloring.s();
    for (std::size_t j = 0; j < seq.size(); ++j)
        if (coloring[seq[j]] != good_class(j, s)) return false;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Vertex> reading;
        for (std::size_t j = 2 * i; j < seq.size(); j += r) reading.push_back(seq[j]);
        std::vector<Vertex> odd;
        for (std::size_t j = 2 * i + 1; j < seq.size(); j += r) odd.push_back(seq[j]);
        reading.insert(reading.end(), odd.rbegin(), odd.rend());
        if (!is_cyclically_sorted(reading)) return false;
    }
    return true;
}

/// Good-path ends S_1..S_{k_max} of a color-regular cgh g; the interval and
/// extension set of an end of a k-path live inside class floor((k-1)/2) mod s.
inline std::vector<std::vector<End>> good_end_layers(const Cgh& g, const Coloring& coloring, std::size_t k_max) {
    detail::require_even(g.r());
    coloring.check_for(g);
    for (const auto& e : g.edges())
        if (!is_color_regular(e, coloring)) throw std::invalid_argument("edge is not color-regular");
    const std::size_t s = coloring.s();
    auto base = [&] {
        std::vector<End> s1;
        for (const auto& e : g.edges()) {
            std::vector<std::pair<Vertex, Vertex>> pairs(s, {0, 0});
            std::vector<std::size_t> filled(s, 0);
            for (Vertex v : e) {
                auto c = coloring[v];
                (filled[c]++ == 0 ? pairs[c].first : pairs[c].second) = v;
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
                End end{std::vector<Vertex>(g.r()), 1};
                for (std::size_t i = 0; i < s; ++i) {
                    bool flip = (mask >> i) & 1U;
                    end.vs[2 * i] = flip ? pairs[i].second : pairs[i].first;
                    end.vs[2 * i + 1] = flip ? pairs[i].first : pairs[i].second;
                }
                s1.push_back(std::move(end));
            }
        }
        std::sort(s1.begin(), s1.end());
        return s1;
    };
    auto filter_for = [&](std::size_t k) {
        const auto cls = good_class(k - 1, s);
        return [&coloring, cls](Vertex w) { return coloring[w] == cls; };
    };
    return detail::grow_layers(g, k_max, base, filter_for);
}

inline std::vector<End> enumerate_good_ends(const Cgh& g, const Coloring& coloring, std::size_t k) {
    if (k == 0) throw std::invalid_argument("path length must be positive");
    return good_end_layers(g, coloring, k).back();
}

inline std::vector<End> stuck_good_ends(const Cgh& g, const Coloring& coloring, std::size_t k) {
    const auto cls = good_class(k - 1, coloring.s());
    return detail::stuck_subset(g, enumerate_good_ends(g, coloring, k),
                                [&](Vertex w) { return coloring[w] == cls; });
}

}  // namespace cgh
