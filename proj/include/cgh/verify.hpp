#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgh/bounds.hpp"
#include "cgh/constructions.hpp"
#include "cgh/core.hpp"
#include "cgh/patterns.hpp"
#include "cgh/random.hpp"
#include "cgh/rational.hpp"
#include "cgh/search.hpp"

namespace cgh {

/// One inequality lhs <= rhs evaluated exactly.
struct BoundReport {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    std::size_t n = 0, r = 0, k = 0;
};

inline BoundReport make_bound_report(std::string name, Rational lhs, Rational rhs, std::size_t n, std::size_t r,
                                     std::size_t k) {
    BoundReport b{std::move(name), lhs, rhs, lhs <= rhs, n, r, k};
    return b;
}

namespace detail {

inline void require_even_uniformity(const Cgh& h) {
    if (h.r() % 2 != 0) throw std::invalid_argument("check needs even uniformity");
}

inline Rational count(std::size_t v) { return rational(v); }

inline std::int64_t pow_int(std::int64_t base, std::size_t e) {
    std::int64_t out = 1;
    while (e--) out *= base;
    return out;
}

inline std::int64_t factorial(std::size_t n) {
    std::int64_t out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= static_cast<std::int64_t>(i);
    return out;
}

/// Rotations of the sorted order of `vs`; true if `vs` is one of them.
inline bool is_sorted_rotation(std::span<const Vertex> vs) { return is_cyclically_sorted(vs); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Ends and injections.

/// |S_k(H)| >= r|H| - (r-1)(k-1)|dH|, reported as lhs = right side, rhs = |S_k|.
inline BoundReport check_end_count_inequality(const Cgh& h, std::size_t k) {
    detail::require_even_uniformity(h);
    if (k == 0) throw std::invalid_argument("k must be positive");
    const auto sk = enumerate_ends(h, k).size();
    const auto r = static_cast<std::int64_t>(h.r());
    const Rational lhs = Rational(r) * detail::count(h.size()) -
                         Rational((r - 1) * static_cast<std::int64_t>(k - 1)) * detail::count(shadow(h).size());
    return make_bound_report("ends-inequality", lhs, detail::count(sk), h.n(), h.r(), k);
}

struct InjectionReport {
    BoundReport eq1;  // |S_k \ T_k| <= |S_{k+1}|
    BoundReport eq2;  // |T_k| <= (r-1)|dH|
    bool f_injective = true;
    bool f_image_in_next_layer = true;
    bool g_injective = true;
    bool g_image_in_shadow = true;  // every g(end) is a cyclic rotation of a shadow set

    bool all_hold() const {
        return eq1.holds && eq2.holds && f_injective && f_image_in_next_layer && g_injective && g_image_in_shadow;
    }
};

inline InjectionReport check_injections(const Cgh& h, std::size_t k) {
    detail::require_even_uniformity(h);
    if (k == 0) throw std::invalid_argument("k must be positive");
    const auto layers = end_layers(h, k + 1);
    const auto& sk = layers[k - 1];
    const auto& next = layers[k];
    const auto sh = shadow(h);

    InjectionReport rep;
    std::set<End> f_image;
    std::set<std::vector<Vertex>> g_image;
    std::size_t unstuck = 0, stuck = 0;
    for (const auto& end : sk) {
        if (!extension_set(h, end).empty()) {
            ++unstuck;
            auto img = extend_f(h, end);
            if (!std::binary_search(next.begin(), next.end(), img)) rep.f_image_in_next_layer = false;
            if (!f_image.insert(std::move(img)).second) rep.f_injective = false;
        } else {
            ++stuck;
            auto img = project_g(end);
            Edge sorted(img);
            std::sort(sorted.begin(), sorted.end());
            if (!detail::is_sorted_rotation(img) || !sh.contains_sorted(sorted)) rep.g_image_in_shadow = false;
            if (!g_image.insert(std::move(img)).second) rep.g_injective = false;
        }
    }
    rep.eq1 = make_bound_report("injection-f", detail::count(unstuck), detail::count(next.size()), h.n(), h.r(), k);
    rep.eq2 = make_bound_report("injection-g", detail::count(stuck),
                                Rational(static_cast<std::int64_t>(h.r()) - 1) * detail::count(sh.size()), h.n(),
                                h.r(), k);
    return rep;
}

// ---------------------------------------------------------------------------
// Random colorings.

/// d_i G: the (r-1)-sets of the shadow of G with exactly one vertex in class i.
inline std::vector<std::size_t> shadow_class_counts(const Cgh& g, const Coloring& coloring) {
    std::vector<std::size_t> out(coloring.s(), 0);
    if (g.r() < 2) return out;
    const auto sh = shadow(g);
    for (const auto& f : sh.edges())
        for (std::uint32_t i = 0; i < coloring.s(); ++i)
            if (coloring.count_in(f, i) == 1) ++out[i];
    return out;
}

struct ColoringReduction {
    Coloring coloring;
    Cgh g;
    std::vector<std::size_t> shadow_parts;  // |d_i G|
};

inline ColoringReduction coloring_reduction(const Cgh& h, Rng& rng) {
    detail::require_even_uniformity(h);
    auto coloring = Coloring::random(h.n(), h.r() / 2, rng);
    auto g = restrict_color_regular(h, coloring);
    auto parts = shadow_class_counts(g, coloring);
    return {std::move(coloring), std::move(g), std::move(parts)};
}

inline ColoringReduction coloring_reduction(const Cgh& h, std::uint64_t seed) {
    Rng rng(seed);
    return coloring_reduction(h, rng);
}

struct ExpectedCounts {
    Rational edges;                        // E|G|
    std::vector<Rational> shadow;          // E|d_i G|, exact by linearity over shadow sets
    Rational shadow_closed_form;           // (r-1)!/(2^{s-1} s^{r-1}) |dH|, an upper bound on each E|d_i G|
    std::optional<Rational> edges_enumerated;
    std::optional<std::vector<Rational>> shadow_enumerated;
};

/// Survival probability r!/(2^s s^r) of a single edge.
inline Rational edge_survival_probability(std::size_t r) {
    if (r % 2 != 0) throw std::invalid_argument("needs even uniformity");
    const std::size_t s = r / 2;
    return Rational(detail::factorial(r), detail::pow_int(2, s) * detail::pow_int(static_cast<std::int64_t>(s), r));
}

/// Exact expectations over a uniform (r/2)-coloring. The shadow term uses
/// P(f in d_i G) = P(profile of f) * (1 - ((s-1)/s)^{c(f)}) where c(f) counts
/// the vertices x with f + x in H. Colorings are enumerated as a cross-check
/// when s^n <= enumeration_limit.
inline ExpectedCounts expected_counts_exact(const Cgh& h, std::uint64_t enumeration_limit = 1U << 20) {
    detail::require_even_uniformity(h);
    const std::size_t r = h.r(), s = r / 2, n = h.n();
    const auto ss = static_cast<std::int64_t>(s);
    ExpectedCounts out;
    out.edges = edge_survival_probability(r) * detail::count(h.size());

    const auto sh = shadow(h);
    const Rational profile(detail::factorial(r - 1) / detail::pow_int(2, s - 1), detail::pow_int(ss, r - 1));
    out.shadow_closed_form = Rational(detail::factorial(r - 1), detail::pow_int(2, s - 1) * detail::pow_int(ss, r - 1)) *
                             detail::count(sh.size());
    Rational per_class(0);
    for (const auto& f : sh.edges()) {
        std::size_t c = 0;
        Edge e;
        for (Vertex x = 0; x < n; ++x) {
            if (std::binary_search(f.begin(), f.end(), x)) continue;
            e = f;
            e.insert(std::upper_bound(e.begin(), e.end(), x), x);
            if (h.contains_sorted(e)) ++c;
        }
        per_class += profile * (Rational(1) - Rational(detail::pow_int(ss - 1, c), detail::pow_int(ss, c)));
    }
    out.shadow.assign(s, per_class);

    // s^n colorings, counted without overflow.
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
        total *= s;
        small = total <= enumeration_limit;
    }
    if (small) {
        std::vector<std::uint32_t> colors(n, 0);
        std::int64_t edge_sum = 0;
        std::vector<std::int64_t> shadow_sum(s, 0);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t v = 0; v < n; ++v) {
                colors[v] = static_cast<std::uint32_t>(rest % s);
                rest /= s;
            }
            Coloring coloring(colors, s);
            auto g = restrict_color_regular(h, coloring);
            edge_sum += static_cast<std::int64_t>(g.size());
            auto parts = shadow_class_counts(g, coloring);
            for (std::size_t i = 0; i < s; ++i) shadow_sum[i] += static_cast<std::int64_t>(parts[i]);
        }
        const auto denom = static_cast<std::int64_t>(total);
        out.edges_enumerated = Rational(edge_sum, denom);
        std::vector<Rational> sh_enum;
        for (auto v : shadow_sum) sh_enum.emplace_back(v, denom);
        out.shadow_enumerated = std::move(sh_enum);
    }
    return out;
}

struct ColoringExperiment {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double observed_g = 0, stderr_g = 0;
    std::vector<double> observed_shadow, stderr_shadow;
    Rational exact_g;
    std::vector<Rational> exact_shadow;
    bool within_3se = false;
};

namespace detail {

inline bool within(double mean, double se, const Rational& exact, double width) {
    return std::abs(mean - to_double(exact)) <= width * se + 1e-12;
}

}  // namespace detail

/// Monte Carlo estimate of E|G| and E|d_i G| against the exact values.
inline ColoringExperiment coloring_experiment(const Cgh& h, std::size_t samples, std::uint64_t seed) {
    detail::require_even_uniformity(h);
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    const std::size_t r = h.r(), s = r / 2, n = h.n();
    const auto exact = expected_counts_exact(h, 0);

    // Shadow sets with their co-vertices, precomputed once.
    struct Element {
        Edge f;
        std::vector<Vertex> co;
    };
    std::vector<Element> elements;
    const auto sh = shadow(h);
    for (const auto& f : sh.edges()) {
        Element el{f, {}};
        for (Vertex x = 0; x < n; ++x) {
            if (std::binary_search(f.begin(), f.end(), x)) continue;
            Edge e(f);
            e.insert(std::upper_bound(e.begin(), e.end(), x), x);
            if (h.contains_sorted(e)) el.co.push_back(x);
        }
        elements.push_back(std::move(el));
    }

    Rng rng(seed);
    std::vector<std::uint32_t> color(n);
    std::vector<std::size_t> per(s);
    double sum_g = 0, sq_g = 0;
    std::vector<double> sum_sh(s, 0), sq_sh(s, 0);
    for (std::size_t t = 0; t < samples; ++t) {
        for (auto& c : color) c = static_cast<std::uint32_t>(uniform_below(rng, s));
        double g = 0;
        for (const auto& e : h.edges()) {
            std::fill(per.begin(), per.end(), 0);
            for (Vertex v : e) ++per[color[v]];
            if (std::all_of(per.begin(), per.end(), [](std::size_t c) { return c == 2; })) g += 1;
        }
        sum_g += g;
        sq_g += g * g;
        std::vector<double> parts(s, 0);
        for (const auto& el : elements) {
            std::fill(per.begin(), per.end(), 0);
            for (Vertex v : el.f) ++per[color[v]];
            std::size_t single = s, twos = 0;
            for (std::size_t i = 0; i < s; ++i) {
                if (per[i] == 1) single = i;
                if (per[i] == 2) ++twos;
            }
            if (single == s || twos != s - 1) continue;
            for (Vertex x : el.co)
                if (color[x] == single) {
                    parts[single] += 1;
                    break;
                }
        }
        for (std::size_t i = 0; i < s; ++i) {
            sum_sh[i] += parts[i];
            sq_sh[i] += parts[i] * parts[i];
        }
    }
    const double N = static_cast<double>(samples);
    auto stats = [N](double sum, double sq) {
        const double mean = sum / N;
        const double var = std::max(0.0, (sq - N * mean * mean) / (N - 1));
        return std::pair{mean, std::sqrt(var / N)};
    };
    ColoringExperiment ex;
    ex.seed = seed;
    ex.samples = samples;
    std::tie(ex.observed_g, ex.stderr_g) = stats(sum_g, sq_g);
    ex.exact_g = exact.edges;
    ex.exact_shadow = exact.shadow;
    ex.within_3se = detail::within(ex.observed_g, ex.stderr_g, exact.edges, 3.0);
    for (std::size_t i = 0; i < s; ++i) {
        auto [m, se] = stats(sum_sh[i], sq_sh[i]);
        ex.observed_shadow.push_back(m);
        ex.stderr_shadow.push_back(se);
        ex.within_3se = ex.within_3se && detail::within(m, se, exact.shadow[i], 3.0);
    }
    return ex;
}

// ---------------------------------------------------------------------------
// Good paths.

/// Claim-style bounds on a color-regular G: |T_k(G)| <= 2^{s-1}|d_i G| with
/// i = h(k-1), and |S_k(G)| >= 2^s|G| - 2^{s-1} sum_{i<=k-2} |d_{h(i)} G|
/// (the sum taken with multiplicity).
inline std::vector<BoundReport> check_good_path_inequalities(const Cgh& g, const Coloring& coloring, std::size_t k) {
    detail::require_even_uniformity(g);
    coloring.check_for(g);
    if (k == 0) throw std::invalid_argument("k must be positive");
    for (const auto& e : g.edges())
        if (!is_color_regular(e, coloring)) throw std::invalid_argument("G is not color-regular");
    const std::size_t s = coloring.s();
    const auto parts = shadow_class_counts(g, coloring);
    const auto layers = good_end_layers(g, coloring, k);
    const auto cls = good_class(k - 1, s);
    const auto stuck =
        detail::stuck_subset(g, layers.back(), [&](Vertex w) { return coloring[w] == cls; }).size();
    const std::int64_t half = detail::pow_int(2, s - 1);

    std::vector<BoundReport> out;
    out.push_back(make_bound_report("good-stuck", detail::count(stuck), Rational(half) * detail::count(parts[cls]),
                                    g.n(), g.r(), k));
    Rational deficit(0);
    for (std::size_t i = 0; i + 2 <= k; ++i) deficit += Rational(half) * detail::count(parts[good_class(i, s)]);
    out.push_back(make_bound_report("good-ends", Rational(2 * half) * detail::count(g.size()) - deficit,
                                    detail::count(layers.back().size()), g.n(), g.r(), k));
    return out;
}

// ---------------------------------------------------------------------------
// Odd uniformity.

/// phi(l) = ceil((l + r)/(r + 1)).
inline std::size_t phi(std::size_t ell_value, std::size_t r) {
    if (ell_value == 0) throw std::invalid_argument("phi needs l >= 1");
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("phi needs odd r >= 3");
    return (ell_value + r + r) / (r + 1);
}

/// l = k + floor((k-1)/r) + 1, checked against l + 1 - phi(l) = k.
inline std::size_t ell_for_k(std::size_t k, std::size_t r) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("needs odd r >= 3");
    const std::size_t l = k + (k - 1) / r + 1;
    if (l + 1 - phi(l, r) != k) throw std::logic_error("l + 1 - phi(l) != k");
    return l;
}

struct LiftIdentities {
    std::size_t x_count = 0;
    std::size_t lifted_edges = 0, lifted_shadow = 0;
    std::size_t expected_edges = 0, expected_shadow = 0;
    bool holds() const { return lifted_edges == expected_edges && lifted_shadow == expected_shadow; }
};

/// |H+| = |X||H| and |dH+| = |X||dH| + |H|, computed on the actual lift.
inline LiftIdentities check_lift_identities(const Cgh& h, std::size_t x_count) {
    const auto plus = lift_odd(h, x_count);
    LiftIdentities out;
    out.x_count = x_count;
    out.lifted_edges = plus.size();
    out.lifted_shadow = shadow(plus).size();
    out.expected_edges = x_count * h.size();
    out.expected_shadow = x_count * shadow(h).size() + h.size();
    return out;
}

struct OddReductionReport {
    BoundReport bound;          // |H| <= (k + floor((k-1)/r))/2 |dH|
    BoundReport lifted;         // |H+| <= (l-1)/2 |dH+| on the lift
    std::size_t ell = 0;
    std::size_t x_count = 0;
    bool detector_run = false;  // tight l-path absence checked on H+
    bool lifted_path_free = true;
};

/// H must have no tight k-path. The lift uses x_count > (l-1)|H|/2 new
/// vertices; detection runs on a lift with min(x_count, l + r) of them, which
/// decides the same question since an l-path has l + r vertices.
inline OddReductionReport check_odd_reduction(const Cgh& h, std::size_t k, std::optional<std::size_t> x_count = {},
                                              std::size_t detector_max_n = 7) {
    if (h.r() % 2 == 0) throw std::invalid_argument("odd reduction needs odd uniformity");
    const std::size_t r = h.r();
    const std::size_t l = ell_for_k(k, r);
    if (contains_tight_path(h, k)) throw std::invalid_argument("H contains a tight k-path");
    OddReductionReport rep;
    rep.ell = l;
    rep.x_count = x_count.value_or((l - 1) * h.size() / 2 + 1);
    if (rep.x_count == 0) throw std::invalid_argument("x_count must be positive");
    const auto sh = shadow(h).size();
    rep.bound = make_bound_report("odd-reduction", detail::count(h.size()),
                                  Rational(static_cast<std::int64_t>(k + (k - 1) / r), 2) * detail::count(sh), h.n(),
                                  r, k);
    rep.lifted = make_bound_report("odd-lift", detail::count(rep.x_count * h.size()),
                                   Rational(static_cast<std::int64_t>(l - 1), 2) *
                                       detail::count(rep.x_count * sh + h.size()),
                                   h.n() + rep.x_count, r + 1, l);
    if (h.n() <= detector_max_n) {
        rep.detector_run = true;
        rep.lifted_path_free = !contains_tight_path(lift_odd(h, std::min(rep.x_count, l + r)), l);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Link recursion.

struct LinkRecursionReport {
    BoundReport averaging;  // r|H|/n <= |H_v|
    BoundReport bound;      // |H| <= k^2/(2r) C(n, r-1)
    Vertex vertex = 0;
    bool link_path_free = true;
};

inline LinkRecursionReport check_link_recursion(const Cgh& h, std::size_t k) {
    const std::size_t n = h.n(), r = h.r();
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (r < 2) throw std::invalid_argument("link recursion needs r >= 2");
    if (r + 1 < k) throw std::invalid_argument("link recursion needs r >= k - 1");
    if (contains_tight_path(h, k)) throw std::invalid_argument("H contains a tight k-path");
    LinkRecursionReport rep;
    std::size_t best = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto d = h.degree(v);
        if (d > best) {
            best = d;
            rep.vertex = v;
        }
    }
    const auto hv = link(h, rep.vertex);
    rep.averaging = make_bound_report("link-averaging",
                                      Rational(static_cast<std::int64_t>(r * h.size()), static_cast<std::int64_t>(n)),
                                      detail::count(hv.size()), n, r, k);
    rep.bound = make_bound_report("link-bound", detail::count(h.size()), bound_values(n, r, k).link, n, r, k);
    rep.link_path_free = !contains_tight_path(hv, k);
    return rep;
}

// ---------------------------------------------------------------------------
// Bound formulas.

/// conj1 <= thm2 <= trivial (meaningful for k >= 2).
inline std::vector<BoundReport> check_bound_ordering(std::size_t n, std::size_t r, std::size_t k) {
    const auto b = bound_values(n, r, k);
    return {make_bound_report("conj1<=thm2", b.conj1, b.thm2, n, r, k),
            make_bound_report("thm2<=trivial", b.thm2, b.trivial, n, r, k)};
}

/// Upper bounds an exact extremal number must respect.
inline std::vector<BoundReport> check_extremal_bounds(const ExtremalResult& res) {
    const auto b = bound_values(res.n, res.r, res.pattern.k);
    const auto m = detail::count(res.max_edges);
    const auto k = res.pattern.k;
    std::vector<BoundReport> out;
    switch (res.pattern.kind) {
        case PatternKind::tight_path:
            out.push_back(make_bound_report("thm2", m, b.thm2, res.n, res.r, k));
            out.push_back(make_bound_report("trivial", m, b.trivial, res.n, res.r, k));
            if (b.link_applies) out.push_back(make_bound_report("link", m, b.link, res.n, res.r, k));
            break;
        case PatternKind::zigzag:
            if (b.thm4) out.push_back(make_bound_report("thm4", m, *b.thm4, res.n, res.r, k));
            out.push_back(make_bound_report("trivial", m, b.trivial, res.n, res.r, k));
            if (b.thm3) out.push_back(make_bound_report("thm3", m, *b.thm3, res.n, res.r, k));
            break;
        case PatternKind::stack:
        case PatternKind::disjoint_segments: break;
    }
    return out;
}

}  // namespace cgh
