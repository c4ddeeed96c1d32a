#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgh/core.hpp"
#include "cgh/rational.hpp"

namespace cgh {

/// A generated cgh with its exact size, the coefficient of C(n, r-1) the
/// construction is predicted to reach, and the pattern it must avoid.
struct ConstructionReport {
    Cgh cgh;
    std::size_t edge_count = 0;
    Rational predicted_leading_term;
    std::string claim;
    bool claim_applies = true;  // false for degenerate parameters where the claim is void
    std::string note;
    std::map<std::string, double> extras;  // named auxiliary counts and residuals
};

/// How the consecutive pairs (v_h, v_{h+1}) of a sorted r-tuple are indexed in
/// the stack-free construction: cyclic includes the wraparound pair (v_{r-1}, v_0).
enum class PairReading { cyclic, linear };

namespace detail {

inline void require_even_r(std::size_t r) {
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("uniformity must be even and at least 2");
}

inline ConstructionReport make_report(Cgh h, Rational lead, std::string claim) {
    const std::size_t m = h.size();
    return ConstructionReport{std::move(h), m, lead, std::move(claim), true, {}, {}};
}

/// Calls fn(tuple) for each c-subset of [lo, hi), ascending.
template <class Fn>
void for_each_subset_of_range(std::size_t lo, std::size_t hi, std::size_t c, Fn&& fn) {
    if (hi < lo) return;
    for_each_subset(hi - lo, c, [&](const Edge& sub) {
        Edge shifted(sub);
        for (auto& v : shifted) v += static_cast<Vertex>(lo);
        fn(static_cast<const Edge&>(shifted));
    });
}

/// Sorted r-tuples avoiding vertex 0 whose pair (v_h, v_{h+1}) (or the wrap
/// pair (v_{r-1}, v_0) when h = r-1) is at clockwise difference in `diffs`.
inline void tuples_with_pair_gap(std::size_t n, std::size_t r, std::size_t h, const std::vector<std::size_t>& diffs,
                                 std::vector<Edge>& out) {
    for (std::size_t d : diffs) {
        if (d == 0 || d >= n) continue;
        if (h + 1 < r) {
            for (std::size_t a = 1; a + d < n; ++a) {
                const std::size_t b = a + d;
                for_each_subset_of_range(1, a, h, [&](const Edge& left) {
                    for_each_subset_of_range(b + 1, n, r - 2 - h, [&](const Edge& right) {
                        Edge e(left);
                        e.push_back(static_cast<Vertex>(a));
                        e.push_back(static_cast<Vertex>(b));
                        e.insert(e.end(), right.begin(), right.end());
                        out.push_back(std::move(e));
                    });
                });
            }
        } else {
            for (std::size_t a = 1; a + d < n; ++a) {
                const std::size_t b = a + d;
                for_each_subset_of_range(a + 1, b, r - 2, [&](const Edge& inner) {
                    Edge e{static_cast<Vertex>(a)};
                    e.insert(e.end(), inner.begin(), inner.end());
                    e.push_back(static_cast<Vertex>(b));
                    out.push_back(std::move(e));
                });
            }
        }
    }
}

inline std::vector<std::size_t> ell_differences(std::size_t n, std::initializer_list<std::size_t> lengths) {
    std::vector<std::size_t> out;
    for (std::size_t len : lengths) {
        if (len == 0 || 2 * len > n) continue;
        out.push_back(len);
        out.push_back(n - len);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void sort_unique(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace detail

/// All r-sets whose vertices are pairwise within cyclic distance k-1.
inline ConstructionReport short_pairs_construction(std::size_t n, std::size_t r, std::size_t k) {
    detail::require_even_r(r);
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("short-pairs construction needs odd k >= 3");
    if (n <= 2 * (k - 1)) throw std::invalid_argument("short-pairs construction needs n > 2(k-1)");
    if (r > n) throw std::invalid_argument("uniformity exceeds n");
    CyclicGround ground(n);
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const Edge& e) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (ell(ground, e[i], e[j]) > k - 1) return;
        edges.push_back(e);
    });
    auto report = detail::make_report(Cgh(ground, r, std::move(edges)), Rational((r - 1) * (k - 1)),
                                      "no " + std::to_string(k) + "-stack");
    if (r > k)
        report.note = "r > k: r pairwise close vertices span more than k - 1 sides, so H is empty";
    else if (r > 2)
        report.note = "r > 2: |H| is linear in n, below the predicted leading term";
    return report;
}

/// H(n,r,k) = H_0 ∪ ... ∪ H_{k-1}, each part generated directly:
///   H_0      tuples containing vertex 0,
///   H_j      (1 <= j <= k-2) some consecutive pair at cyclic distance exactly j,
///   H_{k-1}  some pair (v_{2h-1}, v_{2h}), 1 <= h < r/2, at distance k-1 or k.
inline ConstructionReport stack_free_construction(std::size_t n, std::size_t r, std::size_t k,
                                                  PairReading reading = PairReading::cyclic) {
    detail::require_even_r(r);
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (n < r + k) throw std::invalid_argument("stack-free construction needs n >= r + k");

    std::vector<std::vector<Edge>> parts;
    {
        std::vector<Edge> h0;
        detail::for_each_subset_of_range(1, n, r - 1, [&](const Edge& rest) {
            Edge e{0};
            e.insert(e.end(), rest.begin(), rest.end());
            h0.push_back(std::move(e));
        });
        parts.push_back(std::move(h0));
    }
    const std::size_t pair_count = reading == PairReading::cyclic ? r : r - 1;
    for (std::size_t j = 1; j + 2 <= k; ++j) {
        std::vector<Edge> hj;
        const auto diffs = detail::ell_differences(n, {j});
        for (std::size_t h = 0; h < pair_count; ++h) detail::tuples_with_pair_gap(n, r, h, diffs, hj);
        detail::sort_unique(hj);
        parts.push_back(std::move(hj));
    }
    if (k >= 2) {
        std::vector<Edge> last;
        const auto diffs = detail::ell_differences(n, {k - 1, k});
        for (std::size_t h = 1; 2 * h < r; ++h) detail::tuples_with_pair_gap(n, r, 2 * h - 1, diffs, last);
        detail::sort_unique(last);
        parts.push_back(std::move(last));
    }

    std::vector<Edge> all;
    double part_total = 0, overlap_total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        part_total += static_cast<double>(parts[i].size());
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            std::vector<Edge> common;
            std::set_intersection(parts[i].begin(), parts[i].end(), parts[j].begin(), parts[j].end(),
                                  std::back_inserter(common));
            overlap_total += static_cast<double>(common.size());
        }
        all.insert(all.end(), parts[i].begin(), parts[i].end());
    }
    detail::sort_unique(all);

    auto report = detail::make_report(Cgh(CyclicGround(n), r, std::move(all)), Rational((k - 1) * (r - 1)),
                                      "no " + std::to_string(k) + "-stack");
    for (std::size_t i = 0; i < parts.size(); ++i)
        report.extras["part_" + std::to_string(i)] = static_cast<double>(parts[i].size());
    report.extras["parts_total"] = part_total;
    report.extras["pairwise_overlap_total"] = overlap_total;
    report.extras["leading_ratio"] =
        static_cast<double>(report.edge_count) / static_cast<double>((k - 1) * (r - 1) * binomial(n, r - 1));
    if (k == 1) {
        report.claim_applies = false;
        report.note = "k = 1: any nonempty cgh contains a 1-stack (a single edge)";
    }
    return report;
}

/// Disjoint cliques on consecutive arcs of k vertices, the last one truncated.
inline ConstructionReport clique_union(std::size_t n, std::size_t k) {
    if (k < 2) throw std::invalid_argument("clique order must be at least 2");
    std::vector<Edge> edges;
    for (std::size_t start = 0; start < n; start += k) {
        const std::size_t stop = std::min(n, start + k);
        for (std::size_t a = start; a < stop; ++a)
            for (std::size_t b = a + 1; b < stop; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    auto report = detail::make_report(Cgh(CyclicGround(n), 2, std::move(edges)), Rational(k - 1, 2),
                                      "no " + std::to_string(k) + "-zigzag");
    if (n % k != 0) report.note = "k does not divide n: last clique truncated";
    return report;
}

/// G = ∪ G_i over s = r/2 consecutive blocks B_i of size n/s, A_i the first
/// (k-1)/r vertices of B_i; G_i takes one vertex of A_i, one of B_i \ A_i and
/// two of every other B_j \ A_j.
inline ConstructionReport partitioned_construction(std::size_t n, std::size_t r, std::size_t k) {
    detail::require_even_r(r);
    const std::size_t s = r / 2;
    if (k == 0 || (k - 1) % r != 0) throw std::invalid_argument("partitioned construction needs r | k-1");
    if (n % s != 0) throw std::invalid_argument("partitioned construction needs r/2 | n");
    const std::size_t block = n / s, a = (k - 1) / r;
    if (a > block) throw std::invalid_argument("partitioned construction needs (k-1)/r <= n/s");

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Edge> partial{{}};
        for (std::size_t j = 0; j < s; ++j) {
            const std::size_t lo = j * block, mid = lo + a, hi = lo + block;
            std::vector<Edge> picks;
            if (j == i) {
                for (std::size_t x = lo; x < mid; ++x)
                    for (std::size_t y = mid; y < hi; ++y) picks.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y)});
            } else {
                detail::for_each_subset_of_range(mid, hi, 2, [&](const Edge& p) { picks.push_back(p); });
            }
            std::vector<Edge> grown;
            for (const auto& base : partial)
                for (const auto& p : picks) {
                    Edge e(base);
                    e.insert(e.end(), p.begin(), p.end());
                    grown.push_back(std::move(e));
                }
            partial = std::move(grown);
        }
        edges.insert(edges.end(), partial.begin(), partial.end());
    }

    // Leading coefficient of C(n, r-1): 2^{s-1}(k-1)(r-1)!/r^{r-1}.
    std::int64_t fact = 1, rpow = 1;
    for (std::size_t i = 2; i < r; ++i) fact *= static_cast<std::int64_t>(i);
    for (std::size_t i = 1; i < r; ++i) rpow *= static_cast<std::int64_t>(r);
    Rational lead = Rational(std::int64_t{1} << (s - 1)) * Rational(static_cast<std::int64_t>(k - 1)) * Rational(fact, rpow);

    auto report = detail::make_report(Cgh(CyclicGround(n), r, std::move(edges)), lead,
                                      "no tight " + std::to_string(k) + "-path");
    const double m = static_cast<double>(report.edge_count);
    const double scale = std::ldexp(static_cast<double>(k - 1), static_cast<int>(s - 1));
    const double by_quotient = scale * std::pow(static_cast<double>(n) / static_cast<double>(r), static_cast<double>(r - 1));
    const double by_binomial = scale * std::pow(static_cast<double>(binomial(n, r)), static_cast<double>(r - 1));
    report.extras["formula_n_over_r"] = by_quotient;
    report.extras["residual_n_over_r"] = m - by_quotient;
    report.extras["formula_binomial_n_r"] = by_binomial;
    report.extras["residual_binomial_n_r"] = m - by_binomial;
    if (a == 0) {
        report.claim_applies = false;
        report.note = "k = 1: G is empty";
    }
    return report;
}

/// H+ = { {x} ∪ e : x in X, e in H } with X = {n, ..., n + x_count - 1}.
inline Cgh lift_odd(const Cgh& h, std::size_t x_count) {
    if (h.r() % 2 == 0) throw std::invalid_argument("lift_odd expects odd uniformity");
    if (x_count == 0) throw std::invalid_argument("lift_odd needs at least one new vertex");
    const std::size_t n = h.n();
    std::vector<Edge> edges;
    edges.reserve(h.size() * x_count);
    for (std::size_t x = 0; x < x_count; ++x)
        for (const auto& e : h.edges()) {
            Edge f(e);
            f.push_back(static_cast<Vertex>(n + x));
            edges.push_back(std::move(f));
        }
    return Cgh(CyclicGround(n + x_count), h.r() + 1, std::move(edges));
}

/// Vertex sequence v_0..v_{kr-1} of the canonical k-stack: block j holds
/// vertices [jk, (j+1)k); edge i takes the i-th vertex of even blocks and the
/// (k-1-i)-th of odd blocks.
inline std::vector<Vertex> stack_witness_sequence(std::size_t n, std::size_t r, std::size_t k) {
    detail::require_even_r(r);
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (n < k * r) throw std::invalid_argument("stack witness needs n >= k r");
    std::vector<Vertex> seq;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            seq.push_back(static_cast<Vertex>(j * k + (j % 2 == 0 ? i : k - 1 - i)));
    return seq;
}

inline Cgh stack_witness(std::size_t n, std::size_t r, std::size_t k) {
    const auto seq = stack_witness_sequence(n, r, k);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) edges.emplace_back(seq.begin() + i * r, seq.begin() + (i + 1) * r);
    return Cgh(CyclicGround(n), r, std::move(edges));
}

}  // namespace cgh
