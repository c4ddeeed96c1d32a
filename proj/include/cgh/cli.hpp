#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgh/serialize.hpp"
#include "cgh/version.hpp"

namespace cgh::cli {

enum ExitCode : int { ok = 0, schema_error = 1, malformed_input = 2, budget_exhausted = 3, check_failed = 4 };

/// Raised for configurations that do not fit the subcommand's schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // construct | detect | extremal | verify
    std::string verb;     // generator, detector or check name; empty for extremal

    std::optional<std::size_t> n, r, k;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> x_count;
    std::optional<double> p;
    std::optional<std::size_t> count;
    std::uint64_t budget = 100'000'000;
    std::size_t samples = 100'000;
    std::string pattern = "tight-path";
    bool convex = false;
    std::string reading = "cyclic";
    bool sampled = false;
    std::vector<std::uint32_t> colors;

    std::vector<std::size_t> ns, rs, ks;
    std::vector<std::string> patterns;

    std::string input;
    std::string output;          // path prefix; extensions are appended
    std::string format = "all";  // all | json | csv

    Json to_json() const {
        Json j = {{"command", command}, {"verb", verb}};
        auto opt = [&](const char* key, const auto& v) {
            if (v) j[key] = *v;
        };
        opt("n", n);
        opt("r", r);
        opt("k", k);
        opt("seed", seed);
        opt("x_count", x_count);
        opt("p", p);
        opt("count", count);
        j["budget"] = budget;
        j["samples"] = samples;
        j["pattern"] = pattern;
        j["convex"] = convex;
        j["reading"] = reading;
        j["sampled"] = sampled;
        if (!colors.empty()) j["colors"] = colors;
        if (!ns.empty()) j["ns"] = ns;
        if (!rs.empty()) j["rs"] = rs;
        if (!ks.empty()) j["ks"] = ks;
        if (!patterns.empty()) j["patterns"] = patterns;
        j["input"] = input;
        j["output"] = output;
        j["format"] = format;
        return j;
    }
};

namespace detail {

inline std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw SchemaError(std::string("missing required flag --") + flag);
    return *v;
}

inline std::uint64_t need_seed(const RunConfig& cfg) {
    if (!cfg.seed) throw SchemaError("stochastic runs need an explicit --seed");
    return *cfg.seed;
}

/// Writes via a temporary sibling and rename so readers never see partial files.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::string provenance_comment(const RunConfig& cfg) {
    return "# cghtool " + std::string(version) + "\n# config " + cfg.to_json().dump() + "\n";
}

class Outputs {
public:
    explicit Outputs(const RunConfig& cfg) : cfg_(cfg) {
        if (!cfg.output.empty()) {
            prefix_ = cfg.output;
        } else {
            const char* dir = std::getenv("CGH_OUTPUT_DIR");
            prefix_ = std::filesystem::path(dir && *dir ? dir : ".") /
                      (cfg.verb.empty() ? cfg.command : cfg.command + "-" + cfg.verb);
        }
        if (cfg.format != "all" && cfg.format != "json" && cfg.format != "csv")
            throw SchemaError("--format must be all, json or csv");
    }

    std::string cgh(const Cgh& h) {
        auto path = with_ext(".cgh");
        write_atomic(path, provenance_comment(cfg_) + to_string(h));
        return path.string();
    }

    std::string json(Json payload) {
        if (cfg_.format == "csv") return {};
        Json doc = {{"version", version}, {"config", cfg_.to_json()}, {"result", std::move(payload)}};
        auto path = with_ext(".json");
        write_atomic(path, doc.dump(2) + "\n");
        return path.string();
    }

    std::string csv(const std::string& body) {
        if (cfg_.format == "json") return {};
        auto path = with_ext(".csv");
        write_atomic(path, provenance_comment(cfg_) + body);
        return path.string();
    }

private:
    std::filesystem::path with_ext(const char* ext) const {
        auto p = prefix_;
        p += ext;
        return p;
    }

    const RunConfig& cfg_;
    std::filesystem::path prefix_;
};

inline Cgh load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw SchemaError("missing required flag --input");
    std::ifstream in(cfg.input);
    if (!in) throw std::ios_base::failure("cannot open " + cfg.input);
    return read_cgh(in);
}

// ---------------------------------------------------------------------------

inline int run_construct(const RunConfig& cfg, std::ostream& summary) {
    Outputs out(cfg);
    const auto& v = cfg.verb;
    if (v == "lift-odd") {
        const auto h = load_input(cfg);
        const auto x = need(cfg.x_count, "x-count");
        const auto plus = lift_odd(h, x);
        out.cgh(plus);
        const auto ids = check_lift_identities(h, x);
        out.json({{"n", plus.n()}, {"r", plus.r()}, {"edge_count", plus.size()}, {"identities", json_of(ids)}});
        summary << "construct lift-odd: " << plus.size() << " edges on " << plus.n() << " vertices\n";
        return ok;
    }
    if (v == "stack-witness") {
        const auto n = need(cfg.n, "n"), r = need(cfg.r, "r"), k = need(cfg.k, "k");
        const auto h = stack_witness(n, r, k);
        out.cgh(h);
        out.json({{"n", n}, {"r", r}, {"k", k}, {"seq", stack_witness_sequence(n, r, k)}, {"edge_count", h.size()}});
        summary << "construct stack-witness: " << h.size() << " edges\n";
        return ok;
    }
    ConstructionReport rep{Cgh(CyclicGround(1), 1), 0, Rational(0), "", true, "", {}};
    if (v == "short-pairs") {
        rep = short_pairs_construction(need(cfg.n, "n"), need(cfg.r, "r"), need(cfg.k, "k"));
    } else if (v == "stack-free") {
        if (cfg.reading != "cyclic" && cfg.reading != "linear") throw SchemaError("--reading must be cyclic or linear");
        rep = stack_free_construction(need(cfg.n, "n"), need(cfg.r, "r"), need(cfg.k, "k"),
                                      cfg.reading == "cyclic" ? PairReading::cyclic : PairReading::linear);
    } else if (v == "clique-union") {
        rep = clique_union(need(cfg.n, "n"), need(cfg.k, "k"));
    } else if (v == "partitioned") {
        rep = partitioned_construction(need(cfg.n, "n"), need(cfg.r, "r"), need(cfg.k, "k"));
    } else {
        throw SchemaError("unknown generator '" + v + "'");
    }
    out.cgh(rep.cgh);
    out.json(json_of(rep));
    summary << "construct " << v << ": " << rep.edge_count << " edges, leading term "
            << to_string(rep.predicted_leading_term) << " C(n,r-1)\n";
    return ok;
}

inline int run_detect(const RunConfig& cfg, std::ostream& summary) {
    Outputs out(cfg);
    const auto h = load_input(cfg);
    const auto& v = cfg.verb;
    Json result = {{"detector", v}, {"n", h.n()}, {"r", h.r()}, {"edges", h.size()}};
    bool found = false;
    if (v == "tight-path") {
        const auto k = need(cfg.k, "k");
        auto w = find_tight_path(h, k);
        found = w.has_value();
        result["k"] = k;
        if (w) result["witness"] = *w;
    } else if (v == "zigzag") {
        const auto k = need(cfg.k, "k");
        result["k"] = k;
        if (auto w = find_zigzag(h, k)) {
            found = true;
            result["orientation"] = "clockwise";
            result["witness"] = json_of(*w);
        } else if (auto m = find_zigzag(reflect(h), k)) {
            found = true;
            const auto n = static_cast<Vertex>(h.n());
            PathWitness back;
            for (Vertex x : m->seq) back.seq.push_back(n - 1 - x);
            for (const auto& s : m->segments) back.segments.push_back({n - 1 - s.v, n - 1 - s.u});
            result["orientation"] = "counterclockwise";
            result["witness"] = json_of(back);
        }
    } else if (v == "stack") {
        const auto k = need(cfg.k, "k");
        StackMode mode = Exhaustive{};
        if (cfg.sampled) mode = Sampled{cfg.budget, need_seed(cfg)};
        result["k"] = k;
        result["mode"] = cfg.sampled ? "sampled" : "exhaustive";
        auto w = find_stack(h, k, mode);
        if (!w) {
            w = find_stack(reflect(h), k, mode);
            if (w)
                for (auto& x : *w) x = static_cast<Vertex>(h.n() - 1 - x);
        }
        found = w.has_value();
        if (w) result["witness"] = *w;
    } else if (v == "matching") {
        const auto segs = max_disjoint_segments(h);
        result["max_disjoint_segments"] = segs.size();
        result["segments"] = segs;
        found = cfg.k ? segs.size() >= *cfg.k : !segs.empty();
        if (cfg.k) result["k"] = *cfg.k;
    } else if (v == "good-path") {
        const auto k = need(cfg.k, "k");
        if (h.r() % 2 != 0) throw SchemaError("good paths need even uniformity");
        const auto s = h.r() / 2;
        std::optional<Coloring> coloring;
        if (!cfg.colors.empty()) {
            coloring.emplace(cfg.colors, s);
        } else {
            Rng rng(need_seed(cfg));
            coloring.emplace(Coloring::random(h.n(), s, rng));
        }
        coloring->check_for(h);
        const auto g = restrict_color_regular(h, *coloring);
        const auto ends = enumerate_good_ends(g, *coloring, k);
        found = !ends.empty();
        result["k"] = k;
        result["colors"] = coloring->colors();
        result["color_regular_edges"] = g.size();
        result["good_ends"] = ends.size();
        if (found) result["example_end"] = json_of(ends.front());
    } else {
        throw SchemaError("unknown detector '" + v + "'");
    }
    result["found"] = found;
    out.json(result);
    summary << "detect " << v << ": " << (found ? "found" : "not found") << '\n';
    return ok;
}

inline int run_extremal(const RunConfig& cfg, std::ostream& summary) {
    Outputs out(cfg);
    SearchOptions opts;
    opts.budget = cfg.budget;
    std::vector<ExtremalResult> rows;
    if (!cfg.ns.empty()) {
        TableSpec spec;
        spec.ns = cfg.ns;
        spec.rs = cfg.rs;
        spec.ks = cfg.ks;
        spec.convex = cfg.convex;
        for (const auto& name : cfg.patterns.empty() ? std::vector<std::string>{cfg.pattern} : cfg.patterns)
            spec.kinds.push_back(parse_pattern_kind(name));
        if (spec.rs.empty() || spec.ks.empty()) throw SchemaError("table mode needs --rs and --ks");
        rows = extremal_table(spec, opts);
    } else {
        const auto kind = parse_pattern_kind(cfg.pattern);
        PatternPredicate p{kind, need(cfg.k, "k"), kind == PatternKind::tight_path ? cfg.convex : true};
        rows.push_back(max_edges_avoiding(need(cfg.n, "n"), need(cfg.r, "r"), p, opts));
        out.cgh(rows.front().witness);
    }
    std::ostringstream csv;
    write_table_csv(csv, rows);
    out.csv(csv.str());
    Json arr = Json::array();
    bool all_exact = true;
    for (const auto& row : rows) {
        arr.push_back(json_of(row));
        all_exact = all_exact && row.exact;
    }
    out.json(arr);
    if (rows.size() == 1)
        summary << "extremal: max_edges " << rows.front().max_edges << (rows.front().exact ? " (exact)" : " (lower bound)")
                << '\n';
    else
        summary << "extremal: " << rows.size() << " cells" << (all_exact ? ", all exact" : ", some inexact") << '\n';
    return all_exact ? ok : budget_exhausted;
}

struct Instance {
    std::size_t index;
    Cgh h;
    std::uint64_t aux_seed;  // for per-instance colorings and sampling
};

inline std::vector<Instance> verify_instances(const RunConfig& cfg, bool stochastic) {
    std::vector<Instance> out;
    if (!cfg.input.empty()) {
        out.push_back({0, load_input(cfg), stochastic ? derive_seed(need_seed(cfg), 1) : 0});
        return out;
    }
    const auto n = need(cfg.n, "n"), r = need(cfg.r, "r"), count = need(cfg.count, "count");
    if (!cfg.p) throw SchemaError("random instances need --p");
    if (*cfg.p < 0 || *cfg.p > 1) throw SchemaError("--p must lie in [0, 1]");
    const auto seed = need_seed(cfg);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back({i, random_cgh(n, r, *cfg.p, derive_seed(seed, 2 * i)), derive_seed(seed, 2 * i + 1)});
    return out;
}

inline std::string csv_row(std::size_t instance, const BoundReport& b) {
    std::ostringstream s;
    s << instance << ',' << b.name << ',' << to_string(b.lhs) << ',' << to_string(b.rhs) << ','
      << (b.holds ? "true" : "false") << ',' << b.n << ',' << b.r << ',' << b.k << '\n';
    return s.str();
}

inline int run_verify(const RunConfig& cfg, std::ostream& summary) {
    Outputs out(cfg);
    const auto& v = cfg.verb;
    std::string csv = "instance,name,lhs,rhs,holds,n,r,k\n";
    Json results = Json::array();
    std::size_t checked = 0, failed = 0, skipped = 0;
    auto record = [&](std::size_t idx, const BoundReport& b) {
        csv += csv_row(idx, b);
        ++checked;
        if (!b.holds) ++failed;
    };

    if (v == "bounds") {
        const auto n = need(cfg.n, "n"), r = need(cfg.r, "r"), k = need(cfg.k, "k");
        Json entry = {{"values", json_of(bound_values(n, r, k))}};
        Json reports = Json::array();
        if (k >= 2)
            for (const auto& b : check_bound_ordering(n, r, k)) {
                record(0, b);
                reports.push_back(json_of(b));
            }
        entry["ordering"] = reports;
        results.push_back(entry);
    } else {
        const bool stochastic = v == "coloring" || v == "good-paths";
        if (v != "ends-inequality" && v != "injections" && v != "coloring" && v != "good-paths" &&
            v != "odd-reduction" && v != "link-recursion")
            throw SchemaError("unknown check '" + v + "'");
        for (const auto& inst : verify_instances(cfg, stochastic)) {
            const auto& h = inst.h;
            Json entry = {{"instance", inst.index}, {"n", h.n()}, {"r", h.r()}, {"edges", h.size()}};
            if (v == "ends-inequality") {
                auto b = check_end_count_inequality(h, need(cfg.k, "k"));
                record(inst.index, b);
                entry["report"] = json_of(b);
            } else if (v == "injections") {
                auto rep = check_injections(h, need(cfg.k, "k"));
                record(inst.index, rep.eq1);
                record(inst.index, rep.eq2);
                if (!rep.all_hold() && rep.eq1.holds && rep.eq2.holds) ++failed;
                entry["report"] = json_of(rep);
            } else if (v == "coloring") {
                const auto exact = expected_counts_exact(h);
                const auto ex = coloring_experiment(h, cfg.samples, inst.aux_seed);
                bool match = true;
                if (exact.edges_enumerated) match = *exact.edges_enumerated == exact.edges;
                if (exact.shadow_enumerated) match = match && *exact.shadow_enumerated == exact.shadow;
                ++checked;
                if (!ex.within_3se || !match) ++failed;
                csv += std::to_string(inst.index) + ",coloring," + std::to_string(ex.observed_g) + ',' +
                       to_string(exact.edges) + ',' + ((ex.within_3se && match) ? "true" : "false") + ',' +
                       std::to_string(h.n()) + ',' + std::to_string(h.r()) + ",0\n";
                entry["exact"] = json_of(exact);
                entry["experiment"] = json_of(ex);
                entry["enumeration_matches"] = match;
            } else if (v == "good-paths") {
                Rng rng(inst.aux_seed);
                if (h.r() % 2 != 0) throw SchemaError("good paths need even uniformity");
                const auto coloring = Coloring::random(h.n(), h.r() / 2, rng);
                const auto g = restrict_color_regular(h, coloring);
                Json reps = Json::array();
                for (const auto& b : check_good_path_inequalities(g, coloring, need(cfg.k, "k"))) {
                    record(inst.index, b);
                    reps.push_back(json_of(b));
                }
                entry["colors"] = coloring.colors();
                entry["color_regular_edges"] = g.size();
                entry["reports"] = reps;
            } else if (v == "odd-reduction" || v == "link-recursion") {
                const auto k = need(cfg.k, "k");
                if (contains_tight_path(h, k)) {
                    ++skipped;
                    entry["skipped"] = "contains a tight k-path";
                } else if (v == "odd-reduction") {
                    auto rep = check_odd_reduction(h, k, cfg.x_count);
                    record(inst.index, rep.bound);
                    record(inst.index, rep.lifted);
                    if (!rep.lifted_path_free) ++failed;
                    entry["report"] = json_of(rep);
                } else {
                    auto rep = check_link_recursion(h, k);
                    record(inst.index, rep.averaging);
                    record(inst.index, rep.bound);
                    entry["report"] = json_of(rep);
                }
            }
            results.push_back(entry);
        }
    }
    out.json({{"check", v}, {"checked", checked}, {"failed", failed}, {"skipped", skipped}, {"instances", results}});
    out.csv(csv);
    summary << "verify " << v << ": " << checked << " checks, " << failed << " failed";
    if (skipped) summary << ", " << skipped << " skipped";
    summary << '\n';
    return failed == 0 ? ok : check_failed;
}

}  // namespace detail

/// Executes one subcommand; errors map to exit codes, diagnostics go to `err`.
inline int run(const RunConfig& cfg, std::ostream& summary = std::cout, std::ostream& err = std::cerr) {
    try {
        if (cfg.command == "construct") return detail::run_construct(cfg, summary);
        if (cfg.command == "detect") return detail::run_detect(cfg, summary);
        if (cfg.command == "extremal") return detail::run_extremal(cfg, summary);
        if (cfg.command == "verify") return detail::run_verify(cfg, summary);
        throw SchemaError("unknown subcommand '" + cfg.command + "'");
    } catch (const ParseError& e) {
        err << "error: " << cfg.input << ": " << e.what() << '\n';
        return malformed_input;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return malformed_input;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return schema_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return schema_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return cfg.input.empty() ? schema_error : malformed_input;
    }
}

/// Registers every subcommand and flag on `app`, filling `cfg` on parse.
inline void configure(CLI::App& app, RunConfig& cfg) {
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    auto common_out = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "output path prefix (default $CGH_OUTPUT_DIR/<command>-<verb>)");
        sub->add_option("--format", cfg.format, "which artifacts to write: all, json or csv")
            ->check(CLI::IsMember({"all", "json", "csv"}));
    };
    auto nrk = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "number of vertices");
        sub->add_option("--r", cfg.r, "uniformity");
        sub->add_option("--k", cfg.k, "pattern length");
    };

    auto* construct = app.add_subcommand("construct", "build an extremal construction");
    construct->require_subcommand(1);
    for (const char* name : {"short-pairs", "stack-free", "clique-union", "partitioned", "stack-witness", "lift-odd"}) {
        auto* sub = construct->add_subcommand(name);
        nrk(sub);
        common_out(sub);
        if (std::string(name) == "stack-free")
            sub->add_option("--reading", cfg.reading, "pair reading: cyclic or linear")
                ->check(CLI::IsMember({"cyclic", "linear"}));
        if (std::string(name) == "lift-odd") {
            sub->add_option("-i,--input", cfg.input, "cgh file")->required();
            sub->add_option("--x-count", cfg.x_count, "number of new vertices")->required();
        }
        sub->callback([&cfg, sub] {
            cfg.command = "construct";
            cfg.verb = sub->get_name();
        });
    }

    auto* detect = app.add_subcommand("detect", "run a pattern detector on a cgh file");
    detect->require_subcommand(1);
    for (const char* name : {"tight-path", "zigzag", "stack", "matching", "good-path"}) {
        auto* sub = detect->add_subcommand(name);
        sub->add_option("-i,--input", cfg.input, "cgh file")->required();
        sub->add_option("--k", cfg.k, "pattern length");
        common_out(sub);
        if (std::string(name) == "stack") {
            sub->add_flag("--sampled", cfg.sampled, "randomized search instead of exhaustive");
            sub->add_option("--budget", cfg.budget, "sampling attempts");
            sub->add_option("--seed", cfg.seed, "random seed");
        }
        if (std::string(name) == "good-path") {
            sub->add_option("--colors", cfg.colors, "vertex colors in 0..r/2-1")->delimiter(',');
            sub->add_option("--seed", cfg.seed, "seed for a random coloring");
        }
        sub->callback([&cfg, sub] {
            cfg.command = "detect";
            cfg.verb = sub->get_name();
        });
    }

    auto* extremal = app.add_subcommand("extremal", "exact extremal numbers by branch and bound");
    nrk(extremal);
    common_out(extremal);
    extremal->add_option("--pattern", cfg.pattern, "tight-path, zigzag, stack or disjoint-segments");
    extremal->add_flag("--convex,!--abstract", cfg.convex, "respect the cyclic order (tight paths)");
    extremal->add_option("--budget", cfg.budget, "search-tree node limit");
    extremal->add_option("--ns", cfg.ns, "table mode: values of n")->delimiter(',');
    extremal->add_option("--rs", cfg.rs, "table mode: values of r")->delimiter(',');
    extremal->add_option("--ks", cfg.ks, "table mode: values of k")->delimiter(',');
    extremal->add_option("--patterns", cfg.patterns, "table mode: pattern kinds")->delimiter(',');
    extremal->callback([&cfg] { cfg.command = "extremal"; });

    auto* verify = app.add_subcommand("verify", "check inequalities on supplied or random inputs");
    verify->require_subcommand(1);
    for (const char* name :
         {"ends-inequality", "injections", "coloring", "good-paths", "odd-reduction", "link-recursion", "bounds"}) {
        auto* sub = verify->add_subcommand(name);
        nrk(sub);
        common_out(sub);
        sub->add_option("-i,--input", cfg.input, "cgh file (otherwise random instances)");
        sub->add_option("--p", cfg.p, "edge probability for random instances");
        sub->add_option("--count", cfg.count, "number of random instances");
        sub->add_option("--seed", cfg.seed, "master seed");
        if (std::string(name) == "coloring") sub->add_option("--samples", cfg.samples, "Monte Carlo samples");
        if (std::string(name) == "odd-reduction") sub->add_option("--x-count", cfg.x_count, "size of the new vertex set");
        sub->callback([&cfg, sub] {
            cfg.command = "verify";
            cfg.verb = sub->get_name();
        });
    }
}

/// Full command-line entry point.
inline int main_entry(int argc, char** argv) {
    CLI::App app{"Convex geometric hypergraph toolkit", "cghtool"};
    RunConfig cfg;
    configure(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return schema_error;
    }
    return run(cfg);
}

}  // namespace cgh::cli
