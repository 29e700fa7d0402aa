// Command-line front end: exact monomer-dimer and dimer partition functions,
// orientation tables, brute-force enumeration, self-verification, and timing
// comparisons for embedded-graph JSON documents.
#include <CLI11.hpp>
#include <json.hpp>

#include <gmpxx.h>

#include <chrono>
#include <cstddef>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mdsurf/engine.hpp"
#include "mdsurf/error.hpp"
#include "mdsurf/graph.hpp"
#include "mdsurf/oracle.hpp"
#include "mdsurf/orientation.hpp"
#include "mdsurf/preprocess.hpp"
#include "mdsurf/ring.hpp"
#include "mdsurf/shuriken.hpp"
#include "mdsurf/skew.hpp"
#include "mdsurf/topology.hpp"

using namespace mdsurf;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string command;
    std::string path;
    std::string ring = "polynomial";
    std::string beta; // bit string, one char per circuit, circuit 0 first
    unsigned long seed = 0;
    unsigned jobs = 1;
    bool dump_curves = false;
    std::size_t max_oracle = kOracleDefaultCap;
    bool json = false;
};

// Sector masks render as bit strings with circuit 0 leftmost; a closed map
// has the single empty sector, rendered "-".
std::string beta_string(unsigned mask, std::size_t circuits) {
    if (circuits == 0) return "-";
    std::string s(circuits, '0');
    for (std::size_t k = 0; k < circuits; ++k)
        if (mask >> k & 1u) s[k] = '1';
    return s;
}

unsigned parse_beta(const std::string& bits, std::size_t circuits) {
    require(bits.size() == circuits,
            "--beta needs exactly one bit per boundary circuit (" +
                std::to_string(circuits) + " circuit(s) after normalization)");
    unsigned mask = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        require(bits[k] == '0' || bits[k] == '1',
                "--beta must be a string of 0s and 1s");
        if (bits[k] == '1') mask |= 1u << k;
    }
    return mask;
}

std::string stats_line(const Graph& g) {
    return "vertices: " + std::to_string(g.map.vertex_count()) +
           "  edges: " + std::to_string(g.map.edge_count()) +
           "  genus: " + std::to_string(g.genus()) +
           "  circuits: " + std::to_string(g.num_boundary());
}

ordered_json stats_json(const Graph& g) {
    return {{"vertices", g.map.vertex_count()},
            {"edges", g.map.edge_count()},
            {"genus", g.genus()},
            {"circuits", g.num_boundary()}};
}

bool same_shape(const Graph& a, const Graph& b) {
    return a.map.vertex_count() == b.map.vertex_count() &&
           a.map.edge_count() == b.map.edge_count() &&
           a.num_boundary() == b.num_boundary();
}

template <class R>
ordered_json sector_json(const Graph& h, const SectorReport<R>& rep) {
    ordered_json terms = ordered_json::array();
    for (const R& t : rep.terms)
        terms.push_back(RingOps<R>::to_string(t, h.symbols));
    return {{"beta", beta_string(rep.beta, h.num_boundary())},
            {"terms", std::move(terms)},
            {"inner", RingOps<R>::to_string(rep.inner, h.symbols)},
            {"value", RingOps<R>::to_string(rep.value, h.symbols)}};
}

ordered_json curves_json(const HomologyBasis& basis) {
    ordered_json curves = ordered_json::array();
    for (const auto& gen : basis.gens) {
        ordered_json ids = ordered_json::array();
        for (std::size_t e = 0; e < gen.crossed.size(); ++e)
            if (gen.crossed[e]) ids.push_back(e);
        curves.push_back(std::move(ids));
    }
    return curves;
}

void print_curves(const HomologyBasis& basis) {
    if (basis.gens.empty()) {
        std::cout << "curves: none\n";
        return;
    }
    for (std::size_t i = 0; i < basis.gens.size(); ++i) {
        std::cout << "curve " << i << ":";
        for (std::size_t e = 0; e < basis.gens[i].crossed.size(); ++e)
            if (basis.gens[i].crossed[e]) std::cout << " " << e;
        std::cout << "\n";
    }
}

// --- compute ------------------------------------------------------------

template <class R>
int cmd_compute(const Options& opt, const Graph& input) {
    Graph h = input;
    preprocess(h);
    bool restricted = !opt.beta.empty();
    EngineResult<R> res =
        restricted
            ? evaluate_sector<R>(h, parse_beta(opt.beta, h.num_boundary()),
                                 opt.jobs)
            : evaluate_sectors<R>(h, opt.jobs);

    if (opt.json) {
        ordered_json out{{"command", "compute"},
                         {"ring", RingOps<R>::name()},
                         {"input", stats_json(input)},
                         {"normalized", stats_json(h)}};
        if (restricted) out["beta"] = opt.beta;
        if (opt.dump_curves) out["curves"] = curves_json(homology_basis(h));
        ordered_json sectors = ordered_json::array();
        for (const auto& rep : res.sectors) sectors.push_back(sector_json(h, rep));
        out["sectors"] = std::move(sectors);
        out["total"] = RingOps<R>::to_string(res.total, h.symbols);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << stats_line(input) << "  ring: " << RingOps<R>::name() << "\n";
    if (!same_shape(input, h)) std::cout << "normalized: " << stats_line(h) << "\n";
    if (opt.dump_curves) print_curves(homology_basis(h));
    for (const auto& rep : res.sectors)
        std::cout << "sector " << beta_string(rep.beta, h.num_boundary()) << ": "
                  << RingOps<R>::to_string(rep.value, h.symbols) << "\n";
    std::cout << (restricted ? "Z_beta = " : "Z_MD = ")
              << RingOps<R>::to_string(res.total, h.symbols) << "\n";
    return 0;
}

// --- dimer ----------------------------------------------------------------

template <class R>
int cmd_dimer(const Options& opt, const Graph& input) {
    Graph h = input;
    h.boundary.clear();
    EngineResult<R> res;
    if (h.map.vertex_count() % 2 == 0) res = evaluate_sectors<R>(h, opt.jobs);

    if (opt.json) {
        ordered_json out{{"command", "dimer"},
                         {"ring", RingOps<R>::name()},
                         {"input", stats_json(input)}};
        ordered_json terms = ordered_json::array();
        if (!res.sectors.empty())
            for (const R& t : res.sectors.front().terms)
                terms.push_back(RingOps<R>::to_string(t, h.symbols));
        out["terms"] = std::move(terms);
        out["total"] = RingOps<R>::to_string(res.total, h.symbols);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << stats_line(input) << "  ring: " << RingOps<R>::name() << "\n";
    if (input.num_boundary() > 0)
        std::cout << "boundary circuits ignored: " << input.num_boundary()
                  << "\n";
    std::cout << "Z_D = " << RingOps<R>::to_string(res.total, h.symbols) << "\n";
    return 0;
}

// --- orient ---------------------------------------------------------------

int cmd_orient(const Options& opt, const Graph& input) {
    Graph h = input;
    preprocess(h);
    auto sectors = admissible_sectors(h);
    unsigned beta;
    if (!opt.beta.empty()) {
        beta = parse_beta(opt.beta, h.num_boundary());
        bool ok = false;
        for (unsigned s : sectors) ok = ok || s == beta;
        require(ok, "sector " + beta_string(beta, h.num_boundary()) +
                        " has the wrong bit parity for this vertex count");
    } else {
        require(!sectors.empty(),
                "closed map with an odd vertex count has no sectors");
        beta = sectors.front();
    }

    Faces faces = close_surface(h);
    HomologyBasis basis = homology_basis(h);
    Orientation k = build_base_orientation(h, faces, beta);
    fix_gamma_parities(h, basis, k);

    if (opt.json) {
        ordered_json out{{"command", "orient"},
                         {"beta", beta_string(beta, h.num_boundary())},
                         {"input", stats_json(input)},
                         {"normalized", stats_json(h)}};
        if (opt.dump_curves) out["curves"] = curves_json(basis);
        ordered_json table = ordered_json::array();
        for (EdgeId e = 0; e < h.map.edge_count(); ++e) {
            Dart t = k.tail_dart(e);
            table.push_back({{"edge", e},
                             {"tail", h.map.tail(t)},
                             {"head", h.map.head(t)}});
        }
        out["orientation"] = std::move(table);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << stats_line(input) << "\n";
    if (!same_shape(input, h)) std::cout << "normalized: " << stats_line(h) << "\n";
    std::cout << "sector " << beta_string(beta, h.num_boundary()) << "\n";
    if (opt.dump_curves) print_curves(basis);
    for (EdgeId e = 0; e < h.map.edge_count(); ++e) {
        Dart t = k.tail_dart(e);
        std::cout << "edge " << e << ": " << h.map.tail(t) << " -> "
                  << h.map.head(t) << "\n";
    }
    return 0;
}

// --- enumerate --------------------------------------------------------------

template <class R>
int cmd_enumerate(const Options& opt, const Graph& g) {
    // Oracle view of the document exactly as given: sector masks refer to the
    // input walks, and nothing is normalized first.
    auto circ = g.vertex_circuit();
    std::map<unsigned, std::pair<unsigned long, R>> by_mask;
    unsigned long coverings = 0;
    R total = RingOps<R>::zero();
    enumerate_md(
        g,
        [&](const MdCovering& c) {
            unsigned mask = 0;
            for (VertexId v : c.monomers) mask ^= 1u << circ[v];
            auto [it, fresh] =
                by_mask.try_emplace(mask, 0ul, RingOps<R>::zero());
            (void)fresh;
            ++it->second.first;
            it->second.second += covering_weight<R>(g, c);
            ++coverings;
            total += covering_weight<R>(g, c);
        },
        opt.max_oracle);

    bool restricted = !opt.beta.empty();
    unsigned wanted = 0;
    if (restricted) {
        wanted = parse_beta(opt.beta, g.num_boundary());
        auto it = by_mask.find(wanted);
        unsigned long n = it == by_mask.end() ? 0 : it->second.first;
        R w = it == by_mask.end() ? RingOps<R>::zero() : it->second.second;
        by_mask.clear();
        by_mask.emplace(wanted, std::make_pair(n, std::move(w)));
        coverings = by_mask.begin()->second.first;
        total = by_mask.begin()->second.second;
    }

    if (opt.json) {
        ordered_json out{{"command", "enumerate"},
                         {"ring", RingOps<R>::name()},
                         {"max_oracle", opt.max_oracle},
                         {"input", stats_json(g)}};
        if (restricted) out["beta"] = opt.beta;
        ordered_json sectors = ordered_json::array();
        for (const auto& [mask, slot] : by_mask)
            sectors.push_back(
                {{"beta", beta_string(mask, g.num_boundary())},
                 {"coverings", slot.first},
                 {"weight", RingOps<R>::to_string(slot.second, g.symbols)}});
        out["sectors"] = std::move(sectors);
        out["coverings"] = coverings;
        out["total"] = RingOps<R>::to_string(total, g.symbols);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << stats_line(g) << "  ring: " << RingOps<R>::name() << "\n";
    for (const auto& [mask, slot] : by_mask)
        std::cout << "sector " << beta_string(mask, g.num_boundary()) << ": "
                  << slot.first << " coverings, weight "
                  << RingOps<R>::to_string(slot.second, g.symbols) << "\n";
    std::cout << "coverings: " << coverings << "\n";
    std::cout << (restricted ? "Z_beta = " : "Z_MD = ")
              << RingOps<R>::to_string(total, g.symbols) << "\n";
    return 0;
}

// --- verify -----------------------------------------------------------------

// Random skew matrices: the fast Pfaffian agrees with the definition and
// squares to the determinant, over integers and two-variable polynomials.
bool algebra_spot_check(unsigned long seed) {
    std::mt19937_64 rng(seed);
    auto ri = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(
                                                  hi - lo + 1));
    };
    for (int t = 0; t < 30; ++t) {
        auto n = static_cast<std::size_t>(2 * ri(0, 4));
        SkewMatrix<mpq_class> a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                a.add(i, j, mpq_class(ri(-4, 4)));
        mpq_class pf = pfaffian(a);
        if (pf != pfaffian_definition(a)) return false;
        if (pf * pf != determinant(a)) return false;
    }
    SymbolTable syms;
    Poly x = Poly::variable(syms.intern("x"));
    Poly y = Poly::variable(syms.intern("y"));
    for (int t = 0; t < 6; ++t) {
        auto n = static_cast<std::size_t>(2 * ri(1, 3));
        SkewMatrix<Poly> a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                a.add(i, j,
                      Poly::constant(ri(-2, 2)) + x * Poly::constant(ri(-2, 2)) +
                          y * Poly::constant(ri(-2, 2)));
        Poly pf = pfaffian(a);
        if (pf != pfaffian_definition(a)) return false;
        if (pf * pf != determinant(a)) return false;
    }
    return true;
}

template <class R>
int cmd_verify(const Options& opt, const Graph& input) {
    Graph h = input;
    preprocess(h);
    Faces faces = close_surface(h);
    HomologyBasis basis = homology_basis(h);
    auto sectors = admissible_sectors(h);

    bool all_pass = true;
    ordered_json checks = ordered_json::array();
    auto record = [&](const std::string& beta, const std::string& name,
                      bool pass, const std::string& skip_reason = "") {
        std::string status =
            !skip_reason.empty() ? "skip" : (pass ? "pass" : "FAIL");
        if (skip_reason.empty() && !pass) all_pass = false;
        if (!opt.json) {
            std::cout << (beta.empty() ? "" : "sector " + beta + " | ") << name
                      << ": " << status;
            if (!skip_reason.empty()) std::cout << " (" << skip_reason << ")";
            std::cout << "\n";
        }
        ordered_json row{{"name", name}, {"status", status}};
        if (!beta.empty()) row["beta"] = beta;
        if (!skip_reason.empty()) row["reason"] = skip_reason;
        checks.push_back(std::move(row));
    };

    if (!opt.json) {
        std::cout << stats_line(input) << "  ring: " << RingOps<R>::name()
                  << "\n";
        if (!same_shape(input, h))
            std::cout << "normalized: " << stats_line(h) << "\n";
    }

    for (unsigned beta : sectors) {
        std::string bs = beta_string(beta, h.num_boundary());
        Orientation base = build_base_orientation(h, faces, beta);
        fix_gamma_parities(h, basis, base);

        record(bs, "interior faces odd", is_kasteleyn(h, faces, base));
        record(bs, "circuit pattern",
               matches_boundary_pattern(h, base, beta) &&
                   disk_parities_match(h, base, beta));
        bool gens_odd = true;
        for (const auto& gen : basis.gens)
            gens_odd = gens_odd && n_count(base, gen.gamma) % 2 == 1;
        record(bs, "generator walks odd", gens_odd);

        bool twists_ok = true;
        for (unsigned eps = 0; eps < (1u << basis.gens.size()); ++eps) {
            Orientation o = base;
            flip_epsilon(basis, eps, o);
            twists_ok = twists_ok && is_kasteleyn(h, faces, o) &&
                        matches_boundary_pattern(h, o, beta);
            flip_epsilon(basis, eps, o);
            twists_ok = twists_ok && o == base;
        }
        record(bs, "twists preserve admissibility", twists_ok);

        Labelling lab = make_labelling(h, beta);
        std::size_t det_cap = RingOps<R>::is_field ? 16 : 12;
        if (lab.size <= det_cap) {
            SkewMatrix<R> m = modified_matrix<R>(h, lab, base);
            R pf = pfaffian(m);
            record(bs, "pfaffian squares to determinant",
                   pf * pf == determinant(m));
        } else {
            record(bs, "pfaffian squares to determinant", true,
                   "matrix larger than the determinant cap " +
                       std::to_string(det_cap));
        }

        Shuriken s = build_shuriken(h, beta);
        std::size_t aug = s.graph.map.vertex_count();
        if (RingOps<R>::is_field || aug <= 24) {
            record(bs, "augmented pfaffian identity",
                   verify_pfaffian_identity<R>(h, beta, base));
        } else {
            record(bs, "augmented pfaffian identity", true,
                   "augmented map has " + std::to_string(aug) +
                       " vertices; polynomial pfaffian capped at 24");
        }

        if (h.map.vertex_count() <= opt.max_oracle) {
            record(bs, "covering partition",
                   verify_cover_correspondence<R>(h, beta, aug));
        } else {
            record(bs, "covering partition", true,
                   "vertex count exceeds --max-oracle " +
                       std::to_string(opt.max_oracle));
        }
    }
    if (sectors.empty())
        record("", "admissible sectors exist", true, "none for this parity");

    record("", "algebra spot check", algebra_spot_check(opt.seed));

    if (opt.json) {
        ordered_json out{{"command", "verify"},
                         {"ring", RingOps<R>::name()},
                         {"seed", opt.seed},
                         {"max_oracle", opt.max_oracle},
                         {"input", stats_json(input)},
                         {"normalized", stats_json(h)},
                         {"checks", std::move(checks)},
                         {"passed", all_pass}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_pass ? 0 : 2;
}

// --- bench ------------------------------------------------------------------

template <class R>
int cmd_bench(const Options& opt, const Graph& g) {
    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    R fast = boundary_md_partition<R>(g, opt.jobs);
    auto t1 = clock::now();
    double fast_s = std::chrono::duration<double>(t1 - t0).count();
    std::string fast_str = RingOps<R>::to_string(fast, g.symbols);

    bool enumerable = g.map.vertex_count() <= opt.max_oracle;
    std::string slow_str;
    double slow_s = 0;
    bool agree = true;
    if (enumerable) {
        auto t2 = clock::now();
        R slow = oracle_Z_md<R>(g, opt.max_oracle);
        auto t3 = clock::now();
        slow_s = std::chrono::duration<double>(t3 - t2).count();
        slow_str = RingOps<R>::to_string(slow, g.symbols);
        agree = fast == slow;
    }

    if (opt.json) {
        ordered_json out{{"command", "bench"},
                         {"ring", RingOps<R>::name()},
                         {"max_oracle", opt.max_oracle},
                         {"input", stats_json(g)},
                         {"pfaffian", fast_str}};
        out["enumeration"] = enumerable ? ordered_json(slow_str) : nullptr;
        out["agreement"] = enumerable ? (agree ? "exact" : "MISMATCH")
                                      : "not checked";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << stats_line(g) << "  ring: " << RingOps<R>::name() << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", fast_s);
        std::cout << "pfaffian     " << buf << " s  " << fast_str << "\n";
        if (enumerable) {
            std::snprintf(buf, sizeof buf, "%.6f", slow_s);
            std::cout << "enumeration  " << buf << " s  " << slow_str << "\n";
        } else {
            std::cout << "enumeration  skipped (vertex count "
                      << g.map.vertex_count() << " exceeds --max-oracle "
                      << opt.max_oracle << ")\n";
        }
        std::cout << "agreement: "
                  << (enumerable ? (agree ? "exact" : "MISMATCH")
                                 : "not checked")
                  << "\n";
    }
    check(agree, "pfaffian and enumeration disagree");
    return 0;
}

// --- driver -----------------------------------------------------------------

template <class R>
int run(const Options& opt) {
    Graph g = Graph::load_file(opt.path);
    if (opt.command == "compute") return cmd_compute<R>(opt, g);
    if (opt.command == "dimer") return cmd_dimer<R>(opt, g);
    if (opt.command == "orient") return cmd_orient(opt, g);
    if (opt.command == "enumerate") return cmd_enumerate<R>(opt, g);
    if (opt.command == "verify") return cmd_verify<R>(opt, g);
    if (opt.command == "bench") return cmd_bench<R>(opt, g);
    throw input_error("unknown command " + opt.command);
}

void emit_error(const char* type, const std::string& message) {
    ordered_json rec{{"error", {{"type", type}, {"message", message}}}};
    std::cerr << rec.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact monomer-dimer partition functions on embedded graphs"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("graph", opt.path, "graph JSON document")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--ring", opt.ring, "coefficient ring")
            ->check(CLI::IsMember({"rational", "polynomial"}))
            ->capture_default_str();
        cmd->add_option("--beta", opt.beta,
                        "boundary sector as a bit string, circuit 0 first");
        cmd->add_option("--seed", opt.seed, "seed for randomized self-checks")
            ->capture_default_str();
        cmd->add_option("--jobs", opt.jobs, "worker threads")
            ->check(CLI::Range(1u, 256u))
            ->capture_default_str();
        cmd->add_flag("--dump-curves", opt.dump_curves,
                      "print the homology generator curves as edge-id lists");
        cmd->add_option("--max-oracle", opt.max_oracle,
                        "vertex cap for brute-force enumeration")
            ->capture_default_str();
        cmd->add_flag("--json", opt.json, "structured output instead of text");
    };
    add_common(app.add_subcommand(
        "compute", "boundary monomer-dimer partition function"));
    add_common(app.add_subcommand("dimer", "dimer partition function of the "
                                           "underlying closed map"));
    add_common(app.add_subcommand(
        "orient", "emit one sector's edge orientation as a tail/head table"));
    add_common(app.add_subcommand(
        "enumerate", "brute-force covering counts and weights per sector"));
    add_common(app.add_subcommand(
        "verify", "run the internal identity suites on the input"));
    add_common(
        app.add_subcommand("bench", "pfaffian vs enumeration timing table"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit_error("usage", e.what());
        return 1;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        if (opt.ring == "rational") return run<mpq_class>(opt);
        return run<Poly>(opt);
    } catch (const input_error& e) {
        emit_error("input_error", e.what());
        return 1;
    } catch (const invariant_error& e) {
        emit_error("invariant_error", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 2;
    }
}
