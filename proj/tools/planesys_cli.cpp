// Command-line interface for the plane-system library: invariants, reduction,
// dimensions, positivity tests, classification, enumeration, and the
// finite-field interpolation oracle.
//
// Exit codes: 0 success; 1 bad input or out-of-domain request (one-line
// diagnostic on stderr); 2 verification mismatch (a recomputation disagreed
// with a frozen expectation or an independent method).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "planesys/adjoint.hpp"
#include "planesys/classify.hpp"
#include "planesys/cremona.hpp"
#include "planesys/linear_system.hpp"
#include "planesys/neg_curves.hpp"
#include "planesys/oracle.hpp"
#include "planesys/tables.hpp"

using namespace planesys;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMismatch = 2;

std::string g_prime_text(const AdjointProfile& p) {
    return p.composed_with_pencil ? std::string("-") : std::to_string(p.g_prime);
}

json system_json(const LinearSystem& L) {
    LinearSystem N = normalize(L);
    json j;
    j["literal"] = to_literal(L);
    j["n"] = N.n();
    j["degree"] = N.d;
    j["mults"] = N.m;
    return j;
}

std::string csv_row(const LinearSystem& L) {
    LinearSystem N = normalize(L);
    AdjointProfile p = adjoint_profile(N);
    std::ostringstream os;
    // the literal contains commas, so the field is always quoted
    os << '"' << to_literal(N) << "\"," << N.n() << "," << shgh_dim(N) << ","
       << self_intersection(N) << "," << genus(N) << "," << g_prime_text(p)
       << "," << (p.hyperelliptic ? "yes" : "no") << ","
       << classify_mm(N).family;
    return os.str();
}

constexpr const char* kCsvHeader = "literal,n,r,c2,g,g_prime,hyperelliptic,family";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants, reduction, classification, and enumeration of "
                 "plane linear systems with assigned base multiplicities"};
    app.require_subcommand(1);
    app.fallthrough();

    bool opt_json = false;
    long long opt_deg_max = 30;
    unsigned long long opt_seed = 42;
    std::string opt_out;
    app.add_flag("--json", opt_json, "emit JSON instead of text");
    app.add_option("--deg-max", opt_deg_max, "degree cap for enumerations (default 30)");
    app.add_option("--seed", opt_seed, "seed for randomized point choices (default 42)");
    app.add_option("--out", opt_out, "write output to this file instead of stdout");

    std::string literal;
    bool flag_trace = false, flag_chain = false, flag_count = false, flag_list = false;
    int arg_n = 0;
    long long arg_r = 0, arg_dmax = 6, arg_c2max = 5, arg_g = 2;
    long long arg_prime = 2147483647;
    int arg_trials = 3;

    CLI::App* cmd_info = app.add_subcommand("info", "numeric invariants of a system");
    cmd_info->add_option("literal", literal)->required();

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "degree-lowering reduction to a standard form");
    cmd_reduce->add_option("literal", literal)->required();
    cmd_reduce->add_flag("--trace", flag_trace, "print every step");

    CLI::App* cmd_dim = app.add_subcommand("dim", "dimension of the system");
    cmd_dim->add_option("literal", literal)->required();

    CLI::App* cmd_coh = app.add_subcommand("cohomology", "h0, h1, h2 of the associated class");
    cmd_coh->add_option("literal", literal)->required();

    CLI::App* cmd_nef = app.add_subcommand("nef", "does the class meet every curve non-negatively");
    cmd_nef->add_option("literal", literal)->required();

    CLI::App* cmd_ample = app.add_subcommand("ample", "does the class meet every curve positively");
    cmd_ample->add_option("literal", literal)->required();

    CLI::App* cmd_neg = app.add_subcommand("negcurves", "exceptional classes up to a degree cap");
    cmd_neg->add_option("--n", arg_n, "number of points")->required();
    cmd_neg->add_option("--dmax", arg_dmax, "degree cap (default 6)");
    cmd_neg->add_flag("--count", flag_count, "print counts only");
    cmd_neg->add_flag("--list", flag_list, "print one class per line (default)");

    CLI::App* cmd_zar = app.add_subcommand("zariski", "positive part and contracted excess");
    cmd_zar->add_option("literal", literal)->required();

    CLI::App* cmd_adj = app.add_subcommand("adjoint", "adjoint-chain profile of an irreducible model");
    cmd_adj->add_option("literal", literal)->required();
    cmd_adj->add_flag("--chain", flag_chain, "print every chain level");

    CLI::App* cmd_cls = app.add_subcommand("classify", "normal-form family of an irreducible model");
    cmd_cls->add_option("literal", literal)->required();

    CLI::App* cmd_min = app.add_subcommand("min-c2", "minimal self-intersection for given n and r");
    cmd_min->add_option("--n", arg_n, "number of points")->required();
    cmd_min->add_option("--r", arg_r, "dimension")->required();

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "ample models with bounded self-intersection");
    cmd_enum->add_option("--n", arg_n, "number of points")->required();
    cmd_enum->add_option("--r", arg_r, "dimension")->required();
    cmd_enum->add_option("--c2max", arg_c2max, "self-intersection cap (default 5)");

    CLI::App* cmd_gen = app.add_subcommand("genus-catalog", "ample models of a fixed genus");
    cmd_gen->add_option("--g", arg_g, "genus (default 2)");

    CLI::App* cmd_gap = app.add_subcommand("gap", "is self-intersection minimum+1 attained");
    cmd_gap->add_option("--n", arg_n, "number of points")->required();
    cmd_gap->add_option("--r", arg_r, "dimension")->required();

    CLI::App* cmd_ver = app.add_subcommand("verify-tables", "recompute the frozen classification tables");

    CLI::App* cmd_ora = app.add_subcommand("oracle", "interpolation dimension over a prime field");
    cmd_ora->add_option("literal", literal)->required();
    cmd_ora->add_option("--prime", arg_prime, "field characteristic (default 2^31-1)");
    cmd_ora->add_option("--trials", arg_trials, "independent point samples (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::ostringstream out;
    int exit_code = kExitOk;

    try {
        if (cmd_info->parsed()) {
            LinearSystem L = parse_literal(literal);
            if (opt_json) {
                json j = system_json(L);
                j["c2"] = self_intersection(L);
                j["genus"] = genus(L);
                j["dim"] = shgh_dim(L);
                j["virtual_dim"] = virtual_dim(L);
                j["k_pairing"] = k_pairing(L);
                j["nef"] = is_nef(L);
                j["ample"] = is_ample(L);
                out << j.dump(2) << "\n";
            } else {
                out << "literal: " << to_literal(L) << "\n"
                    << "n=" << normalize(L).n() << " degree=" << L.d
                    << " c2=" << self_intersection(L) << " g=" << genus(L)
                    << " k=" << k_pairing(L) << " vdim=" << virtual_dim(L)
                    << " dim=" << shgh_dim(L) << "\n";
            }
        } else if (cmd_reduce->parsed()) {
            LinearSystem L = parse_literal(literal);
            ReductionTrace tr = cremona_reduce(L);
            if (opt_json) {
                json j;
                j["initial"] = to_literal_raw(tr.initial);
                j["final"] = to_literal_raw(tr.final);
                j["canonical"] = to_literal(canonical_form(L));
                j["steps"] = tr.steps.size();
                out << j.dump(2) << "\n";
            } else {
                if (flag_trace) {
                    LinearSystem cur = tr.initial;
                    out << to_literal_raw(cur) << "\n";
                    for (const ReduceStep& st : tr.steps) {
                        LinearSystem next = cur;
                        for (int i = 0; i < next.n(); ++i) next.m[i] = cur.m[st.perm[i]];
                        if (st.transformed) next = quadratic_transform(next, 0, 1, 2);
                        cur = next;
                        out << (st.transformed ? "transform -> " : "sort      -> ")
                            << to_literal_raw(cur) << "\n";
                    }
                }
                out << "final: " << to_literal_raw(tr.final) << "\n"
                    << "canonical: " << to_literal(canonical_form(L)) << "\n";
            }
        } else if (cmd_dim->parsed()) {
            LinearSystem L = parse_literal(literal);
            if (opt_json) {
                json j = system_json(L);
                j["dim"] = shgh_dim(L);
                out << j.dump(2) << "\n";
            } else {
                out << shgh_dim(L) << "\n";
            }
        } else if (cmd_coh->parsed()) {
            LinearSystem L = parse_literal(literal);
            CohomologyTriple t = cohomology(L);
            if (opt_json) {
                json j = system_json(L);
                j["h0"] = t.h0; j["h1"] = t.h1; j["h2"] = t.h2; j["dim"] = t.dim();
                out << j.dump(2) << "\n";
            } else {
                out << "h0=" << t.h0 << " h1=" << t.h1 << " h2=" << t.h2
                    << " dim=" << t.dim() << "\n";
            }
        } else if (cmd_nef->parsed() || cmd_ample->parsed()) {
            LinearSystem L = parse_literal(literal);
            bool nef = is_nef(L);
            bool ample = is_ample(L);
            bool asked_ample = cmd_ample->parsed();
            if (opt_json) {
                json j = system_json(L);
                j["nef"] = nef; j["ample"] = ample;
                out << j.dump(2) << "\n";
            } else {
                out << (asked_ample ? (ample ? "ample" : "not ample")
                                    : (nef ? "nef" : "not nef")) << "\n";
            }
        } else if (cmd_neg->parsed()) {
            std::vector<LinearSystem> cls = enumerate_minus_one_classes(arg_n, arg_dmax);
            unsigned long long weighted = 0;
            for (const LinearSystem& c : cls) weighted += permutation_count(c);
            if (opt_json) {
                json j;
                j["n"] = arg_n; j["dmax"] = arg_dmax;
                j["count"] = cls.size(); j["weighted_count"] = weighted;
                if (!flag_count) {
                    j["classes"] = json::array();
                    for (const LinearSystem& c : cls) j["classes"].push_back(to_literal_raw(c));
                }
                out << j.dump(2) << "\n";
            } else if (flag_count) {
                out << "count=" << cls.size() << " weighted=" << weighted << "\n";
            } else {
                for (const LinearSystem& c : cls) out << to_literal_raw(c) << "\n";
                out << "count=" << cls.size() << " weighted=" << weighted << "\n";
            }
        } else if (cmd_zar->parsed()) {
            LinearSystem L = parse_literal(literal);
            ZariskiDecomposition z = zariski_decompose(L);
            if (opt_json) {
                json j = system_json(L);
                j["positive_part"] = to_literal_raw(z.P);
                j["negative_part"] = json::array();
                for (const auto& [c, E] : z.negative_part)
                    j["negative_part"].push_back({{"coefficient", c},
                                                  {"class", to_literal_raw(E)}});
                out << j.dump(2) << "\n";
            } else {
                out << "P = " << to_literal_raw(z.P) << "\n";
                for (const auto& [c, E] : z.negative_part)
                    out << "  + " << c << " * " << to_literal_raw(E) << "\n";
            }
        } else if (cmd_adj->parsed()) {
            LinearSystem L = parse_literal(literal);
            AdjointProfile p = adjoint_profile(L);
            if (opt_json) {
                json j = system_json(L);
                j["genus"] = p.g; j["m"] = p.m; j["alpha"] = p.alpha;
                j["g_prime"] = g_prime_text(p);
                j["hyperelliptic"] = p.hyperelliptic;
                j["composed_with_pencil"] = p.composed_with_pencil;
                if (p.pencil) j["pencil"] = to_literal(*p.pencil);
                if (flag_chain) {
                    j["chain"] = json::array();
                    for (const AdjointChainEntry& e : p.chain)
                        j["chain"].push_back({{"t", e.t}, {"dim", e.dim}});
                }
                out << j.dump(2) << "\n";
            } else {
                out << "g=" << p.g << " m=" << p.m << " alpha=" << p.alpha
                    << " g'=" << g_prime_text(p)
                    << " hyperelliptic=" << (p.hyperelliptic ? "yes" : "no");
                if (p.pencil) out << " pencil=" << to_literal(*p.pencil);
                out << "\n";
                if (flag_chain)
                    for (const AdjointChainEntry& e : p.chain)
                        out << "  t=" << e.t << " dim=" << e.dim << " "
                            << to_literal(adjoint(normalize(L), e.t)) << "\n";
            }
        } else if (cmd_cls->parsed()) {
            LinearSystem L = parse_literal(literal);
            NormalFormMatch m = classify_mm(L);
            AdjointProfile p = adjoint_profile(L);
            if (opt_json) {
                json j = system_json(L);
                j["classification"] = m.family;
                j["m"] = m.m; j["alpha"] = m.alpha; j["e"] = m.e;
                j["g_prime"] = g_prime_text(p);
                j["hyperelliptic"] = p.hyperelliptic;
                out << j.dump(2) << "\n";
            } else {
                out << "family=" << m.family << " m=" << m.m
                    << " alpha=" << m.alpha << " e=" << m.e
                    << " hyperelliptic=" << (p.hyperelliptic ? "yes" : "no")
                    << " g'=" << g_prime_text(p) << "\n";
            }
        } else if (cmd_min->parsed()) {
            MinC2Report rep = min_c2(arg_n, arg_r);
            if (opt_json) {
                json j;
                j["n"] = rep.n; j["r"] = rep.r;
                j["overall_min"] = rep.overall_min;
                j["nonhyper_min"] = rep.nonhyper_min;
                if (rep.hyper_min) j["hyper_min"] = *rep.hyper_min;
                j["achievers"] = json::array();
                for (const Achiever& a : rep.achievers)
                    j["achievers"].push_back({{"literal", to_literal(a.system)},
                                              {"family", a.family}});
                out << j.dump(2) << "\n";
            } else {
                out << "min c2 = " << rep.overall_min << "\n";
                for (const Achiever& a : rep.achievers)
                    out << "  " << to_literal(a.system) << "  [" << a.family << "]\n";
            }
        } else if (cmd_enum->parsed()) {
            std::vector<LinearSystem> E =
                enumerate_systems(arg_n, arg_r, arg_c2max, opt_deg_max);
            if (opt_json) {
                json j = json::array();
                for (const LinearSystem& L : E) {
                    AdjointProfile p = adjoint_profile(L);
                    j.push_back({{"literal", to_literal(L)},
                                 {"n", L.n()},
                                 {"r", arg_r},
                                 {"c2", self_intersection(L)},
                                 {"genus", genus(L)},
                                 {"g_prime", g_prime_text(p)},
                                 {"hyperelliptic", p.hyperelliptic},
                                 {"classification", classify_mm(L).family}});
                }
                out << j.dump(2) << "\n";
            } else {
                out << kCsvHeader << "\n";
                for (const LinearSystem& L : E) out << csv_row(L) << "\n";
            }
        } else if (cmd_gen->parsed()) {
            GenusCatalog cat = enumerate_genus(arg_g, opt_deg_max);
            if (opt_json) {
                json j;
                j["g"] = cat.g; j["deg_max"] = cat.deg_max;
                j["complete"] = cat.complete;
                j["systems"] = json::array();
                for (const LinearSystem& L : cat.systems)
                    j["systems"].push_back(to_literal(L));
                out << j.dump(2) << "\n";
            } else {
                out << kCsvHeader << "\n";
                for (const LinearSystem& L : cat.systems) out << csv_row(L) << "\n";
                out << "# complete=" << (cat.complete ? "yes" : "no")
                    << " deg_max=" << cat.deg_max << "\n";
            }
        } else if (cmd_gap->parsed()) {
            GapReport g = gap_analysis(arg_n, arg_r, opt_deg_max);
            if (opt_json) {
                json j;
                j["n"] = g.n; j["r"] = g.r;
                j["overall_min"] = g.overall_min; j["target"] = g.target;
                j["attained"] = g.attained;
                j["witnesses"] = json::array();
                for (const LinearSystem& w : g.witnesses)
                    j["witnesses"].push_back(to_literal(w));
                out << j.dump(2) << "\n";
            } else {
                out << "min=" << g.overall_min << " target=" << g.target
                    << " attained=" << (g.attained ? "yes" : "no") << "\n";
                for (const LinearSystem& w : g.witnesses)
                    out << "  " << to_literal(w) << "\n";
            }
        } else if (cmd_ver->parsed()) {
            TableVerification v = verify_tables(opt_deg_max);
            if (opt_json) {
                json j;
                j["minimal_ok"] = v.minimal_ok;
                j["catalog_ok"] = v.catalog_ok;
                j["cells_scanned"] = v.cells_scanned;
                j["mismatches"] = v.mismatches;
                out << j.dump(2) << "\n";
            } else {
                out << "minimal-c2-table " << (v.minimal_ok ? "OK" : "MISMATCH") << "\n";
                out << "c2-le-5-catalog " << (v.catalog_ok ? "OK" : "MISMATCH") << "\n";
                for (const std::string& m : v.mismatches) out << "  " << m << "\n";
            }
            if (!v.minimal_ok || !v.catalog_ok) exit_code = kExitMismatch;
        } else if (cmd_ora->parsed()) {
            LinearSystem L = parse_literal(literal);
            OracleConfig cfg;
            cfg.prime = arg_prime;
            cfg.seed = opt_seed;
            cfg.trials = arg_trials;
            long long got = oracle_dim(L, cfg);
            long long expect = shgh_dim(L);
            bool agree = got == expect;
            if (opt_json) {
                json j = system_json(L);
                j["oracle_dim"] = got;
                j["dim"] = expect;
                j["agree"] = agree;
                out << j.dump(2) << "\n";
            } else {
                out << "oracle=" << got << " expected=" << expect
                    << (agree ? " (agree)" : " (MISMATCH)") << "\n";
            }
            if (!agree) exit_code = kExitMismatch;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitDomain;
    }

    if (!opt_out.empty()) {
        std::ofstream f(opt_out);
        if (!f) {
            std::cerr << "cannot open output file: " << opt_out << "\n";
            return kExitDomain;
        }
        f << out.str();
    } else {
        std::cout << out.str();
    }
    return exit_code;
}
