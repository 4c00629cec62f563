// dpexc: exact-arithmetic calculator for exceptional pairs with the structure
// sheaf on del Pezzo surfaces: the degree-4 construction with its verifiable
// derivation chains, E8/D5 reductions, the sporadic classification, the
// quadratic-order feasibility tests for degrees 5..9, and the brute-force
// verifiers behind the finite computations.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "delpezzo/chain.hpp"
#include "delpezzo/oracle.hpp"
#include "delpezzo/quadratic.hpp"
#include "delpezzo/report.hpp"

using namespace delpezzo;

namespace {

Json pic_json(const PicardClass& x) {
    Json a = Json::array();
    for (auto v : x.c) a.push_back(v);
    return a;
}

Json rat_vec_json(const RatDivisor& x) {
    Json a = Json::array();
    for (const auto& v : x.c) a.push_back(v.str());
    return a;
}

Json eps_json(const EpsVector& x) {
    Json a = Json::array();
    for (int i = 0; i < 8; ++i) a.push_back(x.coord(i).str());
    return a;
}

Json word_json(const WeylWord& w) {
    Json a = Json::array();
    for (int l : w.letters) a.push_back(l);
    return a;
}

Json chain_json(const DerivationChain& chain) {
    Json steps = Json::array();
    for (const auto& s : chain.steps) {
        Json j = Json::object();
        j["kind"] = step_kind_name(s.kind);
        j["rank"] = s.after.rank;
        j["degree"] = s.after.degree();
        j["c1"] = pic_json(s.after.c1);
        if (s.kind == StepKind::SlopeM || s.kind == StepKind::SlopeR) {
            j["parity"] = s.parity;
            long long dd = s.after.degree(), rr = s.after.rank;
            if (dd + 2 * rr != 0) j["nu"] = Rat(rr, dd + 2 * rr).str();
        }
        if (s.payload) {
            j["weyl_word"] = word_json(s.payload->weyl_word);
            j["twist"] = pic_json(s.payload->twist);
            j["shift_parity"] = s.payload->shift_parity;
        }
        steps.push_back(std::move(j));
    }
    return steps;
}

Json feasibility_json(const Feasibility& f) {
    Json j = Json::object();
    j["verdict"] = feas_verdict_name(f.verdict);
    if (f.verdict == FeasVerdict::Feasible || f.verdict == FeasVerdict::SurfaceDependent) {
        j["base_rank"] = f.base.r;
        j["base_degree"] = f.base.d;
        j["base_provenance"] = f.base.provenance;
        j["reduction_word"] = reduction_word_str(f.word);
        j["reduction_steps"] = f.word.size();
    }
    if (!f.reason.empty()) j["reason"] = f.reason;
    return j;
}

Json oracle_json(const OracleReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j = Json::object();
        j["name"] = c.name;
        j["ok"] = c.ok;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    return checks;
}

struct Output {
    bool json = false;
    std::string out_path;

    int finish(Report& rep, const std::string& command, bool pass) {
        rep.command = command;
        rep.status = pass ? "pass" : "fail";
        std::string text = json ? rep.render_json() : rep.render_text();
        std::cout << text;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << text;
        }
        return pass ? 0 : 1;
    }
};

std::string argv_echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional pairs on del Pezzo surfaces, in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();   // accept --json / --out after the subcommand too

    Output output;
    app.add_flag("--json", output.json, "structured JSON output");
    app.add_option("--out", output.out_path, "also write the report to a file");

    // pair
    long long pd = 0, pr = 1;
    bool show_chain = false;
    auto* pair_cmd = app.add_subcommand("pair", "construct and verify the degree-4 pair for (d, r)");
    pair_cmd->add_option("-d", pd, "degree")->required();
    pair_cmd->add_option("-r", pr, "rank (positive)")->required();
    pair_cmd->add_flag("--show-chain", show_chain, "include every chain step");

    // classify
    int ck = 5;
    long long cd = 0, cr = 1;
    std::string surface;
    auto* classify_cmd = app.add_subcommand("classify", "slope feasibility on degrees 5..9");
    classify_cmd->add_option("-k", ck, "surface degree 5..9")->required();
    classify_cmd->add_option("-d", cd, "degree")->required();
    classify_cmd->add_option("-r", cr, "rank (positive)")->required();
    classify_cmd->add_option("--surface", surface, "degree-8 model: f1 | p1p1")
        ->check(CLI::IsMember({"f1", "p1p1"}));

    // reduce
    std::string eps_arg, mode = "chamber";
    auto* reduce_cmd = app.add_subcommand("reduce", "Weyl reductions of an epsilon-coordinate vector");
    reduce_cmd->add_option("--eps", eps_arg, "8 rationals, space or comma separated")->required();
    reduce_cmd->add_option("--mode", mode, "chamber | alcove | d5 | voronoi")
        ->check(CLI::IsMember({"chamber", "alcove", "d5", "voronoi"}));

    // orbit
    long long oa = 1, ob = 0;
    auto* orbit_cmd = app.add_subcommand("orbit", "W(D5)-orbit identities for one (a, b)");
    orbit_cmd->add_option("-a", oa)->required();
    orbit_cmd->add_option("-b", ob)->required();

    // theoremB
    long long td = 0, tr = 1;
    auto* theoremb_cmd = app.add_subcommand("theoremB", "feasible degrees and maximal dimension");
    theoremb_cmd->add_option("-d", td, "degree")->required();
    theoremb_cmd->add_option("-r", tr, "rank (positive)")->required();

    // verify
    std::string which = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force verifier suites");
    verify_cmd->add_option("suite", which, "all | unit-lemma | alcove-lemma | worbit | structural")
        ->check(CLI::IsMember({"all", "unit-lemma", "alcove-lemma", "worbit", "structural"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    Report rep;
    bool pass = true;
    std::string command = argv_echo(argc, argv);

    try {
        if (pair_cmd->parsed()) {
            DerivationChain chain = construct_pair(pd, pr);
            ChainReport check = verify_chain(chain);
            const KClass& end = chain.endpoint();
            auto canon = d5_canonical_form(end.c1);
            rep.payload["surface_degree"] = end.k;
            rep.payload["basis"] = "s f e1 e2 e3 e4";
            rep.payload["rank"] = end.rank;
            rep.payload["degree"] = end.degree();
            rep.payload["c1"] = pic_json(end.c1);
            rep.payload["chi"] = chi_exceptional(end);
            rep.payload["slope"] = end.slope().str();
            rep.payload["canonical_rep"] = rat_vec_json(canon.rep);
            rep.payload["chain_length"] = chain.steps.size();
            rep.payload["checks_run"] = check.checks.size();
            pass = check.ok();
            if (!pass) rep.payload["first_failure"] = check.first_failure();
            if (show_chain) rep.payload["chain"] = chain_json(chain);
        } else if (classify_cmd->parsed()) {
            SurfaceVariant variant = SurfaceVariant::Unspecified;
            if (surface == "f1") variant = SurfaceVariant::F1;
            if (surface == "p1p1") variant = SurfaceVariant::P1P1;
            OrderElement xi = make_xi(cd, cr, ck);
            Feasibility f = classify_slope(ck, cd, cr, variant);
            rep.payload["k"] = ck;
            rep.payload["d"] = cd;
            rep.payload["r"] = cr;
            rep.payload["norm"] = xi.norm();
            rep.payload["result"] = feasibility_json(f);
            pass = f.verdict != FeasVerdict::Infeasible;
        } else if (reduce_cmd->parsed()) {
            std::array<Rat, 8> coords;
            {
                std::string cleaned = eps_arg;
                for (auto& ch : cleaned)
                    if (ch == ',') ch = ' ';
                std::istringstream in(cleaned);
                std::string tok;
                int i = 0;
                while (in >> tok) {
                    if (i >= 8) throw std::invalid_argument("reduce: expected exactly 8 coordinates");
                    coords[i++] = parse_rat(tok);
                }
                if (i != 8) throw std::invalid_argument("reduce: expected exactly 8 coordinates");
            }
            EpsVector x = EpsVector::from_rats(coords);
            rep.payload["input"] = eps_json(x);
            rep.payload["mode"] = mode;
            if (mode == "chamber") {
                auto res = chamber_reduce(x);
                rep.payload["word"] = word_json(res.word);
                rep.payload["dominant"] = eps_json(res.dom);
                rep.payload["norm"] = inner(x, x).str();
            } else if (mode == "d5") {
                auto res = d5_reduce(x);
                rep.payload["word"] = word_json(res.word);
                rep.payload["result"] = eps_json(res.res);
            } else if (mode == "alcove") {
                auto res = alcove_reduce(x);
                rep.payload["word"] = word_json(res.word);
                rep.payload["shift"] = eps_json(res.shift);
                rep.payload["result"] = eps_json(res.res);
            } else {
                rep.payload["contains"] = voronoi_contains(x);
            }
        } else if (orbit_cmd->parsed()) {
            PicardClass dab = d_ab(oa, ob);
            bool i1 = d5_equivalent(dab, d_ab(ob, oa));
            bool i2 = d5_equivalent(dab, -d_ab(-oa, -ob));
            bool i3 = d5_equivalent(anticanonical(4) * oa - dab, d_ab(oa, 2 * oa - ob));
            rep.payload["D_ab"] = pic_json(dab);
            rep.payload["swap_identity"] = i1;
            rep.payload["negation_identity"] = i2;
            rep.payload["aQ_minus_identity"] = i3;
            pass = i1 && i2 && i3;
        } else if (theoremb_cmd->parsed()) {
            TheoremBReport r = theorem_b_report(td, tr);
            if (r.outside_hypotheses) {
                rep.payload["result"] = "OutsideHypotheses";
                rep.payload["reason"] = "requires d > r + 1";
            } else {
                Json ks = Json::array();
                for (int k : r.feasible_k) ks.push_back(k);
                rep.payload["feasible_k"] = ks;
                rep.payload["max_dimension"] = r.max_dimension;
                Json entries = Json::array();
                for (const auto& e : r.entries) {
                    Json j = Json::object();
                    j["k"] = e.k;
                    j["value"] = e.value;
                    j["in_interval"] = e.in_interval;
                    j["feasible"] = e.feasible;
                    j["detail"] = feasibility_json(e.detail);
                    entries.push_back(std::move(j));
                }
                rep.payload["entries"] = entries;
            }
        } else if (verify_cmd->parsed()) {
            OracleReport total;
            if (which == "all" || which == "unit-lemma") {
                auto units = enum_unit_vectors();
                bool ok = units.size() == 3;
                Json arr = Json::array();
                for (const auto& u : units) arr.push_back(u.str());
                rep.payload["unit_vectors"] = arr;
                total.checks.push_back({"unit-lemma: exactly three unit vectors", ok,
                                        std::to_string(units.size()) + " found"});
            }
            if (which == "all" || which == "alcove-lemma") {
                static const std::pair<long long, long long> cases[] = {
                    {1, 7}, {1, 8}, {1, 9}, {1, 10}, {1, 11}, {2, 15}, {2, 17}, {3, 23}};
                Json arr = Json::array();
                for (auto [dd, rr] : cases) {
                    auto sols = enum_alcove_solutions(dd, rr);
                    bool ok = true;
                    long long extras = 0;
                    for (const auto& s : sols) {
                        if (s.m == s.d) continue;
                        ++extras;
                        if (!(dd == 2 && rr == 15 && Rat(s.m, s.r) == Rat(1, 3))) ok = false;
                    }
                    if (dd == 2 && rr == 15 && extras != 1) ok = false;
                    if (!(dd == 2 && rr == 15) && extras != 0) ok = false;
                    Json j = Json::object();
                    j["d"] = dd;
                    j["r"] = rr;
                    j["solutions"] = sols.size();
                    j["off_diagonal"] = extras;
                    arr.push_back(std::move(j));
                    total.checks.push_back({"alcove-lemma (" + std::to_string(dd) + "," +
                                                std::to_string(rr) + ")",
                                            ok, std::to_string(sols.size()) + " solutions"});
                }
                rep.payload["alcove_cases"] = arr;
            }
            if (which == "all" || which == "worbit") {
                auto r = check_worbit_identities(8);
                for (auto& c : r.checks) total.checks.push_back(std::move(c));
            }
            if (which == "all" || which == "structural") {
                auto r = check_structural_identities();
                for (auto& c : r.checks) total.checks.push_back(std::move(c));
            }
            // The footnote divergence between sources makes the ordering in
            // use worth printing with every verifier run.
            rep.payload["simple_root_ordering"] =
                "Bourbaki alpha_1..alpha_8; alpha_4 is the branch node; alpha~ = e7+e8";
            rep.payload["checks"] = oracle_json(total);
            pass = total.ok();
            if (!pass) rep.payload["first_failure"] = total.first_failure();
        }
    } catch (const std::exception& e) {
        rep.payload["error"] = e.what();
        output.finish(rep, command, false);
        return 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    int code = output.finish(rep, command, pass);
    std::cerr << "elapsed_ms: " << elapsed << "\n";
    return code;
}
