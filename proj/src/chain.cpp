#include "delpezzo/chain.hpp"

#include <numeric>
#include <stdexcept>

namespace delpezzo {

std::string SlopeWord::str() const {
    std::string out = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ",";
        out += letters[i] == SlopeLetter::M ? "M" : "R";
    }
    return out + "]";
}

void apply_slope_letter(SlopeLetter l, long long& d, long long& r) {
    if (l == SlopeLetter::M) {
        r = -d - r;
        if (r == 0) throw std::domain_error("slope word: M applied at degree + rank = 0");
    } else {
        d = -d - 4 * r;
    }
}

namespace {

bool in_window(const Rat& nu, SlopeWindow target) {
    if (target == SlopeWindow::MinusTwoToMinusOne) return nu > Rat(1);
    return nu > Rat(1) && nu <= Rat(2);
}

}  // namespace

SlopeNormalization slope_normalize(long long d, long long r, SlopeWindow target) {
    if (r <= 0) throw std::invalid_argument("slope_normalize: rank must be positive");
    if (std::gcd(std::llabs(d), r) != 1) throw std::invalid_argument("slope_normalize: gcd(d, r) must be 1");
    if (d + 2 * r == 0) throw std::domain_error("slope_normalize: base slope -2");

    SlopeNormalization out;
    out.d = d;
    out.r = r;
    auto push = [&](SlopeLetter l) {
        apply_slope_letter(l, out.d, out.r);
        out.word.letters.push_back(l);
    };
    auto nu = [&] { return Rat(out.r, out.d + 2 * out.r); };

    // nu is a negative integer exactly when d + 2r = -1; the upward
    // translation would then pass through nu = -1 where M degenerates.
    if (d + 2 * r == -1) push(SlopeLetter::R);

    // |nu| <= r, so 2(|nu| + 2) letters suffice
    size_t guard = 2 * (size_t)(r + 4);
    while (!in_window(nu(), target)) {
        if (out.word.letters.size() > guard)
            throw std::logic_error("slope_normalize: no convergence");
        if (nu() <= Rat(1)) {          // translate up: [R, M]
            push(SlopeLetter::R);
            push(SlopeLetter::M);
        } else {                       // nu > 2 with the narrow window: [M, R]
            push(SlopeLetter::M);
            push(SlopeLetter::R);
        }
    }
    return out;
}

std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Base: return "base";
        case StepKind::SlopeM: return "slopeM";
        case StepKind::SlopeR: return "slopeR";
        case StepKind::Inductive: return "inductive";
    }
    return "?";
}

std::string DerivationChain::str() const {
    std::string out = "chain steps=" + std::to_string(steps.size()) + "\n";
    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        out += "  " + std::to_string(i) + ": " + step_kind_name(s.kind);
        if (s.kind == StepKind::SlopeM || s.kind == StepKind::SlopeR) {
            out += " parity=" + std::to_string(s.parity);
            long long dd = s.after.degree(), rr = s.after.rank;
            if (dd + 2 * rr != 0) out += " nu=" + Rat(rr, dd + 2 * rr).str();
        }
        if (s.payload) {
            out += " word=" + s.payload->weyl_word.str();
            out += " twist=" + s.payload->twist.str();
            out += " shift_parity=" + std::to_string(s.payload->shift_parity);
        }
        out += " -> " + s.after.str() + "\n";
    }
    return out;
}

namespace {

KClass base_class() { return KClass(4, 1, d_ab(-1, -1)); }

KClass sign_normalized(const KClass& v, int& parity) {
    if (v.rank > 0) {
        parity = 0;
        return v;
    }
    parity = 1;
    return KClass(v.k, -v.rank, -v.c1);
}

// The composite behind one inductive move, at the level of K-classes on the
// degree-1 surface: pullback, S, R, twist by -Q1, shift to positive rank.
// Input slope mu = d/r in [-2, -1); output slope -2 - 1/mu with rank -d and
// c1 = -pullback(c1) + (3d + r) Q1.
KClass inductive_bundle_stage(const KClass& v) {
    long long d = v.degree(), r = v.rank;
    KClass w = KClass(1, r, pullback(v.c1, 1));
    w = mutate(MutationKind::S, w);
    w = mutate(MutationKind::R, w);
    w = KClass(1, w.rank, w.c1 - anticanonical(1) * w.rank);   // twist by -Q1
    if (w.rank != d || w.degree() != -(2 * d + r))
        throw std::logic_error("inductive move: unexpected intermediate invariants");
    return KClass(1, -w.rank, -w.c1);
}

struct InductiveResult {
    KClass after;              // degree-4 class, rank -d, c1 = D_{d+r, d}
    InductivePayload payload;
};

InductiveResult inductive_step(const KClass& v) {
    long long d = v.degree(), r = v.rank;
    if (r <= 0 || !(Rat(-2) <= v.slope() && v.slope() < Rat(-1)))
        throw std::logic_error("inductive move: slope out of range");

    KClass stage = inductive_bundle_stage(v);
    long long rank2 = stage.rank;           // -d
    long long deg2 = stage.degree();        // 2d + r

    PicardClass q1 = anticanonical(1);
    PicardClass perp = stage.c1 - q1 * deg2;
    PicardClass target = pullback(d_ab(d + r, d), 1);
    PicardClass target_perp = target - q1 * deg2;

    EpsVector x = pic_to_eps(perp).scaled(Rat(1, rank2));
    EpsVector y = pic_to_eps(target_perp).scaled(Rat(1, rank2));
    AlcoveResult ax = alcove_reduce(x);
    AlcoveResult ay = alcove_reduce(y);
    if (ax.res != ay.res)
        throw std::logic_error("inductive move: alcove representatives disagree");

    InductivePayload payload;
    payload.weyl_word.letters = ax.word.letters;
    for (auto it = ay.word.letters.rbegin(); it != ay.word.letters.rend(); ++it)
        payload.weyl_word.letters.push_back(*it);
    payload.shift_parity = 1;

    PicardClass moved = replay_linear_pic(payload.weyl_word, perp);
    PicardClass diff = moved - target_perp;
    std::vector<long long> tw(9);
    for (int i = 0; i < 9; ++i) {
        if (diff.c[i] % rank2 != 0) throw std::logic_error("inductive move: twist not integral");
        tw[i] = diff.c[i] / rank2;
    }
    payload.twist = PicardClass(1, std::move(tw));

    InductiveResult out;
    out.payload = std::move(payload);
    out.after = KClass(4, rank2, d_ab(d + r, d));
    return out;
}

}  // namespace

DerivationChain construct_pair(long long d, long long r) {
    if (r <= 0) throw std::invalid_argument("construct_pair: rank must be positive");
    if (std::gcd(std::llabs(d), r) != 1) throw std::invalid_argument("construct_pair: gcd(d, r) must be 1");

    struct Level {
        SlopeWord word;
        long long wd, wr;   // windowed pair, positive rank
    };
    std::vector<Level> plan;
    long long cd = d, cr = r;
    while (!(cd == -2 && cr == 1)) {
        auto n = slope_normalize(cd, cr, SlopeWindow::MinusThreeHalvesToMinusOne);
        long long wd = n.d, wr = n.r;
        if (wr < 0) { wd = -wd; wr = -wr; }
        plan.push_back({n.word, wd, wr});
        cd = -wr;
        cr = wd + 2 * wr;
    }

    DerivationChain chain;
    KClass state = base_class();
    chain.steps.push_back({StepKind::Base, state, state, 0, std::nullopt});

    for (auto it = plan.rbegin(); it != plan.rend(); ++it) {
        auto ind = inductive_step(state);
        chain.steps.push_back({StepKind::Inductive, state, ind.after, 1, std::move(ind.payload)});
        state = ind.after;
        for (auto lt = it->word.letters.rbegin(); lt != it->word.letters.rend(); ++lt) {
            KClass raw = mutate(*lt == SlopeLetter::M ? MutationKind::M : MutationKind::R, state);
            int parity = 0;
            KClass next = sign_normalized(raw, parity);
            chain.steps.push_back({*lt == SlopeLetter::M ? StepKind::SlopeM : StepKind::SlopeR,
                                   state, next, parity, std::nullopt});
            state = next;
        }
    }
    return chain;
}

bool ChainReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string ChainReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.ok) return c.name;
    return "";
}

namespace {

struct Checker {
    ChainReport& report;
    void pass(const std::string& name, const std::string& detail = "") {
        report.checks.push_back({name, true, detail});
    }
    bool fail(const std::string& name, const std::string& detail) {
        report.checks.push_back({name, false, detail});
        return false;
    }
    bool require(bool cond, const std::string& name, const std::string& detail = "") {
        report.checks.push_back({name, cond, cond ? "" : detail});
        return cond;
    }
};

bool verify_state(Checker& ck, const KClass& v, const std::string& where) {
    if (!ck.require(v.rank > 0, where + ": positive rank", v.str())) return false;
    if (!ck.require(is_exceptional_consistent(v), where + ": exceptional consistency", v.str()))
        return false;
    long long g = std::gcd(std::llabs(v.rank), std::llabs(v.degree()));
    return ck.require(g == 1, where + ": gcd(rank, degree) = 1", v.str());
}

bool verify_inductive(Checker& ck, const ChainStep& s, const std::string& where) {
    if (!ck.require(s.payload.has_value(), where + ": payload present", "")) return false;
    const auto& p = *s.payload;
    const KClass& v = s.before;

    if (!ck.require(Rat(-2) <= v.slope() && v.slope() < Rat(-1), where + ": source slope in [-2,-1)",
                    v.slope().str()))
        return false;

    KClass stage = inductive_bundle_stage(v);
    if (!ck.require(p.shift_parity == 1, where + ": shift parity", std::to_string(p.shift_parity)))
        return false;
    if (!ck.require(p.weyl_word.valid(), where + ": Weyl word letters in 0..8", p.weyl_word.str()))
        return false;
    if (!ck.require(p.twist.k == 1 && degree_of(p.twist) == 0, where + ": twist in Q1-perp",
                    p.twist.str()))
        return false;

    long long deg2 = stage.degree();
    PicardClass q1 = anticanonical(1);
    PicardClass perp = stage.c1 - q1 * deg2;
    PicardClass moved = replay_linear_pic(p.weyl_word, perp);
    PicardClass final_c1 = q1 * deg2 + moved - p.twist * stage.rank;

    bool descends = final_c1.c[6] == 0 && final_c1.c[7] == 0 && final_c1.c[8] == 0;
    if (!ck.require(descends, where + ": descent coefficients vanish", final_c1.str())) return false;

    PicardClass descended(4, {final_c1.c[0], final_c1.c[1], final_c1.c[2], final_c1.c[3],
                              final_c1.c[4], final_c1.c[5]});
    if (!ck.require(s.after.k == 4 && s.after.rank == stage.rank && s.after.c1 == descended,
                    where + ": descended class matches", s.after.str()))
        return false;

    Rat expected = Rat(-2) - Rat(1) / v.slope();
    if (!ck.require(s.after.slope() == expected, where + ": slope law mu' = -2 - 1/mu",
                    s.after.slope().str() + " vs " + expected.str()))
        return false;
    return true;
}

}  // namespace

ChainReport verify_chain(const DerivationChain& chain) {
    ChainReport report;
    Checker ck{report};

    if (!ck.require(!chain.steps.empty(), "chain nonempty", "")) return report;
    const auto& first = chain.steps.front();
    ck.require(first.kind == StepKind::Base, "first step is base", step_kind_name(first.kind));
    ck.require(first.after == base_class(), "base class is rank 1, c1 = D_{-1,-1}",
               first.after.str());

    for (size_t i = 0; i + 1 < chain.steps.size(); ++i)
        if (!ck.require(chain.steps[i].after == chain.steps[i + 1].before,
                        "state chaining at step " + std::to_string(i + 1), ""))
            return report;

    for (size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& s = chain.steps[i];
        std::string where = "step " + std::to_string(i) + " (" + step_kind_name(s.kind) + ")";
        switch (s.kind) {
            case StepKind::Base:
                ck.require(s.before == s.after, where + ": no-op", "");
                break;
            case StepKind::SlopeM:
            case StepKind::SlopeR: {
                KClass raw;
                try {
                    raw = mutate(s.kind == StepKind::SlopeM ? MutationKind::M : MutationKind::R,
                                 s.before);
                } catch (const std::exception& e) {
                    ck.fail(where + ": transform applies", e.what());
                    return report;
                }
                KClass expect = s.parity ? KClass(raw.k, -raw.rank, -raw.c1) : raw;
                if (!ck.require(s.after == expect, where + ": transformation law",
                                s.after.str() + " vs " + expect.str()))
                    return report;
                break;
            }
            case StepKind::Inductive:
                if (!verify_inductive(ck, s, where)) return report;
                break;
        }
        if (!verify_state(ck, s.after, where)) return report;
    }

    const KClass& end = chain.endpoint();
    long long d = end.degree(), r = end.rank;
    ck.require(chi_exceptional(end) == 0, "endpoint chi = 0", std::to_string(chi_exceptional(end)));
    bool canon = d5_equivalent(end.c1, d_ab(d + r, -r));
    ck.require(canon, "endpoint c1 in W(D5) orbit of D_{d+r,-r}", end.c1.str());
    return report;
}

}  // namespace delpezzo
