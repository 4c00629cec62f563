#include "delpezzo/quadratic.hpp"

#include <numeric>
#include <stdexcept>

namespace delpezzo {

namespace {

void check_k(int k) {
    if (k < 5 || k > 9) throw std::invalid_argument("quadratic order degree must be in 5..9");
}

// Sign of A + B*sqrt(D) for D > 0, exactly.
int quad_sign(long long A, long long B, long long D) {
    if (B == 0) return A > 0 ? 1 : A < 0 ? -1 : 0;
    if (A == 0) return B > 0 ? 1 : -1;
    if (A > 0 && B > 0) return 1;
    if (A < 0 && B < 0) return -1;
    __int128 a2 = (__int128)A * A;
    __int128 b2d = (__int128)B * B * D;
    if (A > 0) return a2 > b2d ? 1 : a2 < b2d ? -1 : 0;
    return b2d > a2 ? 1 : b2d < a2 ? -1 : 0;
}

}  // namespace

OrderElement::OrderElement(int kk, long long xx, long long yy) : k(kk), x(xx), y(yy) { check_k(k); }

OrderElement OrderElement::operator*(const OrderElement& o) const {
    if (k != o.k) throw std::invalid_argument("OrderElement: mixed orders");
    // (x1 + y1 w)(x2 + y2 w) with w^2 = -k w - k.
    long long xx = x * o.x - (long long)k * y * o.y;
    long long yy = x * o.y + y * o.x - (long long)k * y * o.y;
    return OrderElement(k, xx, yy);
}

int OrderElement::real_sign() const {
    // value = (2x - ky + y sqrt(k(k-4))) / 2
    return quad_sign(2 * x - (long long)k * y, y, (long long)k * (k - 4));
}

int OrderElement::compare_real(const OrderElement& a, const OrderElement& b) {
    if (a.k != b.k) throw std::invalid_argument("compare_real: mixed orders");
    return quad_sign(2 * (a.x - b.x) - (long long)a.k * (a.y - b.y), a.y - b.y,
                     (long long)a.k * (a.k - 4));
}

std::string OrderElement::str() const {
    return std::to_string(x) + (y >= 0 ? "+" : "") + std::to_string(y) + "w" + std::to_string(k);
}

OrderElement make_xi(long long d, long long r, int k) { return OrderElement(k, -d, r); }

OrderElement unit_of(int k) { return OrderElement(k, k - 1, 1); }

OrderElement unit_inverse_of(int k) { return OrderElement(k, -1, -1); }

OrderElement apply_reduction_letter(ReductionLetter l, const OrderElement& a) {
    switch (l) {
        case ReductionLetter::N: return -a;
        case ReductionLetter::C: return -a.conj();
        case ReductionLetter::U: return unit_of(a.k) * a;
        case ReductionLetter::V: return unit_inverse_of(a.k) * a;
    }
    throw std::logic_error("bad reduction letter");
}

std::string reduction_word_str(const std::vector<ReductionLetter>& w) {
    std::string out;
    for (auto l : w) out += "NCUV"[(int)l];
    return out;
}

std::string feas_verdict_name(FeasVerdict v) {
    switch (v) {
        case FeasVerdict::Feasible: return "Feasible";
        case FeasVerdict::Infeasible: return "Infeasible";
        case FeasVerdict::SurfaceDependent: return "SurfaceDependent";
        case FeasVerdict::OutOfInterval: return "OutOfInterval";
    }
    return "?";
}

const std::vector<long long>& realizable_norms(int k) {
    check_k(k);
    static const std::vector<long long> table[5] = {
        {-5, -1},         // k = 5
        {-3, -2},         // k = 6
        {-5, -3},         // k = 7
        {-8, -7, -4},     // k = 8
        {-9},             // k = 9
    };
    return table[k - 5];
}

const std::vector<BaseTag>& base_tags(int k) {
    check_k(k);
    static const std::vector<BaseTag> table[5] = {
        {{1, -2, "pullback of O(-1,0) from the quadric"},
         {2, -5, "restriction of the universal subbundle of G(2,5)"}},
        {{1, -2, "pullback from degree 7"}, {1, -3, "pullback from degree 7"}},
        {{1, -2, "pullback of O(-f) from F1"}, {1, -3, "pullback of O(-s-f) from F1"}},
        {{1, -2, "O(-1,0) resp. O(-f)"}, {1, -3, "O(-s-f) on F1"}, {1, -4, "O(-1,-1) resp. O(-s-2f)"}},
        {{1, -6, "shift of O(-2) on the plane"}},
    };
    return table[k - 5];
}

namespace {

struct Windowed {
    OrderElement rep;
    std::vector<ReductionLetter> word;
};

// Canonical representative of {+- u^m a}: real embedding made positive, then
// scaled by u^{+-1} into [1, u).
Windowed window(OrderElement a, int step_cap = 400) {
    Windowed out{a, {}};
    auto push = [&](ReductionLetter l) {
        out.rep = apply_reduction_letter(l, out.rep);
        out.word.push_back(l);
        if ((int)out.word.size() > step_cap) throw std::logic_error("unit reduction: no convergence");
    };
    if (out.rep.real_sign() < 0) push(ReductionLetter::N);
    OrderElement one(a.k, 1, 0);
    OrderElement u = unit_of(a.k);
    while (OrderElement::compare_real(out.rep, one) < 0) push(ReductionLetter::U);
    while (OrderElement::compare_real(out.rep, u) >= 0) push(ReductionLetter::V);
    return out;
}

ReductionLetter inverse_letter(ReductionLetter l) {
    switch (l) {
        case ReductionLetter::N: return ReductionLetter::N;
        case ReductionLetter::C: return ReductionLetter::C;
        case ReductionLetter::U: return ReductionLetter::V;
        case ReductionLetter::V: return ReductionLetter::U;
    }
    throw std::logic_error("bad letter");
}

}  // namespace

Feasibility reduce_to_base(const OrderElement& a) {
    long long n = a.norm();
    if (n >= 0) throw std::invalid_argument("reduce_to_base: norm must be negative");
    int k = a.k;
    Feasibility out;
    if (n < -k) {
        out.verdict = FeasVerdict::Infeasible;
        out.reason = "norm " + std::to_string(n) + " below -k";
        return out;
    }
    const auto& realizable = realizable_norms(k);
    bool known = false;
    for (long long v : realizable) known = known || v == n;
    if (!known) {
        out.verdict = FeasVerdict::Infeasible;
        out.reason = "norm " + std::to_string(n) + " not realizable for k=" + std::to_string(k);
        return out;
    }

    Windowed wa = window(a);
    for (const auto& tag : base_tags(k)) {
        OrderElement b = make_xi(tag.d, tag.r, k);
        if (b.norm() != n) continue;
        // Two seeds per base: the base itself and its -conj partner.
        for (int use_conj = 0; use_conj < 2; ++use_conj) {
            OrderElement seed = use_conj ? apply_reduction_letter(ReductionLetter::C, b) : b;
            Windowed wb = window(seed);
            if (wa.rep != wb.rep) continue;
            out.verdict = FeasVerdict::Feasible;
            out.base = tag;
            out.word = wa.word;
            for (auto it = wb.word.rbegin(); it != wb.word.rend(); ++it)
                out.word.push_back(inverse_letter(*it));
            if (use_conj) out.word.push_back(ReductionLetter::C);
            return out;
        }
    }
    out.verdict = FeasVerdict::Infeasible;
    out.reason = "no base reduction found for norm " + std::to_string(n);
    return out;
}

Feasibility classify_slope(int k, long long d, long long r, SurfaceVariant variant) {
    check_k(k);
    if (r <= 0) throw std::invalid_argument("classify_slope: rank must be positive");
    if (std::gcd(std::llabs(d), r) != 1) throw std::invalid_argument("classify_slope: gcd(d, r) must be 1");

    OrderElement xi = make_xi(d, r, k);
    long long n = xi.norm();
    Feasibility out;
    if (n >= 0) {
        out.verdict = FeasVerdict::OutOfInterval;
        out.reason = "norm " + std::to_string(n) + " outside [-k, -1]; no claim made";
        return out;
    }
    if (n < -k) {
        out.verdict = FeasVerdict::Infeasible;
        out.reason = "norm " + std::to_string(n) + " below -" + std::to_string(k);
        return out;
    }
    if (k == 9 && n == -9 && d % 3 != 0)
        throw std::logic_error("norm -9 forces 3 | d");   // congruence, cannot happen

    Feasibility red = reduce_to_base(xi);
    if (red.verdict != FeasVerdict::Feasible) return red;

    if (k == 8) {
        bool even = d % 2 == 0;
        if (variant == SurfaceVariant::P1P1 && !even) {
            out.verdict = FeasVerdict::Infeasible;
            out.reason = "odd degree does not occur on the quadric";
            return out;
        }
        if (variant == SurfaceVariant::Unspecified && !even) {
            red.verdict = FeasVerdict::SurfaceDependent;
            red.reason = "feasible on F1, not on the quadric (odd degree)";
            return red;
        }
    }
    return red;
}

TheoremBReport theorem_b_report(long long d, long long r) {
    if (r <= 0) throw std::invalid_argument("theorem_b_report: rank must be positive");
    if (std::gcd(std::llabs(d), r) != 1)
        throw std::invalid_argument("theorem_b_report: gcd(d, r) must be 1");

    TheoremBReport out;
    if (d <= r + 1) {
        out.outside_hypotheses = true;
        return out;
    }
    out.feasible_k.push_back(4);
    out.max_dimension = 5;
    for (int k = 5; k <= 9; ++k) {
        TheoremBEntry e;
        e.k = k;
        e.value = d * d - (long long)k * r * d + (long long)k * r * r;
        e.in_interval = -(long long)k <= e.value && e.value <= -1;
        // Dual orientation (V, O): the statement for (d, r) is the
        // proposition applied to (-d, r); degree 8 is taken on F1.
        e.detail = classify_slope(k, -d, r, k == 8 ? SurfaceVariant::F1 : SurfaceVariant::Unspecified);
        e.feasible = e.detail.verdict == FeasVerdict::Feasible && (k != 9 || d % 3 == 0);
        if (e.feasible) {
            out.feasible_k.push_back(k);
            out.max_dimension = k + 1;
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace delpezzo
