#pragma once

#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

// Element x + y*omega_k of the quadratic order O_k = Z + Z*omega_k, where
// omega_k = (-k + sqrt(k(k-4)))/2, for surface degrees k = 5..9.
// omega satisfies omega^2 = -k*omega - k, so Nm(x + y*omega) = x^2 - kxy + ky^2.
struct OrderElement {
    int k = 5;
    long long x = 0, y = 0;

    OrderElement() = default;
    OrderElement(int kk, long long xx, long long yy);

    long long norm() const { return x * x - (long long)k * x * y + (long long)k * y * y; }
    OrderElement conj() const { return OrderElement(k, x - k * y, -y); }
    OrderElement operator-() const { return OrderElement(k, -x, -y); }
    OrderElement operator*(const OrderElement& o) const;

    friend bool operator==(const OrderElement& a, const OrderElement& b) {
        return a.k == b.k && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const OrderElement& a, const OrderElement& b) { return !(a == b); }

    // Sign of the real embedding x + y*(-k + sqrt(k(k-4)))/2, computed exactly.
    int real_sign() const;
    // Exact comparison of the real embeddings of two elements of O_k.
    static int compare_real(const OrderElement& a, const OrderElement& b);

    std::string str() const;   // "x + y*w" form
};

// xi(d, r) = -d + r*omega_k, with Nm = d^2 + krd + kr^2.
OrderElement make_xi(long long d, long long r, int k);

// The unit u = -1 + k/2 + sqrt(k(k-4))/2 = (k-1) + omega_k, of norm 1.
OrderElement unit_of(int k);
// Its inverse -1 - omega_k (also a unit).
OrderElement unit_inverse_of(int k);

// Letters of a reduction word, replayable on order elements:
//   N: a -> -a      C: a -> -conj(a)     U: a -> u*a      V: a -> u^{-1}*a
enum class ReductionLetter { N, C, U, V };
OrderElement apply_reduction_letter(ReductionLetter l, const OrderElement& a);
std::string reduction_word_str(const std::vector<ReductionLetter>& w);

struct BaseTag {
    long long r = 0, d = 0;      // base pair (rank, degree)
    std::string provenance;      // geometric realization recorded, not computed
};

enum class FeasVerdict { Feasible, Infeasible, SurfaceDependent, OutOfInterval };
std::string feas_verdict_name(FeasVerdict v);

struct Feasibility {
    FeasVerdict verdict = FeasVerdict::Infeasible;
    BaseTag base;                              // for Feasible
    std::vector<ReductionLetter> word;         // replays xi(d,r) to xi(base.d, base.r)
    std::string reason;                        // for Infeasible / SurfaceDependent
};

// Norm values realized by coprime pairs in [-k, -1], per degree.
const std::vector<long long>& realizable_norms(int k);
// The base pairs per degree, with notes on their geometric realizations.
const std::vector<BaseTag>& base_tags(int k);

// Reduces a negative-norm element to one of the per-degree base classes using
// the group generated by negation, -conj and unit multiplication; exact
// arithmetic throughout.  Infeasible when the norm is not realizable.
Feasibility reduce_to_base(const OrderElement& a);

enum class SurfaceVariant { Unspecified, F1, P1P1 };

// Proposition-4.1/4.3 classification of a slope class (d, r) on a degree-k
// surface (k = 5..9): Infeasible below -k or at unrealizable norms, Feasible
// with a base reduction inside [-k, -1], OutOfInterval for norms >= 0.  For
// k = 8 feasibility on the quadric requires even degree.
Feasibility classify_slope(int k, long long d, long long r,
                           SurfaceVariant variant = SurfaceVariant::Unspecified);

struct TheoremBEntry {
    int k = 5;
    long long value = 0;       // d^2 - krd + kr^2
    bool in_interval = false;  // -k <= value <= -1
    bool feasible = false;
    Feasibility detail;
};

struct TheoremBReport {
    bool outside_hypotheses = false;   // d <= r + 1
    std::vector<int> feasible_k;       // always contains 4 when in hypotheses
    int max_dimension = 0;             // max feasible k, plus one
    std::vector<TheoremBEntry> entries;
};

// Feasible surface degrees and the maximal dimension of a compatible bracket
// space for the pair (d, r) with d > r + 1; degree 4 is always available and
// degrees 5..9 are decided by classify_slope(k, -d, r) (degree 8 on F1).
TheoremBReport theorem_b_report(long long d, long long r);

}  // namespace delpezzo
