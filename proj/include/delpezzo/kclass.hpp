#pragma once

#include <string>

#include "delpezzo/picard.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

// K-theory class of an exceptional object: surface degree, rank and first
// Chern class.  A negative rank encodes an odd shift of a bundle.
struct KClass {
    int k = 4;
    long long rank = 1;
    PicardClass c1;

    KClass() : c1(PicardClass::zero(4)) {}
    KClass(int degree, long long r, PicardClass chern);

    long long degree() const { return degree_of(c1); }
    Rat slope() const { return Rat(degree(), rank); }

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.k == b.k && a.rank == b.rank && a.c1 == b.c1;
    }
    friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }

    std::string str() const;
};

// chi(V) = (r^2 + c1.(c1 + rQ) + 1) / (2r); throws if the value is not an
// integer (the class is then not the K-class of an exceptional object).
long long chi_exceptional(const KClass& v);

// Divisibility form of the same condition, i.e. chi(V,V) = 1.
bool is_exceptional_consistent(const KClass& v);

// Riemann-Roch pairing chi(v1, v2); both classes must be consistent.
long long chi_pair(const KClass& v1, const KClass& v2);

enum class MutationKind { M, R, S };

// The invertible transforms acting on pairs with the structure sheaf:
//   M: rank -> -deg - rank, c1 fixed          (slope -> -mu/(mu+1))
//   R: rank fixed, c1 -> -c1 - rank Q         (slope -> -k - mu)
//   S: rank -> deg, c1 -> -c1 + (deg+rank) Q  (slope -> 1/mu; degree 1 only)
KClass mutate(MutationKind kind, const KClass& v);

struct PairVerdict {
    enum class Kind { Exceptional, Obstructed, OutsideWindow } kind;
    long long chi = 0;   // the obstruction value for Obstructed
    std::string str() const;
};

// K0-level test for the pair (v1, v2) inside the slope window
// mu(v2) - k < mu(v1) < mu(v2): exceptional iff chi(v2, v1) = 0.
PairVerdict k0_pair_status(const KClass& v1, const KClass& v2);

// Exact band [-r - 1/r - 4, r + 1/r] outside which every exceptional pair
// with the structure sheaf is standard or one of the two rank-2 sporadics.
struct Band {
    Rat lo, hi;
};
Band sporadic_band(long long r);

enum class PairClass { InsideBand, Standard, SporadicOmega, SporadicT, Unclassified };
std::string pair_class_name(PairClass c);

// Classification of a degree-4 class-level pair (V, O) with slope outside the
// band: Standard when c1 lies in the W(D5) orbit of D_{d+r,-r}; the sporadics
// are the rank-2 classes with c1 ~ -5(s+f-e1) (slope -15/2) and its R-image
// (slope 7/2).  Unclassified must never occur on valid inputs.
PairClass classify_pair_class(long long r, const PicardClass& c1);

}  // namespace delpezzo
