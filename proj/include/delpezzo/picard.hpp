#pragma once

#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

// Divisor class on a del Pezzo surface of degree k (1 <= k <= 8), written in
// a blowdown basis (s, f, e_1, ..., e_{8-k}).  The intersection form is fixed
// by the basis: s.f = 1, s.s = f.f = 0, e_i.e_i = -1, mixed products 0.
//
// Degree 9 (the plane) has no ruled basis and is handled purely arithmetically
// by the quadratic-order module.
struct PicardClass {
    int k = 4;                    // surface degree
    std::vector<long long> c;     // coefficients, length 10 - k

    PicardClass() : c(6, 0) {}
    PicardClass(int degree, std::vector<long long> coeffs);

    static PicardClass zero(int k) { return PicardClass(k, std::vector<long long>(10 - k, 0)); }

    long long s() const { return c[0]; }
    long long f() const { return c[1]; }
    long long e(int i) const { return c[1 + i]; }   // i = 1..8-k

    friend bool operator==(const PicardClass& a, const PicardClass& b) {
        return a.k == b.k && a.c == b.c;
    }
    friend bool operator!=(const PicardClass& a, const PicardClass& b) { return !(a == b); }

    PicardClass operator+(const PicardClass& o) const;
    PicardClass operator-(const PicardClass& o) const;
    PicardClass operator-() const;
    PicardClass operator*(long long n) const;

    std::string str() const;      // "[a_s a_f a_1 ...]"
};

long long intersect(const PicardClass& a, const PicardClass& b);

// Q_k = 2s + 2f - sum e_i; satisfies Q_k.Q_k = k.
PicardClass anticanonical(int k);

// deg(D) = D.Q for Q of the matching surface degree.
long long degree_of(const PicardClass& d);

// A (-2)-class orthogonal to Q: a root of the E_{9-k} system in Q-perp.
struct PicRoot {
    PicardClass v;
    explicit PicRoot(PicardClass r);
};

// Simple roots in the order matched to the Bourbaki E8 numbering:
//   1: s-f   2: e1-e2   3: f-e1-e2   4: e2-e3   5: e3-e4   6: e4-e5 ...
// For k = 4 this list has five entries and generates W(D5); for k = 1 it has
// eight and generates W(E8).
const std::vector<PicRoot>& pic_simple_roots(int k);

// s_v(x) = x + (x.v) v : reflection in the root v under the pairing
// (v,v') = -v.v'.  Preserves the intersection form and Q.
PicardClass reflect(const PicRoot& v, const PicardClass& x);

// The distinguished degree-4 classes D_ab = (a/2) f + (b/2)(Q - f) + delta_ab,
// with delta the parity correction; requires a, b not both even.
// D_ab.Q = a + b and D_ab.D_ab = ab - 1.
PicardClass d_ab(long long a, long long b);

// Zero-extension of a class to a surface of lower degree (more blowups).
PicardClass pullback(const PicardClass& d, int to_degree);

// Rational divisor class, used for orthogonal projections to Q-perp.
struct RatDivisor {
    int k = 4;
    std::vector<Rat> c;

    RatDivisor() : c(6) {}
    RatDivisor(int degree, std::vector<Rat> coeffs);
    static RatDivisor from(const PicardClass& x);

    friend bool operator==(const RatDivisor& a, const RatDivisor& b) {
        return a.k == b.k && a.c == b.c;
    }
    friend bool operator!=(const RatDivisor& a, const RatDivisor& b) { return !(a == b); }

    RatDivisor operator+(const RatDivisor& o) const;
    RatDivisor operator-(const RatDivisor& o) const;
    RatDivisor operator*(const Rat& t) const;

    bool is_zero() const;
    std::string str() const;
};

Rat intersect_q(const RatDivisor& a, const RatDivisor& b);
RatDivisor reflect_q(const PicRoot& v, const RatDivisor& x);

// Orthogonal projection of a degree-4 class to Q4-perp (denominators divide 4).
RatDivisor project_perp(const PicardClass& x);

struct D5Canonical {
    std::vector<int> word;   // indices into pic_simple_roots(4), 1-based
    RatDivisor rep;          // unique dominant representative of the orbit
};

// Dominant representative of the W(D5)-orbit of the projection of x to
// Q4-perp.  Two classes of equal degree lie in one W(D5) orbit iff their
// representatives coincide.  Reduction policy: always reflect at the
// smallest-index simple root with negative pairing.
D5Canonical d5_canonical_form(const PicardClass& x);

// Orbit test for equal-degree classes via canonical representatives.
bool d5_equivalent(const PicardClass& x, const PicardClass& y);

}  // namespace delpezzo
