#pragma once

#include <array>
#include <string>
#include <vector>

#include "delpezzo/picard.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

// Vector in Lambda_E8 (x) Q, in Bourbaki epsilon-coordinates.  Stored as
// doubled-integer coordinates over a global denominator: coordinate i equals
// num[i] / (2*den).  Lattice membership is then a pure integer predicate:
// den == 1, all num of one parity, and sum(num) divisible by 4.
struct EpsVector {
    std::array<long long, 8> num{};
    long long den = 1;

    EpsVector() = default;
    EpsVector(std::array<long long, 8> doubled, long long d) : num(doubled), den(d) { normalize(); }

    // From whole coordinates.
    static EpsVector ints(std::array<long long, 8> x);
    // From halves: coordinate i = h[i] / 2.
    static EpsVector halves(std::array<long long, 8> h) { return EpsVector(h, 1); }
    static EpsVector from_rats(const std::array<Rat, 8>& x);

    void normalize();
    Rat coord(int i) const { return Rat(num[i], 2 * den); }
    bool is_zero() const;
    bool is_lattice() const;

    friend bool operator==(const EpsVector& a, const EpsVector& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const EpsVector& a, const EpsVector& b) { return !(a == b); }
    bool operator<(const EpsVector& o) const;   // lexicographic on coordinates

    EpsVector operator+(const EpsVector& o) const;
    EpsVector operator-(const EpsVector& o) const;
    EpsVector operator-() const;
    EpsVector scaled(const Rat& t) const;

    std::string str() const;   // "(a, b, ...)" with exact rational entries
};

// Euclidean pairing (x,y) = sum x_i y_i.
Rat inner(const EpsVector& a, const EpsVector& b);

// s_alpha(x) = x - (x,alpha) alpha for a root alpha ((alpha,alpha) = 2).
EpsVector reflect_root(const EpsVector& alpha, const EpsVector& x);

// Static E8 data in Bourbaki coordinates; built once, shared read-only.
class RootSystem {
public:
    static const RootSystem& e8();

    const EpsVector& simple(int i) const { return simple_[i - 1]; }          // i = 1..8
    const EpsVector& weight(int i) const { return weight_[i - 1]; }          // i = 1..8
    const EpsVector& highest() const { return highest_; }                    // alpha~ = e7+e8
    const std::vector<EpsVector>& roots() const { return roots_; }           // all 240
    // The nine alcove vertices: omega_i / m_i (marks 2,3,4,6,5,4,3,2) and 0.
    const std::vector<EpsVector>& alcove_vertices() const { return vertices_; }
    long long cartan(int i, int j) const;                                    // (alpha_i, alpha_j)

private:
    RootSystem();
    std::array<EpsVector, 8> simple_;
    std::array<EpsVector, 8> weight_;
    EpsVector highest_;
    std::vector<EpsVector> roots_;
    std::vector<EpsVector> vertices_;
};

// Word in the affine Weyl group generators of E8.  Letters 1..8 are the finite
// simple reflections; letter 0 is the reflection in the wall (x, alpha~) = 1.
struct WeylWord {
    std::vector<int> letters;

    bool valid() const {
        for (int l : letters)
            if (l < 0 || l > 8) return false;
        return true;
    }
    std::string str() const;
};

// Replay with letter 0 as the *linear* reflection s_{alpha~}.
EpsVector replay_linear(const WeylWord& w, EpsVector x);
// Replay with letter 0 as the affine map x |-> s_{alpha~}(x) + alpha~.
EpsVector replay_affine(const WeylWord& w, EpsVector x);
// Same replays on the Picard side of the degree-1 dictionary (below).
PicardClass replay_linear_pic(const WeylWord& w, PicardClass x);

// Lattice dictionary Pic(X_1) degree-0 part <-> Lambda_E8, determined by the
// simple-root matching of pic_simple_roots(1) with alpha_1..alpha_8.  Pairing
// preserving: (v,w) = -v.w on the Pic side.
EpsVector pic_to_eps(const PicardClass& x, bool project = false);
PicardClass eps_to_pic(const EpsVector& y);

struct ChamberResult {
    WeylWord word;
    EpsVector dom;
};

// Dominant representative: (dom, alpha_i) >= 0 for i = 1..8; the word replays
// x to dom; reflects at the smallest-index negative pairing.
ChamberResult chamber_reduce(const EpsVector& x);

struct D5Result {
    WeylWord word;   // letters in 1..5 only
    EpsVector res;
};

// Same over the subgroup generated by alpha_1..alpha_5 only.  Leaves the three
// functionals (., alpha_7), (., alpha_8), (., alpha~) untouched.
D5Result d5_reduce(const EpsVector& x);

struct AlcoveResult {
    WeylWord word;       // affine replay maps x to res exactly
    EpsVector shift;     // lattice element with res = w(x + shift)
    EpsVector res;       // point of the fundamental alcove
};

// Reduction into the fundamental alcove (x,alpha_i) >= 0, (x,alpha~) <= 1:
// alternate finite dominance and the affine reflection in the highest wall,
// smallest generator index first.
AlcoveResult alcove_reduce(const EpsVector& x);

// True iff (x, alpha) <= 1 for all 240 roots (the roots are the Voronoi-
// relevant vectors of the E8 lattice).
bool voronoi_contains(const EpsVector& x);

// The nine defining inequalities of the fundamental alcove.
bool alcove_contains(const EpsVector& x);

}  // namespace delpezzo
