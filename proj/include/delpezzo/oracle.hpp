#pragma once

#include <array>
#include <string>
#include <vector>

#include "delpezzo/e8.hpp"
#include "delpezzo/picard.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

// Brute-force verifiers for every finite computation the construction and
// classification rest on, independent of the main reduction machinery.

// Point of the lattice M subset span(e1..e4): entries in Z/2 with pairwise
// integral differences.  Stored as doubled integers, so membership of a
// 4-vector of rationals is the exact predicate "all doubled entries integral
// and of one parity".
struct HalfIntQuad {
    std::array<long long, 4> twice{};

    Rat coord(int i) const { return Rat(twice[i], 2); }
    bool is_member() const {
        long long parity = ((twice[0] % 2) + 2) % 2;
        for (auto v : twice)
            if (((v % 2) + 2) % 2 != parity) return false;
        return true;
    }
    bool operator==(const HalfIntQuad& o) const { return twice == o.twice; }
    bool operator<(const HalfIntQuad& o) const { return twice > o.twice; }   // descending lex
    std::string str() const;
};

// All unit vectors of M expressible as nonnegative rational combinations of
// e1+e2+e3+e4, -e1+e2+e3+e4, e3+e4, e4; exactly three exist.
std::vector<HalfIntQuad> enum_unit_vectors();

struct AlcoveSolution {
    long long d = 0, r = 0;
    EpsVector v;          // lattice vector with v/r in the alcove
    long long m = 0;      // (r*omega/2 - v, omega)
};

// All v in Lambda_E8 with v/r in the fundamental alcove and
// (v,v) = r^2 - rd + d^2 + 1, by norm-bounded backtracking with chamber
// pruning; refused for r > 30.
std::vector<AlcoveSolution> enum_alcove_solutions(long long d, long long r);

struct OracleCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool ok() const;
    std::string first_failure() const;
};

// W(D5)-orbit identities of the D_ab classes for all |a|,|b| <= bound, not
// both even: D_ab ~ D_ba, D_ab ~ -D_{-a,-b}, aQ - D_ab ~ D_{a,2a-b}.
OracleReport check_worbit_identities(int bound);

// Structural identities tying the Picard dictionary to the E8 tables:
// Q4 - 4Q1 = -omega_6, Cartan match, the alcove vertex list with its tight
// walls, the norm maximum at omega/2, W(D5)-invariance of the three
// hyperplane functionals, the 40-root D5 subsystem match, and the section
// vertices of the H_delta slices at delta = 1/4, 1/3.
OracleReport check_structural_identities();

// Brute-force subgroup orbit (BFS over reflections in the given simple
// roots); used by tests as the independent route to canonical forms.
std::vector<EpsVector> weyl_orbit(const EpsVector& start, const std::vector<int>& generators);

}  // namespace delpezzo
