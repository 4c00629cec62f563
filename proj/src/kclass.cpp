#include "delpezzo/kclass.hpp"

#include <numeric>
#include <stdexcept>

namespace delpezzo {

KClass::KClass(int degree, long long r, PicardClass chern) : k(degree), rank(r), c1(std::move(chern)) {
    if (rank == 0) throw std::invalid_argument("KClass: rank must be nonzero");
    if (c1.k != k) throw std::invalid_argument("KClass: c1 degree mismatch");
}

std::string KClass::str() const {
    return "rank=" + std::to_string(rank) + " deg=" + std::to_string(degree()) +
           " c1=" + c1.str();
}

namespace {

long long chi_numerator(const KClass& v) {
    PicardClass shifted = v.c1 + anticanonical(v.k) * v.rank;
    return v.rank * v.rank + intersect(v.c1, shifted) + 1;
}

}  // namespace

long long chi_exceptional(const KClass& v) {
    long long n = chi_numerator(v);
    long long d = 2 * v.rank;
    if (n % d != 0) throw std::domain_error("chi_exceptional: class is not exceptional-consistent");
    return n / d;
}

bool is_exceptional_consistent(const KClass& v) {
    return chi_numerator(v) % (2 * v.rank) == 0;
}

long long chi_pair(const KClass& v1, const KClass& v2) {
    if (v1.k != v2.k) throw std::invalid_argument("chi_pair: degree mismatch");
    long long x1 = chi_exceptional(v1), x2 = chi_exceptional(v2);
    PicardClass shifted = v2.c1 + anticanonical(v2.k) * v2.rank;
    return -v1.rank * v2.rank + v1.rank * x2 + x1 * v2.rank - intersect(v1.c1, shifted);
}

KClass mutate(MutationKind kind, const KClass& v) {
    switch (kind) {
        case MutationKind::M: {
            long long r = -v.degree() - v.rank;
            if (r == 0) throw std::domain_error("mutate M: degree + rank must be nonzero");
            return KClass(v.k, r, v.c1);
        }
        case MutationKind::R:
            return KClass(v.k, v.rank, -v.c1 - anticanonical(v.k) * v.rank);
        case MutationKind::S: {
            if (v.k != 1) throw std::domain_error("mutate S: degree-1 surfaces only");
            long long d = v.degree();
            if (d == 0) throw std::domain_error("mutate S: degree must be nonzero");
            return KClass(1, d, -v.c1 + anticanonical(1) * (d + v.rank));
        }
    }
    throw std::logic_error("mutate: bad kind");
}

std::string PairVerdict::str() const {
    switch (kind) {
        case Kind::Exceptional: return "Exceptional";
        case Kind::Obstructed: return "Obstructed(chi=" + std::to_string(chi) + ")";
        case Kind::OutsideWindow: return "OutsideWindow";
    }
    return "?";
}

PairVerdict k0_pair_status(const KClass& v1, const KClass& v2) {
    if (v1.k != v2.k) throw std::invalid_argument("k0_pair_status: degree mismatch");
    if (!is_exceptional_consistent(v1) || !is_exceptional_consistent(v2))
        throw std::domain_error("k0_pair_status: inconsistent class");
    Rat m1 = v1.slope(), m2 = v2.slope();
    if (!(m2 - Rat(v1.k) < m1 && m1 < m2)) return {PairVerdict::Kind::OutsideWindow, 0};
    long long obstruction = chi_pair(v2, v1);
    if (obstruction == 0) return {PairVerdict::Kind::Exceptional, 0};
    return {PairVerdict::Kind::Obstructed, obstruction};
}

Band sporadic_band(long long r) {
    if (r <= 0) throw std::invalid_argument("sporadic_band: rank must be positive");
    return {Rat(-r) - Rat(1, r) - Rat(4), Rat(r) + Rat(1, r)};
}

std::string pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::InsideBand: return "InsideBand";
        case PairClass::Standard: return "Standard";
        case PairClass::SporadicOmega: return "SporadicOmega";
        case PairClass::SporadicT: return "SporadicT";
        case PairClass::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace {

// -5(s+f-e1): pullback of Omega_P2(-1) determinant data, rank 2, slope -15/2.
PicardClass sporadic_omega_c1() { return PicardClass(4, {-5, -5, 5, 0, 0, 0}); }

}  // namespace

PairClass classify_pair_class(long long r, const PicardClass& c1) {
    if (c1.k != 4) throw std::invalid_argument("classify_pair_class: degree-4 classes only");
    KClass v(4, r, c1);
    if (!is_exceptional_consistent(v) || chi_exceptional(v) != 0)
        throw std::domain_error("classify_pair_class: class-level pair condition fails");
    long long d = v.degree();
    Band band = sporadic_band(r);
    Rat mu = v.slope();
    if (band.lo <= mu && mu <= band.hi) return PairClass::InsideBand;

    if (d5_equivalent(c1, d_ab(d + r, -r))) return PairClass::Standard;
    PicardClass omega = sporadic_omega_c1();
    if (r == 2 && d5_equivalent(c1, omega)) return PairClass::SporadicOmega;
    PicardClass t_image = -omega - anticanonical(4) * 2;   // R-image of the rank-2 sporadic
    if (r == 2 && d5_equivalent(c1, t_image)) return PairClass::SporadicT;
    return PairClass::Unclassified;
}

}  // namespace delpezzo
