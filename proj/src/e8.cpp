#include "delpezzo/e8.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace delpezzo {

EpsVector EpsVector::ints(std::array<long long, 8> x) {
    for (auto& v : x) v *= 2;
    return EpsVector(x, 1);
}

EpsVector EpsVector::from_rats(const std::array<Rat, 8>& x) {
    long long d = 1;
    for (const auto& r : x) d = std::lcm(d, r.den);
    std::array<long long, 8> num{};
    for (int i = 0; i < 8; ++i) num[i] = 2 * x[i].num * (d / x[i].den);
    return EpsVector(num, d);
}

void EpsVector::normalize() {
    if (den <= 0) throw std::domain_error("EpsVector: denominator must be positive");
    long long g = den;
    for (auto v : num) g = std::gcd(g, std::llabs(v));
    if (g > 1) {
        den /= g;
        for (auto& v : num) v /= g;
    }
}

bool EpsVector::is_zero() const {
    for (auto v : num)
        if (v) return false;
    return true;
}

bool EpsVector::is_lattice() const {
    if (den != 1) return false;
    long long parity = ((num[0] % 2) + 2) % 2;
    long long sum = 0;
    for (auto v : num) {
        if (((v % 2) + 2) % 2 != parity) return false;
        sum += v;
    }
    return ((sum % 4) + 4) % 4 == 0;
}

bool EpsVector::operator<(const EpsVector& o) const {
    for (int i = 0; i < 8; ++i) {
        Rat a = coord(i), b = o.coord(i);
        if (a != b) return a < b;
    }
    return false;
}

EpsVector EpsVector::operator+(const EpsVector& o) const {
    long long d = std::lcm(den, o.den);
    std::array<long long, 8> n{};
    for (int i = 0; i < 8; ++i) n[i] = num[i] * (d / den) + o.num[i] * (d / o.den);
    return EpsVector(n, d);
}

EpsVector EpsVector::operator-(const EpsVector& o) const { return *this + (-o); }

EpsVector EpsVector::operator-() const {
    EpsVector r = *this;
    for (auto& v : r.num) v = -v;
    return r;
}

EpsVector EpsVector::scaled(const Rat& t) const {
    std::array<Rat, 8> x;
    for (int i = 0; i < 8; ++i) x[i] = coord(i) * t;
    return from_rats(x);
}

std::string EpsVector::str() const {
    std::string out = "(";
    for (int i = 0; i < 8; ++i) {
        if (i) out += ", ";
        out += coord(i).str();
    }
    return out + ")";
}

Rat inner(const EpsVector& a, const EpsVector& b) {
    __int128 s = 0;
    for (int i = 0; i < 8; ++i) s += (__int128)a.num[i] * b.num[i];
    return Rat::from_i128(s, (__int128)4 * a.den * b.den);
}

EpsVector reflect_root(const EpsVector& alpha, const EpsVector& x) {
    return x - alpha.scaled(inner(x, alpha));
}

namespace {

EpsVector halves(std::initializer_list<long long> h) {
    std::array<long long, 8> a{};
    int i = 0;
    for (long long v : h) a[i++] = v;
    return EpsVector::halves(a);
}

}  // namespace

RootSystem::RootSystem() {
    // Bourbaki simple roots of E8.
    simple_[0] = halves({1, -1, -1, -1, -1, -1, -1, 1});    // alpha_1
    simple_[1] = halves({2, 2, 0, 0, 0, 0, 0, 0});          // alpha_2 = e1+e2
    simple_[2] = halves({-2, 2, 0, 0, 0, 0, 0, 0});         // alpha_3 = e2-e1
    simple_[3] = halves({0, -2, 2, 0, 0, 0, 0, 0});         // alpha_4 = e3-e2
    simple_[4] = halves({0, 0, -2, 2, 0, 0, 0, 0});         // alpha_5 = e4-e3
    simple_[5] = halves({0, 0, 0, -2, 2, 0, 0, 0});         // alpha_6 = e5-e4
    simple_[6] = halves({0, 0, 0, 0, -2, 2, 0, 0});         // alpha_7 = e6-e5
    simple_[7] = halves({0, 0, 0, 0, 0, -2, 2, 0});         // alpha_8 = e7-e6

    weight_[0] = halves({0, 0, 0, 0, 0, 0, 0, 4});          // omega_1 = 2 e8
    weight_[1] = halves({1, 1, 1, 1, 1, 1, 1, 5});
    weight_[2] = halves({-1, 1, 1, 1, 1, 1, 1, 7});
    weight_[3] = halves({0, 0, 2, 2, 2, 2, 2, 10});
    weight_[4] = halves({0, 0, 0, 2, 2, 2, 2, 8});
    weight_[5] = halves({0, 0, 0, 0, 2, 2, 2, 6});
    weight_[6] = halves({0, 0, 0, 0, 0, 2, 2, 4});
    weight_[7] = halves({0, 0, 0, 0, 0, 0, 2, 2});          // omega_8 = e7+e8

    highest_ = weight_[7];

    // 240 roots: +-e_i +- e_j and half-vectors with an even number of minus signs.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    std::array<long long, 8> h{};
                    h[i] = 2 * si;
                    h[j] = 2 * sj;
                    roots_.push_back(EpsVector::halves(h));
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::array<long long, 8> h{};
        for (int i = 0; i < 8; ++i) h[i] = (mask >> i) & 1 ? -1 : 1;
        roots_.push_back(EpsVector::halves(h));
    }
    std::sort(roots_.begin(), roots_.end());

    static const int marks[8] = {2, 3, 4, 6, 5, 4, 3, 2};
    for (int i = 0; i < 8; ++i) vertices_.push_back(weight_[i].scaled(Rat(1, marks[i])));
    vertices_.push_back(EpsVector{});
}

const RootSystem& RootSystem::e8() {
    static const RootSystem instance;
    return instance;
}

long long RootSystem::cartan(int i, int j) const {
    Rat v = inner(simple(i), simple(j));
    if (!v.is_integer()) throw std::logic_error("Cartan entry not integral");
    return v.num;
}

std::string WeylWord::str() const {
    std::string out = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(letters[i]);
    }
    return out + "]";
}

EpsVector replay_linear(const WeylWord& w, EpsVector x) {
    const auto& rs = RootSystem::e8();
    for (int l : w.letters) x = reflect_root(l == 0 ? rs.highest() : rs.simple(l), x);
    return x;
}

EpsVector replay_affine(const WeylWord& w, EpsVector x) {
    const auto& rs = RootSystem::e8();
    for (int l : w.letters) {
        if (l == 0)
            x = reflect_root(rs.highest(), x) + rs.highest();
        else
            x = reflect_root(rs.simple(l), x);
    }
    return x;
}

namespace {

// Pic(X_1) root matched to the highest E8 root: sum of marks times the simple
// roots, which comes out as Q_1 - e7.
const PicardClass& pic_highest_root() {
    static const PicardClass r = [] {
        static const int marks[8] = {2, 3, 4, 6, 5, 4, 3, 2};
        PicardClass acc = PicardClass::zero(1);
        const auto& simples = pic_simple_roots(1);
        for (int i = 0; i < 8; ++i) acc = acc + simples[i].v * marks[i];
        return acc;
    }();
    return r;
}

}  // namespace

PicardClass replay_linear_pic(const WeylWord& w, PicardClass x) {
    const auto& simples = pic_simple_roots(1);
    static const PicRoot highest{pic_highest_root()};
    for (int l : w.letters) x = reflect(l == 0 ? highest : simples[l - 1], x);
    return x;
}

EpsVector pic_to_eps(const PicardClass& x, bool project) {
    if (x.k != 1) throw std::invalid_argument("pic_to_eps: degree-1 classes only");
    PicardClass p = x;
    long long deg = degree_of(p);
    if (deg != 0) {
        if (!project) throw std::invalid_argument("pic_to_eps: nonzero degree without projection");
        p = p - anticanonical(1) * deg;   // Q1.Q1 = 1
    }
    const auto& rs = RootSystem::e8();
    const auto& simples = pic_simple_roots(1);
    EpsVector out;
    for (int i = 0; i < 8; ++i) {
        long long pair = -intersect(p, simples[i].v);
        if (pair) out = out + rs.weight(i + 1).scaled(Rat(pair));
    }
    return out;
}

PicardClass eps_to_pic(const EpsVector& y) {
    if (!y.is_lattice()) throw std::invalid_argument("eps_to_pic: not a lattice vector");
    const auto& rs = RootSystem::e8();
    const auto& simples = pic_simple_roots(1);
    PicardClass out = PicardClass::zero(1);
    for (int i = 0; i < 8; ++i) {
        Rat c = inner(y, rs.weight(i + 1));
        if (!c.is_integer()) throw std::logic_error("eps_to_pic: non-integral coefficient");
        out = out + simples[i].v * c.num;
    }
    return out;
}

namespace {

ChamberResult dominance(const EpsVector& x, int generators) {
    const auto& rs = RootSystem::e8();
    ChamberResult out;
    out.dom = x;
    for (;;) {
        int neg = 0;
        for (int i = 1; i <= generators; ++i)
            if (inner(out.dom, rs.simple(i)).sign() < 0) {
                neg = i;
                break;
            }
        if (!neg) return out;
        out.dom = reflect_root(rs.simple(neg), out.dom);
        out.word.letters.push_back(neg);
    }
}

}  // namespace

ChamberResult chamber_reduce(const EpsVector& x) { return dominance(x, 8); }

D5Result d5_reduce(const EpsVector& x) {
    auto r = dominance(x, 5);
    return {std::move(r.word), std::move(r.dom)};
}

AlcoveResult alcove_reduce(const EpsVector& x) {
    const auto& rs = RootSystem::e8();
    AlcoveResult out;
    out.res = x;
    EpsVector translation;   // res = w(x) + translation
    for (;;) {
        auto dom = dominance(out.res, 8);
        if (!dom.word.letters.empty()) {
            for (int l : dom.word.letters) {
                out.word.letters.push_back(l);
                translation = reflect_root(rs.simple(l), translation);
            }
            out.res = dom.dom;
        }
        Rat level = inner(out.res, rs.highest());
        if (level <= Rat(1)) break;
        out.res = reflect_root(rs.highest(), out.res) + rs.highest();
        translation = reflect_root(rs.highest(), translation) + rs.highest();
        out.word.letters.push_back(0);
    }
    // shift = w^{-1}(translation), replayed with the reversed word.
    WeylWord rev;
    rev.letters.assign(out.word.letters.rbegin(), out.word.letters.rend());
    out.shift = replay_linear(rev, translation);
    return out;
}

bool voronoi_contains(const EpsVector& x) {
    for (const auto& r : RootSystem::e8().roots())
        if (inner(x, r) > Rat(1)) return false;
    return true;
}

bool alcove_contains(const EpsVector& x) {
    const auto& rs = RootSystem::e8();
    for (int i = 1; i <= 8; ++i)
        if (inner(x, rs.simple(i)).sign() < 0) return false;
    return inner(x, rs.highest()) <= Rat(1);
}

}  // namespace delpezzo
