#include "delpezzo/picard.hpp"

#include <map>
#include <stdexcept>

namespace delpezzo {

namespace {

void check_degree(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("surface degree must be in 1..8");
}

}  // namespace

PicardClass::PicardClass(int degree, std::vector<long long> coeffs) : k(degree), c(std::move(coeffs)) {
    check_degree(k);
    if ((int)c.size() != 10 - k)
        throw std::invalid_argument("coefficient count does not match surface degree");
}

PicardClass PicardClass::operator+(const PicardClass& o) const {
    if (k != o.k) throw std::invalid_argument("degree mismatch");
    PicardClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

PicardClass PicardClass::operator-(const PicardClass& o) const { return *this + (-o); }

PicardClass PicardClass::operator-() const {
    PicardClass r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

PicardClass PicardClass::operator*(long long n) const {
    PicardClass r = *this;
    for (auto& x : r.c) x *= n;
    return r;
}

std::string PicardClass::str() const {
    std::string out = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(c[i]);
    }
    return out + "]";
}

long long intersect(const PicardClass& a, const PicardClass& b) {
    if (a.k != b.k) throw std::invalid_argument("intersect: degree mismatch");
    long long v = a.c[0] * b.c[1] + a.c[1] * b.c[0];
    for (size_t i = 2; i < a.c.size(); ++i) v -= a.c[i] * b.c[i];
    return v;
}

PicardClass anticanonical(int k) {
    check_degree(k);
    std::vector<long long> c(10 - k, -1);
    c[0] = 2;
    c[1] = 2;
    return PicardClass(k, std::move(c));
}

long long degree_of(const PicardClass& d) { return intersect(d, anticanonical(d.k)); }

PicRoot::PicRoot(PicardClass r) : v(std::move(r)) {
    if (intersect(v, v) != -2) throw std::invalid_argument("PicRoot: self-intersection must be -2");
    if (degree_of(v) != 0) throw std::invalid_argument("PicRoot: must be orthogonal to Q");
}

const std::vector<PicRoot>& pic_simple_roots(int k) {
    check_degree(k);
    static std::map<int, std::vector<PicRoot>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    int n = 10 - k;
    auto unit = [n](int idx, long long val) {
        std::vector<long long> c(n, 0);
        c[idx] = val;
        return c;
    };
    std::vector<PicRoot> roots;
    // s - f
    {
        auto c = unit(0, 1);
        c[1] = -1;
        roots.emplace_back(PicardClass(k, c));
    }
    if (8 - k >= 2) {
        // e1 - e2
        auto c = unit(2, 1);
        c[3] = -1;
        roots.emplace_back(PicardClass(k, c));
        // f - e1 - e2
        c = unit(1, 1);
        c[2] = -1;
        c[3] = -1;
        roots.emplace_back(PicardClass(k, c));
        // e_i - e_{i+1} for i = 2..7-k
        for (int i = 2; i <= 7 - k; ++i) {
            auto cc = unit(1 + i, 1);
            cc[2 + i] = -1;
            roots.emplace_back(PicardClass(k, cc));
        }
    }
    return cache.emplace(k, std::move(roots)).first->second;
}

PicardClass reflect(const PicRoot& v, const PicardClass& x) {
    if (v.v.k != x.k) throw std::invalid_argument("reflect: degree mismatch");
    return x + v.v * intersect(x, v.v);
}

PicardClass d_ab(long long a, long long b) {
    long long pa = ((a % 2) + 2) % 2, pb = ((b % 2) + 2) % 2;
    if (pa == 0 && pb == 0) throw std::invalid_argument("d_ab: a and b must not both be even");

    // Doubled coordinates of the parity corrections over (s,f,e1..e4).
    std::vector<long long> delta2;
    if (pa == 0)            // (0,1): (-f - e1 + e2 + e3 + e4)/2
        delta2 = {0, -1, -1, 1, 1, 1};
    else if (pb == 1)       // (1,1): -f + (e1 + e2 + e3 + e4)/2
        delta2 = {0, -2, 1, 1, 1, 1};
    else                    // (1,0): -f/2 + e4
        delta2 = {0, -1, 0, 0, 0, 2};

    // 2*D = a*f + b*(Q - f) + 2*delta
    std::vector<long long> two{0, 0, 0, 0, 0, 0};
    two[1] += a;
    const long long qmf[6] = {2, 1, -1, -1, -1, -1};  // Q4 - f
    for (int i = 0; i < 6; ++i) two[i] += b * qmf[i] + delta2[i];
    std::vector<long long> out(6);
    for (int i = 0; i < 6; ++i) {
        if (two[i] % 2 != 0) throw std::logic_error("d_ab: non-integral result");
        out[i] = two[i] / 2;
    }
    return PicardClass(4, std::move(out));
}

PicardClass pullback(const PicardClass& d, int to_degree) {
    check_degree(to_degree);
    if (to_degree >= d.k) throw std::invalid_argument("pullback: target degree must be lower");
    std::vector<long long> c = d.c;
    c.resize(10 - to_degree, 0);
    return PicardClass(to_degree, std::move(c));
}

RatDivisor::RatDivisor(int degree, std::vector<Rat> coeffs) : k(degree), c(std::move(coeffs)) {
    check_degree(k);
    if ((int)c.size() != 10 - k)
        throw std::invalid_argument("coefficient count does not match surface degree");
}

RatDivisor RatDivisor::from(const PicardClass& x) {
    std::vector<Rat> c(x.c.size());
    for (size_t i = 0; i < x.c.size(); ++i) c[i] = Rat(x.c[i]);
    return RatDivisor(x.k, std::move(c));
}

RatDivisor RatDivisor::operator+(const RatDivisor& o) const {
    if (k != o.k) throw std::invalid_argument("degree mismatch");
    RatDivisor r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

RatDivisor RatDivisor::operator-(const RatDivisor& o) const {
    if (k != o.k) throw std::invalid_argument("degree mismatch");
    RatDivisor r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

RatDivisor RatDivisor::operator*(const Rat& t) const {
    RatDivisor r = *this;
    for (auto& x : r.c) x *= t;
    return r;
}

bool RatDivisor::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

std::string RatDivisor::str() const {
    std::string out = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += c[i].str();
    }
    return out + "]";
}

Rat intersect_q(const RatDivisor& a, const RatDivisor& b) {
    if (a.k != b.k) throw std::invalid_argument("intersect: degree mismatch");
    Rat v = a.c[0] * b.c[1] + a.c[1] * b.c[0];
    for (size_t i = 2; i < a.c.size(); ++i) v -= a.c[i] * b.c[i];
    return v;
}

RatDivisor reflect_q(const PicRoot& v, const RatDivisor& x) {
    return x + RatDivisor::from(v.v) * intersect_q(x, RatDivisor::from(v.v));
}

RatDivisor project_perp(const PicardClass& x) {
    if (x.k != 4) throw std::invalid_argument("project_perp: degree-4 classes only");
    Rat t(degree_of(x), 4);
    return RatDivisor::from(x) - RatDivisor::from(anticanonical(4)) * t;
}

D5Canonical d5_canonical_form(const PicardClass& x) {
    const auto& simples = pic_simple_roots(4);
    D5Canonical out;
    out.rep = project_perp(x);
    for (;;) {
        int neg = 0;
        for (int i = 0; i < 5; ++i) {
            // pairing (p, beta_i) = -p.beta_i
            if ((-intersect_q(out.rep, RatDivisor::from(simples[i].v))).sign() < 0) {
                neg = i + 1;
                break;
            }
        }
        if (!neg) break;
        out.rep = reflect_q(simples[neg - 1], out.rep);
        out.word.push_back(neg);
    }
    return out;
}

bool d5_equivalent(const PicardClass& x, const PicardClass& y) {
    if (degree_of(x) != degree_of(y)) return false;
    return d5_canonical_form(x).rep == d5_canonical_form(y).rep;
}

}  // namespace delpezzo
