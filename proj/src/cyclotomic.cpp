#include "weil_lab/cyclotomic.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace weil_lab::cyclotomic {

using modmath::mod_reduce;
using modmath::ord_p;

// ---------------------------------------------------------------------------
// Basic arithmetic helpers
// ---------------------------------------------------------------------------

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<Integer>; // constant term first

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
    poly_trim(num);
    if (num.empty())
        return {};
    Poly q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    poly_trim(num);
    if (!num.empty())
        throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

// Remainder modulo a monic divisor.
Poly poly_mod(Poly num, const Poly& den) {
    poly_trim(num);
    while (num.size() >= den.size()) {
        Integer c = num.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= c * den[j];
        poly_trim(num);
    }
    num.resize(den.size() - 1, Integer(0));
    return num;
}

std::mutex g_cyclo_mutex;
std::map<unsigned long, Poly> g_cyclo_cache;

Poly cyclotomic_poly_impl(unsigned long n) {
    if (auto it = g_cyclo_cache.find(n); it != g_cyclo_cache.end())
        return it->second;
    Poly r;
    if (n == 1) {
        r = {Integer(-1), Integer(1)};
    } else {
        Poly num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (unsigned long d = 1; d < n; ++d)
            if (n % d == 0)
                num = poly_div_exact(std::move(num), cyclotomic_poly_impl(d));
        r = std::move(num);
    }
    g_cyclo_cache[n] = r;
    return r;
}

std::vector<unsigned long> units_mod(unsigned long n) {
    std::vector<unsigned long> u;
    if (n == 1) {
        u.push_back(0);
        return u;
    }
    for (unsigned long a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1)
            u.push_back(a);
    return u;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned long n) {
    std::lock_guard lock(g_cyclo_mutex);
    return cyclotomic_poly_impl(n);
}

// ---------------------------------------------------------------------------
// Field table
// ---------------------------------------------------------------------------

namespace {

// Conductors N (canonical form) with class number h = 1.
const unsigned long kClassNumberOne[] = {1,  3,  4,  5,  7,  8,  9,  11, 12, 13,
                                         15, 16, 17, 19, 20, 21, 24, 25, 27, 28,
                                         32, 33, 35, 36, 40, 44, 45, 48, 60, 84};

std::mutex g_table_mutex;
std::map<unsigned long, unsigned long> g_overrides;

std::optional<unsigned long> lookup_class_number(unsigned long N) {
    std::lock_guard lock(g_table_mutex);
    if (auto it = g_overrides.find(N); it != g_overrides.end())
        return it->second;
    for (unsigned long c : kClassNumberOne)
        if (c == N)
            return 1;
    return std::nullopt;
}

CyclotomicField field_shell(unsigned long N) {
    CyclotomicField K;
    K.conductor = N;
    K.degree = euler_phi(N);
    K.torsion_order = (N % 2 == 0) ? N : 2 * N;
    K.real_subfield_degree = K.degree / 2;
    K.min_poly = cyclotomic_polynomial(N);
    K.units = units_mod(N);
    return K;
}

} // namespace

void set_class_number_overrides(const std::map<unsigned long, unsigned long>& table) {
    std::lock_guard lock(g_table_mutex);
    for (const auto& [n, h] : table)
        g_overrides[n] = h;
}

void clear_class_number_overrides() {
    std::lock_guard lock(g_table_mutex);
    g_overrides.clear();
}

std::map<unsigned long, unsigned long> load_field_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open field table: " + path);
    std::map<unsigned long, unsigned long> table;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        unsigned long n, h;
        if (ls >> n >> h)
            table[n] = h;
    }
    return table;
}

CyclotomicField describe_field(unsigned long N) {
    if (N < 3 || N % 4 == 2)
        throw UnsupportedConductor("conductor must be >= 3 and not 2 mod 4: " +
                                   std::to_string(N));
    CyclotomicField K = field_shell(N);
    auto h = lookup_class_number(N);
    if (!h)
        throw UnsupportedConductor("class number unknown for conductor " + std::to_string(N) +
                                   " (supply it via the field table)");
    K.class_number = *h;
    return K;
}

// ---------------------------------------------------------------------------
// Prime splitting
// ---------------------------------------------------------------------------

unsigned long PrimeSplitting::label_of(unsigned long t) const {
    if (cofactor <= 1)
        return labels[0];
    t %= cofactor;
    unsigned long best = t;
    unsigned long cur = t;
    for (unsigned long i = 1; i < f; ++i) {
        cur = (cur * (p % cofactor)) % cofactor;
        best = std::min(best, cur);
    }
    return best;
}

std::size_t PrimeSplitting::index_of(unsigned long label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw std::out_of_range("unknown prime label");
    return static_cast<std::size_t>(it - labels.begin());
}

unsigned long PrimeSplitting::conjugate(unsigned long label) const {
    if (cofactor <= 1)
        return label;
    return label_of(cofactor - label);
}

unsigned long PrimeSplitting::act(unsigned long a, unsigned long label) const {
    if (cofactor <= 1)
        return label;
    unsigned long ainv =
        modmath::invmod(Integer(a % cofactor), Integer(cofactor)).get_ui();
    return label_of((label * ainv) % cofactor);
}

PrimeSplitting split_prime(const CyclotomicField& K, unsigned long p) {
    PrimeSplitting sp;
    sp.p = p;
    unsigned long N = K.conductor;
    sp.p_power = 1;
    while (N % p == 0) {
        sp.p_power *= p;
        N /= p;
    }
    sp.cofactor = N;
    sp.e = euler_phi(sp.p_power);
    if (sp.cofactor <= 1) {
        sp.f = 1;
        sp.g = 1;
        sp.labels = {1};
        sp.fibers = {{0}};
        return sp;
    }
    sp.f = modmath::multiplicative_order(Integer(p), Integer(sp.cofactor)).get_ui();
    sp.g = euler_phi(sp.cofactor) / sp.f;
    for (unsigned long t : units_mod(sp.cofactor)) {
        unsigned long lab = sp.label_of(t);
        if (lab == t)
            sp.labels.push_back(lab);
    }
    std::sort(sp.labels.begin(), sp.labels.end());
    std::vector<bool> seen(sp.labels.size(), false);
    for (std::size_t i = 0; i < sp.labels.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t j = sp.index_of(sp.conjugate(sp.labels[i]));
        seen[i] = seen[j] = true;
        if (j == i)
            sp.fibers.push_back({i});
        else
            sp.fibers.push_back({i, j});
    }
    return sp;
}

// ---------------------------------------------------------------------------
// Ring arithmetic
// ---------------------------------------------------------------------------

namespace {

Poly reduced_basis_poly(unsigned long N, Poly raw) {
    Poly phi = cyclotomic_polynomial(N);
    return poly_mod(std::move(raw), phi);
}

void canonicalize(RingElement& x) {
    if (x.den < 0) {
        x.den = -x.den;
        for (auto& c : x.coeffs)
            c = -c;
    }
    if (x.den == 1)
        return;
    Integer g = x.den;
    for (const auto& c : x.coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1) {
        x.den /= g;
        for (auto& c : x.coeffs)
            c /= g;
    }
}

} // namespace

bool RingElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

bool RingElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            return false;
    return true;
}

RingElement re_zero(unsigned long N) {
    return RingElement{N, std::vector<Integer>(euler_phi(N), Integer(0)), Integer(1)};
}

RingElement re_one(unsigned long N) {
    return re_rational(N, 1);
}

RingElement re_rational(unsigned long N, const Integer& num, const Integer& den) {
    RingElement x = re_zero(N);
    x.coeffs[0] = num;
    x.den = den;
    canonicalize(x);
    return x;
}

RingElement re_zeta_power(unsigned long N, unsigned long j) {
    j %= N;
    Poly raw(j + 1, Integer(0));
    raw[j] = 1;
    RingElement x{N, reduced_basis_poly(N, std::move(raw)), Integer(1)};
    x.coeffs.resize(euler_phi(N), Integer(0));
    return x;
}

RingElement re_torsion_unit(unsigned long N, unsigned long j) {
    unsigned long m = (N % 2 == 0) ? N : 2 * N;
    j %= m;
    if (N % 2 == 0)
        return re_zeta_power(N, j);
    // generator -zeta_N of order 2N
    RingElement x = re_zeta_power(N, j % N);
    if (j % 2 == 1)
        for (auto& c : x.coeffs)
            c = -c;
    return x;
}

RingElement re_add(const RingElement& a, const RingElement& b) {
    RingElement r = re_zero(a.conductor);
    r.den = a.den * b.den;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = a.coeffs[i] * b.den + b.coeffs[i] * a.den;
    canonicalize(r);
    return r;
}

RingElement re_sub(const RingElement& a, const RingElement& b) {
    RingElement nb = b;
    for (auto& c : nb.coeffs)
        c = -c;
    return re_add(a, nb);
}

RingElement re_mul(const RingElement& a, const RingElement& b) {
    Poly prod = poly_mul(a.coeffs, b.coeffs);
    RingElement r{a.conductor, reduced_basis_poly(a.conductor, std::move(prod)), a.den * b.den};
    r.coeffs.resize(euler_phi(a.conductor), Integer(0));
    canonicalize(r);
    return r;
}

RingElement re_pow(const RingElement& a, unsigned long n) {
    RingElement r = re_one(a.conductor);
    RingElement base = a;
    while (n > 0) {
        if (n & 1)
            r = re_mul(r, base);
        n >>= 1;
        if (n)
            base = re_mul(base, base);
    }
    return r;
}

RingElement re_galois(const RingElement& a, unsigned long sigma) {
    unsigned long N = a.conductor;
    Poly raw(N, Integer(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        raw[(i * sigma) % N] += a.coeffs[i];
    RingElement r{N, reduced_basis_poly(N, std::move(raw)), a.den};
    r.coeffs.resize(euler_phi(N), Integer(0));
    canonicalize(r);
    return r;
}

RingElement re_conj(const RingElement& a) {
    return re_galois(a, a.conductor - 1);
}

Integer integral_norm(unsigned long N, const std::vector<Integer>& coeffs) {
    RingElement acc{N, coeffs, Integer(1)};
    RingElement prod = re_one(N);
    for (unsigned long a : units_mod(N))
        prod = re_mul(prod, re_galois(acc, a));
    if (!prod.is_rational() || prod.den != 1)
        throw std::logic_error("integral_norm: product of conjugates not a rational integer");
    return prod.coeffs[0];
}

Rational element_norm(const RingElement& x) {
    if (x.is_zero())
        throw std::domain_error("element_norm: zero element");
    Integer num = integral_norm(x.conductor, x.coeffs);
    Integer den = 1;
    for (unsigned long i = 0; i < euler_phi(x.conductor); ++i)
        den *= x.den;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

RingElement re_inverse(const RingElement& a, unsigned long p) {
    if (a.is_zero())
        throw std::domain_error("re_inverse: zero element");
    unsigned long N = a.conductor;
    RingElement adj = re_rational(N, a.den);
    for (unsigned long u : units_mod(N))
        if (u != 1)
            adj = re_mul(adj, RingElement{N, re_galois({N, a.coeffs, 1}, u).coeffs, Integer(1)});
    Integer nrm = integral_norm(N, a.coeffs);
    if (nrm < 0) {
        nrm = -nrm;
        for (auto& c : adj.coeffs)
            c = -c;
    }
    adj.den *= nrm;
    canonicalize(adj);
    if (adj.den != 1) {
        Integer d = adj.den;
        if (p == 0)
            throw std::domain_error("re_inverse: element is not a unit");
        while (d > 1) {
            if (!mpz_divisible_ui_p(d.get_mpz_t(), p))
                throw std::domain_error("re_inverse: denominator is not a power of p");
            d /= p;
        }
    }
    return adj;
}

bool re_less(const RingElement& a, const RingElement& b) {
    if (a.den != b.den)
        return a.den < b.den;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != b.coeffs[i])
            return a.coeffs[i] < b.coeffs[i];
    return false;
}

// ---------------------------------------------------------------------------
// Valuations: polynomials over F_p and the unramified lifting engine
// ---------------------------------------------------------------------------

namespace {

using FpPoly = std::vector<std::uint64_t>; // constant term first, coeffs in [0, p)

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty())
        return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_trim(r);
    return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    return modmath::invmod(Integer(a), Integer(p)).get_ui();
}

// division with remainder; returns quotient, leaves remainder in rem
FpPoly fp_divmod(FpPoly& rem, const FpPoly& den, std::uint64_t p) {
    fp_trim(rem);
    if (rem.size() < den.size())
        return {};
    std::uint64_t lead_inv = fp_inv(den.back(), p);
    FpPoly q(rem.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        std::uint64_t c = (rem[i + den.size() - 1] * lead_inv) % p;
        q[i] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[i + j] = (rem[i + j] + p - (c * den[j]) % p) % p;
    }
    fp_trim(rem);
    return q;
}

FpPoly fp_mod(FpPoly a, const FpPoly& den, std::uint64_t p) {
    fp_divmod(a, den, p);
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a)
            c = (c * inv) % p;
    }
    return a;
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& mod, std::uint64_t p) {
    FpPoly r = {1};
    base = fp_mod(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = fp_mod(fp_mul(r, base, p), mod, p);
        e >>= 1;
        if (e > 0)
            base = fp_mod(fp_mul(base, base, p), mod, p);
    }
    return r;
}

FpPoly fp_add(FpPoly a, const FpPoly& b, std::uint64_t p) {
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + b[i]) % p;
    fp_trim(a);
    return a;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    fp_trim(a);
    return a;
}

// Extended Euclid: returns (u, v) with u*a + v*b = 1; a, b coprime.
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r0 = a, r1 = b;
    FpPoly u0 = {1}, u1 = {};
    FpPoly v0 = {}, v1 = {1};
    fp_trim(r0);
    fp_trim(r1);
    while (!r1.empty()) {
        FpPoly rem = r0;
        FpPoly q = fp_divmod(rem, r1, p);
        FpPoly u2 = fp_sub(u0, fp_mul(q, u1, p), p);
        FpPoly v2 = fp_sub(v0, fp_mul(q, v1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.size() != 1)
        throw std::logic_error("fp_bezout: inputs not coprime");
    std::uint64_t inv = fp_inv(r0[0], p);
    for (auto& c : u0)
        c = (c * inv) % p;
    for (auto& c : v0)
        c = (c * inv) % p;
    return {u0, v0};
}

// One irreducible factor of the squarefree polynomial r mod p, all of whose
// irreducible factors have degree f. Equal-degree splitting with a fixed-seed
// generator so the chosen factor is deterministic.
FpPoly fp_find_factor(FpPoly r, unsigned long f, std::uint64_t p) {
    fp_trim(r);
    if (r.back() != 1) {
        std::uint64_t inv = fp_inv(r.back(), p);
        for (auto& c : r)
            c = (c * inv) % p;
    }
    Integer pf = 1;
    for (unsigned long i = 0; i < f; ++i)
        pf *= p;
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next_word = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    };
    while (r.size() - 1 > f) {
        FpPoly u(2 * f);
        for (auto& c : u)
            c = next_word() % p;
        fp_trim(u);
        if (u.size() <= 1)
            continue;
        FpPoly w;
        if (p != 2) {
            w = fp_powmod(u, (pf - 1) / 2, r, p);
            w = fp_sub(w, {1}, p);
        } else {
            // Artin-Schreier trace map of u
            FpPoly t = fp_mod(u, r, p);
            for (unsigned long i = 0; i < f; ++i) {
                w = fp_add(std::move(w), t, p);
                t = fp_mod(fp_mul(t, t, p), r, p);
            }
        }
        FpPoly d = fp_gcd(r, w, p);
        if (d.size() > 1 && d.size() < r.size()) {
            FpPoly other = r;
            FpPoly q = fp_divmod(other, d, p);
            r = (d.size() <= q.size()) ? std::move(d) : std::move(q);
        }
    }
    return r;
}

// Element of GF(p^f) = F_p[Y]/(m1): coefficient vector of size < deg m1.
struct GFElem {
    FpPoly v;
};

struct GFField {
    std::uint64_t p;
    FpPoly m1; // monic irreducible, degree f

    GFElem mul(const GFElem& a, const GFElem& b) const {
        return {fp_mod(fp_mul(a.v, b.v, p), m1, p)};
    }
    GFElem pow(const GFElem& a, Integer e) const { return {fp_powmod(a.v, std::move(e), m1, p)}; }
    bool in_base_field(const GFElem& a) const { return a.v.size() <= 1; }
};

// remainder of a modulo monic den, coefficients mod pT
Poly zpoly_rem_mod(Poly a, const Poly& den, const Integer& pT) {
    poly_trim(a);
    while (a.size() >= den.size()) {
        Integer c = a.back();
        std::size_t shift = a.size() - den.size();
        for (std::size_t j = 0; j < den.size(); ++j)
            a[shift + j] = mod_reduce(a[shift + j] - c * den[j], pT);
        poly_trim(a);
    }
    a.resize(den.size() - 1, Integer(0));
    return a;
}

Poly fp_to_zpoly(const FpPoly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = Integer(a[i]);
    return r;
}

FpPoly zpoly_to_fp(const Poly& a, std::uint64_t p) {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mod_reduce(a[i], Integer(p)).get_ui();
    fp_trim(r);
    return r;
}

// Hensel lift of the monic factorization Phi = g0 * h0 mod p to mod p^T.
// Returns the lift of g0.
Poly hensel_lift_factor(const Poly& Phi, const FpPoly& g0, const FpPoly& h0, std::uint64_t p,
                        unsigned long T) {
    auto [a, b] = fp_bezout(g0, h0, p); // a*g0 + b*h0 = 1
    Poly G = fp_to_zpoly(g0);
    Poly H = fp_to_zpoly(h0);
    Integer pj = p;
    Integer P(p);
    for (unsigned long j = 1; j < T; ++j) {
        // delta = (Phi - G*H) / p^j mod p
        Poly GH = poly_mul(G, H);
        Poly delta(Phi.size(), Integer(0));
        for (std::size_t i = 0; i < Phi.size(); ++i) {
            Integer d = Phi[i] - (i < GH.size() ? GH[i] : Integer(0));
            delta[i] = mod_reduce(d / pj, P);
        }
        FpPoly dfp = zpoly_to_fp(delta, p);
        FpPoly bd = fp_mul(b, dfp, p);
        FpPoly u = bd;
        FpPoly q = fp_divmod(u, g0, p); // u = b*delta mod g0
        // v = (delta - u*h0)/g0 = a*delta + q*h0
        FpPoly v = fp_add(fp_mul(a, dfp, p), fp_mul(q, h0, p), p);
        v = fp_mod(std::move(v), h0, p);
        Poly uz = fp_to_zpoly(u);
        Poly vz = fp_to_zpoly(v);
        Integer pj1 = pj * P;
        for (std::size_t i = 0; i < uz.size(); ++i) {
            if (G.size() <= i)
                G.resize(i + 1, Integer(0));
            G[i] = mod_reduce(G[i] + pj * uz[i], pj1);
        }
        for (std::size_t i = 0; i < G.size(); ++i)
            G[i] = mod_reduce(G[i], pj1);
        for (std::size_t i = 0; i < vz.size(); ++i) {
            if (H.size() <= i)
                H.resize(i + 1, Integer(0));
            H[i] = mod_reduce(H[i] + pj * vz[i], pj1);
        }
        for (std::size_t i = 0; i < H.size(); ++i)
            H[i] = mod_reduce(H[i], pj1);
        pj = pj1;
    }
    return G;
}

// Unramified valuation engine for Q(zeta_M), p coprime to M (M may be 1).
struct UnramifiedCore {
    unsigned long M = 1;
    std::uint64_t p = 0;
    unsigned long f = 1;
    std::vector<unsigned long> labels;
    Poly phi;                       // Phi_M over Z
    std::vector<FpPoly> factor_mod_p; // per label, monic degree f
    std::vector<FpPoly> cofactor_mod_p;
    mutable std::mutex lift_mutex;
    mutable std::vector<Poly> lifted; // per label, mod p^prec
    mutable unsigned long prec = 0;

    void init(unsigned long M_, std::uint64_t p_, const PrimeSplitting& sp) {
        M = M_;
        p = p_;
        f = sp.f;
        labels = sp.labels;
        if (M <= 1)
            return;
        phi = cyclotomic_polynomial(M);
        FpPoly phi_fp = zpoly_to_fp(phi, p);
        FpPoly m1 = fp_find_factor(phi_fp, f, p);
        GFField F{p, m1};
        GFElem eta{fp_mod({0, 1}, m1, p)}; // class of Y: a primitive M-th root
        factor_mod_p.resize(labels.size());
        cofactor_mod_p.resize(labels.size());
        for (std::size_t li = 0; li < labels.size(); ++li) {
            unsigned long t = labels[li];
            // m_t(X) = prod_i (X - eta^(t * p^i)), coefficients in F_p
            std::vector<GFElem> poly = {GFElem{{1}}}; // leading-first accumulation
            std::vector<GFElem> acc;                  // coefficients, constant first
            acc.push_back(GFElem{{1}});               // polynomial "1"
            unsigned long expo = t;
            for (unsigned long i = 0; i < f; ++i) {
                GFElem root = F.pow(eta, Integer(expo));
                // multiply acc by (X - root)
                std::vector<GFElem> next(acc.size() + 1, GFElem{{}});
                for (std::size_t d = 0; d < acc.size(); ++d) {
                    next[d + 1] = GFElem{fp_add(next[d + 1].v, acc[d].v, p)};
                    GFElem m = F.mul(acc[d], root);
                    next[d] = GFElem{fp_sub(next[d].v, m.v, p)};
                }
                acc = std::move(next);
                expo = (expo * (p % M)) % M;
            }
            FpPoly mt(acc.size());
            for (std::size_t d = 0; d < acc.size(); ++d) {
                if (!F.in_base_field(acc[d]))
                    throw std::logic_error("factor coefficients should lie in F_p");
                mt[d] = acc[d].v.empty() ? 0 : acc[d].v[0];
            }
            factor_mod_p[li] = mt;
            FpPoly rem = zpoly_to_fp(phi, p);
            FpPoly cof = fp_divmod(rem, mt, p);
            fp_trim(rem);
            if (!rem.empty())
                throw std::logic_error("m_t does not divide Phi mod p");
            cofactor_mod_p[li] = cof;
        }
        lifted.resize(labels.size());
    }

    void ensure_precision(unsigned long T) const {
        std::lock_guard lock(lift_mutex);
        if (T <= prec)
            return;
        for (std::size_t li = 0; li < labels.size(); ++li)
            lifted[li] = hensel_lift_factor(phi, factor_mod_p[li], cofactor_mod_p[li], p, T);
        prec = T;
    }

    // ord at label of a nonzero integral coefficient vector (basis of zeta_M)
    long ord(const Poly& coeffs_in, std::size_t label_index) const {
        Poly coeffs = coeffs_in;
        poly_trim(coeffs);
        if (coeffs.empty())
            throw std::domain_error("ord of zero");
        if (M <= 1)
            return static_cast<long>(ord_p(coeffs[0], Integer(p)));
        // strip p-content first
        unsigned long content = ULONG_MAX;
        for (const auto& c : coeffs)
            if (c != 0)
                content = std::min(content, ord_p(c, Integer(p)));
        if (content > 0) {
            Integer pc = 1;
            for (unsigned long i = 0; i < content; ++i)
                pc *= p;
            for (auto& c : coeffs)
                c /= pc;
        }
        Integer nrm = integral_norm(M, [&] {
            Poly full = coeffs;
            full.resize(phi.size() - 1, Integer(0));
            return full;
        }());
        unsigned long T = ord_p(nrm, Integer(p)) + 2;
        ensure_precision(T);
        Integer pT = 1;
        for (unsigned long i = 0; i < T; ++i)
            pT *= p;
        Poly lift;
        {
            std::lock_guard lock(lift_mutex);
            lift = lifted[label_index];
        }
        Poly rem = zpoly_rem_mod(coeffs, lift, pT);
        unsigned long v = T;
        for (const auto& c : rem) {
            Integer cc = mod_reduce(c, pT);
            if (cc != 0)
                v = std::min(v, ord_p(cc, Integer(p)));
        }
        if (v >= T)
            throw std::logic_error("valuation exceeded working precision");
        return static_cast<long>(content + v);
    }
};

} // namespace

// ---------------------------------------------------------------------------
// PAdicContext
// ---------------------------------------------------------------------------

struct PAdicContext::Impl {
    CyclotomicField K;
    PrimeSplitting sp;
    unsigned long p;
    bool ramified;
    UnramifiedCore core; // over Q(zeta_{N'}) (equal to K when unramified)
    // basis conversion for the ramified case: columns = zeta_N^(p^k * j)
    std::vector<std::vector<Integer>> embed_cols;

    // express an element of Z[zeta_N] known to lie in Z[zeta_{N'}]
    Poly to_subfield_basis(const Poly& coeffs) const {
        std::size_t rows = K.degree;
        std::size_t cols = embed_cols.size();
        // exact Gaussian elimination over Q on [embed | coeffs]
        std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j)
                A[i][j] = Rational(embed_cols[j][i]);
            A[i][cols] = Rational(i < coeffs.size() ? coeffs[i] : Integer(0));
        }
        std::size_t row = 0;
        std::vector<std::size_t> pivot_col(cols, SIZE_MAX);
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t piv = SIZE_MAX;
            for (std::size_t r = row; r < rows; ++r)
                if (A[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv == SIZE_MAX)
                continue;
            std::swap(A[row], A[piv]);
            Rational inv = 1 / A[row][col];
            for (std::size_t j = col; j <= cols; ++j)
                A[row][j] *= inv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == row || A[r][col] == 0)
                    continue;
                Rational factor = A[r][col];
                for (std::size_t j = col; j <= cols; ++j)
                    A[r][j] -= factor * A[row][j];
            }
            pivot_col[col] = row;
            ++row;
        }
        Poly out(cols, Integer(0));
        for (std::size_t col = 0; col < cols; ++col) {
            if (pivot_col[col] == SIZE_MAX)
                continue;
            Rational v = A[pivot_col[col]][cols];
            if (v.get_den() != 1)
                throw std::logic_error("subfield coordinates not integral");
            out[col] = v.get_num();
        }
        // consistency: rows without pivots must have zero rhs
        for (std::size_t r = row; r < rows; ++r)
            if (A[r][cols] != 0)
                throw std::logic_error("element does not lie in the subfield");
        return out;
    }

    // relative norm from K down to Q(zeta_{N'}), in the subfield basis
    Poly relative_norm(const Poly& coeffs) const {
        RingElement prod{K.conductor, coeffs, Integer(1)};
        RingElement acc = re_one(K.conductor);
        for (unsigned long a : K.units)
            if (a % sp.cofactor == 1 % sp.cofactor)
                acc = re_mul(acc, re_galois(prod, a));
        Poly full = acc.coeffs;
        if (sp.cofactor <= 1) {
            for (std::size_t i = 1; i < full.size(); ++i)
                if (full[i] != 0)
                    throw std::logic_error("relative norm should be rational");
            return {full[0]};
        }
        return to_subfield_basis(full);
    }
};

PAdicContext::PAdicContext(const CyclotomicField& K, unsigned long p) : impl_(new Impl) {
    impl_->K = K;
    impl_->p = p;
    impl_->sp = split_prime(K, p);
    impl_->ramified = (impl_->sp.p_power > 1);
    impl_->core.init(impl_->sp.cofactor, p, impl_->sp);
    if (impl_->ramified && impl_->sp.cofactor > 1) {
        unsigned long sub_deg = euler_phi(impl_->sp.cofactor);
        unsigned long pk = impl_->sp.p_power;
        impl_->embed_cols.resize(sub_deg);
        for (unsigned long j = 0; j < sub_deg; ++j) {
            RingElement z = re_zeta_power(K.conductor, (pk * j) % K.conductor);
            impl_->embed_cols[j] = z.coeffs;
        }
    }
}

PAdicContext::~PAdicContext() = default;
PAdicContext::PAdicContext(PAdicContext&&) noexcept = default;

const CyclotomicField& PAdicContext::field() const { return impl_->K; }
const PrimeSplitting& PAdicContext::splitting() const { return impl_->sp; }

long PAdicContext::ord(const RingElement& x, unsigned long label) const {
    if (x.is_zero())
        throw std::domain_error("ord of zero element");
    std::size_t idx = impl_->sp.index_of(label);
    long num_ord;
    if (!impl_->ramified) {
        num_ord = impl_->core.ord(x.coeffs, idx);
    } else {
        Poly sub = impl_->relative_norm(x.coeffs);
        num_ord = impl_->core.ord(sub, idx);
    }
    long den_ord = static_cast<long>(ord_p(x.den, Integer(impl_->p))) *
                   static_cast<long>(impl_->sp.e);
    return num_ord - den_ord;
}

std::vector<long> PAdicContext::ord_vector(const RingElement& x) const {
    std::vector<long> out;
    out.reserve(impl_->sp.labels.size());
    for (unsigned long lab : impl_->sp.labels)
        out.push_back(ord(x, lab));
    return out;
}

// ---------------------------------------------------------------------------
// Generator search
// ---------------------------------------------------------------------------

std::optional<RingElement> find_prime_generator(const PAdicContext& ctx, unsigned long label,
                                                unsigned long exponent,
                                                unsigned long coeff_bound) {
    const auto& K = ctx.field();
    const auto& sp = ctx.splitting();
    Integer target = 1;
    for (unsigned long i = 0; i < sp.f * exponent; ++i)
        target *= sp.p;

    std::size_t dim = K.degree;
    std::vector<long> c(dim, 0);
    long B = static_cast<long>(coeff_bound);
    // odometer over [-B, B]^dim, first nonzero coefficient positive
    // (x and -x generate the same ideal)
    std::fill(c.begin(), c.end(), -B);
    auto advance = [&]() -> bool {
        for (std::size_t i = 0; i < dim; ++i) {
            if (c[i] < B) {
                ++c[i];
                for (std::size_t j = 0; j < i; ++j)
                    c[j] = -B;
                return true;
            }
        }
        return false;
    };
    do {
        std::size_t lead = dim;
        for (std::size_t i = 0; i < dim; ++i)
            if (c[i] != 0) {
                lead = i;
                break;
            }
        if (lead == dim || c[lead] < 0)
            continue; // zero vector, or the mirror of a vector already tried

        std::vector<Integer> coeffs(dim);
        for (std::size_t i = 0; i < dim; ++i)
            coeffs[i] = c[i];
        Integer nrm = integral_norm(K.conductor, coeffs);
        if (nrm < 0)
            nrm = -nrm;
        if (nrm != target)
            continue;
        RingElement cand{K.conductor, coeffs, Integer(1)};
        bool ok = true;
        for (unsigned long lab : sp.labels) {
            long want = (lab == label) ? static_cast<long>(exponent) : 0;
            if (ctx.ord(cand, lab) != want) {
                ok = false;
                break;
            }
        }
        if (ok)
            return cand;
    } while (advance());
    return std::nullopt;
}

} // namespace weil_lab::cyclotomic
