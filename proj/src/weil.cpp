#include "weil_lab/weil.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace weil_lab::weil {

using cyclotomic::re_conj;
using cyclotomic::re_galois;
using cyclotomic::re_inverse;
using cyclotomic::re_mul;
using cyclotomic::re_one;
using cyclotomic::re_pow;

bool SlopeVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](long v) { return v == 0; });
}

bool in_kernel_lattice(const PrimeSplitting& sp, const SlopeVector& s) {
    if (s.entries.size() != sp.labels.size())
        return false;
    for (const auto& fiber : sp.fibers) {
        long sum = 0;
        for (std::size_t idx : fiber)
            sum += s.entries[idx];
        if (sum != 0)
            return false;
    }
    return true;
}

std::vector<SlopeVector> kernel_basis(const CyclotomicField& K, const PrimeSplitting& sp,
                                      unsigned long p) {
    std::vector<SlopeVector> basis;
    for (const auto& fiber : sp.fibers) {
        if (fiber.size() != 2)
            continue;
        SlopeVector v{K.conductor, p, std::vector<long>(sp.labels.size(), 0)};
        v.entries[fiber[0]] = 1;
        v.entries[fiber[1]] = -1;
        basis.push_back(std::move(v));
    }
    return basis;
}

IntegralityResult integrality_vector(const PAdicContext& ctx, const RingElement& x,
                                     unsigned long q_exp) {
    const auto& sp = ctx.splitting();
    IntegralityResult r;
    r.integral = true;
    for (unsigned long lab : sp.labels) {
        long o = ctx.ord(x, lab);
        // ord_w(x)/ord_w(q) * [K_w:Q_p] = ord_w(x) * f / q_exp
        Rational v(Integer(o) * Integer(sp.f), Integer(q_exp));
        v.canonicalize();
        if (v.get_den() != 1)
            r.integral = false;
        r.entries.push_back(v);
    }
    return r;
}

SlopeVector slope_of(const PAdicContext& ctx, const RingElement& x, unsigned long q_exp) {
    auto iv = integrality_vector(ctx, x, q_exp);
    if (!iv.integral)
        throw NotIntegral("element has non-integral slope at q = p^" + std::to_string(q_exp));
    SlopeVector s{ctx.field().conductor, ctx.splitting().p, {}};
    for (const auto& v : iv.entries)
        s.entries.push_back(static_cast<long>(v.get_num().get_si()));
    return s;
}

unsigned long torsion_order(const CyclotomicField& K, const PrimeSplitting& sp, unsigned long n) {
    unsigned long fh = sp.f * K.class_number;
    if (n == 0 || n % fh != 0)
        throw DivisibilityError("level n = " + std::to_string(n) +
                                " is not divisible by f_K*h_K = " + std::to_string(fh));
    return K.torsion_order * n;
}

namespace {

// Unit a mod N with a = t^{-1} mod N' and a = 1 mod p^k, so that
// sigma_a maps the prime labeled 1 to the prime labeled t.
unsigned long transversal_unit(const PrimeSplitting& sp, unsigned long N, unsigned long t) {
    unsigned long Np = sp.cofactor;
    unsigned long pk = sp.p_power;
    unsigned long tinv = modmath::invmod(Integer(t), Integer(Np)).get_ui();
    for (unsigned long a = 1; a < N; ++a)
        if (a % Np == tinv % Np && (pk == 1 || a % pk == 1) && std::gcd(a, N) == 1)
            return a;
    throw std::logic_error("no transversal unit found");
}

} // namespace

WeilElement construct_weil(const PAdicContext& ctx, const SlopeVector& s, unsigned long n,
                           unsigned long coeff_bound) {
    const auto& K = ctx.field();
    const auto& sp = ctx.splitting();
    unsigned long fh = sp.f * K.class_number;
    if (n == 0 || n % fh != 0)
        throw DivisibilityError("level n = " + std::to_string(n) +
                                " is not divisible by f_K*h_K = " + std::to_string(fh));
    if (!in_kernel_lattice(sp, s))
        throw std::invalid_argument("slope vector is not in the kernel lattice");

    WeilElement w;
    w.level = n;
    w.slope = s;
    w.torsion_exponent = 0;
    if (s.is_zero()) {
        w.explicit_power = re_one(K.conductor);
        return w;
    }

    unsigned long w0 = sp.label_of(1);
    auto gen = cyclotomic::find_prime_generator(ctx, w0, n / sp.f, coeff_bound);
    if (!gen)
        throw GeneratorNotFound("prime generator search exhausted at coefficient bound " +
                                std::to_string(coeff_bound));

    RingElement num = re_one(K.conductor);
    RingElement den = re_one(K.conductor);
    for (const auto& fiber : sp.fibers) {
        if (fiber.size() != 2)
            continue;
        long st = s.entries[fiber[0]];
        if (st == 0)
            continue;
        unsigned long t = sp.labels[fiber[0]];
        unsigned long a = transversal_unit(sp, K.conductor, t);
        unsigned long a_bar = K.conductor - a; // iota composed with sigma_a
        RingElement pos = re_pow(re_galois(*gen, a), static_cast<unsigned long>(std::abs(st)));
        RingElement neg = re_pow(re_galois(*gen, a_bar), static_cast<unsigned long>(std::abs(st)));
        if (st > 0) {
            num = re_mul(num, pos);
            den = re_mul(den, neg);
        } else {
            num = re_mul(num, neg);
            den = re_mul(den, pos);
        }
    }
    RingElement x = re_mul(num, re_inverse(den, sp.p));
    // post-hoc checks: slope round-trip and the weight-0 law
    if (!(slope_of(ctx, x, n) == s))
        throw std::logic_error("construct_weil: slope round-trip failed");
    RingElement unit_check = re_mul(x, re_conj(x));
    if (!(unit_check == re_one(K.conductor)))
        throw std::logic_error("construct_weil: pi^n * conj(pi^n) != 1");
    w.explicit_power = std::move(x);
    return w;
}

WeilElement construct_weil_auto(const PAdicContext& ctx, const SlopeVector& s, unsigned long n,
                                unsigned long max_bound) {
    for (unsigned long b = 2; b <= max_bound; b *= 2) {
        try {
            return construct_weil(ctx, s, n, b);
        } catch (const GeneratorNotFound&) {
            if (b * 2 > max_bound)
                throw;
        }
    }
    return construct_weil(ctx, s, n, max_bound);
}

SlopeVector slope_galois(const PrimeSplitting& sp, const SlopeVector& s, unsigned long a) {
    SlopeVector out = s;
    for (std::size_t i = 0; i < sp.labels.size(); ++i) {
        unsigned long image = sp.act(a, sp.labels[i]);
        out.entries[sp.index_of(image)] = s.entries[i];
    }
    return out;
}

std::vector<unsigned long> slope_stabilizer(const CyclotomicField& K, const PrimeSplitting& sp,
                                            const SlopeVector& s) {
    std::vector<unsigned long> stab;
    for (unsigned long a : K.units)
        if (slope_galois(sp, s, a) == s)
            stab.push_back(a);
    return stab;
}

unsigned long center_degree(const PAdicContext& ctx, const WeilElement& w) {
    const auto& K = ctx.field();
    const auto& sp = ctx.splitting();
    auto stab = slope_stabilizer(K, sp, w.slope);
    unsigned long orbit = static_cast<unsigned long>(K.units.size() / stab.size());
    if (w.explicit_power) {
        // cross-check against the Galois orbit of (pi^n)^m
        RingElement y = re_pow(*w.explicit_power, K.torsion_order);
        std::set<std::vector<Integer>> seen;
        for (unsigned long a : K.units) {
            RingElement im = re_galois(y, a);
            std::vector<Integer> key = im.coeffs;
            key.push_back(im.den);
            seen.insert(std::move(key));
        }
        if (seen.size() != orbit)
            throw std::logic_error("centre degree mismatch between slope orbit and explicit orbit");
    }
    return orbit;
}

std::vector<SlopeVector> kernel_box(const CyclotomicField& K, const PrimeSplitting& sp,
                                    unsigned long p, long box) {
    std::vector<std::size_t> free_fibers;
    for (std::size_t i = 0; i < sp.fibers.size(); ++i)
        if (sp.fibers[i].size() == 2)
            free_fibers.push_back(i);
    std::vector<SlopeVector> out;
    std::vector<long> c(free_fibers.size(), -box);
    if (free_fibers.empty()) {
        out.push_back(SlopeVector{K.conductor, p, std::vector<long>(sp.labels.size(), 0)});
        return out;
    }
    while (true) {
        SlopeVector v{K.conductor, p, std::vector<long>(sp.labels.size(), 0)};
        for (std::size_t i = 0; i < free_fibers.size(); ++i) {
            const auto& fiber = sp.fibers[free_fibers[i]];
            v.entries[fiber[0]] = c[i];
            v.entries[fiber[1]] = -c[i];
        }
        out.push_back(std::move(v));
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (c[i] < box) {
                ++c[i];
                for (std::size_t j = 0; j < i; ++j)
                    c[j] = -box;
                break;
            }
        }
        if (i == c.size())
            break;
    }
    return out;
}

} // namespace weil_lab::weil
