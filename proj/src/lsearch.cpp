#include "weil_lab/lsearch.hpp"

#include "weil_lab/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace weil_lab::lsearch {

using cyclotomic::re_pow;
using modmath::factor;
using modmath::invmod;
using modmath::powmod;
using modmath::primes_up_to;

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "undetermined";
    }
}

namespace {

unsigned long euler_phi(unsigned long n) {
    unsigned long r = 1;
    for (const auto& [q, k] : factor(Integer(n))) {
        unsigned long qu = static_cast<unsigned long>(q.get_ui());
        unsigned long qe = 1;
        for (unsigned i = 1; i < k; ++i)
            qe *= qu;
        r *= qe * (qu - 1);
    }
    return r;
}

// Elements of exact multiplicative order N mod l (the roots of Phi_N mod l).
std::vector<unsigned long> order_N_roots(unsigned long l, unsigned long N) {
    if ((l - 1) % N != 0)
        return {};
    std::vector<Integer> cofactors;
    for (const auto& [r, _] : factor(Integer(N)))
        cofactors.push_back(Integer(N) / r);
    std::vector<unsigned long> roots;
    for (unsigned long x = 1; x < l; ++x) {
        if (powmod(x, N, l) != 1)
            continue;
        bool exact = true;
        for (const auto& c : cofactors)
            if (powmod(x, c, l) == 1) {
                exact = false;
                break;
            }
        if (exact)
            roots.push_back(x);
    }
    return roots;
}

// Residue of x in K at the prime of K above l picked by the root
// zeta_N -> z (requires l coprime to the denominator).
unsigned long residue_at_root(const RingElement& x, unsigned long z, unsigned long l) {
    Integer acc = 0;
    Integer zp = 1;
    for (const auto& c : x.coeffs) {
        acc = (acc + c * zp) % l;
        zp = zp * z % l;
    }
    acc = acc * invmod(x.den, Integer(l)) % l;
    return static_cast<unsigned long>(modmath::mod_reduce(acc, Integer(l)).get_ui());
}

// Monic minimal polynomial of y over Q as rational coefficients
// (degree = Galois orbit size), via the product of (X - sigma(y)).
std::vector<Rational> minimal_polynomial(const CyclotomicField& K, const RingElement& y) {
    std::vector<RingElement> orbit;
    for (unsigned long a : K.units) {
        RingElement im = cyclotomic::re_galois(y, a);
        if (std::none_of(orbit.begin(), orbit.end(),
                         [&](const RingElement& o) { return o == im; }))
            orbit.push_back(std::move(im));
    }
    std::vector<RingElement> poly{cyclotomic::re_one(K.conductor)};
    for (const auto& root : orbit) {
        std::vector<RingElement> next(poly.size() + 1, cyclotomic::re_zero(K.conductor));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = cyclotomic::re_add(next[i + 1], poly[i]);
            next[i] = cyclotomic::re_sub(next[i], cyclotomic::re_mul(poly[i], root));
        }
        poly = std::move(next);
    }
    std::vector<Rational> out;
    for (const auto& c : poly) {
        for (std::size_t i = 1; i < c.coeffs.size(); ++i)
            if (c.coeffs[i] != 0)
                throw std::logic_error("minimal polynomial coefficient not rational");
        Rational r(c.coeffs[0], c.den);
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<unsigned long> poly_roots_mod_l(const std::vector<Rational>& poly,
                                            unsigned long l) {
    std::vector<Integer> red;
    for (const auto& c : poly)
        red.push_back(c.get_num() * invmod(c.get_den(), Integer(l)) % l);
    std::vector<unsigned long> roots;
    for (unsigned long x = 0; x < l; ++x) {
        Integer acc = 0;
        for (auto it = red.rbegin(); it != red.rend(); ++it)
            acc = (acc * x + *it) % l;
        if (modmath::mod_reduce(acc, Integer(l)) == 0)
            roots.push_back(x);
    }
    return roots;
}

} // namespace

bool condition_c(unsigned long l, unsigned long p, unsigned long mn) {
    if ((l - 1) % mn != 0)
        return false;
    for (const auto& [r, _] : factor(Integer(mn)))
        if (powmod(p, Integer(l - 1) / r, l) == 1)
            return false;
    return true;
}

bool condition_d(unsigned long l, const SearchTask& task,
                 std::vector<std::string>* certificate) {
    unsigned long modulus = std::lcm(task.K.conductor, task.mn);
    if (l % modulus != 1 % modulus) {
        if (certificate)
            certificate->push_back("d: " + std::to_string(l) + " != 1 mod lcm(N,mn) = " +
                                   std::to_string(modulus));
        return false;
    }
    if (certificate)
        certificate->push_back("d: " + std::to_string(l) + " = 1 mod " +
                               std::to_string(modulus));
    if (task.n == 1)
        return true;
    auto roots = order_N_roots(l, task.K.conductor);
    for (const auto& gen : task.generators) {
        if (gen.slope.is_zero())
            continue;
        if (!gen.explicit_power)
            throw MissingCertificate("generator lacks an explicit representation");
        for (unsigned long z : roots) {
            unsigned long res = residue_at_root(*gen.explicit_power, z, l);
            bool power = modmath::is_rth_power_residue(Integer(res), Integer(task.n),
                                                       Integer(l));
            if (certificate)
                certificate->push_back("d: residue " + std::to_string(res) +
                                       (power ? " is" : " is not") + " an n-th power mod " +
                                       std::to_string(l));
            if (!power)
                return false;
        }
    }
    return true;
}

Verdict condition_b(unsigned long l, const SearchTask& task,
                    std::vector<std::string>* certificate) {
    Verdict verdict = Verdict::yes;
    for (const auto& gen : task.generators) {
        if (gen.slope.is_zero())
            continue; // torsion: pi^{mn} = 1 is a norm
        if (!gen.explicit_power)
            throw MissingCertificate("generator lacks an explicit representation");
        // pi^{mn} = (pi^n)^m
        RingElement y = re_pow(*gen.explicit_power, task.K.torsion_order);
        auto poly = minimal_polynomial(task.K, y);
        auto roots = poly_roots_mod_l(poly, l);
        for (unsigned long r : roots) {
            if (r == 0)
                throw std::logic_error("pi^{mn} reduces to 0 mod l");
            bool power =
                modmath::is_rth_power_residue(Integer(r), Integer(task.mn), Integer(l));
            if (certificate)
                certificate->push_back("b: residue " + std::to_string(r) +
                                       (power ? " is" : " is not") + " an mn-th power mod " +
                                       std::to_string(l));
            if (!power)
                return Verdict::no;
        }
        if (roots.size() + 1 < poly.size()) {
            // some place of Q[pi^{mn}] above l has residue degree > 1
            if (certificate)
                certificate->push_back("b: undetermined, a place above " + std::to_string(l) +
                                       " has residue degree > 1");
            verdict = Verdict::undetermined;
        }
    }
    return verdict;
}

Candidate evaluate_candidate(unsigned long l, const SearchTask& task) {
    Candidate c;
    c.l = l;
    c.passes_c = condition_c(l, task.p, task.mn);
    if (c.passes_c) {
        c.L_description =
            "degree-" + std::to_string(task.mn) + " subfield of Q(zeta_" + std::to_string(l) + ")";
        for (const auto& [r, _] : factor(Integer(task.mn))) {
            std::ostringstream os;
            os << "c: " << task.p << "^((l-1)/" << r << ") mod " << l << " = "
               << powmod(task.p, Integer(l - 1) / r, l);
            c.certificate.push_back(os.str());
        }
    } else {
        c.certificate.push_back("c: fails");
    }
    c.passes_a = c.passes_c; // p inert in L iff its class generates Gal(L/Q)
    c.passes_d = condition_d(l, task, &c.certificate);
    c.passes_b = c.passes_c ? condition_b(l, task, &c.certificate) : Verdict::undetermined;
    c.hit = task.mode == Mode::sufficient_cd ? (c.passes_c && c.passes_d)
                                             : (c.passes_a && c.passes_b == Verdict::yes);
    return c;
}

SearchTask make_task(const CyclotomicField& K, unsigned long p, unsigned long n,
                     unsigned long bound, Mode mode) {
    SearchTask task;
    task.K = K;
    task.p = p;
    task.n = n;
    task.mn = K.torsion_order * n;
    task.bound = bound;
    task.mode = mode;
    auto sp = cyclotomic::split_prime(K, p);
    auto basis = weil::kernel_basis(K, sp, p);
    if (n == 0 || (!basis.empty() && n % (sp.f * K.class_number) != 0))
        throw DivisibilityError("level n = " + std::to_string(n) +
                                " is not divisible by f_K*h_K");
    if (!basis.empty()) {
        cyclotomic::PAdicContext ctx(K, p);
        for (const auto& s : basis)
            task.generators.push_back(weil::construct_weil_auto(ctx, s, n));
    }
    return task;
}

std::vector<Candidate> search(const SearchTask& task, unsigned parallel_width) {
    std::vector<unsigned long> ls;
    for (unsigned long l : primes_up_to(task.bound))
        if (l != task.p && task.K.conductor % l != 0 && task.mn % l != 0)
            ls.push_back(l);
    std::vector<Candidate> out(ls.size());
    if (parallel_width <= 1 || ls.size() < 2) {
        for (std::size_t i = 0; i < ls.size(); ++i)
            out[i] = evaluate_candidate(ls[i], task);
        return out;
    }
    unsigned width = std::min<std::size_t>(parallel_width, ls.size());
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < width; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < ls.size(); i += width)
                out[i] = evaluate_candidate(ls[i], task);
        });
    for (auto& w : workers)
        w.join();
    return out;
}

std::optional<Candidate> first_hit(const std::vector<Candidate>& candidates) {
    for (const auto& c : candidates)
        if (c.hit)
            return c;
    return std::nullopt;
}

ProbeReport probe_question(const std::vector<ProbePair>& grid, unsigned parallel_width) {
    ProbeReport report;
    for (const auto& pair : grid) {
        ProbeRow row;
        row.conductor = pair.conductor;
        row.p = pair.p;
        row.n = pair.n;
        try {
            auto K = cyclotomic::describe_field(pair.conductor);
            auto task = make_task(K, pair.p, pair.n, pair.bound);
            row.heuristic_density = Rational(1, euler_phi(task.mn));
            unsigned long modulus = std::lcm(K.conductor, task.mn);
            auto candidates = search(task, parallel_width);
            for (const auto& c : candidates) {
                if (c.l % modulus == 1 % modulus)
                    ++row.eligible;
                if (c.hit) {
                    ++row.hits;
                    if (!row.found) {
                        row.found = true;
                        row.smallest_hit = c.l;
                    }
                }
            }
        } catch (const DivisibilityError& e) {
            row.error = std::string("DivisibilityError: ") + e.what();
        } catch (const UnsupportedConductor& e) {
            row.error = std::string("UnsupportedConductor: ") + e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace weil_lab::lsearch
