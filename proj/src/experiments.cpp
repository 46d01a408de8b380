#include "weil_lab/experiments.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace weil_lab::experiments {

using modmath::factor;
using modmath::mod_reduce;
using modmath::powmod;
using modmath::primes_up_to;

void validate_task(const MTask& task) {
    if (task.a == 1 || task.a == -1 || task.a == 0)
        throw std::invalid_argument("a must be a square-free integer != 0, +-1");
    for (const auto& [q, mult] : factor(abs(task.a)))
        if (mult > 1)
            throw std::invalid_argument("a must be square-free");
    if (task.n == 0)
        throw std::invalid_argument("n must be positive");
}

namespace {

bool splits_in_F(unsigned long p, const MTask& task) {
    unsigned long C = task.F_conductor;
    if (C <= 1)
        return true;
    unsigned long r = p % C;
    if (task.real_subfield)
        return r == 1 % C || r == C - 1;
    return r == 1 % C;
}

bool passes_M(unsigned long p, const MTask& task) {
    if (mod_reduce(task.a, p) == 0)
        return false;
    if (!splits_in_F(p, task))
        return false;
    // the class of a generates a quotient of order n
    if ((p - 1) % task.n != 0)
        return false;
    for (const auto& [r, mult] : factor(Integer(task.n)))
        if (powmod(task.a, Integer(p - 1) / r, p) == 1)
            return false;
    // index of <a> in (Z/pZ)^x divides k (k = 0 disables the test)
    if (task.k > 0) {
        Integer index = Integer(p - 1) / modmath::multiplicative_order(task.a, Integer(p));
        if (Integer(task.k) % index != 0)
            return false;
    }
    return true;
}

// Deterministic strided parallel filter keeping the ascending order.
template <typename Pred>
std::vector<unsigned long> parallel_filter(const std::vector<std::uint64_t>& candidates,
                                           unsigned width, Pred pred) {
    std::vector<char> keep(candidates.size(), 0);
    if (width <= 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            keep[i] = pred(candidates[i]);
    } else {
        width = std::min<std::size_t>(width, candidates.size());
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < width; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < candidates.size(); i += width)
                    keep[i] = pred(candidates[i]);
            });
        for (auto& w : workers)
            w.join();
    }
    std::vector<unsigned long> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i])
            out.push_back(static_cast<unsigned long>(candidates[i]));
    return out;
}

} // namespace

std::vector<unsigned long> enumerate_M(const MTask& task, unsigned parallel_width) {
    validate_task(task);
    return parallel_filter(primes_up_to(task.bound), parallel_width,
                           [&](unsigned long p) { return passes_M(p, task); });
}

unsigned long power_obstruction(const Integer& a, unsigned long F_conductor,
                                bool real_subfield) {
    if (a == 1 || a == -1 || a == 0)
        throw std::invalid_argument("a must be a square-free integer != 0, +-1");
    unsigned long deg = 1;
    if (F_conductor > 1) {
        for (const auto& [q, mult] : factor(Integer(F_conductor))) {
            unsigned long qu = static_cast<unsigned long>(q.get_ui());
            unsigned long qe = 1;
            for (unsigned i = 1; i < mult; ++i)
                qe *= qu;
            deg *= qe * (qu - 1);
        }
        if (real_subfield)
            deg /= 2;
    }
    return 2 * deg;
}

std::vector<unsigned long> wieferich_search(unsigned long p, unsigned long bound,
                                            unsigned parallel_width) {
    if (!modmath::is_prime(Integer(p)))
        throw std::invalid_argument("p must be prime");
    return parallel_filter(primes_up_to(bound), parallel_width, [&](unsigned long l) {
        if (l == p)
            return false;
        Integer l2 = Integer(l) * l;
        return powmod(Integer(p), Integer(l - 1), l2) == 1;
    });
}

} // namespace weil_lab::experiments
