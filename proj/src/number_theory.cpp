#include "adelic/number_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace adelic {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, long>> factorize(const Integer& n) {
    if (n <= 0) throw std::domain_error("factorize: argument must be positive");
    std::vector<std::pair<std::uint64_t, long>> out;
    Integer m = n;
    for (std::uint64_t p = 2; Integer(p) * p <= m && p <= 1'000'000; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) {
        // trial division exhausted: m is prime iff it has no factor <= 1e6
        if (m > Integer("1000000000000"))
            throw std::domain_error("factorize: cofactor too large to certify prime: " + m.str());
        out.emplace_back(m.convert_to<std::uint64_t>(), 1);
    }
    return out;
}

long padic_valuation(std::uint64_t p, const Rational& a) {
    if (a == 0) throw std::domain_error("padic_valuation of zero");
    if (p < 2) throw std::invalid_argument("padic_valuation: p must be >= 2");
    auto count = [&](Integer v) {
        long e = 0;
        if (v < 0) v = -v;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        return e;
    };
    return count(numerator(a)) - count(denominator(a));
}

unsigned long factorial_valuation(std::uint64_t p, unsigned long n) {
    unsigned long total = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break; // avoid overflow of q *= p
    }
    return total;
}

} // namespace adelic
