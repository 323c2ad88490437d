#pragma once

#include "adelic/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace adelic {

/// Primes up to and including `bound`, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Prime factorization of a positive integer as (prime, exponent) pairs,
/// primes ascending. Throws std::domain_error when a cofactor cannot be
/// certified prime by trial division (beyond ~1e12).
std::vector<std::pair<std::uint64_t, long>> factorize(const Integer& n);

/// p-adic valuation v_p of a nonzero rational.
long padic_valuation(std::uint64_t p, const Rational& a);

/// v_p(n!) by Legendre's formula.
unsigned long factorial_valuation(std::uint64_t p, unsigned long n);

} // namespace adelic
