#pragma once

#include "adelic/log_scalar.hpp"
#include "adelic/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adelic {

enum class PlaceKind { trivial, nonarch, arch };

/// One absolute-value descriptor of the measured family: an id, a flavor
/// (trivial, p-adic, or archimedean) and a measure mass nu({omega}).
struct Place {
    std::string id;
    PlaceKind kind = PlaceKind::trivial;
    std::uint64_t prime = 0; // meaningful for nonarch only
    Rational mass = 1;
};

/// A finite measured family of absolute values on Q. Invariants: ids unique,
/// nonarch primes distinct, masses >= 0, at most one archimedean place in the
/// standard rational curve construction.
class AdelicCurve {
public:
    AdelicCurve() = default;
    explicit AdelicCurve(std::vector<Place> places);

    const std::vector<Place>& places() const { return places_; }
    Rational arch_mass() const;
    bool arch_free() const { return arch_mass() == 0; }
    const Place* find(const std::string& id) const;

    friend bool operator==(const AdelicCurve&, const AdelicCurve&);

private:
    std::vector<Place> places_;
};

/// One archimedean place of mass 1 plus one p-adic place of mass 1 per prime
/// p <= prime_bound.
AdelicCurve standard_rational_curve(std::uint64_t prime_bound);

/// A single trivial place of mass 1 (the curve S_0 of the trivially valued
/// field).
AdelicCurve trivial_curve_s0();

/// ln|a| at a place, exact. Archimedean values are decomposed over the prime
/// factorization of numerator and denominator.
LogScalar log_abs(const Rational& a, const Place& place);

/// sum_omega mass(omega) * log_abs(a, omega). Zero whenever every prime of a
/// appears among the curve's nonarch places (the product formula).
LogScalar product_formula_defect(const Rational& a, const AdelicCurve& curve);

} // namespace adelic
