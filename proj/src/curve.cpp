#include "adelic/curve.hpp"

#include "adelic/number_theory.hpp"

#include <set>
#include <stdexcept>

namespace adelic {

AdelicCurve::AdelicCurve(std::vector<Place> places) : places_(std::move(places)) {
    std::set<std::string> ids;
    std::set<std::uint64_t> primes;
    for (const auto& pl : places_) {
        if (!ids.insert(pl.id).second)
            throw std::invalid_argument("AdelicCurve: duplicate place id '" + pl.id + "'");
        if (pl.mass < 0) throw std::invalid_argument("AdelicCurve: negative mass at '" + pl.id + "'");
        if (pl.kind == PlaceKind::nonarch) {
            if (pl.prime < 2) throw std::invalid_argument("AdelicCurve: nonarch place needs a prime");
            if (!primes.insert(pl.prime).second)
                throw std::invalid_argument("AdelicCurve: duplicate nonarch prime");
        }
    }
}

Rational AdelicCurve::arch_mass() const {
    Rational m = 0;
    for (const auto& pl : places_)
        if (pl.kind == PlaceKind::arch) m += pl.mass;
    return m;
}

const Place* AdelicCurve::find(const std::string& id) const {
    for (const auto& pl : places_)
        if (pl.id == id) return &pl;
    return nullptr;
}

bool operator==(const AdelicCurve& a, const AdelicCurve& b) {
    if (a.places_.size() != b.places_.size()) return false;
    for (std::size_t i = 0; i < a.places_.size(); ++i) {
        const Place& x = a.places_[i];
        const Place& y = b.places_[i];
        if (x.id != y.id || x.kind != y.kind || x.prime != y.prime || x.mass != y.mass) return false;
    }
    return true;
}

AdelicCurve standard_rational_curve(std::uint64_t prime_bound) {
    if (prime_bound < 2) throw std::invalid_argument("standard_rational_curve: prime_bound must be >= 2");
    std::vector<Place> places;
    places.push_back({"inf", PlaceKind::arch, 0, 1});
    for (std::uint64_t p : primes_up_to(prime_bound))
        places.push_back({"v" + std::to_string(p), PlaceKind::nonarch, p, 1});
    return AdelicCurve(std::move(places));
}

AdelicCurve trivial_curve_s0() { return AdelicCurve({{"triv", PlaceKind::trivial, 0, 1}}); }

LogScalar log_abs(const Rational& a, const Place& place) {
    if (a == 0) throw std::domain_error("log_abs of zero");
    switch (place.kind) {
    case PlaceKind::trivial:
        return LogScalar();
    case PlaceKind::nonarch:
        return LogScalar::ln_prime(place.prime, Rational(-padic_valuation(place.prime, a)));
    case PlaceKind::arch: {
        Rational v = a < 0 ? Rational(-a) : a;
        return LogScalar::ln_rational(v);
    }
    }
    throw std::logic_error("log_abs: unknown place kind");
}

LogScalar product_formula_defect(const Rational& a, const AdelicCurve& curve) {
    if (a == 0) throw std::domain_error("product_formula_defect of zero");
    LogScalar total;
    for (const auto& pl : curve.places()) {
        if (pl.kind == PlaceKind::trivial || pl.mass == 0) continue;
        if (pl.kind == PlaceKind::nonarch) {
            // places whose prime does not divide a contribute nothing
            const long v = padic_valuation(pl.prime, a);
            if (v == 0) continue;
            total += LogScalar::ln_prime(pl.prime, Rational(-v) * pl.mass);
        } else {
            total += log_abs(a, pl) * pl.mass;
        }
    }
    return total;
}

} // namespace adelic
