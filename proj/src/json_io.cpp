#include "adelic/json_io.hpp"

#include <stdexcept>

namespace adelic {

using nlohmann::json;

json to_json(const LogScalar& x) {
    json terms = json::object();
    for (const auto& [p, c] : x.prime_terms()) terms[std::to_string(p)] = rational_to_string(c);
    return json{{"constant", rational_to_string(x.constant())}, {"ln", terms}};
}

LogScalar log_scalar_from_json(const json& j) {
    LogScalar x(parse_rational(j.value("constant", std::string("0"))));
    if (j.contains("ln"))
        for (const auto& [key, val] : j.at("ln").items())
            x += LogScalar::ln_prime(std::stoull(key), parse_rational(val.get<std::string>()));
    return x;
}

json to_json(const AdelicCurve& curve) {
    json places = json::array();
    for (const auto& pl : curve.places()) {
        json flavor;
        switch (pl.kind) {
        case PlaceKind::arch: flavor = "arch"; break;
        case PlaceKind::trivial: flavor = "trivial"; break;
        case PlaceKind::nonarch: flavor = json{{"nonarch", pl.prime}}; break;
        }
        places.push_back(
            {{"id", pl.id}, {"flavor", flavor}, {"mass", rational_to_string(pl.mass)}});
    }
    return json{{"places", places}};
}

AdelicCurve curve_from_json(const json& j) {
    std::vector<Place> places;
    for (const auto& pj : j.at("places")) {
        Place pl;
        pl.id = pj.at("id").get<std::string>();
        pl.mass = parse_rational(pj.at("mass").get<std::string>());
        const auto& flavor = pj.at("flavor");
        if (flavor.is_string()) {
            const auto s = flavor.get<std::string>();
            if (s == "arch")
                pl.kind = PlaceKind::arch;
            else if (s == "trivial")
                pl.kind = PlaceKind::trivial;
            else
                throw std::invalid_argument("curve json: unknown flavor '" + s + "'");
        } else {
            pl.kind = PlaceKind::nonarch;
            pl.prime = flavor.at("nonarch").get<std::uint64_t>();
        }
        places.push_back(std::move(pl));
    }
    return AdelicCurve(std::move(places));
}

json to_json(const DiagonalNorm& n) {
    json weights = json::array();
    for (const auto& w : n.weights()) weights.push_back(to_json(w));
    return json{{"flavor", n.flavor() == NormFlavor::hermitian ? "hermitian" : "ultrametric"},
                {"labels", n.labels()},
                {"weights", weights}};
}

DiagonalNorm norm_from_json(const json& j) {
    const auto fl = j.at("flavor").get<std::string>();
    if (fl != "hermitian" && fl != "ultrametric")
        throw std::invalid_argument("norm json: unknown flavor '" + fl + "'");
    std::vector<LogScalar> weights;
    for (const auto& wj : j.at("weights")) weights.push_back(log_scalar_from_json(wj));
    return DiagonalNorm(fl == "hermitian" ? NormFlavor::hermitian : NormFlavor::ultrametric,
                        j.at("labels").get<std::vector<std::string>>(), std::move(weights));
}

json to_json(const SplitAdelicBundle& b) {
    json norms = json::object();
    for (const auto& [id, n] : b.norms()) norms[id] = to_json(n);
    return json{{"curve", to_json(b.curve())}, {"labels", b.labels()}, {"norms", norms}};
}

SplitAdelicBundle bundle_from_json(const json& j) {
    AdelicCurve curve = curve_from_json(j.at("curve"));
    std::map<std::string, DiagonalNorm> norms;
    for (const auto& [id, nj] : j.at("norms").items()) norms.emplace(id, norm_from_json(nj));
    return SplitAdelicBundle(std::move(curve), j.at("labels").get<std::vector<std::string>>(),
                             std::move(norms));
}

} // namespace adelic
