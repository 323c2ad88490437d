#include "adelic/tree.hpp"

#include "adelic/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace adelic {

TreeCurve::TreeCurve(std::vector<TreePoint> points) : points_(std::move(points)) {
    std::set<std::string> ids;
    for (const auto& p : points_) {
        if (!ids.insert(p.id).second)
            throw std::invalid_argument("TreeCurve: duplicate point id '" + p.id + "'");
        if (p.residue_degree < 1) throw std::invalid_argument("TreeCurve: residue degree >= 1");
    }
}

const TreePoint* TreeCurve::find(const std::string& id) const {
    for (const auto& p : points_)
        if (p.id == id) return &p;
    return nullptr;
}

PLFunction::PLFunction(Rational value_at_zero, std::vector<Rational> breaks,
                       std::vector<Rational> slopes)
    : value_at_zero_(std::move(value_at_zero)), breaks_(std::move(breaks)),
      slopes_(std::move(slopes)) {
    if (breaks_.empty() || breaks_.front() != 0)
        throw std::invalid_argument("PLFunction: breakpoints must start at 0");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("PLFunction: breakpoints must increase");
    if (slopes_.size() + 1 != breaks_.size())
        throw std::invalid_argument("PLFunction: need one slope per interval");
    // drop trailing zero slopes so equal functions compare equal
    while (!slopes_.empty() && slopes_.back() == 0) {
        slopes_.pop_back();
        breaks_.pop_back();
    }
}

PLFunction PLFunction::constant(Rational value) {
    PLFunction f;
    f.value_at_zero_ = std::move(value);
    return f;
}

Rational PLFunction::value(const Rational& t) const {
    if (t < 0) throw std::invalid_argument("PLFunction: t >= 0");
    Rational v = value_at_zero_;
    for (std::size_t i = 0; i < slopes_.size(); ++i) {
        if (t >= breaks_[i + 1])
            v += slopes_[i] * (breaks_[i + 1] - breaks_[i]);
        else {
            v += slopes_[i] * (t - breaks_[i]);
            return v;
        }
    }
    return v;
}

Rational PLFunction::final_value() const { return value(breaks_.back()); }

bool PLFunction::is_zero() const { return value_at_zero_ == 0 && slopes_.empty(); }

namespace {

// slope on the interval [t, next break); 0 past the last breakpoint
Rational slope_after(const std::vector<Rational>& breaks, const std::vector<Rational>& slopes,
                     const Rational& t) {
    for (std::size_t i = slopes.size(); i-- > 0;)
        if (t >= breaks[i] && t < breaks[i + 1]) return slopes[i];
    return 0;
}

} // namespace

PLFunction& PLFunction::operator+=(const PLFunction& other) {
    std::vector<Rational> merged;
    std::merge(breaks_.begin(), breaks_.end(), other.breaks_.begin(), other.breaks_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        slopes.push_back(slope_after(breaks_, slopes_, merged[i]) +
                         slope_after(other.breaks_, other.slopes_, merged[i]));
    *this = PLFunction(value_at_zero_ + other.value_at_zero_, std::move(merged), std::move(slopes));
    return *this;
}

PLFunction& PLFunction::operator*=(const Rational& c) {
    if (c == 0) {
        *this = PLFunction();
        return *this;
    }
    value_at_zero_ *= c;
    for (auto& s : slopes_) s *= c;
    return *this;
}

Rational derivative_pairing(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> merged;
    std::merge(f.breaks_.begin(), f.breaks_.end(), g.breaks_.begin(), g.breaks_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    Rational total = 0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        total += slope_after(f.breaks_, f.slopes_, merged[i]) *
                 slope_after(g.breaks_, g.slopes_, merged[i]) * (merged[i + 1] - merged[i]);
    return total;
}

MetrizedDivisor::MetrizedDivisor(TreeCurve curve, std::map<std::string, long> orders,
                                 Rational root_value, std::map<std::string, PLFunction> branch_phi)
    : curve_(std::move(curve)), orders_(std::move(orders)), root_value_(std::move(root_value)),
      phi_(std::move(branch_phi)) {
    for (const auto& [id, ord] : orders_)
        if (!curve_.find(id))
            throw std::invalid_argument("MetrizedDivisor: order at unknown point '" + id + "'");
    for (auto& [id, f] : phi_) {
        if (!curve_.find(id))
            throw std::invalid_argument("MetrizedDivisor: phi at unknown point '" + id + "'");
        if (f.value_at_zero() != root_value_)
            throw std::invalid_argument("MetrizedDivisor: phi(" + id +
                                        ") does not meet the root value at eta_0");
    }
}

long MetrizedDivisor::order(const std::string& id) const {
    const auto it = orders_.find(id);
    return it == orders_.end() ? 0 : it->second;
}

PLFunction MetrizedDivisor::phi(const std::string& id) const {
    const auto it = phi_.find(id);
    return it == phi_.end() ? PLFunction::constant(root_value_) : it->second;
}

long MetrizedDivisor::degree() const {
    long total = 0;
    for (const auto& [id, ord] : orders_) total += ord * curve_.find(id)->residue_degree;
    return total;
}

MetrizedDivisor canonical_divisor(const TreeCurve& curve, std::map<std::string, long> orders) {
    return MetrizedDivisor(curve, std::move(orders), 0, {});
}

MetrizedDivisor linear_combination(long a, const MetrizedDivisor& d0, long b,
                                   const MetrizedDivisor& d1) {
    if (!(d0.curve() == d1.curve()))
        throw std::invalid_argument("linear_combination: curve mismatch");
    std::map<std::string, long> orders;
    for (const auto& [id, o] : d0.orders()) orders[id] += a * o;
    for (const auto& [id, o] : d1.orders()) orders[id] += b * o;
    std::erase_if(orders, [](const auto& kv) { return kv.second == 0; });
    std::set<std::string> branches;
    for (const auto& [id, f] : d0.listed_phi()) branches.insert(id);
    for (const auto& [id, f] : d1.listed_phi()) branches.insert(id);
    std::map<std::string, PLFunction> phi;
    for (const auto& id : branches)
        phi.emplace(id, d0.phi(id) * Rational(a) + d1.phi(id) * Rational(b));
    return MetrizedDivisor(d0.curve(), std::move(orders),
                           Rational(a) * d0.root_value() + Rational(b) * d1.root_value(),
                           std::move(phi));
}

Rational intersection(const MetrizedDivisor& d0, const MetrizedDivisor& d1) {
    if (!(d0.curve() == d1.curve())) throw std::invalid_argument("intersection: curve mismatch");
    Rational total = d1.green_at_root() * d0.degree() + d0.green_at_root() * d1.degree();
    std::set<std::string> branches;
    for (const auto& [id, f] : d0.listed_phi()) branches.insert(id);
    for (const auto& [id, f] : d1.listed_phi()) branches.insert(id);
    for (const auto& id : branches)
        total -= Rational(d0.curve().find(id)->residue_degree) *
                 derivative_pairing(d0.phi(id), d1.phi(id));
    return total;
}

namespace {

// sup over one branch of -t m - n phi(t) with m >= 0: attained at a
// breakpoint, or in the constant tail when m = 0.
Rational branch_sup(long m, const PLFunction& phi, unsigned long n) {
    if (m < 0) throw std::logic_error("branch_sup: negative canonical slope");
    Rational best = -Rational(n) * phi.value_at_zero();
    for (const auto& t : phi.breaks()) {
        const Rational v = -t * m - Rational(n) * phi.value(t);
        best = std::max(best, v);
    }
    if (m == 0) best = std::max(best, -Rational(n) * phi.final_value());
    return best;
}

void require_p1_shape(const MetrizedDivisor& d) {
    const TreePoint* zero = d.curve().find("0");
    const TreePoint* inf = d.curve().find("inf");
    if (!zero || !inf || zero->residue_degree != 1 || inf->residue_degree != 1)
        throw std::invalid_argument(
            "toric_det_limit: curve must contain points '0' and 'inf' of residue degree 1");
    for (const auto& [id, o] : d.orders())
        if (id != "0" && id != "inf")
            throw std::invalid_argument("toric_det_limit: divisor must be supported on 0 and inf");
    for (const auto& [id, f] : d.listed_phi())
        if (id != "0" && id != "inf" && !(f == PLFunction::constant(d.root_value())))
            throw std::invalid_argument("toric_det_limit: metric must live on the 0/inf branches");
    if (d.order("0") < 0 || d.order("inf") < 0 || d.degree() < 1)
        throw std::invalid_argument("toric_det_limit: divisor must be effective of degree >= 1");
}

} // namespace

Rational toric_det_log(const MetrizedDivisor& d, unsigned long n) {
    require_p1_shape(d);
    const long ord0 = d.order("0");
    const long ordinf = d.order("inf");
    const PLFunction phi0 = d.phi("0");
    const PLFunction phiinf = d.phi("inf");
    const long width = static_cast<long>(n) * d.degree();
    Rational det = 0;
    for (long b = 0; b <= width; ++b) {
        // section z^-a with a = b - n ord_inf; canonical slopes m_x >= 0
        const long a = b - static_cast<long>(n) * ordinf;
        const long m0 = static_cast<long>(n) * ord0 - a;
        const long minf = static_cast<long>(n) * ordinf + a;
        Rational best = -Rational(n) * d.root_value(); // the root eta_0
        best = std::max(best, branch_sup(m0, phi0, n));
        best = std::max(best, branch_sup(minf, phiinf, n));
        det += best;
    }
    return det;
}

VolumeReport toric_det_limit(const MetrizedDivisor& d, unsigned long n_max) {
    require_p1_shape(d);
    const auto ladder = doubling_ladder(n_max, 8);
    std::vector<std::pair<unsigned long, double>> seq(ladder.size());
    parallel_for(ladder.size(), [&](std::size_t i) {
        const unsigned long n = ladder[i];
        seq[i] = {n, to_double(-toric_det_log(d, n) / Rational(n * n, 2))};
    });
    VolumeReport report(std::move(seq), "toric-det");
    report.reference = to_double(intersection(d, d));
    return report;
}

nlohmann::json to_json(const MetrizedDivisor& d) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : d.curve().points())
        points.push_back({{"id", p.id}, {"degree", p.residue_degree}});
    nlohmann::json ord = nlohmann::json::object();
    for (const auto& [id, o] : d.orders()) ord[id] = o;
    nlohmann::json phi = nlohmann::json::object();
    for (const auto& [id, f] : d.listed_phi()) {
        nlohmann::json breaks = nlohmann::json::array();
        nlohmann::json slopes = nlohmann::json::array();
        for (const auto& b : f.breaks()) breaks.push_back(rational_to_string(b));
        for (const auto& s : f.slopes()) slopes.push_back(rational_to_string(s));
        phi[id] = {{"breaks", breaks}, {"slopes", slopes}};
    }
    return {{"points", points},
            {"ord", ord},
            {"root", rational_to_string(d.root_value())},
            {"phi", phi}};
}

MetrizedDivisor divisor_from_json(const nlohmann::json& j) {
    std::vector<TreePoint> points;
    for (const auto& pj : j.at("points"))
        points.push_back({pj.at("id").get<std::string>(), pj.value("degree", 1u)});
    TreeCurve curve(std::move(points));
    std::map<std::string, long> orders;
    if (j.contains("ord"))
        for (const auto& [id, o] : j.at("ord").items()) orders[id] = o.get<long>();
    const Rational root = parse_rational(j.value("root", std::string("0")));
    std::map<std::string, PLFunction> phi;
    if (j.contains("phi"))
        for (const auto& [id, fj] : j.at("phi").items()) {
            std::vector<Rational> breaks, slopes;
            for (const auto& b : fj.at("breaks")) breaks.push_back(parse_rational(b.get<std::string>()));
            for (const auto& s : fj.at("slopes")) slopes.push_back(parse_rational(s.get<std::string>()));
            phi.emplace(id, PLFunction(root, std::move(breaks), std::move(slopes)));
        }
    return MetrizedDivisor(std::move(curve), std::move(orders), root, std::move(phi));
}

} // namespace adelic
