#pragma once

#include "adelic/bundle.hpp"
#include "adelic/curve.hpp"
#include "adelic/log_scalar.hpp"
#include "adelic/norm.hpp"

#include <json.hpp>

namespace adelic {

// LogScalar: {"constant":"num/den","ln":{"2":"num/den",...}}
nlohmann::json to_json(const LogScalar& x);
LogScalar log_scalar_from_json(const nlohmann::json& j);

// Curve: {"places":[{"id":...,"flavor":"arch"|"trivial"|{"nonarch":p},"mass":"num/den"}]}
nlohmann::json to_json(const AdelicCurve& curve);
AdelicCurve curve_from_json(const nlohmann::json& j);

// Norm: {"flavor":"ultrametric"|"hermitian","labels":[...],"weights":[...]}
nlohmann::json to_json(const DiagonalNorm& n);
DiagonalNorm norm_from_json(const nlohmann::json& j);

// Bundle: {"curve":...,"labels":[...],"norms":{"<place>":norm}}
nlohmann::json to_json(const SplitAdelicBundle& b);
SplitAdelicBundle bundle_from_json(const nlohmann::json& j);

} // namespace adelic
