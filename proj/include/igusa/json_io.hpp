// JSON serialization (schema "igusa-laurent/1"); rationals as "num/den"
// strings, deterministic key order.
#pragma once

#include <json.hpp>

#include "igusa/oracle.hpp"
#include "igusa/oscillatory.hpp"
#include "igusa/series.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

using Json = nlohmann::ordered_json;

Json json_polytope(const NewtonPolytope& P);
Json json_fan(const Fan& fan);
Json json_rational_qt(const RationalQT& r);
Json json_zeta(const ZetaResult& z);
Json json_poles(const PoleData& pd);
Json json_series(const std::map<long, Rat>& coeffs);
Json json_spectrum(const ValuationSpectrum& s);
Json json_asymptotics(const Asymptotics& a);
Json json_complex(const ComplexValue& v);

Json json_envelope(const std::string& op, Json payload);

}  // namespace igusa
