#pragma once

#include "qlang/heckegk.hpp"
#include "qlang/phigamma.hpp"

#include <json.hpp>

namespace qlang {

// Field elements serialize as "0" or "z^k" with k the discrete log relative
// to the canonical generator of the smallest declared subfield containing
// the element (F_{q^m} when possible, else F_{q^{2m}}).
nlohmann::json fq_to_json(const Context& C, Fq a);
nlohmann::json type_to_json(const PrimePower& pp, const InertialType& t);
nlohmann::json rep_to_json(const Context& C, const SemisimpleRep& r);
nlohmann::json xpoint_to_json(const Context& C, const XPoint& pt);
nlohmann::json spoint_to_json(const Context& C, const SPoint& s);
nlohmann::json row_to_json(const Context& C, const CorrespondenceRow& row);
nlohmann::json tl_to_json(const Context& C, const TruncLaurent& f);
nlohmann::json module_to_json(const Context& C, const PhiGammaModule& D);

} // namespace qlang
