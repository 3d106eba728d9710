#ifndef CW_JSON_IO_HPP
#define CW_JSON_IO_HPP

#include <json.hpp>

#include "cw/codes.hpp"
#include "cw/cwg.hpp"
#include "cw/invariants.hpp"
#include "cw/poly.hpp"

namespace cw::jio {

inline constexpr const char* kSchema = "cliffweil/1";

// All payloads carry {"schema": "cliffweil/1", "kind": ...}. Rationals
// are serialized as decimal strings to keep them exact.

nlohmann::json code_to_json(const codes::LinearCode& c);
codes::LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const poly::Poly& p, const std::string& field);
poly::Poly poly_from_json(const nlohmann::json& j);

nlohmann::json molien_to_json(const cwg::MolienSeries& m);
nlohmann::json structure_to_json(const cwg::StructureReport& r);
nlohmann::json weight_profile_to_json(const codes::WeightProfile& w);
nlohmann::json invariant_basis_to_json(const inv::InvariantBasis& b,
                                       const std::string& field);
nlohmann::json extremal_to_json(const inv::ExtremalReport& r);
nlohmann::json table_to_json(const std::vector<inv::TableRow>& rows);

// Serializes with stable key order and no whitespace variation, so
// identical inputs yield byte-identical output.
std::string dump(const nlohmann::json& j);

}  // namespace cw::jio

#endif
