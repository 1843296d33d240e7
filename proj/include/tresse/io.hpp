#ifndef TRESSE_IO_HPP
#define TRESSE_IO_HPP

#include "tresse/catalog.hpp"
#include "tresse/fnonlinear.hpp"
#include "tresse/natinv.hpp"

#include <json.hpp>

#include <string>

namespace tresse {

// {"variables":["x","y"],"degree":4,"polynomial":"x^4 + 6*x^2*y^2 + y^4"}
NAryForm load_form(const nlohmann::json& j);
NAryForm load_form_file(const std::string& path);
nlohmann::json form_to_json(const NAryForm& f);

// {"variables":["x1","x2"],"order":4,
//  "coefficients":{"4,0":"1+x1","2,2":"6","0,4":"1","0,0":"x2"}}
// Keys are comma-joined multi-indices; omitted keys are zero. With
// allow_u, coefficients may mention the reserved variable "u".
LinearDiffOp load_operator(const nlohmann::json& j, bool allow_u = false);
LinearDiffOp load_operator_file(const std::string& path, bool allow_u = false);
nlohmann::json operator_to_json(const LinearDiffOp& a);

FOperator load_foperator(const nlohmann::json& j);
FOperator load_foperator_file(const std::string& path);

// {"operator":{...}, "box":"x1:1:2,x2:0:1,u:1:2", "frame":"Jq(sym), free/u"}
AdjustedTriple load_triple(const nlohmann::json& j);
AdjustedTriple load_triple_file(const std::string& path);

nlohmann::json certificate_to_json(const GeneralPositionCertificate& c);
nlohmann::json config_to_json(const ModelConfig& c);
nlohmann::json fingerprint_metadata(const ModelFingerprint& fp);
nlohmann::json verdict_to_json(const EquivalenceVerdict& v, const ModelConfig& cfg);
nlohmann::json invariant_reports_to_json(const std::vector<InvariantReport>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace tresse

#endif
