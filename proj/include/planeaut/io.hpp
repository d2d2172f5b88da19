#pragma once

// Text file formats for forms and matrices, and JSON for reports.
//
// Polynomial file:          Matrix file:             Generator file:
//   zeta 12                   zeta 3                   matrices separated by
//   degree 4                  0, 1, 0                  blank lines; a block
//   4 0 0 : 1                 0, 0, 1                  without a zeta line
//   0 4 0 : z^3 + 1           1, 0, 0                  inherits the previous one
//
// '#' starts a comment. Matrix entries are separated by commas; a row
// without commas is split at whitespace.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "planeaut/bounds.hpp"
#include "planeaut/classify.hpp"
#include "planeaut/polyring.hpp"
#include "planeaut/projective.hpp"

namespace planeaut {

/// Throws ParseError with the offending line number.
TernaryForm parse_poly(std::string_view text);
std::string format_poly(const TernaryForm& f);

ProjTransform parse_matrix(std::string_view text);
std::vector<ProjTransform> parse_generators(std::string_view text);
std::string format_matrix(const ProjTransform& m);
std::string format_generators(const std::vector<ProjTransform>& gens);

/// Throws ParseError if the file cannot be read.
std::string read_text_file(const std::string& path);
TernaryForm read_poly_file(const std::string& path);
std::vector<ProjTransform> read_generators_file(const std::string& path);

nlohmann::json to_json(const TernaryForm& f);
TernaryForm form_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProjTransform& m);
ProjTransform transform_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const BoundAudit& b);
void from_json(const nlohmann::json& j, BoundAudit& b);
void to_json(nlohmann::json& j, const ClassificationReport& r);
void from_json(const nlohmann::json& j, ClassificationReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);
void to_json(nlohmann::json& j, const AuditEntry& e);
void from_json(const nlohmann::json& j, AuditEntry& e);
void to_json(nlohmann::json& j, const AuditReport& r);
void from_json(const nlohmann::json& j, AuditReport& r);

/// Human-readable renderings for the text output format.
std::string format_text(const ClassificationReport& r);
std::string format_text(const BoundReport& r);
std::string format_text(const AuditReport& r);

}  // namespace planeaut
