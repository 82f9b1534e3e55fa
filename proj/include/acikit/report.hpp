#pragma once

#include <string>

#include <json.hpp>

#include "acikit/decompose.hpp"

namespace acik {

using Json = nlohmann::ordered_json;

/// FNV-1a 64 of the canonical serialization, as fixed-width hex.
std::string input_digest(const ACIMatrix& A);

/// Common header: schema version, digest, field, shape.
Json report_header(const ACIMatrix& A);

Json rank_json(const ACIMatrix& A, const RankSummary& s);
Json classification_json(const ACIMatrix& A, const Classification& c);
Json decomposition_json(const ACIMatrix& A, const BlockDecomposition& d);
Json core_json(const ACIMatrix& A, const CoreCertificate& c);
Json equivalence_json(const Field& f, const Equivalence& e);

/// Renders a report document: structured (JSON, 2-space indent, trailing
/// newline) or flat "key = value" text lines.
std::string emit_report(const Json& doc, bool structured);

}  // namespace acik
