#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "artin/certificate.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

// Canonical text formats. Serialization is byte-deterministic: fixed key
// order, 2-space indent, trailing newline, decimal scalars (prime fields as
// integer residues, extension fields as low-to-high coefficient arrays,
// rationals as "a" / "a/b" strings).

Json scalar_to_json(const Field& f, const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where);

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Json certificate_to_json(const Algebra& a, const Certificate& cert);
Certificate certificate_from_json(const Algebra& a, const Json& j);

/// Parses and, by default, fully validates (associativity, unity recomputed
/// and cross-checked against the stored one). Throws IoError with file/field
/// context on any problem.
Algebra load_algebra(const std::string& path, bool validate_table = true);
void save_algebra(const Algebra& a, const std::string& path);

Certificate load_certificate(const Algebra& a, const std::string& path);
void save_certificate(const Algebra& a, const Certificate& cert, const std::string& path);

std::string dump_canonical(const Json& j);

}  // namespace artin
