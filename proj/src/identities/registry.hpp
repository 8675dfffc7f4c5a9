#pragma once

#include "identities/report.hpp"
#include "numerics/precision.hpp"

#include <map>
#include <string>
#include <vector>

namespace lamzeta {

enum class ParamKind {
  Integer,  // decimal integer
  Number,   // literal such as "2pi", "pi^3/4" or "0.5"
};

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Integer;
  bool required = true;
  std::string help;
};

struct IdentitySchema {
  IdentityId id;
  std::string summary;
  std::vector<ParamSpec> params;
  /// alpha and beta are tied by a constraint; at least one must be given and
  /// a missing one is solved from the other.
  bool paired = false;
};

const IdentitySchema& identity_schema(IdentityId id);

/// Validates `params` against the schema, solves a missing alpha or beta,
/// and runs the verifier. Unknown or malformed keys raise UsageError.
IdentityReport run_identity(IdentityId id, const std::map<std::string, std::string>& params,
                            const PrecisionContext& ctx);

}  // namespace lamzeta
