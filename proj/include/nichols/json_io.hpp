#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nichols/families.hpp"
#include "nichols/symmetrizer.hpp"

namespace nichols {

using nlohmann::json;

// CycloNum <-> {"order": M, "coeffs": [[num, den], ...]}, degree order
// 0..phi(M)-1. Integers outside the int64 range are emitted as strings.
json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j);

// RootExpr <-> {"order": M, "exp": k, "sign": +-1}
json root_to_json(const RootExpr& r);
RootExpr root_from_json(const json& j);

// Braiding <-> {"dim": d, "order": M, "entries": [{"i","j","si","tj","coeff"}...]}
// with 1-based indices; coeff is a RootExpr object when the value is a signed
// power of the ambient root, else a CycloNum object.
json braiding_to_json(const MonomialBraiding& c);
MonomialBraiding braiding_from_json(const json& j);

// Rack <-> {"size": n, "table": [[...]]}, 0-based values (rack on Z_n).
json rack_to_json(const Rack& r);
Rack rack_from_json(const json& j);

// Solution <-> {"size": m, "sigma": [[...]], "tau": [[...]]}, 1-based values.
json solution_to_json(const SetSolution& s);
SetSolution solution_from_json(const json& j);

// {"dims": [...], "total": T|null, "top_degree": t|null,
//  "verdict": "finite"|"undetermined", "degrees_computed": k, "stats": [...]}
json report_to_json(const ScanReport& rep);

json verdict_to_json(const FamilyVerdict& v);

// {"family": ..., "params": {...}}; Vabe coefficients accept root literals
// ("z8^3", "-z4", "1", "-1"), RootExpr objects or CycloNum objects.
json descriptor_to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const json& j);

/// Parse a root-of-unity literal: 1, -1, zM, zM^k, -zM^k.
RootExpr parse_root_literal(const std::string& text);

/// Debug dump: one {"r":, "c":, "v":} object per stored entry, JSON lines.
void dump_matrix(std::ostream& os, const SparseMatrix& m);

}  // namespace nichols
