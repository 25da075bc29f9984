#ifndef G1K_TOOLS_SURFACE_INPUT_HPP
#define G1K_TOOLS_SURFACE_INPUT_HPP

#include <string>

#include "g1k/alexform.hpp"
#include "g1k/invariants.hpp"

namespace g1k::tools {

/// Parsed form of the JSON surface document: the data record plus the
/// framing triple it belongs to.
struct SurfaceInput {
  AlexFormData data;
  SurfaceTriple triple;

  SurfaceInput(AlexFormData d, SurfaceTriple t) : data(std::move(d)), triple(std::move(t)) {}
};

/// Parses the JSON text of a surface document:
///   { "h1": int, "abc": [r, r, r], "ell": r, "lambda": {"A": r, ...},
///     "series": {"cap": int, "even_tail": [[deg, [[i, j, r], ...]], ...],
///                "gamma_tail": ...},
///     "orders": [int, int, int]?, "strict_odd": bool? }
/// where r is a rational as "num/den" string or JSON integer. Unknown keys
/// are rejected with g1k::error (a parse failure); mathematically invalid
/// content surfaces as not_alexander_form / parity_error.
SurfaceInput parse_surface_input(const std::string& json_text);

}  // namespace g1k::tools

#endif  // G1K_TOOLS_SURFACE_INPUT_HPP
