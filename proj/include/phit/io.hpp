#pragma once

#include <string>

#include "phit/drinfeld.hpp"

namespace phit {

enum class ExportFormat { text, json, cas };

// Throws std::invalid_argument on unknown names.
ExportFormat parse_format(const std::string& name);

// Serialize Phi_T.  Terms are ordered m descending, then n descending, in
// every format; zero coefficients are omitted.
//  - text: human-readable sum, T-coefficients in descending powers
//  - json: stable machine format (see import_phi_json)
//  - cas:  a single `Phi := ... ;` assignment with `^` powers and the field
//          modulus in a header comment
std::string export_phi(const ModularPoly& phi, ExportFormat fmt);

// Parse the JSON export.  Schema (all integers decimal, field elements as
// little-endian coefficient vectors over F_p):
//   { "q": int, "p": int, "e": int, "modulus": [int],
//     "terms": [ { "m": int, "n": int, "T": [[int]] } ] }
// "T" lists T-coefficients by ascending exponent.  The modulus must match the
// canonical one for (p, e).
ModularPoly import_phi_json(const std::string& text);

}  // namespace phit
