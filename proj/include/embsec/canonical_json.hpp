// canonical_json.hpp - deterministic JSON rendering: object keys sorted,
// 2-space indent, every floating-point number printed with exactly nine
// decimal places. Identical trees always render to identical bytes, which
// keeps golden files and byte-determinism checks stable across platforms.
#pragma once

#include <string>

#include "json.hpp"

namespace embsec {

// Renders the tree without a trailing newline.
std::string canonical_dump(const nlohmann::json& value);

// Rounds to nine decimal places - the same precision canonical_dump
// prints - so a value survives render -> parse -> compare exactly.
double quantize9(double value);

}  // namespace embsec
