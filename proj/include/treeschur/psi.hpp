#pragma once

#include "treeschur/boundary.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace treeschur {

// Raised for malformed vector specs / files; the CLI maps it to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector DSL: "one", "cyl:<word>", "random:<seed>:<depth>", "@file.json".
StepFunction parse_psi(const GroupConfig& cfg, std::string_view spec);

// JSON schema: { "depth": d, "values": { "<word>": ["<re>", "<im>"], ... } }
// with every length-d word present and scalars in the canonical
// "a/b + c/d*sqrt(q)" form. An optional "rank" field is validated if present.
std::string step_function_json(const GroupConfig& cfg, const StepFunction& f);
StepFunction step_function_from_json(const GroupConfig& cfg, std::string_view text);
StepFunction load_step_function(const GroupConfig& cfg, const std::string& path);

}  // namespace treeschur
