#pragma once

#include "tcbound/bounds.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcb::io {

using json = nlohmann::json;

inline constexpr const char* kToolName = "tcbound";
inline constexpr const char* kToolVersion = "0.3.0";

// Strict descriptor parsing: unknown keys and wrong types raise SchemaError
// naming the offending field.
bounds::SpaceDescriptor parse_descriptor(const json& j);
bounds::SpaceDescriptor parse_descriptor_text(std::string_view text);

cohomology::AlgebraPtr parse_cohomology(const json& j, const std::string& path = "cohomology");

// SHA-256 of the canonical (sorted-key, compact) dump.
std::string input_hash(const json& descriptor);

json report_to_json(const bounds::BoundReport& r, const std::string& input_hash);
bounds::BoundReport report_from_json(const json& j);

std::string render_text(const bounds::BoundReport& r);

// Built-in descriptors for every space family the tool knows about.
const std::vector<std::pair<std::string, json>>& builtin_descriptors();
const json* find_builtin(std::string_view name);

} // namespace tcb::io
