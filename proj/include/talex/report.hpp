#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace talex {

// Reports are built as order-preserving JSON documents so that the machine
// form is deterministic and the parse/re-serialize round trip is
// byte-identical.
using Json = nlohmann::ordered_json;

// FNV-1a 64-bit content hash, reported alongside inputs so report consumers
// can tell which exact input text produced a result.
std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::string_view data);

// Human-readable rendering: one "key: value" line per scalar with keys
// aligned per nesting level, arrays as indented numbered entries.
std::string render_text(const Json& report);

} // namespace talex
