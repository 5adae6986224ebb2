#pragma once

#include "minkarr/arrangement.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace minkarr::io {

inline constexpr const char* version = "0.1.0";

// Raised for malformed arrangement files; the message names the offending
// field (e.g. disks[3].r).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

nlohmann::json arrangement_to_json(const arrangement::MuArrangement& arr);
arrangement::MuArrangement arrangement_from_json(const nlohmann::json& j);

arrangement::MuArrangement load_arrangement(const std::string& path);
void save_arrangement(const arrangement::MuArrangement& arr, const std::string& path);

// FNV-1a 64-bit digest of the file bytes, rendered as "fnv1a:" + 16 hex digits.
std::string file_digest(const std::string& path);

// Report skeleton: command, library version and (when given) input digest.
nlohmann::json base_report(const std::string& command, const std::string& input_path = "");

std::string read_file(const std::string& path);  // throws ParseError when unreadable
void write_file(const std::string& path, const std::string& content);

// Serialize with 2-space indentation and trailing newline; empty path writes
// to stdout.
void emit_json(const nlohmann::json& j, const std::string& path);

}  // namespace minkarr::io
