#pragma once

// JSON documents for instances, triangulations, flip sequences and audit reports.
// Readers are strict and validate what they load; writers are canonical, so
// serialize(parse(serialize(x))) == serialize(x) byte for byte.

#include "flipdist/lemmas.hpp"
#include "flipdist/morph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace flipdist {

inline constexpr std::string_view kInstanceFormat = "flipdist-instance";
inline constexpr std::string_view kTriangulationFormat = "flipdist-triangulation";
inline constexpr std::string_view kSequenceFormat = "flipdist-sequence";
inline constexpr std::string_view kAuditFormat = "flipdist-audit";
inline constexpr int kFormatVersion = 1;

/// Throws Error(ParseError) with a line:column or field location, and
/// Error(InvariantViolation) naming every failed instance invariant.
Instance parse_instance(std::string_view doc);
std::string serialize_instance(const Instance& inst);

/// raw skips the triangulation check (the instance is always validated), for callers
/// that want to report every violation themselves.
enum class Load { validated, raw };

/// The "instance" field is either an inline instance object or a path, resolved
/// against base_dir when relative.
Triangulation parse_triangulation(std::string_view doc, const std::filesystem::path& base_dir = {},
                                  Load mode = Load::validated);
/// Always embeds the instance inline.
std::string serialize_triangulation(const Triangulation& t);

/// Validated by replay: chaining, strict decrease, ending at the target.
FlipSequence parse_sequence(std::string_view doc, const std::filesystem::path& base_dir = {});
std::string serialize_sequence(const FlipSequence& seq);

std::string serialize_audit_report(const AuditReport& report);

/// Whole-file helpers. Reading failures are Error(ParseError) naming the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

Instance load_instance(const std::filesystem::path& path);
Triangulation load_triangulation(const std::filesystem::path& path, Load mode = Load::validated);
FlipSequence load_sequence(const std::filesystem::path& path);

}  // namespace flipdist
