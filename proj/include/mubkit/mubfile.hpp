#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mubkit/construct.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {

inline constexpr int kMubFileVersion = 1;

// Canonical JSON-compatible text: pinned key order, one exponent row per line, no floats.
std::string write_mub_file(const MubSet& set);

// Throws ParseError (with line/column/offset) on malformed text, StructuralError on schema
// violations and mixed base tags, DomainError if the modulus does not re-validate as irreducible.
MubSet read_mub_file(std::string_view text);

void save_mub_file(const MubSet& set, const std::filesystem::path& path);
MubSet load_mub_file(const std::filesystem::path& path);

// Lossy export of the N x N^2 matrix e (1/sqrt(N) applied) as "a+bi" cells, 17 significant digits.
std::string write_mub_csv(const MubSet& set);

// Machine-readable verification report; omits timing unless asked.
std::string report_to_json(const VerificationReport& report, bool include_timing = false);

}  // namespace mubkit
