#pragma once

#include <string>

#include "hoeckend/hoecken.hpp"
#include "hoeckend/sweep.hpp"
#include "hoeckend/synthesis.hpp"

namespace hoeckend::io {

inline constexpr const char* kToolVersion = "0.1.0";

/// `# hoeckend <version> config=<hash>`
std::string header_line(const std::string& config_hash);

/// Fixed 6-decimal rendering; NaN prints as `nan`, negative zero as zero.
std::string format_fixed(double v);

std::string trace_csv(const PathTrace& trace, const std::string& config_hash);
std::string table_csv(const Table& table, const std::string& config_hash);
std::string synthesis_csv(const SynthesisResult& result, const std::string& config_hash);

/// Writes through a temporary sibling and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace hoeckend::io
