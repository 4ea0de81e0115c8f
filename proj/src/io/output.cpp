#include "hoeckend/io/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hoeckend/error.hpp"

namespace hoeckend::io {

std::string header_line(const std::string& config_hash) {
  return std::string("# hoeckend ") + kToolVersion + " config=" + config_hash + "\n";
}

std::string format_fixed(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string trace_csv(const PathTrace& trace, const std::string& config_hash) {
  std::ostringstream out;
  out << header_line(config_hash) << "theta_deg,Bx_mm,By_mm,Dx_mm,Dy_mm\n";
  for (const PathSample& s : trace.samples) {
    out << format_fixed(rad_to_deg(s.theta)) << ',' << format_fixed(s.B.x) << ','
        << format_fixed(s.B.y) << ',' << format_fixed(s.D.x) << ',' << format_fixed(s.D.y) << '\n';
  }
  return out.str();
}

std::string table_csv(const Table& table, const std::string& config_hash) {
  std::ostringstream out;
  out << header_line(config_hash);
  for (const std::string& c : table.columns) out << c << ',';
  out << "status\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (double v : table.rows[i]) out << format_fixed(v) << ',';
    out << (table.ok[i] ? "OK" : "INFEASIBLE") << '\n';
  }
  return out.str();
}

std::string synthesis_csv(const SynthesisResult& result, const std::string& config_hash) {
  std::ostringstream out;
  out << header_line(config_hash) << "eval_idx,lAC_ratio,lBD_ratio,deviation_units,status\n";
  for (const SynthesisEval& e : result.log) {
    out << e.index << ',' << format_fixed(e.ac_ratio) << ',' << format_fixed(e.bd_ratio) << ','
        << format_fixed(e.deviation) << ',' << (e.ok ? "OK" : "INFEASIBLE") << '\n';
  }
  return out.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      fail(ErrorKind::InvalidArgument, "short write to '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, target);
}

}  // namespace hoeckend::io
