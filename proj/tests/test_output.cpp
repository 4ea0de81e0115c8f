#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "hoeckend/grasp.hpp"
#include "hoeckend/io/output.hpp"
#include "hoeckend/io/report.hpp"
#include "hoeckend/io/svg.hpp"

using namespace hoeckend;
using namespace hoeckend::io;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("fixed formatting") {
  CHECK(format_fixed(1.0) == "1.000000");
  CHECK(format_fixed(2.0 / 3.0) == "0.666667");
  CHECK(format_fixed(-1e-9) == "0.000000");
  CHECK(format_fixed(-0.0) == "0.000000");
  CHECK(format_fixed(-12.5) == "-12.500000");
  CHECK(format_fixed(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_fixed(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("header line") {
  CHECK(header_line("0123456789abcdef") == "# hoeckend 0.1.0 config=0123456789abcdef\n");
}

TEST_CASE("CSV tables") {
  Table t{{"a", "b"}, {{1.0, 2.0}, {std::nan(""), 0.5}}, {true, false}};
  const std::string csv = table_csv(t, "h");
  CHECK(csv == "# hoeckend 0.1.0 config=h\na,b,status\n1.000000,2.000000,OK\nnan,0.500000,INFEASIBLE\n");
  CHECK(csv.find('\r') == std::string::npos);

  const PathTrace tr = trace_path(HoeckenDims{}, 0, kPi, 3);
  const std::string tc = trace_csv(tr, "h");
  CHECK(tc.find("theta_deg,Bx_mm,By_mm,Dx_mm,Dy_mm\n") != std::string::npos);
  CHECK(tc.find("\n90.000000,0.000000,30.000000,0.000000,210.000000\n") != std::string::npos);

  SynthesisResult r{1.5, 6.0, 0.1, false, {{0, 1.5, 6.0, 0.1, true}}, {0.1}};
  CHECK(synthesis_csv(r, "h") ==
        "# hoeckend 0.1.0 config=h\neval_idx,lAC_ratio,lBD_ratio,deviation_units,status\n"
        "0,1.500000,6.000000,0.100000,OK\n");
}

TEST_CASE("atomic write") {
  const fs::path dir = fs::temp_directory_path() / "hoeckend_output_test";
  fs::remove_all(dir);
  const fs::path target = dir / "sub" / "x.csv";
  write_atomic(target.string(), "one\n");
  CHECK(slurp(target) == "one\n");
  write_atomic(target.string(), "two\n");
  CHECK(slurp(target) == "two\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "sub")) ++entries;
  CHECK(entries == 1);
  fs::remove_all(dir);
}

TEST_CASE("heatmap svg") {
  Table t{{"x", "y", "v"}, {}, {}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      t.rows.push_back({double(i), double(j), double(i * j)});
      t.ok.push_back(!(i == 2 && j == 3));
    }
  }
  t.rows.back()[2] = std::nan("");
  const std::string svg = heatmap_svg(t, {"demo", 1, 0, 2}, "abc");
  CHECK(first_line(svg) == "<!-- hoeckend 0.1.0 config=abc -->");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK(svg.find("demo") != std::string::npos);
  CHECK(heatmap_svg(t, {"demo", 1, 0, 2}, "abc") == svg);
}

TEST_CASE("outcome report") {
  const HandConfig hand;
  const GraspOutcome out = close_on_object(hand, seated_circle(hand, 80), true);
  const auto j = outcome_json(out, seated_circle(hand, 80), "abc");
  CHECK(j.begin().key() == "header");
  CHECK(j["header"] == "hoeckend 0.1.0 config=abc");
  CHECK(j["mode"] == "Envelope");
  REQUIRE(j["contacts"].size() == out.contacts.size());
  CHECK(j["contacts"][0]["link"] == "BD");
  CHECK(j["fingers"][0].contains("F2_N"));
  CHECK(j["fingers"][0].contains("transition_deg"));
  const std::string traj = trajectory_csv(out, "abc");
  CHECK(first_line(traj) == "# hoeckend 0.1.0 config=abc");
  CHECK(traj.find("finger,crank_deg,theta1_deg,theta2_deg,mode\n") != std::string::npos);
  CHECK(traj.find(",Envelope\n") != std::string::npos);
}
