#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "relosc/cli/commands.hpp"
#include "relosc/errors.hpp"
#include "relosc/spectra.hpp"

using namespace relosc;
using namespace relosc::cli;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_tool(const std::string& args) {
  const std::string cmd = std::string(RELOSC_TOOL) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct Csv {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("# ", 0) == 0) {
      csv.meta.push_back(line.substr(2));
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

std::string meta_value(const Csv& csv, const std::string& key) {
  for (const auto& m : csv.meta) {
    if (m.rfind(key + ": ", 0) == 0) return m.substr(key.size() + 2);
  }
  return {};
}

Options base(double lambda) {
  Options o;
  o.lambda = lambda;
  o.timestamp = false;
  return o;
}

}  // namespace

TEST_CASE("format_number round-trips") {
  const double samples[] = {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 5e-324,
                            std::numeric_limits<double>::max(), 1.618033988749895};
  for (double v : samples) {
    const std::string s = format_number(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
    CHECK(std::signbit(back) == std::signbit(v));
  }
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv layout") {
  OutputRecord rec{"demo", {"a", "b"}, {{1.5, 2LL}, {std::string("x"), true}}, {}};
  rec.meta("m", 1.0);
  std::ostringstream os;
  write_csv(os, rec);
  CHECK(os.str() == "# schema: demo\n# m: 1\na,b\n1.5,2\nx,true\n");
}

TEST_CASE("json mirrors csv content") {
  Options o = base(-1);
  o.levels = 3;
  const OutputRecord rec = cmd_spectrum(o);
  std::ostringstream os;
  write_json(os, rec);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["schema"] == "spectrum");
  CHECK(j["columns"].size() == 4);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2][1].get<double>() == std::get<double>(rec.rows[2][1]));
  CHECK(j["metadata"]["lambda"].get<double>() == -1.0);
}

TEST_CASE("spectrum command examples") {
  Options o = base(-1);
  o.levels = 3;
  const OutputRecord pt = cmd_spectrum(o);
  REQUIRE(pt.rows.size() == 3);
  const double k = (1 + std::sqrt(5.0)) / 2;
  for (int n = 0; n < 3; ++n) {
    CHECK(std::get<double>(pt.rows[n][1]) == doctest::Approx(k + n).epsilon(1e-14));
  }

  const OutputRecord rm = cmd_spectrum(base(1));
  REQUIRE(rm.rows.size() == 1);
  bool saw_threshold = false;
  for (const auto& [key, value] : rm.metadata) {
    if (key == "threshold") {
      saw_threshold = true;
      CHECK(std::get<double>(value) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
    if (key == "n_max") CHECK(std::get<long long>(value) == 0);
  }
  CHECK(saw_threshold);

  Options f = base(0);
  f.levels = 1;
  CHECK(std::get<double>(cmd_spectrum(f).rows[0][1]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  Options zero = base(-1);
  zero.levels = 0;
  CHECK_THROWS_AS(cmd_spectrum(zero), ParameterError);
}

TEST_CASE("potential command") {
  Options flat = base(0);
  flat.points = 11;
  for (const auto& row : cmd_potential(flat).rows) {
    const double x = std::get<double>(row[0]);
    CHECK(std::get<double>(row[1]) == doctest::Approx(x * x).epsilon(1e-15));
  }

  Options rm = base(1);
  rm.xhat_max = 30;
  const auto rows = cmd_potential(rm).rows;
  CHECK(std::get<double>(rows.front()[1]) == doctest::Approx(1.0).epsilon(1e-12));

  Options pt = base(-1);
  pt.points = 2001;
  for (const auto& row : cmd_potential(pt).rows) {
    const double x = std::get<double>(row[0]);
    CHECK(std::fabs(x) < M_PI / 2);
    CHECK(std::isfinite(std::get<double>(row[1])));
  }

  Options bad = base(-1);
  bad.points = 1;
  CHECK_THROWS_AS(cmd_potential(bad), ParameterError);
}

TEST_CASE("wavefunction command") {
  Options o = base(-1);
  o.n = 0;
  const OutputRecord rec = cmd_wavefunction(o);
  for (const auto& row : rec.rows) CHECK(std::get<double>(row[1]) > 0.0);

  Options missing = base(1);
  missing.n = 1;
  try {
    cmd_wavefunction(missing);
    FAIL("expected NoSuchLevel");
  } catch (const NoSuchLevel& e) {
    CHECK(std::string(e.what()).find("n_max = 0") != std::string::npos);
  }

  Options scat = base(1);
  scat.scattering = true;
  scat.energy = 2.0;
  scat.points = 401;
  const OutputRecord sc = cmd_wavefunction(scat);
  int sign_changes = 0;
  for (std::size_t i = 1; i < sc.rows.size(); ++i) {
    if (std::get<double>(sc.rows[i][1]) * std::get<double>(sc.rows[i - 1][1]) < 0) ++sign_changes;
  }
  CHECK(sign_changes >= 4);

  Options below = scat;
  below.energy = 1.2;
  CHECK_THROWS_AS(cmd_wavefunction(below), ParameterError);
}

TEST_CASE("limit command rejects bad eps lists") {
  Options o = base(0);
  o.eps_list = {0.1, 0.1};
  CHECK_THROWS_AS(cmd_limit(o), ParameterError);
  o.eps_list = {0.1, -0.01};
  CHECK_THROWS_AS(cmd_limit(o), ParameterError);
  o.eps_list = {};
  CHECK_THROWS_AS(cmd_limit(o), ParameterError);
}

TEST_CASE("binary: exit codes") {
  CHECK(run_tool("spectrum --lambda -1 --no-timestamp").status == 0);
  CHECK(run_tool("validate --lambda -1 --no-timestamp").status == 0);
  CHECK(run_tool("validate --lambda -1 --tolerance 1e-12 --no-timestamp").status == 1);
  CHECK(run_tool("validate --lambda 1 --m 10 --no-timestamp").status == 0);
  CHECK(run_tool("spectrum --lambda -1 --m -2").status == 2);
  CHECK(run_tool("wavefunction --lambda 1 --n 1").status == 2);
  CHECK(run_tool("spectrum").status == 2);
  CHECK(run_tool("nonsense").status == 2);
  CHECK(run_tool("spectrum --lambda 1 --format xml").status == 2);
}

TEST_CASE("binary: deterministic output") {
  const char* commands[] = {
      "spectrum --lambda 1 --m 3 --no-timestamp",
      "potential --lambda -1 --points 51 --no-timestamp",
      "wavefunction --lambda -0.25 --n 3 --points 51 --no-timestamp",
      "wavefunction --lambda 1 --scattering --energy 2 --points 51 --no-timestamp --format json",
      "validate --lambda 0 --levels 2 --no-timestamp",
      "limit --no-timestamp",
  };
  for (const char* c : commands) {
    CAPTURE(c);
    const Run a = run_tool(c);
    const Run b = run_tool(c);
    CHECK(a.status == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
    CHECK(a.out.find("generated_at") == std::string::npos);
  }
  CHECK(run_tool("spectrum --lambda 1").out.find("generated_at") != std::string::npos);
}

TEST_CASE("binary: csv round-trip") {
  const Run r = run_tool("spectrum --lambda -0.3 --m 1.7 --omega 0.9 --levels 8 --no-timestamp");
  REQUIRE(r.status == 0);
  const Csv csv = parse_csv(r.out);
  CHECK(meta_value(csv, "schema") == "spectrum");
  CHECK(std::stod(meta_value(csv, "lambda")) == -0.3);
  CHECK(std::stod(meta_value(csv, "m")) == 1.7);
  REQUIRE(csv.rows.size() == 8);
  const ModelParams p(1.7, 0.9, -0.3);
  for (unsigned n = 0; n < 8; ++n) {
    CHECK(std::stod(csv.rows[n][1]) == pt_level(p, {n}));
  }
}

TEST_CASE("binary: limit columns converge") {
  const Csv csv = parse_csv(run_tool("limit --branch pt --no-timestamp").out);
  CHECK(meta_value(csv, "monotone_pt") == "true");
  const double last = std::stod(csv.rows.back()[3]);
  CHECK(std::fabs(last - 1.0) < 1e-5);
}
