#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "psplit/io.hpp"

using namespace psplit;

namespace {

RunConfig demo_config() {
  RunConfig config;
  config.command = "sweep";
  config.kind = "unentangled";
  config.gamma_spec = "0.4:1.6:4";
  config.omega_spec = "0:1.2:4";
  config.phi = 0.37;
  config.delta = 0.0;
  config.chi = 1e-3;
  config.tol = 1e-7;
  config.provenance = "analytic";
  config.format = "csv";
  config.out_path = "-";
  return config;
}

std::vector<SweepRow> demo_rows() {
  SweepRow row;
  row.gamma = 0.4;
  row.omega = 1.2;
  row.phi = 0.37;
  row.delta = 0.0;
  row.s = 28.0 / 45.0;
  row.provenance = Provenance::Analytic;
  return {row};
}

}  // namespace

TEST_CASE("name parsing round-trips and rejects junk") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS((void)parse_format("xml"), std::invalid_argument);
  CHECK(to_string(OutputFormat::Json) == "json");
  CHECK(parse_kind("unentangled") == SystemKind::Unentangled);
  CHECK(parse_kind("entangled") == SystemKind::Entangled);
  CHECK_THROWS_AS((void)parse_kind("classical"), std::invalid_argument);
  CHECK(to_string(SystemKind::Entangled) == "entangled");
  CHECK(parse_provenance("analytic") == Provenance::Analytic);
  CHECK(parse_provenance("numeric") == Provenance::Numeric);
  CHECK_THROWS_AS((void)parse_provenance("guess"), std::invalid_argument);
}

TEST_CASE("numbers print with twelve significant digits") {
  CHECK(format_number(28.0 / 45.0) == "0.622222222222");
  CHECK(format_number(0.75) == "0.75");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-1.5e-9) == "-1.5e-09");
}

TEST_CASE("csv row output carries config echo, header, and rows") {
  std::ostringstream out;
  write_rows(out, OutputFormat::Csv, demo_config(), demo_rows(),
             {{"note_key", "note_value"}});
  const std::string text = out.str();
  CHECK(text.find("# command = sweep\n") != std::string::npos);
  CHECK(text.find("# gamma = 0.4:1.6:4\n") != std::string::npos);
  CHECK(text.find("# note_key = note_value\n") != std::string::npos);
  CHECK(text.find("gamma_over_kappa,omega,phi,delta,S,provenance\n") !=
        std::string::npos);
  CHECK(text.find("0.4,1.2,0.37,0,0.622222222222,analytic\n") !=
        std::string::npos);

  // byte-identical on a second call
  std::ostringstream again;
  write_rows(again, OutputFormat::Csv, demo_config(), demo_rows(),
             {{"note_key", "note_value"}});
  CHECK(again.str() == text);
}

TEST_CASE("json row output mirrors the csv content") {
  std::ostringstream out;
  write_rows(out, OutputFormat::Json, demo_config(), demo_rows(),
             {{"note_key", "note_value"}});
  const nlohmann::json doc = nlohmann::json::parse(out.str());
  CHECK(doc.at("config").at("command") == "sweep");
  CHECK(doc.at("config").at("gamma") == "0.4:1.6:4");
  CHECK(doc.at("config").at("phi") == doctest::Approx(0.37));
  CHECK(doc.at("meta").at("note_key") == "note_value");
  REQUIRE(doc.at("rows").size() == 1);
  CHECK(doc.at("rows")[0].at("gamma_over_kappa") == doctest::Approx(0.4));
  CHECK(doc.at("rows")[0].at("S") == doctest::Approx(28.0 / 45.0));
  CHECK(doc.at("rows")[0].at("provenance") == "analytic");
}

TEST_CASE("report output prints one verdict line per check") {
  std::vector<CheckResult> checks;
  checks.push_back({"first-check", true, "margin 1e-15"});
  checks.push_back({"second-check", false, "blew up"});
  std::ostringstream out;
  write_report(out, OutputFormat::Csv, demo_config(), checks,
               {"a note for the reader"});
  const std::string text = out.str();
  CHECK(text.find("PASS first-check") != std::string::npos);
  CHECK(text.find("FAIL second-check") != std::string::npos);
  CHECK(text.find("note: a note for the reader\n") != std::string::npos);
  CHECK(text.find("verification: 1/2 checks passed\n") != std::string::npos);

  std::ostringstream jout;
  write_report(jout, OutputFormat::Json, demo_config(), checks,
               {"a note for the reader"});
  const nlohmann::json doc = nlohmann::json::parse(jout.str());
  CHECK(doc.at("passed") == 1);
  CHECK(doc.at("total") == 2);
  REQUIRE(doc.at("checks").size() == 2);
  CHECK(doc.at("checks")[0].at("name") == "first-check");
  CHECK(doc.at("checks")[0].at("pass") == true);
  CHECK(doc.at("checks")[1].at("pass") == false);
  CHECK(doc.at("notes")[0] == "a note for the reader");
}

TEST_CASE("single-mode table output") {
  std::vector<SingleModeRow> rows;
  rows.push_back({0.5, 0.375, 0.625});
  std::ostringstream out;
  write_singlemode_rows(out, OutputFormat::Csv, demo_config(), rows);
  const std::string text = out.str();
  CHECK(text.find("abs_d,S_at_unitary,S_bound,provenance\n") !=
        std::string::npos);
  CHECK(text.find("0.5,0.375,0.625,analytic\n") != std::string::npos);

  std::ostringstream jout;
  write_singlemode_rows(jout, OutputFormat::Json, demo_config(), rows);
  const nlohmann::json doc = nlohmann::json::parse(jout.str());
  REQUIRE(doc.at("rows").size() == 1);
  CHECK(doc.at("rows")[0].at("abs_d") == doctest::Approx(0.5));
  CHECK(doc.at("rows")[0].at("S_bound") == doctest::Approx(0.625));
}
