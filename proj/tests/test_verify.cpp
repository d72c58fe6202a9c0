#include <doctest.h>

#include <sstream>

#include "gosset/verify.hpp"

using namespace gosset;

TEST_CASE("scope names") {
  for (auto s : {VerifyScope::Tables, VerifyScope::Theorems, VerifyScope::Steiner, VerifyScope::All})
    CHECK(parse_scope(scope_name(s)) == s);
  CHECK_FALSE(parse_scope("everything").has_value());
}

TEST_CASE("expected values") {
  CHECK(expected_catalog_count(ClassKind::ExceptionalSystem, 8) == 17520);
  CHECK(expected_center_count(8, 3, 1) == 17520u);
  CHECK(expected_center_count(8, 6, 1) == 207360u);
  CHECK(expected_center_count(7, 2, 1) == 56u);
  CHECK(expected_center_count(6, 2, 1) == 1u);
  CHECK(expected_center_count(8, 1, 2) == 240u);
  CHECK_FALSE(expected_center_count(6, 3, 1).has_value());
  CHECK(expected_norm_count(14) == 82560);
  CHECK(center_cell_name(3, 1) == "A3(1)");
}

TEST_CASE("verify all at r = 6 and r = 7 passes") {
  for (int r : {6, 7}) {
    VerifyConfig cfg;
    cfg.r = r;
    const auto rep = run_verify(VerifyScope::All, cfg);
    CAPTURE(r);
    for (const auto& f : rep.failures()) FAIL_CHECK(f);
    CHECK(rep.pass());
    CHECK_FALSE(rep.cells.empty());
    CHECK_FALSE(rep.checks.empty());
  }
}

TEST_CASE("report serializations") {
  VerifyConfig cfg;
  cfg.r = 5;
  const auto rep = run_verify(VerifyScope::Tables, cfg);
  std::ostringstream csv;
  rep.write_csv(csv);
  CHECK(csv.str().rfind("r,polytope,expected,computed,pass\n", 0) == 0);
  const auto j = rep.to_json();
  CHECK(j.contains("cells"));
  CHECK(j["pass"] == rep.pass());
}
