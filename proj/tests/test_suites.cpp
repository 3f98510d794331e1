#include <algorithm>

#include "doctest.h"
#include "parb/error.hpp"
#include "parb/suites.hpp"

using namespace parb;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), MalformedInput);
}

TEST_CASE("zero budget gives an empty report") {
  SuiteOptions o;
  o.budget = 0;
  for (const std::string& name : suite_names()) {
    Report r = run_suite(name, o);
    CHECK(r.records.empty());
    CHECK(r.passed());
  }
  CHECK(report_lines(run_suite("cyclic-axioms", o)) ==
        "{\"suite\":\"cyclic-axioms\",\"summary\":{\"pass\":0,\"fail\":0,\"info\":0}}\n");
}

TEST_CASE("reports are sorted, anchored and reproducible") {
  SuiteOptions o;
  o.seed = 5;
  o.budget = 10;
  for (const char* name : {"lemma-identities", "cyclic-axioms", "gt-relations"}) {
    Report r = run_suite(name, o);
    CHECK(r.passed());
    CHECK(std::is_sorted(r.records.begin(), r.records.end(),
                         [](const Record& a, const Record& b) { return a.id < b.id; }));
    for (const Record& rec : r.records) CHECK_FALSE(rec.anchor.empty());
    CHECK(report_lines(r) == report_lines(run_suite(name, o)));
  }
  Report lemma = run_suite("lemma-identities", o);
  CHECK(lemma.find("x12") != nullptr);
  CHECK(lemma.find("x23") != nullptr);
}

TEST_CASE("the budget caps every sweep") {
  SuiteOptions o;
  o.budget = 3;
  Report r = run_suite("cyclic-axioms", o);
  const Record* rec = r.find("z-order-random");
  REQUIRE(rec != nullptr);
  CHECK(rec->detail == "3/3 samples pass");
}

TEST_CASE("the displayed hexagon placement is reported as a one-sided failure") {
  SuiteOptions o;
  o.hexagon = HexagonConvention::displayed;
  o.budget = 8;
  Report r = run_suite("gt-relations", o);
  const Record* rec = r.find("relations-imply-preservation");
  REQUIRE(rec != nullptr);
  CHECK(rec->status == Status::fail);
  CHECK(rec->witness.find("gt lambda=3 f=e") != std::string::npos);
}
