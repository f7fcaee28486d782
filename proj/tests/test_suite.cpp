#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "burn/families.hpp"
#include "burn/graph.hpp"
#include "burn/suite.hpp"

using namespace burn;
using json = nlohmann::json;

TEST_CASE("clean selections over small corpora") {
  SuiteOptions opt;
  opt.selection = {"prop-2.6", "prop-2.2", "prop-4.1"};
  opt.n_lo = 1;
  opt.n_hi = 5;
  opt.connected_only = true;
  Report rep = run_suite(opt);
  CHECK(rep.summary.fail == 0);
  CHECK(rep.summary.pass > 0);
  CHECK(rep.suite == "prop-2.6,prop-2.2,prop-4.1");
  CHECK(rep.corpus == "n=1..5;connected;dedup");
  for (const CheckResult& r : rep.results) CHECK(!r.graph6.empty());
}

TEST_CASE("unknown selection throws") {
  SuiteOptions opt;
  opt.selection = {"prop-0.0"};
  CHECK_THROWS_AS(run_suite(opt), std::invalid_argument);
}

TEST_CASE("results are sorted") {
  SuiteOptions opt;
  opt.selection = {"prop-2.6", "prop-2.1"};
  opt.n_hi = 4;
  opt.connected_only = true;
  Report rep = run_suite(opt);
  for (size_t i = 1; i < rep.results.size(); ++i) {
    const CheckResult& a = rep.results[i - 1];
    const CheckResult& b = rep.results[i];
    auto key = [](const CheckResult& r) {
      return std::tuple(r.check_id, r.graph6, params_to_string(r.params));
    };
    CHECK(key(a) <= key(b));
  }
}

TEST_CASE("identical reports for one and eight workers") {
  for (const char* sel : {"all"}) {
    SuiteOptions a;
    a.selection = {sel};
    a.n_lo = 1;
    a.n_hi = 5;
    a.connected_only = true;
    SuiteOptions b = a;
    a.jobs = 1;
    b.jobs = 8;
    std::string ja = report_json(run_suite(a));
    std::string jb = report_json(run_suite(b));
    CHECK(ja == jb);
  }
}

TEST_CASE("json report schema") {
  SuiteOptions opt;
  opt.selection = {"prop-2.6"};
  opt.n_hi = 3;
  opt.connected_only = true;
  Report rep = run_suite(opt);
  json j = json::parse(report_json(rep));
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("suite") == "prop-2.6");
  CHECK(j.at("corpus").is_string());
  CHECK(j.at("summary").at("pass").get<int>() == rep.summary.pass);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK(j.at("summary").at("total").get<size_t>() == rep.results.size());
  REQUIRE(j.at("results").is_array());
  for (const json& row : j.at("results")) {
    CHECK(row.contains("check_id"));
    CHECK(row.contains("graph6"));
    CHECK(row.contains("params"));
    CHECK(row.contains("status"));
    if (row.at("status") == "skip") {
      CHECK(row.at("holds").is_null());
      CHECK(!row.contains("lhs"));
    } else {
      CHECK(row.contains("lhs"));
      CHECK(row.contains("relation"));
      CHECK(row.contains("rhs"));
      CHECK(row.at("holds").is_boolean());
    }
  }
}

TEST_CASE("failing rows serialize their witness") {
  SuiteOptions opt;
  opt.selection = {"prop-6.4"};
  opt.n_lo = 1;
  opt.n_hi = 1;  // per-graph corpus is irrelevant; the product sweep carries the rows
  Report rep = run_suite(opt);
  CHECK(rep.summary.fail == 24);
  json j = json::parse(report_json(rep));
  int with_witness = 0;
  for (const json& row : j.at("results"))
    if (row.at("status") == "fail") {
      CHECK(row.at("holds") == false);
      REQUIRE(row.contains("witness"));
      REQUIRE(row.at("witness").contains("items"));
      const json& item = row.at("witness").at("items").at(0);
      CHECK(item.contains("graph6"));
      CHECK(item.contains("quantity"));
      CHECK(item.contains("value"));
      CHECK(item.contains("trace"));
      ++with_witness;
    }
  CHECK(with_witness == 24);
}

TEST_CASE("csv report") {
  SuiteOptions opt;
  opt.selection = {"prop-2.6"};
  opt.n_hi = 3;
  opt.connected_only = true;
  std::string csv = report_csv(run_suite(opt));
  CHECK(csv.rfind("check_id,graph6,params,lhs,relation,rhs,status,holds,note", 0) == 0);
  CHECK(csv.find("prop-2.6") != std::string::npos);
}

TEST_CASE("explicit graphs run the per-graph catalog only") {
  SuiteOptions opt;
  opt.explicit_graphs = {family({FamilyKind::Cycle, 5}), family({FamilyKind::Path, 4})};
  Report rep = run_suite(opt);
  CHECK(rep.corpus == "explicit");
  CHECK(rep.summary.fail == 0);
  bool product_rows = false;
  for (const CheckResult& r : rep.results)
    if (r.check_id == "prop-6.1" || r.check_id == "thm-5.3") product_rows = true;
  CHECK(!product_rows);

  SuiteOptions bad = opt;
  bad.selection = {"thm-5.3"};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
}
