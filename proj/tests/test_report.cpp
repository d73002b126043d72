#include "doctest.h"

#include "torsionlab/report.hpp"

#include <set>

using namespace torsionlab;

TEST_CASE("reproduction report passes for several seeds") {
  for (std::uint64_t seed : {1u, 7u, 20240611u}) {
    const ReproductionReport r = reproduce_paper(seed);
    INFO("seed " << seed);
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail) FAIL_CHECK(c.id << ": " << c.detail);
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::Pass) + r.count(CheckStatus::SkippedIrrational) == r.checks.size());
  }
}

TEST_CASE("check ids are unique and every group 1-9 is present") {
  const ReproductionReport r = reproduce_paper(3);
  std::set<std::string> ids;
  std::set<char> groups;
  for (const auto& c : r.checks) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.lemma_ref.empty());
    CHECK_FALSE(c.detail.empty());
    groups.insert(c.id.front());
  }
  CHECK(groups == std::set<char>{'1', '2', '3', '4', '5', '6', '7', '8', '9'});
  CHECK(ids.count("4c-theta-Ttilde") == 1);
  CHECK(ids.count("7b-D-no-cr") == 1);
}

TEST_CASE("specific check contents") {
  const ReproductionReport r = reproduce_paper(11);
  auto find = [&](const std::string& id) -> const ReportCheck& {
    for (const auto& c : r.checks)
      if (c.id == id) return c;
    FAIL("missing check " << id);
    return r.checks.front();
  };
  CHECK(find("4c-theta-Ttilde").detail.find("(1, 2) -> (-1, -2)") != std::string::npos);
  CHECK(find("7b-D-no-cr").status == CheckStatus::Pass);
  CHECK(find("9f-irrational-scale").status == CheckStatus::SkippedIrrational);
}

TEST_CASE("serialized report is deterministic") {
  const std::string a = to_json(reproduce_paper(5)).dump(2);
  const std::string b = to_json(reproduce_paper(5)).dump(2);
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j.at("seed") == 5);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK(j.at("summary").at("total") == j.at("checks").size());

  const std::string text = to_text(reproduce_paper(5));
  CHECK(text.find("[pass] 1a-heisenberg-system") != std::string::npos);
  CHECK(text.find("0 fail") != std::string::npos);
  const std::string tex = to_latex(reproduce_paper(5));
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("xi\\_1\\_3") != std::string::npos);
}
