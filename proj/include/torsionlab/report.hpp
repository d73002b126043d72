#pragma once

#include "torsionlab/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torsionlab {

enum class CheckStatus { Pass, Fail, SkippedIrrational };

std::string_view to_string(CheckStatus s);

struct ReportCheck {
  std::string id;
  std::string lemma_ref;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct ReproductionReport {
  std::uint64_t seed = 0;
  std::vector<ReportCheck> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// Runs the fixed list of checks (1)-(9) with samples drawn from `seed`.
ReproductionReport reproduce_paper(std::uint64_t seed);

Json to_json(const ReproductionReport& report);
std::string to_text(const ReproductionReport& report);
std::string to_latex(const ReproductionReport& report);

}  // namespace torsionlab
