#pragma once

#include "torsionlab/poly.hpp"
#include "torsionlab/torsion.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace torsionlab {

/// Fixed entries of the symbolic map, keyed by 0-based (row, col). Values may involve
/// named parameters such as "lambda".
using EntryPattern = std::map<std::pair<std::size_t, std::size_t>, PolyQ>;

struct TorsionEquation {
  std::string label;  // "ij|k", 1-based
  PolyQ poly;
};

struct TorsionSystem {
  AlgebraPtr algebra;
  std::string prefix;         // unknown grid name, "xi" or "eta"
  Matrix<PolyQ> unknown_map;  // entry (i, j) is prefix_{i+1}_{j+1} unless fixed
  std::vector<TorsionEquation> equations;

  const PolyQ& equation(const std::string& label) const;
  std::vector<std::string> labels() const;
  /// Equations that do not vanish identically.
  std::vector<TorsionEquation> nonzero() const;
};

std::string torsion_label(std::size_t i, std::size_t j, std::size_t k, std::size_t dim);
/// Name of the unknown in row i, column j (0-based): "xi_<i+1>_<j+1>".
std::string unknown_name(const std::string& prefix, std::size_t i, std::size_t j);

/// x_k-coefficient of the torsion applied to (x_i, x_j) for every i < j and k, with the fixed
/// entries substituted before expansion.
TorsionSystem generate_system(AlgebraPtr algebra, const EntryPattern& pattern = {}, const std::string& prefix = "xi");

/// Label-by-label agreement up to a nonzero rational factor per equation.
bool system_matches(const TorsionSystem& generated, const std::vector<TorsionEquation>& reference);
/// Labels whose equations fail to match (empty when system_matches holds).
std::vector<std::string> mismatched_labels(const TorsionSystem& generated, const std::vector<TorsionEquation>& reference);

std::map<std::string, Rational> evaluate_system(const TorsionSystem& system,
                                                const std::map<std::string, Rational>& assignment);

/// Assignment prefix_i_j -> J(i, j) for every entry.
std::map<std::string, Rational> entries_of(const MatrixQ& j, const std::string& prefix = "xi");

/// Hand-encoded equation listings.
namespace reference {
/// Heisenberg algebra, basis (x1, x2, x3). The 13|3 entry uses xi^2_1 xi^1_3; the printed
/// listing has xi^1_2 xi^1_3 there (see heisenberg_13_3_as_printed).
std::vector<TorsionEquation> heisenberg();
PolyQ heisenberg_13_3_as_printed();
/// sl(2,R) in the basis (H, X+, X-).
std::vector<TorsionEquation> sl2_h();
/// sl(2,R) in the basis (Y1, Y2, Y3) with eta^1_2 = eta^3_2 = 0 and eta^2_2 = lambda.
std::vector<TorsionEquation> sl2_y_star();
/// The zero pattern the starred listing is written for.
EntryPattern sl2_y_star_pattern();
}  // namespace reference

struct CaseCheck {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Re-derives the four impossibility arguments for eigenvector positions in sl(2,R):
/// case-1 (X- direction), case-2 (H direction), subcase-1.1 and subcase-1.2 (Y basis).
std::vector<CaseCheck> verify_case_contradictions();

}  // namespace torsionlab
