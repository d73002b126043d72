#include "torsionlab/report.hpp"

#include "torsionlab/linalg.hpp"
#include "torsionlab/sampling.hpp"

#include <functional>
#include <sstream>

namespace torsionlab {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedIrrational: return "skipped-irrational";
  }
  return "?";
}

std::size_t ReproductionReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome verdict(bool ok, std::string detail) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)}; }

std::string count_detail(int good, int total, const std::string& what) {
  return std::to_string(good) + "/" + std::to_string(total) + " " + what;
}

class Runner {
 public:
  explicit Runner(ReproductionReport& r) : report_(r) {}

  void run(std::string id, std::string ref, const std::function<Outcome()>& body) {
    ReportCheck c{std::move(id), std::move(ref), CheckStatus::Fail, ""};
    try {
      Outcome o = body();
      c.status = o.status;
      c.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  ReproductionReport& report_;
};

Rational pm_one(Sampler& s) { return s.integer(0, 1) == 0 ? Rational(1) : Rational(-1); }

Outcome system_check(const TorsionSystem& sys, const std::vector<TorsionEquation>& ref) {
  const auto bad = mismatched_labels(sys, ref);
  std::string detail = std::to_string(sys.equations.size()) + " equations";
  if (bad.empty()) return verdict(sys.equations.size() == ref.size(), detail + "; all match up to a rational factor");
  detail += "; mismatched:";
  for (const auto& l : bad) detail += " " + l;
  return verdict(false, detail);
}

Outcome sweep(Sampler& s, int n, const std::function<CanonicalForm(Sampler&)>& make,
              const std::function<bool(const LinearMap&)>& pred, const std::string& what) {
  int good = 0;
  for (int k = 0; k < n; ++k) good += pred(make(s).map());
  return verdict(good == n, count_detail(good, n, what));
}

bool zero_torsion(const LinearMap& j) { return has_zero_torsion(j); }
bool complex_structure(const LinearMap& j) { return is_complex_structure(j); }

Outcome second_kind_sweep(Sampler& s, int n, Family f, const std::function<std::vector<Rational>(Sampler&)>& params) {
  int good = 0;
  std::string example;
  for (int k = 0; k < n; ++k) {
    const auto p = params(s);
    const auto r = second_kind_partner(f, p);
    good += r.reproduced;
    if (k == 0) {
      example = "; e.g. (";
      for (std::size_t i = 0; i < p.size(); ++i) example += (i ? ", " : "") + to_string(p[i]);
      example += ") -> (";
      for (std::size_t i = 0; i < r.target.params.size(); ++i) example += (i ? ", " : "") + to_string(r.target.params[i]);
      example += ")";
    }
  }
  return verdict(good == n, count_detail(good, n, "partners certified") + example);
}

}  // namespace

ReproductionReport reproduce_paper(std::uint64_t seed) {
  ReproductionReport report;
  report.seed = seed;
  Runner r(report);
  Sampler s(seed);

  // (1) torsion systems
  r.run("1a-heisenberg-system", "n:zero-torsion-equations",
        [] { return system_check(generate_system(heisenberg3()), reference::heisenberg()); });
  r.run("1b-sl2-h-system", "sl2:zero-torsion-equations-H",
        [] { return system_check(generate_system(sl2_h()), reference::sl2_h()); });
  r.run("1c-sl2-y-star-system", "sl2:zero-torsion-equations-Y-star", [] {
    return system_check(generate_system(sl2_y(), reference::sl2_y_star_pattern(), "eta"), reference::sl2_y_star());
  });

  // (2) sl(2,R): impossible eigenvector positions, J_*(lambda), trace invariant
  for (const auto& c : verify_case_contradictions()) {
    r.run("2-" + c.id, "sl2:lemma-Jstar/" + c.id, [c] { return verdict(c.passed, c.description + "; " + c.detail); });
  }
  r.run("2e-jstar-zero-torsion", "sl2:lemma-Jstar", [&] {
    return sweep(s, 25, [](Sampler& g) { return build_canonical(Family::Jstar_sl2, {g.rational()}); }, zero_torsion,
                 "J_*(lambda) with zero torsion");
  });
  r.run("2f-jstar-trace-separates", "sl2:lemma-Jstar/non-equivalence", [&] {
    int good = 0;
    for (int k = 0; k < 25; ++k) {
      const Rational a = s.rational();
      Rational b = s.rational();
      if (b == a) b += 1;
      const auto ja = build_canonical(Family::Jstar_sl2, {a}), jb = build_canonical(Family::Jstar_sl2, {b});
      const auto diff = equivalent_sl2(ja.map(), jb.map());
      const auto same = equivalent_sl2(ja.map(), conjugate(ja.map(), in_y_basis(s.aut_sl2())));
      good += !diff.witness && same.witness.has_value();
    }
    return verdict(good == 25, count_detail(good, 25, "pairs separated by trace, equal traces joined by a witness"));
  });

  // (3) canonical families
  r.run("3a-S-zero-torsion", "n:lemma-SDT", [&] {
    return sweep(s, 25, [](Sampler& g) { return build_canonical(Family::S, {g.rational()}); }, zero_torsion, "S(t)");
  });
  r.run("3b-D-zero-torsion", "n:lemma-SDT", [&] {
    return sweep(s, 25, [](Sampler& g) { return build_canonical(Family::D, {g.nonzero()}); }, zero_torsion, "D(x)");
  });
  r.run("3c-T-zero-torsion", "n:lemma-SDT", [&] {
    return sweep(s, 25, [](Sampler& g) { return build_canonical(Family::T, {g.rational(), g.nonzero()}); }, zero_torsion,
                 "T(a,b)");
  });
  r.run("3d-Tprime-zero-torsion", "n:lemma-SDT", [&] {
    return sweep(s, 25, [](Sampler& g) { return build_canonical(Family::Tprime, {g.rational(), g.nonzero()}); },
                 zero_torsion, "T'(a,b)");
  });
  r.run("3e-classify-n-round-trip", "n:lemma-SDT/classification", [&] {
    int good = 0;
    for (int k = 0; k < 100; ++k) {
      const CanonicalForm c = k % 3 == 0   ? build_canonical(Family::S, {s.rational()})
                              : k % 3 == 1 ? build_canonical(Family::D, {s.nonzero()})
                                           : build_canonical(Family::T, {s.rational(), s.nonzero()});
      const auto res = classify_n(conjugate(c.map(), s.aut_n()));
      good += res.certified && res.canonical.family == c.family && res.canonical.params == c.params;
    }
    return verdict(good == 100, count_detail(good, 100, "trials recovered family and parameters"));
  });
  r.run("3f-jtilde-complex", "sl2xsl2:lemma-Jtilde", [&] {
    return sweep(s, 25, [](Sampler& g) { return build_canonical(Family::Jtilde_sl2sl2, {g.rational(), g.nonzero()}); },
                 complex_structure, "J~_*(p,q) complex structures");
  });
  r.run("3g-nxn-families-complex", "nxn:lemma-SDT-tilde", [&] {
    int good = 0;
    for (int k = 0; k < 20; ++k) {
      good += is_complex_structure(build_canonical(Family::Stilde, {pm_one(s), s.rational()}).map());
      good += is_complex_structure(build_canonical(Family::Dtilde, {s.nonzero()}).map());
      good += is_complex_structure(build_canonical(Family::Ttilde, {s.nonzero(), s.rational()}).map());
    }
    return verdict(good == 60, count_detail(good, 60, "S~, D~, T~ samples are complex structures"));
  });
  r.run("3h-nxn-remark-variants-complex", "nxn:remark-subcases", [&] {
    int good = 0;
    for (int k = 0; k < 20; ++k) {
      good += is_complex_structure(build_canonical(Family::Ttilde_remark_a, {s.nonzero(), s.nonzero()}).map());
      good += is_complex_structure(build_canonical(Family::Ttilde_remark_b, {s.nonzero()}).map());
    }
    return verdict(good == 40, count_detail(good, 40, "subcase samples are complex structures"));
  });

  // (4) equivalences
  r.run("4a-T-equivalent-Tprime", "n:lemma-SDT/T-Tprime", [&] {
    int good = 0;
    for (int k = 0; k < 10; ++k) {
      const Rational a = s.rational(), b = s.nonzero();
      const auto t = build_canonical(Family::T, {a, b}), tp = build_canonical(Family::Tprime, {a, b});
      const auto w = equivalent_n(t.map(), tp.map());
      good += w.witness && conjugate(t.map(), *w.witness).matrix() == tp.matrix;
    }
    return verdict(good == 10, count_detail(good, 10, "witnesses certified"));
  });
  r.run("4b-jstar-eps-flip", "sl2:lemma-Jstar/psi0", [&] {
    int good = 0;
    const Automorphism psi_y = in_y_basis(psi0());
    for (int k = 0; k < 10; ++k) {
      const Rational lam = s.rational();
      const MatrixQ flipped{{0, 0, 1}, {0, lam, 0}, {-1, 0, 0}};
      good += conjugate(build_canonical(Family::Jstar_sl2, {lam}).map(), psi_y).matrix() == flipped;
    }
    return verdict(good == 10, count_detail(good, 10, "eps = -1 forms reached by Psi0"));
  });
  r.run("4c-theta-Ttilde", "nxn:lemma-SDT-tilde/theta", [&] {
    const auto fixed = second_kind_partner(Family::Ttilde, {1, 2});
    const bool ok = fixed.reproduced && fixed.target.params == std::vector<Rational>{-1, -2};
    Outcome o = second_kind_sweep(s, 10, Family::Ttilde, [](Sampler& g) { return std::vector<Rational>{g.nonzero(), g.rational()}; });
    return verdict(ok && o.status == CheckStatus::Pass, std::string("(1, 2) -> (-1, -2) ") + (ok ? "certified" : "failed") + "; " + o.detail);
  });
  r.run("4d-theta-Stilde", "nxn:lemma-SDT-tilde/theta", [&] {
    return second_kind_sweep(s, 10, Family::Stilde, [](Sampler& g) { return std::vector<Rational>{pm_one(g), g.rational()}; });
  });
  r.run("4e-theta-Dtilde", "nxn:lemma-SDT-tilde/theta", [&] {
    return second_kind_sweep(s, 10, Family::Dtilde, [](Sampler& g) { return std::vector<Rational>{g.nonzero()}; });
  });
  r.run("4f-gamma-Jtilde", "sl2xsl2:lemma-Jtilde/gamma", [&] {
    return second_kind_sweep(s, 10, Family::Jtilde_sl2sl2, [](Sampler& g) { return std::vector<Rational>{g.rational(), g.nonzero()}; });
  });
  r.run("4g-nxn-families-distinct", "nxn:lemma-SDT-tilde/non-equivalence", [&] {
    int false_witness = 0;
    for (int k = 0; k < 100; ++k) {
      const auto st = build_canonical(Family::Stilde, {pm_one(s), s.rational()});
      const auto dt = build_canonical(Family::Dtilde, {s.nonzero()});
      const auto tt = build_canonical(Family::Ttilde, {s.nonzero(), s.rational()});
      false_witness += equivalent_nxn(st.map(), dt.map()).witness.has_value();
      false_witness += equivalent_nxn(st.map(), tt.map()).witness.has_value();
      false_witness += equivalent_nxn(dt.map(), tt.map()).witness.has_value();
    }
    return verdict(false_witness == 0, "100 trials, " + std::to_string(false_witness) + " witnesses between distinct families");
  });
  r.run("4h-sl2xsl2-invariants", "sl2xsl2:lemma-Jtilde/non-equivalence", [&] {
    int good = 0;
    for (int k = 0; k < 10; ++k) {
      const Rational p = s.rational(), q = s.nonzero();
      const auto c = build_canonical(Family::Jtilde_sl2sl2, {p, q});
      good += sl2xsl2_invariants(conjugate(c.map(), s.sl2xsl2_first_kind())) == std::vector<Rational>{p, q};
    }
    return verdict(good == 10, count_detail(good, 10, "first-kind conjugates keep (p, q)"));
  });

  // (5) abelian structures
  r.run("5-Stilde-abelian", "nxn:remark-Stilde-abelian", [&] {
    return sweep(s, 20, [](Sampler& g) { return build_canonical(Family::Stilde, {pm_one(g), g.rational()}); },
                 [](const LinearMap& j) { return is_abelian_structure(j); }, "S~ samples abelian");
  });

  // (6) explicit m basis for J~_*
  r.run("6-m-basis-closure", "sl2xsl2:remark-m-basis", [&] {
    int good = 0;
    const GaussianRational i = GaussianRational::i();
    for (int k = 0; k < 10; ++k) {
      const Rational p = s.rational(), q = s.nonzero();
      const std::vector<VecQi> basis{{1, 0, -i, 0, 0, 0}, {0, 0, 0, 1, 0, -i}, {0, -i * q, 0, 0, 1 + i * p, 0}};
      const auto m = associated_subalgebra(build_canonical(Family::Jtilde_sl2sl2, {p, q}).map());
      std::vector<VecQi> both = basis;
      both.insert(both.end(), m.basis.begin(), m.basis.end());
      good += subalgebra_closed(m.ambient, basis) && rank(MatrixQi::from_columns(both)) == 3;
    }
    return verdict(good == 10, count_detail(good, 10, "bases close and span m"));
  });

  // (7) CR-structures
  r.run("7a-S-extends-cr", "n:remark-cr-extension", [&] {
    return sweep(s, 50, [](Sampler& g) { return build_canonical(Family::S, {g.rational()}); },
                 [](const LinearMap& j) {
                   const auto v = cr_extension_verdict(j);
                   return v.extends && is_valid_cr(*v.witness);
                 },
                 "S(t) extend a CR-structure");
  });
  auto rejected = [](const LinearMap& j) {
    const auto v = cr_extension_verdict(j);
    return !v.extends && v.obstruction == CRObstruction::KernelTooSmall;
  };
  r.run("7b-D-no-cr", "n:remark-cr-extension", [&] {
    return sweep(s, 50, [](Sampler& g) { return build_canonical(Family::D, {g.nonzero()}); }, rejected,
                 "D(x) rejected (KernelTooSmall)");
  });
  r.run("7c-T-no-cr", "n:remark-cr-extension", [&] {
    return sweep(s, 50, [](Sampler& g) { return build_canonical(Family::T, {g.rational(), g.nonzero()}); }, rejected,
                 "T(a,b) rejected (KernelTooSmall)");
  });
  {
    std::vector<Rational> params{2, 0};
    for (int k = 0; k < 8; ++k) params.push_back(s.rational());
    const auto forms = canonical_cr_forms_n(params);
    for (const char* id : {"form-i", "form-ii", "form-i-perturbed"}) {
      r.run(std::string("7-") + id, std::string("n:lemma-cr-forms/") + id, [&forms, id] {
        int good = 0, total = 0;
        std::string first;
        for (const auto& f : forms) {
          if (f.id != id) continue;
          ++total;
          good += f.passed;
          if (first.empty()) first = "; at " + to_string(f.parameter) + ": " + f.detail;
        }
        return verdict(good == total, count_detail(good, total, "parameters") + first);
      });
    }
  }

  // (8) mixed block types
  r.run("8-mixed-type", "nxn:remark-mixed-types", [] {
    const auto m = mixed_type_search();
    if (!m) return verdict(false, "no mixed-type map on the search grid");
    return verdict(has_zero_torsion(m->map) && !is_complex_structure(m->map),
                   "blocks " + std::string(to_string(m->first.canonical.family)) + "(" +
                       to_string(m->first.canonical.params[0]) + ") and " +
                       std::string(to_string(m->second.canonical.family)) + "(" +
                       to_string(m->second.canonical.params[0]) + "); zero torsion, not integrable");
  });

  // (9) automorphisms and orbits
  r.run("9a-ad-matrix", "sl2:adjoint-matrix", [&] {
    int good = 0;
    for (int k = 0; k < 50; ++k) {
      const MatrixQ sigma = s.sl2_sigma();
      const auto phi = ad_matrix(sigma(0, 0), sigma(0, 1), sigma(1, 0), sigma(1, 1));
      good += is_automorphism(*sl2_h(), phi.matrix()) && adjoint_action(sigma).matrix() == phi.matrix();
    }
    return verdict(good == 50, count_detail(good, 50, "Ad(sigma) matrices are automorphisms matching conjugation"));
  });
  r.run("9b-psi0", "sl2:aut-decomposition", [] {
    const bool ok = is_automorphism(*sl2_h(), psi0().matrix()) &&
                    adjoint_action(MatrixQ::diagonal({1, -1})).matrix() == psi0().matrix() &&
                    psi0().matrix() == MatrixQ::diagonal({1, -1, -1});
    return verdict(ok, "Psi0 = diag(1,-1,-1) = Ad(diag(1,-1)) is an automorphism");
  });
  r.run("9c-theta-gamma", "nxn:theta", [] {
    const bool ok = is_automorphism(*n_x_n(), nxn_theta().matrix()) && is_automorphism(*sl2_x_sl2(), sl2xsl2_gamma().matrix());
    return verdict(ok, "Theta on n x n and Gamma on sl2 x sl2 preserve brackets");
  });
  r.run("9d-orbit-form-invariance", "sl2:orbit-form", [&] {
    int good = 0;
    for (int k = 0; k < 200; ++k) {
      const VecQ v{s.rational(), s.rational(), s.rational()};
      const auto phi = s.aut_sl2();
      const VecQ w = phi.matrix() * v;
      good += orbit_form(w) == orbit_form(v) && classify_orbit(w).aut_class == classify_orbit(v).aut_class;
    }
    return verdict(good == 200, count_detail(good, 200, "samples keep q and the Aut orbit"));
  });
  r.run("9e-orbit-transporters", "sl2:orbits", [&] {
    int good = 0, total = 0, irrational = 0;
    for (int k = 0; k < 50; ++k) {
      const VecQ v{s.rational(), s.rational(), s.rational()};
      const auto c = classify_orbit(v);
      if (c.s_irrational) {
        ++irrational;
        continue;
      }
      ++total;
      good += orbit_transporter(v, c.ad_class).matrix() * orbit_representative(c.ad_class, c.s.value_or(1)) == v;
    }
    return verdict(good == total, count_detail(good, total, "transporters verified") + "; " +
                                      std::to_string(irrational) + " samples with irrational scale left out");
  });
  r.run("9f-irrational-scale", "sl2:orbits", [] {
    const VecQ v{0, 1, -2};
    const auto c = classify_orbit(v);
    try {
      (void)orbit_transporter(v, AutOrbit::TwoSheet);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IrrationalScale && c.aut_class == AutOrbit::TwoSheet)
        return Outcome{CheckStatus::SkippedIrrational, "X+ - 2X- lies on the two-sheet hyperboloid with s^2 = 2"};
    }
    return verdict(false, "expected an irrational-scale report");
  });
  return report;
}

Json to_json(const ReproductionReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"id", c.id}, {"lemma_ref", c.lemma_ref}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  Json summary{{"total", report.checks.size()},
               {"pass", report.count(CheckStatus::Pass)},
               {"fail", report.count(CheckStatus::Fail)},
               {"skipped-irrational", report.count(CheckStatus::SkippedIrrational)}};
  return Json{{"seed", report.seed}, {"checks", checks}, {"summary", summary}};
}

std::string to_text(const ReproductionReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) os << '[' << to_string(c.status) << "] " << c.id << " (" << c.lemma_ref << "): " << c.detail << '\n';
  os << report.count(CheckStatus::Pass) << " pass, " << report.count(CheckStatus::Fail) << " fail, "
     << report.count(CheckStatus::SkippedIrrational) << " skipped-irrational (seed " << report.seed << ")\n";
  return os.str();
}

namespace {

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '_': out += "\\_"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '#': out += "\\#"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\textasciitilde{}"; break;
      case '|': out += "\\textbar{}"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string to_latex(const ReproductionReport& report) {
  std::ostringstream os;
  os << "\\begin{tabular}{llll}\n\\hline\nid & reference & status & detail \\\\\n\\hline\n";
  for (const auto& c : report.checks)
    os << latex_escape(c.id) << " & " << latex_escape(c.lemma_ref) << " & " << to_string(c.status) << " & "
       << latex_escape(c.detail) << " \\\\\n";
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

}  // namespace torsionlab
