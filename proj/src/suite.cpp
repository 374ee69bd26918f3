#include "phl/suite.hpp"

#include <optional>

#include "phl/errors.hpp"
#include "phl/llv.hpp"
#include "phl/octahedron.hpp"

namespace phl {

namespace {

void add_cube_checks(CheckReport& report, const PerverseHodgeCube& c) {
  report.add(timed([&] { return pf_symmetry_check(c); }));
  for (auto& r : octahedral_symmetry_check(c)) report.add(std::move(r));
  report.add(timed([&] { return bounds_check(c); }));
  report.add(timed([&] { return octahedron_conjecture_check(c); }));
}

CheckResult skipped(std::string name, const std::string& reason) {
  CheckResult r(std::move(name));
  r.fail({{"reason", "precondition failed"}, {"detail", reason}});
  return r;
}

CheckResult weight_check(const GradedAlgebraModel& model, std::span<const Rational> x, std::string name) {
  return timed([&] {
    const NilpotentOperator l = lefschetz(model, x);
    CheckResult r = verify_weight_axioms(l, weight_filtration(l), name);
    r.data["nilpotency_index"] = l.index();
    return r;
  });
}

}  // namespace

CheckReport run_check_suite(const GradedAlgebraModel& model) {
  CheckReport report;
  for (auto& r : validate(model)) report.add(std::move(r));
  report.add(weight_check(model, model.classes.beta, "weight_axioms.beta"));
  report.add(weight_check(model, model.classes.sigma_bar, "weight_axioms.sigma_bar"));
  report.add(timed([&] { return hodge_cross_check(model); }));

  std::optional<FiltrationOnGraded> perverse;
  std::string why;
  try {
    perverse = perverse_filtration(model);
  } catch (const ModelError& e) {
    why = e.what();
  }

  if (perverse) {
    const PerverseHodgeCube c = cube(model, *perverse);
    report.add(timed([&] { return bigraded_check(model, *perverse, "perverse_bigraded"); }));
    report.add(timed([&] { return purity_check(model, *perverse, c); }));
    add_cube_checks(report, c);
    for (auto& r : commutator_nilpotency_check(model, c)) report.add(std::move(r));
  } else {
    for (const char* name : {"perverse_bigraded", "perverse_purity", "p_equals_f_symmetry", "octahedral_rotations",
                             "octahedral_reflections", "conjugation_symmetry", "poincare_symmetry", "cube_bounds",
                             "octahedron_support", "commutator_nilpotency", "antidiagonal_identity"})
      report.add(skipped(name, why));
  }
  for (auto& r : so6_report(model)) report.add(std::move(r));
  return report;
}

CheckReport run_cube_suite(const PerverseHodgeCube& cube) {
  CheckReport report;
  add_cube_checks(report, cube);
  return report;
}

}  // namespace phl
