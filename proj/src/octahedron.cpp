#include "phl/octahedron.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>

#include "phl/llv.hpp"
#include "phl/nilpotent.hpp"

namespace phl {

std::array<int, 3> SignedPermutation::apply(const std::array<int, 3>& x) const {
  std::array<int, 3> y{};
  for (int c = 0; c < 3; ++c) y[c] = signs[c] * x[perm[c]];
  return y;
}

int SignedPermutation::determinant() const {
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (perm[a] > perm[b]) ++inversions;
  int det = inversions % 2 == 0 ? 1 : -1;
  for (int s : signs) det *= s;
  return det;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
  // (this ∘ inner)(x)[c] = signs[c] * inner(x)[perm[c]]
  //                      = signs[c] * inner.signs[perm[c]] * x[inner.perm[perm[c]]]
  SignedPermutation out;
  for (int c = 0; c < 3; ++c) {
    out.perm[c] = inner.perm[perm[c]];
    out.signs[c] = signs[c] * inner.signs[perm[c]];
  }
  out.name = name + "*" + inner.name;
  return out;
}

namespace {

std::string describe(const std::array<int, 3>& perm, const std::array<int, 3>& signs) {
  static const char* coord[] = {"i", "k", "e"};
  std::string s = "(";
  for (int c = 0; c < 3; ++c) {
    if (c) s += ",";
    if (signs[c] < 0) s += "-";
    s += coord[perm[c]];
  }
  return s + ")";
}

SignedPermutation make(std::array<int, 3> perm, std::array<int, 3> signs) {
  return {perm, signs, describe(perm, signs)};
}

}  // namespace

SymmetryGroupSpec octahedral_group() {
  std::vector<SignedPermutation> all;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      std::array<int, 3> signs{};
      for (int c = 0; c < 3; ++c) signs[c] = (mask >> c) & 1 ? -1 : 1;
      all.push_back(make(perm, signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_partition(all.begin(), all.end(), [](const SignedPermutation& g) { return g.is_rotation(); });
  return {std::move(all)};
}

std::vector<SignedPermutation> SymmetryGroupSpec::rotations() const {
  std::vector<SignedPermutation> out;
  std::copy_if(elements.begin(), elements.end(), std::back_inserter(out), [](const auto& g) { return g.is_rotation(); });
  return out;
}

std::vector<SignedPermutation> SymmetryGroupSpec::reflections() const {
  std::vector<SignedPermutation> out;
  std::copy_if(elements.begin(), elements.end(), std::back_inserter(out), [](const auto& g) { return !g.is_rotation(); });
  return out;
}

const SignedPermutation& SymmetryGroupSpec::identity() const {
  const SignedPermutation id = make({0, 1, 2}, {1, 1, 1});
  for (const auto& g : elements)
    if (g == id) return g;
  throw std::logic_error("group has no identity");
}

SignedPermutation SymmetryGroupSpec::conjugation() { return make({0, 1, 2}, {-1, 1, 1}); }
SignedPermutation SymmetryGroupSpec::pf_swap() { return make({1, 0, 2}, {1, 1, 1}); }
SignedPermutation SymmetryGroupSpec::poincare() { return make({0, 1, 2}, {-1, -1, -1}); }

namespace {

std::array<int, 3> to_coords(const PerverseHodgeCube& cube, int i, int k, int d) {
  return {i, k, d - static_cast<int>(cube.n())};
}

/// First support point whose image has a different value, if any.
std::optional<Json> invariance_witness(const PerverseHodgeCube& cube, const SignedPermutation& g) {
  const int n = static_cast<int>(cube.n());
  for (const auto& [key, h] : cube.entries()) {
    const auto [d, k, i] = key;
    const auto y = g.apply(to_coords(cube, i, k, d));
    const std::size_t image = cube.at(y[0], y[1], y[2] + n);
    if (image != h)
      return Json{{"element", g.name}, {"at", {i, k, d}}, {"value", h}, {"image", {y[0], y[1], y[2] + n}},
                  {"image_value", image}};
  }
  return std::nullopt;
}

CheckResult invariance_check(const PerverseHodgeCube& cube, const std::vector<SignedPermutation>& elements,
                             std::string name) {
  CheckResult r(std::move(name));
  std::size_t held = 0;
  for (const auto& g : elements) {
    if (auto w = invariance_witness(cube, g))
      r.fail(std::move(*w));
    else
      ++held;
  }
  r.data["elements"] = elements.size();
  r.data["invariant_under"] = held;
  return r;
}

int slice_radius(const PerverseHodgeCube& cube, int d) {
  const int n = static_cast<int>(cube.n());
  return std::min(d, 2 * n - d);
}

}  // namespace

bool cube_invariant_under(const PerverseHodgeCube& cube, const SignedPermutation& g) {
  return !invariance_witness(cube, g).has_value();
}

CheckResult bounds_check(const PerverseHodgeCube& cube) {
  CheckResult r("cube_bounds");
  std::map<int, std::pair<int, int>> extent;
  for (const auto& [key, h] : cube.entries()) {
    const auto [d, k, i] = key;
    auto& e = extent[d];
    e.first = std::max(e.first, std::abs(i));
    e.second = std::max(e.second, std::abs(k));
    r.expect(std::abs(i) <= d && std::abs(k) <= d, {{"at", {i, k, d}}, {"h", h}});
  }
  Json slices = Json::array();
  for (const auto& [d, e] : extent) slices.push_back({{"d", d}, {"max_abs_i", e.first}, {"max_abs_k", e.second}});
  r.data["slices"] = std::move(slices);
  return r;
}

CheckResult pf_symmetry_check(const PerverseHodgeCube& cube) {
  CheckResult r("p_equals_f_symmetry");
  if (auto w = invariance_witness(cube, SymmetryGroupSpec::pf_swap())) r.fail(std::move(*w));
  return r;
}

CheckFragment octahedral_symmetry_check(const PerverseHodgeCube& cube) {
  const SymmetryGroupSpec group = octahedral_group();
  CheckFragment out;
  out.push_back(invariance_check(cube, group.rotations(), "octahedral_rotations"));
  out.push_back(invariance_check(cube, group.reflections(), "octahedral_reflections"));
  out.push_back(invariance_check(cube, {SymmetryGroupSpec::conjugation()}, "conjugation_symmetry"));
  out.push_back(invariance_check(cube, {SymmetryGroupSpec::poincare()}, "poincare_symmetry"));
  return out;
}

CheckResult octahedron_conjecture_check(const PerverseHodgeCube& cube) {
  CheckResult r("octahedron_support");
  const int n = static_cast<int>(cube.n());
  for (const auto& [key, h] : cube.entries()) {
    const auto [d, k, i] = key;
    r.expect(std::abs(i) + std::abs(k) <= slice_radius(cube, d), {{"outside", {i, k, d}}, {"h", h}});
  }
  const std::array<std::array<int, 3>, 6> vertices{{{n, 0, n}, {-n, 0, n}, {0, n, n}, {0, -n, n}, {0, 0, 0}, {0, 0, 2 * n}}};
  Json values = Json::array();
  for (const auto& v : vertices) {
    const std::size_t h = cube.at(v[0], v[1], v[2]);
    values.push_back({{"at", {v[0], v[1], v[2]}}, {"h", h}});
    r.expect(h != 0, {{"vertex_vanishes", {v[0], v[1], v[2]}}});
  }
  r.data["vertices"] = std::move(values);
  return r;
}

CheckFragment commutator_nilpotency_check(const GradedAlgebraModel& model, const PerverseHodgeCube& cube) {
  CheckResult nilp("commutator_nilpotency");
  CheckResult anti("antidiagonal_identity");
  const int n = static_cast<int>(model.n);
  MatrixQ c;
  try {
    c = beta_sigma_commutator(model);
  } catch (const std::exception& e) {
    nilp.fail({{"reason", e.what()}});
    anti.fail({{"reason", "precondition failed"}});
    return {nilp, anti};
  }

  // C must not mix degrees.
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t col = 0; col < c.cols(); ++col)
      if (!c(r, col).is_zero() && model.degree_of(r) != model.degree_of(col)) {
        nilp.fail({{"reason", "commutator does not preserve degree"}, {"row", r}, {"col", col}});
        anti.fail({{"reason", "precondition failed"}});
        return {nilp, anti};
      }

  Json indices = Json::array();
  Json sums = Json::array();
  for (unsigned d = 0; d < model.pieces.size(); ++d) {
    const int di = static_cast<int>(d);
    const auto idx = model.indices_of_piece(d);
    const NilpotentOperator block(c.select(idx, idx));
    const int expected = std::min(di, 2 * n - di);
    const int l = static_cast<int>(block.index());
    indices.push_back(l);
    nilp.expect(l == expected, {{"d", di}, {"index", l}, {"expected", expected}});

    const WeightFiltration w = weight_filtration(block);
    const int radius = std::max(l, slice_radius(cube, di));
    Json row = Json::array();
    for (int s = -radius - di; s <= radius + di; ++s) {
      std::size_t sum = 0;
      for (const auto& [key, h] : cube.entries())
        if (std::get<0>(key) == di && std::get<1>(key) + std::get<2>(key) == s) sum += h;
      const std::size_t graded = std::abs(s) <= l ? w.graded_dims[static_cast<std::size_t>(l + s)] : 0;
      if (std::abs(s) <= radius) row.push_back(sum);
      anti.expect(sum == graded, {{"d", di}, {"c", s}, {"antidiagonal_sum", sum}, {"graded_dim", graded}});
    }
    sums.push_back(std::move(row));
  }
  nilp.data["index_by_degree"] = std::move(indices);
  anti.data["antidiagonal_sums_by_degree"] = std::move(sums);
  return {nilp, anti};
}

}  // namespace phl
