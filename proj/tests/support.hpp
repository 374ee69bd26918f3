#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "phl/io.hpp"
#include "phl/matrix.hpp"
#include "phl/model.hpp"
#include "phl/report.hpp"

namespace phl::testing {

inline const std::vector<std::string>& shipped_specs() {
  static const std::vector<std::string> names{"k3_b22", "verbitsky_n2_b5", "verbitsky_n2_b7", "verbitsky_n3_b5"};
  return names;
}

inline std::string spec_path(const std::string& name) { return std::string(PHL_SPEC_DIR) + "/" + name + ".json"; }

inline ModelSpec load_spec(const std::string& name) {
  return model_spec_from_json(parse_json(read_text_file(spec_path(name))));
}

inline GradedAlgebraModel load_model(const std::string& name) { return build_model(load_spec(name)); }

/// Nonzero rational p/q with |p|, q <= 9.
inline Rational random_nonzero_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 9), sign(0, 1);
  return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

/// Random partition of a random size in [1, max_dim].
inline std::vector<std::size_t> random_partition(std::mt19937& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> total_dist(1, max_dim);
  std::size_t left = total_dist(rng);
  std::vector<std::size_t> parts;
  while (left > 0) {
    std::uniform_int_distribution<std::size_t> part(1, left);
    parts.push_back(part(rng));
    left -= parts.back();
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline MatrixQ jordan_matrix(const std::vector<std::size_t>& partition) {
  std::size_t n = 0;
  for (auto p : partition) n += p;
  MatrixQ j(n, n);
  std::size_t offset = 0;
  for (auto p : partition) {
    for (std::size_t i = 0; i + 1 < p; ++i) j(offset + i, offset + i + 1) = 1;
    offset += p;
  }
  return j;
}

/// Product of random elementary row operations with integer multipliers;
/// determinant 1, so the inverse is integral too.
inline MatrixQ random_unimodular(std::mt19937& rng, std::size_t n, int steps = 24) {
  MatrixQ p = MatrixQ::identity(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    MatrixQ e = MatrixQ::identity(n);
    e(a, b) = mult(rng);
    p = e * p;
  }
  return p;
}

/// P J P^{-1} for a Jordan matrix J of the given shape.
inline MatrixQ random_nilpotent(std::mt19937& rng, const std::vector<std::size_t>& partition) {
  const MatrixQ j = jordan_matrix(partition);
  const MatrixQ p = random_unimodular(rng, j.rows());
  return p * j * inverse(p);
}

/// name -> pass/fail, for comparing two reports.
inline std::vector<std::pair<std::string, bool>> outcomes(const CheckReport& report) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& c : report.checks()) out.emplace_back(c.name, c.passed);
  return out;
}

}  // namespace phl::testing
