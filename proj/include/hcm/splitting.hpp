#pragma once

#include <string>
#include <vector>

namespace hcm {

// Symmetric, submodular, cardinality-based splitting function for a
// hyperedge of size k. Stores the penalty vector w_1..w_{floor(k/2)};
// w_0 = 0 and w_i = w_{k-i} are implied. Validation enforces
// nonnegativity and concavity of the implied full penalty profile,
// which for this family means the first differences
// d_i = w_i - w_{i-1} are nonincreasing and d_{floor(k/2)} >= 0.
class SplittingFunction {
 public:
  static SplittingFunction all_or_nothing(int k);
  static SplittingFunction delta_linear(int k, double delta);
  static SplittingFunction limi(int k, double alpha_frac);
  static SplittingFunction custom(int k, std::vector<double> penalties);

  int edge_size() const { return k_; }

  // Penalty for a split with cut_count nodes on one side (0 <= cut_count <= k).
  double penalty(int cut_count) const;

  // w_1..w_{floor(k/2)}.
  const std::vector<double>& penalties() const { return w_; }

  double max_penalty() const;
  bool is_zero() const;

  bool operator==(const SplittingFunction& other) const = default;

 private:
  SplittingFunction(int k, std::vector<double> w);

  int k_;
  std::vector<double> w_;
};

// Global splitting specification instantiated per hyperedge size.
// This is the surface the file formats and the CLI expose; the data
// model underneath still carries one function per hyperedge.
struct SplittingSpec {
  enum class Kind { AllOrNothing, DeltaLinear, Limi, Custom };

  Kind kind = Kind::AllOrNothing;
  double param = 0.0;             // delta for DeltaLinear, alpha_frac for Limi
  std::vector<double> custom;     // penalties by cardinality, 1-indexed at [0]

  SplittingFunction instantiate(int k) const;

  // Accepts "aon", "delta-linear:D", "limi:A", "custom:v1,v2,...".
  static SplittingSpec parse(const std::string& text);
  std::string describe() const;
};

}  // namespace hcm
