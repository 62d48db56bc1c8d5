#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tenscat/errors.hpp"

namespace tenscat {

// A weight chi = sum n_j eps_j with finite support: coordinate j >= 1 maps
// to a nonzero integer n_j.
class Weight {
public:
  Weight() = default;

  // Accumulate n into coordinate j, dropping the entry when it cancels.
  void add(int j, int n);

  static Weight basis(int j, int n = 1);

  const std::map<int, int>& coeffs() const noexcept { return coeffs_; }
  bool zero() const noexcept { return coeffs_.empty(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;

  // Canonical text form: "j:n" pairs sorted by j, comma separated; the
  // empty string is the zero weight.
  std::string text() const;

  bool operator==(const Weight&) const noexcept = default;
  bool operator<(const Weight& o) const noexcept { return coeffs_ < o.coeffs_; }

private:
  std::map<int, int> coeffs_;
};

using WeightMultiplicities = std::map<Weight, std::int64_t>;

inline constexpr int kMaxWeightDegree = 5;  // p, q
inline constexpr int kMaxWeightTrunc = 8;   // i, j

// Number of index tuples (a_1..a_p in [1,i], b_1..b_q in [1,j]) whose weight
// sum(eps_a) - sum(eps_b) equals chi, in the doubly truncated mixed tensor.
std::int64_t weight_multiplicity(int p, int q, int i, int j, const Weight& chi,
                                 int max_degree = kMaxWeightDegree,
                                 int max_trunc = kMaxWeightTrunc);

// Necessary conditions for chi to be a weight of the half-truncated module
// (covariant indices <= i, contravariant side untruncated): every n_j lies
// in [-q, p], coordinates past i are nonpositive, and the total is p - q.
bool weight_support_check(int p, int q, int i, const Weight& chi);

// Full multiplicity map of the doubly truncated module; total mass i^p * j^q.
// Computed by convolving the covariant and contravariant weight
// distributions; enumerate_weights_brute is the direct tuple-enumeration
// reference kept for tests and the benchmark.
WeightMultiplicities enumerate_weights(int p, int q, int i, int j,
                                       int max_degree = kMaxWeightDegree,
                                       int max_trunc = kMaxWeightTrunc);
WeightMultiplicities enumerate_weights_brute(int p, int q, int i, int j,
                                             int max_degree = kMaxWeightDegree,
                                             int max_trunc = kMaxWeightTrunc);

}  // namespace tenscat
