#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tenscat/errors.hpp"

namespace tenscat {

// A Young diagram: weakly decreasing positive row lengths, top to bottom.
// The default-constructed value is the empty diagram.
class YoungDiagram {
public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  // Length of row i, 0 past the last row.
  int row(std::size_t i) const noexcept {
    return i < rows_.size() ? rows_[i] : 0;
  }

  // Number of boxes.
  int size() const noexcept { return boxes_; }

  // Transpose rows and columns; an involution.
  YoungDiagram conjugate() const;

  // True iff inner fits inside this diagram row by row.
  bool contains(const YoungDiagram& inner) const noexcept;

  bool operator==(const YoungDiagram& o) const noexcept { return rows_ == o.rows_; }

private:
  std::vector<int> rows_;
  int boxes_ = 0;
};

// Canonical diagram order used for all deterministic output: graded by box
// count, then lexicographically larger row sequence first, so the partitions
// of 3 sort as [3], [2,1], [1,1,1].
bool diagram_less(const YoungDiagram& a, const YoungDiagram& b) noexcept;

inline bool operator<(const YoungDiagram& a, const YoungDiagram& b) noexcept {
  return diagram_less(a, b);
}

inline constexpr int kMaxPartitionBoxes = 30;
inline constexpr int kMaxSytBoxes = 25;
inline constexpr int kMaxOracleBoxes = 8;

// All partitions of n, each exactly once, in the canonical diagram order.
std::vector<YoungDiagram> partitions_of(int n, int max_boxes = kMaxPartitionBoxes);

// Number of standard Young tableaux of shape d, by the hook length formula.
// Hook products for |d| up to 25 overflow 64-bit intermediates, so the
// quotient n!/prod(hooks) is assembled from prime exponents instead.
std::int64_t syt_count(const YoungDiagram& d, int max_boxes = kMaxSytBoxes);

// Integer polynomial in a fixed number of variables, stored as exponent
// vector -> coefficient with no zero coefficients kept.
struct MonomialPoly {
  int vars = 0;
  std::map<std::vector<int>, std::int64_t> terms;

  bool zero() const noexcept { return terms.empty(); }
  void add(const std::vector<int>& exponents, std::int64_t coeff);
  MonomialPoly mul(const MonomialPoly& other) const;
};

// Schur polynomial s_d(x_1..x_vars) as a sum of semistandard-tableau content
// monomials. Requires vars >= number of rows of d (the polynomial would
// vanish otherwise).
MonomialPoly schur_in_vars(const YoungDiagram& d, int vars,
                           int max_boxes = kMaxOracleBoxes);

// Expansion of s_a * s_b in the Schur basis by iterated elimination of the
// lexicographically largest remaining monomial. Serves as the independent
// oracle for the Littlewood-Richardson kernel; requires vars >= |a| + |b|.
std::map<YoungDiagram, std::int64_t> schur_product_expand(
    const YoungDiagram& a, const YoungDiagram& b, int vars,
    int max_boxes = kMaxOracleBoxes);

}  // namespace tenscat
