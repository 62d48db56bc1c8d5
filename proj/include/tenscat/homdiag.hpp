#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tenscat/errors.hpp"

namespace tenscat {

// Shape of a mixed tensor object: p covariant slots, q contravariant slots.
struct TensorShape {
  int p = 0, q = 0;

  bool operator==(const TensorShape&) const noexcept = default;
};

inline constexpr int kMaxHomSlots = 6;

// A basis morphism between mixed tensor objects: k contractions pairing a
// covariant slot with a contravariant one, plus bijections routing the
// surviving slots of each kind to the target slots. All slot indices are
// 1-based and source-ordered; the slot maps carry 0 at contracted slots.
class ContractionDiagram {
public:
  // Validates distinctness of contracted slots, the bijection property of
  // both maps and their consistency with the contraction set; the target
  // shape is derived. Throws DomainError on any violation.
  static ContractionDiagram make(TensorShape source,
                                 std::vector<std::pair<int, int>> contractions,
                                 std::vector<int> v_map, std::vector<int> dual_map);

  static ContractionDiagram identity(TensorShape shape);

  const TensorShape& source() const noexcept { return source_; }
  const TensorShape& target() const noexcept { return target_; }

  // Contraction pairs sorted by covariant slot.
  const std::vector<std::pair<int, int>>& contractions() const noexcept {
    return contractions_;
  }

  // Full-length slot maps: entry s-1 is the target slot of source slot s,
  // or 0 when slot s is contracted.
  const std::vector<int>& v_map() const noexcept { return v_map_; }
  const std::vector<int>& dual_map() const noexcept { return dual_map_; }

  // Images of the uncontracted slots in increasing source order; the wire
  // form of the slot maps.
  std::vector<int> v_map_compressed() const;
  std::vector<int> dual_map_compressed() const;

  bool operator==(const ContractionDiagram&) const noexcept = default;

private:
  ContractionDiagram() = default;

  TensorShape source_, target_;
  std::vector<std::pair<int, int>> contractions_;
  std::vector<int> v_map_, dual_map_;
};

// Dimension of Hom between the mixed tensors of the given shapes: zero
// unless both slot counts drop by the same k >= 0, and otherwise
// C(p,k) * C(q,k) * k! * (p-k)! * (q-k)!. Must agree with the size of
// enumerate_basis; the closed form is trusted only through that check.
std::int64_t hom_dim(TensorShape src, TensorShape tgt, int max_slots = kMaxHomSlots);

// All basis diagrams from src to tgt, each exactly once, ordered
// lexicographically by contraction set, then v_map, then dual_map.
std::vector<ContractionDiagram> enumerate_basis(TensorShape src, TensorShape tgt,
                                                int max_slots = kMaxHomSlots);

// Diagram of the composite linear map outer . inner. Outer contractions are
// pulled back through inner's slot bijections; contracted slot counts add,
// so no closed loop and hence no scalar factor can arise.
ContractionDiagram compose(const ContractionDiagram& outer,
                           const ContractionDiagram& inner);

// A pure tensor of basis vectors: index of the basis vector at each
// covariant slot, index of the dual basis vector at each contravariant slot.
struct TensorMonomial {
  std::vector<int> v, dual;

  bool operator==(const TensorMonomial&) const noexcept = default;
};

// Apply the diagram to a monomial: each contraction is the pairing
// <v_b*, v_a> = delta_ab, surviving indices are routed through the slot
// maps. nullopt is the zero result; the coefficient is otherwise 1.
std::optional<TensorMonomial> evaluate(const ContractionDiagram& d,
                                       const TensorMonomial& m);

}  // namespace tenscat
