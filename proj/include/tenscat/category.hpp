#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tenscat/lrcalc.hpp"
#include "tenscat/young.hpp"

namespace tenscat {

// Label (lambda, mu) of a simple object, and of its projective cover.
struct SimpleLabel {
  YoungDiagram lam, mu;

  bool operator==(const SimpleLabel& o) const noexcept {
    return lam == o.lam && mu == o.mu;
  }
};

// Diagram order on lambda, then on mu.
inline bool operator<(const SimpleLabel& a, const SimpleLabel& b) noexcept {
  if (!(a.lam == b.lam)) return diagram_less(a.lam, b.lam);
  return diagram_less(a.mu, b.mu);
}

// Semisimple multiset: label -> positive multiplicity.
using LabelMultiset = std::map<SimpleLabel, std::int64_t>;

// Layers of the descending radical filtration; layers[i] is rad^i/rad^{i+1}.
// The last layer is nonempty.
struct FiltrationLayers {
  std::vector<LabelMultiset> layers;
};

// Radical filtration of the projective with label (lam, mu). Layer i maps
// (nu, kappa) to the sum over diagrams gamma with i boxes of
// N^lam_{nu,gamma} * N^mu_{kappa,gamma}; constituents of layer i lose
// exactly i boxes on each side, so layers stop at min(|lam|, |mu|).
FiltrationLayers radical_layers(const YoungDiagram& lam, const YoungDiagram& mu,
                                int max_boxes = kMaxLrBoxes);

// dim Ext^degree between the simples labelled src = (lam, mu) and
// tgt = (nu, kappa): the sum over gamma with `degree` boxes of
// N^lam_{nu,gamma} * N^{mu'}_{kappa',gamma}, primes marking conjugates of
// the mu-side diagrams.
std::int64_t ext_dim(const SimpleLabel& src, const SimpleLabel& tgt, int degree,
                     int max_boxes = kMaxLrBoxes);

// Jordan-Hoelder multiset of the projective: the layer sum of radical_layers.
LabelMultiset jh_projective(const YoungDiagram& lam, const YoungDiagram& mu,
                            int max_boxes = kMaxLrBoxes);

inline constexpr int kMaxMixedTensorDegree = 6;

// Jordan-Hoelder multiset of the mixed tensor object with p upper and q lower
// slots: Schur-Weyl splits it into projectives P_{lam,mu} with multiplicity
// d_lam * d_mu over pairs lam |- p, mu |- q. The default entry point runs the
// per-pair work in parallel; the _serial twin is the reference used by tests
// and the benchmark.
LabelMultiset jh_mixed_tensor(int p, int q, int max_degree = kMaxMixedTensorDegree);
LabelMultiset jh_mixed_tensor_serial(int p, int q,
                                     int max_degree = kMaxMixedTensorDegree);

// Duality on labels: component swap.
SimpleLabel dual_label(const SimpleLabel& label);

// Decomposition of the tensor product of two projectives into projectives:
// (sigma, tau) -> N^sigma_{lam,nu} * N^tau_{mu,kappa} for A = (lam, mu),
// B = (nu, kappa).
LabelMultiset tensor_projectives(const SimpleLabel& a, const SimpleLabel& b,
                                 int max_boxes = kMaxLrBoxes);

// All labels with at most max_boxes boxes in each component, sorted.
std::vector<SimpleLabel> labels_up_to(int max_boxes);

struct ExtTableEntry {
  SimpleLabel src, tgt;
  int degree = 0;
  std::int64_t dim = 0;
};

// Nonzero Ext dimensions between all pairs of labels with at most max_boxes
// boxes per diagram, sorted by (src, tgt). For a fixed pair only the degree
// |lam| - |nu| can be nonzero, so the scan is quadratic in the label count.
// Parallel kernel plus serial reference, as for jh_mixed_tensor.
std::vector<ExtTableEntry> ext_table(int max_boxes, int lr_bound = kMaxLrBoxes);
std::vector<ExtTableEntry> ext_table_serial(int max_boxes, int lr_bound = kMaxLrBoxes);

}  // namespace tenscat
