#include "tenscat/category.hpp"

#include <algorithm>
#include <string>

namespace tenscat {

namespace {

void add_mult(LabelMultiset& ms, const SimpleLabel& label, std::int64_t mult) {
  if (mult != 0) ms[label] += mult;
}

void merge_into(LabelMultiset& into, const LabelMultiset& from, std::int64_t scale = 1) {
  for (const auto& [label, mult] : from) into[label] += scale * mult;
}

void check_boxes(const YoungDiagram& d, int max_boxes, const char* what) {
  if (d.size() > max_boxes)
    throw BoundError(std::string(what) + ": diagram with " + std::to_string(d.size()) +
                     " boxes exceeds bound " + std::to_string(max_boxes));
}

}  // namespace

FiltrationLayers radical_layers(const YoungDiagram& lam, const YoungDiagram& mu,
                                int max_boxes) {
  check_boxes(lam, max_boxes, "radical_layers");
  check_boxes(mu, max_boxes, "radical_layers");

  FiltrationLayers out;
  const int depth = std::min(lam.size(), mu.size());
  for (int i = 0; i <= depth; ++i) {
    LabelMultiset layer;
    for (const YoungDiagram& gamma : partitions_of(i)) {
      if (!lam.contains(gamma) || !mu.contains(gamma)) continue;
      for (const YoungDiagram& nu : partitions_of(lam.size() - i)) {
        const std::int64_t left = lr_coeff(lam, nu, gamma, max_boxes);
        if (left == 0) continue;
        for (const YoungDiagram& kappa : partitions_of(mu.size() - i)) {
          const std::int64_t right = lr_coeff(mu, kappa, gamma, max_boxes);
          if (right != 0) add_mult(layer, {nu, kappa}, left * right);
        }
      }
    }
    out.layers.push_back(std::move(layer));
  }
  while (!out.layers.empty() && out.layers.back().empty()) out.layers.pop_back();
  return out;
}

std::int64_t ext_dim(const SimpleLabel& src, const SimpleLabel& tgt, int degree,
                     int max_boxes) {
  if (degree < 0) throw DomainError("ext_dim: degree must be nonnegative");
  check_boxes(src.lam, max_boxes, "ext_dim");
  check_boxes(src.mu, max_boxes, "ext_dim");
  check_boxes(tgt.lam, max_boxes, "ext_dim");
  check_boxes(tgt.mu, max_boxes, "ext_dim");
  if (src.lam.size() != tgt.lam.size() + degree) return 0;
  if (src.mu.size() != tgt.mu.size() + degree) return 0;

  const YoungDiagram mu_conj = src.mu.conjugate();
  const YoungDiagram kappa_conj = tgt.mu.conjugate();
  std::int64_t total = 0;
  for (const YoungDiagram& gamma : partitions_of(degree)) {
    const std::int64_t left = lr_coeff(src.lam, tgt.lam, gamma, max_boxes);
    if (left == 0) continue;
    total += left * lr_coeff(mu_conj, kappa_conj, gamma, max_boxes);
  }
  return total;
}

LabelMultiset jh_projective(const YoungDiagram& lam, const YoungDiagram& mu,
                            int max_boxes) {
  LabelMultiset out;
  for (const LabelMultiset& layer : radical_layers(lam, mu, max_boxes).layers)
    merge_into(out, layer);
  return out;
}

namespace {

LabelMultiset jh_mixed_impl(int p, int q, int max_degree, bool parallel) {
  if (p < 0 || q < 0) throw DomainError("jh_mixed_tensor: degrees must be nonnegative");
  if (p > max_degree || q > max_degree)
    throw BoundError("jh_mixed_tensor: degree exceeds bound " + std::to_string(max_degree));

  struct Pair {
    YoungDiagram lam, mu;
    std::int64_t weight;
  };
  std::vector<Pair> pairs;
  for (const YoungDiagram& lam : partitions_of(p)) {
    const std::int64_t dl = syt_count(lam);
    for (const YoungDiagram& mu : partitions_of(q))
      pairs.push_back({lam, mu, dl * syt_count(mu)});
  }

  std::vector<LabelMultiset> partial(pairs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pairs.size(); ++i)
      partial[i] = jh_projective(pairs[i].lam, pairs[i].mu);
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      partial[i] = jh_projective(pairs[i].lam, pairs[i].mu);
  }

  LabelMultiset out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    merge_into(out, partial[i], pairs[i].weight);
  return out;
}

}  // namespace

LabelMultiset jh_mixed_tensor(int p, int q, int max_degree) {
  return jh_mixed_impl(p, q, max_degree, true);
}

LabelMultiset jh_mixed_tensor_serial(int p, int q, int max_degree) {
  return jh_mixed_impl(p, q, max_degree, false);
}

SimpleLabel dual_label(const SimpleLabel& label) { return {label.mu, label.lam}; }

LabelMultiset tensor_projectives(const SimpleLabel& a, const SimpleLabel& b,
                                 int max_boxes) {
  if (a.lam.size() + b.lam.size() > max_boxes || a.mu.size() + b.mu.size() > max_boxes)
    throw BoundError("tensor_projectives: combined size exceeds bound " +
                     std::to_string(max_boxes));
  const auto lam_side = lr_expand_pair(a.lam, b.lam, max_boxes);
  const auto mu_side = lr_expand_pair(a.mu, b.mu, max_boxes);
  LabelMultiset out;
  for (const auto& [sigma, cl] : lam_side)
    for (const auto& [tau, cm] : mu_side) add_mult(out, {sigma, tau}, cl * cm);
  return out;
}

std::vector<SimpleLabel> labels_up_to(int max_boxes) {
  if (max_boxes < 0) throw DomainError("labels_up_to: bound must be nonnegative");
  std::vector<YoungDiagram> diagrams;
  for (int n = 0; n <= max_boxes; ++n)
    for (const YoungDiagram& d : partitions_of(n)) diagrams.push_back(d);
  std::vector<SimpleLabel> out;
  out.reserve(diagrams.size() * diagrams.size());
  for (const YoungDiagram& lam : diagrams)
    for (const YoungDiagram& mu : diagrams) out.push_back({lam, mu});
  return out;
}

namespace {

std::vector<ExtTableEntry> ext_table_impl(int max_boxes, int lr_bound, bool parallel) {
  if (max_boxes > lr_bound)
    throw BoundError("ext_table: max_boxes exceeds LR bound " + std::to_string(lr_bound));
  const std::vector<SimpleLabel> labels = labels_up_to(max_boxes);
  const std::size_t n = labels.size();

  std::vector<std::vector<ExtTableEntry>> rows(n);
  auto compute_row = [&](std::size_t s) {
    const SimpleLabel& src = labels[s];
    std::vector<ExtTableEntry> row;
    for (const SimpleLabel& tgt : labels) {
      const int degree = src.lam.size() - tgt.lam.size();
      if (degree < 0 || src.mu.size() - tgt.mu.size() != degree) continue;
      const std::int64_t dim = ext_dim(src, tgt, degree, lr_bound);
      if (dim != 0) row.push_back({src, tgt, degree, dim});
    }
    return row;
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < n; ++s) rows[s] = compute_row(s);
  } else {
    for (std::size_t s = 0; s < n; ++s) rows[s] = compute_row(s);
  }

  std::vector<ExtTableEntry> out;
  for (std::size_t s = 0; s < n; ++s)
    out.insert(out.end(), rows[s].begin(), rows[s].end());
  return out;
}

}  // namespace

std::vector<ExtTableEntry> ext_table(int max_boxes, int lr_bound) {
  return ext_table_impl(max_boxes, lr_bound, true);
}

std::vector<ExtTableEntry> ext_table_serial(int max_boxes, int lr_bound) {
  return ext_table_impl(max_boxes, lr_bound, false);
}

}  // namespace tenscat
