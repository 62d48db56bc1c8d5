#include "tenscat/weightcalc.hpp"

#include <functional>
#include <vector>

namespace tenscat {

void Weight::add(int j, int n) {
  if (j < 1) throw DomainError("Weight: coordinate indices start at 1");
  if (n == 0) return;
  auto it = coeffs_.find(j);
  if (it == coeffs_.end()) {
    coeffs_.emplace(j, n);
  } else if ((it->second += n) == 0) {
    coeffs_.erase(it);
  }
}

Weight Weight::basis(int j, int n) {
  Weight w;
  w.add(j, n);
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  Weight out = *this;
  for (const auto& [j, n] : o.coeffs_) out.add(j, n);
  return out;
}

Weight Weight::operator-(const Weight& o) const {
  Weight out = *this;
  for (const auto& [j, n] : o.coeffs_) out.add(j, -n);
  return out;
}

std::string Weight::text() const {
  std::string s;
  for (const auto& [j, n] : coeffs_) {
    if (!s.empty()) s += ',';
    s += std::to_string(j) + ":" + std::to_string(n);
  }
  return s;
}

namespace {

void check_weight_bounds(int p, int q, int i, int j, int max_degree, int max_trunc) {
  if (p < 0 || q < 0 || i < 0 || j < 0)
    throw DomainError("weight enumeration: parameters must be nonnegative");
  if (p > max_degree || q > max_degree)
    throw BoundError("weight enumeration: tensor degree exceeds bound " +
                     std::to_string(max_degree));
  if (i > max_trunc || j > max_trunc)
    throw BoundError("weight enumeration: truncation exceeds bound " +
                     std::to_string(max_trunc));
}

// Weight distribution of `count` slots over indices 1..alphabet, each slot
// contributing sign * eps_index.
WeightMultiplicities slot_distribution(int count, int alphabet, int sign) {
  WeightMultiplicities acc;
  acc.emplace(Weight{}, 1);
  for (int t = 0; t < count; ++t) {
    WeightMultiplicities next;
    for (const auto& [w, c] : acc)
      for (int a = 1; a <= alphabet; ++a) next[w + Weight::basis(a, sign)] += c;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::int64_t weight_multiplicity(int p, int q, int i, int j, const Weight& chi,
                                 int max_degree, int max_trunc) {
  check_weight_bounds(p, q, i, j, max_degree, max_trunc);
  const WeightMultiplicities cov = slot_distribution(p, i, +1);
  const WeightMultiplicities con = slot_distribution(q, j, -1);
  std::int64_t total = 0;
  for (const auto& [w, c] : cov) {
    auto it = con.find(chi - w);
    if (it != con.end()) total += c * it->second;
  }
  return total;
}

bool weight_support_check(int p, int q, int i, const Weight& chi) {
  if (p < 0 || q < 0 || i < 0)
    throw DomainError("weight_support_check: parameters must be nonnegative");
  std::int64_t sum = 0;
  for (const auto& [j, n] : chi.coeffs()) {
    if (n < -q || n > p) return false;
    if (j > i && n > 0) return false;
    sum += n;
  }
  return sum == p - q;
}

WeightMultiplicities enumerate_weights(int p, int q, int i, int j, int max_degree,
                                       int max_trunc) {
  check_weight_bounds(p, q, i, j, max_degree, max_trunc);
  const WeightMultiplicities cov = slot_distribution(p, i, +1);
  const WeightMultiplicities con = slot_distribution(q, j, -1);
  WeightMultiplicities out;
  for (const auto& [w1, c1] : cov)
    for (const auto& [w2, c2] : con) out[w1 + w2] += c1 * c2;
  return out;
}

WeightMultiplicities enumerate_weights_brute(int p, int q, int i, int j,
                                             int max_degree, int max_trunc) {
  check_weight_bounds(p, q, i, j, max_degree, max_trunc);
  WeightMultiplicities out;
  std::vector<int> a(static_cast<std::size_t>(p));
  std::vector<int> b(static_cast<std::size_t>(q));

  std::function<void(int)> fill_con = [&](int t) {
    if (t == q) {
      Weight w;
      for (int x : a) w.add(x, +1);
      for (int x : b) w.add(x, -1);
      ++out[w];
      return;
    }
    for (int x = 1; x <= j; ++x) {
      b[static_cast<std::size_t>(t)] = x;
      fill_con(t + 1);
    }
  };
  std::function<void(int)> fill_cov = [&](int t) {
    if (t == p) {
      fill_con(0);
      return;
    }
    for (int x = 1; x <= i; ++x) {
      a[static_cast<std::size_t>(t)] = x;
      fill_cov(t + 1);
    }
  };
  fill_cov(0);
  return out;
}

}  // namespace tenscat
