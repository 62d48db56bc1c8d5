#include "tenscat/homdiag.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace tenscat {

namespace {

void check_slots(TensorShape s, int max_slots, const char* what) {
  if (s.p < 0 || s.q < 0)
    throw DomainError(std::string(what) + ": slot counts must be nonnegative");
  if (s.p > max_slots || s.q > max_slots)
    throw BoundError(std::string(what) + ": shape (" + std::to_string(s.p) + "," +
                     std::to_string(s.q) + ") exceeds slot bound " +
                     std::to_string(max_slots));
}

// Checks that map is 0 exactly on `contracted` and restricts to a bijection
// onto 1..size-k elsewhere.
void check_slot_map(const std::vector<int>& map, const std::vector<bool>& contracted,
                    int target_size, const char* what) {
  std::vector<bool> hit(static_cast<std::size_t>(target_size) + 1, false);
  for (std::size_t s = 0; s < map.size(); ++s) {
    if (contracted[s]) {
      if (map[s] != 0)
        throw DomainError(std::string(what) + ": contracted slot " +
                          std::to_string(s + 1) + " must map to 0");
      continue;
    }
    const int t = map[s];
    if (t < 1 || t > target_size || hit[static_cast<std::size_t>(t)])
      throw DomainError(std::string(what) + ": slot map is not a bijection");
    hit[static_cast<std::size_t>(t)] = true;
  }
}

}  // namespace

ContractionDiagram ContractionDiagram::make(TensorShape source,
                                            std::vector<std::pair<int, int>> contractions,
                                            std::vector<int> v_map,
                                            std::vector<int> dual_map) {
  if (source.p < 0 || source.q < 0)
    throw DomainError("ContractionDiagram: slot counts must be nonnegative");
  const int k = static_cast<int>(contractions.size());
  if (k > source.p || k > source.q)
    throw DomainError("ContractionDiagram: more contractions than slots");
  if (static_cast<int>(v_map.size()) != source.p ||
      static_cast<int>(dual_map.size()) != source.q)
    throw DomainError("ContractionDiagram: slot map length mismatch");

  std::sort(contractions.begin(), contractions.end());
  std::vector<bool> v_contracted(static_cast<std::size_t>(source.p), false);
  std::vector<bool> d_contracted(static_cast<std::size_t>(source.q), false);
  for (const auto& [a, b] : contractions) {
    if (a < 1 || a > source.p || b < 1 || b > source.q)
      throw DomainError("ContractionDiagram: contraction index out of range");
    if (v_contracted[static_cast<std::size_t>(a - 1)] ||
        d_contracted[static_cast<std::size_t>(b - 1)])
      throw DomainError("ContractionDiagram: contracted slots must be distinct");
    v_contracted[static_cast<std::size_t>(a - 1)] = true;
    d_contracted[static_cast<std::size_t>(b - 1)] = true;
  }
  check_slot_map(v_map, v_contracted, source.p - k, "ContractionDiagram");
  check_slot_map(dual_map, d_contracted, source.q - k, "ContractionDiagram");

  ContractionDiagram d;
  d.source_ = source;
  d.target_ = {source.p - k, source.q - k};
  d.contractions_ = std::move(contractions);
  d.v_map_ = std::move(v_map);
  d.dual_map_ = std::move(dual_map);
  return d;
}

ContractionDiagram ContractionDiagram::identity(TensorShape shape) {
  std::vector<int> v(static_cast<std::size_t>(shape.p));
  std::vector<int> w(static_cast<std::size_t>(shape.q));
  std::iota(v.begin(), v.end(), 1);
  std::iota(w.begin(), w.end(), 1);
  return make(shape, {}, std::move(v), std::move(w));
}

std::vector<int> ContractionDiagram::v_map_compressed() const {
  std::vector<int> out;
  for (int t : v_map_)
    if (t != 0) out.push_back(t);
  return out;
}

std::vector<int> ContractionDiagram::dual_map_compressed() const {
  std::vector<int> out;
  for (int t : dual_map_)
    if (t != 0) out.push_back(t);
  return out;
}

namespace {

std::int64_t falling_factorial(int n, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

std::int64_t factorial(int n) { return falling_factorial(n, n); }

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return falling_factorial(n, k) / factorial(k);
}

}  // namespace

std::int64_t hom_dim(TensorShape src, TensorShape tgt, int max_slots) {
  check_slots(src, max_slots, "hom_dim");
  check_slots(tgt, max_slots, "hom_dim");
  const int k = src.p - tgt.p;
  if (k < 0 || src.q - tgt.q != k) return 0;
  return binomial(src.p, k) * binomial(src.q, k) * factorial(k) *
         factorial(src.p - k) * factorial(src.q - k);
}

std::vector<ContractionDiagram> enumerate_basis(TensorShape src, TensorShape tgt,
                                                int max_slots) {
  check_slots(src, max_slots, "enumerate_basis");
  check_slots(tgt, max_slots, "enumerate_basis");
  std::vector<ContractionDiagram> out;
  const int k = src.p - tgt.p;
  if (k < 0 || src.q - tgt.q != k) return out;

  // Contraction pair lists are built smallest pair first (covariant slot,
  // then partner), which is exactly lex order on the sorted pair list; the
  // slot bijections then step in lex order via next_permutation.
  std::vector<int> v_slots(static_cast<std::size_t>(k));
  std::vector<int> partners(static_cast<std::size_t>(k));
  std::vector<bool> partner_used(static_cast<std::size_t>(src.q) + 1, false);

  std::vector<int> v_images(static_cast<std::size_t>(tgt.p));
  std::vector<int> d_images(static_cast<std::size_t>(tgt.q));

  auto emit = [&]() {
    std::vector<std::pair<int, int>> contractions;
    for (int i = 0; i < k; ++i)
      contractions.emplace_back(v_slots[static_cast<std::size_t>(i)],
                                partners[static_cast<std::size_t>(i)]);
    std::vector<int> v_map(static_cast<std::size_t>(src.p), 0);
    std::vector<int> dual_map(static_cast<std::size_t>(src.q), 0);
    std::size_t vi = 0;
    for (int s = 1; s <= src.p; ++s) {
      if (std::find(v_slots.begin(), v_slots.end(), s) == v_slots.end())
        v_map[static_cast<std::size_t>(s - 1)] = v_images[vi++];
    }
    std::size_t di = 0;
    for (int s = 1; s <= src.q; ++s) {
      if (!partner_used[static_cast<std::size_t>(s)])
        dual_map[static_cast<std::size_t>(s - 1)] = d_images[di++];
    }
    out.push_back(ContractionDiagram::make(src, std::move(contractions),
                                           std::move(v_map), std::move(dual_map)));
  };

  auto for_each_permutation = [](std::vector<int>& seq, auto&& body) {
    std::iota(seq.begin(), seq.end(), 1);
    if (seq.empty()) {
      body();
      return;
    }
    do {
      body();
    } while (std::next_permutation(seq.begin(), seq.end()));
  };

  std::function<void(int, int)> choose_pairs = [&](int i, int min_a) {
    if (i == k) {
      for_each_permutation(v_images, [&]() {
        for_each_permutation(d_images, emit);
      });
      return;
    }
    for (int a = min_a; a <= src.p; ++a) {
      v_slots[static_cast<std::size_t>(i)] = a;
      for (int b = 1; b <= src.q; ++b) {
        if (partner_used[static_cast<std::size_t>(b)]) continue;
        partner_used[static_cast<std::size_t>(b)] = true;
        partners[static_cast<std::size_t>(i)] = b;
        choose_pairs(i + 1, a + 1);
        partner_used[static_cast<std::size_t>(b)] = false;
      }
    }
  };

  choose_pairs(0, 1);
  return out;
}

ContractionDiagram compose(const ContractionDiagram& outer,
                           const ContractionDiagram& inner) {
  if (!(inner.target() == outer.source()))
    throw DomainError("compose: inner target does not match outer source");

  auto invert = [](const std::vector<int>& map, int target_size) {
    std::vector<int> inv(static_cast<std::size_t>(target_size) + 1, 0);
    for (std::size_t s = 0; s < map.size(); ++s)
      if (map[s] > 0) inv[static_cast<std::size_t>(map[s])] = static_cast<int>(s) + 1;
    return inv;
  };
  const std::vector<int> inv_v = invert(inner.v_map(), inner.target().p);
  const std::vector<int> inv_d = invert(inner.dual_map(), inner.target().q);

  std::vector<std::pair<int, int>> contractions = inner.contractions();
  for (const auto& [a, b] : outer.contractions())
    contractions.emplace_back(inv_v[static_cast<std::size_t>(a)],
                              inv_d[static_cast<std::size_t>(b)]);

  auto route = [](const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> out(first.size(), 0);
    for (std::size_t s = 0; s < first.size(); ++s) {
      const int mid = first[s];
      if (mid > 0) out[s] = second[static_cast<std::size_t>(mid - 1)];
    }
    return out;
  };

  return ContractionDiagram::make(inner.source(), std::move(contractions),
                                  route(inner.v_map(), outer.v_map()),
                                  route(inner.dual_map(), outer.dual_map()));
}

std::optional<TensorMonomial> evaluate(const ContractionDiagram& d,
                                       const TensorMonomial& m) {
  if (static_cast<int>(m.v.size()) != d.source().p ||
      static_cast<int>(m.dual.size()) != d.source().q)
    throw DomainError("evaluate: monomial does not match the source shape");
  for (int idx : m.v)
    if (idx < 1) throw DomainError("evaluate: basis indices must be positive");
  for (int idx : m.dual)
    if (idx < 1) throw DomainError("evaluate: basis indices must be positive");

  for (const auto& [a, b] : d.contractions())
    if (m.v[static_cast<std::size_t>(a - 1)] != m.dual[static_cast<std::size_t>(b - 1)])
      return std::nullopt;

  TensorMonomial out;
  out.v.assign(static_cast<std::size_t>(d.target().p), 0);
  out.dual.assign(static_cast<std::size_t>(d.target().q), 0);
  for (std::size_t s = 0; s < d.v_map().size(); ++s)
    if (d.v_map()[s] > 0) out.v[static_cast<std::size_t>(d.v_map()[s] - 1)] = m.v[s];
  for (std::size_t s = 0; s < d.dual_map().size(); ++s)
    if (d.dual_map()[s] > 0)
      out.dual[static_cast<std::size_t>(d.dual_map()[s] - 1)] = m.dual[s];
  return out;
}

}  // namespace tenscat
