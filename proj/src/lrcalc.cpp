#include "tenscat/lrcalc.hpp"

#include <array>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace tenscat {

namespace detail {

std::int64_t count_lr_tableaux(const YoungDiagram& lam, const YoungDiagram& mu,
                               const YoungDiagram& nu) {
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu) || !lam.contains(nu)) return 0;
  if (nu.empty()) return 1;  // lam == mu forced by the two checks above

  // Cells of lam/mu in reverse reading order: rows top to bottom, each row
  // right to left. Filling in this order lets the lattice condition be
  // checked one prefix at a time.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < lam.num_rows(); ++r)
    for (int c = lam.row(r) - 1; c >= mu.row(r); --c)
      cells.push_back({static_cast<int>(r), c});

  const int values = static_cast<int>(nu.num_rows());
  std::vector<int> placed(static_cast<std::size_t>(values), 0);
  std::vector<std::vector<int>> tab(lam.num_rows());
  for (std::size_t r = 0; r < lam.num_rows(); ++r)
    tab[r].assign(static_cast<std::size_t>(lam.row(r)), 0);

  std::int64_t total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[i];
    // Weak rows: bounded above by the already-placed right neighbour.
    int hi = values;
    if (c + 1 < lam.row(static_cast<std::size_t>(r)))
      hi = tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)];
    // Strict columns: bounded below by the cell above, when that cell lies
    // in the skew shape (it is filled, its row precedes this one).
    int lo = 1;
    if (r > 0 && c >= mu.row(static_cast<std::size_t>(r - 1)))
      lo = tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (placed[static_cast<std::size_t>(v - 1)] >= nu.row(static_cast<std::size_t>(v - 1)))
        continue;  // content quota for v exhausted
      if (v > 1 && placed[static_cast<std::size_t>(v - 2)] <= placed[static_cast<std::size_t>(v - 1)])
        continue;  // lattice: every prefix needs #(v-1) > #v before adding v
      tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++placed[static_cast<std::size_t>(v - 1)];
      rec(i + 1);
      --placed[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
  return total;
}

}  // namespace detail

namespace {

struct CacheKey {
  std::vector<int> lam, mu, nu;
  auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, std::int64_t>& cache() {
  static std::map<CacheKey, std::int64_t> table;
  return table;
}

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

CacheKey canonical_key(const YoungDiagram& lam, const YoungDiagram& mu,
                       const YoungDiagram& nu) {
  // N^lam_{mu,nu} is symmetric in (mu, nu); store the pair sorted.
  if (diagram_less(nu, mu)) return {lam.rows(), nu.rows(), mu.rows()};
  return {lam.rows(), mu.rows(), nu.rows()};
}

}  // namespace

std::int64_t lr_coeff(const YoungDiagram& lam, const YoungDiagram& mu,
                      const YoungDiagram& nu, int max_boxes) {
  if (lam.size() > max_boxes)
    throw BoundError("lr_coeff: |lambda| = " + std::to_string(lam.size()) +
                     " exceeds bound " + std::to_string(max_boxes));
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu)) return 0;

  const CacheKey key = canonical_key(lam, mu, nu);
  {
    std::shared_lock lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  const std::int64_t value = detail::count_lr_tableaux(
      YoungDiagram(key.lam), YoungDiagram(key.mu), YoungDiagram(key.nu));
  {
    std::unique_lock lock(cache_mutex());
    cache().emplace(key, value);
  }
  return value;
}

std::map<YoungDiagram, std::int64_t> lr_expand_pair(const YoungDiagram& mu,
                                                    const YoungDiagram& nu,
                                                    int max_boxes) {
  const int degree = mu.size() + nu.size();
  if (degree > max_boxes)
    throw BoundError("lr_expand_pair: |mu| + |nu| = " + std::to_string(degree) +
                     " exceeds bound " + std::to_string(max_boxes));
  std::map<YoungDiagram, std::int64_t> out;
  for (const YoungDiagram& lam : partitions_of(degree)) {
    if (!lam.contains(mu)) continue;
    const std::int64_t c = lr_coeff(lam, mu, nu, max_boxes);
    if (c != 0) out.emplace(lam, c);
  }
  return out;
}

std::vector<LrRecord> lr_cache_snapshot() {
  std::shared_lock lock(cache_mutex());
  std::vector<LrRecord> out;
  out.reserve(cache().size());
  for (const auto& [key, value] : cache())
    out.push_back({YoungDiagram(key.lam), YoungDiagram(key.mu), YoungDiagram(key.nu), value});
  return out;
}

void lr_cache_preload(const std::vector<LrRecord>& records) {
  std::unique_lock lock(cache_mutex());
  for (const LrRecord& r : records)
    cache().insert_or_assign(canonical_key(r.lam, r.mu, r.nu), r.value);
}

void lr_cache_clear() {
  std::unique_lock lock(cache_mutex());
  cache().clear();
}

std::size_t lr_cache_size() {
  std::shared_lock lock(cache_mutex());
  return cache().size();
}

}  // namespace tenscat
