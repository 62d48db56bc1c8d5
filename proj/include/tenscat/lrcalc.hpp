#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tenscat/young.hpp"

namespace tenscat {

inline constexpr int kMaxLrBoxes = 20;

// Littlewood-Richardson coefficient N^lam_{mu,nu}: the number of LR skew
// tableaux of shape lam/mu and content nu. Zero when |lam| != |mu| + |nu|
// or when mu does not fit inside lam. Results are memoized under a
// process-wide cache that is safe for concurrent callers; the symmetric
// pair (mu, nu) is stored in canonical order.
std::int64_t lr_coeff(const YoungDiagram& lam, const YoungDiagram& mu,
                      const YoungDiagram& nu, int max_boxes = kMaxLrBoxes);

// All lam with N^lam_{mu,nu} nonzero, i.e. the Schur expansion of s_mu * s_nu.
std::map<YoungDiagram, std::int64_t> lr_expand_pair(const YoungDiagram& mu,
                                                    const YoungDiagram& nu,
                                                    int max_boxes = kMaxLrBoxes);

// One memoized coefficient, as persisted by the CLI cache file.
struct LrRecord {
  YoungDiagram lam, mu, nu;
  std::int64_t value = 0;
};

// Snapshot of the memo table in deterministic order.
std::vector<LrRecord> lr_cache_snapshot();

// Seed the memo table. Preloaded values short-circuit the enumeration, so
// callers must only feed back earlier snapshots.
void lr_cache_preload(const std::vector<LrRecord>& records);

void lr_cache_clear();
std::size_t lr_cache_size();

namespace detail {

// Uncached backtracking enumeration behind lr_coeff: counts semistandard
// fillings of lam/mu with content nu whose reverse reading word is a
// lattice word. Exposed so tests can exercise the raw kernel without the
// cache's symmetric-pair canonicalization.
std::int64_t count_lr_tableaux(const YoungDiagram& lam, const YoungDiagram& mu,
                               const YoungDiagram& nu);

}  // namespace detail

}  // namespace tenscat
