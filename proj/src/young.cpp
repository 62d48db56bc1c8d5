#include "tenscat/young.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace tenscat {

namespace {

std::string rows_text(const std::vector<int>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows[i]);
  }
  return s + "]";
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1)
      throw DomainError("Young diagram rows must be positive: " + rows_text(rows_));
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw DomainError("Young diagram rows must be weakly decreasing: " +
                        rows_text(rows_));
    boxes_ += rows_[i];
  }
}

YoungDiagram YoungDiagram::conjugate() const {
  if (rows_.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(rows_[0]));
  for (int c = 0; c < rows_[0]; ++c) {
    int h = 0;
    while (h < static_cast<int>(rows_.size()) && rows_[h] > c) ++h;
    cols[static_cast<std::size_t>(c)] = h;
  }
  return YoungDiagram(std::move(cols));
}

bool YoungDiagram::contains(const YoungDiagram& inner) const noexcept {
  if (inner.rows_.size() > rows_.size()) return false;
  for (std::size_t i = 0; i < inner.rows_.size(); ++i)
    if (inner.rows_[i] > rows_[i]) return false;
  return true;
}

bool diagram_less(const YoungDiagram& a, const YoungDiagram& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.rows() > b.rows();
}

std::vector<YoungDiagram> partitions_of(int n, int max_boxes) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
  if (n > max_boxes)
    throw BoundError("partitions_of: " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_boxes));
  std::vector<YoungDiagram> out;
  std::vector<int> current;
  // Largest first part first yields the canonical decreasing-lex order.
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Prime exponent vector of m (indexed by the value of each prime factor).
void add_factorization(std::vector<int>& exps, int m, int sign) {
  for (int p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      exps[static_cast<std::size_t>(p)] += sign;
      m /= p;
    }
  }
  if (m > 1) exps[static_cast<std::size_t>(m)] += sign;
}

}  // namespace

std::int64_t syt_count(const YoungDiagram& d, int max_boxes) {
  const int n = d.size();
  if (n > max_boxes)
    throw BoundError("syt_count: diagram with " + std::to_string(n) +
                     " boxes exceeds bound " + std::to_string(max_boxes));
  if (n == 0) return 1;

  const YoungDiagram conj = d.conjugate();
  std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
  for (int m = 2; m <= n; ++m) add_factorization(exps, m, +1);
  for (std::size_t r = 0; r < d.num_rows(); ++r) {
    for (int c = 0; c < d.row(r); ++c) {
      const int hook =
          (d.row(r) - c) + (conj.row(static_cast<std::size_t>(c)) - static_cast<int>(r)) - 1;
      if (hook > 1) add_factorization(exps, hook, -1);
    }
  }

  __int128 result = 1;
  for (std::size_t p = 2; p < exps.size(); ++p) {
    if (exps[p] < 0)
      throw InternalError("syt_count: hook quotient is not an integer");
    for (int e = 0; e < exps[p]; ++e) {
      result *= static_cast<__int128>(p);
      if (result > std::numeric_limits<std::int64_t>::max())
        throw BoundError("syt_count: result exceeds the 64-bit range");
    }
  }
  return static_cast<std::int64_t>(result);
}

void MonomialPoly::add(const std::vector<int>& exponents, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms.find(exponents);
  if (it == terms.end()) {
    terms.emplace(exponents, coeff);
  } else if ((it->second += coeff) == 0) {
    terms.erase(it);
  }
}

MonomialPoly MonomialPoly::mul(const MonomialPoly& other) const {
  MonomialPoly out;
  out.vars = vars;
  std::vector<int> e(static_cast<std::size_t>(vars));
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : other.terms) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add(e, c1 * c2);
    }
  }
  return out;
}

MonomialPoly schur_in_vars(const YoungDiagram& d, int vars, int max_boxes) {
  if (vars < 1) throw DomainError("schur_in_vars: variable count must be positive");
  if (vars < static_cast<int>(d.num_rows()))
    throw DomainError("schur_in_vars: fewer variables than rows, polynomial vanishes");
  if (d.size() > max_boxes)
    throw BoundError("schur_in_vars: diagram with " + std::to_string(d.size()) +
                     " boxes exceeds oracle bound " + std::to_string(max_boxes));

  MonomialPoly poly;
  poly.vars = vars;

  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < d.num_rows(); ++r)
    for (int c = 0; c < d.row(r); ++c) cells.push_back({static_cast<int>(r), c});

  std::vector<std::vector<int>> tab(d.num_rows());
  for (std::size_t r = 0; r < d.num_rows(); ++r)
    tab[r].assign(static_cast<std::size_t>(d.row(r)), 0);
  std::vector<int> content(static_cast<std::size_t>(vars), 0);

  // Row-major fill; rows weakly increase, columns strictly increase.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      poly.add(content, 1);
      return;
    }
    const auto [r, c] = cells[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= vars; ++v) {
      tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      rec(i + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
  return poly;
}

std::map<YoungDiagram, std::int64_t> schur_product_expand(const YoungDiagram& a,
                                                          const YoungDiagram& b,
                                                          int vars, int max_boxes) {
  const int degree = a.size() + b.size();
  if (degree > max_boxes)
    throw BoundError("schur_product_expand: total degree " + std::to_string(degree) +
                     " exceeds oracle bound " + std::to_string(max_boxes));
  if (vars < degree)
    throw DomainError("schur_product_expand: need at least " + std::to_string(degree) +
                      " variables for a faithful expansion");

  MonomialPoly remainder = schur_in_vars(a, vars, max_boxes).mul(schur_in_vars(b, vars, max_boxes));

  std::map<YoungDiagram, std::int64_t> out;
  while (!remainder.zero()) {
    // Lex-largest exponent vector; for a symmetric polynomial it is weakly
    // decreasing, so elimination walks down the dominance order and stops.
    const auto lead = std::prev(remainder.terms.end());
    std::vector<int> shape_rows;
    for (int e : lead->first) {
      if (e == 0) break;
      shape_rows.push_back(e);
    }
    const std::int64_t coeff = lead->second;
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < shape_rows.size(); ++i)
      if (shape_rows[i] < shape_rows[i + 1]) sorted = false;
    std::size_t support = 0;
    for (int e : lead->first)
      if (e != 0) ++support;
    if (!sorted || support != shape_rows.size() || coeff <= 0)
      throw InternalError("schur_product_expand: leading term is not a Schur leader");

    const YoungDiagram shape(shape_rows);
    if (shape.size() != degree)
      throw InternalError("schur_product_expand: leading term has wrong degree");

    const MonomialPoly basis = schur_in_vars(shape, vars, max_boxes);
    for (const auto& [e, c] : basis.terms) remainder.add(e, -coeff * c);
    out.emplace(shape, coeff);
  }
  return out;
}

}  // namespace tenscat
