#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenscat/category.hpp"

using namespace tenscat;

namespace {

YoungDiagram yd(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

const YoungDiagram kEmpty{};

std::int64_t mult_of(const LabelMultiset& ms, const SimpleLabel& label) {
  auto it = ms.find(label);
  return it == ms.end() ? 0 : it->second;
}

std::int64_t total_mass(const LabelMultiset& ms) {
  std::int64_t total = 0;
  for (const auto& [label, mult] : ms) total += mult;
  return total;
}

// Multiset-level tensor product, for the associativity check.
LabelMultiset tensor_multisets(const LabelMultiset& a, const LabelMultiset& b) {
  LabelMultiset out;
  for (const auto& [la, ma] : a)
    for (const auto& [lb, mb] : b)
      for (const auto& [lc, mc] : tensor_projectives(la, lb)) out[lc] += ma * mb * mc;
  return out;
}

}  // namespace

TEST_CASE("radical_layers examples") {
  // the adjoint object: projective cover of gl(V)/C with trivial socle layer
  const auto gl = radical_layers(yd({1}), yd({1}));
  REQUIRE(gl.layers.size() == 2);
  CHECK(gl.layers[0] == LabelMultiset{{{yd({1}), yd({1})}, 1}});
  CHECK(gl.layers[1] == LabelMultiset{{{kEmpty, kEmpty}, 1}});

  for (int n = 0; n <= 3; ++n) {
    for (const YoungDiagram& lam : partitions_of(n)) {
      const auto single = radical_layers(lam, kEmpty);
      REQUIRE(single.layers.size() == 1);
      CHECK(single.layers[0] == LabelMultiset{{{lam, kEmpty}, 1}});
    }
  }

  const auto two_one = radical_layers(yd({2}), yd({1}));
  REQUIRE(two_one.layers.size() == 2);
  CHECK(two_one.layers[0] == LabelMultiset{{{yd({2}), yd({1})}, 1}});
  CHECK(two_one.layers[1] == LabelMultiset{{{yd({1}), kEmpty}, 1}});

  CHECK_THROWS_AS(radical_layers(yd({21}), kEmpty), BoundError);
}

TEST_CASE("radical layer structure, exhaustive to 4+4 boxes") {
  for (int a = 0; a <= 4; ++a) {
    for (const YoungDiagram& lam : partitions_of(a)) {
      for (int b = 0; b <= 4; ++b) {
        for (const YoungDiagram& mu : partitions_of(b)) {
          const auto filt = radical_layers(lam, mu);
          REQUIRE(!filt.layers.empty());
          // simple top
          CHECK(filt.layers[0] == LabelMultiset{{{lam, mu}, 1}});
          // layers stop at min(|lam|, |mu|), and none below the last is empty
          CHECK(static_cast<int>(filt.layers.size()) <= 1 + std::min(a, b));
          for (std::size_t i = 0; i < filt.layers.size(); ++i) {
            CHECK(!filt.layers[i].empty());
            for (const auto& [label, mult] : filt.layers[i]) {
              CHECK(mult > 0);
              // constituents of layer i lose exactly i boxes on each side
              CHECK(label.lam.size() == a - static_cast<int>(i));
              CHECK(label.mu.size() == b - static_cast<int>(i));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("ext_dim examples") {
  for (const SimpleLabel& label : labels_up_to(2)) CHECK(ext_dim(label, label, 0) == 1);

  CHECK(ext_dim({yd({1}), yd({1})}, {kEmpty, kEmpty}, 1) == 1);

  for (const SimpleLabel& tgt : labels_up_to(2))
    for (int i = 1; i <= 3; ++i) CHECK(ext_dim({kEmpty, kEmpty}, tgt, i) == 0);

  CHECK_THROWS_AS(ext_dim({yd({1}), yd({1})}, {kEmpty, kEmpty}, -1), DomainError);
}

TEST_CASE("ext_dim in degree zero is the Kronecker delta") {
  const auto labels = labels_up_to(3);
  for (const SimpleLabel& src : labels)
    for (const SimpleLabel& tgt : labels)
      CHECK(ext_dim(src, tgt, 0) == (src == tgt ? 1 : 0));
}

TEST_CASE("ext_dim agrees with the radical filtration cross-check") {
  // dim Ext^i((lam,mu),(nu,kappa)) equals the multiplicity of (nu, kappa')
  // in layer i of the filtration of the projective (lam, mu'), primes being
  // conjugates: the two published phrasings of the same dimension.
  const auto labels = labels_up_to(3);
  for (const SimpleLabel& src : labels) {
    const auto filt = radical_layers(src.lam, src.mu.conjugate());
    for (const SimpleLabel& tgt : labels) {
      for (int i = 0; i <= 4; ++i) {
        const SimpleLabel wanted{tgt.lam, tgt.mu.conjugate()};
        const std::int64_t via_layers =
            i < static_cast<int>(filt.layers.size()) ? mult_of(filt.layers[i], wanted) : 0;
        CHECK(ext_dim(src, tgt, i) == via_layers);
      }
    }
  }
}

TEST_CASE("jh_projective examples") {
  const auto gl = jh_projective(yd({1}), yd({1}));
  CHECK(gl == LabelMultiset{{{yd({1}), yd({1})}, 1}, {{kEmpty, kEmpty}, 1}});
  CHECK(total_mass(gl) == 2);  // the adjoint object has length 2

  CHECK(jh_projective(yd({3, 1}), kEmpty) == LabelMultiset{{{yd({3, 1}), kEmpty}, 1}});
  CHECK(jh_projective(yd({1, 1}), yd({1})) ==
        LabelMultiset{{{yd({1, 1}), yd({1})}, 1}, {{yd({1}), kEmpty}, 1}});
}

TEST_CASE("jh_mixed_tensor examples and mass") {
  CHECK(jh_mixed_tensor(1, 0) == LabelMultiset{{{yd({1}), kEmpty}, 1}});
  CHECK(jh_mixed_tensor(1, 1) ==
        LabelMultiset{{{yd({1}), yd({1})}, 1}, {{kEmpty, kEmpty}, 1}});
  CHECK(jh_mixed_tensor(2, 0) ==
        LabelMultiset{{{yd({2}), kEmpty}, 1}, {{yd({1, 1}), kEmpty}, 1}});

  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 3; ++q) {
      const auto ms = jh_mixed_tensor(p, q);
      std::int64_t expected = 0;
      for (const YoungDiagram& lam : partitions_of(p))
        for (const YoungDiagram& mu : partitions_of(q))
          expected += syt_count(lam) * syt_count(mu) * total_mass(jh_projective(lam, mu));
      CHECK(total_mass(ms) == expected);
    }
  }

  // pure covariant tensors are semisimple with empty mu side
  for (int p = 0; p <= 5; ++p) {
    const auto ms = jh_mixed_tensor(p, 0);
    std::int64_t expected = 0;
    for (const YoungDiagram& lam : partitions_of(p)) expected += syt_count(lam);
    CHECK(total_mass(ms) == expected);
    for (const auto& [label, mult] : ms) CHECK(label.mu == kEmpty);
  }

  CHECK_THROWS_AS(jh_mixed_tensor(7, 0), BoundError);
  CHECK_THROWS_AS(jh_mixed_tensor(-1, 0), DomainError);
}

TEST_CASE("dual_label swaps components and is an involution") {
  CHECK(dual_label({kEmpty, kEmpty}) == SimpleLabel{kEmpty, kEmpty});
  CHECK(dual_label({yd({1}), kEmpty}) == SimpleLabel{kEmpty, yd({1})});
  CHECK(dual_label({yd({2, 1}), yd({1})}) == SimpleLabel{yd({1}), yd({2, 1})});
  for (const SimpleLabel& label : labels_up_to(3))
    CHECK(dual_label(dual_label(label)) == label);
}

TEST_CASE("tensor_projectives examples and laws") {
  const SimpleLabel unit{kEmpty, kEmpty};
  for (const SimpleLabel& a : labels_up_to(3)) {
    CHECK(tensor_projectives(a, unit) == LabelMultiset{{a, 1}});
    CHECK(tensor_projectives(unit, a) == LabelMultiset{{a, 1}});
  }

  CHECK(tensor_projectives({yd({1}), kEmpty}, {yd({1}), kEmpty}) ==
        LabelMultiset{{{yd({2}), kEmpty}, 1}, {{yd({1, 1}), kEmpty}, 1}});

  // V tensor its dual is the adjoint object
  CHECK(tensor_projectives({yd({1}), kEmpty}, {kEmpty, yd({1})}) ==
        LabelMultiset{{{yd({1}), yd({1})}, 1}});

  const auto labels = labels_up_to(2);
  for (const SimpleLabel& a : labels)
    for (const SimpleLabel& b : labels)
      CHECK(tensor_projectives(a, b) == tensor_projectives(b, a));

  for (const SimpleLabel& a : labels) {
    for (const SimpleLabel& b : labels) {
      const auto ab = tensor_projectives(a, b);
      for (const SimpleLabel& c : labels) {
        const auto bc = tensor_projectives(b, c);
        CHECK(tensor_multisets(ab, {{c, 1}}) == tensor_multisets({{a, 1}}, bc));
      }
    }
  }
}

TEST_CASE("ext_table matches per-pair recomputation") {
  const auto table = ext_table_serial(2);
  for (const auto& entry : table) {
    CHECK(entry.dim > 0);
    CHECK(entry.dim == ext_dim(entry.src, entry.tgt, entry.degree));
  }
  // completeness: every nonzero dimension appears
  std::int64_t nonzero = 0;
  const auto labels = labels_up_to(2);
  for (const SimpleLabel& src : labels)
    for (const SimpleLabel& tgt : labels)
      for (int i = 0; i <= 2; ++i)
        if (ext_dim(src, tgt, i) != 0) ++nonzero;
  CHECK(static_cast<std::int64_t>(table.size()) == nonzero);
}
