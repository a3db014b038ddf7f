#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace occult;

namespace {

Lattice U() { return make_catalog(CatalogName::U); }
Lattice A(long n) { return make_catalog(CatalogName::A, n); }
Lattice E8() { return make_catalog(CatalogName::E8); }

std::vector<Lattice> catalog_blocks() {
  return {U(), make_catalog(CatalogName::One), make_catalog(CatalogName::Diag2d, 3), A(1), A(2), A(4),
          make_catalog(CatalogName::D, 4), make_catalog(CatalogName::D, 8), make_catalog(CatalogName::E6), E8(),
          make_catalog(CatalogName::V), k3_lattice()};
}

}  // namespace

TEST(MakeCatalog, StandardGrams) {
  EXPECT_EQ(U().gram(), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(make_catalog(CatalogName::V).gram(), (IntMatrix{{2, 1}, {1, -2}}));
  EXPECT_EQ(A(1).gram(), (IntMatrix{{2}}));
  EXPECT_EQ(make_catalog(CatalogName::Diag2d, 5).gram(), (IntMatrix{{10}}));
  EXPECT_EQ(A(3).gram(), (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
}

TEST(MakeCatalog, Errors) {
  EXPECT_THROW(make_catalog(CatalogName::A), Error);
  EXPECT_THROW(make_catalog(CatalogName::A, 0), Error);
  EXPECT_THROW(make_catalog(CatalogName::D, -2), Error);
  EXPECT_FALSE(catalog_name_from_string("F4").has_value());
}

TEST(MakeCatalog, RootLatticesArePositiveDefinite) {
  for (long n = 1; n <= 8; ++n) {
    EXPECT_EQ(signature(A(n)), (Signature{std::size_t(n), 0}));
    EXPECT_TRUE(is_even(A(n)));
  }
  EXPECT_EQ(signature(E8()), (Signature{8, 0}));
  EXPECT_EQ(signature(make_catalog(CatalogName::E6)), (Signature{6, 0}));
  EXPECT_EQ(signature(make_catalog(CatalogName::D, 5)), (Signature{5, 0}));
}

TEST(Lattice, RejectsBadGram) {
  EXPECT_THROW(Lattice(IntMatrix{{0, 1}, {2, 0}}), Error);
  EXPECT_THROW(Lattice(IntMatrix{{1, 1}, {1, 1}}), Error);
  EXPECT_THROW(Lattice(IntMatrix(2, 3)), Error);
}

TEST(Twist, Scaling) {
  EXPECT_EQ(twist(U(), 3).gram(), (IntMatrix{{0, 3}, {3, 0}}));
  EXPECT_EQ(twist(A(1), -1).gram(), (IntMatrix{{-2}}));
  EXPECT_EQ(twist(twist(E8(), 2), 3), twist(E8(), 6));
  EXPECT_THROW(twist(U(), 0), Error);
}

TEST(DirectSum, Basics) {
  Lattice k3 = k3_lattice();
  EXPECT_EQ(k3.rank(), 22u);
  EXPECT_EQ(determinant(k3), -1);
  EXPECT_EQ(direct_sum({A(1)}), A(1));
  EXPECT_THROW(direct_sum(std::vector<Lattice>{}), Error);
  Lattice s = direct_sum({U(), A(2), twist(A(1), -1)});
  EXPECT_EQ(determinant(s), determinant(U()) * determinant(A(2)) * determinant(twist(A(1), -1)));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(U()), (Signature{1, 1}));
  EXPECT_EQ(signature(k3_lattice()), (Signature{3, 19}));
  EXPECT_EQ(signature(make_catalog(CatalogName::V)), (Signature{1, 1}));
  EXPECT_EQ(signature(Lattice(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -4}})), (Signature{1, 2}));
}

TEST(Determinant, Delta) {
  EXPECT_EQ(delta(E8()), 1);
  EXPECT_EQ(delta(twist(U(), 3)), 9);
  EXPECT_EQ(delta(A(4)), 5);
  EXPECT_EQ(determinant(make_catalog(CatalogName::V)), -5);
}

TEST(Parity, Examples) {
  EXPECT_TRUE(is_even(U()));
  EXPECT_FALSE(is_even(make_catalog(CatalogName::One)));
  for (long n = 1; n <= 8; ++n) EXPECT_TRUE(is_even(A(n)));
}

TEST(Properties, TwistSignatureAndDelta) {
  for (const auto& L : catalog_blocks()) {
    Signature s = signature(L);
    EXPECT_EQ(s.pos + s.neg, L.rank());
    EXPECT_EQ(determinant(L) < 0, s.neg % 2 == 1);
    for (long n : {2L, -1L, -3L}) {
      Signature t = signature(twist(L, n));
      EXPECT_EQ(t, (n > 0 ? s : Signature{s.neg, s.pos}));
      Integer scale = 1;
      for (std::size_t i = 0; i < L.rank(); ++i) scale *= std::abs(n);
      EXPECT_EQ(delta(twist(L, n)), scale * delta(L));
    }
  }
}

TEST(Properties, DirectSumAddsSignatures) {
  auto blocks = catalog_blocks();
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    Lattice s = direct_sum({blocks[i], blocks[i + 1]});
    Signature a = signature(blocks[i]), b = signature(blocks[i + 1]);
    EXPECT_EQ(signature(s), (Signature{a.pos + b.pos, a.neg + b.neg}));
    EXPECT_EQ(determinant(s), determinant(blocks[i]) * determinant(blocks[i + 1]));
  }
}

// Jacobi's sign-change rule on scrambled Gram matrices is an independent
// path to the signature.
TEST(Properties, SignatureMatchesLeadingMinorOracle) {
  std::mt19937 rng(7);
  std::vector<Lattice> small{U(), A(2), twist(A(3), -1), make_catalog(CatalogName::V),
                             direct_sum({U(), twist(A(1), -1)}), direct_sum({A(1), twist(A(1), -1)}),
                             Lattice(IntMatrix{{0, 2, 1}, {2, 0, 0}, {1, 0, -2}}),
                             direct_sum({twist(U(), 3), twist(A(2), -1)})};
  int checked = 0;
  for (const auto& L : small) {
    for (int trial = 0; trial < 20; ++trial) {
      Lattice s = oracle::scramble(L, oracle::random_unimodular(L.rank(), rng));
      auto expect = oracle::leading_minor_signature(s.gram());
      if (!expect) continue;
      EXPECT_EQ(signature(s), *expect);
      EXPECT_EQ(signature(s), signature(L));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
