#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adic/fpmod.hpp"
#include "adic/rng.hpp"

using namespace adic;

namespace {

Ring Z = Ring::integers();

RingElement zint(long v) { return Z.from_int(v); }

ExactMatrix zmat(int rows, const std::vector<std::vector<long>>& cols_rows) {
  int r = static_cast<int>(cols_rows.size());
  int c = r ? static_cast<int>(cols_rows[0].size()) : 0;
  (void)rows;
  ExactMatrix m(Z, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, zint(cols_rows[i][j]));
  return m;
}

FPModule zmod(long d) { return FPModule::cyclic(zint(d)); }

FPModule zmodule(int free_rank, const std::vector<long>& factors) {
  std::vector<RingElement> fs;
  for (long d : factors) fs.push_back(zint(d));
  return FPModule::from_invariants(Z, free_rank, fs);
}

// Random module drawn from primes {2,3,5} with small exponents.
FPModule random_module(Rng& rng, int max_free = 2, int max_factors = 3) {
  int r = static_cast<int>(rng.below(max_free + 1));
  std::vector<RingElement> fs;
  int nf = static_cast<int>(rng.below(max_factors + 1));
  for (int i = 0; i < nf; ++i) {
    long d = 1;
    for (long p : {2L, 3L, 5L}) {
      int e = static_cast<int>(rng.below(3));
      for (int k = 0; k < e; ++k) d *= p;
    }
    fs.push_back(zint(d));
  }
  return FPModule::from_invariants(Z, r, fs);
}

}  // namespace

TEST_CASE("invariants from presentations") {
  // coker [[2,0],[0,12]] = Z/2 + Z/12
  FPModule m = FPModule::from_presentation(zmat(2, {{2, 0}, {0, 12}}));
  CHECK(m.free_rank() == 0);
  REQUIRE(m.invariant_factors().size() == 2);
  CHECK(m.invariant_factors()[0] == zint(2));
  CHECK(m.invariant_factors()[1] == zint(12));

  // zero relations on R^2: free of rank 2
  FPModule f = FPModule::from_presentation(ExactMatrix(Z, 2, 0));
  CHECK(f.free_rank() == 2);
  CHECK(f.invariant_factors().empty());

  // coker [[2,1],[0,3]]: SNF = diag(1,6), unit factor dropped
  FPModule m2 = FPModule::from_presentation(zmat(2, {{2, 1}, {0, 3}}));
  CHECK(m2.free_rank() == 0);
  REQUIRE(m2.invariant_factors().size() == 1);
  CHECK(m2.invariant_factors()[0] == zint(6));
}

TEST_CASE("cached invariants always match recomputation") {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    int r = 1 + static_cast<int>(rng.below(3));
    int c = static_cast<int>(rng.below(4));
    ExactMatrix A(Z, r, c);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < c; ++b) A.set(a, b, zint(rng.range(-20, 20)));
    FPModule m = FPModule::from_presentation(A);
    FPModule again = FPModule::from_presentation(m.presentation());
    CHECK(m.isomorphic(again));
  }
}

TEST_CASE("from_invariants canonicalizes") {
  // Unordered cyclic summands collapse into a chain: Z/4 + Z/6 = Z/2 + Z/12.
  FPModule m = zmodule(0, {4, 6});
  REQUIRE(m.invariant_factors().size() == 2);
  CHECK(m.invariant_factors()[0] == zint(2));
  CHECK(m.invariant_factors()[1] == zint(12));
  // Zero factors become free rank; units vanish.
  FPModule n = FPModule::from_invariants(Z, 1, {zint(0), zint(1), zint(3)});
  CHECK(n.free_rank() == 2);
  REQUIRE(n.invariant_factors().size() == 1);
  CHECK(n.describe() == "R^2 + R/(3)");
}

TEST_CASE("hom summand rules") {
  CHECK(hom(zmod(6), zmod(4)).isomorphic(zmod(2)));
  FPModule m = zmodule(1, {4, 6});
  CHECK(hom(FPModule::free_module(Z, 1), m).isomorphic(m));
  CHECK(hom(zmod(2), FPModule::free_module(Z, 1)).is_zero());
}

TEST_CASE("ext1 summand rules and presentation route") {
  CHECK(ext1(zmod(6), zmod(4)).isomorphic(zmod(2)));
  CHECK(ext1(FPModule::free_module(Z, 2), zmodule(1, {8})).is_zero());
  CHECK(ext1(zmod(4), FPModule::free_module(Z, 1)).isomorphic(zmod(4)));

  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    FPModule m = random_module(rng);
    FPModule n = random_module(rng);
    CHECK(ext1(m, n).isomorphic(ext1_from_presentation(m, n)));
  }
  // Also against non-diagonal presentations.
  FPModule tw = FPModule::from_presentation(zmat(2, {{2, 1}, {0, 3}}));
  CHECK(ext1_from_presentation(tw, zmod(4)).isomorphic(ext1(tw, zmod(4))));
}

TEST_CASE("tensor and tor") {
  CHECK(tensor(zmod(6), zmod(4)).isomorphic(zmod(2)));
  FPModule m = zmodule(2, {9});
  CHECK(tensor(m, FPModule::free_module(Z, 1)).isomorphic(m));
  CHECK(tor1(zmod(6), zmod(4)).isomorphic(zmod(2)));
  CHECK(tor1(FPModule::free_module(Z, 3), zmod(4)).is_zero());
}

TEST_CASE("bilinearity and symmetry") {
  Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    FPModule a = random_module(rng);
    FPModule b = random_module(rng);
    FPModule c = random_module(rng);
    CHECK(tensor(a, b).isomorphic(tensor(b, a)));
    CHECK(tor1(a, b).isomorphic(tor1(b, a)));
    CHECK(hom(direct_sum(a, b), c).isomorphic(
        direct_sum(hom(a, c), hom(b, c))));
    CHECK(hom(a, direct_sum(b, c)).isomorphic(
        direct_sum(hom(a, b), hom(a, c))));
    CHECK(ext1(direct_sum(a, b), c).isomorphic(
        direct_sum(ext1(a, c), ext1(b, c))));
    CHECK(ext1(a, direct_sum(b, c)).isomorphic(
        direct_sum(ext1(a, b), ext1(a, c))));
  }
}

TEST_CASE("support_in_V") {
  Ideal I2(Z, {zint(2)});
  CHECK(support_in_V(zmod(8), I2));
  CHECK_FALSE(support_in_V(FPModule::free_module(Z, 1), I2));
  CHECK_FALSE(support_in_V(zmod(12), I2));
  CHECK(support_in_V(zmod(12), Ideal(Z, {zint(0)})));       // V(0) = Spec
  CHECK(support_in_V(FPModule::zero(Z), Ideal(Z, {zint(1)})));
  CHECK_FALSE(support_in_V(zmod(2), Ideal(Z, {zint(1)})));
}

TEST_CASE("proposition 2.1 suite, exhaustive over small cyclic modules") {
  Ideal I(Z, {zint(2)});
  std::vector<FPModule> family;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        long d = 1;
        for (int k = 0; k < a; ++k) d *= 2;
        for (int k = 0; k < b; ++k) d *= 3;
        for (int k = 0; k < c; ++k) d *= 5;
        family.push_back(zmod(d));
      }
  FPModule RmodI = zmod(2);
  for (const auto& m : family) {
    if (!tensor(m, RmodI).is_zero()) continue;
    for (const auto& x : family) {
      if (!support_in_V(x, I)) continue;
      CHECK(tensor(m, x).is_zero());
    }
  }
}

TEST_CASE("quotient_by_power") {
  Ideal I2(Z, {zint(2)});
  CHECK(quotient_by_power(FPModule::free_module(Z, 1), I2, 3)
            .isomorphic(zmod(8)));
  CHECK(quotient_by_power(zmod(12), I2, 4).isomorphic(zmod(4)));
  Ring F5 = Ring::poly_mod_prime(5);
  Ideal It(F5, {F5.parse("t")});
  CHECK(quotient_by_power(FPModule::free_module(F5, 1), It, 2)
            .isomorphic(FPModule::cyclic(F5.parse("t^2"))));
  CHECK_THROWS_AS(quotient_by_power(zmod(4), I2, 0), PreconditionError);
}

TEST_CASE("quotient_by_power sees only the reduced generator") {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    FPModule m = random_module(rng);
    long a = rng.range(1, 20), b = rng.range(1, 20);
    Ideal gens2(Z, {zint(a), zint(b)});
    Ideal gens1(Z, {gcd_of(zint(a), zint(b))});
    int alpha = 1 + static_cast<int>(rng.below(4));
    CHECK(quotient_by_power(m, gens2, alpha)
              .isomorphic(quotient_by_power(m, gens1, alpha)));
  }
}

TEST_CASE("ideal reduction") {
  Ideal I(Z, {zint(4), zint(6)});
  CHECK(I.reduced() == zint(2));
  CHECK(I.generators().size() == 2);
  Ideal zero(Z, {zint(0), zint(0)});
  CHECK(zero.is_zero());
  Ideal unit(Z, {zint(3), zint(5)});
  CHECK(unit.is_unit_ideal());
}

TEST_CASE("module maps: well-definedness is certified") {
  // Z/4 -> Z/2, ambient identity: fine.
  FPModule m4 = zmod(4), m2 = zmod(2);
  CHECK_NOTHROW(ModuleMap(m4, m2, ExactMatrix::identity(Z, 1)));
  // Z/2 -> Z/4, ambient identity: 2 does not map into (4).
  CHECK_THROWS_AS(ModuleMap(m2, m4, ExactMatrix::identity(Z, 1)),
                  PreconditionError);
  // Z/2 -> Z/4 via multiplication by 2 is fine.
  CHECK_NOTHROW(ModuleMap(m2, m4, ExactMatrix::identity(Z, 1).scaled(zint(2))));
}

TEST_CASE("kernel, image, cokernel of module maps") {
  // Multiplication by 2 on Z/12: kernel Z/2, image Z/6, cokernel Z/2.
  FPModule m12 = zmod(12);
  ModuleMap mul2 = ModuleMap::multiplication(m12, zint(2));
  CHECK(mul2.kernel().isomorphic(zmod(2)));
  CHECK(mul2.image().isomorphic(zmod(6)));
  CHECK(mul2.cokernel().isomorphic(zmod(2)));

  // Quotient map Z -> Z/6: kernel is free of rank 1.
  ModuleMap quot(FPModule::free_module(Z, 1), zmod(6),
                 ExactMatrix::identity(Z, 1));
  CHECK(quot.kernel().isomorphic(FPModule::free_module(Z, 1)));
  CHECK(quot.cokernel().is_zero());
  CHECK(quot.image().isomorphic(zmod(6)));
}

TEST_CASE("annihilator kernels match map kernels") {
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    FPModule m = random_module(rng);
    long x = rng.range(0, 12);
    FPModule byrule = annihilator_kernel(m, zint(x));
    FPModule bymap = ModuleMap::multiplication(m, zint(x)).kernel();
    CHECK(byrule.isomorphic(bymap));
  }
}

TEST_CASE("tensor against presentation route") {
  // M tensor N = coker(A ox I | I ox B); checked on random small modules.
  Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    FPModule m = random_module(rng, 1, 2);
    FPModule n = random_module(rng, 1, 2);
    int rm = m.ambient_rank(), rn = n.ambient_rank();
    const ExactMatrix& A = m.presentation();
    const ExactMatrix& B = n.presentation();
    ExactMatrix big(Z, rm * rn, A.cols() * rn + rm * B.cols());
    int col = 0;
    for (int j = 0; j < A.cols(); ++j)
      for (int t = 0; t < rn; ++t, ++col)
        for (int i2 = 0; i2 < rm; ++i2) big.set(i2 * rn + t, col, A.at(i2, j));
    for (int s = 0; s < rm; ++s)
      for (int j = 0; j < B.cols(); ++j, ++col)
        for (int t = 0; t < rn; ++t) big.set(s * rn + t, col, B.at(t, j));
    CHECK(FPModule::from_presentation(big).isomorphic(tensor(m, n)));
  }
}

TEST_CASE("submodule machinery") {
  FPModule m12 = zmod(12);
  ExactMatrix g2(Z, 1, 1);
  g2.set(0, 0, zint(2));
  ExactMatrix g4(Z, 1, 1);
  g4.set(0, 0, zint(4));
  CHECK(submodule_from_generators(m12, g2).isomorphic(zmod(6)));
  CHECK(submodule_from_generators(m12, g4).isomorphic(zmod(3)));
  CHECK(submodule_contained(m12, g4, g2));
  CHECK_FALSE(submodule_contained(m12, g2, g4));
  ExactMatrix g8(Z, 1, 1);
  g8.set(0, 0, zint(8));
  CHECK(submodule_equal(m12, g4, g8));  // 4 and 8 generate the same in Z/12
  CHECK(quotient_by_submodule(m12, g2).isomorphic(zmod(2)));
}

TEST_CASE("homology of a two-step complex") {
  // Z --2--> Z --0--> Z has homology Z/2 at the middle over the image of 2.
  FPModule F = FPModule::free_module(Z, 1);
  ModuleMap f(F, F, ExactMatrix::identity(Z, 1).scaled(zint(2)));
  ModuleMap g = ModuleMap::zero_map(F, F);
  CHECK(homology_at(f, g).isomorphic(zmod(2)));
  // Exact complex: Z --1--> Z --0--> 0.
  ModuleMap id(F, F, ExactMatrix::identity(Z, 1));
  ModuleMap to0 = ModuleMap::zero_map(F, FPModule::zero(Z));
  CHECK(homology_at(id, to0).is_zero());
  // Composite not zero is rejected.
  CHECK_THROWS_AS(homology_at(id, id), PreconditionError);
}
