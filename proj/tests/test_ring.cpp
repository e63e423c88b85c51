#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adic/rng.hpp"
#include "adic/ring.hpp"

using namespace adic;

namespace {

// Independent support oracle for small integers: trial factorization.
std::vector<long> prime_support_z(long n) {
  std::vector<long> ps;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool subset_of(const std::vector<long>& a, const std::vector<long>& b) {
  for (long x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

RingElement zint(long v) { return Ring::integers().from_int(v); }

}  // namespace

TEST_CASE("ring construction and names") {
  CHECK(Ring::integers().name() == "Z");
  CHECK(Ring::poly_mod_prime(5).name() == "F5[t]");
  CHECK(Ring::poly_rationals().name() == "Q[t]");
  CHECK(Ring::from_name("F7[t]") == Ring::poly_mod_prime(7));
  CHECK_THROWS_AS(Ring::poly_mod_prime(4), PreconditionError);
  CHECK_THROWS_AS(Ring::poly_mod_prime(1), PreconditionError);
  CHECK_THROWS_AS(Ring::from_name("R"), PreconditionError);
}

TEST_CASE("integer literals round trip") {
  Ring Z = Ring::integers();
  CHECK(Z.parse("-42").to_string() == "-42");
  CHECK(Z.parse("  17 ").to_string() == "17");
  CHECK_THROWS_AS(Z.parse("1/2"), ParseError);
  CHECK_THROWS_AS(Z.parse("t"), ParseError);
}

TEST_CASE("polynomial literals") {
  Ring Q = Ring::poly_rationals();
  RingElement p = Q.parse("3*t^2 - 1/2*t + 4");
  CHECK(p.to_string() == "3*t^2 - 1/2*t + 4");
  CHECK(p.degree() == 2);
  CHECK(Q.parse("t^2-1").to_string() == "t^2 - 1");
  CHECK(Q.parse("t + t").to_string() == "2*t");
  CHECK(Q.parse("0").is_zero());

  Ring F5 = Ring::poly_mod_prime(5);
  CHECK(F5.parse("7*t + 6").to_string() == "2*t + 1");
  CHECK(F5.parse("-t").to_string() == "4*t");
  CHECK(F5.parse("5").is_zero());
  CHECK_THROWS_AS(F5.parse("1/2*t"), ParseError);
  CHECK_THROWS_AS(Q.parse("t^"), ParseError);
  CHECK_THROWS_AS(Q.parse("* t"), ParseError);
}

TEST_CASE("arithmetic and divmod") {
  Ring Q = Ring::poly_rationals();
  RingElement a = Q.parse("t^3 - 1");
  RingElement b = Q.parse("t - 1");
  auto [quot, rem] = divmod(a, b);
  CHECK(rem.is_zero());
  CHECK(quot == Q.parse("t^2 + t + 1"));
  CHECK(quot * b == a);

  Ring Z = Ring::integers();
  auto dm = divmod(zint(-7), zint(3));
  CHECK(dm.quot * zint(3) + dm.rem == zint(-7));
  CHECK(norm_less(dm.rem, zint(3)));
}

TEST_CASE("canonical forms are idempotent") {
  Ring F5 = Ring::poly_mod_prime(5);
  RingElement e = F5.parse("3*t^2 + 1");
  RingElement c = canonical(e);
  CHECK(c.to_string() == "t^2 + 2");  // monic: 3^{-1} = 2 mod 5
  CHECK(canonical(c) == c);
  CHECK(normalizing_unit(e) * e == c);
  CHECK(canonical(zint(-6)) == zint(6));
  CHECK(canonical(Ring::integers().zero()).is_zero());
}

TEST_CASE("euclid_gcd: Bezout identity and divisibility") {
  Ring Z = Ring::integers();
  auto g = euclid_gcd(zint(12), zint(18));
  CHECK(g.g == zint(6));
  CHECK(g.u * zint(12) + g.v * zint(18) == zint(6));
  CHECK(divides(g.g, zint(12)));
  CHECK(divides(g.g, zint(18)));

  auto g2 = euclid_gcd(zint(0), zint(5));
  CHECK(g2.g == zint(5));
  CHECK(g2.u == zint(0));
  CHECK(g2.v == zint(1));

  Ring Q = Ring::poly_rationals();
  auto g3 = euclid_gcd(Q.parse("t^2 - 1"), Q.parse("t - 1"));
  CHECK(g3.g == Q.parse("t - 1"));
  CHECK(g3.u * Q.parse("t^2 - 1") + g3.v * Q.parse("t - 1") == g3.g);

  CHECK_THROWS_AS(euclid_gcd(zint(1), Q.parse("t")), PreconditionError);
}

TEST_CASE("gcd properties on random inputs") {
  Rng rng(7);
  Ring Z = Ring::integers();
  for (int i = 0; i < 200; ++i) {
    RingElement a = zint(rng.range(-300, 300));
    RingElement b = zint(rng.range(-300, 300));
    RingElement c = zint(rng.range(-300, 300));
    CHECK(gcd_of(a, b) == gcd_of(b, a));
    CHECK(gcd_of(gcd_of(a, b), c) == gcd_of(a, gcd_of(b, c)));
    CHECK(gcd_fold({a, b, c}, Z) == gcd_of(gcd_of(a, b), c));
    auto r = euclid_gcd(a, b);
    CHECK(r.u * a + r.v * b == r.g);
  }
}

TEST_CASE("radical_compare") {
  CHECK(radical_compare(zint(6), zint(12)) == RadicalRelation::Equal);
  CHECK(radical_compare(zint(2), zint(6)) == RadicalRelation::SupportOfAInB);
  CHECK(radical_compare(zint(6), zint(2)) == RadicalRelation::SupportOfBInA);
  CHECK(radical_compare(zint(4), zint(9)) == RadicalRelation::Incomparable);
  CHECK_THROWS_AS(radical_compare(zint(0), zint(2)), PreconditionError);

  Ring Q = Ring::poly_rationals();
  CHECK(radical_compare(Q.parse("t^2"), Q.parse("t")) ==
        RadicalRelation::Equal);
}

TEST_CASE("radical_compare against factorization oracle") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    long a = rng.range(1, 400);
    long b = rng.range(1, 400);
    auto sa = prime_support_z(a);
    auto sb = prime_support_z(b);
    bool ab = subset_of(sa, sb);
    bool ba = subset_of(sb, sa);
    RadicalRelation want = ab && ba ? RadicalRelation::Equal
                          : ab     ? RadicalRelation::SupportOfAInB
                          : ba     ? RadicalRelation::SupportOfBInA
                                   : RadicalRelation::Incomparable;
    CHECK(radical_compare(zint(a), zint(b)) == want);
  }
}

TEST_CASE("support union idempotence") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    long a = rng.range(1, 200);
    long b = rng.range(1, 200);
    if (radical_compare(zint(a), zint(b)) == RadicalRelation::Equal)
      CHECK(radical_compare(zint(a * b), zint(a)) == RadicalRelation::Equal);
  }
}

TEST_CASE("part_split") {
  auto s = part_split(zint(12), zint(2));
  CHECK(s.g_part == zint(4));
  CHECK(s.coprime_part == zint(3));

  auto s2 = part_split(zint(7), zint(2));
  CHECK(s2.g_part == zint(1));
  CHECK(s2.coprime_part == zint(7));

  Ring Q = Ring::poly_rationals();
  auto s3 = part_split(Q.parse("t^3") * Q.parse("t - 1"), Q.parse("t"));
  CHECK(s3.g_part == Q.parse("t^3"));
  CHECK(s3.coprime_part == Q.parse("t - 1"));

  CHECK_THROWS_AS(part_split(zint(0), zint(2)), PreconditionError);
}

TEST_CASE("part_split is multiplicative up to units") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    long d1 = rng.range(1, 150);
    long d2 = rng.range(1, 150);
    long g = rng.range(2, 30);
    auto s1 = part_split(zint(d1), zint(g));
    auto s2 = part_split(zint(d2), zint(g));
    auto s = part_split(zint(d1 * d2), zint(g));
    CHECK(associates(s.g_part, s1.g_part * s2.g_part));
    CHECK(associates(s.coprime_part, s1.coprime_part * s2.coprime_part));
    // Reassembly up to a unit.
    CHECK(associates(s.g_part * s.coprime_part, zint(d1 * d2)));
  }
}

TEST_CASE("part_split over F5[t]") {
  Ring F5 = Ring::poly_mod_prime(5);
  RingElement g = F5.parse("t");
  RingElement d = F5.parse("t^2") * F5.parse("t + 1");
  auto s = part_split(d, g);
  CHECK(s.g_part == F5.parse("t^2"));
  CHECK(s.coprime_part == F5.parse("t + 1"));
}

TEST_CASE("pow and unit handling") {
  CHECK(pow_elem(zint(2), 10) == zint(1024));
  CHECK(pow_elem(zint(5), 0).is_one());
  Ring F5 = Ring::poly_mod_prime(5);
  CHECK(F5.parse("3").is_unit());
  CHECK(unit_inverse(F5.parse("3")) == F5.parse("2"));
  CHECK(unit_inverse(zint(-1)) == zint(-1));
  CHECK_THROWS_AS(unit_inverse(zint(2)), Error);
}
