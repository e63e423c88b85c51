#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "adic/errors.hpp"

namespace adic {

// The supported coefficient rings. All three are Euclidean domains, so gcds,
// Smith normal forms and the whole module calculus built on top of them are
// exact and canonical.
enum class RingKind { Integers, PolyOverPrimeField, PolyOverRationals };

class RingElement;

class Ring {
 public:
  Ring() : kind_(RingKind::Integers), p_(0) {}

  static Ring integers();
  // F_p[t]; throws if p is not a prime below 2^31.
  static Ring poly_mod_prime(long p);
  static Ring poly_rationals();
  // Parses "Z", "Q[t]" or "F<p>[t]".
  static Ring from_name(const std::string& name);

  RingKind kind() const { return kind_; }
  long prime() const { return p_; }
  bool is_poly() const { return kind_ != RingKind::Integers; }
  std::string name() const;

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  RingElement zero() const;
  RingElement one() const;
  // Constant embedding of a small integer.
  RingElement from_int(long v) const;
  // Parses an element literal: optionally signed decimals over Z,
  // "3*t^2 - 1/2*t + 4" style polynomials over the polynomial rings
  // ("/" only inside rational coefficients).
  RingElement parse(const std::string& text) const;

 private:
  RingKind kind_;
  long p_;
};

// An exact ring element: an arbitrary-precision integer over Z, a dense
// coefficient vector (ascending degree, no trailing zeros) over the
// polynomial rings. Coefficients over F_p live in [0, p); rationals are
// stored fully reduced. Immutable in practice: all operations return
// fresh values.
class RingElement {
 public:
  RingElement() : ring_(Ring::integers()) {}

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  // Degree of a polynomial (-1 for zero); ring must be polynomial.
  long degree() const;

  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  std::string to_string() const;

  // Internal payloads; exposed for the arithmetic kernel.
  mpz_class z;                  // Integers
  std::vector<mpz_class> zp;    // PolyOverPrimeField
  std::vector<mpq_class> q;     // PolyOverRationals

  static RingElement make_int(const Ring& r, const mpz_class& v);
  static RingElement make_poly_zp(const Ring& r, std::vector<mpz_class> c);
  static RingElement make_poly_q(const Ring& r, std::vector<mpq_class> c);

 private:
  explicit RingElement(const Ring& r) : ring_(r) {}
  Ring ring_;
  friend class Ring;
};

// ---- arithmetic ----

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator*(const RingElement& a, const RingElement& b);

struct DivModResult {
  RingElement quot;
  RingElement rem;
};

// Euclidean division: a = quot * b + rem with rem = 0 or norm(rem) < norm(b).
DivModResult divmod(const RingElement& a, const RingElement& b);

bool divides(const RingElement& a, const RingElement& b);  // a | b
RingElement exact_div(const RingElement& a, const RingElement& b);
RingElement pow_elem(const RingElement& a, unsigned long e);

// Strict comparison of Euclidean norms (absolute value over Z, degree over
// k[t]); used for pivot selection.
bool norm_less(const RingElement& a, const RingElement& b);

// Canonical associate: positive over Z, monic over k[t]; idempotent.
RingElement canonical(const RingElement& a);
// The unit u with u * a == canonical(a) (u = 1 for a = 0).
RingElement normalizing_unit(const RingElement& a);
// Inverse of a unit.
RingElement unit_inverse(const RingElement& u);
// a and b generate the same ideal (equal up to a unit).
bool associates(const RingElement& a, const RingElement& b);

// ---- gcd layer ----

struct GcdResult {
  RingElement g;  // canonical gcd
  RingElement u;  // Bezout: g == u*a + v*b
  RingElement v;
};

GcdResult euclid_gcd(const RingElement& a, const RingElement& b);
RingElement gcd_of(const RingElement& a, const RingElement& b);
RingElement gcd_fold(const std::vector<RingElement>& elems, const Ring& ring);
RingElement lcm_of(const RingElement& a, const RingElement& b);

enum class RadicalRelation { Equal, SupportOfAInB, SupportOfBInA, Incomparable };

// Classifies prime-support containment of two nonzero elements without
// factoring, by repeatedly dividing each element by its gcd with the other.
RadicalRelation radical_compare(const RingElement& a, const RingElement& b);

// True iff every prime of a divides b (a, b nonzero).
bool support_subset(const RingElement& a, const RingElement& b);

struct PartSplit {
  RingElement g_part;       // every prime divides g
  RingElement coprime_part; // gcd with g is a unit
};

// d = g_part * coprime_part up to a unit; both parts canonical. d, g nonzero.
PartSplit part_split(const RingElement& d, const RingElement& g);

const char* radical_relation_name(RadicalRelation r);

}  // namespace adic
