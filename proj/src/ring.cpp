#include "adic/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adic {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw PreconditionError("ring mismatch: " + a.ring().name() + " vs " +
                            b.ring().name());
}

// Dense polynomial kernels, templated over the coefficient field. Coeff is
// mpz_class (reduced mod p) or mpq_class (canonical).
struct FpField {
  mpz_class p;
  mpz_class reduce(const mpz_class& a) const {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r;
  }
  mpz_class add(const mpz_class& a, const mpz_class& b) const { return reduce(a + b); }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return reduce(a - b); }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return reduce(a * b); }
  mpz_class neg(const mpz_class& a) const { return reduce(-a); }
  mpz_class inv(const mpz_class& a) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("non-invertible coefficient mod p");
    return r;
  }
  bool is_zero(const mpz_class& a) const { return a == 0; }
  mpz_class one() const { return 1; }
};

struct QField {
  mpq_class reduce(const mpq_class& a) const {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce(-a); }
  mpq_class inv(const mpq_class& a) const {
    if (a == 0) throw Error("division by zero coefficient");
    return reduce(1 / a);
  }
  bool is_zero(const mpq_class& a) const { return a == 0; }
  mpq_class one() const { return mpq_class(1); }
};

template <typename F, typename C>
void poly_trim(const F& f, std::vector<C>& c) {
  while (!c.empty() && f.is_zero(c.back())) c.pop_back();
}

template <typename F, typename C>
std::vector<C> poly_add(const F& f, const std::vector<C>& a,
                        const std::vector<C>& b) {
  std::vector<C> r(std::max(a.size(), b.size()), C(0));
  for (size_t i = 0; i < r.size(); ++i) {
    C x = i < a.size() ? a[i] : C(0);
    C y = i < b.size() ? b[i] : C(0);
    r[i] = f.add(x, y);
  }
  poly_trim(f, r);
  return r;
}

template <typename F, typename C>
std::vector<C> poly_sub(const F& f, const std::vector<C>& a,
                        const std::vector<C>& b) {
  std::vector<C> r(std::max(a.size(), b.size()), C(0));
  for (size_t i = 0; i < r.size(); ++i) {
    C x = i < a.size() ? a[i] : C(0);
    C y = i < b.size() ? b[i] : C(0);
    r[i] = f.sub(x, y);
  }
  poly_trim(f, r);
  return r;
}

template <typename F, typename C>
std::vector<C> poly_neg(const F& f, const std::vector<C>& a) {
  std::vector<C> r(a.size(), C(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.neg(a[i]);
  return r;
}

template <typename F, typename C>
std::vector<C> poly_mul(const F& f, const std::vector<C>& a,
                        const std::vector<C>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> r(a.size() + b.size() - 1, C(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  poly_trim(f, r);
  return r;
}

// Long division; coefficients live in a field so this is the full Euclidean
// division with deg(rem) < deg(b).
template <typename F, typename C>
std::pair<std::vector<C>, std::vector<C>> poly_divmod(const F& f,
                                                      std::vector<C> a,
                                                      const std::vector<C>& b) {
  if (b.empty()) throw Error("division by zero");
  std::vector<C> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, C(0));
  C lead_inv = f.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    C c = f.mul(a.back(), lead_inv);
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    poly_trim(f, a);
  }
  typename std::vector<C> q2 = quot;
  poly_trim(f, q2);
  return {q2, a};
}

}  // namespace

// ---- Ring ----

Ring Ring::integers() {
  Ring r;
  r.kind_ = RingKind::Integers;
  r.p_ = 0;
  return r;
}

Ring Ring::poly_mod_prime(long p) {
  if (p < 2 || p >= (1L << 31) || !is_prime_long(p))
    throw PreconditionError("F_p[t] requires a prime p below 2^31, got " +
                            std::to_string(p));
  Ring r;
  r.kind_ = RingKind::PolyOverPrimeField;
  r.p_ = p;
  return r;
}

Ring Ring::poly_rationals() {
  Ring r;
  r.kind_ = RingKind::PolyOverRationals;
  r.p_ = 0;
  return r;
}

Ring Ring::from_name(const std::string& name) {
  if (name == "Z") return integers();
  if (name == "Q[t]") return poly_rationals();
  if (name.size() > 4 && name[0] == 'F' &&
      name.substr(name.size() - 3) == "[t]") {
    std::string digits = name.substr(1, name.size() - 4);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      long p = 0;
      try {
        p = std::stol(digits);
      } catch (...) {
        throw PreconditionError("bad ring name: " + name);
      }
      return poly_mod_prime(p);
    }
  }
  throw PreconditionError("unknown ring kind: " + name +
                          " (expected Z, Q[t] or F<p>[t])");
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::PolyOverPrimeField:
      return "F" + std::to_string(p_) + "[t]";
    case RingKind::PolyOverRationals:
      return "Q[t]";
  }
  return "?";
}

RingElement Ring::zero() const {
  RingElement e(*this);
  return e;
}

RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(long v) const {
  RingElement e(*this);
  switch (kind_) {
    case RingKind::Integers:
      e.z = v;
      break;
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(p_)};
      mpz_class c = f.reduce(mpz_class(v));
      if (c != 0) e.zp = {c};
      break;
    }
    case RingKind::PolyOverRationals:
      if (v != 0) e.q = {mpq_class(v)};
      break;
  }
  return e;
}

// ---- RingElement basics ----

RingElement RingElement::make_int(const Ring& r, const mpz_class& v) {
  if (r.kind() != RingKind::Integers) throw Error("make_int on non-Z ring");
  RingElement e(r);
  e.z = v;
  return e;
}

RingElement RingElement::make_poly_zp(const Ring& r, std::vector<mpz_class> c) {
  if (r.kind() != RingKind::PolyOverPrimeField)
    throw Error("make_poly_zp on wrong ring");
  FpField f{mpz_class(r.prime())};
  for (auto& x : c) x = f.reduce(x);
  poly_trim(f, c);
  RingElement e(r);
  e.zp = std::move(c);
  return e;
}

RingElement RingElement::make_poly_q(const Ring& r, std::vector<mpq_class> c) {
  if (r.kind() != RingKind::PolyOverRationals)
    throw Error("make_poly_q on wrong ring");
  QField f;
  for (auto& x : c) x = f.reduce(x);
  poly_trim(f, c);
  RingElement e(r);
  e.q = std::move(c);
  return e;
}

bool RingElement::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      return z == 0;
    case RingKind::PolyOverPrimeField:
      return zp.empty();
    case RingKind::PolyOverRationals:
      return q.empty();
  }
  return true;
}

bool RingElement::is_one() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      return z == 1;
    case RingKind::PolyOverPrimeField:
      return zp.size() == 1 && zp[0] == 1;
    case RingKind::PolyOverRationals:
      return q.size() == 1 && q[0] == 1;
  }
  return false;
}

bool RingElement::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      return z == 1 || z == -1;
    case RingKind::PolyOverPrimeField:
      return zp.size() == 1;
    case RingKind::PolyOverRationals:
      return q.size() == 1;
  }
  return false;
}

long RingElement::degree() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      throw Error("degree of an integer");
    case RingKind::PolyOverPrimeField:
      return static_cast<long>(zp.size()) - 1;
    case RingKind::PolyOverRationals:
      return static_cast<long>(q.size()) - 1;
  }
  return -1;
}

bool RingElement::operator==(const RingElement& o) const {
  if (ring_ != o.ring_) return false;
  switch (ring_.kind()) {
    case RingKind::Integers:
      return z == o.z;
    case RingKind::PolyOverPrimeField:
      return zp == o.zp;
    case RingKind::PolyOverRationals:
      return q == o.q;
  }
  return false;
}

// ---- arithmetic dispatch ----

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return RingElement::make_int(a.ring(), a.z + b.z);
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(a.ring().prime())};
      return RingElement::make_poly_zp(a.ring(), poly_add(f, a.zp, b.zp));
    }
    case RingKind::PolyOverRationals: {
      QField f;
      return RingElement::make_poly_q(a.ring(), poly_add(f, a.q, b.q));
    }
  }
  throw Error("unreachable");
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return RingElement::make_int(a.ring(), a.z - b.z);
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(a.ring().prime())};
      return RingElement::make_poly_zp(a.ring(), poly_sub(f, a.zp, b.zp));
    }
    case RingKind::PolyOverRationals: {
      QField f;
      return RingElement::make_poly_q(a.ring(), poly_sub(f, a.q, b.q));
    }
  }
  throw Error("unreachable");
}

RingElement operator-(const RingElement& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return RingElement::make_int(a.ring(), -a.z);
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(a.ring().prime())};
      return RingElement::make_poly_zp(a.ring(), poly_neg(f, a.zp));
    }
    case RingKind::PolyOverRationals: {
      QField f;
      return RingElement::make_poly_q(a.ring(), poly_neg(f, a.q));
    }
  }
  throw Error("unreachable");
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return RingElement::make_int(a.ring(), a.z * b.z);
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(a.ring().prime())};
      return RingElement::make_poly_zp(a.ring(), poly_mul(f, a.zp, b.zp));
    }
    case RingKind::PolyOverRationals: {
      QField f;
      return RingElement::make_poly_q(a.ring(), poly_mul(f, a.q, b.q));
    }
  }
  throw Error("unreachable");
}

DivModResult divmod(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw Error("division by zero");
  switch (a.ring().kind()) {
    case RingKind::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.z.get_mpz_t(),
                  b.z.get_mpz_t());
      return {RingElement::make_int(a.ring(), q),
              RingElement::make_int(a.ring(), r)};
    }
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(a.ring().prime())};
      auto [q, r] = poly_divmod(f, a.zp, b.zp);
      return {RingElement::make_poly_zp(a.ring(), q),
              RingElement::make_poly_zp(a.ring(), r)};
    }
    case RingKind::PolyOverRationals: {
      QField f;
      auto [q, r] = poly_divmod(f, a.q, b.q);
      return {RingElement::make_poly_q(a.ring(), q),
              RingElement::make_poly_q(a.ring(), r)};
    }
  }
  throw Error("unreachable");
}

bool divides(const RingElement& a, const RingElement& b) {
  if (a.is_zero()) return b.is_zero();
  return divmod(b, a).rem.is_zero();
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact_div: not divisible");
  return q;
}

RingElement pow_elem(const RingElement& a, unsigned long e) {
  RingElement r = a.ring().one();
  RingElement base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool norm_less(const RingElement& a, const RingElement& b) {
  // Zero is treated as infinitely large so it never wins a pivot search.
  if (a.is_zero()) return false;
  if (b.is_zero()) return true;
  switch (a.ring().kind()) {
    case RingKind::Integers: {
      mpz_class x = abs(a.z), y = abs(b.z);
      return x < y;
    }
    default:
      return a.degree() < b.degree();
  }
}

RingElement normalizing_unit(const RingElement& a) {
  if (a.is_zero()) return a.ring().one();
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return a.ring().from_int(a.z < 0 ? -1 : 1);
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(a.ring().prime())};
      return RingElement::make_poly_zp(a.ring(), {f.inv(a.zp.back())});
    }
    case RingKind::PolyOverRationals: {
      QField f;
      return RingElement::make_poly_q(a.ring(), {f.inv(a.q.back())});
    }
  }
  throw Error("unreachable");
}

RingElement canonical(const RingElement& a) {
  return normalizing_unit(a) * a;
}

RingElement unit_inverse(const RingElement& u) {
  if (!u.is_unit()) throw Error("unit_inverse of a non-unit");
  switch (u.ring().kind()) {
    case RingKind::Integers:
      return u;  // +-1 are their own inverses
    case RingKind::PolyOverPrimeField: {
      FpField f{mpz_class(u.ring().prime())};
      return RingElement::make_poly_zp(u.ring(), {f.inv(u.zp[0])});
    }
    case RingKind::PolyOverRationals: {
      QField f;
      return RingElement::make_poly_q(u.ring(), {f.inv(u.q[0])});
    }
  }
  throw Error("unreachable");
}

bool associates(const RingElement& a, const RingElement& b) {
  return canonical(a) == canonical(b);
}

// ---- gcd layer ----

GcdResult euclid_gcd(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const Ring& R = a.ring();
  // Invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  RingElement r0 = a, r1 = b;
  RingElement u0 = R.one(), v0 = R.zero();
  RingElement u1 = R.zero(), v1 = R.one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RingElement u2 = u0 - q * u1;
    RingElement v2 = v0 - q * v1;
    r0 = r1;
    u0 = u1;
    v0 = v1;
    r1 = r;
    u1 = u2;
    v1 = v2;
  }
  RingElement n = normalizing_unit(r0);
  return {n * r0, n * u0, n * v0};
}

RingElement gcd_of(const RingElement& a, const RingElement& b) {
  return euclid_gcd(a, b).g;
}

RingElement gcd_fold(const std::vector<RingElement>& elems, const Ring& ring) {
  RingElement g = ring.zero();
  for (const auto& e : elems) g = gcd_of(g, e);
  return g;
}

RingElement lcm_of(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero()) return a.ring().zero();
  return canonical(exact_div(a * b, gcd_of(a, b)));
}

bool support_subset(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero())
    throw PreconditionError("support comparison on zero input");
  // Strip from a every factor shared with b; a unit remains iff every prime
  // of a divides b.
  RingElement r = canonical(a);
  while (true) {
    RingElement g = gcd_of(r, b);
    if (g.is_unit()) break;
    r = canonical(exact_div(r, g));
  }
  return r.is_unit();
}

RadicalRelation radical_compare(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero())
    throw PreconditionError("radical_compare: zero input");
  bool ab = support_subset(a, b);
  bool ba = support_subset(b, a);
  if (ab && ba) return RadicalRelation::Equal;
  if (ab) return RadicalRelation::SupportOfAInB;
  if (ba) return RadicalRelation::SupportOfBInA;
  return RadicalRelation::Incomparable;
}

PartSplit part_split(const RingElement& d, const RingElement& g) {
  if (d.is_zero() || g.is_zero())
    throw PreconditionError("part_split: zero input");
  RingElement a = d.ring().one();
  RingElement b = canonical(d);
  while (true) {
    RingElement h = gcd_of(b, g);
    if (h.is_unit()) break;
    a = a * h;
    b = canonical(exact_div(b, h));
  }
  return {canonical(a), b};
}

const char* radical_relation_name(RadicalRelation r) {
  switch (r) {
    case RadicalRelation::Equal:
      return "Equal";
    case RadicalRelation::SupportOfAInB:
      return "SupportOfAInB";
    case RadicalRelation::SupportOfBInA:
      return "SupportOfBInA";
    case RadicalRelation::Incomparable:
      return "Incomparable";
  }
  return "?";
}

// ---- printing ----

namespace {

std::string coeff_str(const mpz_class& c) { return c.get_str(); }
std::string coeff_str(const mpq_class& c) { return c.get_str(); }

// Renders a dense coefficient vector as "3*t^2 - 1/2*t + 4". Over F_p all
// coefficients are already in [0, p) so only "+" appears.
template <typename C>
std::string poly_to_string(const std::vector<C>& cs) {
  if (cs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = cs.size(); k-- > 0;) {
    const C& c = cs[k];
    if (c == 0) continue;
    bool negative = c < 0;
    C mag = negative ? C(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string ms = coeff_str(mag);
    if (k == 0) {
      out << ms;
    } else {
      if (ms != "1") out << ms << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

std::string RingElement::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      return z.get_str();
    case RingKind::PolyOverPrimeField:
      return poly_to_string(zp);
    case RingKind::PolyOverRationals:
      return poly_to_string(q);
  }
  return "?";
}

// ---- parsing ----

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(i) + 1);
  }
  mpz_class read_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    return mpz_class(s.substr(start, i - start), 10);
  }
};

}  // namespace

RingElement Ring::parse(const std::string& text) const {
  Cursor c{text};
  if (kind_ == RingKind::Integers) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
      neg = c.peek() == '-';
      ++c.i;
    }
    mpz_class v = c.read_uint();
    if (!c.done()) c.fail("trailing characters after integer");
    return RingElement::make_int(*this, neg ? mpz_class(-v) : v);
  }

  // Polynomial: signed sum of terms "coef", "coef*t^k", "t^k", "t".
  std::vector<mpq_class> acc;  // build over Q, convert at the end
  auto add_term = [&](const mpq_class& coef, unsigned long deg) {
    if (acc.size() <= deg) acc.resize(deg + 1, mpq_class(0));
    acc[deg] += coef;
    acc[deg].canonicalize();
  };

  bool expect_term = true;
  int sign = 1;
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    sign = c.peek() == '-' ? -1 : 1;
    ++c.i;
  }
  while (expect_term) {
    c.skip_ws();
    mpq_class coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      mpz_class num = c.read_uint();
      coef = num;
      have_coef = true;
      if (c.peek() == '/') {
        if (kind_ != RingKind::PolyOverRationals)
          c.fail("'/' is only allowed in rational coefficients");
        ++c.i;
        mpz_class den = c.read_uint();
        if (den == 0) c.fail("zero denominator");
        coef = mpq_class(num, den);
        coef.canonicalize();
      }
    }
    unsigned long deg = 0;
    bool saw_star = false;
    if (c.peek() == '*') {
      if (!have_coef) c.fail("'*' without a coefficient");
      ++c.i;
      saw_star = true;
    }
    if (c.peek() == 't') {
      ++c.i;
      deg = 1;
      if (c.peek() == '^') {
        ++c.i;
        mpz_class e = c.read_uint();
        if (e > 1000000) c.fail("exponent too large");
        deg = e.get_ui();
      }
    } else {
      if (saw_star) c.fail("expected 't' after '*'");
      if (!have_coef) c.fail("expected a term");
    }
    add_term(sign * coef, deg);

    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
      expect_term = true;
    } else if (c.done()) {
      expect_term = false;
    } else {
      c.fail("unexpected character");
    }
  }

  if (kind_ == RingKind::PolyOverRationals)
    return RingElement::make_poly_q(*this, acc);

  // F_p[t]: coefficients must be integral.
  std::vector<mpz_class> zc(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    if (acc[i].get_den() != 1)
      throw ParseError("rational coefficient in " + name(), 1, 1);
    zc[i] = acc[i].get_num();
  }
  return RingElement::make_poly_zp(*this, zc);
}

}  // namespace adic
