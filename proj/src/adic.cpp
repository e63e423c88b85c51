#include "adic/adic.hpp"

#include <sstream>

namespace adic {

namespace {

// g-part of d for the reduced generator g; handles the degenerate ideals:
// g = 0 keeps all of d (everything is supported on V(0)), a unit g keeps
// nothing.
RingElement g_part(const RingElement& d, const RingElement& g) {
  if (g.is_zero()) return canonical(d);
  if (g.is_unit()) return d.ring().one();
  if (d.is_zero()) return d;
  return part_split(d, g).g_part;
}

RingElement coprime_part(const RingElement& d, const RingElement& g) {
  if (g.is_zero()) return d.ring().one();
  if (g.is_unit()) return canonical(d);
  if (d.is_zero()) return d.ring().zero();
  return part_split(d, g).coprime_part;
}

}  // namespace

CompletedModule::CompletedModule(Ideal ideal, int completed_free_rank,
                                 std::vector<RingElement> torsion_factors)
    : ideal_(std::move(ideal)),
      completed_free_rank_(completed_free_rank),
      torsion_factors_(std::move(torsion_factors)) {
  if (completed_free_rank_ < 0)
    throw PreconditionError("negative completed free rank");
  const RingElement& g = ideal_.reduced();
  for (size_t i = 0; i < torsion_factors_.size(); ++i) {
    const RingElement& c = torsion_factors_[i];
    if (c.is_zero() || c.is_unit())
      throw PreconditionError(
          "completed torsion factor must be a proper nonzero element");
    if (canonical(c) != c)
      throw PreconditionError("completed torsion factor not canonical");
    if (!g.is_zero() && !g.is_unit() &&
        !part_split(c, g).coprime_part.is_unit())
      throw PreconditionError("completed torsion factor is not g-primary");
    if (i + 1 < torsion_factors_.size() &&
        !divides(c, torsion_factors_[i + 1]))
      throw PreconditionError(
          "completed torsion factors violate the divisibility chain");
  }
}

CompletedModule CompletedModule::zero(const Ideal& ideal) {
  return CompletedModule(ideal, 0, {});
}

FPModule CompletedModule::torsion_part() const {
  return FPModule::from_invariants(ring(), 0, torsion_factors_);
}

FPModule CompletedModule::as_fp_module() const {
  if (!is_finitely_presented())
    throw PreconditionError(
        "completion with positive completed free rank is not finitely "
        "presented");
  return torsion_part();
}

FPModule CompletedModule::quotient_by_power(int alpha) const {
  if (alpha < 1) throw PreconditionError("alpha >= 1 required");
  const RingElement& g = ideal_.reduced();
  RingElement ga = pow_elem(g, static_cast<unsigned long>(alpha));
  // Rhat/(g^alpha) = R/(g^alpha); R/(c) goes to R/gcd(c, g^alpha).
  std::vector<RingElement> factors;
  for (int i = 0; i < completed_free_rank_; ++i) factors.push_back(ga);
  for (const auto& c : torsion_factors_) factors.push_back(gcd_of(c, ga));
  return FPModule::from_invariants(ring(), 0, factors);
}

bool CompletedModule::isomorphic(const CompletedModule& o) const {
  return ring() == o.ring() &&
         completed_free_rank_ == o.completed_free_rank_ &&
         torsion_factors_ == o.torsion_factors_;
}

std::string CompletedModule::describe() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (completed_free_rank_ > 0) {
    out << "Rhat";
    if (completed_free_rank_ > 1) out << "^" << completed_free_rank_;
    first = false;
  }
  for (const auto& c : torsion_factors_) {
    if (!first) out << " + ";
    out << "R/(" << c.to_string() << ")";
    first = false;
  }
  return out.str();
}

SeparatedResult is_separated(const FPModule& M, const Ideal& I) {
  if (M.ring() != I.ring()) throw PreconditionError("ring mismatch");
  const RingElement& g = I.reduced();
  if (g.is_zero())
    return {true, FPModule::zero(M.ring())};  // I^alpha M = 0 for alpha >= 1
  if (g.is_unit()) return {M.is_zero(), M};   // I^alpha M = M
  std::vector<RingElement> kernel_factors;
  for (const auto& d : M.invariant_factors()) {
    RingElement b = coprime_part(d, g);
    if (!b.is_unit()) kernel_factors.push_back(b);
  }
  FPModule kernel = FPModule::from_invariants(M.ring(), 0, kernel_factors);
  return {kernel.is_zero(), kernel};
}

CompletionResult complete(const FPModule& M, const Ideal& I) {
  if (M.ring() != I.ring()) throw PreconditionError("ring mismatch");
  const RingElement& g = I.reduced();
  SeparatedResult sep = is_separated(M, I);

  if (g.is_unit()) {
    // M/I^alpha M = 0 at every level, so the completion is zero and tau
    // kills everything.
    CompletedModule c = CompletedModule::zero(I);
    return {c, {M, 0, M.is_zero()}};
  }
  if (g.is_zero()) {
    // I^alpha = 0 for alpha >= 1: every quotient is M and tau is the
    // identity; Rhat = R in the description.
    CompletedModule c(I, M.free_rank(), M.invariant_factors());
    return {c, {FPModule::zero(M.ring()), 0, true}};
  }

  std::vector<RingElement> torsion;
  for (const auto& d : M.invariant_factors()) {
    RingElement a = g_part(d, g);
    if (!a.is_unit()) torsion.push_back(a);
  }
  CompletedModule c(I, M.free_rank(), torsion);
  bool iso = sep.separated && M.free_rank() == 0;
  return {c, {sep.kernel, M.free_rank(), iso}};
}

bool is_complete(const FPModule& M, const Ideal& I) {
  return complete(M, I).tau.is_iso;
}

DerivedCompletion derived_completion(const FPModule& M, const Ideal& I) {
  if (M.ring() != I.ring()) throw PreconditionError("ring mismatch");
  const RingElement& g = I.reduced();
  // Length-1 free resolution 0 -> R^k -> R^n -> M -> 0 read off the SNF
  // (zero diagonal entries are dropped: those columns generate nothing).
  SNFResult snf = smith_normal_form(M.presentation());
  std::vector<RingElement> diag;
  for (const auto& s : snf.diagonal())
    if (!s.is_zero()) diag.push_back(s);
  int n = M.presentation().rows();
  int k = static_cast<int>(diag.size());

  if (g.is_unit()) {
    return {CompletedModule::zero(I), FPModule::zero(M.ring())};
  }

  // Completing both free terms leaves diag acting on Rhat coordinates:
  // each nonzero s is injective on Rhat with cokernel R/(g-part of s), so
  // Lambda_1 = 0 and Lambda_0 = Rhat^{n-k} (+) the g-primary cokernels.
  std::vector<RingElement> torsion;
  for (const auto& s : diag) {
    RingElement a = g_part(s, g);
    if (!a.is_unit()) torsion.push_back(a);
  }
  // Routed through from_invariants to keep the divisibility chain canonical.
  FPModule shape = FPModule::from_invariants(M.ring(), 0, torsion);
  CompletedModule lambda0(I, n - k, shape.invariant_factors());
  return {lambda0, FPModule::zero(M.ring())};
}

ExtPair ext_into_completed(const FPModule& X, const CompletedModule& N) {
  if (X.ring() != N.ring()) throw PreconditionError("ring mismatch");
  if (!support_in_V(X, N.ideal()))
    throw PreconditionError("ext_into_completed: support of X escapes V(I)");
  const RingElement& g = N.ideal().reduced();

  if (g.is_zero()) {
    // Rhat = R: plain module calculus.
    FPModule n = FPModule::from_invariants(X.ring(), N.completed_free_rank(),
                                           N.torsion_factors());
    return {hom(X, n), ext1(X, n)};
  }

  // X is torsion here (support in V(g) with g nonzero forces free rank 0).
  SNFResult snf = smith_normal_form(X.presentation());
  std::vector<RingElement> hom_factors, ext_factors;
  for (const auto& d : snf.diagonal()) {
    if (d.is_zero())
      throw PreconditionError("ext_into_completed: X must be torsion");
    if (d.is_unit()) continue;
    // d on Rhat^s: injective, cokernel R/(g-part of d) per coordinate.
    RingElement a = g_part(d, g);
    for (int i = 0; i < N.completed_free_rank(); ++i)
      if (!a.is_unit()) ext_factors.push_back(a);
    // d on R/(c): kernel and cokernel R/gcd(d, c).
    for (const auto& c : N.torsion_factors()) {
      RingElement h = gcd_of(d, c);
      hom_factors.push_back(h);
      ext_factors.push_back(h);
    }
  }
  return {FPModule::from_invariants(X.ring(), 0, hom_factors),
          FPModule::from_invariants(X.ring(), 0, ext_factors)};
}

bool verify_quotient_identity(const FPModule& M, const Ideal& I, int alpha) {
  if (alpha < 1) throw PreconditionError("alpha >= 1 required");
  if (I.is_unit_ideal()) {
    // Both sides are the zero module.
    return quotient_by_power(M, I, alpha).is_zero();
  }
  FPModule lhs = quotient_by_power(M, I, alpha);
  FPModule rhs = complete(M, I).completion.quotient_by_power(alpha);
  return lhs.isomorphic(rhs);
}

}  // namespace adic
