#pragma once

#include "adic/fpmod.hpp"

namespace adic {

// The g-adic completion of a finitely presented module, stored at the
// invariant level: Rhat^s (+) R/(c_1) (+) ... with every c_j g-primary.
// Completions with positive completed free rank are never materialized as
// element sets; Rhat is not finitely generated over R, so the class only
// supports the operations the verifiers need (quotients by powers of g,
// isomorphism of descriptions).
class CompletedModule {
 public:
  CompletedModule(Ideal ideal, int completed_free_rank,
                  std::vector<RingElement> torsion_factors);
  static CompletedModule zero(const Ideal& ideal);

  const Ideal& ideal() const { return ideal_; }
  const Ring& ring() const { return ideal_.ring(); }
  int completed_free_rank() const { return completed_free_rank_; }
  const std::vector<RingElement>& torsion_factors() const {
    return torsion_factors_;
  }
  bool is_zero() const {
    return completed_free_rank_ == 0 && torsion_factors_.empty();
  }
  // The torsion part as an honest finitely presented module.
  FPModule torsion_part() const;
  // When the completed free rank is zero the whole completion is finitely
  // presented; callers must check before converting.
  bool is_finitely_presented() const { return completed_free_rank_ == 0; }
  FPModule as_fp_module() const;

  // (M-hat) / g^alpha (M-hat) is always finitely presented.
  FPModule quotient_by_power(int alpha) const;

  bool isomorphic(const CompletedModule& o) const;
  std::string describe() const;  // "Rhat^2 + R/(4)"

 private:
  Ideal ideal_;
  int completed_free_rank_;
  std::vector<RingElement> torsion_factors_;
};

// Verdict on the natural map tau: M -> M-hat. The cokernel is reported as
// a rank only: it is (Rhat/R)^rank, which is not finitely generated.
struct TauVerdict {
  FPModule kernel;  // the intersection of the g^alpha M
  int cokernel_rank;
  bool is_iso;
};

struct SeparatedResult {
  bool separated;
  FPModule kernel;
};

// kernel = the g-coprime torsion of M; separated iff it vanishes.
// Degenerate ideals: g = 0 separates everything, a unit ideal has kernel M.
SeparatedResult is_separated(const FPModule& M, const Ideal& I);

struct CompletionResult {
  CompletedModule completion;
  TauVerdict tau;
};

CompletionResult complete(const FPModule& M, const Ideal& I);
bool is_complete(const FPModule& M, const Ideal& I);

// Left derived completion functors from the length-1 free resolution:
// Lambda_0 agrees with the completion on finitely presented modules and
// Lambda_1 vanishes (each diagonal entry acts injectively on Rhat).
struct DerivedCompletion {
  CompletedModule lambda0;
  FPModule lambda1;
};

DerivedCompletion derived_completion(const FPModule& M, const Ideal& I);

struct ExtPair {
  FPModule hom;
  FPModule ext1;
};

// Hom and Ext^1 of a torsion module X with completed coefficients, from
// the SNF-diagonalized resolution of X: a diagonal entry d acts on an Rhat
// coordinate injectively with cokernel R/(g-part of d), and on a torsion
// factor R/(c) with kernel and cokernel R/(gcd(d, c)).
// Precondition: support of X inside V(I) (throws otherwise).
ExtPair ext_into_completed(const FPModule& X, const CompletedModule& N);

// M/g^alpha M and (M-hat)/g^alpha (M-hat) agree; returns the comparison.
bool verify_quotient_identity(const FPModule& M, const Ideal& I, int alpha);

}  // namespace adic
