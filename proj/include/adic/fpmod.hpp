#pragma once

#include <string>
#include <vector>

#include "adic/matrix.hpp"

namespace adic {

// A finitely presented module, stored as the cokernel of its presentation
// matrix. Convention, fixed globally: columns are relations, so the module
// is R^rows / (column span). The canonical decomposition
// M = R^free_rank (+) R/(d_1) (+) ... (+) R/(d_k) with d_1 | d_2 | ... is
// computed once from the Smith normal form and cached; two modules are
// isomorphic iff those invariants coincide.
class FPModule {
 public:
  FPModule() : ring_(Ring::integers()), presentation_(), free_rank_(0) {}

  static FPModule from_presentation(const ExactMatrix& presentation);
  // Any list of cyclic factors plus a free rank; canonicalized via SNF
  // (units are dropped, zero factors become free rank).
  static FPModule from_invariants(const Ring& ring, int free_rank,
                                  const std::vector<RingElement>& factors);
  static FPModule zero(const Ring& ring);
  static FPModule free_module(const Ring& ring, int rank);
  static FPModule cyclic(const RingElement& d);  // R/(d)

  const Ring& ring() const { return ring_; }
  const ExactMatrix& presentation() const { return presentation_; }
  int ambient_rank() const { return presentation_.rows(); }
  int free_rank() const { return free_rank_; }
  const std::vector<RingElement>& invariant_factors() const {
    return factors_;
  }
  int torsion_count() const { return static_cast<int>(factors_.size()); }

  bool is_zero() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_torsion() const { return free_rank_ == 0; }
  bool isomorphic(const FPModule& o) const;

  // "R^2 + R/(2) + R/(12)", "0" for the zero module.
  std::string describe() const;

 private:
  Ring ring_;
  ExactMatrix presentation_;
  int free_rank_;
  std::vector<RingElement> factors_;
};

FPModule direct_sum(const FPModule& a, const FPModule& b);
FPModule direct_power(const FPModule& m, int k);

// An ideal given by generators; over the supported Euclidean domains it is
// principal, and the reduced generator (the gcd) drives all computations.
// The original generator list is retained for the element-system
// constructions that care about the system, not just the ideal.
class Ideal {
 public:
  Ideal(const Ring& ring, std::vector<RingElement> generators);
  static Ideal principal(const RingElement& g);

  const Ring& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return generators_; }
  const RingElement& reduced() const { return reduced_; }
  bool is_zero() const { return reduced_.is_zero(); }
  bool is_unit_ideal() const { return reduced_.is_unit(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit_ideal(); }

 private:
  Ring ring_;
  std::vector<RingElement> generators_;
  RingElement reduced_;
};

// A map of finitely presented modules, given on the ambient free covers.
// Construction certifies well-definedness: every relation of the source
// must land in the relation submodule of the target.
class ModuleMap {
 public:
  ModuleMap(FPModule source, FPModule target, ExactMatrix matrix);

  static ModuleMap multiplication(const FPModule& m, const RingElement& x);
  static ModuleMap zero_map(const FPModule& source, const FPModule& target);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const ExactMatrix& matrix() const { return matrix_; }

  // Generators (in the source ambient) of {v : f(v) = 0 in target}.
  ExactMatrix kernel_generators() const;
  FPModule kernel() const;
  FPModule image() const;
  FPModule cokernel() const;

 private:
  FPModule source_, target_;
  ExactMatrix matrix_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// ---- submodule machinery ----
// A submodule of M is carried as a matrix of ambient-coordinate generators.

// Columns c with G c inside the column span of A (the syzygies of G modulo
// span A); the workhorse behind kernels, relations and membership.
ExactMatrix syzygies(const ExactMatrix& G, const ExactMatrix& A);

// The module (span G + relations)/(relations) presented on its generators.
FPModule submodule_from_generators(const FPModule& M, const ExactMatrix& gens);
bool submodule_contained(const FPModule& M, const ExactMatrix& g1,
                         const ExactMatrix& g2);
bool submodule_equal(const FPModule& M, const ExactMatrix& g1,
                     const ExactMatrix& g2);
// M / (span gens).
FPModule quotient_by_submodule(const FPModule& M, const ExactMatrix& gens);

// ker(g) / im(f) for a two-step complex with g(f(x)) = 0.
FPModule homology_at(const ModuleMap& f, const ModuleMap& g);

// ---- the functor calculus ----

FPModule hom(const FPModule& M, const FPModule& N);
FPModule ext1(const FPModule& M, const FPModule& N);
// Independent route for Ext^1: dualize the SNF-diagonalized free resolution
// of M and compute each cokernel from an augmented presentation.
FPModule ext1_from_presentation(const FPModule& M, const FPModule& N);
FPModule tensor(const FPModule& M, const FPModule& N);
FPModule tor1(const FPModule& M, const FPModule& N);

// 0 :_M x as a module (free part contributes only when x = 0).
FPModule annihilator_kernel(const FPModule& M, const RingElement& x);

// True iff X is killed by a power of the reduced generator of I. V(0) is
// the whole spectrum, so g = 0 accepts everything; a unit ideal accepts
// only the zero module.
bool support_in_V(const FPModule& X, const Ideal& I);

// M / g^alpha M where g is the reduced generator of I.
FPModule quotient_by_power(const FPModule& M, const Ideal& I, int alpha);
FPModule quotient_by_element(const FPModule& M, const RingElement& x);

}  // namespace adic
