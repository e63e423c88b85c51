#include "adic/fpmod.hpp"

#include <sstream>

namespace adic {

// ---- FPModule ----

FPModule FPModule::from_presentation(const ExactMatrix& presentation) {
  FPModule m;
  m.ring_ = presentation.ring();
  m.presentation_ = presentation;
  SNFResult snf = smith_normal_form(presentation);
  int nonzero = 0;
  for (const RingElement& d : snf.diagonal()) {
    if (d.is_zero()) continue;
    ++nonzero;
    if (!d.is_unit()) m.factors_.push_back(d);
  }
  m.free_rank_ = presentation.rows() - nonzero;
  return m;
}

FPModule FPModule::from_invariants(const Ring& ring, int free_rank,
                                   const std::vector<RingElement>& factors) {
  if (free_rank < 0) throw PreconditionError("negative free rank");
  std::vector<RingElement> torsion;
  int extra_free = 0;
  for (const auto& d : factors) {
    if (d.ring() != ring) throw PreconditionError("factor ring mismatch");
    if (d.is_zero())
      ++extra_free;
    else if (!d.is_unit())
      torsion.push_back(canonical(d));
  }
  int rows = free_rank + extra_free + static_cast<int>(torsion.size());
  ExactMatrix pres(ring, rows, static_cast<int>(torsion.size()));
  for (size_t i = 0; i < torsion.size(); ++i)
    pres.set(static_cast<int>(i), static_cast<int>(i), torsion[i]);
  return from_presentation(pres);
}

FPModule FPModule::zero(const Ring& ring) {
  return from_presentation(ExactMatrix(ring, 0, 0));
}

FPModule FPModule::free_module(const Ring& ring, int rank) {
  return from_presentation(ExactMatrix(ring, rank, 0));
}

FPModule FPModule::cyclic(const RingElement& d) {
  return from_invariants(d.ring(), 0, {d});
}

bool FPModule::isomorphic(const FPModule& o) const {
  return ring_ == o.ring_ && free_rank_ == o.free_rank_ &&
         factors_ == o.factors_;
}

std::string FPModule::describe() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "R";
    if (free_rank_ > 1) out << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) out << " + ";
    out << "R/(" << d.to_string() << ")";
    first = false;
  }
  return out.str();
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  if (a.ring() != b.ring()) throw PreconditionError("direct_sum ring mismatch");
  std::vector<RingElement> factors = a.invariant_factors();
  factors.insert(factors.end(), b.invariant_factors().begin(),
                 b.invariant_factors().end());
  return FPModule::from_invariants(a.ring(), a.free_rank() + b.free_rank(),
                                   factors);
}

FPModule direct_power(const FPModule& m, int k) {
  if (k < 0) throw PreconditionError("negative power");
  std::vector<RingElement> factors;
  for (int i = 0; i < k; ++i)
    factors.insert(factors.end(), m.invariant_factors().begin(),
                   m.invariant_factors().end());
  return FPModule::from_invariants(m.ring(), m.free_rank() * k, factors);
}

// ---- Ideal ----

Ideal::Ideal(const Ring& ring, std::vector<RingElement> generators)
    : ring_(ring), generators_(std::move(generators)), reduced_(ring.zero()) {
  for (const auto& g : generators_)
    if (g.ring() != ring_) throw PreconditionError("ideal generator ring mismatch");
  reduced_ = gcd_fold(generators_, ring_);
}

Ideal Ideal::principal(const RingElement& g) {
  return Ideal(g.ring(), {g});
}

// ---- ModuleMap ----

ModuleMap::ModuleMap(FPModule source, FPModule target, ExactMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (source_.ring() != target_.ring() || matrix_.ring() != source_.ring())
    throw PreconditionError("module map ring mismatch");
  if (matrix_.rows() != target_.ambient_rank() ||
      matrix_.cols() != source_.ambient_rank())
    throw PreconditionError("module map shape mismatch");
  // Well-definedness: image of every source relation lies in the target
  // relation submodule.
  const ExactMatrix& rel = source_.presentation();
  if (rel.cols() > 0) {
    ExactMatrix mapped = matrix_ * rel;
    LinearSolver solver(target_.presentation());
    for (int j = 0; j < mapped.cols(); ++j)
      if (!solver.solvable(mapped.column(j)))
        throw PreconditionError(
            "module map is not well defined: relation escapes the target");
  }
}

ModuleMap ModuleMap::multiplication(const FPModule& m, const RingElement& x) {
  ExactMatrix mat = ExactMatrix::identity(m.ring(), m.ambient_rank()).scaled(x);
  return ModuleMap(m, m, mat);
}

ModuleMap ModuleMap::zero_map(const FPModule& source, const FPModule& target) {
  return ModuleMap(source, target,
                   ExactMatrix(source.ring(), target.ambient_rank(),
                               source.ambient_rank()));
}

ExactMatrix syzygies(const ExactMatrix& G, const ExactMatrix& A) {
  if (G.ring() != A.ring() || G.rows() != A.rows())
    throw PreconditionError("syzygies shape mismatch");
  ExactMatrix combined = hconcat(G, A);
  ExactMatrix ker = kernel_basis(combined);
  return ker.row_block(0, G.cols());
}

ExactMatrix ModuleMap::kernel_generators() const {
  // {v : M v lies in the target relations}, projected from ker [M | B].
  return syzygies(matrix_, target_.presentation());
}

FPModule ModuleMap::kernel() const {
  return submodule_from_generators(source_, kernel_generators());
}

FPModule ModuleMap::image() const {
  return submodule_from_generators(target_, matrix_);
}

FPModule ModuleMap::cokernel() const {
  return FPModule::from_presentation(
      hconcat(target_.presentation(), matrix_));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!f.target().isomorphic(g.source()) ||
      f.target().ambient_rank() != g.source().ambient_rank())
    throw PreconditionError("compose: middle modules do not match");
  return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

FPModule submodule_from_generators(const FPModule& M, const ExactMatrix& gens) {
  if (gens.rows() != M.ambient_rank())
    throw PreconditionError("submodule generators have wrong ambient rank");
  ExactMatrix rel = syzygies(gens, M.presentation());
  return FPModule::from_presentation(rel);
}

bool submodule_contained(const FPModule& M, const ExactMatrix& g1,
                         const ExactMatrix& g2) {
  LinearSolver solver(hconcat(g2, M.presentation()));
  for (int j = 0; j < g1.cols(); ++j)
    if (!solver.solvable(g1.column(j))) return false;
  return true;
}

bool submodule_equal(const FPModule& M, const ExactMatrix& g1,
                     const ExactMatrix& g2) {
  return submodule_contained(M, g1, g2) && submodule_contained(M, g2, g1);
}

FPModule quotient_by_submodule(const FPModule& M, const ExactMatrix& gens) {
  return FPModule::from_presentation(hconcat(M.presentation(), gens));
}

FPModule homology_at(const ModuleMap& f, const ModuleMap& g) {
  if (f.target().ambient_rank() != g.source().ambient_rank())
    throw PreconditionError("homology_at: complex does not line up");
  // Composite must vanish as a map of modules.
  ExactMatrix comp = g.matrix() * f.matrix();
  LinearSolver crel(g.target().presentation());
  for (int j = 0; j < comp.cols(); ++j)
    if (!crel.solvable(comp.column(j)))
      throw PreconditionError("homology_at: g after f is not zero");
  ExactMatrix cycles = syzygies(g.matrix(), g.target().presentation());
  ExactMatrix boundary_and_rel =
      hconcat(f.matrix(), f.target().presentation());
  ExactMatrix rel = syzygies(cycles, boundary_and_rel);
  return FPModule::from_presentation(rel);
}

// ---- functor calculus by summand rules ----

namespace {

// Hom(R/(a), R/(b)) = Ext^1(R/(a), R/(b)) = Tor_1(R/(a), R/(b))
//                   = R/(a) tensor R/(b) = R/(gcd(a, b)).
RingElement pair_gcd(const RingElement& a, const RingElement& b) {
  return gcd_of(a, b);
}

void require_same(const FPModule& M, const FPModule& N) {
  if (M.ring() != N.ring()) throw PreconditionError("ring mismatch");
}

}  // namespace

FPModule hom(const FPModule& M, const FPModule& N) {
  require_same(M, N);
  // Hom(R, N) = N; Hom(R/(a), R) = 0; Hom(R/(a), R/(b)) = R/(gcd).
  std::vector<RingElement> factors;
  int free_rank = M.free_rank() * N.free_rank();
  for (int i = 0; i < M.free_rank(); ++i)
    factors.insert(factors.end(), N.invariant_factors().begin(),
                   N.invariant_factors().end());
  for (const auto& a : M.invariant_factors())
    for (const auto& b : N.invariant_factors())
      factors.push_back(pair_gcd(a, b));
  return FPModule::from_invariants(M.ring(), free_rank, factors);
}

FPModule ext1(const FPModule& M, const FPModule& N) {
  require_same(M, N);
  // Ext^1(R, N) = 0; Ext^1(R/(a), N) = N/aN.
  std::vector<RingElement> factors;
  for (const auto& a : M.invariant_factors()) {
    for (int i = 0; i < N.free_rank(); ++i) factors.push_back(a);
    for (const auto& b : N.invariant_factors())
      factors.push_back(pair_gcd(a, b));
  }
  return FPModule::from_invariants(M.ring(), 0, factors);
}

FPModule ext1_from_presentation(const FPModule& M, const FPModule& N) {
  require_same(M, N);
  // Diagonalize the presentation; the nonzero diagonal entries give the
  // injective step R^k -> R^n of a length-1 free resolution of M. Dualizing
  // into N leaves Ext^1 = (+)_i N/(s_i N), each computed from an augmented
  // presentation rather than from gcd arithmetic.
  SNFResult snf = smith_normal_form(M.presentation());
  FPModule result = FPModule::zero(M.ring());
  for (const RingElement& s : snf.diagonal()) {
    if (s.is_zero()) continue;
    result = direct_sum(result, quotient_by_element(N, s));
  }
  return result;
}

FPModule tensor(const FPModule& M, const FPModule& N) {
  require_same(M, N);
  std::vector<RingElement> factors;
  int free_rank = M.free_rank() * N.free_rank();
  for (int i = 0; i < M.free_rank(); ++i)
    factors.insert(factors.end(), N.invariant_factors().begin(),
                   N.invariant_factors().end());
  for (int i = 0; i < N.free_rank(); ++i)
    factors.insert(factors.end(), M.invariant_factors().begin(),
                   M.invariant_factors().end());
  for (const auto& a : M.invariant_factors())
    for (const auto& b : N.invariant_factors())
      factors.push_back(pair_gcd(a, b));
  return FPModule::from_invariants(M.ring(), free_rank, factors);
}

FPModule tor1(const FPModule& M, const FPModule& N) {
  require_same(M, N);
  // Tor_1(R/(a), R/(b)) = (0 :_{R/(b)} a) = R/(gcd); free summands are flat.
  std::vector<RingElement> factors;
  for (const auto& a : M.invariant_factors())
    for (const auto& b : N.invariant_factors())
      factors.push_back(pair_gcd(a, b));
  return FPModule::from_invariants(M.ring(), 0, factors);
}

FPModule annihilator_kernel(const FPModule& M, const RingElement& x) {
  if (x.ring() != M.ring()) throw PreconditionError("ring mismatch");
  if (x.is_zero()) return M;
  std::vector<RingElement> factors;
  for (const auto& d : M.invariant_factors())
    factors.push_back(gcd_of(d, x));
  return FPModule::from_invariants(M.ring(), 0, factors);
}

bool support_in_V(const FPModule& X, const Ideal& I) {
  if (X.ring() != I.ring()) throw PreconditionError("ring mismatch");
  const RingElement& g = I.reduced();
  if (g.is_zero()) return true;  // V(0) = Spec R
  if (g.is_unit()) return X.is_zero();
  if (X.free_rank() > 0) return false;
  for (const auto& d : X.invariant_factors())
    if (!part_split(d, g).coprime_part.is_unit()) return false;
  return true;
}

FPModule quotient_by_element(const FPModule& M, const RingElement& x) {
  if (x.ring() != M.ring()) throw PreconditionError("ring mismatch");
  ExactMatrix xid =
      ExactMatrix::identity(M.ring(), M.ambient_rank()).scaled(x);
  return FPModule::from_presentation(hconcat(M.presentation(), xid));
}

FPModule quotient_by_power(const FPModule& M, const Ideal& I, int alpha) {
  if (alpha < 1) throw PreconditionError("quotient_by_power: alpha >= 1");
  return quotient_by_element(
      M, pow_elem(I.reduced(), static_cast<unsigned long>(alpha)));
}

}  // namespace adic
