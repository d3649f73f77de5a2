#ifndef QCP_QUANTUM_GROUP_HPP
#define QCP_QUANTUM_GROUP_HPP

#include <string>
#include <vector>

#include "qcp/algebra.hpp"
#include "qcp/spans.hpp"

namespace qcp {

struct CheckRecord {
  std::string id;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<CheckRecord> checks;

  void add(const std::string& id, const std::string& anchor, double residual, double tolerance);
  bool pass() const;
  double max_residual() const;
  const CheckRecord* find(const std::string& id) const;
};

// Structure constants of a candidate finite quantum group.
struct QuantumGroupData {
  AlgebraShape shape;
  LinearMap coproduct;  // A -> A (x) A
  Functional counit;
  LinearMap antipode;
};

// Validated structure plus the derived Haar state and counit block.
// Finite quantum groups are Kac: S^2 = id and the Haar state is a trace,
// both asserted by the validator.
struct FiniteQuantumGroup {
  AlgebraShape shape;
  LinearMap coproduct;
  Functional counit;
  LinearMap antipode;
  StateFunctional haar;
  int counit_block = -1;
};

// Per-axiom residuals: coassociativity, counit law, antipode laws,
// *-homomorphism property of the coproduct, Kac checks.
ValidationReport validate_quantum_group(const QuantumGroupData& candidate, const Tol& tol = {});

// Unique bi-invariant state, found by solving the joint invariance system;
// throws if the solution space dimension differs from 1.
StateFunctional compute_haar(const QuantumGroupData& qg);

// compute_haar + counit block location.  Does not run the validator.
FiniteQuantumGroup make_quantum_group(const QuantumGroupData& qg, const Tol& tol = {});

// GNS construction for the Haar state: H = C^{dim A}, <La, Lb> = haar(a* b).
struct GnsData {
  int hilbert_dim = 0;
  Mat lambda;      // coords(a) -> Lambda(a)
  Mat lambda_inv;
  Rep pi;          // left multiplication representation on H
  Vec cyclic_vector;  // Lambda(1)

  Vec embed(const Element& a) const;    // Lambda(a)
  Mat represent(const Element& a) const { return pi.apply(a); }
};

GnsData gns_construct(const FiniteQuantumGroup& qg);

struct MultiplicativeUnitary {
  Mat w;  // unitary on H (x) H
  double unitarity_residual = 0.0;
  double pentagon_residual = 0.0;
  double coproduct_residual = 0.0;        // Delta(m) = W*(1 (x) m)W on pi(A)
  double central_commutation_residual = 0.0;  // W(z_i (x) I) = (z_i (x) I)W
};

// W defined by W*(Lambda(a) (x) Lambda(b)) = (Lambda (x) Lambda)(Delta(b)(a (x) 1)).
MultiplicativeUnitary build_w(const FiniteQuantumGroup& qg, const GnsData& gns);

// Orthogonal projection z_F onto the blocks in F; rejects empty F.
Mat support_projection(const FiniteQuantumGroup& qg, const GnsData& gns, const std::vector<int>& f);

struct VectorFunctional {
  Vec xi, eta;  // omega_{xi,eta}(T) = <xi, T eta>, conjugate linear in the first slot
};

// lambda(omega) = (omega (x) id)(W) = (<xi| (x) I) W (|eta> (x) I).
Mat dual_element(const Mat& w, const VectorFunctional& omega);

struct DualAlgebra {
  OperatorSpan span;          // HS-orthonormal basis of span{lambda(omega)}
  Mat w_hat;                  // Sigma W* Sigma
  Vec counit_values;          // dual counit on the span basis: lambda(omega) -> omega(1)
  Mat coproduct_coords;       // column k: coords of DeltaHat(x_k) in x_i (x) x_j, index i*d+j
  double coproduct_residual = 0.0;
  Vec haar_values;            // dual Haar state on the span basis
  Mat haar_density;           // operator rho in the span with <rho, x>_HS = haar(x)
  double haar_state_residual = 0.0;
  double product_closure_residual = 0.0;
  double star_closure_residual = 0.0;
  double unit_distance = 0.0;  // distance of I to the span (discrete <=> dual unital)
};

DualAlgebra build_dual(const FiniteQuantumGroup& qg, const GnsData& gns, const MultiplicativeUnitary& w);

// Right convolution operator T_omega(x) = (id (x) omega)(DeltaHat(x)).
struct ConvolutionOperator {
  Mat coords;            // action on dual span coordinates
  double range_residual = 0.0;  // distance of outputs to the dual span

  Mat apply_op(const DualAlgebra& dual, const Mat& x) const;
};

ConvolutionOperator convolution_t(const DualAlgebra& dual, const VectorFunctional& omega);

// Direct operator form (id (x) omega)(WHat* (I (x) x) WHat), no span projection.
Mat convolution_t_op(const DualAlgebra& dual, const VectorFunctional& omega, const Mat& x);

// Dual structure transported to an abstract multimatrix algebra, enough to
// re-run the whole pipeline on the dual (dual of the dual checks).
QuantumGroupData dual_as_quantum_group(const DualAlgebra& dual, double tol = 1e-7);

// Convolution inverse of the identity: the unique S with
// m(S (x) id)Delta = counit(.)1.  Throws if the linear system is singular.
LinearMap solve_antipode(const AlgebraShape& shape, const LinearMap& coproduct, const Functional& counit);

// (f (x) id)(x) for x in shape_f (x) rest, and (id (x) f)(x) for first (x) shape_f.
Element slice_functional_first(const Functional& f, const AlgebraShape& rest, const Element& x);
Element slice_functional_second(const AlgebraShape& first, const Functional& f, const Element& x);
// Multiplication A (x) A -> A.
Element multiply_pair(const AlgebraShape& s, const Element& x);

}  // namespace qcp

#endif
