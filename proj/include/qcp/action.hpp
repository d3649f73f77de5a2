#ifndef QCP_ACTION_HPP
#define QCP_ACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcp/quantum_group.hpp"
#include "qcp/spans.hpp"

namespace qcp {

// All crossed-product machinery for one quantum group, built once.
struct QuantumGroupEnv {
  FiniteQuantumGroup qg;
  GnsData gns;
  MultiplicativeUnitary w;
  DualAlgebra dual;
};

QuantumGroupEnv build_env(const QuantumGroupData& data, const Tol& tol = {});

// Action of the quantum group on a unital multimatrix algebra B.
struct Action {
  AlgebraShape target;   // B
  LinearMap alpha;       // B -> A (x) B, unital *-homomorphism
  Rep target_rep;        // B on H_B (block representation)
  Rep product_rep;       // A (x) B on H (x) H_B (pi (x) block)
};

Action make_action(const QuantumGroupEnv& env, const AlgebraShape& target, const LinearMap& alpha);

// Residuals for the coaction identity, the counit identity, injectivity and
// the homomorphism property; the counit and injectivity verdicts must agree.
ValidationReport validate_action(const QuantumGroupEnv& env, const Action& action, const Tol& tol = {});

struct CrossedProduct {
  int ambient_dim = 0;       // dim(H (x) H_B)
  OperatorSpan span;         // HS-orthonormal basis
  std::vector<Mat> generators;          // alpha(b_i) (x_j (x) I), row-major in (i, j)
  std::vector<std::pair<int, int>> provenance;  // generator (i, j) per list position
  double product_closure_residual = 0.0;
  double star_closure_residual = 0.0;
  double two_sided_gap = 0.0;  // span{alpha(b)(x (x) 1)} vs span{(x (x) 1)alpha(b)}

  Mat embed_target(const Action& action, const Element& b) const;   // alpha(b) represented
  Mat embed_dual(const QuantumGroupEnv& env, const Mat& x) const;   // x (x) I
};

CrossedProduct build_crossed_product(const QuantumGroupEnv& env, const Action& action,
                                     const Tol& tol = {});

// Linear map on the crossed product stored in span coordinates, together with
// an extension to the ambient matrix algebra used for Choi certification.
struct CrossedMap {
  Mat coords;                       // span dim x span dim
  double consistency_residual = 0.0;  // defect of the defining relations
  ChoiReport choi;                  // certificate of the ambient extension

  Mat apply_op(const CrossedProduct& cp, const Mat& y) const;
};

// Conditional expectation alpha o (eps (x) id) onto alpha(B).
CrossedMap conditional_expectation(const QuantumGroupEnv& env, const Action& action,
                                   const CrossedProduct& cp, const Tol& tol = {});

struct CommutingMap {
  LinearMap gamma;  // B -> B
  double commutation_residual = 0.0;  // (id (x) gamma) alpha - alpha gamma
  ChoiReport choi;
};

CommutingMap certify_commuting(const QuantumGroupEnv& env, const Action& action,
                               const LinearMap& gamma, const Tol& tol = {});

// Canonical extension: gammaHat(alpha(b)(x (x) I)) = alpha(gamma(b))(x (x) I),
// realized as the restriction of id (x) gamma to the crossed product.
CrossedMap extend_commuting_map(const QuantumGroupEnv& env, const Action& action,
                                const CrossedProduct& cp, const CommutingMap& gamma,
                                const Tol& tol = {});

}  // namespace qcp

#endif
