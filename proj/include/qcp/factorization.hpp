#ifndef QCP_FACTORIZATION_HPP
#define QCP_FACTORIZATION_HPP

#include <vector>

#include "qcp/action.hpp"

namespace qcp {

struct FolnerVector {
  Vec xi;                    // unit vector in H
  std::vector<int> support;  // block set F with z_F xi = xi
  double defect = 0.0;       // max over the dual basis of ||T_omega(x) - x||
};

// Exact invariant vector: the one-dimensional joint eigenspace realizing the
// dual counit as a vector state.  Throws if that eigenspace is not
// one-dimensional (not a finite quantum group).
FolnerVector folner_vector(const QuantumGroupEnv& env);

// Normalize and certify an arbitrary finitely supported vector.
FolnerVector make_finitely_supported(const QuantumGroupEnv& env, const Vec& xi,
                                     const std::vector<int>& support);

// Compression by z_F (x) I, in coordinates of H_F = z_F H: values live in
// B(H_F) (x) B(H_B) and are certified inside B(H_F) (x) B.
struct PhiMap {
  std::vector<int> support;
  Mat q;          // isometry C^m -> H onto z_F H
  Mat z_f;        // q q*
  int m = 0;      // dim H_F
  int hb = 0;     // dim H_B
  double image_residual = 0.0;  // distance of basis images to B(H_F) (x) rep(B)
  ChoiReport choi;

  Mat apply(const Mat& y) const;  // B(H (x) H_B) -> B(H_F (x) H_B)
};

PhiMap build_phi(const QuantumGroupEnv& env, const Action& action, const CrossedProduct& cp,
                 const std::vector<int>& support, bool certify = true, const Tol& tol = {});

// Psi_xi = R_{V_xi} o (id (x) alpha) with the row operator V_xi assembled from
// the slices lambda(omega_{xi, e_p}) over an orthonormal basis e_p of z_F H.
struct PsiMap {
  FolnerVector xi;
  Mat q;
  std::vector<Mat> v_blocks;  // lambda(omega_{xi, e_p})
  Mat v_row;                  // [v_1 ... v_m] on H_F (x) H
  int m = 0;
  int hb = 0;
  double coisometry_residual = 0.0;  // V V* - I
  double matrix_unit_residual = 0.0;  // matun formula, entrywise
  double range_residual = 0.0;        // distance of images to the crossed product
  ChoiReport choi;

  const Action* action = nullptr;
  Mat apply(const Mat& t) const;  // B(H_F (x) H_B) -> B(H (x) H_B)
};

PsiMap build_psi(const QuantumGroupEnv& env, const Action& action, const CrossedProduct& cp,
                 const FolnerVector& xi, bool certify = true, const Tol& tol = {});

// Residual report for the Schur identity and the three identities behind it.
ValidationReport verify_schur(const QuantumGroupEnv& env, const Action& action,
                              const CrossedProduct& cp, const PhiMap& phi, const PsiMap& psi,
                              const Tol& tol = {});

// Equivariance of the pair with respect to a commuting map and its extension.
ValidationReport verify_equivariance(const QuantumGroupEnv& env, const Action& action,
                                     const CrossedProduct& cp, const PhiMap& phi, const PsiMap& psi,
                                     const CommutingMap& gamma, const CrossedMap& gamma_hat,
                                     const Tol& tol = {});

// max over the crossed-product basis of ||Psi(Phi(y)) - y||.
double approximation_defect(const CrossedProduct& cp, const PhiMap& phi, const PsiMap& psi);

}  // namespace qcp

#endif
