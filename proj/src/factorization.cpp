#include "qcp/factorization.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcp {

namespace {

double operator_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

// Orthonormal basis of z_F H as an isometry; the support projection is
// diagonal in the GNS basis, so columns are coordinate vectors.
Mat support_isometry(const QuantumGroupEnv& env, const std::vector<int>& support) {
  Mat z = support_projection(env.qg, env.gns, support);
  const int h = static_cast<int>(z.rows());
  std::vector<int> cols;
  for (int i = 0; i < h; ++i)
    if (std::abs(z(i, i).real() - 1.0) < 1e-9) cols.push_back(i);
  Mat off = z;
  for (int i : cols) off(i, i) -= 1.0;
  if (off.norm() > 1e-9) throw std::runtime_error("support_isometry: projection is not coordinate-diagonal");
  Mat q = Mat::Zero(h, cols.size());
  for (size_t k = 0; k < cols.size(); ++k) q(cols[k], k) = 1.0;
  return q;
}

double folner_defect(const QuantumGroupEnv& env, const Vec& xi) {
  double defect = 0.0;
  for (int k = 0; k < env.dual.span.dim(); ++k) {
    Mat t = convolution_t_op(env.dual, {xi, xi}, env.dual.span.basis_op(k));
    defect = std::max(defect, operator_norm(t - env.dual.span.basis_op(k)));
  }
  return defect;
}

// alpha lifted through the trace expectation of B(H_B) onto the target.
Mat alpha_bar(const Action& action, const Mat& m) {
  return action.product_rep.apply(action.alpha.apply(represent_pullback(action.target, m)));
}

}  // namespace

FolnerVector folner_vector(const QuantumGroupEnv& env) {
  const int h = env.gns.hilbert_dim;
  const int m = env.dual.span.dim();
  // xi must satisfy x xi = epshat(x) xi for every dual basis element; the
  // counit block of the dual has multiplicity one, so the joint eigenspace is
  // a line.
  Mat stack(m * h, h);
  for (int k = 0; k < m; ++k)
    stack.middleRows(k * h, h) = env.dual.span.basis_op(k) - env.dual.counit_values[k] * Mat::Identity(h, h);
  Eigen::JacobiSVD<Mat> svd(stack, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = std::max(1.0, sv(0));
  int nullity = 0;
  for (int i = 0; i < h; ++i) {
    double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= 1e-8 * scale) ++nullity;
  }
  if (nullity != 1)
    throw std::runtime_error("folner_vector: invariant eigenspace has dimension " + std::to_string(nullity));
  FolnerVector f;
  f.xi = svd.matrixV().col(h - 1);
  f.xi.normalize();
  for (int i = 0; i < env.qg.shape.num_blocks(); ++i) f.support.push_back(i);
  f.defect = folner_defect(env, f.xi);
  return f;
}

FolnerVector make_finitely_supported(const QuantumGroupEnv& env, const Vec& xi,
                                     const std::vector<int>& support) {
  Mat z = support_projection(env.qg, env.gns, support);
  FolnerVector f;
  f.xi = z * xi;
  double n = f.xi.norm();
  if (n < 1e-12) throw std::invalid_argument("make_finitely_supported: vector vanishes on the support");
  f.xi /= n;
  f.support = support;
  f.defect = folner_defect(env, f.xi);
  return f;
}

Mat PhiMap::apply(const Mat& y) const {
  const Mat qi = kron(q, Mat::Identity(hb, hb));
  return qi.adjoint() * y * qi;
}

PhiMap build_phi(const QuantumGroupEnv& env, const Action& action, const CrossedProduct& cp,
                 const std::vector<int>& support, bool certify, const Tol& tol) {
  PhiMap phi;
  phi.support = support;
  phi.q = support_isometry(env, support);
  phi.z_f = phi.q * phi.q.adjoint();
  phi.m = static_cast<int>(phi.q.cols());
  phi.hb = action.target_rep.space_dim;

  // image certificate: basis images lie in B(H_F) (x) rep(B)
  double img = 0.0;
  for (int k = 0; k < cp.span.dim(); ++k) {
    Mat out = phi.apply(cp.span.basis_op(k));
    for (int p = 0; p < phi.m; ++p)
      for (int r = 0; r < phi.m; ++r) {
        double res = 0.0;
        represent_pullback(action.target, out.block(p * phi.hb, r * phi.hb, phi.hb, phi.hb), &res);
        img = std::max(img, res);
      }
  }
  phi.image_residual = img;
  if (img > 1e-6) throw std::runtime_error("build_phi: compression leaves B(H_F) (x) B");

  if (certify) {
    const int din = env.gns.hilbert_dim * phi.hb;
    const int dout = phi.m * phi.hb;
    const Mat qi = kron(phi.q, Mat::Identity(phi.hb, phi.hb));
    auto apply_unit = [&](int u, int v) {
      return Mat((qi.adjoint().col(u)) * (qi.row(v)));  // q* e_uv q
    };
    phi.choi = choi_cp_check_operator(din, dout, apply_unit, phi.apply(Mat::Identity(din, din)), tol);
  }
  return phi;
}

Mat PsiMap::apply(const Mat& t) const {
  const int h = static_cast<int>(v_blocks[0].rows());
  Mat out = Mat::Zero(h * hb, h * hb);
  for (int p = 0; p < m; ++p)
    for (int r = 0; r < m; ++r) {
      Mat blk = t.block(p * hb, r * hb, hb, hb);
      if (blk.norm() == 0.0) continue;
      out += kron(v_blocks[p], Mat::Identity(hb, hb)) * alpha_bar(*action, blk) *
             kron(v_blocks[r], Mat::Identity(hb, hb)).adjoint();
    }
  return out;
}

PsiMap build_psi(const QuantumGroupEnv& env, const Action& action, const CrossedProduct& cp,
                 const FolnerVector& xi, bool certify, const Tol& tol) {
  PsiMap psi;
  psi.xi = xi;
  psi.q = support_isometry(env, xi.support);
  psi.m = static_cast<int>(psi.q.cols());
  psi.hb = action.target_rep.space_dim;
  psi.action = &action;
  const int h = env.gns.hilbert_dim;

  Mat vv = Mat::Zero(h, h);
  psi.v_row = Mat::Zero(h, psi.m * h);
  for (int p = 0; p < psi.m; ++p) {
    Vec ep = psi.q.col(p);
    Mat vp = dual_element(env.w.w, {xi.xi, ep});
    vv += vp * vp.adjoint();
    psi.v_blocks.push_back(vp);
    psi.v_row.middleCols(p * h, h) = vp;
  }
  psi.coisometry_residual = (vv - Mat::Identity(h, h)).norm();

  // matrix-unit formula, entrywise over the target basis
  auto basis_b = canonical_basis(action.target);
  const Mat id_b = Mat::Identity(psi.hb, psi.hb);
  double matun = 0.0, range = 0.0;
  for (int p = 0; p < psi.m; ++p)
    for (int r = 0; r < psi.m; ++r)
      for (const auto& b : basis_b) {
        Mat t = Mat::Zero(psi.m * psi.hb, psi.m * psi.hb);
        t.block(p * psi.hb, r * psi.hb, psi.hb, psi.hb) = action.target_rep.apply(b);
        Mat lhs = psi.apply(t);
        Mat rhs = kron(psi.v_blocks[p], id_b) *
                  action.product_rep.apply(action.alpha.apply(b)) *
                  kron(psi.v_blocks[r], id_b).adjoint();
        matun = std::max(matun, (lhs - rhs).norm());
        range = std::max(range, cp.span.distance(lhs));
      }
  psi.matrix_unit_residual = matun;
  psi.range_residual = range;
  if (range > 1e-6) throw std::runtime_error("build_psi: image leaves the crossed product");

  if (certify) {
    const int din = psi.m * psi.hb;
    const int dout = h * psi.hb;
    auto apply_unit = [&](int u, int v) {
      Mat t = Mat::Zero(din, din);
      t(u, v) = 1.0;
      return psi.apply(t);
    };
    psi.choi = choi_cp_check_operator(din, dout, apply_unit, psi.apply(Mat::Identity(din, din)), tol);
  }
  return psi;
}

ValidationReport verify_schur(const QuantumGroupEnv& env, const Action& action, const CrossedProduct& cp,
                              const PhiMap& phi, const PsiMap& psi, const Tol& tol) {
  ValidationReport rep;
  const int h = env.gns.hilbert_dim;
  const int hb = phi.hb;
  const Mat id_b = Mat::Identity(hb, hb);
  auto basis_b = canonical_basis(action.target);

  // (Psi o Phi)(alpha(b)(x (x) I)) = alpha(b)(T_omega(x) (x) I)
  double schur = 0.0;
  for (const auto& b : basis_b) {
    Mat ab = action.product_rep.apply(action.alpha.apply(b));
    for (int j = 0; j < env.dual.span.dim(); ++j) {
      Mat x = env.dual.span.basis_op(j);
      Mat lhs = psi.apply(phi.apply(ab * kron(x, id_b)));
      Mat tx = convolution_t_op(env.dual, {psi.xi.xi, psi.xi.xi}, x);
      Mat rhs = ab * kron(tx, id_b);
      schur = std::max(schur, (lhs - rhs).norm());
    }
  }
  rep.add("schur_identity", "nondegenerate (unital) completely positive maps", schur, tol.structural);

  // R_V(z_F x z_F (x) I (x) I) = T_omega(x) (x) I
  double xapprox = 0.0;
  for (int j = 0; j < env.dual.span.dim(); ++j) {
    Mat x = env.dual.span.basis_op(j);
    Mat xf = phi.q.adjoint() * x * phi.q;  // z_F x z_F on H_F
    Mat lhs = Mat::Zero(h, h);
    for (int p = 0; p < phi.m; ++p)
      for (int r = 0; r < phi.m; ++r) lhs += xf(p, r) * psi.v_blocks[p] * psi.v_blocks[r].adjoint();
    Mat tx = convolution_t_op(env.dual, {psi.xi.xi, psi.xi.xi}, x);
    xapprox = std::max(xapprox, (lhs - tx).norm());
  }
  rep.add("slice_compression", "Recall the definition of the maps", xapprox, tol.structural);

  // (id (x) alpha)(Phi(alpha(b))) = compression of (Delta (x) id)(alpha(b));
  // the first leg is compressed through q before representing, which keeps the
  // working matrices at m*h*hb.
  double zfact = 0.0;
  std::vector<Mat> dalpha;  // compressed (Delta (x) id)(alpha(b)) per basis b
  LinearMap delta_id = env.qg.coproduct.tensor(LinearMap::identity(action.target));
  const AlgebraShape ab_shape = env.qg.shape.tensor(action.target);
  for (const auto& b : basis_b) {
    Mat phiab = phi.apply(action.product_rep.apply(action.alpha.apply(b)));
    Mat lhs = Mat::Zero(phi.m * h * hb, phi.m * h * hb);
    for (int p = 0; p < phi.m; ++p)
      for (int r = 0; r < phi.m; ++r) {
        Mat blk = phiab.block(p * hb, r * hb, hb, hb);
        if (blk.norm() == 0.0) continue;
        Mat e = Mat::Zero(phi.m, phi.m);
        e(p, r) = 1.0;
        lhs += kron(e, alpha_bar(action, blk));
      }
    PureTensorExpansion ex = expand_pure_tensors(delta_id.apply(action.alpha.apply(b)),
                                                 {env.qg.shape, ab_shape});
    Mat rhs = Mat::Zero(phi.m * h * hb, phi.m * h * hb);
    for (size_t t = 0; t < ex.coeff.size(); ++t) {
      Mat head = phi.q.adjoint() * env.gns.pi.basis_ops[ex.index[t][0]] * phi.q;
      rhs += ex.coeff[t] * kron(head, action.product_rep.basis_ops[ex.index[t][1]]);
    }
    dalpha.push_back(rhs);
    zfact = std::max(zfact, (lhs - rhs).norm());
  }
  rep.add("support_action_identity", "the Cohen-Hewitt factorisation theorem", zfact, tol.structural);

  // (V (x) I)(compressed (Delta (x) id)(alpha(b))) = alpha(b)(V (x) I)
  double longres = 0.0;
  const Mat v_i = kron(psi.v_row, id_b);  // careful: order of legs is H_F (x) H (x) H_B
  // v_row acts on H_F (x) H; extend by I on H_B
  for (size_t k = 0; k < basis_b.size(); ++k) {
    Mat ab = action.product_rep.apply(action.alpha.apply(basis_b[k]));
    Mat lhs = v_i * dalpha[k];
    Mat rhs = ab * v_i;
    longres = std::max(longres, (lhs - rhs).norm());
  }
  rep.add("row_operator_intertwining", "Thus we have shown that for all", longres, tol.structural);

  return rep;
}

ValidationReport verify_equivariance(const QuantumGroupEnv& env, const Action& action,
                                     const CrossedProduct& cp, const PhiMap& phi, const PsiMap& psi,
                                     const CommutingMap& gamma, const CrossedMap& gamma_hat,
                                     const Tol& tol) {
  ValidationReport rep;
  const int hb = phi.hb;
  // Phi o gammaHat = (id (x) gamma) o Phi on the crossed-product basis
  auto gamma_tilde = [&](const Mat& m) {
    return action.target_rep.apply(gamma.gamma.apply(represent_pullback(action.target, m)));
  };
  auto id_gamma_small = [&](const Mat& y, int legdim) {
    Mat out = Mat::Zero(y.rows(), y.cols());
    for (int u = 0; u < legdim; ++u)
      for (int v = 0; v < legdim; ++v) {
        Mat blk = y.block(u * hb, v * hb, hb, hb);
        if (blk.norm() == 0.0) continue;
        out.block(u * hb, v * hb, hb, hb) = gamma_tilde(blk);
      }
    return out;
  };
  double phic = 0.0;
  for (int k = 0; k < cp.span.dim(); ++k) {
    Mat y = cp.span.basis_op(k);
    Mat lhs = phi.apply(gamma_hat.apply_op(cp, y));
    Mat rhs = id_gamma_small(phi.apply(y), phi.m);
    phic = std::max(phic, (lhs - rhs).norm());
  }
  rep.add("phi_equivariance", "completely positive and contractive equivariant maps", phic,
          tol.structural);

  // Psi o (id (x) gamma) = gammaHat o Psi on matrix units
  double psic = 0.0;
  auto basis_b = canonical_basis(action.target);
  for (int p = 0; p < psi.m; ++p)
    for (int r = 0; r < psi.m; ++r)
      for (const auto& b : basis_b) {
        Mat t = Mat::Zero(psi.m * hb, psi.m * hb);
        t.block(p * hb, r * hb, hb, hb) = action.target_rep.apply(b);
        Mat lhs = psi.apply(id_gamma_small(t, psi.m));
        Mat rhs = gamma_hat.apply_op(cp, psi.apply(t));
        psic = std::max(psic, (lhs - rhs).norm());
      }
  rep.add("psi_equivariance", "completely positive and contractive equivariant maps", psic,
          tol.structural);
  return rep;
}

double approximation_defect(const CrossedProduct& cp, const PhiMap& phi, const PsiMap& psi) {
  double d = 0.0;
  for (int k = 0; k < cp.span.dim(); ++k) {
    Mat y = cp.span.basis_op(k);
    d = std::max(d, operator_norm(psi.apply(phi.apply(y)) - y));
  }
  return d;
}

}  // namespace qcp
