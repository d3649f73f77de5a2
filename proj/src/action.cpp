#include "qcp/action.hpp"

#include <Eigen/Eigenvalues>

namespace qcp {

QuantumGroupEnv build_env(const QuantumGroupData& data, const Tol& tol) {
  QuantumGroupEnv env{make_quantum_group(data, tol), {}, {}, {}};
  env.gns = gns_construct(env.qg);
  env.w = build_w(env.qg, env.gns);
  env.dual = build_dual(env.qg, env.gns, env.w);
  return env;
}

Action make_action(const QuantumGroupEnv& env, const AlgebraShape& target, const LinearMap& alpha) {
  if (alpha.domain() != target || alpha.codomain() != env.qg.shape.tensor(target))
    throw std::invalid_argument("make_action: alpha must map B to A (x) B");
  Action a{target, alpha, block_rep(target), {}};
  a.product_rep = tensor_rep(env.gns.pi, a.target_rep);
  return a;
}

ValidationReport validate_action(const QuantumGroupEnv& env, const Action& action, const Tol& tol) {
  ValidationReport rep;
  const AlgebraShape& a = env.qg.shape;
  const AlgebraShape& b = action.target;
  auto basis = canonical_basis(b);

  LinearMap lhs = env.qg.coproduct.tensor(LinearMap::identity(b)).compose(action.alpha);
  LinearMap rhs = LinearMap::identity(a).tensor(action.alpha).compose(action.alpha);
  double act = 0.0;
  for (const auto& e : basis) act = std::max(act, (lhs.apply(e) - rhs.apply(e)).frob_norm());
  rep.add("action_identity", "nondegenerate (or continuous in the strong sense)", act, tol.structural);

  double invcou = 0.0;
  for (const auto& e : basis)
    invcou = std::max(invcou, (slice_functional_first(env.qg.counit, b, action.alpha.apply(e)) - e).frob_norm());
  rep.add("counit_identity", "The following conditions are equivalent", invcou, tol.structural);

  int kdim = action.alpha.kernel_dim(1e-8);
  rep.add("injectivity", "The following conditions are equivalent", kdim == 0 ? 0.0 : double(kdim),
          tol.structural);

  rep.add("homomorphism", "nondegenerate (or continuous in the strong sense)",
          action.alpha.multiplicativity_defect(), tol.structural);
  rep.add("star_map", "nondegenerate (or continuous in the strong sense)", action.alpha.star_defect(),
          tol.structural);
  rep.add("unital", "nondegenerate (or continuous in the strong sense)", action.alpha.unital_defect(),
          tol.structural);

  bool c1 = rep.find("counit_identity")->pass;
  bool c2 = rep.find("injectivity")->pass;
  rep.add("counit_injectivity_equivalence", "The following conditions are equivalent",
          c1 == c2 ? 0.0 : 1.0, tol.structural);
  return rep;
}

Mat CrossedProduct::embed_target(const Action& action, const Element& b) const {
  return action.product_rep.apply(action.alpha.apply(b));
}

Mat CrossedProduct::embed_dual(const QuantumGroupEnv& env, const Mat& x) const {
  const int hb = ambient_dim / env.gns.hilbert_dim;
  return kron(x, Mat::Identity(hb, hb));
}

CrossedProduct build_crossed_product(const QuantumGroupEnv& env, const Action& action, const Tol& tol) {
  CrossedProduct cp;
  const int h = env.gns.hilbert_dim;
  const int hb = action.target_rep.space_dim;
  cp.ambient_dim = h * hb;
  auto basis_b = canonical_basis(action.target);
  const Mat id_b = Mat::Identity(hb, hb);

  std::vector<Mat> left;  // (x (x) I) alpha(b), for the two-sided density check
  for (size_t i = 0; i < basis_b.size(); ++i) {
    Mat ab = action.product_rep.apply(action.alpha.apply(basis_b[i]));
    for (int j = 0; j < env.dual.span.dim(); ++j) {
      Mat xj = kron(env.dual.span.basis_op(j), id_b);
      cp.generators.push_back(ab * xj);
      cp.provenance.push_back({static_cast<int>(i), j});
      left.push_back(xj * ab);
    }
  }
  cp.span = OperatorSpan::from_generators(cp.generators, 1e-8);
  cp.product_closure_residual = cp.span.product_closure_defect();
  cp.star_closure_residual = cp.span.star_closure_defect();
  if (cp.product_closure_residual > 1e-6 || cp.star_closure_residual > 1e-6)
    throw std::runtime_error("build_crossed_product: generator span is not an algebra");
  OperatorSpan left_span = OperatorSpan::from_generators(left, 1e-8);
  cp.two_sided_gap = cp.span.subspace_gap(left_span);
  (void)tol;
  return cp;
}

Mat CrossedMap::apply_op(const CrossedProduct& cp, const Mat& y) const {
  return cp.span.from_coords(coords * cp.span.coords(y));
}

namespace {

// One vector spanning the rank-one counit block of H.
Vec counit_vector(const QuantumGroupEnv& env) {
  Mat z = support_projection(env.qg, env.gns, {env.qg.counit_block});
  Eigen::SelfAdjointEigenSolver<Mat> es(z);
  return es.eigenvectors().col(env.gns.hilbert_dim - 1);
}

// (omega_eta (x) id)(y) for y on H (x) H_B.
Mat vector_state_slice(const Vec& eta, int hb, const Mat& y) {
  const int h = static_cast<int>(eta.size());
  Mat out = Mat::Zero(hb, hb);
  for (int u = 0; u < h; ++u)
    for (int v = 0; v < h; ++v) {
      cx c = std::conj(eta[u]) * eta[v];
      if (c == cx(0.0)) continue;
      out += c * y.block(u * hb, v * hb, hb, hb);
    }
  return out;
}

// Trace conditional expectation of B(H_B) onto the represented target algebra,
// then back through alpha; completely positive by construction.
Mat expectation_ambient(const QuantumGroupEnv& env, const Action& action, const Vec& eta, const Mat& y) {
  const int hb = action.target_rep.space_dim;
  Mat slice = vector_state_slice(eta, hb, y);
  Element b = represent_pullback(action.target, slice);
  return action.product_rep.apply(action.alpha.apply(b));
}

}  // namespace

CrossedMap conditional_expectation(const QuantumGroupEnv& env, const Action& action,
                                   const CrossedProduct& cp, const Tol& tol) {
  CrossedMap e;
  const Vec eta = counit_vector(env);
  const int amb = cp.ambient_dim;
  e.coords = Mat::Zero(cp.span.dim(), cp.span.dim());
  double res = 0.0;
  for (int k = 0; k < cp.span.dim(); ++k) {
    Mat out = expectation_ambient(env, action, eta, cp.span.basis_op(k));
    res = std::max(res, cp.span.distance(out));
    e.coords.col(k) = cp.span.coords(out);
  }
  e.consistency_residual = res;
  auto apply_unit = [&](int u, int v) {
    Mat m = Mat::Zero(amb, amb);
    m(u, v) = 1.0;
    return expectation_ambient(env, action, eta, m);
  };
  Mat unit_image = expectation_ambient(env, action, eta, Mat::Identity(amb, amb));
  e.choi = choi_cp_check_operator(amb, amb, apply_unit, unit_image, tol);
  return e;
}

CommutingMap certify_commuting(const QuantumGroupEnv& env, const Action& action, const LinearMap& gamma,
                               const Tol& tol) {
  if (gamma.domain() != action.target || gamma.codomain() != action.target)
    throw std::invalid_argument("certify_commuting: gamma must act on the target algebra");
  CommutingMap cm{gamma, 0.0, {}};
  LinearMap lhs = LinearMap::identity(env.qg.shape).tensor(gamma).compose(action.alpha);
  LinearMap rhs = action.alpha.compose(gamma);
  double res = 0.0;
  for (const auto& b : canonical_basis(action.target))
    res = std::max(res, (lhs.apply(b) - rhs.apply(b)).frob_norm());
  cm.commutation_residual = res;
  cm.choi = choi_cp_check(gamma, tol);
  return cm;
}

CrossedMap extend_commuting_map(const QuantumGroupEnv& env, const Action& action, const CrossedProduct& cp,
                                const CommutingMap& gamma, const Tol& tol) {
  const int h = env.gns.hilbert_dim;
  const int hb = action.target_rep.space_dim;
  // gamma lifted to B(H_B) through the trace expectation onto the target.
  auto gamma_tilde = [&](const Mat& m) {
    return action.target_rep.apply(gamma.gamma.apply(represent_pullback(action.target, m)));
  };
  auto id_tensor_gamma = [&](const Mat& y) {
    Mat out = Mat::Zero(y.rows(), y.cols());
    for (int u = 0; u < h; ++u)
      for (int v = 0; v < h; ++v) {
        Mat blk = y.block(u * hb, v * hb, hb, hb);
        if (blk.norm() == 0.0) continue;
        out.block(u * hb, v * hb, hb, hb) = gamma_tilde(blk);
      }
    return out;
  };

  CrossedMap ext;
  ext.coords = Mat::Zero(cp.span.dim(), cp.span.dim());
  double span_res = 0.0;
  for (int k = 0; k < cp.span.dim(); ++k) {
    Mat out = id_tensor_gamma(cp.span.basis_op(k));
    span_res = std::max(span_res, cp.span.distance(out));
    ext.coords.col(k) = cp.span.coords(out);
  }

  // Defining relation on the over-complete generator set.
  auto basis_b = canonical_basis(action.target);
  const Mat id_b = Mat::Identity(hb, hb);
  double rel = span_res;
  for (size_t g = 0; g < cp.generators.size(); ++g) {
    auto [i, j] = cp.provenance[g];
    Mat expect = action.product_rep.apply(action.alpha.apply(gamma.gamma.apply(basis_b[i]))) *
                 kron(env.dual.span.basis_op(j), id_b);
    rel = std::max(rel, (id_tensor_gamma(cp.generators[g]) - expect).norm());
  }
  ext.consistency_residual = rel;
  if (rel > 1e-6)
    throw std::runtime_error("extend_commuting_map: extension is inconsistent; the map does not commute");

  const int amb = cp.ambient_dim;
  auto apply_unit = [&](int u, int v) {
    Mat m = Mat::Zero(amb, amb);
    m(u, v) = 1.0;
    return id_tensor_gamma(m);
  };
  ext.choi = choi_cp_check_operator(amb, amb, apply_unit, id_tensor_gamma(Mat::Identity(amb, amb)), tol);
  return ext;
}

}  // namespace qcp
