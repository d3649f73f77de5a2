#include "qcp/quantum_group.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcp {

void ValidationReport::add(const std::string& id, const std::string& anchor, double residual,
                           double tolerance) {
  checks.push_back({id, anchor, residual, tolerance, residual <= tolerance});
}

bool ValidationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double ValidationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const CheckRecord* ValidationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

Element slice_functional_first(const Functional& f, const AlgebraShape& rest, const Element& x) {
  const AlgebraShape& fs = f.shape();
  if (x.shape() != fs.tensor(rest)) throw std::invalid_argument("slice_functional_first: shape mismatch");
  Vec xc = x.coords();
  Vec out = Vec::Zero(rest.dim());
  for (int k = 0; k < fs.dim(); ++k) {
    cx fk = f.row()[k];
    if (fk == cx(0.0)) continue;
    for (int l = 0; l < rest.dim(); ++l) out[l] += fk * xc[tensor_basis_index(fs, rest, k, l)];
  }
  return Element::from_coords(rest, out);
}

Element slice_functional_second(const AlgebraShape& first, const Functional& f, const Element& x) {
  const AlgebraShape& fs = f.shape();
  if (x.shape() != first.tensor(fs)) throw std::invalid_argument("slice_functional_second: shape mismatch");
  Vec xc = x.coords();
  Vec out = Vec::Zero(first.dim());
  for (int l = 0; l < fs.dim(); ++l) {
    cx fl = f.row()[l];
    if (fl == cx(0.0)) continue;
    for (int k = 0; k < first.dim(); ++k) out[k] += fl * xc[tensor_basis_index(first, fs, k, l)];
  }
  return Element::from_coords(first, out);
}

Element multiply_pair(const AlgebraShape& s, const Element& x) {
  if (x.shape() != s.tensor(s)) throw std::invalid_argument("multiply_pair: shape mismatch");
  Vec xc = x.coords();
  auto basis = canonical_basis(s);
  Element out = Element::zero(s);
  for (int k = 0; k < s.dim(); ++k)
    for (int l = 0; l < s.dim(); ++l) {
      cx c = xc[tensor_basis_index(s, s, k, l)];
      if (c != cx(0.0)) out = out + c * (basis[k] * basis[l]);
    }
  return out;
}

namespace {

// Central projection onto block i.
Element central_projection(const AlgebraShape& shape, int i) {
  Element z = Element::zero(shape);
  z.block(i) = Mat::Identity(shape.block_dim(i), shape.block_dim(i));
  return z;
}

}  // namespace

ValidationReport validate_quantum_group(const QuantumGroupData& qg, const Tol& tol) {
  ValidationReport rep;
  const AlgebraShape& a = qg.shape;
  auto basis = canonical_basis(a);
  const LinearMap id_a = LinearMap::identity(a);

  // coassociativity
  LinearMap left = qg.coproduct.tensor(id_a).compose(qg.coproduct);
  LinearMap right = id_a.tensor(qg.coproduct).compose(qg.coproduct);
  double coassoc = 0.0;
  for (const auto& b : basis) coassoc = std::max(coassoc, (left.apply(b) - right.apply(b)).frob_norm());
  rep.add("coassociativity", "algebraic quantum group in the sense", coassoc, tol.structural);

  // counit law
  double counit_res = 0.0;
  for (const auto& b : basis) {
    Element d = qg.coproduct.apply(b);
    counit_res = std::max(counit_res, (slice_functional_first(qg.counit, a, d) - b).frob_norm());
    counit_res = std::max(counit_res, (slice_functional_second(a, qg.counit, d) - b).frob_norm());
  }
  rep.add("counit_law", "canonical one-dimensional central projection", counit_res, tol.structural);

  // antipode laws m(S (x) id)Delta = eps(.)1 = m(id (x) S)Delta
  const Element one = Element::identity(a);
  double s_left = 0.0, s_right = 0.0;
  LinearMap s_tensor_id = qg.antipode.tensor(id_a);
  LinearMap id_tensor_s = id_a.tensor(qg.antipode);
  for (size_t k = 0; k < basis.size(); ++k) {
    Element d = qg.coproduct.apply(basis[k]);
    cx e = qg.counit(basis[k]);
    s_left = std::max(s_left, (multiply_pair(a, s_tensor_id.apply(d)) - e * one).frob_norm());
    s_right = std::max(s_right, (multiply_pair(a, id_tensor_s.apply(d)) - e * one).frob_norm());
  }
  rep.add("antipode_left", "there exists an antipode", s_left, tol.structural);
  rep.add("antipode_right", "there exists an antipode", s_right, tol.structural);

  // coproduct is a unital *-homomorphism
  rep.add("coproduct_homomorphism", "algebraic quantum group in the sense",
          qg.coproduct.multiplicativity_defect(), tol.structural);
  rep.add("coproduct_star", "algebraic quantum group in the sense", qg.coproduct.star_defect(),
          tol.structural);
  rep.add("coproduct_unital", "algebraic quantum group in the sense", qg.coproduct.unital_defect(),
          tol.structural);

  // counit is a character
  rep.add("counit_character", "canonical one-dimensional central projection",
          qg.counit.character_defect(), tol.structural);

  // Kac: S^2 = id
  double kac = 0.0;
  LinearMap s2 = qg.antipode.compose(qg.antipode);
  for (const auto& b : basis) kac = std::max(kac, (s2.apply(b) - b).frob_norm());
  rep.add("kac_s2", "left and right invariant weights", kac, tol.structural);

  return rep;
}

StateFunctional compute_haar(const QuantumGroupData& qg) {
  const AlgebraShape& a = qg.shape;
  const int d = a.dim();
  auto basis = canonical_basis(a);
  Vec unit = Element::identity(a).coords();

  // Unknown: row h with (h (x) id)Delta(f_k) = h(f_k) 1 and (id (x) h)Delta(f_k) = h(f_k) 1.
  Mat system = Mat::Zero(2 * d * d, d);
  for (int k = 0; k < d; ++k) {
    Vec dc = qg.coproduct.apply(basis[k]).coords();
    for (int l = 0; l < d; ++l) {
      for (int i = 0; i < d; ++i) {
        system(k * d + l, i) += dc[tensor_basis_index(a, a, i, l)];
        system(d * d + k * d + l, i) += dc[tensor_basis_index(a, a, l, i)];
      }
      system(k * d + l, k) -= unit[l];
      system(d * d + k * d + l, k) -= unit[l];
    }
  }
  Eigen::JacobiSVD<Mat> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = sv.size() ? sv(0) : 0.0;
  int nullity = 0;
  for (int i = 0; i < d; ++i) {
    double s = i < sv.size() ? sv(i) : 0.0;
    if (scale == 0.0 || s <= 1e-8 * std::max(1.0, scale)) ++nullity;
  }
  if (nullity != 1)
    throw std::runtime_error("compute_haar: invariance system has solution space of dimension " +
                             std::to_string(nullity) + ", expected 1");
  Vec h = svd.matrixV().col(d - 1);
  cx norm = cx(0.0);
  for (int k = 0; k < d; ++k) norm += h[k] * unit[k];
  if (std::abs(norm) < 1e-12) throw std::runtime_error("compute_haar: invariant functional kills the unit");
  h /= norm;
  Functional hf(a, h);
  StateFunctional state{a, hf.density()};
  if (state.state_defect(1e-8) > 1e-8)
    throw std::runtime_error("compute_haar: invariant functional is not a state");
  return state;
}

FiniteQuantumGroup make_quantum_group(const QuantumGroupData& qg, const Tol& tol) {
  FiniteQuantumGroup out{qg.shape, qg.coproduct, qg.counit, qg.antipode, compute_haar(qg), -1};
  for (int i = 0; i < qg.shape.num_blocks(); ++i) {
    if (qg.shape.block_dim(i) != 1) continue;
    if (std::abs(qg.counit(central_projection(qg.shape, i)) - cx(1.0)) <= 1e-6) {
      if (out.counit_block >= 0) throw std::runtime_error("make_quantum_group: counit block not unique");
      out.counit_block = i;
    }
  }
  if (out.counit_block < 0)
    throw std::runtime_error("make_quantum_group: no one-dimensional block supports the counit");
  (void)tol;
  return out;
}

Vec GnsData::embed(const Element& a) const { return lambda * a.coords(); }

GnsData gns_construct(const FiniteQuantumGroup& qg) {
  const AlgebraShape& a = qg.shape;
  const int d = a.dim();
  auto basis = canonical_basis(a);
  Mat gram(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) gram(k, l) = qg.haar(basis[k].star() * basis[l]);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
  if (es.eigenvalues().minCoeff() <= 1e-12)
    throw std::runtime_error("gns_construct: Haar state is not faithful");
  GnsData gns;
  gns.hilbert_dim = d;
  gns.lambda = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
               es.eigenvectors().adjoint();
  gns.lambda_inv = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                   es.eigenvectors().adjoint();
  gns.pi.shape = a;
  gns.pi.space_dim = d;
  for (int k = 0; k < d; ++k) {
    Mat lmult(d, d);
    for (int l = 0; l < d; ++l) lmult.col(l) = (basis[k] * basis[l]).coords();
    gns.pi.basis_ops.push_back(gns.lambda * lmult * gns.lambda_inv);
  }
  gns.cyclic_vector = gns.embed(Element::identity(a));
  return gns;
}

MultiplicativeUnitary build_w(const FiniteQuantumGroup& qg, const GnsData& gns) {
  const AlgebraShape& a = qg.shape;
  const int d = a.dim();
  auto basis = canonical_basis(a);
  const Mat perm = tensor_basis_permutation(a, a);  // pair coords -> tensor coords
  const Mat lam2 = kron(gns.lambda, gns.lambda);
  const Mat lam2_inv = kron(gns.lambda_inv, gns.lambda_inv);

  Mat b(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    Element fk_one = basis[k].tensor(Element::identity(a));
    for (int l = 0; l < d; ++l) {
      Element x = qg.coproduct.apply(basis[l]) * fk_one;
      b.col(k * d + l) = lam2 * (perm.adjoint() * x.coords());
    }
  }
  MultiplicativeUnitary mw;
  Mat w_star = b * lam2_inv;
  mw.w = w_star.adjoint();
  mw.unitarity_residual = std::max((w_star * mw.w - Mat::Identity(d * d, d * d)).norm(),
                                   (mw.w * w_star - Mat::Identity(d * d, d * d)).norm());

  // pentagon W12 W13 W23 = W23 W12 on H (x) H (x) H
  const Mat id_d = Mat::Identity(d, d);
  Mat w12 = kron(mw.w, id_d);
  Mat w23 = kron(id_d, mw.w);
  Mat s23 = kron(id_d, flip_unitary(d, d));
  Mat w13 = s23 * w12 * s23;
  mw.pentagon_residual = (w12 * w13 * w23 - w23 * w12).norm();

  // Delta(m) = W*(1 (x) m)W on pi(A)
  Rep pi2 = tensor_rep(gns.pi, gns.pi);
  double cop = 0.0;
  for (int k = 0; k < d; ++k) {
    Mat lhs = pi2.apply(qg.coproduct.apply(basis[k]));
    Mat rhs = w_star * kron(id_d, gns.pi.basis_ops[k]) * mw.w;
    cop = std::max(cop, (lhs - rhs).norm());
  }
  mw.coproduct_residual = cop;

  double cen = 0.0;
  for (int i = 0; i < a.num_blocks(); ++i) {
    Mat zi = gns.pi.apply(central_projection(a, i));
    Mat zi_i = kron(zi, id_d);
    cen = std::max(cen, (mw.w * zi_i - zi_i * mw.w).norm());
  }
  mw.central_commutation_residual = cen;
  return mw;
}

Mat support_projection(const FiniteQuantumGroup& qg, const GnsData& gns, const std::vector<int>& f) {
  if (f.empty()) throw std::invalid_argument("support_projection: empty block set");
  Element z = Element::zero(qg.shape);
  for (int i : f) {
    if (i < 0 || i >= qg.shape.num_blocks()) throw std::invalid_argument("support_projection: bad block index");
    z = z + central_projection(qg.shape, i);
  }
  return gns.pi.apply(z);
}

Mat dual_element(const Mat& w, const VectorFunctional& omega) {
  const int d2 = static_cast<int>(w.rows());
  const int d = static_cast<int>(omega.xi.size());
  if (d * d != d2 || omega.eta.size() != d) throw std::invalid_argument("dual_element: dimension mismatch");
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cx c = std::conj(omega.xi[i]) * omega.eta[j];
      if (c == cx(0.0)) continue;
      out += c * w.block(i * d, j * d, d, d);
    }
  return out;
}

DualAlgebra build_dual(const FiniteQuantumGroup& qg, const GnsData& gns, const MultiplicativeUnitary& w) {
  const int d = gns.hilbert_dim;
  DualAlgebra dual;
  std::vector<Mat> gens;
  gens.reserve(d * d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      VectorFunctional om{Vec::Unit(d, p), Vec::Unit(d, q)};
      gens.push_back(dual_element(w.w, om));
    }
  dual.span = OperatorSpan::from_generators(gens, 1e-8);
  const int m = dual.span.dim();

  // dual counit lambda(omega) -> omega(1): least squares back onto generators,
  // with a well-definedness certificate on the generator kernel.
  Mat gmat(d * d, d * d);
  for (int g = 0; g < d * d; ++g) {
    int idx = 0;
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) gmat(idx++, g) = gens[g](i, j);
  }
  Vec eps_on_gens = Vec::Zero(d * d);
  for (int p = 0; p < d; ++p) eps_on_gens[p * d + p] = 1.0;  // omega_{e_p,e_q}(1) = delta_pq
  Eigen::JacobiSVD<Mat> gsvd(gmat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double gscale = gsvd.singularValues()(0);
  double welldef = 0.0;
  for (int i = 0; i < gsvd.singularValues().size(); ++i) {
    if (gsvd.singularValues()(i) <= 1e-8 * gscale) {
      welldef = std::max(welldef, std::abs(eps_on_gens.dot(gsvd.matrixV().col(i).conjugate())));
    }
  }
  if (welldef > 1e-8) throw std::runtime_error("build_dual: dual counit not well defined on slices");
  dual.counit_values = Vec::Zero(m);
  for (int k = 0; k < m; ++k) {
    Vec target(d * d);
    int idx = 0;
    const Mat& xk = dual.span.basis_op(k);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) target[idx++] = xk(i, j);
    Vec c = gsvd.solve(target);
    dual.counit_values[k] = eps_on_gens.transpose() * c;
  }

  dual.product_closure_residual = dual.span.product_closure_defect();
  dual.star_closure_residual = dual.span.star_closure_defect();
  dual.unit_distance = dual.span.distance(Mat::Identity(d, d));

  // dual coproduct DeltaHat(x) = WHat*(I (x) x)WHat with WHat = Sigma W* Sigma
  const Mat sigma = flip_unitary(d, d);
  dual.w_hat = sigma * w.w.adjoint() * sigma;
  dual.coproduct_coords = Mat::Zero(m * m, m);
  double cop_res = 0.0;
  for (int k = 0; k < m; ++k) {
    Mat dk = dual.w_hat.adjoint() * kron(Mat::Identity(d, d), dual.span.basis_op(k)) * dual.w_hat;
    Mat recon = Mat::Zero(d * d, d * d);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Mat bij = kron(dual.span.basis_op(i), dual.span.basis_op(j));
        cx c = (bij.adjoint() * dk).trace();
        dual.coproduct_coords(i * m + j, k) = c;
        recon += c * bij;
      }
    cop_res = std::max(cop_res, (dk - recon).norm());
  }
  dual.coproduct_residual = cop_res;

  // dual Haar: invariance solve on the dual structure
  Vec unit_coords = dual.span.coords(Mat::Identity(d, d));
  Mat system = Mat::Zero(2 * m * m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      for (int i = 0; i < m; ++i) {
        system(k * m + l, i) += dual.coproduct_coords(i * m + l, k);
        system(m * m + k * m + l, i) += dual.coproduct_coords(l * m + i, k);
      }
      system(k * m + l, k) -= unit_coords[l];
      system(m * m + k * m + l, k) -= unit_coords[l];
    }
  Eigen::JacobiSVD<Mat> svd(system, Eigen::ComputeFullV);
  double scale = svd.singularValues()(0);
  int nullity = 0;
  for (int i = 0; i < m; ++i) {
    double s = i < svd.singularValues().size() ? svd.singularValues()(i) : 0.0;
    if (s <= 1e-8 * std::max(1.0, scale)) ++nullity;
  }
  if (nullity != 1)
    throw std::runtime_error("build_dual: dual Haar solution space has dimension " + std::to_string(nullity));
  Vec h = svd.matrixV().col(m - 1);
  cx norm = unit_coords.transpose() * h;
  if (std::abs(norm) < 1e-12) throw std::runtime_error("build_dual: dual Haar kills the unit");
  h /= norm;
  dual.haar_values = h;
  dual.haar_density = Mat::Zero(d, d);
  for (int k = 0; k < m; ++k) dual.haar_density += std::conj(h[k]) * dual.span.basis_op(k);
  // positivity via the GNS Gram of the dual Haar
  Mat gns_gram(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Vec c = dual.span.coords(dual.span.basis_op(a).adjoint() * dual.span.basis_op(b));
      gns_gram(a, b) = c.transpose() * h;
    }
  Eigen::SelfAdjointEigenSolver<Mat> ges(0.5 * (gns_gram + gns_gram.adjoint()));
  dual.haar_state_residual = std::max(0.0, -ges.eigenvalues().minCoeff());
  return dual;
}

Mat convolution_t_op(const DualAlgebra& dual, const VectorFunctional& omega, const Mat& x) {
  const int d = dual.span.ambient_dim();
  Mat m = dual.w_hat.adjoint() * kron(Mat::Identity(d, d), x) * dual.w_hat;
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cx c = std::conj(omega.xi[i]) * omega.eta[j];
      if (c == cx(0.0)) continue;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) out(a, b) += c * m(a * d + i, b * d + j);
    }
  return out;
}

ConvolutionOperator convolution_t(const DualAlgebra& dual, const VectorFunctional& omega) {
  const int m = dual.span.dim();
  ConvolutionOperator t;
  t.coords = Mat::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    Mat out = convolution_t_op(dual, omega, dual.span.basis_op(k));
    t.range_residual = std::max(t.range_residual, dual.span.distance(out));
    t.coords.col(k) = dual.span.coords(out);
  }
  return t;
}

Mat ConvolutionOperator::apply_op(const DualAlgebra& dual, const Mat& x) const {
  return dual.span.from_coords(coords * dual.span.coords(x));
}

LinearMap solve_antipode(const AlgebraShape& shape, const LinearMap& coproduct, const Functional& counit) {
  const int d = shape.dim();
  auto basis = canonical_basis(shape);
  Vec unit = Element::identity(shape).coords();
  // m(S (x) id)Delta(f_k) = eps(f_k) 1: linear system in the d*d unknowns of S.
  Mat system = Mat::Zero(d * d, d * d);
  Vec rhs = Vec::Zero(d * d);
  for (int k = 0; k < d; ++k) {
    Vec dc = coproduct.apply(basis[k]).coords();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        cx c = dc[tensor_basis_index(shape, shape, i, j)];
        if (c == cx(0.0)) continue;
        // term S(f_i) f_j: contributes c * S_{a i} * coords(f_a f_j)
        for (int a = 0; a < d; ++a) {
          Vec prod = (basis[a] * basis[j]).coords();
          for (int r = 0; r < d; ++r) system(k * d + r, a * d + i) += c * prod[r];
        }
      }
    for (int r = 0; r < d; ++r) rhs[k * d + r] = counit(basis[k]) * unit[r];
  }
  Vec s = system.colPivHouseholderQr().solve(rhs);
  if ((system * s - rhs).norm() > 1e-8)
    throw std::runtime_error("solve_antipode: convolution inverse of the identity does not exist");
  Mat coeff(d, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i) coeff(a, i) = s[a * d + i];
  return LinearMap(shape, shape, coeff);
}

QuantumGroupData dual_as_quantum_group(const DualAlgebra& dual, double tol) {
  AbstractIdentification id = abstractize(dual.span, tol);
  const int m = dual.span.dim();
  const AlgebraShape& s = id.shape;
  if (s.dim() != m) throw std::runtime_error("dual_as_quantum_group: abstract dimension mismatch");
  // abstract images of the span basis
  std::vector<Element> abs_basis;
  double res = 0.0;
  for (int k = 0; k < m; ++k) {
    double r = 0.0;
    abs_basis.push_back(id.to_abstract(dual.span.basis_op(k), &r));
    res = std::max(res, r);
  }
  if (res > 1e-7) throw std::runtime_error("dual_as_quantum_group: span does not match abstract algebra");
  // coproduct on abstract canonical basis through the span coordinates
  std::vector<Element> cop_values;
  Vec eps_row = Vec::Zero(m);
  AlgebraShape ss = s.tensor(s);
  auto units = canonical_basis(s);
  for (int k = 0; k < m; ++k) {
    Vec c = dual.span.coords(id.to_operator(units[k]));
    Element out = Element::zero(ss);
    for (int i = 0; i < m; ++i) {
      if (std::abs(c[i]) == 0.0) continue;
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          cx w = c[i] * dual.coproduct_coords(p * m + q, i);
          if (w != cx(0.0)) out = out + w * abs_basis[p].tensor(abs_basis[q]);
        }
      eps_row[k] += c[i] * dual.counit_values[i];
    }
    cop_values.push_back(out);
  }
  QuantumGroupData qg;
  qg.shape = s;
  qg.coproduct = LinearMap::from_basis_values(s, ss, cop_values);
  qg.counit = Functional(s, eps_row);
  qg.antipode = solve_antipode(s, qg.coproduct, qg.counit);
  return qg;
}

}  // namespace qcp
