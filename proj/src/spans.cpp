#include "qcp/spans.hpp"

#include <algorithm>
#include <map>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcp {

namespace {

Vec vectorize(const Mat& m) {
  Vec v(m.size());
  int k = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v[k++] = m(i, j);
  return v;
}

Mat unvectorize(const Vec& v, int h) {
  Mat m(h, h);
  int k = 0;
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < h; ++i) m(i, j) = v[k++];
  return m;
}

}  // namespace

OperatorSpan OperatorSpan::from_generators(const std::vector<Mat>& gens, double rank_tol) {
  if (gens.empty()) throw std::invalid_argument("OperatorSpan: no generators");
  OperatorSpan s;
  s.h_ = static_cast<int>(gens[0].rows());
  Mat g(s.h_ * s.h_, gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].rows() != s.h_ || gens[k].cols() != s.h_)
      throw std::invalid_argument("OperatorSpan: generator size mismatch");
    g.col(static_cast<int>(k)) = vectorize(gens[k]);
  }
  Eigen::JacobiSVD<Mat> svd(g, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() ? rank_tol * sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  s.stacked_ = svd.matrixU().leftCols(rank);
  for (int k = 0; k < rank; ++k) s.basis_.push_back(unvectorize(s.stacked_.col(k), s.h_));
  return s;
}

Vec OperatorSpan::coords(const Mat& op) const { return stacked_.adjoint() * vectorize(op); }

Mat OperatorSpan::from_coords(const Vec& c) const { return unvectorize(stacked_ * c, h_); }

double OperatorSpan::distance(const Mat& op) const {
  Vec v = vectorize(op);
  return (v - stacked_ * (stacked_.adjoint() * v)).norm();
}

double OperatorSpan::max_distance(const std::vector<Mat>& ops) const {
  double d = 0.0;
  for (const auto& op : ops) d = std::max(d, distance(op));
  return d;
}

Mat OperatorSpan::project(const Mat& op) const {
  return unvectorize(stacked_ * (stacked_.adjoint() * vectorize(op)), h_);
}

double OperatorSpan::subspace_gap(const OperatorSpan& other) const {
  double d = 0.0;
  for (const auto& b : basis_) d = std::max(d, other.distance(b));
  for (const auto& b : other.basis_) d = std::max(d, distance(b));
  return d;
}

double OperatorSpan::product_closure_defect() const {
  double d = 0.0;
  for (const auto& a : basis_)
    for (const auto& b : basis_) d = std::max(d, distance(a * b));
  return d;
}

double OperatorSpan::star_closure_defect() const {
  double d = 0.0;
  for (const auto& a : basis_) d = std::max(d, distance(a.adjoint()));
  return d;
}

BlockStructure block_structure(const OperatorSpan& algebra, double tol) {
  BlockStructure out;
  const int d = algebra.dim();
  const int h = algebra.ambient_dim();
  // Center: elements commuting with every basis operator.  Nullspace of the
  // accumulated Gram of the commutator maps, one basis operator at a time.
  Mat gram = Mat::Zero(d, d);
  {
    Mat a_k(h * h, d);
    for (int k = 0; k < d; ++k) {
      for (int a = 0; a < d; ++a) {
        Mat c = algebra.basis_op(a) * algebra.basis_op(k) - algebra.basis_op(k) * algebra.basis_op(a);
        int idx = 0;
        for (int j = 0; j < h; ++j)
          for (int i = 0; i < h; ++i) a_k(idx++, a) = c(i, j);
      }
      gram += a_k.adjoint() * a_k;
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> ges(gram);
  double scale = std::sqrt(std::max(0.0, ges.eigenvalues().maxCoeff()));
  std::vector<Vec> center_coords;
  for (int i = 0; i < d; ++i) {
    double s = std::sqrt(std::max(0.0, ges.eigenvalues()(i)));
    if (scale == 0.0 || s <= tol * std::max(1.0, scale)) center_coords.push_back(ges.eigenvectors().col(i));
  }
  out.center_dim = static_cast<int>(center_coords.size());
  if (out.center_dim == 0) throw std::runtime_error("block_structure: unital algebra has empty center");

  // Random Hermitian central element; its spectral projections are the
  // minimal central projections when eigenvalues are distinct per block.
  Rng rng(0x5eedu);
  Mat c = Mat::Zero(h, h);
  for (const auto& cc : center_coords) {
    Mat z = algebra.from_coords(cc);
    cx w = rng.scalar();
    c += w * z + std::conj(w) * z.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(c);
  std::vector<double> evs(es.eigenvalues().data(), es.eigenvalues().data() + h);
  double spread = std::max(1.0, std::abs(evs.back() - evs.front()));
  std::vector<std::pair<double, Mat>> groups;
  for (int i = 0; i < h; ++i) {
    Mat v = es.eigenvectors().col(i);
    if (!groups.empty() && std::abs(evs[i] - groups.back().first) < 1e-7 * spread) {
      groups.back().second += v * v.adjoint();
    } else {
      groups.push_back({evs[i], v * v.adjoint()});
    }
  }
  if (static_cast<int>(groups.size()) != out.center_dim)
    throw std::runtime_error("block_structure: spectral grouping does not match center dimension");
  for (auto& [ev, p] : groups) {
    out.defect = std::max(out.defect, (p * p - p).norm());
    out.defect = std::max(out.defect, algebra.distance(p));
    out.central_projections.push_back(p);
    // dim(p A p) = n_i^2
    std::vector<Mat> corner;
    for (int k = 0; k < algebra.dim(); ++k) corner.push_back(p * algebra.basis_op(k) * p);
    OperatorSpan cs = OperatorSpan::from_generators(corner, 1e-8);
    int n2 = cs.dim();
    int n = static_cast<int>(std::lround(std::sqrt(double(n2))));
    if (n * n != n2) throw std::runtime_error("block_structure: corner dimension is not a square");
    out.block_dims.push_back(n);
  }
  return out;
}

AbstractIdentification abstractize(const OperatorSpan& algebra, double tol) {
  BlockStructure bs = block_structure(algebra, tol);
  AbstractIdentification id;
  id.defect = bs.defect;
  id.shape = AlgebraShape(bs.block_dims);
  Rng rng(0xab5u);
  for (size_t blk = 0; blk < bs.block_dims.size(); ++blk) {
    const Mat& p = bs.central_projections[blk];
    const int n = bs.block_dims[blk];
    const int h = algebra.ambient_dim();
    // Corner algebra p A p is a full matrix factor of size n (with multiplicity
    // in B(pH)).  Extract matrix units from the spectrum of a random Hermitian
    // corner element: n distinct eigenvalues with equal multiplicities.
    std::vector<Mat> corner;
    for (int k = 0; k < algebra.dim(); ++k) corner.push_back(p * algebra.basis_op(k) * p);
    OperatorSpan cs = OperatorSpan::from_generators(corner, 1e-8);
    Mat hrand = Mat::Zero(h, h);
    for (int k = 0; k < cs.dim(); ++k) {
      cx w = rng.scalar();
      hrand += w * cs.basis_op(k) + std::conj(w) * cs.basis_op(k).adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(hrand);
    // Cluster nonzero-eigenvalue eigenspaces restricted to pH.
    std::vector<double> evs(es.eigenvalues().data(), es.eigenvalues().data() + h);
    double spread = std::max(1.0, std::abs(evs.back() - evs.front()));
    std::vector<Mat> diag_projs;  // candidates for e_rr
    int i = 0;
    while (i < h) {
      int j = i;
      Mat q = Mat::Zero(h, h);
      while (j < h && std::abs(evs[j] - evs[i]) < 1e-7 * spread) {
        q += es.eigenvectors().col(j) * es.eigenvectors().col(j).adjoint();
        ++j;
      }
      // Keep only eigenspaces inside pH (skip the kernel outside the block).
      if ((q - p * q * p).norm() < 1e-6 && q.trace().real() > 0.5) diag_projs.push_back(q);
      i = j;
    }
    if (static_cast<int>(diag_projs.size()) != n)
      throw std::runtime_error("abstractize: expected " + std::to_string(n) + " diagonal projections, got " +
                               std::to_string(diag_projs.size()));
    // Partial isometries v_r: polar part of q_0 a q_r for a random algebra element.
    Mat arand = Mat::Zero(h, h);
    for (int k = 0; k < cs.dim(); ++k) arand += rng.scalar() * cs.basis_op(k);
    std::vector<Mat> v(n);
    v[0] = diag_projs[0];
    for (int r = 1; r < n; ++r) {
      Mat x = diag_projs[0] * arand * diag_projs[r];
      Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
      int rank = 0;
      for (int s = 0; s < svd.singularValues().size(); ++s)
        if (svd.singularValues()(s) > 1e-9 * svd.singularValues()(0)) ++rank;
      v[r] = svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).adjoint();
    }
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        Mat e = v[r].adjoint() * v[s];
        id.defect = std::max(id.defect, algebra.distance(e));
        id.matrix_units.push_back(e);
      }
  }
  // Certify the identification: units multiply like matrix units and sum to 1.
  Mat unit_sum = Mat::Zero(algebra.ambient_dim(), algebra.ambient_dim());
  auto basis = canonical_basis(id.shape);
  for (size_t k = 0; k < id.matrix_units.size(); ++k)
    for (size_t l = 0; l < id.matrix_units.size(); ++l) {
      Element prod = basis[k] * basis[l];
      Mat expect = Mat::Zero(algebra.ambient_dim(), algebra.ambient_dim());
      Vec c = prod.coords();
      for (int m = 0; m < c.size(); ++m)
        if (std::abs(c[m]) > 0) expect += c[m] * id.matrix_units[m];
      id.defect = std::max(id.defect, (id.matrix_units[k] * id.matrix_units[l] - expect).norm());
    }
  for (int k = 0; k < id.shape.dim(); ++k) {
    Vec c = Element::identity(id.shape).coords();
    if (std::abs(c[k]) > 0) unit_sum += c[k] * id.matrix_units[k];
  }
  id.defect = std::max(id.defect, (unit_sum - Mat::Identity(algebra.ambient_dim(), algebra.ambient_dim())).norm());
  return id;
}

Element AbstractIdentification::to_abstract(const Mat& op, double* residual) const {
  const int h = static_cast<int>(op.rows());
  Mat g(h * h, matrix_units.size());
  for (size_t k = 0; k < matrix_units.size(); ++k) {
    int idx = 0;
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < h; ++i) g(idx++, static_cast<int>(k)) = matrix_units[k](i, j);
  }
  Vec target(h * h);
  int idx = 0;
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < h; ++i) target[idx++] = op(i, j);
  Vec c = g.colPivHouseholderQr().solve(target);
  if (residual) *residual = (g * c - target).norm();
  return Element::from_coords(shape, c);
}

Mat AbstractIdentification::to_operator(const Element& a) const {
  Mat out = Mat::Zero(matrix_units[0].rows(), matrix_units[0].cols());
  Vec c = a.coords();
  for (int k = 0; k < c.size(); ++k)
    if (std::abs(c[k]) > 0) out += c[k] * matrix_units[k];
  return out;
}

}  // namespace qcp
