#include "qcp/algebra.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcp {

AlgebraShape::AlgebraShape(std::vector<int> block_dims) : block_dims_(std::move(block_dims)) {
  if (block_dims_.empty()) throw std::invalid_argument("AlgebraShape: block list must be nonempty");
  for (int n : block_dims_) {
    if (n < 1) throw std::invalid_argument("AlgebraShape: block dimensions must be >= 1");
    offsets_.push_back(dim_);
    rep_offsets_.push_back(rep_dim_);
    dim_ += n * n;
    rep_dim_ += n;
  }
}

AlgebraShape AlgebraShape::tensor(const AlgebraShape& other) const {
  std::vector<int> dims;
  dims.reserve(block_dims_.size() * other.block_dims_.size());
  for (int n : block_dims_)
    for (int m : other.block_dims_) dims.push_back(n * m);
  return AlgebraShape(dims);
}

std::string AlgebraShape::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < block_dims_.size(); ++i) os << (i ? "," : "") << block_dims_[i];
  os << "]";
  return os.str();
}

Element::Element(AlgebraShape shape, std::vector<Mat> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != shape_.num_blocks())
    throw std::invalid_argument("Element: block count mismatch");
  for (int i = 0; i < shape_.num_blocks(); ++i) {
    int n = shape_.block_dim(i);
    if (blocks_[i].rows() != n || blocks_[i].cols() != n)
      throw std::invalid_argument("Element: block " + std::to_string(i) + " does not conform to shape");
  }
}

Element Element::zero(const AlgebraShape& shape) {
  std::vector<Mat> blocks;
  for (int i = 0; i < shape.num_blocks(); ++i)
    blocks.push_back(Mat::Zero(shape.block_dim(i), shape.block_dim(i)));
  return Element(shape, std::move(blocks));
}

Element Element::identity(const AlgebraShape& shape) {
  std::vector<Mat> blocks;
  for (int i = 0; i < shape.num_blocks(); ++i)
    blocks.push_back(Mat::Identity(shape.block_dim(i), shape.block_dim(i)));
  return Element(shape, std::move(blocks));
}

Element Element::from_coords(const AlgebraShape& shape, const Vec& coords) {
  if (coords.size() != shape.dim()) throw std::invalid_argument("from_coords: wrong length");
  std::vector<Mat> blocks;
  for (int i = 0; i < shape.num_blocks(); ++i) {
    int n = shape.block_dim(i), off = shape.block_offset(i);
    Mat b(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) b(r, c) = coords[off + r * n + c];
    blocks.push_back(std::move(b));
  }
  return Element(shape, std::move(blocks));
}

Vec Element::coords() const {
  Vec v(shape_.dim());
  for (int i = 0; i < shape_.num_blocks(); ++i) {
    int n = shape_.block_dim(i), off = shape_.block_offset(i);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v[off + r * n + c] = blocks_[i](r, c);
  }
  return v;
}

Element Element::operator+(const Element& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("Element+: shape mismatch");
  std::vector<Mat> blocks;
  for (int i = 0; i < num_blocks(); ++i) blocks.push_back(blocks_[i] + o.blocks_[i]);
  return Element(shape_, std::move(blocks));
}

Element Element::operator-(const Element& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("Element-: shape mismatch");
  std::vector<Mat> blocks;
  for (int i = 0; i < num_blocks(); ++i) blocks.push_back(blocks_[i] - o.blocks_[i]);
  return Element(shape_, std::move(blocks));
}

Element Element::operator*(const Element& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("Element*: shape mismatch");
  std::vector<Mat> blocks;
  for (int i = 0; i < num_blocks(); ++i) blocks.push_back(blocks_[i] * o.blocks_[i]);
  return Element(shape_, std::move(blocks));
}

Element Element::operator*(cx scalar) const {
  std::vector<Mat> blocks;
  for (const Mat& b : blocks_) blocks.push_back(scalar * b);
  return Element(shape_, std::move(blocks));
}

Element operator*(cx scalar, const Element& a) { return a * scalar; }

Element Element::star() const {
  std::vector<Mat> blocks;
  for (const Mat& b : blocks_) blocks.push_back(b.adjoint());
  return Element(shape_, std::move(blocks));
}

Element Element::tensor(const Element& o) const {
  AlgebraShape ts = shape_.tensor(o.shape_);
  std::vector<Mat> blocks;
  for (int i = 0; i < num_blocks(); ++i)
    for (int j = 0; j < o.num_blocks(); ++j) blocks.push_back(kron(blocks_[i], o.blocks_[j]));
  return Element(ts, std::move(blocks));
}

double Element::op_norm() const {
  double m = 0.0;
  for (const Mat& b : blocks_) {
    if (b.rows() == 1) {
      m = std::max(m, std::abs(b(0, 0)));
    } else {
      Eigen::JacobiSVD<Mat> svd(b);
      m = std::max(m, svd.singularValues()(0));
    }
  }
  return m;
}

double Element::frob_norm() const {
  double s = 0.0;
  for (const Mat& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

cx Element::hs_trace() const {
  cx t = 0.0;
  for (const Mat& b : blocks_) t += b.trace();
  return t;
}

double Element::hermiticity_defect() const {
  double d = 0.0;
  for (const Mat& b : blocks_) d = std::max(d, (b - b.adjoint()).norm());
  return d;
}

bool Element::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

std::vector<Element> canonical_basis(const AlgebraShape& shape) {
  std::vector<Element> basis;
  basis.reserve(shape.dim());
  for (int i = 0; i < shape.num_blocks(); ++i) {
    int n = shape.block_dim(i);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Element e = Element::zero(shape);
        e.block(i)(r, c) = 1.0;
        basis.push_back(std::move(e));
      }
  }
  return basis;
}

LinearMap::LinearMap(AlgebraShape domain, AlgebraShape codomain, Mat coefficients)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), coeff_(std::move(coefficients)) {
  if (coeff_.rows() != codomain_.dim() || coeff_.cols() != domain_.dim())
    throw std::invalid_argument("LinearMap: coefficient matrix does not match shapes");
}

LinearMap LinearMap::identity(const AlgebraShape& shape) {
  return LinearMap(shape, shape, Mat::Identity(shape.dim(), shape.dim()));
}

LinearMap LinearMap::zero(const AlgebraShape& domain, const AlgebraShape& codomain) {
  return LinearMap(domain, codomain, Mat::Zero(codomain.dim(), domain.dim()));
}

LinearMap LinearMap::from_basis_values(const AlgebraShape& domain, const AlgebraShape& codomain,
                                       const std::vector<Element>& values) {
  if (static_cast<int>(values.size()) != domain.dim())
    throw std::invalid_argument("from_basis_values: need one value per basis element");
  Mat coeff(codomain.dim(), domain.dim());
  for (int k = 0; k < domain.dim(); ++k) coeff.col(k) = values[k].coords();
  return LinearMap(domain, codomain, std::move(coeff));
}

Element LinearMap::apply(const Element& a) const {
  if (a.shape() != domain_) throw std::invalid_argument("LinearMap::apply: shape mismatch");
  return Element::from_coords(codomain_, coeff_ * a.coords());
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.codomain_ != domain_) throw std::invalid_argument("compose: shape mismatch");
  return LinearMap(inner.domain_, codomain_, coeff_ * inner.coeff_);
}

LinearMap LinearMap::tensor(const LinearMap& other) const {
  const Mat td = tensor_basis_permutation(domain_, other.domain_);
  const Mat tc = tensor_basis_permutation(codomain_, other.codomain_);
  return LinearMap(domain_.tensor(other.domain_), codomain_.tensor(other.codomain_),
                   tc * kron(coeff_, other.coeff_) * td.adjoint());
}

double LinearMap::unital_defect() const {
  return (apply(Element::identity(domain_)) - Element::identity(codomain_)).frob_norm();
}

double LinearMap::multiplicativity_defect() const {
  auto basis = canonical_basis(domain_);
  double d = 0.0;
  for (const auto& a : basis)
    for (const auto& b : basis)
      d = std::max(d, (apply(a * b) - apply(a) * apply(b)).frob_norm());
  return d;
}

double LinearMap::star_defect() const {
  auto basis = canonical_basis(domain_);
  double d = 0.0;
  for (const auto& a : basis) d = std::max(d, (apply(a.star()) - apply(a).star()).frob_norm());
  return d;
}

double LinearMap::hermitian_preserving_defect() const {
  auto basis = canonical_basis(domain_);
  double d = 0.0;
  for (const auto& a : basis) {
    Element h = a + a.star();
    d = std::max(d, apply(h).hermiticity_defect());
  }
  return d;
}

int LinearMap::kernel_dim(double rank_tol) const {
  Eigen::JacobiSVD<Mat> svd(coeff_);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return static_cast<int>(coeff_.cols());
  double cutoff = rank_tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return static_cast<int>(coeff_.cols()) - rank;
}

Functional::Functional(AlgebraShape shape, Vec row) : shape_(std::move(shape)), row_(std::move(row)) {
  if (row_.size() != shape_.dim()) throw std::invalid_argument("Functional: row length mismatch");
}

Functional Functional::from_density(const Element& density) {
  // phi(a) = hs_trace(rho* a); in coordinates the row is conj(coords(rho))
  // reordered so that row . coords(a) = sum conj(rho_rc) a_rc.
  return Functional(density.shape(), density.coords().conjugate());
}

cx Functional::operator()(const Element& a) const {
  if (a.shape() != shape_) throw std::invalid_argument("Functional: shape mismatch");
  return row_.transpose() * a.coords();
}

Element Functional::density() const { return Element::from_coords(shape_, row_.conjugate()); }

double Functional::state_defect(double tol) const {
  Element rho = density();
  double defect = std::abs((*this)(Element::identity(shape_)) - cx(1.0));
  for (int i = 0; i < shape_.num_blocks(); ++i) {
    Mat h = 0.5 * (rho.block(i) + rho.block(i).adjoint());
    defect = std::max(defect, (rho.block(i) - h).norm());
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    double mn = es.eigenvalues().minCoeff();
    if (mn < -tol) defect = std::max(defect, -mn);
  }
  return defect;
}

double Functional::character_defect() const {
  auto basis = canonical_basis(shape_);
  double d = std::abs((*this)(Element::identity(shape_)) - cx(1.0));
  for (const auto& a : basis)
    for (const auto& b : basis) d = std::max(d, std::abs((*this)(a * b) - (*this)(a) * (*this)(b)));
  return d;
}

Functional Functional::tensor(const Functional& other) const {
  // value on f_k (x) g_l is row_k * other_row_l
  Vec out = Vec::Zero(shape_.tensor(other.shape_).dim());
  for (int k = 0; k < shape_.dim(); ++k)
    for (int l = 0; l < other.shape_.dim(); ++l)
      out[tensor_basis_index(shape_, other.shape_, k, l)] = row_[k] * other.row_[l];
  return Functional(shape_.tensor(other.shape_), out);
}

cx StateFunctional::operator()(const Element& a) const {
  return (density.star() * a).hs_trace();
}

Functional StateFunctional::functional() const { return Functional::from_density(density); }

double StateFunctional::state_defect(double tol) const {
  return Functional::from_density(density).state_defect(tol);
}

Mat represent(const AlgebraShape& shape, const Element& a) {
  if (a.shape() != shape) throw std::invalid_argument("represent: shape mismatch");
  Mat m = Mat::Zero(shape.rep_dim(), shape.rep_dim());
  for (int i = 0; i < shape.num_blocks(); ++i) {
    int n = shape.block_dim(i), off = shape.rep_offset(i);
    m.block(off, off, n, n) = a.block(i);
  }
  return m;
}

Element represent_pullback(const AlgebraShape& shape, const Mat& op, double* residual) {
  if (op.rows() != shape.rep_dim() || op.cols() != shape.rep_dim())
    throw std::invalid_argument("represent_pullback: operator size mismatch");
  Element e = Element::zero(shape);
  Mat recon = Mat::Zero(op.rows(), op.cols());
  for (int i = 0; i < shape.num_blocks(); ++i) {
    int n = shape.block_dim(i), off = shape.rep_offset(i);
    e.block(i) = op.block(off, off, n, n);
    recon.block(off, off, n, n) = e.block(i);
  }
  if (residual) *residual = (op - recon).norm();
  return e;
}

double min_eigenvalue_hermitian(const Mat& C) {
  const int n = static_cast<int>(C.rows());
  Mat H = 0.5 * (C + C.adjoint());
  if (n <= 600) {
    Eigen::SelfAdjointEigenSolver<Mat> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  // Large case: Gershgorin shift to make H + sI positive definite, then a few
  // inverse-power iterations off the Cholesky factor give the bottom eigenvalue.
  double shift = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) row += std::abs(H(i, j));
    shift = std::max(shift, row - H(i, i).real());
  }
  shift += 1.0;
  Eigen::LLT<Mat> llt(H + shift * Mat::Identity(n, n));
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Mat> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  Vec v = Vec::Ones(n).normalized();
  double lam = 0.0;
  for (int it = 0; it < 60; ++it) {
    Vec w = llt.solve(v);
    w.normalize();
    double next = (w.adjoint() * (H * w))(0).real();
    if (it > 4 && std::abs(next - lam) < 1e-13 * std::max(1.0, std::abs(next))) {
      lam = next;
      break;
    }
    lam = next;
    v = w;
  }
  return lam;
}

namespace {

// Trace-preserving conditional expectation of B(C^rep) onto the represented
// subalgebra: keep diagonal blocks, zero the rest.
Mat compress_to_blocks(const AlgebraShape& shape, const Mat& op) {
  Mat out = Mat::Zero(op.rows(), op.cols());
  for (int i = 0; i < shape.num_blocks(); ++i) {
    int n = shape.block_dim(i), off = shape.rep_offset(i);
    out.block(off, off, n, n) = op.block(off, off, n, n);
  }
  return out;
}

}  // namespace

ChoiReport choi_cp_check(const LinearMap& L, const Tol& tol) {
  const AlgebraShape& dom = L.domain();
  const AlgebraShape& cod = L.codomain();
  const int din = dom.rep_dim(), dout = cod.rep_dim();
  auto apply_unit = [&](int u, int v) {
    Mat e = Mat::Zero(din, din);
    e(u, v) = 1.0;
    double res = 0.0;
    Element a = represent_pullback(dom, compress_to_blocks(dom, e), &res);
    return represent(cod, L.apply(a));
  };
  Mat unit_image = represent(cod, L.apply(Element::identity(dom)));
  return choi_cp_check_operator(din, dout, apply_unit, unit_image, tol);
}

ChoiReport choi_cp_check_operator(int dim_in, int dim_out,
                                  const std::function<Mat(int, int)>& apply_unit,
                                  const Mat& unit_image, const Tol& tol) {
  ChoiReport rep;
  const int d = dim_in * dim_out;
  rep.choi = Mat::Zero(d, d);
  for (int u = 0; u < dim_in; ++u)
    for (int v = 0; v < dim_in; ++v) {
      Mat img = apply_unit(u, v);
      rep.choi.block(u * dim_out, v * dim_out, dim_out, dim_out) = img;
    }
  rep.min_eig = min_eigenvalue_hermitian(rep.choi);
  rep.is_cp = rep.min_eig >= -tol.cp;
  rep.unital_defect = (unit_image - Mat::Identity(dim_out, dim_out)).norm();
  rep.is_unital = rep.unital_defect <= tol.structural;
  // ||L||_cb = ||L(1)|| for completely positive maps.
  Eigen::JacobiSVD<Mat> svd(unit_image);
  double n1 = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  rep.is_contractive = rep.is_cp && n1 <= 1.0 + tol.structural;
  return rep;
}

int tensor_basis_index(const AlgebraShape& a, const AlgebraShape& b, int k, int l) {
  // locate blocks and in-block positions
  int bi = 0;
  while (bi + 1 < a.num_blocks() && a.block_offset(bi + 1) <= k) ++bi;
  int bj = 0;
  while (bj + 1 < b.num_blocks() && b.block_offset(bj + 1) <= l) ++bj;
  int n = a.block_dim(bi), m = b.block_dim(bj);
  int ka = k - a.block_offset(bi), lb = l - b.block_offset(bj);
  int r = ka / n, c = ka % n, s = lb / m, t = lb % m;
  AlgebraShape ts = a.tensor(b);
  int block_index = bi * b.num_blocks() + bj;
  int row = r * m + s, col = c * m + t;
  return ts.block_offset(block_index) + row * (n * m) + col;
}

Mat tensor_basis_permutation(const AlgebraShape& a, const AlgebraShape& b) {
  AlgebraShape ts = a.tensor(b);
  Mat t = Mat::Zero(ts.dim(), a.dim() * b.dim());
  for (int k = 0; k < a.dim(); ++k)
    for (int l = 0; l < b.dim(); ++l) t(tensor_basis_index(a, b, k, l), k * b.dim() + l) = 1.0;
  return t;
}

Element leg_embed(const Element& x, const std::vector<AlgebraShape>& source_legs,
                  const std::vector<int>& legs, const std::vector<AlgebraShape>& target_legs) {
  if (source_legs.size() != legs.size()) throw std::invalid_argument("leg_embed: leg count mismatch");
  for (size_t j = 0; j < legs.size(); ++j) {
    int t = legs[j];
    if (t < 1 || t > static_cast<int>(target_legs.size()))
      throw std::invalid_argument("leg_embed: target leg out of range");
    if (!(source_legs[j] == target_legs[t - 1]))
      throw std::invalid_argument("leg_embed: shape mismatch on leg " + std::to_string(t));
  }
  PureTensorExpansion ex = expand_pure_tensors(x, source_legs);
  AlgebraShape full = target_legs[0];
  for (size_t j = 1; j < target_legs.size(); ++j) full = full.tensor(target_legs[j]);
  Element out = Element::zero(full);
  std::vector<std::vector<Element>> bases;
  for (const auto& s : target_legs) bases.push_back(canonical_basis(s));
  for (size_t t = 0; t < ex.coeff.size(); ++t) {
    std::vector<Element> factors;
    for (size_t j = 0; j < target_legs.size(); ++j) factors.push_back(Element::identity(target_legs[j]));
    for (size_t j = 0; j < legs.size(); ++j) factors[legs[j] - 1] = bases[legs[j] - 1][ex.index[t][j]];
    Element term = factors[0];
    for (size_t j = 1; j < factors.size(); ++j) term = term.tensor(factors[j]);
    out = out + ex.coeff[t] * term;
  }
  return out;
}

PureTensorExpansion expand_pure_tensors(const Element& x, const std::vector<AlgebraShape>& legs) {
  if (legs.empty()) throw std::invalid_argument("expand_pure_tensors: no legs");
  AlgebraShape full = legs[0];
  for (size_t j = 1; j < legs.size(); ++j) full = full.tensor(legs[j]);
  if (x.shape() != full) throw std::invalid_argument("expand_pure_tensors: shape mismatch");
  // Successively split off the first leg using the tensor basis permutation.
  PureTensorExpansion out;
  struct Partial {
    cx coeff;
    std::vector<int> index;
    Vec rest;  // coordinates in the remaining tensor algebra
  };
  std::vector<Partial> work{{cx(1.0), {}, x.coords()}};
  std::vector<AlgebraShape> rem(legs.begin(), legs.end());
  while (rem.size() > 1) {
    AlgebraShape head = rem[0];
    AlgebraShape tail = rem[1];
    for (size_t j = 2; j < rem.size(); ++j) tail = tail.tensor(rem[j]);
    std::vector<Partial> next;
    for (auto& p : work) {
      // coords in head (x) tail; invert the basis permutation index map
      for (int k = 0; k < head.dim(); ++k) {
        Vec rest = Vec::Zero(tail.dim());
        bool nonzero = false;
        for (int l = 0; l < tail.dim(); ++l) {
          cx v = p.rest[tensor_basis_index(head, tail, k, l)];
          rest[l] = v;
          if (std::abs(v) > 0.0) nonzero = true;
        }
        if (!nonzero) continue;
        Partial q;
        q.coeff = p.coeff;
        q.index = p.index;
        q.index.push_back(k);
        q.rest = std::move(rest);
        next.push_back(std::move(q));
      }
    }
    work = std::move(next);
    rem.erase(rem.begin());
  }
  for (auto& p : work) {
    for (int l = 0; l < rem[0].dim(); ++l) {
      if (std::abs(p.rest[l]) == 0.0) continue;
      out.coeff.push_back(p.coeff * p.rest[l]);
      auto idx = p.index;
      idx.push_back(l);
      out.index.push_back(std::move(idx));
    }
  }
  return out;
}

Mat Rep::apply(const Element& a) const {
  if (a.shape() != shape) throw std::invalid_argument("Rep::apply: shape mismatch");
  Mat out = Mat::Zero(space_dim, space_dim);
  Vec c = a.coords();
  for (int k = 0; k < c.size(); ++k)
    if (std::abs(c[k]) > 0) out += c[k] * basis_ops[k];
  return out;
}

double Rep::multiplicativity_defect() const {
  auto basis = canonical_basis(shape);
  double d = 0.0;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      d = std::max(d, (apply(basis[i] * basis[j]) - basis_ops[i] * basis_ops[j]).norm());
  return d;
}

double Rep::star_defect() const {
  auto basis = canonical_basis(shape);
  double d = 0.0;
  for (size_t i = 0; i < basis.size(); ++i)
    d = std::max(d, (apply(basis[i].star()) - basis_ops[i].adjoint()).norm());
  return d;
}

Rep block_rep(const AlgebraShape& shape) {
  Rep r;
  r.shape = shape;
  r.space_dim = shape.rep_dim();
  for (const Element& e : canonical_basis(shape)) r.basis_ops.push_back(represent(shape, e));
  return r;
}

Rep tensor_rep(const Rep& ra, const Rep& rb) {
  Rep r;
  r.shape = ra.shape.tensor(rb.shape);
  r.space_dim = ra.space_dim * rb.space_dim;
  r.basis_ops.resize(r.shape.dim());
  for (int k = 0; k < ra.shape.dim(); ++k)
    for (int l = 0; l < rb.shape.dim(); ++l)
      r.basis_ops[tensor_basis_index(ra.shape, rb.shape, k, l)] = kron(ra.basis_ops[k], rb.basis_ops[l]);
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat flip_unitary(int dim_left, int dim_right) {
  Mat s = Mat::Zero(dim_left * dim_right, dim_left * dim_right);
  for (int i = 0; i < dim_left; ++i)
    for (int j = 0; j < dim_right; ++j) s(j * dim_left + i, i * dim_right + j) = 1.0;
  return s;
}

cx Rng::scalar() { return cx(dist_(gen_), dist_(gen_)) / std::sqrt(2.0); }

Mat Rng::matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = scalar();
  return m;
}

Vec Rng::vector(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = scalar();
  return v;
}

Element Rng::element(const AlgebraShape& shape) {
  std::vector<Mat> blocks;
  for (int i = 0; i < shape.num_blocks(); ++i) blocks.push_back(matrix(shape.block_dim(i), shape.block_dim(i)));
  return Element(shape, std::move(blocks));
}

Element Rng::hermitian_element(const AlgebraShape& shape) {
  Element e = element(shape);
  return 0.5 * (e + e.star());
}

}  // namespace qcp
