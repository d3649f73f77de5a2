#ifndef QCP_ALGEBRA_HPP
#define QCP_ALGEBRA_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcp {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Default tolerances.  Structural identities: Frobenius residual, absolute,
// inputs normalized to unit operator norm.  CP certification: Choi minimum
// eigenvalue >= -cp.  Rank extraction: singular values below rank*(largest)
// are treated as zero.
struct Tol {
  double structural = 1e-9;
  double cp = 1e-9;
  double rank = 1e-8;
};

// Multimatrix algebra: finite direct sum of full complex matrix blocks.
class AlgebraShape {
 public:
  AlgebraShape() = default;
  explicit AlgebraShape(std::vector<int> block_dims);

  const std::vector<int>& blocks() const { return block_dims_; }
  int num_blocks() const { return static_cast<int>(block_dims_.size()); }
  int block_dim(int i) const { return block_dims_.at(i); }
  // Linear dimension sum n_i^2.
  int dim() const { return dim_; }
  // Dimension sum n_i of the block-diagonal representation space.
  int rep_dim() const { return rep_dim_; }
  // Offset of block i in the canonical coordinate vector.
  int block_offset(int i) const { return offsets_.at(i); }
  int rep_offset(int i) const { return rep_offsets_.at(i); }

  bool operator==(const AlgebraShape& o) const { return block_dims_ == o.block_dims_; }
  bool operator!=(const AlgebraShape& o) const { return !(*this == o); }

  // Blocks n_i * m_j in lexicographic (i, j) order.
  AlgebraShape tensor(const AlgebraShape& other) const;

  std::string to_string() const;

 private:
  std::vector<int> block_dims_;
  std::vector<int> offsets_;
  std::vector<int> rep_offsets_;
  int dim_ = 0;
  int rep_dim_ = 0;
};

// Element of a multimatrix algebra: one complex matrix per block.
class Element {
 public:
  Element() = default;
  Element(AlgebraShape shape, std::vector<Mat> blocks);
  static Element zero(const AlgebraShape& shape);
  static Element identity(const AlgebraShape& shape);
  // Inverse of coords(): canonical order is blocks in declaration order,
  // row-major within a block.
  static Element from_coords(const AlgebraShape& shape, const Vec& coords);

  const AlgebraShape& shape() const { return shape_; }
  const Mat& block(int i) const { return blocks_.at(i); }
  Mat& block(int i) { return blocks_.at(i); }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  Vec coords() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // blockwise product
  Element operator*(cx scalar) const;
  Element star() const;  // blockwise conjugate transpose
  Element tensor(const Element& o) const;

  double op_norm() const;    // max over blocks of largest singular value
  double frob_norm() const;  // Hilbert-Schmidt norm over all blocks
  // HS trace sum_i tr(block_i); pairing <a,b> = trace(a* b).
  cx hs_trace() const;

  bool is_hermitian(double tol) const;
  double hermiticity_defect() const;

 private:
  AlgebraShape shape_;
  std::vector<Mat> blocks_;
};

Element operator*(cx scalar, const Element& a);

// Canonical basis: matrix units e^{(i)}_{rs}, blocks in order, row-major
// within a block.  List length = shape.dim().
std::vector<Element> canonical_basis(const AlgebraShape& shape);

enum class Flag { Unchecked, Asserted, Refuted };

struct DeclaredProperties {
  Flag hermitian_preserving = Flag::Unchecked;
  Flag unital = Flag::Unchecked;
  Flag star_homomorphic = Flag::Unchecked;
  Flag completely_positive = Flag::Unchecked;
};

// Linear map between multimatrix algebras, stored as the coefficient matrix
// relative to the canonical bases (codomain dim x domain dim).
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(AlgebraShape domain, AlgebraShape codomain, Mat coefficients);

  static LinearMap identity(const AlgebraShape& shape);
  static LinearMap zero(const AlgebraShape& domain, const AlgebraShape& codomain);
  // Map defined by its values on the canonical basis of the domain.
  static LinearMap from_basis_values(const AlgebraShape& domain, const AlgebraShape& codomain,
                                     const std::vector<Element>& values);

  const AlgebraShape& domain() const { return domain_; }
  const AlgebraShape& codomain() const { return codomain_; }
  const Mat& coefficients() const { return coeff_; }
  DeclaredProperties& props() { return props_; }
  const DeclaredProperties& props() const { return props_; }

  Element apply(const Element& a) const;
  LinearMap compose(const LinearMap& inner) const;  // this o inner
  LinearMap tensor(const LinearMap& other) const;

  // Residual diagnostics (0 = exact).
  double unital_defect() const;
  double multiplicativity_defect() const;  // max over basis pairs, normalized
  double star_defect() const;
  double hermitian_preserving_defect() const;
  // Dimension of the kernel at the rank tolerance.
  int kernel_dim(double rank_tol) const;

 private:
  AlgebraShape domain_, codomain_;
  Mat coeff_;
  DeclaredProperties props_;
};

// Functional on a multimatrix algebra as a coefficient row vector;
// phi(a) = row . coords(a).
class Functional {
 public:
  Functional() = default;
  Functional(AlgebraShape shape, Vec row);
  // phi(a) = hs_trace(density.star() * a).
  static Functional from_density(const Element& density);

  const AlgebraShape& shape() const { return shape_; }
  const Vec& row() const { return row_; }
  cx operator()(const Element& a) const;

  // The unique element rho with phi(a) = hs_trace(rho* a).
  Element density() const;
  // 0 iff all blockwise density eigenvalues >= -tol and phi(1) = 1.
  double state_defect(double tol) const;
  double character_defect() const;  // multiplicativity on basis pairs
  Functional tensor(const Functional& other) const;

 private:
  AlgebraShape shape_;
  Vec row_;
};

// State given by a positive density: phi(a) = hs_trace(rho* a), phi(1) = 1.
struct StateFunctional {
  AlgebraShape shape;
  Element density;

  cx operator()(const Element& a) const;
  Functional functional() const;
  double state_defect(double tol) const;
};

// Faithful block-diagonal representation on C^{rep_dim}: e^{(i)}_{rs} goes to
// the corresponding block matrix unit.
Mat represent(const AlgebraShape& shape, const Element& a);
// Pull an operator in the image of represent back to an Element; the optional
// residual receives the distance to the represented subalgebra.
Element represent_pullback(const AlgebraShape& shape, const Mat& op, double* residual = nullptr);

// Complete positivity certification via the Choi matrix of the canonical
// extension L~ = L o E to the full matrix algebra of the representation
// space (E = trace conditional expectation onto the represented domain).
struct ChoiReport {
  Mat choi;
  double min_eig = 0.0;
  bool is_cp = false;
  bool is_unital = false;
  bool is_contractive = false;
  double unital_defect = 0.0;
};

ChoiReport choi_cp_check(const LinearMap& L, const Tol& tol = {});

// Same certification for a map between operator spaces given by its action on
// full matrix units of B(C^{dim_in}); apply(e_uv) must return the image
// operator on C^{dim_out}.  unit_image = L(I) for the unitality check.
ChoiReport choi_cp_check_operator(int dim_in, int dim_out,
                                  const std::function<Mat(int, int)>& apply_unit,
                                  const Mat& unit_image, const Tol& tol = {});

// Hermitian PSD test: min eigenvalue of C (LLT fast path, exact eigensolve
// fallback on failure or small dims).
double min_eigenvalue_hermitian(const Mat& C);

// --- tensor-leg utilities ---------------------------------------------------

// Basis-order permutation: index in canonical basis of A(x)B of f_k (x) g_l.
int tensor_basis_index(const AlgebraShape& a, const AlgebraShape& b, int k, int l);
// Permutation matrix T with T[:, k*dim(B)+l] = e_{tensor_basis_index(k,l)}.
Mat tensor_basis_permutation(const AlgebraShape& a, const AlgebraShape& b);

// Embed an element x of S_1 (x) ... (x) S_k into the algebra T_1 (x) ... (x) T_m
// placing leg j of x on target leg legs[j] (1-based); remaining legs carry the
// identity.  Requires S_j == T_{legs[j]}.
Element leg_embed(const Element& x, const std::vector<AlgebraShape>& source_legs,
                  const std::vector<int>& legs, const std::vector<AlgebraShape>& target_legs);

// Expand an element of the tensor algebra with the given legs into a sum of
// pure tensors sum_k c_k (x)_j basis_{j,k}; returned as coordinate list per leg.
struct PureTensorExpansion {
  // term t: coefficient and one canonical-basis index per leg
  std::vector<cx> coeff;
  std::vector<std::vector<int>> index;  // [term][leg]
};
PureTensorExpansion expand_pure_tensors(const Element& x, const std::vector<AlgebraShape>& legs);

// Concrete representation of a multimatrix algebra: one operator per
// canonical basis element, on a space of dimension space_dim.
struct Rep {
  AlgebraShape shape;
  int space_dim = 0;
  std::vector<Mat> basis_ops;

  Mat apply(const Element& a) const;
  double multiplicativity_defect() const;
  double star_defect() const;
};

Rep block_rep(const AlgebraShape& shape);
// Representation of A (x) B on the tensor product of the two spaces.
Rep tensor_rep(const Rep& ra, const Rep& rb);

// --- misc -------------------------------------------------------------------

Mat kron(const Mat& a, const Mat& b);
Mat flip_unitary(int dim_left, int dim_right);  // Sigma(u (x) v) = v (x) u

// Deterministic pseudo-random elements/matrices (complex standard normal).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  cx scalar();
  Mat matrix(int rows, int cols);
  Vec vector(int n);
  Element element(const AlgebraShape& shape);
  Element hermitian_element(const AlgebraShape& shape);

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace qcp

#endif
