#ifndef QCP_SPANS_HPP
#define QCP_SPANS_HPP

#include <vector>

#include "qcp/algebra.hpp"

namespace qcp {

// Hilbert-Schmidt orthonormal basis of a span of operators on C^h, obtained by
// rank-revealing SVD of the generator matrix.  Vectorization is column-major.
class OperatorSpan {
 public:
  OperatorSpan() = default;
  static OperatorSpan from_generators(const std::vector<Mat>& gens, double rank_tol = 1e-8);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return h_; }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& basis_op(int k) const { return basis_.at(k); }

  // Coordinates of op in the orthonormal basis (HS inner products).
  Vec coords(const Mat& op) const;
  Mat from_coords(const Vec& c) const;
  // Distance from op to the span.
  double distance(const Mat& op) const;
  // Max distance over a list.
  double max_distance(const std::vector<Mat>& ops) const;
  // Orthogonal projection onto the span.
  Mat project(const Mat& op) const;

  // Subspace comparison: max over this basis of distance to other, symmetrized.
  double subspace_gap(const OperatorSpan& other) const;

  // Residual of closure under products / adjoints of basis operators.
  double product_closure_defect() const;
  double star_closure_defect() const;

 private:
  int h_ = 0;
  std::vector<Mat> basis_;
  Mat stacked_;  // h*h x dim, orthonormal columns
};

// Multimatrix block structure of a unital *-closed operator algebra given by
// an HS-orthonormal basis.  Deterministic (seeded random central element).
struct BlockStructure {
  std::vector<int> block_dims;       // sorted descending? no: in extraction order
  std::vector<Mat> central_projections;
  int center_dim = 0;
  double defect = 0.0;  // max residual of the certificates involved
};

BlockStructure block_structure(const OperatorSpan& algebra, double tol = 1e-7);

// *-isomorphism of a concretely represented multimatrix algebra onto its
// abstract form: matrix units E^{(i)}_{rs} in B(C^h) plus coordinate maps.
struct AbstractIdentification {
  AlgebraShape shape;
  std::vector<Mat> matrix_units;  // canonical order, one per abstract basis element
  double defect = 0.0;

  // Abstract element of `shape` from an operator in the algebra (least squares).
  Element to_abstract(const Mat& op, double* residual = nullptr) const;
  Mat to_operator(const Element& a) const;
};

AbstractIdentification abstractize(const OperatorSpan& algebra, double tol = 1e-7);

}  // namespace qcp

#endif
