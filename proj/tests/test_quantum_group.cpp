#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcp/catalog.hpp"
#include "qcp/quantum_group.hpp"

using namespace qcp;

namespace {

struct Built {
  FiniteQuantumGroup qg;
  GnsData gns;
  MultiplicativeUnitary w;
};

Built build(const std::string& name) {
  QuantumGroupData data = catalog_quantum_group(name);
  Built b{make_quantum_group(data), {}, {}};
  b.gns = gns_construct(b.qg);
  b.w = build_w(b.qg, b.gns);
  return b;
}

const std::vector<std::string> kCatalogQg = {
    "fn_group:Z1", "fn_group:Z2",  "fn_group:Z3",  "fn_group:Z4",  "fn_group:Z2xZ2", "fn_group:S3",
    "group_alg:Z2", "group_alg:Z3", "group_alg:Z4", "group_alg:S3", "kac_paljutkin"};

}  // namespace

TEST_CASE("axioms hold for every catalog quantum group") {
  for (const auto& name : kCatalogQg) {
    CAPTURE(name);
    ValidationReport rep = validate_quantum_group(catalog_quantum_group(name));
    CHECK(rep.pass());
    CHECK(rep.max_residual() <= 1e-9);
  }
}

TEST_CASE("corrupted coproduct fails coassociativity") {
  ValidationReport rep = validate_quantum_group(catalog_quantum_group("corrupt:qg_z2"));
  CHECK_FALSE(rep.pass());
  CHECK(rep.find("coassociativity")->residual >= 0.05);
}

TEST_CASE("haar states") {
  SUBCASE("uniform weights on C(G)") {
    for (const auto& name : {"fn_group:Z2", "fn_group:Z3", "fn_group:S3"}) {
      CAPTURE(name);
      QuantumGroupData qg = catalog_quantum_group(name);
      StateFunctional h = compute_haar(qg);
      auto basis = canonical_basis(qg.shape);
      const double w = 1.0 / qg.shape.num_blocks();
      for (const auto& b : basis) CHECK(std::abs(h(b) - cx(w)) <= 1e-12);
    }
  }
  SUBCASE("group algebra haar is the trace at the identity") {
    FiniteGroup g = make_group_s3();
    QuantumGroupData qg = group_algebra(g);
    StateFunctional h = compute_haar(qg);
    // tau(lambda_g) = [g = e], evaluated through the Peter-Weyl picture
    for (int a = 0; a < g.order; ++a) {
      std::vector<Mat> blocks;
      for (const auto& rep : g.irreps) blocks.push_back(rep[a]);
      Element lam(qg.shape, blocks);
      CHECK(std::abs(h(lam) - cx(a == g.identity ? 1.0 : 0.0)) <= 1e-12);
    }
  }
  SUBCASE("kac-paljutkin block weights") {
    QuantumGroupData qg = catalog_quantum_group("kac_paljutkin");
    StateFunctional h = compute_haar(qg);
    auto basis = canonical_basis(qg.shape);
    // expected 1/8 per one-dimensional block, (1/2) * normalized trace on M2
    Element z4 = Element::zero(qg.shape);
    z4.block(4) = Mat::Identity(2, 2);
    CHECK(std::abs(h(z4) - cx(0.5)) <= 1e-10);
    for (int i = 0; i < 4; ++i) {
      Element zi = Element::zero(qg.shape);
      zi.block(i) = Mat::Identity(1, 1);
      CHECK(std::abs(h(zi) - cx(0.125)) <= 1e-10);
    }
    // traciality
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
      Element a = rng.element(qg.shape), b = rng.element(qg.shape);
      CHECK(std::abs(h(a * b) - h(b * a)) <= 1e-10);
    }
  }
  SUBCASE("kac-paljutkin is noncocommutative") {
    QuantumGroupData qg = catalog_quantum_group("kac_paljutkin");
    auto basis = canonical_basis(qg.shape);
    double asym = 0.0;
    for (const auto& b : basis) {
      Element d = qg.coproduct.apply(b);
      // flip the two legs
      PureTensorExpansion ex = expand_pure_tensors(d, {qg.shape, qg.shape});
      Element flip = Element::zero(d.shape());
      for (size_t t = 0; t < ex.coeff.size(); ++t)
        flip = flip + ex.coeff[t] * basis[ex.index[t][1]].tensor(basis[ex.index[t][0]]);
      asym = std::max(asym, (d - flip).frob_norm());
    }
    CHECK(asym > 0.1);
  }
}

TEST_CASE("gns construction") {
  for (const auto& name : kCatalogQg) {
    CAPTURE(name);
    Built b = build(name);
    auto basis = canonical_basis(b.qg.shape);
    // <Lambda(a), Lambda(b)> = haar(a* b)
    double res = 0.0;
    for (const auto& x : basis)
      for (const auto& y : basis) {
        cx lhs = b.gns.embed(x).adjoint() * b.gns.embed(y);
        res = std::max(res, std::abs(lhs - b.qg.haar(x.star() * y)));
      }
    CHECK(res <= 1e-9);
    CHECK(b.gns.pi.multiplicativity_defect() <= 1e-9);
    CHECK(b.gns.pi.star_defect() <= 1e-9);
    // rank of z_i H equals n_i^2
    for (int i = 0; i < b.qg.shape.num_blocks(); ++i) {
      Element zi = Element::zero(b.qg.shape);
      zi.block(i) = Mat::Identity(b.qg.shape.block_dim(i), b.qg.shape.block_dim(i));
      Mat p = b.gns.pi.apply(zi);
      int n = b.qg.shape.block_dim(i);
      CHECK(std::abs(p.trace().real() - n * n) <= 1e-9);
      CHECK((p * p - p).norm() <= 1e-9);
    }
  }
}

TEST_CASE("multiplicative unitary") {
  for (const auto& name : kCatalogQg) {
    CAPTURE(name);
    Built b = build(name);
    CHECK(b.w.unitarity_residual <= 1e-9);
    CHECK(b.w.pentagon_residual <= 1e-9);
    CHECK(b.w.coproduct_residual <= 1e-9);
    CHECK(b.w.central_commutation_residual <= 1e-9);
  }
}

TEST_CASE("w acts by translation for C(Z2)") {
  Built b = build("fn_group:Z2");
  // normalized point masses xi_g = sqrt(2) Lambda(delta_g) are the standard
  // basis; W(xi_g (x) xi_h) = xi_g (x) xi_{gh}
  const int d = 2;
  Mat expected = Mat::Zero(4, 4);
  FiniteGroup g = make_group_zn(2);
  for (int a = 0; a < d; ++a)
    for (int h = 0; h < d; ++h) expected(a * d + g.mult[a][h], a * d + h) = 1.0;
  // fix basis scaling: columns of lambda on the delta basis are multiples of unit vectors
  CHECK((b.w.w - expected).norm() <= 1e-9);
}

TEST_CASE("counit is the vector state of the counit block") {
  for (const auto& name : kCatalogQg) {
    CAPTURE(name);
    Built b = build(name);
    std::vector<int> f{b.qg.counit_block};
    Mat z = support_projection(b.qg, b.gns, f);
    CHECK(std::abs(z.trace().real() - 1.0) <= 1e-9);  // rank one
    // unit vector spanning z H
    Eigen::SelfAdjointEigenSolver<Mat> es(z);
    Vec eta = es.eigenvectors().col(b.gns.hilbert_dim - 1);
    auto basis = canonical_basis(b.qg.shape);
    double res = 0.0;
    for (size_t k = 0; k < basis.size(); ++k) {
      cx v = eta.adjoint() * b.gns.pi.basis_ops[k] * eta;
      res = std::max(res, std::abs(v - b.qg.counit(basis[k])));
    }
    CHECK(res <= 1e-9);
  }
}

TEST_CASE("support projections") {
  Built b = build("fn_group:S3");
  std::vector<int> all;
  for (int i = 0; i < b.qg.shape.num_blocks(); ++i) all.push_back(i);
  CHECK((support_projection(b.qg, b.gns, all) - Mat::Identity(6, 6)).norm() <= 1e-12);
  CHECK(std::abs(support_projection(b.qg, b.gns, {2}).trace().real() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(support_projection(b.qg, b.gns, {}), std::invalid_argument);
}

TEST_CASE("dual algebra") {
  SUBCASE("dual of C(Z2) is two-dimensional and commutative") {
    Built b = build("fn_group:Z2");
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    CHECK(dual.span.dim() == 2);
    CHECK(dual.product_closure_residual <= 1e-9);
    CHECK(dual.star_closure_residual <= 1e-9);
    CHECK(dual.unit_distance <= 1e-9);
    CHECK(dual.coproduct_residual <= 1e-9);
    double comm = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        comm = std::max(comm, (dual.span.basis_op(i) * dual.span.basis_op(j) -
                               dual.span.basis_op(j) * dual.span.basis_op(i))
                                  .norm());
    CHECK(comm <= 1e-9);
  }
  SUBCASE("dual of the S3 group algebra is six-dimensional and commutative") {
    Built b = build("group_alg:S3");
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    CHECK(dual.span.dim() == 6);
    double comm = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        comm = std::max(comm, (dual.span.basis_op(i) * dual.span.basis_op(j) -
                               dual.span.basis_op(j) * dual.span.basis_op(i))
                                  .norm());
    CHECK(comm <= 1e-9);
  }
  SUBCASE("kac-paljutkin dual has dimension 8 and the same block structure") {
    Built b = build("kac_paljutkin");
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    CHECK(dual.span.dim() == 8);
    BlockStructure bs = block_structure(dual.span);
    std::vector<int> dims = bs.block_dims;
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>({1, 1, 1, 1, 2}));
  }
}

TEST_CASE("dual of the dual has the dimension of the algebra") {
  for (const auto& name : {"fn_group:Z2", "group_alg:Z2", "kac_paljutkin"}) {
    CAPTURE(name);
    Built b = build(name);
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    QuantumGroupData dd = dual_as_quantum_group(dual);
    ValidationReport rep = validate_quantum_group(dd);
    CHECK(rep.pass());
    Built b2{make_quantum_group(dd), {}, {}};
    b2.gns = gns_construct(b2.qg);
    b2.w = build_w(b2.qg, b2.gns);
    DualAlgebra dual2 = build_dual(b2.qg, b2.gns, b2.w);
    CHECK(dual2.span.dim() == b.qg.shape.dim());
  }
}

TEST_CASE("dual elements") {
  SUBCASE("trivial group gives multiples of the identity") {
    Built b = build("fn_group:Z1");
    Vec v = Vec::Ones(1) * 2.0;
    Mat lam = dual_element(b.w.w, {v, v});
    CHECK(std::abs(lam(0, 0) - cx(4.0)) <= 1e-12);
  }
  SUBCASE("constant vector slice is the normalized translation sum") {
    Built b = build("fn_group:Z2");
    FiniteGroup g = make_group_zn(2);
    const int d = 2;
    Vec c = Vec::Ones(d) / std::sqrt(2.0);
    Mat lam = dual_element(b.w.w, {c, c});
    // independent expansion of the W action: translations xi_h -> xi_{gh}
    Mat expected = Mat::Zero(d, d);
    for (int a = 0; a < d; ++a)
      for (int h = 0; h < d; ++h) expected(g.mult[a][h], h) += 1.0 / d;
    CHECK((lam - expected).norm() <= 1e-12);
    Eigen::JacobiSVD<Mat> svd(lam);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-10) ++rank;
    CHECK(rank == 1);
  }
  SUBCASE("adjoint identity") {
    Built b = build("fn_group:S3");
    Rng rng(4);
    Vec xi = rng.vector(6), eta = rng.vector(6);
    Mat lhs = dual_element(b.w.w, {xi, eta}).adjoint();
    Mat rhs = dual_element(b.w.w.adjoint(), {eta, xi});
    CHECK((lhs - rhs).norm() <= 1e-12);
  }
}

TEST_CASE("convolution operators") {
  SUBCASE("dual haar vector state averages to the haar value") {
    Built b = build("fn_group:Z2");
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    // the dual Haar is a vector state at the counit-block vector
    Mat z = support_projection(b.qg, b.gns, {b.qg.counit_block});
    Eigen::SelfAdjointEigenSolver<Mat> es(z);
    Vec eta = es.eigenvectors().col(b.gns.hilbert_dim - 1);
    double res = 0.0;
    for (int k = 0; k < dual.span.dim(); ++k) {
      cx vs = eta.adjoint() * dual.span.basis_op(k) * eta;
      res = std::max(res, std::abs(vs - dual.haar_values[k]));
    }
    CHECK(res <= 1e-9);
    ConvolutionOperator t = convolution_t(dual, {eta, eta});
    // T_haar(x) = haar(x) 1
    Vec unit = dual.span.coords(Mat::Identity(2, 2));
    double tres = 0.0;
    for (int k = 0; k < dual.span.dim(); ++k) {
      Vec expect = dual.haar_values[k] * unit;
      tres = std::max(tres, (t.coords.col(k) - expect).norm());
    }
    CHECK(tres <= 1e-9);
  }
  SUBCASE("point mass at the identity projects onto the scalars") {
    Built b = build("fn_group:Z2");
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    Vec delta_e = Vec::Unit(2, 0);  // normalized point mass at e
    ConvolutionOperator t = convolution_t(dual, {delta_e, delta_e});
    // independent oracle: <delta_e, lambda_g delta_e> = [g = e], so T kills
    // the nontrivial translation and fixes the unit
    FiniteGroup g = make_group_zn(2);
    Mat trans = Mat::Zero(2, 2);
    for (int h = 0; h < 2; ++h) trans(g.mult[1][h], h) = 1.0;
    Mat t_unit = t.apply_op(dual, Mat::Identity(2, 2));
    Mat t_trans = t.apply_op(dual, trans);
    CHECK((t_unit - Mat::Identity(2, 2)).norm() <= 1e-9);
    CHECK(t_trans.norm() <= 1e-9);
  }
  SUBCASE("vector states give unital cp convolution operators") {
    Built b = build("kac_paljutkin");
    DualAlgebra dual = build_dual(b.qg, b.gns, b.w);
    Rng rng(6);
    Vec xi = rng.vector(8).normalized();
    ConvolutionOperator t = convolution_t(dual, {xi, xi});
    CHECK(t.range_residual <= 1e-9);
    // unital
    Vec unit = dual.span.coords(Mat::Identity(8, 8));
    CHECK((t.coords * unit - unit).norm() <= 1e-9);
    // cp via the choi matrix of the operator-level extension
    const int d = 8;
    auto apply_unit = [&](int u, int v) {
      Mat e = Mat::Zero(d, d);
      e(u, v) = 1.0;
      return convolution_t_op(dual, {xi, xi}, dual.span.project(e));
    };
    ChoiReport rep = choi_cp_check_operator(d, d, apply_unit, t.apply_op(dual, Mat::Identity(d, d)));
    CHECK(rep.min_eig >= -1e-9);
  }
}
