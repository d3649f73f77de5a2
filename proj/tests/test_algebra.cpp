#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcp/algebra.hpp"
#include "qcp/spans.hpp"

using namespace qcp;

namespace {

Element basis_elem(const AlgebraShape& s, int k) { return canonical_basis(s)[k]; }

LinearMap transpose_map_m2() {
  AlgebraShape m2({2});
  auto basis = canonical_basis(m2);
  std::vector<Element> values;
  for (const auto& b : basis) values.push_back(Element(m2, {b.block(0).transpose().eval()}));
  return LinearMap::from_basis_values(m2, m2, values);
}

}  // namespace

TEST_CASE("canonical basis enumerates matrix units in order") {
  AlgebraShape m2({2});
  auto b = canonical_basis(m2);
  REQUIRE(b.size() == 4);
  CHECK((b[0] * b[0] - b[0]).frob_norm() == doctest::Approx(0.0));
  CHECK((b[1] * b[2] - b[0]).frob_norm() == doctest::Approx(0.0));  // e12 e21 = e11
  CHECK((b[2] * b[1] - b[3]).frob_norm() == doctest::Approx(0.0));  // e21 e12 = e22

  AlgebraShape c2({1, 1});
  auto p = canonical_basis(c2);
  REQUIRE(p.size() == 2);
  CHECK((p[0] * p[1]).frob_norm() == doctest::Approx(0.0));
  CHECK((p[0] * p[0] - p[0]).frob_norm() == doctest::Approx(0.0));

  AlgebraShape mixed({1, 2});
  auto m = canonical_basis(mixed);
  REQUIRE(m.size() == 5);
  CHECK(m[0].block(0)(0, 0) == cx(1.0));
  CHECK(m[0].block(1).norm() == 0.0);
}

TEST_CASE("star and unit laws") {
  AlgebraShape m2({2});
  auto b = canonical_basis(m2);
  Element x = cx(0, 1) * b[1];  // i e12
  CHECK((x.star() - cx(0, -1) * b[2]).frob_norm() == doctest::Approx(0.0));

  Rng rng(7);
  Element one = Element::identity(AlgebraShape({1, 2, 3}));
  for (int t = 0; t < 20; ++t) {
    Element a = rng.element(AlgebraShape({1, 2, 3}));
    CHECK((a * one - a).frob_norm() <= 1e-14 * std::max(1.0, a.frob_norm()));
    CHECK((a.star().star() - a).frob_norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("operator norm") {
  CHECK(Element::identity(AlgebraShape({3})).op_norm() == doctest::Approx(1.0));
  AlgebraShape c2({1, 1});
  Element d = Element::zero(c2);
  d.block(0)(0, 0) = 3.0;
  d.block(1)(0, 0) = 4.0;
  CHECK(d.op_norm() == doctest::Approx(4.0));
  CHECK(basis_elem(AlgebraShape({2}), 1).op_norm() == doctest::Approx(1.0));
}

TEST_CASE("c*-identity on random elements") {
  Rng rng(11);
  AlgebraShape s({1, 2, 3});
  for (int t = 0; t < 20; ++t) {
    Element a = rng.element(s);
    double lhs = (a.star() * a).op_norm();
    double rhs = a.op_norm() * a.op_norm();
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
  }
}

TEST_CASE("tensor shapes, elements and maps") {
  AlgebraShape m2({2}), c2({1, 1});
  CHECK(m2.tensor(c2) == AlgebraShape({2, 2}));
  Element one = Element::identity(m2).tensor(Element::identity(c2));
  CHECK((one - Element::identity(m2.tensor(c2))).frob_norm() == doctest::Approx(0.0));

  LinearMap idid = LinearMap::identity(m2).tensor(LinearMap::identity(c2));
  CHECK((idid.coefficients() - Mat::Identity(8, 8)).norm() == doctest::Approx(0.0));

  // multiplicativity of the tensor product
  Rng rng(3);
  Element a = rng.element(m2), b = rng.element(c2), c = rng.element(m2), d = rng.element(c2);
  CHECK(((a.tensor(b)) * (c.tensor(d)) - (a * c).tensor(b * d)).frob_norm() <= 1e-12);

  // associativity on shapes and elements
  AlgebraShape s3({1, 2});
  Element e = rng.element(s3);
  CHECK(m2.tensor(c2).tensor(s3) == m2.tensor(c2.tensor(s3)));
  CHECK(((a.tensor(b)).tensor(e) - a.tensor(b.tensor(e))).frob_norm() <= 1e-12);
}

TEST_CASE("tensor basis index matches element tensor") {
  AlgebraShape s1({1, 2}), s2({2, 1});
  auto b1 = canonical_basis(s1);
  auto b2 = canonical_basis(s2);
  for (int k = 0; k < s1.dim(); ++k)
    for (int l = 0; l < s2.dim(); ++l) {
      Vec c = b1[k].tensor(b2[l]).coords();
      int idx = tensor_basis_index(s1, s2, k, l);
      CHECK(std::abs(c[idx] - cx(1.0)) <= 1e-14);
      CHECK(std::abs(c.norm() - 1.0) <= 1e-14);
    }
}

TEST_CASE("represent is faithful, multiplicative, star-preserving") {
  AlgebraShape m2({2});
  auto b = canonical_basis(m2);
  for (int k = 0; k < 4; ++k) {
    Mat r = represent(m2, b[k]);
    CHECK((r - b[k].block(0)).norm() == doctest::Approx(0.0));
  }
  AlgebraShape c2({1, 1});
  Mat diag = represent(c2, canonical_basis(c2)[1]);
  CHECK(std::abs(diag(1, 1) - cx(1.0)) <= 1e-15);
  CHECK(std::abs(diag(0, 0)) <= 1e-15);

  AlgebraShape mixed({1, 2});
  Rep rep = block_rep(mixed);
  CHECK(rep.multiplicativity_defect() <= 1e-12);
  CHECK(rep.star_defect() <= 1e-12);
  // faithfulness: the coordinate map of represent has trivial kernel
  Mat stack(mixed.rep_dim() * mixed.rep_dim(), mixed.dim());
  for (int k = 0; k < mixed.dim(); ++k) {
    Mat r = rep.basis_ops[k];
    int idx = 0;
    for (int j = 0; j < r.cols(); ++j)
      for (int i = 0; i < r.rows(); ++i) stack(idx++, k) = r(i, j);
  }
  Eigen::JacobiSVD<Mat> svd(stack);
  CHECK(svd.singularValues().minCoeff() > 0.5);
}

TEST_CASE("choi certification") {
  AlgebraShape m2({2});
  Tol tol;

  SUBCASE("identity map") {
    ChoiReport r = choi_cp_check(LinearMap::identity(m2), tol);
    CHECK(r.is_cp);
    CHECK(r.is_unital);
    CHECK(r.is_contractive);
    CHECK(std::abs(r.min_eig) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> es(r.choi);
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > 1e-9) ++rank;
    CHECK(rank == 1);
  }

  SUBCASE("transpose is not completely positive") {
    ChoiReport r = choi_cp_check(transpose_map_m2(), tol);
    CHECK_FALSE(r.is_cp);
    // independent oracle: the Choi matrix of the transpose is the swap,
    // whose minimum eigenvalue is -1
    Mat swap = flip_unitary(2, 2);
    Eigen::SelfAdjointEigenSolver<Mat> es(swap);
    CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-1.0));
    CHECK(r.min_eig == doctest::Approx(-1.0));
    CHECK((r.choi - swap).norm() <= 1e-12);
  }

  SUBCASE("compression by a projection") {
    Mat p = Mat::Zero(2, 2);
    p(0, 0) = 1.0;
    auto basis = canonical_basis(m2);
    std::vector<Element> values;
    for (const auto& b : basis) values.push_back(Element(m2, {p * b.block(0) * p}));
    ChoiReport r = choi_cp_check(LinearMap::from_basis_values(m2, m2, values), tol);
    CHECK(r.is_cp);
    CHECK(r.is_contractive);
    CHECK_FALSE(r.is_unital);
  }
}

TEST_CASE("cp composition stays cp on random conjugation pairs") {
  Rng rng(21);
  AlgebraShape m2({2}), m3({3});
  Tol tol;
  // b -> v b v* for v from the domain space to the codomain space
  auto conj_map = [&](const AlgebraShape& dom, const AlgebraShape& cod, const Mat& v) {
    auto basis = canonical_basis(dom);
    std::vector<Element> values;
    for (const auto& b : basis) values.push_back(Element(cod, {v * b.block(0) * v.adjoint()}));
    return LinearMap::from_basis_values(dom, cod, values);
  };
  for (int t = 0; t < 50; ++t) {
    Mat v1 = rng.matrix(3, 2), v2 = rng.matrix(2, 3);
    LinearMap l1 = conj_map(m2, m3, v1);
    LinearMap l2 = conj_map(m3, m2, v2);
    CHECK(choi_cp_check(l1, tol).is_cp);
    CHECK(choi_cp_check(l2, tol).is_cp);
    CHECK(choi_cp_check(l2.compose(l1), tol).is_cp);
  }
}

TEST_CASE("leg embedding and pure tensor expansion") {
  AlgebraShape a({1, 1}), b({2}), c({1, 2});
  Rng rng(5);
  Element x = rng.element(a).tensor(rng.element(c));
  // round-trip
  PureTensorExpansion ex = expand_pure_tensors(x, {a, c});
  Element recon = Element::zero(a.tensor(c));
  auto ba = canonical_basis(a);
  auto bc = canonical_basis(c);
  for (size_t t = 0; t < ex.coeff.size(); ++t)
    recon = recon + ex.coeff[t] * ba[ex.index[t][0]].tensor(bc[ex.index[t][1]]);
  CHECK((recon - x).frob_norm() <= 1e-12);

  // placing legs (3,1) of a two-leg element
  Element y = leg_embed(x, {a, c}, {3, 1}, {c, b, a});
  // compare against a direct construction
  Element direct = Element::zero(c.tensor(b).tensor(a));
  for (size_t t = 0; t < ex.coeff.size(); ++t)
    direct = direct + ex.coeff[t] * bc[ex.index[t][1]].tensor(Element::identity(b)).tensor(ba[ex.index[t][0]]);
  CHECK((y - direct).frob_norm() <= 1e-12);
}

TEST_CASE("operator span basics") {
  Rng rng(9);
  std::vector<Mat> gens;
  Mat g1 = rng.matrix(3, 3);
  Mat g2 = rng.matrix(3, 3);
  gens.push_back(g1);
  gens.push_back(g2);
  gens.push_back(g1 + g2);
  OperatorSpan span = OperatorSpan::from_generators(gens);
  CHECK(span.dim() == 2);
  CHECK(span.distance(0.5 * g1 - cx(0, 2) * g2) <= 1e-12);
  CHECK(span.distance(Mat::Identity(3, 3)) > 0.1);
}

TEST_CASE("block structure of a represented multimatrix algebra") {
  AlgebraShape s({1, 2});
  Rep rep = block_rep(s);
  // with multiplicity two on C^6
  std::vector<Mat> gens;
  for (const Mat& m : rep.basis_ops) {
    Mat big = Mat::Zero(6, 6);
    big.block(0, 0, 3, 3) = m;
    big.block(3, 3, 3, 3) = m;
    gens.push_back(big);
  }
  OperatorSpan span = OperatorSpan::from_generators(gens);
  REQUIRE(span.dim() == 5);
  BlockStructure bs = block_structure(span);
  CHECK(bs.center_dim == 2);
  std::vector<int> dims = bs.block_dims;
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>({1, 2}));

  AbstractIdentification id = abstractize(span);
  CHECK(id.defect <= 1e-8);
  double res = 0.0;
  Element back = id.to_abstract(gens[2], &res);
  CHECK(res <= 1e-10);
  CHECK((id.to_operator(back) - gens[2]).norm() <= 1e-10);
}
