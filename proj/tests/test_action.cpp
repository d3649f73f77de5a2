#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qcp/action.hpp"
#include "qcp/catalog.hpp"

using namespace qcp;

namespace {

struct Setup {
  QuantumGroupEnv env;
  Action action;
  std::vector<CommutingMapSpec> commuting;
};

Setup make(const std::string& name) {
  ActionSpec spec = catalog_action(name);
  QuantumGroupEnv env = build_env(spec.qg);
  Action action = make_action(env, spec.target, spec.alpha);
  return {std::move(env), std::move(action), spec.commuting};
}

const std::vector<std::string> kActions = {
    "action:trivial_z2_on_c", "action:trivial_group_on_c2", "action:regular_z2",
    "action:regular_kp",      "action:swap_z2_c2",          "action:ad_z2_m2",
    "action:translation_dual_z3"};

}  // namespace

TEST_CASE("catalog actions validate") {
  for (const auto& name : kActions) {
    CAPTURE(name);
    Setup s = make(name);
    ValidationReport rep = validate_action(s.env, s.action);
    CHECK(rep.pass());
    CHECK(rep.max_residual() <= 1e-9);
  }
}

TEST_CASE("corrupted actions fail counit and injectivity together") {
  for (const auto& spec : corrupted_actions()) {
    CAPTURE(spec.name);
    QuantumGroupEnv env = build_env(spec.qg);
    Action action = make_action(env, spec.target, spec.alpha);
    ValidationReport rep = validate_action(env, action);
    CHECK_FALSE(rep.pass());
    // still an action in the algebraic sense
    CHECK(rep.find("action_identity")->pass);
    CHECK(rep.find("homomorphism")->pass);
    CHECK(rep.find("unital")->pass);
    // the two faithfulness conditions fail in tandem
    CHECK_FALSE(rep.find("counit_identity")->pass);
    CHECK_FALSE(rep.find("injectivity")->pass);
    CHECK(rep.find("counit_injectivity_equivalence")->pass);
  }
}

TEST_CASE("perturbed alpha is rejected") {
  ActionSpec spec = catalog_action("corrupt:action_swap");
  QuantumGroupEnv env = build_env(spec.qg);
  Action action = make_action(env, spec.target, spec.alpha);
  ValidationReport rep = validate_action(env, action);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("crossed product dimensions and structure") {
  SUBCASE("regular action has dimension (dim A)^2 and trivial commutant") {
    for (const auto& name : {"action:regular_z2", "action:regular_kp"}) {
      CAPTURE(name);
      Setup s = make(name);
      CrossedProduct cp = build_crossed_product(s.env, s.action);
      const int da = s.env.qg.shape.dim();
      CHECK(cp.span.dim() == da * da);
      CHECK(cp.product_closure_residual <= 1e-9);
      CHECK(cp.two_sided_gap <= 1e-9);
      BlockStructure bs = block_structure(cp.span);
      CHECK(bs.center_dim == 1);
      CHECK(bs.block_dims == std::vector<int>({da}));
    }
  }
  SUBCASE("trivial action on C gives the dual algebra") {
    Setup s = make("action:trivial_z2_on_c");
    CrossedProduct cp = build_crossed_product(s.env, s.action);
    CHECK(cp.span.dim() == 2);
    std::vector<Mat> dual_ops;
    for (int j = 0; j < s.env.dual.span.dim(); ++j) dual_ops.push_back(s.env.dual.span.basis_op(j));
    OperatorSpan dual_span = OperatorSpan::from_generators(dual_ops);
    CHECK(cp.span.subspace_gap(dual_span) <= 1e-9);
  }
  SUBCASE("swap action gives a factor of dimension 4") {
    Setup s = make("action:swap_z2_c2");
    CrossedProduct cp = build_crossed_product(s.env, s.action);
    CHECK(cp.span.dim() == 4);
    BlockStructure bs = block_structure(cp.span);
    CHECK(bs.center_dim == 1);
    CHECK(bs.block_dims == std::vector<int>({2}));
  }
  SUBCASE("dimension bound dim <= dim(dual) * dim(B)") {
    for (const auto& name : kActions) {
      CAPTURE(name);
      Setup s = make(name);
      CrossedProduct cp = build_crossed_product(s.env, s.action);
      CHECK(cp.span.dim() <= s.env.dual.span.dim() * s.action.target.dim());
    }
  }
}

TEST_CASE("embedding of the target is isometric") {
  Setup s = make("action:ad_z2_m2");
  CrossedProduct cp = build_crossed_product(s.env, s.action);
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    Element b = rng.element(s.action.target);
    Mat e = cp.embed_target(s.action, b);
    Eigen::JacobiSVD<Mat> svd(e);
    CHECK(std::abs(svd.singularValues()(0) - b.op_norm()) <= 1e-9 * std::max(1.0, b.op_norm()));
  }
}

TEST_CASE("conditional expectation") {
  for (const auto& name : {"action:trivial_z2_on_c", "action:swap_z2_c2", "action:regular_z2"}) {
    CAPTURE(name);
    Setup s = make(name);
    CrossedProduct cp = build_crossed_product(s.env, s.action);
    CrossedMap e = conditional_expectation(s.env, s.action, cp);
    CHECK(e.consistency_residual <= 1e-9);
    // idempotent, unital, completely positive
    CHECK((e.coords * e.coords - e.coords).norm() <= 1e-9);
    CHECK(e.choi.is_cp);
    CHECK(e.choi.is_unital);
    CHECK(e.choi.min_eig >= -1e-9);
    // fixes alpha(B) pointwise
    for (const auto& b : canonical_basis(s.action.target)) {
      Mat ab = cp.embed_target(s.action, b);
      CHECK((e.apply_op(cp, ab) - ab).norm() <= 1e-9);
    }
    // range inside alpha(B)
    std::vector<Mat> range_gens;
    for (const auto& b : canonical_basis(s.action.target)) range_gens.push_back(cp.embed_target(s.action, b));
    OperatorSpan range = OperatorSpan::from_generators(range_gens);
    for (int k = 0; k < cp.span.dim(); ++k)
      CHECK(range.distance(e.apply_op(cp, cp.span.basis_op(k))) <= 1e-9);
  }
}

TEST_CASE("expectation compresses the dual leg to the counit vector state") {
  Setup s = make("action:trivial_z2_on_c");
  CrossedProduct cp = build_crossed_product(s.env, s.action);
  CrossedMap e = conditional_expectation(s.env, s.action, cp);
  Mat z = support_projection(s.env.qg, s.env.gns, {s.env.qg.counit_block});
  Eigen::SelfAdjointEigenSolver<Mat> es(z);
  Vec eta = es.eigenvectors().col(s.env.gns.hilbert_dim - 1);
  for (int j = 0; j < s.env.dual.span.dim(); ++j) {
    Mat x = s.env.dual.span.basis_op(j);
    Mat lhs = e.apply_op(cp, cp.embed_dual(s.env, x));
    cx expect = eta.adjoint() * x * eta;
    CHECK((lhs - expect * Mat::Identity(cp.ambient_dim, cp.ambient_dim)).norm() <= 1e-9);
  }
}

TEST_CASE("canonical extensions") {
  for (const auto& name : kActions) {
    CAPTURE(name);
    Setup s = make(name);
    CrossedProduct cp = build_crossed_product(s.env, s.action);
    CrossedMap e = conditional_expectation(s.env, s.action, cp);
    for (const auto& cms : s.commuting) {
      CAPTURE(cms.name);
      CommutingMap cm = certify_commuting(s.env, s.action, cms.map);
      CHECK(cm.commutation_residual <= 1e-9);
      CrossedMap ext = extend_commuting_map(s.env, s.action, cp, cm);
      CHECK(ext.consistency_residual <= 1e-9);
      // cp/unital certificates carry over whenever gamma has them
      if (cm.choi.is_cp) CHECK(ext.choi.is_cp);
      if (cm.choi.is_unital) CHECK(ext.choi.is_unital);
      // identity extends to the identity
      if (cms.name == "id") {
        CHECK((ext.coords - Mat::Identity(cp.span.dim(), cp.span.dim())).norm() <= 1e-9);
      }
      // extension fixes the dual leg
      for (int j = 0; j < s.env.dual.span.dim(); ++j) {
        Mat x = cp.embed_dual(s.env, s.env.dual.span.basis_op(j));
        CHECK((ext.apply_op(cp, x) - x).norm() <= 1e-9);
      }
      // homomorphic gammas give homomorphic extensions
      if (cms.homomorphic) {
        double hom = 0.0;
        for (int p = 0; p < cp.span.dim(); ++p)
          for (int q = 0; q < cp.span.dim(); ++q) {
            Mat prod = cp.span.basis_op(p) * cp.span.basis_op(q);
            hom = std::max(hom, (ext.apply_op(cp, prod) -
                                 ext.apply_op(cp, cp.span.basis_op(p)) * ext.apply_op(cp, cp.span.basis_op(q)))
                                    .norm());
          }
        CHECK(hom <= 1e-8);
      }
      // E gammaHat = gammaHat E = alpha gamma (eps (x) id) on the basis
      for (int k = 0; k < cp.span.dim(); ++k) {
        Mat y = cp.span.basis_op(k);
        Mat lhs = e.apply_op(cp, ext.apply_op(cp, y));
        Mat rhs = ext.apply_op(cp, e.apply_op(cp, y));
        CHECK((lhs - rhs).norm() <= 1e-8);
      }
    }
  }
}
