#include "qcp/catalog.hpp"

#include <array>
#include <cmath>

namespace qcp {

namespace {

constexpr double kPi = 3.14159265358979323846;

FiniteGroup from_table(std::string name, std::vector<std::vector<int>> mult) {
  FiniteGroup g;
  g.name = std::move(name);
  g.order = static_cast<int>(mult.size());
  g.mult = std::move(mult);
  for (int e = 0; e < g.order; ++e) {
    bool id = true;
    for (int h = 0; h < g.order; ++h) id = id && g.mult[e][h] == h && g.mult[h][e] == h;
    if (id) g.identity = e;
  }
  g.inverse.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mult[a][b] == g.identity) g.inverse[a] = b;
  return g;
}

Mat one_by_one(cx v) {
  Mat m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

FiniteGroup make_group_zn(int n) {
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  FiniteGroup g = from_table("Z" + std::to_string(n), std::move(mult));
  for (int j = 0; j < n; ++j) {
    std::vector<Mat> rep;
    for (int a = 0; a < n; ++a)
      rep.push_back(one_by_one(std::polar(1.0, 2.0 * kPi * j * a / n)));
    g.irreps.push_back(std::move(rep));
  }
  return g;
}

FiniteGroup make_group_z2z2() {
  // element (a, b) at index 2a + b
  auto idx = [](int a, int b) { return 2 * a + b; };
  std::vector<std::vector<int>> mult(4, std::vector<int>(4));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) mult[idx(a, b)][idx(c, d)] = idx((a + c) % 2, (b + d) % 2);
  FiniteGroup g = from_table("Z2xZ2", std::move(mult));
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      std::vector<Mat> rep;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) rep.push_back(one_by_one(cx((p * a + q * b) % 2 ? -1.0 : 1.0)));
      g.irreps.push_back(std::move(rep));
    }
  return g;
}

FiniteGroup make_group_s3() {
  // permutations of {0,1,2}: [e, (01), (02), (12), (012), (021)]
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto find = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    throw std::logic_error("make_group_s3: permutation not found");
  };
  std::vector<std::vector<int>> mult(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> p;
      for (int i = 0; i < 3; ++i) p[i] = perms[a][perms[b][i]];
      mult[a][b] = find(p);
    }
  FiniteGroup g = from_table("S3", std::move(mult));
  std::vector<Mat> trivial, sign, std2;
  // sign of each permutation by inversion count
  for (int a = 0; a < 6; ++a) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perms[a][i] > perms[a][j]) ++inv;
    trivial.push_back(one_by_one(1.0));
    sign.push_back(one_by_one(inv % 2 ? -1.0 : 1.0));
  }
  // 2-dimensional representation: rotation r = (012), reflection s = (01)
  Mat rot(2, 2), ref(2, 2);
  double c = std::cos(2.0 * kPi / 3.0), s = std::sin(2.0 * kPi / 3.0);
  rot << c, -s, s, c;
  ref << 1, 0, 0, -1;
  const int r_idx = 4, s_idx = 1;  // (012) -> {1,2,0}, (01) -> {1,0,2}
  // words: every element is r^k or r^k s
  for (int a = 0; a < 6; ++a) {
    for (int k = 0; k < 3; ++k) {
      int rk = g.identity;
      for (int t = 0; t < k; ++t) rk = g.mult[rk][r_idx];
      if (a == rk) {
        Mat m = Mat::Identity(2, 2);
        for (int t = 0; t < k; ++t) m = m * rot;
        std2.push_back(m);
      } else if (a == g.mult[rk][s_idx]) {
        Mat m = Mat::Identity(2, 2);
        for (int t = 0; t < k; ++t) m = m * rot;
        std2.push_back(m * ref);
      }
    }
  }
  if (std2.size() != 6) throw std::logic_error("make_group_s3: word decomposition failed");
  g.irreps = {trivial, sign, std2};
  return g;
}

FiniteGroup make_group_d4() {
  // r^a s^b with a in Z4, b in Z2, index a + 4b; s r s = r^-1
  auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (b % 2); };
  std::vector<std::vector<int>> mult(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
          int e = b ? (a - c) : (a + c);
          mult[idx(a, b)][idx(c, d)] = idx(e, b + d);
        }
  FiniteGroup g = from_table("D4", std::move(mult));
  // four characters chi(r) = p, chi(s) = q with p, q in {1, -1}
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      std::vector<Mat> rep(8);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
          rep[idx(a, b)] = one_by_one(cx((p && a % 2 ? -1.0 : 1.0) * (q && b ? -1.0 : 1.0)));
      g.irreps.push_back(std::move(rep));
    }
  // 2-dimensional representation rho(r) = diag(i, -i), rho(s) = swap
  Mat rho_r = Mat::Zero(2, 2), rho_s = Mat::Zero(2, 2);
  rho_r(0, 0) = cx(0, 1);
  rho_r(1, 1) = cx(0, -1);
  rho_s(0, 1) = 1;
  rho_s(1, 0) = 1;
  std::vector<Mat> two(8);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b) {
      Mat m = Mat::Identity(2, 2);
      for (int t = 0; t < a; ++t) m = m * rho_r;
      if (b) m = m * rho_s;
      two[idx(a, b)] = m;
    }
  g.irreps.push_back(std::move(two));
  return g;
}

QuantumGroupData function_algebra(const FiniteGroup& g) {
  const int n = g.order;
  AlgebraShape shape(std::vector<int>(n, 1));
  AlgebraShape shape2 = shape.tensor(shape);
  Mat cop = Mat::Zero(shape2.dim(), n);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) cop(tensor_basis_index(shape, shape, h, k), g.mult[h][k]) += 1.0;
  Vec eps = Vec::Zero(n);
  eps[g.identity] = 1.0;
  Mat anti = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) anti(g.inverse[a], a) = 1.0;
  QuantumGroupData qg;
  qg.shape = shape;
  qg.coproduct = LinearMap(shape, shape2, cop);
  qg.counit = Functional(shape, eps);
  qg.antipode = LinearMap(shape, shape, anti);
  return qg;
}

namespace {

// Peter-Weyl change of basis: column g = coords of (+)_pi pi(g).
Mat peter_weyl_matrix(const FiniteGroup& g, const AlgebraShape& shape) {
  Mat m(shape.dim(), g.order);
  for (int a = 0; a < g.order; ++a) {
    std::vector<Mat> blocks;
    for (const auto& rep : g.irreps) blocks.push_back(rep[a]);
    m.col(a) = Element(shape, blocks).coords();
  }
  return m;
}

}  // namespace

QuantumGroupData group_algebra(const FiniteGroup& g) {
  std::vector<int> dims;
  int total = 0;
  for (const auto& rep : g.irreps) {
    dims.push_back(static_cast<int>(rep[0].rows()));
    total += dims.back() * dims.back();
  }
  if (total != g.order)
    throw std::invalid_argument("group_algebra: irrep list does not exhaust the group algebra");
  AlgebraShape shape(dims);
  AlgebraShape shape2 = shape.tensor(shape);
  Mat pw = peter_weyl_matrix(g, shape);
  Mat pw_inv = pw.inverse();

  Mat cop = Mat::Zero(shape2.dim(), shape.dim());
  for (int k = 0; k < shape.dim(); ++k) {
    Element acc = Element::zero(shape2);
    for (int a = 0; a < g.order; ++a) {
      cx c = pw_inv(a, k);
      if (c == cx(0.0)) continue;
      Element lam = Element::from_coords(shape, pw.col(a));
      acc = acc + c * lam.tensor(lam);
    }
    cop.col(k) = acc.coords();
  }
  Vec eps = Vec::Zero(shape.dim());
  for (int k = 0; k < shape.dim(); ++k)
    for (int a = 0; a < g.order; ++a) eps[k] += pw_inv(a, k);
  Mat pinv_perm = Mat::Zero(g.order, g.order);
  for (int a = 0; a < g.order; ++a) pinv_perm(g.inverse[a], a) = 1.0;
  Mat anti = pw * pinv_perm * pw_inv;

  QuantumGroupData qg;
  qg.shape = shape;
  qg.coproduct = LinearMap(shape, shape2, cop);
  qg.counit = Functional(shape, eps);
  qg.antipode = LinearMap(shape, shape, anti);
  return qg;
}

QuantumGroupData kac_paljutkin() {
  // Generators x, y, z with x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz,
  // z^2 = (1 + x + y - xy)/2, realized through the five irreducible
  // representations: characters (x, y, z) -> (1,1,±1), (-1,-1,±i) and the
  // two-dimensional block x -> diag(1,-1), y -> -x, z -> swap.
  AlgebraShape shape({1, 1, 1, 1, 2});
  auto scalar_blocks = [&](cx c1, cx c2, cx c3, cx c4, const Mat& m) {
    std::vector<Mat> blocks{one_by_one(c1), one_by_one(c2), one_by_one(c3), one_by_one(c4), m};
    return Element(shape, std::move(blocks));
  };
  Mat diag1m1 = Mat::Zero(2, 2), swap = Mat::Zero(2, 2);
  diag1m1(0, 0) = 1.0;
  diag1m1(1, 1) = -1.0;
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  const Element x = scalar_blocks(1, 1, -1, -1, diag1m1);
  const Element y = scalar_blocks(1, 1, -1, -1, -diag1m1);
  const Element z = scalar_blocks(1, -1, cx(0, 1), cx(0, -1), swap);
  const Element one = Element::identity(shape);

  // monomial basis x^s y^t z^u, u in {0, 1}
  std::vector<Element> monomials;
  for (int u = 0; u < 2; ++u)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        Element m = one;
        if (s) m = m * x;
        if (t) m = m * y;
        if (u) m = m * z;
        monomials.push_back(m);
      }
  Mat mono(shape.dim(), shape.dim());
  for (int i = 0; i < shape.dim(); ++i) mono.col(i) = monomials[i].coords();
  Mat mono_inv = mono.inverse();
  if ((mono * mono_inv - Mat::Identity(8, 8)).norm() > 1e-9)
    throw std::logic_error("kac_paljutkin: monomials do not span the algebra");

  const Element dx = x.tensor(x);
  const Element dy = y.tensor(y);
  const Element dz = 0.5 * (z.tensor(z) + (y * z).tensor(z) + z.tensor(x * z) - (y * z).tensor(x * z));
  const Element done = one.tensor(one);
  Mat cop_on_monomials(shape.tensor(shape).dim(), shape.dim());
  {
    int i = 0;
    for (int u = 0; u < 2; ++u)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          Element m = done;
          if (s) m = m * dx;
          if (t) m = m * dy;
          if (u) m = m * dz;
          cop_on_monomials.col(i++) = m.coords();
        }
  }
  Vec eps_on_monomials = Vec::Ones(shape.dim());  // eps(x) = eps(y) = eps(z) = 1

  QuantumGroupData qg;
  qg.shape = shape;
  qg.coproduct = LinearMap(shape, shape.tensor(shape), cop_on_monomials * mono_inv);
  qg.counit = Functional(shape, mono_inv.transpose() * eps_on_monomials);
  qg.antipode = solve_antipode(shape, qg.coproduct, qg.counit);
  return qg;
}

namespace {

LinearMap trivial_action_map(const QuantumGroupData& qg, const AlgebraShape& target) {
  auto basis = canonical_basis(target);
  std::vector<Element> values;
  Element one_a = Element::identity(qg.shape);
  for (const auto& b : basis) values.push_back(one_a.tensor(b));
  return LinearMap::from_basis_values(target, qg.shape.tensor(target), values);
}

// alpha(b) = sum_g delta_g (x) sigma_g(b) for an action of the group by maps
// sigma_g on the target.
LinearMap classical_action_map(const QuantumGroupData& qg_of_cg, const FiniteGroup& g,
                               const AlgebraShape& target, const std::vector<LinearMap>& sigma) {
  auto basis = canonical_basis(target);
  auto delta = canonical_basis(qg_of_cg.shape);
  std::vector<Element> values;
  for (const auto& b : basis) {
    Element acc = Element::zero(qg_of_cg.shape.tensor(target));
    for (int a = 0; a < g.order; ++a) acc = acc + delta[a].tensor(sigma[a].apply(b));
    values.push_back(acc);
  }
  return LinearMap::from_basis_values(target, qg_of_cg.shape.tensor(target), values);
}

LinearMap swap_map_c2() {
  AlgebraShape c2({1, 1});
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return LinearMap(c2, c2, m);
}

LinearMap ad_u_m2() {
  AlgebraShape m2({2});
  Mat u = Mat::Zero(2, 2);
  u(0, 0) = 1.0;
  u(1, 1) = -1.0;
  auto basis = canonical_basis(m2);
  std::vector<Element> values;
  for (const auto& b : basis) values.push_back(Element(m2, {u * b.block(0) * u.adjoint()}));
  return LinearMap::from_basis_values(m2, m2, values);
}

LinearMap haar_averaging(const QuantumGroupData& qg) {
  StateFunctional h = compute_haar(qg);
  auto basis = canonical_basis(qg.shape);
  std::vector<Element> values;
  for (const auto& b : basis) values.push_back(h(b) * Element::identity(qg.shape));
  return LinearMap::from_basis_values(qg.shape, qg.shape, values);
}

LinearMap average(const LinearMap& a, const LinearMap& b) {
  return LinearMap(a.domain(), a.codomain(), 0.5 * (a.coefficients() + b.coefficients()));
}

ActionSpec build_action(const std::string& name) {
  ActionSpec spec;
  spec.name = name;
  if (name == "action:trivial_z2_on_c") {
    spec.qg_name = "fn_group:Z2";
    spec.qg = function_algebra(make_group_zn(2));
    spec.target = AlgebraShape({1});
    spec.alpha = trivial_action_map(spec.qg, spec.target);
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
  } else if (name == "action:trivial_group_on_c2") {
    spec.qg_name = "fn_group:Z1";
    spec.qg = function_algebra(make_group_zn(1));
    spec.target = AlgebraShape({1, 1});
    spec.alpha = trivial_action_map(spec.qg, spec.target);
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    spec.commuting.push_back({"swap", swap_map_c2(), true});
  } else if (name == "action:regular_z2") {
    spec.qg_name = "fn_group:Z2";
    spec.qg = function_algebra(make_group_zn(2));
    spec.target = spec.qg.shape;
    spec.alpha = spec.qg.coproduct;
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    spec.commuting.push_back({"haar_average", haar_averaging(spec.qg), false});
  } else if (name == "action:regular_kp") {
    spec.qg_name = "kac_paljutkin";
    spec.qg = kac_paljutkin();
    spec.target = spec.qg.shape;
    spec.alpha = spec.qg.coproduct;
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    spec.commuting.push_back({"haar_average", haar_averaging(spec.qg), false});
  } else if (name == "action:swap_z2_c2") {
    spec.qg_name = "fn_group:Z2";
    spec.qg = function_algebra(make_group_zn(2));
    spec.target = AlgebraShape({1, 1});
    std::vector<LinearMap> sigma{LinearMap::identity(spec.target), swap_map_c2()};
    spec.alpha = classical_action_map(spec.qg, make_group_zn(2), spec.target, sigma);
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    spec.commuting.push_back({"swap", swap_map_c2(), true});
    spec.commuting.push_back({"symmetrizer", average(LinearMap::identity(spec.target), swap_map_c2()), false});
  } else if (name == "action:ad_z2_m2") {
    spec.qg_name = "fn_group:Z2";
    spec.qg = function_algebra(make_group_zn(2));
    spec.target = AlgebraShape({2});
    std::vector<LinearMap> sigma{LinearMap::identity(spec.target), ad_u_m2()};
    spec.alpha = classical_action_map(spec.qg, make_group_zn(2), spec.target, sigma);
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    spec.commuting.push_back({"ad_u", ad_u_m2(), true});
  } else if (name == "action:translation_dual_z3") {
    FiniteGroup z3 = make_group_zn(3);
    spec.qg_name = "group_alg:Z3";
    spec.qg = group_algebra(z3);
    spec.target = AlgebraShape({1, 1, 1});
    // grading coaction alpha(u_j) = lambda_j (x) u_j over the character basis
    Mat pw = peter_weyl_matrix(z3, spec.qg.shape);
    Mat u(3, 3);  // column j: character function u_j in the delta basis
    for (int x = 0; x < 3; ++x)
      for (int j = 0; j < 3; ++j) u(x, j) = std::polar(1.0, 2.0 * kPi * j * x / 3.0);
    Mat u_inv = u.inverse();
    AlgebraShape big = spec.qg.shape.tensor(spec.target);
    Mat alpha_on_u(big.dim(), 3);
    for (int j = 0; j < 3; ++j) {
      Element lam = Element::from_coords(spec.qg.shape, pw.col(j));
      Element uj = Element::from_coords(spec.target, u.col(j));
      alpha_on_u.col(j) = lam.tensor(uj).coords();
    }
    spec.alpha = LinearMap(spec.target, big, alpha_on_u * u_inv);
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    Mat shift = Mat::Zero(3, 3);  // translation automorphism of the target
    for (int x = 0; x < 3; ++x) shift((x + 1) % 3, x) = 1.0;
    spec.commuting.push_back({"translate", LinearMap(spec.target, spec.target, shift), true});
  } else {
    throw std::invalid_argument("catalog: unknown action " + name);
  }
  return spec;
}

CocycleActionSpec build_cocycle(const std::string& name) {
  CocycleActionSpec spec;
  spec.name = name;
  if (name == "cocycle:z2z2_bichar" || name == "cocycle:z2z2_u1") {
    FiniteGroup g = make_group_z2z2();
    spec.qg_name = "fn_group:Z2xZ2";
    spec.qg = function_algebra(g);
    spec.target = AlgebraShape({1});
    spec.alpha = trivial_action_map(spec.qg, spec.target);
    AlgebraShape ushape = spec.qg.shape.tensor(spec.qg.shape).tensor(spec.target);
    if (name == "cocycle:z2z2_u1") {
      spec.cocycle_u = Element::identity(ushape);
    } else {
      auto delta = canonical_basis(spec.qg.shape);
      Element one_b = Element::identity(spec.target);
      Element u = Element::zero(ushape);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d) {
              double w = ((b * c) % 2) ? -1.0 : 1.0;
              u = u + w * delta[2 * a + b].tensor(delta[2 * c + d]).tensor(one_b);
            }
      spec.cocycle_u = u;
    }
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
  } else if (name == "cocycle:z2_swap_u1") {
    ActionSpec base = build_action("action:swap_z2_c2");
    spec.qg_name = base.qg_name;
    spec.qg = base.qg;
    spec.target = base.target;
    spec.alpha = base.alpha;
    spec.cocycle_u = Element::identity(spec.qg.shape.tensor(spec.qg.shape).tensor(spec.target));
    spec.commuting.push_back({"id", LinearMap::identity(spec.target), true});
    spec.commuting.push_back({"swap", swap_map_c2(), true});
  } else {
    throw std::invalid_argument("catalog: unknown cocycle action " + name);
  }
  return spec;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"fn_group:Z1", CatalogKind::QuantumGroup, "functions on the trivial group"},
      {"fn_group:Z2", CatalogKind::QuantumGroup, "functions on Z2"},
      {"fn_group:Z3", CatalogKind::QuantumGroup, "functions on Z3"},
      {"fn_group:Z4", CatalogKind::QuantumGroup, "functions on Z4"},
      {"fn_group:Z2xZ2", CatalogKind::QuantumGroup, "functions on the Klein four-group"},
      {"fn_group:S3", CatalogKind::QuantumGroup, "functions on S3"},
      {"group_alg:Z2", CatalogKind::QuantumGroup, "group algebra of Z2"},
      {"group_alg:Z3", CatalogKind::QuantumGroup, "group algebra of Z3"},
      {"group_alg:Z4", CatalogKind::QuantumGroup, "group algebra of Z4"},
      {"group_alg:S3", CatalogKind::QuantumGroup, "group algebra of S3, blocks [1,1,2]"},
      {"kac_paljutkin", CatalogKind::QuantumGroup,
       "8-dimensional noncommutative noncocommutative quantum group, blocks [1,1,1,1,2]"},
      {"action:trivial_z2_on_c", CatalogKind::Action, "trivial action of C(Z2) on C"},
      {"action:trivial_group_on_c2", CatalogKind::Action, "trivial-group action on C^2"},
      {"action:regular_z2", CatalogKind::Action, "regular action of C(Z2) on itself"},
      {"action:regular_kp", CatalogKind::Action, "regular action of kac_paljutkin on itself"},
      {"action:swap_z2_c2", CatalogKind::Action, "Z2 swap action on C^2"},
      {"action:ad_z2_m2", CatalogKind::Action, "Z2 inner action on M2"},
      {"action:translation_dual_z3", CatalogKind::Action, "translation coaction of the Z3 group algebra on C(Z3)"},
      {"cocycle:z2z2_bichar", CatalogKind::CocycleAction, "bicharacter 2-cocycle of Z2xZ2 over C"},
      {"cocycle:z2z2_u1", CatalogKind::CocycleAction, "trivial-cocycle control over C"},
      {"cocycle:z2_swap_u1", CatalogKind::CocycleAction, "swap action with trivial cocycle"},
      {"corrupt:qg_z2", CatalogKind::QuantumGroup, "C(Z2) with one coproduct constant perturbed by 0.1"},
      {"corrupt:action_swap", CatalogKind::Action, "swap action with a perturbed alpha"},
      {"corrupt:cocycle_bichar", CatalogKind::CocycleAction, "bicharacter cocycle with one entry perturbed by 0.1"},
  };
  return entries;
}

bool catalog_has(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

CatalogKind catalog_kind(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e.kind;
  throw std::invalid_argument("catalog: unknown name " + name);
}

QuantumGroupData catalog_quantum_group(const std::string& name) {
  if (name == "fn_group:Z1") return function_algebra(make_group_zn(1));
  if (name == "fn_group:Z2") return function_algebra(make_group_zn(2));
  if (name == "fn_group:Z3") return function_algebra(make_group_zn(3));
  if (name == "fn_group:Z4") return function_algebra(make_group_zn(4));
  if (name == "fn_group:Z2xZ2") return function_algebra(make_group_z2z2());
  if (name == "fn_group:S3") return function_algebra(make_group_s3());
  if (name == "group_alg:Z2") return group_algebra(make_group_zn(2));
  if (name == "group_alg:Z3") return group_algebra(make_group_zn(3));
  if (name == "group_alg:Z4") return group_algebra(make_group_zn(4));
  if (name == "group_alg:S3") return group_algebra(make_group_s3());
  if (name == "kac_paljutkin") return kac_paljutkin();
  if (name == "corrupt:qg_z2") {
    QuantumGroupData qg = function_algebra(make_group_zn(2));
    Mat c = qg.coproduct.coefficients();
    c(0, 0) += 0.1;
    qg.coproduct = LinearMap(qg.shape, qg.shape.tensor(qg.shape), c);
    return qg;
  }
  throw std::invalid_argument("catalog: unknown quantum group " + name);
}

ActionSpec catalog_action(const std::string& name) {
  if (name == "corrupt:action_swap") {
    ActionSpec spec = build_action("action:swap_z2_c2");
    spec.name = name;
    Mat c = spec.alpha.coefficients();
    c(0, 0) += 0.1;
    spec.alpha = LinearMap(spec.alpha.domain(), spec.alpha.codomain(), c);
    return spec;
  }
  return build_action(name);
}

CocycleActionSpec catalog_cocycle(const std::string& name) {
  if (name == "corrupt:cocycle_bichar") {
    CocycleActionSpec spec = build_cocycle("cocycle:z2z2_bichar");
    spec.name = name;
    spec.cocycle_u.block(0)(0, 0) += 0.1;
    return spec;
  }
  return build_cocycle(name);
}

std::vector<ActionSpec> corrupted_actions() {
  std::vector<ActionSpec> out;
  // *-homomorphisms satisfying the action identity whose counit slice is not
  // the identity: compose a valid action with a non-faithful block collapse.
  auto collapse = [](const AlgebraShape& shape, const std::vector<int>& source) {
    // b -> (+)_i b_{source[i]}; a unital *-homomorphism with kernel
    auto basis = canonical_basis(shape);
    std::vector<Element> values;
    for (const auto& b : basis) {
      Element v = Element::zero(shape);
      for (int i = 0; i < shape.num_blocks(); ++i) v.block(i) = b.block(source[i]);
      values.push_back(v);
    }
    return LinearMap::from_basis_values(shape, shape, values);
  };
  {
    ActionSpec s = build_action("action:swap_z2_c2");
    s.name = "corrupted:swap_collapse_01";
    s.alpha = s.alpha.compose(collapse(s.target, {0, 0}));
    out.push_back(s);
  }
  {
    ActionSpec s = build_action("action:swap_z2_c2");
    s.name = "corrupted:swap_collapse_10";
    s.alpha = s.alpha.compose(collapse(s.target, {1, 1}));
    out.push_back(s);
  }
  {
    ActionSpec s = build_action("action:regular_z2");
    s.name = "corrupted:regular_collapse";
    s.alpha = s.alpha.compose(collapse(s.target, {0, 0}));
    out.push_back(s);
  }
  {
    ActionSpec s = build_action("action:translation_dual_z3");
    s.name = "corrupted:translation_collapse";
    s.alpha = s.alpha.compose(collapse(s.target, {0, 0, 0}));
    out.push_back(s);
  }
  {
    ActionSpec s = build_action("action:trivial_group_on_c2");
    s.name = "corrupted:trivial_collapse";
    s.alpha = s.alpha.compose(collapse(s.target, {1, 1}));
    out.push_back(s);
  }
  return out;
}

}  // namespace qcp
