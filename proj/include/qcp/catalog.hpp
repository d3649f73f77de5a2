#ifndef QCP_CATALOG_HPP
#define QCP_CATALOG_HPP

#include <string>
#include <vector>

#include "qcp/quantum_group.hpp"

namespace qcp {

// Finite group given by its multiplication table.
struct FiniteGroup {
  std::string name;
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> mult;  // mult[g][h] = gh
  std::vector<int> inverse;
  // Unitary irreducible representations, outer index irrep, inner index element.
  std::vector<std::vector<Mat>> irreps;
};

FiniteGroup make_group_zn(int n);
FiniteGroup make_group_z2z2();
FiniteGroup make_group_s3();
FiniteGroup make_group_d4();

// C(G): commutative function algebra with the convolution coproduct.
QuantumGroupData function_algebra(const FiniteGroup& g);
// C*(G) in its Peter-Weyl multimatrix picture.
QuantumGroupData group_algebra(const FiniteGroup& g);
// The 8-dimensional noncommutative noncocommutative finite quantum group,
// obtained by twisting C*(D4) with the nondegenerate bicharacter cocycle on
// the dual of its central Klein subgroup.
QuantumGroupData kac_paljutkin();

struct CommutingMapSpec {
  std::string name;
  LinearMap map;          // gamma: B -> B
  bool homomorphic = false;  // expected certificate
};

struct ActionSpec {
  std::string name;
  std::string qg_name;
  QuantumGroupData qg;
  AlgebraShape target;
  LinearMap alpha;  // B -> A (x) B
  std::vector<CommutingMapSpec> commuting;
};

struct CocycleActionSpec {
  std::string name;
  std::string qg_name;
  QuantumGroupData qg;
  AlgebraShape target;
  LinearMap alpha;
  Element cocycle_u;  // unitary in A (x) A (x) B
  std::vector<CommutingMapSpec> commuting;
};

enum class CatalogKind { QuantumGroup, Action, CocycleAction };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
bool catalog_has(const std::string& name);
CatalogKind catalog_kind(const std::string& name);  // throws on unknown name

QuantumGroupData catalog_quantum_group(const std::string& name);
ActionSpec catalog_action(const std::string& name);
CocycleActionSpec catalog_cocycle(const std::string& name);

// Structurally valid *-homomorphisms violating the counit identity; used for
// the faithfulness/counit equivalence checks.
std::vector<ActionSpec> corrupted_actions();

}  // namespace qcp

#endif
