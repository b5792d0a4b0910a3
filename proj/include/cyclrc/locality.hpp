#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclrc/cyclic.hpp"

namespace cyclrc {

/// Residue classes mod nu' = n / (r + delta - 1); group j holds
/// { j + t*nu' : t = 0..r+delta-2 } in increasing t.
struct RepairGroupPartition {
  int n = 0;
  int group_size = 0;
  int num_groups = 0;
  std::vector<std::vector<int>> groups;

  int group_of(int coord) const { return coord % num_groups; }
};

RepairGroupPartition repair_groups(int n, int r, int delta);

/// Projection of a code onto the coordinates S, in the order given.
struct RestrictedCode {
  std::vector<int> coords;
  /// Row-reduced basis of C|_S.
  Matrix generator;
  int dimension = 0;
};

RestrictedCode restricted_code(const CyclicCode& code, std::span<const int> coords);

enum class LocalityMethod { Auto, Exhaustive };

struct LocalityOptions {
  LocalityMethod method = LocalityMethod::Auto;
  /// Bound on q^{k_S} for the exhaustive local scan.
  std::uint64_t cap = kDefaultSearchCap;
  /// Bound on column subsets examined by the dependent-columns search.
  std::uint64_t subset_budget = 2'000'000;
  unsigned jobs = 1;
};

struct LocalGroupCertificate {
  std::vector<int> coords;
  int dim = 0;
  int dmin = 0;
  bool mds = false;
  /// "exhaustive", "dual-columns" or "bch-sandwich".
  std::string method;
};

struct LocalityCertificate {
  int r = 0;
  int delta = 0;
  std::vector<LocalGroupCertificate> groups;
  bool verdict = false;
  /// First group whose local distance is below delta.
  std::optional<int> failing_group;
};

/// Local distance of every canonical repair group.  In Auto mode a group
/// whose exhaustive scan would exceed the cap uses the BCH/Singleton sandwich
/// of the restricted cyclic code of length r+delta-1 when the two bounds meet,
/// otherwise an exact dependent-columns search on the local parity checks.
/// Exhaustive mode never falls back and throws SearchSpaceTooLarge.
LocalityCertificate verify_r_delta_locality(const CyclicCode& code, int r, int delta,
                                            const LocalityOptions& opts = {});

/// Smallest number of linearly dependent columns of `parity`, i.e. the
/// minimum distance of its null space.  nullopt when more than `budget`
/// column subsets would be needed.
std::optional<int> min_distance_by_dependent_columns(const Matrix& parity, std::uint64_t budget);

/// Exponents u in [0, rho) with { v in [0,n) : v == u mod rho } inside Z.
/// They form the defining set of the restriction of the code to any repair
/// group, viewed as a cyclic code of length rho.
DefiningSet restricted_defining_set(const DefiningSet& z, int rho);

/// Length-n vectors over alpha's field supported on {0, nu', ..., (rho-1)nu'}
/// with value (alpha^{nu' * i_j})^t at position t*nu'.
std::vector<std::vector<Elem>> local_parity_vectors(int n, int r, int delta,
                                                    std::span<const long long> offsets,
                                                    const FieldElement& alpha);

/// Expands extension-field vectors into base-field rows (s rows per vector,
/// one per coordinate in the power basis of the generator) and returns a
/// row-reduced basis.  Vectors already over a field without declared base
/// are returned as-is after reduction.
Matrix expand_to_base_rows(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field);

/// d(C^perp) - 1 by exhaustive search over the dual code.
int exact_locality_via_dual(const CyclicCode& code, std::uint64_t cap = kDefaultSearchCap);

/// L_l = { i in [0,n) : i == l mod r+1 }; true iff L_l and -L_l are disjoint.
bool shifted_coset_obstruction(int n, int r, int l);

}  // namespace cyclrc
