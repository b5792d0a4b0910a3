#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclrc/cyclic.hpp"
#include "cyclrc/locality.hpp"

namespace cyclrc {

enum class Family { QMinus1, QPlus1RLocal, QPlus1RDelta, MdsQPlus1 };

std::string_view to_string(Family f);
/// Accepts the CLI tags qminus1, qplus1-rlocal, qplus1-rdelta, mds.
Family parse_family(std::string_view tag);

struct LrcParams {
  std::uint64_t q = 0;
  int n = 0;
  int k = 0;
  int r = 0;
  int delta = 2;
  /// 0 selects the default step: 2 for odd delta with n | q+1, else 1.
  int b = 0;
  Family family = Family::QMinus1;
  /// Selects the n/2-centered run (or the shifted MDS run) where two
  /// variants are valid.
  bool alternate = false;
  /// Locality offsets i_1 < ... < i_{delta-1} for QMinus1; defaults to
  /// {0, b, ..., (delta-2)b}.
  std::optional<std::vector<long long>> offsets;
};

/// Exponent sets chosen for a parameter tuple, before any field arithmetic.
struct RecipePlan {
  std::string recipe;
  int b = 1;
  int mu = 0;
  int rho = 0;
  /// Residues m of the cosets L_m = { i : i == m mod rho }, signed.
  std::vector<long long> offsets;
  /// The run D, signed exponents in generation order.
  std::vector<long long> run;
  DefiningSet locality_union;
  DefiningSet run_set;
  DefiningSet defining_set;
};

/// Validates the tuple against the recipe conditions and returns the chosen
/// sets.  Throws ParamDomain, ProgressionOutOfRange, NoMatchingCase or
/// NonexistentMDS.
RecipePlan plan_construction(const LrcParams& params);

struct LrcCode {
  CyclicCode code;
  LrcParams params;
  RecipePlan plan;
  std::vector<DefiningSet> locality_sets;
  RepairGroupPartition groups;
  int target_d = 0;
};

int singleton_bound_r_local(int n, int k, int r);
int singleton_bound_r_delta(int n, int k, int r, int delta);

LrcCode construct_q_minus_1(const LrcParams& params);
LrcCode construct_r_local_q_plus_1(const LrcParams& params);
LrcCode construct_r_delta_q_plus_1(const LrcParams& params);
/// Table-style cyclic MDS code of length n | q+1.
CyclicCode construct_mds_q_plus_1(std::uint64_t q, int n, int k, bool shifted = false);
/// The MDS code viewed as an LRC with r = k, delta = n-k+1 and one group.
LrcCode construct_mds_lrc(std::uint64_t q, int n, int k, bool shifted = false);
/// Dispatches on params.family.
LrcCode construct(const LrcParams& params);

struct CertifyOptions {
  bool run_exhaustive = false;
  std::uint64_t cap = kDefaultSearchCap;
  LocalityOptions locality{};
  unsigned jobs = 1;
};

struct OptimalityCertificate {
  bool dims_ok = false;
  int bch_bound = 0;
  int singleton_bound = 0;
  bool d_exact_by_sandwich = false;
  std::optional<int> d_exhaustive;
  LocalityCertificate locality;
  bool verdict = false;
};

OptimalityCertificate certify(const LrcCode& lrc, const CertifyOptions& opts = {});

/// Every tuple (n, k, r, delta, b in {1,2}, family, variant) with n <= max_n
/// that some recipe accepts, ordered by n, family, delta, r, k, b, variant.
std::vector<LrcParams> feasible_parameters(std::uint64_t q, int max_n);

}  // namespace cyclrc
