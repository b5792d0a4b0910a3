#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclrc/constructions.hpp"

namespace cyclrc::cli {

enum Exit : int { kOk = 0, kParamError = 2, kCertFailure = 3, kSearchCap = 4 };

int exit_code_for(ErrorCode code);

/// CYCLRC_SEARCH_CAP when set to a positive integer, else kDefaultSearchCap.
std::uint64_t default_search_cap();

struct ConstructArgs {
  LrcParams params;
  /// Exhaustive distance scan when q^k is within the cap.
  bool exhaustive = true;
  std::uint64_t cap = kDefaultSearchCap;
  std::uint64_t locality_cap = kDefaultSearchCap;
  unsigned jobs = 1;
  /// Exhaustive distance and locality scans with no fallbacks; beyond the
  /// caps this fails with SearchSpaceTooLarge.
  bool strict = false;
  /// Human summary instead of the JSON descriptor.
  bool human = false;
};

struct CertifyArgs {
  std::string descriptor_json;
  bool exhaustive = true;
  std::uint64_t cap = kDefaultSearchCap;
  std::uint64_t locality_cap = kDefaultSearchCap;
  unsigned jobs = 1;
};

struct SweepArgs {
  std::uint64_t q = 0;
  int max_n = 0;
  unsigned jobs = 1;
  /// q^k bound for the exhaustive column; 0 disables it.
  std::uint64_t cap = 1'000'000;
  std::uint64_t locality_cap = 100'000;
};

struct RepairDemoArgs {
  LrcParams params;
  std::vector<int> erasures;
  std::uint64_t seed = 1;
  /// Hex symbols; random when absent.
  std::optional<std::string> message;
};

struct ExampleOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
/// Rebuilds the code from a descriptor, checks the stored defining set and
/// certificate, prints the fresh certificate.
int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err);
std::vector<ExampleOutcome> run_examples();
int cmd_examples(std::ostream& out);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_repair_demo(const RepairDemoArgs& args, std::ostream& out, std::ostream& err);
int cmd_params(std::uint64_t q, int max_n, std::ostream& out);

}  // namespace cyclrc::cli
