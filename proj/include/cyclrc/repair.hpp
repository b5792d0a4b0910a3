#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cyclrc/constructions.hpp"

namespace cyclrc {

/// A received word; nullopt marks an erasure.
using Word = std::vector<std::optional<Elem>>;

Word to_word(std::span<const Elem> codeword);
Word with_erasures(const Word& word, std::span<const int> coords);
std::vector<int> erased_positions(const Word& word);

/// Systematic encoder.  The information set is the first k coordinates when
/// they are independent in G, otherwise the lexicographically first
/// independent k-subset.
class Encoder {
 public:
  explicit Encoder(const CyclicCode& code);

  const std::vector<int>& information_set() const { return info_; }
  std::vector<Elem> encode(std::span<const Elem> message) const;

 private:
  Matrix systematic_;
  std::vector<int> info_;
};

std::vector<Elem> encode(const CyclicCode& code, std::span<const Elem> message);

/// Returns the symbol at a coordinate, nullopt when erased.
using SymbolReader = std::function<std::optional<Elem>(int coord)>;

/// Repairs erasures inside one repair group from r = rho - delta + 1 surviving
/// symbols of that group.  Group parity-check matrices are cached.
class LocalRepairer {
 public:
  explicit LocalRepairer(const LrcCode& lrc);

  /// Erased coordinates of the target's group and their repaired values.
  /// Only coordinates of that group are passed to `read`.
  std::map<int, Elem> repair_group(int target, const std::vector<bool>& erased, const SymbolReader& read) const;
  Elem repair(const Word& word, int target) const;

 private:
  const LrcCode* lrc_;
  std::vector<Matrix> parity_;
};

Elem local_repair(const LrcCode& lrc, const Word& word, int target);
std::map<int, Elem> repair_group(const LrcCode& lrc, const Word& word, int target);

/// Unique codeword agreeing with the unerased symbols.  TooManyErasures when
/// more than n-k symbols are erased or the erased columns of H are dependent;
/// InconsistentWord when no codeword agrees.
std::vector<Elem> global_erasure_decode(const CyclicCode& code, const Word& word);

struct RepairEntry {
  int coord = 0;
  int group = 0;
  bool local = false;
  int reads = 0;
};

struct RepairReport {
  std::vector<RepairEntry> entries;
  int local_repairs = 0;
  int global_repairs = 0;
  int total_reads = 0;
};

/// Local when the group holds at most delta-1 erasures (reads r symbols),
/// otherwise global (reads every unerased symbol).
RepairReport repair_cost(const LrcCode& lrc, std::span<const int> erased);

}  // namespace cyclrc
