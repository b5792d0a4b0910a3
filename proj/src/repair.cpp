#include "cyclrc/repair.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cyclrc {

Word to_word(std::span<const Elem> codeword) { return Word(codeword.begin(), codeword.end()); }

Word with_erasures(const Word& word, std::span<const int> coords) {
  Word out = word;
  for (int c : coords) {
    if (c < 0 || c >= static_cast<int>(out.size())) throw Error(ErrorCode::ParamDomain, "erasure out of range");
    out[static_cast<std::size_t>(c)].reset();
  }
  return out;
}

std::vector<int> erased_positions(const Word& word) {
  std::vector<int> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

Encoder::Encoder(const CyclicCode& code) : systematic_(code.generator_matrix()) {
  const auto pivots = systematic_.rref_in_place();
  info_.assign(pivots.begin(), pivots.end());
}

std::vector<Elem> Encoder::encode(std::span<const Elem> message) const {
  if (message.size() != systematic_.rows()) throw Error(ErrorCode::ParamDomain, "message length must equal k");
  if (systematic_.rows() == 0) return std::vector<Elem>(systematic_.cols(), 0);
  return vec_mul(message, systematic_);
}

std::vector<Elem> encode(const CyclicCode& code, std::span<const Elem> message) {
  return Encoder(code).encode(message);
}

LocalRepairer::LocalRepairer(const LrcCode& lrc) : lrc_(&lrc) {
  for (const auto& group : lrc.groups.groups) parity_.push_back(restricted_code(lrc.code, group).generator.null_space());
}

std::map<int, Elem> LocalRepairer::repair_group(int target, const std::vector<bool>& erased,
                                                const SymbolReader& read) const {
  const auto& p = lrc_->params;
  const auto& groups = lrc_->groups;
  if (target < 0 || target >= groups.n) throw Error(ErrorCode::ParamDomain, "target out of range");
  if (!erased[static_cast<std::size_t>(target)]) {
    throw Error(ErrorCode::NotErased, "coordinate " + std::to_string(target) + " is not erased");
  }
  const int g = groups.group_of(target);
  const auto& coords = groups.groups[static_cast<std::size_t>(g)];
  int count = 0;
  for (int c : coords) count += erased[static_cast<std::size_t>(c)];
  if (count > p.delta - 1) {
    throw Error(ErrorCode::TooManyLocalErasures, "group " + std::to_string(g) + " has " + std::to_string(count) +
                                                     " erasures, at most " + std::to_string(p.delta - 1) +
                                                     " are locally repairable");
  }
  // Read the first r surviving symbols; every other group position is solved for.
  const int want = groups.group_size - (p.delta - 1);
  std::vector<std::size_t> known_cols, unknown_cols;
  std::vector<Elem> known_vals;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    const int c = coords[t];
    if (!erased[static_cast<std::size_t>(c)] && static_cast<int>(known_cols.size()) < want) {
      const auto v = read(c);
      if (!v) throw Error(ErrorCode::ParamDomain, "reader returned an erasure for a surviving coordinate");
      known_cols.push_back(t);
      known_vals.push_back(*v);
    } else {
      unknown_cols.push_back(t);
    }
  }
  const Matrix& h = parity_[static_cast<std::size_t>(g)];
  const auto& f = *h.field();
  std::vector<Elem> rhs(h.rows(), 0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < known_cols.size(); ++j) acc = f.add(acc, f.mul(h.at(i, known_cols[j]), known_vals[j]));
    rhs[i] = f.neg(acc);
  }
  bool unique = false;
  const auto sol = solve(h.select_columns(unknown_cols), rhs, &unique);
  if (!sol) throw Error(ErrorCode::InconsistentWord, "surviving symbols of group " + std::to_string(g) + " are inconsistent");
  if (!unique) {
    throw Error(ErrorCode::TooManyLocalErasures, "local code of group " + std::to_string(g) + " cannot fix these erasures");
  }
  std::map<int, Elem> out;
  for (std::size_t j = 0; j < unknown_cols.size(); ++j) {
    const int c = coords[unknown_cols[j]];
    if (erased[static_cast<std::size_t>(c)]) out[c] = (*sol)[j];
  }
  return out;
}

Elem LocalRepairer::repair(const Word& word, int target) const {
  std::vector<bool> erased(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) erased[i] = !word[i];
  if (target < 0 || target >= static_cast<int>(word.size())) throw Error(ErrorCode::ParamDomain, "target out of range");
  return repair_group(target, erased, [&](int c) { return word[static_cast<std::size_t>(c)]; }).at(target);
}

Elem local_repair(const LrcCode& lrc, const Word& word, int target) { return LocalRepairer(lrc).repair(word, target); }

std::map<int, Elem> repair_group(const LrcCode& lrc, const Word& word, int target) {
  std::vector<bool> erased(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) erased[i] = !word[i];
  if (target < 0 || target >= static_cast<int>(word.size())) throw Error(ErrorCode::ParamDomain, "target out of range");
  return LocalRepairer(lrc).repair_group(target, erased, [&](int c) { return word[static_cast<std::size_t>(c)]; });
}

std::vector<Elem> global_erasure_decode(const CyclicCode& code, const Word& word) {
  const int n = code.length();
  if (static_cast<int>(word.size()) != n) throw Error(ErrorCode::ParamDomain, "word length mismatch");
  const auto erased = erased_positions(word);
  if (static_cast<int>(erased.size()) > n - code.dimension()) {
    throw Error(ErrorCode::TooManyErasures, std::to_string(erased.size()) + " erasures exceed n-k = " +
                                                std::to_string(n - code.dimension()));
  }
  const Matrix& h = code.parity_check_matrix();
  const auto& f = *code.base_field();
  std::vector<Elem> rhs(h.rows(), 0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Elem acc = 0;
    for (int c = 0; c < n; ++c) {
      if (word[static_cast<std::size_t>(c)]) acc = f.add(acc, f.mul(h.at(i, c), *word[static_cast<std::size_t>(c)]));
    }
    rhs[i] = f.neg(acc);
  }
  std::vector<std::size_t> cols(erased.begin(), erased.end());
  bool unique = false;
  const auto sol = solve(h.select_columns(cols), rhs, &unique);
  if (!sol) throw Error(ErrorCode::InconsistentWord, "no codeword agrees with the unerased symbols");
  if (!unique) throw Error(ErrorCode::TooManyErasures, "erasure pattern is ambiguous: several codewords agree");
  std::vector<Elem> out(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(c)] = word[static_cast<std::size_t>(c)].value_or(0);
  for (std::size_t j = 0; j < cols.size(); ++j) out[cols[j]] = (*sol)[j];
  return out;
}

RepairReport repair_cost(const LrcCode& lrc, std::span<const int> erased) {
  const auto& groups = lrc.groups;
  std::set<int> unique(erased.begin(), erased.end());
  std::vector<int> per_group(static_cast<std::size_t>(groups.num_groups), 0);
  for (int c : unique) {
    if (c < 0 || c >= groups.n) throw Error(ErrorCode::ParamDomain, "erasure out of range");
    ++per_group[static_cast<std::size_t>(groups.group_of(c))];
  }
  RepairReport report;
  const int local_reads = groups.group_size - (lrc.params.delta - 1);
  const int global_reads = groups.n - static_cast<int>(unique.size());
  for (int c : unique) {
    RepairEntry e;
    e.coord = c;
    e.group = groups.group_of(c);
    e.local = per_group[static_cast<std::size_t>(e.group)] <= lrc.params.delta - 1;
    e.reads = e.local ? local_reads : global_reads;
    (e.local ? report.local_repairs : report.global_repairs) += 1;
    report.total_reads += e.reads;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace cyclrc
