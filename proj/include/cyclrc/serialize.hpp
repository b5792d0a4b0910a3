#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "cyclrc/constructions.hpp"
#include "cyclrc/repair.hpp"

namespace cyclrc {

using Json = nlohmann::ordered_json;

/// {p, m, modulus, generator}; modulus and generator as GF(p) digit lists.
Json field_descriptor(const Field& field);
/// {field, n, k, defining_set, generator_poly, bch_bound}.
Json code_descriptor(const CyclicCode& code);
Json to_json(const LocalityCertificate& cert);
Json to_json(const OptimalityCertificate& cert);
Json to_json(const RepairReport& report);
/// Full descriptor of a constructed LRC, with the certificate when given.
Json lrc_descriptor(const LrcCode& lrc, const OptimalityCertificate* cert = nullptr);
/// Construction parameters stored in a descriptor.
LrcParams params_from_descriptor(const Json& descriptor);

/// Exponent e in [0, n) shown as e when e <= n/2, else e - n.
long long signed_exponent(int e, int n);
/// "{0, ±1, ±2, 25}": ordered by magnitude, +e/-e pairs merged.
std::string format_signed(const DefiningSet& set);

std::string csv_header();
std::string csv_row(const LrcCode& lrc, const OptimalityCertificate& cert);

/// Space-separated hex symbols, "·" for erasures.
std::string format_word(const Word& word);
/// Accepts "·", "." or "_" as erasure marks.
Word parse_word(std::string_view text, const Field& field);

}  // namespace cyclrc
