#include "cyclrc/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cyclrc {

namespace {

Json digits_of(const Field& f, Elem e) {
  Json out = Json::array();
  for (auto d : f.digits(e)) out.push_back(d);
  return out;
}

Json int_list(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

Json signed_list(const std::vector<long long>& v) {
  Json out = Json::array();
  for (long long x : v) out.push_back(x);
  return out;
}

}  // namespace

Json field_descriptor(const Field& field) {
  Json out;
  out["p"] = field.characteristic();
  out["m"] = field.degree();
  Json mod = Json::array();
  for (auto c : field.modulus()) mod.push_back(c);
  out["modulus"] = mod;
  out["generator"] = digits_of(field, field.generator());
  return out;
}

Json code_descriptor(const CyclicCode& code) {
  Json out;
  out["field"] = field_descriptor(*code.base_field());
  out["n"] = code.length();
  out["k"] = code.dimension();
  out["defining_set"] = int_list(code.defining_set().exponents());
  Json g = Json::array();
  for (Elem c : code.generator_poly().coeffs()) g.push_back(digits_of(*code.base_field(), c));
  out["generator_poly"] = g;
  out["bch_bound"] = bch_lower_bound(code.defining_set());
  return out;
}

Json to_json(const LocalityCertificate& cert) {
  Json out;
  out["r"] = cert.r;
  out["delta"] = cert.delta;
  Json groups = Json::array();
  for (const auto& g : cert.groups) {
    Json j;
    j["coords"] = int_list(g.coords);
    j["dim"] = g.dim;
    j["dmin"] = g.dmin;
    j["mds"] = g.mds;
    j["method"] = g.method;
    groups.push_back(j);
  }
  out["groups"] = groups;
  out["verdict"] = cert.verdict;
  return out;
}

Json to_json(const OptimalityCertificate& cert) {
  Json out;
  out["dims_ok"] = cert.dims_ok;
  out["bch_bound"] = cert.bch_bound;
  out["singleton_bound"] = cert.singleton_bound;
  out["d_exact_by_sandwich"] = cert.d_exact_by_sandwich;
  out["d_exhaustive"] = cert.d_exhaustive ? Json(*cert.d_exhaustive) : Json(nullptr);
  out["locality"] = to_json(cert.locality);
  out["verdict"] = cert.verdict;
  return out;
}

Json to_json(const RepairReport& report) {
  Json out;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["coord"] = e.coord;
    j["group"] = e.group;
    j["local"] = e.local;
    j["reads"] = e.reads;
    entries.push_back(j);
  }
  out["entries"] = entries;
  out["local_repairs"] = report.local_repairs;
  out["global_repairs"] = report.global_repairs;
  out["total_reads"] = report.total_reads;
  return out;
}

Json lrc_descriptor(const LrcCode& lrc, const OptimalityCertificate* cert) {
  const auto& p = lrc.params;
  Json code = code_descriptor(lrc.code);
  Json out;
  out["field"] = code["field"];
  out["n"] = p.n;
  out["k"] = p.k;
  out["r"] = p.r;
  out["delta"] = p.delta;
  out["b"] = p.b;
  out["family"] = std::string(to_string(p.family));
  out["alternate"] = p.alternate;
  out["theorem"] = lrc.plan.recipe;
  out["locality_offsets"] = signed_list(lrc.plan.offsets);
  out["defining_set"] = code["defining_set"];
  out["generator_poly"] = code["generator_poly"];
  out["bch_bound"] = code["bch_bound"];
  out["singleton_bound"] = p.delta == 2 ? singleton_bound_r_local(p.n, p.k, p.r)
                                        : singleton_bound_r_delta(p.n, p.k, p.r, p.delta);
  Json groups = Json::array();
  for (const auto& g : lrc.groups.groups) groups.push_back(int_list(g));
  out["groups"] = groups;
  out["certificate"] = cert ? to_json(*cert) : Json(nullptr);
  return out;
}

LrcParams params_from_descriptor(const Json& d) {
  try {
    LrcParams p;
    const auto& f = d.at("field");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < f.at("m").get<unsigned>(); ++i) q *= f.at("p").get<std::uint64_t>();
    p.q = q;
    p.n = d.at("n").get<int>();
    p.k = d.at("k").get<int>();
    p.r = d.at("r").get<int>();
    p.delta = d.at("delta").get<int>();
    p.b = d.at("b").get<int>();
    p.family = parse_family(d.at("family").get<std::string>());
    p.alternate = d.value("alternate", false);
    if (p.family == Family::QMinus1 && d.contains("locality_offsets")) {
      p.offsets = d.at("locality_offsets").get<std::vector<long long>>();
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParamDomain, std::string("malformed descriptor: ") + e.what());
  }
}

long long signed_exponent(int e, int n) { return 2LL * e <= n ? e : static_cast<long long>(e) - n; }

std::string format_signed(const DefiningSet& set) {
  const int n = set.length();
  std::vector<long long> v;
  for (int e : set.exponents()) v.push_back(signed_exponent(e, n));
  std::sort(v.begin(), v.end(), [](long long a, long long b) {
    const long long aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
    return aa != bb ? aa < bb : a > b;
  });
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    if (v[i] > 0 && i + 1 < v.size() && v[i + 1] == -v[i]) {
      out += "±" + std::to_string(v[i]);
      ++i;
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out + "}";
}

std::string csv_header() {
  return "q,n,k,r,delta,b,family,theorem,|Z|,bch,singleton,d_exhaustive,locality_ok,optimal";
}

std::string csv_row(const LrcCode& lrc, const OptimalityCertificate& cert) {
  const auto& p = lrc.params;
  std::ostringstream os;
  os << p.q << ',' << p.n << ',' << p.k << ',' << p.r << ',' << p.delta << ',' << p.b << ','
     << to_string(p.family) << ',' << lrc.plan.recipe << ',' << lrc.code.defining_set().size() << ','
     << cert.bch_bound << ',' << cert.singleton_bound << ',';
  if (cert.d_exhaustive) os << *cert.d_exhaustive;
  os << ',' << (cert.locality.verdict ? "true" : "false") << ',' << (cert.verdict ? "true" : "false");
  return os.str();
}

std::string format_word(const Word& word) {
  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    if (word[i]) {
      std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(*word[i]));
      out += buf;
    } else {
      out += "·";
    }
  }
  return out;
}

Word parse_word(std::string_view text, const Field& field) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "·" || tok == "." || tok == "_") {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v >= field.size()) {
      throw Error(ErrorCode::ParamDomain, "bad symbol '" + tok + "' for GF(" + std::to_string(field.size()) + ")");
    }
    out.emplace_back(static_cast<Elem>(v));
  }
  return out;
}

}  // namespace cyclrc
