#include "cyclrc/locality.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "cyclrc/parallel.hpp"

namespace cyclrc {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t next = out * (n - k + i);
    if (next / (n - k + i) != out) return std::numeric_limits<std::uint64_t>::max();
    out = next / i;
  }
  return out;
}

int signed_mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

RepairGroupPartition repair_groups(int n, int r, int delta) {
  if (r < 1) throw Error(ErrorCode::ParamDomain, "r must be at least 1");
  if (delta < 2) throw Error(ErrorCode::ParamDomain, "delta must be at least 2");
  const int rho = r + delta - 1;
  if (n < 1 || n % rho != 0) {
    throw Error(ErrorCode::GroupSizeNotDividing,
                std::to_string(rho) + " does not divide " + std::to_string(n));
  }
  RepairGroupPartition out;
  out.n = n;
  out.group_size = rho;
  out.num_groups = n / rho;
  out.groups.resize(static_cast<std::size_t>(out.num_groups));
  for (int j = 0; j < out.num_groups; ++j) {
    for (int t = 0; t < rho; ++t) out.groups[static_cast<std::size_t>(j)].push_back(j + t * out.num_groups);
  }
  return out;
}

RestrictedCode restricted_code(const CyclicCode& code, std::span<const int> coords) {
  if (coords.empty()) throw Error(ErrorCode::ParamDomain, "empty coordinate set");
  std::vector<std::size_t> cols;
  for (int c : coords) {
    if (c < 0 || c >= code.length()) throw Error(ErrorCode::ParamDomain, "coordinate out of range");
    cols.push_back(static_cast<std::size_t>(c));
  }
  RestrictedCode out{std::vector<int>(coords.begin(), coords.end()),
                     code.generator_matrix().select_columns(cols).row_basis(), 0};
  out.dimension = static_cast<int>(out.generator.rows());
  return out;
}

std::optional<int> min_distance_by_dependent_columns(const Matrix& parity, std::uint64_t budget) {
  const std::size_t cols = parity.cols();
  const std::size_t rank = parity.rank();
  std::uint64_t examined = 0;
  // Any rank+1 columns are dependent.
  const std::size_t last = std::min(cols, rank + 1);
  for (std::size_t w = 1; w <= last; ++w) {
    const std::uint64_t subsets = binomial(cols, w);
    if (subsets > budget || examined + subsets > budget) return std::nullopt;
    examined += subsets;
    std::vector<std::size_t> pick(w);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (parity.select_columns(pick).rank() < w) return static_cast<int>(w);
      std::size_t i = w;
      while (i > 0 && pick[i - 1] == cols - w + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return static_cast<int>(cols) + 1;
}

DefiningSet restricted_defining_set(const DefiningSet& z, int rho) {
  const int n = z.length();
  if (rho < 1 || n % rho != 0) throw Error(ErrorCode::GroupSizeNotDividing, "group size must divide n");
  std::vector<long long> out;
  for (int u = 0; u < rho; ++u) {
    bool all = true;
    for (int v = u; v < n && all; v += rho) all = z.contains(v);
    if (all) out.push_back(u);
  }
  return DefiningSet(rho, out);
}

LocalityCertificate verify_r_delta_locality(const CyclicCode& code, int r, int delta,
                                            const LocalityOptions& opts) {
  const auto partition = repair_groups(code.length(), r, delta);
  const int rho = partition.group_size;
  const std::uint64_t q = code.q();
  const DefiningSet zs = restricted_defining_set(code.defining_set(), rho);

  LocalityCertificate cert;
  cert.r = r;
  cert.delta = delta;
  cert.groups.resize(partition.groups.size());

  parallel_for(partition.groups.size(), opts.jobs, [&](std::size_t j) {
    const auto& coords = partition.groups[j];
    const auto local = restricted_code(code, coords);
    LocalGroupCertificate g;
    g.coords = coords;
    g.dim = local.dimension;
    const int singleton = rho - g.dim + 1;
    if (search_space(q, static_cast<std::uint64_t>(g.dim)) <= opts.cap) {
      g.dmin = linear_code_min_distance(local.generator, {.cap = opts.cap}).distance;
      g.method = "exhaustive";
    } else if (opts.method == LocalityMethod::Exhaustive) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  std::to_string(q) + "^" + std::to_string(g.dim) + " local codewords exceed cap " +
                      std::to_string(opts.cap));
    } else if (rho - static_cast<int>(zs.size()) == g.dim && bch_lower_bound(zs) == singleton) {
      g.dmin = singleton;
      g.method = "bch-sandwich";
    } else if (auto d = min_distance_by_dependent_columns(local.generator.null_space(), opts.subset_budget)) {
      g.dmin = *d;
      g.method = "dual-columns";
    } else {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "local distance of group " + std::to_string(j) + " undetermined within the subset budget");
    }
    g.mds = g.dmin == singleton;
    cert.groups[j] = std::move(g);
  });

  cert.verdict = true;
  for (std::size_t j = 0; j < cert.groups.size(); ++j) {
    if (cert.groups[j].dmin < delta) {
      cert.verdict = false;
      cert.failing_group = static_cast<int>(j);
      break;
    }
  }
  return cert;
}

std::vector<std::vector<Elem>> local_parity_vectors(int n, int r, int delta,
                                                    std::span<const long long> offsets,
                                                    const FieldElement& alpha) {
  const auto partition = repair_groups(n, r, delta);
  const int nu = partition.num_groups;
  const auto& f = *alpha.field();
  std::vector<std::vector<Elem>> out;
  for (long long i : offsets) {
    const Elem step = alpha.pow(static_cast<std::int64_t>(nu) * signed_mod(i, n)).value();
    std::vector<Elem> v(static_cast<std::size_t>(n), 0);
    Elem x = 1;
    for (int t = 0; t < partition.group_size; ++t) {
      v[static_cast<std::size_t>(t * nu)] = x;
      x = f.mul(x, step);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Matrix expand_to_base_rows(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field) {
  const std::size_t n = vectors.empty() ? 0 : vectors.front().size();
  if (!field->has_base()) {
    Matrix m(field, vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t t = 0; t < n; ++t) m.at(i, t) = vectors[i][t];
    }
    return m.row_basis();
  }
  SubfieldBasis basis(field);
  const std::size_t s = basis.dimension();
  Matrix m(field->base(), vectors.size() * s, n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      const auto coords = basis.coordinates(vectors[i][t]);
      for (std::size_t c = 0; c < s; ++c) m.at(i * s + c, t) = coords[c];
    }
  }
  return m.row_basis();
}

int exact_locality_via_dual(const CyclicCode& code, std::uint64_t cap) {
  return min_distance_exhaustive(dual_code(code), {.cap = cap}).distance - 1;
}

bool shifted_coset_obstruction(int n, int r, int l) {
  const int m = r + 1;
  if (r < 1 || n % m != 0) throw Error(ErrorCode::GroupSizeNotDividing, "r+1 must divide n");
  const auto coset = DefiningSet::residue_class(n, m, l);
  return coset.intersected(coset.negated()).empty();
}

}  // namespace cyclrc
