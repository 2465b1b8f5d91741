#include "cracq/representation.hpp"

#include <algorithm>
#include <set>

#include "cracq/clifford.hpp"
#include "cracq/detail/parallel.hpp"
#include "cracq/errors.hpp"

namespace cracq {

namespace {

Cracovian pauli_x() {
  return Cracovian::from_rows({{Scalar{0, 0}, Scalar{1, 0}}, {Scalar{1, 0}, Scalar{0, 0}}});
}
Cracovian pauli_y() {
  return Cracovian::from_rows({{Scalar{0, 0}, Scalar{0, -1}}, {Scalar{0, 1}, Scalar{0, 0}}});
}
Cracovian pauli_z() {
  return Cracovian::from_rows({{Scalar{1, 0}, Scalar{0, 0}}, {Scalar{0, 0}, Scalar{-1, 0}}});
}

// Kronecker product of two square tables, in row-display semantics.
Cracovian kron(const Cracovian& a, const Cracovian& b) {
  const std::size_t da = a.n_rows();
  const std::size_t db = b.n_rows();
  Cracovian out(da * db, da * db);
  for (std::size_t r = 0; r < da * db; ++r)
    for (std::size_t c = 0; c < da * db; ++c)
      out(c, r) = a(c / db, r / db) * b(c % db, r % db);
  return out;
}

// Maximal known family of antisymmetric anticommuting involutions at
// dimension 2^m (2m - 1 members), built by doubling. The companion `spare`
// is an antisymmetric involution commuting with every family member; it
// seeds the third slot of the next doubling.
struct AntisymmetricFamily {
  std::vector<Cracovian> members;
  Cracovian spare;
};

AntisymmetricFamily antisymmetric_family(unsigned m) {
  AntisymmetricFamily fam{{pauli_y()}, pauli_y()};
  for (unsigned level = 1; level < m; ++level) {
    const std::size_t d = std::size_t{1} << level;
    std::vector<Cracovian> next;
    next.reserve(fam.members.size() + 2);
    for (const auto& g : fam.members) next.push_back(kron(pauli_x(), g));
    next.push_back(kron(pauli_y(), transposing_cracovian(d)));
    next.push_back(kron(pauli_z(), fam.spare));
    fam.members = std::move(next);
    fam.spare = kron(transposing_cracovian(2), fam.spare);
  }
  return fam;
}

bool gamma_conditions_hold(std::span<const Cracovian> gammas) {
  if (gammas.empty()) return false;
  const std::size_t d = gammas.front().n_rows();
  const Cracovian identity = transposing_cracovian(d);
  for (const auto& g : gammas) {
    if (!g.square() || g.n_rows() != d) return false;
    if (!approx_equal(transpose(g), -g, 0.0)) return false;
    if (!approx_equal(matrix_product(g, g), identity, 0.0)) return false;
  }
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      if (!approx_equal(matrix_product(gammas[i], gammas[j]),
                        -matrix_product(gammas[j], gammas[i]), 0.0))
        return false;
  return true;
}

}  // namespace

std::vector<Cracovian> build_gamma_matrices(unsigned n_generators) {
  if (n_generators < 1 || n_generators > 10)
    throw ArgumentError("generator count " + std::to_string(n_generators) +
                        " outside 1..10");
  constexpr unsigned kMaxDoublings = 8;
  for (unsigned m = (n_generators + 1) / 2; m <= kMaxDoublings; ++m) {
    const auto family = antisymmetric_family(m);
    if (family.members.size() < n_generators) continue;
    std::vector<Cracovian> candidate(family.members.begin(),
                                     family.members.begin() + n_generators);
    if (gamma_conditions_hold(candidate)) return candidate;
  }
  throw ConstructionError("no antisymmetric anticommuting family of " +
                          std::to_string(n_generators) + " involutions found up to dimension " +
                          std::to_string(std::size_t{1} << kMaxDoublings));
}

Representation extend_to_representation(const Quasigroup& q,
                                        std::span<const Cracovian> gammas) {
  const unsigned n = static_cast<unsigned>(gammas.size());
  if (n == 0) throw ArgumentError("no generator tables given");
  if (q.order() != (std::size_t{1} << (n + 1)))
    throw ArgumentError("quasigroup order " + std::to_string(q.order()) +
                        " does not match " + std::to_string(n) +
                        " generators (expected " +
                        std::to_string(std::size_t{1} << (n + 1)) + ")");
  const std::size_t d = gammas.front().n_rows();
  for (const auto& g : gammas)
    if (!g.square() || g.n_rows() != d)
      throw DimensionError("generator tables must be square and equally sized");

  Representation rep;
  rep.dimension = d;
  rep.names = q.names;
  rep.tables.reserve(q.order());
  const Cracovian identity = transposing_cracovian(d);

  for (const auto& decorated : q.names) {
    if (decorated.empty() || decorated.front() != '^')
      throw ArgumentError("quasigroup element '" + decorated +
                          "' does not use the caret naming of clifford quasigroups");
    const CliffordElement el = parse_clifford_name(decorated.substr(1), n);
    Cracovian table = identity;
    for (unsigned bit = 0; bit < n; ++bit)
      if (el.mask & (1u << bit)) table = matrix_product(table, gammas[bit]);
    rep.tables.push_back(el.sign < 0 ? -table : table);
  }

  if (!approx_equal(rep.tables[q.tau], identity, 0.0))
    throw ConstructionError("right unit did not map to the transposing cracovian");
  return rep;
}

std::optional<PairViolation> verify_crac_homomorphism(const Quasigroup& q,
                                                      const Representation& rep,
                                                      double tol, unsigned jobs) {
  const std::size_t n = q.order();
  if (rep.tables.size() != n)
    throw ArgumentError("representation covers " + std::to_string(rep.tables.size()) +
                        " elements, quasigroup has " + std::to_string(n));
  for (const auto& t : rep.tables)
    if (!t.square() || t.n_rows() != rep.dimension)
      throw DimensionError("representation tables must all be " +
                           std::to_string(rep.dimension) + "x" +
                           std::to_string(rep.dimension));

  const auto bad = [&](std::size_t idx) {
    const std::size_t a = idx / n;
    const std::size_t b = idx % n;
    return !approx_equal(crac_product(rep.tables[a], rep.tables[b]),
                         rep.tables[q.dot(a, b)], tol);
  };
  if (const auto hit = detail::find_first_index(n * n, jobs, bad)) {
    const std::size_t a = *hit / n;
    const std::size_t b = *hit % n;
    const double dev = max_abs_difference(
        crac_product(rep.tables[a], rep.tables[b]), rep.tables[q.dot(a, b)]);
    return PairViolation{a, b,
                         "C(" + q.names[a] + ") . C(" + q.names[b] + ") != C(" +
                             q.names[q.dot(a, b)] + "), max deviation " +
                             std::to_string(dev)};
  }
  return std::nullopt;
}

std::size_t commutant_dimension(std::span<const Cracovian> tables, double tol) {
  if (tables.empty()) throw ArgumentError("commutant of an empty table set");
  const std::size_t d = tables.front().n_rows();
  double scale = 0.0;
  for (const auto& t : tables) {
    if (!t.square() || t.n_rows() != d)
      throw DimensionError("commutant needs equally sized square tables, got " +
                           t.shape() + " vs " + std::to_string(d) + "x" +
                           std::to_string(d));
    for (Scalar v : t.entries()) scale = std::max(scale, std::abs(v));
  }
  const double threshold = tol * std::max(1.0, scale);

  // Row echelon over the unknowns X_{rc} (row-major), streamed one
  // commutator equation at a time: for each table A and each position
  // (r, c), sum_k X_{rk} A_{kc} - A_{rk} X_{kc} = 0.
  const std::size_t unknowns = d * d;
  std::vector<std::vector<Scalar>> pivots;           // normalized echelon rows
  std::vector<std::size_t> pivot_cols;
  std::vector<Scalar> row(unknowns);

  for (const auto& t : tables) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        std::fill(row.begin(), row.end(), Scalar{0.0, 0.0});
        for (std::size_t k = 0; k < d; ++k) {
          row[r * d + k] += t(c, k);  // A_{kc} in display terms
          row[k * d + c] -= t(k, r);  // A_{rk}
        }
        for (std::size_t p = 0; p < pivots.size(); ++p) {
          const Scalar f = row[pivot_cols[p]];
          if (f == Scalar{0.0, 0.0}) continue;
          for (std::size_t u = 0; u < unknowns; ++u) row[u] -= f * pivots[p][u];
        }
        std::size_t lead = unknowns;
        double best = threshold;
        for (std::size_t u = 0; u < unknowns; ++u) {
          const double v = std::abs(row[u]);
          if (v > best) {
            best = v;
            lead = u;
          }
        }
        if (lead == unknowns) continue;
        const Scalar p = row[lead];
        for (auto& v : row) v /= p;
        pivots.push_back(row);
        pivot_cols.push_back(lead);
      }
    }
  }
  return unknowns - pivots.size();
}

Representation match_representation(const Quasigroup& q, const Representation& loose) {
  std::set<std::string> want(q.names.begin(), q.names.end());
  std::set<std::string> have(loose.names.begin(), loose.names.end());
  if (want != have) {
    std::string missing, extra;
    for (const auto& name : want)
      if (!have.count(name)) missing += (missing.empty() ? "" : " ") + name;
    for (const auto& name : have)
      if (!want.count(name)) extra += (extra.empty() ? "" : " ") + name;
    throw SchemaError("element sets disagree; missing from representation: {" + missing +
                      "}, not in quasigroup: {" + extra + "}");
  }

  Representation rep;
  rep.dimension = loose.dimension;
  rep.names = q.names;
  rep.tables.reserve(q.order());
  for (const auto& name : q.names) {
    const auto it = std::find(loose.names.begin(), loose.names.end(), name);
    rep.tables.push_back(loose.tables[static_cast<std::size_t>(it - loose.names.begin())]);
  }
  return rep;
}

}  // namespace cracq
