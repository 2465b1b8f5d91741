#include "cracq/quasigroup.hpp"

#include <algorithm>
#include <random>

#include "cracq/detail/parallel.hpp"
#include "cracq/errors.hpp"

namespace cracq {

namespace {

// First Latin-square defect of a row-major table, if any.
std::optional<Violation> latin_violation(const std::vector<std::string>& names,
                                         const std::vector<std::size_t>& table) {
  const std::size_t n = names.size();
  std::vector<std::size_t> first_seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(first_seen.begin(), first_seen.end(), n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t v = table[r * n + c];
      if (first_seen[v] != n)
        return Violation{"latin-square",
                         {r, first_seen[v], c},
                         "row " + names[r] + " repeats " + names[v] + " at columns " +
                             names[first_seen[v]] + " and " + names[c]};
      first_seen[v] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(first_seen.begin(), first_seen.end(), n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t v = table[r * n + c];
      if (first_seen[v] != n)
        return Violation{"latin-square",
                         {c, first_seen[v], r},
                         "column " + names[c] + " repeats " + names[v] + " at rows " +
                             names[first_seen[v]] + " and " + names[r]};
      first_seen[v] = r;
    }
  }
  return std::nullopt;
}

// Sweeps all n^arity tuples when that fits the budget, otherwise a fixed
// number of seeded samples. Returns the first bad tuple and a mode note.
struct TupleSweep {
  std::optional<std::vector<std::size_t>> witness;
  std::string mode;
};

template <class Bad>
TupleSweep sweep_tuples(std::size_t n, std::size_t arity, const LawOptions& opt, Bad bad) {
  double total = 1.0;
  for (std::size_t i = 0; i < arity; ++i) total *= static_cast<double>(n);
  std::vector<std::size_t> tuple(arity);

  if (total <= static_cast<double>(opt.exhaustive_budget)) {
    const std::size_t count = static_cast<std::size_t>(total);
    const auto decode_bad = [&](std::size_t idx) {
      std::vector<std::size_t> t(arity);
      std::size_t rest = idx;
      for (std::size_t i = arity; i-- > 0;) {
        t[i] = rest % n;
        rest /= n;
      }
      return bad(t);
    };
    if (const auto hit = detail::find_first_index(count, opt.jobs, decode_bad)) {
      std::size_t rest = *hit;
      for (std::size_t i = arity; i-- > 0;) {
        tuple[i] = rest % n;
        rest /= n;
      }
      return {tuple, "exhaustive"};
    }
    return {std::nullopt, "exhaustive"};
  }

  std::mt19937_64 rng(opt.sample_seed + arity);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    for (auto& v : tuple) v = pick(rng);
    if (bad(tuple)) return {tuple, "sampled " + std::to_string(opt.samples)};
  }
  return {std::nullopt, "sampled " + std::to_string(opt.samples)};
}

std::string tuple_names(const Quasigroup& q, const std::vector<std::size_t>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " ";
    out += q.names[t[i]];
  }
  return out;
}

}  // namespace

std::size_t Quasigroup::dot(std::size_t a, std::size_t b) const {
  if (a >= order() || b >= order())
    throw DimensionError("quasigroup index out of range for order " +
                         std::to_string(order()));
  return table[a * order() + b];
}

Quasigroup build_quasigroup(const FiniteGroup& g, const Involution& inv) {
  const std::size_t n = g.order();
  if (n == 0) throw ArgumentError("group needs at least the unit element");
  if (g.table.size() != n * n)
    throw ArgumentError("cayley table size does not match the group order");
  if (inv.map.size() != n)
    throw ArgumentError("involution permutation has length " +
                        std::to_string(inv.map.size()) + ", expected " + std::to_string(n));
  for (std::size_t v : inv.map)
    if (v >= n) throw ArgumentError("involution maps outside the group");

  Quasigroup q;
  q.tau = g.unit;
  q.names.reserve(n);
  for (const auto& name : g.names) q.names.push_back("^" + name);
  q.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) q.table[a * n + b] = g.product(inv.map[b], a);

  if (const auto bad = latin_violation(q.names, q.table))
    throw ArgumentError("dot table is not a Latin square (" + bad->detail +
                        "); the group or involution input is invalid");
  for (std::size_t a = 0; a < n; ++a)
    if (q.table[a * n + q.tau] != a)
      throw ArgumentError("right unit law fails at " + q.names[a] +
                          "; the involution does not fix the unit");
  return q;
}

std::size_t chain_dot(const Quasigroup& q, std::span<const std::size_t> factors) {
  if (factors.empty()) throw ArgumentError("chain of an empty factor list");
  std::size_t acc = factors[0];
  if (acc >= q.order()) throw DimensionError("quasigroup index out of range");
  for (std::size_t i = 1; i < factors.size(); ++i) acc = q.dot(acc, factors[i]);
  return acc;
}

std::size_t right_inverse(const Quasigroup& q, const FiniteGroup& g,
                          const Involution& inv, std::size_t a) {
  if (g.order() != q.order() || inv.map.size() != q.order())
    throw ArgumentError("quasigroup, group and involution orders disagree");
  if (a >= q.order()) throw DimensionError("quasigroup index out of range");
  return inv.map[g.inverse(a)];
}

LeftUnitScan left_unit_witness(const Quasigroup& q) {
  const std::size_t n = q.order();
  LeftUnitScan scan;
  scan.witnesses.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (q.dot(x, a) != a) {
        scan.witnesses.push_back(a);
        found = true;
        break;
      }
    }
    if (!found) {
      scan.left_unit = x;
      scan.witnesses.clear();
      return scan;
    }
  }
  return scan;
}

bool LawReport::all_pass() const {
  for (const auto& law : laws)
    if (!law.passed) return false;
  return true;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& result : laws)
    if (result.law == law) return &result;
  return nullptr;
}

LawReport verify_quasigroup_laws(const Quasigroup& q, const FiniteGroup& g,
                                 const Involution& inv, const LawOptions& options) {
  const std::size_t n = q.order();
  if (g.order() != n || inv.map.size() != n)
    throw ArgumentError("quasigroup, group and involution orders disagree");
  if (q.table.size() != n * n)
    throw ArgumentError("dot table size does not match the quasigroup order");
  for (std::size_t v : q.table)
    if (v >= n) throw ArgumentError("dot table entry out of range");

  const std::size_t tau = q.tau;
  std::vector<std::size_t> tau_dot(n);  // tau . a, which equals I(a)
  std::vector<std::size_t> q_inv(n);    // the two-sided dot inverse I(a^{-1})
  for (std::size_t a = 0; a < n; ++a) {
    tau_dot[a] = q.dot(tau, a);
    q_inv[a] = inv.map[g.inverse(a)];
  }

  LawReport report;
  const auto add = [&report](std::string law, bool passed, std::string note,
                             std::optional<Violation> violation = std::nullopt) {
    report.laws.push_back({std::move(law), passed, std::move(note), std::move(violation)});
  };
  const auto add_sweep = [&](const std::string& law, std::size_t arity, auto bad) {
    auto sweep = sweep_tuples(n, arity, options, bad);
    if (sweep.witness)
      add(law, false, sweep.mode,
          Violation{law, *sweep.witness, "witness: " + tuple_names(q, *sweep.witness)});
    else
      add(law, true, sweep.mode);
  };

  if (const auto bad = latin_violation(q.names, q.table))
    add("latin-square", false, "", *bad);
  else
    add("latin-square", true, "");

  add_sweep("right-unit", 1,
            [&](const std::vector<std::size_t>& t) { return q.dot(t[0], tau) != t[0]; });
  add_sweep("tau-left-action", 1, [&](const std::vector<std::size_t>& t) {
    return tau_dot[t[0]] != inv.map[t[0]];
  });
  add_sweep("tau-left-twice", 1, [&](const std::vector<std::size_t>& t) {
    return q.dot(tau, tau_dot[t[0]]) != t[0];
  });
  add_sweep("quasi-associativity", 3, [&](const std::vector<std::size_t>& t) {
    return q.dot(q.dot(t[0], t[1]), t[2]) != q.dot(t[0], q.dot(t[2], tau_dot[t[1]]));
  });
  add_sweep("group-product-bridge", 2, [&](const std::vector<std::size_t>& t) {
    return g.product(t[0], t[1]) != q.dot(t[1], inv.map[t[0]]);
  });
  add_sweep("inverse-two-sided", 1, [&](const std::vector<std::size_t>& t) {
    return q.dot(t[0], q_inv[t[0]]) != tau || q.dot(q_inv[t[0]], t[0]) != tau;
  });
  add_sweep("shifted-inverse-product", 1, [&](const std::vector<std::size_t>& t) {
    return q.dot(tau_dot[t[0]], tau_dot[q_inv[t[0]]]) != tau;
  });
  add_sweep("product-inverse", 2, [&](const std::vector<std::size_t>& t) {
    return q_inv[q.dot(t[0], t[1])] != q.dot(q_inv[t[0]], q_inv[t[1]]);
  });
  add_sweep("inverse-of-shifted", 1, [&](const std::vector<std::size_t>& t) {
    return q_inv[tau_dot[t[0]]] != tau_dot[q_inv[t[0]]];
  });
  add_sweep("reversal-pair", 2, [&](const std::vector<std::size_t>& t) {
    return q.dot(tau, q.dot(t[0], t[1])) != q.dot(t[1], t[0]);
  });
  add_sweep("reversal-triple", 3, [&](const std::vector<std::size_t>& t) {
    const std::size_t lhs = q.dot(tau, q.dot(q.dot(t[0], t[1]), t[2]));
    const std::size_t rhs = q.dot(q.dot(t[2], tau_dot[t[1]]), t[0]);
    return lhs != rhs;
  });

  for (std::size_t p = 2; p <= options.chain_depth; ++p) {
    const std::string suffix = " p=" + std::to_string(p);
    add_sweep("chain-inverse" + suffix, p, [&](const std::vector<std::size_t>& t) {
      std::size_t lhs = chain_dot(q, t);
      std::vector<std::size_t> inverted(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) inverted[i] = q_inv[t[i]];
      return q_inv[lhs] != chain_dot(q, inverted);
    });
    add_sweep("chain-reversal" + suffix, p, [&](const std::vector<std::size_t>& t) {
      const std::size_t lhs = q.dot(tau, chain_dot(q, t));
      // Reversed factor list with tau applied to every interior factor.
      std::vector<std::size_t> reversed(t.size());
      reversed[0] = t[t.size() - 1];
      for (std::size_t i = 1; i + 1 < t.size(); ++i)
        reversed[i] = tau_dot[t[t.size() - 1 - i]];
      reversed[t.size() - 1] = t[0];
      return lhs != chain_dot(q, reversed);
    });
  }

  {
    std::optional<std::vector<std::size_t>> witness;
    for (std::size_t a = 0; a < n && !witness; ++a)
      for (std::size_t b = 0; b < n && !witness; ++b)
        for (std::size_t c = 0; c < n && !witness; ++c)
          if (q.dot(q.dot(a, b), c) != q.dot(a, q.dot(b, c)))
            witness = std::vector<std::size_t>{a, b, c};
    if (witness)
      add("nonassociativity", true, "nonassociative, witness: " + tuple_names(q, *witness));
    else
      add("nonassociativity", true, "associative (degenerate case)");
  }

  {
    const auto scan = left_unit_witness(q);
    if (scan.left_unit)
      add("left-unit-absence", true,
          "left unit exists (degenerate case): " + q.names[*scan.left_unit]);
    else
      add("left-unit-absence", true, "no left unit; witness found for every candidate");
  }

  return report;
}

}  // namespace cracq
