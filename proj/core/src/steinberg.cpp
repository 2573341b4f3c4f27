#include "ladder/steinberg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ladder/bernoulli.hpp"
#include "ladder/fp_matrix.hpp"

namespace ladder {

namespace {

// Combine raw (index, coeff) terms: drop index 1 (f(1) = 0), merge
// duplicates, drop zero coefficients. Result sorted by index.
SteinbergRow combine(std::map<u32, u32>&& terms, u32 p) {
  SteinbergRow row;
  for (auto& [idx, coeff] : terms) {
    u32 c = coeff % p;
    if (idx != 1 && c != 0) row.push_back({idx, c});
  }
  return row;
}

void add_term(std::map<u32, u32>& terms, u32 idx, u32 coeff, u32 p) {
  auto [it, fresh] = terms.emplace(idx, coeff);
  if (!fresh) it->second = add_mod(it->second, coeff, p);
}

// Union-find with multipliers: f(x) = weight[x] * f(root(x)), with a
// per-class "forced zero" flag.
struct ScaledClasses {
  explicit ScaledClasses(u32 p, u32 n_indices)
      : p_(p), parent_(n_indices), weight_(n_indices, 1),
        zero_(n_indices, false) {
    for (u32 i = 0; i < n_indices; ++i) parent_[i] = i;
  }

  // returns (root, multiplier)
  std::pair<u32, u32> find(u32 x) {
    if (parent_[x] == x) return {x, weight_[x]};
    auto [root, w] = find(parent_[x]);
    parent_[x] = root;
    weight_[x] = mul_mod(weight_[x], w, p_);
    return {root, weight_[x]};
  }

  bool is_zero(u32 x) { return zero_[find(x).first]; }

  void force_zero(u32 x) { zero_[find(x).first] = true; }

  // impose alpha f(u) + beta f(v) = 0, alpha and beta nonzero
  void relate(u32 u, u32 alpha, u32 v, u32 beta) {
    auto [ru, wu] = find(u);
    auto [rv, wv] = find(v);
    u32 cu = mul_mod(alpha, wu, p_);
    u32 cv = mul_mod(beta, wv, p_);
    if (ru == rv) {
      if (add_mod(cu, cv, p_) != 0) zero_[ru] = true;
      return;
    }
    // keep the smaller index as root, for reproducible representatives
    if (ru > rv) {
      std::swap(ru, rv);
      std::swap(cu, cv);
    }
    // f(rv) = -(cu / cv) f(ru)
    parent_[rv] = ru;
    weight_[rv] = mul_mod(neg_mod(cu, p_), inv_mod(cv, p_), p_);
    zero_[ru] = zero_[ru] || zero_[rv];
  }

  u32 p_;
  std::vector<u32> parent_;
  std::vector<u32> weight_;
  std::vector<bool> zero_;
};

}  // namespace

SteinbergSystem build_system(u32 p, u32 k) {
  if (k % 2 != 0 || k < 12 || k + 3 > p) {
    throw NotIrregular("build_system: (" + std::to_string(p) + ", " +
                       std::to_string(k) + ") is not an irregular pair");
  }
  std::vector<u32> bern = bernoulli_mod_p(p);
  if (bern[k] != 0) {
    throw NotIrregular("build_system: p does not divide B_k for (" +
                       std::to_string(p) + ", " + std::to_string(k) + ")");
  }

  SteinbergSystem sys;
  sys.p = p;
  sys.k = k;
  const u32 e_up = static_cast<u32>((static_cast<i64>(k) - 2) % (p - 1));
  const u32 e_down = (p - 1) - e_up;  // 2-k mod p-1 (k > 2 here)

  // (a): for t != 0, 1: f(t-1) - f(t) - t^{2-k} f((t-1)/t) = 0
  for (u32 t = 2; t <= p - 1; ++t) {
    std::map<u32, u32> terms;
    add_term(terms, t - 1, 1, p);
    add_term(terms, t, p - 1, p);
    u32 ratio = mul_mod(t - 1, inv_mod(t, p), p);
    add_term(terms, ratio, neg_mod(pow_mod(t, e_down, p), p), p);
    SteinbergRow row = combine(std::move(terms), p);
    if (!row.empty()) sys.steinberg_rows.push_back(std::move(row));
  }
  // (b): f(t^{-1}) + t^{k-2} f(t) = 0
  for (u32 t = 2; t <= p - 1; ++t) {
    std::map<u32, u32> terms;
    add_term(terms, inv_mod(t, p), 1, p);
    add_term(terms, t, pow_mod(t, e_up, p), p);
    SteinbergRow row = combine(std::move(terms), p);
    if (!row.empty()) sys.inversion_rows.push_back(std::move(row));
  }
  // (c): f(-t) - f(t) = 0
  for (u32 t = 1; t <= p - 1; ++t) {
    std::map<u32, u32> terms;
    add_term(terms, p - t, 1, p);
    add_term(terms, t, p - 1, p);
    SteinbergRow row = combine(std::move(terms), p);
    if (!row.empty()) sys.negation_rows.push_back(std::move(row));
  }
  return sys;
}

SolutionSpace solve(const SteinbergSystem& system) {
  const u32 p = system.p;
  ScaledClasses classes(p, p);

  auto fold_two_term = [&](const SteinbergRow& row) {
    if (row.size() == 1) {
      classes.force_zero(row[0].index);
    } else if (row.size() == 2) {
      classes.relate(row[0].index, row[0].coeff, row[1].index, row[1].coeff);
    }
  };
  for (const auto& row : system.inversion_rows) fold_two_term(row);
  for (const auto& row : system.negation_rows) fold_two_term(row);

  // Representatives of the surviving classes, ascending.
  std::vector<u32> reps;
  std::vector<u32> rep_slot(p, 0);
  for (u32 c = 2; c <= p - 1; ++c) {
    auto [root, w] = classes.find(c);
    (void)w;
    if (root == c && !classes.zero_[root]) {
      rep_slot[c] = static_cast<u32>(reps.size());
      reps.push_back(c);
    }
  }

  // Steinberg rows over the representatives.
  FpMatrix reduced(p, 0, reps.size());
  std::vector<u32> dense(reps.size());
  for (const auto& row : system.steinberg_rows) {
    std::fill(dense.begin(), dense.end(), 0);
    bool nonzero = false;
    for (const auto& term : row) {
      auto [root, w] = classes.find(term.index);
      if (classes.zero_[root]) continue;
      u32 slot = rep_slot[root];
      dense[slot] = add_mod(dense[slot], mul_mod(term.coeff, w, p), p);
      nonzero = true;
    }
    if (nonzero) reduced.append_row(dense);
  }

  std::vector<std::vector<u32>> rep_kernel = kernel_basis(reduced);

  SolutionSpace out;
  out.p = p;
  out.k = system.k;
  for (const auto& kv : rep_kernel) {
    std::vector<u32> f(p - 1, 0);
    for (u32 c = 2; c <= p - 1; ++c) {
      auto [root, w] = classes.find(c);
      if (classes.zero_[root]) continue;
      f[c - 1] = mul_mod(w, kv[rep_slot[root]], p);
    }
    out.basis.push_back(std::move(f));
  }

  for (const auto& f : out.basis) {
    if (!satisfies(system, f))
      throw std::logic_error("solve: kernel vector violates a relation row");
  }
  return out;
}

std::size_t steinberg_only_kernel_dim(const SteinbergSystem& system) {
  const u32 p = system.p;
  FpMatrix m(p, system.steinberg_rows.size(), p - 2);
  for (std::size_t r = 0; r < system.steinberg_rows.size(); ++r) {
    for (const auto& term : system.steinberg_rows[r]) {
      m.at(r, term.index - 2) = term.coeff;
    }
  }
  return (p - 2) - rank(m);
}

bool satisfies(const SteinbergSystem& system, std::span<const u32> f) {
  if (f.size() != static_cast<std::size_t>(system.p) - 1) {
    throw DimensionMismatch("satisfies: vector has wrong length");
  }
  if (f[0] != 0) return false;  // f(1) = 0 is part of the system
  const u32 p = system.p;
  auto check = [&](const std::vector<SteinbergRow>& rows) {
    for (const auto& row : rows) {
      u32 acc = 0;
      for (const auto& term : row)
        acc = add_mod(acc, mul_mod(term.coeff, f[term.index - 1], p), p);
      if (acc != 0) return false;
    }
    return true;
  };
  return check(system.steinberg_rows) && check(system.inversion_rows) &&
         check(system.negation_rows);
}

u32 e_value(std::span<const u32> f, long long i, u32 p, u32 k) {
  if (i % 2 == 0) {
    throw EvenIndex("e_value: index " + std::to_string(i) + " is even");
  }
  if (f.size() != static_cast<std::size_t>(p) - 1) {
    throw DimensionMismatch("e_value: vector has wrong length");
  }
  // exponent j-1 with j = k - i, reduced mod p-1
  i64 e = static_cast<i64>(k) - i - 1;
  u32 exp = norm_mod(e, p - 1);
  u32 acc = 0;
  for (u32 c = 1; c <= p - 1; ++c) {
    if (f[c - 1] == 0) continue;
    acc = add_mod(acc, mul_mod(pow_mod(c, exp, p), f[c - 1], p), p);
  }
  return neg_mod(acc, p);
}

ESubspace e_subspace(const SolutionSpace& solutions) {
  const u32 p = solutions.p;
  const u32 k = solutions.k;
  const std::size_t len = k / 2 - 2;
  FpMatrix rows(p, solutions.basis.size(), len);
  for (std::size_t r = 0; r < solutions.basis.size(); ++r) {
    std::size_t c = 0;
    for (u32 i = 3; i + 3 <= k; i += 2, ++c)
      rows.at(r, c) = e_value(solutions.basis[r], i, p, k);
  }
  RrefResult rr = rref(rows);
  ESubspace out;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    auto row = rr.m.row(r);
    out.basis.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace ladder
