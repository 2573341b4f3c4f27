#include "ladder/modular_symbols.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ladder {

namespace {

long long floor_div(long long x, long long y) {
  // y > 0
  long long q = x / y;
  if ((x % y) != 0 && x < 0) --q;
  return q;
}

long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

struct Mat22LL {
  long long a, b, c, d;
};

// Unimodular pieces g_t with sum_t g_t{0,oo} = {oo, num/den}: the path from
// oo through the continued-fraction convergents of num/den. den == 0 (the
// point oo itself) yields no pieces.
std::vector<Mat22LL> pieces_from_infinity(long long num, long long den) {
  std::vector<Mat22LL> out;
  if (den == 0) return out;
  long long x = num, y = den;  // y > 0
  long long pm1 = 1, qm1 = 0;  // convergent t-1
  long long pm2 = 0, qm2 = 1;  // convergent t-2
  int t = 0;
  while (y != 0) {
    long long a = floor_div(x, y);
    long long pt = a * pm1 + pm2, qt = a * qm1 + qm2;
    long long s = (t % 2 == 0) ? -1 : 1;  // (-1)^{t-1}
    out.push_back({s * pt, pm1, s * qt, qm1});
    long long r = x - a * y;
    x = y;
    y = r;
    pm2 = pm1;
    qm2 = qm1;
    pm1 = pt;
    qm1 = qt;
    ++t;
  }
  return out;
}

// res *= (c0 X + c1 Y)^t
void mul_by_linear_power(std::vector<u32>& res, u32 c0, u32 c1, std::size_t t,
                         const SymbolSpace& s) {
  if (t == 0) return;
  const u32 p = s.p();
  if (c0 == 0) {
    u32 f = pow_mod(c1, static_cast<i64>(t), p);
    for (auto& v : res) v = mul_mod(v, f, p);
    return;
  }
  if (c1 == 0) {
    u32 f = pow_mod(c0, static_cast<i64>(t), p);
    res.insert(res.begin(), t, 0);
    for (auto& v : res) v = mul_mod(v, f, p);
    return;
  }
  std::vector<u32> pc0(t + 1), pc1(t + 1);
  pc0[0] = pc1[0] = 1;
  for (std::size_t e = 1; e <= t; ++e) {
    pc0[e] = mul_mod(pc0[e - 1], c0, p);
    pc1[e] = mul_mod(pc1[e - 1], c1, p);
  }
  std::vector<u32> out(res.size() + t, 0);
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i] == 0) continue;
    for (std::size_t j = 0; j <= t; ++j) {
      u32 w = mul_mod(s.binom(t, j), mul_mod(pc0[j], pc1[t - j], p), p);
      out[i + j] = add_mod(out[i + j], mul_mod(res[i], w, p), p);
    }
  }
  res = std::move(out);
}

// P(u0 X + u1 Y, v0 X + v1 Y) for a homogeneous P given by X-degree
// coefficients. Horner over the support keeps the cost near
// |support| * deg instead of deg^2.
std::vector<u32> substitute(const SymbolSpace& s, std::span<const u32> poly,
                            u32 u0, u32 u1, u32 v0, u32 v1) {
  const u32 p = s.p();
  const std::size_t m = poly.size() - 1;
  std::size_t lo = 0, hi = m;
  while (lo <= m && poly[lo] == 0) ++lo;
  if (lo > m) return std::vector<u32>(m + 1, 0);
  while (poly[hi] == 0) --hi;

  std::vector<u32> pv0(m + 1), pv1(m + 1);
  pv0[0] = pv1[0] = 1;
  for (std::size_t e = 1; e <= m; ++e) {
    pv0[e] = mul_mod(pv0[e - 1], v0, p);
    pv1[e] = mul_mod(pv1[e - 1], v1, p);
  }

  // T = sum_{j=lo..hi} poly[j] U^{j-lo} V^{hi-j}, Horner from the top
  std::vector<u32> t_poly{poly[hi]};
  for (std::size_t j = hi; j-- > lo;) {
    // T *= U
    t_poly.push_back(0);
    for (std::size_t q = t_poly.size(); q-- > 0;) {
      u32 hi_part = q > 0 ? mul_mod(u0, t_poly[q - 1], p) : 0;
      u32 lo_part = q + 1 < t_poly.size() ? mul_mod(u1, t_poly[q], p) : 0;
      t_poly[q] = add_mod(hi_part, lo_part, p);
    }
    // T += poly[j] * V^{hi-j}
    if (poly[j] != 0) {
      std::size_t t = hi - j;
      for (std::size_t q = 0; q <= t; ++q) {
        u32 w = mul_mod(s.binom(t, q), mul_mod(pv0[q], pv1[t - q], p), p);
        t_poly[q] = add_mod(t_poly[q], mul_mod(poly[j], w, p), p);
      }
    }
  }

  mul_by_linear_power(t_poly, u0, u1, lo, s);
  mul_by_linear_power(t_poly, v0, v1, m - hi, s);
  t_poly.resize(m + 1, 0);
  return t_poly;
}

// Action of M = (a b / c d) on P: the substitution P(dX - bY, -cX + aY).
std::vector<u32> apply_rep(const SymbolSpace& s, std::span<const u32> poly,
                           long long a, long long b, long long c,
                           long long d) {
  const u32 p = s.p();
  return substitute(s, poly, norm_mod(d, p), norm_mod(-b, p), norm_mod(-c, p),
                    norm_mod(a, p));
}

// accum += sign * (expansion of P{a,b} over the {0,oo} generators), using
// {a,b} = {oo,b} - {oo,a} and class(P (x) g{0,oo}) = class(g^{-1}P (x)
// {0,oo}); for g = (a b / c d) in SL_2(Z) the latter polynomial is
// P(aX + bY, cX + dY).
void accumulate_path(const SymbolSpace& s, std::span<const u32> poly,
                     ProjPoint pa, ProjPoint pb, bool negate,
                     std::vector<u32>& accum) {
  if (pa == pb) return;
  const u32 p = s.p();
  auto add_pieces = [&](const ProjPoint& end, bool minus) {
    for (const Mat22LL& g : pieces_from_infinity(end.num, end.den)) {
      std::vector<u32> q =
          substitute(s, poly, norm_mod(g.a, p), norm_mod(g.b, p),
                     norm_mod(g.c, p), norm_mod(g.d, p));
      for (std::size_t i = 0; i < accum.size(); ++i) {
        accum[i] = minus ? sub_mod(accum[i], q[i], p)
                         : add_mod(accum[i], q[i], p);
      }
    }
  };
  add_pieces(pb, negate);
  add_pieces(pa, !negate);
}

FpMatrix invert_square(const FpMatrix& a) {
  const std::size_t n = a.rows();
  FpMatrix aug(a.modulus(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  for (std::size_t r = 0; r < n; ++r) {
    if (r >= rr.pivots.size() || rr.pivots[r] != r)
      throw std::logic_error("invert_square: singular matrix");
  }
  FpMatrix inv(a.modulus(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.m.at(r, n + c);
  return inv;
}

}  // namespace

ProjPoint ProjPoint::of(long long num, long long den) {
  if (num == 0 && den == 0)
    throw std::invalid_argument("ProjPoint: 0/0 is not a point of P^1(Q)");
  if (den == 0) return infinity();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::vector<u32> SymbolSpace::generator_class(std::size_t i) const {
  if (i < 1 || i > gen_count())
    throw std::out_of_range("generator index out of range");
  return projection_.col(i - 1);
}

std::vector<u32> SymbolSpace::project_gen_vector(
    std::span<const u32> coeffs) const {
  if (coeffs.size() != gen_count())
    throw DimensionMismatch("project_gen_vector: wrong length");
  std::vector<u32> even(proj_even_.cols());
  for (std::size_t c = 0; c < even.size(); ++c) even[c] = coeffs[2 * c];
  return proj_even_.mul_vec(even);
}

std::vector<u32> SymbolSpace::cusp_coords(std::span<const u32> v) const {
  std::vector<u32> picked(dim_s_);
  for (std::size_t t = 0; t < dim_s_; ++t) picked[t] = v[cusp_pivots_[t]];
  return cusp_coord_op_.mul_vec(picked);
}

SymbolSpace build_space(u32 p, u32 k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("build_space: k must be even and >= 4");
  if (!is_prime(p)) throw CompositeModulus("build_space: p must be prime");
  if (p <= k)
    throw std::invalid_argument("build_space: requires p > k");

  SymbolSpace s;
  s.p_ = p;
  s.k_ = k;
  const std::size_t m = k - 2;

  s.binom_.assign((m + 1) * (m + 2) / 2, 0);
  for (std::size_t n = 0; n <= m; ++n) {
    std::size_t base = n * (n + 1) / 2;
    s.binom_[base] = 1;
    s.binom_[base + n] = 1;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t prev = (n - 1) * n / 2;
      s.binom_[base + r] =
          add_mod(s.binom_[prev + r - 1], s.binom_[prev + r], p);
    }
  }

  // Relations over the even X-degree generators only: the involution
  // relation g - iota g = 0 forces every odd X-degree class to vanish
  // (2 is invertible), so the two- and three-term relations are simply
  // projected onto the even coordinates.
  const std::size_t n_even = k / 2;
  FpMatrix rel(p, 0, n_even);
  std::vector<u32> mono(m + 1, 0);
  std::vector<u32> row(n_even);
  auto push_projected = [&](const std::vector<u32>& full) {
    bool nonzero = false;
    for (std::size_t c = 0; c < n_even; ++c) {
      row[c] = full[2 * c];
      nonzero = nonzero || row[c] != 0;
    }
    if (nonzero) rel.append_row(row);
  };
  for (std::size_t j = 0; j <= m; ++j) {
    mono[j] = 1;
    // sigma = (0 -1 / 1 0): g + sigma g = 0
    std::vector<u32> srow = apply_rep(s, mono, 0, -1, 1, 0);
    srow[j] = add_mod(srow[j], 1, p);
    push_projected(srow);
    // tau = (0 -1 / 1 -1): g + tau g + tau^2 g = 0
    std::vector<u32> trow = apply_rep(s, mono, 0, -1, 1, -1);
    std::vector<u32> t2row = apply_rep(s, mono, -1, 1, -1, 0);
    for (std::size_t c = 0; c <= m; ++c)
      trow[c] = add_mod(trow[c], t2row[c], p);
    trow[j] = add_mod(trow[j], 1, p);
    push_projected(trow);
    mono[j] = 0;
  }

  RrefResult rr = rref(rel);
  const std::size_t n_piv = rr.pivots.size();
  const std::size_t dim = n_even - n_piv;
  std::vector<bool> is_pivot(n_even, false);
  std::vector<std::size_t> pivot_row(n_even, 0);
  for (std::size_t t = 0; t < n_piv; ++t) {
    is_pivot[rr.pivots[t]] = true;
    pivot_row[rr.pivots[t]] = t;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n_even; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // Classes in free-column coordinates.
  FpMatrix q0(p, dim, n_even);
  for (std::size_t t = 0; t < dim; ++t) q0.at(t, free_cols[t]) = 1;
  for (std::size_t c = 0; c < n_even; ++c) {
    if (!is_pivot[c]) continue;
    std::size_t r = pivot_row[c];
    for (std::size_t t = 0; t < dim; ++t)
      q0.at(t, c) = neg_mod(rr.m.at(r, free_cols[t]), p);
  }

  // Rebase onto the first independent generator images in index order.
  EchelonBasis picker(p, dim);
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < n_even && chosen.size() < dim; ++c) {
    if (picker.add(q0.col(c))) chosen.push_back(c);
  }
  if (chosen.size() != dim)
    throw std::logic_error("build_space: projection rank defect");
  FpMatrix b(p, dim, dim);
  for (std::size_t t = 0; t < dim; ++t) b.set_col(t, q0.col(chosen[t]));
  FpMatrix proj_even = invert_square(b).mul(q0);

  s.dim_m_ = dim;
  s.proj_even_ = proj_even;
  s.basis_xdegs_.clear();
  for (std::size_t c : chosen) s.basis_xdegs_.push_back(2 * c);

  s.projection_ = FpMatrix(p, dim, k - 1);
  for (std::size_t c = 0; c < n_even; ++c)
    s.projection_.set_col(2 * c, proj_even.col(c));

  // Cuspidal subspace: first independent images of the generators with
  // 2 <= i <= k-2 (even X-degrees 2..m-2), which must miss exactly the
  // boundary line.
  EchelonBasis cusp_picker(p, dim);
  std::vector<std::vector<u32>> cusp_rows;
  for (std::size_t c = 1; c + 1 < n_even; ++c) {
    std::vector<u32> v = proj_even.col(c);
    if (cusp_picker.add(v)) cusp_rows.push_back(std::move(v));
  }
  if (cusp_rows.size() + 1 != dim) {
    throw BoundaryDegenerate(
        "build_space: cuspidal span has codimension != 1 at p=" +
        std::to_string(p) + ", k=" + std::to_string(k));
  }
  s.dim_s_ = cusp_rows.size();
  s.cusp_basis_ = FpMatrix(p, s.dim_s_, dim);
  for (std::size_t r = 0; r < cusp_rows.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c)
      s.cusp_basis_.at(r, c) = cusp_rows[r][c];

  // Coordinate operator: with E = rref(cusp_basis) and pivot columns pi_t,
  // a vector v in the subspace has E-coordinates v[pi_t]; converting to
  // cusp_basis coordinates is the inverse transpose of C[t][s] =
  // cusp_basis[t][pi_s].
  if (s.dim_s_ > 0) {
    RrefResult ce = rref(s.cusp_basis_);
    s.cusp_pivots_ = ce.pivots;
    FpMatrix c_mat(p, s.dim_s_, s.dim_s_);
    for (std::size_t t = 0; t < s.dim_s_; ++t)
      for (std::size_t u = 0; u < s.dim_s_; ++u)
        c_mat.at(t, u) = s.cusp_basis_.at(t, ce.pivots[u]);
    s.cusp_coord_op_ = invert_square(c_mat.transposed());
  } else {
    s.cusp_coord_op_ = FpMatrix(p, 0, 0);
  }
  return s;
}

std::vector<u32> path_reduce(const SymbolSpace& space,
                             std::span<const u32> poly, ProjPoint a,
                             ProjPoint b) {
  if (poly.size() != space.gen_count())
    throw DimensionMismatch("path_reduce: polynomial has wrong length");
  std::vector<u32> accum(space.gen_count(), 0);
  accumulate_path(space, poly, a, b, false, accum);
  return space.project_gen_vector(accum);
}

FpMatrix hecke_matrix(const SymbolSpace& space, u32 ell) {
  if (!is_prime(ell))
    throw BadPrime("hecke_matrix: ell = " + std::to_string(ell) +
                   " is not prime");
  if (ell == space.p())
    throw BadPrime("hecke_matrix: ell equals the working prime");

  const u32 p = space.p();
  const std::size_t m = space.k() - 2;
  const std::size_t dim = space.dim_M_plus();

  std::vector<u32> lpow(m + 1);
  lpow[0] = 1;
  for (std::size_t e = 1; e <= m; ++e)
    lpow[e] = mul_mod(lpow[e - 1], ell % p, p);

  // One accumulator of generator coefficients per basis element; all coset
  // contributions are summed there and projected once at the end.
  std::vector<std::vector<u32>> accum(dim, std::vector<u32>(m + 1, 0));
  for (std::size_t t = 0; t < dim; ++t) {
    std::size_t jb = space.basis_xdegs()[t];
    // (ell 0 / 0 1): P(X, ell Y), path {0,oo}
    accum[t][jb] = add_mod(accum[t][jb], lpow[m - jb], p);
    // (1 0 / 0 ell): P(ell X, Y), path {0,oo}
    accum[t][jb] = add_mod(accum[t][jb], lpow[jb], p);
  }

  std::vector<u32> pp(m + 1);
  for (u32 j = 1; j < ell; ++j) {
    // (1 j / 0 ell): P' = (ell X - j Y)^{jb} Y^{m-jb}, path {j/ell, oo}
    std::vector<Mat22LL> pieces =
        pieces_from_infinity(static_cast<long long>(j), ell);
    std::vector<u32> jnegpow(m + 1);
    jnegpow[0] = 1;
    u32 jneg = neg_mod(j % p, p);
    for (std::size_t e = 1; e <= m; ++e)
      jnegpow[e] = mul_mod(jnegpow[e - 1], jneg, p);
    for (std::size_t t = 0; t < dim; ++t) {
      std::size_t jb = space.basis_xdegs()[t];
      std::fill(pp.begin(), pp.end(), 0);
      for (std::size_t sdeg = 0; sdeg <= jb; ++sdeg) {
        pp[sdeg] = mul_mod(space.binom(jb, sdeg),
                           mul_mod(lpow[sdeg], jnegpow[jb - sdeg], p), p);
      }
      // {j/ell, oo} = -{oo, j/ell}
      for (const Mat22LL& g : pieces) {
        std::vector<u32> q =
            substitute(space, pp, norm_mod(g.a, p), norm_mod(g.b, p),
                       norm_mod(g.c, p), norm_mod(g.d, p));
        for (std::size_t i = 0; i <= m; ++i)
          accum[t][i] = sub_mod(accum[t][i], q[i], p);
      }
    }
  }

  FpMatrix h(p, dim, dim);
  for (std::size_t t = 0; t < dim; ++t)
    h.set_col(t, space.project_gen_vector(accum[t]));
  return h;
}

FpMatrix hecke_matrix_cuspidal(const SymbolSpace& space, u32 ell) {
  FpMatrix h = hecke_matrix(space, ell);
  const u32 p = space.p();
  const std::size_t d = space.dim_S_plus();
  FpMatrix c(p, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<u32> v = h.mul_vec(space.cusp_basis().row(j));
    std::vector<u32> y = space.cusp_coords(v);
    // T_ell must preserve the cuspidal subspace; reconstruct and compare.
    std::vector<u32> back(space.dim_M_plus(), 0);
    for (std::size_t t = 0; t < d; ++t) {
      for (std::size_t q = 0; q < back.size(); ++q) {
        back[q] = add_mod(back[q],
                          mul_mod(y[t], space.cusp_basis().at(t, q), p), p);
      }
    }
    if (back != v)
      throw std::logic_error("hecke_matrix_cuspidal: image left the "
                             "cuspidal subspace");
    c.set_col(j, y);
  }
  return c;
}

std::vector<u32> boundary_functional(const SymbolSpace& space) {
  const u32 p = space.p();
  const std::size_t dim = space.dim_M_plus();
  const std::size_t d = space.dim_S_plus();
  // Solve psi . s = 0 for the cuspidal basis rows s and psi . bd = 1 for
  // the class bd of X^{k-2}{0,oo}.
  FpMatrix aug(p, d + 1, dim + 1);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      aug.at(r, c) = space.cusp_basis().at(r, c);
  std::vector<u32> bd = space.generator_class(space.k() - 1);
  for (std::size_t c = 0; c < dim; ++c) aug.at(d, c) = bd[c];
  aug.at(d, dim) = 1;

  RrefResult rr = rref(aug);
  if (rr.pivots.size() != dim ||
      (rr.pivots.size() > 0 && rr.pivots.back() == dim)) {
    throw BoundaryDegenerate("boundary_functional: no unique functional");
  }
  std::vector<u32> psi(dim, 0);
  for (std::size_t t = 0; t < dim; ++t) psi[rr.pivots[t]] = rr.m.at(t, dim);
  return psi;
}

EisensteinLine eisenstein_line(const SymbolSpace& space, u32 extend_primes_to) {
  const u32 p = space.p();
  const u32 k = space.k();
  const std::size_t d = space.dim_S_plus();
  if (d == 0) {
    throw NoEisensteinCongruence(
        "eisenstein_line: no cusp forms at weight " + std::to_string(k));
  }

  EchelonBasis constraints(p, d);
  std::vector<u32> primes;
  std::vector<std::size_t> dims;
  u32 ell = 2;
  while (true) {
    if (ell == p) {
      ell = static_cast<u32>(next_prime(ell));
      continue;
    }
    FpMatrix c = hecke_matrix_cuspidal(space, ell);
    u32 eps = add_mod(1, pow_mod(ell, static_cast<i64>(k) - 1, p), p);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<u32> row = c.col(j);  // row j of C^T
      row[j] = sub_mod(row[j], eps, p);
      constraints.add(row);
    }
    primes.push_back(ell);
    dims.push_back(d - constraints.rank());
    if (dims.back() == 0) {
      throw NoEisensteinCongruence(
          "eisenstein_line: dual eigenspace vanished at ell = " +
          std::to_string(ell));
    }
    std::size_t n = dims.size();
    bool stable = n >= 3 && dims[n - 1] == dims[n - 2] &&
                  dims[n - 2] == dims[n - 3];
    if (stable && 6 * ell > k && ell >= extend_primes_to) break;
    ell = static_cast<u32>(next_prime(ell));
  }

  std::vector<std::vector<u32>> kern = kernel_basis(constraints.to_matrix());
  if (kern.size() >= 2) {
    throw MultiplicityFailure(
        "eisenstein_line: eigenspace dimension " +
        std::to_string(kern.size()) + " at p=" + std::to_string(p) +
        ", k=" + std::to_string(k));
  }

  EisensteinLine out;
  out.functional = kern.at(0);
  out.hecke_primes = std::move(primes);
  for (u32 i = 3; i + 3 <= k; i += 2) {
    std::vector<u32> y = space.cusp_coords(space.generator_class(i));
    u32 val = 0;
    for (std::size_t t = 0; t < d; ++t)
      val = add_mod(val, mul_mod(out.functional[t], y[t], p), p);
    out.w.push_back(val);
  }
  return out;
}

std::vector<u32> involution_gen_class(const SymbolSpace& space,
                                      std::size_t i) {
  std::vector<u32> v = space.generator_class(i);
  if (i % 2 == 0) {  // X-degree i-1 odd: involution eigenvalue -1
    for (auto& x : v) x = neg_mod(x, space.p());
  }
  return v;
}

}  // namespace ladder
