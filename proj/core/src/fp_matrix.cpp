#include "ladder/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ladder {

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(u32 p,
                             const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = norm_mod(rows[i][j], p);
  }
  return m;
}

void FpMatrix::append_row(std::span<const u32> v) {
  if (v.size() != cols_) throw DimensionMismatch("append_row: wrong length");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

std::vector<u32> FpMatrix::col(std::size_t c) const {
  std::vector<u32> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void FpMatrix::set_col(std::size_t c, std::span<const u32> v) {
  if (v.size() != rows_) throw DimensionMismatch("set_col: wrong length");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::vector<u32> FpMatrix::mul_vec(std::span<const u32> x) const {
  if (x.size() != cols_) throw DimensionMismatch("mul_vec: wrong length");
  std::vector<u32> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    u64 acc = 0;
    const u32* a = a_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<u64>(a[c]) * x[c];
      if (acc >= (u64(1) << 62)) acc %= p_;
    }
    y[r] = static_cast<u32>(acc % p_);
  }
  return y;
}

FpMatrix FpMatrix::mul(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("mul: inner dimensions");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      u32 aik = at(i, k);
      if (aik == 0) continue;
      const u32* b = rhs.a_.data() + k * rhs.cols_;
      u32* o = out.a_.data() + i * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        o[j] = static_cast<u32>((static_cast<u64>(aik) * b[j] + o[j]) % p_);
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

namespace {

// y -= f * x over F_p
void row_axpy(std::span<u32> y, std::span<const u32> x, u32 f, u32 p) {
  if (f == 0) return;
  for (std::size_t j = 0; j < y.size(); ++j) {
    u32 t = static_cast<u32>(static_cast<u64>(f) * x[j] % p);
    y[j] = sub_mod(y[j], t, p);
  }
}

void row_scale(std::span<u32> y, u32 f, u32 p) {
  for (auto& v : y) v = static_cast<u32>(static_cast<u64>(v) * f % p);
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
  RrefResult out{m, {}};
  FpMatrix& a = out.m;
  const u32 p = a.modulus();
  std::size_t cur = 0;
  for (std::size_t c = 0; c < a.cols() && cur < a.rows(); ++c) {
    std::size_t piv = cur;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != cur) {
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(piv, j), a.at(cur, j));
    }
    row_scale(a.row(cur), inv_mod(a.at(cur, c), p), p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != cur) row_axpy(a.row(r), a.row(cur), a.at(r, c), p);
    }
    out.pivots.push_back(c);
    ++cur;
  }
  return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<u32>> kernel_basis(const FpMatrix& m) {
  RrefResult r = rref(m);
  const u32 p = m.modulus();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::vector<std::vector<u32>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u32> v(n, 0);
    v[f] = 1;
    for (std::size_t t = 0; t < r.pivots.size(); ++t) {
      v[r.pivots[t]] = neg_mod(r.m.at(t, f), p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<u32>> in_span(
    const std::vector<std::vector<u32>>& basis, std::span<const u32> v,
    u32 p) {
  const std::size_t len = v.size();
  for (const auto& b : basis) {
    if (b.size() != len)
      throw DimensionMismatch("in_span: basis/vector length mismatch");
  }
  const std::size_t n = basis.size();
  // Augmented system: columns are the basis vectors, last column is v.
  FpMatrix a(p, len, n + 1);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t j = 0; j < n; ++j) a.at(r, j) = basis[j][r] % p;
    a.at(r, n) = v[r] % p;
  }
  RrefResult rr = rref(a);
  std::vector<u32> coeffs(n, 0);
  for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
    if (rr.pivots[t] == n) return std::nullopt;  // inconsistent
    coeffs[rr.pivots[t]] = rr.m.at(t, n);
  }
  return coeffs;
}

bool EchelonBasis::add(std::span<const u32> v) {
  std::vector<u32> w = reduce(v);
  std::size_t piv = 0;
  while (piv < cols_ && w[piv] == 0) ++piv;
  if (piv == cols_) return false;
  row_scale(std::span<u32>(w), inv_mod(w[piv], p_), p_);
  auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), piv);
  std::size_t pos = static_cast<std::size_t>(it - pivot_cols_.begin());
  pivot_cols_.insert(it, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  return true;
}

std::vector<u32> EchelonBasis::reduce(std::span<const u32> v) const {
  if (v.size() != cols_) throw DimensionMismatch("EchelonBasis::reduce");
  std::vector<u32> w(v.begin(), v.end());
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    u32 f = w[pivot_cols_[t]];
    if (f != 0) row_axpy(std::span<u32>(w), rows_[t], f, p_);
  }
  return w;
}

bool EchelonBasis::contains(std::span<const u32> v) const {
  std::vector<u32> w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

FpMatrix EchelonBasis::to_matrix() const {
  FpMatrix m(p_, rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = rows_[r][c];
  return m;
}

}  // namespace ladder
