#include "preproj/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace preproj {

template <class D>
SparseRow<D> SparseEchelon<D>::reduce(const SparseRow<D>& row) const {
  if (row.empty()) return {};
  std::vector<Scalar> acc(ncols_, dom_.zero());
  std::vector<char> live(ncols_, 0);
  int lo = ncols_;
  for (const auto& [c, v] : row) {
    acc[c] = v;
    live[c] = 1;
    lo = std::min(lo, c);
  }
  SparseRow<D> out;
  for (int c = lo; c < ncols_; ++c) {
    if (!live[c] || D::is_zero(acc[c])) continue;
    int pr = pivot_row_[c];
    if (pr < 0) {
      out.emplace_back(c, acc[c]);
      continue;
    }
    Scalar f = acc[c];
    for (const auto& [k, v] : rows_[pr]) {
      dom_.sub_mul(acc[k], f, v);
      live[k] = 1;
    }
  }
  return out;
}

template <class D>
bool SparseEchelon<D>::add_row(const SparseRow<D>& row) {
  SparseRow<D> r = reduce(row);
  if (r.empty()) return false;
  Scalar inv = dom_.inverse(r.front().second);
  for (auto& e : r) e.second = dom_.mul(e.second, inv);
  pivot_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

template class SparseEchelon<RationalDomain>;
template class SparseEchelon<PrimeField>;

// ------------------------------------------------------------ integers

namespace {

int leading(const IntRow& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (sgn(r[i]) != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

void IntegerLattice::add_row(IntRow row) {
  while (true) {
    int c = leading(row);
    if (c < 0) return;
    int k = pivot_of_col_[c];
    if (k < 0) {
      if (sgn(row[c]) < 0)
        for (auto& x : row) x = -x;
      // Keep pivot columns ordered so that later rows only see earlier pivots.
      pivot_of_col_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      pivot_cols_.push_back(c);
      return;
    }
    IntRow& p = rows_[k];
    if (mpz_divisible_p(row[c].get_mpz_t(), p[c].get_mpz_t())) {
      mpz_class q = row[c] / p[c];
      for (int i = c; i < ncols_; ++i) row[i] -= q * p[i];
      continue;
    }
    // Unimodular step: p <- s*p + t*row, row <- (p_c/g)*row - (row_c/g)*p.
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[c].get_mpz_t(), row[c].get_mpz_t());
    mpz_class pa = p[c] / g, ra = row[c] / g;
    for (int i = c; i < ncols_; ++i) {
      mpz_class np = s * p[i] + t * row[i];
      mpz_class nr = pa * row[i] - ra * p[i];
      p[i] = std::move(np);
      row[i] = std::move(nr);
    }
    if (sgn(p[c]) < 0)
      for (int i = c; i < ncols_; ++i) p[i] = -p[i];
  }
}

bool IntegerLattice::contains(IntRow v) const {
  while (true) {
    int c = leading(v);
    if (c < 0) return true;
    int k = pivot_of_col_[c];
    if (k < 0) return false;
    const IntRow& p = rows_[k];
    if (!mpz_divisible_p(v[c].get_mpz_t(), p[c].get_mpz_t())) return false;
    mpz_class q = v[c] / p[c];
    for (int i = c; i < ncols_; ++i) v[i] -= q * p[i];
  }
}

std::vector<mpz_class> IntegerLattice::torsion() const {
  std::vector<mpz_class> out;
  for (auto& d : smith_diagonal(rows_))
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<mpz_class> smith_diagonal(std::vector<IntRow> m) {
  std::vector<mpz_class> diag;
  int rows = static_cast<int>(m.size());
  if (rows == 0) return diag;
  int cols = static_cast<int>(m[0].size());
  for (int k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      // Smallest nonzero entry of the trailing block goes to (k, k).
      int bi = -1, bj = -1;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j)
          if (sgn(m[i][j]) != 0 && (bi < 0 || mpz_cmpabs(m[i][j].get_mpz_t(), m[bi][bj].get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return diag;
      std::swap(m[k], m[bi]);
      for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][bj]);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (sgn(m[i][k]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][k].get_mpz_t(), m[k][k].get_mpz_t());
        for (int j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (sgn(m[i][k]) != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (sgn(m[k][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[k][j].get_mpz_t(), m[k][k].get_mpz_t());
        for (int i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (sgn(m[k][j]) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row k and go again.
      int bad = -1;
      for (int i = k + 1; i < rows && bad < 0; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[k][k].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = k; j < cols; ++j) m[k][j] += m[bad][j];
    }
    diag.push_back(abs(m[k][k]));
  }
  return diag;
}

}  // namespace preproj
