#include "telescope/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace telescope {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntegerMatrix& d, std::size_t from) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = from; i < d.rows(); ++i)
    for (std::size_t j = from; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(d.rows(), d.cols());
  while (r < n && d(r, r) != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithDecomposition out{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
  IntegerMatrix& d = out.d;
  IntegerMatrix& u = out.u;
  IntegerMatrix& v = out.v;
  const std::size_t n = std::min(d.rows(), d.cols());

  Integer q;
  for (std::size_t t = 0; t < n; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = smallest_nonzero(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

bool certifies(const SmithDecomposition& snf, const IntegerMatrix& a) {
  const IntegerMatrix& d = snf.d;
  if (d.rows() != a.rows() || d.cols() != a.cols()) return false;
  if (snf.u.rows() != a.rows() || snf.u.cols() != a.rows()) return false;
  if (snf.v.rows() != a.cols() || snf.v.cols() != a.cols()) return false;
  if (!(snf.u * a * snf.v == d)) return false;
  if (abs(determinant(snf.u)) != 1 || abs(determinant(snf.v)) != 1) return false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) {
        if (diag[i + 1] != 0) return false;
      } else if (!mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace telescope
