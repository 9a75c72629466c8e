#include "nichols/lattice.hpp"

#include <utility>

#include "nichols/errors.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

namespace {

void swap_rows(IntMat& m, size_t a, size_t b) {
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMat& m, size_t a, size_t b) {
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a -= k · row b
void sub_row(IntMat& m, size_t a, size_t b, const Integer& k) {
  for (size_t j = 0; j < m.cols(); ++j) m(a, j) -= k * m(b, j);
}

void sub_col(IntMat& m, size_t a, size_t b, const Integer& k) {
  for (size_t i = 0; i < m.rows(); ++i) m(i, a) -= k * m(i, b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMat& m) {
  const size_t rows = m.rows(), cols = m.cols();
  SmithForm f{IntMat::identity(rows), m, IntMat::identity(cols)};
  IntMat &D = f.D, &U = f.U, &V = f.V;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    auto bring_min = [&](bool whole_block) {
      size_t bi = rows, bj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (D(i, j) != 0 && (bi == rows || abs(D(i, j)) < abs(D(bi, bj)))) bi = i, bj = j;
        }
      if (bi == rows) return false;
      if (bi != t) swap_rows(D, t, bi), swap_rows(U, t, bi);
      if (bj != t) swap_cols(D, t, bj), swap_cols(V, t, bj);
      return true;
    };
    if (!bring_min(true)) break;
    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = trunc_div(D(i, t), D(t, t));
        sub_row(D, i, t, q);
        sub_row(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = trunc_div(D(t, j), D(t, t));
        sub_col(D, j, t, q);
        sub_col(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min(false);
        continue;
      }
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      sub_row(D, t, bad, -1);
      sub_row(U, t, bad, -1);
    }
    if (D(t, t) < 0) {
      for (size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
      for (size_t j = 0; j < rows; ++j) U(t, j) = -U(t, j);
    }
  }
  return f;
}

IntMat hermite_normal_form(const IntMat& input) {
  IntMat a = input;
  const size_t rows = a.rows(), cols = a.cols();
  size_t row = 0;
  std::vector<size_t> pivot_cols;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    for (;;) {
      size_t best = rows;
      for (size_t i = row; i < rows; ++i)
        if (a(i, col) != 0 && (best == rows || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best == rows) break;
      if (best != row) swap_rows(a, row, best);
      bool done = true;
      for (size_t i = row + 1; i < rows; ++i) {
        if (a(i, col) == 0) continue;
        sub_row(a, i, row, floor_div(a(i, col), a(row, col)));
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (size_t j = 0; j < cols; ++j) a(row, j) = -a(row, j);
    for (size_t i = 0; i < row; ++i) sub_row(a, i, row, floor_div(a(i, col), a(row, col)));
    pivot_cols.push_back(col);
    ++row;
  }
  IntMat h(row, cols);
  for (size_t i = 0; i < row; ++i)
    for (size_t j = 0; j < cols; ++j) h(i, j) = a(i, j);
  return h;
}

bool in_lattice(const IntMat& hnf, IntVec v) {
  for (size_t r = 0; r < hnf.rows(); ++r) {
    size_t c = 0;
    while (hnf(r, c) == 0) ++c;
    if (v[c] % hnf(r, c) != 0) return false;
    Integer k = v[c] / hnf(r, c);
    for (size_t j = 0; j < v.size(); ++j) v[j] -= k * hnf(r, j);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool same_lattice(const IntMat& a, const IntMat& b) { return hermite_normal_form(a) == hermite_normal_form(b); }

IntMat rows_of(const std::vector<RootVec>& vs) {
  const size_t cols = vs.empty() ? 0 : vs.front().size();
  IntMat m(vs.size(), cols);
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(vs[i][j]);
  return m;
}

Integer LatticeQuotient::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

LatticeQuotient quotient_of(const IntMat& m) {
  LatticeQuotient q;
  for (const auto& d : smith_normal_form(m).diagonal())
    if (d != 1) q.invariant_factors.push_back(d);
  return q;
}

LatticeComparison zq_lattice_comparison(const CartanRootData& crd, const RootDatum& rd) {
  LatticeComparison out;
  std::vector<RootVec> prime;
  for (const auto& s : crd.O_plus) prime.push_back(s.underline);
  std::vector<RootVec> current = prime;
  for (const auto& r : rd.roots) {
    RootVec v = scaled(r.v, crd.Ntt);
    IntVec iv(v.begin(), v.end());
    if (!current.empty() && in_lattice(hermite_normal_form(rows_of(current)), iv)) continue;
    out.extra.push_back(r.v);
    current.push_back(v);
  }
  out.equal = out.extra.empty();
  return out;
}

LatticeQuotient ctilde_invariants(const RatMat& m, const RatMat& coweights) {
  const size_t n = m.rows();
  if (determinant(m) == 0) fail(ErrorKind::NonDegeneracyViolated, "C̃ needs an invertible matrix");
  auto binv = inverse(coweights);
  if (!binv) fail(ErrorKind::InternalInvariantViolation, "coweight basis is singular");
  const RatMat x = (*binv) * m * coweights;
  Integer den = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) den = lcm(den, Integer(x(i, j).get_den()));
  // Rows of [dX | dI]^T span d(Xℤ^n + ℤ^n).
  IntMat gens(2 * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      Rational v = x(i, j) * Rational(den);
      gens(j, i) = v.get_num();
      gens(n + j, i) = i == j ? den : Integer(0);
    }
  IntMat a = hermite_normal_form(gens).transpose();  // columns: basis of the bigger lattice
  auto ainv = inverse(to_rational(a));
  if (!ainv) fail(ErrorKind::InternalInvariantViolation, "lattice basis is singular");
  IntMat rel(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational v = (*ainv)(i, j) * Rational(den);
      if (v.get_den() != 1) fail(ErrorKind::InternalInvariantViolation, "dℤ^n is not inside the C̃ lattice");
      rel(i, j) = v.get_num();
    }
  return quotient_of(rel);
}

}  // namespace nichols
