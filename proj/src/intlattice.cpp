#include "ore/intlattice.hpp"

#include <algorithm>
#include <functional>

#include "ore/error.hpp"
#include "ore/intfactor.hpp"

namespace ore {
namespace {

std::size_t cols_of(const IntMat& a) { return a.empty() ? 0 : a.front().size(); }

void check_rect(const IntMat& a) {
  for (const auto& row : a)
    if (row.size() != cols_of(a)) fail(Errc::bad_descriptor, "ragged matrix");
}

}  // namespace

IntMat identity_mat(std::size_t n) {
  IntMat id(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = cols_of(a), m = cols_of(b);
  if (k != b.size()) fail(Errc::bad_descriptor, "matrix product shape mismatch");
  IntMat c(n, std::vector<Int>(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

IntMat hermite_normal_form(const IntMat& a_in) {
  IntMat a = a_in;
  check_rect(a);
  std::size_t rows = a.size(), cols = cols_of(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Clear column c below row r by gcd elimination.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool all_zero = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q, rem;
        fdiv_qr(q, rem, a[i][c], a[r][c]);
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) all_zero = false;
      }
      if (all_zero) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q, rem;
      fdiv_qr(q, rem, a[i][c], a[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

Int det(const IntMat& a_in) {
  IntMat a = a_in;
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (cols_of(a) != n) fail(Errc::bad_descriptor, "det of a non-square matrix");
  // Bareiss fraction-free elimination.
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SnfResult smith_normal_form(const IntMat& a_in) {
  check_rect(a_in);
  std::size_t rows = a_in.size(), cols = cols_of(a_in);
  SnfResult s;
  s.d = a_in;
  s.u = identity_mat(rows);
  s.v = identity_mat(cols);
  s.v_inv = identity_mat(cols);
  IntMat& a = s.d;

  auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {  // row_i -= q*row_k
    for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
    for (std::size_t j = 0; j < rows; ++j) s.u[i][j] -= q * s.u[k][j];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {  // col_j -= q*col_k
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
    for (std::size_t i = 0; i < cols; ++i) s.v[i][j] -= q * s.v[i][k];
    for (std::size_t i = 0; i < cols; ++i) s.v_inv[k][i] += q * s.v_inv[j][i];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(s.u[i], s.u[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][k]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(s.v[i][j], s.v[i][k]);
    std::swap(s.v_inv[j], s.v_inv[k]);
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
    for (std::size_t j = 0; j < rows; ++j) s.u[i][j] = -s.u[i][j];
  };

  std::size_t t = 0;
  while (true) {
    // find the nonzero entry of smallest magnitude in the trailing block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q, rem;
        fdiv_qr(q, rem, a[i][t], a[t][t]);
        row_sub(i, t, q);
        if (a[i][t] != 0) {  // remainder became the new, smaller pivot
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q, rem;
        fdiv_qr(q, rem, a[t][j], a[t][t]);
        col_sub(j, t, q);
        if (a[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }
    if (a[t][t] < 0) row_neg(t);

    // divisibility pass: the pivot must divide the whole trailing block
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (!divides(a[t][t], a[i][j])) {
          row_sub(t, i, Int(-1));  // fold row i into the pivot row
          redo = true;
        }
    if (redo) continue;
    ++t;
  }

  if (mat_mul(mat_mul(s.u, a_in), s.v) != s.d)
    fail(Errc::unsupported, "smith_normal_form: transform identity check failed");
  if (abs(det(s.u)) != 1 || abs(det(s.v)) != 1)
    fail(Errc::unsupported, "smith_normal_form: transforms are not unimodular");
  if (mat_mul(s.v, s.v_inv) != identity_mat(cols))
    fail(Errc::unsupported, "smith_normal_form: inverse transform check failed");
  return s;
}

IntLattice IntLattice::from_rows(long ambient, IntMat rows) {
  if (ambient <= 0) fail(Errc::bad_descriptor, "lattice ambient rank must be positive");
  for (const auto& row : rows)
    if (row.size() != static_cast<std::size_t>(ambient))
      fail(Errc::bad_descriptor, "lattice row length does not match the ambient rank");
  return IntLattice{ambient, std::move(rows)};
}

IntLattice IntLattice::full(long ambient) {
  return from_rows(ambient, identity_mat(static_cast<std::size_t>(ambient)));
}

bool IntLattice::contains(const std::vector<Int>& v_in) const {
  if (v_in.size() != static_cast<std::size_t>(ambient)) fail(Errc::bad_descriptor, "vector length mismatch");
  IntMat h = hermite();
  std::vector<Int> v = v_in;
  for (const auto& row : h) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (v[pivot] == 0) continue;
    if (!divides(row[pivot], v[pivot])) return false;
    Int q = div_exact(v[pivot], row[pivot]);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool IntLattice::is_sublattice_of(const IntLattice& other) const {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const std::vector<Int>& r) { return other.contains(r); });
}

bool IntLattice::operator==(const IntLattice& o) const {
  return ambient == o.ambient && hermite() == o.hermite();
}

IntLattice lattice_closure_z(const IntLattice& p, const std::vector<Int>& primes) {
  SnfResult s = smith_normal_form(p.rows.empty()
                                      ? IntMat{std::vector<Int>(static_cast<std::size_t>(p.ambient), Int(0))}
                                      : p.rows);
  std::size_t n = static_cast<std::size_t>(p.ambient);
  IntMat gens;
  std::size_t r = std::min(s.d.size(), n);
  for (std::size_t i = 0; i < r; ++i) {
    const Int& di = s.d[i][i];
    if (di == 0) continue;
    Int bi = div_exact(di, support_part(di, primes));
    std::vector<Int> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = bi * s.v_inv[i][j];
    gens.push_back(std::move(row));
  }
  IntLattice out = IntLattice::from_rows(p.ambient, hermite_normal_form(gens));
  return out;
}

TorsionResult torsion_z(const PresentedModule& m, const std::vector<Int>& primes) {
  TorsionResult out;
  out.closure = lattice_closure_z(m.relations, primes);
  IntMat c = out.closure.hermite();
  if (c.empty()) return out;  // P = 0: closure of 0 is 0, no torsion

  // Express each relation row in the closure basis (exact by P subseteq P^S).
  IntMat x;
  for (const auto& rel : m.relations.rows) {
    std::vector<Int> v = rel;
    std::vector<Int> coords(c.size(), Int(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t pivot = 0;
      while (pivot < v.size() && c[k][pivot] == 0) ++pivot;
      if (v[pivot] == 0) continue;
      if (!divides(c[k][pivot], v[pivot]))
        fail(Errc::unsupported, "torsion_z: relation row escapes the closure lattice");
      coords[k] = div_exact(v[pivot], c[k][pivot]);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coords[k] * c[k][j];
    }
    if (!std::all_of(v.begin(), v.end(), [](const Int& t) { return t == 0; }))
      fail(Errc::unsupported, "torsion_z: relation row escapes the closure lattice");
    x.push_back(std::move(coords));
  }

  SnfResult s = smith_normal_form(x);
  for (std::size_t i = 0; i < std::min(s.d.size(), c.size()); ++i) {
    const Int& di = s.d[i][i];
    if (di == 0)
      fail(Errc::unsupported, "torsion_z: closure and relations disagree in rank");
    if (di != 1) out.invariant_factors.push_back(di);
  }
  return out;
}

ExtContrReport ext_contr_check(const IntLattice& p, const std::vector<Int>& primes) {
  IntMat h = p.hermite();
  if (h.size() != static_cast<std::size_t>(p.ambient))
    fail(Errc::unsupported, "ext_contr_check needs a full-rank lattice");
  Int vol = 1;
  std::vector<Int> diag;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t pivot = 0;
    while (h[i][pivot] == 0) ++pivot;
    diag.push_back(h[i][pivot]);
    vol *= h[i][pivot];
  }
  if (vol > 100000) fail(Errc::resource_limit, "ext_contr_check: determinant too large to enumerate");

  // epsilon(v) lies in S^-1 P iff s* v in P for the S-part s* of the
  // determinant (the order of v in Z^n / P divides the determinant).
  Int s_star = support_part(vol, primes);
  IntMat found = p.rows;
  std::vector<Int> v(static_cast<std::size_t>(p.ambient), Int(0));
  std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
    if (i == v.size()) {
      std::vector<Int> sv(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) sv[j] = s_star * v[j];
      if (p.contains(sv)) found.push_back(v);
      return;
    }
    for (Int c = 0; c < diag[i]; ++c) {
      v[i] = c;
      enumerate(i + 1);
    }
  };
  enumerate(0);

  ExtContrReport out;
  out.contraction = IntLattice::from_rows(p.ambient, hermite_normal_form(found));
  out.closure = lattice_closure_z(p, primes);
  out.p_contained = p.is_sublattice_of(out.contraction);
  out.closure_matches_contraction = out.closure == out.contraction;
  return out;
}

}  // namespace ore
