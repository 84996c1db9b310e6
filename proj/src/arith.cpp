#include "exo/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace exo {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return abs(g);
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw std::invalid_argument("to_int: non-integral entry");
    out[i] = v[i].get_num();
  }
  return out;
}

IntVec primitive_direction(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, x.get_den());
  IntVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(scaled);
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec scale(const Int& k, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& k, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows_in, std::size_t cols_hint) {
  std::size_t c = cols_hint;
  if (c == 0 && !rows_in.empty()) c = rows_in.front().size();
  IntMatrix m(rows_in.size(), c);
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    if (rows_in[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec out(cols);
  for (std::size_t j = 0; j < cols; ++j) out[j] = at(i, j);
  return out;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec out(rows);
  for (std::size_t i = 0; i < rows; ++i) out[i] = at(i, j);
  return out;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mul: shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix w = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows_in, std::size_t cols_hint) {
  std::size_t c = cols_hint;
  if (c == 0 && !rows_in.empty()) c = rows_in.front().size();
  RatMatrix m(rows_in.size(), c);
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    if (rows_in[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows * m.cols; ++i) out.a[i] = Rat(m.a[i]);
  return out;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec out(cols);
  for (std::size_t j = 0; j < cols; ++j) out[j] = at(i, j);
  return out;
}

std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / piv;
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank_of_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_int(IntMatrix::from_rows(rows)));
}

std::size_t rank_of_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows));
}

namespace {

// Elementary operation bookkeeping for Smith form. The invariant throughout
// is  original = u * work * v,  with u_inv, v_inv the tracked inverses.
struct SmithState {
  IntMatrix work, u, u_inv, v, v_inv;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < work.cols; ++c) std::swap(work.at(i, c), work.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(c, i), u.at(c, j));
    for (std::size_t c = 0; c < u_inv.cols; ++c) std::swap(u_inv.at(i, c), u_inv.at(j, c));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < work.cols; ++c) work.at(i, c) = -work.at(i, c);
    for (std::size_t c = 0; c < u.rows; ++c) u.at(c, i) = -u.at(c, i);
    for (std::size_t c = 0; c < u_inv.cols; ++c) u_inv.at(i, c) = -u_inv.at(i, c);
  }
  // row_i += k * row_j
  void row_addmul(std::size_t i, std::size_t j, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < work.cols; ++c) work.at(i, c) += k * work.at(j, c);
    for (std::size_t c = 0; c < u.rows; ++c) u.at(c, j) -= k * u.at(c, i);
    for (std::size_t c = 0; c < u_inv.cols; ++c) u_inv.at(i, c) += k * u_inv.at(j, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < work.rows; ++r) std::swap(work.at(r, i), work.at(r, j));
    for (std::size_t r = 0; r < v.cols; ++r) std::swap(v.at(i, r), v.at(j, r));
    for (std::size_t r = 0; r < v_inv.rows; ++r) std::swap(v_inv.at(r, i), v_inv.at(r, j));
  }
  void col_negate(std::size_t i) {
    for (std::size_t r = 0; r < work.rows; ++r) work.at(r, i) = -work.at(r, i);
    for (std::size_t r = 0; r < v.cols; ++r) v.at(i, r) = -v.at(i, r);
    for (std::size_t r = 0; r < v_inv.rows; ++r) v_inv.at(r, i) = -v_inv.at(r, i);
  }
  // col_i += k * col_j
  void col_addmul(std::size_t i, std::size_t j, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < work.rows; ++r) work.at(r, i) += k * work.at(r, j);
    for (std::size_t r = 0; r < v.cols; ++r) v.at(j, r) -= k * v.at(i, r);
    for (std::size_t r = 0; r < v_inv.rows; ++r) v_inv.at(r, i) += k * v_inv.at(r, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState st;
  st.work = m;
  st.u = IntMatrix::identity(m.rows);
  st.u_inv = IntMatrix::identity(m.rows);
  st.v = IntMatrix::identity(m.cols);
  st.v_inv = IntMatrix::identity(m.cols);

  std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        const Int& x = st.work.at(i, j);
        if (x == 0) continue;
        if (!found || cmp(abs(x), abs(st.work.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    st.row_swap(t, pi);
    st.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (st.work.at(i, t) == 0) continue;
        Int q = st.work.at(i, t) / st.work.at(t, t);  // truncated division
        st.row_addmul(i, t, -q);
        if (st.work.at(i, t) != 0) {
          st.row_swap(t, i);  // smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (st.work.at(t, j) == 0) continue;
        Int q = st.work.at(t, j) / st.work.at(t, t);
        st.col_addmul(j, t, -q);
        if (st.work.at(t, j) != 0) {
          st.col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot divides cleared row and column; enforce divisibility on the
      // remaining block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m.rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols && !fixed; ++j)
          if (st.work.at(i, j) % st.work.at(t, t) != 0) {
            st.row_addmul(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (st.work.at(t, t) < 0) st.row_negate(t);
  }

  SmithDecomposition out;
  out.u = st.u;
  out.u_inv = st.u_inv;
  out.v = st.v;
  out.v_inv = st.v_inv;
  out.s = st.work;
  return out;
}

IntMatrix row_hermite_form(const IntMatrix& m) {
  std::vector<IntVec> rows;
  rows.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(m.row(i));

  std::vector<IntVec> out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols && !rows.empty(); ++c) {
    // Reduce column c among the not-yet-fixed rows to a single nonzero entry.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || cmp(abs(rows[i][c]), abs(rows[best][c])) < 0))
          best = i;
      if (best == rows.size()) break;
      bool again = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[best][c];
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] -= q * rows[best][j];
        if (rows[i][c] != 0) again = true;
      }
      if (!again) {
        if (rows[best][c] < 0)
          for (std::size_t j = 0; j < m.cols; ++j) rows[best][j] = -rows[best][j];
        out.push_back(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
    (void)lead;
  }
  // Drop zero rows that survive (all-zero input rows).
  std::vector<IntVec> nonzero;
  for (auto& r : out)
    if (!is_zero(r)) nonzero.push_back(r);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = nonzero.size(); i-- > 0;) {
    std::size_t pc = 0;
    while (pc < m.cols && nonzero[i][pc] == 0) ++pc;
    for (std::size_t k = 0; k < i; ++k) {
      Int q = nonzero[k][pc] / nonzero[i][pc];
      if (nonzero[k][pc] - q * nonzero[i][pc] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (std::size_t j = 0; j < m.cols; ++j) nonzero[k][j] -= q * nonzero[i][j];
    }
  }
  return IntMatrix::from_rows(nonzero, m.cols);
}

bool row_lattices_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.cols) return false;
  return row_hermite_form(a) == row_hermite_form(b);
}

std::vector<IntVec> integer_left_kernel(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  std::size_t r = 0;
  std::size_t n = std::min(m.rows, m.cols);
  while (r < n && d.s.at(r, r) != 0) ++r;
  std::vector<IntVec> out;
  for (std::size_t i = r; i < m.rows; ++i) out.push_back(d.u_inv.row(i));
  return out;
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  std::size_t r = 0;
  std::size_t n = std::min(m.rows, m.cols);
  while (r < n && d.s.at(r, r) != 0) ++r;
  std::vector<IntVec> out;
  for (std::size_t j = r; j < m.cols; ++j) out.push_back(d.v_inv.col(j));
  return out;
}

RationalSolution solve_rational(const RatMatrix& a, const RatVec& b) {
  if (a.rows != b.size()) throw std::invalid_argument("solve_rational: shape mismatch");
  std::size_t nr = a.rows, nc = a.cols;
  RatMatrix m(nr, nc + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, nc) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m.at(p, c) == 0) ++p;
    if (p == nr) continue;
    for (std::size_t j = 0; j <= nc; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat piv = m.at(r, c);
    for (std::size_t j = 0; j <= nc; ++j) m.at(r, j) /= piv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = 0; j <= nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (m.at(i, nc) != 0) return {SolveKind::None, {}, {}};

  RationalSolution sol;
  sol.point.assign(nc, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol.point[pivot_col[i]] = m.at(i, nc);

  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    RatVec k(nc, Rat(0));
    k[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) k[pivot_col[i]] = -m.at(i, c);
    sol.kernel.push_back(k);
  }
  sol.kind = sol.kernel.empty() ? SolveKind::Unique : SolveKind::Affine;
  return sol;
}

namespace {

// Scale so the first nonzero entry of (coeffs, constant) has magnitude-free
// canonical form; used only to deduplicate rows.
LinearInequality normalized(LinearInequality q) {
  Int l = q.constant.get_den();
  for (const Rat& x : q.coeffs) l = lcm(l, x.get_den());
  Int g = abs(q.constant.get_num() * (l / q.constant.get_den()));
  for (const Rat& x : q.coeffs) g = gcd(g, x.get_num() * (l / x.get_den()));
  g = abs(g);
  if (g == 0) return q;
  Rat f = make_rat(l, g);
  for (Rat& x : q.coeffs) x *= f;
  q.constant *= f;
  return q;
}

bool trivially_true(const LinearInequality& q) {
  if (!is_zero(q.coeffs)) return false;
  return q.strict ? q.constant > 0 : q.constant >= 0;
}

}  // namespace

std::vector<LinearInequality> fourier_motzkin_eliminate(
    const std::vector<LinearInequality>& system, std::size_t var) {
  std::vector<const LinearInequality*> pos, neg;
  std::vector<LinearInequality> out;
  for (const auto& q : system) {
    if (var >= q.coeffs.size() || q.coeffs[var] == 0) {
      if (!trivially_true(q)) out.push_back(q);
      continue;
    }
    (q.coeffs[var] > 0 ? pos : neg).push_back(&q);
  }
  for (const auto* p : pos)
    for (const auto* n : neg) {
      // positive combination (-n_k) * p + p_k * n kills the variable
      Rat pk = p->coeffs[var], nk = n->coeffs[var];
      LinearInequality q;
      q.coeffs.assign(std::max(p->coeffs.size(), n->coeffs.size()), Rat(0));
      for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
        Rat pv = j < p->coeffs.size() ? p->coeffs[j] : Rat(0);
        Rat nv = j < n->coeffs.size() ? n->coeffs[j] : Rat(0);
        q.coeffs[j] = (-nk) * pv + pk * nv;
      }
      q.coeffs[var] = 0;
      q.constant = (-nk) * p->constant + pk * n->constant;
      q.strict = p->strict || n->strict;
      if (!trivially_true(q)) out.push_back(normalized(std::move(q)));
    }
  // Deduplicate exact repeats (keeps the stricter flavour of a tie).
  std::map<std::pair<std::vector<std::pair<Int, Int>>, std::pair<Int, Int>>, std::size_t> seen;
  std::vector<LinearInequality> dedup;
  for (auto& q : out) {
    std::vector<std::pair<Int, Int>> key;
    key.reserve(q.coeffs.size());
    for (const Rat& x : q.coeffs) key.emplace_back(x.get_num(), x.get_den());
    auto full = std::make_pair(std::move(key), std::make_pair(q.constant.get_num(), q.constant.get_den()));
    auto it = seen.find(full);
    if (it == seen.end()) {
      seen.emplace(std::move(full), dedup.size());
      dedup.push_back(std::move(q));
    } else if (q.strict && !dedup[it->second].strict) {
      dedup[it->second].strict = true;
    }
  }
  return dedup;
}

FeasibilityWitness solve_inequalities(const std::vector<LinearInequality>& system,
                                      std::size_t nvars) {
  std::vector<std::vector<LinearInequality>> stages;
  stages.reserve(nvars + 1);
  std::vector<LinearInequality> cur;
  for (const auto& q : system) {
    LinearInequality w = q;
    w.coeffs.resize(nvars, Rat(0));
    if (!trivially_true(w)) cur.push_back(std::move(w));
  }
  stages.push_back(cur);
  for (std::size_t v = 0; v < nvars; ++v) {
    cur = fourier_motzkin_eliminate(cur, v);
    stages.push_back(cur);
  }
  for (const auto& q : stages.back()) {
    if (q.strict ? !(q.constant > 0) : !(q.constant >= 0)) return {false, {}};
  }
  RatVec x(nvars, Rat(0));
  for (std::size_t v = nvars; v-- > 0;) {
    // Bounds on x_v from the system in which variables > v are already fixed.
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const auto& q : stages[v]) {
      if (q.coeffs[v] == 0) continue;
      Rat rest = q.constant;
      for (std::size_t j = v + 1; j < nvars; ++j) rest += q.coeffs[j] * x[j];
      Rat bound = -rest / q.coeffs[v];
      if (q.coeffs[v] > 0) {
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = q.strict;
          has_lo = true;
        } else if (bound == lo) {
          lo_strict = lo_strict || q.strict;
        }
      } else {
        if (!has_hi || bound < hi) {
          hi = bound;
          hi_strict = q.strict;
          has_hi = true;
        } else if (bound == hi) {
          hi_strict = hi_strict || q.strict;
        }
      }
    }
    if (has_lo && has_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict)
          throw std::logic_error("solve_inequalities: empty fiber after elimination");
        x[v] = lo;
      } else {
        x[v] = (lo + hi) / 2;
      }
    } else if (has_lo) {
      x[v] = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      x[v] = hi_strict ? hi - 1 : hi;
    } else {
      x[v] = 0;
    }
  }
  return {true, x};
}

}  // namespace exo
