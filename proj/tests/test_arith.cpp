#include <doctest.h>

#include <functional>
#include <random>

#include "exo/arith.hpp"

using namespace exo;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<IntVec> r;
  for (const auto& row : rows) {
    IntVec v;
    for (long x : row) v.push_back(Int(x));
    r.push_back(v);
  }
  return IntMatrix::from_rows(r);
}

IntVec ivec(const std::vector<long>& v) {
  IntVec out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

bool is_diagonal(const IntMatrix& s) {
  for (std::size_t i = 0; i < s.rows; ++i)
    for (std::size_t j = 0; j < s.cols; ++j)
      if (i != j && s.at(i, j) != 0) return false;
  return true;
}

void check_smith(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  CHECK(mul(mul(d.u, d.s), d.v) == a);
  CHECK(is_diagonal(d.s));
  CHECK(abs(det(d.u)) == 1);
  CHECK(abs(det(d.v)) == 1);
  CHECK(mul(d.u, d.u_inv) == IntMatrix::identity(a.rows));
  CHECK(mul(d.v, d.v_inv) == IntMatrix::identity(a.cols));
  std::size_t n = std::min(a.rows, a.cols);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    CHECK(d.s.at(i, i) >= 0);
    if (d.s.at(i, i) != 0) CHECK(d.s.at(i + 1, i + 1) % d.s.at(i, i) == 0);
    if (d.s.at(i, i) == 0) CHECK(d.s.at(i + 1, i + 1) == 0);
  }
}

// Determinantal-divisor oracle for 2x2 matrices: d1 = gcd of entries,
// d1*d2 = gcd of 2x2 minors (= |det|).
std::pair<Int, Int> smith_2x2_oracle(const IntMatrix& a) {
  Int d1 = content(a.a);
  Int dd = abs(a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0));
  if (d1 == 0) return {0, 0};
  return {d1, dd / d1};
}

LinearInequality ineq(const std::vector<long>& coeffs, long constant, bool strict) {
  LinearInequality q;
  for (long c : coeffs) q.coeffs.push_back(Rat(c));
  q.constant = Rat(constant);
  q.strict = strict;
  return q;
}

}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive(ivec({2, 4, 6})) == ivec({1, 2, 3}));
  CHECK(primitive(ivec({0, -5})) == ivec({0, -1}));
  CHECK(primitive(ivec({7})) == ivec({1}));
  CHECK_THROWS_AS(primitive(ivec({0, 0})), std::invalid_argument);
  // primitive(k.v) = primitive(v) for k > 0
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    IntVec v;
    bool zero = true;
    for (int i = 0; i < 4; ++i) {
      long x = static_cast<long>(rng() % 11) - 5;
      if (x != 0) zero = false;
      v.push_back(Int(x));
    }
    if (zero) v[0] = 1;
    Int k(static_cast<long>(rng() % 7 + 1));
    CHECK(primitive(scale(k, v)) == primitive(v));
  }
}

TEST_CASE("smith normal form: examples") {
  {
    // diag(3,5): invariant factors (1,15)
    SmithDecomposition d = smith_normal_form(mat({{3, 0}, {0, 5}}));
    CHECK(d.s.at(0, 0) == 1);
    CHECK(d.s.at(1, 1) == 15);
    auto [d1, d2] = smith_2x2_oracle(mat({{3, 0}, {0, 5}}));
    CHECK(d.s.at(0, 0) == d1);
    CHECK(d.s.at(1, 1) == d2);
  }
  {
    SmithDecomposition d = smith_normal_form(IntMatrix::identity(3));
    CHECK(d.s == IntMatrix::identity(3));
  }
  {
    SmithDecomposition d = smith_normal_form(mat({{2, 4}, {6, 8}}));
    CHECK(d.s.at(0, 0) == 2);
    CHECK(d.s.at(1, 1) == 4);
    auto [d1, d2] = smith_2x2_oracle(mat({{2, 4}, {6, 8}}));
    CHECK(d.s.at(0, 0) == d1);
    CHECK(d.s.at(1, 1) == d2);
  }
  check_smith(mat({{3, 0}, {0, 5}}));
  check_smith(mat({{2, 4}, {6, 8}}));
}

TEST_CASE("smith normal form: randomized reconstruction") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 120; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a(r, c);
    for (auto& x : a.a) x = Int(static_cast<long>(rng() % 13) - 6);
    check_smith(a);
    if (r == 2 && c == 2) {
      auto [d1, d2] = smith_2x2_oracle(a);
      SmithDecomposition d = smith_normal_form(a);
      CHECK(d.s.at(0, 0) == d1);
      CHECK(d.s.at(1, 1) == d2);
    }
  }
}

TEST_CASE("hermite form and row lattices") {
  IntMatrix a = mat({{1, 1, 1, 1, -4}});
  IntMatrix b = mat({{-1, -1, -1, -1, 4}});
  CHECK(row_lattices_equal(a, b));
  IntMatrix c = mat({{2, 2, 2, 2, -8}});
  CHECK(!row_lattices_equal(a, c));
  // order of rows is irrelevant
  IntMatrix p = mat({{1, 0, 0, 0, -2, 1}, {1, 1, 1, 1, -4, 0}});
  IntMatrix q = mat({{1, 1, 1, 1, -4, 0}, {1, 0, 0, 0, -2, 1}});
  CHECK(row_lattices_equal(p, q));
  // unimodular row operation preserves the lattice
  IntMatrix s = mat({{2, 1, 1, 1, -6, 1}, {1, 1, 1, 1, -4, 0}});
  CHECK(row_lattices_equal(p, s));
}

TEST_CASE("integer kernels") {
  IntMatrix rays = mat({{1, 0}, {0, 1}, {-1, -1}});
  auto lk = integer_left_kernel(rays);
  REQUIRE(lk.size() == 1);
  CHECK(row_lattices_equal(IntMatrix::from_rows(lk), mat({{1, 1, 1}})));
  auto rk = integer_kernel(transpose(rays));
  REQUIRE(rk.size() == 1);
  CHECK((primitive(rk[0]) == ivec({1, 1, 1}) || primitive(rk[0]) == ivec({-1, -1, -1})));
}

TEST_CASE("solve_rational: examples") {
  {
    RatMatrix a = RatMatrix::from_int(IntMatrix::identity(3));
    RatVec b = {Rat(5), Rat(-2), make_rat(1, 3)};
    auto s = solve_rational(a, b);
    CHECK(s.kind == SolveKind::Unique);
    CHECK(s.point == b);
  }
  {
    RatMatrix a = RatMatrix::from_int(mat({{1, 0}, {1, 0}}));
    auto s = solve_rational(a, {Rat(1), Rat(2)});
    CHECK(s.kind == SolveKind::None);
  }
  {
    // rows u_rho1..u_rho8 of the 5-dimensional example, b = all ones
    RatMatrix a = RatMatrix::from_int(mat({{2, 0, -1, 0, 1},
                                           {0, 2, -1, 0, 1},
                                           {-1, -1, 2, 1, 0},
                                           {-1, -1, 0, 1, 0},
                                           {1, -1, 0, 1, 0},
                                           {-1, 1, 0, 1, 0},
                                           {0, 0, 1, 0, 1},
                                           {0, 0, -1, 0, 1}}));
    RatVec b(8, Rat(1));
    auto s = solve_rational(a, b);
    REQUIRE(s.kind == SolveKind::Unique);
    CHECK(s.point == RatVec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)});
  }
  {
    // affine family: x + y = 2
    RatMatrix a = RatMatrix::from_int(mat({{1, 1}}));
    auto s = solve_rational(a, {Rat(2)});
    REQUIRE(s.kind == SolveKind::Affine);
    REQUIRE(s.kernel.size() == 1);
    CHECK(dot(s.point, ivec({1, 1})) == Rat(2));
    CHECK(dot(s.kernel[0], ivec({1, 1})) == Rat(0));
  }
}

TEST_CASE("fourier-motzkin: examples") {
  {
    // {x >= 0, x <= 1} -> empty system
    auto out = fourier_motzkin_eliminate({ineq({1}, 0, false), ineq({-1}, 1, false)}, 0);
    CHECK(out.empty());
  }
  {
    // {x > 0, x < 0} -> 0 < 0
    auto out = fourier_motzkin_eliminate({ineq({1}, 0, true), ineq({-1}, 0, true)}, 0);
    REQUIRE(out.size() == 1);
    CHECK(out[0].strict);
    CHECK(out[0].constant == 0);
    CHECK(is_zero(out[0].coeffs));
    auto w = solve_inequalities({ineq({1}, 0, true), ineq({-1}, 0, true)}, 1);
    CHECK(!w.feasible);
  }
  {
    // 2-var system with the unique rational witness (1/3, 1/2):
    //   3x >= 1, -3x >= -1, 2y >= 1, -2y >= -1, x + y > 0
    std::vector<LinearInequality> sys = {ineq({3, 0}, -1, false), ineq({-3, 0}, 1, false),
                                         ineq({0, 2}, -1, false), ineq({0, -2}, 1, false),
                                         ineq({1, 1}, 0, true)};
    auto w = solve_inequalities(sys, 2);
    REQUIRE(w.feasible);
    CHECK(w.point == RatVec{make_rat(1, 3), make_rat(1, 2)});
    // grid-search oracle over denominators <= 6 finds the same unique point
    int hits = 0;
    RatVec found;
    for (int dx = 1; dx <= 6; ++dx)
      for (int nx = -12; nx <= 12; ++nx)
        for (int dy = 1; dy <= 6; ++dy)
          for (int ny = -12; ny <= 12; ++ny) {
            Rat x = make_rat(nx, dx), y = make_rat(ny, dy);
            if (x != make_rat(nx, dx)) continue;
            bool ok = true;
            for (const auto& q : sys) {
              Rat val = q.coeffs[0] * x + q.coeffs[1] * y + q.constant;
              if (q.strict ? !(val > 0) : !(val >= 0)) {
                ok = false;
                break;
              }
            }
            if (ok && (found.empty() || RatVec{x, y} != found)) {
              found = {x, y};
              ++hits;
            }
          }
    CHECK(hits == 1);
    CHECK(found == w.point);
  }
}

// Independent feasibility oracle: vertex enumeration over all maximal square
// subsystems of the closure, with an epsilon variable for strict rows.
namespace {

bool oracle_feasible(const std::vector<LinearInequality>& sys, std::size_t nvars) {
  // Feasible iff sup eps > 0 subject to coeffs.x + constant >= eps (strict
  // rows) / >= 0 (weak rows), eps <= 1, inside a large box. The optimum is
  // attained at a basic point of the lifted system.
  std::size_t n = nvars + 1;
  std::vector<RatVec> rows;    // row . (x, eps) + constant >= 0
  std::vector<Rat> constants;
  for (const auto& q : sys) {
    RatVec r(n, Rat(0));
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) r[j] = q.coeffs[j];
    r[nvars] = q.strict ? Rat(-1) : Rat(0);
    rows.push_back(r);
    constants.push_back(q.constant);
  }
  {
    RatVec r(n, Rat(0));
    r[nvars] = 1;  // eps >= 0
    rows.push_back(r);
    constants.push_back(Rat(0));
    RatVec r2(n, Rat(0));
    r2[nvars] = -1;  // eps <= 1
    rows.push_back(r2);
    constants.push_back(Rat(1));
  }
  const long box = 1000000;  // large box keeps the region bounded
  for (std::size_t j = 0; j < n; ++j) {
    RatVec r(n, Rat(0)), r2(n, Rat(0));
    r[j] = 1;
    r2[j] = -1;
    rows.push_back(r);
    constants.push_back(Rat(box));
    rows.push_back(r2);
    constants.push_back(Rat(box));
  }
  // Enumerate basic points: all n-subsets with invertible matrix.
  std::size_t m = rows.size();
  std::vector<std::size_t> idx(n);
  Rat best(-1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n) {
      RatMatrix a(n, n);
      RatVec b(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rows[idx[i]][j];
        b[i] = -constants[idx[i]];
      }
      auto s = solve_rational(a, b);
      if (s.kind != SolveKind::Unique) return;
      for (std::size_t i = 0; i < m; ++i) {
        Rat v = dot(rows[i], s.point) + constants[i];
        if (v < 0) return;
      }
      if (s.point[nvars] > best) best = s.point[nvars];
      return;
    }
    for (std::size_t i = start; i + (n - pos) <= m; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return best > 0;
}

}  // namespace

TEST_CASE("fourier-motzkin vs vertex-enumeration oracle, randomized") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t nv = 1 + rng() % 3;  // keep the oracle's subset enumeration small
    std::size_t nq = 1 + rng() % 5;
    std::vector<LinearInequality> sys;
    for (std::size_t i = 0; i < nq; ++i) {
      std::vector<long> c;
      for (std::size_t j = 0; j < nv; ++j) c.push_back(static_cast<long>(rng() % 11) - 5);
      sys.push_back(ineq(c, static_cast<long>(rng() % 11) - 5, rng() % 2 == 0));
    }
    bool fm = solve_inequalities(sys, nv).feasible;
    bool oracle = oracle_feasible(sys, nv);
    CHECK(fm == oracle);
    if (fm) {
      auto w = solve_inequalities(sys, nv);
      for (const auto& q : sys) {
        Rat v = q.constant;
        for (std::size_t j = 0; j < nv; ++j) v += q.coeffs[j] * w.point[j];
        CHECK((q.strict ? v > 0 : v >= 0));
      }
    }
    ++checked;
  }
  CHECK(checked == 200);
}
