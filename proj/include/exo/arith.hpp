#pragma once

// Exact integer / rational linear algebra kernel. Everything downstream
// (cones, fans, triangulations, certificates) runs on these primitives;
// no floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exo {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Error with a short machine-readable code; the pipeline maps these to
// named certificate failures in reports.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

Rat make_rat(const Int& num, const Int& den);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);
inline Rat dot(const IntVec& a, const RatVec& b) { return dot(b, a); }

// gcd of all entries, nonnegative; 0 for the zero vector.
Int content(const IntVec& v);

// v / gcd(entries); rejects the zero vector.
IntVec primitive(const IntVec& v);

RatVec to_rat(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);  // requires is_integral

// Primitive integer vector spanning the same ray as a nonzero rational
// vector (clears denominators, divides by content).
IntVec primitive_direction(const RatVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& k, const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& k, const RatVec& v);
IntVec negate(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows_in, std::size_t cols_hint = 0);

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
Int det(const IntMatrix& m);  // square only, fraction-free Gauss

struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  static RatMatrix from_rows(const std::vector<RatVec>& rows_in, std::size_t cols_hint = 0);
  static RatMatrix from_int(const IntMatrix& m);

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  RatVec row(std::size_t i) const;
};

std::size_t rank(RatMatrix m);
std::size_t rank_of_rows(const std::vector<IntVec>& rows);
std::size_t rank_of_rows(const std::vector<RatVec>& rows);

// A = U * S * V with U, V unimodular and S diagonal, d_1 | d_2 | ... , all >= 0.
// u_inv and v_inv are carried along so cokernel data can be read off directly.
struct SmithDecomposition {
  IntMatrix u, s, v;
  IntMatrix u_inv, v_inv;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Canonical row-style Hermite normal form: positive pivots, entries above a
// pivot reduced into [0, pivot), zero rows dropped. Two integer row lattices
// are equal iff their forms coincide.
IntMatrix row_hermite_form(const IntMatrix& m);
bool row_lattices_equal(const IntMatrix& a, const IntMatrix& b);

// Saturated basis of {w : w * m = 0} (left kernel), as rows.
std::vector<IntVec> integer_left_kernel(const IntMatrix& m);
// Saturated basis of {x : m * x = 0} (right kernel), as vectors.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

enum class SolveKind { None, Unique, Affine };

struct RationalSolution {
  SolveKind kind = SolveKind::None;
  RatVec point;                 // a particular solution (Unique/Affine)
  std::vector<RatVec> kernel;   // basis of the homogeneous solutions (Affine)
};

// Exact classification of A x = b.
RationalSolution solve_rational(const RatMatrix& a, const RatVec& b);

// coeffs . x + constant >= 0, or > 0 when strict.
struct LinearInequality {
  RatVec coeffs;
  Rat constant = Rat(0);
  bool strict = false;
};

// One Fourier-Motzkin step: eliminates variable `var`; the projection is
// exact (reduced system feasible iff the original is) and strictness follows
// the standard combination rule.
std::vector<LinearInequality> fourier_motzkin_eliminate(
    const std::vector<LinearInequality>& system, std::size_t var);

struct FeasibilityWitness {
  bool feasible = false;
  RatVec point;  // valid when feasible
};

// Full elimination plus back-substitution of a rational witness.
FeasibilityWitness solve_inequalities(const std::vector<LinearInequality>& system,
                                      std::size_t nvars);

}  // namespace exo
