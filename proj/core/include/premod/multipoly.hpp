// Sparse exact multivariate polynomials over Q on the fixed eleven-letter
// alphabet (B, g2, g3, e1, e2, e3, x0, y0, z, alpha, beta), with the
// elimination toolkit built on top of them: univariate views, Sylvester
// resultants (fraction-free Bareiss), root-symmetry reduction, the curve
// relation for y0, and the two weight gradings.
//
// Canonical form: terms are kept sorted in descending graded-lex order
// (total degree first, ties broken by earlier-alphabet exponents), with no
// zero coefficients. Equality, printing, and serialization all read that
// canonical order.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "premod/errors.hpp"
#include "premod/rational.hpp"

namespace premod {

enum class Var : int {
  B = 0,
  G2,
  G3,
  E1,
  E2,
  E3,
  X0,
  Y0,
  Z,
  Alpha,
  Beta,
};

inline constexpr int kVarCount = 11;

extern const std::array<const char*, kVarCount> kVarNames;

inline int var_index(Var v) { return static_cast<int>(v); }

struct Monomial {
  std::array<std::uint16_t, kVarCount> e{};

  int total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Componentwise difference; caller must have checked divisibility.
  Monomial operator/(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
};

// True when a precedes b in descending graded-lex order (a is "larger").
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
  bool operator==(const Term& other) const { return m == other.m && c == other.c; }
};

class MultiPoly {
public:
  MultiPoly() = default;

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Monomial& m, const Rational& c);
  /// Normalizes an arbitrary term soup (sorts, merges, strips zeros).
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; ArgumentError unless is_constant().
  Rational constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Leading term in graded-lex order; ArgumentError on the zero polynomial.
  const Term& lead() const;

  int degree(Var v) const;
  int total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly operator*(const Rational& scalar) const;
  bool operator==(const MultiPoly& rhs) const { return terms_ == rhs.terms_; }

  MultiPoly pow(unsigned k) const;

  /// Coefficient of v^k, as a polynomial no longer involving v.
  MultiPoly coeff_of(Var v, int k) const;

  /// v -> c (optionally c * w). Exact; exponents transfer to w.
  MultiPoly substitute_linear(Var v, const Rational& c,
                              std::optional<Var> w = std::nullopt) const;
  /// v -> an arbitrary polynomial.
  MultiPoly substitute_poly(Var v, const MultiPoly& replacement) const;
  /// Exact evaluation of a subset of variables at rational points.
  MultiPoly specialize(const std::vector<std::pair<Var, Rational>>& values) const;

  /// Positive rational s such that s * (*this) has integer coefficients with
  /// content 1. ArgumentError on the zero polynomial.
  Rational primitive_scale() const;

  /// Numeric or series evaluation. T needs: copy, T+T, T*T, T*double.
  /// `one` supplies the multiplicative identity (and, for series types, the
  /// truncation context). `abs_scale`, when non-null and T is complex, is not
  /// used here; see eval_with_scale below for the numeric path.
  template <typename T>
  T eval(const std::array<T, kVarCount>& values, const T& one) const {
    T acc = one * 0.0;
    std::array<std::vector<T>, kVarCount> powers;
    for (int v = 0; v < kVarCount; ++v) {
      int d = degree(static_cast<Var>(v));
      powers[v].reserve(static_cast<std::size_t>(d) + 1);
      powers[v].push_back(one);
      for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v]);
    }
    for (const Term& t : terms_) {
      T m = one * to_double(t.c);
      for (int v = 0; v < kVarCount; ++v)
        if (t.m.e[v] != 0) m = m * powers[v][t.m.e[v]];
      acc = acc + m;
    }
    return acc;
  }

  /// Complex evaluation that also reports the absolute-value sum of the
  /// evaluated terms (the natural scale for "is this zero" tests).
  std::complex<double> eval_with_scale(const std::array<std::complex<double>, kVarCount>& values,
                                       double* abs_scale) const;

  /// Human-readable form in canonical term order, e.g. "z^3 - 3*x0*z - y0".
  std::string pretty() const;
  /// Grouped by descending degree in `main` ("(27/4*g2 - 45*x0^2)*z^2 + ...").
  std::string pretty_by(Var main) const;

private:
  explicit MultiPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  static std::vector<Term> normalize(std::vector<Term> terms);

  std::vector<Term> terms_;  // descending graded-lex, no zero coefficients
};

inline MultiPoly operator*(const Rational& scalar, const MultiPoly& p) { return p * scalar; }

/// Exact quotient p / d; DivisionError if d does not divide p exactly
/// (or d is zero).
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

/// Rewrites every y0^k (k >= 2) through y0^2 = 4*x0^3 - g2*x0 - g3.
MultiPoly reduce_y0(const MultiPoly& p);

/// Canonical form modulo the root relations e1+e2+e3 = 0,
/// sum(ei*ej) = -g2/4, e1*e2*e3 = g3/4. For symmetric input the result is
/// free of e1, e2, e3; SymmetryError otherwise.
MultiPoly symmetric_reduce(const MultiPoly& p);

/// Reduction of a polynomial in the single root symbol e1 modulo
/// 4*e1^3 = g2*e1 + g3 (degree in e1 drops below 3). ArgumentError if e2 or
/// e3 appear.
MultiPoly reduce_single_e(const MultiPoly& p);

struct WeightedDegree {
  long min = 0;
  long max = 0;
  bool homogeneous = false;
};

struct Grading {
  std::array<int, kVarCount> weight{};
  std::array<bool, kVarCount> defined{};

  /// Spectral-side grading: B, e1..e3, alpha, beta weigh 1; g2 weighs 2; g3
  /// weighs 3. x0, y0, z are outside its domain.
  static Grading S();
  /// Modular-weight grading: z = 1, x0 = 2, y0 = 3, g2 = 4, g3 = 6. B, ei,
  /// alpha, beta are outside its domain.
  static Grading M();
};

/// Weighted degree range under a grading; ArgumentError on the zero
/// polynomial or when a term uses a variable outside the grading's domain.
WeightedDegree weighted_degree(const MultiPoly& p, const Grading& g);

/// A polynomial read as univariate in `var` with MultiPoly coefficients.
struct UniPolyView {
  Var var{};
  std::vector<MultiPoly> coeff;  // coeff[k] multiplies var^k; trimmed

  static UniPolyView from(const MultiPoly& p, Var var);
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  MultiPoly reassemble() const;
};

/// Res_var(p, q) via fraction-free Bareiss elimination on the Sylvester
/// matrix (deg q rows of p's coefficients above deg p rows of q's, both in
/// descending degree order, standard orientation: antisymmetric under swap
/// up to (-1)^(deg p * deg q)). ArgumentError if either input has degree < 1
/// in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var var);

/// Canonical JSON serialization: coefficients as "num/den" strings and
/// exponent vectors in alphabet order, terms in canonical order.
std::string serialize(const MultiPoly& p);
/// Inverse of serialize; accepts terms in any order, re-canonicalizes.
/// ArgumentError on malformed text.
MultiPoly deserialize(const std::string& text);

}  // namespace premod
