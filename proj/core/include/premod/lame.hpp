// Spectral side of the construction: polynomial solutions of the
// fourth-order ODE satisfied by products of Lame-equation solutions, the
// spectral polynomial ell_n(B) of the hyperelliptic curve C^2 = ell_n(B),
// the two compatibility polynomials in (alpha, beta), the coordinate-map
// tables on that curve, and the resultant elimination that produces the
// monic covering polynomial W_n(z; x0, y0, g2, g3).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "premod/multipoly.hpp"

namespace premod {

/// Dense polynomial in the spectral variable x; index = power of x. The
/// spectral variable is kept outside the shared alphabet on purpose: only
/// its coefficients live there.
using XPoly = std::vector<MultiPoly>;

int xpoly_degree(const XPoly& p);
/// Coefficient of x^k (zero polynomial when out of range).
MultiPoly xpoly_coeff(const XPoly& p, int k);

/// Applies the fourth-order operator
///   L q = p^2 q'''' + 3 p p' q'''
///       + (3/4 p'^2 - 2 (2(n^2+n-12) x + beta) p) q''
///       - ((2(n^2+n-3) x + beta) p' + 6(n^2+n-2) p) q'
///       + (alpha^2 - n(n+1) p') q,
/// with p = 4x^3 - g2 x - g3, to a polynomial q in x.
XPoly apply_tensor_ode(int n, const XPoly& q);

/// Leading coefficient of L applied to x^m (the x^{m+2} coefficient), a
/// rational number; vanishes exactly at m = n.
Rational tensor_ode_lead(int n, int m);

/// Coefficients s_0 = 1, s_1, ..., s_n of the monic degree-n solution
/// ansatz q(x) = x^n - s_1 x^{n-1} + ... + (-1)^n s_n, solved so that
/// deg_x L q <= 1. Exact polynomials in alpha (even powers), beta, g2, g3.
std::vector<MultiPoly> solve_spectral_coeffs(int n);

/// Spectral polynomial ell_n(B; g2, g3): the degree 2n+1 polynomial with
/// C^2 = ell_n(B) on the hyperelliptic model, assembled from the solution
/// coefficients specialized at alpha = 0, beta = 2B.
MultiPoly assemble_ell(int n);

/// The two compatibility polynomials (G1, G0): L q = alpha^2 (G1 x + G0)
/// after the triangular solve. Each is returned with its leading
/// coefficient normalized to be positive.
std::pair<MultiPoly, MultiPoly> consistency_polys(int n);

/// Coordinate-map ingredient polynomials on the hyperelliptic curve for
/// n <= 4 (beyond that: UnsupportedError). Entries l[i] and lt[i] use the
/// root symbol e_{i+1}; the others are free of root symbols.
struct TableSet {
  int n = 0;
  Rational cn;                 // ell_n = cn^2 l0 l1 l2 l3
  MultiPoly l0;
  std::array<MultiPoly, 3> l;
  MultiPoly lt0;
  std::array<MultiPoly, 3> lt;
  MultiPoly ltheta;
  MultiPoly ell;               // assembled spectral polynomial
};
TableSet load_tables(int n);

/// The elimination pair: f(B; x0, g2, g3) carries the x0-projection and
/// g(B, z; y0, g2, g3) the z/y0 relation. Both are cleared to integral
/// coefficients with content 1 (scales applied are recorded).
struct FGPair {
  MultiPoly f;
  MultiPoly g;
  Rational f_scale;
  Rational g_scale;
};
FGPair build_fg(int n);

/// Published covering polynomials W_n for n = 1..4 (monic in z).
MultiPoly wn_table(int n);
/// Leading z-coefficient of Res_B(f, g) for n = 2..4: a constant times a
/// power of Delta = g2^3 - 27 g3^2 times an even power of y0.
MultiPoly lambda_table(int n);

struct WnResult {
  int n = 0;
  MultiPoly w;       // monic in z, curve-reduced (y0-degree <= 1)
  MultiPoly lambda;  // leading z-coefficient of the curve-reduced eliminant
  bool from_table = false;
};
/// n = 1: direct. n = 2, 3: full symbolic elimination Res_B(f, g), reduced
/// modulo the curve relation and divided exactly by the leading
/// z-coefficient (the raw eliminant factors only modulo the curve). n = 4:
/// returns the stored polynomial, curve-reduced (full elimination is
/// impractical symbolically; see verify_wn_by_specialization). n >= 5:
/// UnsupportedError. All returned forms are canonical with y0-degree <= 1.
WnResult compute_Wn(int n);

/// Verifies Res_B(f, g) = lambda_n * W_n at `trials` random rational tuples
/// (x0, y0, g2) with g3 chosen so the tuple lies on the cubic curve. Each
/// trial runs the full univariate resultant exactly. Deterministic in seed.
struct SpecializationReport {
  int n = 0;
  int trials = 0;
  int passed = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  bool ok() const { return trials > 0 && passed == trials; }
};
SpecializationReport verify_wn_by_specialization(int n, int trials, std::uint64_t seed);

}  // namespace premod
