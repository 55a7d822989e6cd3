// Numerical Weierstrass/Hecke evaluation by q-series, and construction of
// numerical points on the Liouville curve (ansatz points, coordinate-map
// checks, monodromy exponents).
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "premod/errors.hpp"

namespace premod {

using Complex = std::complex<double>;

/// Immutable per-lattice state: tau with Im tau > 0, nome q = exp(2 pi i tau),
/// series truncation M, invariants g2, g3, Delta, half-period values e1..e3,
/// and quasi-periods eta1, eta2 (eta2 = eta1 tau - 2 pi i by Legendre).
/// Half-period convention: e1 = wp(1/2), e2 = wp(tau/2), e3 = wp((1+tau)/2).
struct TorusContext {
  Complex tau;
  Complex q;
  int trunc = 0;
  Complex g2, g3, delta;
  Complex e1, e2, e3;
  Complex eta1, eta2;

  /// Builds the context; M defaults to the smallest truncation whose series
  /// tail is below 1e-18 throughout the reduced strip |Im z| <= Im tau / 2.
  static TorusContext make(Complex tau, int trunc_override = 0);
};

/// A point z together with its real lattice coordinates z = r + s*tau,
/// both reduced into [0, 1); r + s*tau may differ from z by a lattice vector.
struct TorusPoint {
  Complex z;
  double r = 0, s = 0;

  static TorusPoint from_z(Complex z, const TorusContext& ctx);
  static TorusPoint from_rs(double r, double s, const TorusContext& ctx);
};

/// g2, g3, Delta and the half-period values for tau, truncating q-series at
/// order M. Im tau <= 0 -> DomainError.
struct EisensteinValues {
  Complex g2, g3, delta;
  Complex e1, e2, e3;
};
EisensteinValues eisenstein(Complex tau, int trunc);

/// Quasi-periods: eta1 by q-series, eta2 = eta1 tau - 2 pi i.
struct QuasiPeriods {
  Complex eta1, eta2;
};
QuasiPeriods quasi_periods(Complex tau, int trunc);

/// wp, wp', zeta at z. z is reduced to the fundamental strip internally; the
/// zeta value picks up the matching quasi-period corrections, so it is the
/// value at the given z, not at the reduced representative. z on the lattice
/// -> PoleError.
struct WeierstrassValues {
  Complex wp, wp_prime, zeta;
};
WeierstrassValues weierstrass_eval(Complex z, const TorusContext& ctx);
WeierstrassValues weierstrass_eval(const TorusPoint& pt, const TorusContext& ctx);

/// Hecke's Z_{r,s} = zeta(r + s*tau) - r*eta1 - s*eta2. Accepts complex (r, s);
/// (r, s) congruent to a lattice point -> PoleError.
Complex hecke_Z(Complex r, Complex s, const TorusContext& ctx);

/// All complex roots of a polynomial given by ascending coefficients, via
/// simultaneous (Durand-Kerner) iteration with deterministic initialization
/// and Newton polish. Leading coefficient must be nonzero (ArgumentError);
/// iteration cap exceeded -> ConvergenceError.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

/// Inverts wp: returns z with wp(z) = x, reduced to the fundamental cell.
/// Among the two branches +-z, returns the one whose wp' is closest to
/// sign_hint when given, otherwise a deterministic canonical branch.
/// ConvergenceError if no Newton start converges.
TorusPoint wp_inverse(Complex x, const TorusContext& ctx,
                      std::optional<Complex> sign_hint = std::nullopt);

/// A numerical point on the degree-n Liouville curve: ansatz points a_1..a_n
/// with their trace data and residuals.
struct CurvePointNumeric {
  int n = 0;
  std::vector<TorusPoint> a;
  Complex B = 0, C = 0;
  Complex sigma_raw = 0;   // a_1 + ... + a_n as summed (unreduced)
  TorusPoint sigma;        // reduced representative
  Complex zn = 0;          // zeta(sigma_raw) - sum of zeta(a_i)
  Complex zeta_sum = 0;    // sum of zeta(a_i)
  std::vector<double> eq_residuals;  // |sum wp'(a_i) wp(a_i)^r|, r = 0..n-2
  double b_residual = 0;   // |B - (2n-1) sum wp(a_i)|
  double c_residual = 0;   // |C^2 - ell_n(B)|
};

/// Builds the ansatz point over spectral value B: the wp(a_i) are the roots
/// of the solved spectral polynomial at (alpha, beta) = (0, 2B); the wp'
/// branches are fixed by brute-force search over sign assignments (modulo
/// global negation, which maps a valid point to a valid point) minimizing the
/// trace residuals; branches multiplying a numerically vanishing wp' are
/// immaterial and excluded from the uniqueness requirement. C is the common
/// value of wp'(a_i) prod_{j != i} (wp(a_i) - wp(a_j)), with cross-i
/// agreement asserted. Degenerate B (residual or ambiguity failure)
/// -> ConstructionError; callers resample B.
CurvePointNumeric sample_liouville_point(int n, Complex B, const TorusContext& ctx);

/// Coordinate-map agreement report for a sampled point: the three root-wise
/// x0 expressions, their spread, deviations of wp(sigma), wp'(sigma) from the
/// mapped x0, y0, and |kappa + zn|. Evaluating at a zero of l0*lt0
/// -> PoleError (caller resamples B).
struct MaierReport {
  Complex x0[3];
  double x0_spread = 0;   // max pairwise |x0_i - x0_j|
  Complex y0 = 0, kappa = 0;
  double wp_dev = 0;      // |wp(sigma) - x0_1|
  double wp_prime_dev = 0;  // |wp'(sigma) - y0|
  double kappa_dev = 0;   // |kappa + zn|
};
MaierReport maier_check(const CurvePointNumeric& pt, const TorusContext& ctx);

/// Monodromy exponents (r, s): the unique complex solution of
/// r + s*tau = sigma_raw, r*eta1 + s*eta2 = sum zeta(a_i); the system's
/// determinant is the Legendre constant -2 pi i.
std::pair<Complex, Complex> monodromy_exponents(const CurvePointNumeric& pt,
                                                const TorusContext& ctx);

}  // namespace premod
