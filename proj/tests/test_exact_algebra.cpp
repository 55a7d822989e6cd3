// Exact polynomial layer: ring arithmetic, term order, division, resultants,
// the root-symmetry and curve reductions, gradings, views, serialization.
#include <string>
#include <vector>

#include "doctest.h"
#include "premod/multipoly.hpp"

using namespace premod;

namespace {

MultiPoly v(Var x) { return MultiPoly::variable(x); }
MultiPoly c(long n, long d = 1) { return MultiPoly::constant(make_rational(n, d)); }

// Exact evaluation at rational points for every variable of the alphabet.
Rational eval_at(const MultiPoly& p, const std::vector<std::pair<Var, Rational>>& at) {
  MultiPoly s = p.specialize(at);
  return s.constant_value();
}

}  // namespace

TEST_CASE("ring arithmetic and canonical order") {
  MultiPoly a = v(Var::B) * v(Var::B) + c(2) * v(Var::G2) - c(7);
  MultiPoly b = v(Var::Z) * v(Var::X0) - c(1, 3);
  MultiPoly d = v(Var::Beta) + c(5) * v(Var::Alpha);

  CHECK((a + b) * d == a * d + b * d);
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
  CHECK((a * b) * d == a * (b * d));
  CHECK(a * c(0) == MultiPoly{});

  MultiPoly s = v(Var::B) + v(Var::G2);
  CHECK(s.pow(2) == v(Var::B) * v(Var::B) + c(2) * v(Var::B) * v(Var::G2) +
                        v(Var::G2) * v(Var::G2));
  CHECK(s.pow(0) == c(1));

  // Graded-lex: total degree first, then earlier alphabet letters dominate.
  MultiPoly g = v(Var::Beta).pow(3) + v(Var::Alpha).pow(2) * v(Var::Beta) + v(Var::G2);
  CHECK(g.lead().m == (v(Var::Alpha).pow(2) * v(Var::Beta)).lead().m);
  CHECK(g.terms().size() == 3);
  CHECK(g.terms()[2].m == v(Var::G2).lead().m);

  CHECK(a.degree(Var::B) == 2);
  CHECK(a.degree(Var::Z) == 0);
  CHECK(a.total_degree() == 2);
  CHECK(eval_at(a, {{Var::B, 3}, {Var::G2, make_rational(1, 2)}}) == 3);
}

TEST_CASE("exact division") {
  MultiPoly a = v(Var::B).pow(2) - v(Var::X0) * v(Var::Z) + c(4, 9);
  MultiPoly b = v(Var::Y0) * v(Var::B) - c(3) * v(Var::G3);
  CHECK(exact_div(a * b, b) == a);
  CHECK(exact_div(a * b * b, b * b) == a);
  CHECK_THROWS_AS(exact_div(v(Var::B).pow(2) + c(1), v(Var::B) + c(1)), DivisionError);
  CHECK_THROWS_AS(exact_div(a, MultiPoly{}), DivisionError);
  CHECK(exact_div(MultiPoly{}, b).is_zero());
}

TEST_CASE("resultants via fraction-free elimination") {
  // Res_B(B^2 - 1, B - 2) = (2)^2 - 1 = 3.
  MultiPoly p = v(Var::B).pow(2) - c(1);
  MultiPoly q = v(Var::B) - c(2);
  CHECK(resultant(p, q, Var::B) == c(3));

  // Res_B(B - x0, B - y0) = x0 - y0, and swapping flips the sign (deg 1 * deg 1).
  MultiPoly r1 = resultant(v(Var::B) - v(Var::X0), v(Var::B) - v(Var::Y0), Var::B);
  MultiPoly r2 = resultant(v(Var::B) - v(Var::Y0), v(Var::B) - v(Var::X0), Var::B);
  CHECK(r1 == v(Var::X0) - v(Var::Y0));
  CHECK(r2 == -r1);

  // Even product of degrees: swap is symmetric.
  MultiPoly f = v(Var::B).pow(2) + v(Var::G2);
  MultiPoly g = v(Var::B).pow(2) - v(Var::G3) * v(Var::B) - c(1);
  CHECK(resultant(f, g, Var::B) == resultant(g, f, Var::B));

  // Common factor forces a vanishing resultant.
  MultiPoly shared = v(Var::B) - v(Var::X0);
  CHECK(resultant(shared * (v(Var::B) + c(2)), shared * (v(Var::B) - v(Var::Y0)), Var::B)
            .is_zero());

  // Zero coefficients inside the Sylvester matrix (pivot handling).
  CHECK(resultant(v(Var::B).pow(2) + c(1), v(Var::B).pow(2) - c(1), Var::B) == c(4));

  // Multiplicativity: Res(p, q*r) = Res(p, q) * Res(p, r).
  MultiPoly r = v(Var::B) + v(Var::Z);
  CHECK(resultant(p, q * r, Var::B) == resultant(p, q, Var::B) * resultant(p, r, Var::B));

  CHECK_THROWS_AS(resultant(p, c(5), Var::B), ArgumentError);
  CHECK_THROWS_AS(resultant(v(Var::G2), p, Var::B), ArgumentError);
}

TEST_CASE("root-symmetry reduction") {
  MultiPoly e1 = v(Var::E1), e2 = v(Var::E2), e3 = v(Var::E3);
  MultiPoly g2 = v(Var::G2), g3 = v(Var::G3);

  CHECK(symmetric_reduce(e1 + e2 + e3).is_zero());
  CHECK(symmetric_reduce(e1 * e2 + e1 * e3 + e2 * e3) == g2 * make_rational(-1, 4));
  CHECK(symmetric_reduce(e1 * e2 * e3) == g3 * make_rational(1, 4));
  CHECK(symmetric_reduce(e1.pow(2) + e2.pow(2) + e3.pow(2)) == g2 * make_rational(1, 2));
  CHECK(symmetric_reduce(e1.pow(3) + e2.pow(3) + e3.pow(3)) == g3 * make_rational(3, 4));
  CHECK(symmetric_reduce(e1.pow(4) + e2.pow(4) + e3.pow(4)) ==
        g2.pow(2) * make_rational(1, 8));

  CHECK_THROWS_AS(symmetric_reduce(e1), SymmetryError);
  CHECK_THROWS_AS(symmetric_reduce(e1 * e2 + e2 * e3), SymmetryError);

  // Oracle: pick rational roots with e1+e2+e3 = 0, derive g2, g3 from them,
  // and compare both sides of the reduction as exact rationals.
  Rational r1 = make_rational(1, 2), r2 = make_rational(1, 3), r3 = -r1 - r2;
  Rational G2 = -4 * (r1 * r2 + r1 * r3 + r2 * r3);
  Rational G3 = 4 * (r1 * r2 * r3);
  std::vector<MultiPoly> sym = {
      e1.pow(2) * e2 + e2.pow(2) * e3 + e3.pow(2) * e1 + e1 * e2.pow(2) + e2 * e3.pow(2) +
          e3 * e1.pow(2),
      (e1 - e2).pow(2) * (e1 - e3).pow(2) * (e2 - e3).pow(2),
      e1.pow(5) + e2.pow(5) + e3.pow(5),
      (e1.pow(2) + c(1)) * (e2.pow(2) + c(1)) * (e3.pow(2) + c(1)),
  };
  for (const MultiPoly& s : sym) {
    Rational direct = eval_at(s, {{Var::E1, r1}, {Var::E2, r2}, {Var::E3, r3}});
    Rational reduced = eval_at(symmetric_reduce(s), {{Var::G2, G2}, {Var::G3, G3}});
    CHECK(direct == reduced);
  }
}

TEST_CASE("curve relation and single-root reduction") {
  MultiPoly x0 = v(Var::X0), y0 = v(Var::Y0), g2 = v(Var::G2), g3 = v(Var::G3);
  MultiPoly curve = x0.pow(3) * c(4) - g2 * x0 - g3;

  CHECK(reduce_y0(y0.pow(2)) == curve);
  CHECK(reduce_y0(y0.pow(3) * x0).degree(Var::Y0) == 1);
  CHECK(reduce_y0(y0.pow(4)) == curve * curve);
  MultiPoly mixed = y0.pow(5) - c(2) * y0.pow(2) * g2 + x0;
  CHECK(reduce_y0(reduce_y0(mixed)) == reduce_y0(mixed));
  CHECK(reduce_y0(mixed).degree(Var::Y0) <= 1);

  MultiPoly e1 = v(Var::E1);
  CHECK(reduce_single_e(e1.pow(3) * c(4) - g2 * e1 - g3).is_zero());
  CHECK(reduce_single_e(e1.pow(2) + e1) == e1.pow(2) + e1);
  CHECK_THROWS_AS(reduce_single_e(v(Var::E2)), ArgumentError);

  // Oracle: on the curve y0^2 = 4 x0^3 - g2 x0 - g3 both forms agree.
  Rational X = make_rational(3, 2), G2v = make_rational(1, 4), G3v;
  Rational Y2 = 4 * X * X * X - G2v * X;  // choose g3 so that y0 = 1
  G3v = Y2 - 1;
  MultiPoly probe = y0.pow(4) * x0 - y0.pow(2) * g2 + y0 + x0;
  Rational lhs = eval_at(
      probe, {{Var::X0, X}, {Var::Y0, 1}, {Var::G2, G2v}, {Var::G3, G3v}});
  Rational rhs = eval_at(
      reduce_y0(probe), {{Var::X0, X}, {Var::Y0, 1}, {Var::G2, G2v}, {Var::G3, G3v}});
  CHECK(lhs == rhs);
}

TEST_CASE("weight gradings") {
  Grading S = Grading::S();
  Grading M = Grading::M();

  WeightedDegree wd = weighted_degree(v(Var::B) + v(Var::G2), S);
  CHECK(wd.min == 1);
  CHECK(wd.max == 2);
  CHECK_FALSE(wd.homogeneous);

  // beta^2 and alpha^2 and g2 all have spectral weight 2.
  WeightedDegree h =
      weighted_degree(v(Var::Beta).pow(2) + v(Var::Alpha).pow(2) + v(Var::G2), S);
  CHECK(h.homogeneous);
  CHECK(h.max == 2);

  MultiPoly w2 = v(Var::Z).pow(3) - c(3) * v(Var::X0) * v(Var::Z) - v(Var::Y0);
  WeightedDegree m = weighted_degree(w2, M);
  CHECK(m.homogeneous);
  CHECK(m.max == 3);

  CHECK_THROWS_AS(weighted_degree(v(Var::X0), S), ArgumentError);
  CHECK_THROWS_AS(weighted_degree(v(Var::B), M), ArgumentError);
  CHECK_THROWS_AS(weighted_degree(MultiPoly{}, S), ArgumentError);
}

TEST_CASE("univariate views") {
  MultiPoly p = v(Var::B).pow(2) * v(Var::G2) + v(Var::B) * v(Var::Z) + c(1);
  UniPolyView view = UniPolyView::from(p, Var::B);
  CHECK(view.degree() == 2);
  CHECK(view.coeff[0] == c(1));
  CHECK(view.coeff[1] == v(Var::Z));
  CHECK(view.coeff[2] == v(Var::G2));
  CHECK(view.reassemble() == p);

  UniPolyView constant_view = UniPolyView::from(c(5), Var::B);
  CHECK(constant_view.degree() == 0);
  CHECK(constant_view.reassemble() == c(5));
}

TEST_CASE("substitution and scaling") {
  MultiPoly e1 = v(Var::E1), e2 = v(Var::E2);
  MultiPoly sub = v(Var::E3).pow(2).substitute_poly(Var::E3, -(e1 + e2));
  CHECK(sub == e1.pow(2) + c(2) * e1 * e2 + e2.pow(2));

  MultiPoly lin = (v(Var::B).pow(2) + v(Var::B) * v(Var::Z))
                      .substitute_linear(Var::B, make_rational(2), Var::X0);
  CHECK(lin == c(4) * v(Var::X0).pow(2) + c(2) * v(Var::X0) * v(Var::Z));

  MultiPoly drop = (v(Var::B) * v(Var::Z) + v(Var::G2)).substitute_linear(Var::B, 0);
  CHECK(drop == v(Var::G2));

  MultiPoly frac = c(3, 4) * v(Var::B).pow(2) - c(9, 8);
  Rational s = frac.primitive_scale();
  CHECK(s == make_rational(8, 3));
  MultiPoly scaled = frac * s;
  CHECK(scaled == c(2) * v(Var::B).pow(2) - c(3));
  CHECK(scaled.primitive_scale() == 1);
  CHECK_THROWS_AS(MultiPoly{}.primitive_scale(), ArgumentError);
}

TEST_CASE("numeric evaluation") {
  MultiPoly w2 = v(Var::Z).pow(3) - c(3) * v(Var::X0) * v(Var::Z) - v(Var::Y0);
  std::array<std::complex<double>, kVarCount> at{};
  at[var_index(Var::Z)] = {2.0, 0.0};
  at[var_index(Var::X0)] = {1.0, 0.0};
  at[var_index(Var::Y0)] = {2.0, 0.0};
  double scale = 0.0;
  std::complex<double> val = w2.eval_with_scale(at, &scale);
  CHECK(std::abs(val) < 1e-15 * scale);
  CHECK(scale == doctest::Approx(16.0));

  std::array<std::complex<double>, kVarCount> generic{};
  for (int i = 0; i < kVarCount; ++i) generic[i] = {0.5 + 0.1 * i, 0.25 - 0.05 * i};
  std::complex<double> got = w2.eval(generic, std::complex<double>{1.0, 0.0});
  std::complex<double> z = generic[var_index(Var::Z)], x = generic[var_index(Var::X0)],
                       y = generic[var_index(Var::Y0)];
  std::complex<double> expect = z * z * z - 3.0 * x * z - y;
  CHECK(std::abs(got - expect) < 1e-14);
}

TEST_CASE("printing") {
  MultiPoly w2 = v(Var::Z).pow(3) - c(3) * v(Var::X0) * v(Var::Z) - v(Var::Y0);
  CHECK(w2.pretty_by(Var::Z) == "z^3 - 3*x0*z - y0");
  CHECK(w2.pretty() == "z^3 - 3*x0*z - y0");
  CHECK(MultiPoly{}.pretty() == "0");
  CHECK(c(-5, 3).pretty() == "-5/3");
  MultiPoly grouped =
      (v(Var::G2) * c(27, 4) - c(45) * v(Var::X0).pow(2)) * v(Var::Z).pow(2) + c(1);
  CHECK(grouped.pretty_by(Var::Z) == "(-45*x0^2 + 27/4*g2)*z^2 + 1");
}

TEST_CASE("serialization round trip") {
  MultiPoly p = v(Var::Z).pow(3) - c(3) * v(Var::X0) * v(Var::Z) - v(Var::Y0) +
                c(22, 7) * v(Var::Alpha) * v(Var::Beta);
  std::string s = serialize(p);
  MultiPoly q = deserialize(s);
  CHECK(q == p);
  CHECK(serialize(q) == s);

  CHECK(deserialize(serialize(MultiPoly{})) == MultiPoly{});

  CHECK_THROWS_AS(deserialize("not json"), ArgumentError);
  CHECK_THROWS_AS(deserialize("{\"terms\": []}"), ArgumentError);
  CHECK_THROWS_AS(
      deserialize(
          "{\"alphabet\": [\"B\",\"g2\",\"g3\",\"e1\",\"e2\",\"e3\",\"x0\",\"y0\",\"z\","
          "\"alpha\",\"beta\"], \"terms\": [{\"c\": \"1/0\", \"e\": [0,0,0,0,0,0,0,0,0,0,0]}]}"),
      ArgumentError);

  // Terms given out of canonical order still deserialize to the same object.
  std::string shuffled =
      "{\"alphabet\": [\"B\",\"g2\",\"g3\",\"e1\",\"e2\",\"e3\",\"x0\",\"y0\",\"z\","
      "\"alpha\",\"beta\"], \"terms\": ["
      "{\"c\": \"-1\", \"e\": [0,0,0,0,0,0,0,1,0,0,0]},"
      "{\"c\": \"1\", \"e\": [0,0,0,0,0,0,0,0,3,0,0]},"
      "{\"c\": \"-3\", \"e\": [0,0,0,0,0,0,1,0,1,0,0]}]}";
  MultiPoly w2 = v(Var::Z).pow(3) - c(3) * v(Var::X0) * v(Var::Z) - v(Var::Y0);
  CHECK(deserialize(shuffled) == w2);
  CHECK(serialize(deserialize(shuffled)) == serialize(w2));
}
