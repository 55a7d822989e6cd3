#include "premod/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace premod {

const std::array<const char*, kVarCount> kVarNames = {
    "B", "g2", "g3", "e1", "e2", "e3", "x0", "y0", "z", "alpha", "beta"};

int Monomial::total_degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kVarCount; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kVarCount; ++i) {
    unsigned s = static_cast<unsigned>(e[i]) + other.e[i];
    if (s > 0xffffu) throw InternalError("monomial exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kVarCount; ++i) {
    if (other.e[i] > e[i]) throw InternalError("monomial quotient not integral");
    r.e[i] = static_cast<std::uint16_t>(e[i] - other.e[i]);
  }
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.total_degree();
  int db = b.total_degree();
  if (da != db) return da > db;
  for (int i = 0; i < kVarCount; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

std::vector<Term> MultiPoly::normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  if (c == 0) return {};
  return MultiPoly(std::vector<Term>{Term{Monomial{}, c}});
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m;
  m.e[var_index(v)] = 1;
  return MultiPoly(std::vector<Term>{Term{m, Rational(1)}});
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  if (c == 0) return {};
  return MultiPoly(std::vector<Term>{Term{m, c}});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  return MultiPoly(normalize(std::move(terms)));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{});
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw ArgumentError("constant_value on non-constant polynomial");
  return terms_[0].c;
}

const Term& MultiPoly::lead() const {
  if (terms_.empty()) throw ArgumentError("lead of zero polynomial");
  return terms_[0];
}

int MultiPoly::degree(Var v) const {
  int vi = var_index(v);
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.m.e[vi]));
  return d < 0 ? 0 : d;  // convention: degree 0 for the zero polynomial
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_[0].m.total_degree();
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.c = -t.c;
  return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  // Merge two canonically sorted term lists.
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    if (terms_[i].m == rhs.terms_[j].m) {
      Rational c = terms_[i].c + rhs.terms_[j].c;
      if (c != 0) out.push_back(Term{terms_[i].m, std::move(c)});
      ++i;
      ++j;
    } else if (grlex_greater(terms_[i].m, rhs.terms_[j].m)) {
      out.push_back(terms_[i++]);
    } else {
      out.push_back(rhs.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.push_back(terms_[i++]);
  while (j < rhs.terms_.size()) out.push_back(rhs.terms_[j++]);
  return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  if (terms_.empty() || rhs.terms_.empty()) return {};
  std::vector<Term> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : rhs.terms_) out.push_back(Term{a.m * b.m, a.c * b.c});
  return MultiPoly(normalize(std::move(out)));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  *this = *this + rhs;
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  *this = *this - rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  if (scalar == 0) return {};
  std::vector<Term> out = terms_;
  for (Term& t : out) t.c *= scalar;
  return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(Rational(1));
  MultiPoly base = *this;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
  int vi = var_index(v);
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.m.e[vi] == k) {
      Term u = t;
      u.m.e[vi] = 0;
      out.push_back(std::move(u));
    }
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute_linear(Var v, const Rational& c, std::optional<Var> w) const {
  int vi = var_index(v);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    unsigned k = t.m.e[vi];
    if (k == 0) {
      out.push_back(t);
      continue;
    }
    if (c == 0) continue;  // the whole term vanishes
    Term u = t;
    u.c *= rational_pow(c, k);
    u.m.e[vi] = 0;
    if (w) {
      int wi = var_index(*w);
      unsigned s = u.m.e[wi] + k;
      if (s > 0xffffu) throw InternalError("monomial exponent overflow");
      u.m.e[wi] = static_cast<std::uint16_t>(s);
    }
    out.push_back(std::move(u));
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute_poly(Var v, const MultiPoly& replacement) const {
  int vi = var_index(v);
  int d = degree(v);
  std::vector<MultiPoly> powers;
  powers.reserve(static_cast<std::size_t>(d) + 1);
  powers.push_back(constant(Rational(1)));
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * replacement);
  MultiPoly acc;
  for (const Term& t : terms_) {
    Term u = t;
    unsigned k = u.m.e[vi];
    u.m.e[vi] = 0;
    acc += monomial(u.m, u.c) * powers[k];
  }
  return acc;
}

MultiPoly MultiPoly::specialize(const std::vector<std::pair<Var, Rational>>& values) const {
  MultiPoly cur = *this;
  for (const auto& [v, val] : values) cur = cur.substitute_linear(v, val);
  return cur;
}

Rational MultiPoly::primitive_scale() const {
  if (terms_.empty()) throw ArgumentError("primitive_scale of zero polynomial");
  mpz_class lcm_den(1);
  for (const Term& t : terms_) {
    mpz_class d = t.c.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class gcd_num(0);
  for (const Term& t : terms_) {
    mpz_class scaled = t.c.get_num() * (lcm_den / t.c.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational s(lcm_den, gcd_num);
  s.canonicalize();
  return s;
}

std::complex<double> MultiPoly::eval_with_scale(
    const std::array<std::complex<double>, kVarCount>& values, double* abs_scale) const {
  std::array<std::vector<std::complex<double>>, kVarCount> powers;
  for (int v = 0; v < kVarCount; ++v) {
    int d = degree(static_cast<Var>(v));
    powers[v].reserve(static_cast<std::size_t>(d) + 1);
    powers[v].push_back({1.0, 0.0});
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v]);
  }
  std::complex<double> acc{0.0, 0.0};
  double scale = 0.0;
  for (const Term& t : terms_) {
    std::complex<double> m{to_double(t.c), 0.0};
    for (int v = 0; v < kVarCount; ++v)
      if (t.m.e[v] != 0) m *= powers[v][t.m.e[v]];
    acc += m;
    scale += std::abs(m);
  }
  if (abs_scale) *abs_scale = scale;
  return acc;
}

namespace {

// Magnitude part of one term ("3*x0*z", "y0", "27/4"), without sign.
std::string term_body(const Monomial& m, const Rational& abs_coeff) {
  std::ostringstream os;
  bool printed = false;
  if (abs_coeff != 1 || m == Monomial{}) {
    os << rational_to_string(abs_coeff);
    printed = true;
  }
  for (int i = 0; i < kVarCount; ++i) {
    if (m.e[i] == 0) continue;
    if (printed) os << "*";
    os << kVarNames[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    printed = true;
  }
  return os.str();
}

void append_signed(std::ostringstream& os, bool first, bool negative, const std::string& body) {
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  os << body;
}

}  // namespace

std::string MultiPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    bool neg = t.c < 0;
    append_signed(os, first, neg, term_body(t.m, neg ? Rational(-t.c) : t.c));
    first = false;
  }
  return os.str();
}

std::string MultiPoly::pretty_by(Var main) const {
  if (terms_.empty()) return "0";
  int vi = var_index(main);
  std::ostringstream os;
  bool first = true;
  for (int k = degree(main); k >= 0; --k) {
    MultiPoly c = coeff_of(main, k);
    if (c.is_zero()) continue;
    Monomial mk;
    mk.e[vi] = static_cast<std::uint16_t>(k);
    if (c.term_count() == 1) {
      const Term& t = c.terms()[0];
      bool neg = t.c < 0;
      append_signed(os, first, neg, term_body(t.m * mk, neg ? Rational(-t.c) : t.c));
    } else {
      std::string body = "(" + c.pretty() + ")";
      if (k > 0) {
        body += "*";
        body += kVarNames[vi];
        if (k > 1) body += "^" + std::to_string(k);
      }
      append_signed(os, first, false, body);
    }
    first = false;
  }
  return os.str();
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionError("division by zero polynomial");
  if (d.is_constant()) return p * (Rational(1) / d.constant_value());
  MultiPoly q;
  MultiPoly r = p;
  const Term& dl = d.lead();
  while (!r.is_zero()) {
    const Term& rl = r.lead();
    if (!dl.m.divides(rl.m))
      throw DivisionError("polynomial division is not exact");
    MultiPoly t = MultiPoly::monomial(rl.m / dl.m, rl.c / dl.c);
    q += t;
    r -= t * d;
  }
  return q;
}

namespace {

// Rewrites every occurrence of v^pw via v^pw -> rhs until the degree in v
// falls below pw. Terminates because deg_v(rhs) < pw.
MultiPoly replace_power(const MultiPoly& p, Var v, unsigned pw, const MultiPoly& rhs) {
  if (rhs.degree(v) >= static_cast<int>(pw))
    throw InternalError("replace_power rule does not reduce degree");
  int vi = var_index(v);
  MultiPoly cur = p;
  for (;;) {
    std::vector<Term> untouched;
    MultiPoly rewritten;
    bool any = false;
    for (const Term& t : cur.terms()) {
      if (t.m.e[vi] >= pw) {
        any = true;
        Monomial m = t.m;
        m.e[vi] = static_cast<std::uint16_t>(m.e[vi] - pw);
        rewritten += MultiPoly::monomial(m, t.c) * rhs;
      } else {
        untouched.push_back(t);
      }
    }
    if (!any) return cur;
    cur = MultiPoly::from_terms(std::move(untouched)) + rewritten;
  }
}

}  // namespace

MultiPoly reduce_y0(const MultiPoly& p) {
  // y0^2 = 4*x0^3 - g2*x0 - g3
  MultiPoly rhs = MultiPoly::variable(Var::X0).pow(3) * Rational(4) -
                  MultiPoly::variable(Var::G2) * MultiPoly::variable(Var::X0) -
                  MultiPoly::variable(Var::G3);
  return replace_power(p, Var::Y0, 2, rhs);
}

MultiPoly symmetric_reduce(const MultiPoly& p) {
  const MultiPoly e1 = MultiPoly::variable(Var::E1);
  const MultiPoly e2 = MultiPoly::variable(Var::E2);
  const MultiPoly g2 = MultiPoly::variable(Var::G2);
  const MultiPoly g3 = MultiPoly::variable(Var::G3);

  // e3 = -(e1 + e2), then e2^2 = g2/4 - e1^2 - e1*e2 (from sum of products
  // = -g2/4), then e1^3 = (g2*e1 + g3)/4 (e1 is a root of 4*t^3 - g2*t - g3).
  MultiPoly cur = p.substitute_poly(Var::E3, -(e1 + e2));
  cur = replace_power(cur, Var::E2, 2, g2 * Rational(1, 4) - e1 * e1 - e1 * e2);
  cur = replace_power(cur, Var::E1, 3, (g2 * e1 + g3) * Rational(1, 4));
  if (cur.uses(Var::E1) || cur.uses(Var::E2) || cur.uses(Var::E3))
    throw SymmetryError("polynomial is not symmetric in e1, e2, e3");
  return cur;
}

MultiPoly reduce_single_e(const MultiPoly& p) {
  if (p.uses(Var::E2) || p.uses(Var::E3))
    throw ArgumentError("reduce_single_e expects a polynomial in e1 only");
  const MultiPoly e1 = MultiPoly::variable(Var::E1);
  const MultiPoly g2 = MultiPoly::variable(Var::G2);
  const MultiPoly g3 = MultiPoly::variable(Var::G3);
  return replace_power(p, Var::E1, 3, (g2 * e1 + g3) * Rational(1, 4));
}

Grading Grading::S() {
  Grading g;
  auto set = [&g](Var v, int w) {
    g.weight[var_index(v)] = w;
    g.defined[var_index(v)] = true;
  };
  set(Var::B, 1);
  set(Var::G2, 2);
  set(Var::G3, 3);
  set(Var::E1, 1);
  set(Var::E2, 1);
  set(Var::E3, 1);
  set(Var::Alpha, 1);
  set(Var::Beta, 1);
  return g;
}

Grading Grading::M() {
  Grading g;
  auto set = [&g](Var v, int w) {
    g.weight[var_index(v)] = w;
    g.defined[var_index(v)] = true;
  };
  set(Var::Z, 1);
  set(Var::X0, 2);
  set(Var::Y0, 3);
  set(Var::G2, 4);
  set(Var::G3, 6);
  return g;
}

WeightedDegree weighted_degree(const MultiPoly& p, const Grading& g) {
  if (p.is_zero()) throw ArgumentError("weighted_degree of zero polynomial");
  WeightedDegree wd;
  bool first = true;
  for (const Term& t : p.terms()) {
    long w = 0;
    for (int i = 0; i < kVarCount; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!g.defined[i])
        throw ArgumentError(std::string("variable outside grading domain: ") + kVarNames[i]);
      w += static_cast<long>(t.m.e[i]) * g.weight[i];
    }
    if (first) {
      wd.min = wd.max = w;
      first = false;
    } else {
      wd.min = std::min(wd.min, w);
      wd.max = std::max(wd.max, w);
    }
  }
  wd.homogeneous = (wd.min == wd.max);
  return wd;
}

UniPolyView UniPolyView::from(const MultiPoly& p, Var var) {
  UniPolyView v;
  v.var = var;
  int d = p.degree(var);
  v.coeff.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) v.coeff[k] = p.coeff_of(var, k);
  while (v.coeff.size() > 1 && v.coeff.back().is_zero()) v.coeff.pop_back();
  return v;
}

MultiPoly UniPolyView::reassemble() const {
  MultiPoly acc;
  MultiPoly x = MultiPoly::variable(var);
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k].uses(var))
      throw ArgumentError("univariate view coefficient depends on the main variable");
    acc += coeff[k] * x.pow(static_cast<unsigned>(k));
  }
  return acc;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var var) {
  UniPolyView pv = UniPolyView::from(p, var);
  UniPolyView qv = UniPolyView::from(q, var);
  int m = pv.degree();
  int n = qv.degree();
  if (m < 1 || n < 1)
    throw ArgumentError("resultant requires positive degree in the elimination variable");
  if (pv.coeff[m].is_zero() || qv.coeff[n].is_zero())
    throw InternalError("trimmed view has zero leading coefficient");
  int size = m + n;
  std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size));
  // n rows of p's coefficients (descending), then m rows of q's.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + (m - k)] = pv.coeff[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + (n - k)] = qv.coeff[k];

  // Fraction-free Bareiss elimination; entries stay polynomials throughout.
  MultiPoly prev = MultiPoly::constant(Rational(1));
  int sign = 1;
  for (int k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < size; ++r) {
        if (!M[r][k].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return {};  // singular: resultant vanishes identically
      std::swap(M[k], M[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = {};
    }
    prev = M[k][k];
  }
  MultiPoly det = M[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

}  // namespace premod
