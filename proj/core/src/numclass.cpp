#include "fanowalls/numclass.hpp"

#include <ostream>
#include <sstream>

namespace fanowalls::numclass {

FanoContext::FanoContext(int degree) : degree_(degree) {
  if (degree < 1 || degree > 5) {
    throw DomainError("invalid-degree", "degree must lie in 1..5, got " + std::to_string(degree));
  }
  const Rational d(degree);
  // td(Y) = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24 with c1 = 2H, H.c2 = 12.
  todd_ = {d, d, frac(4 * degree + h_dot_c2, 12), frac(c1_coefficient * h_dot_c2, 24)};
}

bool ChernCharacter::is_zero() const {
  for (const auto& x : a) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
  for (std::size_t i = 0; i < 4; ++i) a[i] += o.a[i];
  return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
  for (std::size_t i = 0; i < 4; ++i) a[i] -= o.a[i];
  return *this;
}

ChernCharacter operator-(const ChernCharacter& x) {
  return {-x.a[0], -x.a[1], -x.a[2], -x.a[3]};
}

ChernCharacter operator*(const Rational& c, const ChernCharacter& x) {
  return {c * x.a[0], c * x.a[1], c * x.a[2], c * x.a[3]};
}

std::strong_ordering lex_compare(const ChernCharacter& x, const ChernCharacter& y) {
  for (std::size_t i = 0; i < 4; ++i) {
    const int c = cmp(x.a[i], y.a[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ChernCharacter& e) {
  return os << to_string(e);
}

std::string to_string(const ChernCharacter& e) {
  std::ostringstream os;
  os << "ch(" << fanowalls::to_string(e.a[0]) << ',' << fanowalls::to_string(e.a[1]) << ','
     << fanowalls::to_string(e.a[2]) << ',' << fanowalls::to_string(e.a[3]) << ')';
  return os.str();
}

ChernCharacter point_class(const FanoContext& ctx) {
  return {0, 0, 0, frac(1, ctx.degree())};
}

ChernCharacter line_bundle(int k) { return tensor_line(ChernCharacter::unit(), k); }

std::array<ChernCharacter, 4> numerical_lattice_basis(const FanoContext& ctx) {
  const Rational inv_d = frac(1, ctx.degree());
  return {ChernCharacter::unit(),
          ChernCharacter::unit() - line_bundle(-1),
          ChernCharacter{0, 0, inv_d, 0},
          point_class(ctx)};
}

ChernCharacter twist(const ChernCharacter& e, const Rational& beta) {
  const Rational b2 = beta * beta;
  const Rational b3 = b2 * beta;
  return {e[0],
          e[1] - beta * e[0],
          e[2] - beta * e[1] + b2 * e[0] / 2,
          e[3] - beta * e[2] + b2 * e[1] / 2 - b3 * e[0] / 6};
}

ChernCharacter tensor_line(const ChernCharacter& e, long k) { return twist(e, Rational(-k)); }

ChernCharacter dual(const ChernCharacter& e) { return {e[0], -e[1], e[2], -e[3]}; }

ChernCharacter product(const ChernCharacter& e, const ChernCharacter& f) {
  ChernCharacter out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; i + j < 4; ++j) out[i + j] += e[i] * f[j];
  }
  return out;
}

Rational chi(const FanoContext& ctx, const ChernCharacter& e) {
  const auto& t = ctx.todd_weights();
  return t[0] * e[3] + t[1] * e[2] + t[2] * e[1] + t[3] * e[0];
}

Rational euler_pairing(const FanoContext& ctx, const ChernCharacter& e, const ChernCharacter& f) {
  return chi(ctx, product(dual(e), f));
}

Rational HilbertPolynomial::operator()(const Rational& t) const {
  return ((p[3] * t + p[2]) * t + p[1]) * t + p[0];
}

int HilbertPolynomial::degree() const {
  for (int i = 3; i >= 0; --i) {
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) return i;
  }
  return -1;
}

std::string to_string(const HilbertPolynomial& poly) {
  std::ostringstream os;
  bool first = true;
  for (int i = 3; i >= 0; --i) {
    const Rational& c = poly.p[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << fanowalls::to_string(mag);
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

HilbertPolynomial hilbert_polynomial(const FanoContext& ctx, const ChernCharacter& e) {
  // chi(E . e^{tH}) expanded in t; the twisted components are
  //   a1 + t a0, a2 + t a1 + t^2 a0 / 2, a3 + t a2 + t^2 a1 / 2 + t^3 a0 / 6.
  const auto& w = ctx.todd_weights();
  HilbertPolynomial out;
  out.p[3] = w[0] * e[0] / 6;
  out.p[2] = w[0] * e[1] / 2 + w[1] * e[0] / 2;
  out.p[1] = w[0] * e[2] + w[1] * e[1] + w[2] * e[0];
  out.p[0] = chi(ctx, e);
  return out;
}

ChernCharacter class_from_hilbert(const FanoContext& ctx, const HilbertPolynomial& poly, int dim) {
  if (dim < 0 || dim > 3) {
    throw DomainError("invalid-dimension", "support dimension must lie in 0..3");
  }
  // The coefficient map of hilbert_polynomial is triangular with nonzero
  // diagonal, so every polynomial has exactly one preimage.
  const auto& w = ctx.todd_weights();
  ChernCharacter e;
  e[0] = 6 * poly.p[3] / w[0];
  e[1] = (poly.p[2] - w[1] * e[0] / 2) * 2 / w[0];
  e[2] = (poly.p[1] - w[1] * e[1] - w[2] * e[0]) / w[0];
  e[3] = (poly.p[0] - w[1] * e[2] - w[2] * e[1] - w[3] * e[0]) / w[0];
  for (int i = 0; i < 3 - dim; ++i) {
    if (sgn(e[static_cast<std::size_t>(i)]) != 0) {
      throw DomainError("inconsistent-dimension",
                        "Hilbert polynomial " + to_string(poly) +
                            " has no class supported in dimension " + std::to_string(dim));
    }
  }
  return e;
}

std::weak_ordering compare_reduced_hilbert(const FanoContext& ctx, const ChernCharacter& e,
                                           const ChernCharacter& f) {
  const HilbertPolynomial pe = hilbert_polynomial(ctx, e);
  const HilbertPolynomial pf = hilbert_polynomial(ctx, f);
  const int de = pe.degree();
  const int df = pf.degree();
  if (de < 0 || df < 0 || sgn(pe.p[static_cast<std::size_t>(de)]) <= 0 ||
      sgn(pf.p[static_cast<std::size_t>(df)]) <= 0) {
    throw DomainError("undefined-order", "reduced Hilbert polynomial needs a positive leading coefficient");
  }
  // For t >> 0 a higher-degree monic polynomial dominates.
  if (de != df) return de < df ? std::weak_ordering::less : std::weak_ordering::greater;
  const Rational le = pe.p[static_cast<std::size_t>(de)];
  const Rational lf = pf.p[static_cast<std::size_t>(df)];
  for (int i = de - 1; i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    const int c = cmp(Rational(pe.p[k] / le), Rational(pf.p[k] / lf));
    if (c < 0) return std::weak_ordering::less;
    if (c > 0) return std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

bool IntegralityGate::passes(const ChernCharacter& e) const {
  if (!enabled) return true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_integer(Rational(e[i] * denominators[i]))) return false;
  }
  return true;
}

IntegralityGate IntegralityGate::parse(const std::string& spec) {
  IntegralityGate gate;
  if (spec == "off") {
    gate.enabled = false;
    return gate;
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t end = (i < 3) ? spec.find(',', pos) : spec.size();
    if (end == std::string::npos) throw ParseError("expected four comma-separated denominators", spec.size());
    const Rational q = parse_rational(spec.substr(pos, end - pos));
    if (!is_integer(q) || sgn(q) <= 0) throw ParseError("denominators must be positive integers", pos);
    gate.denominators[i] = q.get_num();
    pos = end + 1;
  }
  return gate;
}

}  // namespace fanowalls::numclass
