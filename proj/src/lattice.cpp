#include "latsum/lattice.hpp"

#include "latsum/closed_form.hpp"
#include "latsum/errors.hpp"

namespace latsum {

namespace {

int detect_order(Complex tau) {
  Real tol = Real::ldexp(Real(1), -working_bits() / 2);
  Real half = Real(1) / Real(2);
  // reduce to the fundamental domain
  for (int it = 0; it < 200; ++it) {
    tau.re -= floor(tau.re + half);
    if (!(tau.re * tau.re + tau.im * tau.im < Real(1) - tol)) break;
    tau = Complex(-1) / tau;
  }
  if (abs(tau - Complex::i()) <= tol) return 4;
  Complex hex(half, sqrt(Real(3)) / Real(2));
  if (abs(tau - hex) <= tol || abs(tau - Complex(-hex.re, hex.im)) <= tol) return 6;
  return 2;
}

LatticeSpec finish(Complex tau, LatticeFamily fam, std::optional<Real> x, std::string name) {
  if (!(tau.im > Real(0))) throw DomainError("lattice requires Im(tau) > 0");
  LatticeSpec s;
  s.omega1 = Real(1) / sqrt(tau.im);
  s.tau = std::move(tau);
  s.family = fam;
  s.symmetry_order = detect_order(s.tau);
  s.x = std::move(x);
  s.name = std::move(name);
  return s;
}

}  // namespace

LatticeSpec make_square() { return finish(Complex::i(), LatticeFamily::RECTANGULAR, Real(1), "square"); }

LatticeSpec make_hexagonal() {
  Real s3 = sqrt(Real(3));
  return finish(Complex(Real(1) / Real(2), s3 / Real(2)), LatticeFamily::RHOMBIC, s3, "hex");
}

LatticeSpec make_rect(const Real& x) {
  if (!(x > Real(0))) throw DomainError("rect lattice requires x > 0");
  return finish(Complex(Real(0), x), LatticeFamily::RECTANGULAR, x, "rect:" + x.to_string(20));
}

LatticeSpec make_rhombic(const Real& x) {
  if (!(x > Real(0))) throw DomainError("rhombic lattice requires x > 0");
  return finish(Complex(Real(1) / Real(2), x / Real(2)), LatticeFamily::RHOMBIC, x,
                "rhombic:" + x.to_string(20));
}

LatticeSpec make_general(const Complex& tau) {
  return finish(tau, LatticeFamily::GENERAL, std::nullopt,
                "tau:" + tau.re.to_string(20) + "," + tau.im.to_string(20));
}

LatticeSpec make_lattice(LatticeKind kind, const Real& x, const Complex& tau) {
  switch (kind) {
    case LatticeKind::SQUARE:
      return make_square();
    case LatticeKind::HEXAGONAL:
      return make_hexagonal();
    case LatticeKind::RECT:
      return make_rect(x);
    case LatticeKind::RHOMBIC:
      return make_rhombic(x);
    case LatticeKind::GENERAL:
      return make_general(tau);
  }
  throw PreconditionError("unknown lattice kind");
}

LatticeSpec parse_lattice(const std::string& text) {
  if (text == "square") return make_square();
  if (text == "hex" || text == "hexagonal") return make_hexagonal();
  auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("unknown lattice: " + text);
  std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  if (head == "rect") return make_rect(ClosedForm::parse(rest).eval());
  if (head == "rhombic") return make_rhombic(ClosedForm::parse(rest).eval());
  if (head == "tau") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw PreconditionError("tau:<re>,<im> expected");
    Real re = ClosedForm::parse(rest.substr(0, comma)).eval();
    Real im = ClosedForm::parse(rest.substr(comma + 1)).eval();
    return make_general(Complex(re, im));
  }
  throw PreconditionError("unknown lattice: " + text);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::EISENSTEIN_ORACLE:
      return "oracle";
    case Method::TRIG_SERIES:
      return "fast";
    case Method::RECURRENCE:
      return "recurrence";
    case Method::SYMBOLIC_ELLIPTIC:
      return "symbolic";
  }
  return "?";
}

bool sum_vanishes_by_symmetry(int p, int q, int order) {
  int s = (p + q) % order;
  if (s < 0) s += order;
  return s != 0;
}

bool symmetry_vanishes(const SumIndex& idx, const LatticeSpec& lat) {
  if (idx.q - idx.p < 3) throw PreconditionError("symmetry_vanishes requires q - p >= 3");
  return sum_vanishes_by_symmetry(idx.p, idx.q, lat.symmetry_order);
}

}  // namespace latsum
