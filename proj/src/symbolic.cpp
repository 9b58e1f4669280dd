#include "latsum/symbolic.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <vector>

#include "latsum/errors.hpp"

namespace latsum {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  if (re == 0) return im.get_str() + "i";
  std::string s = "(" + re.get_str();
  if (im > 0) s += "+";
  return s + im.get_str() + "i)";
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

Monomial Monomial::operator*(const Monomial& o) const {
  return {k + o.k, omk2 + o.omk2, K + o.K, Kp + o.Kp, E + o.E, pi + o.pi};
}

const char* family_name(Family f) { return f == Family::IX ? "ix" : "half"; }

SymExpr::SymExpr(const GaussianRational& c) {
  if (!c.is_zero()) terms_[Monomial{}] = c;
}

SymExpr SymExpr::monomial(const Monomial& m, const GaussianRational& c) {
  SymExpr e;
  e.add_term(m, c);
  return e;
}

void SymExpr::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymExpr SymExpr::operator-() const { return scaled(GaussianRational(-1)); }

SymExpr SymExpr::scaled(const GaussianRational& c) const {
  SymExpr out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

SymExpr SymExpr::real_part() const {
  SymExpr out;
  for (const auto& [m, c] : terms_) out.add_term(m, GaussianRational(c.re));
  return out;
}

SymExpr SymExpr::imag_part() const {
  SymExpr out;
  for (const auto& [m, c] : terms_) out.add_term(m, GaussianRational(c.im));
  return out;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  SymExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SymExpr pow(const SymExpr& e, int n) {
  if (n < 0) throw PreconditionError("SymExpr pow: negative exponent");
  SymExpr result(1);
  for (int i = 0; i < n; ++i) result = result * e;
  return result;
}

namespace {

void append_factor(std::string& s, const char* name, int e) {
  if (e == 0) return;
  s += "*";
  s += name;
  if (e != 1) s += "^" + std::to_string(e);
}

}  // namespace

std::string SymExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    append_factor(out, "k", m.k);
    append_factor(out, "(1-k^2)", m.omk2);
    append_factor(out, "K", m.K);
    append_factor(out, "Kp", m.Kp);
    append_factor(out, "E", m.E);
    append_factor(out, "pi", m.pi);
  }
  return out;
}

namespace {

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw PreconditionError("SymExpr parse: empty number");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw PreconditionError("SymExpr parse: bad number " + s);
  q.canonicalize();
  return q;
}

GaussianRational parse_coeff(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    if (s.empty() || s.back() != 'i') throw PreconditionError("SymExpr parse: bad complex coefficient");
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] == '+' || s[i] == '-') split = i;
    if (split == std::string::npos) throw PreconditionError("SymExpr parse: bad complex coefficient");
    std::string im = s.substr(split);
    if (im[0] == '+') im.erase(0, 1);
    return {parse_rational(s.substr(0, split)), parse_rational(im)};
  }
  if (!s.empty() && s.back() == 'i') {
    s.pop_back();
    return {0, parse_rational(s)};
  }
  return {parse_rational(s), 0};
}

int parse_exponent(const std::string& f, size_t at) {
  if (at >= f.size()) return 1;
  if (f[at] != '^') throw PreconditionError("SymExpr parse: bad factor " + f);
  std::string n = f.substr(at + 1);
  size_t used = 0;
  int v = std::stoi(n, &used);
  if (used != n.size()) throw PreconditionError("SymExpr parse: bad exponent " + f);
  return v;
}

}  // namespace

SymExpr SymExpr::parse(const std::string& text) {
  SymExpr out;
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(0, 1);
  if (t == "0") return out;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t next = t.find(" + ", pos);
    std::string term = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    // split factors on '*' outside parentheses
    std::vector<std::string> factors;
    int depth = 0;
    std::string cur;
    for (char ch : term) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == '*' && depth == 0) {
        factors.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    factors.push_back(cur);
    GaussianRational c = parse_coeff(factors[0]);
    Monomial m;
    for (size_t i = 1; i < factors.size(); ++i) {
      const std::string& f = factors[i];
      if (f.rfind("(1-k^2)", 0) == 0)
        m.omk2 += parse_exponent(f, 7);
      else if (f.rfind("Kp", 0) == 0)
        m.Kp += parse_exponent(f, 2);
      else if (f.rfind("pi", 0) == 0)
        m.pi += parse_exponent(f, 2);
      else if (f.rfind("K", 0) == 0)
        m.K += parse_exponent(f, 1);
      else if (f.rfind("E", 0) == 0)
        m.E += parse_exponent(f, 1);
      else if (f.rfind("k", 0) == 0)
        m.k += parse_exponent(f, 1);
      else
        throw PreconditionError("SymExpr parse: unknown factor " + f);
    }
    out.add_term(m, c);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

namespace {

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Laurent polynomial in k
using KPoly = std::map<int, GaussianRational>;

void kpoly_add(KPoly& p, int e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto& slot = p[e];
  slot += c;
  if (slot.is_zero()) p.erase(e);
}

// exact division by (1-k^2)^n
KPoly divide_omk2(KPoly p, int n) {
  for (int step = 0; step < n; ++step) {
    KPoly q;
    while (!p.empty()) {
      auto top = std::prev(p.end());
      int e = top->first;
      if (e < 2 + (p.begin()->first)) {
        throw InternalConsistencyError("(1-k^2) denominator does not cancel");
      }
      GaussianRational c = -top->second;  // q term c k^(e-2)
      kpoly_add(q, e - 2, c);
      // subtract (1-k^2) c k^(e-2)
      kpoly_add(p, e - 2, -c);
      kpoly_add(p, e, c);
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

SymExpr canonicalize(const SymExpr& e) {
  int bmin = 0;
  for (const auto& [m, c] : e.terms()) bmin = std::min(bmin, m.omk2);
  // group by the non-k part
  std::map<Monomial, KPoly> groups;
  for (const auto& [m, c] : e.terms()) {
    Monomial rest = m;
    rest.k = 0;
    rest.omk2 = 0;
    KPoly& poly = groups[rest];
    int b = m.omk2 - bmin;
    for (int j = 0; j <= b; ++j) {
      mpz_class bc = binom(b, j);
      GaussianRational cj = c * GaussianRational(mpq_class(j % 2 ? -bc : bc));
      kpoly_add(poly, m.k + 2 * j, cj);
    }
  }
  SymExpr out;
  for (auto& [rest, poly] : groups) {
    KPoly q = bmin < 0 ? divide_omk2(poly, -bmin) : poly;
    for (const auto& [ke, c] : q) {
      Monomial m = rest;
      m.k = ke;
      out.add_term(m, c);
    }
  }
  return out;
}

SymExpr differentiate_k(const SymExpr& e) {
  SymExpr out;
  for (const auto& [m, c] : e.terms()) {
    if (m.Kp != 0) throw PreconditionError("differentiate_k: K' is not differentiated; substitute tau last");
    if (m.k != 0) {
      Monomial t = m;
      t.k -= 1;
      out.add_term(t, c * GaussianRational(m.k));
    }
    if (m.omk2 != 0) {
      Monomial t = m;
      t.k += 1;
      t.omk2 -= 1;
      out.add_term(t, c * GaussianRational(-2L * m.omk2));
    }
    if (m.K != 0) {
      Monomial t1 = m;
      t1.k -= 1;
      t1.omk2 -= 1;
      t1.K -= 1;
      t1.E += 1;
      out.add_term(t1, c * GaussianRational(m.K));
      Monomial t2 = m;
      t2.k -= 1;
      out.add_term(t2, c * GaussianRational(-m.K));
    }
    if (m.E != 0) {
      Monomial t1 = m;
      t1.k -= 1;
      out.add_term(t1, c * GaussianRational(m.E));
      Monomial t2 = m;
      t2.k -= 1;
      t2.E -= 1;
      t2.K += 1;
      out.add_term(t2, c * GaussianRational(-m.E));
    }
  }
  return out;
}

namespace {

void assert_polynomial(const SymExpr& e, const char* where) {
  for (const auto& [m, c] : e.terms()) {
    if (m.k < 0 || m.omk2 != 0 || m.K < 0 || m.Kp < 0 || m.E < 0)
      throw InternalConsistencyError(std::string(where) + ": negative exponent survived cancellation");
  }
}

}  // namespace

SymExpr apply_derivative_operator(const SymExpr& e, Family fam) {
  for (const auto& [m, c] : e.terms())
    if (m.k < 0) throw PreconditionError("apply_derivative_operator: input has negative k exponent");
  GaussianRational c(0, mpq_class(fam == Family::IX ? 2 : 4));
  SymExpr op = SymExpr::monomial({1, 1, 2, 0, 0, -1}, c);
  SymExpr out = canonicalize(op * differentiate_k(e));
  assert_polynomial(out, "apply_derivative_operator");
  return out;
}

namespace {

SymExpr kpoly(std::initializer_list<std::pair<int, long>> coeffs) {
  SymExpr out;
  for (auto [e, c] : coeffs) out.add_term({e, 0, 0, 0, 0, 0}, GaussianRational(c));
  return out;
}

SymExpr rat(long n, long d) { return SymExpr(GaussianRational(mpq_class(n, d))); }

std::shared_mutex g_cache_mutex;
std::map<std::tuple<int, int, int>, SymExpr> g_cache;  // (s, r, fam)

bool cache_get(int s, int r, Family fam, SymExpr& out) {
  std::shared_lock lock(g_cache_mutex);
  auto it = g_cache.find({s, r, static_cast<int>(fam)});
  if (it == g_cache.end()) return false;
  out = it->second;
  return true;
}

void cache_put(int s, int r, Family fam, const SymExpr& e) {
  std::unique_lock lock(g_cache_mutex);
  g_cache.emplace(std::make_tuple(s, r, static_cast<int>(fam)), e);
}

void check_degrees(const SymExpr& e, int s, int r) {
  int total = r == 2 ? 2 * s + 2 : r + 2 * s;
  int min_k = r == 2 ? s + 1 : s + r;
  for (const auto& [m, c] : e.terms()) {
    if (m.K + m.E != total || m.K < min_k || m.K > total)
      throw InternalConsistencyError("degree bound violated for V_" + std::to_string(r) + "^(" +
                                     std::to_string(s) + ")");
  }
}

}  // namespace

SymExpr v_base(int r, Family fam) {
  SymExpr K = SymExpr::K();
  bool ix = fam == Family::IX;
  switch (r) {
    case 2:
      if (ix) return rat(4, 3) * kpoly({{2, 1}, {0, -2}}) * pow(K, 2) + SymExpr(4) * K * SymExpr::E();
      return rat(4, 3) * kpoly({{2, 4}, {0, -5}}) * pow(K, 2) + SymExpr(8) * K * SymExpr::E();
    case 4:
      if (ix) return rat(16, 45) * kpoly({{4, 1}, {2, -1}, {0, 1}}) * pow(K, 4);
      return rat(16, 45) * kpoly({{4, 16}, {2, -16}, {0, 1}}) * pow(K, 4);
    case 6:
      if (ix)
        return rat(64, 945) * kpoly({{2, 1}, {0, -2}}) * kpoly({{2, 2}, {0, -1}}) * kpoly({{2, 1}, {0, 1}}) *
               pow(K, 6);
      return rat(128, 945) * kpoly({{2, 2}, {0, -1}}) * kpoly({{4, 32}, {2, -32}, {0, -1}}) * pow(K, 6);
    default:
      throw PreconditionError("v_base: r must be 2, 4 or 6");
  }
}

SymExpr v_modular(int r, Family fam) {
  if (r < 2) throw PreconditionError("v_modular: r >= 2");
  if (r % 2) return SymExpr();
  if (r <= 6) return v_base(r, fam);
  return v_classic(r / 2, fam);
}

SymExpr v_classic(int l, Family fam) {
  if (l < 4) throw PreconditionError("v_classic: l >= 4");
  SymExpr cached;
  if (cache_get(0, 2 * l, fam, cached)) return cached;
  SymExpr acc;
  for (int j = 2; j <= l - 2; ++j) {
    mpq_class c(3L * (2 * j - 1) * (2 * l - 2 * j - 1), static_cast<long>(2 * l - 1) * (2 * l + 1) * (l - 3));
    c.canonicalize();
    acc += (v_modular(2 * j, fam) * v_modular(2 * l - 2 * j, fam)).scaled(GaussianRational(c));
  }
  cache_put(0, 2 * l, fam, acc);
  return acc;
}

SymExpr v_derived(int s, int r, Family fam) {
  if (s < 0) throw PreconditionError("v_derived: s >= 0");
  if (r < 2 || r % 2) throw PreconditionError("v_derived: r must be even and >= 2");
  if (s == 0) return v_modular(r, fam);
  SymExpr cached;
  if (cache_get(s, r, fam, cached)) return cached;
  SymExpr out = apply_derivative_operator(v_derived(s - 1, r, fam), fam);
  check_degrees(out, s, r);
  cache_put(s, r, fam, out);
  return out;
}

SymExpr lattice_series(int t, int r, Family fam) {
  if (t < 0) throw PreconditionError("lattice_series: t >= 0");
  mpz_class fact = 1;
  for (int i = 2; i <= t; ++i) fact *= i;
  mpq_class c(1, mpz_class(fact * binom(t + r - 1, r - 1)));
  c.canonicalize();
  if (t % 2) c = -c;
  return v_derived(t, r, fam).scaled(GaussianRational(c));
}

SymExpr assemble_sum(const SumIndex& idx, Family fam) {
  const int p = idx.p, r = idx.q - idx.p;
  if (p < 0) throw PreconditionError("assemble_sum: p >= 0");
  if (r < 2) throw PreconditionError("assemble_sum: q - p >= 2");
  if (r % 2) return SymExpr();
  // x = K'/K
  SymExpr x = SymExpr::monomial({0, 0, -1, 1, 0, 0});
  SymExpr tau, im_tau;
  if (fam == Family::IX) {
    tau = x.scaled(GaussianRational(0, 1));
    im_tau = x;
  } else {
    tau = SymExpr(GaussianRational(mpq_class(1, 2))) + x.scaled(GaussianRational(0, mpq_class(1, 2)));
    im_tau = x.scaled(GaussianRational(mpq_class(1, 2)));
  }
  std::vector<SymExpr> tau_pow{SymExpr(1)};
  for (int i = 1; i <= p; ++i) tau_pow.push_back(tau_pow.back() * tau);

  SymExpr inner = v_modular(r, fam);
  for (int t = 1; t <= p; ++t) {
    SymExpr a;
    for (int s = 1; s <= t; ++s) {
      mpz_class c = binom(p, s) * binom(p - s, t - s);
      if ((t - s) % 2) c = -c;
      a += (tau_pow[t - s] * tau_pow[s].imag_part()).scaled(GaussianRational(mpq_class(c)));
    }
    inner += (a * lattice_series(t, r, fam)).scaled(GaussianRational(0, -2));
  }
  SymExpr out = canonicalize(pow(im_tau, r / 2) * inner);
  if (!out.imag_part().is_zero()) throw InternalConsistencyError("assemble_sum: imaginary residue");
  assert_polynomial(out, "assemble_sum");
  return out;
}

SymValues sym_values(const EllipticModulus& m) {
  EllipticKE ke = ellip_ke(m);
  return {m.k(), ke.K, ellip_k(m.complement()), ke.E};
}

Complex eval_sym(const SymExpr& e, const SymValues& v) {
  Real pi = Real::pi();
  Real omk2 = (Real(1) - v.k) * (Real(1) + v.k);
  Complex acc;
  for (const auto& [m, c] : e.terms()) {
    Real f(1);
    if (m.k) f *= pow(v.k, static_cast<long>(m.k));
    if (m.omk2) f *= pow(omk2, static_cast<long>(m.omk2));
    if (m.K) f *= pow(v.K, static_cast<long>(m.K));
    if (m.Kp) f *= pow(v.Kp, static_cast<long>(m.Kp));
    if (m.E) f *= pow(v.E, static_cast<long>(m.E));
    if (m.pi) f *= pow(pi, static_cast<long>(m.pi));
    acc += Complex(Real(c.re) * f, Real(c.im) * f);
  }
  return acc;
}

Complex eval_sym(const SymExpr& e, const EllipticModulus& m) { return eval_sym(e, sym_values(m)); }

Complex eval_sym(const SymExpr& e, const EllipticModulus& m, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return eval_sym(e, m);
}

bool k_degree_range(const SymExpr& e, int& lo, int& hi) {
  if (e.is_zero()) return false;
  lo = INT32_MAX;
  hi = INT32_MIN;
  for (const auto& [m, c] : e.terms()) {
    lo = std::min(lo, m.K);
    hi = std::max(hi, m.K);
  }
  return true;
}

SumValue sum_symbolic(const SumIndex& idx, const LatticeSpec& lat) {
  if (lat.family == LatticeFamily::GENERAL || !lat.x)
    throw PreconditionError("sum_symbolic: needs a rectangular or rhombic lattice");
  Family fam = lat.family == LatticeFamily::RECTANGULAR ? Family::IX : Family::HALF;
  SymExpr form = assemble_sum(idx, fam);
  SumValue v;
  v.method = Method::SYMBOLIC_ELLIPTIC;
  {
    PrecisionGuard g(working_bits() + 32);
    v.value = Complex(eval_sym(form, inverse_modulus_ratio(*lat.x)).re);
  }
  v.precision_estimate = Real::ldexp(abs(v.value) + Real(1), 8 - working_bits());
  return v;
}

}  // namespace latsum
