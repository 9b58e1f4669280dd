#include "latsum/singular.hpp"

#include "latsum/errors.hpp"

namespace latsum {

namespace {

struct Forms {
  const char* r;
  const char* k;
  const char* kp;
  const char* K;
  const char* alpha;
};

const Forms kForms[] = {
    {"1", "1/sqrt(2)", "1/sqrt(2)", "G(1/4)^2/(4*sqrt(pi))", "1/2"},
    {"2", "sqrt(2)-1", "sqrt(2*sqrt(2)-2)", "(sqrt(2)+1)^(1/2)*G(1/8)*G(3/8)/(2^(13/4)*sqrt(pi))", "sqrt(2)-1"},
    {"3", "sqrt(2)*(sqrt(3)-1)/4", "sqrt(2)*(sqrt(3)+1)/4", "3^(1/4)*G(1/3)^3/(2^(7/3)*pi)", "(sqrt(3)-1)/2"},
    {"4", "3-2*sqrt(2)", "2^(1/4)*(2*sqrt(2)-2)", "(sqrt(2)+1)*G(1/4)^2/(2^(7/2)*sqrt(pi))", "2*(sqrt(2)-1)^2"},
    {"1/2", "sqrt(2*sqrt(2)-2)", "sqrt(2)-1", "sqrt(2)*(sqrt(2)+1)^(1/2)*G(1/8)*G(3/8)/(2^(13/4)*sqrt(pi))", "1/2"},
    {"1/3", "sqrt(2)*(sqrt(3)+1)/4", "sqrt(2)*(sqrt(3)-1)/4", "sqrt(3)*3^(1/4)*G(1/3)^3/(2^(7/3)*pi)",
     "(sqrt(3)+1)/6"},
    {"1/4", "2^(1/4)*(2*sqrt(2)-2)", "3-2*sqrt(2)", "2*(sqrt(2)+1)*G(1/4)^2/(2^(7/2)*sqrt(pi))", "sqrt(2)-1"},
};

const Forms& forms_for(const mpq_class& r) {
  for (const auto& f : kForms)
    if (mpq_class(f.r, 10) == r) return f;
  throw PreconditionError("unsupported singular value r = " + r.get_str());
}

}  // namespace

const std::vector<mpq_class>& supported_singular_r() {
  static const std::vector<mpq_class> rs = [] {
    std::vector<mpq_class> v;
    for (const auto& f : kForms) v.emplace_back(f.r, 10);
    return v;
  }();
  return rs;
}

SingularModulusRecord singular_modulus(const mpq_class& r) {
  const Forms& f = forms_for(r);
  SingularModulusRecord rec{r,
                            ClosedForm::parse(f.k),
                            ClosedForm::parse(f.kp),
                            ClosedForm::parse(f.K),
                            ClosedForm::parse(f.alpha),
                            Real(),
                            Real(),
                            Real(),
                            Real(),
                            Real(),
                            Real(),
                            Real()};
  rec.k = rec.k_form.eval();
  rec.k_prime = rec.kp_form.eval();
  rec.K = rec.K_form.eval();
  Real sr = sqrt(Real(r));
  rec.K_prime = sr * rec.K;
  rec.alpha = rec.alpha_form.eval();
  Real pi = Real::pi();
  rec.E = rec.K - rec.alpha / sr * rec.K + pi / (Real(4) * sr * rec.K);
  rec.E_prime = rec.alpha * rec.K + pi / (Real(4) * rec.K);
  return rec;
}

SingularModulusRecord singular_modulus(const mpq_class& r, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return singular_modulus(r);
}

ExactSum exact_sum(const SumIndex& idx, Family fam, const mpq_class& r) {
  SymExpr form = assemble_sum(idx, fam);
  Real value;
  {
    PrecisionGuard guard(working_bits() + 64);
    SingularModulusRecord rec = singular_modulus(r);
    value = eval_sym(form, SymValues{rec.k, rec.K, rec.K_prime, rec.E}).re;
  }
  const Forms& f = forms_for(r);
  std::string prov = std::string("S_") + std::to_string(idx.q) + "^(" + std::to_string(idx.p) + ")(" +
                     (fam == Family::IX ? "i*sqrt(r)" : "(1+i*sqrt(r))/2") + "), r=" + f.r + "; k=" + f.k +
                     "; K=" + f.K + "; K'=sqrt(r)*K; alpha=" + f.alpha +
                     "; E=K-alpha*K/sqrt(r)+pi/(4*sqrt(r)*K); terms=" + std::to_string(form.size());
  return {value, prov};
}

ExactSum exact_sum(const SumIndex& idx, Family fam, const mpq_class& r, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return exact_sum(idx, fam, r);
}

}  // namespace latsum
