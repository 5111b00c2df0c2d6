#include "qym/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qym {

const std::array<const char*, kNumVars> kVarNames = {
    "s", "lambda_c", "eps", "mu", "alpha_h", "beta_h", "gamma_h"};

std::optional<Var> public_var_by_name(const std::string& name) {
  for (int v = 0; v < kNumVars; ++v) {
    if (name == kVarNames[v]) {
      if (v == kVarBetaH || v == kVarGammaH) return std::nullopt;
      return static_cast<Var>(v);
    }
  }
  return std::nullopt;
}

std::string rat_str(const mpq_class& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string GaussRat::str() const {
  if (im == 0) return rat_str(re);
  std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rat_str(im) + "*i";
  if (re == 0) return imag;
  std::string out = "(" + rat_str(re);
  out += (im > 0) ? "+" : "-";
  mpq_class a = abs(im);
  out += (a == 1) ? "i" : rat_str(a) + "*i";
  return out + ")";
}

int sign_with_sqrt(const mpq_class& u, const mpq_class& v, const mpq_class& q0) {
  if (q0 <= 0) throw EngineError("sign_with_sqrt: q0 must be positive");
  if (v == 0) return sgn(u);
  if (u == 0) return sgn(v);
  if (sgn(u) == sgn(v)) return sgn(u);
  // Opposite signs: compare |u|^2 against |v|^2 q0.
  mpq_class lhs = u * u, rhs = v * v * q0;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sgn(u) : sgn(v);
}

// ---------------------------------------------------------------------------
// Poly

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
  int da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  return a < b;  // lex tie-break
}

Poly Poly::constant(GaussRat c) {
  Poly p;
  if (!c.is_zero()) p.terms_[Mono{}] = std::move(c);
  return p;
}

Poly Poly::variable(Var v, int exp) {
  Poly p;
  Mono m{};
  m[v] = exp;
  p.terms_[m] = GaussRat(1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Mono{};
}

GaussRat Poly::constant_value() const {
  if (terms_.empty()) return GaussRat(0);
  if (!is_constant()) throw EngineError("Poly: not a constant");
  return terms_.begin()->second;
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

const Mono& Poly::leading_mono() const {
  if (terms_.empty()) throw EngineError("Poly: leading term of zero");
  return terms_.rbegin()->first;
}

const GaussRat& Poly::leading_coeff() const {
  if (terms_.empty()) throw EngineError("Poly: leading term of zero");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Mono& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const GaussRat& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Poly Poly::conj() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
  return r;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw EngineError("Poly: division by zero");
  Poly rem = a, quot;
  while (!rem.is_zero()) {
    const Mono& lm = rem.leading_mono();
    const Mono& lb = b.leading_mono();
    Mono m;
    for (int i = 0; i < kNumVars; ++i) {
      m[i] = lm[i] - lb[i];
      if (m[i] < 0) throw EngineError("Poly: inexact division");
    }
    GaussRat c = rem.leading_coeff() / b.leading_coeff();
    Poly t;
    t.terms_[m] = c;
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

namespace {

// Univariate view of p in variable v: exponent -> coefficient poly.
std::map<int, Poly> coeffs_in(const Poly& p, Var v) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    Mono rest = m;
    int e = rest[v];
    rest[v] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

Poly from_coeffs(const std::map<int, Poly>& cs, Var v) {
  Poly out;
  for (const auto& [e, cp] : cs) {
    Poly pow = Poly::variable(v, e);
    if (e == 0) pow = Poly::constant(GaussRat(1));
    out = out + cp * pow;
  }
  return out;
}

Poly content_in(const Poly& p, Var v) {
  Poly g;
  for (const auto& [e, cp] : coeffs_in(p, v)) g = Poly::gcd(g, cp);
  return g;
}

// Pseudo-remainder of a by b with respect to v.
Poly prem(Poly a, const Poly& b, Var v) {
  auto bc = coeffs_in(b, v);
  int db = bc.rbegin()->first;
  const Poly& lb = bc.rbegin()->second;
  while (true) {
    if (a.is_zero()) return a;
    auto ac = coeffs_in(a, v);
    int da = ac.rbegin()->first;
    if (da < db) return a;
    const Poly la = ac.rbegin()->second;
    Poly shift = Poly::variable(v, da - db);
    if (da == db) shift = Poly::constant(GaussRat(1));
    a = a * lb - b * shift * la;
  }
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.scaled(b.leading_coeff().inv());
  if (b.is_zero()) return a.scaled(a.leading_coeff().inv());
  if (a.is_constant() || b.is_constant()) return constant(GaussRat(1));

  // Main variable: lowest-index variable occurring in either.
  Var v = kVarS;
  for (int i = 0; i < kNumVars; ++i) {
    if (a.degree_in(static_cast<Var>(i)) > 0 || b.degree_in(static_cast<Var>(i)) > 0) {
      v = static_cast<Var>(i);
      break;
    }
  }
  if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
    // One side is free of the main variable: gcd divides its content.
    const Poly& flat = (a.degree_in(v) == 0) ? a : b;
    const Poly& other = (a.degree_in(v) == 0) ? b : a;
    return gcd(flat, content_in(other, v));
  }

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = div_exact(a, ca), pb = div_exact(b, cb);
  // Primitive Euclidean loop.
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) {
      pb = Poly();
    } else {
      pb = div_exact(r, content_in(r, v));
    }
  }
  Poly g = gcd(ca, cb) * pa;
  return g.scaled(g.leading_coeff().inv());
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Render grlex-descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = false;
    if (!cs.empty() && cs[0] == '-' && cs.find('+') == std::string::npos && cs[0] != '(') {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::vector<std::string> factors;
    bool unit_coeff = (cs == "1");
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      std::string f = kVarNames[i];
      if (m[i] != 1) f += "^" + std::to_string(m[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << cs;
    } else {
      if (!unit_coeff) os << cs << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ScalarExpr

ScalarExpr ScalarExpr::from_int(long n) {
  return ScalarExpr(Poly::constant(GaussRat(n)), Poly::constant(GaussRat(1)));
}

ScalarExpr ScalarExpr::from_rat(const mpq_class& v) {
  return ScalarExpr(Poly::constant(GaussRat(v)), Poly::constant(GaussRat(1)));
}

ScalarExpr ScalarExpr::imag_unit() {
  return ScalarExpr(Poly::constant(GaussRat::unit_i()), Poly::constant(GaussRat(1)));
}

ScalarExpr ScalarExpr::var(Var v) {
  return ScalarExpr(Poly::variable(v), Poly::constant(GaussRat(1)));
}

ScalarExpr ScalarExpr::s_pow(long k) {
  Poly one = Poly::constant(GaussRat(1));
  if (k >= 0) return ScalarExpr(Poly::variable(kVarS, static_cast<int>(k)), one);
  return ScalarExpr(one, Poly::variable(kVarS, static_cast<int>(-k)));
}

ScalarExpr ScalarExpr::q_pow(long k) { return s_pow(2 * k); }

ScalarExpr ScalarExpr::make(Poly num, Poly den) {
  if (den.is_zero()) throw EngineError("ScalarExpr: zero denominator");
  ScalarExpr r(std::move(num), std::move(den));
  r.reduce();
  return r;
}

bool ScalarExpr::is_one() const {
  return num_.is_constant() && den_.is_constant() &&
         num_.constant_value() == GaussRat(1) && den_.constant_value() == GaussRat(1);
}

GaussRat ScalarExpr::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

void ScalarExpr::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(GaussRat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  GaussRat lc = den_.leading_coeff();
  if (!(lc == GaussRat(1))) {
    GaussRat inv = lc.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ScalarExpr operator-(const ScalarExpr& a) {
  ScalarExpr r = a;
  r.num_ = -r.num_;
  return r;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero() || b.is_zero()) return ScalarExpr::zero();
  return ScalarExpr::make(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_zero()) throw EngineError("ScalarExpr: division by zero");
  if (a.is_zero()) return ScalarExpr::zero();
  return ScalarExpr::make(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool ScalarExpr::operator<(const ScalarExpr& o) const {
  auto key = [](const Poly& p) {
    std::vector<std::pair<Mono, std::pair<mpq_class, mpq_class>>> v;
    for (const auto& [m, c] : p.terms()) v.push_back({m, {c.re, c.im}});
    return v;
  };
  auto ka = std::make_pair(key(num_), key(den_));
  auto kb = std::make_pair(key(o.num_), key(o.den_));
  return ka < kb;
}

ScalarExpr ScalarExpr::conj() const {
  return make(num_.conj(), den_.conj());
}

namespace {

ScalarExpr eval_poly(const Poly& p, const std::array<ScalarExpr, kNumVars>& vals) {
  ScalarExpr acc = ScalarExpr::zero();
  for (const auto& [m, c] : p.terms()) {
    ScalarExpr t = ScalarExpr::make(Poly::constant(c), Poly::constant(GaussRat(1)));
    for (int i = 0; i < kNumVars; ++i) {
      for (int e = 0; e < m[i]; ++e) t = t * vals[i];
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace

ScalarExpr ScalarExpr::substitute(const std::map<Var, ScalarExpr>& bindings,
                                  bool physical_q) const {
  std::array<ScalarExpr, kNumVars> vals;
  for (int i = 0; i < kNumVars; ++i) vals[i] = var(static_cast<Var>(i));
  for (const auto& [v, value] : bindings) {
    if (v < 0 || v >= kNumVars) throw EngineError("substitute: unknown parameter");
    if (physical_q && v == kVarS) {
      if (!value.is_constant()) throw EngineError("substitute: s must be a constant in physical mode");
      GaussRat c = value.constant_value();
      if (!c.is_real() || c.re <= 0 || c.re * c.re >= 1)
        throw EngineError("substitute: physical mode requires 0 < s^2 < 1 with s > 0");
    }
    vals[v] = value;
  }
  ScalarExpr n = eval_poly(num_, vals);
  ScalarExpr d = eval_poly(den_, vals);
  if (d.is_zero()) throw EngineError("substitute: denominator vanishes under binding");
  return n / d;
}

namespace {

// Folds s^(2k+r) into q0^k * s^r termwise.
Poly fold_q(const Poly& p, const mpq_class& q0) {
  Poly out;
  mpq_class qp;
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    int e = mm[kVarS];
    mm[kVarS] = e % 2;
    qp = 1;
    for (int k = 0; k < e / 2; ++k) qp *= q0;
    out.add_term(mm, c * GaussRat(qp));
  }
  return out;
}

Poly negate_s(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    GaussRat cc = (m[kVarS] % 2 == 1) ? -c : c;
    out.add_term(m, cc);
  }
  return out;
}

}  // namespace

ScalarExpr ScalarExpr::bind_q(const mpq_class& q0) const {
  if (!(q0 > 0 && q0 < 1)) throw EngineError("bind_q: q must satisfy 0 < q < 1");
  Poly n = fold_q(num_, q0);
  Poly d = fold_q(den_, q0);
  if (d.degree_in(kVarS) > 0) {
    Poly dbar = negate_s(d);
    n = fold_q(n * dbar, q0);
    d = fold_q(d * dbar, q0);
  }
  if (d.is_zero()) throw EngineError("bind_q: denominator vanishes at q0");
  return make(std::move(n), std::move(d));
}

int ScalarExpr::sign_at_sqrt(const mpq_class& q0) const {
  ScalarExpr b = bind_q(q0);
  auto part = [](const Poly& p, int sdeg) -> GaussRat {
    GaussRat out(0);
    for (const auto& [m, c] : p.terms()) {
      Mono rest = m;
      int e = rest[kVarS];
      rest[kVarS] = 0;
      if (!(rest == Mono{})) throw EngineError("sign_at_sqrt: unbound variables remain");
      if (e == sdeg) out = out + c;
    }
    return out;
  };
  GaussRat u = part(b.num_, 0), v = part(b.num_, 1);
  GaussRat w = part(b.den_, 0), wx = part(b.den_, 1);
  if (!u.is_real() || !v.is_real() || !w.is_real() || !wx.is_real())
    throw EngineError("sign_at_sqrt: value is not real");
  int sn = sign_with_sqrt(u.re, v.re, q0);
  int sd = sign_with_sqrt(w.re, wx.re, q0);
  if (sd == 0) throw EngineError("sign_at_sqrt: denominator vanishes");
  return sn * sd;
}

std::string ScalarExpr::str() const {
  if (num_.is_zero()) return "0";
  if (den_.is_constant() && den_.constant_value() == GaussRat(1)) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  bool n_atomic = num_.terms().size() == 1;
  bool d_atomic = den_.terms().size() == 1;
  std::string out = n_atomic ? n : "(" + n + ")";
  out += "/";
  out += d_atomic ? d : "(" + d + ")";
  return out;
}

}  // namespace qym
