#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qym/rational.hpp"

namespace qym {

// Fixed ring variables. q = s^2 throughout; negative powers live in
// denominators. beta_h/gamma_h are internal symbols of the hodge module
// (general Hermitian-structure coefficients); they are not CLI-bindable.
enum Var : int {
  kVarS = 0,
  kVarLambdaC = 1,
  kVarEps = 2,
  kVarMu = 3,
  kVarAlphaH = 4,
  kVarBetaH = 5,
  kVarGammaH = 6,
};
inline constexpr int kNumVars = 7;
extern const std::array<const char*, kNumVars> kVarNames;

/// Returns the variable with the given public name, if CLI-bindable.
std::optional<Var> public_var_by_name(const std::string& name);

using Mono = std::array<int, kNumVars>;

/// Graded-lex order on monomials (total degree first, then lex).
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial over Q(i) in the fixed variable set.
class Poly {
 public:
  using TermMap = std::map<Mono, GaussRat, MonoOrder>;

  Poly() = default;
  static Poly constant(GaussRat c);
  static Poly variable(Var v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }

  GaussRat constant_value() const;  // requires is_constant()
  int degree_in(Var v) const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }

  const Mono& leading_mono() const;     // grlex-largest monomial
  const GaussRat& leading_coeff() const;

  void add_term(const Mono& m, const GaussRat& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GaussRat& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly conj() const;
  /// Exact division; throws if not divisible.
  static Poly div_exact(const Poly& a, const Poly& b);
  /// GCD over Q(i)[vars], monic-normalized; gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  TermMap terms_;
};

/// Exact rational function in the fixed variables over Q(i).
/// Invariants: num/den coprime, den monic (grlex leading coefficient 1),
/// zero is 0/1. Equality of representations decides equality of values.
class ScalarExpr {
 public:
  ScalarExpr() : num_(), den_(Poly::constant(GaussRat(1))) {}

  static ScalarExpr zero() { return ScalarExpr(); }
  static ScalarExpr one() { return from_int(1); }
  static ScalarExpr from_int(long n);
  static ScalarExpr from_rat(const mpq_class& v);
  static ScalarExpr frac(long p, long q) { return from_rat(mpq_class(p, q)); }
  static ScalarExpr imag_unit();
  static ScalarExpr var(Var v);
  /// s^k, any integer k (negative k goes to the denominator).
  static ScalarExpr s_pow(long k);
  /// q^k = s^(2k), any integer k.
  static ScalarExpr q_pow(long k);
  static ScalarExpr make(Poly num, Poly den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussRat constant_value() const;

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  /// Throws EngineError on division by zero.
  friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);
  friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }
  bool operator<(const ScalarExpr& o) const;  // arbitrary total order for map keys

  ScalarExpr inv() const { return one() / *this; }
  ScalarExpr conj() const;

  /// Substitutes bindings (variable -> value) simultaneously into the
  /// expression. In physical mode a binding of s must satisfy 0 < s^2 < 1.
  ScalarExpr substitute(const std::map<Var, ScalarExpr>& bindings, bool physical_q = false) const;

  /// Specializes q = s^2 to the exact rational q0 (0 < q0 < 1 enforced).
  /// The result has s-degree <= 1 in the numerator and an s-free
  /// denominator; s stands for the (possibly irrational) sqrt(q0).
  ScalarExpr bind_q(const mpq_class& q0) const;

  /// Exact sign of a constant-or-linear-in-s expression at s = sqrt(q0);
  /// requires every other variable already substituted away.
  int sign_at_sqrt(const mpq_class& q0) const;

  std::string str() const;

 private:
  ScalarExpr(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

}  // namespace qym
