#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qym {

/// Error raised by any engine operation with an unsatisfiable precondition
/// (division by zero, unknown generator, presentation mismatch, ...).
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact element of Q(i): re + im*i with i^2 = -1.
struct GaussRat {
  mpq_class re;
  mpq_class im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long n) : re(n), im(0) {}
  GaussRat(mpq_class r) : re(std::move(r)), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_i() { return GaussRat(mpq_class(0), mpq_class(1)); }
  static GaussRat frac(long p, long q) {
    if (q == 0) throw EngineError("GaussRat: zero denominator");
    mpq_class v(p, q);
    v.canonicalize();
    return GaussRat(v);
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, mpq_class(-im)); }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw EngineError("GaussRat: division by zero");
    mpq_class n = b.re * b.re + b.im * b.im;
    return GaussRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  GaussRat inv() const { return GaussRat(1) / *this; }

  std::string str() const;
};

std::string rat_str(const mpq_class& v);

/// Exact sign of u + v*sqrt(q0) for rationals u, v and rational q0 > 0.
int sign_with_sqrt(const mpq_class& u, const mpq_class& v, const mpq_class& q0);

}  // namespace qym
