#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfourier {

using Rational = mpq_class;

/// Parses "p/q" or "p" (decimal strings) into a canonical rational.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Stored as a polynomial in zeta_N over the power basis
/// 1, zeta, ..., zeta^{phi(N)-1}, reduced modulo the N-th cyclotomic
/// polynomial. After every operation the value is demoted to the minimal
/// conductor N' | N whose field contains it, so representations are canonical:
/// two values are equal iff conductor and coefficient vectors coincide.
/// All arithmetic is exact; floating point appears only in to_float().
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}  // zero
  Cyclotomic(long v) : coeffs_{Rational(v)} {}
  Cyclotomic(const Rational& q) : coeffs_{q} { coeffs_[0].canonicalize(); }

  /// zeta_N^k (k may be any integer, reduced mod N).
  static Cyclotomic root_of_unity(long n, long k);

  /// Builds a value from a sparse exponent -> coefficient map over the
  /// conductor-N power basis (exponents must lie in [0, phi(N))).
  static Cyclotomic from_coeff_map(long conductor, const std::map<long, Rational>& coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic conj() const;     // the automorphism zeta -> zeta^{-1}
  Cyclotomic inverse() const;  // throws DivisionByZero on zero

  /// If the value is a root of unity, returns (N, k) with value == zeta_N^k
  /// and N its exact multiplicative order; otherwise empty. Decided exactly:
  /// the norm must be 1 and iterated powers must reach 1 within 2*conductor.
  std::optional<std::pair<long, long>> as_root_of_unity() const;

  /// Numerical embedding zeta_N -> exp(2*pi*i/N). Advisory output only;
  /// never used in any equality decision.
  std::complex<double> to_float() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Total order on canonical forms (conductor, then coefficients); used only
  /// for deterministic sorting, it has no arithmetic meaning.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs);
  void normalize();

  long conductor_ = 1;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

inline bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  return Cyclotomic::compare(a, b) < 0;
}

long euler_phi(long n);

}  // namespace nfourier
