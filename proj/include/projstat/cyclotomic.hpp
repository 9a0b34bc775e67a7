#pragma once

// Exact arithmetic in Z[zeta_r], stored in the power basis
// 1, zeta, ..., zeta^{phi(r)-1} modulo the r-th cyclotomic polynomial.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "projstat/bigint.hpp"
#include "projstat/errors.hpp"

namespace projstat {

/// Integer polynomial, index i holds the coefficient of x^i.
using IntPoly = std::vector<BigInt>;

/// Phi_r, obtained by dividing x^r - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomic_poly(int r);

int euler_phi(int r);

/// Reduction data for one conductor: the coordinates of zeta^e, e in [0, r).
struct CyclotomicBasis {
  int conductor = 1;
  int degree = 1;
  std::vector<std::vector<BigInt>> zeta_powers;
};

/// Cached, thread-safe.
std::shared_ptr<const CyclotomicBasis> cyclotomic_basis(int r);

class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(int r, const BigInt& value = 0);

  /// zeta_r^e for any integer e.
  static CycInt zeta_pow(int r, long long e);

  /// sum_e counts[e] * zeta_r^e, counts indexed by e in [0, r).
  static CycInt from_exponent_counts(int r, std::span<const BigInt> counts);

  int conductor() const { return basis_->conductor; }
  std::span<const BigInt> coords() const { return coords_; }
  bool is_zero() const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);
  CycInt& operator*=(const BigInt& scalar);

  /// Divides every coordinate by d; throws RangeError if d does not divide.
  CycInt& divide_exact(const BigInt& d);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const BigInt& b) { return a *= b; }
  friend CycInt operator-(CycInt a) {
    for (BigInt& c : a.coords_) c = -c;
    return a;
  }
  friend bool operator==(const CycInt& a, const CycInt& b);

  /// "1 - 2*z + z^2 @6"
  std::string to_string() const;

 private:
  void require_same_conductor(const CycInt& other) const;

  std::shared_ptr<const CyclotomicBasis> basis_;
  std::vector<BigInt> coords_;
};

inline CycInt zeta_pow(int r, long long e) { return CycInt::zeta_pow(r, e); }

}  // namespace projstat
