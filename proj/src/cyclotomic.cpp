#include "projstat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "projstat/group.hpp"

namespace projstat {

namespace {

void trim(IntPoly& poly) {
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) return IntPoly{0};
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt lead = num[i];
    quot[i - dd] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
  }
  trim(num);
  if (!(num.size() == 1 && num[0] == 0)) throw RangeError("cyclotomic division left a remainder");
  return quot;
}

// x^e reduced modulo the monic polynomial phi.
std::vector<BigInt> reduce_power(int e, const IntPoly& phi) {
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<BigInt> cur(deg, 0);
  if (deg == 0) return cur;
  cur[0] = 1;
  for (int step = 0; step < e; ++step) {
    // multiply by x
    BigInt carry = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < deg; ++i) cur[i] -= carry * phi[i];
    }
  }
  return cur;
}

}  // namespace

IntPoly cyclotomic_poly(int r) {
  if (r < 1) throw RangeError("cyclotomic conductor must be positive");
  IntPoly num(r + 1, 0);
  num[0] = -1;
  num[r] = 1;
  IntPoly den{1};
  for (int d = 1; d < r; ++d) {
    if (r % d == 0) den = multiply(den, cyclotomic_poly(d));
  }
  return divide_monic(std::move(num), den);
}

int euler_phi(int r) {
  int count = 0;
  for (int k = 1; k <= r; ++k) {
    int a = k;
    int b = r;
    while (b != 0) {
      const int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

std::shared_ptr<const CyclotomicBasis> cyclotomic_basis(int r) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicBasis>> cache;
  if (r < 1) throw RangeError("cyclotomic conductor must be positive");
  std::lock_guard lock(mutex);
  if (auto it = cache.find(r); it != cache.end()) return it->second;
  auto basis = std::make_shared<CyclotomicBasis>();
  const IntPoly phi = cyclotomic_poly(r);
  basis->conductor = r;
  basis->degree = static_cast<int>(phi.size()) - 1;
  basis->zeta_powers.reserve(r);
  for (int e = 0; e < r; ++e) basis->zeta_powers.push_back(reduce_power(e, phi));
  cache.emplace(r, basis);
  return basis;
}

// ---------------------------------------------------------------------------

CycInt::CycInt(int r, const BigInt& value) : basis_(cyclotomic_basis(r)) {
  coords_.assign(basis_->degree, 0);
  coords_[0] = value;
}

CycInt CycInt::zeta_pow(int r, long long e) {
  CycInt out(r);
  out.coords_ = out.basis_->zeta_powers[residue(e, r)];
  return out;
}

CycInt CycInt::from_exponent_counts(int r, std::span<const BigInt> counts) {
  CycInt out(r);
  const auto& table = out.basis_->zeta_powers;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    const auto& z = table[residue(static_cast<long long>(e), r)];
    for (int i = 0; i < out.basis_->degree; ++i) {
      if (z[i] != 0) out.coords_[i] += counts[e] * z[i];
    }
  }
  return out;
}

bool CycInt::is_zero() const {
  for (const BigInt& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

void CycInt::require_same_conductor(const CycInt& other) const {
  if (conductor() != other.conductor()) {
    throw ConductorMismatchError("cyclotomic conductors " + std::to_string(conductor()) +
                                 " and " + std::to_string(other.conductor()) + " differ");
  }
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same_conductor(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same_conductor(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) {
  require_same_conductor(other);
  const int deg = basis_->degree;
  if (deg == 1) {
    coords_[0] *= other.coords_[0];
    return *this;
  }
  std::vector<BigInt> out(deg, 0);
  const int r = conductor();
  for (int i = 0; i < deg; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (other.coords_[j] == 0) continue;
      const BigInt prod = coords_[i] * other.coords_[j];
      const auto& z = basis_->zeta_powers[(i + j) % r];
      for (int t = 0; t < deg; ++t) {
        if (z[t] != 0) out[t] += prod * z[t];
      }
    }
  }
  coords_ = std::move(out);
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& scalar) {
  for (BigInt& c : coords_) c *= scalar;
  return *this;
}

CycInt& CycInt::divide_exact(const BigInt& d) {
  if (d == 0) throw RangeError("division by zero");
  for (BigInt& c : coords_) {
    if (c % d != 0) throw RangeError("cyclotomic integer is not divisible by " + d.str());
    c /= d;
  }
  return *this;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.conductor() == b.conductor() && a.coords_ == b.coords_;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const BigInt& c = coords_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'z';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  out << " @" << conductor();
  return out.str();
}

}  // namespace projstat
