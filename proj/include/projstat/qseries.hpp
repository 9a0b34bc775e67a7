#pragma once

// Sparse truncated multivariate power series over BigInt or CycInt.
//
// A Series carries its variable names, a per-variable exponent cap and a
// valid region (per-variable bound below which every coefficient is exact).
// All exponents are nonnegative, so truncating a product to the caps never
// changes coefficients inside the caps: the valid region of a sum or product
// is the componentwise minimum of the operands' regions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "projstat/bigint.hpp"
#include "projstat/cyclotomic.hpp"
#include "projstat/errors.hpp"

namespace projstat {

inline constexpr int kMaxVars = 8;

/// Exponent vector; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: total degree first, then exponent tuple.
inline bool graded_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : m.e) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

using Exponents = std::array<int, kMaxVars>;

/// Ordered variable names shared between compatible series.
class VarList {
 public:
  VarList() = default;
  explicit VarList(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->size() > static_cast<std::size_t>(kMaxVars)) {
      throw RangeError("at most " + std::to_string(kMaxVars) + " series variables");
    }
  }

  int size() const { return names_ ? static_cast<int>(names_->size()) : 0; }
  const std::string& name(int i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  int index(std::string_view name) const {
    for (int i = 0; i < size(); ++i) {
      if ((*names_)[i] == name) return i;
    }
    throw RangeError("unknown series variable '" + std::string(name) + "'");
  }

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || (a.names_ && b.names_ && *a.names_ == *b.names_);
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// ---------------------------------------------------------------------------
// Coefficient traits

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<BigInt> {
  static BigInt from_int(const BigInt& /*like*/, long long v) { return BigInt(v); }
  static bool is_zero(const BigInt& x) { return x == 0; }
  static std::string to_string(const BigInt& x) { return x.str(); }
};

template <>
struct CoeffTraits<CycInt> {
  static CycInt from_int(const CycInt& like, long long v) { return CycInt(like.conductor(), v); }
  static bool is_zero(const CycInt& x) { return x.is_zero(); }
  static std::string to_string(const CycInt& x) { return x.to_string(); }
};

/// Result of comparing two series coefficientwise on a box.
template <class C>
struct Comparison {
  bool match = true;
  Exponents region{};
  std::uint64_t compared = 0;  // number of monomials in the box
  std::optional<Monomial> first_mismatch;
  C lhs{};
  C rhs{};
};

template <class C>
class Series {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;

  Series() = default;

  /// Zero series. `unit` fixes the coefficient ring (e.g. the conductor).
  Series(VarList vars, Exponents caps, C unit = Traits::from_int(C{}, 1))
      : vars_(std::move(vars)), caps_(caps), valid_(caps), unit_(std::move(unit)) {
    for (int i = vars_.size(); i < kMaxVars; ++i) caps_[i] = valid_[i] = 0;
  }

  static Series constant(VarList vars, Exponents caps, const C& value) {
    Series out(std::move(vars), caps, Traits::from_int(value, 1));
    out.add_term(Monomial{}, value);
    return out;
  }

  static Series term(VarList vars, Exponents caps, const C& coeff, const Monomial& m) {
    Series out(std::move(vars), caps, Traits::from_int(coeff, 1));
    out.add_term(m, coeff);
    return out;
  }

  const VarList& vars() const { return vars_; }
  const Exponents& caps() const { return caps_; }
  const Exponents& valid_region() const { return valid_; }
  const C& unit() const { return unit_; }
  C zero() const { return Traits::from_int(unit_, 0); }
  C from_int(long long v) const { return Traits::from_int(unit_, v); }

  /// Restricts the exact region further (never beyond the caps).
  void restrict_valid_region(const Exponents& region) {
    for (int i = 0; i < kMaxVars; ++i) valid_[i] = std::min(valid_[i], region[i]);
  }

  bool within_caps(const Monomial& m) const {
    for (int i = 0; i < vars_.size(); ++i) {
      if (m.e[i] > caps_[i]) return false;
    }
    return true;
  }

  /// Adds coeff*m; terms beyond the caps are dropped.
  void add_term(const Monomial& m, const C& coeff) {
    if (!within_caps(m) || Traits::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero() : it->second;
  }

  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::unordered_map<Monomial, C, MonomialHash>& raw_terms() const { return terms_; }

  /// Terms in graded order.
  std::vector<std::pair<Monomial, C>> sorted_terms() const {
    std::vector<std::pair<Monomial, C>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
    return out;
  }

  int max_exponent(int var) const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max<int>(best, m.e[var]);
    return best;
  }

  Series& operator+=(const Series& other) {
    require_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    merge_bounds(other);
    return *this;
  }

  Series& operator-=(const Series& other) {
    require_compatible(other);
    for (const auto& [m, c] : other.terms_) {
      C neg = zero();
      neg -= c;
      add_term(m, neg);
    }
    merge_bounds(other);
    return *this;
  }

  Series& operator*=(const Series& other) {
    *this = *this * other;
    return *this;
  }

  Series& scale(const C& factor) {
    if (Traits::is_zero(factor)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= factor;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.require_compatible(b);
    Series out(a.vars_, a.caps_, a.unit_);
    out.merge_bounds(b);
    const Series& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const Series& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    const int nv = a.vars_.size();
    out.terms_.reserve(std::min<std::size_t>(outer.terms_.size() * inner.terms_.size(), 1u << 20));
    for (const auto& [ma, ca] : outer.terms_) {
      for (const auto& [mb, cb] : inner.terms_) {
        Monomial m;
        bool fits = true;
        for (int i = 0; i < nv; ++i) {
          const int e = ma.e[i] + mb.e[i];
          if (e > out.caps_[i]) {
            fits = false;
            break;
          }
          m.e[i] = static_cast<std::uint16_t>(e);
        }
        if (!fits) continue;
        auto [it, inserted] = out.terms_.try_emplace(m, ca);
        if (inserted) {
          it->second *= cb;
        } else {
          C prod = ca;
          prod *= cb;
          it->second += prod;
        }
      }
    }
    out.drop_zeros();
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) {
    if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  /// Keeps the terms whose exponent in each variable v with divisors[v] > 0
  /// is divisible by divisors[v].
  Series extract_multiples(const Monomial& divisors) const {
    Series out(vars_, caps_, unit_);
    out.valid_ = valid_;
    for (const auto& [m, c] : terms_) {
      bool keep = true;
      for (int i = 0; i < vars_.size(); ++i) {
        if (divisors.e[i] > 0 && m.e[i] % divisors.e[i] != 0) {
          keep = false;
          break;
        }
      }
      if (keep) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// Replaces variable v by factor*v: the coefficient of v^e gets factor^e.
  Series scale_variable(int var, const C& factor) const {
    Series out(vars_, caps_, unit_);
    out.valid_ = valid_;
    std::vector<C> powers{unit_};
    for (const auto& [m, c] : terms_) {
      while (static_cast<int>(powers.size()) <= m.e[var]) {
        C next = powers.back();
        next *= factor;
        powers.push_back(std::move(next));
      }
      C value = c;
      value *= powers[m.e[var]];
      out.add_term(m, value);
    }
    return out;
  }

  /// Same terms with smaller caps.
  Series truncated(const Exponents& caps) const {
    Exponents new_caps = caps_;
    for (int i = 0; i < kMaxVars; ++i) new_caps[i] = std::min(new_caps[i], caps[i]);
    Series out(vars_, new_caps, unit_);
    for (int i = 0; i < kMaxVars; ++i) out.valid_[i] = std::min(valid_[i], new_caps[i]);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  /// Applies f to every coefficient, producing a series over another ring.
  template <class D, class F>
  Series<D> map_coefficients(const D& unit, F&& f) const {
    Series<D> out(vars_, caps_, unit);
    out.restrict_valid_region(valid_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  /// "3 + 2*q^2*t - z*q^3 ..." style rendering in graded order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
      if (!first) out << " + ";
      first = false;
      const std::string coeff = Traits::to_string(c);
      const bool needs_parens = coeff.find(' ') != std::string::npos;
      bool wrote = false;
      if (m.degree() == 0 || coeff != "1") {
        out << (needs_parens ? "(" + coeff + ")" : coeff);
        wrote = true;
      }
      for (int i = 0; i < vars_.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (wrote) out << '*';
        out << vars_.name(i);
        if (m.e[i] > 1) out << '^' << m.e[i];
        wrote = true;
      }
    }
    return out.str();
  }

 private:
  void require_compatible(const Series& other) const {
    if (!(vars_ == other.vars_)) throw RangeError("series over different variables");
  }

  void merge_bounds(const Series& other) {
    for (int i = 0; i < kMaxVars; ++i) {
      caps_[i] = std::min(caps_[i], other.caps_[i]);
      valid_[i] = std::min({valid_[i], other.valid_[i], caps_[i]});
    }
    std::erase_if(terms_, [this](const auto& kv) { return !within_caps(kv.first); });
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const auto& kv) { return Traits::is_zero(kv.second); });
  }

  VarList vars_;
  Exponents caps_{};
  Exponents valid_{};
  C unit_{};
  std::unordered_map<Monomial, C, MonomialHash> terms_;
};

using IntSeries = Series<BigInt>;
using CycSeries = Series<CycInt>;

// ---------------------------------------------------------------------------
// Constructions

/// Builds a monomial from (variable index, exponent) pairs.
inline Monomial make_monomial(std::initializer_list<std::pair<int, int>> powers) {
  Monomial m;
  for (auto [var, e] : powers) m.e[var] = static_cast<std::uint16_t>(e);
  return m;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return out;
}

inline Monomial power(const Monomial& m, int k) {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = static_cast<std::uint16_t>(m.e[i] * k);
  return out;
}

/// Unit-coefficient series 1 over the given variables.
template <class C>
Series<C> one_like(const Series<C>& like) {
  return Series<C>::constant(like.vars(), like.caps(), like.unit());
}

/// sum_{j=0}^{n-1} base^j for a single-term base.
template <class C>
Series<C> q_bracket(int n, const Series<C>& base) {
  if (base.term_count() != 1) {
    throw NonMonomialBaseError("q-bracket base must be a single scaled monomial, got " +
                               std::to_string(base.term_count()) + " terms");
  }
  if (n < 0) throw RangeError("q-bracket length must be nonnegative");
  const auto& [m, c] = *base.raw_terms().begin();
  Series<C> out(base.vars(), base.caps(), base.unit());
  out.restrict_valid_region(base.valid_region());
  C coeff = base.unit();
  Monomial cur;
  for (int j = 0; j < n; ++j) {
    if (!out.within_caps(cur)) break;
    out.add_term(cur, coeff);
    coeff *= c;
    cur = cur * m;
  }
  return out;
}

/// 1/(1 - coeff*m) = sum_j (coeff*m)^j, truncated to caps.
template <class C>
Series<C> geom_inverse(const VarList& vars, const Exponents& caps, const C& coeff,
                       const Monomial& m) {
  if (m.degree() == 0) {
    throw ConstantTermError("geometric inverse needs a monomial without constant term");
  }
  Series<C> out(vars, caps, CoeffTraits<C>::from_int(coeff, 1));
  C cur = out.unit();
  Monomial mono;
  while (out.within_caps(mono)) {
    out.add_term(mono, cur);
    cur *= coeff;
    mono = mono * m;
  }
  return out;
}

/// 1/(1 - M) for a single-term series M.
template <class C>
Series<C> geom_inverse(const Series<C>& base) {
  if (base.term_count() != 1) {
    throw NonMonomialBaseError("geometric inverse needs a single scaled monomial");
  }
  const auto& [m, c] = *base.raw_terms().begin();
  auto out = geom_inverse(base.vars(), base.caps(), c, m);
  out.restrict_valid_region(base.valid_region());
  return out;
}

template <class C>
Series<C> pow(const Series<C>& f, int k) {
  Series<C> out = one_like(f);
  out.restrict_valid_region(f.valid_region());
  Series<C> base = f;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

/// Compares coefficientwise on the box `region`. Throws RegionError if the
/// box leaves either operand's valid region.
template <class C>
Comparison<C> equal_on(const Series<C>& f, const Series<C>& g, const Exponents& region) {
  if (!(f.vars() == g.vars())) throw RangeError("series over different variables");
  const int nv = f.vars().size();
  for (int i = 0; i < nv; ++i) {
    if (region[i] > f.valid_region()[i] || region[i] > g.valid_region()[i]) {
      throw RegionError("comparison region exceeds the valid region in variable '" +
                        f.vars().name(i) + "'");
    }
  }
  Comparison<C> out;
  out.region = region;
  out.compared = 1;
  for (int i = 0; i < nv; ++i) out.compared *= static_cast<std::uint64_t>(region[i] + 1);
  auto inside = [&](const Monomial& m) {
    for (int i = 0; i < nv; ++i) {
      if (m.e[i] > region[i]) return false;
    }
    return true;
  };
  auto consider = [&](const Monomial& m) {
    if (!inside(m)) return;
    const C a = f.coefficient(m);
    const C b = g.coefficient(m);
    if (a == b) return;
    if (!out.first_mismatch || graded_less(m, *out.first_mismatch)) {
      out.match = false;
      out.first_mismatch = m;
      out.lhs = a;
      out.rhs = b;
    }
  };
  for (const auto& [m, c] : f.raw_terms()) consider(m);
  for (const auto& [m, c] : g.raw_terms()) consider(m);
  return out;
}

/// Embeds an integer series into Z[zeta_r].
inline CycSeries to_cyclotomic(const IntSeries& f, int r) {
  return f.map_coefficients(CycInt(r, 1), [r](const BigInt& c) { return CycInt(r, c); });
}

}  // namespace projstat
