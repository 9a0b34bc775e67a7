#include "projstat/identities.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "projstat/parallel.hpp"
#include "projstat/qseries.hpp"
#include "projstat/statistics.hpp"

namespace projstat {

namespace {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <std::size_t N>
using Counts = std::map<std::array<int, N>, long long>;

template <std::size_t N>
void merge_counts(Counts<N>& into, Counts<N>&& from) {
  for (const auto& [key, value] : from) into[key] += value;
}

Exponents exps(std::initializer_list<int> values) {
  Exponents out{};
  std::copy(values.begin(), values.end(), out.begin());
  return out;
}

Monomial mono(std::initializer_list<std::pair<int, int>> powers) { return make_monomial(powers); }

/// sum_{j<len} (coeff*m)^j; terms past the caps are dropped.
template <class C>
Series<C> bracket(int len, const VarList& vars, const Exponents& caps, const C& coeff,
                  const Monomial& m) {
  Series<C> out(vars, caps, CoeffTraits<C>::from_int(coeff, 1));
  C cur = out.unit();
  Monomial cur_m;
  for (int j = 0; j < len && out.within_caps(cur_m); ++j) {
    out.add_term(cur_m, cur);
    cur *= coeff;
    cur_m = cur_m * m;
  }
  return out;
}

IntSeries ibracket(int len, const VarList& vars, const Exponents& caps, const Monomial& m,
                   int sign = 1) {
  return bracket<BigInt>(len, vars, caps, BigInt(sign), m);
}

IntSeries igeom(const VarList& vars, const Exponents& caps, const Monomial& m) {
  return geom_inverse<BigInt>(vars, caps, BigInt(1), m);
}

IntSeries imono(const VarList& vars, const Exponents& caps, const Monomial& m, long long c = 1) {
  return IntSeries::term(vars, caps, BigInt(c), m);
}

/// Flag statistics of a lift; they do not depend on which lift is used.
struct LiftStats {
  int fdes = 0;
  int fmaj = 0;
  int des = 0;
  int col = 0;
};

LiftStats lift_stats(const ColoredPermutation& w, const GroupDescriptor& g) {
  const auto lambda = flag_partition(w, g.r, g.s);
  LiftStats out;
  out.fdes = lambda.front();
  out.fmaj = std::accumulate(lambda.begin(), lambda.end(), 0);
  out.des = (g.s * out.fdes + g.r - g.s) / g.r;
  out.col = col_residues(w.colors, g.lift_step());
  return out;
}

void require_caps(std::initializer_list<int> caps) {
  for (int c : caps) {
    if (c < 0) throw RegionError("exponent caps must be nonnegative");
  }
}

Json group_params(const GroupDescriptor& g) {
  return Json{{"r", g.r}, {"p", g.p}, {"s", g.s}, {"n", g.n}};
}

std::string pairs_to_string(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out << (i ? " + " : "") << "t^" << pairs[i].first << "*q^" << pairs[i].second;
  }
  return out.str();
}

/// 1/(1-m) factors applied in order.
IntSeries divide_by(IntSeries f, const std::vector<Monomial>& denominators) {
  for (const auto& m : denominators) f = f * igeom(f.vars(), f.caps(), m);
  return f;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "character-fmaj", "signed-multinomial", "signed-wreath",   "lift",     "carlitz-des",
      "carlitz-fdes",   "fdes-trivariate",    "six-stats",       "hilbert"};
  return names;
}

// ---------------------------------------------------------------------------

VerificationReport verify_character_fmaj(const GroupDescriptor& group, int eps, int k,
                                         const VerifyOptions& opts) {
  Stopwatch clock;
  const auto [r, p, s, n] = group;
  if (eps != 1 && eps != -1) throw CharacterConditionError("eps must be +1 or -1");
  if (k < 0 || k >= r / p) {
    throw CharacterConditionError("k=" + std::to_string(k) + " is outside [0," +
                                  std::to_string(r / p - 1) + "]");
  }
  if ((k * n) % s != 0) {
    throw CharacterConditionError("s=" + std::to_string(s) + " does not divide kn=" +
                                  std::to_string(k * n));
  }

  VerificationReport rep;
  rep.identity = "character-fmaj";
  rep.params = group_params(group);
  rep.params["eps"] = eps;
  rep.params["k"] = k;

  // (fmaj, exponent of zeta) -> signed count
  auto counts = parallel_fold(
      group, Counts<2>{},
      [&](Counts<2>& acc, const ColoredPermutation& w) {
        const int fmaj = lift_stats(w, group).fmaj;
        const int sign = (eps < 0 && inversions(w.sigma) % 2 != 0) ? -1 : 1;
        acc[{fmaj, residue(static_cast<long long>(k) * w.color_sum(), r)}] += sign;
      },
      merge_counts<2>, opts.threads, opts.budget);
  rep.count = group.order();

  int cap = n * p + n * r / s;
  for (int j = 1; j < n; ++j) cap += j * r;
  const VarList vars({"q"});
  const Exponents caps = exps({cap});
  const int Q = 0;

  CycSeries lhs(vars, caps, CycInt(r, 1));
  {
    std::map<int, std::vector<BigInt>> by_degree;
    for (const auto& [key, c] : counts) {
      auto& v = by_degree[key[0]];
      v.resize(r);
      v[key[1]] += c;
    }
    for (const auto& [deg, v] : by_degree) {
      lhs.add_term(mono({{Q, deg}}), CycInt::from_exponent_counts(r, v));
    }
  }

  auto signed_zeta = [&](int sign, long long e) {
    CycInt z = zeta_pow(r, e);
    return sign < 0 ? -z : z;
  };
  auto eps_pow = [&](int e) { return (eps < 0 && e % 2 != 0) ? -1 : 1; };

  CycSeries rhs = CycSeries::constant(vars, caps, CycInt(r, 1));
  for (int j = 1; j < n; ++j) {
    rhs = rhs * bracket<CycInt>(j * r / p, vars, caps,
                                signed_zeta(eps_pow((j - 1) * p), 1LL * k * p), mono({{Q, p}}));
  }
  rhs = rhs * bracket<CycInt>(n * r / (p * s), vars, caps,
                              signed_zeta(eps_pow((n - 1) * p), 1LL * k * p), mono({{Q, p}}));
  const int m = n / 2;
  CycSeries inner = pow(bracket<CycInt>(p, vars, caps, signed_zeta(1, k), mono({{Q, 1}})), n - m) *
                    pow(bracket<CycInt>(p, vars, caps, signed_zeta(eps, k), mono({{Q, 1}})), m);
  rhs = rhs * inner.extract_multiples(mono({{Q, p}}));

  rep.region = region_json(vars, caps);
  rep.absorb("series", equal_on(lhs, rhs, caps), vars);
  rep.details["sum"] = lhs.to_string();
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_signed_multinomial(int n, const std::vector<int>& composition) {
  Stopwatch clock;
  if (composition.empty()) throw CompositionError("composition must have at least one part");
  if (std::any_of(composition.begin(), composition.end(), [](int x) { return x < 0; })) {
    throw CompositionError("composition parts must be nonnegative");
  }
  if (std::accumulate(composition.begin(), composition.end(), 0) != n) {
    throw CompositionError("composition parts must sum to n=" + std::to_string(n));
  }
  if (n > 12) throw BudgetExceededError("n=" + std::to_string(n) + " is too large to enumerate");

  VerificationReport rep;
  rep.identity = "signed-multinomial";
  rep.params = Json{{"n", n}, {"composition", composition}};

  std::vector<bool> allowed(n + 1, false);
  int partial = 0;
  for (std::size_t i = 0; i + 1 < composition.size(); ++i) {
    partial += composition[i];
    allowed[partial] = true;
  }

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  long long lhs = 0;
  do {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      if (sigma[i - 1] > sigma[i] && !allowed[i]) ok = false;
    }
    if (!ok) continue;
    ++rep.count;
    lhs += inversions(sigma) % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  BigInt rhs = 0;
  const auto odd = std::count_if(composition.begin(), composition.end(),
                                 [](int x) { return x % 2 != 0; });
  if (odd < 2) {
    auto fact = [](int x) {
      BigInt f = 1;
      for (int i = 2; i <= x; ++i) f *= i;
      return f;
    };
    rhs = fact(n / 2);
    for (int part : composition) rhs /= fact(part / 2);
  }

  rep.absorb_scalar("signed-count", std::to_string(lhs), rhs.str());
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_signed_wreath(int r, int n, const VerifyOptions& opts) {
  Stopwatch clock;
  const GroupDescriptor group = wreath_group(r, n);
  VerificationReport rep;
  rep.identity = "signed-wreath";
  rep.params = Json{{"r", r}, {"n", n}};

  // key[0] = 0: (fmaj) over the group; key[0] = 1: (col) over Des_A = {}
  auto counts = parallel_fold(
      group, Counts<2>{},
      [&](Counts<2>& acc, const ColoredPermutation& w) {
        const int sign = inversions(w.sigma) % 2 == 0 ? 1 : -1;
        acc[{0, lift_stats(w, group).fmaj}] += sign;
        for (int i = 1; i < n; ++i) {
          if (compare(Order::Color, {w.sigma[i - 1], w.colors[i - 1]},
                      {w.sigma[i], w.colors[i]}) == std::strong_ordering::greater) {
            return;
          }
        }
        acc[{1, static_cast<int>(w.color_sum())}] += sign;
      },
      merge_counts<2>, opts.threads, opts.budget);
  rep.count = group.order();

  const VarList vars({"q"});
  const int Q = 0;
  const Exponents caps = exps({r * n * (n + 1) / 2});
  IntSeries lhs(vars, caps);
  IntSeries u_lhs(vars, caps);
  for (const auto& [key, c] : counts) (key[0] == 0 ? lhs : u_lhs).add_term(mono({{Q, key[1]}}), c);

  IntSeries rhs = IntSeries::constant(vars, caps, 1);
  for (int j = 1; j <= n; ++j) {
    rhs = rhs * ibracket(j * r, vars, caps, mono({{Q, 1}}), j % 2 == 1 ? 1 : -1);
  }
  rep.region = region_json(vars, caps);
  rep.absorb("series", equal_on(lhs, rhs, caps), vars);
  rep.details["sum"] = lhs.to_string();

  const int m = n / 2;
  IntSeries u_rhs = pow(ibracket(r, vars, caps, mono({{Q, 2}})), m);
  if (n % 2 == 1) u_rhs = u_rhs * ibracket(r, vars, caps, mono({{Q, 1}}));
  rep.absorb("increasing-elements", equal_on(u_lhs, u_rhs, caps), vars);

  // Symmetric group factor with q^r, then the bracket identities that
  // combine it with the increasing-element sum.
  {
    IntSeries sym(vars, caps);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      int maj = 0;
      for (int i = 1; i < n; ++i) {
        if (sigma[i - 1] > sigma[i]) maj += i;
      }
      sym.add_term(mono({{Q, r * maj}}), BigInt(inversions(sigma) % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    IntSeries sym_rhs = IntSeries::constant(vars, caps, 1);
    for (int j = 1; j <= n; ++j) {
      sym_rhs = sym_rhs * ibracket(j, vars, caps, mono({{Q, r}}), j % 2 == 1 ? 1 : -1);
    }
    rep.absorb("symmetric-group", equal_on(sym, sym_rhs, caps), vars);
  }
  for (int i = 1; i <= m; ++i) {
    const Exponents pcaps = exps({4 * i * r + 2 * r});
    const IntSeries a = ibracket(r, vars, pcaps, mono({{Q, 2}})) *
                        ibracket(2 * i - 1, vars, pcaps, mono({{Q, r}})) *
                        ibracket(2 * i, vars, pcaps, mono({{Q, r}}), -1);
    const IntSeries b = ibracket((2 * i - 1) * r, vars, pcaps, mono({{Q, 1}})) *
                        ibracket(2 * i * r, vars, pcaps, mono({{Q, 1}}), -1);
    rep.absorb("pair-" + std::to_string(i), equal_on(a, b, pcaps), vars);
  }
  if (n % 2 == 1) {
    const Exponents pcaps = exps({n * r + r});
    const IntSeries a = ibracket(r, vars, pcaps, mono({{Q, 1}})) *
                        ibracket(n, vars, pcaps, mono({{Q, r}}));
    const IntSeries b = ibracket(n * r, vars, pcaps, mono({{Q, 1}}));
    rep.absorb("odd-tail", equal_on(a, b, pcaps), vars);
  }
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_lift_identity(int r, int s, int n, const VerifyOptions& opts) {
  Stopwatch clock;
  const GroupDescriptor group = make_group(r, 1, s, n);
  const int step = group.lift_step();
  VerificationReport rep;
  rep.identity = "lift";
  rep.params = Json{{"r", r}, {"s", s}, {"n", n}};

  struct Acc {
    std::uint64_t compared = 0;
    std::optional<Mismatch> mismatch;
  };
  auto acc = parallel_fold(
      group, Acc{},
      [&](Acc& a, const ColoredPermutation& w) {
        const LiftStats base = lift_stats(w, group);
        std::vector<std::pair<int, int>> got;
        std::vector<std::pair<int, int>> want;
        ColoredPermutation lift = w;
        for (int j = 0; j < s; ++j) {
          for (int i = 0; i < n; ++i) lift.colors[i] = residue(w.colors[i] + j * step, r);
          const auto lambda = flag_partition(lift, r, 1);
          got.emplace_back(lambda.front(), std::accumulate(lambda.begin(), lambda.end(), 0));
          want.emplace_back(base.fdes + j * step, base.fmaj + j * n * step);
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        a.compared += s;
        if (got != want && !a.mismatch) {
          a.mismatch = Mismatch{Json::object(), pairs_to_string(got), pairs_to_string(want),
                                "element " + format_window(w)};
        }
      },
      [](Acc& into, Acc&& from) {
        into.compared += from.compared;
        if (!into.mismatch) into.mismatch = std::move(from.mismatch);
      },
      opts.threads, opts.budget);

  rep.count = group.order();
  rep.compared = acc.compared;
  rep.region = Json{{"elements", rep.count}};
  rep.details["checks"]["per-element"] = {{"outcome", acc.mismatch ? "MISMATCH" : "MATCH"},
                                          {"compared", acc.compared}};
  if (acc.mismatch) rep.fail(*acc.mismatch);
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kT = 0;
constexpr int kQ = 1;
constexpr int kA = 2;

/// (statistic, fmaj, col) counts; `use_fdes` picks fdes over des.
Counts<3> flag_counts(const GroupDescriptor& group, bool use_fdes, const VerifyOptions& opts) {
  return parallel_fold(
      group, Counts<3>{},
      [&](Counts<3>& acc, const ColoredPermutation& w) {
        const LiftStats st = lift_stats(w, group);
        ++acc[{use_fdes ? st.fdes : st.des, st.fmaj, st.col}];
      },
      merge_counts<3>, opts.threads, opts.budget);
}

/// sum t^stat q^fmaj (a^col if the series has an `a`).
IntSeries counts_series(const Counts<3>& counts, const VarList& vars, const Exponents& caps) {
  IntSeries out(vars, caps);
  const bool with_a = vars.size() > kA;
  for (const auto& [key, c] : counts) {
    Monomial m = mono({{kT, key[0]}, {kQ, key[1]}});
    if (with_a) m.e[kA] = static_cast<std::uint16_t>(key[2]);
    if (out.within_caps(m)) out.add_term(m, c);
  }
  return out;
}

std::vector<Monomial> des_denominators(const GroupDescriptor& g) {
  std::vector<Monomial> out{mono({{kT, 1}})};
  for (int j = 1; j < g.n; ++j) out.push_back(mono({{kT, g.s}, {kQ, j * g.r}}));
  out.push_back(mono({{kT, 1}, {kQ, g.n * g.lift_step()}}));
  return out;
}

std::vector<Monomial> fdes_denominators(const GroupDescriptor& g) {
  std::vector<Monomial> out{mono({{kT, 1}})};
  for (int j = 1; j < g.n; ++j) out.push_back(mono({{kT, g.r}, {kQ, j * g.r}}));
  out.push_back(mono({{kT, g.lift_step()}, {kQ, g.n * g.lift_step()}}));
  return out;
}

/// sum_{k <= t cap} t^k {term(k)^n}_{q^p} (extraction skipped if !extract).
template <class Term>
IntSeries carlitz_sum(const GroupDescriptor& g, const VarList& vars, const Exponents& caps,
                      Term term, bool extract = true) {
  IntSeries out(vars, caps);
  for (int k = 0; k <= caps[kT]; ++k) {
    IntSeries power = pow(term(k), g.n);
    if (extract) power = power.extract_multiples(mono({{kQ, g.p}}));
    out += power * imono(vars, caps, mono({{kT, k}}));
  }
  return out;
}

Json carlitz_params(const GroupDescriptor& g, const CarlitzCaps& caps, bool with_a) {
  Json out = group_params(g);
  out["tmax"] = caps.t;
  out["qmax"] = caps.q;
  if (with_a) out["amax"] = caps.a;
  return out;
}

}  // namespace

VerificationReport verify_carlitz_des(const GroupDescriptor& group, const CarlitzCaps& caps,
                                      const VerifyOptions& opts) {
  Stopwatch clock;
  require_caps({caps.t, caps.q, caps.a});
  const int step = group.lift_step();
  VerificationReport rep;
  rep.identity = "carlitz-des";
  rep.params = carlitz_params(group, caps, true);

  const Counts<3> counts = flag_counts(group, false, opts);
  rep.count = group.order();

  const VarList vars({"t", "q", "a"});
  const Exponents box = exps({caps.t, caps.q, caps.a});
  const IntSeries lhs = carlitz_sum(group, vars, box, [&](int k) {
    return ibracket(k + 1, vars, box, mono({{kQ, step}})) +
           imono(vars, box, mono({{kQ, 1}, {kA, 1}})) *
               ibracket(k, vars, box, mono({{kQ, step}})) *
               ibracket(step - 1, vars, box, mono({{kQ, 1}, {kA, 1}}));
  });
  const IntSeries rhs = divide_by(counts_series(counts, vars, box), des_denominators(group));
  rep.region = region_json(vars, box);
  rep.absorb("series", equal_on(lhs, rhs, box), vars);

  const VarList vars1({"t", "q"});
  const Exponents box1 = exps({caps.t, caps.q});
  const IntSeries lhs1 = carlitz_sum(group, vars1, box1, [&](int k) {
    return ibracket(k * step + 1, vars1, box1, mono({{kQ, 1}}));
  });
  const IntSeries rhs1 = divide_by(counts_series(counts, vars1, box1), des_denominators(group));
  rep.absorb("a=1", equal_on(lhs1, rhs1, box1), vars1);
  rep.millis = clock.millis();
  return rep;
}

VerificationReport verify_carlitz_fdes(const GroupDescriptor& group, const CarlitzCaps& caps,
                                       const VerifyOptions& opts) {
  Stopwatch clock;
  require_caps({caps.t, caps.q});
  VerificationReport rep;
  rep.identity = "carlitz-fdes";
  rep.params = carlitz_params(group, caps, false);

  const Counts<3> counts = flag_counts(group, true, opts);
  rep.count = group.order();

  const VarList vars({"t", "q"});
  const Exponents box = exps({caps.t, caps.q});
  const IntSeries lhs = carlitz_sum(group, vars, box, [&](int k) {
    return ibracket(k + 1, vars, box, mono({{kQ, 1}}));
  });
  const IntSeries rhs = divide_by(counts_series(counts, vars, box), fdes_denominators(group));
  rep.region = region_json(vars, box);
  rep.absorb("series", equal_on(lhs, rhs, box), vars);
  rep.millis = clock.millis();
  return rep;
}

VerificationReport verify_fdes_trivariate(const GroupDescriptor& group, const CarlitzCaps& caps,
                                          const VerifyOptions& opts) {
  Stopwatch clock;
  require_caps({caps.t, caps.q, caps.a});
  const int step = group.lift_step();
  VerificationReport rep;
  rep.identity = "fdes-trivariate";
  rep.params = carlitz_params(group, caps, true);

  const Counts<3> counts = flag_counts(group, true, opts);
  rep.count = group.order();

  const VarList vars({"t", "q", "a"});
  const Exponents box = exps({caps.t, caps.q, caps.a});
  const IntSeries aq = imono(vars, box, mono({{kQ, 1}, {kA, 1}}));
  // block: Q_{r/s}(k), or k itself for the m=k variant
  auto term = [&](int k, bool block_is_k) {
    const int quotient = k / step;
    const int rem = k % step;
    const int block = block_is_k ? k : quotient;
    return ibracket(quotient + 1, vars, box, mono({{kQ, step}})) +
           aq * ibracket(step - 1, vars, box, mono({{kQ, 1}, {kA, 1}})) *
               ibracket(quotient, vars, box, mono({{kQ, step}})) +
           imono(vars, box, mono({{kQ, block * step + 1}, {kA, 1}})) *
               ibracket(rem, vars, box, mono({{kQ, 1}, {kA, 1}}));
  };
  const IntSeries numerator = counts_series(counts, vars, box);
  const IntSeries oracle = divide_by(numerator, fdes_denominators(group));
  const IntSeries closed = carlitz_sum(group, vars, box, [&](int k) { return term(k, false); });

  rep.region = region_json(vars, box);
  rep.absorb("series", equal_on(closed, oracle, box), vars);

  const VarList vars1({"t", "q"});
  const Exponents box1 = exps({caps.t, caps.q});
  const IntSeries fdes_closed = carlitz_sum(group, vars1, box1, [&](int k) {
    return ibracket(k + 1, vars1, box1, mono({{kQ, 1}}));
  });
  const IntSeries oracle1 = divide_by(counts_series(counts, vars1, box1), fdes_denominators(group));
  rep.absorb("a=1", equal_on(fdes_closed, oracle1, box1), vars1);

  auto verdict = [&](const IntSeries& a, const IntSeries& b) {
    return equal_on(a, b, box).match ? "MATCH" : "MISMATCH";
  };
  Json variants = Json::object();
  variants["m=k"] =
      verdict(carlitz_sum(group, vars, box, [&](int k) { return term(k, true); }), oracle);
  variants["no q^p extraction"] = verdict(
      carlitz_sum(group, vars, box, [&](int k) { return term(k, false); }, false), oracle);
  variants["denominators (1-t^s q^{jr}), (1-t q^{nr/s})"] =
      verdict(closed, divide_by(numerator, des_denominators(group)));
  rep.details["variants"] = variants;
  rep.details["closedForm"] =
      "sum_k t^k {([Q+1]_{q^{r/s}} + aq[r/s-1]_{aq}[Q]_{q^{r/s}} + aq^{Qr/s+1}[R]_{aq})^n}_{q^p}, "
      "k = (r/s)Q + R, over (1-t)(1-t^r q^r)...(1-t^r q^{(n-1)r})(1-t^{r/s} q^{nr/s})";
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

enum SixVar { kU = 0, kT1, kT2, kQ1, kQ2, kA1, kA2 };

int gcd_period(int r, int p, int s) { return (s * p) / std::gcd(s * p, r); }

/// Sum over l < count of the product over lattice points (i, j) in the box
/// i <= imax(k1), j <= jmax(k2) with i + j = l*shift mod r of 1/(1 - u a1^.. a2^.. q1^i q2^j).
IntSeries lattice_factor(const VarList& vars, const Exponents& caps, int i, int j, int step,
                         bool colored) {
  Monomial m = mono({{kU, 1}, {kQ1, i}, {kQ2, j}});
  if (colored) {
    m.e[kA1] = static_cast<std::uint16_t>(residue(i, step));
    m.e[kA2] = static_cast<std::uint16_t>(residue(j, step));
  }
  return igeom(vars, caps, m);
}

}  // namespace

VerificationReport verify_six_stats(int r, int p, int s, int n_max, const BivariateCaps& caps,
                                    const VerifyOptions& opts) {
  Stopwatch clock;
  if (r <= 0 || p <= 0 || s <= 0 || r % p != 0 || r % s != 0) {
    throw DivisibilityError("six-stats needs p | r and s | r");
  }
  if (n_max < 0) throw RangeError("nmax must be nonnegative");
  require_caps({caps.t, caps.q, caps.u});
  const int step = r / s;
  const int d = gcd_period(r, p, s);
  const int u_cap = std::min(caps.u, n_max);
  const int a_cap = u_cap * (step - 1);

  VerificationReport rep;
  rep.identity = "six-stats";
  rep.params = Json{{"r", r}, {"p", p}, {"s", s}, {"nmax", n_max}, {"tmax", caps.t},
                    {"qmax", caps.q}, {"umax", caps.u}};

  const VarList vars({"u", "t1", "t2", "q1", "q2", "a1", "a2"});
  const Exponents box = exps({u_cap, caps.t, caps.t, caps.q, caps.q, a_cap, a_cap});

  // Lattice side. P(k1, k2) grows monotonically, so each step multiplies in
  // only the new lattice points.
  IntSeries lhs(vars, box);
  for (int l = 0; l < s; ++l) {
    auto in_class = [&](int i, int j) { return residue(i + j - l * step, r) == 0; };
    IntSeries row_start = IntSeries::constant(vars, box, 1);
    int prev_i = -1;
    for (int k1 = 0; k1 <= caps.t; ++k1) {
      const int imax = std::min(k1 * step, caps.q);
      for (int i = prev_i + 1; i <= imax; ++i) {
        if (in_class(i, 0)) row_start = row_start * lattice_factor(vars, box, i, 0, step, true);
      }
      prev_i = imax;
      IntSeries cur = row_start;
      int prev_j = 0;
      for (int k2 = 0; k2 <= caps.t; ++k2) {
        const int jmax = std::min(k2 * step, caps.q);
        for (int j = prev_j + 1; j <= jmax; ++j) {
          for (int i = 0; i <= imax; ++i) {
            if (in_class(i, j)) cur = cur * lattice_factor(vars, box, i, j, step, true);
          }
        }
        prev_j = jmax;
        lhs += cur * imono(vars, box, mono({{kT1, k1}, {kT2, k2}}));
      }
    }
  }
  lhs = lhs.extract_multiples(mono({{kU, d}, {kQ1, p}}));

  // Enumeration side.
  IntSeries rhs(vars, box);
  {
    IntSeries zero_term = IntSeries::constant(vars, box, s);
    rhs += divide_by(zero_term, {mono({{kT1, 1}}), mono({{kT2, 1}})});
  }
  for (int n = 1; n <= u_cap; ++n) {
    if (n % d != 0) continue;
    const GroupDescriptor group = make_group(r, p, s, n);
    auto counts = parallel_fold(
        group, Counts<6>{},
        [&](Counts<6>& acc, const ColoredPermutation& w) {
          const LiftStats a = lift_stats(w, group);
          const LiftStats b = lift_stats(invert(w, r), group);
          ++acc[{a.des, b.des, a.fmaj, b.fmaj, a.col, b.col}];
        },
        merge_counts<6>, opts.threads, opts.budget);
    rep.count += group.order();
    IntSeries num(vars, box);
    for (const auto& [key, c] : counts) {
      const Monomial m = mono({{kU, n}, {kT1, key[0]}, {kT2, key[1]}, {kQ1, key[2]},
                               {kQ2, key[3]}, {kA1, key[4]}, {kA2, key[5]}});
      num.add_term(m, c);
    }
    std::vector<Monomial> den = {mono({{kT1, 1}}), mono({{kT2, 1}}),
                                 mono({{kT1, 1}, {kQ1, n * step}}),
                                 mono({{kT2, 1}, {kQ2, n * step}})};
    for (int j = 1; j < n; ++j) {
      den.push_back(mono({{kT1, s}, {kQ1, j * r}}));
      den.push_back(mono({{kT2, s}, {kQ2, j * r}}));
    }
    rhs += divide_by(std::move(num), den);
  }

  rep.region = region_json(vars, box);
  rep.details["d"] = d;
  rep.details["terms"] = lhs.term_count();
  rep.absorb("series", equal_on(lhs, rhs, box), vars);
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

/// {sum_{l < count} prod_{i + j = l*shift mod r} 1/(1 - u q1^i q2^j)}_{u^d q1^e}.
IntSeries hilbert_lattice(const VarList& vars, const Exponents& box, int r, int count, int shift,
                          int d, int extract_q1) {
  IntSeries out(vars, box);
  for (int l = 0; l < count; ++l) {
    IntSeries prod = IntSeries::constant(vars, box, 1);
    for (int i = 0; i <= box[1]; ++i) {
      for (int j = 0; j <= box[2]; ++j) {
        if (residue(i + j - l * shift, r) != 0) continue;
        prod = prod * igeom(vars, box, mono({{0, 1}, {1, i}, {2, j}}));
      }
    }
    out += prod;
  }
  return out.extract_multiples(mono({{0, d}, {1, extract_q1}}));
}

/// sum_{n, d | n} u^n sum_{G(r,p,s,n)} q1^fmaj(g) q2^fmaj(g^-1) over the
/// Hilbert denominators; the n = 0 term is s.
IntSeries hilbert_enumerated(const VarList& vars, const Exponents& box, int r, int p, int s,
                             const VerifyOptions& opts, std::uint64_t& count) {
  const int d = gcd_period(r, p, s);
  IntSeries out = IntSeries::constant(vars, box, s);
  for (int n = 1; n <= box[0]; ++n) {
    if (n % d != 0) continue;
    const GroupDescriptor group = make_group(r, p, s, n);
    auto counts = parallel_fold(
        group, Counts<2>{},
        [&](Counts<2>& acc, const ColoredPermutation& w) {
          ++acc[{lift_stats(w, group).fmaj, lift_stats(invert(w, r), group).fmaj}];
        },
        merge_counts<2>, opts.threads, opts.budget);
    count += group.order();
    IntSeries num(vars, box);
    for (const auto& [key, c] : counts) num.add_term(mono({{0, n}, {1, key[0]}, {2, key[1]}}), c);
    std::vector<Monomial> den = {mono({{1, n * r / s}}), mono({{2, n * r / s}})};
    for (int j = 1; j < n; ++j) {
      den.push_back(mono({{1, j * r}}));
      den.push_back(mono({{2, j * r}}));
    }
    out += divide_by(std::move(num), den);
  }
  return out;
}

}  // namespace

VerificationReport verify_hilbert(int r, int p, int s, int n_max, int q_cap,
                                  const VerifyOptions& opts) {
  Stopwatch clock;
  if (r <= 0 || p <= 0 || s <= 0 || r % p != 0 || r % s != 0) {
    throw DivisibilityError("hilbert needs p | r and s | r");
  }
  if (n_max < 0) throw RangeError("nmax must be nonnegative");
  require_caps({q_cap});
  const int d = gcd_period(r, p, s);

  VerificationReport rep;
  rep.identity = "hilbert";
  rep.params = Json{{"r", r}, {"p", p}, {"s", s}, {"nmax", n_max}, {"qmax", q_cap}};

  const VarList vars({"u", "q1", "q2"});
  const Exponents box = exps({n_max, q_cap, q_cap});

  const IntSeries primal = hilbert_enumerated(vars, box, r, p, s, opts, rep.count);
  const IntSeries lattice = hilbert_lattice(vars, box, r, s, r / s, d, p);
  rep.region = region_json(vars, box);
  rep.details["d"] = d;
  rep.absorb("series", equal_on(lattice, primal, box), vars);

  // Readings with p and s exchanged in the lattice sum.
  std::uint64_t dual_count = 0;
  const IntSeries dual = hilbert_enumerated(vars, box, r, s, p, opts, dual_count);
  const IntSeries mixed = hilbert_lattice(vars, box, r, p, r / s, d, s);
  const IntSeries swapped = hilbert_lattice(vars, box, r, p, r / p, d, s);
  auto verdict = [&](const IntSeries& a, const IntSeries& b) {
    return equal_on(a, b, box).match;
  };
  const std::string dual_name = "G(" + std::to_string(r) + "," + std::to_string(s) + "," +
                                std::to_string(p) + ",n)";
  const std::string primal_name = "G(" + std::to_string(r) + "," + std::to_string(p) + "," +
                                  std::to_string(s) + ",n)";
  struct Variant {
    std::string name;
    bool match;
  };
  const std::vector<Variant> variants = {
      {"sum l<p, i+j=lr/s, {u^d q1^s} vs " + dual_name, verdict(mixed, dual)},
      {"sum l<p, i+j=lr/s, {u^d q1^s} vs " + primal_name, verdict(mixed, primal)},
      {"sum l<p, i+j=lr/p, {u^d q1^s} vs " + dual_name, verdict(swapped, dual)},
  };
  Json out = Json::object();
  std::vector<std::string> matching;
  for (const auto& v : variants) {
    out[v.name] = v.match ? "MATCH" : "MISMATCH";
    if (v.match) matching.push_back(v.name);
  }
  rep.details["variants"] = out;
  rep.details["matchingVariants"] = matching;
  const bool mixed_holds = variants[0].match || variants[1].match;
  rep.details["resolution"] =
      variants[2].match
          ? std::string("exchanged form holds: sum over l<p, i+j = lr/p mod r, {u^d q1^s} "
                        "equals the series of ") +
                dual_name +
                (mixed_holds ? "; the lr/s form also agrees at these parameters"
                             : "; the lr/s form fails here")
          : std::string("no exchanged form agrees at these parameters");
  rep.details["dualCount"] = dual_count;
  rep.millis = clock.millis();
  return rep;
}

}  // namespace projstat
