#pragma once

// Verifiers: each builds an enumeration side and a closed-form side as
// truncated series and compares them coefficientwise.

#include <cstdint>
#include <string>
#include <vector>

#include "projstat/group.hpp"
#include "projstat/report.hpp"

namespace projstat {

struct VerifyOptions {
  int threads = 0;  // 0: hardware concurrency
  std::uint64_t budget = default_budget();
};

/// Exponent caps for the trivariate Carlitz checks.
struct CarlitzCaps {
  int t = 6;
  int q = 6;
  int a = 6;
};

/// Caps for the two-sided checks: t1,t2 <= t; q1,q2 <= q; u <= u.
struct BivariateCaps {
  int t = 6;
  int q = 6;
  int u = 3;
};

/// Names accepted by run_identity / the CLI.
const std::vector<std::string>& identity_names();

/// sum_g eps^inv(|g|) zeta_r^(k c(g)) q^fmaj(g) against the product formula.
/// Throws CharacterConditionError unless eps = +-1, 0 <= k < r/p and s | kn.
VerificationReport verify_character_fmaj(const GroupDescriptor& group, int eps, int k,
                                         const VerifyOptions& opts = {});

/// Signed count of permutations whose descents lie in the partial sums of
/// `composition` = (k_{r-1}, ..., k_0) against the multinomial formula.
/// Throws CompositionError on negative parts or a sum other than n.
VerificationReport verify_signed_multinomial(int n, const std::vector<int>& composition);

/// sum_{G(r,n)} sign(|g|) q^fmaj against [r]_q [2r]_{-q} ... [nr]_{(-1)^{n-1} q},
/// plus the signed color sum over increasing elements and the bracket
/// identity used to assemble the product.
VerificationReport verify_signed_wreath(int r, int n, const VerifyOptions& opts = {});

/// Per-element check over G(r,1,s,n): the s lifts of g carry
/// t^{lambda_1} q^fmaj equal to t^{lambda_1(g)} q^{fmaj(g)} [s]_{t^{r/s} q^{nr/s}}.
VerificationReport verify_lift_identity(int r, int s, int n, const VerifyOptions& opts = {});

/// Trivariate (des, fmaj, col) Carlitz identity and its a = 1 specialization.
VerificationReport verify_carlitz_des(const GroupDescriptor& group, const CarlitzCaps& caps,
                                      const VerifyOptions& opts = {});

/// (fdes, fmaj) Carlitz identity.
VerificationReport verify_carlitz_fdes(const GroupDescriptor& group, const CarlitzCaps& caps,
                                       const VerifyOptions& opts = {});

/// (fdes, fmaj, col) identity. The closed side uses m = Q_{r/s}(k) and the
/// q^p extraction; other readings are evaluated and listed in `details`.
VerificationReport verify_fdes_trivariate(const GroupDescriptor& group, const CarlitzCaps& caps,
                                          const VerifyOptions& opts = {});

/// Six-statistic generating function over G(r,p,s,n), n <= nMax.
VerificationReport verify_six_stats(int r, int p, int s, int n_max, const BivariateCaps& caps,
                                    const VerifyOptions& opts = {});

/// Diagonal-invariant Hilbert series identity; also evaluates the variant
/// with the roles of p and s exchanged and records which one holds.
VerificationReport verify_hilbert(int r, int p, int s, int n_max, int q_cap,
                                  const VerifyOptions& opts = {});

}  // namespace projstat
