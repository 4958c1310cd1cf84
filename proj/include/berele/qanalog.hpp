#pragma once

#include "berele/rational.hpp"

#include <stdexcept>

namespace berele {

/// (q;q)_n = prod_{k=1}^{n} (1 - q^k); 1 for n = 0.
inline Rational q_pochhammer(const QContext& ctx, long long n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n must be nonnegative");
    Rational result = 1;
    Rational qk = 1;
    for (long long k = 1; k <= n; ++k) {
        qk *= ctx.q;
        result *= (1 - qk);
    }
    return result;
}

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); 0 outside 0 <= k <= n.
inline Rational q_binomial(const QContext& ctx, long long n, long long k) {
    if (n < 0) throw std::domain_error("q_binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    // (q;q)_m never vanishes for 0 <= q < 1.
    return q_pochhammer(ctx, n) / (q_pochhammer(ctx, k) * q_pochhammer(ctx, n - k));
}

// Verifies the four shift recurrences of the Gaussian binomial by exact
// evaluation for all 0 <= k <= n <= n_max.
inline bool check_q_binomial_recurrences(const QContext& ctx, long long n_max) {
    if (n_max < 1) throw std::domain_error("check_q_binomial_recurrences: n_max must be >= 1");
    for (long long n = 0; n <= n_max; ++n) {
        for (long long k = 0; k <= n; ++k) {
            const Rational base = q_binomial(ctx, n, k);
            if (q_binomial(ctx, n + 1, k) !=
                base * (1 - ctx.qpow(n + 1)) / (1 - ctx.qpow(n - k + 1)))
                return false;
            // The down-shift in n needs a nonvanishing denominator 1 - q^n.
            if (n >= 1 &&
                q_binomial(ctx, n - 1, k) != base * (1 - ctx.qpow(n - k)) / (1 - ctx.qpow(n)))
                return false;
            if (q_binomial(ctx, n, k + 1) !=
                base * (1 - ctx.qpow(n - k)) / (1 - ctx.qpow(k + 1)))
                return false;
            if (q_binomial(ctx, n, k - 1) !=
                base * (1 - ctx.qpow(k)) / (1 - ctx.qpow(n - k + 1)))
                return false;
        }
    }
    return true;
}

}  // namespace berele
