#pragma once

#include "berele/kernels.hpp"
#include "berele/partition.hpp"
#include "berele/pattern.hpp"
#include "berele/qanalog.hpp"
#include "berele/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace berele {

struct IdentityFailure {
    std::string inputs;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string name;
    long long instances_checked = 0;
    std::vector<IdentityFailure> failures;

    bool pass() const { return failures.empty(); }

    void record(const std::string& inputs, const Rational& lhs, const Rational& rhs) {
        ++instances_checked;
        if (lhs != rhs) failures.push_back({inputs, lhs, rhs});
    }
};

/// Symplectic Schur function: sum of a^P over tableaux of shape lam,
/// evaluated through the pattern correspondence.
inline Rational sp_schur(const ParamContext& pc, const Partition& lam) {
    Rational s = 0;
    for (const GtPattern& z : enumerate_patterns(pc.n, lam)) s += pattern_monomial(pc, z);
    return s;
}

/// The q-deformation: sum of a^Z kappa_n(Z) over patterns of shape lam.
inline Rational p_function(const ParamContext& pc, const Partition& lam) {
    Rational s = 0;
    for (const GtPattern& z : enumerate_patterns(pc.n, lam))
        s += pattern_monomial(pc, z) * kappa(pc, z);
    return s;
}

/// Continuous q-Hermite polynomial evaluated on the positive real axis:
/// sum_m binom(ell, m)_q a^{2m - ell}.
inline Rational q_hermite(const QContext& ctx, long long ell, const Rational& a) {
    if (ell < 0) throw std::domain_error("q_hermite: degree must be nonnegative");
    if (a <= 0) throw std::domain_error("q_hermite: a must be positive");
    Rational s = 0;
    for (long long m = 0; m <= ell; ++m)
        s += q_binomial(ctx, ell, m) * pow_rational(a, 2 * m - ell);
    return s;
}

// Weighted count of m-step oscillating tableaux ending at lam: the total
// L-weight sum over all admissible shape paths from the empty partition. At
// q = 0 every path has weight 1 and this is the plain count.
inline Rational q_count(const ParamContext& pc, int m, const Partition& lam) {
    if (m < 0) throw std::domain_error("q_count: m must be nonnegative");
    std::map<Partition, Rational> w{{Partition{}, 1}};
    for (int step = 0; step < m; ++step) {
        std::map<Partition, Rational> next;
        for (const auto& [mu, weight] : w)
            for (const Partition& nu : one_box_neighbors(mu, pc.n))
                next[nu] += weight * kernel_L(pc, mu, nu);
        w = std::move(next);
    }
    auto it = w.find(lam);
    return it != w.end() ? it->second : Rational(0);
}

/// One-box Pieri rule: Sp_lam * sum(a_i + a_i^{-1}) = sum of Sp over one-box
/// neighbors, swept over lam_1 <= lam_bound.
inline IdentityReport check_pieri(const ParamContext& pc, int lam_bound) {
    IdentityReport report{"pieri"};
    for (const Partition& lam : enumerate_lambda_n(pc.n, lam_bound)) {
        Rational lhs = sp_schur(pc, lam) * pc.normalizer();
        Rational rhs = 0;
        for (const Partition& mu : one_box_neighbors(lam, pc.n)) rhs += sp_schur(pc, mu);
        report.record(lam.str(), lhs, rhs);
    }
    return report;
}

/// L is diagonalized by the P functions: sum_mu L(lam, mu) P_mu equals the
/// normalizer times P_lam.
inline IdentityReport check_eigenrelation(const ParamContext& pc, int lam_bound) {
    IdentityReport report{"eigenrelation"};
    for (const Partition& lam : enumerate_lambda_n(pc.n, lam_bound)) {
        Rational lhs = 0;
        for (const Partition& mu : one_box_neighbors(lam, pc.n))
            lhs += kernel_L(pc, lam, mu) * p_function(pc, mu);
        report.record(lam.str(), lhs, pc.normalizer() * p_function(pc, lam));
    }
    return report;
}

/// Littlewood-type decomposition: (sum a_i + a_i^{-1})^m = sum_lam
/// q_count(m, lam) * p_function(lam). At q = 0 both factors degenerate to the
/// classic tableau/oscillating-tableau counts.
inline IdentityReport check_littlewood(const ParamContext& pc, int m) {
    IdentityReport report{"littlewood"};
    Rational lhs = pow_rational(pc.normalizer(), m);
    Rational rhs = 0;
    for (const Partition& lam : enumerate_lambda_n(pc.n, m)) {
        if (lam.weight() > m) continue;
        Rational qc = q_count(pc, m, lam);
        if (qc != 0) rhs += qc * p_function(pc, lam);
    }
    report.record("m=" + std::to_string(m), lhs, rhs);
    return report;
}

}  // namespace berele
