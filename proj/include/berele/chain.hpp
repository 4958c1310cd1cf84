#pragma once

#include "berele/kernels.hpp"
#include "berele/partition.hpp"
#include "berele/pattern.hpp"
#include "berele/qinsert.hpp"
#include "berele/rational.hpp"
#include "berele/symfunc.hpp"
#include "berele/tableau.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berele {

// The letter law rho: rho(l) = a_l / sum(a_i + a_i^{-1}), barred letters
// carrying the inverse weight. Sums to 1 exactly.
struct LetterDistribution {
    std::vector<std::pair<Letter, Rational>> probs;

    explicit LetterDistribution(const ParamContext& pc) {
        Rational norm = pc.normalizer();
        for (int v = 1; v <= pc.n; ++v)
            for (bool barred : {false, true}) {
                Letter l{v, barred};
                probs.emplace_back(l, pc.a_letter(l) / norm);
            }
    }
};

// Seedable exact sampler: each uniform draw is the dyadic rational u / 2^64
// from one 64-bit output, compared exactly against cumulative probabilities.
class ExactSampler {
  public:
    explicit ExactSampler(std::uint64_t seed) : rng_(seed) {}

    Rational uniform() {
        Int num = rng_();
        return Rational(num, Int(1) << 64);
    }

    /// Picks an index by exact cumulative comparison; weights must sum to 1.
    template <typename T>
    const T& pick(const std::vector<std::pair<T, Rational>>& dist) {
        Rational u = uniform();
        Rational acc = 0;
        for (const auto& [value, p] : dist) {
            acc += p;
            if (u < acc) return value;
        }
        return dist.back().first;  // unreachable when weights sum to 1
    }

  private:
    std::mt19937_64 rng_;
};

/// m i.i.d. letters from rho.
inline std::vector<Letter> sample_word(const ParamContext& pc, int m, ExactSampler& sampler) {
    LetterDistribution rho(pc);
    std::vector<Letter> w;
    w.reserve(m);
    for (int i = 0; i < m; ++i) w.push_back(sampler.pick(rho.probs));
    return w;
}

struct Trajectory {
    std::vector<GtPattern> patterns;  // length m+1, starts at the zero pattern
    std::vector<Partition> shapes;    // bottom-level shapes along the way
};

/// Runs the randomized insertion of a fixed word, sampling one cascade
/// outcome per letter.
inline Trajectory simulate_word(const ParamContext& pc, const std::vector<Letter>& w,
                                ExactSampler& sampler) {
    Trajectory out;
    out.patterns.push_back(GtPattern::zero(pc.n));
    out.shapes.push_back(Partition{});
    for (Letter l : w) {
        PatternDistribution dist = insert_letter(pc.ctx, out.patterns.back(), l);
        std::vector<std::pair<GtPattern, Rational>> flat(dist.begin(), dist.end());
        GtPattern z = sampler.pick(flat);
        out.shapes.push_back(z.shape());
        out.patterns.push_back(std::move(z));
    }
    return out;
}

// Samples the word first (m draws), then the insertion branches, so the
// letter stream under a fixed seed is independent of q.
inline Trajectory simulate(const ParamContext& pc, int m, std::uint64_t seed) {
    if (m < 0) throw std::domain_error("simulate: m must be nonnegative");
    ExactSampler sampler(seed);
    std::vector<Letter> w = sample_word(pc, m, sampler);
    return simulate_word(pc, w, sampler);
}

/// Classic shape-chain step: Sp_lam / (normalizer * Sp_mu) on one-box moves.
inline Rational shape_kernel_classic(const ParamContext& pc, const Partition& mu,
                                     const Partition& lam) {
    std::vector<Partition> nbrs = one_box_neighbors(mu, pc.n);
    if (std::find(nbrs.begin(), nbrs.end(), lam) == nbrs.end()) return 0;
    return sp_schur(pc, lam) / (pc.normalizer() * sp_schur(pc, mu));
}

/// q-deformed shape-chain step: P_lam L(mu, lam) / (normalizer * P_mu).
inline Rational shape_kernel_q(const ParamContext& pc, const Partition& mu,
                               const Partition& lam) {
    Rational l = kernel_L(pc, mu, lam);
    if (l == 0) return 0;
    return p_function(pc, lam) * l / (pc.normalizer() * p_function(pc, mu));
}

/// h_n(x) = prod_l a_l^{-x_l} Sp_x, the harmonic function of the killed walk.
inline Rational doob_h(const ParamContext& pc, const Partition& x) {
    Rational h = sp_schur(pc, x);
    for (int i = 1; i <= pc.n; ++i) h *= pow_rational(pc.a[i - 1], -x.part(i));
    return h;
}

/// Killed-walk step: +e_l with prob rho(l), -e_l with prob rho(l-bar), mass
/// killed on moves leaving the partition cone.
inline Rational killed_walk_kernel(const ParamContext& pc, const Partition& mu,
                                   const Partition& lam) {
    Rational norm = pc.normalizer();
    Rational total = 0;
    for (int l = 1; l <= pc.n; ++l)
        for (int delta : {+1, -1})
            if (mu.can_bump(l, delta) && mu.bumped(l, delta) == lam)
                total += pow_rational(pc.a[l - 1], delta) / norm;
    return total;
}

// At q = 0 the shape chain is the Doob h-transform of the killed walk:
// (i) h_n is harmonic, (ii) Pi(mu, lam) = rho_hat(mu, lam) h(lam) / h(mu).
inline IdentityReport doob_decomposition_check(const ParamContext& pc, int bound) {
    if (pc.ctx.q != 0)
        throw std::domain_error("doob_decomposition_check: requires q = 0");
    IdentityReport report{"doob"};
    for (const Partition& mu : enumerate_lambda_n(pc.n, bound)) {
        Rational hmu = doob_h(pc, mu);
        Rational harmonic_sum = 0;
        for (const Partition& lam : one_box_neighbors(mu, pc.n)) {
            Rational rho_hat = killed_walk_kernel(pc, mu, lam);
            harmonic_sum += rho_hat * doob_h(pc, lam);
            report.record("factorization " + mu.str() + "->" + lam.str(),
                          shape_kernel_classic(pc, mu, lam),
                          rho_hat * doob_h(pc, lam) / hmu);
        }
        report.record("harmonic " + mu.str(), harmonic_sum, hmu);
    }
    return report;
}

/// nu(lam) = P_lam Q_m(lam) / normalizer^m, the exact law of the shape after
/// m insertions of rho-distributed letters.
inline std::map<Partition, Rational> exact_shape_law(const ParamContext& pc, int m) {
    std::map<Partition, Rational> nu;
    Rational denom = pow_rational(pc.normalizer(), m);
    for (const Partition& lam : enumerate_lambda_n(pc.n, m)) {
        if (lam.weight() > m) continue;
        Rational qc = q_count(pc, m, lam);
        if (qc != 0) nu[lam] = p_function(pc, lam) * qc / denom;
    }
    return nu;
}

struct EmpiricalReport {
    int m = 0;
    long long runs = 0;
    double tv_shape = 0;        // empirical final-shape law vs nu
    double tol_shape = 0;       // 3 * sqrt(support / runs)
    double tv_pattern = 0;      // empirical final-pattern law vs sum nu * K/P
    double tol_pattern = 0;

    bool pass() const { return tv_shape <= tol_shape && tv_pattern <= tol_pattern; }
};

// Monte-Carlo cross-check of the exact laws: runs independent simulations
// and compares the final shape and pattern frequencies with nu and with the
// nu-mixture of the conditional laws K_n(lam, .) / P_lam.
inline EmpiricalReport empirical_vs_exact(const ParamContext& pc, int m, long long runs,
                                          std::uint64_t seed) {
    if (runs < 1) throw std::domain_error("empirical_vs_exact: runs must be >= 1");
    std::map<Partition, long long> shape_counts;
    std::map<GtPattern, long long> pattern_counts;
    ExactSampler sampler(seed);
    for (long long r = 0; r < runs; ++r) {
        std::vector<Letter> w = sample_word(pc, m, sampler);
        Trajectory t = simulate_word(pc, w, sampler);
        ++shape_counts[t.shapes.back()];
        ++pattern_counts[t.patterns.back()];
    }

    std::map<Partition, Rational> nu = exact_shape_law(pc, m);
    std::map<GtPattern, Rational> pattern_law;
    for (const auto& [lam, p] : nu) {
        Rational plam = p_function(pc, lam);
        for (const GtPattern& z : enumerate_patterns(pc.n, lam))
            pattern_law[z] += p * kernel_K(pc, lam, z) / plam;
    }

    auto tv = [&](const auto& exact, const auto& counts) {
        double d = 0;
        auto keys = exact;
        for (const auto& [k, c] : counts) keys.emplace(k, 0);
        for (const auto& [k, unused] : keys) {
            double e = exact.count(k) ? static_cast<double>(exact.at(k)) : 0.0;
            double f = counts.count(k)
                           ? static_cast<double>(counts.at(k)) / static_cast<double>(runs)
                           : 0.0;
            d += std::abs(e - f);
        }
        return d / 2;
    };

    EmpiricalReport report;
    report.m = m;
    report.runs = runs;
    report.tv_shape = tv(nu, shape_counts);
    report.tol_shape = 3 * std::sqrt(static_cast<double>(nu.size()) / runs);
    report.tv_pattern = tv(pattern_law, pattern_counts);
    report.tol_pattern = 3 * std::sqrt(static_cast<double>(pattern_law.size()) / runs);
    return report;
}

// Exact Markovization of the shape process: for every shape path with
// positive phi mass, the path probability factorizes through the q-deformed
// shape kernel, and the conditional pattern law given the path is
// K_n(f^m, .) / P_{f^m}.
inline IdentityReport check_shape_markov(const ParamContext& pc, int m) {
    IdentityReport report{"shape-markov"};
    LetterDistribution rho(pc);
    // Joint law of (Z, f) under rho-random words: mix phi over words.
    std::map<std::pair<GtPattern, OscillatingTableau>, Rational> joint;
    joint[{GtPattern::zero(pc.n), OscillatingTableau{Partition{}}}] = 1;
    for (int step = 0; step < m; ++step) {
        std::map<std::pair<GtPattern, OscillatingTableau>, Rational> next;
        for (const auto& [key, weight] : joint) {
            const auto& [z, f] = key;
            for (const auto& [l, pl] : rho.probs)
                for (const auto& [z2, p] : insert_letter(pc.ctx, z, l)) {
                    OscillatingTableau f2 = f;
                    f2.push_back(z2.shape());
                    next[{z2, std::move(f2)}] += weight * pl * p;
                }
        }
        joint = std::move(next);
    }
    std::map<OscillatingTableau, Rational> path_law;
    for (const auto& [key, weight] : joint) path_law[key.second] += weight;
    for (const auto& [f, mass] : path_law) {
        Rational product = 1;
        for (std::size_t i = 1; i < f.size(); ++i)
            product *= shape_kernel_q(pc, f[i - 1], f[i]);
        std::string fstr;
        for (const Partition& p : f) fstr += p.str();
        report.record("path " + fstr, mass, product);
    }
    for (const auto& [key, weight] : joint) {
        const auto& [z, f] = key;
        const Partition lam = f.back();
        std::string fstr;
        for (const Partition& p : f) fstr += p.str();
        report.record("conditional " + fstr + " " + z.str(),
                      weight / path_law.at(f),
                      kernel_K(pc, lam, z) / p_function(pc, lam));
    }
    return report;
}

}  // namespace berele
