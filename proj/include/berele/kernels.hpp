#pragma once

#include "berele/partition.hpp"
#include "berele/pattern.hpp"
#include "berele/qanalog.hpp"
#include "berele/qinsert.hpp"
#include "berele/rational.hpp"
#include "berele/tableau.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berele {

// Shared parameters: rank n, positive weights a_1..a_n, and the q context.
// A barred letter l̄ carries weight a_l^{-1}.
struct ParamContext {
    int n;
    std::vector<Rational> a;
    QContext ctx;

    ParamContext(int n_, std::vector<Rational> a_, QContext ctx_)
        : n(n_), a(std::move(a_)), ctx(std::move(ctx_)) {
        if (n < 1) throw std::domain_error("ParamContext: n must be >= 1");
        if (static_cast<int>(a.size()) != n)
            throw std::domain_error("ParamContext: need exactly n weights");
        for (const Rational& ai : a)
            if (ai <= 0) throw std::domain_error("ParamContext: a_i must be positive");
    }

    Rational a_letter(Letter l) const {
        if (l.value < 1 || l.value > n)
            throw std::domain_error("ParamContext: letter outside the alphabet");
        return l.barred ? 1 / a[l.value - 1] : a[l.value - 1];
    }

    /// sum of a_i + a_i^{-1} over the alphabet.
    Rational normalizer() const {
        Rational s = 0;
        for (const Rational& ai : a) s += ai + 1 / ai;
        return s;
    }
};

/// u^+_{dim,i}(lam): 1 for i = 1, else 1 - q^{lam_{i-1} - lam_i}.
inline Rational u_plus(const QContext& ctx, int dim, int i, const Partition& lam) {
    if (i < 1 || i > dim) throw std::domain_error("u_plus: index out of range");
    if (i == 1) return 1;
    return 1 - ctx.qpow(lam.part(i - 1) - lam.part(i));
}

/// u^-_{dim,i}(lam): 1 - q^{lam_i - lam_{i+1}} for i < dim, 1 - q^{lam_dim} at i = dim.
inline Rational u_minus(const QContext& ctx, int dim, int i, const Partition& lam) {
    if (i < 1 || i > dim) throw std::domain_error("u_minus: index out of range");
    if (i == dim) return 1 - ctx.qpow(lam.part(dim));
    return 1 - ctx.qpow(lam.part(i) - lam.part(i + 1));
}

// One-box transition weight on Lambda_dim: u^+_{dim,i}(lam) if mu = lam+e_i,
// u^-_{dim,i}(lam) if mu = lam-e_i, 0 otherwise. The u factors vanish exactly
// on the targets that fail to be partitions.
inline Rational kernel_L_dim(const QContext& ctx, int dim, const Partition& lam,
                             const Partition& mu) {
    if (lam.length() > dim || mu.length() > dim)
        throw std::domain_error("kernel_L_dim: partitions must lie in Lambda_dim");
    int idx = 0, delta = 0, diffs = 0;
    for (int i = 1; i <= dim; ++i) {
        int d = mu.part(i) - lam.part(i);
        if (d == 0) continue;
        ++diffs;
        idx = i;
        delta = d;
    }
    if (diffs != 1 || (delta != 1 && delta != -1)) return 0;
    return delta == 1 ? u_plus(ctx, dim, idx, lam) : u_minus(ctx, dim, idx, lam);
}

inline Rational kernel_L(const ParamContext& pc, const Partition& lam, const Partition& mu) {
    return kernel_L_dim(pc.ctx, pc.n, lam, mu);
}

/// kappa_n(Z): the triple product of q-binomials over the pattern levels.
inline Rational kappa(const ParamContext& pc, const GtPattern& z) {
    if (!valid(z) || z.n != pc.n) throw std::domain_error("kappa: invalid pattern");
    const QContext& q = pc.ctx;
    Rational result = 1;
    for (int k = 1; k <= pc.n; ++k) {
        for (int i = 1; i <= k - 1; ++i) {
            result *= q_binomial(q, z.entry(2 * k - 1, i) - z.entry(2 * k - 1, i + 1),
                                 z.entry(2 * k - 1, i) - z.entry(2 * k - 2, i));
            result *= q_binomial(q, z.entry(2 * k, i) - z.entry(2 * k, i + 1),
                                 z.entry(2 * k, i) - z.entry(2 * k - 1, i));
        }
        result *= q_binomial(q, z.entry(2 * k, k),
                             z.entry(2 * k, k) - z.entry(2 * k - 1, k));
    }
    return result;
}

/// a^Z = prod_i a_i^{2|z^{2i-1}| - |z^{2i}| - |z^{2i-2}|} with |z^0| = 0.
inline Rational pattern_monomial(const ParamContext& pc, const GtPattern& z) {
    if (!valid(z) || z.n != pc.n) throw std::domain_error("pattern_monomial: invalid pattern");
    auto level_sum = [&](int k) {
        if (k == 0) return 0LL;
        long long s = 0;
        for (int v : z.levels[k - 1]) s += v;
        return s;
    };
    Rational result = 1;
    for (int i = 1; i <= pc.n; ++i) {
        long long e = 2 * level_sum(2 * i - 1) - level_sum(2 * i) - level_sum(2 * i - 2);
        result *= pow_rational(pc.a[i - 1], e);
    }
    return result;
}

/// K_n(lam, Z) = a^Z kappa_n(Z) 1_{z^{2n} = lam}.
inline Rational kernel_K(const ParamContext& pc, const Partition& lam, const GtPattern& z) {
    if (z.shape() != lam) return 0;
    return pattern_monomial(pc, z) * kappa(pc, z);
}

/// M_n(Z, Z2) = sum over letters l of a_l I_l(Z, Z2).
inline Rational kernel_M(const ParamContext& pc, const GtPattern& z, const GtPattern& z2) {
    Rational result = 0;
    for (int v = 1; v <= pc.n; ++v) {
        for (bool barred : {false, true}) {
            Letter l{v, barred};
            PatternDistribution dist = insert_letter(pc.ctx, z, l);
            auto it = dist.find(z2);
            if (it != dist.end()) result += pc.a_letter(l) * it->second;
        }
    }
    return result;
}

// The bottom three levels (z^{2n-2}, z^{2n-1}, z^{2n}) of a rank-n pattern,
// viewed as an interlaced triple x ⪯ y ⪯ z.
struct BottomTriple {
    Partition x;
    Partition y;
    Partition z;

    auto operator<=>(const BottomTriple&) const = default;

    std::string str() const { return x.str() + y.str() + z.str(); }
};

inline bool triple_valid(const BottomTriple& t, int n) {
    return t.x.length() <= n - 1 && t.y.length() <= n && t.z.length() <= n &&
           interlaces(t.x, t.y) && interlaces(t.y, t.z);
}

/// kappa restricted to the bottom three levels.
inline Rational kappa_hat(const QContext& q, int n, const BottomTriple& t) {
    Rational result = 1;
    for (int i = 1; i <= n - 1; ++i) {
        result *= q_binomial(q, t.z.part(i) - t.z.part(i + 1), t.z.part(i) - t.y.part(i));
        result *= q_binomial(q, t.y.part(i) - t.y.part(i + 1), t.y.part(i) - t.x.part(i));
    }
    result *= q_binomial(q, t.z.part(n), t.z.part(n) - t.y.part(n));
    return result;
}

/// hat K_n(z~, (x,y,z)) = a_n^{2|y|-|x|-|z|} kappa_hat(x,y,z) 1_{z = z~}.
inline Rational hat_K(const ParamContext& pc, const Partition& ztilde, const BottomTriple& t) {
    if (!triple_valid(t, pc.n)) throw std::domain_error("hat_K: triple not interlaced");
    if (t.z != ztilde) return 0;
    long long e = 2LL * t.y.weight() - t.x.weight() - t.z.weight();
    return pow_rational(pc.a[pc.n - 1], e) * kappa_hat(pc.ctx, pc.n, t);
}

namespace detail {

// Classifies d = to - from as 0 (idx 0) or +/- a unit vector. Returns false
// if the difference is anything else.
inline bool unit_diff(const Partition& from, const Partition& to, int dim, int& idx, int& sign) {
    idx = 0;
    sign = 0;
    int diffs = 0;
    for (int i = 1; i <= dim; ++i) {
        int d = to.part(i) - from.part(i);
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        ++diffs;
        idx = i;
        sign = d;
    }
    return diffs <= 1;
}

}  // namespace detail

// One-step transition weight on interlaced triples: the tabulated product of
// the response probabilities r/l and the one-box weights u^{+/-} of the top
// coordinate. Zero off the listed targets.
inline Rational hat_M(const ParamContext& pc, const BottomTriple& t, const BottomTriple& t2) {
    const int n = pc.n;
    if (!triple_valid(t, n) || !triple_valid(t2, n))
        throw std::domain_error("hat_M: triple not interlaced");
    const QContext& q = pc.ctx;
    const Rational an = pc.a[n - 1];

    if (n == 1) {
        // Rank one: x is empty and the kernel reduces to the two-entry case.
        int dy = t2.y.part(1) - t.y.part(1);
        int dz = t2.z.part(1) - t.z.part(1);
        InterlacedPair zy{t.y, t.z};
        if (dy == 1 && dz == 1) return an * r_prob(q, zy, 1);
        if (dy == 0 && dz == -1) return an * (1 - r_prob(q, zy, 1));
        if (dy == 0 && dz == 1) return 1 / an;
        return 0;
    }

    int ix, sx, iy, sy, iz, sz;
    if (!detail::unit_diff(t.x, t2.x, n - 1, ix, sx)) return 0;
    if (!detail::unit_diff(t.y, t2.y, n, iy, sy)) return 0;
    if (!detail::unit_diff(t.z, t2.z, n, iz, sz)) return 0;

    InterlacedPair yx{t.x, t.y};  // grow pair, x above
    InterlacedPair zy{t.y, t.z};  // same-length pair, y above

    if (sx == 1) {
        const int i = ix;
        Rational up = u_plus(q, n - 1, i, t.x);
        if (sy == 1 && iy == i) {
            if (sz == 1 && iz == i) return r_prob(q, yx, i) * r_prob(q, zy, i) * up;
            if (sz == 1 && iz == i + 1) return r_prob(q, yx, i) * (1 - r_prob(q, zy, i)) * up;
            return 0;
        }
        if (sy == 1 && iy == i + 1) {
            if (sz == 1 && iz == i + 1)
                return (1 - r_prob(q, yx, i)) * r_prob(q, zy, i + 1) * up;
            if (sz == 1 && iz == i + 2 && i <= n - 2)
                return (1 - r_prob(q, yx, i)) * (1 - r_prob(q, zy, i + 1)) * up;
            return 0;
        }
        if (sy == 0 && i == n - 1 && sz == -1 && iz == n)
            return (1 - r_prob(q, yx, n - 1)) * (1 - r_prob(q, zy, n)) * up;
        return 0;
    }
    if (sx == 0) {
        if (sy == 1 && iy == 1) {
            if (sz == 1 && iz == 1) return an * r_prob(q, zy, 1);
            if (sz == 1 && iz == 2) return an * (1 - r_prob(q, zy, 1));
            return 0;
        }
        if (sy == 0 && sz == 1 && iz == 1) return 1 / an;
        return 0;
    }
    // sx == -1
    {
        const int i = ix;
        Rational um = u_minus(q, n - 1, i, t.x);
        if (sy == -1 && iy == i) {
            if (sz == -1 && iz == i) return (1 - l_prob(q, yx, i)) * (1 - l_prob(q, zy, i)) * um;
            if (sz == -1 && iz == i + 1) return (1 - l_prob(q, yx, i)) * l_prob(q, zy, i) * um;
            return 0;
        }
        if (sy == -1 && iy == i + 1 && i <= n - 2) {
            if (sz == -1 && iz == i + 1) return l_prob(q, yx, i) * (1 - l_prob(q, zy, i + 1)) * um;
            if (sz == -1 && iz == i + 2) return l_prob(q, yx, i) * l_prob(q, zy, i + 1) * um;
            return 0;
        }
        if (i == n - 1 && sy == -1 && iy == n && sz == -1 && iz == n)
            return l_prob(q, yx, n - 1) * um;
        return 0;
    }
}

/// Every partition p with at most max_len parts interlacing above `lower`,
/// i.e. p ⪯ lower positionally.
inline std::vector<Partition> enumerate_interlacing(const Partition& lower, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur(max_len, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > max_len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lower.part(i + 1); v <= lower.part(i); ++v) {
            cur[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

struct IntertwineFailure {
    std::string lambda;
    std::string target;
    Rational lhs;
    Rational rhs;
};

struct IntertwineReport {
    long long checked = 0;
    std::vector<IntertwineFailure> failures;

    bool pass() const { return failures.empty(); }
};

// Checks (K_n M_n)(lam, Z~) = L_n(lam, shape(Z~)) K_n(shape(Z~), Z~) for
// every lam with lam_1 <= shape_bound and every target pattern reachable from
// the support of K_n(lam, .) or charged by the right-hand side.
inline IntertwineReport verify_intertwining_full(const ParamContext& pc, int shape_bound) {
    IntertwineReport report;
    for (const Partition& lam : enumerate_lambda_n(pc.n, shape_bound)) {
        std::map<GtPattern, Rational> lhs;
        for (const GtPattern& z : enumerate_patterns(pc.n, lam)) {
            Rational k = kernel_K(pc, lam, z);
            for (int v = 1; v <= pc.n; ++v) {
                for (bool barred : {false, true}) {
                    Letter l{v, barred};
                    Rational al = pc.a_letter(l);
                    for (const auto& [z2, p] : insert_letter(pc.ctx, z, l))
                        lhs[z2] += k * al * p;
                }
            }
        }
        std::map<GtPattern, Rational> rhs;
        for (const Partition& mu : one_box_neighbors(lam, pc.n)) {
            Rational lval = kernel_L(pc, lam, mu);
            for (const GtPattern& z2 : enumerate_patterns(pc.n, mu))
                rhs[z2] = lval * kernel_K(pc, mu, z2);
        }
        std::map<GtPattern, Rational> targets = lhs;
        for (const auto& [z2, v] : rhs) targets.emplace(z2, 0);
        for (const auto& [z2, unused] : targets) {
            Rational l = lhs.count(z2) ? lhs.at(z2) : Rational(0);
            Rational r = rhs.count(z2) ? rhs.at(z2) : Rational(0);
            ++report.checked;
            if (l != r) report.failures.push_back({lam.str(), z2.str(), l, r});
        }
    }
    return report;
}

// The same identity for the bottom-triple kernels: (hat K_n hat M_n) =
// (L_n hat K_n) over all triples with z_1 <= shape_bound.
inline IntertwineReport verify_intertwining_hat(const ParamContext& pc, int shape_bound) {
    IntertwineReport report;
    for (const Partition& zbot : enumerate_lambda_n(pc.n, shape_bound)) {
        std::map<BottomTriple, Rational> lhs;
        for (const Partition& y : enumerate_interlacing(zbot, pc.n)) {
            for (const Partition& x : enumerate_interlacing(y, pc.n - 1)) {
                BottomTriple t{x, y, zbot};
                Rational k = hat_K(pc, zbot, t);
                if (k == 0) continue;
                // Candidate targets: every triple obtained by shifting each
                // coordinate by at most one box.
                auto shifts = [](const Partition& p, int dim) {
                    std::vector<Partition> out{p};
                    for (int i = 1; i <= dim; ++i)
                        for (int d : {+1, -1})
                            if (p.can_bump(i, d)) out.push_back(p.bumped(i, d));
                    return out;
                };
                for (const Partition& x2 : shifts(x, pc.n - 1)) {
                    for (const Partition& y2 : shifts(y, pc.n)) {
                        for (const Partition& z2 : shifts(zbot, pc.n)) {
                            BottomTriple t2{x2, y2, z2};
                            if (!triple_valid(t2, pc.n)) continue;
                            Rational m = hat_M(pc, t, t2);
                            if (m != 0) lhs[t2] += k * m;
                        }
                    }
                }
            }
        }
        std::map<BottomTriple, Rational> rhs;
        for (const Partition& z2 : one_box_neighbors(zbot, pc.n)) {
            Rational lval = kernel_L(pc, zbot, z2);
            for (const Partition& y2 : enumerate_interlacing(z2, pc.n))
                for (const Partition& x2 : enumerate_interlacing(y2, pc.n - 1)) {
                    BottomTriple t2{x2, y2, z2};
                    rhs[t2] = lval * hat_K(pc, z2, t2);
                }
        }
        std::map<BottomTriple, Rational> targets = lhs;
        for (const auto& [t2, v] : rhs) targets.emplace(t2, 0);
        for (const auto& [t2, unused] : targets) {
            Rational l = lhs.count(t2) ? lhs.at(t2) : Rational(0);
            Rational r = rhs.count(t2) ? rhs.at(t2) : Rational(0);
            ++report.checked;
            if (l != r) report.failures.push_back({zbot.str(), t2.str(), l, r});
        }
    }
    return report;
}

/// Runs both intertwining sweeps and merges the reports.
inline IntertwineReport verify_intertwining(const ParamContext& pc, int shape_bound) {
    IntertwineReport full = verify_intertwining_full(pc, shape_bound);
    IntertwineReport hat = verify_intertwining_hat(pc, shape_bound);
    full.checked += hat.checked;
    full.failures.insert(full.failures.end(), hat.failures.begin(), hat.failures.end());
    return full;
}

}  // namespace berele
