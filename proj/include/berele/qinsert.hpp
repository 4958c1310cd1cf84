#pragma once

#include "berele/partition.hpp"
#include "berele/pattern.hpp"
#include "berele/qanalog.hpp"
#include "berele/rational.hpp"
#include "berele/tableau.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace berele {

// Two adjacent pattern levels: x above, y below, interlaced positionally with
// the conventions x_0 = +infinity and x_{len+1} = 0. y has the same number of
// positions as x or one more.
struct InterlacedPair {
    Partition x;
    Partition y;

    bool valid() const { return interlaces(x, y); }
};

/// Probability that a right jump of y_i is answered by a push of x ... the
/// rightward response weight r_i(y; x) = q^{y_i-x_i}(1-q^{x_{i-1}-y_i})/(1-q^{x_{i-1}-x_i}).
inline Rational r_prob(const QContext& ctx, const InterlacedPair& pair, int i) {
    if (!pair.valid()) throw std::domain_error("r_prob: pair is not interlaced");
    if (i < 1) throw std::domain_error("r_prob: index must be >= 1");
    // x_0 = infinity: both q^{x_0 - .} factors are 0, leaving q^{y_1 - x_1}.
    if (i == 1) return ctx.qpow(pair.y.part(1) - pair.x.part(1));
    int xm = pair.x.part(i - 1), xi = pair.x.part(i), yi = pair.y.part(i);
    if (xm == xi) return 1;  // interlacing forces y_i = x_i; the 0/0 limit is 1
    return ctx.qpow(yi - xi) * (1 - ctx.qpow(xm - yi)) / (1 - ctx.qpow(xm - xi));
}

/// Leftward response weight l_i(y; x) = q^{x_i-y_{i+1}}(1-q^{y_{i+1}-x_{i+1}})/(1-q^{x_i-x_{i+1}}).
inline Rational l_prob(const QContext& ctx, const InterlacedPair& pair, int i) {
    if (!pair.valid()) throw std::domain_error("l_prob: pair is not interlaced");
    if (i < 1) throw std::domain_error("l_prob: index must be >= 1");
    int xi = pair.x.part(i), xp = pair.x.part(i + 1), yn = pair.y.part(i + 1);
    if (xi == xp) return 1;  // interlacing forces y_{i+1} = x_i
    return ctx.qpow(xi - yn) * (1 - ctx.qpow(yn - xp)) / (1 - ctx.qpow(xi - xp));
}

// Exact finite distribution over patterns, keyed canonically.
using PatternDistribution = std::map<GtPattern, Rational>;

namespace detail {

inline InterlacedPair level_pair(const GtPattern& z, int level) {
    return InterlacedPair{Partition(z.levels[level - 1]), Partition(z.levels[level])};
}

// Branching version of classic_cascade: every positive-probability branch is
// explored and its weight accumulated. Probabilities are evaluated on the
// configuration before either level moves.
inline void q_cascade(const QContext& ctx, GtPattern z, int level, int idx, MoveDir dir,
                      Rational weight, PatternDistribution& out) {
    const int delta = dir == MoveDir::right ? +1 : -1;
    if (level == 2 * z.n) {
        z.levels[level - 1][idx - 1] += delta;
        if (z.levels[level - 1][idx - 1] < 0)
            throw std::logic_error("insert_letter: particle moved below 0");
        out[std::move(z)] += std::move(weight);
        return;
    }
    if (dir == MoveDir::right) {
        Rational r = r_prob(ctx, level_pair(z, level), idx);
        if (level % 2 == 1 && idx == (level + 1) / 2) {
            // Diagonal of an odd level: the jump itself is randomized. When
            // suppressed, the lower neighbour is pulled left instead.
            if (r != 0) {
                GtPattern moved = z;
                moved.levels[level - 1][idx - 1] += 1;
                q_cascade(ctx, std::move(moved), level + 1, idx, MoveDir::right,
                          weight * r, out);
            }
            if (r != 1)
                q_cascade(ctx, std::move(z), level + 1, idx, MoveDir::left,
                          weight * (1 - r), out);
        } else {
            // Off-diagonal right jumps are always performed; the lower
            // neighbour is pushed right (same index) or pulled right (next).
            z.levels[level - 1][idx - 1] += 1;
            if (r != 0)
                q_cascade(ctx, z, level + 1, idx, MoveDir::right, weight * r, out);
            if (r != 1)
                q_cascade(ctx, std::move(z), level + 1, idx + 1, MoveDir::right,
                          weight * (1 - r), out);
        }
    } else {
        Rational l = l_prob(ctx, level_pair(z, level), idx);
        z.levels[level - 1][idx - 1] -= 1;
        if (z.levels[level - 1][idx - 1] < 0)
            throw std::logic_error("insert_letter: particle moved below 0");
        if (l != 0)
            q_cascade(ctx, z, level + 1, idx + 1, MoveDir::left, weight * l, out);
        if (l != 1)
            q_cascade(ctx, std::move(z), level + 1, idx, MoveDir::left,
                      weight * (1 - l), out);
    }
}

}  // namespace detail

// One-letter insertion kernel I_l(z, .): the exact outcome distribution of
// the randomized cascade started by an attempted right jump of z^{order(l)}_1.
inline PatternDistribution insert_letter(const QContext& ctx, const GtPattern& z, Letter l) {
    if (!valid(z)) throw std::domain_error("insert_letter: invalid pattern");
    if (l.value < 1 || l.value > z.n)
        throw std::domain_error("insert_letter: letter outside the alphabet");
    PatternDistribution out;
    detail::q_cascade(ctx, z, l.order(), 1, detail::MoveDir::right, 1, out);
    for (const auto& [zz, p] : out)
        if (!valid(zz)) throw std::logic_error("insert_letter: cascade broke interlacing");
    return out;
}

// Joint weight table over (final pattern, shape history of the bottom level).
using WeightTable = std::map<std::pair<GtPattern, OscillatingTableau>, Rational>;

/// Inserts w letter by letter, tracking the exact joint law of the pattern
/// and the recorded bottom-level shapes.
inline WeightTable phi_word(const QContext& ctx, const std::vector<Letter>& w, int n) {
    WeightTable table;
    table[{GtPattern::zero(n), OscillatingTableau{Partition{}}}] = 1;
    for (Letter l : w) {
        WeightTable next;
        for (const auto& [key, weight] : table) {
            const auto& [z, f] = key;
            for (const auto& [z2, p] : insert_letter(ctx, z, l)) {
                OscillatingTableau f2 = f;
                f2.push_back(z2.shape());
                next[{z2, std::move(f2)}] += weight * p;
            }
        }
        table = std::move(next);
    }
    return table;
}

}  // namespace berele
