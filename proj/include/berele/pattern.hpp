#pragma once

#include "berele/partition.hpp"
#include "berele/tableau.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace berele {

// Symplectic Gelfand-Tsetlin pattern: 2n interlaced levels, levels 2l-1 and
// 2l carrying l entries each (zeros included; particle indices matter).
struct GtPattern {
    int n = 1;
    std::vector<std::vector<int>> levels;  // levels[k-1] has ceil(k/2) entries

    static GtPattern zero(int n) {
        GtPattern z{n, {}};
        z.levels.reserve(2 * n);
        for (int k = 1; k <= 2 * n; ++k)
            z.levels.emplace_back((k + 1) / 2, 0);
        return z;
    }

    /// 1-based entry z^level_i; absent indices read as 0.
    int entry(int level, int i) const {
        const auto& lv = levels[level - 1];
        return i <= static_cast<int>(lv.size()) ? lv[i - 1] : 0;
    }

    /// Canonical partition held by the bottom level.
    Partition shape() const { return Partition(levels.back()); }

    std::string str() const {
        std::string s;
        for (const auto& lv : levels) {
            s += "[";
            for (std::size_t i = 0; i < lv.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(lv[i]);
            }
            s += "]";
        }
        return s;
    }

    friend auto operator<=>(const GtPattern&, const GtPattern&) = default;
};

inline bool valid(const GtPattern& z) {
    if (z.n < 1 || static_cast<int>(z.levels.size()) != 2 * z.n) return false;
    for (int k = 1; k <= 2 * z.n; ++k) {
        const auto& lv = z.levels[k - 1];
        if (static_cast<int>(lv.size()) != (k + 1) / 2) return false;
        for (std::size_t i = 0; i < lv.size(); ++i) {
            if (lv[i] < 0) return false;
            if (i + 1 < lv.size() && lv[i] < lv[i + 1]) return false;
        }
    }
    // z^k ⪯ z^{k+1} positionally.
    for (int k = 1; k < 2 * z.n; ++k) {
        int len = (k + 1) / 2;
        for (int i = 1; i <= len; ++i) {
            if (z.entry(k + 1, i) < z.entry(k, i)) return false;
            if (z.entry(k, i) < z.entry(k + 1, i + 1)) return false;
        }
    }
    return true;
}

/// Level order(k) is the shape of the sub-tableau of entries <= k.
inline GtPattern tableau_to_pattern(const SymplecticTableau& t) {
    if (!validate(t)) throw std::domain_error("tableau_to_pattern: invalid tableau");
    GtPattern z = GtPattern::zero(t.n);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (const Letter& l : t.rows[r])
            for (int k = l.order(); k <= 2 * t.n; ++k)
                ++z.levels[k - 1][r];
    return z;
}

/// Inverse of tableau_to_pattern: row i gains z^k_i - z^{k-1}_i letters of
/// order k.
inline SymplecticTableau pattern_to_tableau(const GtPattern& z) {
    if (!valid(z)) throw std::domain_error("pattern_to_tableau: invalid pattern");
    SymplecticTableau t{z.n, {}};
    t.rows.resize(z.levels.back().size());
    for (int k = 1; k <= 2 * z.n; ++k) {
        Letter l = letter_of_order(k);
        for (int i = 1; i <= (k + 1) / 2; ++i) {
            int count = z.entry(k, i) - (k > 1 ? z.entry(k - 1, i) : 0);
            for (int c = 0; c < count; ++c) t.rows[i - 1].push_back(l);
        }
    }
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return t;
}

namespace detail {

enum class MoveDir { right, left };

// One step of the deterministic cascade: the pending move of particle idx at
// the given level, with the branch choice forced by the q=0 degeneration of
// the jump probabilities. Comparisons use the pre-move configuration.
inline void classic_cascade(GtPattern& z, int level, int idx, MoveDir dir) {
    const int delta = dir == MoveDir::right ? +1 : -1;
    if (level == 2 * z.n) {
        z.levels[level - 1][idx - 1] += delta;
        if (z.levels[level - 1][idx - 1] < 0)
            throw std::domain_error("classic_insert_pattern: particle moved below 0");
        return;
    }
    if (dir == MoveDir::right) {
        if (z.entry(level, idx) == z.entry(level + 1, idx)) {
            // Jump performed, lower neighbour pushed right.
            z.levels[level - 1][idx - 1] += 1;
            classic_cascade(z, level + 1, idx, MoveDir::right);
        } else if (level % 2 == 1 && idx == (level + 1) / 2) {
            // Diagonal: jump suppressed, lower neighbour pulled left. This is
            // the cancellation step of the tableau algorithm.
            classic_cascade(z, level + 1, idx, MoveDir::left);
        } else {
            z.levels[level - 1][idx - 1] += 1;
            classic_cascade(z, level + 1, idx + 1, MoveDir::right);
        }
    } else {
        int next = z.entry(level, idx) == z.entry(level + 1, idx + 1) ? idx + 1 : idx;
        z.levels[level - 1][idx - 1] -= 1;
        classic_cascade(z, level + 1, next, MoveDir::left);
    }
}

}  // namespace detail

// The deterministic particle dynamics of the insertion: an attempted right
// jump of z^{order(l)}_1 propagating level by level to the bottom.
inline GtPattern classic_insert_pattern(GtPattern z, Letter l) {
    if (!valid(z)) throw std::domain_error("classic_insert_pattern: invalid pattern");
    if (l.value < 1 || l.value > z.n)
        throw std::domain_error("classic_insert_pattern: letter outside the alphabet");
    detail::classic_cascade(z, l.order(), 1, detail::MoveDir::right);
    if (!valid(z)) throw std::logic_error("classic_insert_pattern: cascade broke interlacing");
    return z;
}

// All patterns with bottom level equal to the given shape, by chained
// interlacing enumeration from the bottom up. Deterministic order.
inline std::vector<GtPattern> enumerate_patterns(int n, const Partition& shape) {
    if (shape.length() > n)
        throw std::domain_error("enumerate_patterns: shape must lie in Lambda_n");
    std::vector<GtPattern> out;
    GtPattern z = GtPattern::zero(n);
    z.levels[2 * n - 1] = shape.padded(n);
    auto rec = [&](auto&& self, int level) -> void {
        if (level == 0) {
            out.push_back(z);
            return;
        }
        // Entries of level k range freely in [below_{i+1}, below_i].
        const auto& below = z.levels[level];
        int len = (level + 1) / 2;
        auto fill = [&](auto&& fill_self, int i) -> void {
            if (i > len) {
                self(self, level - 1);
                return;
            }
            int lo = i < static_cast<int>(below.size()) ? below[i] : 0;
            int hi = below[i - 1];
            for (int v = lo; v <= hi; ++v) {
                z.levels[level - 1][i - 1] = v;
                fill_self(fill_self, i + 1);
            }
        };
        fill(fill, 1);
    };
    rec(rec, 2 * n - 1);
    return out;
}

/// All symplectic tableaux of the given shape over [n, n̄], via the pattern
/// correspondence.
inline std::vector<SymplecticTableau> enumerate_tableaux(const Partition& shape, int n) {
    std::vector<SymplecticTableau> out;
    for (const GtPattern& z : enumerate_patterns(n, shape))
        out.push_back(pattern_to_tableau(z));
    return out;
}

}  // namespace berele
