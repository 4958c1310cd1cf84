#pragma once

#include "berele/partition.hpp"
#include "berele/rational.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace berele {

// A letter of the ordered alphabet 1 < 1̄ < 2 < 2̄ < ... < n < n̄.
struct Letter {
    int value = 1;
    bool barred = false;

    /// Position in the alphabet: 2*value - 1 if unbarred, 2*value if barred.
    int order() const { return 2 * value - (barred ? 0 : 1); }

    friend bool operator==(const Letter& a, const Letter& b) = default;
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        return a.order() <=> b.order();
    }

    std::string str(bool ascii = false) const {
        std::string s = std::to_string(value);
        if (barred) s += ascii ? "'" : "\xCC\x84";  // combining macron
        return s;
    }
};

inline Letter letter_of_order(int ord) {
    if (ord < 1) throw std::domain_error("letter_of_order: order must be >= 1");
    return Letter{(ord + 1) / 2, ord % 2 == 0};
}

// Row-wise filling over [n, n̄]; rows are stored top to bottom.
struct SymplecticTableau {
    int n = 1;
    std::vector<std::vector<Letter>> rows;

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows.size());
        for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    friend bool operator==(const SymplecticTableau&, const SymplecticTableau&) = default;
    friend auto operator<=>(const SymplecticTableau&, const SymplecticTableau&) = default;
};

/// (S1) rows weakly increase, (S2) columns strictly increase,
/// (S3) no entry of order < order(i) in row i, plus shape validity.
inline bool validate(const SymplecticTableau& t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const Letter& l = row[c];
            if (l.value < 1 || l.value > t.n) return false;
            if (l.order() < 2 * static_cast<int>(r + 1) - 1) return false;  // (S3)
            if (c + 1 < row.size() && row[c + 1] < l) return false;         // (S1)
            if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
                !(l < t.rows[r + 1][c]))                                    // (S2)
                return false;
        }
    }
    return true;
}

// Sequence of shapes starting at the empty partition, consecutive shapes
// differing by exactly one box.
using OscillatingTableau = std::vector<Partition>;

inline bool is_oscillating(const OscillatingTableau& f, int n) {
    if (f.empty() || !f.front().empty()) return false;
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i].length() > n) return false;
        int diff = f[i].weight() - f[i - 1].weight();
        if (diff != 1 && diff != -1) return false;
        const Partition& big = diff == 1 ? f[i] : f[i - 1];
        const Partition& small = diff == 1 ? f[i - 1] : f[i];
        int mismatches = 0;
        for (int j = 1; j <= big.length(); ++j)
            if (big.part(j) != small.part(j)) ++mismatches;
        if (mismatches != 1) return false;
    }
    return true;
}

// A tableau with one designated empty cell; the entry stored at the hole is
// ignored.
struct PuncturedTableau {
    int n = 1;
    std::vector<std::vector<Letter>> rows;
    int hole_row = 0;
    int hole_col = 0;
};

inline bool validate(const PuncturedTableau& t) {
    if (t.hole_row < 0 || t.hole_row >= static_cast<int>(t.rows.size())) return false;
    if (t.hole_col < 0 || t.hole_col >= static_cast<int>(t.rows[t.hole_row].size())) return false;
    auto is_hole = [&](int r, int c) { return r == t.hole_row && c == t.hole_col; };
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (is_hole(r, c)) continue;
            const Letter& l = row[c];
            if (l.value < 1 || l.value > t.n) return false;
            if (c + 1 < row.size() && !is_hole(r, c + 1) && row[c + 1] < l) return false;
            if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
                !is_hole(r + 1, c) && !(l < t.rows[r + 1][c]))
                return false;
        }
    }
    return true;
}

// Slides the empty box (swap with the right neighbour when it is smaller than
// the one below, otherwise with the one below; single-neighbour convention)
// until it has no right/below neighbour, then deletes it.
inline SymplecticTableau jeu_de_taquin(PuncturedTableau t) {
    if (!validate(t)) throw std::domain_error("jeu_de_taquin: invalid punctured tableau");
    auto in_shape = [&](int r, int c) {
        return r >= 0 && r < static_cast<int>(t.rows.size()) &&
               c >= 0 && c < static_cast<int>(t.rows[r].size());
    };
    int r = t.hole_row, c = t.hole_col;
    for (;;) {
        bool has_right = in_shape(r, c + 1);
        bool has_below = in_shape(r + 1, c);
        if (!has_right && !has_below) break;
        bool take_right;
        if (has_right && has_below)
            take_right = t.rows[r][c + 1] < t.rows[r + 1][c];
        else
            take_right = has_right;
        if (take_right) {
            t.rows[r][c] = t.rows[r][c + 1];
            ++c;
        } else {
            t.rows[r][c] = t.rows[r + 1][c];
            ++r;
        }
    }
    // The hole has reached an outer corner; close it.
    SymplecticTableau out{t.n, std::move(t.rows)};
    out.rows[r].pop_back();
    if (out.rows[r].empty()) out.rows.erase(out.rows.begin() + r);
    return out;
}

struct InsertResult {
    SymplecticTableau tableau;
    Partition shape;
};

// Row bumping from row 1. Inserting an unbarred k into row k that bumps k̄
// erases both; the vacated cell becomes the empty box and jeu de taquin runs.
inline InsertResult berele_insert(const SymplecticTableau& t, Letter l) {
    if (!validate(t)) throw std::domain_error("berele_insert: invalid tableau");
    if (l.value < 1 || l.value > t.n)
        throw std::domain_error("berele_insert: letter outside the alphabet");
    SymplecticTableau out = t;
    Letter cur = l;
    for (std::size_t r = 0;; ++r) {
        if (r == out.rows.size()) {
            out.rows.push_back({cur});
            break;
        }
        auto& row = out.rows[r];
        std::size_t j = 0;
        while (j < row.size() && !(cur < row[j])) ++j;
        if (j == row.size()) {
            row.push_back(cur);
            break;
        }
        Letter bumped = row[j];
        if (!cur.barred && cur.value == static_cast<int>(r + 1) &&
            bumped == Letter{cur.value, true}) {
            // Cancellation: neither letter is placed; the bumped cell is the
            // jeu de taquin start.
            PuncturedTableau punctured{out.n, std::move(out.rows),
                                       static_cast<int>(r), static_cast<int>(j)};
            out = jeu_de_taquin(std::move(punctured));
            break;
        }
        row[j] = cur;
        cur = bumped;
    }
    Partition shape = out.shape();
    return {std::move(out), std::move(shape)};
}

struct WordResult {
    SymplecticTableau tableau;
    OscillatingTableau recording;
};

/// Folds berele_insert from the empty tableau, recording the shape sequence.
inline WordResult berele_word(const std::vector<Letter>& w, int n) {
    WordResult out{SymplecticTableau{n, {}}, {Partition{}}};
    for (Letter l : w) {
        InsertResult step = berele_insert(out.tableau, l);
        out.tableau = std::move(step.tableau);
        out.recording.push_back(std::move(step.shape));
    }
    return out;
}

/// a^P = prod_l a_l^{#l's - #l̄'s}.
inline Rational tableau_weight(const SymplecticTableau& t, std::span<const Rational> a) {
    if (static_cast<int>(a.size()) != t.n)
        throw std::domain_error("tableau_weight: need one a_i per alphabet value");
    for (const Rational& ai : a)
        if (ai <= 0) throw std::domain_error("tableau_weight: a_i must be positive");
    std::vector<long long> exponent(t.n, 0);
    for (const auto& row : t.rows)
        for (const Letter& l : row) exponent[l.value - 1] += l.barred ? -1 : +1;
    Rational w = 1;
    for (int i = 0; i < t.n; ++i) w *= pow_rational(a[i], exponent[i]);
    return w;
}

}  // namespace berele
