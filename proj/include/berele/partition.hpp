#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace berele {

// A partition: weakly decreasing nonnegative integers, stored without
// trailing zeros. part(i) is 1-based and reads absent indices as 0.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::domain_error("Partition: parts must be weakly decreasing and nonnegative");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int part(int i) const {  // 1-based
        if (i < 1) throw std::domain_error("Partition::part: index must be >= 1");
        return i <= static_cast<int>(parts_.size()) ? parts_[i - 1] : 0;
    }

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    const std::vector<int>& parts() const { return parts_; }

    /// parts zero-padded to the given length.
    std::vector<int> padded(int len) const {
        std::vector<int> out(parts_.begin(), parts_.end());
        out.resize(std::max<std::size_t>(out.size(), len), 0);
        return out;
    }

    /// p +/- e_i if the result is a partition, otherwise nullopt-like failure.
    bool can_bump(int i, int delta) const {
        int v = part(i) + delta;
        if (v < 0) return false;
        if (i > 1 && v > part(i - 1)) return false;
        if (v < part(i + 1)) return false;
        return true;
    }

    Partition bumped(int i, int delta) const {
        if (!can_bump(i, delta))
            throw std::domain_error("Partition::bumped: result is not a partition");
        std::vector<int> p = padded(i);
        p[i - 1] += delta;
        return Partition(std::move(p));
    }

    std::string str() const {
        if (parts_.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/// Dominance order: prefix sums of p weakly exceed those of r.
inline bool dominates(const Partition& p, const Partition& r) {
    int sp = 0, sr = 0;
    int len = std::max(p.length(), r.length());
    for (int i = 1; i <= len; ++i) {
        sp += p.part(i);
        sr += r.part(i);
        if (sp < sr) return false;
    }
    return true;
}

/// mu interlaces lam (mu ⪯ lam): lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
inline bool interlaces(const Partition& mu, const Partition& lam) {
    int len = std::max(mu.length(), lam.length());
    for (int i = 1; i <= len; ++i) {
        if (lam.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lam.part(i + 1)) return false;
    }
    return true;
}

/// All partitions in Lambda_n differing from p by one box, sorted.
inline std::vector<Partition> one_box_neighbors(const Partition& p, int n) {
    if (p.length() > n)
        throw std::domain_error("one_box_neighbors: partition has more than n parts");
    std::vector<Partition> out;
    for (int i = 1; i <= n; ++i) {
        for (int delta : {+1, -1}) {
            if (p.can_bump(i, delta)) {
                Partition q = p.bumped(i, delta);
                if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All partitions with length <= n and first part <= max_first_part, graded by
// length and lexicographic within a grade, so sweeps and golden files are
// stable.
inline std::vector<Partition> enumerate_lambda_n(int n, int max_first_part) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 1; v <= cap; ++v) {
            cur.push_back(v);
            self(self, remaining - 1, v);
            cur.pop_back();
        }
    };
    for (int len = 1; len <= n; ++len) {
        std::size_t start = out.size();
        rec(rec, len, max_first_part);
        std::sort(out.begin() + start, out.end());
    }
    return out;
}

}  // namespace berele
