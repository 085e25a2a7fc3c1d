#pragma once

// Integer partitions and the combinatorics the rest of the library is
// indexed by: dominance, conjugation, p-adic layers, beta-numbers/abacus
// (rim-hook removal, cores and quotients).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace youngcoho {

/// Largest partition size accepted by the parser and enumerators.
inline constexpr int kMaxPartitionSize = 64;

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so equality is structural.
class Partition {
public:
    Partition() = default;

    /// Accepts any weakly decreasing nonnegative sequence; zeros are dropped.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidArgument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts an arbitrary composition into a partition.
    static Partition from_composition(std::vector<int> parts) {
        for (int x : parts)
            if (x < 0) throw InvalidArgument("composition parts must be nonnegative");
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// (k^m): m parts all equal to k.
    static Partition rectangle(int k, int m) {
        if (k == 0 || m == 0) return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(m), k));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Lexicographic comparison on parts (zero-padded). For partitions of the
    /// same integer this is a linear extension of dominance.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        const std::size_t n = std::max(a.parts_.size(), b.parts_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    /// Text form "4,1,1"; the empty partition is "0".
    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    /// Compact exponent notation, e.g. "3,1^3".
    std::string to_pretty() const {
        if (parts_.empty()) return "()";
        std::string s;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (!s.empty()) s += ',';
            s += std::to_string(parts_[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    /// Parses "4,1,1" (spaces tolerated) or "0" for the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::string token;
        auto flush = [&]() {
            if (token.empty()) throw InvalidArgument("malformed partition: '" + std::string(text) + "'");
            for (char c : token)
                if (c < '0' || c > '9') throw InvalidArgument("malformed partition: '" + std::string(text) + "'");
            if (token.size() > 3) throw InvalidArgument("partition part too large: " + token);
            parts.push_back(std::stoi(token));
            token.clear();
        };
        for (char c : text) {
            if (c == ' ' || c == '\t') continue;
            if (c == ',') {
                flush();
            } else {
                token += c;
            }
        }
        flush();
        if (parts.size() == 1 && parts[0] == 0) return {};
        for (int x : parts)
            if (x == 0) throw InvalidArgument("partition parts must be positive: '" + std::string(text) + "'");
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1])
                throw InvalidArgument("partition parts must be weakly decreasing: '" + std::string(text) + "'");
        Partition out(std::move(parts));
        if (out.size() > kMaxPartitionSize)
            throw InvalidArgument("partition size exceeds configured cap of " + std::to_string(kMaxPartitionSize));
        return out;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int r : parts_)
                for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(c));
    }

    Partition scaled(int k) const {
        std::vector<int> c = parts_;
        for (int& x : c) x *= k;
        return Partition(std::move(c));
    }

    /// Part-wise sum (both sequences zero-padded).
    friend Partition operator+(const Partition& a, const Partition& b) {
        std::vector<int> c(std::max(a.parts_.size(), b.parts_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return Partition(std::move(c));
    }

    /// True when the diagram of this partition contains that of `other`.
    bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (std::size_t i = 0; i < other.parts_.size(); ++i)
            if (other.parts_[i] > parts_[i]) return false;
        return true;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.to_string() << ")"; }

/// All partitions of n in strictly descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidArgument("cannot partition a negative integer");
    if (n > kMaxPartitionSize) throw InvalidArgument("partition size exceeds configured cap");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Shared, cached copy of partitions_of(n).
inline const std::vector<Partition>& partition_list(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<Partition>>(partitions_of(n));
    return *slot;
}

/// Dominance order: every partial sum of `a` is at most that of `b`.
inline bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw InvalidArgument("dominance comparison needs partitions of the same integer");
    int sa = 0, sb = 0;
    const int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        sa += a[static_cast<std::size_t>(i)];
        sb += b[static_cast<std::size_t>(i)];
        if (sa > sb) return false;
    }
    return true;
}

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

/// Consecutive differences (and the last part) are all < p.
inline bool is_p_restricted(const Partition& lambda, int p) {
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i) + 1] >= p) return false;
    return true;
}

/// lambda = restricted + p * rest with `restricted` p-restricted.
struct RestrictedSplit {
    Partition restricted;
    Partition rest;
};

/// Unique decomposition lambda = lambda0 + p*mu with lambda0 p-restricted:
/// the differences of lambda0 are the differences of lambda reduced mod p.
inline RestrictedSplit restricted_split(const Partition& lambda, int p) {
    require_prime(p);
    const int k = lambda.length();
    std::vector<int> low(static_cast<std::size_t>(k), 0), high(static_cast<std::size_t>(k), 0);
    int carry = 0;
    for (int i = k - 1; i >= 0; --i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        const int diff = lambda[ui] - lambda[ui + 1];
        carry += diff % p;
        low[ui] = carry;
    }
    for (int i = 0; i < k; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        high[ui] = (lambda[ui] - low[ui]) / p;
    }
    return {Partition(std::move(low)), Partition(std::move(high))};
}

/// lambda = sum_i p^i * layers[i], each layer p-restricted. Empty partition has no layers.
struct PAdicExpansion {
    int p = 2;
    std::vector<Partition> layers;

    Partition reconstruct() const {
        Partition acc;
        int scale = 1;
        for (const auto& layer : layers) {
            acc = acc + layer.scaled(scale);
            scale *= p;
        }
        return acc;
    }

    const Partition& layer(std::size_t i) const {
        static const Partition kEmpty;
        return i < layers.size() ? layers[i] : kEmpty;
    }
};

inline PAdicExpansion p_adic_expansion(const Partition& lambda, int p) {
    require_prime(p);
    PAdicExpansion out;
    out.p = p;
    Partition cur = lambda;
    while (!cur.empty()) {
        auto split = restricted_split(cur, p);
        out.layers.push_back(std::move(split.restricted));
        cur = std::move(split.rest);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Beta-numbers and the abacus.

/// First-column hook lengths with `beads` beads: lambda_i + beads - 1 - i.
inline std::vector<int> beta_numbers(const Partition& lambda, int beads) {
    if (beads < lambda.length()) throw InvalidArgument("too few beads for partition");
    std::vector<int> beta(static_cast<std::size_t>(beads));
    for (int i = 0; i < beads; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + beads - 1 - i;
    return beta;
}

/// Inverse of beta_numbers; accepts the positions in any order.
inline Partition from_beta_numbers(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int beads = static_cast<int>(beta.size());
    std::vector<int> parts(beta.size());
    for (int i = 0; i < beads; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (beads - 1 - i);
    return Partition(std::move(parts));
}

struct RimHookRemoval {
    Partition result;
    int leg_length = 0;  // rows spanned minus one
};

/// Every way to remove a rim hook (border strip) of size r from lambda.
inline std::vector<RimHookRemoval> removable_rim_hooks(const Partition& lambda, int r) {
    std::vector<RimHookRemoval> out;
    if (r <= 0 || r > lambda.size()) return out;
    const auto beta = beta_numbers(lambda, lambda.length());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int to = beta[i] - r;
        if (to < 0) continue;
        if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int leg = 0;
        for (int b : beta)
            if (b > to && b < beta[i]) ++leg;
        auto moved = beta;
        moved[i] = to;
        out.push_back({from_beta_numbers(std::move(moved)), leg});
    }
    return out;
}

/// The p-core: slide every bead as far up its runner as possible.
inline Partition p_core(const Partition& lambda, int p) {
    if (p < 1) throw InvalidArgument("core needs a positive modulus");
    const int beads = lambda.length();
    const auto beta = beta_numbers(lambda, beads);
    std::vector<int> count(static_cast<std::size_t>(p), 0);
    for (int b : beta) ++count[static_cast<std::size_t>(b % p)];
    std::vector<int> core_beta;
    for (int runner = 0; runner < p; ++runner)
        for (int q = 0; q < count[static_cast<std::size_t>(runner)]; ++q) core_beta.push_back(runner + q * p);
    return from_beta_numbers(std::move(core_beta));
}

/// r-core, r-quotient and the r-sign of a partition (sign of the rim-hook
/// removal sequence down to the core, independent of the order chosen).
struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // one entry per runner, bead count a multiple of r
    int sign = 1;
    int weight = 0;  // number of r-hooks removed
};

inline CoreQuotient core_quotient(const Partition& lambda, int r) {
    if (r < 1) throw InvalidArgument("quotient needs a positive modulus");
    CoreQuotient out;
    int beads = lambda.length();
    if (beads % r) beads += r - beads % r;
    auto beta = beta_numbers(lambda, beads);

    out.quotient.resize(static_cast<std::size_t>(r));
    for (int runner = 0; runner < r; ++runner) {
        std::vector<int> pos;
        for (int b : beta)
            if (b % r == runner) pos.push_back(b / r);
        out.quotient[static_cast<std::size_t>(runner)] = from_beta_numbers(std::move(pos));
    }

    // Slide beads up one step at a time, lowest first; each step is a legal
    // r-hook removal whose leg length is the number of beads jumped over.
    std::sort(beta.begin(), beta.end());
    int legs = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int to = beta[i] - r;
            if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
            for (int b : beta)
                if (b > to && b < beta[i]) ++legs;
            beta[i] = to;
            ++out.weight;
            moved = true;
        }
    }
    out.core = from_beta_numbers(std::move(beta));
    out.sign = (legs % 2) ? -1 : 1;
    return out;
}

} // namespace youngcoho

template <>
struct std::hash<youngcoho::Partition> {
    std::size_t operator()(const youngcoho::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};
