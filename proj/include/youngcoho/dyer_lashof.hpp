#pragma once

// Generators of the algebra  sum_d H_*(Sigma_d, W^{(x)d})  (Dyer-Lashof words applied
// to a degree-zero class), the monomials of fixed weight and degree built
// from them, and the GL-module each monomial spans.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "gl_characters.hpp"

namespace youngcoho {

/// Outermost operation first: indices[0] is i_1 (resp. j_1). For p = 2 the
/// Bockstein vector is empty.
struct AdmissibleSequence {
    int p = 2;
    std::vector<int> indices;
    std::vector<int> bocksteins;
    std::int64_t degree = 0;

    int length() const { return static_cast<int>(indices.size()); }
    std::int64_t weight() const { return checked::pow(p, length()); }
    bool odd_degree() const { return degree % 2 != 0; }

    /// Sort key: length, then degree, then the index word.
    friend bool operator<(const AdmissibleSequence& a, const AdmissibleSequence& b) {
        return std::forward_as_tuple(a.indices.size(), a.degree, a.indices, a.bocksteins) <
               std::forward_as_tuple(b.indices.size(), b.degree, b.indices, b.bocksteins);
    }
    friend bool operator==(const AdmissibleSequence& a, const AdmissibleSequence& b) {
        return a.p == b.p && a.indices == b.indices && a.bocksteins == b.bocksteins;
    }

    std::string to_string() const {
        std::string s = "Q(";
        for (int k = 0; k < length(); ++k) {
            if (k) s += ",";
            if (p != 2 && bocksteins[static_cast<std::size_t>(k)]) s += "b";
            s += std::to_string(indices[static_cast<std::size_t>(k)]);
        }
        return s + ")";
    }
};

/// Degree of a word, or -1 when some operation is undefined on its input.
/// Applied right to left from degree 0; each step maps n to p*n + j(p-1) - eps,
/// and at odd p requires n + j even.
inline std::int64_t sequence_degree(int p, const std::vector<int>& indices, const std::vector<int>& bocksteins = {}) {
    std::int64_t n = 0;
    for (std::size_t k = indices.size(); k-- > 0;) {
        const int j = indices[k];
        if (j < 1 || (k + 1 < indices.size() && j > indices[k + 1])) return -1;
        if (p == 2) {
            n = checked::add(checked::mul(2, n), j);
        } else {
            const int eps = bocksteins.at(k);
            if ((n + j) % 2 != 0) return -1;
            n = checked::add(checked::mul(p, n), checked::sub(checked::mul(j, p - 1), eps));
        }
    }
    return n;
}

/// All admissible sequences with 1 <= degree <= max_degree and weight <= max_weight.
inline std::vector<AdmissibleSequence> admissible_sequences(int p, std::int64_t max_degree, std::int64_t max_weight) {
    require_prime(p);
    std::vector<AdmissibleSequence> out;
    if (max_degree < 1) return out;
    // Grow words outward from the innermost operation; degrees strictly increase.
    std::function<void(std::vector<int>&, std::vector<int>&, std::int64_t, std::int64_t, int)> grow =
        [&](std::vector<int>& inner_first, std::vector<int>& eps_inner_first, std::int64_t n, std::int64_t weight, int bound) {
            if (weight > max_weight) return;
            for (int j = 1; j <= bound; ++j) {
                for (int eps = 0; eps <= (p == 2 ? 0 : 1); ++eps) {
                    std::int64_t next;
                    if (p == 2) {
                        next = 2 * n + j;
                    } else {
                        if ((n + j) % 2 != 0) continue;
                        next = p * n + static_cast<std::int64_t>(j) * (p - 1) - eps;
                    }
                    if (next > max_degree) continue;
                    inner_first.push_back(j);
                    eps_inner_first.push_back(eps);
                    if (weight * p <= max_weight) {
                        AdmissibleSequence s;
                        s.p = p;
                        s.indices.assign(inner_first.rbegin(), inner_first.rend());
                        if (p != 2) s.bocksteins.assign(eps_inner_first.rbegin(), eps_inner_first.rend());
                        s.degree = next;
                        out.push_back(std::move(s));
                        grow(inner_first, eps_inner_first, next, weight * p, j);
                    }
                    inner_first.pop_back();
                    eps_inner_first.pop_back();
                }
            }
        };
    std::vector<int> a, b;
    grow(a, b, 0, 1, static_cast<int>(std::min<std::int64_t>(max_degree, 1 << 20)));
    std::sort(out.begin(), out.end());
    return out;
}

/// A monomial of weight a + sum m*p^t: the generator power v^a times
/// products of m copies of Q_I applied to the degree-zero space.
struct MonomialShape {
    int p = 2;
    int base_exponent = 0;
    std::vector<std::pair<AdmissibleSequence, int>> factors;  // sorted by sequence

    std::int64_t weight() const {
        std::int64_t w = base_exponent;
        for (const auto& [s, m] : factors) w = checked::add(w, checked::mul(m, s.weight()));
        return w;
    }
    std::int64_t degree() const {
        std::int64_t deg = 0;
        for (const auto& [s, m] : factors) deg = checked::add(deg, checked::mul(m, s.degree));
        return deg;
    }

    std::string to_string() const {
        std::string s = "v^" + std::to_string(base_exponent);
        for (const auto& [seq, m] : factors) s += " * " + seq.to_string() + (m > 1 ? "^" + std::to_string(m) : "");
        return s;
    }
};

/// The data a shape's GL-module depends on: base exponent and, per factor,
/// (twist t, multiplicity m, exterior?). Sorted so equal modules compare equal.
struct ShapeFamily {
    int p = 2;
    int base_exponent = 0;
    std::vector<std::tuple<int, int, bool>> factors;

    friend auto operator<=>(const ShapeFamily&, const ShapeFamily&) = default;

    /// Readable module name, e.g. "V^(2) (x) S^2(V)".
    std::string describe() const {
        std::vector<std::string> parts;
        auto twisted = [](int t) { return t == 0 ? std::string("V") : "V^(" + std::to_string(t) + ")"; };
        // Highest twist first, symmetric power of V last.
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            const auto [t, m, ext] = *it;
            if (m == 1) parts.push_back(twisted(t));
            else parts.push_back(std::string(ext ? "L" : "S") + "^" + std::to_string(m) + "(" + twisted(t) + ")");
        }
        if (base_exponent > 0) parts.push_back(base_exponent == 1 ? "V" : "S^" + std::to_string(base_exponent) + "(V)");
        if (parts.empty()) return "k";
        std::string s;
        for (const auto& x : parts) s += (s.empty() ? "" : " (x) ") + x;
        return s;
    }
};

inline ShapeFamily family_of(const MonomialShape& shape) {
    ShapeFamily f;
    f.p = shape.p;
    f.base_exponent = shape.base_exponent;
    for (const auto& [seq, m] : shape.factors) f.factors.emplace_back(seq.length(), m, shape.p != 2 && seq.odd_degree());
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

/// Every monomial of weight d and homological degree i, each exactly once.
inline std::vector<MonomialShape> enumerate_shapes(int p, int d, std::int64_t i) {
    require_prime(p);
    if (d < 0 || i < 0) throw InvalidArgument("weight and degree must be nonnegative");
    std::vector<MonomialShape> out;
    const auto seqs = admissible_sequences(p, i, d);
    MonomialShape cur;
    cur.p = p;
    std::function<void(std::size_t, std::int64_t, std::int64_t)> choose = [&](std::size_t k, std::int64_t weight_left,
                                                                                std::int64_t degree_left) {
        if (degree_left == 0) {
            cur.base_exponent = static_cast<int>(weight_left);
            out.push_back(cur);
            return;
        }
        for (std::size_t idx = k; idx < seqs.size(); ++idx) {
            const auto& s = seqs[idx];
            if (s.degree > degree_left || s.weight() > weight_left) continue;
            for (int m = 1; m * s.weight() <= weight_left && m * s.degree <= degree_left; ++m) {
                cur.factors.emplace_back(s, m);
                choose(idx + 1, weight_left - m * s.weight(), degree_left - m * s.degree);
                cur.factors.pop_back();
            }
        }
    };
    choose(0, d, i);
    return out;
}

/// Shapes grouped by the module they produce, with counts.
inline std::map<ShapeFamily, std::int64_t> shape_families(int p, int d, std::int64_t i) {
    std::map<ShapeFamily, std::int64_t> out;
    for (const auto& s : enumerate_shapes(p, d, i)) ++out[family_of(s)];
    return out;
}

inline SchurExpansion family_module(const ShapeFamily& f) {
    static std::mutex mutex;
    static std::map<ShapeFamily, SchurExpansion> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(f); it != cache.end()) return it->second;
    }
    SchurExpansion acc = sym_power(f.base_exponent);
    for (const auto& [t, m, ext] : f.factors) acc = lr_product(acc, frobenius_twist(ext ? ext_power(m) : sym_power(m), t, f.p));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(f, std::move(acc)).first->second;
}

/// S^a(V) (x) prod over factors of S^m(V^(t)), or Lambda^m(V^(t)) for odd-degree words at odd p.
inline SchurExpansion shape_module(const MonomialShape& s) { return family_module(family_of(s)); }

/// Formal character of H_i(Sigma_d, V^{(x)d}) with dim V = d.
inline SchurExpansion homology_module(int p, int d, std::int64_t i) {
    SchurExpansion out(d);
    for (const auto& [fam, count] : shape_families(p, d, i)) out.add_scaled(family_module(fam), count);
    return out;
}

} // namespace youngcoho
