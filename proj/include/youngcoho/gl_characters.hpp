#pragma once

// Formal characters of polynomial GL_n-modules written in the Schur basis.
// The number of variables is the polynomial degree (n = d), so every
// partition of the degree indexes a nonzero Schur polynomial.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "schur_data.hpp"

namespace youngcoho {

using BigInt = boost::multiprecision::cpp_int;

/// Integer combination of Schur functions s_mu, all of the same degree.
class SchurExpansion {
public:
    SchurExpansion() : SchurExpansion(0) {}
    explicit SchurExpansion(int degree) : degree_(degree) {}

    static SchurExpansion one() { return schur(Partition{}); }
    static SchurExpansion schur(const Partition& mu, std::int64_t c = 1) {
        SchurExpansion e(mu.size());
        e.add(mu, c);
        return e;
    }

    int degree() const { return degree_; }
    const std::map<Partition, std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t coeff(const Partition& mu) const {
        auto it = coeffs_.find(mu);
        return it == coeffs_.end() ? 0 : it->second;
    }

    SchurExpansion& add(const Partition& mu, std::int64_t c) {
        if (mu.size() != degree_)
            throw InvalidArgument("s_" + mu.to_string() + " does not have degree " + std::to_string(degree_));
        if (c == 0) return *this;
        auto [it, fresh] = coeffs_.emplace(mu, c);
        if (!fresh) {
            it->second = checked::add(it->second, c);
            if (it->second == 0) coeffs_.erase(it);
        }
        return *this;
    }

    SchurExpansion& add_scaled(const SchurExpansion& other, std::int64_t k) {
        if (other.is_zero() || k == 0) return *this;
        if (other.degree_ != degree_) throw InvalidArgument("cannot add expansions of different degrees");
        for (const auto& [mu, c] : other.coeffs_) add(mu, checked::mul(c, k));
        return *this;
    }

    SchurExpansion& operator+=(const SchurExpansion& o) { return add_scaled(o, 1); }
    SchurExpansion& operator-=(const SchurExpansion& o) { return add_scaled(o, -1); }
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        // Largest partitions first, matching the descending order used elsewhere.
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto c = it->second;
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            const auto a = c < 0 ? -c : c;
            if (a != 1) out += std::to_string(a) + "*";
            out += "s(" + it->first.to_string() + ")";
        }
        return out;
    }

private:
    int degree_;
    std::map<Partition, std::int64_t> coeffs_;
};

inline SchurExpansion sym_power(int a) {
    if (a < 0) throw InvalidArgument("symmetric power needs a >= 0");
    return SchurExpansion::schur(Partition::rectangle(a, 1));
}

inline SchurExpansion ext_power(int a) {
    if (a < 0) throw InvalidArgument("exterior power needs a >= 0");
    return SchurExpansion::schur(Partition::rectangle(1, a));
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients.

namespace detail {

/// s_mu * s_nu by filling nu's letters into horizontal strips added to mu and
/// keeping fillings whose reverse reading word is a lattice word.
inline std::map<Partition, std::int64_t> lr_expand(const Partition& mu, const Partition& nu) {
    std::map<Partition, std::int64_t> out;
    const int letters = nu.length();
    if (letters == 0) {
        out.emplace(mu, 1);
        return out;
    }
    const int max_rows = mu.length() + letters;
    std::vector<int> shape(static_cast<std::size_t>(max_rows), 0);
    for (int r = 0; r < mu.length(); ++r) shape[static_cast<std::size_t>(r)] = mu[static_cast<std::size_t>(r)];
    // placed[k][r] = number of letter k in row r.
    std::vector<std::vector<int>> placed(static_cast<std::size_t>(letters), std::vector<int>(static_cast<std::size_t>(max_rows), 0));

    std::function<void(int)> place_letter;
    std::function<void(int, int, int, int, int, const std::vector<int>&)> fill_row;

    // Distribute `left` boxes of letter k over rows r.., where row r may grow
    // by at most prev[r-1]-prev[r] (horizontal strip) and lattice prefix
    // counts must hold: #(k in rows <= r) <= #(k-1 in rows < r).
    fill_row = [&](int k, int r, int left, int cum_k, int cum_prev, const std::vector<int>& prev) {
        if (left == 0) {
            place_letter(k + 1);
            return;
        }
        if (r >= max_rows) return;
        const auto ur = static_cast<std::size_t>(r);
        const int room = r == 0 ? left : prev[ur - 1] - prev[ur];
        int cap = std::min(room, left);
        if (k > 0) cap = std::min(cap, cum_prev - cum_k);
        const int prev_k_here = k > 0 ? placed[static_cast<std::size_t>(k - 1)][ur] : 0;
        for (int x = cap; x >= 0; --x) {
            placed[static_cast<std::size_t>(k)][ur] = x;
            shape[ur] = prev[ur] + x;
            fill_row(k, r + 1, left - x, cum_k + x, cum_prev + prev_k_here, prev);
        }
        placed[static_cast<std::size_t>(k)][ur] = 0;
        shape[ur] = prev[ur];
    };

    place_letter = [&](int k) {
        if (k == letters) {
            out[Partition(std::vector<int>(shape.begin(), shape.end()))] += 1;
            return;
        }
        const std::vector<int> prev = shape;
        fill_row(k, 0, nu[static_cast<std::size_t>(k)], 0, 0, prev);
    };
    place_letter(0);
    return out;
}

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
        const std::hash<Partition> h;
        return h(p.first) * 1000003u ^ h(p.second);
    }
};

} // namespace detail

/// c^tau_{mu,nu} for all tau, memoized on the unordered pair.
inline const std::map<Partition, std::int64_t>& lr_coefficients(const Partition& mu, const Partition& nu) {
    static std::mutex mutex;
    static std::unordered_map<std::pair<Partition, Partition>, std::map<Partition, std::int64_t>, detail::PairHash> cache;
    // Fewer letters is cheaper to enumerate; the product is commutative.
    const bool swap = nu.size() > mu.size() || (nu.size() == mu.size() && nu.length() > mu.length());
    std::pair<Partition, Partition> key = swap ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto value = detail::lr_expand(key.first, key.second);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

inline std::int64_t lr_coefficient(const Partition& tau, const Partition& mu, const Partition& nu) {
    if (tau.size() != mu.size() + nu.size()) return 0;
    const auto& m = lr_coefficients(mu, nu);
    auto it = m.find(tau);
    return it == m.end() ? 0 : it->second;
}

inline SchurExpansion lr_product(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out(a.degree() + b.degree());
    for (const auto& [mu, c] : a.coeffs())
        for (const auto& [nu, e] : b.coeffs()) {
            const auto k = checked::mul(c, e);
            for (const auto& [tau, lr] : lr_coefficients(mu, nu)) out.add(tau, checked::mul(k, lr));
        }
    return out;
}

inline SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b) { return lr_product(a, b); }

// ---------------------------------------------------------------------------
// Frobenius twist: s_lambda(x_1^r, x_2^r, ...).

namespace detail {

/// s_lambda(x^r) = sum over nu with empty r-core of sign_r(nu) <s_lambda, prod_i s_{nu^(i)}> s_nu.
inline const SchurExpansion& twist_schur(const Partition& lambda, int r) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, SchurExpansion> cache;
    const auto key = std::make_pair(lambda, r);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const int n = checked::mul(lambda.size(), r);
    if (n > kMaxPartitionSize) throw InvalidArgument("Frobenius twist exceeds the partition size cap");
    SchurExpansion out(n);
    for (const auto& nu : partition_list(n)) {
        const auto cq = core_quotient(nu, r);
        if (!cq.core.empty()) continue;
        SchurExpansion prod = SchurExpansion::one();
        for (const auto& q : cq.quotient) prod = lr_product(prod, SchurExpansion::schur(q));
        const auto c = prod.coeff(lambda);
        if (c) out.add(nu, cq.sign * c);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace detail

/// Character of the b-th Frobenius twist A^{(b)} in characteristic p.
inline SchurExpansion frobenius_twist(const SchurExpansion& a, int b, int p) {
    require_prime(p);
    if (b < 0) throw InvalidArgument("twist exponent must be nonnegative");
    if (b == 0) return a;
    const int r = static_cast<int>(checked::pow(p, b));
    SchurExpansion out(checked::mul(a.degree(), r));
    for (const auto& [lambda, c] : a.coeffs()) out.add_scaled(detail::twist_schur(lambda, r), c);
    return out;
}

// ---------------------------------------------------------------------------
// Dimensions and weights.

/// dim of the Weyl module V(lambda) for GL_n: prod over boxes (n + content)/hook.
inline BigInt weyl_dimension(const Partition& lambda, int n) {
    BigInt num = 1, den = 1;
    const auto conj = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i) {
        const int row = lambda[static_cast<std::size_t>(i)];
        for (int j = 0; j < row; ++j) {
            const int hook = row - j + conj[static_cast<std::size_t>(j)] - i - 1;
            num *= n + j - i;
            den *= hook;
        }
    }
    return num / den;
}

/// Evaluation at 1^n, n defaulting to the degree.
inline BigInt dimension(const SchurExpansion& a, int n = -1) {
    if (n < 0) n = a.degree();
    BigInt total = 0;
    for (const auto& [mu, c] : a.coeffs()) total += BigInt(c) * weyl_dimension(mu, n);
    return total;
}

/// Number of semistandard tableaux of shape mu and content lambda (any order of content).
inline std::int64_t kostka(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw InvalidArgument("Kostka number needs shape and content of equal size");
    if (!dominance_leq(lambda, mu)) return 0;
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
    std::function<std::int64_t(const Partition&, const Partition&)> rec = [&](const Partition& shape,
                                                                              const Partition& content) -> std::int64_t {
        if (content.empty()) return shape.empty() ? 1 : 0;
        if (!dominance_leq(content, shape)) return 0;
        const auto key = std::make_pair(shape, content);
        {
            std::lock_guard<std::mutex> lock(mutex);
            if (auto it = cache.find(key); it != cache.end()) return it->second;
        }
        // Remove the boxes holding the largest letter: a horizontal strip of size content.back().
        const int strip = content.parts().back();
        Partition rest_content(std::vector<int>(content.parts().begin(), content.parts().end() - 1));
        std::int64_t total = 0;
        std::vector<int> inner(shape.parts());
        std::function<void(std::size_t, int)> go = [&](std::size_t r, int left) {
            if (r == inner.size()) {
                if (left == 0) total = checked::add(total, rec(Partition(inner), rest_content));
                return;
            }
            const int lo = shape[r + 1];
            const int hi = shape[r];
            for (int v = hi; v >= lo && hi - v <= left; --v) {
                inner[r] = v;
                go(r + 1, left - (hi - v));
            }
            inner[r] = hi;
        };
        go(0, strip);
        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(key, total);
        return total;
    };
    return rec(mu, lambda);
}

/// dim of the lambda-weight space; lambda may be given as any composition.
inline std::int64_t weight_multiplicity(const SchurExpansion& a, const Partition& lambda) {
    if (lambda.size() != a.degree()) throw InvalidArgument("weight must have the same size as the module degree");
    std::int64_t total = 0;
    for (const auto& [mu, c] : a.coeffs()) total = checked::add(total, checked::mul(c, kostka(mu, lambda)));
    return total;
}

// ---------------------------------------------------------------------------
// Simple modules.

using SimpleMultiplicities = std::map<Partition, std::int64_t>;

namespace detail {

inline void check_matrix_for(const SchurExpansion& a, const DecompositionMatrix& D) {
    if (a.degree() != D.degree())
        throw InvalidArgument("module of degree " + std::to_string(a.degree()) + " needs the decomposition matrix for d=" +
                              std::to_string(a.degree()) + ", got d=" + std::to_string(D.degree()));
}

} // namespace detail

/// [A : L(lambda)] = sum_mu c_mu d_{mu,lambda}. Zero entries are omitted.
inline SimpleMultiplicities simple_multiplicities(const SchurExpansion& a, const DecompositionMatrix& D) {
    detail::check_matrix_for(a, D);
    std::vector<std::int64_t> acc(D.rank(), 0);
    for (const auto& [mu, c] : a.coeffs()) {
        const auto r = D.index(mu);
        for (std::size_t col = r; col < D.rank(); ++col)
            if (D.at(r, col)) acc[col] = checked::add(acc[col], checked::mul(c, D.at(r, col)));
    }
    SimpleMultiplicities out;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i]) out.emplace(D.partitions()[i], acc[i]);
    return out;
}

inline std::int64_t simple_multiplicity(const SchurExpansion& a, const Partition& lambda, const DecompositionMatrix& D) {
    detail::check_matrix_for(a, D);
    const auto col = D.index(lambda);
    std::int64_t acc = 0;
    for (const auto& [mu, c] : a.coeffs()) acc = checked::add(acc, checked::mul(c, D.at(D.index(mu), col)));
    return acc;
}

/// Rows of D^{-1}; D is upper unitriangular in descending lex index order.
inline std::vector<std::vector<std::int64_t>> inverse_decomposition(const DecompositionMatrix& D) {
    const std::size_t n = D.rank();
    std::vector<std::vector<std::int64_t>> inv(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = n; i-- > 0;) {
        inv[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            // (D E)_{ij} = 0 for j > i: E_{ij} = -sum_{i<k<=j} D_{ik} E_{kj}.
            std::int64_t s = 0;
            for (std::size_t k = i + 1; k <= j; ++k)
                if (D.at(i, k)) s = checked::add(s, checked::mul(D.at(i, k), inv[k][j]));
            inv[i][j] = -s;
        }
    }
    return inv;
}

/// ch L(lambda) = row lambda of D^{-1} against the Schur basis.
inline SchurExpansion simple_character(const Partition& lambda, const DecompositionMatrix& D) {
    const auto inv = inverse_decomposition(D);
    const auto row = D.index(lambda);
    SchurExpansion out(D.degree());
    for (std::size_t j = 0; j < D.rank(); ++j) out.add(D.partitions()[j], inv[row][j]);
    return out;
}

/// Every p-adic layer has the form ((p-1)^a, b) with 0 <= b < p-1.
inline bool is_doty_shape(const Partition& lambda, int p) {
    for (const auto& layer : p_adic_expansion(lambda, p).layers) {
        const auto& parts = layer.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const bool last = i + 1 == parts.size();
            if (parts[i] != p - 1 && !(last && parts[i] < p - 1)) return false;
        }
    }
    return true;
}

/// Composition factors of S^m(V) (each with multiplicity one).
inline std::set<Partition> doty_constituents(int m, int p) {
    require_prime(p);
    if (m < 0) throw InvalidArgument("symmetric power needs m >= 0");
    std::set<Partition> out;
    for (const auto& lambda : partition_list(m))
        if (is_doty_shape(lambda, p)) out.insert(lambda);
    return out;
}

} // namespace youngcoho
