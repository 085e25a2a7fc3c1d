#pragma once

// Brute-force group homology for tiny symmetric groups, used to cross-check
// the engine. A free F_p[Sigma_d]-resolution of the trivial module is built
// by repeatedly generating kernels, then tensored with a permutation module.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace youngcoho {

inline constexpr int kOracleMaxDegree = 4;      // Sigma_d with d above this is refused
inline constexpr int kOracleMaxHomological = 8;  // H_i with i above this is refused

/// Matrix over F_p stored as (row, col, value) triples with values in [1, p-1].
class SparseMatrixFp {
public:
    SparseMatrixFp(int p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows) {
        require_prime(p);
    }

    int prime() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Adds v (any integer, reduced mod p) at (r, c).
    void add(std::size_t r, std::size_t c, std::int64_t v) {
        if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
        const int x = static_cast<int>(((v % p_) + p_) % p_);
        if (!x) return;
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            it->second = (it->second + x) % p_;
            if (!it->second) row.erase(it);
        } else {
            row.insert(it, {c, x});
        }
    }

    int at(std::size_t r, std::size_t c) const {
        const auto& row = data_.at(r);
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
        return it != row.end() && it->first == c ? it->second : 0;
    }

    std::vector<std::tuple<std::size_t, std::size_t, int>> entries() const {
        std::vector<std::tuple<std::size_t, std::size_t, int>> out;
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) out.emplace_back(r, c, v);
        return out;
    }

    std::size_t rank() const { return kernel_and_rank(false).second; }

    /// Basis of {x : x^T A = 0} (left kernel), as dense vectors of length rows().
    std::vector<std::vector<int>> left_kernel() const { return kernel_and_rank(true).first; }

private:
    using Row = std::vector<std::pair<std::size_t, int>>;

    int inv(int a) const {
        int r = 1, e = p_ - 2, b = a;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    // row := row + k * other (both sorted by column).
    Row axpy(const Row& row, const Row& other, int k) const {
        Row out;
        out.reserve(row.size() + other.size());
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < other.size()) {
            if (b == other.size() || (a < row.size() && row[a].first < other[b].first)) {
                out.push_back(row[a++]);
            } else if (a == row.size() || other[b].first < row[a].first) {
                out.emplace_back(other[b].first, other[b].second * k % p_);
                ++b;
            } else {
                const int v = (row[a].second + other[b].second * k) % p_;
                if (v) out.emplace_back(row[a].first, v);
                ++a;
                ++b;
            }
        }
        return out;
    }

    std::pair<std::vector<std::vector<int>>, std::size_t> kernel_and_rank(bool want_kernel) const {
        // Reduce each row against pivots found so far; rows that vanish give kernel vectors.
        std::map<std::size_t, std::pair<Row, Row>> pivots;  // pivot column -> (reduced row, combination)
        std::vector<std::vector<int>> kernel;
        for (std::size_t r = 0; r < rows_; ++r) {
            Row row = data_[r];
            Row combo;
            if (want_kernel) combo.emplace_back(r, 1);
            while (!row.empty()) {
                auto it = pivots.find(row.front().first);
                if (it == pivots.end()) break;
                const int k = (p_ - row.front().second) % p_;
                row = axpy(row, it->second.first, k);
                if (want_kernel) combo = axpy(combo, it->second.second, k);
            }
            if (row.empty()) {
                if (want_kernel) {
                    std::vector<int> v(rows_, 0);
                    for (const auto& [c, x] : combo) v[c] = x;
                    kernel.push_back(std::move(v));
                }
                continue;
            }
            const int s = inv(row.front().second);
            for (auto& e : row) e.second = e.second * s % p_;
            for (auto& e : combo) e.second = e.second * s % p_;
            const auto lead = row.front().first;
            pivots.emplace(lead, std::make_pair(std::move(row), std::move(combo)));
        }
        return {std::move(kernel), pivots.size()};
    }

    int p_;
    std::size_t rows_, cols_;
    std::vector<Row> data_;
};

namespace detail {

/// Sigma_d as a list of permutations with a multiplication table.
struct SymmetricGroup {
    int d = 0;
    std::vector<std::vector<int>> elements;  // elements[g][i] = g(i)
    std::vector<std::vector<int>> mul;       // mul[g][h] = index of g o h
    std::vector<int> inverse;

    explicit SymmetricGroup(int degree) : d(degree) {
        std::vector<int> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        do elements.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        std::map<std::vector<int>, int> index;
        for (std::size_t g = 0; g < elements.size(); ++g) index[elements[g]] = static_cast<int>(g);
        const std::size_t n = elements.size();
        mul.assign(n, std::vector<int>(n));
        inverse.assign(n, 0);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                std::vector<int> gh(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i) gh[static_cast<std::size_t>(i)] = elements[g][static_cast<std::size_t>(elements[h][static_cast<std::size_t>(i)])];
                mul[g][h] = index[gh];
                if (mul[g][h] == 0) inverse[g] = static_cast<int>(h);
            }
    }
    std::size_t order() const { return elements.size(); }
};

/// Free resolution F_n -> ... -> F_0 -> k. Generator j of F_i maps to
/// boundary[i][j], a vector over the basis (generator k of F_{i-1}, group element g).
struct FreeResolution {
    int p = 2;
    const SymmetricGroup* group = nullptr;
    std::vector<std::size_t> ranks;                          // number of free generators of F_i
    std::vector<std::vector<std::vector<int>>> boundary;     // boundary[i] for i >= 1

    /// Dense coordinates of g * v for v in a free module of given rank.
    std::vector<int> act(int g, const std::vector<int>& v, std::size_t rank) const {
        const std::size_t n = group->order();
        std::vector<int> out(v.size(), 0);
        for (std::size_t k = 0; k < rank; ++k)
            for (std::size_t h = 0; h < n; ++h)
                if (const int x = v[k * n + h]) out[k * n + static_cast<std::size_t>(group->mul[static_cast<std::size_t>(g)][h])] = x;
        return out;
    }
};

/// Incremental row echelon basis of a subspace of F_p^n.
class EchelonBasis {
public:
    EchelonBasis(int p, std::size_t n) : p_(p), n_(n) {}

    /// Inserts v; returns false if it was already in the span.
    bool insert(std::vector<int> v) {
        for (const auto& [col, row] : rows_) {
            if (const int x = v[col]) {
                const int k = (p_ - x) % p_;
                for (std::size_t c = col; c < n_; ++c)
                    if (row[c]) v[c] = (v[c] + k * row[c]) % p_;
            }
        }
        std::size_t lead = 0;
        while (lead < n_ && !v[lead]) ++lead;
        if (lead == n_) return false;
        const int s = inverse(v[lead]);
        for (auto& x : v) x = x * s % p_;
        // Keep fully reduced so later reductions only need the pivot column.
        for (auto& [col, row] : rows_) {
            if (const int x = row[lead]) {
                const int k = (p_ - x) % p_;
                for (std::size_t c = lead; c < n_; ++c)
                    if (v[c]) row[c] = (row[c] + k * v[c]) % p_;
            }
        }
        rows_.emplace(lead, std::move(v));
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }

private:
    int inverse(int a) const {
        for (int b = 1; b < p_; ++b)
            if (a * b % p_ == 1) return b;
        throw InvariantViolation("no inverse mod p");
    }

    int p_;
    std::size_t n_;
    std::map<std::size_t, std::vector<int>> rows_;
};

/// Chooses kG-module generators for the span of `vectors` (a submodule of a
/// free module of the given rank) greedily.
inline std::vector<std::vector<int>> module_generators(const FreeResolution& res, const std::vector<std::vector<int>>& vectors,
                                                       std::size_t rank, int p) {
    const std::size_t n = res.group->order();
    EchelonBasis span(p, rank * n);
    std::vector<std::vector<int>> gens;
    for (const auto& v : vectors) {
        if (!span.insert(v)) continue;
        gens.push_back(v);
        for (std::size_t g = 1; g < n; ++g) span.insert(res.act(static_cast<int>(g), v, rank));
        if (span.dimension() == vectors.size()) break;
    }
    return gens;
}

/// Matrix of the boundary F_i -> F_{i-1} over F_p, rows indexed by (generator j, g).
inline SparseMatrixFp boundary_matrix(const FreeResolution& res, std::size_t i) {
    const std::size_t n = res.group->order();
    SparseMatrixFp m(res.p, res.ranks[i] * n, res.ranks[i - 1] * n);
    for (std::size_t j = 0; j < res.ranks[i]; ++j)
        for (std::size_t g = 0; g < n; ++g) {
            const auto image = res.act(static_cast<int>(g), res.boundary[i][j], res.ranks[i - 1]);
            for (std::size_t c = 0; c < image.size(); ++c)
                if (image[c]) m.add(j * n + g, c, image[c]);
        }
    return m;
}

inline const FreeResolution& free_resolution(int p, int d, int length) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SymmetricGroup>> groups;
    static std::map<std::pair<int, int>, FreeResolution> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& group = groups[d];
    if (!group) group = std::make_unique<SymmetricGroup>(d);
    auto& res = cache[{p, d}];
    if (!res.group) {
        res.p = p;
        res.group = group.get();
        res.ranks = {1};
        res.boundary = {{}};
        // F_1 maps onto the augmentation ideal: generators g - 1.
        std::vector<std::vector<int>> ideal;
        for (std::size_t g = 1; g < group->order(); ++g) {
            std::vector<int> v(group->order(), 0);
            v[0] = p - 1;
            v[g] = 1;
            ideal.push_back(std::move(v));
        }
        res.boundary.push_back(module_generators(res, ideal, 1, p));
        res.ranks.push_back(res.boundary.back().size());
    }
    while (static_cast<int>(res.ranks.size()) <= length) {
        const std::size_t i = res.ranks.size() - 1;
        const auto kernel = boundary_matrix(res, i).left_kernel();
        res.boundary.push_back(module_generators(res, kernel, res.ranks[i], p));
        res.ranks.push_back(res.boundary.back().size());
    }
    return res;
}

/// Words of content lambda (tabloids), the basis of the permutation module M^lambda.
inline std::vector<std::vector<int>> tabloids(const std::vector<int>& content) {
    std::vector<int> word;
    for (std::size_t letter = 0; letter < content.size(); ++letter)
        for (int k = 0; k < content[letter]; ++k) word.push_back(static_cast<int>(letter));
    std::vector<std::vector<int>> out;
    do out.push_back(word);
    while (std::next_permutation(word.begin(), word.end()));
    return out;
}

} // namespace detail

/// dim H_i(Sigma_d, M^lambda) over F_p (= dim H^i, the module being self-dual),
/// with M^lambda the lambda-weight space of V^{(x)d}.
inline std::int64_t oracle_homology_weight(int p, int d, const std::vector<int>& composition, int i) {
    require_prime(p);
    if (d < 0 || d > kOracleMaxDegree || i < 0 || i > kOracleMaxHomological)
        throw OracleOutOfRange("oracle out of range: needs d <= " + std::to_string(kOracleMaxDegree) + " and 0 <= i <= " +
                               std::to_string(kOracleMaxHomological));
    if (std::accumulate(composition.begin(), composition.end(), 0) != d) throw InvalidArgument("weight must have size d");
    if (d <= 1) return i == 0 ? 1 : 0;
    const auto& res = detail::free_resolution(p, d, i + 1);
    const auto& group = *res.group;
    const auto basis = detail::tabloids(composition);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t t = 0; t < basis.size(); ++t) index[basis[t]] = t;
    const std::size_t m = basis.size(), n = group.order();

    // g acts on words by moving the letter in position k to position g(k).
    std::vector<std::vector<std::size_t>> action(n, std::vector<std::size_t>(m));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t t = 0; t < m; ++t) {
            std::vector<int> w(basis[t].size());
            for (std::size_t k = 0; k < w.size(); ++k) w[static_cast<std::size_t>(group.elements[g][k])] = basis[t][k];
            action[g][t] = index.at(w);
        }

    // F_j (x)_G M = M^{rank_j}; e_j (x) x maps to sum_k sum_g a_jk(g) e_k (x) g^{-1} x.
    auto coinvariant_rank = [&](std::size_t j) -> std::size_t {
        if (j == 0) return 0;
        SparseMatrixFp mat(p, res.ranks[j] * m, res.ranks[j - 1] * m);
        for (std::size_t a = 0; a < res.ranks[j]; ++a) {
            const auto& image = res.boundary[j][a];
            for (std::size_t k = 0; k < res.ranks[j - 1]; ++k)
                for (std::size_t g = 0; g < n; ++g) {
                    const int coeff = image[k * n + g];
                    if (!coeff) continue;
                    const auto ginv = static_cast<std::size_t>(group.inverse[g]);
                    for (std::size_t x = 0; x < m; ++x) mat.add(a * m + x, k * m + action[ginv][x], coeff);
                }
        }
        return mat.rank();
    };
    const auto ui = static_cast<std::size_t>(i);
    return static_cast<std::int64_t>(res.ranks[ui] * m) - static_cast<std::int64_t>(coinvariant_rank(ui)) -
           static_cast<std::int64_t>(coinvariant_rank(ui + 1));
}

inline std::int64_t oracle_homology_weight(int p, int d, const Partition& lambda, int i) {
    return oracle_homology_weight(p, d, lambda.parts(), i);
}

/// dim H^j(Sigma_m, k) for j = 0..max_degree, or empty when no value is known for m.
using KunnethBase = std::function<std::vector<std::int64_t>(int m, int max_degree)>;

/// Base series from the oracle for m <= 4 and, at p = 2, the closed form
/// ceil((j+1)(j+2)/6) for m = 6.
inline KunnethBase default_kunneth_base(int p) {
    return [p](int m, int max_degree) -> std::vector<std::int64_t> {
        std::vector<std::int64_t> out;
        if (m <= kOracleMaxDegree && max_degree <= kOracleMaxHomological) {
            for (int j = 0; j <= max_degree; ++j) out.push_back(oracle_homology_weight(p, m, std::vector<int>{m}, j));
        } else if (m == 6 && p == 2) {
            for (std::int64_t j = 0; j <= max_degree; ++j) out.push_back(((j + 1) * (j + 2) + 5) / 6);
        }
        return out;
    };
}

/// H^i(Sigma_lambda, k) by Kunneth over the parts; equals dim H^i(Sigma_d, M^lambda).
inline std::int64_t kunneth_perm(const Partition& lambda, int i, const KunnethBase& base) {
    if (i < 0) throw InvalidArgument("degree must be nonnegative");
    std::vector<std::int64_t> series(static_cast<std::size_t>(i) + 1, 0);
    series[0] = 1;
    for (int part : lambda.parts()) {
        const auto factor = base(part, i);
        if (factor.size() < static_cast<std::size_t>(i) + 1)
            throw InvalidArgument("no base cohomology for Sigma_" + std::to_string(part) + " up to degree " + std::to_string(i));
        std::vector<std::int64_t> next(series.size(), 0);
        for (std::size_t a = 0; a < series.size(); ++a)
            for (std::size_t b = 0; a + b < series.size(); ++b)
                next[a + b] = checked::add(next[a + b], checked::mul(series[a], factor[b]));
        series = std::move(next);
    }
    return series[static_cast<std::size_t>(i)];
}

} // namespace youngcoho
