#pragma once

// Cohomology of Young and permutation modules for Sigma_d and Ext between
// Young modules, all read off the GL_d-module H_i(Sigma_d, V^{(x)d}).

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dyer_lashof.hpp"
#include "errors.hpp"
#include "gl_characters.hpp"
#include "partition.hpp"
#include "schur_data.hpp"
#include "sym_characters.hpp"

namespace youngcoho {

namespace detail {

inline void check_decomp(int p, int d, const DecompositionMatrix& D) {
    if (D.prime() != p || D.degree() != d)
        throw InvalidArgument("decomposition matrix is for p=" + std::to_string(D.prime()) + " d=" + std::to_string(D.degree()) +
                              ", query needs p=" + std::to_string(p) + " d=" + std::to_string(d));
}

inline void check_partition_of(const Partition& lambda, int d) {
    if (lambda.size() != d) throw InvalidArgument(lambda.to_string() + " is not a partition of " + std::to_string(d));
}

} // namespace detail

/// homology_module with results kept for reuse across queries.
inline const SchurExpansion& homology_character(int p, int d, std::int64_t i) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, std::int64_t>, SchurExpansion> cache;
    const auto key = std::make_tuple(p, d, i);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto value = homology_module(p, d, i);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

/// [H_i(Sigma_d, V^{(x)d}) : L(sigma)] for every sigma.
inline SimpleMultiplicities homology_simple_multiplicities(int p, int d, std::int64_t i, const DecompositionMatrix& D) {
    detail::check_decomp(p, d, D);
    if (i < 0) throw InvalidArgument("degree must be nonnegative");
    return simple_multiplicities(homology_character(p, d, i), D);
}

/// dim H^i(Sigma_d, Y^lambda).
inline std::int64_t h_young(int p, int d, const Partition& lambda, std::int64_t i, const DecompositionMatrix& D) {
    require_prime(p);
    detail::check_partition_of(lambda, d);
    detail::check_decomp(p, d, D);
    if (i < 0) throw InvalidArgument("degree must be nonnegative");
    return simple_multiplicity(homology_character(p, d, i), lambda, D);
}

/// dim H^i(Sigma_d, M^lambda); lambda may be any composition of d.
inline std::int64_t h_perm(int p, int d, const std::vector<int>& composition, std::int64_t i) {
    require_prime(p);
    const auto lambda = Partition::from_composition(composition);
    detail::check_partition_of(lambda, d);
    if (i < 0) throw InvalidArgument("degree must be nonnegative");
    return weight_multiplicity(homology_character(p, d, i), lambda);
}

inline std::int64_t h_perm(int p, int d, const Partition& lambda, std::int64_t i) { return h_perm(p, d, lambda.parts(), i); }

/// Ordinary character of Y^lambda: sum over mu of [V(mu):L(lambda)] chi^mu.
inline ClassFunction young_character(const Partition& lambda, const DecompositionMatrix& D) {
    const auto col = D.index(lambda);
    auto out = ClassFunction::zero(D.degree());
    for (std::size_t r = 0; r <= col; ++r)
        if (D.at(r, col)) out.add_scaled(irreducible_character(D.partitions()[r]), D.at(r, col));
    return out;
}

/// dim Y^lambda = sum_mu d_{mu,lambda} chi^mu(1).
inline std::int64_t young_dimension(const Partition& lambda, const DecompositionMatrix& D) {
    return young_character(lambda, D).at_identity();
}

struct YoungTensorDecomposition {
    Partition lambda;
    Partition mu;
    std::map<Partition, std::int64_t> g;  // Y^lambda (x) Y^mu = sum g_sigma Y^sigma
};

/// Splits Y^lambda (x) Y^mu into Young modules. Characters of Y^sigma are
/// unitriangular against the irreducibles (chi^sigma plus terms chi^tau, tau
/// above sigma), so peeling off the lex-smallest remaining constituent first
/// recovers each g_sigma.
inline YoungTensorDecomposition young_tensor(const Partition& lambda, const Partition& mu, const DecompositionMatrix& D) {
    detail::check_partition_of(lambda, D.degree());
    detail::check_partition_of(mu, D.degree());
    const auto product = pointwise_product(young_character(lambda, D), young_character(mu, D));
    auto remaining = irreducible_multiplicities(product);
    YoungTensorDecomposition out{lambda, mu, {}};
    const auto& parts = D.partitions();
    for (std::size_t k = parts.size(); k-- > 0;) {
        const auto& sigma = parts[k];
        auto it = remaining.find(sigma);
        if (it == remaining.end()) continue;
        const auto g = it->second;
        if (g < 0) throw InvariantViolation("Young tensor decomposition produced a negative multiplicity at " + sigma.to_string());
        out.g.emplace(sigma, g);
        for (std::size_t r = 0; r <= k; ++r) {
            if (!D.at(r, k)) continue;
            auto& slot = remaining[parts[r]];
            slot = checked::sub(slot, checked::mul(g, D.at(r, k)));
        }
        for (auto jt = remaining.begin(); jt != remaining.end();) jt = jt->second == 0 ? remaining.erase(jt) : std::next(jt);
    }
    if (!remaining.empty()) throw InvariantViolation("Young tensor decomposition left an unexplained character");
    return out;
}

/// dim Ext^i(Y^lambda, Y^mu) = sum_sigma g_sigma [H_i : L(sigma)].
inline std::int64_t ext_young(int p, int d, const Partition& lambda, const Partition& mu, std::int64_t i,
                              const DecompositionMatrix& D) {
    require_prime(p);
    detail::check_decomp(p, d, D);
    const auto decomposition = young_tensor(lambda, mu, D);
    const auto mult = homology_simple_multiplicities(p, d, i, D);
    std::int64_t total = 0;
    for (const auto& [sigma, g] : decomposition.g)
        if (auto it = mult.find(sigma); it != mult.end()) total = checked::add(total, checked::mul(g, it->second));
    return total;
}

// ---------------------------------------------------------------------------
// Data-free structural answers.

/// True iff H^*(Sigma_d, Y^lambda) is zero in every degree.
inline bool vanishes_identically(int p, const Partition& lambda) {
    const auto split = restricted_split(lambda, p);
    if (split.restricted.empty()) return false;
    return !is_doty_shape(split.restricted, p);
}

inline int complexity_young(int p, const Partition& lambda) { return restricted_split(lambda, p).rest.size(); }

inline bool is_projective_young(int p, const Partition& lambda) { return is_p_restricted(lambda, p); }

/// Y^lambda lies in the block of the Specht module S^lambda.
inline bool in_principal_block(int p, const Partition& lambda) {
    require_prime(p);
    return p_core(lambda, p) == p_core(Partition::rectangle(lambda.size(), 1), p);
}

struct StabilityEntry {
    int a = 0;
    Partition scaled;
    std::int64_t value = 0;
};

struct StabilityReport {
    int p = 2;
    Partition lambda;
    std::int64_t degree = 0;
    std::optional<int> threshold;  // s(i) = i + 1 at p = 2; unknown otherwise
    std::vector<StabilityEntry> entries;

    /// All values at a >= threshold agree (vacuous without a threshold or with fewer than two such points).
    bool stable() const {
        if (!threshold) return true;
        std::optional<std::int64_t> seen;
        for (const auto& e : entries) {
            if (e.a < *threshold) continue;
            if (seen && *seen != e.value) return false;
            seen = e.value;
        }
        return true;
    }
};

/// H^i(Sigma_{p^a d}, Y^{p^a lambda}) for a in [a_min, a_max]. `decomp` supplies
/// the matrix for each scaled degree and throws DataUnavailable when it cannot.
template <class DecompSource>
StabilityReport stability_check(int p, const Partition& lambda, std::int64_t i, int a_min, int a_max, DecompSource&& decomp) {
    require_prime(p);
    if (a_min < 0 || a_max < a_min) throw InvalidArgument("bad scaling range");
    StabilityReport report;
    report.p = p;
    report.lambda = lambda;
    report.degree = i;
    if (p == 2) report.threshold = static_cast<int>(i + 1);
    for (int a = a_min; a <= a_max; ++a) {
        const int scale = static_cast<int>(checked::pow(p, a));
        const auto scaled = lambda.scaled(scale);
        const int d = scaled.size();
        const DecompositionMatrix& D = decomp(p, d);
        report.entries.push_back({a, scaled, h_young(p, d, scaled, i, D)});
    }
    return report;
}

} // namespace youngcoho
