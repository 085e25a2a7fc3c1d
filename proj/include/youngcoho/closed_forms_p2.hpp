#pragma once

// Characteristic-two closed forms for H^1 and H^2 of Young modules, driven
// only by the 2-adic layers of lambda. No decomposition data needed.

#include <cstdint>
#include <optional>

#include "cohomology.hpp"
#include "errors.hpp"
#include "gl_characters.hpp"
#include "partition.hpp"

namespace youngcoho {

/// lambda = lambda0 + 2 mu with lambda0 a column; returns 2 mu.
inline Partition strip_restricted(const Partition& lambda) {
    const auto split = restricted_split(lambda, 2);
    if (!is_doty_shape(split.restricted, 2))
        throw InvalidArgument("cohomology of Y^" + lambda.to_string() + " vanishes; stripping undefined");
    return split.rest.scaled(2);
}

namespace detail {

inline bool is_column(const Partition& x) { return x.empty() || x[0] == 1; }

/// Number of parts equal to 1 after the leading (2^twos): returns the tail length when x = (2^twos, 1^m).
inline std::optional<int> two_column_tail(const Partition& x, int twos) {
    if (x.length() < twos) return std::nullopt;
    for (int k = 0; k < x.length(); ++k)
        if (x[static_cast<std::size_t>(k)] != (k < twos ? 2 : 1)) return std::nullopt;
    return x.length() - twos;
}

} // namespace detail

/// dim H^1(Sigma_d, Y^lambda) at p = 2.
inline std::int64_t h1_closed(const Partition& lambda) {
    if (is_projective_young(2, lambda) || !in_principal_block(2, lambda)) return 0;
    const auto ex = p_adic_expansion(lambda, 2);
    std::size_t s = 1;
    while (ex.layer(s).empty()) ++s;
    for (std::size_t t = 0; t < ex.layers.size(); ++t)
        if (t != s && !detail::is_column(ex.layer(t))) return 0;
    const auto& top = ex.layer(s);
    if (detail::is_column(top)) return top.length() % 2 ? 1 : 2;
    if (auto m = detail::two_column_tail(top, 1); m && *m >= 1) return 1;
    return 0;
}

namespace detail {

/// Column classes shared by both tables for a column (1^n), n >= 1.
/// Index into {1, 1^2, 1^{4a-1}, 1^{4a}, 1^{4a+1}, 1^{4a+2}}.
inline int column_class(int n) {
    if (n == 1) return 0;
    if (n == 2) return 1;
    switch (n % 4) {
        case 3: return 2;
        case 0: return 3;
        case 1: return 4;
        default: return 5;
    }
}

// First table: rows are lambda_(s) in {1^{2b}, 1^{2b-1}, 21^b, empty}; columns
// are lambda_(1) in {1, 1^2, 1^{4a-1}, 1^{4a}, 1^{4a+1}, 1^{4a+2}, 21^{2c-1}, 21^{2c}, 221^a}.
inline constexpr int kH2ByLayerOne[4][9] = {
    {3, 5, 4, 6, 5, 7, 2, 3, 1},
    {2, 4, 3, 5, 4, 6, 2, 3, 1},
    {1, 1, 1, 1, 1, 1, 0, 0, 0},
    {1, 3, 2, 4, 3, 5, 2, 3, 1},
};

// Second table, lambda_(1) empty; columns are lambda_(s) in {empty, 1, 1^2,
// 1^{4a-1}, 1^{4a}, 1^{4a+1}, 1^{4a+2}, 1^{4a+3}, 21^{2c-1}, 21^{2c}, 221^c}.
inline constexpr int kH2EmptyLayerOne[11] = {0, 2, 5, 3, 6, 4, 7, 3, 3, 4, 1};

/// Column index of lambda_(1) in the first table, or nullopt when unlisted.
inline std::optional<int> layer_one_column(const Partition& x) {
    if (x.empty()) return std::nullopt;
    if (is_column(x)) return column_class(x.length());
    if (auto m = two_column_tail(x, 1); m && *m >= 1) return *m % 2 ? 6 : 7;
    if (auto m = two_column_tail(x, 2); m && *m >= 1) return 8;
    return std::nullopt;
}

/// Row index of lambda_(s) in the first table, or nullopt when unlisted.
inline std::optional<int> layer_s_row(const Partition& x) {
    if (x.empty()) return 3;
    if (is_column(x)) return x.length() % 2 == 0 ? 0 : 1;
    if (auto m = two_column_tail(x, 1); m && *m >= 1) return 2;
    return std::nullopt;
}

/// Column index of lambda_(s) in the second table, or nullopt when unlisted.
inline std::optional<int> layer_s_column(const Partition& x) {
    if (x.empty()) return 0;
    if (is_column(x)) {
        const int n = x.length();
        if (n == 1) return 1;
        if (n == 2) return 2;
        // 1^{4a-1} and 1^{4a+3} overlap for n >= 7 and carry the same value.
        switch (n % 4) {
            case 3: return 3;
            case 0: return 4;
            case 1: return 5;
            default: return 6;
        }
    }
    if (auto m = two_column_tail(x, 1); m && *m >= 1) return *m % 2 ? 8 : 9;
    if (auto m = two_column_tail(x, 2); m && *m >= 1) return 10;
    return std::nullopt;
}

} // namespace detail

/// dim H^2(Sigma_d, Y^lambda) at p = 2, looked up from the layer shapes of
/// lambda_(1) and the next nonempty layer lambda_(s), s >= 2. Shapes the
/// tables do not list give 0.
inline std::int64_t h2_closed(const Partition& lambda) {
    if (is_projective_young(2, lambda) || !in_principal_block(2, lambda)) return 0;
    const auto ex = p_adic_expansion(lambda, 2);
    std::size_t s = 2;
    while (s < ex.layers.size() && ex.layer(s).empty()) ++s;
    for (std::size_t t = 0; t < ex.layers.size(); ++t)
        if (t != 1 && t != s && !detail::is_column(ex.layer(t))) return 0;
    const auto& one = ex.layer(1);
    const auto& top = ex.layer(s);
    if (one.empty()) {
        const auto col = detail::layer_s_column(top);
        return col ? detail::kH2EmptyLayerOne[*col] : 0;
    }
    const auto col = detail::layer_one_column(one);
    const auto row = detail::layer_s_row(top);
    if (!col || !row) return 0;
    return detail::kH2ByLayerOne[*row][*col];
}

} // namespace youngcoho
