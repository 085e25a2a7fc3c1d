// Offline generator for the bundled decomposition matrices.
//
// For p-restricted lambda, dim L(lambda)_nu is the rank mod p of the Gram
// matrix of the contravariant form on V(lambda)_nu. V(lambda) is realised as
// the image of the divided powers D^{lambda_1} (x) D^{lambda_2} (x) ... in the
// exterior powers along the columns, with the wedge monomials orthonormal;
// the semistandard tableaux of content nu give a basis of the weight space.
// Other lambda use Steinberg: L(lambda0 + p mu) = L(lambda0) (x) L(mu)^(1).
// Characters are turned into Schur expansions by inverting Kostka numbers,
// and the decomposition matrix is the inverse of the resulting matrix.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "youngcoho/gl_characters.hpp"
#include "youngcoho/partition.hpp"
#include "youngcoho/schur_data.hpp"

using namespace youngcoho;

namespace {

using Column = std::uint32_t;  // bitmask of the letters in one column

/// Rank over F_p of a dense matrix with entries in [0, p).
std::size_t rank_mod_p(std::vector<std::vector<int>> m, int p) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    if (p == 2) {
        const std::size_t words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> bits(m.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (m[r][c] & 1) bits[r][c / 64] |= std::uint64_t{1} << (c % 64);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < bits.size(); ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t mask = std::uint64_t{1} << (c % 64);
            std::size_t piv = rank;
            while (piv < bits.size() && !(bits[piv][w] & mask)) ++piv;
            if (piv == bits.size()) continue;
            std::swap(bits[piv], bits[rank]);
            for (std::size_t r = rank + 1; r < bits.size(); ++r)
                if (bits[r][w] & mask)
                    for (std::size_t k = w; k < words; ++k) bits[r][k] ^= bits[rank][k];
            ++rank;
        }
        return rank;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        int inv = 1;
        while (m[rank][c] * inv % p != 1) ++inv;
        for (auto& x : m[rank]) x = x * inv % p;
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const int f = m[r][c];
            if (!f) continue;
            for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Semistandard tableaux of shape lambda and content nu, as row contents
/// rows[i][letter] = number of that letter in row i.
std::vector<std::vector<std::vector<int>>> ssyt_row_contents(const Partition& lambda, const Partition& nu) {
    std::vector<std::vector<std::vector<int>>> out;
    const int rows = lambda.length();
    const int letters = nu.length();
    std::vector<std::vector<int>> content(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(letters), 0));
    std::vector<int> shape(static_cast<std::size_t>(rows) + 1, 0);
    // Place letters in order; letter k forms a horizontal strip on the current shape.
    std::function<void(int)> letter = [&](int k) {
        if (k == letters) {
            bool full = true;
            for (int r = 0; r < rows; ++r) full &= shape[static_cast<std::size_t>(r)] == lambda[static_cast<std::size_t>(r)];
            if (full) out.push_back(content);
            return;
        }
        const std::vector<int> prev = shape;
        std::function<void(int, int)> row = [&](int r, int left) {
            if (left == 0) {
                letter(k + 1);
                return;
            }
            if (r >= rows) return;
            const auto ur = static_cast<std::size_t>(r);
            const int limit = std::min(lambda[ur], r == 0 ? lambda[0] : prev[ur - 1]);
            for (int x = std::min(left, limit - prev[ur]); x >= 0; --x) {
                shape[ur] = prev[ur] + x;
                content[ur][static_cast<std::size_t>(k)] = x;
                row(r + 1, left - x);
            }
            shape[ur] = prev[ur];
            content[ur][static_cast<std::size_t>(k)] = 0;
        };
        row(0, nu[static_cast<std::size_t>(k)]);
    };
    letter(0);
    return out;
}

/// Image of one divided-power basis element: signed sum of column tuples.
std::map<std::vector<Column>, int> weyl_vector(const Partition& lambda, const std::vector<std::vector<int>>& rows) {
    std::map<std::vector<Column>, int> out;
    const int ncols = lambda[0];
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(ncols));  // letters top to bottom
    std::function<void(std::size_t, std::size_t, std::vector<int>&)> fill_row;
    std::function<void(std::size_t)> next_row = [&](std::size_t r) {
        if (r == rows.size()) {
            std::vector<Column> key(static_cast<std::size_t>(ncols), 0);
            int sign = 1;
            for (std::size_t c = 0; c < columns.size(); ++c) {
                const auto& col = columns[c];
                for (std::size_t a = 0; a < col.size(); ++a) {
                    key[c] |= Column{1} << col[a];
                    for (std::size_t b = a + 1; b < col.size(); ++b)
                        if (col[a] > col[b]) sign = -sign;
                }
            }
            out[key] += sign;
            return;
        }
        std::vector<int> left = rows[r];
        fill_row(r, 0, left);
    };
    fill_row = [&](std::size_t r, std::size_t c, std::vector<int>& left) {
        if (c == static_cast<std::size_t>(lambda[r])) {
            next_row(r + 1);
            return;
        }
        for (std::size_t letter = 0; letter < left.size(); ++letter) {
            if (!left[letter]) continue;
            if (std::find(columns[c].begin(), columns[c].end(), static_cast<int>(letter)) != columns[c].end()) continue;
            --left[letter];
            columns[c].push_back(static_cast<int>(letter));
            fill_row(r, c + 1, left);
            columns[c].pop_back();
            ++left[letter];
        }
    };
    next_row(0);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// dim L(lambda)_nu for p-restricted lambda.
std::int64_t restricted_weight_dim(const Partition& lambda, const Partition& nu, int p) {
    const auto tableaux = ssyt_row_contents(lambda, nu);
    if (tableaux.empty()) return 0;
    std::vector<std::map<std::vector<Column>, int>> vecs;
    vecs.reserve(tableaux.size());
    for (const auto& t : tableaux) vecs.push_back(weyl_vector(lambda, t));
    // Gram matrix via an index from column tuple to the vectors using it.
    std::map<std::vector<Column>, std::vector<std::pair<std::size_t, int>>> by_key;
    for (std::size_t t = 0; t < vecs.size(); ++t)
        for (const auto& [key, v] : vecs[t]) by_key[key].emplace_back(t, v);
    const std::size_t n = vecs.size();
    std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n, 0));
    for (const auto& [key, list] : by_key)
        for (const auto& [a, x] : list)
            for (const auto& [b, y] : list) gram[a][b] += static_cast<std::int64_t>(x) * y;
    std::vector<std::vector<int>> reduced(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) reduced[a][b] = static_cast<int>(((gram[a][b] % p) + p) % p);
    return static_cast<std::int64_t>(rank_mod_p(std::move(reduced), p));
}

/// Schur expansion of a character given by its dominant weight multiplicities.
SchurExpansion from_weight_multiplicities(int d, std::map<Partition, std::int64_t> weights) {
    SchurExpansion out(d);
    // Peel off the lex-largest remaining weight: it must be a highest weight.
    const auto& parts = partition_list(d);
    for (const auto& mu : parts) {
        const auto c = weights[mu];
        if (!c) continue;
        out.add(mu, c);
        for (const auto& nu : parts)
            if (dominance_leq(nu, mu)) weights[nu] -= c * kostka(mu, nu);
    }
    return out;
}

class Generator {
public:
    explicit Generator(int p) : p_(p) {}

    /// Rows of D^{-1}: characters of the simple modules of degree d.
    const std::map<Partition, SchurExpansion>& simples(int d) {
        auto it = simples_.find(d);
        if (it != simples_.end()) return it->second;
        std::map<Partition, SchurExpansion> out;
        for (const auto& lambda : partition_list(d)) {
            const auto split = restricted_split(lambda, p_);
            if (split.rest.empty()) {
                std::map<Partition, std::int64_t> weights;
                for (const auto& nu : partition_list(d))
                    if (dominance_leq(nu, lambda)) weights[nu] = restricted_weight_dim(lambda, nu, p_);
                out.emplace(lambda, from_weight_multiplicities(d, std::move(weights)));
            } else {
                const int a = split.restricted.size();
                const auto& low = a == 0 ? SchurExpansion::one() : simples(a).at(split.restricted);
                const auto& high = simples(split.rest.size()).at(split.rest);
                out.emplace(lambda, lr_product(low, frobenius_twist(high, 1, p_)));
            }
        }
        return simples_.emplace(d, std::move(out)).first->second;
    }

    DecompositionMatrix decomposition(int d) {
        const auto& chars = simples(d);
        // E[lambda][mu] = coefficient of s_mu in ch L(lambda); D = E^{-1}.
        const auto& parts = partition_list(d);
        const std::size_t n = parts.size();
        DecompositionMatrix E(p_, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) E.at(i, j) = chars.at(parts[i]).coeff(parts[j]);
        const auto inv = inverse_decomposition(E);
        DecompositionMatrix D(p_, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) D.at(i, j) = inv[i][j];
        D.validate();
        return D;
    }

private:
    int p_;
    std::map<int, std::map<Partition, SchurExpansion>> simples_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate decomposition matrices of the Schur algebras S(d,d)"};
    int p = 2;
    int max_d = 10;
    std::string out_dir = "data";
    app.add_option("-p", p, "characteristic")->required();
    app.add_option("--max-d", max_d, "largest degree to generate");
    app.add_option("--out", out_dir, "output directory");
    CLI11_PARSE(app, argc, argv);

    try {
        require_prime(p);
        std::filesystem::create_directories(out_dir);
        Generator gen(p);
        for (int d = 1; d <= max_d; ++d) {
            const auto start = std::chrono::steady_clock::now();
            const auto D = gen.decomposition(d);
            std::ostringstream text;
            text << "# decomposition numbers [V(mu):L(lambda)] of S(" << d << "," << d << ") in characteristic " << p << "\n";
            text << "# columns: mu | lambda | multiplicity; absent pairs are zero\n";
            D.write(text);
            const auto name = DataStore::file_name(p, d);
            std::ofstream(std::filesystem::path(out_dir) / name, std::ios::binary) << text.str();
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::cerr << name << " written (" << D.rank() << " partitions, " << secs << " s)\n";
        }
        // Rebuild the manifest from every matrix file present.
        std::map<std::string, std::string> sums;
        for (const auto& entry : std::filesystem::directory_iterator(out_dir)) {
            const auto name = entry.path().filename().string();
            if (name.rfind("decomp_", 0) != 0) continue;
            std::ifstream in(entry.path(), std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            sums[name] = hex64(fnv1a64(ss.str()));
        }
        std::ofstream manifest(std::filesystem::path(out_dir) / "CHECKSUMS");
        for (const auto& [name, sum] : sums) manifest << sum << "  " << name << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
