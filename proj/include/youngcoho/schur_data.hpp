#pragma once

// Decomposition matrices [V(mu):L(lambda)] of the Schur algebra S(d,d) as
// validated input data, the Cartan matrix C = D^T D (= Hom dimensions between
// Young modules) and the descending recursion that recovers D from C.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace youngcoho {

/// Square integer matrix indexed by the partitions of d in descending lex order.
class PartitionMatrix {
public:
    PartitionMatrix() : PartitionMatrix(2, 0) {}
    PartitionMatrix(int p, int d) : p_(p), d_(d), parts_(&partition_list(d)) {
        for (std::size_t i = 0; i < parts_->size(); ++i) index_.emplace((*parts_)[i], i);
        cells_.assign(parts_->size() * parts_->size(), 0);
    }

    int prime() const { return p_; }
    int degree() const { return d_; }
    std::size_t rank() const { return parts_->size(); }
    const std::vector<Partition>& partitions() const { return *parts_; }

    std::size_t index(const Partition& lambda) const {
        auto it = index_.find(lambda);
        if (it == index_.end())
            throw InvalidArgument(lambda.to_string() + " is not a partition of " + std::to_string(d_));
        return it->second;
    }
    bool has(const Partition& lambda) const { return index_.count(lambda) != 0; }

    std::int64_t at(std::size_t row, std::size_t col) const { return cells_[row * rank() + col]; }
    std::int64_t& at(std::size_t row, std::size_t col) { return cells_[row * rank() + col]; }
    std::int64_t operator()(const Partition& row, const Partition& col) const { return at(index(row), index(col)); }

    friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
        return a.p_ == b.p_ && a.d_ == b.d_ && a.cells_ == b.cells_;
    }

protected:
    int p_;
    int d_;
    const std::vector<Partition>* parts_;
    std::unordered_map<Partition, std::size_t> index_;
    std::vector<std::int64_t> cells_;
};

/// d_{mu,lambda} = [V(mu) : L(lambda)]; row = Weyl module, column = simple.
class DecompositionMatrix : public PartitionMatrix {
public:
    using PartitionMatrix::PartitionMatrix;

    static DecompositionMatrix identity(int p, int d) {
        DecompositionMatrix m(p, d);
        for (std::size_t i = 0; i < m.rank(); ++i) m.at(i, i) = 1;
        return m;
    }

    /// Unit diagonal, nonnegative entries, and d_{mu,lambda} != 0 only when lambda <= mu in dominance.
    void validate() const {
        for (std::size_t r = 0; r < rank(); ++r) {
            if (at(r, r) != 1)
                throw InvariantViolation("decomposition matrix diagonal entry at " + partitions()[r].to_string() + " is not 1");
            for (std::size_t c = 0; c < rank(); ++c) {
                const auto v = at(r, c);
                if (v < 0) throw InvariantViolation("negative decomposition number");
                if (v != 0 && !dominance_leq(partitions()[c], partitions()[r]))
                    throw InvariantViolation("unitriangularity violated at (" + partitions()[r].to_string() + " | " +
                                             partitions()[c].to_string() + ")");
            }
        }
    }

    /// Simples L(lambda) with nonzero multiplicity in the Weyl module V(mu).
    std::map<Partition, std::int64_t> weyl_row(const Partition& mu) const {
        std::map<Partition, std::int64_t> out;
        const auto r = index(mu);
        for (std::size_t c = 0; c < rank(); ++c)
            if (at(r, c)) out.emplace(partitions()[c], at(r, c));
        return out;
    }

    /// Writes the documented text format: header then one line per nonzero entry.
    void write(std::ostream& os) const {
        os << "p=" << p_ << " d=" << d_ << "\n";
        for (std::size_t r = 0; r < rank(); ++r)
            for (std::size_t c = 0; c < rank(); ++c)
                if (at(r, c)) os << partitions()[r].to_string() << " | " << partitions()[c].to_string() << " | " << at(r, c) << "\n";
    }
};

/// C(lambda, mu) = [P(lambda) : L(mu)] = dim Hom(Y^lambda, Y^mu).
class CartanMatrix : public PartitionMatrix {
public:
    using PartitionMatrix::PartitionMatrix;
};

namespace detail {

inline std::string trim(std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

/// Parses and validates a decomposition matrix. When `expect_p`/`expect_d`
/// are given the header must agree with them.
inline DecompositionMatrix load_decomposition_matrix(std::istream& in, std::optional<int> expect_p = {},
                                                     std::optional<int> expect_d = {}) {
    std::string line;
    int lineno = 0;
    std::optional<DecompositionMatrix> matrix;
    std::vector<char> seen;
    auto fail = [&](const std::string& why) -> void {
        throw InvariantViolation("decomposition data line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (!matrix) {
            int p = 0, d = -1;
            char tail = 0;
            if (std::sscanf(line.c_str(), "p=%d d=%d %c", &p, &d, &tail) != 2) fail("malformed header, expected 'p=<p> d=<d>'");
            if (!is_prime(p) || d < 0 || d > kMaxPartitionSize) fail("header has invalid p or d");
            if (expect_p && *expect_p != p) fail("header prime " + std::to_string(p) + " does not match request");
            if (expect_d && *expect_d != d) fail("header degree " + std::to_string(d) + " does not match request");
            matrix.emplace(p, d);
            seen.assign(matrix->rank() * matrix->rank(), 0);
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '|')) fields.push_back(detail::trim(field));
        if (fields.size() != 3) fail("malformed line, expected 'mu | lambda | m'");
        Partition mu, lambda;
        try {
            mu = Partition::parse(fields[0]);
            lambda = Partition::parse(fields[1]);
        } catch (const InvalidArgument& e) {
            fail(e.what());
        }
        if (!matrix->has(mu) || !matrix->has(lambda)) fail("entry is not indexed by partitions of d");
        std::int64_t m = 0;
        try {
            std::size_t used = 0;
            m = std::stoll(fields[2], &used);
            if (used != fields[2].size()) fail("malformed multiplicity");
        } catch (const std::logic_error&) {
            fail("malformed multiplicity");
        }
        if (m < 0) fail("negative multiplicity");
        const auto r = matrix->index(mu), c = matrix->index(lambda);
        if (seen[r * matrix->rank() + c]) fail("duplicate entry");
        seen[r * matrix->rank() + c] = 1;
        matrix->at(r, c) = m;
    }
    if (!matrix) throw InvariantViolation("decomposition data is empty");
    for (std::size_t r = 0; r < matrix->rank(); ++r)
        if (!seen[r * matrix->rank() + r])
            throw InvariantViolation("decomposition data is missing the diagonal entry for " +
                                     matrix->partitions()[r].to_string());
    matrix->validate();
    return *matrix;
}

inline CartanMatrix cartan_from_decomp(const DecompositionMatrix& D) {
    CartanMatrix C(D.prime(), D.degree());
    const std::size_t n = D.rank();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s = checked::add(s, checked::mul(D.at(k, a), D.at(k, b)));
            C.at(a, b) = s;
        }
    return C;
}

/// Recovers the unique unitriangular D with D^T D = C, processing weights in
/// descending lexicographic order:
///   [V(lambda):L(mu)] = C(lambda,mu) - sum_{sigma > lambda} [V(sigma):L(lambda)] [V(sigma):L(mu)].
inline DecompositionMatrix decomp_from_cartan(const CartanMatrix& C) {
    DecompositionMatrix D(C.prime(), C.degree());
    const std::size_t n = C.rank();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (C.at(a, b) != C.at(b, a)) throw InvariantViolation("not a valid Cartan matrix: not symmetric");
    for (std::size_t lam = 0; lam < n; ++lam) {
        for (std::size_t mu = 0; mu < n; ++mu) {
            std::int64_t v = C.at(lam, mu);
            for (std::size_t sigma = 0; sigma < lam; ++sigma)
                v = checked::sub(v, checked::mul(D.at(sigma, lam), D.at(sigma, mu)));
            if (v < 0) throw InvariantViolation("not a valid Cartan matrix: recursion produced a negative entry");
            D.at(lam, mu) = v;
        }
    }
    try {
        D.validate();
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string("not a valid Cartan matrix: ") + e.what());
    }
    return D;
}

inline std::int64_t hom_dim_young(const Partition& lambda, const Partition& mu, const DecompositionMatrix& D) {
    std::int64_t s = 0;
    const auto a = D.index(lambda), b = D.index(mu);
    for (std::size_t k = 0; k < D.rank(); ++k) s = checked::add(s, checked::mul(D.at(k, a), D.at(k, b)));
    return s;
}

/// Composition factors of the two-column Weyl modules V(2,1^{a-2}) and
/// V(2,2,1^{a-4}) in characteristic 2. Returns nullopt for other shapes.
inline std::optional<std::map<Partition, std::int64_t>> two_column_weyl_p2(const Partition& lambda) {
    if (lambda.empty() || lambda[0] != 2) return std::nullopt;
    const int n = lambda.size();
    const int twos = lambda.conjugate()[1];
    auto hook = [](int m) {  // (2,1^{m-2})
        std::vector<int> v(static_cast<std::size_t>(m - 1), 1);
        v[0] = 2;
        return Partition(v);
    };
    const Partition column = Partition::rectangle(1, n);
    std::map<Partition, std::int64_t> out{{lambda, 1}};
    if (twos == 1) {
        if (n % 2 == 0) out[column] = 1;
        return out;
    }
    if (twos != 2) return std::nullopt;
    if (n % 4 == 0 || n % 4 == 2) out[hook(n)] = 1;
    if (n % 4 == 1 || n % 4 == 2) out[column] = 1;
    return out;
}

// ---------------------------------------------------------------------------
// Bundled data directory.

/// 64-bit FNV-1a, used for the data checksums.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

/// Loads decomposition matrices from a directory holding `decomp_p<p>_d<d>.txt`
/// files and a CHECKSUMS manifest. Matrices are immutable once loaded and
/// cached for the lifetime of the store.
class DataStore {
public:
    explicit DataStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const { return dir_; }

    static std::string file_name(int p, int d) {
        return "decomp_p" + std::to_string(p) + "_d" + std::to_string(d) + ".txt";
    }

    bool available(int p, int d) const {
        return d == 0 || std::filesystem::exists(dir_ / file_name(p, d));
    }

    const DecompositionMatrix& get(int p, int d) const {
        require_prime(p);
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = cache_[{p, d}];
        if (!slot) slot = std::make_shared<const DecompositionMatrix>(load_locked(p, d));
        return *slot;
    }

    /// Verifies the checksum of every file listed in CHECKSUMS; returns the list of files checked.
    std::vector<std::string> verify_checksums() const {
        std::vector<std::string> out;
        for (const auto& [name, sum] : manifest()) {
            const auto text = slurp(dir_ / name);
            if (hex64(fnv1a64(text)) != sum) throw InvariantViolation("checksum mismatch for " + name);
            out.push_back(name);
        }
        return out;
    }

private:
    static std::string slurp(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataUnavailable("cannot read " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    std::map<std::string, std::string> manifest() const {
        std::map<std::string, std::string> out;
        std::ifstream in(dir_ / "CHECKSUMS");
        std::string sum, name;
        while (in >> sum >> name) out[name] = sum;
        return out;
    }

    DecompositionMatrix load_locked(int p, int d) const {
        if (d == 0) return DecompositionMatrix::identity(p, 0);
        const auto path = dir_ / file_name(p, d);
        if (!std::filesystem::exists(path))
            throw DataUnavailable("no decomposition matrix for p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                  " in " + dir_.string());
        const auto text = slurp(path);
        const auto sums = manifest();
        if (auto it = sums.find(file_name(p, d)); it != sums.end() && it->second != hex64(fnv1a64(text)))
            throw InvariantViolation("checksum mismatch for " + path.string());
        std::istringstream in(text);
        return load_decomposition_matrix(in, p, d);
    }

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const DecompositionMatrix>> cache_;
};

#ifndef YOUNGCOHO_DEFAULT_DATA_DIR
#define YOUNGCOHO_DEFAULT_DATA_DIR "data"
#endif

/// Data directory: explicit choice, else $YOUNG_COHO_DATA, else ./data when
/// present, else the directory configured at build time.
inline std::filesystem::path resolve_data_dir(const std::string& explicit_dir = {}) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("YOUNG_COHO_DATA"); env && *env) return env;
    if (std::filesystem::exists("data/CHECKSUMS")) return "data";
    return YOUNGCOHO_DEFAULT_DATA_DIR;
}

} // namespace youngcoho
