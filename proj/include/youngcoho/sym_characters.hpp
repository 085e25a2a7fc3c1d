#pragma once

// Ordinary characters of the symmetric group: Murnaghan-Nakayama, class
// sizes, and class-function arithmetic with exact integers and rationals.

#include <boost/rational.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace youngcoho {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked::mul(r, i);
    return r;
}

/// Size of the conjugacy class of cycle type mu: d! / prod_i i^{m_i} m_i!.
inline std::int64_t class_size(const Partition& mu) {
    std::int64_t centralizer = 1;
    std::map<int, int> mult;
    for (int x : mu.parts()) ++mult[x];
    for (auto [part, m] : mult) centralizer = checked::mul(centralizer, checked::mul(checked::pow(part, m), factorial(m)));
    return factorial(mu.size()) / centralizer;
}

/// chi^lambda(rho) by removing rim hooks of size rho_1, rho_2, ...
/// `order` permutes which part of rho is stripped first (tests use this to
/// check independence of the removal sequence).
inline std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& rho, std::span<const int> order = {}) {
    if (lambda.size() != rho.size()) throw InvalidArgument("character argument has the wrong size");
    std::vector<int> seq = rho.parts();
    if (!order.empty()) {
        if (order.size() != seq.size()) throw InvalidArgument("removal order must permute the cycle lengths");
        std::vector<int> permuted;
        for (int idx : order) permuted.push_back(seq.at(static_cast<std::size_t>(idx)));
        seq = std::move(permuted);
    }
    // Memo only for the canonical order; arbitrary orders recurse directly.
    struct Key {
        Partition shape;
        std::size_t step;
        bool operator<(const Key& o) const { return step != o.step ? step < o.step : shape < o.shape; }
    };
    std::map<Key, std::int64_t> memo;
    std::function<std::int64_t(const Partition&, std::size_t)> rec = [&](const Partition& shape, std::size_t step) -> std::int64_t {
        if (step == seq.size()) return shape.empty() ? 1 : 0;
        Key key{shape, step};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::int64_t total = 0;
        for (const auto& hook : removable_rim_hooks(shape, seq[step])) {
            const std::int64_t sub = rec(hook.result, step + 1);
            total = checked::add(total, (hook.leg_length % 2) ? -sub : sub);
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(lambda, 0);
}

/// A class function on S_d, stored on the classes in the order of partitions_of(d).
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(int d, std::vector<std::int64_t> values) : d_(d), values_(std::move(values)) {
        if (values_.size() != partition_list(d).size()) throw InvalidArgument("class function needs one value per class");
    }

    static ClassFunction zero(int d) { return ClassFunction(d, std::vector<std::int64_t>(partition_list(d).size(), 0)); }

    int degree() const { return d_; }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }

    /// Value at the identity class (1^d), which is the last partition in descending order.
    std::int64_t at_identity() const { return values_.back(); }

    std::int64_t at(const Partition& cycle_type) const {
        const auto& classes = partition_list(d_);
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == cycle_type) return values_[i];
        throw InvalidArgument("cycle type " + cycle_type.to_string() + " is not a class of S_" + std::to_string(d_));
    }

    ClassFunction& add_scaled(const ClassFunction& other, std::int64_t k) {
        check_same(other);
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] = checked::add(values_[i], checked::mul(k, other.values_[i]));
        return *this;
    }

    friend ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        std::vector<std::int64_t> v(a.values_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::mul(a.values_[i], b.values_[i]);
        return ClassFunction(a.d_, std::move(v));
    }

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    void check_same(const ClassFunction& other) const {
        if (d_ != other.d_) throw InvalidArgument("class functions live on different symmetric groups");
    }

    int d_ = 0;
    std::vector<std::int64_t> values_{1};
};

/// Character table of S_d, computed once per d and shared read-only afterwards.
class CharacterTable {
public:
    static const CharacterTable& get(int d) {
        static std::mutex mutex;
        static std::map<int, std::unique_ptr<CharacterTable>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[d];
        if (!slot) slot.reset(new CharacterTable(d));
        return *slot;
    }

    int degree() const { return d_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    const std::vector<std::int64_t>& class_sizes() const { return sizes_; }
    std::int64_t order() const { return factorial(d_); }

    std::size_t index(const Partition& lambda) const {
        auto it = index_.find(lambda);
        if (it == index_.end()) throw InvalidArgument(lambda.to_string() + " is not a partition of " + std::to_string(d_));
        return it->second;
    }

    const ClassFunction& character(const Partition& lambda) const { return chars_[index(lambda)]; }

private:
    explicit CharacterTable(int d) : d_(d), parts_(partitions_of(d)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            index_.emplace(parts_[i], i);
            sizes_.push_back(class_size(parts_[i]));
        }
        for (const auto& lambda : parts_) {
            std::vector<std::int64_t> row;
            row.reserve(parts_.size());
            for (const auto& rho : parts_) row.push_back(murnaghan_nakayama(lambda, rho));
            chars_.emplace_back(d, std::move(row));
        }
    }

    int d_;
    std::vector<Partition> parts_;
    std::unordered_map<Partition, std::size_t> index_;
    std::vector<std::int64_t> sizes_;
    std::vector<ClassFunction> chars_;
};

inline const ClassFunction& irreducible_character(const Partition& lambda) {
    return CharacterTable::get(lambda.size()).character(lambda);
}

/// <f, g> = (1/d!) sum over classes of |class| f g (characters are real).
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.degree() != g.degree()) throw InvalidArgument("class functions live on different symmetric groups");
    const auto& table = CharacterTable::get(f.degree());
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < f.values().size(); ++i)
        acc = checked::add(acc, checked::mul(table.class_sizes()[i], checked::mul(f[i], g[i])));
    return Rational(acc, table.order());
}

/// Multiplicities of the irreducible characters in f (must be integral).
inline std::map<Partition, std::int64_t> irreducible_multiplicities(const ClassFunction& f) {
    const auto& table = CharacterTable::get(f.degree());
    std::map<Partition, std::int64_t> out;
    for (const auto& lambda : table.partitions()) {
        const Rational m = inner_product(f, table.character(lambda));
        if (m.denominator() != 1) throw InvariantViolation("class function is not a virtual character");
        if (m.numerator() != 0) out.emplace(lambda, m.numerator());
    }
    return out;
}

} // namespace youngcoho
