#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace youngcoho {

/// Malformed input or a violated precondition (CLI exit code 1).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A decomposition matrix needed for the query is not bundled (exit code 2).
class DataUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed: bad data, overflow, negative multiplicity (exit code 3).
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force oracle asked for a case beyond its resource guard.
class OracleOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw InvariantViolation("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("integer overflow in multiplication");
    return r;
}

inline std::int64_t pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = mul(r, base);
    return r;
}

} // namespace checked

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline void require_prime(int p) {
    if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
}

} // namespace youngcoho
