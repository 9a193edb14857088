#pragma once

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpfun {

/// Element of the base ring. Fixed to the rational integers for now; every
/// algorithm downstream only uses the EuclideanElement contract below, so a
/// different Euclidean domain with element factorization can be swapped in.
using Int = mpz_class;

/// Contract the base-ring element type has to satisfy: exact ring arithmetic,
/// Euclidean division, comparability (for pivot selection) and decimal
/// serialization. `Int` satisfies it; see the static_assert in arith.cpp.
template <typename T>
concept EuclideanElement = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;  // truncated quotient
    { a % b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    { T(0) };
    { T(1) };
};

/// One factor of a factorization: p^exponent with p a positive prime.
struct Factor {
    Int p;
    int exponent = 0;

    bool operator==(const Factor&) const = default;
};

/// Nonnegative gcd; gcd(0,0) = 0.
Int gcd(const Int& a, const Int& b);

/// Nonnegative lcm; lcm(a,0) = 0.
Int lcm(const Int& a, const Int& b);

/// Factorization of |n| into primes in strictly increasing order.
/// Trial division seeded with a small sieve; inputs are desk-scale.
/// Throws std::invalid_argument on n = 0.
std::vector<Factor> factorize(const Int& n);

/// Deterministic primality test via trial division (desk-scale inputs).
bool is_prime(const Int& p);

/// p^e for e >= 0.
Int pow_int(const Int& base, unsigned e);

/// Number of prime factors of |n| counted with multiplicity; n must be nonzero.
int omega_with_multiplicity(const Int& n);

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::string to_decimal(const Int& a) { return a.get_str(); }

/// Parses a decimal string (optional leading '-'). Throws on malformed input.
Int parse_decimal(const std::string& s);

}  // namespace fpfun
