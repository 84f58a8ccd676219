#pragma once

// Small-integer number theory shared by the ring modules: trial-division
// primality and factorization, totients, divisor lists, and the generic
// square-and-multiply / order-stripping templates.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace iprng {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes ascending.
using Factorization = std::vector<PrimePower>;

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

inline Factorization factorize(std::uint64_t n) {
    Factorization out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        PrimePower pp{d, 0};
        while (n % d == 0) {
            n /= d;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// Factorization of the product of two factored integers.
inline Factorization multiply(const Factorization& lhs, const Factorization& rhs) {
    Factorization out;
    auto l = lhs.begin();
    auto r = rhs.begin();
    while (l != lhs.end() || r != rhs.end()) {
        if (r == rhs.end() || (l != lhs.end() && l->prime < r->prime)) {
            out.push_back(*l++);
        } else if (l == lhs.end() || r->prime < l->prime) {
            out.push_back(*r++);
        } else {
            out.push_back({l->prime, l->exponent + r->exponent});
            ++l;
            ++r;
        }
    }
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t result = n;
    for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
    return result;
}

/// All positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& pp : factorize(n)) {
        const std::size_t existing = out.size();
        std::uint64_t power = 1;
        for (unsigned i = 0; i < pp.exponent; ++i) {
            power *= pp.prime;
            for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// base^exp; nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        result *= base;
    }
    return result;
}

/// Square-and-multiply over any monoid given by `mul` with identity `one`.
template <class T, class Mul>
T power(T base, std::uint64_t exp, T one, Mul mul) {
    T result = one;
    while (exp > 0) {
        if (exp & 1U) result = mul(result, base);
        exp >>= 1U;
        if (exp > 0) base = mul(base, base);
    }
    return result;
}

/// Multiplicative order of an element of a finite group of known order.
///
/// `is_identity_power(n)` must report whether the element raised to n is the
/// identity. Starting from the group order, each prime factor is stripped for
/// as long as the reduced exponent still annihilates the element.
template <class IsIdentityPower>
std::uint64_t order_by_stripping(std::uint64_t group_order, const Factorization& group_factors,
                                 IsIdentityPower is_identity_power) {
    std::uint64_t order = group_order;
    for (const auto& pp : group_factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            if (order % pp.prime != 0 || !is_identity_power(order / pp.prime)) break;
            order /= pp.prime;
        }
    }
    return order;
}

}  // namespace iprng
