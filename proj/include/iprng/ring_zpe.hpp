#pragma once

/**
 * @file ring_zpe.hpp
 * @brief Exact arithmetic in the residue ring Z/(p^e).
 *
 * Z/(p^e) is a local ring: its non-units are exactly the multiples of p,
 * and its unit group has order (p-1)p^(e-1). Elements are plain canonical
 * integers in [0, p^e); all operations go through an immutable RingContext,
 * which can be shared freely between threads.
 *
 * The modulus is limited to p^e < 2^31 so that every product of two
 * residues is exact in 64-bit arithmetic.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "iprng/error.hpp"
#include "iprng/number_theory.hpp"

namespace iprng {

/// Canonical element of Z/(p^e); the value is always in [0, p^e).
struct Residue {
    std::uint64_t value = 0;

    friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Base-p digits d_0 .. d_{e-1}, least significant first.
struct PAdicDigits {
    std::vector<std::uint64_t> digits;

    friend bool operator==(const PAdicDigits&, const PAdicDigits&) = default;
};

inline constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 31;

class RingContext {
public:
    /// Validates p and e; see make_context.
    RingContext(std::uint64_t p, unsigned e) {
        if (p == 2 || !is_prime(p)) {
            throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
        }
        if (e < 1) throw Error(ErrorKind::ExponentOutOfRange, "exponent must be >= 1");
        const auto modulus = checked_pow(p, e);
        if (!modulus || *modulus >= kModulusBound) {
            throw Error(ErrorKind::ModulusTooLarge,
                        std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^31");
        }
        p_ = p;
        e_ = e;
        modulus_ = *modulus;
        factors_p_minus_1_ = factorize(p - 1);
        factors_p_plus_1_ = factorize(p + 1);
        group_factors_ = unit_group_factors();
    }

    std::uint64_t prime() const noexcept { return p_; }
    unsigned exponent() const noexcept { return e_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// Order of the unit group, (p-1)p^(e-1).
    std::uint64_t group_order() const noexcept { return (p_ - 1) * (modulus_ / p_); }

    const Factorization& factors_p_minus_1() const noexcept { return factors_p_minus_1_; }
    const Factorization& factors_p_plus_1() const noexcept { return factors_p_plus_1_; }

    /// Factorization of group_order().
    const Factorization& group_factors() const noexcept { return group_factors_; }

    Residue residue(std::int64_t v) const noexcept {
        const auto m = static_cast<std::int64_t>(modulus_);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return Residue{static_cast<std::uint64_t>(r)};
    }

    Residue zero() const noexcept { return Residue{0}; }
    Residue one() const noexcept { return Residue{1}; }

    Residue add(Residue x, Residue y) const noexcept {
        std::uint64_t s = x.value + y.value;
        if (s >= modulus_) s -= modulus_;
        return Residue{s};
    }

    Residue sub(Residue x, Residue y) const noexcept {
        return Residue{x.value >= y.value ? x.value - y.value : x.value + modulus_ - y.value};
    }

    Residue neg(Residue x) const noexcept { return Residue{x.value == 0 ? 0 : modulus_ - x.value}; }

    Residue mul(Residue x, Residue y) const noexcept { return Residue{(x.value * y.value) % modulus_}; }

    Residue pow(Residue x, std::uint64_t n) const noexcept {
        return power(x, n, one(), [this](Residue l, Residue r) { return mul(l, r); });
    }

    bool is_unit(Residue x) const noexcept { return x.value % p_ != 0; }

    Residue inverse(Residue x) const {
        if (!is_unit(x)) {
            throw Error(ErrorKind::NotUnit, std::to_string(x.value) + " is divisible by " + std::to_string(p_));
        }
        // Extended Euclid on (x, modulus), tracking only the x coefficient.
        std::int64_t r0 = static_cast<std::int64_t>(modulus_), r1 = static_cast<std::int64_t>(x.value);
        std::int64_t s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            const std::int64_t r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            const std::int64_t s2 = s0 - q * s1;
            s0 = s1;
            s1 = s2;
        }
        return residue(s0);
    }

    /// Largest k with p^k | x; valuation(0) = e.
    unsigned valuation(Residue x) const noexcept {
        if (x.value == 0) return e_;
        unsigned k = 0;
        for (std::uint64_t v = x.value; v % p_ == 0; v /= p_) ++k;
        return k;
    }

    PAdicDigits padic_digits(Residue x) const {
        PAdicDigits out;
        out.digits.reserve(e_);
        std::uint64_t v = x.value;
        for (unsigned i = 0; i < e_; ++i) {
            out.digits.push_back(v % p_);
            v /= p_;
        }
        return out;
    }

    Residue from_digits(const PAdicDigits& d) const {
        std::uint64_t v = 0;
        for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) v = v * p_ + *it;
        return residue(static_cast<std::int64_t>(v % modulus_));
    }

    /// Context for Z/(p^(e-k)), the target of the reduction map eta_k.
    RingContext reduced(unsigned k) const {
        if (k >= e_) {
            throw Error(ErrorKind::ReductionOutOfRange,
                        "reduction index " + std::to_string(k) + " must be < " + std::to_string(e_));
        }
        RingContext out = *this;
        out.e_ = e_ - k;
        for (unsigned i = 0; i < k; ++i) out.modulus_ /= p_;
        out.group_factors_ = out.unit_group_factors();
        return out;
    }

    /// eta_k(x) = x mod p^(e-k), as a residue of reduced(k).
    Residue reduce(Residue x, unsigned k) const {
        if (k >= e_) {
            throw Error(ErrorKind::ReductionOutOfRange,
                        "reduction index " + std::to_string(k) + " must be < " + std::to_string(e_));
        }
        std::uint64_t target_modulus = modulus_;
        for (unsigned i = 0; i < k; ++i) target_modulus /= p_;
        return Residue{x.value % target_modulus};
    }

    /// Multiplicative order of a unit.
    std::uint64_t mult_order(Residue x) const {
        if (!is_unit(x)) throw Error(ErrorKind::NotUnit, "order of a non-unit " + std::to_string(x.value));
        return order_by_stripping(group_order(), group_factors(),
                                  [&](std::uint64_t n) { return pow(x, n) == one(); });
    }

    /// Square root of a unit whose image mod p is a quadratic residue; the
    /// returned root has its lowest p-adic digit in [1, (p-1)/2].
    Residue sqrt_unit(Residue x) const {
        if (!is_unit(x)) throw Error(ErrorKind::NotUnit, "sqrt of a non-unit " + std::to_string(x.value));
        const std::uint64_t target = x.value % p_;
        std::uint64_t root = 0;
        for (std::uint64_t r = 1; r <= (p_ - 1) / 2; ++r) {
            if ((r * r) % p_ == target) {
                root = r;
                break;
            }
        }
        if (root == 0) {
            throw Error(ErrorKind::NonResidue, std::to_string(x.value) + " is not a square mod " + std::to_string(p_));
        }
        // Newton: r <- r - (r^2 - x)(2r)^-1, doubling the p-adic precision each step.
        Residue r{root};
        for (unsigned precision = 1; precision < e_; precision *= 2) {
            const Residue defect = sub(mul(r, r), x);
            r = sub(r, mul(defect, inverse(add(r, r))));
        }
        return r;
    }

    friend bool operator==(const RingContext& l, const RingContext& r) noexcept {
        return l.p_ == r.p_ && l.e_ == r.e_;
    }

private:
    Factorization unit_group_factors() const {
        if (e_ == 1) return factors_p_minus_1_;
        return multiply(factors_p_minus_1_, Factorization{{p_, e_ - 1}});
    }

    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t modulus_ = 0;
    Factorization factors_p_minus_1_;
    Factorization factors_p_plus_1_;
    Factorization group_factors_;
};

inline RingContext make_context(std::uint64_t p, unsigned e) { return RingContext(p, e); }

}  // namespace iprng
