#pragma once

// Quadratic extension Z/(p^e)[t]/(t^2 - bt - a), the Galois ring GR(p^e, 2)
// when t^2 - bt - a is irreducible mod p, together with its residue field
// GF(p^2) = Z/(p)[t]/(t^2 - bt - a).

#include <cstdint>
#include <string>
#include <utility>

#include "iprng/error.hpp"
#include "iprng/number_theory.hpp"
#include "iprng/ring_zpe.hpp"

namespace iprng {

/// c0 + c1*t, coordinates canonical in the base ring.
struct QuadElem {
    Residue c0;
    Residue c1;

    friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

/// r0 + r1*t with coordinates reduced mod p.
struct ResidueFieldElem {
    std::uint64_t r0 = 0;
    std::uint64_t r1 = 0;

    friend bool operator==(const ResidueFieldElem&, const ResidueFieldElem&) = default;
};

namespace detail {

// Product in R[t]/(t^2 - bt - a) for any ring R described by a
// (mul, add) pair: t^2 reduces to b*t + a.
template <class T, class Mul, class Add>
std::pair<T, T> quadratic_product(T x0, T x1, T y0, T y1, T a, T b, Mul mul, Add add) {
    const T top = mul(x1, y1);
    return {add(mul(x0, y0), mul(a, top)), add(add(mul(x0, y1), mul(x1, y0)), mul(b, top))};
}

inline bool is_square_mod_prime(std::uint64_t x, std::uint64_t p) {
    x %= p;
    if (x == 0) return true;
    return power<std::uint64_t>(x, (p - 1) / 2, 1, [p](std::uint64_t l, std::uint64_t r) { return l * r % p; }) == 1;
}

}  // namespace detail

/// GF(p^2) presented as Z/(p)[t]/(t^2 - bt - a).
///
/// When t^2 - bt - a splits mod p the quotient is not a field; callers then
/// only use constants (the embedded prime field), which is closed under all
/// operations below.
class ResidueField {
public:
    ResidueField(std::uint64_t p, std::uint64_t a, std::uint64_t b, Factorization order_factors)
        : p_(p), a_(a % p), b_(b % p), order_factors_(std::move(order_factors)) {}

    std::uint64_t prime() const noexcept { return p_; }

    /// p^2 - 1, the order of the multiplicative group.
    std::uint64_t group_order() const noexcept { return p_ * p_ - 1; }

    ResidueFieldElem constant(std::uint64_t c) const noexcept { return {c % p_, 0}; }
    ResidueFieldElem one() const noexcept { return {1, 0}; }

    ResidueFieldElem add(ResidueFieldElem x, ResidueFieldElem y) const noexcept {
        return {(x.r0 + y.r0) % p_, (x.r1 + y.r1) % p_};
    }

    ResidueFieldElem sub(ResidueFieldElem x, ResidueFieldElem y) const noexcept {
        return {(x.r0 + p_ - y.r0) % p_, (x.r1 + p_ - y.r1) % p_};
    }

    ResidueFieldElem mul(ResidueFieldElem x, ResidueFieldElem y) const noexcept {
        const auto m = [this](std::uint64_t l, std::uint64_t r) { return l * r % p_; };
        const auto s = [this](std::uint64_t l, std::uint64_t r) { return (l + r) % p_; };
        auto [c0, c1] = detail::quadratic_product(x.r0, x.r1, y.r0, y.r1, a_, b_, m, s);
        return {c0, c1};
    }

    ResidueFieldElem pow(ResidueFieldElem x, std::uint64_t n) const noexcept {
        return power(x, n, one(), [this](ResidueFieldElem l, ResidueFieldElem r) { return mul(l, r); });
    }

    ResidueFieldElem conjugate(ResidueFieldElem x) const noexcept {
        return {(x.r0 + x.r1 * b_) % p_, (p_ - x.r1) % p_};
    }

    ResidueFieldElem inverse(ResidueFieldElem x) const {
        if (x == ResidueFieldElem{}) throw Error(ErrorKind::ZeroElement, "inverse of zero in GF(p^2)");
        const ResidueFieldElem conj = conjugate(x);
        const std::uint64_t norm = mul(x, conj).r0;
        if (norm == 0) throw Error(ErrorKind::NotUnit, "element is a zero divisor of the residue algebra");
        const std::uint64_t norm_inv =
            power<std::uint64_t>(norm, p_ - 2, 1, [this](std::uint64_t l, std::uint64_t r) { return l * r % p_; });
        return {conj.r0 * norm_inv % p_, conj.r1 * norm_inv % p_};
    }

    std::uint64_t order(ResidueFieldElem x) const {
        if (x == ResidueFieldElem{}) throw Error(ErrorKind::ZeroElement, "order of zero in GF(p^2)");
        return order_by_stripping(group_order(), order_factors_,
                                  [&](std::uint64_t n) { return pow(x, n) == one(); });
    }

private:
    std::uint64_t p_;
    std::uint64_t a_;
    std::uint64_t b_;
    Factorization order_factors_;
};

/// The ring Z/(p^e)[t]/(f) with f(t) = t^2 - bt - a basic irreducible, so that
/// t and its conjugate b - t are the two roots of f.
class QuadContext {
public:
    QuadContext(RingContext base, Residue a, Residue b)
        : base_(std::move(base)),
          a_(a),
          b_(b),
          field_(base_.prime(), a.value, b.value,
                 multiply(base_.factors_p_minus_1(), base_.factors_p_plus_1())) {
        const std::uint64_t p = base_.prime();
        const std::uint64_t disc = (b.value % p * (b.value % p) + 4 * (a.value % p)) % p;
        if (disc == 0 || detail::is_square_mod_prime(disc, p)) {
            throw Error(ErrorKind::CaseMismatch, "t^2 - " + std::to_string(b.value) + "t - " +
                                                     std::to_string(a.value) + " is not irreducible mod p");
        }
        group_factors_ = multiply(base_.factors_p_minus_1(), base_.factors_p_plus_1());
        if (base_.exponent() > 1) {
            group_factors_ = multiply(group_factors_, Factorization{{p, 2 * (base_.exponent() - 1)}});
        }
    }

    const RingContext& base() const noexcept { return base_; }
    Residue a() const noexcept { return a_; }
    Residue b() const noexcept { return b_; }
    const ResidueField& residue_field() const noexcept { return field_; }

    /// (p^2 - 1) p^(2(e-1)), the order of the unit group.
    std::uint64_t group_order() const noexcept {
        const std::uint64_t p = base_.prime();
        const std::uint64_t q = base_.modulus() / p;
        return (p * p - 1) * q * q;
    }

    QuadElem element(Residue c0, Residue c1 = Residue{0}) const noexcept { return {c0, c1}; }
    QuadElem one() const noexcept { return {base_.one(), base_.zero()}; }
    QuadElem root() const noexcept { return {base_.zero(), base_.one()}; }
    QuadElem conjugate_root() const noexcept { return {b_, base_.neg(base_.one())}; }

    QuadElem add(const QuadElem& x, const QuadElem& y) const noexcept {
        return {base_.add(x.c0, y.c0), base_.add(x.c1, y.c1)};
    }

    QuadElem sub(const QuadElem& x, const QuadElem& y) const noexcept {
        return {base_.sub(x.c0, y.c0), base_.sub(x.c1, y.c1)};
    }

    QuadElem mul(const QuadElem& x, const QuadElem& y) const noexcept {
        auto [c0, c1] = detail::quadratic_product(
            x.c0, x.c1, y.c0, y.c1, a_, b_, [this](Residue l, Residue r) { return base_.mul(l, r); },
            [this](Residue l, Residue r) { return base_.add(l, r); });
        return {c0, c1};
    }

    QuadElem pow(const QuadElem& x, std::uint64_t n) const noexcept {
        return power(x, n, one(), [this](const QuadElem& l, const QuadElem& r) { return mul(l, r); });
    }

    /// Frobenius: t -> b - t.
    QuadElem conjugate(const QuadElem& x) const noexcept {
        return {base_.add(x.c0, base_.mul(x.c1, b_)), base_.neg(x.c1)};
    }

    Residue norm(const QuadElem& x) const noexcept { return mul(x, conjugate(x)).c0; }

    bool is_unit(const QuadElem& x) const noexcept { return base_.is_unit(norm(x)); }

    QuadElem inverse(const QuadElem& x) const {
        const Residue n = norm(x);
        if (!base_.is_unit(n)) throw Error(ErrorKind::NotUnit, "norm " + std::to_string(n.value) + " is not a unit");
        const Residue n_inv = base_.inverse(n);
        const QuadElem conj = conjugate(x);
        return {base_.mul(conj.c0, n_inv), base_.mul(conj.c1, n_inv)};
    }

    std::uint64_t order(const QuadElem& x) const {
        if (!is_unit(x)) throw Error(ErrorKind::NotUnit, "order of a non-unit of GR(p^e, 2)");
        return order_by_stripping(group_order(), group_factors_,
                                  [&](std::uint64_t n) { return pow(x, n) == one(); });
    }

    /// Coefficientwise reduction mod p into GF(p^2).
    ResidueFieldElem residue_image(const QuadElem& x) const noexcept {
        const std::uint64_t p = base_.prime();
        return {x.c0.value % p, x.c1.value % p};
    }

private:
    RingContext base_;
    Residue a_;
    Residue b_;
    ResidueField field_;
    Factorization group_factors_;
};

}  // namespace iprng
