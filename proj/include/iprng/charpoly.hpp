#pragma once

// Classification of the characteristic polynomial f(t) = t^2 - bt - a of the
// second-order recurrence behind an inversive generator x -> a/x + b.
//
// Dispatch is on the discriminant D = b^2 + 4a:
//   a in (p)                       -> AInP
//   D a unit, square mod p         -> UnitDiscReducible   (roots alpha, beta in Z/(p^e))
//   D a unit, non-square mod p     -> UnitDiscIrreducible (roots t, b - t in GR(p^e, 2))
//   D in (p)                       -> DiscInP             (double root omega mod p)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "iprng/error.hpp"
#include "iprng/ring_gr2.hpp"
#include "iprng/ring_zpe.hpp"

namespace iprng {

enum class PolyClass { AInP, UnitDiscReducible, UnitDiscIrreducible, DiscInP };

constexpr std::string_view to_string(PolyClass c) noexcept {
    switch (c) {
        case PolyClass::AInP: return "A_IN_P";
        case PolyClass::UnitDiscReducible: return "UNIT_DISC_REDUCIBLE";
        case PolyClass::UnitDiscIrreducible: return "UNIT_DISC_IRREDUCIBLE";
        case PolyClass::DiscInP: return "DISC_IN_P";
    }
    return "?";
}

class CharPolyAnalysis {
public:
    CharPolyAnalysis(const RingContext& ring, Residue a, Residue b)
        : ring_(ring),
          a_(a),
          b_(b),
          disc_(ring.add(ring.mul(b, b), ring.mul(ring.residue(4), a))),
          field_(ring.prime(), a.value, b.value, multiply(ring.factors_p_minus_1(), ring.factors_p_plus_1())) {
        if (ring.prime() <= 3 || ring.exponent() < 2) {
            throw Error(ErrorKind::UnsupportedContext, "classification needs p > 3 and e >= 2");
        }
        const std::uint64_t p = ring.prime();
        const Residue half = ring.inverse(ring.residue(2));
        if (!ring.is_unit(a)) {
            class_ = PolyClass::AInP;
        } else if (!ring.is_unit(disc_)) {
            class_ = PolyClass::DiscInP;
            omega_ = ring.mul(b, half).value % p;
        } else if (detail::is_square_mod_prime(disc_.value, p)) {
            class_ = PolyClass::UnitDiscReducible;
            sqrt_disc_ = ring.sqrt_unit(disc_);
            alpha_ = ring.mul(ring.add(b, *sqrt_disc_), half);
            beta_ = ring.mul(ring.sub(b, *sqrt_disc_), half);
        } else {
            class_ = PolyClass::UnitDiscIrreducible;
            quad_.emplace(ring, a, b);
        }
    }

    const RingContext& ring() const noexcept { return ring_; }
    Residue a() const noexcept { return a_; }
    Residue b() const noexcept { return b_; }
    Residue discriminant() const noexcept { return disc_; }
    PolyClass poly_class() const noexcept { return class_; }

    /// Roots of f in Z/(p^e); UnitDiscReducible only.
    std::pair<Residue, Residue> roots() const {
        require(PolyClass::UnitDiscReducible, "roots");
        return {*alpha_, *beta_};
    }

    /// Canonical square root of D; UnitDiscReducible only.
    Residue sqrt_discriminant() const {
        require(PolyClass::UnitDiscReducible, "sqrt_discriminant");
        return *sqrt_disc_;
    }

    /// The extension ring Z/(p^e)[t]/(f); UnitDiscIrreducible only.
    const QuadContext& extension() const {
        require(PolyClass::UnitDiscIrreducible, "extension");
        return *quad_;
    }

    /// Common root of f mod p; DiscInP only.
    std::uint64_t double_root() const {
        require(PolyClass::DiscInP, "double_root");
        return *omega_;
    }

    /// Z/(p)[t]/(f mod p): GF(p^2) for the irreducible class, only its
    /// constants are meaningful otherwise.
    const ResidueField& residue_field() const noexcept { return field_; }

    /// f(x) = x^2 - bx - a in Z/(p^e).
    Residue evaluate(Residue x) const noexcept {
        return ring_.sub(ring_.sub(ring_.mul(x, x), ring_.mul(b_, x)), a_);
    }

    bool has_unit_discriminant() const noexcept {
        return class_ == PolyClass::UnitDiscReducible || class_ == PolyClass::UnitDiscIrreducible;
    }

    /// Order of eta_k(alpha/beta) in Z/(p^(e-k)) (reducible), or of alpha/beta
    /// in GR(p^e, 2) (irreducible, k = 0 only).
    std::uint64_t ratio_order(unsigned k) const {
        if (class_ == PolyClass::UnitDiscReducible) {
            const Residue ratio = ring_.mul(*alpha_, ring_.inverse(*beta_));
            return ring_.reduced(k).mult_order(ring_.reduce(ratio, k));
        }
        if (class_ == PolyClass::UnitDiscIrreducible) {
            if (k != 0) throw Error(ErrorKind::CaseMismatch, "irreducible ratio order is only defined for k = 0");
            const auto [alpha, beta] = extension_roots();
            return quad_->order(quad_->mul(alpha, quad_->inverse(beta)));
        }
        throw Error(ErrorKind::CaseMismatch,
                    std::string("ratio_order needs a unit discriminant, class is ") + std::string(to_string(class_)));
    }

    /// Images (omega1, omega2) of alpha and beta in the residue field.
    std::pair<ResidueFieldElem, ResidueFieldElem> residue_roots() const {
        const std::uint64_t p = ring_.prime();
        if (class_ == PolyClass::UnitDiscReducible) {
            return {field_.constant(alpha_->value % p), field_.constant(beta_->value % p)};
        }
        if (class_ == PolyClass::UnitDiscIrreducible) {
            const auto [alpha, beta] = extension_roots();
            return {quad_->residue_image(alpha), quad_->residue_image(beta)};
        }
        throw Error(ErrorKind::CaseMismatch,
                    std::string("residue_roots needs a unit discriminant, class is ") + std::string(to_string(class_)));
    }

    /// Roots of f in the extension, alpha = t and beta = b - t unless the
    /// labels were exchanged; UnitDiscIrreducible only.
    std::pair<QuadElem, QuadElem> extension_roots() const {
        require(PolyClass::UnitDiscIrreducible, "extension_roots");
        if (labels_swapped_) return {quad_->conjugate_root(), quad_->root()};
        return {quad_->root(), quad_->conjugate_root()};
    }

    /// Same polynomial with the two root labels exchanged. Periods must not
    /// depend on the labeling.
    CharPolyAnalysis swapped() const {
        CharPolyAnalysis out = *this;
        std::swap(out.alpha_, out.beta_);
        out.labels_swapped_ = !labels_swapped_;
        return out;
    }

private:
    void require(PolyClass expected, const char* what) const {
        if (class_ != expected) {
            throw Error(ErrorKind::CaseMismatch,
                        std::string(what) + " is undefined for class " + std::string(to_string(class_)));
        }
    }

    RingContext ring_;
    Residue a_;
    Residue b_;
    Residue disc_;
    PolyClass class_ = PolyClass::AInP;
    ResidueField field_;
    std::optional<Residue> sqrt_disc_;
    std::optional<Residue> alpha_;
    std::optional<Residue> beta_;
    std::optional<QuadContext> quad_;
    std::optional<std::uint64_t> omega_;
    bool labels_swapped_ = false;
};

inline CharPolyAnalysis classify(const RingContext& ring, Residue a, Residue b) {
    return CharPolyAnalysis(ring, a, b);
}

}  // namespace iprng
