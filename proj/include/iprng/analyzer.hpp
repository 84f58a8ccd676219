#pragma once

/**
 * @file analyzer.hpp
 * @brief Closed-form period prediction and period-distribution tables.
 *
 * predict_period() computes the eventual cycle length of x0 under
 * x -> a/x + b without iterating, by classifying f(t) = t^2 - bt - a and
 * reading the period off multiplicative orders:
 *
 *  - a in (p): every orbit ends in a fixed point.
 *  - a unit, b in (p): the map permutes the units; x0 in (p) is sent to the
 *    fixed point b. Otherwise the period is ord(eta_k(alpha/beta)) where k
 *    is the valuation of the closer root difference (0 when both are units).
 *  - a, b units, unit discriminant: with u = omega1/omega2 in GF(p^2) of
 *    order m and v = (pi - omega1)/(pi - omega2), the orbit hits (p) iff v is
 *    a nontrivial power of u, in which case the period is m - 1; otherwise it
 *    is ord(alpha/beta) (after the root-hit and zero-divisor checks).
 *  - a, b units, discriminant in (p): period p - 1 unless x0 = omega mod p,
 *    then p^(e-k) with k = v(f(x0)) (1 when f(x0) = 0).
 *
 * contributions() lists the matching closed-form counts per branch; summing
 * them by period gives distribution_table().
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "iprng/charpoly.hpp"
#include "iprng/error.hpp"
#include "iprng/generator.hpp"
#include "iprng/histogram.hpp"
#include "iprng/number_theory.hpp"
#include "iprng/ring_zpe.hpp"

namespace iprng {

enum class Branch {
    Thm1,
    X0InP,
    RootHit,
    P1,
    P2,
    P3,
    P4,
    P5,
    P6Zero,
    P6ZeroDiv,
    P7,
    P8,
    P9,
    P10Zero,
    P10ZeroDiv,
};

inline constexpr std::array kAllBranches{
    Branch::Thm1, Branch::X0InP, Branch::RootHit, Branch::P1, Branch::P2, Branch::P3, Branch::P4, Branch::P5,
    Branch::P6Zero, Branch::P6ZeroDiv, Branch::P7, Branch::P8, Branch::P9, Branch::P10Zero, Branch::P10ZeroDiv,
};

constexpr std::string_view to_string(Branch b) noexcept {
    switch (b) {
        case Branch::Thm1: return "THM1";
        case Branch::X0InP: return "X0_IN_P";
        case Branch::RootHit: return "ROOT_HIT";
        case Branch::P1: return "P1";
        case Branch::P2: return "P2";
        case Branch::P3: return "P3";
        case Branch::P4: return "P4";
        case Branch::P5: return "P5";
        case Branch::P6Zero: return "P6_ZERO";
        case Branch::P6ZeroDiv: return "P6_ZERODIV";
        case Branch::P7: return "P7";
        case Branch::P8: return "P8";
        case Branch::P9: return "P9";
        case Branch::P10Zero: return "P10_ZERO";
        case Branch::P10ZeroDiv: return "P10_ZERODIV";
    }
    return "?";
}

/// Partition of the (a, b) plane.
enum class CaseFilter { AInP, UnitABInP, UnitsAB, All };

constexpr std::string_view to_string(CaseFilter c) noexcept {
    switch (c) {
        case CaseFilter::AInP: return "a-in-p";
        case CaseFilter::UnitABInP: return "b-in-p";
        case CaseFilter::UnitsAB: return "units";
        case CaseFilter::All: return "all";
    }
    return "?";
}

inline std::optional<CaseFilter> parse_case_filter(std::string_view name) noexcept {
    for (auto c : {CaseFilter::AInP, CaseFilter::UnitABInP, CaseFilter::UnitsAB, CaseFilter::All}) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

inline CaseFilter case_of(const RingContext& ring, Residue a, Residue b) noexcept {
    if (!ring.is_unit(a)) return CaseFilter::AInP;
    return ring.is_unit(b) ? CaseFilter::UnitsAB : CaseFilter::UnitABInP;
}

inline bool case_contains(CaseFilter filter, CaseFilter pair_case) noexcept {
    return filter == CaseFilter::All || filter == pair_case;
}

constexpr CaseFilter case_of(Branch b) noexcept {
    switch (b) {
        case Branch::Thm1: return CaseFilter::AInP;
        case Branch::X0InP:
        case Branch::RootHit:
        case Branch::P1:
        case Branch::P2:
        case Branch::P3: return CaseFilter::UnitABInP;
        default: return CaseFilter::UnitsAB;
    }
}

/// Number of triples (a, b, x0) in a case; nullopt if it overflows 64 bits.
inline std::optional<std::uint64_t> class_cardinality(const RingContext& ring, CaseFilter filter) {
    const std::uint64_t p = ring.prime();
    const unsigned e = ring.exponent();
    const auto q = checked_pow(p, 3 * e - 2);
    const auto all = checked_pow(p, 3 * e);
    if (!q || !all) return std::nullopt;
    switch (filter) {
        case CaseFilter::AInP: return p * *q;
        case CaseFilter::UnitABInP: return (p - 1) * *q;
        case CaseFilter::UnitsAB: return (p - 1) * (p - 1) * *q;
        case CaseFilter::All: return *all;
    }
    return std::nullopt;
}

/// Intermediate quantities behind a prediction; only the ones the branch
/// consulted are set.
struct PredictionWitness {
    std::optional<std::uint64_t> ratio_order;   ///< ord(eta_k(alpha/beta))
    std::optional<unsigned> valuation;          ///< k
    std::optional<std::uint64_t> residue_order; ///< m = ord(omega1/omega2)
    std::optional<bool> in_omega;

    friend bool operator==(const PredictionWitness&, const PredictionWitness&) = default;
};

struct PeriodPrediction {
    std::uint64_t period = 1;
    Branch branch = Branch::Thm1;
    PredictionWitness witness;
};

inline void require_analyzable(const RingContext& ring) {
    if (ring.prime() <= 3 || ring.exponent() < 2) {
        throw Error(ErrorKind::UnsupportedContext, "period analysis needs p > 3 and e >= 2, got p=" +
                                                       std::to_string(ring.prime()) +
                                                       " e=" + std::to_string(ring.exponent()));
    }
}

/// Predictor for a fixed (a, b): classification and all x0-independent
/// orders are computed once, so predict() is cheap. Immutable after
/// construction.
class PairPredictor {
public:
    PairPredictor(const RingContext& ring, Residue a, Residue b) : PairPredictor(CharPolyAnalysis(ring, a, b)) {}

    explicit PairPredictor(CharPolyAnalysis analysis) : analysis_(std::move(analysis)) {
        const RingContext& ring = analysis_.ring();
        require_analyzable(ring);
        b_in_ideal_ = !ring.is_unit(analysis_.b());
        switch (analysis_.poly_class()) {
            case PolyClass::UnitDiscReducible:
                for (unsigned k = 0; k < ring.exponent(); ++k) ratio_orders_.push_back(analysis_.ratio_order(k));
                break;
            case PolyClass::UnitDiscIrreducible:
                ratio_orders_.push_back(analysis_.ratio_order(0));
                break;
            default:
                break;
        }
        if (analysis_.has_unit_discriminant() && !b_in_ideal_) {
            const ResidueField& field = analysis_.residue_field();
            std::tie(omega1_, omega2_) = analysis_.residue_roots();
            residue_order_ = field.order(field.mul(omega1_, field.inverse(omega2_)));
        }
    }

    const CharPolyAnalysis& analysis() const noexcept { return analysis_; }

    PeriodPrediction predict(Residue x0) const {
        const RingContext& ring = analysis_.ring();
        switch (analysis_.poly_class()) {
            case PolyClass::AInP:
                return {1, Branch::Thm1, {}};
            case PolyClass::UnitDiscReducible:
                if (b_in_ideal_ && !ring.is_unit(x0)) return {1, Branch::X0InP, {}};
                return predict_reducible(x0);
            case PolyClass::UnitDiscIrreducible:
                if (b_in_ideal_) {
                    if (!ring.is_unit(x0)) return {1, Branch::X0InP, {}};
                    return {ratio_orders_[0], Branch::P3, {.ratio_order = ratio_orders_[0]}};
                }
                return predict_via_residue_field(x0, Branch::P7, Branch::P8);
            case PolyClass::DiscInP:
                return predict_double_root(x0);
        }
        throw Error(ErrorKind::CaseMismatch, "unreachable classification");
    }

private:
    PeriodPrediction predict_reducible(Residue x0) const {
        const RingContext& ring = analysis_.ring();
        const auto [alpha, beta] = analysis_.roots();
        const Residue to_alpha = ring.sub(x0, alpha);
        const Residue to_beta = ring.sub(x0, beta);
        if (to_alpha.value == 0 || to_beta.value == 0) {
            return {1, b_in_ideal_ ? Branch::RootHit : Branch::P6Zero, {}};
        }
        const unsigned k = std::max(ring.valuation(to_alpha), ring.valuation(to_beta));
        if (k > 0) {
            const std::uint64_t order = ratio_orders_[k];
            return {order, b_in_ideal_ ? Branch::P2 : Branch::P6ZeroDiv, {.ratio_order = order, .valuation = k}};
        }
        if (b_in_ideal_) return {ratio_orders_[0], Branch::P1, {.ratio_order = ratio_orders_[0], .valuation = 0}};
        return predict_via_residue_field(x0, Branch::P4, Branch::P5);
    }

    // Unit discriminant, a and b units, x0 - alpha and x0 - beta units.
    PeriodPrediction predict_via_residue_field(Residue x0, Branch hits_ideal, Branch stays_in_units) const {
        const ResidueField& field = analysis_.residue_field();
        const ResidueFieldElem pi = field.constant(x0.value);
        const ResidueFieldElem v = field.mul(field.sub(pi, omega1_), field.inverse(field.sub(pi, omega2_)));
        const bool in_omega = v != field.one() && field.pow(v, residue_order_) == field.one();
        if (in_omega) {
            return {residue_order_ - 1, hits_ideal, {.residue_order = residue_order_, .in_omega = true}};
        }
        return {ratio_orders_[0],
                stays_in_units,
                {.ratio_order = ratio_orders_[0], .valuation = 0, .residue_order = residue_order_, .in_omega = false}};
    }

    PeriodPrediction predict_double_root(Residue x0) const {
        const RingContext& ring = analysis_.ring();
        const std::uint64_t p = ring.prime();
        if (x0.value % p != analysis_.double_root()) return {p - 1, Branch::P9, {}};
        const Residue w = analysis_.evaluate(x0);
        if (w.value == 0) return {1, Branch::P10Zero, {}};
        const unsigned k = ring.valuation(w);
        std::uint64_t period = 1;
        for (unsigned i = k; i < ring.exponent(); ++i) period *= p;
        return {period, Branch::P10ZeroDiv, {.valuation = k}};
    }

    CharPolyAnalysis analysis_;
    bool b_in_ideal_ = false;
    std::vector<std::uint64_t> ratio_orders_;
    ResidueFieldElem omega1_;
    ResidueFieldElem omega2_;
    std::uint64_t residue_order_ = 0;
};

inline PeriodPrediction predict_period(const RingContext& ring, Residue a, Residue b, Residue x0) {
    return PairPredictor(ring, a, b).predict(x0);
}

inline PeriodPrediction predict_period(const RingContext& ring, const GeneratorParams& params) {
    return predict_period(ring, params.a, params.b, params.x0);
}

/// One closed-form term: `count` triples handled by `branch` have period `period`.
struct Contribution {
    Branch branch;
    std::uint64_t period;
    std::uint64_t count;

    friend bool operator==(const Contribution&, const Contribution&) = default;
};

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t narrow_count(u128 value) {
    if (value > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::UnsupportedContext, "closed-form count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

}  // namespace detail

/// Unaggregated closed-form period counts, grouped by case and branch.
inline std::vector<Contribution> contributions(const RingContext& ring) {
    require_analyzable(ring);
    if (!class_cardinality(ring, CaseFilter::All)) {
        throw Error(ErrorKind::UnsupportedContext, "p^(3e) exceeds 64 bits");
    }
    using detail::u128;
    const std::uint64_t p = ring.prime();
    const unsigned e = ring.exponent();
    const auto pw = [p](unsigned k) -> u128 {
        u128 r = 1;
        for (unsigned i = 0; i < k; ++i) r *= p;
        return r;
    };
    const u128 pm1 = p - 1;
    std::vector<Contribution> out;
    const auto emit = [&out](Branch b, u128 period, u128 count) {
        if (count != 0) out.push_back({b, detail::narrow_count(period), detail::narrow_count(count)});
    };

    emit(Branch::Thm1, 1, pw(3 * e - 1));

    // a unit, b in (p).
    emit(Branch::X0InP, 1, pm1 * pw(3 * e - 3));
    emit(Branch::RootHit, 1, pm1 * pw(2 * e - 2));
    emit(Branch::P1, 2, (p - 3) * pm1 * pw(2 * e - 2) / 2);
    for (unsigned k = 1; k < e; ++k) emit(Branch::P1, 2 * pw(e - k), (p - 3) * pm1 * pm1 * pw(3 * e - k - 3) / 2);
    emit(Branch::P2, 2, (u128{e - 1} * p - e + 1) * pm1 * pw(2 * e - 2));
    for (unsigned k = 1; k < e; ++k) {
        for (unsigned s = 1; s + k < e; ++s) emit(Branch::P2, 2 * pw(e - k - s), pm1 * pm1 * pm1 * pw(3 * e - k - s - 3));
    }
    emit(Branch::P3, 2, pm1 * pm1 * pw(2 * e - 2) / 2);
    for (unsigned k = 1; k < e; ++k) emit(Branch::P3, 2 * pw(e - k), pm1 * pm1 * pm1 * pw(3 * e - k - 3) / 2);

    // a, b units.
    emit(Branch::P6Zero, 1, (p - 3) * pm1 * pw(2 * e - 2));
    emit(Branch::P10Zero, 1, pm1 * pw(2 * e - 2));
    emit(Branch::P9, p - 1, pm1 * pm1 * pw(3 * e - 3));
    const auto hits_ideal = [&](Branch branch, std::uint64_t group) {
        for (std::uint64_t k : divisors(group)) {
            if (k <= 2) continue;
            u128 phi_sum = 0;
            for (unsigned i = 0; i < e; ++i) phi_sum += euler_phi(detail::narrow_count(k * pw(i)));
            emit(branch, k - 1, (k - 1) * pm1 * pw(2 * e - 2) * phi_sum / 2);
        }
    };
    hits_ideal(Branch::P4, p - 1);
    hits_ideal(Branch::P7, p + 1);
    // Orbits that stay in the units; x0 ranges over the residues pi that are
    // neither a root image nor an Omega hit.
    const auto stays_in_units = [&](Branch branch, std::uint64_t group, std::uint64_t excluded_roots) {
        for (std::uint64_t k1 : divisors(group)) {
            if (k1 <= 2 || k1 >= group) continue;
            const u128 x0_residues = p - excluded_roots - (k1 - 1);
            for (unsigned j = 0; j < e; ++j) {
                const u128 period = k1 * pw(j);
                emit(branch, period, x0_residues * pm1 * (euler_phi(detail::narrow_count(period)) / 2) * pw(2 * e - 2));
            }
        }
    };
    stays_in_units(Branch::P5, p - 1, 2);
    stays_in_units(Branch::P8, p + 1, 0);
    for (unsigned k3 = 1; k3 < e; ++k3) {
        for (std::uint64_t k1 : divisors(p - 1)) {
            if (k1 <= 2) continue;
            for (unsigned j = 0; j + k3 < e; ++j) {
                const u128 period = k1 * pw(j);
                emit(Branch::P6ZeroDiv, period, euler_phi(detail::narrow_count(period)) * pm1 * pm1 * pw(2 * e - 2));
            }
        }
    }
    for (unsigned k = 1; k < e; ++k) emit(Branch::P10ZeroDiv, pw(e - k), pm1 * pm1 * pw(3 * e - k - 3));
    return out;
}

inline std::vector<Contribution> contributions(std::uint64_t p, unsigned e) { return contributions(make_context(p, e)); }

/// Closed-form period distribution of a case, aggregated by period.
inline PeriodHistogram distribution_table(const RingContext& ring, CaseFilter filter) {
    PeriodHistogram out;
    for (const auto& c : contributions(ring)) {
        if (case_contains(filter, case_of(c.branch))) out.add(c.period, c.count);
    }
    return out;
}

namespace detail {

inline bool branch_reachable(Branch branch, PolyClass poly) noexcept {
    switch (branch) {
        case Branch::Thm1: return poly == PolyClass::AInP;
        case Branch::X0InP: return poly != PolyClass::AInP;
        case Branch::RootHit:
        case Branch::P1:
        case Branch::P2:
        case Branch::P4:
        case Branch::P5:
        case Branch::P6Zero:
        case Branch::P6ZeroDiv: return poly == PolyClass::UnitDiscReducible;
        case Branch::P3:
        case Branch::P7:
        case Branch::P8: return poly == PolyClass::UnitDiscIrreducible;
        case Branch::P9:
        case Branch::P10Zero:
        case Branch::P10ZeroDiv: return poly == PolyClass::DiscInP;
    }
    return false;
}

}  // namespace detail

/// Up to `max_results` triples whose predicted period is `target`.
///
/// The closed-form contributions decide which branches can produce the
/// target; cases are then scanned in the order a-in-p, b-in-p, units, and
/// only (a, b) pairs whose polynomial class admits one of those branches
/// have their x0 values examined. a = 0 (a constant map) is skipped.
inline std::vector<GeneratorParams> search_params(const RingContext& ring, std::uint64_t target,
                                                  std::size_t max_results) {
    std::vector<GeneratorParams> out;
    if (max_results == 0 || target == 0) return out;
    std::vector<Branch> branches;
    for (const auto& c : contributions(ring)) {
        if (c.period == target && std::find(branches.begin(), branches.end(), c.branch) == branches.end()) {
            branches.push_back(c.branch);
        }
    }
    if (branches.empty()) return out;

    const std::uint64_t n = ring.modulus();
    for (CaseFilter scan : {CaseFilter::AInP, CaseFilter::UnitABInP, CaseFilter::UnitsAB}) {
        if (std::none_of(branches.begin(), branches.end(), [scan](Branch b) { return case_of(b) == scan; })) continue;
        for (std::uint64_t a = 1; a < n; ++a) {
            for (std::uint64_t b = 0; b < n; ++b) {
                const Residue ra{a}, rb{b};
                if (case_of(ring, ra, rb) != scan) continue;
                const PairPredictor predictor(ring, ra, rb);
                const PolyClass poly = predictor.analysis().poly_class();
                if (std::none_of(branches.begin(), branches.end(), [&](Branch br) {
                        return case_of(br) == scan && detail::branch_reachable(br, poly);
                    })) {
                    continue;
                }
                for (std::uint64_t x0 = 0; x0 < n; ++x0) {
                    if (predictor.predict(Residue{x0}).period != target) continue;
                    out.push_back({ra, rb, Residue{x0}});
                    if (out.size() == max_results) return out;
                }
            }
        }
    }
    return out;
}

}  // namespace iprng
