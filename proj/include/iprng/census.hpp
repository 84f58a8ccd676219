#pragma once

// Exhaustive sweeps over (a, b, x0) and three-way verification of the
// oracle census, the predictor census, and the closed-form tables.
//
// The (a, b) plane is cut into one contiguous chunk per worker. Each worker
// fills its own histogram; the partial results are merged in chunk order
// after all workers finish, so the report does not depend on the worker
// count.

#include <algorithm>
#include <chrono>
#include <initializer_list>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "iprng/analyzer.hpp"
#include "iprng/error.hpp"
#include "iprng/generator.hpp"
#include "iprng/histogram.hpp"
#include "iprng/ring_zpe.hpp"

namespace iprng {

enum class Engine { Oracle, Predictor, Both };

constexpr std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::Oracle: return "oracle";
        case Engine::Predictor: return "predictor";
        case Engine::Both: return "both";
    }
    return "?";
}

inline std::optional<Engine> parse_engine(std::string_view name) noexcept {
    for (auto e : {Engine::Oracle, Engine::Predictor, Engine::Both}) {
        if (to_string(e) == name) return e;
    }
    return std::nullopt;
}

struct Mismatch {
    GeneratorParams params;
    std::uint64_t oracle_period = 0;
    std::uint64_t predicted_period = 0;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CensusOptions {
    unsigned workers = 1;
    /// Largest number of triples a single sweep may visit.
    std::uint64_t max_triples = 1'000'000'000;
};

struct CensusReport {
    std::uint64_t p = 0;
    unsigned e = 0;
    CaseFilter filter = CaseFilter::All;
    Engine engine = Engine::Predictor;
    /// Oracle periods for Oracle and Both, predicted periods for Predictor.
    PeriodHistogram histogram;
    /// Only populated by Engine::Both.
    std::vector<Mismatch> mismatches;
    std::chrono::duration<double> elapsed{0};
};

namespace detail {

struct ChunkResult {
    PeriodHistogram histogram;
    std::vector<Mismatch> mismatches;
    std::exception_ptr failure;
};

inline void sweep_chunk(const RingContext& ring, CaseFilter filter, Engine engine, std::uint64_t first_pair,
                        std::uint64_t last_pair, ChunkResult& result) {
    const std::uint64_t n = ring.modulus();
    std::optional<OrbitScratch> scratch;
    if (engine != Engine::Predictor) scratch.emplace(n);
    for (std::uint64_t pair = first_pair; pair < last_pair; ++pair) {
        const Residue a{pair / n};
        const Residue b{pair % n};
        if (!case_contains(filter, case_of(ring, a, b))) continue;
        std::optional<PairPredictor> predictor;
        if (engine != Engine::Oracle) predictor.emplace(ring, a, b);
        for (std::uint64_t x = 0; x < n; ++x) {
            const GeneratorParams params{a, b, Residue{x}};
            if (engine == Engine::Predictor) {
                result.histogram.add(predictor->predict(params.x0).period);
                continue;
            }
            const std::uint64_t observed = eventual_period(ring, params, *scratch).period;
            result.histogram.add(observed);
            if (engine == Engine::Both) {
                const std::uint64_t predicted = predictor->predict(params.x0).period;
                if (predicted != observed) result.mismatches.push_back({params, observed, predicted});
            }
        }
    }
}

}  // namespace detail

inline CensusReport run_census(const RingContext& ring, CaseFilter filter, Engine engine,
                               const CensusOptions& options = {}) {
    require_analyzable(ring);
    const auto cardinality = class_cardinality(ring, filter);
    if (!cardinality || *cardinality > options.max_triples) {
        throw Error(ErrorKind::SweepTooLarge, "sweep of p=" + std::to_string(ring.prime()) + " e=" +
                                                  std::to_string(ring.exponent()) + " exceeds the budget of " +
                                                  std::to_string(options.max_triples) + " triples");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t pairs = ring.modulus() * ring.modulus();
    const unsigned workers = std::max(1U, options.workers);
    std::vector<detail::ChunkResult> chunks(workers);
    const auto bound = [&](unsigned w) { return pairs * w / workers; };
    if (workers == 1) {
        detail::sweep_chunk(ring, filter, engine, 0, pairs, chunks[0]);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    detail::sweep_chunk(ring, filter, engine, bound(w), bound(w + 1), chunks[w]);
                } catch (...) {
                    chunks[w].failure = std::current_exception();
                }
            });
        }
    }
    for (const auto& chunk : chunks) {
        if (chunk.failure) std::rethrow_exception(chunk.failure);
    }

    CensusReport report;
    report.p = ring.prime();
    report.e = ring.exponent();
    report.filter = filter;
    report.engine = engine;
    for (auto& chunk : chunks) {
        report.histogram.merge(chunk.histogram);
        report.mismatches.insert(report.mismatches.end(), chunk.mismatches.begin(), chunk.mismatches.end());
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// Period distributions printed in the literature for p = 5, e = 3; used to
/// flag (not fail) disagreements with the computed tables.
inline std::optional<PeriodHistogram> published_distribution(std::uint64_t p, unsigned e, CaseFilter filter) {
    if (p != 5 || e != 3) return std::nullopt;
    PeriodHistogram h;
    switch (filter) {
        case CaseFilter::AInP:
            h.add(1, 390625);
            break;
        case CaseFilter::UnitABInP:
            for (auto [period, count] : {std::pair<std::uint64_t, std::uint64_t>{1, 65000}, {2, 27500}, {10, 70000},
                                         {50, 150000}}) {
                h.add(period, count);
            }
            break;
        case CaseFilter::UnitsAB:
            for (auto [period, count] : {std::pair<std::uint64_t, std::uint64_t>{1, 7500}, {2, 125000}, {3, 195000},
                                         {4, 290000}, {5, 322500}, {10, 30000}, {20, 80000}, {25, 50000},
                                         {75, 150000}}) {
                h.add(period, count);
            }
            break;
        case CaseFilter::All:
            return std::nullopt;
    }
    return h;
}

/// A period whose count differs between the three computed sources.
struct CellDifference {
    std::uint64_t period = 0;
    std::uint64_t oracle = 0;
    std::uint64_t predictor = 0;
    std::uint64_t closed_form = 0;
};

/// A period where the published table disagrees with the (mutually
/// consistent) computed tables.
struct PublishedDiscrepancy {
    std::uint64_t period = 0;
    std::uint64_t published = 0;
    std::uint64_t computed = 0;
};

struct CaseComparison {
    CaseFilter filter = CaseFilter::All;
    PeriodHistogram oracle;
    PeriodHistogram predictor;
    PeriodHistogram closed_form;
    std::vector<CellDifference> differences;
    std::vector<PublishedDiscrepancy> published_discrepancies;
};

struct VerifyReport {
    std::uint64_t p = 0;
    unsigned e = 0;
    std::vector<CaseComparison> cases;

    bool consistent() const noexcept {
        for (const auto& c : cases) {
            if (!c.differences.empty()) return false;
        }
        return true;
    }

    bool has_warnings() const noexcept {
        for (const auto& c : cases) {
            if (!c.published_discrepancies.empty()) return true;
        }
        return false;
    }
};

namespace detail {

inline std::vector<std::uint64_t> period_union(std::initializer_list<const PeriodHistogram*> hs) {
    PeriodHistogram keys;
    for (const auto* h : hs) {
        for (const auto& [period, count] : *h) keys.add(period);
    }
    std::vector<std::uint64_t> out;
    for (const auto& [period, count] : keys) out.push_back(period);
    return out;
}

}  // namespace detail

/// Oracle census vs predictor census vs closed form, per case.
inline VerifyReport verify(const RingContext& ring, const CensusOptions& options = {}) {
    VerifyReport report;
    report.p = ring.prime();
    report.e = ring.exponent();
    for (CaseFilter filter : {CaseFilter::AInP, CaseFilter::UnitABInP, CaseFilter::UnitsAB}) {
        CaseComparison cmp;
        cmp.filter = filter;
        cmp.oracle = run_census(ring, filter, Engine::Oracle, options).histogram;
        cmp.predictor = run_census(ring, filter, Engine::Predictor, options).histogram;
        cmp.closed_form = distribution_table(ring, filter);
        for (std::uint64_t period : detail::period_union({&cmp.oracle, &cmp.predictor, &cmp.closed_form})) {
            const CellDifference cell{period, cmp.oracle.count(period), cmp.predictor.count(period),
                                      cmp.closed_form.count(period)};
            if (cell.oracle != cell.predictor || cell.oracle != cell.closed_form) cmp.differences.push_back(cell);
        }
        if (const auto published = published_distribution(ring.prime(), ring.exponent(), filter)) {
            for (std::uint64_t period : detail::period_union({&*published, &cmp.oracle})) {
                if (published->count(period) != cmp.oracle.count(period)) {
                    cmp.published_discrepancies.push_back({period, published->count(period), cmp.oracle.count(period)});
                }
            }
        }
        report.cases.push_back(std::move(cmp));
    }
    return report;
}

}  // namespace iprng
