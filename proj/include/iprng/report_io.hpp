#pragma once

// Text, CSV and JSON renderings of the library's results.
//
// Histogram CSV is fixed: header "period,count", one row per period in
// ascending order, LF line endings. JSON documents share the shape
// {"p","e","case","engine","total","histogram":[{"period","count"}...],
//  "mismatches":[...],"warnings":[...]}.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "iprng/analyzer.hpp"
#include "iprng/census.hpp"
#include "iprng/error.hpp"
#include "iprng/generator.hpp"
#include "iprng/histogram.hpp"

namespace iprng {

inline void write_histogram_csv(std::ostream& out, const PeriodHistogram& h) {
    out << "period,count\n";
    for (const auto& [period, count] : h) out << period << ',' << count << '\n';
}

inline std::string histogram_csv(const PeriodHistogram& h) {
    std::ostringstream out;
    write_histogram_csv(out, h);
    return out.str();
}

inline PeriodHistogram parse_histogram_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "period,count") {
        throw Error(ErrorKind::InvalidArgument, "histogram CSV must start with the header 'period,count'");
    }
    PeriodHistogram h;
    std::uint64_t previous = 0;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        std::uint64_t period = 0, count = 0;
        try {
            std::size_t used = 0;
            if (comma == std::string::npos) throw std::invalid_argument("missing comma");
            period = std::stoull(line.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("period");
            const std::string rest = line.substr(comma + 1);
            count = std::stoull(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("count");
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "malformed histogram row " + std::to_string(row) + ": '" + line + "'");
        }
        if (period == 0 || count == 0 || period <= previous) {
            throw Error(ErrorKind::InvalidArgument,
                        "histogram row " + std::to_string(row) + " must have increasing period and positive count");
        }
        h.add(period, count);
        previous = period;
    }
    return h;
}

inline PeriodHistogram parse_histogram_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_histogram_csv(in);
}

inline nlohmann::json histogram_json(const PeriodHistogram& h) {
    auto rows = nlohmann::json::array();
    for (const auto& [period, count] : h) rows.push_back({{"period", period}, {"count", count}});
    return rows;
}

inline nlohmann::json params_json(const GeneratorParams& params) {
    return {{"a", params.a.value}, {"b", params.b.value}, {"x0", params.x0.value}};
}

inline nlohmann::json document_json(std::uint64_t p, unsigned e, CaseFilter filter, std::string_view engine,
                                    const PeriodHistogram& h) {
    return {{"p", p},
            {"e", e},
            {"case", std::string(to_string(filter))},
            {"engine", std::string(engine)},
            {"total", h.total()},
            {"histogram", histogram_json(h)},
            {"mismatches", nlohmann::json::array()},
            {"warnings", nlohmann::json::array()}};
}

/// Closed-form table document.
inline nlohmann::json table_json(const RingContext& ring, CaseFilter filter, const PeriodHistogram& h) {
    return document_json(ring.prime(), ring.exponent(), filter, "closed-form", h);
}

/// Wall time is left out so identical sweeps serialize identically.
inline nlohmann::json census_json(const CensusReport& report) {
    auto doc = document_json(report.p, report.e, report.filter, to_string(report.engine), report.histogram);
    for (const auto& m : report.mismatches) {
        auto row = params_json(m.params);
        row["oracle"] = m.oracle_period;
        row["predicted"] = m.predicted_period;
        doc["mismatches"].push_back(row);
    }
    return doc;
}

inline std::string describe(const PublishedDiscrepancy& d) {
    return "published table lists period " + std::to_string(d.period) + " with count " + std::to_string(d.published) +
           "; computed count is " + std::to_string(d.computed);
}

inline nlohmann::json verify_json(const VerifyReport& report) {
    nlohmann::json doc{{"p", report.p},
                       {"e", report.e},
                       {"consistent", report.consistent()},
                       {"cases", nlohmann::json::array()}};
    for (const auto& c : report.cases) {
        nlohmann::json entry{{"case", std::string(to_string(c.filter))},
                             {"total", c.oracle.total()},
                             {"oracle", histogram_json(c.oracle)},
                             {"predictor", histogram_json(c.predictor)},
                             {"closed_form", histogram_json(c.closed_form)},
                             {"mismatches", nlohmann::json::array()},
                             {"warnings", nlohmann::json::array()}};
        for (const auto& d : c.differences) {
            entry["mismatches"].push_back(
                {{"period", d.period}, {"oracle", d.oracle}, {"predictor", d.predictor}, {"closed_form", d.closed_form}});
        }
        for (const auto& w : c.published_discrepancies) entry["warnings"].push_back(describe(w));
        doc["cases"].push_back(std::move(entry));
    }
    return doc;
}

inline void write_verify_text(std::ostream& out, const VerifyReport& report) {
    out << "verify p=" << report.p << " e=" << report.e << '\n';
    for (const auto& c : report.cases) {
        out << "case " << to_string(c.filter) << ": total=" << c.oracle.total() << " periods=" << c.oracle.size()
            << (c.differences.empty() ? " agree" : " MISMATCH") << '\n';
        for (const auto& d : c.differences) {
            out << "  period " << d.period << ": oracle=" << d.oracle << " predictor=" << d.predictor
                << " closed-form=" << d.closed_form << '\n';
        }
    }
    if (report.has_warnings()) {
        out << "WARNINGS (published reference values that the computation does not reproduce):\n";
        for (const auto& c : report.cases) {
            for (const auto& w : c.published_discrepancies) out << "  [" << to_string(c.filter) << "] " << describe(w) << '\n';
        }
    }
    out << (report.consistent() ? "result: consistent" : "result: INCONSISTENT") << '\n';
}

inline std::string format_orbit(const OrbitResult& r) {
    return "period=" + std::to_string(r.period) + " preperiod=" + std::to_string(r.preperiod) +
           " cycle_rep=" + std::to_string(r.cycle_representative.value);
}

inline std::string format_prediction(const PeriodPrediction& pred, bool explain) {
    std::string out = "period=" + std::to_string(pred.period) + " branch=" + std::string(to_string(pred.branch));
    if (!explain) return out;
    const auto& w = pred.witness;
    if (w.ratio_order) out += " ratio_order=" + std::to_string(*w.ratio_order);
    if (w.valuation) out += " valuation=" + std::to_string(*w.valuation);
    if (w.residue_order) out += " residue_order=" + std::to_string(*w.residue_order);
    if (w.in_omega) out += std::string(" in_omega=") + (*w.in_omega ? "true" : "false");
    return out;
}

inline nlohmann::json prediction_json(const PeriodPrediction& pred) {
    nlohmann::json doc{{"period", pred.period}, {"branch", std::string(to_string(pred.branch))}};
    const auto& w = pred.witness;
    if (w.ratio_order) doc["ratio_order"] = *w.ratio_order;
    if (w.valuation) doc["valuation"] = *w.valuation;
    if (w.residue_order) doc["residue_order"] = *w.residue_order;
    if (w.in_omega) doc["in_omega"] = *w.in_omega;
    return doc;
}

struct SearchHit {
    GeneratorParams params;
    std::uint64_t predicted = 0;
    std::uint64_t oracle = 0;
};

inline void write_search_csv(std::ostream& out, const std::vector<SearchHit>& hits) {
    out << "a,b,x0,predicted,oracle\n";
    for (const auto& h : hits) {
        out << h.params.a.value << ',' << h.params.b.value << ',' << h.params.x0.value << ',' << h.predicted << ','
            << h.oracle << '\n';
    }
}

inline nlohmann::json search_json(const RingContext& ring, std::uint64_t target, const std::vector<SearchHit>& hits) {
    nlohmann::json doc{{"p", ring.prime()}, {"e", ring.exponent()}, {"period", target}, {"total", hits.size()},
                       {"results", nlohmann::json::array()}};
    for (const auto& h : hits) {
        auto row = params_json(h.params);
        row["predicted"] = h.predicted;
        row["oracle"] = h.oracle;
        doc["results"].push_back(row);
    }
    return doc;
}

}  // namespace iprng
