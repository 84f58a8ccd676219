// iprng: command-line front end for the period library.
//
//   iprng period  --p 5 --e 2 --a 1 --b 0 --x0 2
//   iprng predict --p 5 --e 2 --a 4 --b 2 --x0 3 --explain
//   iprng table   --p 5 --e 3 --case b-in-p --format csv
//   iprng census  --p 5 --e 3 --case units --engine both --workers 8
//   iprng verify  --p 5 --e 3
//   iprng search  --p 5 --e 3 --period 50 --max 3
//
// Exit status: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iprng/iprng.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RingArgs {
    std::uint64_t p = 0;
    unsigned e = 0;
};

struct TripleArgs {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t x0 = 0;
};

struct OutputArgs {
    std::string format = "csv";
    std::string out;
};

void add_ring_options(CLI::App* cmd, RingArgs& ring) {
    cmd->add_option("--p", ring.p, "odd prime p")->required();
    cmd->add_option("--e", ring.e, "exponent e (modulus p^e)")->required();
}

void add_triple_options(CLI::App* cmd, TripleArgs& t) {
    cmd->add_option("--a", t.a, "multiplier a")->required();
    cmd->add_option("--b", t.b, "increment b")->required();
    cmd->add_option("--x0", t.x0, "seed x0")->required();
}

iprng::GeneratorParams checked_params(const iprng::RingContext& ring, const TripleArgs& t) {
    for (auto [name, v] : {std::pair<const char*, std::uint64_t>{"a", t.a}, {"b", t.b}, {"x0", t.x0}}) {
        if (v >= ring.modulus()) {
            throw iprng::Error(iprng::ErrorKind::InvalidArgument, std::string("--") + name + " must be below " +
                                                                       std::to_string(ring.modulus()));
        }
    }
    return {iprng::Residue{t.a}, iprng::Residue{t.b}, iprng::Residue{t.x0}};
}

iprng::CaseFilter checked_case(const std::string& name) {
    if (auto c = iprng::parse_case_filter(name)) return *c;
    throw iprng::Error(iprng::ErrorKind::InvalidArgument, "unknown case '" + name + "'");
}

// Writes to --out when given, otherwise to stdout.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw iprng::Error(iprng::ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
    write(file);
    if (!file) throw iprng::Error(iprng::ErrorKind::InvalidArgument, "failed writing '" + path + "'");
}

void emit_json(const std::string& path, const nlohmann::json& doc) {
    emit(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Period analysis for inversive generators x -> a/x + b over Z/(p^e)"};
    app.require_subcommand(1);

    RingArgs ring_args;
    TripleArgs triple;
    OutputArgs output;
    std::string case_name = "all";
    std::string engine_name = "predictor";
    unsigned workers = 1;
    bool explain = false;
    std::uint64_t target = 0;
    std::size_t max_results = 10;

    auto* period = app.add_subcommand("period", "iterate the generator and report its eventual period");
    add_ring_options(period, ring_args);
    add_triple_options(period, triple);

    auto* predict = app.add_subcommand("predict", "closed-form period prediction");
    add_ring_options(predict, ring_args);
    add_triple_options(predict, triple);
    predict->add_flag("--explain", explain, "print the branch witnesses");

    auto* table = app.add_subcommand("table", "closed-form period distribution");
    add_ring_options(table, ring_args);
    table->add_option("--case", case_name, "a-in-p, b-in-p, units or all")->capture_default_str();
    table->add_option("--format", output.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    table->add_option("--out", output.out, "output file (default stdout)");

    auto* census = app.add_subcommand("census", "exhaustive sweep over (a, b, x0)");
    add_ring_options(census, ring_args);
    census->add_option("--case", case_name, "a-in-p, b-in-p, units or all")->capture_default_str();
    census->add_option("--engine", engine_name)
        ->check(CLI::IsMember({"oracle", "predictor", "both"}))
        ->capture_default_str();
    census->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();
    census->add_option("--format", output.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    census->add_option("--out", output.out, "output file (default stdout)");

    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "compare oracle census, predictor census and closed form");
    add_ring_options(verify, ring_args);
    verify->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    verify->add_option("--out", output.out, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "find triples with a given period");
    add_ring_options(search, ring_args);
    search->add_option("--period", target, "target period")->required();
    search->add_option("--max", max_results, "maximum number of triples")->capture_default_str();
    search->add_option("--format", output.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    search->add_option("--out", output.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const iprng::RingContext ring(ring_args.p, ring_args.e);

        if (*period) {
            const auto r = iprng::eventual_period(ring, checked_params(ring, triple));
            std::cout << iprng::format_orbit(r) << '\n';
        } else if (*predict) {
            const auto pred = iprng::predict_period(ring, checked_params(ring, triple));
            std::cout << iprng::format_prediction(pred, explain) << '\n';
        } else if (*table) {
            const auto filter = checked_case(case_name);
            const auto h = iprng::distribution_table(ring, filter);
            if (output.format == "json") {
                emit_json(output.out, iprng::table_json(ring, filter, h));
            } else {
                emit(output.out, [&](std::ostream& out) { iprng::write_histogram_csv(out, h); });
            }
        } else if (*census) {
            const auto filter = checked_case(case_name);
            const auto engine = *iprng::parse_engine(engine_name);
            const auto report = iprng::run_census(ring, filter, engine, {.workers = workers});
            if (output.format == "json") {
                emit_json(output.out, iprng::census_json(report));
            } else {
                emit(output.out, [&](std::ostream& out) { iprng::write_histogram_csv(out, report.histogram); });
            }
            std::cerr << "census p=" << report.p << " e=" << report.e << " case=" << iprng::to_string(filter)
                      << " engine=" << iprng::to_string(engine) << " total=" << report.histogram.total()
                      << " mismatches=" << report.mismatches.size() << " elapsed=" << report.elapsed.count()
                      << "s\n";
            if (!report.mismatches.empty()) return kExitMismatch;
        } else if (*verify) {
            const auto report = iprng::verify(ring, {.workers = workers});
            if (verify_format == "json") {
                emit_json(output.out, iprng::verify_json(report));
            } else {
                emit(output.out, [&](std::ostream& out) { iprng::write_verify_text(out, report); });
            }
            if (!report.consistent()) return kExitMismatch;
        } else if (*search) {
            std::vector<iprng::SearchHit> hits;
            for (const auto& params : iprng::search_params(ring, target, max_results)) {
                hits.push_back({params, iprng::predict_period(ring, params).period,
                                iprng::eventual_period(ring, params).period});
            }
            if (output.format == "json") {
                emit_json(output.out, iprng::search_json(ring, target, hits));
            } else {
                emit(output.out, [&](std::ostream& out) { iprng::write_search_csv(out, hits); });
            }
        }
    } catch (const iprng::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
