// eigenbound: certified bounds on the principal Dirichlet eigenvalue.
//
//   eigenbound run problem.json [--json out.json] [--profile-csv out.csv]
//                               [--field-csv out.csv] [--k-max N] [--tol X]
//                               [--oracle] [--grid-h H] [--p-scan p1,p2,...]
//                               [--quiet]
//
// Exit status: 0 success, 2 invalid input or unsupported request, 3 numeric
// or consistency failure.

#include "eigenbound/bounds.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/report_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace eigenbound;

constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct Args {
    std::string problem;
    std::string json_out;
    std::string profile_csv;
    std::string field_csv;
    std::optional<int> k_max;
    std::optional<double> tol;
    bool oracle = false;
    std::optional<double> grid_h;
    std::optional<std::string> p_scan;
    bool quiet = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path);
    return out;
}

std::vector<double> parse_p_list(const std::string& text)
{
    std::vector<double> ps;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ArgumentError("--p-scan: not a number: '" + item + "'");
        }
        if (used != item.size()) throw ArgumentError("--p-scan: not a number: '" + item + "'");
        ps.push_back(p);
    }
    if (ps.empty()) throw ArgumentError("--p-scan needs at least one value of p");
    return ps;
}

int run_p_scan(const io::ProblemFile& problem, const Args& args)
{
    const auto ps = parse_p_list(*args.p_scan);
    int n = radial::operator_dimension(problem.op);
    if (n == 0) n = problem.domain.dimension;
    const double R = geometry::inradius(problem.domain);
    io::write_p_scan_table(bounds::p_limit_scan(n, R, ps), std::cout);
    return 0;
}

int run(const Args& args)
{
    auto problem = io::parse_problem_text(read_file(args.problem));
    if (args.k_max) problem.options.k_max = *args.k_max;
    if (args.tol) problem.options.tol = *args.tol;
    if (args.oracle) problem.options.oracle = true;
    if (args.grid_h) problem.options.grid_h = *args.grid_h;
    if (!args.profile_csv.empty()) problem.options.emit_profile = args.profile_csv;
    if (!args.field_csv.empty()) problem.options.emit_field = args.field_csv;
    if (problem.options.k_max < 1) throw ArgumentError("--k-max must be at least 1");
    if (!(problem.options.tol > 0.0)) throw ArgumentError("--tol must be positive");
    if (problem.options.grid_h && !(*problem.options.grid_h > 0.0)) throw ArgumentError("--grid-h must be positive");

    if (args.p_scan) return run_p_scan(problem, args);

    bounds::BoundOptions opts;
    opts.k_max = problem.options.k_max;
    opts.tol = problem.options.tol;
    const auto report = bounds::full_report(problem.op, problem.domain, opts);

    std::optional<io::OracleResult> oracle_result;
    if (problem.options.oracle || problem.options.emit_field)
        oracle_result = io::run_oracle(problem, problem.options.emit_field.has_value());

    if (!args.quiet) io::write_table(report, oracle_result, std::cout);

    if (!args.json_out.empty()) {
        auto j = io::to_json(report);
        if (oracle_result && problem.options.oracle)
            j["oracle"] = {{"method", oracle_result->method}, {"lambda", oracle_result->lambda},
                           {"h", oracle_result->h}};
        auto out = open_output(args.json_out);
        out << j.dump(2) << '\n';
    }
    if (problem.options.emit_profile) {
        auto out = open_output(*problem.options.emit_profile);
        io::write_profile_csv(problem.op, report.certificate, out);
    }
    if (problem.options.emit_field) {
        if (!oracle_result || !oracle_result->grid)
            throw UnsupportedError("field output requires the finite-difference oracle");
        auto out = open_output(*problem.options.emit_field);
        oracle::write_field_csv(*oracle_result->grid, out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified bounds on the principal Dirichlet eigenvalue"};
    app.require_subcommand(1);
    Args args;
    auto* cmd = app.add_subcommand("run", "Bound the principal eigenvalue of a JSON problem");
    cmd->add_option("problem", args.problem, "Problem description (JSON)")->required();
    cmd->add_option("--json", args.json_out, "Write the report as JSON");
    cmd->add_option("--profile-csv", args.profile_csv, "Write the certificate profile (r, phi, dphi, residual)");
    cmd->add_option("--field-csv", args.field_csv, "Write the oracle eigenvector (x, y, value)");
    cmd->add_option("--k-max", args.k_max, "Number of zero pairs scanned per family");
    cmd->add_option("--tol", args.tol, "Residual tolerance of the certificate check");
    cmd->add_flag("--oracle", args.oracle, "Run the independent numerical oracle");
    cmd->add_option("--grid-h", args.grid_h, "Oracle grid spacing");
    cmd->add_option("--p-scan", args.p_scan, "Comma-separated increasing p values for the p -> infinity scan");
    cmd->add_flag("--quiet", args.quiet, "Suppress the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run(args);
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const SingularPointError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
