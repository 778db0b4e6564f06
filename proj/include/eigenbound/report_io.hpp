#pragma once

#include "eigenbound/bounds.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/radial.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace eigenbound::io {

using Json = nlohmann::json;

struct RunOptions {
    int k_max = 64;
    double tol = radial::default_tolerance;
    bool oracle = false;
    std::optional<double> grid_h;
    std::optional<std::string> emit_profile;
    std::optional<std::string> emit_field;
};

struct ProblemFile {
    radial::OperatorSpec op;
    geometry::DomainSpec domain;
    RunOptions options;
};

/// Schema violations throw ValidationError carrying the JSON pointer of the
/// offending value ("" for the document root).
ProblemFile parse_problem(const Json& doc);
ProblemFile parse_problem_text(std::string_view text);

Json operator_to_json(const radial::OperatorSpec& op);
radial::OperatorSpec operator_from_json(const Json& j, const std::string& pointer = "/operator");

Json to_json(const bounds::BoundReport& report);
bounds::BoundReport report_from_json(const Json& j);

/// "length^-2", or "length^-1" for the gradient-limit problem.
std::string eigenvalue_units(const radial::OperatorSpec& op);

/// Oracle value shown next to a report.
struct OracleResult {
    std::string method; ///< "finite-difference" or "radial-shooting"
    double lambda = 0.0;
    double h = 0.0;     ///< 0 for shooting
    std::optional<oracle::GridEigenResult> grid;
};

/// Finite differences for the 2D Laplacian on a geometric domain, radial
/// shooting for Laplacian / p-Laplacian on balls; UnsupportedError otherwise.
/// Default spacing: longest bounding-box side / 256.
OracleResult run_oracle(const ProblemFile& problem, bool keep_field);

/// Columns r, phi, dphi, residual on the certificate's sample points.
void write_profile_csv(const radial::OperatorSpec& op, const bounds::Certificate& cert, std::ostream& out);

void write_table(const bounds::BoundReport& report, const std::optional<OracleResult>& oracle_result,
                 std::ostream& out);

void write_p_scan_table(const bounds::PScan& scan, std::ostream& out);

} // namespace eigenbound::io
