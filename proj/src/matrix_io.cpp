#include "estrada/matrix_io.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "estrada/eigen.hpp"
#include "estrada/errors.hpp"
#include "estrada/invariants.hpp"

namespace estrada {

SymMatrix parse_matrix_text(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::vector<double> row;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                const double v = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                row.push_back(v);
            } catch (const std::exception&) {
                throw MatrixParseError("row " + std::to_string(lineno) + ": bad number '" +
                                       token + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return SymMatrix::from_rows(rows);
}

MatrixReport evaluate_matrix(const SymMatrix& m, BoundTolerances tols) {
    MatrixReport report;
    report.order = m.order();
    report.trace = trace(m);
    const RowSumStats stats = row_sum_stats(m);
    report.min_row_sum = stats.min_sum;
    report.max_row_sum = stats.max_sum;
    report.nonnegative = m.nonnegative();

    const Spectrum spectrum = jacobi_eigen(m, false);
    report.rho1 = spectrum.values.front();
    report.estrada = estrada_index(spectrum);

    if (report.nonnegative) {
        const double slack = tols.holds_rel * std::max(1.0, std::abs(report.rho1));
        report.bracket_holds = stats.min_sum - slack <= report.rho1 &&
                               report.rho1 <= stats.max_sum + slack;
        const double value = *matrix_estrada_bound(m);
        report.bound_value = value;
        const double holds_tol = tols.holds_rel * std::max(1.0, std::abs(report.estrada));
        const double eq_tol = tols.eq_rel * std::max(1.0, std::abs(report.estrada));
        const bool holds = value <= report.estrada + holds_tol;
        report.bound_holds = holds;
        report.bound_equality = holds && std::abs(report.estrada - value) <= eq_tol;
    }
    return report;
}

}  // namespace estrada
