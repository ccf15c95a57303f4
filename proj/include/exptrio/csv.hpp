#ifndef EXPTRIO_CSV_HPP
#define EXPTRIO_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "exptrio/densities.hpp"
#include "exptrio/gof.hpp"

namespace exptrio {

// Formats a double with enough digits (17 significant) to round-trip exactly.
std::string format_double(double v);

// Single-column CSV with header "value", one decimal per row. Reader errors
// carry the offending line number.
std::vector<double> read_value_csv(std::istream& in, const std::string& name);
std::vector<double> read_value_csv_file(const std::string& path);
void write_value_csv(std::ostream& out, std::span<const double> values);
void write_value_csv_file(const std::string& path, std::span<const double> values);

// Grid CSV with header "x,lhs,rhs,residual"; optional '#'-prefixed note
// lines precede the header.
void write_density_csv(std::ostream& out, const DiscrepancyReport& report,
                       std::span<const std::string> notes);
void write_density_csv_file(const std::string& path, const DiscrepancyReport& report,
                            std::span<const std::string> notes);

// Plain-text R/S/T fixture: three blocks introduced by lines "R", "S", "T",
// each followed by whitespace-separated decimal values (equal counts).
TripleStatistics read_rst_fixture(std::istream& in, const std::string& name);
TripleStatistics read_rst_fixture_file(const std::string& path);

}  // namespace exptrio

#endif  // EXPTRIO_CSV_HPP
