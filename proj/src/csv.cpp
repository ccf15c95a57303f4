#include "exptrio/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exptrio/errors.hpp"

namespace exptrio {

namespace {

std::string location(const std::string& name, std::size_t line) {
    return name + ":" + std::to_string(line);
}

double parse_double(const std::string& token, const std::string& name, std::size_t line) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &consumed);
    } catch (const std::exception&) {
        throw DataError(location(name, line) + ": not a number: '" + token + "'");
    }
    if (consumed != token.size())
        throw DataError(location(name, line) + ": trailing characters after number: '" + token + "'");
    return v;
}

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open output file: " + path);
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file: " + path);
    return in;
}

}  // namespace

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::vector<double> read_value_csv(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw DataError(name + ": empty input");
    ++line_no;
    if (strip(line) != "value")
        throw DataError(location(name, line_no) + ": expected header 'value'");
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string token = strip(line);
        if (token.empty()) continue;
        const double v = parse_double(token, name, line_no);
        if (!(v > 0.0) || !std::isfinite(v))
            throw DataError(location(name, line_no) + ": values must be positive and finite");
        values.push_back(v);
    }
    if (values.empty()) throw DataError(name + ": no data rows");
    return values;
}

std::vector<double> read_value_csv_file(const std::string& path) {
    auto in = open_input(path);
    return read_value_csv(in, path);
}

void write_value_csv(std::ostream& out, std::span<const double> values) {
    out << "value\n";
    for (double v : values) out << format_double(v) << "\n";
}

void write_value_csv_file(const std::string& path, std::span<const double> values) {
    auto out = open_output(path);
    write_value_csv(out, values);
}

void write_density_csv(std::ostream& out, const DiscrepancyReport& report,
                       std::span<const std::string> notes) {
    for (const auto& note : notes) out << "# " << note << "\n";
    out << "x,lhs,rhs,residual\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        out << format_double(report.grid[i]) << ',' << format_double(report.lhs[i]) << ','
            << format_double(report.rhs[i]) << ','
            << format_double(report.lhs[i] - report.rhs[i]) << "\n";
    }
}

void write_density_csv_file(const std::string& path, const DiscrepancyReport& report,
                            std::span<const std::string> notes) {
    auto out = open_output(path);
    write_density_csv(out, report, notes);
}

TripleStatistics read_rst_fixture(std::istream& in, const std::string& name) {
    std::vector<double>* current = nullptr;
    TripleStatistics triples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty() || text[0] == '#') continue;
        if (text == "R") { current = &triples.r; continue; }
        if (text == "S") { current = &triples.s; continue; }
        if (text == "T") { current = &triples.t; continue; }
        if (!current)
            throw DataError(location(name, line_no) + ": data before any R/S/T block header");
        std::istringstream tokens(text);
        std::string token;
        while (tokens >> token) {
            const double v = parse_double(token, name, line_no);
            if (!(v > 0.0) || !std::isfinite(v))
                throw DataError(location(name, line_no) + ": values must be positive and finite");
            current->push_back(v);
        }
    }
    if (triples.r.empty() || triples.r.size() != triples.s.size() || triples.s.size() != triples.t.size())
        throw DataError(name + ": R, S and T blocks must be nonempty and equally sized");
    return triples;
}

TripleStatistics read_rst_fixture_file(const std::string& path) {
    auto in = open_input(path);
    return read_rst_fixture(in, path);
}

}  // namespace exptrio
