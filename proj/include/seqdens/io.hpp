#pragma once

#include "seqdens/analysis.hpp"
#include "seqdens/piecewise_linear.hpp"
#include "seqdens/sequence.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

namespace seqdens {

// Sequence text format, one sequence per file:
//   period <rational>
//   <center> <radius>      (one point per line)
// '#' starts a comment; blank lines are ignored.
PeriodicSequence read_sequence(std::istream& in);
PeriodicSequence read_sequence_file(const std::filesystem::path& path);
void write_sequence(std::ostream& out, const PeriodicSequence& s);

// CSV of a function: header `t,value`, one row per canonical corner, exact
// rationals as `a/b`. With decimal_columns, appends t_decimal,value_decimal
// at 12 significant digits.
void write_function_csv(std::ostream& out, const PiecewiseLinear& f,
                        bool decimal_columns = false);

// Re-reads the first two CSV columns back into a function.
PiecewiseLinear read_function_csv(std::istream& in);

// One function (or a labeled family) as an SVG polyline plot; corner
// abscissas are labeled with their exact fractions.
void write_function_svg(std::ostream& out, const PiecewiseLinear& f, const std::string& title,
                        const Rational& t_max = Rational(0));
void write_family_svg(std::ostream& out, std::span<const PiecewiseLinear> fs,
                      std::span<const std::string> labels, const std::string& title,
                      const Rational& t_max = Rational(0));

std::string render_report_text(const ComparisonReport& report);
std::string render_report_csv(const ComparisonReport& report);

}  // namespace seqdens
