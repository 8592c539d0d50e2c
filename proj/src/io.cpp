#include "seqdens/io.hpp"

#include "seqdens/error.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace seqdens {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

PeriodicSequence read_sequence(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_period = false;
  Rational period;
  std::vector<WeightedPoint> motif;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string content = strip(line);
    if (content.empty()) {
      continue;
    }
    const auto tokens = split_ws(content);
    if (!have_period) {
      if (tokens.size() != 2 || tokens[0] != "period") {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'period <rational>'");
      }
      period = parse_rational(tokens[1]);
      have_period = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(lineno) + ": expected '<center> <radius>'");
    }
    motif.push_back({parse_rational(tokens[0]), parse_rational(tokens[1])});
  }
  if (!have_period) {
    throw ParseError("missing 'period' line");
  }
  return PeriodicSequence(period, std::move(motif));
}

PeriodicSequence read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  return read_sequence(in);
}

void write_sequence(std::ostream& out, const PeriodicSequence& s) {
  out << "period 1\n";
  for (const auto& p : s.motif()) {
    out << to_fraction_string(p.center) << ' ' << to_fraction_string(p.radius) << '\n';
  }
}

void write_function_csv(std::ostream& out, const PiecewiseLinear& f, bool decimal_columns) {
  out << (decimal_columns ? "t,value,t_decimal,value_decimal" : "t,value") << '\n';
  for (const auto& c : f.corner_points()) {
    out << to_fraction_string(c.t) << ',' << to_fraction_string(c.v);
    if (decimal_columns) {
      out << ',' << to_decimal_string(c.t) << ',' << to_decimal_string(c.v);
    }
    out << '\n';
  }
}

PiecewiseLinear read_function_csv(std::istream& in) {
  std::string line;
  std::vector<PiecewiseLinear::Corner> corners;
  bool first_row = true;
  Rational start;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string content = strip(line);
    if (content.empty() || content.starts_with("t,")) {
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream row(content);
    std::string field;
    while (std::getline(row, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() < 2) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 't,value'");
    }
    Rational t = parse_rational(fields[0]);
    Rational v = parse_rational(fields[1]);
    if (first_row) {
      if (t != 0) {
        throw ParseError("first corner row must be at t = 0");
      }
      start = std::move(v);
      first_row = false;
    } else {
      corners.push_back({std::move(t), std::move(v)});
    }
  }
  if (first_row) {
    throw ParseError("no corner rows");
  }
  return PiecewiseLinear::from_corners(start, std::move(corners));
}

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 44;
constexpr int kMarginBottom = 56;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

struct Scale {
  double t_end;
  double v_max;

  double x(double t) const {
    return kMarginLeft + t / t_end * (kWidth - kMarginLeft - kMarginRight);
  }
  double y(double v) const {
    return kHeight - kMarginBottom - v / v_max * (kHeight - kMarginTop - kMarginBottom);
  }
};

Scale make_scale(std::span<const PiecewiseLinear> fs, const Rational& t_max) {
  Rational end = t_max;
  Rational top = 0;
  for (const auto& f : fs) {
    end = std::max(end, f.support_end());
    for (const auto& c : f.corner_points()) {
      top = std::max(top, c.v);
    }
  }
  if (end <= 0) end = 1;
  if (top <= 0) top = 1;
  return {to_double(end) * 1.05, to_double(top) * 1.08};
}

void emit_header(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
}

void emit_axes(std::ostream& out, const Scale& sc, std::span<const PiecewiseLinear> fs) {
  const double x0 = sc.x(0);
  const double y0 = sc.y(0);
  const double x1 = kWidth - kMarginRight;
  const double y1 = kMarginTop;
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
      << "\" stroke=\"black\"/>\n";

  // ticks at corner abscissas, exact labels, thinned when crowded
  std::vector<Rational> ts;
  Rational top = 0;
  for (const auto& f : fs) {
    for (const auto& c : f.corner_points()) {
      ts.push_back(c.t);
      top = std::max(top, c.v);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  const std::size_t step = std::max<std::size_t>(1, ts.size() / 12);
  for (std::size_t i = 0; i < ts.size(); i += step) {
    const double x = sc.x(to_double(ts[i]));
    out << "<line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x << "\" y2=\"" << y0 + 5
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x << "\" y=\"" << y0 + 20 << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"10\">" << to_fraction_string(ts[i])
        << "</text>\n";
  }
  if (top > 0) {
    const double y = sc.y(to_double(top));
    out << "<line x1=\"" << x0 - 5 << "\" y1=\"" << y << "\" x2=\"" << x0 << "\" y2=\"" << y
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x0 - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\" "
        << "font-family=\"sans-serif\" font-size=\"10\">" << to_fraction_string(top)
        << "</text>\n";
  }
  out << "<text x=\"" << x0 - 8 << "\" y=\"" << y0 + 4 << "\" text-anchor=\"end\" "
      << "font-family=\"sans-serif\" font-size=\"10\">0</text>\n";
}

void emit_polyline(std::ostream& out, const Scale& sc, const PiecewiseLinear& f,
                   const char* color) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (const auto& c : f.corner_points()) {
    out << sc.x(std::stod(to_decimal_string(c.t))) << ','
        << sc.y(std::stod(to_decimal_string(c.v))) << ' ';
  }
  out << sc.x(sc.t_end) << ',' << sc.y(std::stod(to_decimal_string(f.tail_value())));
  out << "\"/>\n";
  for (const auto& c : f.corner_points()) {
    out << "<circle cx=\"" << sc.x(std::stod(to_decimal_string(c.t))) << "\" cy=\""
        << sc.y(std::stod(to_decimal_string(c.v))) << "\" r=\"2.2\" fill=\"" << color
        << "\"/>\n";
  }
}

}  // namespace

void write_function_svg(std::ostream& out, const PiecewiseLinear& f, const std::string& title,
                        const Rational& t_max) {
  const PiecewiseLinear fs[] = {f};
  const Scale sc = make_scale(fs, t_max);
  emit_header(out, title);
  emit_axes(out, sc, fs);
  emit_polyline(out, sc, f, kPalette[0]);
  out << "</svg>\n";
}

void write_family_svg(std::ostream& out, std::span<const PiecewiseLinear> fs,
                      std::span<const std::string> labels, const std::string& title,
                      const Rational& t_max) {
  const Scale sc = make_scale(fs, t_max);
  emit_header(out, title);
  emit_axes(out, sc, fs);
  constexpr std::size_t palette_size = std::size(kPalette);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    emit_polyline(out, sc, fs[i], kPalette[i % palette_size]);
  }
  for (std::size_t i = 0; i < labels.size() && i < fs.size(); ++i) {
    out << "<text x=\"" << kWidth - kMarginRight - 4 << "\" y=\""
        << kMarginTop + 14 * (i + 1) << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\" fill=\"" << kPalette[i % palette_size] << "\">" << labels[i]
        << "</text>\n";
  }
  out << "</svg>\n";
}

std::string render_report_text(const ComparisonReport& report) {
  std::ostringstream out;
  out << "result: " << (report.equal ? "EQUAL" : "DIFFER") << '\n';
  out << "compared folds: 0.." << report.compared_max_fold << '\n';
  if (!report.equal) {
    out << "first differing fold: " << *report.first_differing_fold << '\n';
    out << "witness t: " << to_fraction_string(*report.witness_t) << '\n';
    out << "value S: " << to_fraction_string(*report.value_left) << '\n';
    out << "value Q: " << to_fraction_string(*report.value_right) << '\n';
    if (*report.first_differing_fold > report.compared_max_fold / 2) {
      out << "note: first difference lies beyond half the compared fold range\n";
    }
  }
  return out.str();
}

std::string render_report_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "k,witnessT,valueS,valueQ\n";
  if (!report.equal) {
    out << *report.first_differing_fold << ',' << to_fraction_string(*report.witness_t) << ','
        << to_fraction_string(*report.value_left) << ','
        << to_fraction_string(*report.value_right) << '\n';
  }
  return out.str();
}

}  // namespace seqdens
