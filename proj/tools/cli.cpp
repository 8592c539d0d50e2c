// seqdens command line: parse sequence files, emit density corner files and
// plots, compare fingerprints, query the brute-force sweep.
//
// Exit codes: 0 success (or fingerprints equal), 1 fingerprints differ,
// 2 parse error, 3 invalid sequence.

#include "seqdens/analysis.hpp"
#include "seqdens/coverage.hpp"
#include "seqdens/densities.hpp"
#include "seqdens/error.hpp"
#include "seqdens/fixtures.hpp"
#include "seqdens/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using namespace seqdens;

struct FoldRange {
  int lo = 0;
  int hi = 0;
};

FoldRange parse_fold_range(const std::string& text, int default_lo, int default_hi) {
  if (text.empty()) {
    return {default_lo, default_hi};
  }
  FoldRange range;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(text);
    } else {
      range.lo = std::stoi(text.substr(0, dots));
      range.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--k", "expected an integer or a range like 0..9");
  }
  if (range.lo < 0 || range.hi < range.lo) {
    throw CLI::ValidationError("--k", "fold range must satisfy 0 <= lo <= hi");
  }
  return range;
}

PeriodicSequence load_sequence(const std::string& file, bool neighbor_radii) {
  PeriodicSequence s = read_sequence_file(file);
  return neighbor_radii ? s.with_neighbor_radii() : s;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  std::cout << path.string() << '\n';
  return out;
}

struct ComputeOpts {
  std::string file;
  std::string k_text;
  std::string format = "csv";
  std::string out_dir = ".";
  std::string t_max = "0";
  bool neighbor_radii = false;
  bool decimal = false;
  bool trapezoids = false;
};

int run_compute(const ComputeOpts& opt) {
  const PeriodicSequence s = load_sequence(opt.file, opt.neighbor_radii);
  const int m = static_cast<int>(s.size());
  const FoldRange range = parse_fold_range(opt.k_text, 0, m);
  const Rational t_max = parse_rational(opt.t_max);
  const std::string stem = fs::path(opt.file).stem().string();
  fs::create_directories(opt.out_dir);

  for (int k = range.lo; k <= range.hi; ++k) {
    const PiecewiseLinear f = density(s, k);
    const std::string base = stem + ".density" + std::to_string(k);
    if (opt.format == "svg") {
      std::vector<PiecewiseLinear> curves{f};
      std::vector<std::string> labels{"density " + std::to_string(k)};
      if (opt.trapezoids && k >= 1) {
        for (std::size_t i = 1; i <= s.size(); ++i) {
          curves.push_back(trapezoid(s, k, i).to_function());
          labels.push_back("window " + std::to_string(i));
        }
      }
      auto out = open_out(fs::path(opt.out_dir) / (base + ".svg"));
      if (curves.size() == 1) {
        write_function_svg(out, f, stem + " density " + std::to_string(k), t_max);
      } else {
        write_family_svg(out, curves, labels, stem + " density " + std::to_string(k), t_max);
      }
    } else {
      auto out = open_out(fs::path(opt.out_dir) / (base + ".csv"));
      write_function_csv(out, f, opt.decimal);
      if (opt.trapezoids && k >= 1) {
        for (std::size_t i = 1; i <= s.size(); ++i) {
          auto part = open_out(fs::path(opt.out_dir) /
                               (base + ".window" + std::to_string(i) + ".csv"));
          write_function_csv(part, trapezoid(s, k, i).to_function(), opt.decimal);
        }
      }
    }
  }
  return 0;
}

struct CompareOpts {
  std::string file_s;
  std::string file_q;
  std::string format = "text";
  bool neighbor_radii = false;
};

int run_compare(const CompareOpts& opt) {
  const PeriodicSequence s = load_sequence(opt.file_s, opt.neighbor_radii);
  const PeriodicSequence q = load_sequence(opt.file_q, opt.neighbor_radii);
  const ComparisonReport report = fingerprints_equal(s, q);
  std::cout << (opt.format == "csv" ? render_report_csv(report) : render_report_text(report));
  return report.equal ? 0 : 1;
}

struct OracleOpts {
  std::string file;
  std::string t = "0";
  int k_max = -1;
  bool neighbor_radii = false;
};

int run_oracle(const OracleOpts& opt) {
  const PeriodicSequence s = load_sequence(opt.file, opt.neighbor_radii);
  const CoverageProfile profile = coverage(s, parse_rational(opt.t));
  const std::size_t top = opt.k_max < 0
                              ? profile.max_fold()
                              : std::min<std::size_t>(profile.max_fold(),
                                                      static_cast<std::size_t>(opt.k_max));
  std::cout << "k,length\n";
  for (std::size_t k = 0; k <= top; ++k) {
    if (profile.length(k) != 0) {
      std::cout << k << ',' << to_fraction_string(profile.length(k)) << '\n';
    }
  }
  return 0;
}

struct MaximaOpts {
  std::string file;
  int fold = 1;
  bool neighbor_radii = false;
};

int run_maxima(const MaximaOpts& opt) {
  const PeriodicSequence s = load_sequence(opt.file, opt.neighbor_radii);
  const auto maxima = density(s, opt.fold).local_maxima();
  std::cout << "t_begin,t_end,value\n";
  for (const auto& p : maxima) {
    std::cout << to_fraction_string(p.t_begin) << ',' << to_fraction_string(p.t_end) << ','
              << to_fraction_string(p.value) << '\n';
  }
  std::cout << "maxima: " << maxima.size() << '\n';
  return 0;
}

struct DemoOpts {
  std::string name;
  std::string out_dir = ".";
  bool list = false;
};

int run_demo(const DemoOpts& opt) {
  if (opt.list) {
    for (const auto& name : fixtures::names()) {
      std::cout << name << '\n';
    }
    return 0;
  }
  std::string text;
  try {
    text = fixtures::file_text(opt.name);
  } catch (const std::out_of_range&) {
    throw ParseError("unknown fixture '" + opt.name + "' (try demo --list)");
  }
  fs::create_directories(opt.out_dir);
  auto out = open_out(fs::path(opt.out_dir) / (opt.name + ".seq"));
  out << text;
  return 0;
}

struct DensigramOpts {
  std::string file;
  std::string k_text;
  std::string format = "csv";
  std::string out_dir = ".";
  std::string t_max = "0";
  bool neighbor_radii = false;
  bool decimal = false;
};

int run_densigram(const DensigramOpts& opt) {
  const PeriodicSequence s = load_sequence(opt.file, opt.neighbor_radii);
  const int m = static_cast<int>(s.size());
  FoldRange range = parse_fold_range(opt.k_text, 1, m);
  if (range.lo < 1) {
    throw CLI::ValidationError("--k", "accumulated densities start at fold 1");
  }
  const std::string stem = fs::path(opt.file).stem().string();
  fs::create_directories(opt.out_dir);

  const DensityFingerprint fp = fingerprint(s, range.hi);
  const std::vector<PiecewiseLinear> acc = densigram(fp);
  if (opt.format == "svg") {
    std::vector<PiecewiseLinear> curves;
    std::vector<std::string> labels;
    for (int k = range.lo; k <= range.hi; ++k) {
      curves.push_back(acc[static_cast<std::size_t>(k - 1)]);
      labels.push_back("sum to " + std::to_string(k));
    }
    auto out = open_out(fs::path(opt.out_dir) / (stem + ".densigram.svg"));
    write_family_svg(out, curves, labels, stem + " densigram", parse_rational(opt.t_max));
  } else {
    for (int k = range.lo; k <= range.hi; ++k) {
      auto out = open_out(fs::path(opt.out_dir) /
                          (stem + ".densigram" + std::to_string(k) + ".csv"));
      write_function_csv(out, acc[static_cast<std::size_t>(k - 1)], opt.decimal);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact density functions of periodic sequences of intervals"};
  app.require_subcommand(1);
  int rc = 0;

  ComputeOpts compute_opts;
  auto* compute = app.add_subcommand("compute", "write density corner files for a fold range");
  compute->add_option("file", compute_opts.file, "sequence file")->required();
  compute->add_option("--k", compute_opts.k_text, "fold or range, e.g. 2 or 0..9");
  compute->add_option("--format", compute_opts.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  compute->add_option("--out", compute_opts.out_dir, "output directory");
  compute->add_option("--tmax", compute_opts.t_max, "right edge of svg plots (rational)");
  compute->add_flag("--neighbor-radii", compute_opts.neighbor_radii,
                    "grow each point to half the distance to its nearest neighbor");
  compute->add_flag("--decimal", compute_opts.decimal, "append decimal columns to csv");
  compute->add_flag("--trapezoids", compute_opts.trapezoids,
                    "also emit the per-window trapezoid components");
  compute->callback([&] { rc = run_compute(compute_opts); });

  CompareOpts compare_opts;
  auto* compare = app.add_subcommand("compare", "compare the fingerprints of two sequences");
  compare->add_option("fileS", compare_opts.file_s, "first sequence file")->required();
  compare->add_option("fileQ", compare_opts.file_q, "second sequence file")->required();
  compare->add_option("--format", compare_opts.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  compare->add_flag("--neighbor-radii", compare_opts.neighbor_radii,
                    "apply neighbor radii to both sequences first");
  compare->callback([&] { rc = run_compare(compare_opts); });

  OracleOpts oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "fold-count profile from the brute-force sweep");
  oracle->add_option("file", oracle_opts.file, "sequence file")->required();
  oracle->add_option("--t", oracle_opts.t, "growth radius (rational)")->required();
  oracle->add_option("--k", oracle_opts.k_max, "largest fold to print");
  oracle->add_flag("--neighbor-radii", oracle_opts.neighbor_radii, "apply neighbor radii");
  oracle->callback([&] { rc = run_oracle(oracle_opts); });

  MaximaOpts maxima_opts;
  auto* maxima = app.add_subcommand("maxima", "local maxima of one density function");
  maxima->add_option("file", maxima_opts.file, "sequence file")->required();
  maxima->add_option("--k", maxima_opts.fold, "fold index")->required();
  maxima->add_flag("--neighbor-radii", maxima_opts.neighbor_radii, "apply neighbor radii");
  maxima->callback([&] { rc = run_maxima(maxima_opts); });

  DemoOpts demo_opts;
  auto* demo = app.add_subcommand("demo", "write a built-in example sequence file");
  demo->add_option("name", demo_opts.name, "fixture name");
  demo->add_option("--out", demo_opts.out_dir, "output directory");
  demo->add_flag("--list", demo_opts.list, "list the available fixtures");
  demo->callback([&] {
    if (!demo_opts.list && demo_opts.name.empty()) {
      throw CLI::RequiredError("name");
    }
    rc = run_demo(demo_opts);
  });

  DensigramOpts densigram_opts;
  auto* dgram = app.add_subcommand("densigram", "accumulated densities over folds 1..k");
  dgram->add_option("file", densigram_opts.file, "sequence file")->required();
  dgram->add_option("--k", densigram_opts.k_text, "fold or range, e.g. 1..4");
  dgram->add_option("--format", densigram_opts.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  dgram->add_option("--out", densigram_opts.out_dir, "output directory");
  dgram->add_option("--tmax", densigram_opts.t_max, "right edge of svg plots (rational)");
  dgram->add_flag("--neighbor-radii", densigram_opts.neighbor_radii, "apply neighbor radii");
  dgram->add_flag("--decimal", densigram_opts.decimal, "append decimal columns to csv");
  dgram->callback([&] { rc = run_densigram(densigram_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const seqdens::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const seqdens::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
