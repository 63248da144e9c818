// rlfont: font size detection on run-length compressed document pages.

#include "rlfont/bench.hpp"
#include "rlfont/detector.hpp"
#include "rlfont/docio.hpp"
#include "rlfont/error.hpp"
#include "rlfont/features.hpp"
#include "rlfont/regression.hpp"
#include "rlfont/segmentation.hpp"
#include "rlfont/synthgen.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace rlfont;

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

SizeSet parse_sizes(const std::string& text) {
  SizeSet sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int size = std::stoi(item, &used);
      if (used != item.size() || size <= 0) {
        throw std::invalid_argument(item);
      }
      sizes.push_back(size);
    } catch (const std::logic_error&) {
      throw Error("--sizes: '" + item + "' is not a positive integer");
    }
  }
  if (sizes.empty()) {
    throw Error("--sizes: empty list");
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

/// Runs `fn(i)` for i in [0, n) on up to `jobs` threads; results keep index
/// order.
template <typename Fn>
auto parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> results;
  results.reserve(n);
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < n; start += jobs) {
    std::vector<std::future<Result>> batch;
    for (std::size_t i = start; i < std::min(n, start + jobs); ++i) {
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, fn, i));
    }
    for (auto& f : batch) {
      results.push_back(f.get());
    }
  }
  return results;
}

int cmd_convert(const fs::path& in, const fs::path& out) {
  const CompressedImage image = read_document(in);
  const std::string ext = out.extension().string();
  if (ext == ".rld") {
    write_rldoc(image, out);
  } else if (ext == ".pbm") {
    write_pbm(decode(image), out);
  } else {
    throw IoError("unsupported output extension '" + ext + "' (expected .pbm or .rld)");
  }
  return 0;
}

int cmd_synth(const fs::path& spec, std::uint64_t seed, const fs::path& out, const fs::path& truth,
              const PageLayout& layout) {
  const std::vector<LineSpec> specs = read_line_specs(spec);
  std::vector<int> sizes;
  for (const LineSpec& s : specs) {
    sizes.push_back(s.font_size);
  }
  const GeometryTable standard = GeometryTable::standard();
  const bool all_standard = std::all_of(sizes.begin(), sizes.end(),
                                        [&](int s) { return standard.contains(s); });
  const GeometryTable geometry = all_standard ? standard : GeometryTable::interpolated(sizes);
  const SyntheticPage page = generate_page(specs, layout, seed, geometry);
  const CompressedImage image = encode(page.bitmap);
  if (out.extension() == ".pbm") {
    write_pbm(page.bitmap, out);
  } else {
    write_rldoc(image, out);
  }
  write_truth(page.truth, truth);
  return 0;
}

int cmd_segment(const fs::path& in, std::size_t min_height) {
  const CompressedImage page = read_document(in);
  const Segmentation seg = segment_lines(vpp(page), min_height);
  std::cout << "# rlfont v1\n";
  for (std::size_t i = 0; i < seg.lines.size(); ++i) {
    std::cout << "line " << i + 1 << ": rows=" << seg.lines[i].first_row << ".."
              << seg.lines[i].last_row << " h=" << seg.lines[i].height() << '\n';
  }
  if (seg.discarded > 0) {
    std::cerr << "segment: discarded " << seg.discarded
              << " inked row runs shorter than " << min_height << " rows\n";
  }
  return 0;
}

int cmd_features(const fs::path& in, std::size_t min_height) {
  const CompressedImage page = read_document(in);
  const Segmentation seg = segment_lines(vpp(page), min_height);
  std::cout << "# rlfont v1\n";
  std::cout << "# row_range\th\tb\ta\td\tm1\tm2\tl\tr\tR\tmhd\n";
  for (const LineBounds& bounds : seg.lines) {
    const CompressedImage line = extract_line(page, bounds);
    std::cout << bounds.first_row << ".." << bounds.last_row << '\t';
    try {
      const LineFeatures f = extract_features(line);
      const DensityReport d = densities(line, f);
      std::cout << f.h << '\t' << f.b << '\t' << f.a << '\t' << f.d << '\t' << f.m1 << '\t' << f.m2
                << '\t' << f.l << '\t' << f.r << '\t' << fixed(f.R, 6) << '\t' << fixed(d.mhd, 4)
                << '\n';
    } catch (const Error& e) {
      std::cout << "error\t" << e.what() << '\n';
    }
  }
  return 0;
}

int cmd_train(const std::vector<fs::path>& pages, const std::vector<fs::path>& truths,
              const fs::path& out, unsigned jobs) {
  if (pages.size() != truths.size()) {
    throw Error("train: need one --truth file per --pages file (" + std::to_string(pages.size()) +
                " pages, " + std::to_string(truths.size()) + " truth files)");
  }
  const auto per_page = parallel_map(pages.size(), jobs, [&](std::size_t i) {
    return collect_training_samples(read_document(pages[i]), read_truth(truths[i]));
  });
  TrainingSamples samples;
  for (const TrainingSamples& s : per_page) {
    samples += s;
  }
  for (const std::string& skipped : samples.skipped) {
    std::cerr << "train: skipped " << skipped << '\n';
  }
  const ModelSet models = train_models(samples);
  save_models(models, out);
  for (const RegressionModel& m : models.models()) {
    std::cerr << "train: " << to_string(m.feature) << " y = " << fixed(m.slope, 4) << " x + "
              << fixed(m.intercept, 4) << ", residual norm " << fixed(m.residual_norm, 4)
              << ", n = " << m.n_samples << '\n';
  }
  return 0;
}

int cmd_detect(const fs::path& in, const fs::path& models_path, const DetectorOptions& options,
               const std::string& format, const fs::path& truth) {
  const CompressedImage page = read_document(in);
  const ModelSet models = load_models(models_path);
  const DocumentReport report = detect_document(page, models, options);
  std::cout << (format == "regions" ? format_report_regions(report) : format_report_tsv(report));
  if (!truth.empty()) {
    std::cout << format_score(score(report, read_truth(truth)));
  }
  return 0;
}

int cmd_bench(const fs::path& in, std::size_t iters) {
  const BenchResult result = run_vpp_benchmark(read_document(in), iters);
  std::cout << format_bench(result);
  if (!result.profiles_match || result.runs_visited != result.total_pairs) {
    throw InvariantError("bench: compressed and raster profiles disagree");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Font size detection straight from run-length compressed document pages"};
  app.require_subcommand(1);

  fs::path in, out, truth_path, spec_path, models_path;
  std::size_t min_height = 3;

  auto* convert = app.add_subcommand("convert", "Convert between .pbm and .rld");
  convert->add_option("--in", in, "Input .pbm or .rld")->required();
  convert->add_option("--out", out, "Output .pbm or .rld")->required();

  std::uint64_t seed = 1;
  PageLayout layout;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic page with ground truth");
  synth->add_option("--spec", spec_path, "Line spec file: size=<s> class=<c> fill=<f> per line")
      ->required();
  synth->add_option("--seed", seed, "Generator seed")->required();
  synth->add_option("--out", out, "Output page (.rld, or .pbm)")->required();
  synth->add_option("--truth", truth_path, "Output ground truth file")->required();
  synth->add_option("--width", layout.width, "Page width in pixels")->capture_default_str();
  synth->add_option("--height", layout.height, "Page height in pixels")->capture_default_str();
  synth->add_option("--gap", layout.gap, "Blank rows between lines")->capture_default_str();

  auto* segment = app.add_subcommand("segment", "List text line bounds");
  segment->add_option("--in", in, "Input page")->required();
  segment->add_option("--min-height", min_height, "Shortest kept line")->capture_default_str();

  auto* features = app.add_subcommand("features", "Dump per-line features");
  features->add_option("--in", in, "Input page")->required();
  features->add_option("--min-height", min_height, "Shortest kept line")->capture_default_str();

  std::vector<fs::path> pages, truths;
  unsigned jobs = 1;
  auto* train = app.add_subcommand("train", "Fit size models from pages with ground truth");
  train->add_option("--pages", pages, "Training pages")->required();
  train->add_option("--truth", truths, "Ground truth, one per page")->required();
  train->add_option("--out", out, "Output model file")->required();
  train->add_option("--jobs", jobs, "Pages processed in parallel")->capture_default_str();

  DetectorOptions options;
  std::string sizes = "8,10,12,14,16,18,20";
  std::string format = "tsv";
  bool line_height_only = false;
  auto* detect = app.add_subcommand("detect", "Detect the font size of every line");
  detect->add_option("--in", in, "Input page")->required();
  detect->add_option("--models", models_path, "Model file from train")->required();
  detect->add_option("--sizes", sizes, "Candidate sizes, comma separated")->capture_default_str();
  detect->add_option("--mhd-low", options.thresholds.low, "MHD percent below which a line has descenders")
      ->capture_default_str();
  detect->add_option("--mhd-high", options.thresholds.high, "MHD percent from which a line is upper case")
      ->capture_default_str();
  detect->add_option("--min-height", options.min_height, "Shortest kept line")->capture_default_str();
  detect->add_option("--truth", truth_path, "Ground truth; prints an accuracy table");
  detect->add_option("--format", format, "tsv or regions")
      ->check(CLI::IsMember({"tsv", "regions"}))
      ->capture_default_str();
  detect->add_flag("--line-height-only", line_height_only,
                   "Predict every line from the line-height model");

  std::size_t iters = 20;
  auto* bench = app.add_subcommand("bench", "Time VPP on runs against decode + raster sums");
  bench->add_option("--in", in, "Input page")->required();
  bench->add_option("--iters", iters, "Timed iterations")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return 1;
  }

  try {
    if (*convert) {
      return cmd_convert(in, out);
    }
    if (*synth) {
      return cmd_synth(spec_path, seed, out, truth_path, layout);
    }
    if (*segment) {
      return cmd_segment(in, min_height);
    }
    if (*features) {
      return cmd_features(in, min_height);
    }
    if (*train) {
      return cmd_train(pages, truths, out, jobs);
    }
    if (*detect) {
      options.candidates = parse_sizes(sizes);
      options.route_ascender_rich = !line_height_only;
      return cmd_detect(in, models_path, options, format, truth_path);
    }
    if (*bench) {
      return cmd_bench(in, iters);
    }
  } catch (const Error& e) {
    std::cerr << "rlfont: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "rlfont: internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
