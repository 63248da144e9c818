#include "rlfont/detector.hpp"

#include "rlfont/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace rlfont {

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::string range(const LineBounds& b) {
  return std::to_string(b.first_row) + ".." + std::to_string(b.last_row);
}

LineReport measure(const CompressedImage& page, const LineBounds& bounds, const ModelSet& models,
                   const DetectorOptions& options) {
  LineReport line;
  line.bounds = bounds;
  const CompressedImage data = extract_line(page, bounds);
  const Profile profile = vpp(data);
  line.height = profile.size();
  line.compressed_length = compressed_length(data);
  line.text_extent = text_extent(data);
  if (line.text_extent <= 0) {
    line.error = "text extent r = " + std::to_string(line.text_extent) + " is not positive";
    return line;
  }
  line.length_ratio =
      static_cast<double>(line.compressed_length) / static_cast<double>(line.text_extent);

  try {
    line.features = features_from_profile(profile, line.text_extent, line.compressed_length);
    line.density = densities(profile, *line.features);
  } catch (const Error& e) {
    line.error = e.what();
  }

  const LineClass cls = classify_line(mhd(profile, line.text_extent), options.thresholds);
  line.line_class = cls;
  line.uppercase_unsupported = cls.label == LineClassLabel::UpperCase;

  const bool ascender_route =
      options.route_ascender_rich && cls.label == LineClassLabel::AscenderRich;
  const RegressionModel& model =
      models.at(ascender_route ? Feature::AscenderHeight : Feature::LineHeight);
  // With no descenders below it the measured line height is the ascender
  // height, so both routes read the same number off the line.
  line.estimate = predict_size(model, static_cast<double>(line.height), options.candidates);
  line.estimate->line_class = cls;
  return line;
}

void flag_short_lines(std::vector<LineReport>& lines, double deviation) {
  std::vector<double> ratios;
  for (const LineReport& l : lines) {
    if (l.text_extent > 0) {
      ratios.push_back(l.length_ratio);
    }
  }
  if (ratios.empty()) {
    return;
  }
  std::sort(ratios.begin(), ratios.end());
  const std::size_t mid = ratios.size() / 2;
  const double median =
      ratios.size() % 2 == 1 ? ratios[mid] : (ratios[mid - 1] + ratios[mid]) / 2.0;
  for (LineReport& l : lines) {
    if (l.text_extent > 0 && std::abs(l.length_ratio - median) > deviation * median) {
      l.short_line_low_confidence = true;
    }
  }
}

}  // namespace

DocumentReport detect_document(const CompressedImage& page, const ModelSet& models,
                               const DetectorOptions& options) {
  models.at(Feature::LineHeight);
  if (options.route_ascender_rich) {
    models.at(Feature::AscenderHeight);
  }
  if (options.candidates.empty()) {
    throw Error("candidate size set is empty");
  }
  if (!(options.thresholds.low <= options.thresholds.high)) {
    throw Error("MHD thresholds must satisfy low <= high");
  }

  const Segmentation segmentation = segment_lines(vpp(page), options.min_height);
  DocumentReport report;
  report.discarded = segmentation.discarded;
  report.lines.reserve(segmentation.lines.size());
  for (const LineBounds& bounds : segmentation.lines) {
    report.lines.push_back(measure(page, bounds, models, options));
  }
  flag_short_lines(report.lines, options.short_line_deviation);
  return report;
}

ScoreTable& ScoreTable::operator+=(const ScoreTable& other) {
  std::map<int, SizeScore> merged;
  for (const ScoreTable* table : {static_cast<const ScoreTable*>(this), &other}) {
    for (const SizeScore& s : table->per_size) {
      SizeScore& slot = merged[s.font_size];
      slot.font_size = s.font_size;
      slot.lines += s.lines;
      slot.correct += s.correct;
    }
  }
  per_size.clear();
  for (const auto& [size, s] : merged) {
    per_size.push_back(s);
  }
  lines += other.lines;
  correct += other.correct;
  excluded_upper_case += other.excluded_upper_case;
  return *this;
}

ScoreTable score(const DocumentReport& report, const GroundTruth& truth) {
  std::map<std::pair<std::size_t, std::size_t>, const LineReport*> detected;
  for (const LineReport& line : report.lines) {
    detected[{line.bounds.first_row, line.bounds.last_row}] = &line;
  }

  std::vector<std::string> unmatched;
  std::map<int, SizeScore> sizes;
  ScoreTable table;
  for (const TruthLine& t : truth) {
    const auto it = detected.find({t.first_row, t.last_row});
    if (it == detected.end()) {
      unmatched.push_back("truth " + std::to_string(t.first_row) + ".." + std::to_string(t.last_row));
      continue;
    }
    const LineReport& line = *it->second;
    detected.erase(it);
    if (t.line_class == LineClassLabel::UpperCase) {
      ++table.excluded_upper_case;
      continue;
    }
    SizeScore& s = sizes[t.font_size];
    s.font_size = t.font_size;
    ++s.lines;
    ++table.lines;
    if (line.estimate && line.estimate->snapped_size == t.font_size) {
      ++s.correct;
      ++table.correct;
    }
  }
  for (const auto& [rows, line] : detected) {
    unmatched.push_back("detected " + range(line->bounds));
  }
  if (!unmatched.empty()) {
    std::string message = "line sets do not align:";
    for (const std::string& u : unmatched) {
      message += " " + u;
    }
    throw AlignmentError(message);
  }
  for (const auto& [size, s] : sizes) {
    table.per_size.push_back(s);
  }
  return table;
}

TrainingSamples& TrainingSamples::operator+=(const TrainingSamples& other) {
  const auto append = [](TrainingSet& into, const TrainingSet& from) {
    into.samples.insert(into.samples.end(), from.samples.begin(), from.samples.end());
  };
  append(line_height, other.line_height);
  append(ascender_height, other.ascender_height);
  append(base_height, other.base_height);
  skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
  return *this;
}

TrainingSamples collect_training_samples(const CompressedImage& page, const GroundTruth& truth) {
  TrainingSamples out;
  for (const TruthLine& t : truth) {
    if (t.line_class == LineClassLabel::UpperCase) {
      continue;
    }
    const LineBounds bounds{t.first_row, t.last_row};
    LineFeatures f;
    try {
      f = extract_features(extract_line(page, bounds));
    } catch (const Error& e) {
      out.skipped.push_back("rows " + range(bounds) + ": " + e.what());
      continue;
    }
    if (t.line_class == LineClassLabel::AscenderAndDescenderRich) {
      out.line_height.samples.push_back({t.font_size, static_cast<double>(f.h)});
    }
    out.ascender_height.samples.push_back({t.font_size, static_cast<double>(f.a)});
    out.base_height.samples.push_back({t.font_size, static_cast<double>(f.b)});
  }
  return out;
}

ModelSet train_models(const TrainingSamples& samples) {
  ModelSet models;
  models.add(fit(samples.line_height));
  models.add(fit(samples.ascender_height));
  try {
    models.add(fit(samples.base_height));
  } catch (const FitError&) {
    // Base-height models are optional.
  }
  return models;
}

std::string format_report_tsv(const DocumentReport& report) {
  std::ostringstream out;
  out << "# rlfont v1\n";
  out << "# line\trows\th\tl\tr\tR\tmhd\tclass\tmodel\traw_size\tsize\tflags\terror\n";
  for (std::size_t i = 0; i < report.lines.size(); ++i) {
    const LineReport& l = report.lines[i];
    std::string flags;
    if (l.uppercase_unsupported) {
      flags += "uppercase_unsupported";
    }
    if (l.short_line_low_confidence) {
      flags += std::string(flags.empty() ? "" : ",") + "short_line_low_confidence";
    }
    out << i + 1 << '\t' << range(l.bounds) << '\t' << l.height << '\t' << l.compressed_length
        << '\t' << l.text_extent << '\t' << fixed(l.length_ratio, 4) << '\t'
        << (l.line_class ? fixed(l.line_class->mhd, 3) : "-") << '\t'
        << (l.line_class ? to_string(l.line_class->label) : "-") << '\t'
        << (l.estimate ? to_string(l.estimate->model_used) : "-") << '\t'
        << (l.estimate ? fixed(l.estimate->raw_size, 3) : "-") << '\t'
        << (l.estimate ? std::to_string(l.estimate->snapped_size) : "-") << '\t'
        << (flags.empty() ? "-" : flags) << '\t' << (l.error.empty() ? "-" : l.error) << '\n';
  }
  if (report.discarded > 0) {
    out << "# discarded " << report.discarded << " inked row runs below the minimum height\n";
  }
  return out.str();
}

std::string format_report_regions(const DocumentReport& report) {
  std::ostringstream out;
  out << "# rlfont v1\n";
  out << "text_region\tfont_size\n";
  for (const LineReport& l : report.lines) {
    out << "rows " << range(l.bounds) << '\t';
    if (l.estimate) {
      out << l.estimate->snapped_size;
      if (l.uppercase_unsupported) {
        out << " (upper case, unsupported)";
      }
    } else {
      out << "?";
    }
    out << '\n';
  }
  return out.str();
}

std::string format_score(const ScoreTable& table) {
  std::ostringstream out;
  out << "# rlfont v1 accuracy\n";
  out << "font_size\tlines\tcorrect\taccuracy_pct\n";
  for (const SizeScore& s : table.per_size) {
    out << s.font_size << '\t' << s.lines << '\t' << s.correct << '\t' << fixed(s.accuracy(), 2)
        << '\n';
  }
  out << "overall\t" << table.lines << '\t' << table.correct << '\t' << fixed(table.overall(), 2)
      << '\n';
  if (table.excluded_upper_case > 0) {
    out << "# excluded upper_case lines: " << table.excluded_upper_case << '\n';
  }
  return out.str();
}

}  // namespace rlfont
