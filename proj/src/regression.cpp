#include "rlfont/regression.hpp"

#include "rlfont/docio.hpp"
#include "rlfont/error.hpp"
#include "rlfont/training_table.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace rlfont {

std::string_view to_string(Feature feature) noexcept {
  switch (feature) {
    case Feature::LineHeight:
      return "line_height";
    case Feature::AscenderHeight:
      return "ascender_height";
    case Feature::BaseHeight:
      return "base_height";
  }
  return "unknown";
}

std::optional<Feature> parse_feature(std::string_view name) noexcept {
  for (auto feature : {Feature::LineHeight, Feature::AscenderHeight, Feature::BaseHeight}) {
    if (name == to_string(feature)) {
      return feature;
    }
  }
  return std::nullopt;
}

TrainingSet midpoint_training_set(Feature feature) {
  TrainingSet set{feature, {}};
  for (const TrainingRow& row : kArialTrainingRows) {
    const FeatureRange& range = feature == Feature::LineHeight       ? row.height
                                : feature == Feature::AscenderHeight ? row.ascender
                                                                     : row.base;
    set.samples.push_back({row.font_size, range.midpoint()});
  }
  return set;
}

RegressionModel fit(const TrainingSet& training) {
  const std::string name(to_string(training.feature));
  std::set<int> sizes;
  for (const Sample& s : training.samples) {
    if (!(s.value > 0.0)) {
      throw FitError(name + ": feature values must be positive");
    }
    sizes.insert(s.font_size);
  }
  if (sizes.size() < 2) {
    throw FitError(name + ": singular fit, need at least two distinct font sizes");
  }

  const auto n = static_cast<Eigen::Index>(training.samples.size());
  Eigen::VectorXd x(n);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) = training.samples[static_cast<std::size_t>(i)].font_size;
    y(i) = training.samples[static_cast<std::size_t>(i)].value;
  }
  const LineFit<double> line = fit_line(x, y);
  if (!(line.slope > 0.0)) {
    throw FitError(name + ": fitted slope is not positive");
  }
  return {training.feature, line.slope, line.intercept, line.residual_norm,
          training.samples.size()};
}

SizeSet standard_sizes() { return {8, 10, 12, 14, 16, 18, 20}; }

int snap(double raw_size, const SizeSet& candidates) {
  if (candidates.empty()) {
    throw Error("candidate size set is empty");
  }
  int best = candidates.front();
  double best_distance = std::abs(best - raw_size);
  for (int c : candidates) {
    const double distance = std::abs(c - raw_size);
    if (distance < best_distance || (distance == best_distance && c < best)) {
      best = c;
      best_distance = distance;
    }
  }
  return best;
}

FontSizeEstimate predict_size(const RegressionModel& model, double feature_value,
                              const SizeSet& candidates) {
  if (!(model.slope > 0.0)) {
    throw InvariantError("regression model with non-positive slope");
  }
  FontSizeEstimate estimate;
  estimate.raw_size = model.size_for(feature_value);
  estimate.snapped_size = snap(estimate.raw_size, candidates);
  estimate.model_used = model.feature;
  return estimate;
}

void ModelSet::add(const RegressionModel& model) {
  if (find(model.feature) != nullptr) {
    throw FitError("duplicate model for " + std::string(to_string(model.feature)));
  }
  models_.push_back(model);
}

const RegressionModel* ModelSet::find(Feature feature) const noexcept {
  for (const RegressionModel& m : models_) {
    if (m.feature == feature) {
      return &m;
    }
  }
  return nullptr;
}

const RegressionModel& ModelSet::at(Feature feature) const {
  if (const RegressionModel* m = find(feature)) {
    return *m;
  }
  throw Error("no " + std::string(to_string(feature)) + " model loaded");
}

namespace {

std::string decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

std::string format_models(const ModelSet& models) {
  std::string out = "# rlfont v1\n";
  for (const RegressionModel& m : models.models()) {
    out += "feature=" + std::string(to_string(m.feature)) + " p=" + decimal(m.slope) +
           " q=" + decimal(m.intercept) + " resid=" + decimal(m.residual_norm) +
           " n=" + std::to_string(m.n_samples) + "\n";
  }
  return out;
}

ModelSet parse_models(std::string_view text) {
  using detail::parse_number;
  ModelSet set;
  detail::for_each_line(text, [&](std::string_view line, std::size_t n) {
    std::optional<Feature> feature;
    std::optional<double> p, q, resid;
    std::optional<std::size_t> count;
    for (const auto& [key, value] : detail::key_values(line, n)) {
      if (key == "feature") {
        feature = parse_feature(value);
        if (!feature) {
          throw ParseError(ParseError::Unit::Line, n, "unknown feature '" + value + "'");
        }
      } else if (key == "p") {
        p = parse_number<double>(value, n, "p");
      } else if (key == "q") {
        q = parse_number<double>(value, n, "q");
      } else if (key == "resid") {
        resid = parse_number<double>(value, n, "resid");
      } else if (key == "n") {
        count = parse_number<std::size_t>(value, n, "n");
      } else {
        throw ParseError(ParseError::Unit::Line, n, "unknown key '" + key + "'");
      }
    }
    if (!feature || !p || !q || !resid || !count) {
      throw ParseError(ParseError::Unit::Line, n, "feature=, p=, q=, resid= and n= are required");
    }
    if (!(*p > 0.0) || !std::isfinite(*q) || !(*resid >= 0.0)) {
      throw ParseError(ParseError::Unit::Line, n, "model needs p > 0 and resid >= 0");
    }
    if (set.find(*feature) != nullptr) {
      throw ParseError(ParseError::Unit::Line, n,
                       "duplicate feature '" + std::string(to_string(*feature)) + "'");
    }
    set.add({*feature, *p, *q, *resid, *count});
  });
  return set;
}

void save_models(const ModelSet& models, const std::filesystem::path& path) {
  write_file(path, format_models(models));
}

ModelSet load_models(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_models(text);
  } catch (const ParseError& e) {
    throw ParseError(e.unit(), e.position(), path.string() + ": " + e.detail());
  }
}

}  // namespace rlfont
