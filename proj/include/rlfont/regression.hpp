#pragma once

#include "rlfont/classify.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rlfont {

enum class Feature {
  LineHeight,
  AscenderHeight,
  BaseHeight,
};

std::string_view to_string(Feature feature) noexcept;
std::optional<Feature> parse_feature(std::string_view name) noexcept;

template <typename Scalar>
struct LineFit {
  Scalar slope;
  Scalar intercept;
  Scalar residual_norm;  ///< Euclidean norm of y - (slope * x + intercept)
};

/// Ordinary least squares y ~ slope * x + intercept. The caller guarantees
/// at least two distinct x values.
template <typename DerivedX, typename DerivedY>
LineFit<typename DerivedX::Scalar> fit_line(const Eigen::MatrixBase<DerivedX>& x,
                                            const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Matrix design(x.size(), 2);
  design.col(0) = x;
  design.col(1).setOnes();
  const Vector coefficients = design.colPivHouseholderQr().solve(y.template cast<Scalar>());
  const Scalar residual = (design * coefficients - y.template cast<Scalar>()).norm();
  return {coefficients(0), coefficients(1), residual};
}

struct Sample {
  int font_size = 0;
  double value = 0.0;  ///< pixels
};

struct TrainingSet {
  Feature feature = Feature::LineHeight;
  std::vector<Sample> samples;
};

/// One sample per standard size at the midpoint of the measured range.
TrainingSet midpoint_training_set(Feature feature);

/// y = slope * font_size + intercept, y in pixels.
struct RegressionModel {
  Feature feature = Feature::LineHeight;
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;
  std::size_t n_samples = 0;

  double height_at(double font_size) const noexcept { return slope * font_size + intercept; }
  double size_for(double height) const noexcept { return (height - intercept) / slope; }

  friend bool operator==(const RegressionModel&, const RegressionModel&) = default;
};

/// Throws FitError with fewer than two distinct sizes, a non-positive
/// feature value or a non-positive fitted slope.
RegressionModel fit(const TrainingSet& training);

using SizeSet = std::vector<int>;

/// 8, 10, ..., 20.
SizeSet standard_sizes();

/// Nearest candidate; an exact tie goes to the smaller one. `candidates`
/// must be nonempty.
int snap(double raw_size, const SizeSet& candidates);

struct FontSizeEstimate {
  double raw_size = 0.0;
  int snapped_size = 0;
  Feature model_used = Feature::LineHeight;
  std::optional<LineClass> line_class;
};

FontSizeEstimate predict_size(const RegressionModel& model, double feature_value,
                              const SizeSet& candidates);

/// At most one model per feature.
class ModelSet {
 public:
  /// Throws FitError on a duplicate feature.
  void add(const RegressionModel& model);
  const RegressionModel* find(Feature feature) const noexcept;
  /// Throws Error naming the missing feature.
  const RegressionModel& at(Feature feature) const;
  const std::vector<RegressionModel>& models() const noexcept { return models_; }
  bool empty() const noexcept { return models_.empty(); }

 private:
  std::vector<RegressionModel> models_;
};

/// `feature=<name> p=<decimal> q=<decimal> resid=<decimal> n=<int>`, one
/// model per line, '#' comments allowed. Decimals are written with 17
/// significant digits so they reload exactly.
std::string format_models(const ModelSet& models);
ModelSet parse_models(std::string_view text);
void save_models(const ModelSet& models, const std::filesystem::path& path);
ModelSet load_models(const std::filesystem::path& path);

}  // namespace rlfont
