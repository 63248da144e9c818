#pragma once

#include "rlfont/classify.hpp"
#include "rlfont/features.hpp"
#include "rlfont/regression.hpp"
#include "rlfont/rle.hpp"
#include "rlfont/segmentation.hpp"
#include "rlfont/synthgen.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rlfont {

struct DetectorOptions {
  SizeSet candidates = standard_sizes();
  MhdThresholds thresholds;
  std::size_t min_height = 3;
  /// Send ascender-rich lines to the ascender-height model. Turning this
  /// off predicts every line from the line-height model alone.
  bool route_ascender_rich = true;
  /// Relative deviation of R from the page median that marks a short line.
  double short_line_deviation = 0.5;
};

struct LineReport {
  LineBounds bounds;
  std::int64_t height = 0;
  std::int64_t compressed_length = 0;
  std::int64_t text_extent = 0;
  double length_ratio = 0.0;
  std::optional<LineFeatures> features;
  std::optional<DensityReport> density;
  std::optional<LineClass> line_class;
  std::optional<FontSizeEstimate> estimate;
  bool uppercase_unsupported = false;
  bool short_line_low_confidence = false;
  /// Feature-stage failure for this line; empty when none.
  std::string error;
};

struct DocumentReport {
  std::vector<LineReport> lines;
  std::size_t discarded = 0;
};

/// Segments the page, measures every line, classifies it by MHD and
/// predicts its size from the line height: ascender-rich lines through the
/// ascender-height model, everything else through the line-height model.
/// Height, extent and MHD never depend on the base-band peaks, so a line
/// whose peaks cannot be found still gets an estimate; the failure is kept
/// in LineReport::error. Throws Error when a required model is missing.
DocumentReport detect_document(const CompressedImage& page, const ModelSet& models,
                               const DetectorOptions& options = {});

struct SizeScore {
  int font_size = 0;
  std::size_t lines = 0;
  std::size_t correct = 0;

  double accuracy() const noexcept { return lines == 0 ? 0.0 : 100.0 * correct / lines; }
};

struct ScoreTable {
  std::vector<SizeScore> per_size;  ///< ascending font size
  std::size_t lines = 0;
  std::size_t correct = 0;
  /// Upper-case lines are outside the mixed-case model and are not scored.
  std::size_t excluded_upper_case = 0;

  double overall() const noexcept { return lines == 0 ? 0.0 : 100.0 * correct / lines; }
  ScoreTable& operator+=(const ScoreTable& other);
};

/// Matches report lines to ground truth by identical row range. Throws
/// AlignmentError listing every unmatched range.
ScoreTable score(const DocumentReport& report, const GroundTruth& truth);

/// Labelled feature samples gathered from pages with ground truth.
struct TrainingSamples {
  TrainingSet line_height{Feature::LineHeight, {}};
  TrainingSet ascender_height{Feature::AscenderHeight, {}};
  TrainingSet base_height{Feature::BaseHeight, {}};
  /// One message per truth line that could not be measured.
  std::vector<std::string> skipped;

  TrainingSamples& operator+=(const TrainingSamples& other);
};

/// Measures every mixed-case truth line of a page. Lines with both
/// ascenders and descenders give line-height samples; every mixed-case line
/// gives ascender- and base-height samples. Upper-case lines are ignored.
TrainingSamples collect_training_samples(const CompressedImage& page, const GroundTruth& truth);

/// Fits the line- and ascender-height models, plus the base-height model
/// when its samples allow a fit.
ModelSet train_models(const TrainingSamples& samples);

std::string format_report_tsv(const DocumentReport& report);
/// Two columns, text region and font size.
std::string format_report_regions(const DocumentReport& report);
std::string format_score(const ScoreTable& table);

}  // namespace rlfont
