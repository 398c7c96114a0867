#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btd/cell_model.hpp"
#include "btd/config.hpp"
#include "btd/detector.hpp"
#include "btd/kan.hpp"
#include "btd/koopman.hpp"

namespace btd {

enum class VariantKind { Proposed, Baseline };

std::string variant_name(VariantKind kind);

struct ScenarioConfig {
    std::string name = "scenario";
    CellParams cell;
    SimScenario sim;
    EmbedConfig koopman;
    DetectorConfig detector;
    double threshold_proposed = 0.0; // 0 = use detector.threshold
    double threshold_baseline = 0.0;
    int downsample = 10;     // simulation samples per detector sample
    int estimate_smooth = 1; // trailing-average window on the KAN estimate
    std::string kan_model_path;
    double calib_safety = 1.5;
    double arm_time = 0.0; // settle period: no flags / calibration max before this
    std::string expect = "none"; // none | detect (exit-code contract)

    static ScenarioConfig from_config(const Config& cfg);
    // --paper-scale: 100 Hz stream (no downsampling), wl=3000, wp=500,
    // d=2100, avg window 3000. Same code path, longer runtime.
    void apply_paper_scale();
};

// One detector-rate sample of everything the variants consume.
struct DetectorStream {
    std::vector<double> t;
    std::vector<double> t2_meas, tinf_meas, current, qc;
    std::vector<double> t1_true, t2_true; // plotting/oracle only
    std::vector<double> kan_t1;           // filled when a model is supplied
};

DetectorStream downsample_stream(const std::vector<Sample>& traj, int factor);

struct VariantResult {
    VariantKind kind;
    SlidingResult sliding;
    std::vector<std::optional<double>> avg; // smoothed residuals
    DetectionReport report;
};

// Runs one variant over a shared stream. The baseline never reads the KAN
// estimate; the proposed variant requires it.
VariantResult run_variant(const DetectorStream& stream, VariantKind kind,
                          const ScenarioConfig& cfg);

struct ScenarioResult {
    DetectorStream stream;
    std::vector<Sample> trajectory;
    std::vector<VariantResult> variants;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg, const KanNetwork* net,
                            bool proposed, bool baseline);

// Training-data generation: nominal runs across a (C-rate x ambient) grid,
// features in column order (t2_meas, tinf_meas, current, qc), target t1_true.
struct TrainingGridSpec {
    std::vector<double> c_rates = {0.5, 1.0, 2.0};
    std::vector<double> ambient_offsets = {0.0, 10.0};
    double duration = 200.0;
    std::uint64_t seed = 42;
};

struct TrainingSet {
    Eigen::MatrixXd features; // n x 4
    Eigen::VectorXd targets;  // n
};

TrainingSet generate_training_data(const CellParams& params, const SimScenario& base,
                                   const TrainingGridSpec& grid, int downsample);

void write_training_csv(std::ostream& os, const TrainingSet& set);
TrainingSet read_training_csv(const std::string& path);

// Per-variant calibrated threshold from a nominal run (safety factor applied
// to the max smoothed residual).
double calibrate_variant(const ScenarioConfig& nominal_cfg, VariantKind kind,
                         const KanNetwork* net);

}  // namespace btd
