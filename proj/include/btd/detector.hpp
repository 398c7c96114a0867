#pragma once

#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "btd/errors.hpp"

namespace btd {

struct DetectorConfig {
    double threshold = 0.03;
    int avg_window = 300; // samples in the residual moving average
    bool hysteresis = false;
    double hysteresis_low_frac = 0.8; // reset level as a fraction of threshold
};

struct DetectorState {
    std::deque<double> window;
    double sum = 0.0;
    bool flag = false;
};

struct DetectorStep {
    std::optional<double> avg;
    bool flag = false;
};

// One residual sample in; smoothed average and flag out. std::nullopt marks a
// warm-up sample: it never contributes to the average and never raises the flag.
DetectorStep detector_update(DetectorState& state, std::optional<double> r,
                             const DetectorConfig& cfg);

// threshold = safety_factor * max(moving average of the nominal residuals).
// The first arm_index samples still fill the average but are excluded from
// the max (detector settle period).
double calibrate_threshold(const std::vector<double>& nominal_residuals,
                           int avg_window, double safety_factor,
                           std::size_t arm_index = 0);

struct DetectionReport {
    std::string scenario;
    std::string variant;
    std::vector<bool> flags;
    std::vector<double> times; // absolute time per flag sample
    double injection_t = 0.0;
    double withdrawal_t = 0.0;
    std::optional<double> detection_time;
    std::optional<double> recovery_time;
    int false_alarms = 0;
    double threshold = 0.0;
};

// detection_time: first flag rise at/after injection; recovery_time: first
// flag fall after withdrawal; rises strictly before injection count as false
// alarms (and do not count as detections).
DetectionReport detection_metrics(const std::vector<bool>& flags,
                                  const std::vector<double>& times,
                                  double injection_t, double withdrawal_t);

struct Comparison {
    std::optional<double> delay_diff;       // b - a, seconds
    std::optional<double> recovery_diff;    // b - a, seconds
    std::optional<double> delay_improvement_pct;    // 100*(b-a)/b
    std::optional<double> recovery_improvement_pct;
    bool baseline_missed_detection = false;
    bool baseline_missed_recovery = false;
};

Comparison compare_reports(const DetectionReport& a, const DetectionReport& b);

// CSV schema: scenario,variant,injection_t,detection_t,delay,recovery_t,false_alarms,threshold
void write_report_csv(std::ostream& os, const std::vector<DetectionReport>& reports);

}  // namespace btd
