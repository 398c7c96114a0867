#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "btd/config.hpp"
#include "btd/errors.hpp"

namespace btd {

struct OcvPoint {
    double soc;
    double volts;
};

// Two-state (core/surface) lumped thermal model plus coolant node and a
// simple equivalent-circuit electrical model.
struct CellParams {
    double c1 = 62.0;    // core heat capacity, J/K
    double c2 = 4.5;     // surface heat capacity, J/K
    double cinf = 500.0; // coolant heat capacity, J/K
    double r1 = 1.9;     // core-surface thermal resistance, K/W
    double r2 = 3.2;     // surface-coolant thermal resistance, K/W
    double rb = 0.01;    // internal electrical resistance, ohm
    double cb = 8280.0;  // discharge capacity, A*s (2.3 Ah)
    double gamma = 2e-4; // entropic heat coefficient, V/K
    double dt = 0.01;    // sampling interval, s
    std::vector<OcvPoint> ocv_table;

    // Representative 2.3 Ah cylindrical LFP cell; values are plausible
    // defaults for desk-scale runs, not taken from any measured cell.
    static CellParams lfp_2p3ah();

    void validate() const;  // throws ConfigError
};

struct CellState {
    double t1 = 25.0;   // core temperature, degC
    double t2 = 25.0;   // surface temperature, degC
    double tinf = 25.0; // coolant temperature, degC
    double soc = 0.9;
    double vt = 0.0;    // terminal voltage, V
    double qdot = 0.0;  // internal heat generation, W
};

struct CellInput {
    double current = 0.0; // commanded charging current, A
    double qc = 0.0;      // coolant power, W
    double t = 0.0;       // time, s
};

enum class AnomalyKind { None, IncipientFault, BiasAttack, Custom };

struct AnomalyProfile {
    AnomalyKind kind = AnomalyKind::None;
    double start = 0.0;
    double stop = std::numeric_limits<double>::infinity();
    double fault_slope = 0.0; // W/s, ramp rate of delta1bar
    double bias = 0.0;        // A, additive delta2
    // Piecewise-linear time tables for kind == Custom.
    std::vector<std::pair<double, double>> custom_delta1;
    std::vector<std::pair<double, double>> custom_delta2;
};

struct AnomalyValue {
    double delta1bar = 0.0; // W
    double delta2 = 0.0;    // A
};

struct Measurement {
    double t2_meas = 0.0;
    double tinf_meas = 0.0;
    double t1_meas = 0.0; // lab-only channel: offline training, never online detection
    double current = 0.0;
    double qc = 0.0;
    double t = 0.0;
};

struct Sample {
    CellState state;
    Measurement meas;
    AnomalyValue anomaly;
    double current_nominal = 0.0;
    double current_effective = 0.0;
    double t = 0.0;
};

struct SimScenario {
    double duration = 100.0;
    double noise_sigma = 0.05;
    std::uint64_t seed = 1;
    AnomalyProfile profile;
    double current = 0.0; // constant nominal current, A
    double qc = 0.0;      // constant coolant power, W
    // Optional piecewise-constant current schedule (time, amps); each entry
    // holds from its time until the next. Overrides `current` when non-empty.
    std::vector<std::pair<double, double>> current_schedule;
    CellState init;
};

AnomalyValue anomaly_value(const AnomalyProfile& profile, double t);

double heat_generation(double i_eff, double t1, const CellParams& params);

double ocv(double soc, const CellParams& params);

CellState step_cell(const CellState& state, const CellInput& input,
                    const AnomalyProfile& profile, const CellParams& params);

std::vector<Sample> simulate(const SimScenario& scenario, const CellParams& params);

// CSV with the documented trajectory schema; fixed 6-decimal formatting.
void write_trajectory_csv(std::ostream& os, const std::vector<Sample>& traj);

CellParams cell_params_from_config(const Config& cfg);
AnomalyProfile anomaly_from_config(const Config& cfg);

}  // namespace btd
