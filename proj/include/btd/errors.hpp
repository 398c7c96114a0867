#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btd {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SimulationDiverged : std::runtime_error {
    SimulationDiverged(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step(step) {}
    std::size_t step;
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModelIoError : std::runtime_error {
    explicit ModelIoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrainingDiverged : std::runtime_error {
    TrainingDiverged(const std::string& msg, int epoch)
        : std::runtime_error(msg + " (epoch " + std::to_string(epoch) + ")"), epoch(epoch) {}
    int epoch;
};

}  // namespace btd
