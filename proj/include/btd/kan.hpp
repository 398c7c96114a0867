#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "btd/cell_model.hpp"
#include "btd/errors.hpp"

namespace btd {

// Uniform-knot B-spline basis of order (degree) kappa over G intervals on
// [lo, hi], extended by kappa knots on each side; G + kappa basis functions.
// x outside [lo, hi] is clamped to the boundary before evaluation.
Eigen::VectorXd bspline_basis(double x, double lo, double hi, int g, int kappa);
Eigen::VectorXd bspline_basis_deriv(double x, double lo, double hi, int g, int kappa);

double silu(double x);

struct SplineEdge {
    Eigen::VectorXd coeffs; // length G + kappa
    double w_base = 1.0;
    double w_spline = 1.0;
    double grid_lo = -1.0;
    double grid_hi = 1.0;
};

double edge_activation(double x, const SplineEdge& edge, int g, int kappa);

struct KanLayer {
    int width_in = 0;
    int width_out = 0;
    std::vector<SplineEdge> edges; // row-major: edges[out * width_in + in]

    SplineEdge& edge(int out, int in) { return edges[out * width_in + in]; }
    const SplineEdge& edge(int out, int in) const { return edges[out * width_in + in]; }
};

struct Affine {
    double shift = 0.0;
    double scale = 1.0;
};

struct KanNetwork {
    std::vector<KanLayer> layers;
    std::vector<Affine> feature_norm; // one per input feature
    Affine target_norm;
    int grid_g = 5;
    int order_kappa = 3;

    int input_width() const { return layers.empty() ? 0 : layers.front().width_in; }
    int num_edges() const;
};

// Builds the layer structure for the given widths (e.g. {4, 3, 1}) with
// zeroed spline coefficients and unit weights. Grids default to [-1, 1].
KanNetwork make_kan(const std::vector<int>& widths, int g, int kappa);

// Fits feature and target normalization from the data, freezes per-edge grid
// ranges (data min/max plus 10% margin, hidden ranges from an initial forward
// pass), and draws small uniform spline coefficients from the seed.
void init_for_data(KanNetwork& net, const Eigen::MatrixXd& features,
                   const Eigen::VectorXd& targets, std::uint64_t seed);

double kan_forward(const KanNetwork& net, const Eigen::VectorXd& alpha);

// Gradient container mirroring the network parameters.
struct EdgeGrad {
    Eigen::VectorXd coeffs;
    double w_base = 0.0;
    double w_spline = 0.0;
};
struct KanGrad {
    std::vector<std::vector<EdgeGrad>> layers; // [layer][out * width_in + in]
};

// Analytic gradient of mean-squared error over the batch with respect to
// every spline coefficient, w_base and w_spline.
KanGrad kan_gradient(const KanNetwork& net, const Eigen::MatrixXd& features,
                     const Eigen::VectorXd& targets);

double kan_mse(const KanNetwork& net, const Eigen::MatrixXd& features,
               const Eigen::VectorXd& targets);

struct TrainConfig {
    double learning_rate = 0.5;
    double momentum = 0.0; // heavy-ball coefficient; velocity resets on rewind
    int epochs = 2000;
    std::uint64_t seed = 0;
    double early_stop_tol = 0.0; // stop when loss improvement per epoch drops below
};

struct TrainResult {
    std::vector<double> loss_history;
};

// Full-batch gradient descent on an initialized network. Deterministic.
TrainResult kan_train(KanNetwork& net, const Eigen::MatrixXd& features,
                      const Eigen::VectorXd& targets, const TrainConfig& cfg);

struct LipschitzStats {
    double max_ratio = 0.0;
    double median_ratio = 0.0;
};

// Empirical error-growth ratio under current-channel perturbations:
// |  ||e(delta)|| - ||e(0)||  | / |delta| against simulator truth, sampled
// over a nominal trajectory. delta = 0 contributes ratio 0 by convention.
LipschitzStats empirical_lipschitz(const KanNetwork& net, const CellParams& params,
                                   const SimScenario& nominal,
                                   const std::vector<double>& deltas,
                                   int num_sample_points);

void save_model(const KanNetwork& net, const std::string& path);
KanNetwork load_model(const std::string& path);

}  // namespace btd
