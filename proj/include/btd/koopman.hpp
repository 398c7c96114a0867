#pragma once

#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "btd/errors.hpp"

namespace btd {

struct EmbedConfig {
    int wl = 300;        // learning-window length, samples
    int wp = 50;         // prediction-window length, samples
    int d = 210;         // delay-embedding depth, samples
    double rcond = 1e-8; // relative singular-value cutoff
    int rank = -1;       // optional hard truncation rank (-1 = none)
    bool embed_inputs = false; // include u history in the lifted state

    void validate() const; // throws ConfigError
};

// Columns of a stream matrix are samples; rows are channels.
using StreamMatrix = Eigen::MatrixXd;

struct WindowBatch {
    Eigen::MatrixXd xb; // Hankel matrix, first wl-1 samples
    Eigen::MatrixXd xs; // shifted Hankel matrix, last wl-1 samples
    Eigen::MatrixXd ub;
    Eigen::MatrixXd yb;
};

struct KoopmanModel {
    Eigen::MatrixXd a_mat;
    Eigen::MatrixXd b_mat;
    Eigen::MatrixXd c_mat;
    EmbedConfig config;
    double fit_residual_dyn = 0.0; // ||Xs - [A B][Xb; Ub]||_F
    double fit_residual_out = 0.0; // ||Yb - C Xb||_F
};

// Lifted state from the last d samples (columns oldest..newest) of y, and of
// u as well when embed_inputs is set.
Eigen::VectorXd embed(const StreamMatrix& y_hist, const StreamMatrix& u_hist,
                      const EmbedConfig& cfg);

// ys/us hold exactly wl consecutive samples.
WindowBatch build_matrices(const StreamMatrix& ys, const StreamMatrix& us,
                           const EmbedConfig& cfg);

// SVD pseudoinverse with relative cutoff and optional rank truncation.
Eigen::MatrixXd pinv(const Eigen::MatrixXd& m, double rcond, int rank = -1);

KoopmanModel fit(const WindowBatch& batch, const EmbedConfig& cfg);

// Open-loop roll with known inputs; prediction k corresponds to the k-th
// post-window sample (the state is advanced before each emission).
Eigen::MatrixXd predict(const KoopmanModel& model, Eigen::VectorXd z0,
                        const StreamMatrix& u_seq);

double residual(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);

struct SlidingResult {
    std::vector<double> residuals;     // aligned to absolute sample indices
    std::vector<bool> defined;         // false during warm-up / past last cycle
    std::vector<int> cycle_index;      // -1 where undefined
    std::vector<double> fit_dyn;       // per-cycle diagnostics, indexed by cycle
    std::vector<double> fit_out;
    Eigen::MatrixXd predictions;       // yhat per sample (columns), zero where undefined
};

SlidingResult run_sliding(const StreamMatrix& ys, const StreamMatrix& us,
                          const EmbedConfig& cfg);

// CSV schema: t,residual,cycle_index,warmup_flag,fit_residual_dyn,fit_residual_out
void write_residual_csv(std::ostream& os, const SlidingResult& res,
                        const std::vector<double>& times);

}  // namespace btd
