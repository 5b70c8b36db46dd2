#pragma once

#include <functional>

#include <Eigen/Dense>

namespace pinchgeo {

struct NelderMeadOptions {
    double initial_step = 0.3;
    int max_evaluations = 2000;
    /// Stop once the spread of simplex values falls below this.
    double value_tol = 1e-13;
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Minimizes f from x0 with the standard reflection/expansion/contraction/
/// shrink coefficients (1, 2, 1/2, 1/2).
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& options = {});

}  // namespace pinchgeo
