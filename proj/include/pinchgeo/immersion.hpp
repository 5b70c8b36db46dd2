#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pinchgeo/expression.hpp"
#include "pinchgeo/tensor_core.hpp"

namespace pinchgeo {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// A parametrized immersion of a coordinate box into R^{n+p} (c = 0) or into
/// the round sphere of radius 1/sqrt(c) in R^{n+p+1} (c > 0).
class ImmersionSpec {
public:
    ImmersionSpec(int n, AmbientSpec ambient, std::vector<Expression> map, std::vector<Interval> box,
                  std::vector<int> grid, std::string name = {});

    /// Parses each component of `map`.
    static ImmersionSpec from_strings(int n, AmbientSpec ambient, const std::vector<std::string>& map,
                                      std::vector<Interval> box, std::vector<int> grid, std::string name = {});

    int n() const { return n_; }
    /// Codimension inside the space form.
    int p() const;
    int target_dim() const { return static_cast<int>(map_.size()); }
    bool spherical() const { return ambient_.c() > 0.0; }

    const AmbientSpec& ambient() const { return ambient_; }
    const std::vector<Expression>& map() const { return map_; }
    const std::vector<Interval>& box() const { return box_; }
    const std::vector<int>& grid() const { return grid_; }
    const std::string& name() const { return name_; }

    Eigen::VectorXd evaluate(std::span<const double> u) const;

    /// 1e-4 times the narrowest box width.
    double default_step() const;

private:
    int n_;
    AmbientSpec ambient_;
    std::vector<Expression> map_;
    std::vector<Interval> box_;
    std::vector<int> grid_;
    std::string name_;
};

/// Failure attributable to a single parameter point.
class PointError : public std::runtime_error {
public:
    PointError(const std::string& what, Eigen::VectorXd u);
    const Eigen::VectorXd& u() const { return u_; }

private:
    Eigen::VectorXd u_;
};

/// Value, first partials (m x n, one column per parameter) and second partials
/// (one symmetric n x n block per ambient coordinate) of the map at u.
struct Jet2 {
    Eigen::VectorXd value;
    Eigen::MatrixXd first;
    std::vector<Eigen::MatrixXd> second;
};

/// Central differences at `step`; with `richardson` the step-h and step-2h
/// estimates are combined as (4 D_h - D_2h) / 3. Requires u at least 2 * step
/// inside the box on every axis.
Jet2 jet2(const ImmersionSpec& spec, const Eigen::VectorXd& u, double step, bool richardson = true);

struct AdaptedFrames {
    Eigen::MatrixXd tangent;      // m x n, orthonormal columns
    Eigen::MatrixXd normal;       // m x p, orthonormal columns
    Eigen::MatrixXd tangent_map;  // n x n, tangent = first * tangent_map
    double metric_cond = 1.0;
};

/// Orthonormal tangent frame first * g^{-1/2} plus a normal frame completed by
/// pivoted modified Gram-Schmidt. On a spherical ambient the position
/// direction is removed before the normals are chosen.
AdaptedFrames adapted_frames(const Eigen::MatrixXd& first, const Eigen::VectorXd& position,
                             const AmbientSpec& ambient);

struct PointData {
    Eigen::VectorXd u;
    Eigen::MatrixXd tangent_frame;
    Eigen::MatrixXd normal_frame;
    SecondFundamentalForm h;
    double metric_cond = 1.0;
};

PointData second_fundamental_form_at(const ImmersionSpec& spec, const Eigen::VectorXd& u, double step,
                                     bool richardson = true);

struct SampleOptions {
    /// Absolute finite-difference step; non-positive selects default_step().
    double step = 0.0;
    bool richardson = true;
};

/// PointData at every interior grid node, in lexicographic order of the grid
/// index with the first axis slowest. Boundary nodes are skipped.
std::vector<PointData> sample_manifold(const ImmersionSpec& spec, const SampleOptions& options = {});

/// Number of interior nodes sample_manifold will visit.
std::size_t interior_node_count(const ImmersionSpec& spec);

}  // namespace pinchgeo
