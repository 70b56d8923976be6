#pragma once

#include "icurve/inference/hypothesis.hpp"
#include "icurve/sim/studies.hpp"
#include "icurve/tracker/ellipse.hpp"
#include "icurve/tracker/trajectory.hpp"

#include <string>
#include <vector>

namespace icurve::io {

struct SvgStyle
{
  int width = 640;
  int height = 480;
  int margin = 48;
};

//! Planar trajectory with confidence ellipses drawn at every `ellipse_every`-th
//! state (0 disables them). All SVG writers produce byte-identical output for
//! identical input and throw std::invalid_argument on empty input.
std::string trajectory_svg(const Trajectory& traj, double alpha, std::size_t ellipse_every,
                           BiasCorrection mode = BiasCorrection::corrected,
                           const SvgStyle& style = {});

enum class Overlay
{
  none,
  normal,   // standard normal density
  chi2type, // chi-square density with `dof` degrees of freedom
};

std::string histogram_svg(const Histogram& hist, Overlay overlay = Overlay::none, int dof = 2,
                          const SvgStyle& style = {});

//! Empirical and theoretical power against target distance.
std::string power_curve_svg(const StudyResult& study, double alpha, const SvgStyle& style = {});

//! Heat grid of p-values on a regular planar grid, as produced by pvalue_map
//! over GridSpec::points() (row-major, x fastest).
std::string pvalue_map_svg(const std::vector<PValuePoint>& map, int steps,
                           const Trajectory* overlay = nullptr, const SvgStyle& style = {});

}  // namespace icurve::io
