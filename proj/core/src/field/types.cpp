#include "icurve/field/types.hpp"

#include <cmath>
#include <stdexcept>

namespace icurve {

Box::Box(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi))
{
  if (lower.size() != upper.size() || lower.size() == 0)
    throw std::invalid_argument("Box: corner dimensions differ or are empty");
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || !(lower[i] < upper[i]))
      throw std::invalid_argument("Box: need finite lower < upper on every axis");
  }
}

Box Box::centered(int dim, double half_width)
{
  return Box(Vector::Constant(dim, -half_width), Vector::Constant(dim, half_width));
}

double Box::volume() const
{
  return (upper - lower).prod();
}

bool Box::contains(const Vector& x) const
{
  if (x.size() != lower.size())
    return false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower[i] && x[i] <= upper[i]))
      return false;
  }
  return true;
}

Box Box::inflated(double margin) const
{
  return Box(lower.array() - margin, upper.array() + margin);
}

double AsymptoticScale::rate() const
{
  return n * std::pow(h, dim - 1);
}

double AsymptoticScale::beta() const
{
  return n * std::pow(h, dim + 3);
}

}  // namespace icurve
