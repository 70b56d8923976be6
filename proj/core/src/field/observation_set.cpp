#include "icurve/field/observation_set.hpp"

#include <stdexcept>
#include <string>

namespace icurve {

ObservationSet::ObservationSet(Matrix points, Matrix values, Box domain)
    : points_(std::move(points)), values_(std::move(values)), domain_(std::move(domain))
{
  if (points_.rows() < 2)
    throw std::invalid_argument("ObservationSet: dimension must be at least 2");
  if (points_.cols() < 1)
    throw std::invalid_argument("ObservationSet: need at least one observation");
  if (points_.rows() != values_.rows() || points_.cols() != values_.cols())
    throw std::invalid_argument("ObservationSet: points and values have different shapes");
  if (domain_.dim() != points_.rows())
    throw std::invalid_argument("ObservationSet: domain dimension does not match the data");
  if (!points_.allFinite() || !values_.allFinite())
    throw std::invalid_argument("ObservationSet: non-finite entries");
  for (Eigen::Index i = 0; i < points_.cols(); ++i) {
    if (!domain_.contains(points_.col(i)))
      throw std::invalid_argument("ObservationSet: point " + std::to_string(i) +
                                  " lies outside the domain");
  }
}

ObservationSet ObservationSet::with_values(Matrix values) const
{
  return ObservationSet(points_, std::move(values), domain_);
}

bool ObservationSet::operator==(const ObservationSet& other) const
{
  return points_ == other.points_ && values_ == other.values_ &&
         domain_.lower == other.domain_.lower && domain_.upper == other.domain_.upper;
}

}  // namespace icurve
