#pragma once

#include "icurve/field/types.hpp"

namespace icurve {

//! Noisy observations V_i of a vector field at scattered points X_i of a box.
//!
//! Points and values are stored column-wise (d x n). The constructor
//! validates every invariant and throws std::invalid_argument otherwise.
class ObservationSet
{
public:
  ObservationSet(Matrix points, Matrix values, Box domain);

  int dim() const { return static_cast<int>(points_.rows()); }
  Eigen::Index size() const { return points_.cols(); }

  const Matrix& points() const { return points_; }
  const Matrix& values() const { return values_; }
  const Box& domain() const { return domain_; }

  //! Observations per unit volume; the estimators treat the design as
  //! uniform on the domain, so this is the sample size that enters every
  //! asymptotic normalization.
  double effective_size() const
  {
    return static_cast<double>(size()) / domain_.volume();
  }

  //! Same design with the observed values replaced.
  ObservationSet with_values(Matrix values) const;

  bool operator==(const ObservationSet& other) const;

private:
  Matrix points_;
  Matrix values_;
  Box domain_;
};

}  // namespace icurve
