#pragma once

#include "icurve/field/observation_set.hpp"
#include "icurve/inference/hypothesis.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace icurve::io {

//! Parse failure carrying the 1-based line number of the offending row.
class CsvError : public std::runtime_error
{
public:
  CsvError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

//! Reads `x1,...,xd,v1,...,vd` with a header row. The domain is not part of
//! the file and must be supplied.
ObservationSet read_observations_csv(std::istream& in, const Box& domain,
                                     const std::string& source = "<stream>");
ObservationSet read_observations_csv(const std::filesystem::path& path, const Box& domain);

void write_observations_csv(std::ostream& out, const ObservationSet& obs);
void write_observations_csv(const std::filesystem::path& path, const ObservationSet& obs);

//! `x1,...,xd,p`
void write_pvalue_map_csv(std::ostream& out, const std::vector<PValuePoint>& map);

}  // namespace icurve::io
