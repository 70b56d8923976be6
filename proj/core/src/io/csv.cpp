#include "icurve/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace icurve::io {

CsvError::CsvError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line)
{}

namespace {

std::vector<std::string> split(const std::string& line)
{
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ','))
    fields.push_back(field);
  if (!line.empty() && line.back() == ',')
    fields.emplace_back();
  return fields;
}

std::string trim(std::string s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& source, std::size_t line)
{
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw CsvError(source, line, "not a number: '" + t + "'");
  if (!std::isfinite(value))
    throw CsvError(source, line, "non-finite value: '" + t + "'");
  return value;
}

void write_row(std::ostream& out, const Vector& a, const Vector& b)
{
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out << a[i] << ',';
  for (Eigen::Index i = 0; i < b.size(); ++i)
    out << b[i] << (i + 1 < b.size() ? "," : "\n");
}

}  // namespace

ObservationSet read_observations_csv(std::istream& in, const Box& domain, const std::string& source)
{
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line))
    throw CsvError(source, 1, "missing header");
  ++line_no;
  const std::vector<std::string> header = split(line);
  if (header.size() < 4 || header.size() % 2 != 0)
    throw CsvError(source, line_no, "header must be x1,...,xd,v1,...,vd with d >= 2");
  const std::size_t d = header.size() / 2;
  for (std::size_t j = 0; j < d; ++j) {
    if (trim(header[j]) != "x" + std::to_string(j + 1) ||
        trim(header[d + j]) != "v" + std::to_string(j + 1))
      throw CsvError(source, line_no, "header must be x1,...,xd,v1,...,vd");
  }
  if (static_cast<int>(d) != domain.dim())
    throw CsvError(source, line_no,
                   "dimension " + std::to_string(d) + " does not match the domain dimension " +
                       std::to_string(domain.dim()));

  std::vector<double> pts;
  std::vector<double> vals;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty())
      continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != 2 * d)
      throw CsvError(source, line_no,
                     "expected " + std::to_string(2 * d) + " fields, found " + std::to_string(fields.size()));
    Vector x(static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < d; ++j) {
      x[static_cast<Eigen::Index>(j)] = parse_number(fields[j], source, line_no);
      pts.push_back(x[static_cast<Eigen::Index>(j)]);
    }
    for (std::size_t j = 0; j < d; ++j)
      vals.push_back(parse_number(fields[d + j], source, line_no));
    if (!domain.contains(x))
      throw CsvError(source, line_no, "point lies outside the domain");
  }
  const auto n = static_cast<Eigen::Index>(pts.size() / d);
  if (n == 0)
    throw CsvError(source, line_no, "no observations");
  const auto dd = static_cast<Eigen::Index>(d);
  Matrix points = Eigen::Map<const Matrix>(pts.data(), dd, n);
  Matrix values = Eigen::Map<const Matrix>(vals.data(), dd, n);
  return ObservationSet(std::move(points), std::move(values), domain);
}

ObservationSet read_observations_csv(const std::filesystem::path& path, const Box& domain)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open observations file " + path.string());
  return read_observations_csv(in, domain, path.string());
}

void write_observations_csv(std::ostream& out, const ObservationSet& obs)
{
  const int d = obs.dim();
  for (int j = 0; j < d; ++j)
    out << 'x' << j + 1 << ',';
  for (int j = 0; j < d; ++j)
    out << 'v' << j + 1 << (j + 1 < d ? "," : "\n");
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < obs.size(); ++i)
    write_row(out, obs.points().col(i), obs.values().col(i));
}

void write_observations_csv(const std::filesystem::path& path, const ObservationSet& obs)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write observations file " + path.string());
  write_observations_csv(out, obs);
}

void write_pvalue_map_csv(std::ostream& out, const std::vector<PValuePoint>& map)
{
  if (map.empty())
    throw std::invalid_argument("write_pvalue_map_csv: empty map");
  const auto d = map.front().point.size();
  for (Eigen::Index j = 0; j < d; ++j)
    out << 'x' << j + 1 << ',';
  out << "p\n" << std::setprecision(17);
  for (const PValuePoint& pt : map) {
    for (Eigen::Index j = 0; j < d; ++j)
      out << pt.point[j] << ',';
    out << pt.p_value << '\n';
  }
}

}  // namespace icurve::io
