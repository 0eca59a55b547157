#include "fracops/grid.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace fracops {

UniformGrid make_uniform_grid(Interval interval, Index n) { return UniformGrid(interval, n); }

FamilyDescriptor FamilyDescriptor::constant(Index dim) {
  FamilyDescriptor f;
  f.kind = Kind::constant;
  f.dim = dim;
  return f;
}

FamilyDescriptor FamilyDescriptor::power(double nu, Index dim) {
  if (!(nu > -1.0)) throw std::invalid_argument("power family: requires nu > -1");
  FamilyDescriptor f;
  f.kind = Kind::power;
  f.nu = nu;
  f.dim = dim;
  return f;
}

FamilyDescriptor FamilyDescriptor::monomial(int degree, Index dim) {
  if (degree < 0) throw std::invalid_argument("monomial family: requires degree >= 0");
  FamilyDescriptor f;
  f.kind = Kind::monomial;
  f.degree = degree;
  f.dim = dim;
  return f;
}

FamilyDescriptor FamilyDescriptor::sigma_p(double alpha, double p, Index dim) {
  if (!(alpha > 0.0)) throw std::invalid_argument("sigma_p family: requires alpha > 0");
  if (!(p >= 1.0)) throw std::invalid_argument("sigma_p family: requires p >= 1");
  FamilyDescriptor f;
  f.kind = Kind::sigma_p;
  f.alpha = alpha;
  f.p = p;
  f.dim = dim;
  return f;
}

FamilyDescriptor FamilyDescriptor::table(Matrix values) {
  FamilyDescriptor f;
  f.kind = Kind::table;
  f.dim = values.cols();
  f.table_values = std::move(values);
  return f;
}

namespace {

Vector family_direction(const FamilyDescriptor& family) {
  if (family.direction.size() > 0) return family.direction;
  Vector x = Vector::Zero(family.dim);
  x[0] = 1.0;
  return x;
}

}  // namespace

SampledFunction sample_family(const FamilyDescriptor& family, const UniformGrid& grid) {
  const Index n = grid.size();
  if (family.kind == FamilyDescriptor::Kind::table) {
    if (family.table_values.rows() != n) {
      throw std::invalid_argument("table family: row count must match grid");
    }
    return SampledFunction(grid, family.table_values);
  }

  const Vector x = family_direction(family);
  Vector profile(n);
  bool singular = false;
  const double t0 = grid.interval().t0;
  switch (family.kind) {
    case FamilyDescriptor::Kind::constant:
      profile.setOnes();
      break;
    case FamilyDescriptor::Kind::power: {
      if (!(family.nu > -1.0)) throw std::invalid_argument("power family: requires nu > -1");
      for (Index i = 0; i < n; ++i) profile[i] = std::pow(grid.node(i) - t0, family.nu);
      if (family.nu < 0.0) {
        profile[0] = 0.0;  // placeholder at the singular endpoint
        singular = true;
      } else if (family.nu == 0.0) {
        profile[0] = 1.0;  // 0^0 convention: family is constant
      }
      break;
    }
    case FamilyDescriptor::Kind::monomial:
      for (Index i = 0; i < n; ++i) {
        profile[i] = family.degree == 0 ? 1.0 : std::pow(grid.node(i) - t0, family.degree);
      }
      break;
    case FamilyDescriptor::Kind::sigma_p: {
      const double expo = family.alpha + 1.0 / family.p;
      for (Index i = 0; i < n; ++i) {
        const double tau = grid.node(i) - t0;
        profile[i] = tau <= 1.0 ? 0.0 : std::pow(tau, -expo);
      }
      break;
    }
    case FamilyDescriptor::Kind::table:
      break;  // handled above
  }
  Matrix values = profile * x.transpose();
  return SampledFunction(grid, std::move(values), singular);
}

double lp_norm(const SampledFunction& f, LebesgueExponent p) {
  const Index n = f.grid.size();
  Vector node_norm(n);
  for (Index i = 0; i < n; ++i) node_norm[i] = f.values.row(i).norm();
  const Index first = f.singular_at_t0 ? 1 : 0;

  if (p.is_infinite()) {
    double m = 0.0;
    for (Index i = first; i < n; ++i) m = std::max(m, node_norm[i]);
    return m;
  }

  const double pv = p.value();
  const double h = f.grid.spacing();
  double sum = 0.0;
  for (Index i = first; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
    sum += w * std::pow(node_norm[i], pv);
  }
  return std::pow(sum, 1.0 / pv);
}

SampledFunction restrict_to_subgrid(const SampledFunction& f, Index i0, Index i1) {
  if (i0 < 0 || i1 >= f.grid.size() || i1 - i0 < 1) {
    throw std::invalid_argument("restrict_to_subgrid: invalid node range");
  }
  UniformGrid sub(Interval(f.grid.node(i0), f.grid.node(i1)), i1 - i0 + 1);
  Matrix values = f.values.middleRows(i0, i1 - i0 + 1);
  const bool singular = f.singular_at_t0 && i0 == 0;
  return SampledFunction(sub, std::move(values), singular);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

SampledFunction read_table_csv(std::istream& in, const UniformGrid& grid) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("table csv: missing header");
  auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "t") {
    throw std::invalid_argument("table csv: expected header t,v1..vd");
  }
  const Index d = static_cast<Index>(header.size()) - 1;
  const Index n = grid.size();
  Matrix values(n, d);
  const double tol = 1e-9 * grid.spacing();
  Index row = 0;
  double prev_t = -std::numeric_limits<double>::infinity();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (static_cast<Index>(fields.size()) != d + 1) {
      throw std::invalid_argument("table csv: wrong column count");
    }
    if (row >= n) throw std::invalid_argument("table csv: more rows than grid nodes");
    const double t = std::stod(fields[0]);
    if (!(t > prev_t)) throw std::invalid_argument("table csv: t not strictly increasing");
    if (std::abs(t - grid.node(row)) > tol) {
      throw std::invalid_argument("table csv: t does not match the uniform grid");
    }
    prev_t = t;
    for (Index j = 0; j < d; ++j) values(row, j) = std::stod(fields[j + 1]);
    ++row;
  }
  if (row != n) throw std::invalid_argument("table csv: fewer rows than grid nodes");
  return SampledFunction(grid, std::move(values));
}

SampledFunction read_table_csv_file(const std::string& path, const UniformGrid& grid) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("table csv: cannot open " + path);
  return read_table_csv(in, grid);
}

}  // namespace fracops
