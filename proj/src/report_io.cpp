#include "fracops/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fracops {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

JsonObject& JsonObject::raw(const std::string& key, std::string token) {
  fields_.emplace_back(key, std::move(token));
  return *this;
}

JsonObject& JsonObject::number(const std::string& key, double v) {
  // JSON has no infinity literal; fall back to the quoted token.
  if (std::isinf(v)) return raw(key, "\"" + format_number(v) + "\"");
  return raw(key, format_number(v));
}

JsonObject& JsonObject::integer(const std::string& key, long long v) {
  return raw(key, std::to_string(v));
}

JsonObject& JsonObject::boolean(const std::string& key, bool v) {
  return raw(key, v ? "true" : "false");
}

JsonObject& JsonObject::text(const std::string& key, const std::string& v) {
  return raw(key, "\"" + v + "\"");
}

JsonObject& JsonObject::null(const std::string& key) { return raw(key, "null"); }

JsonObject& JsonObject::token(const std::string& key, std::string raw_json) {
  return raw(key, std::move(raw_json));
}

JsonObject& JsonObject::maybe_number(const std::string& key, const std::optional<double>& v) {
  return v ? number(key, *v) : null(key);
}

JsonObject& JsonObject::number_array(const std::string& key, const Vector& v) {
  std::string token = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) token += ",";
    token += format_number(v[i]);
  }
  token += "]";
  return raw(key, std::move(token));
}

JsonObject& JsonObject::number_matrix(const std::string& key, const Matrix& v) {
  std::string token = "[";
  for (Index i = 0; i < v.rows(); ++i) {
    if (i) token += ",";
    token += "[";
    for (Index j = 0; j < v.cols(); ++j) {
      if (j) token += ",";
      token += format_number(v(i, j));
    }
    token += "]";
  }
  token += "]";
  return raw(key, std::move(token));
}

std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += "\"" + fields_[i].first + "\":" + fields_[i].second;
  }
  out += "}\n";
  return out;
}

std::string table_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ",";
    out += header[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_number(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const NormBoundReport& report) {
  JsonObject obj;
  obj.number("alpha", report.alpha)
      .number("p", report.p)
      .number("t0", report.interval.t0)
      .number("t1", report.interval.t1)
      .number("generic_upper", report.generic_upper)
      .maybe_number("upper_i", report.upper_i)
      .maybe_number("upper_ii", report.upper_ii)
      .number("best_upper", report.best_upper)
      .number("lower", report.lower)
      .maybe_number("p1_alpha", report.p1_alpha)
      .maybe_number("p2_alpha", report.p2_alpha)
      .boolean("strict_flag", report.strict_flag);
  return obj.str();
}

std::string to_csv(const NormBoundReport& report) {
  const double nan = std::nan("");
  std::vector<double> row{report.alpha,
                          report.p,
                          report.interval.t0,
                          report.interval.t1,
                          report.generic_upper,
                          report.upper_i.value_or(nan),
                          report.upper_ii.value_or(nan),
                          report.best_upper,
                          report.lower,
                          report.p1_alpha.value_or(nan),
                          report.p2_alpha.value_or(nan),
                          report.strict_flag ? 1.0 : 0.0};
  return table_csv({"alpha", "p", "t0", "t1", "generic_upper", "upper_i", "upper_ii",
                    "best_upper", "lower", "p1_alpha", "p2_alpha", "strict_flag"},
                   {row});
}

std::string to_json(const NormEstimate& estimate) {
  JsonObject obj;
  obj.number("value", estimate.value)
      .number("p", estimate.p)
      .text("method", to_string(estimate.method))
      .integer("n", estimate.n)
      .integer("iterations", estimate.iterations)
      .number("residual", estimate.residual)
      .number_array("maximizer", estimate.maximizer);
  return obj.str();
}

std::string maximizer_csv(const NormEstimate& estimate, const UniformGrid& grid) {
  std::vector<std::vector<double>> rows;
  rows.reserve(estimate.maximizer.size());
  for (Index i = 0; i < estimate.maximizer.size(); ++i) {
    rows.push_back({grid.node(i), estimate.maximizer[i]});
  }
  return table_csv({"t", "v"}, rows);
}

std::string to_json(const SampledFunction& f) {
  JsonObject obj;
  obj.number("t0", f.grid.interval().t0)
      .number("t1", f.grid.interval().t1)
      .integer("n", f.grid.size())
      .integer("d", f.dim())
      .boolean("singular_at_t0", f.singular_at_t0)
      .number_array("t", f.grid.nodes())
      .number_matrix("values", f.values);
  return obj.str();
}

std::string to_csv(const SampledFunction& f) {
  std::vector<std::string> header{"t"};
  for (Index j = 0; j < f.dim(); ++j) header.push_back("v" + std::to_string(j + 1));
  std::vector<std::vector<double>> rows;
  rows.reserve(f.grid.size());
  for (Index i = 0; i < f.grid.size(); ++i) {
    std::vector<double> row{f.grid.node(i)};
    for (Index j = 0; j < f.dim(); ++j) row.push_back(f.values(i, j));
    rows.push_back(std::move(row));
  }
  return table_csv(header, rows);
}

}  // namespace fracops
