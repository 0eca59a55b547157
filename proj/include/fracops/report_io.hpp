#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracops/bounds.hpp"
#include "fracops/grid.hpp"
#include "fracops/norm_est.hpp"

namespace fracops {

// Numbers are rendered with %.17g so every double round-trips exactly;
// infinities render as "inf" (quoted in JSON, bare in CSV).
std::string format_number(double v);

// Minimal insertion-ordered JSON object writer; emits a single line.
class JsonObject {
 public:
  JsonObject& number(const std::string& key, double v);
  JsonObject& integer(const std::string& key, long long v);
  JsonObject& boolean(const std::string& key, bool v);
  JsonObject& text(const std::string& key, const std::string& v);
  JsonObject& null(const std::string& key);
  JsonObject& maybe_number(const std::string& key, const std::optional<double>& v);
  JsonObject& number_array(const std::string& key, const Vector& v);
  JsonObject& number_matrix(const std::string& key, const Matrix& v);
  // Pre-encoded JSON token (for nested arrays of objects).
  JsonObject& token(const std::string& key, std::string raw_json);
  std::string str() const;

 private:
  JsonObject& raw(const std::string& key, std::string token);
  std::vector<std::pair<std::string, std::string>> fields_;
};

// CSV with '\n' line endings, '.' decimal separator, no locale dependence.
std::string table_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

std::string to_json(const NormBoundReport& report);
std::string to_csv(const NormBoundReport& report);

std::string to_json(const NormEstimate& estimate);
// Maximizer as CSV columns t,v over the grid the estimate was computed on.
std::string maximizer_csv(const NormEstimate& estimate, const UniformGrid& grid);

std::string to_json(const SampledFunction& f);
std::string to_csv(const SampledFunction& f);

}  // namespace fracops
