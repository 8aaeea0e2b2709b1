#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pclab {

inline constexpr const char* kVersion = "0.1.0";

// 17 significant digits: doubles round-trip, so reruns are byte identical.
std::string fmt17(double v);

class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<double>& values, const std::vector<std::string>& tail = {});
  const std::string& str() const { return body_; }
  void write(const std::string& path) const;

private:
  std::string body_;
  std::size_t columns_;
};

// Report preamble: version, seed, tolerances. No timestamps, reruns compare equal.
nlohmann::json meta_block(std::uint64_t seed, nlohmann::json tolerances);

}  // namespace pclab
