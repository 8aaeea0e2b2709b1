#include "pclab/report.hpp"

#include <cstdio>
#include <fstream>

#include "pclab/errors.hpp"

namespace pclab {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) body_ += ',';
    body_ += header[i];
  }
  body_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values, const std::vector<std::string>& tail) {
  if (values.size() + tail.size() != columns_)
    throw InputError("CsvWriter: row width does not match header");
  bool first = true;
  for (double v : values) {
    if (!first) body_ += ',';
    body_ += fmt17(v);
    first = false;
  }
  for (const std::string& s : tail) {
    if (!first) body_ += ',';
    body_ += s;
    first = false;
  }
  body_ += '\n';
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("CsvWriter: cannot open " + path);
  out << body_;
}

nlohmann::json meta_block(std::uint64_t seed, nlohmann::json tolerances) {
  nlohmann::json meta;
  meta["version"] = kVersion;
  meta["seed"] = seed;
  meta["tolerances"] = std::move(tolerances);
  return meta;
}

}  // namespace pclab
