#include "np/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace np {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

// JSON output goes through the same 12-significant-digit policy as CSV.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("IoError", "malformed JSON input");
  return j;
}

}  // namespace

CategoricalPair pair_from_json(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  if (!j.contains("p") || !j.contains("q")) fail("IoError", "pair JSON needs \"p\" and \"q\"");
  std::vector<double> p = j.at("p").get<std::vector<double>>();
  std::vector<double> q = j.at("q").get<std::vector<double>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return make_categorical_pair(std::move(p), std::move(q), std::move(labels));
}

std::string pair_to_json(const CategoricalPair& pair) {
  nlohmann::json j;
  if (!pair.labels.empty()) j["labels"] = pair.labels;
  nlohmann::json p = nlohmann::json::array(), q = nlohmann::json::array();
  for (double x : pair.p) p.push_back(round12(x));
  for (double x : pair.q) q.push_back(round12(x));
  j["p"] = std::move(p);
  j["q"] = std::move(q);
  return j.dump();
}

std::vector<BoundaryVertex> vertices_from_json(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  if (!j.contains("vertices")) fail("IoError", "vertex JSON needs \"vertices\"");
  std::vector<BoundaryVertex> out;
  for (const auto& row : j.at("vertices")) {
    if (!row.is_array() || row.size() != 2) fail("IoError", "each vertex must be [alpha, beta]");
    out.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  return out;
}

std::string boundary_to_json(const PiecewiseLinearBoundary& b) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : b.vertices) rows.push_back({round12(v.alpha), round12(v.beta)});
  nlohmann::json j;
  j["vertices"] = rows;
  return j.dump();
}

void write_csv(std::ostream& os, const CsvTable& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) os << ',';
    os << table.header[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << format_number(row[c]);
    }
    os << '\n';
  }
}

std::string csv_to_json(const CsvTable& table) {
  nlohmann::json j;
  j["columns"] = table.header;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double x : row) {
      if (std::isinf(x))
        r.push_back(x > 0 ? "inf" : "-inf");
      else
        r.push_back(round12(x));
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  return j.dump();
}

}  // namespace np
