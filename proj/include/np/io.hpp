#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "np/boundary.hpp"
#include "np/distributions.hpp"

namespace np {

/// Number formatting for all CLI output: 12 significant digits, "inf" for
/// infinities. Deterministic byte-for-byte.
std::string format_number(double x);

/// Pair schema: {"labels": [...optional...], "p": [...], "q": [...]}.
CategoricalPair pair_from_json(const std::string& text);
std::string pair_to_json(const CategoricalPair& pair);

/// Vertex-list schema: {"vertices": [[a, b], ...]}.
std::vector<BoundaryVertex> vertices_from_json(const std::string& text);
std::string boundary_to_json(const PiecewiseLinearBoundary& b);

std::string read_file(const std::string& path);

/// CSV table with a header row; columns are emitted with format_number.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const CsvTable& table);
std::string csv_to_json(const CsvTable& table);

}  // namespace np
