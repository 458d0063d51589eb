// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divopt/mutual_information.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "divopt/errors.h"

namespace divopt {

namespace {

// Column recoded to 0..cardinality-1.
struct DenseColumn {
  std::vector<int> codes;
  int cardinality = 0;
};

DenseColumn Densify(const DiscreteColumn& column) {
  std::map<long long, int> index;
  DenseColumn out;
  out.codes.reserve(column.size());
  for (long long v : column) {
    auto [it, inserted] = index.emplace(v, out.cardinality);
    if (inserted) ++out.cardinality;
    out.codes.push_back(it->second);
  }
  return out;
}

double EntropyFromCounts(const std::vector<int>& counts, size_t total) {
  double h = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log(p);
  }
  return h;
}

double DenseEntropy(const DenseColumn& a) {
  std::vector<int> counts(a.cardinality, 0);
  for (int c : a.codes) ++counts[c];
  return EntropyFromCounts(counts, a.codes.size());
}

double DenseJointEntropy(const DenseColumn& a, const DenseColumn& b) {
  std::vector<int> counts(static_cast<size_t>(a.cardinality) * b.cardinality,
                          0);
  for (size_t i = 0; i < a.codes.size(); ++i) {
    ++counts[static_cast<size_t>(a.codes[i]) * b.cardinality + b.codes[i]];
  }
  return EntropyFromCounts(counts, a.codes.size());
}

void CheckLengths(const DiscreteColumn& a, const DiscreteColumn& b) {
  if (a.size() != b.size()) {
    throw DataError("column length mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
}

}  // namespace

double Entropy(const DiscreteColumn& a) { return DenseEntropy(Densify(a)); }

double JointEntropy(const DiscreteColumn& a, const DiscreteColumn& b) {
  CheckLengths(a, b);
  return DenseJointEntropy(Densify(a), Densify(b));
}

double MutualInformation(const DiscreteColumn& a, const DiscreteColumn& b) {
  CheckLengths(a, b);
  const DenseColumn da = Densify(a);
  const DenseColumn db = Densify(b);
  return std::max(
      0.0, DenseEntropy(da) + DenseEntropy(db) - DenseJointEntropy(da, db));
}

FeatureLabelStatistics NormalizedMIFromData(
    const std::vector<DiscreteColumn>& features,
    const std::vector<DiscreteColumn>& labels) {
  const size_t m = features.empty() ? 0 : features[0].size();
  if (m == 0) throw DataError("feature table has no samples");
  for (const auto& col : features) CheckLengths(features[0], col);
  for (const auto& col : labels) CheckLengths(features[0], col);

  std::vector<DenseColumn> f;
  std::vector<double> hf;
  for (const auto& col : features) {
    f.push_back(Densify(col));
    hf.push_back(DenseEntropy(f.back()));
  }
  std::vector<DenseColumn> l;
  std::vector<double> hl;
  for (const auto& col : labels) {
    l.push_back(Densify(col));
    hl.push_back(DenseEntropy(l.back()));
  }

  const size_t n = f.size();
  std::vector<std::vector<double>> mi(n, std::vector<double>(l.size(), 0.0));
  for (size_t v = 0; v < n; ++v) {
    for (size_t j = 0; j < l.size(); ++j) {
      if (hf[v] <= 0.0 || hl[j] <= 0.0) continue;
      const double joint = DenseJointEntropy(f[v], l[j]);
      const double info = std::max(0.0, hf[v] + hl[j] - joint);
      mi[v][j] = std::clamp(info / std::sqrt(hf[v] * hl[j]), 0.0, 1.0);
    }
  }

  std::vector<double> dist(n * n, 0.0);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      const double joint = DenseJointEntropy(f[a], f[b]);
      double value = 0.0;
      if (joint > 0.0) {
        const double info = std::max(0.0, hf[a] + hf[b] - joint);
        value = std::clamp(1.0 - info / joint, 0.0, 1.0);
      }
      dist[a * n + b] = value;
      dist[b * n + a] = value;
    }
  }
  return {std::move(mi),
          DistanceMatrix(static_cast<int>(n), std::move(dist))};
}

std::vector<DiscreteColumn> ReadDiscreteTable(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open table " + path.string());
  std::vector<DiscreteColumn> columns;
  std::string line;
  bool first_row = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::replace_if(
        line.begin(), line.end(),
        [](char c) { return c == ',' || c == ';' || c == '\t' || c == '\r'; },
        ' ');
    std::istringstream cells(line);
    std::vector<std::string> tokens;
    for (std::string tok; cells >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    std::vector<long long> row;
    bool numeric = true;
    for (const std::string& tok : tokens) {
      size_t used = 0;
      try {
        row.push_back(std::stoll(tok, &used));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
      if (used != tok.size()) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first_row) {
        first_row = false;
        continue;
      }
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": non-integer cell");
    }
    if (columns.empty()) columns.resize(row.size());
    first_row = false;
    if (row.size() != columns.size()) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected " + std::to_string(columns.size()) +
                      " cells");
    }
    for (size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
  }
  return columns;
}

}  // namespace divopt
