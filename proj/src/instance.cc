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

#include "divopt/instance.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "divopt/errors.h"

namespace divopt {

std::string_view DiversityKindName(DiversityKind kind) {
  switch (kind) {
    case DiversityKind::kSum:
      return "sum";
    case DiversityKind::kMin:
      return "min";
    case DiversityKind::kMst:
      return "mst";
  }
  return "?";
}

DiversityKind ParseDiversityKind(std::string_view name) {
  if (name == "sum") return DiversityKind::kSum;
  if (name == "min") return DiversityKind::kMin;
  if (name == "mst") return DiversityKind::kMst;
  throw DataError("unknown diversity kind '" + std::string(name) + "'");
}

Instance::Instance(std::shared_ptr<const QualityOracle> quality,
                   std::shared_ptr<const DistanceMatrix> distance,
                   double lambda, ConstraintSpec constraint,
                   DiversityKind diversity, std::vector<std::string> names)
    : quality_(std::move(quality)),
      distance_(std::move(distance)),
      lambda_(lambda),
      constraint_(std::move(constraint)),
      diversity_(diversity),
      names_(std::move(names)) {
  if (quality_ == nullptr || distance_ == nullptr) {
    throw DataError("instance: missing quality or distance");
  }
  const int n = distance_->size();
  if (quality_->size() != n) {
    throw DataError("instance: quality has " + std::to_string(quality_->size()) +
                    " items but distance matrix has " + std::to_string(n));
  }
  if (!std::isfinite(lambda_) || lambda_ < 0) {
    throw DataError("instance: lambda must be finite and nonnegative");
  }
  if (!names_.empty() && static_cast<int>(names_.size()) != n) {
    throw DataError("instance: names length differs from n");
  }
  if (const auto* u = std::get_if<UniformConstraint>(&constraint_)) {
    if (u->k < 0 || u->k > n) {
      throw DataError("instance: cardinality k=" + std::to_string(u->k) +
                      " outside [0, n]");
    }
  } else {
    const auto& p = std::get<PartitionConstraint>(constraint_);
    if (p.universe_size() != n) {
      throw DataError("instance: partition covers " +
                      std::to_string(p.universe_size()) + " items, n=" +
                      std::to_string(n));
    }
  }
  if (diversity_ != DiversityKind::kSum) {
    const auto* u = std::get_if<UniformConstraint>(&constraint_);
    if (u == nullptr || u->mode != CardinalityMode::kExact) {
      throw DataError(std::string(DiversityKindName(diversity_)) +
                      "-diversity requires an exact cardinality constraint");
    }
    if (u->k < 2) {
      throw DataError(std::string(DiversityKindName(diversity_)) +
                      "-diversity requires k >= 2");
    }
  }
}

int Instance::k() const {
  if (const auto* u = std::get_if<UniformConstraint>(&constraint_)) return u->k;
  return Rank(constraint_);
}

Instance Instance::WithQuality(
    std::shared_ptr<const QualityOracle> quality) const {
  return Instance(std::move(quality), distance_, lambda_, constraint_,
                  diversity_, names_);
}

Instance Instance::WithDistance(
    std::shared_ptr<const DistanceMatrix> distance) const {
  return Instance(quality_, std::move(distance), lambda_, constraint_,
                  diversity_, names_);
}

Instance Instance::WithLambda(double lambda) const {
  return Instance(quality_, distance_, lambda, constraint_, diversity_, names_);
}

Instance Instance::WithConstraint(ConstraintSpec constraint) const {
  return Instance(quality_, distance_, lambda_, std::move(constraint),
                  diversity_, names_);
}

namespace {

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DataError(std::string("instance file: missing field '") + key + "'");
  }
  return obj.at(key);
}

double AsReal(const Json& v, const char* what) {
  if (!v.is_number()) {
    throw DataError(std::string("instance file: ") + what + " must be a number");
  }
  return v.get<double>();
}

int AsInt(const Json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw DataError(std::string("instance file: ") + what +
                    " must be an integer");
  }
  return v.get<int>();
}

std::vector<double> RealArray(const Json& v, const char* what) {
  if (!v.is_array()) {
    throw DataError(std::string("instance file: ") + what + " must be an array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& e : v) out.push_back(AsReal(e, what));
  return out;
}

std::shared_ptr<const QualityOracle> QualityFromJson(const Json& q, int n) {
  const std::string kind = Field(q, "kind").get<std::string>();
  if (kind == "modular") {
    std::vector<double> weights = RealArray(Field(q, "weights"), "weights");
    if (static_cast<int>(weights.size()) != n) {
      throw DataError("instance file: " + std::to_string(weights.size()) +
                      " weights for n=" + std::to_string(n));
    }
    return std::make_shared<ModularQuality>(std::move(weights));
  }
  if (kind == "top_p_mi") {
    const int p = AsInt(Field(q, "p"), "p");
    const Json& mi = Field(q, "mi");
    if (!mi.is_array()) throw DataError("instance file: mi must be an array");
    std::vector<std::vector<double>> rows;
    if (!mi.empty() && mi[0].is_array()) {
      for (const Json& row : mi) rows.push_back(RealArray(row, "mi"));
    } else {
      std::vector<double> flat = RealArray(mi, "mi");
      if (n == 0 || flat.size() % n != 0) {
        throw DataError("instance file: flat mi length not a multiple of n");
      }
      const size_t labels = flat.size() / n;
      for (int v = 0; v < n; ++v) {
        rows.emplace_back(flat.begin() + v * labels,
                          flat.begin() + (v + 1) * labels);
      }
    }
    if (static_cast<int>(rows.size()) != n) {
      throw DataError("instance file: mi has " + std::to_string(rows.size()) +
                      " rows for n=" + std::to_string(n));
    }
    return std::make_shared<TopPMIQuality>(std::move(rows), p);
  }
  throw DataError("instance file: unknown quality kind '" + kind + "'");
}

ConstraintSpec ConstraintFromJson(const Json& c, int n,
                                  const std::vector<std::string>& names) {
  const std::string kind = Field(c, "kind").get<std::string>();
  if (kind == "cardinality") {
    UniformConstraint u;
    u.k = AsInt(Field(c, "k"), "k");
    const std::string mode =
        c.contains("mode") ? c.at("mode").get<std::string>() : "at_most";
    if (mode == "at_most") {
      u.mode = CardinalityMode::kAtMost;
    } else if (mode == "exact") {
      u.mode = CardinalityMode::kExact;
    } else {
      throw DataError("instance file: unknown cardinality mode '" + mode + "'");
    }
    return u;
  }
  if (kind == "partition") {
    std::map<std::string, ItemId> by_name;
    for (size_t i = 0; i < names.size(); ++i) {
      by_name[names[i]] = static_cast<ItemId>(i);
    }
    std::vector<std::vector<ItemId>> parts;
    for (const Json& part : Field(c, "parts")) {
      std::vector<ItemId> ids;
      for (const Json& item : part) {
        if (item.is_string()) {
          auto it = by_name.find(item.get<std::string>());
          if (it == by_name.end()) {
            throw DataError("instance file: unknown item name '" +
                            item.get<std::string>() + "'");
          }
          ids.push_back(it->second);
        } else {
          ids.push_back(AsInt(item, "part item"));
        }
      }
      parts.push_back(std::move(ids));
    }
    std::vector<int> caps;
    for (const Json& cap : Field(c, "caps")) caps.push_back(AsInt(cap, "cap"));
    return PartitionConstraint(n, std::move(parts), std::move(caps));
  }
  throw DataError("instance file: unknown constraint kind '" + kind + "'");
}

Json ConstraintToJson(const ConstraintSpec& c) {
  if (const auto* u = std::get_if<UniformConstraint>(&c)) {
    return Json{{"kind", "cardinality"},
                {"k", u->k},
                {"mode", u->mode == CardinalityMode::kExact ? "exact"
                                                            : "at_most"}};
  }
  const auto& p = std::get<PartitionConstraint>(c);
  return Json{{"kind", "partition"}, {"parts", p.parts()}, {"caps", p.caps()}};
}

}  // namespace

Instance InstanceFromJson(const Json& doc) {
  try {
    const int n = AsInt(Field(doc, "n"), "n");
    if (n < 0) throw DataError("instance file: n must be nonnegative");
    const double lambda = AsReal(Field(doc, "lambda"), "lambda");
    const DiversityKind diversity =
        ParseDiversityKind(Field(doc, "diversity").get<std::string>());
    std::vector<std::string> names;
    if (doc.contains("names")) {
      names = doc.at("names").get<std::vector<std::string>>();
    }
    auto quality = QualityFromJson(Field(doc, "quality"), n);
    const Json& dist = Field(doc, "distance");
    if (Field(dist, "kind").get<std::string>() != "dense") {
      throw DataError("instance file: only dense distances are supported");
    }
    std::vector<double> values = RealArray(Field(dist, "values"), "values");
    if (values.size() != static_cast<size_t>(n) * n) {
      throw DataError("instance file: distance block has " +
                      std::to_string(values.size()) + " values, expected " +
                      std::to_string(static_cast<size_t>(n) * n));
    }
    auto distance = std::make_shared<DistanceMatrix>(n, std::move(values));
    ConstraintSpec constraint =
        ConstraintFromJson(Field(doc, "constraint"), n, names);
    return Instance(std::move(quality), std::move(distance), lambda,
                    std::move(constraint), diversity, std::move(names));
  } catch (const Json::exception& e) {
    throw DataError(std::string("instance file: ") + e.what());
  }
}

Json InstanceToJson(const Instance& instance) {
  Json doc;
  doc["n"] = instance.n();
  doc["lambda"] = instance.lambda();
  doc["diversity"] = std::string(DiversityKindName(instance.diversity()));
  doc["quality"] = instance.quality().ToJson();
  doc["distance"] = Json{
      {"kind", "dense"},
      {"values", std::vector<double>(instance.distance().values().begin(),
                                     instance.distance().values().end())}};
  doc["constraint"] = ConstraintToJson(instance.constraint());
  if (!instance.names().empty()) doc["names"] = instance.names();
  return doc;
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open instance file " + path.string());
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw DataError("instance file " + path.string() + ": " + e.what());
  }
  return InstanceFromJson(doc);
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write instance file " + path.string());
  out << InstanceToJson(instance).dump() << "\n";
}

bool SameInstance(const Instance& a, const Instance& b) {
  return InstanceToJson(a) == InstanceToJson(b);
}

}  // namespace divopt
