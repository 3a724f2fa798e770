#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "obk/integer_matrix.hpp"
#include "obk/polynomial.hpp"

namespace obk::cli {

using Json = nlohmann::ordered_json;

/// Ordered key/value report with a provenance footer (version, input
/// digests, operations run). Renders as "key value" lines or JSON.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(const std::string& key, Json value);
  void add(const std::string& key, const Polynomial& p);
  void add(const std::string& key, const IntMatrix& m);
  void input(const std::string& name, std::string_view content);
  void op(const std::string& name);

  const Json& get(const std::string& key) const { return entries_.at(key); }
  bool has(const std::string& key) const { return entries_.contains(key); }

  std::string text() const;
  std::string json() const;

 private:
  std::string command_;
  Json entries_ = Json::object();
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::string> ops_;
};

std::string sha256_hex(std::string_view data);

}  // namespace obk::cli
