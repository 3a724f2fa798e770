#include "obk_cli/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include <openssl/evp.h>

namespace obk::cli {

namespace {

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string out;
  const bool nested = std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_array(); });
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += nested ? " ; " : " ";
    out += render(v[i]);
  }
  return out;
}

}  // namespace

void Report::add(const std::string& key, Json value) { entries_[key] = std::move(value); }

void Report::add(const std::string& key, const Polynomial& p) { entries_[key] = p.coefficients(); }

void Report::add(const std::string& key, const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Int>(m.row(r).begin(), m.row(r).end()));
  entries_[key] = std::move(rows);
}

void Report::input(const std::string& name, std::string_view content) { inputs_.emplace_back(name, sha256_hex(content)); }

void Report::op(const std::string& name) {
  if (std::find(ops_.begin(), ops_.end(), name) == ops_.end()) ops_.push_back(name);
}

std::string Report::text() const {
  std::string out = "command " + command_ + "\n";
  for (const auto& [key, value] : entries_.items()) out += key + " " + render(value) + "\n";
  out += "version " OBK_VERSION "\n";
  for (const auto& [name, digest] : inputs_) out += "input " + name + " sha256:" + digest + "\n";
  out += "ops";
  for (const auto& o : ops_) out += " " + o;
  return out + "\n";
}

std::string Report::json() const {
  Json doc;
  doc["command"] = command_;
  doc["report"] = entries_;
  doc["version"] = OBK_VERSION;
  Json inputs = Json::object();
  for (const auto& [name, digest] : inputs_) inputs[name] = "sha256:" + digest;
  doc["inputs"] = std::move(inputs);
  doc["ops"] = ops_;
  return doc.dump(2) + "\n";
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace obk::cli
