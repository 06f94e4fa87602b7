#include "sigtqft/report.hpp"

#include <algorithm>
#include <set>

namespace sigtqft::report {

int64_t SweepReport::pass_count() const {
  return std::count_if(items.begin(), items.end(),
                       [](const SweepItem& i) { return i.pass; });
}

int64_t SweepReport::fail_count() const {
  return static_cast<int64_t>(items.size()) - pass_count();
}

namespace {

nlohmann::json kv_to_json(const KV& kv) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, v] : kv) j.push_back({{"key", k}, {"value", v}});
  return j;
}

KV kv_from_json(const nlohmann::json& j) {
  KV kv;
  for (const auto& e : j) kv.emplace_back(e.at("key"), e.at("value"));
  return kv;
}

}  // namespace

nlohmann::json to_json(const SweepReport& r, bool include_timing) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["summary"] = {{"items", r.items.size()},
                  {"pass", r.pass_count()},
                  {"fail", r.fail_count()}};
  if (include_timing) j["total_ms"] = r.total_ms;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& it : r.items) {
    nlohmann::json e;
    e["inputs"] = kv_to_json(it.inputs);
    e["values"] = kv_to_json(it.values);
    e["residual"] = it.residual;
    e["status"] = it.pass ? "pass" : "fail";
    if (include_timing) e["wall_ms"] = it.wall_ms;
    arr.push_back(std::move(e));
  }
  j["items"] = std::move(arr);
  return j;
}

SweepReport report_from_json(const nlohmann::json& j) {
  SweepReport r;
  r.kind = j.at("kind");
  r.total_ms = j.value("total_ms", 0.0);
  for (const auto& e : j.at("items")) {
    SweepItem it;
    it.inputs = kv_from_json(e.at("inputs"));
    it.values = kv_from_json(e.at("values"));
    it.residual = e.at("residual");
    it.pass = e.at("status") == "pass";
    it.wall_ms = e.value("wall_ms", 0.0);
    r.items.push_back(std::move(it));
  }
  return r;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void write_csv(std::ostream& os, const SweepReport& r) {
  // Column set: union over items, first-seen order.
  std::vector<std::string> in_cols, val_cols;
  std::set<std::string> seen;
  for (const auto& it : r.items) {
    for (const auto& [k, _] : it.inputs)
      if (seen.insert("i:" + k).second) in_cols.push_back(k);
    for (const auto& [k, _] : it.values)
      if (seen.insert("v:" + k).second) val_cols.push_back(k);
  }
  for (std::size_t i = 0; i < in_cols.size(); ++i)
    os << (i ? "," : "") << csv_escape(in_cols[i]);
  for (const auto& c : val_cols) os << "," << csv_escape(c);
  os << ",residual,status\n";
  auto find = [](const KV& kv, const std::string& k) -> std::string {
    for (const auto& [key, v] : kv)
      if (key == k) return v;
    return "";
  };
  for (const auto& it : r.items) {
    for (std::size_t i = 0; i < in_cols.size(); ++i)
      os << (i ? "," : "") << csv_escape(find(it.inputs, in_cols[i]));
    for (const auto& c : val_cols) os << "," << csv_escape(find(it.values, c));
    os << "," << csv_escape(it.residual) << "," << (it.pass ? "pass" : "fail")
       << "\n";
  }
}

}  // namespace sigtqft::report
