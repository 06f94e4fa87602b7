#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sigtqft::report {

using KV = std::vector<std::pair<std::string, std::string>>;

/// One sweep item: inputs, computed values, the residual against the
/// contract, and whether it passed. Field order is preserved so CSV output
/// is deterministic.
struct SweepItem {
  KV inputs;
  KV values;
  std::string residual;
  bool pass = true;
  double wall_ms = 0.0;

  bool operator==(const SweepItem& o) const {
    return inputs == o.inputs && values == o.values && residual == o.residual &&
           pass == o.pass;
  }
};

struct SweepReport {
  std::string kind;
  std::vector<SweepItem> items;
  double total_ms = 0.0;

  int64_t pass_count() const;
  int64_t fail_count() const;
  bool all_pass() const { return fail_count() == 0; }

  /// Equality ignoring timing fields (used by determinism checks).
  bool same_results(const SweepReport& o) const {
    return kind == o.kind && items == o.items;
  }
};

nlohmann::json to_json(const SweepReport& r, bool include_timing = true);
SweepReport report_from_json(const nlohmann::json& j);

/// RFC-4180-style CSV: header row, quoted fields where needed, '.' decimal
/// separator. Timing fields are excluded so identical runs are byte-identical.
void write_csv(std::ostream& os, const SweepReport& r);

std::string csv_escape(const std::string& field);

}  // namespace sigtqft::report
