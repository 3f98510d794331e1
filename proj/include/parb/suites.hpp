#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parb/gt.hpp"

namespace parb {

enum class Status { pass, fail, info };

std::string_view status_name(Status s);

struct Record {
  std::string id;
  // The identity or property checked, or "plumbing".
  std::string anchor;
  Status status = Status::pass;
  std::string detail;
  // First failing sample, empty on success.
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<Record> records;

  int count(Status s) const;
  bool passed() const { return count(Status::fail) == 0; }
  const Record* find(const std::string& id) const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Cap on the random samples of each sweep.  Zero runs nothing; unset runs
  // the full counts.
  std::optional<long> budget;
  bool flip = false;
  HexagonConvention hexagon = HexagonConvention::drinfeld;
  int degree = 4;
};

const std::vector<std::string>& suite_names();
// Records sorted by id.  Throws MalformedInput for an unknown suite.
Report run_suite(const std::string& name, const SuiteOptions& options);
// One JSON object per line: the records in order, then a summary.
std::string report_lines(const Report& r);

}  // namespace parb
