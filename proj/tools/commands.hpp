#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scottmax/suites.hpp"

namespace scottmax::cli {

enum class Status { pass, fail, indeterminate };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 64;

int exit_code(Status s);
const char* status_name(Status s);

struct Report {
  std::string command;
  Status status = Status::pass;
  std::string summary;
  std::vector<std::string> lines;  // human-readable findings
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

Report run_order(const std::string& u, const std::string& v);
Report run_l_check(const std::vector<std::string>& elems);
Report run_poset_verify(const std::string& path, bool strict);
Report run_poset_gdelta(const std::string& path, const std::optional<std::vector<std::string>>& set);
Report run_sup(int order, const std::optional<std::string>& chain, const std::vector<std::string>& elems);

struct DiagOptions {
  std::string family = "canonical";  // "canonical" or a family JSON path
  std::uint64_t depth = 64;
  std::uint64_t budget = 10000;
  std::optional<std::string> out;
  bool check_cover = true;
};

Report run_diag(const DiagOptions& opt);
Report run_cert_verify(const std::string& cert_path, const std::string& family);

Report run_suites(const std::string& scope, const SuiteOptions& opt);

/// Budget used when --budget is absent: SCOTTMAX_BUDGET if set, else 10000.
std::uint64_t default_budget();

}  // namespace scottmax::cli
