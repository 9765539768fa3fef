#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "flagcalc/curves.hpp"

namespace flagcalc {

enum class CaseStatus { Pass, Fail, Skipped };
std::string status_name(CaseStatus s);

struct VerificationCase {
  std::string suite;
  std::string id;
  CaseStatus status = CaseStatus::Pass;
  nlohmann::ordered_json params;
  nlohmann::ordered_json witness;
  std::int64_t millis = 0;
};

/// G/P as (family, rank, Levi simple roots, 0-based) with an optional label.
struct SpaceSpec {
  Family family;
  int rank;
  std::vector<int> levi;
  std::string label;

  std::string name() const;
  bool operator==(const SpaceSpec& o) const {
    return family == o.family && rank == o.rank && levi == o.levi;
  }
};

struct HarnessConfig {
  std::vector<std::string> suites;
  std::optional<Family> family;
  std::optional<int> rank;
  std::optional<std::vector<int>> levi;  // 0-based
  std::optional<std::string> case_name;  // projrich case label
  std::optional<int> max_degree;
  int q_order = 3;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
  std::filesystem::path cache_dir = ".flagcalc-cache";
  std::size_t max_quantum_points = 48;
  std::size_t max_group_size = kDefaultGroupBound;
};

struct Report {
  std::vector<VerificationCase> cases;
  std::size_t count(CaseStatus s) const;
  /// 0 when nothing failed, 1 otherwise. Skipped cases do not fail a run.
  int exit_code() const;
};

const std::vector<std::string>& suite_names();

/// Types A1-A4, B2-B4, C2-C4, D4-D5, G2, F4. Every proper Levi subset for
/// rank <= 3; for rank 4-5 the Borel, the maximal parabolics and the
/// projected Richardson cases.
std::vector<SpaceSpec> default_grid();

/// Labeled projected Richardson cases: LG24, OG48, B4Q7, D5Q8, Fl145.
std::vector<SpaceSpec> projrich_cases();

/// Spaces a suite runs on under the given filters.
std::vector<SpaceSpec> suite_spaces(const std::string& suite, const HarnessConfig& config);

/// Runs the configured suites. Case order depends only on the configuration.
/// Throws UsageError for an unknown suite or inconsistent filters.
Report run_suites(const HarnessConfig& config);

nlohmann::ordered_json report_json(const Report& report, bool with_timing = true);
std::string report_markdown(const Report& report, bool with_timing = true);

/// Right-hand side Gamma_e(w^{-1}.X^{wu}) of the extended Seidel statement,
/// one row per (w, u, e) with e of total degree <= e_bound.
struct SeidelTableRow {
  WeylElement w;
  std::size_t u;
  Degree d;
  Degree e;
  WeylElement nbhd;  // element of Gamma_e(X^{wu})
  Bitset fixed;      // w^{-1}.{v >= nbhd}
};
std::vector<SeidelTableRow> seidel_extended_table(const FlagVariety& fv, int e_bound);
nlohmann::ordered_json seidel_table_json(const FlagVariety& fv,
                                         const std::vector<SeidelTableRow>& rows);
std::string seidel_table_markdown(const FlagVariety& fv, const std::vector<SeidelTableRow>& rows);

/// "1,3" -> {0, 2}; empty string -> {}. InputError on malformed input.
std::vector<int> parse_root_list(const std::string& text, int rank);

}  // namespace flagcalc
