#pragma once

// Registry of stored cases: one JSON file per case in a versioned directory,
// each with an optional stored resolution and a list of checks that
// verify_case runs against the engine.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secres/weyman.hpp"

namespace secres {

enum class CaseStatus { AcmProved, AcmConjectured, AgProved, AgConjectured, CompleteIntersection };

std::string to_string(CaseStatus s);
CaseStatus case_status_from(std::string_view s);

struct CaseCheck {
  std::string kind;
  std::string params;  ///< JSON object text
};

struct CaseRecord {
  std::string name;
  std::string title;
  std::string source;
  int secant_order = 0;
  std::vector<int> dims;
  CaseStatus status = CaseStatus::AcmProved;
  std::optional<EquivariantResolution> resolution;
  /// Displayed twist of a term is -(internal degree + display_offset).
  int display_offset = 0;
  std::vector<CaseCheck> checks;
};

struct CheckResult {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct CaseReport {
  std::string name;
  CaseStatus status = CaseStatus::AcmProved;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
};

struct VerifyOptions {
  std::filesystem::path dir;               ///< empty: default_catalog_dir()
  std::map<std::string, std::string> params;  ///< e.g. {"n", "5"}
  unsigned threads = 0;
};

/// $SECRES_CATALOG_DIR if set, else the directory configured at build time.
std::filesystem::path default_catalog_dir();

std::vector<std::string> list_cases(const std::filesystem::path& dir = {});
CaseRecord load_case(const std::string& name, const std::filesystem::path& dir = {});
CaseRecord parse_case(std::string_view json_text);

/// Runs every check; failures and exceptions become report entries.
CaseReport verify_case(const CaseRecord& record, const VerifyOptions& opts = {});
CaseReport verify_case(const std::string& name, const VerifyOptions& opts = {});

std::string report_to_text(const CaseReport& r);
std::string reports_to_json(const std::vector<CaseReport>& reports, int indent = 2);

}  // namespace secres
