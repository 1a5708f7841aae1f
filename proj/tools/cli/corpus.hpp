// Golden-corpus evaluation: every case is a UTF-8 text file `<name>.txt` with
// an expectation file `<name>.json` next to it:
//
//   {"authors": [{"given": ["Isaac"], "initials": [], "surname": "Newton"}],
//    "tags": ["lower:nn", "layout:1-block"]}
//
// Tags declare what a case exercises; every declared tag must be observed in
// the extraction for the case to pass.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "authorfield/extractor.hpp"
#include "json.hpp"

namespace authorfield::cli {

struct ExpectedAuthor {
  std::vector<std::string> given;
  std::vector<std::string> initials;
  std::string surname;

  auto operator<=>(const ExpectedAuthor&) const = default;
};

struct CorpusCase {
  std::string name;
  std::string input_path;
  std::vector<ExpectedAuthor> expected;
  std::vector<std::string> tags;
  // Set when the case could not be loaded (missing or malformed expectation).
  std::optional<std::string> invalid_reason;
};

enum class CaseStatus { kPass, kFail, kInvalid };

struct CaseResult {
  std::string name;
  CaseStatus status = CaseStatus::kInvalid;
  std::vector<ExpectedAuthor> expected;
  std::vector<ExpectedAuthor> extracted;
  std::set<std::string> observed_tags;
  std::vector<std::string> notes;
};

struct EvalReport {
  std::vector<CaseResult> cases;
  double precision = 0.0;
  double recall = 0.0;
  double exact_match_rate = 0.0;
  // Tag -> number of cases exercising it.
  std::map<std::string, std::size_t> coverage;

  std::size_t passed() const;
  bool all_passed() const { return !cases.empty() && passed() == cases.size(); }
};

// Every tag a case may declare.
const std::set<std::string>& known_tags();
bool is_known_tag(const std::string& tag);

// Tags exercised by one extraction: alternatives of the extracted authors,
// fired scape rules, separators, block count, particles, prefix lexicon use
// and all-caps names.
std::set<std::string> observed_tags(const ExtractionResult& result);

ExpectedAuthor to_expected(const AuthorName& author);

// Loads `*.txt` cases (sorted by name) from `dir`. Throws std::runtime_error
// if `dir` is not a directory.
std::vector<CorpusCase> load_corpus(const std::string& dir);

EvalReport evaluate_corpus(const std::vector<CorpusCase>& cases,
                           const ExtractConfig& config);

nlohmann::ordered_json report_to_json(const EvalReport& report);

}  // namespace authorfield::cli
