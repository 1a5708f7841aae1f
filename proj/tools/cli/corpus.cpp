#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "authorfield/templates.hpp"
#include "commands.hpp"

namespace authorfield::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> string_list(const nlohmann::json& j,
                                     const char* field) {
  std::vector<std::string> out;
  if (!j.contains(field)) return out;
  for (const auto& item : j.at(field)) out.push_back(item.get<std::string>());
  return out;
}

ExpectedAuthor parse_expected(const nlohmann::json& j) {
  ExpectedAuthor author;
  author.given = string_list(j, "given");
  author.initials = string_list(j, "initials");
  author.surname = j.at("surname").get<std::string>();
  return author;
}

// Size of the multiset intersection.
std::size_t common_count(std::vector<ExpectedAuthor> a,
                         std::vector<ExpectedAuthor> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<ExpectedAuthor> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return common.size();
}

std::string describe(const std::vector<ExpectedAuthor>& authors) {
  std::string out = "[";
  for (std::size_t i = 0; i < authors.size(); ++i) {
    if (i > 0) out += "; ";
    const auto& a = authors[i];
    for (const auto& g : a.given) out += g + " ";
    for (const auto& initial : a.initials) out += initial + ". ";
    out += a.surname;
  }
  return out + "]";
}

}  // namespace

std::size_t EvalReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) {
        return c.status == CaseStatus::kPass;
      }));
}

const std::set<std::string>& known_tags() {
  static const std::set<std::string> kTags = [] {
    std::set<std::string> tags;
    for (const auto* variant :
         {&PatternVariant::lower(), &PatternVariant::upper()}) {
      for (const auto& alt : variant->alternatives()) tags.insert(alt.id);
    }
    for (const auto& rule : scape_rules()) tags.insert(rule.id);
    for (const char* sep :
         {"sep:comma", "sep:semicolon", "sep:and", "sep:line"}) {
      tags.insert(sep);
    }
    for (std::size_t n = 1; n <= kDefaultMaxBlocks; ++n) {
      tags.insert("layout:" + std::to_string(n) + "-block");
    }
    tags.insert({"particle", "lexicon", "all-caps"});
    return tags;
  }();
  return kTags;
}

bool is_known_tag(const std::string& tag) {
  return known_tags().contains(tag);
}

std::set<std::string> observed_tags(const ExtractionResult& result) {
  std::set<std::string> tags;
  for (const auto& author : result.authors) {
    tags.insert(author.rule_id);
    if (author.has_particle) tags.insert("particle");
    if (author.all_caps) tags.insert("all-caps");
  }
  for (const auto& scape : result.fired_scapes) tags.insert(scape.rule_id);
  for (const auto& block : result.blocks) {
    for (const char c : block.separators) {
      switch (c) {
        case ',':
          tags.insert("sep:comma");
          break;
        case ';':
          tags.insert("sep:semicolon");
          break;
        case '&':
          tags.insert("sep:and");
          break;
        case 'L':
          tags.insert("sep:line");
          break;
        default:
          break;
      }
    }
  }
  if (!result.blocks.empty()) {
    tags.insert("layout:" + std::to_string(result.blocks.size()) + "-block");
  }
  if (!result.prefix_lowered.empty()) tags.insert("lexicon");
  return tags;
}

ExpectedAuthor to_expected(const AuthorName& author) {
  return ExpectedAuthor{author.given, author.initials, author.surname};
}

std::vector<CorpusCase> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("not a directory: " + dir);
  }
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      inputs.push_back(entry.path());
    }
  }
  std::sort(inputs.begin(), inputs.end());

  std::vector<CorpusCase> cases;
  for (const auto& input : inputs) {
    CorpusCase c;
    c.name = input.stem().string();
    c.input_path = input.string();
    fs::path expectation = input;
    expectation.replace_extension(".json");
    if (!fs::exists(expectation)) {
      c.invalid_reason = "missing expectation file " + expectation.string();
      cases.push_back(std::move(c));
      continue;
    }
    try {
      const auto j = nlohmann::json::parse(read_file(expectation.string()));
      for (const auto& a : j.at("authors")) {
        c.expected.push_back(parse_expected(a));
      }
      c.tags = string_list(j, "tags");
      for (const auto& tag : c.tags) {
        if (!is_known_tag(tag)) {
          c.invalid_reason = "unknown tag '" + tag + "'";
        }
      }
      auto sorted = c.expected;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        c.invalid_reason = "duplicate expected author";
      }
    } catch (const std::exception& e) {
      c.invalid_reason = "bad expectation file: " + std::string(e.what());
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

EvalReport evaluate_corpus(const std::vector<CorpusCase>& cases,
                           const ExtractConfig& config) {
  EvalReport report;
  const EncoderConfig encoder_config = EncoderConfig::from_lexicons(
      config.lexicons, config.apostrophe_is_letter);
  std::size_t true_positives = 0;
  std::size_t extracted_total = 0;
  std::size_t expected_total = 0;

  for (const auto& c : cases) {
    CaseResult r;
    r.name = c.name;
    r.expected = c.expected;
    if (c.invalid_reason) {
      r.status = CaseStatus::kInvalid;
      r.notes.push_back(*c.invalid_reason);
      report.cases.push_back(std::move(r));
      continue;
    }
    std::string text;
    try {
      text = read_file(c.input_path);
    } catch (const std::exception& e) {
      r.status = CaseStatus::kInvalid;
      r.notes.emplace_back(e.what());
      report.cases.push_back(std::move(r));
      continue;
    }

    const ExtractionResult result = extract(text, config, encoder_config);
    for (const auto& author : result.authors) {
      r.extracted.push_back(to_expected(author));
    }
    r.observed_tags = observed_tags(result);
    for (const auto& tag : r.observed_tags) ++report.coverage[tag];

    true_positives += common_count(r.expected, r.extracted);
    extracted_total += r.extracted.size();
    expected_total += r.expected.size();

    r.status = CaseStatus::kPass;
    if (r.extracted != r.expected) {
      r.status = CaseStatus::kFail;
      r.notes.push_back("expected " + describe(r.expected) + ", got " +
                        describe(r.extracted));
    }
    for (const auto& tag : c.tags) {
      if (!r.observed_tags.contains(tag)) {
        r.status = CaseStatus::kFail;
        r.notes.push_back("declared tag '" + tag + "' not exercised");
      }
    }
    report.cases.push_back(std::move(r));
  }

  if (!report.cases.empty()) {
    report.precision =
        extracted_total == 0
            ? 1.0
            : static_cast<double>(true_positives) / extracted_total;
    report.recall = expected_total == 0
                        ? 1.0
                        : static_cast<double>(true_positives) / expected_total;
    report.exact_match_rate =
        static_cast<double>(report.passed()) / report.cases.size();
  }
  return report;
}

nlohmann::ordered_json report_to_json(const EvalReport& report) {
  auto authors_json = [](const std::vector<ExpectedAuthor>& authors) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : authors) {
      arr.push_back({{"given", a.given},
                     {"initials", a.initials},
                     {"surname", a.surname}});
    }
    return arr;
  };
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    const char* status = c.status == CaseStatus::kPass   ? "pass"
                         : c.status == CaseStatus::kFail ? "fail"
                                                         : "invalid";
    cases.push_back({{"name", c.name},
                     {"status", status},
                     {"expected", authors_json(c.expected)},
                     {"extracted", authors_json(c.extracted)},
                     {"tags", c.observed_tags},
                     {"notes", c.notes}});
  }
  nlohmann::ordered_json coverage = nlohmann::ordered_json::object();
  for (const auto& [tag, count] : report.coverage) coverage[tag] = count;
  return {{"cases", cases},
          {"total", report.cases.size()},
          {"passed", report.passed()},
          {"precision", report.precision},
          {"recall", report.recall},
          {"exact_match_rate", report.exact_match_rate},
          {"coverage", coverage}};
}

}  // namespace authorfield::cli
