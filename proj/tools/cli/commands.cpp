#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "authorfield/lexicon.hpp"
#include "corpus.hpp"

namespace authorfield::cli {

namespace {

WordSet load_word_set(const std::string& path) {
  return WordSet(load_lexicon(read_file(path)));
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

// Tabs and line breaks would break the TSV row structure.
std::string tsv_field(std::string_view s) {
  std::string out(s);
  std::replace_if(
      out.begin(), out.end(),
      [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return out;
}

std::string escape_slice(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct FileOutcome {
  std::optional<ExtractionResult> result;
  std::string error;
};

// Runs `fn(i)` for i in [0, count) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

void print_report(const EvalReport& report, std::ostream& out) {
  for (const auto& c : report.cases) {
    const char* status = c.status == CaseStatus::kPass   ? "PASS   "
                         : c.status == CaseStatus::kFail ? "FAIL   "
                                                         : "INVALID";
    out << status << " " << c.name;
    for (const auto& note : c.notes) out << "\n        " << note;
    out << "\n";
  }
  out << std::fixed << std::setprecision(3) << "cases " << report.cases.size()
      << "  passed " << report.passed() << "  exact-match "
      << report.exact_match_rate << "  precision " << report.precision
      << "  recall " << report.recall << "\n";
  out << "coverage:\n";
  for (const auto& [tag, count] : report.coverage) {
    out << "  " << std::left << std::setw(22) << tag << std::right << count
        << "\n";
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading " + path);
  return buffer.str();
}

ExtractConfig make_config(const PipelineOptions& options,
                          std::optional<std::size_t> prefix_limit) {
  ExtractConfig config;
  config.max_gap_lines = options.max_gap_lines;
  config.variant_policy = options.variant_policy;
  config.apostrophe_is_letter = options.apostrophe_is_letter;
  if (options.adparticles_path) {
    config.lexicons.adparticles = load_word_set(*options.adparticles_path);
  }
  if (options.particles_path) {
    config.lexicons.personal_particles =
        load_word_set(*options.particles_path);
  }
  if (options.prefixes_path || prefix_limit) {
    std::vector<std::string> prefixes =
        options.prefixes_path ? load_lexicon(read_file(*options.prefixes_path))
                              : LexiconSet::default_prefix_entries();
    if (prefix_limit && prefixes.size() > *prefix_limit) {
      prefixes.resize(*prefix_limit);
    }
    config.lexicons.prefixes = WordSet(prefixes);
  }
  return config;
}

nlohmann::ordered_json author_to_json(const AuthorName& author) {
  return {{"given", author.given},
          {"initials", author.initials},
          {"surname", author.surname},
          {"raw", author.raw},
          {"span", {{"start", author.span.start}, {"end", author.span.end}}}};
}

nlohmann::ordered_json result_to_json(const ExtractionResult& result,
                                      bool diagnostics) {
  nlohmann::ordered_json j;
  auto authors = nlohmann::ordered_json::array();
  for (const auto& a : result.authors) authors.push_back(author_to_json(a));
  j["authors"] = std::move(authors);
  j["variant"] = std::string(to_string(result.variant_used));
  j["warnings"] = result.warnings;
  if (diagnostics) {
    j["encoded"] = result.encoded.codes();
    j["masked"] = result.masked_codes;
    auto scapes = nlohmann::ordered_json::array();
    for (const auto& s : result.fired_scapes) {
      scapes.push_back({{"rule", s.rule_id}, {"start", s.start}, {"end", s.end}});
    }
    j["scapes"] = std::move(scapes);
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& b : result.blocks) {
      blocks.push_back({{"authors", {b.first_author, b.last_author}},
                        {"separators", b.separators},
                        {"span",
                         {{"start", b.source_span.start},
                          {"end", b.source_span.end}}}});
    }
    j["blocks"] = std::move(blocks);
  }
  return j;
}

int cmd_extract(const std::vector<std::string>& paths,
                const PipelineOptions& pipeline, const ExtractOptions& options,
                std::ostream& out, std::ostream& err) {
  ExtractConfig config;
  try {
    config = make_config(pipeline);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const EncoderConfig encoder_config = EncoderConfig::from_lexicons(
      config.lexicons, config.apostrophe_is_letter);

  std::vector<FileOutcome> outcomes(paths.size());
  parallel_for(paths.size(), options.jobs, [&](std::size_t i) {
    try {
      outcomes[i].result.emplace(
          extract(read_file(paths[i]), config, encoder_config));
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  });

  std::size_t failures = 0;
  if (options.format == OutputFormat::kTsv) {
    out << "given\tinitials\tsurname\traw\n";
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const FileOutcome& outcome = outcomes[i];
    if (!outcome.result) {
      ++failures;
      if (options.format == OutputFormat::kJson) {
        nlohmann::ordered_json j{{"file", paths[i]}, {"error", outcome.error}};
        out << j.dump() << "\n";
      } else {
        err << "error: " << outcome.error << "\n";
      }
      continue;
    }
    const ExtractionResult& result = *outcome.result;
    if (options.format == OutputFormat::kJson) {
      nlohmann::ordered_json j{{"file", paths[i]}};
      j.update(result_to_json(result, options.diagnostics));
      out << j.dump() << "\n";
    } else {
      for (const auto& a : result.authors) {
        out << tsv_field(join(a.given, " ")) << "\t"
            << tsv_field(join(a.initials, " ")) << "\t"
            << tsv_field(a.surname) << "\t" << tsv_field(a.raw) << "\n";
      }
    }
  }
  return !paths.empty() && failures == paths.size() ? 1 : 0;
}

int cmd_encode(const std::string& path, const PipelineOptions& pipeline,
               bool spans, std::ostream& out, std::ostream& err) {
  try {
    const ExtractConfig config = make_config(pipeline);
    const CodeString code = encode(
        read_file(path), EncoderConfig::from_lexicons(
                             config.lexicons, config.apostrophe_is_letter));
    out << code.codes() << "\n";
    if (spans) {
      out << "index\tsymbol\tstart\tend\ttext\n";
      for (std::size_t i = 0; i < code.size(); ++i) {
        const Span s = code.spans()[i];
        out << i << "\t" << code[i] << "\t" << s.start << "\t" << s.end
            << "\t" << escape_slice(code.slice(i)) << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_build_lexicon(const std::string& names_path,
                      const std::string& freq_path, std::size_t top_k,
                      const std::string& output_path, std::ostream& out,
                      std::ostream& err) {
  std::vector<PrefixEntry> entries;
  try {
    const WordSet names(load_lexicon(read_file(names_path)));
    std::vector<PrefixCandidate> candidates;
    try {
      candidates = load_frequency_list(read_file(freq_path));
    } catch (const LexiconError& e) {
      throw std::runtime_error(freq_path + ": " + e.what());
    }
    entries = build_prefix_lexicon(candidates, names, top_k);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream text;
  text << "# Common-name prefix lexicon: " << entries.size()
       << " shortest non-author prefixes, most frequent first.\n";
  for (const auto& e : entries) text << e.prefix << "\n";

  if (output_path.empty()) {
    out << text.str();
    return 0;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file || !(file << text.str())) {
    err << "error: cannot write " << output_path << "\n";
    return 1;
  }
  return 0;
}

int cmd_evaluate(const std::string& corpus_dir,
                 const PipelineOptions& pipeline,
                 const EvaluateOptions& options, std::ostream& out,
                 std::ostream& err) {
  std::vector<CorpusCase> cases;
  ExtractConfig config;
  try {
    cases = load_corpus(corpus_dir);
    config = make_config(pipeline);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const EvalReport report = evaluate_corpus(cases, config);
  nlohmann::ordered_json sensitivity = nlohmann::ordered_json::array();
  if (options.sensitivity) {
    const std::size_t full = config.lexicons.prefixes.size();
    for (const std::size_t limit : {std::size_t{0}, std::size_t{25},
                                    std::size_t{50}, std::size_t{100},
                                    std::size_t{200}, full}) {
      if (limit > full) continue;
      const EvalReport partial =
          evaluate_corpus(cases, make_config(pipeline, limit));
      sensitivity.push_back({{"prefixes", limit},
                             {"exact_match_rate", partial.exact_match_rate},
                             {"recall", partial.recall},
                             {"precision", partial.precision}});
    }
  }

  if (options.format == OutputFormat::kJson) {
    nlohmann::ordered_json j = report_to_json(report);
    if (options.sensitivity) j["sensitivity"] = sensitivity;
    out << j.dump(2) << "\n";
  } else {
    print_report(report, out);
    if (options.sensitivity) {
      out << "prefix lexicon sensitivity:\n";
      for (const auto& row : sensitivity) {
        out << "  prefixes " << std::setw(4) << row["prefixes"].get<std::size_t>()
            << "  exact-match " << std::fixed << std::setprecision(3)
            << row["exact_match_rate"].get<double>() << "\n";
      }
    }
  }
  if (report.cases.empty()) err << "error: no cases in " << corpus_dir << "\n";
  return report.all_passed() ? 0 : 1;
}

}  // namespace authorfield::cli
