// Subcommands of the authorfield tool. Each command writes its regular output
// to `out`, diagnostics to `err`, and returns the process exit status.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "authorfield/extractor.hpp"
#include "json.hpp"

namespace authorfield::cli {

enum class OutputFormat { kJson, kTsv };

// Lexicon overrides and matcher settings shared by every subcommand.
struct PipelineOptions {
  std::optional<std::string> adparticles_path;
  std::optional<std::string> particles_path;
  std::optional<std::string> prefixes_path;
  std::size_t max_gap_lines = kDefaultMaxGapLines;
  VariantPolicy variant_policy = VariantPolicy::kBestOfBoth;
  bool apostrophe_is_letter = true;
};

// Builds the extraction config, reading any lexicon overrides. When
// `prefix_limit` is set only that many leading prefix entries are kept.
// Throws std::runtime_error (or LexiconError) on unreadable or malformed
// lexicon files.
ExtractConfig make_config(const PipelineOptions& options,
                          std::optional<std::size_t> prefix_limit = {});

std::string read_file(const std::string& path);

nlohmann::ordered_json author_to_json(const AuthorName& author);
// {authors, variant, warnings}; `diagnostics` adds encoded, masked, scapes,
// blocks.
nlohmann::ordered_json result_to_json(const ExtractionResult& result,
                                      bool diagnostics = false);

struct ExtractOptions {
  OutputFormat format = OutputFormat::kJson;
  bool diagnostics = false;
  std::size_t jobs = 0;  // 0: hardware concurrency
};

int cmd_extract(const std::vector<std::string>& paths,
                const PipelineOptions& pipeline, const ExtractOptions& options,
                std::ostream& out, std::ostream& err);

int cmd_encode(const std::string& path, const PipelineOptions& pipeline,
               bool spans, std::ostream& out, std::ostream& err);

// Writes the lexicon to `output_path`, or to `out` when empty.
int cmd_build_lexicon(const std::string& names_path,
                      const std::string& freq_path, std::size_t top_k,
                      const std::string& output_path, std::ostream& out,
                      std::ostream& err);

struct EvaluateOptions {
  OutputFormat format = OutputFormat::kTsv;  // kTsv prints a text report
  bool sensitivity = false;
};

int cmd_evaluate(const std::string& corpus_dir,
                 const PipelineOptions& pipeline,
                 const EvaluateOptions& options, std::ostream& out,
                 std::ostream& err);

}  // namespace authorfield::cli
