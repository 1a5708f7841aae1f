#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

using authorfield::VariantPolicy;
namespace cli = authorfield::cli;

int main(int argc, char** argv) {
  CLI::App app{"Extract the author field from plain-text title pages"};
  app.require_subcommand(1);

  cli::PipelineOptions pipeline;
  std::string variant = "both";
  auto add_pipeline_flags = [&](CLI::App* cmd) {
    cmd->add_option("--adparticles", pipeline.adparticles_path,
                    "Adparticle lexicon file");
    cmd->add_option("--particles", pipeline.particles_path,
                    "Personal particle lexicon file");
    cmd->add_option("--prefixes", pipeline.prefixes_path,
                    "Common-name prefix lexicon file");
    cmd->add_option("--max-gap-lines", pipeline.max_gap_lines,
                    "Lines allowed between chained author blocks")
        ->capture_default_str();
    cmd->add_option("--variant", variant,
                    "Author template variant: lower, upper or both")
        ->check(CLI::IsMember({"lower", "upper", "both"}))
        ->capture_default_str();
    cmd->add_flag("!--no-apostrophe", pipeline.apostrophe_is_letter,
                  "Do not treat apostrophes as letters");
  };

  auto to_format = [](const std::string& name) {
    return name == "json" ? cli::OutputFormat::kJson : cli::OutputFormat::kTsv;
  };

  auto* extract = app.add_subcommand("extract", "Extract authors from files");
  std::vector<std::string> paths;
  cli::ExtractOptions extract_options;
  extract->add_option("paths", paths, "Plain-text title pages")->required();
  std::string extract_format = "json";
  extract->add_option("--format", extract_format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  extract->add_flag("--diagnostics", extract_options.diagnostics,
                    "Include encoded strings, scapes and blocks");
  extract->add_option("-j,--jobs", extract_options.jobs,
                      "Worker threads (0: one per core)");
  add_pipeline_flags(extract);

  auto* encode = app.add_subcommand("encode", "Print the code string");
  std::string encode_path;
  bool spans = false;
  encode->add_option("path", encode_path, "Plain-text file")->required();
  encode->add_flag("--spans", spans, "Print one row per symbol with offsets");
  add_pipeline_flags(encode);

  auto* build = app.add_subcommand(
      "build-lexicon", "Build a common-name prefix lexicon");
  std::string names_path;
  std::string freq_path;
  std::string output_path;
  std::size_t top_k = 450;
  build->add_option("--names", names_path, "Author names, one per line")
      ->required();
  build->add_option("--freqs", freq_path, "Common words: word<TAB>count")
      ->required();
  build->add_option("--top-k", top_k, "Number of prefixes to keep")
      ->capture_default_str();
  build->add_option("-o,--output", output_path, "Output file (default stdout)");

  auto* evaluate =
      app.add_subcommand("evaluate", "Evaluate against a golden corpus");
  std::string corpus_dir;
  cli::EvaluateOptions evaluate_options;
  evaluate->add_option("corpus", corpus_dir, "Corpus directory")->required();
  std::string evaluate_format = "text";
  evaluate->add_option("--format", evaluate_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  evaluate->add_flag("--sensitivity", evaluate_options.sensitivity,
                     "Also report accuracy for truncated prefix lexicons");
  add_pipeline_flags(evaluate);

  CLI11_PARSE(app, argc, argv);

  pipeline.variant_policy = variant == "lower"   ? VariantPolicy::kLowerThenUpper
                            : variant == "upper" ? VariantPolicy::kUpperThenLower
                                                 : VariantPolicy::kBestOfBoth;

  extract_options.format = to_format(extract_format);
  evaluate_options.format = to_format(evaluate_format);

  if (*extract) {
    return cli::cmd_extract(paths, pipeline, extract_options, std::cout,
                            std::cerr);
  }
  if (*encode) {
    return cli::cmd_encode(encode_path, pipeline, spans, std::cout, std::cerr);
  }
  if (*build) {
    return cli::cmd_build_lexicon(names_path, freq_path, top_k, output_path,
                                  std::cout, std::cerr);
  }
  return cli::cmd_evaluate(corpus_dir, pipeline, evaluate_options, std::cout,
                           std::cerr);
}
