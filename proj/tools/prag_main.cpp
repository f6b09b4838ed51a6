#include <unistd.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "prag/session.hpp"

namespace {

int emit(const prag::CommandResult& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

int run_repl(const std::string& lexicon_path, const prag::SessionOptions& options) {
  prag::Lexicon lexicon;
  try {
    lexicon = prag::load_lexicon(prag::read_file(lexicon_path));
  } catch (const prag::PragError& e) {
    std::cerr << e.what() << "\n";
    return prag::kExitInputError;
  }
  prag::Session session(lexicon, options);
  bool interactive = isatty(fileno(stdin));
  std::string line;
  while (true) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::cout << session.step(line) << std::flush;
    if (session.quit_requested()) break;
  }
  return prag::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prag - discourse semantics for a controlled English fragment"};
  app.require_subcommand(1);

  std::string lexicon_path;
  std::string discourse_path;
  std::string model_path;
  std::string formula_text;
  std::string accommodation = "global";
  std::string strategy = "recency";
  bool trace = false;

  CLI::App* run = app.add_subcommand("run", "process a discourse file");
  run->add_option("--lexicon", lexicon_path, "lexicon file")->required();
  run->add_option("--accommodation", accommodation, "accommodation policy")
      ->check(CLI::IsMember({"global", "trapped", "off"}));
  run->add_option("--strategy", strategy, "anaphora resolution strategy")
      ->check(CLI::IsMember({"recency"}));
  run->add_flag("--trace", trace, "print the effect trace");
  run->add_option("discourse", discourse_path, "discourse file")->required();

  CLI::App* repl = app.add_subcommand("repl", "interactive discourse session");
  repl->add_option("--lexicon", lexicon_path, "lexicon file")->required();
  repl->add_option("--accommodation", accommodation, "accommodation policy")
      ->check(CLI::IsMember({"global", "trapped", "off"}));
  repl->add_option("--strategy", strategy, "anaphora resolution strategy")
      ->check(CLI::IsMember({"recency"}));
  repl->add_flag("--trace", trace, "print the effect trace");

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula against a model");
  eval_cmd->add_option("--model", model_path, "model file")->required();
  eval_cmd->add_option("--formula", formula_text, "formula text")->required();

  CLI11_PARSE(app, argc, argv);

  prag::SessionOptions options;
  options.policy = prag::policy_from_string(accommodation);
  options.strategy = prag::Strategy::Recency;
  options.trace = trace;

  try {
    if (run->parsed()) {
      return emit(prag::run_batch_files(discourse_path, lexicon_path, options));
    }
    if (repl->parsed()) {
      return run_repl(lexicon_path, options);
    }
    return emit(prag::eval_command_files(model_path, formula_text));
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
