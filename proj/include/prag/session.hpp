#ifndef PRAG_SESSION_HPP
#define PRAG_SESSION_HPP

#include <string>
#include <vector>

#include "prag/dynamics.hpp"
#include "prag/grammar.hpp"
#include "prag/presupposition.hpp"

namespace prag {

// Exit codes shared by the CLI subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;      // parse / lexicon / model / IO
inline constexpr int kExitAnaphora = 3;        // UnresolvedAnaphora
inline constexpr int kExitPresupposition = 4;  // PresuppositionFailure

struct SessionOptions {
  Policy policy = Policy::Global;
  Strategy strategy = Strategy::Recency;
  bool trace = false;
};

// Interactive discourse state. One sentence is processed at a time against
// the current context; the context is replaced only when the sentence
// succeeds, so a failed step leaves the session untouched. The printed
// formula after each step is the closure of the whole discourse so far, which
// makes the final REPL formula identical to the batch output.
class Session {
 public:
  Session(Lexicon lexicon, SessionOptions options);

  // Processes one REPL line: a `:command` or one or more sentences. Errors
  // are rendered into the returned output and leave the state unchanged.
  std::string step(const std::string& line);
  bool quit_requested() const { return quit_; }

  // Processes sentences, throwing on error. Returns the rendered output
  // (trace lines when enabled, then one formula line per sentence).
  std::string process_sentences(const std::string& text);

  const Context& context() const { return ctx_; }
  std::string render_context_text() const;
  Formula current_formula() const { return close_top(ctx_, open_acc_); }
  const Trace& accumulated_trace() const { return trace_acc_; }
  const SessionOptions& options() const { return options_; }

 private:
  std::string run_one(const ParsedSentence& sentence);

  Lexicon lexicon_;
  SessionOptions options_;
  Context ctx_;
  Formula open_acc_ = Formula::truth();
  Trace trace_acc_;
  int sentences_seen_ = 0;
  bool quit_ = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// `prag run`: parses the whole discourse, processes it sentence by sentence
// against one growing context, prints the final formula, the context
// rendering, and the trace when requested.
CommandResult run_batch_text(const std::string& discourse, const Lexicon& lexicon,
                             const SessionOptions& options);
CommandResult run_batch_files(const std::string& discourse_path, const std::string& lexicon_path,
                              const SessionOptions& options);

// `prag eval`: evaluates a closed formula against a model file.
CommandResult eval_command_text(const std::string& model_text, const std::string& formula_text);
CommandResult eval_command_files(const std::string& model_path, const std::string& formula_text);

// Maps an in-flight error to its CLI rendering and exit code.
CommandResult render_error(const PragError& e);

std::string read_file(const std::string& path);  // throws PragError when unreadable

}  // namespace prag

#endif  // PRAG_SESSION_HPP
