#include "prag/session.hpp"

#include <fstream>
#include <sstream>

#include "prag/models.hpp"

namespace prag {

Session::Session(Lexicon lexicon, SessionOptions options)
    : lexicon_(std::move(lexicon)), options_(options) {}

std::string Session::render_context_text() const { return render_context(ctx_); }

std::string Session::run_one(const ParsedSentence& sentence) {
  Context ctx = ctx_;  // value snapshot; swapped in only on success
  ctx.sentence = sentences_seen_ + 1;
  Comp den = denote_sentence(sentence.tree);
  DiscourseResult result = run_discourse(den, std::move(ctx), options_.policy, options_.strategy);

  Formula open = open_acc_.is(Formula::Kind::Truth)
                     ? result.open_formula
                     : Formula::conj(open_acc_, result.open_formula);

  std::string out;
  if (options_.trace) {
    for (const std::string& line : render(result.trace)) out += line + "\n";
  }
  out += pretty(close_top(result.context, open)) + "\n";

  ctx_ = std::move(result.context);
  open_acc_ = std::move(open);
  trace_acc_.insert(trace_acc_.end(), result.trace.begin(), result.trace.end());
  ++sentences_seen_;
  return out;
}

std::string Session::process_sentences(const std::string& text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) return "";
  std::vector<ParsedSentence> sentences = parse(tokens, lexicon_);
  std::string out;
  for (const ParsedSentence& sentence : sentences) {
    out += run_one(sentence);
  }
  return out;
}

std::string Session::step(const std::string& line) {
  std::string trimmed = line;
  while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                              trimmed.back() == ' ' || trimmed.back() == '\t')) {
    trimmed.pop_back();
  }
  std::size_t start = trimmed.find_first_not_of(" \t");
  if (start == std::string::npos) return "";
  trimmed = trimmed.substr(start);

  if (trimmed[0] == ':') {
    std::istringstream in(trimmed);
    std::string command, arg;
    in >> command >> arg;
    if (command == ":quit") {
      quit_ = true;
      return "";
    }
    if (command == ":context") return render_context_text();
    if (command == ":reset") {
      ctx_ = Context{};
      open_acc_ = Formula::truth();
      trace_acc_.clear();
      sentences_seen_ = 0;
      return "";
    }
    if (command == ":trace") {
      if (arg == "on") { options_.trace = true; return ""; }
      if (arg == "off") { options_.trace = false; return ""; }
      return "error: usage: :trace on|off\n";
    }
    if (command == ":policy") {
      try {
        options_.policy = policy_from_string(arg);
        return "";
      } catch (const PragError&) {
        return "error: usage: :policy global|trapped|off\n";
      }
    }
    return "error: unknown command " + command + "\n";
  }

  try {
    return process_sentences(trimmed);
  } catch (const PragError& e) {
    return std::string("error: ") + e.what() + "\n";
  }
}

CommandResult render_error(const PragError& e) {
  CommandResult result;
  result.err = std::string(e.what()) + "\n";
  if (dynamic_cast<const UnresolvedAnaphoraError*>(&e)) {
    result.exit_code = kExitAnaphora;
  } else if (dynamic_cast<const PresuppositionFailureError*>(&e)) {
    result.exit_code = kExitPresupposition;
  } else {
    result.exit_code = kExitInputError;
  }
  return result;
}

CommandResult run_batch_text(const std::string& discourse, const Lexicon& lexicon,
                             const SessionOptions& options) {
  try {
    Session session(lexicon, SessionOptions{options.policy, options.strategy, false});
    session.process_sentences(discourse);

    CommandResult result;
    result.out = pretty(session.current_formula()) + "\n" + session.render_context_text();
    if (options.trace) {
      for (const std::string& line : render(session.accumulated_trace())) {
        result.out += line + "\n";
      }
    }
    return result;
  } catch (const PragError& e) {
    return render_error(e);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PragError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CommandResult run_batch_files(const std::string& discourse_path, const std::string& lexicon_path,
                              const SessionOptions& options) {
  try {
    Lexicon lexicon = load_lexicon(read_file(lexicon_path));
    return run_batch_text(read_file(discourse_path), lexicon, options);
  } catch (const PragError& e) {
    return render_error(e);
  }
}

CommandResult eval_command_text(const std::string& model_text, const std::string& formula_text) {
  try {
    Model model = parse_model(model_text);
    Formula f = parse_formula(formula_text);
    for (const auto& [name, arity] : predicate_arities(f)) {
      auto it = model.preds.find(name);
      if (it == model.preds.end()) throw EvalError("unknown predicate " + name);
      if (it->second.arity && *it->second.arity != arity) {
        throw EvalError("predicate " + name + " has arity " + std::to_string(*it->second.arity));
      }
    }
    std::set<std::string> free = free_vars(f);
    if (!free.empty()) throw EvalError("free variable " + *free.begin());
    CommandResult result;
    result.out = (eval(model, {}, f) ? "true" : "false") + std::string("\n");
    return result;
  } catch (const PragError& e) {
    return render_error(e);
  }
}

CommandResult eval_command_files(const std::string& model_path, const std::string& formula_text) {
  try {
    return eval_command_text(read_file(model_path), formula_text);
  } catch (const PragError& e) {
    return render_error(e);
  }
}

}  // namespace prag
