#ifndef PRAG_ERRORS_HPP
#define PRAG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prag {

// Base class for every error the engine reports. Errors raised while a
// handler is interpreting effects carry the partial trace accumulated up to
// the failing operation (rendered, one line per handled op).
class PragError : public std::runtime_error {
 public:
  explicit PragError(std::string message) : std::runtime_error(std::move(message)) {}

  bool has_trace() const { return trace_attached_; }
  const std::vector<std::string>& partial_trace() const { return partial_trace_; }
  void attach_trace(std::vector<std::string> lines) {
    if (trace_attached_) return;  // innermost attachment wins
    partial_trace_ = std::move(lines);
    trace_attached_ = true;
  }

 private:
  std::vector<std::string> partial_trace_;
  bool trace_attached_ = false;
};

// Formula concrete-syntax error, with a byte offset into the input.
class SyntaxError : public PragError {
 public:
  SyntaxError(std::string message, std::size_t offset)
      : PragError("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Fragment tokenizer rejection (anything that is not a word or '.').
class InvalidCharacterError : public PragError {
 public:
  InvalidCharacterError(char c, std::size_t offset)
      : PragError("invalid character '" + std::string(1, c) + "' at offset " +
                  std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Fragment parse failure; token_index is the farthest token the parser reached.
class ParseError : public PragError {
 public:
  ParseError(std::string message, std::size_t token_index)
      : PragError("parse error at token " + std::to_string(token_index) + ": " + message),
        token_index_(token_index) {}
  std::size_t token_index() const { return token_index_; }

 private:
  std::size_t token_index_;
};

class UnknownWordError : public PragError {
 public:
  UnknownWordError(std::string word, std::size_t token_index)
      : PragError("unknown word \"" + word + "\" at token " + std::to_string(token_index)),
        word_(std::move(word)),
        token_index_(token_index) {}
  const std::string& word() const { return word_; }
  std::size_t token_index() const { return token_index_; }

 private:
  std::string word_;
  std::size_t token_index_;
};

class LexiconError : public PragError {
 public:
  explicit LexiconError(std::string message) : PragError("lexicon error: " + std::move(message)) {}
};

class ModelError : public PragError {
 public:
  explicit ModelError(std::string message) : PragError("model error: " + std::move(message)) {}
};

// Raised by model evaluation (unbound variable, unknown predicate/constant,
// arity mismatch) and by precondition checks of the equivalence oracle.
class EvalError : public PragError {
 public:
  explicit EvalError(std::string message) : PragError("eval error: " + std::move(message)) {}
};

// A handler without a clause for an operation it encountered.
class UnhandledEffectError : public PragError {
 public:
  explicit UnhandledEffectError(std::string op)
      : PragError("unhandled effect: " + op), op_(std::move(op)) {}
  const std::string& op() const { return op_; }

 private:
  std::string op_;
};

// No accessible referent satisfies a pronoun's constraints.
class UnresolvedAnaphoraError : public PragError {
 public:
  explicit UnresolvedAnaphoraError(std::string constraints)
      : PragError("unresolved anaphora: no accessible referent matches " + constraints),
        constraints_(std::move(constraints)) {}
  const std::string& constraints() const { return constraints_; }

 private:
  std::string constraints_;
};

// Presupposition with no binder under the `off` accommodation policy.
class PresuppositionFailureError : public PragError {
 public:
  PresuppositionFailureError(std::string source, std::string descriptor)
      : PragError("presupposition failure: \"" + source + "\" requires " + descriptor),
        source_(std::move(source)),
        descriptor_(std::move(descriptor)) {}
  const std::string& source() const { return source_; }
  const std::string& descriptor() const { return descriptor_; }

 private:
  std::string source_;
  std::string descriptor_;
};

}  // namespace prag

#endif  // PRAG_ERRORS_HPP
