#ifndef PRAG_GRAMMAR_HPP
#define PRAG_GRAMMAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prag/effects.hpp"
#include "prag/features.hpp"
#include "prag/logic.hpp"

namespace prag {

enum class Category { PN, N, Nrel, Vi, Vt, Det, Pro, Poss, Rel, Neg };
enum class DetKind { Indef, Univ, Def };

const char* to_string(Category c);

struct LexEntry {
  std::string word;
  Category category;
  std::string symbol;           // predicate/constant name; empty for Rel/Neg/Pro/Poss
  DetKind det = DetKind::Indef; // meaningful for Det only
  FeatureSet features;
};

// Word -> entry map. Loading merges user entries over the built-in core
// function words (a, every, the, who, doesnt, he, she, it, his, her).
class Lexicon {
 public:
  static Lexicon core();

  void add(LexEntry entry);  // throws LexiconError on category conflict
  const LexEntry* lookup(const std::string& word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LexEntry> entries_;
};

// Tab-separated entries: word, category, symbol ('-' for none), features
// (comma-joined name=value, or '-'). '#' starts a comment line.
Lexicon load_lexicon(const std::string& text);

struct Token {
  std::string text;
  std::size_t offset;
};

// Lowercased alphabetic words; '.' is the sentence separator; anything else
// is rejected with its position.
std::vector<Token> tokenize(const std::string& text);

struct SyntaxTree {
  std::string label;  // grammar category: D, S, NP, Nbar, VP, or a lexical category
  std::vector<SyntaxTree> children;
  std::optional<LexEntry> leaf;

  const SyntaxTree& child(std::size_t i) const { return children[i]; }
};

struct ParsedSentence {
  SyntaxTree tree;
  std::size_t alternatives;  // number of complete parses; the first in
                             // leftmost-derivation order is kept
  std::size_t first_token;   // absolute index of the sentence's first token
};

// Splits the token stream on '.' and parses each sentence with the fragment
// grammar: S -> NP VP; NP -> Det Nbar | PN | Pro | Poss Nrel;
// Nbar -> N | N Rel VP; VP -> Vi | Vt NP | Neg VP.
std::vector<ParsedSentence> parse(const std::vector<Token>& tokens, const Lexicon& lexicon);

// Denotation types of the composition layer. Sentences denote computations of
// formulas; VP/Nbar denote functions from terms to such computations; NPs are
// generalized quantifiers over VP denotations.
using VpDen = std::function<Comp(const Term&)>;
using NpDen = std::function<Comp(const VpDen&)>;

Comp denote_sentence(const SyntaxTree& tree);
VpDen denote_vp(const SyntaxTree& tree);
VpDen denote_nbar(const SyntaxTree& tree);
NpDen denote_np(const SyntaxTree& tree);

// Left fold of sentence denotations under conjunction, seeded with truth.
Comp denote_discourse(const std::vector<ParsedSentence>& sentences);

}  // namespace prag

#endif  // PRAG_GRAMMAR_HPP
