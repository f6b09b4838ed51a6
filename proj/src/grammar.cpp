#include "prag/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "prag/errors.hpp"
#include "prag/presupposition.hpp"

namespace prag {

const char* to_string(Category c) {
  switch (c) {
    case Category::PN: return "PN";
    case Category::N: return "N";
    case Category::Nrel: return "Nrel";
    case Category::Vi: return "Vi";
    case Category::Vt: return "Vt";
    case Category::Det: return "Det";
    case Category::Pro: return "Pro";
    case Category::Poss: return "Poss";
    case Category::Rel: return "Rel";
    case Category::Neg: return "Neg";
  }
  return "?";
}

namespace {

std::optional<Category> category_from_string(const std::string& s) {
  if (s == "PN") return Category::PN;
  if (s == "N") return Category::N;
  if (s == "Nrel") return Category::Nrel;
  if (s == "Vi") return Category::Vi;
  if (s == "Vt") return Category::Vt;
  if (s == "Det") return Category::Det;
  if (s == "Pro") return Category::Pro;
  if (s == "Poss") return Category::Poss;
  if (s == "Rel") return Category::Rel;
  if (s == "Neg") return Category::Neg;
  return std::nullopt;
}

FeatureSet parse_features(const std::string& spec, const std::string& word) {
  FeatureSet features;
  if (spec == "-" || spec.empty()) return features;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw LexiconError("malformed feature '" + item + "' for word " + word);
    }
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (name != "gender") {
      throw LexiconError("unknown feature name '" + name + "' for word " + word);
    }
    if (value != "m" && value != "f" && value != "n") {
      throw LexiconError("unknown gender value '" + value + "' for word " + word);
    }
    features[name] = value;
  }
  return features;
}

LexEntry make_core(std::string word, Category cat, DetKind det, FeatureSet features) {
  LexEntry e;
  e.word = std::move(word);
  e.category = cat;
  e.det = det;
  e.features = std::move(features);
  return e;
}

}  // namespace

Lexicon Lexicon::core() {
  Lexicon lex;
  lex.add(make_core("a", Category::Det, DetKind::Indef, {}));
  lex.add(make_core("every", Category::Det, DetKind::Univ, {}));
  lex.add(make_core("the", Category::Det, DetKind::Def, {}));
  lex.add(make_core("who", Category::Rel, DetKind::Indef, {}));
  lex.add(make_core("doesnt", Category::Neg, DetKind::Indef, {}));
  lex.add(make_core("he", Category::Pro, DetKind::Indef, {{"gender", "m"}}));
  lex.add(make_core("she", Category::Pro, DetKind::Indef, {{"gender", "f"}}));
  lex.add(make_core("it", Category::Pro, DetKind::Indef, {{"gender", "n"}}));
  lex.add(make_core("his", Category::Poss, DetKind::Indef, {{"gender", "m"}}));
  lex.add(make_core("her", Category::Poss, DetKind::Indef, {{"gender", "f"}}));
  return lex;
}

void Lexicon::add(LexEntry entry) {
  auto it = entries_.find(entry.word);
  if (it != entries_.end() && it->second.category != entry.category) {
    throw LexiconError("duplicate word '" + entry.word + "' with different category");
  }
  entries_[entry.word] = std::move(entry);
}

const LexEntry* Lexicon::lookup(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon load_lexicon(const std::string& text) {
  Lexicon lex = Lexicon::core();
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, '\t')) fields.push_back(field);
    if (fields.size() != 4) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": expected 4 tab-separated fields");
    }
    LexEntry entry;
    entry.word = fields[0];
    if (entry.word.empty() ||
        !std::all_of(entry.word.begin(), entry.word.end(),
                     [](char c) { return std::islower(static_cast<unsigned char>(c)); })) {
      throw LexiconError("line " + std::to_string(line_no) + ": word must be lowercase alphabetic");
    }
    auto cat = category_from_string(fields[1]);
    if (!cat) {
      throw LexiconError("line " + std::to_string(line_no) + ": unknown category " + fields[1]);
    }
    entry.category = *cat;
    entry.symbol = fields[2] == "-" ? "" : fields[2];
    if (entry.category == Category::Det) {
      if (fields[2] == "indef") entry.det = DetKind::Indef;
      else if (fields[2] == "univ") entry.det = DetKind::Univ;
      else if (fields[2] == "def") entry.det = DetKind::Def;
      else throw LexiconError("line " + std::to_string(line_no) + ": unknown determiner kind " + fields[2]);
      entry.symbol.clear();
    }
    entry.features = parse_features(fields[3], entry.word);
    lex.add(std::move(entry));
  }
  return lex;
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '.') {
      tokens.push_back(Token{".", i});
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      std::string word;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
        ++i;
      }
      tokens.push_back(Token{std::move(word), start});
      continue;
    }
    throw InvalidCharacterError(c, i);
  }
  return tokens;
}

namespace {

// All-parses recursive descent over one sentence segment. Alternatives are
// tried in grammar order, so the first complete parse is the first under a
// leftmost-derivation ordering. `farthest` tracks the deepest failure for
// error reporting.
class SentenceParser {
 public:
  SentenceParser(const std::vector<Token>& tokens, std::size_t begin, std::size_t end,
                 const Lexicon& lexicon)
      : tokens_(tokens), begin_(begin), end_(end), lexicon_(lexicon), farthest_(begin) {}

  ParsedSentence parse_sentence() {
    for (std::size_t i = begin_; i < end_; ++i) {
      if (!lexicon_.lookup(tokens_[i].text)) {
        throw UnknownWordError(tokens_[i].text, i);
      }
    }
    std::vector<std::pair<SyntaxTree, std::size_t>> results = parse_s(begin_);
    std::vector<SyntaxTree> complete;
    for (auto& [tree, next] : results) {
      if (next == end_) complete.push_back(std::move(tree));
    }
    if (complete.empty()) {
      throw ParseError("cannot parse sentence", farthest_);
    }
    return ParsedSentence{std::move(complete.front()), complete.size(), begin_};
  }

 private:
  using Parses = std::vector<std::pair<SyntaxTree, std::size_t>>;

  const LexEntry* at(std::size_t i, Category cat) {
    if (i >= end_) return nullptr;
    const LexEntry* e = lexicon_.lookup(tokens_[i].text);
    if (!e || e->category != cat) return nullptr;
    return e;
  }

  void fail_at(std::size_t i) { farthest_ = std::max(farthest_, std::min(i, end_)); }

  SyntaxTree leaf(const LexEntry& e) {
    SyntaxTree t;
    t.label = to_string(e.category);
    t.leaf = e;
    return t;
  }

  static SyntaxTree node(std::string label, std::vector<SyntaxTree> children) {
    SyntaxTree t;
    t.label = std::move(label);
    t.children = std::move(children);
    return t;
  }

  Parses parse_s(std::size_t i) {
    Parses out;
    for (auto& [np, after_np] : parse_np(i)) {
      for (auto& [vp, after_vp] : parse_vp(after_np)) {
        out.emplace_back(node("S", {np, vp}), after_vp);
      }
    }
    return out;
  }

  Parses parse_np(std::size_t i) {
    Parses out;
    if (const LexEntry* det = at(i, Category::Det)) {
      for (auto& [nbar, next] : parse_nbar(i + 1)) {
        out.emplace_back(node("NP", {leaf(*det), nbar}), next);
      }
    }
    if (const LexEntry* pn = at(i, Category::PN)) {
      out.emplace_back(node("NP", {leaf(*pn)}), i + 1);
    }
    if (const LexEntry* pro = at(i, Category::Pro)) {
      out.emplace_back(node("NP", {leaf(*pro)}), i + 1);
    }
    if (const LexEntry* poss = at(i, Category::Poss)) {
      if (const LexEntry* nrel = at(i + 1, Category::Nrel)) {
        out.emplace_back(node("NP", {leaf(*poss), leaf(*nrel)}), i + 2);
      } else {
        fail_at(i + 1);
      }
    }
    if (out.empty()) fail_at(i);
    return out;
  }

  Parses parse_nbar(std::size_t i) {
    Parses out;
    const LexEntry* n = at(i, Category::N);
    if (!n) {
      fail_at(i);
      return out;
    }
    out.emplace_back(node("Nbar", {leaf(*n)}), i + 1);
    if (const LexEntry* rel = at(i + 1, Category::Rel)) {
      for (auto& [vp, next] : parse_vp(i + 2)) {
        out.emplace_back(node("Nbar", {leaf(*n), leaf(*rel), vp}), next);
      }
    }
    return out;
  }

  Parses parse_vp(std::size_t i) {
    Parses out;
    if (const LexEntry* vi = at(i, Category::Vi)) {
      out.emplace_back(node("VP", {leaf(*vi)}), i + 1);
    }
    if (const LexEntry* vt = at(i, Category::Vt)) {
      for (auto& [np, next] : parse_np(i + 1)) {
        out.emplace_back(node("VP", {leaf(*vt), np}), next);
      }
    }
    if (const LexEntry* neg = at(i, Category::Neg)) {
      for (auto& [vp, next] : parse_vp(i + 1)) {
        out.emplace_back(node("VP", {leaf(*neg), vp}), next);
      }
    }
    if (out.empty()) fail_at(i);
    return out;
  }

  const std::vector<Token>& tokens_;
  std::size_t begin_;
  std::size_t end_;
  const Lexicon& lexicon_;
  std::size_t farthest_;
};

}  // namespace

std::vector<ParsedSentence> parse(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  std::vector<ParsedSentence> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= tokens.size(); ++i) {
    bool at_separator = i < tokens.size() && tokens[i].text == ".";
    bool at_end = i == tokens.size();
    if (!at_separator && !at_end) continue;
    if (start == i) {
      if (at_end) break;  // trailing separator
      throw ParseError("empty sentence", i);
    }
    sentences.push_back(SentenceParser(tokens, start, i, lexicon).parse_sentence());
    start = i + 1;
  }
  return sentences;
}

namespace {

const LexEntry& entry(const SyntaxTree& t) { return *t.leaf; }

bool is_cat(const SyntaxTree& t, Category c) {
  return t.leaf.has_value() && t.leaf->category == c;
}

// Head noun of an Nbar (its first child is always the N).
const LexEntry& nbar_head(const SyntaxTree& nbar) { return entry(nbar.child(0)); }

std::string surface(const SyntaxTree& t) {
  if (t.leaf) return t.leaf->word;
  std::string out;
  for (const SyntaxTree& c : t.children) {
    if (!out.empty()) out += " ";
    out += surface(c);
  }
  return out;
}

// Statically expressible content of a relative clause, for definite
// descriptors: an intransitive predicate, or a transitive whose object is a
// proper name. Anything else (quantified or pronominal objects, negation)
// cannot be captured in a pattern and is omitted from the presupposed
// descriptor; the head noun still is.
void collect_extras(const SyntaxTree& vp, std::vector<PresupPattern>& out) {
  if (vp.children.size() == 1 && is_cat(vp.child(0), Category::Vi)) {
    out.push_back(PresupPattern{entry(vp.child(0)).symbol, {std::nullopt}});
    return;
  }
  if (vp.children.size() == 2 && is_cat(vp.child(0), Category::Vt)) {
    const SyntaxTree& np = vp.child(1);
    if (np.children.size() == 1 && is_cat(np.child(0), Category::PN)) {
      out.push_back(PresupPattern{
          entry(vp.child(0)).symbol,
          {std::nullopt, Term::constant(entry(np.child(0)).symbol)}});
    }
  }
}

Presupposition definite_presupposition(const SyntaxTree& det, const SyntaxTree& nbar) {
  Presupposition p;
  p.descriptor = PresupPattern{nbar_head(nbar).symbol, {std::nullopt}};
  if (nbar.children.size() == 3) collect_extras(nbar.child(2), p.extras);
  p.features = nbar_head(nbar).features;
  p.source = entry(det).word + " " + surface(nbar);
  return p;
}

}  // namespace

VpDen denote_nbar(const SyntaxTree& nbar) {
  const LexEntry& head = nbar_head(nbar);
  VpDen noun = [symbol = head.symbol](const Term& t) {
    return Comp::pure(Formula::pred(symbol, {t}));
  };
  if (nbar.children.size() == 1) return noun;
  // N Rel VP: conjoin the noun with the relative clause body.
  VpDen rel_vp = denote_vp(nbar.child(2));
  return [noun, rel_vp](const Term& t) {
    return seq(noun(t), [rel_vp, t](const Formula& a) {
      return seq(rel_vp(t), [a](const Formula& b) {
        return Comp::pure(Formula::conj(a, b));
      });
    });
  };
}

NpDen denote_np(const SyntaxTree& np) {
  const SyntaxTree& first = np.child(0);
  if (is_cat(first, Category::Det)) {
    const SyntaxTree& nbar = np.child(1);
    const LexEntry& head = nbar_head(nbar);
    switch (entry(first).det) {
      case DetKind::Indef: {
        VpDen restrictor = denote_nbar(nbar);
        FeatureSet features = head.features;
        std::string hint = head.symbol;
        return [restrictor, features, hint](const VpDen& k) {
          return perform_term(IntroduceOp{features, hint, std::nullopt},
                              [restrictor, k](const Term& t) {
                                return seq(restrictor(t), [k, t](const Formula& r) {
                                  return seq(k(t), [r](const Formula& n) {
                                    return Comp::pure(Formula::conj(r, n));
                                  });
                                });
                              });
        };
      }
      case DetKind::Univ: {
        VpDen restrictor = denote_nbar(nbar);
        FeatureSet features = head.features;
        std::string hint = head.symbol;
        return [restrictor, features, hint](const VpDen& k) {
          return perform_formula(QuantifyOp{features, hint, restrictor, k},
                                 [](const Formula& f) { return Comp::pure(f); });
        };
      }
      case DetKind::Def: {
        Presupposition p = definite_presupposition(first, nbar);
        return [p](const VpDen& k) {
          return perform_term(PresupposeOp{p}, [k](const Term& t) { return k(t); });
        };
      }
    }
  }
  if (is_cat(first, Category::PN)) {
    const LexEntry& pn = entry(first);
    IntroduceOp op{pn.features, pn.symbol, pn.symbol};
    return [op](const VpDen& k) {
      return perform_term(op, [k](const Term& t) { return k(t); });
    };
  }
  if (is_cat(first, Category::Pro)) {
    SelectOp op{entry(first).features};
    return [op](const VpDen& k) {
      return perform_term(op, [k](const Term& t) { return k(t); });
    };
  }
  // Poss Nrel: resolve the possessor, then presuppose the relational noun
  // with the possessor in its second slot.
  const LexEntry& poss = entry(first);
  const LexEntry& nrel = entry(np.child(1));
  SelectOp select{poss.features};
  std::string symbol = nrel.symbol;
  FeatureSet features = nrel.features;
  std::string source = poss.word + " " + nrel.word;
  return [select, symbol, features, source](const VpDen& k) {
    return perform_term(select, [symbol, features, source, k](const Term& possessor) {
      Presupposition p;
      p.descriptor = PresupPattern{symbol, {std::nullopt, possessor}};
      p.features = features;
      p.source = source;
      return perform_term(PresupposeOp{p}, [k](const Term& t) { return k(t); });
    });
  };
}

VpDen denote_vp(const SyntaxTree& vp) {
  const SyntaxTree& first = vp.child(0);
  if (is_cat(first, Category::Vi)) {
    std::string symbol = entry(first).symbol;
    return [symbol](const Term& subject) {
      return Comp::pure(Formula::pred(symbol, {subject}));
    };
  }
  if (is_cat(first, Category::Vt)) {
    std::string symbol = entry(first).symbol;
    NpDen object = denote_np(vp.child(1));
    return [symbol, object](const Term& subject) {
      return object([symbol, subject](const Term& obj) {
        return Comp::pure(Formula::pred(symbol, {subject, obj}));
      });
    };
  }
  // Neg VP: the body runs behind a barrier; the handler resumes with the
  // negated, locally closed formula.
  VpDen body = denote_vp(vp.child(1));
  return [body](const Term& subject) {
    auto inner = std::make_shared<const Comp>(body(subject));
    return perform_formula(BarrierOp{inner}, [](const Formula& f) { return Comp::pure(f); });
  };
}

Comp denote_sentence(const SyntaxTree& s) {
  NpDen np = denote_np(s.child(0));
  VpDen vp = denote_vp(s.child(1));
  return np(vp);
}

Comp denote_discourse(const std::vector<ParsedSentence>& sentences) {
  Comp acc = Comp::pure(Formula::truth());
  for (const ParsedSentence& sentence : sentences) {
    Comp den = denote_sentence(sentence.tree);
    acc = seq(acc, [den](const Formula& p) {
      return seq(den, [p](const Formula& q) { return Comp::pure(Formula::conj(p, q)); });
    });
  }
  return acc;
}

}  // namespace prag
