#include "prag/logic.hpp"

#include <cctype>
#include <utility>

#include "prag/errors.hpp"

namespace prag {

Formula Formula::pred(std::string name, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Pred, std::move(name), std::move(args), nullptr, nullptr}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, "", {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, "", {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::negate(Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Not, "", {}, std::move(body.node_), nullptr}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, "", {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Exists, std::move(var), {}, std::move(body.node_), nullptr}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Forall, std::move(var), {}, std::move(body.node_), nullptr}));
}

Formula Formula::truth() {
  static const Formula instance(std::make_shared<const Node>(Node{Kind::Truth, "", {}, nullptr, nullptr}));
  return instance;
}

Formula Formula::falsity() {
  static const Formula instance(std::make_shared<const Node>(Node{Kind::Falsity, "", {}, nullptr, nullptr}));
  return instance;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Truth:
    case Kind::Falsity:
      return true;
    case Kind::Pred:
      return node_->name == other.node_->name && node_->args == other.node_->args;
    case Kind::Not:
      return body() == other.body();
    case Kind::Exists:
    case Kind::Forall:
      return node_->name == other.node_->name && body() == other.body();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return;
    case Formula::Kind::Pred:
      for (const Term& t : f.args()) {
        if (t.is_var() && !bound.count(t.name())) out.insert(t.name());
      }
      return;
    case Formula::Kind::Not:
      collect_free(f.body(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool was_bound = bound.count(f.bound_var()) > 0;
      bound.insert(f.bound_var());
      collect_free(f.body(), bound, out);
      if (!was_bound) bound.erase(f.bound_var());
      return;
    }
  }
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return;
    case Formula::Kind::Pred:
      for (const Term& t : f.args()) out.insert(t.name());
      return;
    case Formula::Kind::Not:
      collect_names(f.body(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_names(f.lhs(), out);
      collect_names(f.rhs(), out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(f.bound_var());
      collect_names(f.body(), out);
      return;
  }
}

std::string fresh_name(std::set<std::string>& avoid) {
  for (int k = 1;; ++k) {
    std::string candidate = "x" + std::to_string(k);
    if (!avoid.count(candidate)) {
      avoid.insert(candidate);
      return candidate;
    }
  }
}

Formula subst(const Formula& f, const std::string& v, const Term& t, std::set<std::string>& avoid) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return f;
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& a : f.args()) {
        args.push_back(a.is_var() && a.name() == v ? t : a);
      }
      return Formula::pred(f.pred_name(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negate(subst(f.body(), v, t, avoid));
    case Formula::Kind::And:
      return Formula::conj(subst(f.lhs(), v, t, avoid), subst(f.rhs(), v, t, avoid));
    case Formula::Kind::Or:
      return Formula::disj(subst(f.lhs(), v, t, avoid), subst(f.rhs(), v, t, avoid));
    case Formula::Kind::Implies:
      return Formula::implies(subst(f.lhs(), v, t, avoid), subst(f.rhs(), v, t, avoid));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const std::string& binder = f.bound_var();
      if (binder == v) return f;  // v is shadowed; no free occurrences below
      Formula body = f.body();
      std::string name = binder;
      if (t.is_var() && t.name() == binder && free_vars(body).count(v)) {
        // The incoming term would be captured; rename the binder first.
        name = fresh_name(avoid);
        body = subst(body, binder, Term::var(name), avoid);
      }
      Formula new_body = subst(body, v, t, avoid);
      return f.kind() == Formula::Kind::Exists ? Formula::exists(name, std::move(new_body))
                                               : Formula::forall(name, std::move(new_body));
    }
  }
  return f;
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& v, const Term& t) {
  std::set<std::string> avoid;
  collect_names(f, avoid);
  avoid.insert(t.name());
  avoid.insert(v);
  return subst(f, v, t, avoid);
}

namespace {

bool alpha(const Formula& f, const Formula& g, std::map<std::string, int>& fb,
           std::map<std::string, int>& gb, int depth) {
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return true;
    case Formula::Kind::Pred: {
      if (f.pred_name() != g.pred_name() || f.args().size() != g.args().size()) return false;
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        const Term& a = f.args()[i];
        const Term& b = g.args()[i];
        if (a.kind() != b.kind()) return false;
        if (a.is_const()) {
          if (a.name() != b.name()) return false;
          continue;
        }
        auto ia = fb.find(a.name());
        auto ib = gb.find(b.name());
        if ((ia == fb.end()) != (ib == gb.end())) return false;
        if (ia == fb.end()) {
          if (a.name() != b.name()) return false;  // both free: names must agree
        } else if (ia->second != ib->second) {
          return false;  // bound at different binders
        }
      }
      return true;
    }
    case Formula::Kind::Not:
      return alpha(f.body(), g.body(), fb, gb, depth);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha(f.lhs(), g.lhs(), fb, gb, depth) && alpha(f.rhs(), g.rhs(), fb, gb, depth);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      auto old_f = fb.find(f.bound_var()) == fb.end()
                       ? std::pair<bool, int>{false, 0}
                       : std::pair<bool, int>{true, fb[f.bound_var()]};
      auto old_g = gb.find(g.bound_var()) == gb.end()
                       ? std::pair<bool, int>{false, 0}
                       : std::pair<bool, int>{true, gb[g.bound_var()]};
      fb[f.bound_var()] = depth;
      gb[g.bound_var()] = depth;
      bool result = alpha(f.body(), g.body(), fb, gb, depth + 1);
      if (old_f.first) fb[f.bound_var()] = old_f.second; else fb.erase(f.bound_var());
      if (old_g.first) gb[g.bound_var()] = old_g.second; else gb.erase(g.bound_var());
      return result;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const Formula& f, const Formula& g) {
  std::map<std::string, int> fb, gb;
  return alpha(f, g, fb, gb, 0);
}

namespace {

// Binary connectives always print their own parentheses; quantifiers extend
// maximally right, so a quantified operand of a connective or negation needs
// explicit wrapping to survive the round trip.
std::string render(const Formula& f);

std::string render_operand(const Formula& f) {
  if (f.is(Formula::Kind::Exists) || f.is(Formula::Kind::Forall)) {
    return "(" + render(f) + ")";
  }
  return render(f);
}

std::string render(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
      return "true";
    case Formula::Kind::Falsity:
      return "false";
    case Formula::Kind::Pred: {
      std::string out = f.pred_name() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ",";
        out += f.args()[i].name();
      }
      return out + ")";
    }
    case Formula::Kind::Not:
      return "~" + render_operand(f.body());
    case Formula::Kind::And:
      return "(" + render_operand(f.lhs()) + " & " + render_operand(f.rhs()) + ")";
    case Formula::Kind::Or:
      return "(" + render_operand(f.lhs()) + " | " + render_operand(f.rhs()) + ")";
    case Formula::Kind::Implies:
      return "(" + render_operand(f.lhs()) + " -> " + render_operand(f.rhs()) + ")";
    case Formula::Kind::Exists:
      return "exists " + f.bound_var() + ". " + render(f.body());
    case Formula::Kind::Forall:
      return "forall " + f.bound_var() + ". " + render(f.body());
  }
  return "";
}

struct FormulaToken {
  enum class Kind { Ident, LParen, RParen, Comma, Dot, Amp, Bar, Arrow, Tilde, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

class FormulaLexer {
 public:
  explicit FormulaLexer(const std::string& text) : text_(text) { advance(); }

  const FormulaToken& peek() const { return current_; }

  FormulaToken take() {
    FormulaToken t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = {FormulaToken::Kind::End, "", text_.size()};
      return;
    }
    std::size_t start = pos_;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {FormulaToken::Kind::Ident, text_.substr(start, pos_ - start), start};
      return;
    }
    switch (c) {
      case '(': current_ = {FormulaToken::Kind::LParen, "(", start}; ++pos_; return;
      case ')': current_ = {FormulaToken::Kind::RParen, ")", start}; ++pos_; return;
      case ',': current_ = {FormulaToken::Kind::Comma, ",", start}; ++pos_; return;
      case '.': current_ = {FormulaToken::Kind::Dot, ".", start}; ++pos_; return;
      case '&': current_ = {FormulaToken::Kind::Amp, "&", start}; ++pos_; return;
      case '|': current_ = {FormulaToken::Kind::Bar, "|", start}; ++pos_; return;
      case '~': current_ = {FormulaToken::Kind::Tilde, "~", start}; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          current_ = {FormulaToken::Kind::Arrow, "->", start};
          pos_ += 2;
          return;
        }
        throw SyntaxError("expected '->'", start);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  FormulaToken current_;
};

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : lexer_(text) {}

  Formula parse() {
    Formula f = parse_implies();
    const FormulaToken& t = lexer_.peek();
    if (t.kind != FormulaToken::Kind::End) {
      throw SyntaxError("unexpected trailing input '" + t.text + "'", t.offset);
    }
    return f;
  }

 private:
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lexer_.peek().kind == FormulaToken::Kind::Arrow) {
      lexer_.take();
      return Formula::implies(std::move(lhs), parse_implies());  // right associative
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (lexer_.peek().kind == FormulaToken::Kind::Bar) {
      lexer_.take();
      lhs = Formula::disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (lexer_.peek().kind == FormulaToken::Kind::Amp) {
      lexer_.take();
      lhs = Formula::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const FormulaToken& t = lexer_.peek();
    switch (t.kind) {
      case FormulaToken::Kind::Tilde:
        lexer_.take();
        return Formula::negate(parse_unary());
      case FormulaToken::Kind::LParen: {
        lexer_.take();
        Formula inner = parse_implies();
        expect(FormulaToken::Kind::RParen, "expected ')'");
        return inner;
      }
      case FormulaToken::Kind::Ident:
        if (t.text == "true") { lexer_.take(); return Formula::truth(); }
        if (t.text == "false") { lexer_.take(); return Formula::falsity(); }
        if (t.text == "exists" || t.text == "forall") return parse_quantifier();
        return parse_atom();
      default:
        throw SyntaxError("expected a formula, found '" + t.text + "'", t.offset);
    }
  }

  Formula parse_quantifier() {
    FormulaToken kw = lexer_.take();
    FormulaToken var = expect(FormulaToken::Kind::Ident, "expected a variable name");
    expect(FormulaToken::Kind::Dot, "expected '.' after the quantified variable");
    bound_.push_back(var.text);
    Formula body = parse_implies();  // quantifiers extend maximally right
    bound_.pop_back();
    return kw.text == "exists" ? Formula::exists(var.text, std::move(body))
                               : Formula::forall(var.text, std::move(body));
  }

  Formula parse_atom() {
    FormulaToken name = lexer_.take();
    expect(FormulaToken::Kind::LParen, "expected '(' after predicate name");
    std::vector<Term> args;
    args.push_back(parse_term());
    while (lexer_.peek().kind == FormulaToken::Kind::Comma) {
      lexer_.take();
      args.push_back(parse_term());
    }
    expect(FormulaToken::Kind::RParen, "expected ')'");
    return Formula::pred(name.text, std::move(args));
  }

  Term parse_term() {
    FormulaToken t = expect(FormulaToken::Kind::Ident, "expected a term");
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == t.text) return Term::var(t.text);
    }
    if (is_variable_name(t.text)) return Term::var(t.text);
    return Term::constant(t.text);
  }

  FormulaToken expect(FormulaToken::Kind kind, const std::string& message) {
    const FormulaToken& t = lexer_.peek();
    if (t.kind != kind) throw SyntaxError(message, t.offset);
    return lexer_.take();
  }

  FormulaLexer lexer_;
  std::vector<std::string> bound_;
};

}  // namespace

std::string pretty(const Formula& f) { return render(f); }

Formula parse_formula(const std::string& text) { return FormulaParser(text).parse(); }

bool is_variable_name(const std::string& name) {
  if (name.empty() || name[0] < 't' || name[0] > 'z') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

namespace {

void collect_arities(const Formula& f, std::map<std::string, int>& out) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return;
    case Formula::Kind::Pred: {
      int arity = static_cast<int>(f.args().size());
      auto [it, inserted] = out.emplace(f.pred_name(), arity);
      if (!inserted && it->second != arity) {
        throw EvalError("predicate " + f.pred_name() + " used at arities " +
                        std::to_string(it->second) + " and " + std::to_string(arity));
      }
      return;
    }
    case Formula::Kind::Not:
      collect_arities(f.body(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_arities(f.lhs(), out);
      collect_arities(f.rhs(), out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      collect_arities(f.body(), out);
      return;
  }
}

void collect_constants(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Pred:
      for (const Term& t : f.args()) {
        if (t.is_const()) out.insert(t.name());
      }
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      collect_constants(f.body(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_constants(f.lhs(), out);
      collect_constants(f.rhs(), out);
      return;
    default:
      return;
  }
}

}  // namespace

std::map<std::string, int> predicate_arities(const Formula& f) {
  std::map<std::string, int> out;
  collect_arities(f, out);
  return out;
}

std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  collect_constants(f, out);
  return out;
}

}  // namespace prag
