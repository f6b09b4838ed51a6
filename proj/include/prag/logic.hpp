#ifndef PRAG_LOGIC_HPP
#define PRAG_LOGIC_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace prag {

// An individual-denoting term: a variable (emitted as x1, x2, ...) or a
// constant from the lexicon. The two namespaces are kept disjoint by the
// naming convention, not by the type.
class Term {
 public:
  enum class Kind { Var, Const };

  static Term var(std::string name) { return Term(Kind::Var, std::move(name)); }
  static Term constant(std::string name) { return Term(Kind::Const, std::move(name)); }

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_const() const { return kind_ == Kind::Const; }
  const std::string& name() const { return name_; }

  bool operator==(const Term& other) const { return kind_ == other.kind_ && name_ == other.name_; }
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    return name_ < other.name_;
  }

 private:
  Term(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  Kind kind_;
  std::string name_;
};

// Immutable first-order formula. Nodes are shared, so copies are cheap and
// values are safe to pass across threads.
class Formula {
 public:
  enum class Kind { Pred, And, Or, Not, Implies, Exists, Forall, Truth, Falsity };

  Formula() : Formula(truth()) {}

  static Formula pred(std::string name, std::vector<Term> args);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula negate(Formula body);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula truth();
  static Formula falsity();

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  // Pred accessors.
  const std::string& pred_name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  // And / Or / Implies accessors.
  Formula lhs() const { return Formula(node_->a); }
  Formula rhs() const { return Formula(node_->b); }

  // Not / Exists / Forall accessors.
  Formula body() const { return Formula(node_->a); }
  const std::string& bound_var() const { return node_->name; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    std::string name;        // predicate name or bound variable
    std::vector<Term> args;  // Pred only
    NodePtr a;               // left child / body
    NodePtr b;               // right child
  };

  explicit Formula(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

// Variables occurring free in f.
std::set<std::string> free_vars(const Formula& f);

// Capture-avoiding substitution of t for free occurrences of v. Bound
// variables are renamed to fresh x<k> names when they would capture t.
Formula substitute(const Formula& f, const std::string& v, const Term& t);

// Identity up to consistent renaming of bound variables.
bool alpha_eq(const Formula& f, const Formula& g);

// Concrete syntax. parse_formula(pretty(f)) is alpha-equivalent to f.
std::string pretty(const Formula& f);

// Parses the concrete syntax; throws SyntaxError with a byte offset on
// malformed input. An identifier bound by an enclosing quantifier is a
// variable; otherwise names of shape [t-z][0-9]* are free variables and
// everything else is a constant.
Formula parse_formula(const std::string& text);

// Predicate name -> arity for every predicate in f; throws EvalError if a
// name is used at two different arities.
std::map<std::string, int> predicate_arities(const Formula& f);

// Constants occurring anywhere in f.
std::set<std::string> constants(const Formula& f);

// True iff the name is variable-shaped per the concrete-syntax convention.
bool is_variable_name(const std::string& name);

}  // namespace prag

#endif  // PRAG_LOGIC_HPP
