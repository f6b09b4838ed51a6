#ifndef PRAG_MODELS_HPP
#define PRAG_MODELS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prag/logic.hpp"

namespace prag {

// Finite first-order model: a nonempty domain of named entities plus an
// extension per predicate. Constants denote via an explicit pin when present,
// otherwise by sharing a name with a domain entity.
struct Model {
  std::vector<std::string> domain;
  struct PredInterp {
    std::optional<int> arity;  // unset for an extension declared empty via '-'
    std::set<std::vector<std::string>> tuples;
  };
  std::map<std::string, PredInterp> preds;
  std::map<std::string, std::string> consts;
};

using Assignment = std::map<std::string, std::string>;

// Standard Tarskian truth. Throws EvalError on an unbound free variable,
// unknown predicate or constant, or arity mismatch.
bool eval(const Model& m, const Assignment& g, const Formula& f);

// Model file format: line-based, '#' comments; first line `domain: e1 e2 ...`;
// then `name: tup1 tup2 ...` with comma-joined tuples, or `name: -` for an
// empty extension.
Model parse_model(const std::string& text);

// Renders a model back into the file format (domain line, then predicates in
// name order).
std::string pretty(const Model& m);

struct Signature {
  std::vector<std::pair<std::string, int>> preds;
};

struct EquivalenceResult {
  bool equivalent;
  std::optional<Model> countermodel;  // first disagreement in enumeration order
};

// Enumerates every model over the signature with domain e1..e<size>; each
// constant is pinned to every domain entity in turn. Constants vary slowest,
// then predicate extensions in signature order (the last predicate's mask
// increments fastest). Returns the number of models visited; stops early if
// the visitor returns false.
std::uint64_t enumerate_models(const Signature& sig, const std::vector<std::string>& constant_names,
                               int domain_size, const std::function<bool(const Model&)>& visit);

// Number of models enumerate_models visits for one domain size.
std::uint64_t count_models(const Signature& sig, int domain_size, int num_constants = 0);

// True iff eval agrees on every model over the signature with domain size
// <= max_size. Both formulas must be closed and use only signature
// predicates; constants occurring in either formula are pinned per model.
EquivalenceResult equivalent_up_to(const Formula& f, const Formula& g, const Signature& sig,
                                   int max_size);

}  // namespace prag

#endif  // PRAG_MODELS_HPP
