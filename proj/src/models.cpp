#include "prag/models.hpp"

#include <algorithm>
#include <sstream>

#include "prag/errors.hpp"

namespace prag {

namespace {

std::string resolve(const Model& m, const Assignment& g, const Term& t) {
  if (t.is_var()) {
    auto it = g.find(t.name());
    if (it == g.end()) throw EvalError("unbound free variable " + t.name());
    return it->second;
  }
  auto pin = m.consts.find(t.name());
  if (pin != m.consts.end()) return pin->second;
  if (std::find(m.domain.begin(), m.domain.end(), t.name()) != m.domain.end()) return t.name();
  throw EvalError("unknown constant " + t.name());
}

bool eval_rec(const Model& m, Assignment& g, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
      return true;
    case Formula::Kind::Falsity:
      return false;
    case Formula::Kind::Pred: {
      auto it = m.preds.find(f.pred_name());
      if (it == m.preds.end()) throw EvalError("unknown predicate " + f.pred_name());
      const Model::PredInterp& interp = it->second;
      int arity = static_cast<int>(f.args().size());
      if (interp.arity && *interp.arity != arity) {
        throw EvalError("predicate " + f.pred_name() + " has arity " +
                        std::to_string(*interp.arity) + ", applied to " + std::to_string(arity) +
                        " arguments");
      }
      std::vector<std::string> tuple;
      tuple.reserve(f.args().size());
      for (const Term& t : f.args()) tuple.push_back(resolve(m, g, t));
      return interp.tuples.count(tuple) > 0;
    }
    case Formula::Kind::Not:
      return !eval_rec(m, g, f.body());
    case Formula::Kind::And:
      return eval_rec(m, g, f.lhs()) && eval_rec(m, g, f.rhs());
    case Formula::Kind::Or:
      return eval_rec(m, g, f.lhs()) || eval_rec(m, g, f.rhs());
    case Formula::Kind::Implies:
      return !eval_rec(m, g, f.lhs()) || eval_rec(m, g, f.rhs());
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const std::string& v = f.bound_var();
      auto previous = g.find(v) == g.end() ? std::optional<std::string>{}
                                           : std::optional<std::string>{g[v]};
      bool is_exists = f.is(Formula::Kind::Exists);
      bool result = !is_exists;
      for (const std::string& e : m.domain) {
        g[v] = e;
        bool b = eval_rec(m, g, f.body());
        if (is_exists && b) { result = true; break; }
        if (!is_exists && !b) { result = false; break; }
      }
      if (previous) g[v] = *previous; else g.erase(v);
      return result;
    }
  }
  return false;
}

}  // namespace

bool eval(const Model& m, const Assignment& g, const Formula& f) {
  if (m.domain.empty()) throw EvalError("empty domain");
  Assignment scratch = g;
  return eval_rec(m, scratch, f);
}

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

std::vector<std::string> split_tuple(const std::string& s) {
  std::vector<std::string> out;
  std::string part;
  for (char c : s) {
    if (c == ',') {
      out.push_back(part);
      part.clear();
    } else {
      part += c;
    }
  }
  out.push_back(part);
  return out;
}

}  // namespace

Model parse_model(const std::string& text) {
  Model m;
  std::istringstream in(text);
  std::string raw;
  bool have_domain = false;
  std::set<std::string> domain_set;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw ModelError("expected 'name: ...' in line: " + raw);
    std::string name = line.substr(0, colon);
    name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == ' ' || c == '\t'; }),
               name.end());
    std::vector<std::string> items = split_ws(line.substr(colon + 1));
    if (!have_domain) {
      if (name != "domain") throw ModelError("first declaration must be the domain");
      if (items.empty()) throw ModelError("empty domain");
      for (const std::string& e : items) {
        if (!domain_set.insert(e).second) throw ModelError("duplicate entity " + e);
        m.domain.push_back(e);
      }
      have_domain = true;
      continue;
    }
    if (name == "domain") throw ModelError("duplicate domain declaration");
    if (m.preds.count(name)) throw ModelError("duplicate predicate declaration " + name);
    Model::PredInterp interp;
    if (items.size() == 1 && items[0] == "-") {
      m.preds.emplace(name, std::move(interp));
      continue;
    }
    if (items.empty()) throw ModelError("predicate " + name + " has no tuples; use '-' for empty");
    for (const std::string& item : items) {
      std::vector<std::string> tuple = split_tuple(item);
      for (const std::string& e : tuple) {
        if (e.empty()) throw ModelError("malformed tuple '" + item + "' for " + name);
        if (!domain_set.count(e)) throw ModelError("entity " + e + " not in domain");
      }
      int arity = static_cast<int>(tuple.size());
      if (!interp.arity) interp.arity = arity;
      if (*interp.arity != arity) {
        throw ModelError("predicate " + name + " mixes arities " + std::to_string(*interp.arity) +
                         " and " + std::to_string(arity));
      }
      interp.tuples.insert(std::move(tuple));
    }
    m.preds.emplace(name, std::move(interp));
  }
  if (!have_domain) throw ModelError("empty domain");
  return m;
}

std::string pretty(const Model& m) {
  std::string out = "domain:";
  for (const std::string& e : m.domain) out += " " + e;
  out += "\n";
  for (const auto& [name, interp] : m.preds) {
    out += name + ":";
    if (interp.tuples.empty()) {
      out += " -";
    } else {
      for (const auto& tuple : interp.tuples) {
        out += " ";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (i) out += ",";
          out += tuple[i];
        }
      }
    }
    out += "\n";
  }
  for (const auto& [name, entity] : m.consts) {
    out += "# const " + name + " = " + entity + "\n";
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>> all_tuples(const std::vector<std::string>& domain,
                                                 int arity) {
  std::vector<std::vector<std::string>> out;
  std::vector<int> idx(arity, 0);
  const int n = static_cast<int>(domain.size());
  while (true) {
    std::vector<std::string> tuple;
    tuple.reserve(arity);
    for (int i : idx) tuple.push_back(domain[i]);
    out.push_back(std::move(tuple));
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

std::uint64_t enumerate_models(const Signature& sig, const std::vector<std::string>& constant_names,
                               int domain_size, const std::function<bool(const Model&)>& visit) {
  std::vector<std::string> domain;
  for (int i = 1; i <= domain_size; ++i) domain.push_back("e" + std::to_string(i));

  std::vector<std::vector<std::vector<std::string>>> tuple_lists;
  for (const auto& [name, arity] : sig.preds) {
    if (arity < 1) throw EvalError("signature arity must be positive for " + name);
    auto tuples = all_tuples(domain, arity);
    if (tuples.size() > 62) {
      throw EvalError("extension space too large for predicate " + name);
    }
    tuple_lists.push_back(std::move(tuples));
  }

  std::uint64_t visited = 0;
  std::vector<int> const_idx(constant_names.size(), 0);
  while (true) {
    Model base;
    base.domain = domain;
    for (std::size_t i = 0; i < constant_names.size(); ++i) {
      base.consts[constant_names[i]] = domain[const_idx[i]];
    }

    std::vector<std::uint64_t> masks(sig.preds.size(), 0);
    while (true) {
      Model m = base;
      for (std::size_t p = 0; p < sig.preds.size(); ++p) {
        Model::PredInterp interp;
        interp.arity = sig.preds[p].second;
        for (std::size_t b = 0; b < tuple_lists[p].size(); ++b) {
          if (masks[p] >> b & 1) interp.tuples.insert(tuple_lists[p][b]);
        }
        m.preds.emplace(sig.preds[p].first, std::move(interp));
      }
      ++visited;
      if (!visit(m)) return visited;

      // Increment the mask odometer; the last predicate varies fastest.
      int pos = static_cast<int>(sig.preds.size()) - 1;
      while (pos >= 0) {
        if (++masks[pos] < (std::uint64_t{1} << tuple_lists[pos].size())) break;
        masks[pos--] = 0;
      }
      if (pos < 0) break;
    }

    int pos = static_cast<int>(constant_names.size()) - 1;
    while (pos >= 0 && ++const_idx[pos] == domain_size) const_idx[pos--] = 0;
    if (pos < 0) break;
  }
  return visited;
}

std::uint64_t count_models(const Signature& sig, int domain_size, int num_constants) {
  std::uint64_t count = 1;
  for (int i = 0; i < num_constants; ++i) count *= static_cast<std::uint64_t>(domain_size);
  for (const auto& [name, arity] : sig.preds) {
    std::uint64_t tuples = 1;
    for (int i = 0; i < arity; ++i) tuples *= static_cast<std::uint64_t>(domain_size);
    count <<= tuples;
  }
  return count;
}

EquivalenceResult equivalent_up_to(const Formula& f, const Formula& g, const Signature& sig,
                                   int max_size) {
  if (!free_vars(f).empty() || !free_vars(g).empty()) {
    throw EvalError("equivalence oracle requires closed formulas");
  }
  std::map<std::string, int> declared(sig.preds.begin(), sig.preds.end());
  for (const Formula* h : {&f, &g}) {
    for (const auto& [name, arity] : predicate_arities(*h)) {
      auto it = declared.find(name);
      if (it == declared.end() || it->second != arity) {
        throw EvalError("predicate " + name + "/" + std::to_string(arity) +
                        " is not in the signature");
      }
    }
  }
  std::set<std::string> const_set = constants(f);
  const_set.merge(constants(g));
  std::vector<std::string> const_names(const_set.begin(), const_set.end());

  for (int size = 1; size <= max_size; ++size) {
    std::optional<Model> counter;
    enumerate_models(sig, const_names, size, [&](const Model& m) {
      if (eval(m, {}, f) != eval(m, {}, g)) {
        counter = m;
        return false;
      }
      return true;
    });
    if (counter) return {false, std::move(counter)};
  }
  return {true, std::nullopt};
}

}  // namespace prag
