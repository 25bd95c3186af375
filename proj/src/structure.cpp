#include "ordkernel/structure.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace ordkernel {

std::size_t FiniteStructure::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw DomainError("no carrier element labeled '" + label + "'");
}

void FiniteStructure::validate() const {
  std::set<std::string> seen;
  for (const std::string& l : labels)
    if (!seen.insert(l).second) throw DomainError("duplicate carrier label '" + l + "'");
  const std::size_t n = labels.size();
  auto check_index = [n](std::size_t i) {
    if (i >= n) throw DomainError("tuple index out of carrier range");
  };
  for (const auto& [name, tuples] : relations) {
    std::optional<std::size_t> arity;
    for (const auto& t : tuples) {
      if (arity && *arity != t.size())
        throw DomainError("relation " + name + " mixes tuple arities");
      arity = t.size();
      for (std::size_t i : t) check_index(i);
    }
  }
  for (const auto& [name, graph] : functions) {
    std::optional<std::size_t> arity;
    for (const auto& [args, val] : graph) {
      if (arity && *arity != args.size())
        throw DomainError("function " + name + " mixes arities");
      arity = args.size();
      for (std::size_t i : args) check_index(i);
      check_index(val);
    }
  }
  for (const auto& [name, val] : constants) {
    (void)name;
    check_index(val);
  }
  for (const auto& [name, elems] : sorts) {
    (void)name;
    for (std::size_t i : elems) check_index(i);
  }
}

// ---------------------------------------------------------------------------
// JSON

namespace {
using nlohmann::json;
}

FiniteStructure structure_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad structure JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("carrier") || !j["carrier"].is_array())
    throw ParseError("structure JSON needs a carrier array");
  FiniteStructure m;
  try {
    for (const auto& l : j["carrier"]) m.labels.push_back(l.get<std::string>());
    auto idx = [&m](const json& l) { return m.index_of(l.get<std::string>()); };
    if (j.contains("sorts"))
      for (const auto& [name, arr] : j["sorts"].items())
        for (const auto& l : arr) m.sorts[name].insert(idx(l));
    if (j.contains("relations"))
      for (const auto& [name, tuples] : j["relations"].items()) {
        m.relations[name];
        for (const auto& tup : tuples) {
          std::vector<std::size_t> t;
          for (const auto& l : tup) t.push_back(idx(l));
          m.relations[name].insert(std::move(t));
        }
      }
    if (j.contains("functions"))
      for (const auto& [name, entries] : j["functions"].items()) {
        m.functions[name];
        for (const auto& e : entries) {
          std::vector<std::size_t> args;
          for (const auto& l : e.at("args")) args.push_back(idx(l));
          m.functions[name][std::move(args)] = idx(e.at("value"));
        }
      }
    if (j.contains("constants"))
      for (const auto& [name, l] : j["constants"].items()) m.constants[name] = idx(l);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad structure JSON: ") + e.what());
  }
  m.validate();
  return m;
}

std::string structure_to_json(const FiniteStructure& m) {
  json j;
  j["carrier"] = m.labels;
  if (!m.sorts.empty()) {
    json s = json::object();
    for (const auto& [name, elems] : m.sorts) {
      json arr = json::array();
      for (std::size_t i : elems) arr.push_back(m.labels[i]);
      s[name] = arr;
    }
    j["sorts"] = s;
  }
  if (!m.relations.empty()) {
    json r = json::object();
    for (const auto& [name, tuples] : m.relations) {
      json arr = json::array();
      for (const auto& tup : tuples) {
        json t = json::array();
        for (std::size_t i : tup) t.push_back(m.labels[i]);
        arr.push_back(t);
      }
      r[name] = arr;
    }
    j["relations"] = r;
  }
  if (!m.functions.empty()) {
    json f = json::object();
    for (const auto& [name, graph] : m.functions) {
      json arr = json::array();
      for (const auto& [args, val] : graph) {
        json e;
        json as = json::array();
        for (std::size_t i : args) as.push_back(m.labels[i]);
        e["args"] = as;
        e["value"] = m.labels[val];
        arr.push_back(e);
      }
      f[name] = arr;
    }
    j["functions"] = f;
  }
  if (!m.constants.empty()) {
    json c = json::object();
    for (const auto& [name, val] : m.constants) c[name] = m.labels[val];
    j["constants"] = c;
  }
  return j.dump(2);
}

Signature inferred_signature(const FiniteStructure& m) {
  Signature sig;
  for (const auto& [name, tuples] : m.relations) {
    unsigned arity = tuples.empty() ? 2u : static_cast<unsigned>(tuples.begin()->size());
    sig.relations[name] = RelInfo{arity, std::vector<std::optional<Sort>>(arity)};
  }
  for (const auto& [name, elems] : m.sorts) {
    (void)elems;
    if (!sig.relations.count(name)) sig.relations[name] = RelInfo{1, {std::nullopt}};
  }
  for (const auto& [name, graph] : m.functions) {
    unsigned arity = graph.empty() ? 2u : static_cast<unsigned>(graph.begin()->first.size());
    sig.functions[name] =
        FunInfo{arity, std::vector<std::optional<Sort>>(arity), std::nullopt};
  }
  for (const auto& [name, val] : m.constants) {
    (void)val;
    sig.constants[name] = std::nullopt;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Evaluation

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::Unknown:
      return "unknown";
    case Tri::True:
      return "true";
  }
  return {};
}

Tri tri_not(Tri a) {
  if (a == Tri::Unknown) return Tri::Unknown;
  return a == Tri::True ? Tri::False : Tri::True;
}

Tri tri_and(Tri a, Tri b) { return std::min(a, b); }
Tri tri_or(Tri a, Tri b) { return std::max(a, b); }

SortRange default_range(const FiniteStructure& m) {
  return [&m](const std::optional<Sort>& s) {
    std::vector<std::size_t> all(m.size());
    std::iota(all.begin(), all.end(), 0);
    if (!s || m.untyped()) return all;
    auto it = m.sorts.find(to_string(*s));
    if (it == m.sorts.end()) return all;
    return std::vector<std::size_t>(it->second.begin(), it->second.end());
  };
}

namespace {

// nullopt = undefined (outside a partial function graph or a missing constant).
std::optional<std::size_t> term_value(const Term& t, const FiniteStructure& m, Assignment& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw ContractError("unassigned free variable " + t.name);
      return it->second;
    }
    case Term::Kind::Const: {
      auto it = m.constants.find(t.name);
      if (it == m.constants.end()) return std::nullopt;
      return it->second;
    }
    case Term::Kind::App: {
      auto fit = m.functions.find(t.name);
      if (fit == m.functions.end()) return std::nullopt;
      std::vector<std::size_t> args;
      for (const Term& a : t.args) {
        std::optional<std::size_t> v = term_value(a, m, env);
        if (!v) return std::nullopt;
        args.push_back(*v);
      }
      auto git = fit->second.find(args);
      if (git == fit->second.end()) return std::nullopt;
      return git->second;
    }
  }
  return std::nullopt;
}

Tri eval_atom(const Formula& f, const FiniteStructure& m, Assignment& env, bool tri) {
  std::vector<std::size_t> vals;
  for (const Term& t : f.args) {
    std::optional<std::size_t> v = term_value(t, m, env);
    if (!v) return tri ? Tri::Unknown : Tri::False;
    vals.push_back(*v);
  }
  if (f.head == "=") return vals[0] == vals[1] ? Tri::True : Tri::False;
  auto sit = m.sorts.find(f.head);
  if (sit != m.sorts.end()) return sit->second.count(vals[0]) ? Tri::True : Tri::False;
  auto rit = m.relations.find(f.head);
  if (rit == m.relations.end()) return Tri::False;
  return rit->second.count(vals) ? Tri::True : Tri::False;
}

Tri eval_rec(const Formula& f, const FiniteStructure& m, Assignment& env, const SortRange& range,
             bool tri) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return eval_atom(f, m, env, tri);
    case Formula::Kind::Not:
      return tri_not(eval_rec(f.kids[0], m, env, range, tri));
    case Formula::Kind::And: {
      Tri a = eval_rec(f.kids[0], m, env, range, tri);
      if (a == Tri::False) return Tri::False;
      return tri_and(a, eval_rec(f.kids[1], m, env, range, tri));
    }
    case Formula::Kind::Or: {
      Tri a = eval_rec(f.kids[0], m, env, range, tri);
      if (a == Tri::True) return Tri::True;
      return tri_or(a, eval_rec(f.kids[1], m, env, range, tri));
    }
    case Formula::Kind::Imp: {
      Tri a = eval_rec(f.kids[0], m, env, range, tri);
      if (a == Tri::False) return Tri::True;
      return tri_or(tri_not(a), eval_rec(f.kids[1], m, env, range, tri));
    }
    case Formula::Kind::Iff: {
      Tri a = eval_rec(f.kids[0], m, env, range, tri);
      Tri b = eval_rec(f.kids[1], m, env, range, tri);
      if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
      return a == b ? Tri::True : Tri::False;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool exists = f.kind == Formula::Kind::Exists;
      Tri acc = exists ? Tri::False : Tri::True;
      auto it = env.find(f.head);
      std::optional<std::size_t> saved;
      if (it != env.end()) saved = it->second;
      for (std::size_t e : range(f.bind_sort)) {
        env[f.head] = e;
        Tri v = eval_rec(f.kids[0], m, env, range, tri);
        acc = exists ? tri_or(acc, v) : tri_and(acc, v);
        if (exists && acc == Tri::True) break;
        if (!exists && acc == Tri::False) break;
      }
      if (saved)
        env[f.head] = *saved;
      else
        env.erase(f.head);
      return acc;
    }
  }
  return Tri::False;
}

}  // namespace

bool eval_formula_ranged(const Formula& f, const FiniteStructure& m, const Assignment& a,
                         const SortRange& range) {
  Assignment env = a;
  return eval_rec(f, m, env, range, false) == Tri::True;
}

Tri eval_tri_ranged(const Formula& f, const FiniteStructure& m, const Assignment& a,
                    const SortRange& range) {
  Assignment env = a;
  return eval_rec(f, m, env, range, true);
}

bool eval_formula(const Formula& f, const FiniteStructure& m, const Assignment& a) {
  return eval_formula_ranged(f, m, a, default_range(m));
}

Tri eval_tri(const Formula& f, const FiniteStructure& m, const Assignment& a) {
  return eval_tri_ranged(f, m, a, default_range(m));
}

}  // namespace ordkernel
