#include "ordkernel/interp.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ordkernel {

std::string param_var(unsigned i) { return "v" + std::to_string(i); }

namespace {

void check_def_formula(const std::string& what, const Formula& f, unsigned max_params,
                       const Signature& host) {
  check_sorts(f, host);
  std::set<std::string> allowed;
  for (unsigned i = 1; i <= max_params; ++i) allowed.insert(param_var(i));
  for (const std::string& v : free_vars(f))
    if (!allowed.count(v))
      throw ContractError(what + " has free variable " + v + " outside v1..v" +
                          std::to_string(max_params));
}

}  // namespace

void DefinedStructure::validate() const {
  check_def_formula("universe formula", phi_u, 1, host);
  check_def_formula("equality formula", phi_eq, 2, host);
  for (const auto& [name, info] : target.relations) {
    auto it = rel_defs.find(name);
    if (it == rel_defs.end())
      throw ContractError("target relation " + name + " has no defining formula");
    check_def_formula("defining formula of " + name, it->second, info.arity, host);
  }
  for (const auto& [name, info] : target.functions) {
    auto it = fun_defs.find(name);
    if (it == fun_defs.end())
      throw ContractError("target function " + name + " has no defining formula");
    check_def_formula("defining formula of " + name, it->second, info.arity + 1, host);
  }
  for (const auto& [name, sort] : target.constants) {
    (void)sort;
    auto it = const_defs.find(name);
    if (it == const_defs.end())
      throw ContractError("target constant " + name + " has no defining formula");
    check_def_formula("defining formula of " + name, it->second, 1, host);
  }
  for (const auto& [name, f] : rel_defs) {
    (void)f;
    if (!target.has_relation(name) && name != "Ord" && name != "SOrd")
      throw ContractError("defining formula for undeclared relation " + name);
  }
}

DefinedStructure identity_interpretation(const Signature& sig) {
  // Parameter variables take the sorts the signature demands of each slot,
  // not the naming-convention sorts, so that self-definitions like <(v1,v2)
  // sort-check against sorted signatures.
  DefinedStructure a;
  a.host = sig;
  a.target = sig;
  const Term v1 = Term::var(param_var(1));
  const Term v2 = Term::var(param_var(2));
  a.phi_u = f_atom("=", {v1, v1});
  a.phi_eq = f_atom("=", {v1, v2});
  auto slot_sort = [](const std::vector<std::optional<Sort>>& ss, unsigned i) {
    return i - 1 < ss.size() ? ss[i - 1] : std::nullopt;
  };
  for (const auto& [name, info] : sig.relations) {
    std::vector<Term> args;
    for (unsigned i = 1; i <= info.arity; ++i)
      args.push_back(Term::var(param_var(i), slot_sort(info.arg_sorts, i)));
    a.rel_defs[name] = f_atom(name, std::move(args));
  }
  for (const auto& [name, info] : sig.functions) {
    std::vector<Term> args;
    for (unsigned i = 1; i <= info.arity; ++i)
      args.push_back(Term::var(param_var(i), slot_sort(info.arg_sorts, i)));
    const Term val = Term::var(param_var(info.arity + 1), info.result_sort);
    a.fun_defs[name] = f_atom("=", {val, Term::app(name, std::move(args))});
  }
  for (const auto& [name, sort] : sig.constants) {
    a.const_defs[name] = f_atom("=", {Term::var(param_var(1), sort), Term::cst(name)});
  }
  return a;
}

// ---------------------------------------------------------------------------
// Relativization

namespace {

class Relativizer {
 public:
  Relativizer(const DefinedStructure& a, std::set<std::string> taken)
      : a_(a), taken_(std::move(taken)) {}

  Formula go(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Atom:
        if (f.head == "=") return eq_atom(f.args[0], f.args[1]);
        return rel_atom(f.head, f.args);
      case Formula::Kind::Not:
        return f_not(go(f.kids[0]));
      case Formula::Kind::And:
        return f_and(go(f.kids[0]), go(f.kids[1]));
      case Formula::Kind::Or:
        return f_or(go(f.kids[0]), go(f.kids[1]));
      case Formula::Kind::Imp:
        return f_imp(go(f.kids[0]), go(f.kids[1]));
      case Formula::Kind::Iff:
        return f_iff(go(f.kids[0]), go(f.kids[1]));
      case Formula::Kind::Exists:
        return f_ex(f.head, f.bind_sort,
                    f_and(universe_at(Term::var(f.head, f.bind_sort)), go(f.kids[0])));
      case Formula::Kind::Forall:
        return f_all(f.head, f.bind_sort,
                     f_imp(universe_at(Term::var(f.head, f.bind_sort)), go(f.kids[0])));
    }
    throw ContractError("unreachable formula kind");
  }

 private:
  const DefinedStructure& a_;
  std::set<std::string> taken_;
  unsigned counter_ = 0;

  std::string fresh() {
    std::string cand;
    do {
      cand = "_r" + std::to_string(++counter_);
    } while (taken_.count(cand));
    taken_.insert(cand);
    return cand;
  }

  Formula universe_at(const Term& t) {
    return subst_vars(a_.phi_u, {{param_var(1), t}});
  }

  const Formula& relation_def(const std::string& name) const {
    if (name == "=") return a_.phi_eq;
    auto it = a_.rel_defs.find(name);
    if (it == a_.rel_defs.end())
      throw SignatureError("relation " + name + " is not defined by the interpretation");
    return it->second;
  }

  // (x = t)^A for a variable x.
  Formula var_eq(const Term& x, const Term& t) {
    switch (t.kind) {
      case Term::Kind::Var:
        return subst_vars(a_.phi_eq, {{param_var(1), x}, {param_var(2), t}});
      case Term::Kind::Const: {
        auto it = a_.const_defs.find(t.name);
        if (it == a_.const_defs.end())
          throw SignatureError("constant " + t.name + " is not defined by the interpretation");
        return subst_vars(it->second, {{param_var(1), x}});
      }
      case Term::Kind::App: {
        auto it = a_.fun_defs.find(t.name);
        if (it == a_.fun_defs.end())
          throw SignatureError("function " + t.name + " is not defined by the interpretation");
        std::map<std::string, Term> sub;
        std::vector<std::string> xs;
        std::vector<Formula> parts;
        for (std::size_t i = 0; i < t.args.size(); ++i) {
          xs.push_back(fresh());
          const Term xi = Term::var(xs.back());
          sub[param_var(static_cast<unsigned>(i) + 1)] = xi;
          parts.push_back(var_eq(xi, t.args[i]));
        }
        sub[param_var(static_cast<unsigned>(t.args.size()) + 1)] = x;
        parts.push_back(subst_vars(it->second, sub));
        return bound_exists(xs, f_and_all(std::move(parts)));
      }
    }
    throw ContractError("unreachable term kind");
  }

  Formula eq_atom(const Term& lhs, const Term& rhs) {
    if (lhs.kind == Term::Kind::Var) return var_eq(lhs, rhs);
    return rel_atom("=", {lhs, rhs});
  }

  Formula rel_atom(const std::string& name, const std::vector<Term>& args) {
    const Formula& def = relation_def(name);
    std::map<std::string, Term> sub;
    std::vector<std::string> xs;
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < args.size(); ++i) {
      xs.push_back(fresh());
      const Term xi = Term::var(xs.back());
      sub[param_var(static_cast<unsigned>(i) + 1)] = xi;
      parts.push_back(var_eq(xi, args[i]));
    }
    parts.push_back(subst_vars(def, sub));
    return bound_exists(xs, f_and_all(std::move(parts)));
  }

  // EX x1 . (phi_u(x1) AND EX x2 . (phi_u(x2) AND body))
  Formula bound_exists(const std::vector<std::string>& xs, Formula body) {
    for (std::size_t i = xs.size(); i-- > 0;) {
      const Term xi = Term::var(xs[i]);
      body = f_ex(xs[i], std::nullopt, f_and(universe_at(xi), std::move(body)));
    }
    return body;
  }
};

}  // namespace

Formula relativize(const Formula& psi, const DefinedStructure& a) {
  a.validate();
  std::set<std::string> taken = all_var_names(psi);
  auto absorb = [&taken](const Formula& f) {
    std::set<std::string> vs = all_var_names(f);
    taken.insert(vs.begin(), vs.end());
  };
  absorb(a.phi_u);
  absorb(a.phi_eq);
  for (const auto& [n, f] : a.rel_defs) {
    (void)n;
    absorb(f);
  }
  for (const auto& [n, f] : a.fun_defs) {
    (void)n;
    absorb(f);
  }
  for (const auto& [n, f] : a.const_defs) {
    (void)n;
    absorb(f);
  }
  return Relativizer(a, std::move(taken)).go(psi);
}

// ---------------------------------------------------------------------------
// Semantic checks

namespace {

struct DefEval {
  const DefinedStructure& a;
  const FiniteStructure& m;

  bool holds(const Formula& f, const std::vector<std::size_t>& args) const {
    Assignment asg;
    for (std::size_t i = 0; i < args.size(); ++i)
      asg[param_var(static_cast<unsigned>(i) + 1)] = args[i];
    return eval_formula(f, m, asg);
  }

  bool eq(std::size_t x, std::size_t y) const { return holds(a.phi_eq, {x, y}); }

  std::string label_tuple(const std::vector<std::size_t>& t) const {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",";
      out += m.labels[t[i]];
    }
    return out + ")";
  }
};

std::vector<std::vector<std::size_t>> tuples_over(const std::vector<std::size_t>& u, unsigned n) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::vector<std::size_t>> next;
    next.reserve(out.size() * u.size());
    for (const auto& t : out)
      for (std::size_t e : u) {
        auto t2 = t;
        t2.push_back(e);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool DefinableCheckReport::all_ok() const {
  return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.ok; });
}

std::string DefinableCheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.ok ? "ok   " : "FAIL ") << i.condition;
    if (!i.symbol.empty()) os << " [" << i.symbol << "]";
    if (!i.detail.empty()) os << ": " << i.detail;
    os << "\n";
  }
  os << (all_ok() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

DefinableCheckReport check_definable_structure(const DefinedStructure& a,
                                               const FiniteStructure& m) {
  a.validate();
  m.validate();
  DefEval ev{a, m};
  DefinableCheckReport rep;
  auto add = [&rep](std::string cond, std::string sym, bool ok, std::string detail) {
    rep.items.push_back({std::move(cond), std::move(sym), ok, std::move(detail)});
  };

  std::vector<std::size_t> u;
  for (std::size_t e = 0; e < m.size(); ++e)
    if (ev.holds(a.phi_u, {e})) u.push_back(e);
  add("universe nonempty", "", !u.empty(),
      "universe has " + std::to_string(u.size()) + " of " + std::to_string(m.size()) +
          " elements");

  {
    bool ok = true;
    std::string detail;
    for (std::size_t x : u)
      if (!ev.eq(x, x)) {
        ok = false;
        detail = "not reflexive at " + m.labels[x];
        break;
      }
    if (ok)
      for (std::size_t x : u) {
        for (std::size_t y : u)
          if (ev.eq(x, y) != ev.eq(y, x)) {
            ok = false;
            detail = "not symmetric at " + ev.label_tuple({x, y});
            break;
          }
        if (!ok) break;
      }
    if (ok)
      for (std::size_t x : u) {
        for (std::size_t y : u) {
          if (!ev.eq(x, y)) continue;
          for (std::size_t z : u)
            if (ev.eq(y, z) && !ev.eq(x, z)) {
              ok = false;
              detail = "not transitive at " + ev.label_tuple({x, y, z});
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
      }
    add("equality equivalence", "", ok, detail);
  }

  auto congruent_tuples = [&ev](const std::vector<std::size_t>& s,
                                const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!ev.eq(s[i], t[i])) return false;
    return true;
  };

  for (const auto& [name, info] : a.target.relations) {
    const Formula& def = a.rel_defs.at(name);
    bool ok = true;
    std::string detail;
    const auto tups = tuples_over(u, info.arity);
    for (const auto& s : tups) {
      for (const auto& t : tups) {
        if (!congruent_tuples(s, t)) continue;
        if (ev.holds(def, s) != ev.holds(def, t)) {
          ok = false;
          detail = "distinguishes " + ev.label_tuple(s) + " from " + ev.label_tuple(t);
          break;
        }
      }
      if (!ok) break;
    }
    add("relation congruence", name, ok, detail);
  }

  for (const auto& [name, info] : a.target.functions) {
    const Formula& def = a.fun_defs.at(name);
    const auto tups = tuples_over(u, info.arity);
    {
      bool ok = true;
      std::string detail;
      for (const auto& t : tups) {
        bool found = false;
        for (std::size_t y : u) {
          auto args = t;
          args.push_back(y);
          if (ev.holds(def, args)) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          detail = "no value at " + ev.label_tuple(t);
          break;
        }
      }
      add("function totality", name, ok, detail);
    }
    {
      bool ok = true;
      std::string detail;
      for (const auto& t : tups) {
        for (std::size_t y1 : u) {
          auto a1 = t;
          a1.push_back(y1);
          if (!ev.holds(def, a1)) continue;
          for (std::size_t y2 : u) {
            auto a2 = t;
            a2.push_back(y2);
            if (ev.holds(def, a2) && !ev.eq(y1, y2)) {
              ok = false;
              detail = "two values " + ev.label_tuple({y1, y2}) + " at " + ev.label_tuple(t);
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      add("function functionality", name, ok, detail);
    }
    {
      bool ok = true;
      std::string detail;
      for (const auto& s : tups) {
        for (const auto& t : tups) {
          if (!congruent_tuples(s, t)) continue;
          for (std::size_t y1 : u) {
            auto a1 = s;
            a1.push_back(y1);
            if (!ev.holds(def, a1)) continue;
            for (std::size_t y2 : u) {
              auto a2 = t;
              a2.push_back(y2);
              if (ev.holds(def, a2) && !ev.eq(y1, y2)) {
                ok = false;
                detail = "values split over " + ev.label_tuple(s) + " ~ " + ev.label_tuple(t);
                break;
              }
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      add("function congruence", name, ok, detail);
    }
  }

  for (const auto& [name, sort] : a.target.constants) {
    (void)sort;
    const Formula& def = a.const_defs.at(name);
    std::vector<std::size_t> hits;
    for (std::size_t y : u)
      if (ev.holds(def, {y})) hits.push_back(y);
    add("constant existence", name, !hits.empty(),
        hits.empty() ? "no witness in the universe" : "witness " + m.labels[hits.front()]);
    bool unique = true;
    std::string detail;
    for (std::size_t y1 : hits) {
      for (std::size_t y2 : hits)
        if (!ev.eq(y1, y2)) {
          unique = false;
          detail = "distinct witnesses " + ev.label_tuple({y1, y2});
          break;
        }
      if (!unique) break;
    }
    add("constant uniqueness", name, unique, detail);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Quotient

FiniteStructure quotient_structure(const DefinedStructure& a, const FiniteStructure& m) {
  DefinableCheckReport rep = check_definable_structure(a, m);
  if (!rep.all_ok()) {
    std::string why;
    for (const auto& i : rep.items)
      if (!i.ok) {
        why = i.condition + (i.symbol.empty() ? "" : " [" + i.symbol + "]");
        break;
      }
    throw ContractError("quotient over a structure failing its checks: " + why);
  }
  DefEval ev{a, m};
  std::vector<std::size_t> u;
  for (std::size_t e = 0; e < m.size(); ++e)
    if (ev.holds(a.phi_u, {e})) u.push_back(e);

  std::vector<std::size_t> reps;                 // class index -> least host element
  std::map<std::size_t, std::size_t> class_of;   // host element -> class index
  for (std::size_t e : u) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (ev.eq(reps[c], e)) {
        class_of[e] = c;
        placed = true;
        break;
      }
    if (!placed) {
      class_of[e] = reps.size();
      reps.push_back(e);
    }
  }

  FiniteStructure q;
  for (std::size_t r : reps) q.labels.push_back(m.labels[r]);
  for (const auto& [name, info] : a.target.relations) {
    const Formula& def = a.rel_defs.at(name);
    q.relations[name];
    for (const auto& t : tuples_over(reps, info.arity)) {
      if (!ev.holds(def, t)) continue;
      std::vector<std::size_t> ct;
      for (std::size_t e : t) ct.push_back(class_of.at(e));
      q.relations[name].insert(std::move(ct));
    }
  }
  for (const auto& [name, info] : a.target.functions) {
    const Formula& def = a.fun_defs.at(name);
    q.functions[name];
    for (const auto& t : tuples_over(reps, info.arity)) {
      std::optional<std::size_t> val;
      for (std::size_t y : u) {
        auto args = t;
        args.push_back(y);
        if (ev.holds(def, args)) {
          val = class_of.at(y);
          break;
        }
      }
      if (!val) throw ContractError("function " + name + " lost totality in the quotient");
      std::vector<std::size_t> ct;
      for (std::size_t e : t) ct.push_back(class_of.at(e));
      q.functions[name][std::move(ct)] = *val;
    }
  }
  for (const auto& [name, sort] : a.target.constants) {
    (void)sort;
    const Formula& def = a.const_defs.at(name);
    for (std::size_t y : u)
      if (ev.holds(def, {y})) {
        q.constants[name] = class_of.at(y);
        break;
      }
  }
  for (const std::string& sname : {std::string("Ord"), std::string("SOrd")}) {
    auto it = a.rel_defs.find(sname);
    if (it == a.rel_defs.end()) continue;
    q.sorts[sname];
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (ev.holds(it->second, {reps[c]})) q.sorts[sname].insert(c);
  }
  q.validate();
  return q;
}

// ---------------------------------------------------------------------------
// JSON forms

namespace {

std::optional<Sort> sort_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  std::string s = j.get<std::string>();
  if (s == "Ord") return Sort::Ord;
  if (s == "SOrd") return Sort::SOrd;
  throw ParseError("bad sort name " + s + " (want Ord, SOrd, or null)");
}

std::vector<std::optional<Sort>> sorts_from_json(const nlohmann::json& j, std::size_t arity) {
  std::vector<std::optional<Sort>> out(arity);
  if (j.is_null()) return out;
  if (j.size() != arity) throw ParseError("arg_sorts length disagrees with arity");
  for (std::size_t i = 0; i < arity; ++i) out[i] = sort_from_json(j.at(i));
  return out;
}

Signature signature_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "LSO") return lso_signature();
    if (name == "LIN") return lin_signature();
    throw ParseError("unknown signature name " + name + " (want LSO or LIN)");
  }
  Signature sig;
  if (j.contains("relations"))
    for (const auto& [name, info] : j.at("relations").items()) {
      unsigned arity = info.at("arity").get<unsigned>();
      sig.relations[name] = RelInfo{
          arity, sorts_from_json(info.contains("arg_sorts") ? info.at("arg_sorts") : nlohmann::json(), arity)};
    }
  if (j.contains("functions"))
    for (const auto& [name, info] : j.at("functions").items()) {
      unsigned arity = info.at("arity").get<unsigned>();
      sig.functions[name] = FunInfo{
          arity,
          sorts_from_json(info.contains("arg_sorts") ? info.at("arg_sorts") : nlohmann::json(), arity),
          sort_from_json(info.contains("result_sort") ? info.at("result_sort") : nlohmann::json())};
    }
  if (j.contains("constants"))
    for (const auto& [name, s] : j.at("constants").items())
      sig.constants[name] = sort_from_json(s);
  return sig;
}

}  // namespace

Signature signature_from_json_text(const std::string& text) {
  try {
    return signature_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad signature JSON: ") + e.what());
  }
}

DefinedStructure defined_structure_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad interpretation JSON: ") + e.what());
  }
  try {
    DefinedStructure a;
    a.host = signature_from_json(j.at("host"));
    a.target = signature_from_json(j.at("target"));
    a.phi_u = parse_formula(j.at("phi_u").get<std::string>(), a.host);
    a.phi_eq = parse_formula(j.at("phi_eq").get<std::string>(), a.host);
    if (j.contains("relations"))
      for (const auto& [name, t] : j.at("relations").items())
        a.rel_defs[name] = parse_formula(t.get<std::string>(), a.host);
    if (j.contains("functions"))
      for (const auto& [name, t] : j.at("functions").items())
        a.fun_defs[name] = parse_formula(t.get<std::string>(), a.host);
    if (j.contains("constants"))
      for (const auto& [name, t] : j.at("constants").items())
        a.const_defs[name] = parse_formula(t.get<std::string>(), a.host);
    a.validate();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad interpretation JSON: ") + e.what());
  }
}

}  // namespace ordkernel
