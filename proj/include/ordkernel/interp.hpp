#pragma once
// Defined structures and relativization.
//
// A DefinedStructure presents a target-language structure inside a host
// language: a universe formula phi_u(v1), an equality formula phi_eq(v1,v2),
// and one defining formula per target symbol, each written over the host
// signature with the reserved parameter variables v1, v2, ... (an n-ary
// relation uses v1..vn, an n-ary function v1..vn for the arguments and
// v(n+1) for the value, a constant v1).
//
// relativize rewrites a target formula into the host language: equalities
// between variables become phi_eq, constants become their defining formula,
// function and relation atoms unfold their argument terms through fresh
// universe-bounded existentials (_r1, _r2, ...), and quantifiers relativize
// to the universe formula.
//
// check_definable_structure verifies the semantic well-definedness conditions
// on a concrete finite host structure; quotient_structure then builds the
// induced target structure on the phi_eq-classes of the universe.

#include <map>
#include <string>
#include <vector>

#include "ordkernel/formula.hpp"
#include "ordkernel/structure.hpp"

namespace ordkernel {

// The reserved parameter variable v1, v2, ...
std::string param_var(unsigned i);

struct DefinedStructure {
  Signature host;
  Signature target;
  Formula phi_u;
  Formula phi_eq;
  std::map<std::string, Formula> rel_defs;
  std::map<std::string, Formula> fun_defs;
  std::map<std::string, Formula> const_defs;

  // Syntactic conditions: every target symbol has a defining formula, each
  // formula is over the host signature, and its free variables stay within
  // the reserved parameters for its arity. Throws ContractError or SortError.
  void validate() const;
};

// The interpretation of a structure in itself: phi_u is trivial, phi_eq is
// equality, every symbol defines itself.
DefinedStructure identity_interpretation(const Signature& sig);

// Rewrite the target formula psi over the host language.
// Throws SignatureError when psi mentions a symbol the interpretation does
// not define.
Formula relativize(const Formula& psi, const DefinedStructure& a);

struct DefinableCheckItem {
  std::string condition;  // "universe nonempty", "function totality", ...
  std::string symbol;     // affected symbol, empty for universe and equality
  bool ok = false;
  std::string detail;
};

struct DefinableCheckReport {
  std::vector<DefinableCheckItem> items;
  bool all_ok() const;
  std::string to_text() const;
};

// Evaluate the semantic conditions of a defined structure on a finite host:
// universe nonemptiness, totality and functionality of each function formula
// modulo phi_eq, existence and uniqueness of each constant, and phi_eq being
// an equivalence that is a congruence for every defined symbol.
DefinableCheckReport check_definable_structure(const DefinedStructure& a,
                                               const FiniteStructure& m);

// The induced target structure on the phi_eq-classes of the universe. Each
// class is represented and labeled by its least host element. Throws
// ContractError when check_definable_structure reports a violation.
FiniteStructure quotient_structure(const DefinedStructure& a, const FiniteStructure& m);

// JSON forms.
//
// A signature is {"relations": {name: {"arity": n, "arg_sorts": [...]}},
// "functions": {name: {..., "result_sort": s}}, "constants": {name: s}}
// where each sort slot is "Ord", "SOrd", or null. The strings "LSO" and
// "LIN" abbreviate the two built-in signatures. A defined structure is
// {"host": sig, "target": sig, "phi_u": text, "phi_eq": text,
// "relations": {name: text}, "functions": {name: text},
// "constants": {name: text}} with every formula text parsed over the host.
Signature signature_from_json_text(const std::string& text);
DefinedStructure defined_structure_from_json(const std::string& text);

}  // namespace ordkernel
