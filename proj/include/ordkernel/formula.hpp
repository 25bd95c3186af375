#pragma once
// First-order formulas over small signatures: terms, ASTs, parsing, printing,
// free variables, capture-avoiding substitution, and sort checking.
//
// Grammar (ASCII, case sensitive):
//   formula := iff
//   iff     := imp ("IFF" imp)*                 (left associative)
//   imp     := or ("IMP" imp)?                  (right associative)
//   or      := and ("OR" and)*
//   and     := unary ("AND" unary)*
//   unary   := "NOT" unary | quant | primary
//   quant   := ("ALL" | "EX") var (":" sort)? "." iff     (scope extends right)
//   primary := "(" formula ")" | atom
//   atom    := term (("<" | "=" | "in") term)? | relname "(" term ("," term)* ")"
//   term    := name ("(" term ("," term)* ")")? (":" sort)? | numeral
//   sort    := "Ord" | "SOrd"
//
// A bare name is a variable unless the signature declares it as a constant; a
// numeral is always a constant. An applied name must be declared as a relation
// (when used as an atom) or a function (when used as a term). ALL, EX, NOT,
// AND, OR, IMP, IFF and in are reserved words.
//
// Variable sorts: an explicit ":Ord" / ":SOrd" annotation wins. Otherwise a
// name sorts by convention: spelled-out greek letters with an optional digit
// suffix (alpha, beta, ..., omega, zeta1) are Ord; names starting with an
// upper-case letter or an underscore are unsorted; all other names are SOrd.
// A binder fixes the sort for its whole scope; conflicting annotations on the
// same variable are a sort error.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordkernel/errors.hpp"

namespace ordkernel {

enum class Sort { Ord, SOrd };

std::string to_string(Sort s);

// Sort a bare variable name gets without an annotation; nullopt = unsorted.
std::optional<Sort> convention_sort(const std::string& name);

struct Term {
  enum class Kind { Var, Const, App };
  Kind kind = Kind::Var;
  std::string name;
  std::vector<Term> args;        // App only
  std::optional<Sort> sort;      // Var only

  static Term var(std::string n, std::optional<Sort> s = std::nullopt);
  static Term cst(std::string n);
  static Term app(std::string f, std::vector<Term> as);

  bool operator==(const Term&) const = default;
};

struct Formula {
  enum class Kind { Atom, Not, And, Or, Imp, Iff, Exists, Forall };
  Kind kind = Kind::Atom;
  std::string head;              // Atom: relation name; Exists/Forall: bound variable
  std::vector<Term> args;        // Atom only
  std::vector<Formula> kids;     // Not: 1, binary connectives: 2, quantifiers: 1
  std::optional<Sort> bind_sort; // quantifiers only

  bool operator==(const Formula&) const = default;
};

Formula f_atom(std::string rel, std::vector<Term> args);
Formula f_not(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_imp(Formula a, Formula b);
Formula f_iff(Formula a, Formula b);
Formula f_ex(std::string var, std::optional<Sort> s, Formula body);
Formula f_all(std::string var, std::optional<Sort> s, Formula body);

// Right-nested conjunction of a nonempty list.
Formula f_and_all(std::vector<Formula> fs);

struct RelInfo {
  unsigned arity = 0;
  std::vector<std::optional<Sort>> arg_sorts;  // empty = unconstrained
};

struct FunInfo {
  unsigned arity = 0;
  std::vector<std::optional<Sort>> arg_sorts;
  std::optional<Sort> result_sort;
};

// Equality and the sort predicates Ord / SOrd are built in and need not be
// declared. Declared relation or function names must not collide.
struct Signature {
  std::map<std::string, RelInfo> relations;
  std::map<std::string, FunInfo> functions;
  std::map<std::string, std::optional<Sort>> constants;

  bool has_relation(const std::string& n) const;
  bool has_function(const std::string& n) const;
  bool has_constant(const std::string& n) const;
};

// The two-sorted language of ordinals and sets of ordinals:
// < on Ord, in : Ord x SOrd, G : Ord x Ord -> Ord.
const Signature& lso_signature();

// Untyped membership language: a single binary relation in.
const Signature& lin_signature();

// Parse and sort-check a formula. Throws ParseError (with a character
// position) on bad syntax and SortError on a definite sort clash.
Formula parse_formula(const std::string& text, const Signature& sig = lso_signature());

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

// Free variable names.
std::set<std::string> free_vars(const Formula& f);

// Every variable name occurring anywhere, free or bound.
std::set<std::string> all_var_names(const Formula& f);

// Simultaneous substitution of terms for free variables, renaming bound
// variables when they would capture a substituted name.
Formula subst_vars(const Formula& f, const std::map<std::string, Term>& m);

// Re-run the sort and arity checks on an already built AST.
void check_sorts(const Formula& f, const Signature& sig);

}  // namespace ordkernel
