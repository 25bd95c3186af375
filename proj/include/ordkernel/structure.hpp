#pragma once
// Finite structures and Tarskian evaluation.
//
// A FiniteStructure interprets relation, function and constant symbols over a
// carrier of labeled elements. Sorts are optional unary tags: a structure with
// an empty sorts map is untyped and every quantifier ranges over the whole
// carrier. Function graphs may be partial (a truncation cuts functions off at
// the carrier boundary).
//
// Two evaluation modes:
//   eval_formula  two valued; an atom over an undefined function value counts
//                 as false.
//   eval_tri      three valued; undefined values propagate as Unknown through
//                 the Kleene tables, so a caller can tell boundary effects
//                 from genuine failure.
//
// JSON format (structure_from_json / structure_to_json):
//   {
//     "carrier":   ["0", "1", "{}"],
//     "sorts":     {"Ord": ["0", "1"], "SOrd": ["{}"]},
//     "relations": {"<": [["0", "1"]]},
//     "functions": {"G": [{"args": ["0", "0"], "value": "0"}]},
//     "constants": {"0": "0"}
//   }
// sorts, relations, functions and constants may be omitted when empty; all
// tuples refer to carrier labels.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordkernel/errors.hpp"
#include "ordkernel/formula.hpp"

namespace ordkernel {

struct FiniteStructure {
  std::vector<std::string> labels;
  std::map<std::string, std::set<std::vector<std::size_t>>> relations;
  std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>> functions;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, std::set<std::size_t>> sorts;

  std::size_t size() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;  // DomainError when absent
  bool untyped() const { return sorts.empty(); }

  // Checks label uniqueness and that every stored index is in range.
  void validate() const;

  bool operator==(const FiniteStructure&) const = default;
};

FiniteStructure structure_from_json(const std::string& text);
std::string structure_to_json(const FiniteStructure& m);

// A signature read off the structure: arities from the stored tuples and
// graphs, sorts unconstrained. A relation or function with no tuples to
// measure is declared binary.
Signature inferred_signature(const FiniteStructure& m);

// Variable assignment by carrier index.
using Assignment = std::map<std::string, std::size_t>;

enum class Tri { False, Unknown, True };

std::string to_string(Tri t);

Tri tri_not(Tri a);
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);

// Elements a quantifier of the given binder sort ranges over.
using SortRange = std::function<std::vector<std::size_t>(const std::optional<Sort>&)>;

// The default range: the sort's tag set when the structure declares it,
// otherwise the whole carrier.
SortRange default_range(const FiniteStructure& m);

bool eval_formula(const Formula& f, const FiniteStructure& m, const Assignment& a = {});
Tri eval_tri(const Formula& f, const FiniteStructure& m, const Assignment& a = {});

bool eval_formula_ranged(const Formula& f, const FiniteStructure& m, const Assignment& a,
                         const SortRange& range);
Tri eval_tri_ranged(const Formula& f, const FiniteStructure& m, const Assignment& a,
                    const SortRange& range);

}  // namespace ordkernel
