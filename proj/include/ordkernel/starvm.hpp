#pragma once
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ordkernel/ordinal.hpp"
#include "ordkernel/ordset.hpp"

namespace ordkernel {

// Base functions in their fixed enumeration order: identity, projection,
// boolean or, order test, equality test, negation, the two unpairing
// projections, and bounded pairing.
enum class BaseFn { Id, Proj, Or, Less, Eq, Not, G1, G2, GBounded };

struct FunAst;
using FunPtr = std::shared_ptr<const FunAst>;

// A *-recursive program: base function, composition, or recursive
// minimization. RecMin holds m rows of n-1 helper functions; row j
// produces the argument vector for the j-th truncated self-call.
struct FunAst {
  struct Base {
    BaseFn fn;
    std::size_t m = 0, n = 0;  // Proj only: selects coordinate m of n
  };
  struct Comp {
    FunPtr g;
    std::vector<FunPtr> hs;
  };
  struct RecMin {
    FunPtr g;
    std::size_t n = 0;  // result arity
    std::vector<std::vector<FunPtr>> rows;
  };
  std::variant<Base, Comp, RecMin> node;
};

// Checked constructors; arity inconsistencies raise ContractError.
FunPtr fn_base(BaseFn fn);  // every base except Proj
FunPtr fn_proj(std::size_t m, std::size_t n);
FunPtr fn_comp(FunPtr g, std::vector<FunPtr> hs);
// The result arity n is recovered from the rows (row length n-1), or from
// arity(g) when there are no rows. A unary recursive minimization must
// have no rows.
FunPtr fn_recmin(FunPtr g, std::vector<std::vector<FunPtr>> rows);

std::size_t arity_of(const FunAst& f);
std::size_t arity_of(const FunPtr& f);
bool ast_equal(const FunAst& x, const FunAst& y);
inline bool ast_equal(const FunPtr& x, const FunPtr& y) { return ast_equal(*x, *y); }

// m and n are only read for Proj.
Ordinal eval_base(BaseFn fn, std::size_t m, std::size_t n, const std::vector<Ordinal>& args);

struct EvalBudget {
  long long fuel = 10'000'000;
  Ordinal beta0 = Ordinal(1) << 16;
};

// Evaluates programs, memoizing per (node, argument tuple). Every
// self-call of a recursive minimization descends strictly in the pointwise
// order of the non-scan arguments, so evaluation always terminates; fuel
// bounds the total number of evaluation steps and is the only shared
// state between calls. Step counts are deterministic.
class Evaluator {
 public:
  explicit Evaluator(EvalBudget budget = {});
  Ordinal eval(const FunPtr& f, const std::vector<Ordinal>& args);
  long long steps() const { return steps_; }
  const EvalBudget& budget() const { return budget_; }

 private:
  struct Key {
    const FunAst* node;
    std::vector<Ordinal> args;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  Ordinal eval_node(const FunAst* f, std::vector<Ordinal> args);

  EvalBudget budget_;
  long long steps_ = 0;
  std::unordered_map<Key, Ordinal, KeyHash> memo_;
};

// One-shot evaluation with a fresh evaluator.
Ordinal eval(const FunPtr& f, const std::vector<Ordinal>& args, const EvalBudget& budget = {});

// Godel numbering. Base functions get fixed small codes; composition and
// recursive minimization nodes are tagged, pair-encoded, and lifted by
// pairing with the largest argument tuple below beta0 so that every
// composite code strictly dominates every argument tuple it can meet.
Ordinal number_of(const FunAst& f, const Ordinal& beta0);
Ordinal number_of(const FunPtr& f, const Ordinal& beta0);

// Inverse of number_of (for any lift value); DecodeError on ordinals that
// code no well-formed program.
FunPtr ast_of(const Ordinal& code);
std::size_t arity_of(const Ordinal& code);

// The universal function: decode, split the packed argument tuple at the
// decoded arity, evaluate.
Ordinal fun_universal(const Ordinal& code, const Ordinal& arg_tuple, const EvalBudget& budget = {});

// {eta < alpha | FUN(beta, pair(eta,gamma)) > 0}; empty when beta codes no
// program. Requires alpha <= beta0. Applications that would step outside
// the argument bound count as failing the test.
OrdSet define_set(const Ordinal& alpha, const Ordinal& beta, const Ordinal& gamma,
                  const EvalBudget& budget = {});

// Triples t are packed as tuple_encode([alpha, beta, gamma]). Decides
// whether the set defined by t1 is contained in the one defined by t2 by
// scanning all candidates below eta; eta must bound both sets.
bool subset_test(const Ordinal& t1, const Ordinal& t2, const Ordinal& eta,
                 const EvalBudget& budget = {});

// Least delta < search_bound whose decoding as a packed triple defines
// exactly a; absent when no name below the bound works.
std::optional<Ordinal> minimal_name(const OrdSet& a, const Ordinal& search_bound,
                                    const EvalBudget& budget = {});

// Program syntax:   id | or | less | eq | not | g1 | g2 | g
//                 | (proj M N) | (comp G H1 ... Hn) | (recmin G (ROW ...))
// where ROW = (H1 ... Hn-1). A base name in head position applies it:
// (less A B) is shorthand for (comp less A B).
FunPtr parse_program(const std::string& text);
std::string to_string(const FunAst& f);
std::string to_string(const FunPtr& f);

}  // namespace ordkernel
