#pragma once
// The axioms of the two-sorted theory of ordinals and sets of ordinals, and a
// finite-model checker for them.
//
// Axioms: SOR (sorts), WO (well-ordering), INF (a limit ordinal exists),
// EXT (extensionality), INI (initial segments), BOU (boundedness), GPF (the
// pairing function respects the max-lexicographic order, spelled out through
// the max abbreviation), SUR (pairing is onto), SEP / REP (separation and
// replacement schemata, checked on caller-supplied instance formulas), POW
// (well-ordered power sets, with the unique-existence quantifier spelled
// out).
//
// check_axiom enumerates the outermost universal block of the axiom over the
// structure, restricted by `bound` (ordinals below the bound, sets with all
// elements below it), and evaluates each instance three-valued with inner
// quantifiers ranging over the whole carrier. Instances that come out Unknown
// hit the carrier boundary (a pairing value outside the truncation): they are
// counted as boundary, not as failures.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ordkernel/formula.hpp"
#include "ordkernel/structure.hpp"

namespace ordkernel {

enum class AxiomId { SOR, WO, INF, EXT, INI, BOU, GPF, SUR, SEP, REP, POW };

std::vector<AxiomId> all_axioms();
std::string to_string(AxiomId id);
std::optional<AxiomId> parse_axiom_id(const std::string& name);

// SEP and REP are schemata and need instance formulas.
bool axiom_is_schema(AxiomId id);

// The closed axiom formula. Throws ContractError for SEP and REP.
Formula axiom_formula(AxiomId id);

// Closed separation instance for phi: the distinguished free variable alpha
// is the separated one, every other free variable is universally closed as a
// parameter.
Formula separation_instance(const Formula& phi);

// Closed replacement instance for phi: xi is the domain variable, zeta the
// image variable, every other free variable a parameter.
Formula replacement_instance(const Formula& phi);

inline constexpr std::size_t kNoBound = std::numeric_limits<std::size_t>::max();

struct AxiomReport {
  AxiomId id = AxiomId::SOR;
  std::string verdict;  // "holds-on-bounded-instances", "fails", "inapplicable"
  std::size_t checked = 0;
  std::size_t holding = 0;
  std::size_t failing = 0;
  std::size_t boundary = 0;
  std::vector<std::string> failing_samples;
  std::string note;

  std::string to_text() const;
};

AxiomReport check_axiom(AxiomId id, const FiniteStructure& m, std::size_t bound = kNoBound,
                        const std::vector<Formula>& schema_instances = {});

}  // namespace ordkernel
