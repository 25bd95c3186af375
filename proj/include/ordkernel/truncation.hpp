#pragma once
// Finite truncations of the two-sorted universe of ordinals and sets of
// ordinals, and reflection searches over them.

#include <optional>
#include <vector>

#include "ordkernel/limits.hpp"
#include "ordkernel/ordinal.hpp"
#include "ordkernel/structure.hpp"

namespace ordkernel {

// Numeric reading of a truncation: which carrier index is which ordinal, and
// which set of ordinal values each SOrd element denotes.
struct TruncationView {
  std::map<std::size_t, unsigned> ord_value;
  std::map<std::size_t, std::set<unsigned>> set_elems;
  unsigned max_ord = 0;
};

// Reads the view off the labels. Throws ContractError when m was not shaped
// by so_structure_of.
TruncationView truncation_view(const FiniteStructure& m);

// The finite truncation at k: sort Ord holds the ordinals 0..k (labeled by
// their numerals, also exposed as constants), sort SOrd holds every subset of
// {0..k-1} (labeled like "{0,2}"). < and in are the real order and
// membership; the pairing function G maps an ordinal pair to its pairing
// value when that value stays at or below k and is otherwise left undefined,
// while any argument outside Ord gets the junk value 0.
// Throws ResourceLimitError when k exceeds limits.truncation_limit.
FiniteStructure so_structure_of(unsigned k, const Limits& limits = default_limits());

// Least alpha at or below the largest ordinal of the truncation such that phi
// evaluates the same with all ordinal quantifiers restricted to the ordinals
// below alpha and all set quantifiers to subsets of those, at each of the
// given parameter assignments. Checks only the supplied assignments (an empty
// list means the empty assignment). Returns nullopt when no such alpha
// exists. Throws ContractError when m does not look like a truncation built
// by so_structure_of.
std::optional<Ordinal> reflect_search(const Formula& phi, const FiniteStructure& m,
                                      const std::vector<Assignment>& params = {});

}  // namespace ordkernel
