#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ordkernel/hf.hpp"
#include "ordkernel/limits.hpp"
#include "ordkernel/relcode.hpp"

namespace ordkernel {

// Two codes denote the same set exactly when their collapses agree.
bool iso(const SetCode& a, const SetCode& b);

// The unique value-preserving bijection between the fields, as pairs
// (node of a, node of b) sorted by the first component; bottom maps to
// bottom. Empty when the codes are not isomorphic.
std::optional<std::vector<OrdPair>> iso_witness(const SetCode& a, const SetCode& b);

// Does a denote a member of the set b denotes? Holds when some element
// node of b cuts to a code isomorphic to a.
bool mem(const SetCode& a, const SetCode& b);

// Element nodes of a: the predecessors of the top other than the bottom.
std::vector<Ordinal> element_nodes(const SetCode& a);

// The sub-code rooted at one of a's nodes, as a set code.
SetCode element_at(const SetCode& a, const Ordinal& node);

// The canonical code {(0,1)} of the empty set.
SetCode empty_set_code();

// The set whose elements are the sets coded below the nodes of d: a fresh
// top alpha is put above d and everything below d is kept. Requires d to be
// a non-empty subset of field(a) minus the bottom, and alpha fresh.
SetCode build_from_predecessors(const SetCode& a, const OrdSet& d, const Ordinal& alpha);

// Same construction on a bare relation with a known bottom; no validation
// of r, used for assembled relations that have several maximal nodes.
RelCode build_from_predecessors_rel(const RelCode& r, const OrdSet& d, const Ordinal& alpha);

// The canonical code of the von Neumann ordinal n:
// {(0,1)} plus all (a,b) with 0 < a < b <= n+1.
SetCode code_of_ordinal(const Ordinal& n, const Limits& limits = default_limits());

// Elements of a whose cut satisfies keep.
SetCode separation_code(const SetCode& a, const std::function<bool(const SetCode&)>& keep);

// Union of the elements of a.
SetCode union_code(const SetCode& a);

// One element out of each element of a; the representative below an
// element node is its least predecessor node. Requires the elements to be
// non-empty and pairwise disjoint.
SetCode choice_code(const SetCode& a);

// The unordered pair of the two coded sets. Nodes of a keep their names,
// nodes of b are renamed: onto the a-node carrying the same set where one
// exists, onto fresh ordinals otherwise.
SetCode pair_code(const SetCode& a, const SetCode& b);

// The power set. Subsets of the element-node set that a already codes are
// reused; the rest get fresh name nodes pair(xi(z), lub(field(a))).
SetCode power_code(const SetCode& a, const Limits& limits = default_limits());

// The image of a under f, where f maps codes to codes and must respect
// isomorphism (spot-checked per element; violations raise ContractError).
SetCode replacement_code(const SetCode& a,
                         const std::function<SetCode(const SetCode&)>& f,
                         const Limits& limits = default_limits());

// Streams every set code whose field lies inside {0, ..., field_bound-1},
// in ascending order of the edge bitmask (cells row-major, diagonal cells
// skipped since a code never relates a node to itself).
class SetCodeEnumerator {
 public:
  explicit SetCodeEnumerator(unsigned field_bound, const Limits& limits = default_limits());
  std::optional<SetCode> next();
  std::uint64_t candidates_tried() const { return mask_; }

 private:
  unsigned fb_;
  std::uint64_t mask_ = 0;
  std::uint64_t mask_end_;
  std::vector<std::pair<int, int>> cells_;
};

std::vector<SetCode> enumerate_set_codes(unsigned field_bound,
                                         const Limits& limits = default_limits());

}  // namespace ordkernel
