#pragma once
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ordkernel/relcode.hpp"

namespace ordkernel {

// A hereditarily finite set as a value. Children are kept sorted in the
// canonical order (recursive lexicographic comparison of child lists, a
// proper prefix ordering first) and duplicate-free, so structural equality
// is set equality.
class HFSet {
 public:
  HFSet() = default;  // the empty set
  explicit HFSet(std::vector<HFSet> elements);

  const std::vector<HFSet>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(const HFSet& x) const;
  HFSet with(const HFSet& x) const;  // this set plus one element

  bool operator==(const HFSet& other) const { return elems_ == other.elems_; }
  std::strong_ordering operator<=>(const HFSet& other) const;
  bool operator<(const HFSet& other) const { return (*this <=> other) < 0; }

 private:
  std::vector<HFSet> elems_;
};

// Literal syntax: "{}", "{{},{{}}}". Whitespace is allowed anywhere.
HFSet parse_hf(const std::string& text);
std::string to_string(const HFSet& x);

std::size_t hf_rank(const HFSet& x);

// The von Neumann numeral for n.
HFSet hf_of_ordinal(const Ordinal& n);

// Mostowski values of every non-bottom node of a well-founded relation:
// value(x) is the set of values of x's predecessors other than bot.
std::map<Ordinal, HFSet> collapse_values(const RelCode& r, const Ordinal& bot);

// The set a set code denotes: the value of its top node.
HFSet collapse(const SetCode& a);

// The canonical code for x: nodes are the members of TC({x}) numbered in
// depth-first postorder with elements visited in canonical order, node 0 is
// the bottom with its single edge into the empty set's node, and the other
// edges are exactly membership. collapse(encode_hf(x)) == x.
SetCode encode_hf(const HFSet& x);

}  // namespace ordkernel
