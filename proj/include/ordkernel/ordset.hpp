#pragma once
#include <string>
#include <vector>

#include "ordkernel/limits.hpp"
#include "ordkernel/ordinal.hpp"

namespace ordkernel {

// A finite set of ordinals, kept sorted and duplicate-free.
class OrdSet {
 public:
  OrdSet() = default;
  explicit OrdSet(std::vector<Ordinal> elems);

  const std::vector<Ordinal>& elems() const { return elems_; }
  bool contains(const Ordinal& x) const;
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }

  void insert(const Ordinal& x);
  void erase(const Ordinal& x);

  OrdSet unite(const OrdSet& other) const;
  OrdSet intersect(const OrdSet& other) const;
  OrdSet subtract(const OrdSet& other) const;
  bool subset_of(const OrdSet& other) const;

  bool operator==(const OrdSet& other) const = default;
  auto operator<=>(const OrdSet& other) const = default;

 private:
  std::vector<Ordinal> elems_;
};

// Textual form "{0,2,5}"; parse accepts any order, print is sorted.
OrdSet parse_ordset(const std::string& text);
std::string to_string(const OrdSet& s);

// {0, ..., a-1}. Guarded by the segment limit.
OrdSet initial_segment(const Ordinal& a, const Limits& limits = default_limits());

// Least strict upper bound: max + 1, or 0 for the empty set.
Ordinal lub(const OrdSet& s);

// The elements of s are read as encoded pairs for the next three.
OrdSet domain_of(const OrdSet& s);
OrdSet range_of(const OrdSet& s);
OrdSet field_of(const OrdSet& s);

// Relational composition: pairs (a,b) with some c, (a,c) in f and (c,b) in g.
OrdSet compose(const OrdSet& g, const OrdSet& f);

// Pairs of f whose first component lies in y.
OrdSet restrict_to(const OrdSet& f, const OrdSet& y);
inline OrdSet restrict(const OrdSet& f, const OrdSet& y) { return restrict_to(f, y); }

// Second components of pairs of f whose first component lies in x.
OrdSet image(const OrdSet& f, const OrdSet& x);

// A power-set witness for a finite ordinal set: every non-empty z subseteq a
// gets a tag xi(z), and code = { pair(b, xi(z)) : b in z }. Injectivity of
// godel_pair makes each xi(z) the unique tag satisfying
//   forall b: b in z  iff  pair(b, xi(z)) in code.
struct PowWitness {
  OrdSet base;
  OrdSet code;
  // Rows in canonical subset order: by size, then lexicographic.
  std::vector<std::pair<OrdSet, Ordinal>> xi;

  const Ordinal* xi_of(const OrdSet& z) const;
};

PowWitness pow_witness(const OrdSet& a, const Limits& limits = default_limits());

// Non-empty subsets of a in the canonical order used by pow_witness.
std::vector<OrdSet> nonempty_subsets(const OrdSet& a);

}  // namespace ordkernel
