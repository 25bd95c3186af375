#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ordkernel {

using Ordinal = boost::multiprecision::cpp_int;
using OrdPair = std::pair<Ordinal, Ordinal>;

// Rank of (a, b) in the max-lexicographic well-ordering of ordinal pairs:
// (a,b) precedes (c,d) iff max(a,b) < max(c,d), or the maxima agree and
// a < c, or additionally a = c and b < d. Closed form:
//   a < b:  b*b + a
//   a >= b: a*a + a + b
Ordinal godel_pair(const Ordinal& a, const Ordinal& b);

// Inverse of godel_pair.
OrdPair unpair(const Ordinal& g);

// Short name matching the usual notation G(a,b).
inline Ordinal pair(const Ordinal& a, const Ordinal& b) { return godel_pair(a, b); }

// The ordering itself, decided coordinate-wise (no ranks computed).
bool star_less(const OrdPair& p, const OrdPair& q);

// Right-nested tuple coding: enc([x]) = x, enc([x, rest...]) = pair(x, enc(rest)).
// Arity must be at least 1.
Ordinal tuple_encode(const std::vector<Ordinal>& xs);
std::vector<Ordinal> tuple_decode(const Ordinal& g, std::size_t arity);

// True iff godel_pair maps eta x eta into eta. Among finite ordinals this
// holds only for 0 and 1; monotonicity reduces the check to the top corner.
bool godel_closed(const Ordinal& eta);

// Decimal parsing with a non-negativity check.
Ordinal parse_ordinal(const std::string& text);

std::size_t ordinal_hash(const Ordinal& x);

struct OrdinalVectorHash {
  std::size_t operator()(const std::vector<Ordinal>& v) const;
};

}  // namespace ordkernel
