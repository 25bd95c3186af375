#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ordkernel/ordset.hpp"

namespace ordkernel {

// A finite relation on ordinals. A stored pair (b, a) is the edge "b a a",
// read: b is a predecessor of a. Kept sorted and duplicate-free.
class RelCode {
 public:
  RelCode() = default;
  explicit RelCode(std::vector<OrdPair> pairs);

  const std::vector<OrdPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  bool has_edge(const Ordinal& from, const Ordinal& to) const;

  void insert(const OrdPair& p);

  OrdSet field() const;
  OrdSet preds(const Ordinal& a) const;
  OrdSet succs(const Ordinal& a) const;

  // Every node reachable from start by descending predecessor edges,
  // including start itself.
  OrdSet reachable_down(const Ordinal& start) const;

  // Interop with the pair-encoded view: a relation is also a set of
  // ordinals via godel_pair.
  OrdSet to_ordset() const;
  static RelCode from_ordset(const OrdSet& s);

  bool operator==(const RelCode& other) const = default;
  auto operator<=>(const RelCode& other) const = default;

 private:
  std::vector<OrdPair> pairs_;
};

// Accepts "{(0,1),(1,2)}" or an edge list with one "b->a" per line.
RelCode parse_relcode(const std::string& text);
std::string to_string(const RelCode& r);

// Is there a subset c that witnesses a single descending chain from top
// down to bottom? Such a c induces exactly a simple path: every member but
// the top has one successor in c, every member but the bottom has one
// predecessor in c, and no two members share a successor or predecessor.
// Decided by a backtracking search for an induced path, so it is faithful
// on cyclic relations too.
bool chain_exists(const RelCode& a, const Ordinal& top, const Ordinal& bottom);

struct Classification {
  bool nonempty = false;
  bool fund = false;       // every non-empty subset of the field has a minimal element
  bool ext = false;        // distinct field nodes have distinct predecessor sets
  bool unitop = false;     // some node reaches every field node by chains
  bool unibotsuc = false;  // every predecessor-less field node has exactly one successor
  bool is_set = false;
  std::optional<Ordinal> bot;  // the unique predecessor-less node, when unique
  std::optional<Ordinal> top;  // the unique chain-top, when unique
};

// Each flag is computed from its definition; none presupposes another.
Classification classify(const RelCode& a);

// A relation passing all five checks, with its bottom and top.
class SetCode {
 public:
  static SetCode from(const RelCode& rel);  // DomainError when not a set code
  static std::optional<SetCode> try_from(const RelCode& rel);

  const RelCode& rel() const { return rel_; }
  const Ordinal& bot() const { return bot_; }
  const Ordinal& top() const { return top_; }
  OrdSet field() const { return rel_.field(); }

  bool operator==(const SetCode& other) const { return rel_ == other.rel_; }

 private:
  SetCode(RelCode rel, Ordinal bot, Ordinal top);
  RelCode rel_;
  Ordinal bot_, top_;
};

// The pairs of a both of whose components are reachable from at. For a set
// code this is the sub-code rooted at the given node (the whole code when
// at is the top, the empty relation when at is the bottom).
RelCode cut(const SetCode& a, const Ordinal& at);
RelCode cut_rel(const RelCode& a, const Ordinal& at);  // same, untyped carrier

std::string to_string(const Classification& c);

}  // namespace ordkernel
