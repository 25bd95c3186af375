#include "ordkernel/setops.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordkernel/errors.hpp"

namespace ordkernel {

bool iso(const SetCode& a, const SetCode& b) { return collapse(a) == collapse(b); }

std::optional<std::vector<OrdPair>> iso_witness(const SetCode& a, const SetCode& b) {
  auto va = collapse_values(a.rel(), a.bot());
  auto vb = collapse_values(b.rel(), b.bot());
  if (va.at(a.top()) != vb.at(b.top())) return std::nullopt;
  // Equal collapses mean equal value inventories, and within one code every
  // value occurs at exactly one node.
  std::map<HFSet, Ordinal> node_of_b;
  for (const auto& [node, v] : vb) node_of_b.emplace(v, node);
  std::vector<OrdPair> w;
  w.emplace_back(a.bot(), b.bot());
  for (const auto& [node, v] : va) w.emplace_back(node, node_of_b.at(v));
  std::sort(w.begin(), w.end());
  return w;
}

bool mem(const SetCode& a, const SetCode& b) {
  HFSet va = collapse(a);
  auto vb = collapse_values(b.rel(), b.bot());
  const OrdSet top_preds = b.rel().preds(b.top());
  for (const Ordinal& beta : top_preds.elems()) {
    if (beta == b.bot()) continue;
    if (vb.at(beta) == va) return true;
  }
  return false;
}

std::vector<Ordinal> element_nodes(const SetCode& a) {
  std::vector<Ordinal> out;
  const OrdSet top_preds = a.rel().preds(a.top());
  for (const Ordinal& beta : top_preds.elems())
    if (beta != a.bot()) out.push_back(beta);
  return out;
}

SetCode element_at(const SetCode& a, const Ordinal& node) {
  if (node == a.bot() || !a.field().contains(node))
    throw DomainError("node does not carry a sub-code");
  return SetCode::from(cut(a, node));
}

SetCode empty_set_code() { return SetCode::from(RelCode({{0, 1}})); }

RelCode build_from_predecessors_rel(const RelCode& r, const OrdSet& d, const Ordinal& alpha) {
  std::vector<OrdPair> pairs;
  for (const Ordinal& delta : d.elems()) {
    pairs.emplace_back(delta, alpha);
    const RelCode below = cut_rel(r, delta);
    for (const auto& p : below.pairs()) pairs.push_back(p);
  }
  return RelCode(std::move(pairs));
}

SetCode build_from_predecessors(const SetCode& a, const OrdSet& d, const Ordinal& alpha) {
  if (d.empty()) throw DomainError("build needs at least one predecessor node");
  OrdSet f = a.field();
  if (!d.subset_of(f) || d.contains(a.bot()))
    throw DomainError("predecessor nodes must be field nodes other than the bottom");
  if (f.contains(alpha)) throw DomainError("new top must not occur in the field");
  return SetCode::from(build_from_predecessors_rel(a.rel(), d, alpha));
}

SetCode code_of_ordinal(const Ordinal& n, const Limits& limits) {
  if (n < 0) throw DomainError("ordinal expected");
  if (n > limits.ordinal_code_limit) throw ResourceLimitError("ordinal code too large");
  std::vector<OrdPair> pairs{{0, 1}};
  for (Ordinal b = 2; b <= n + 1; ++b)
    for (Ordinal a = 1; a < b; ++a) pairs.emplace_back(a, b);
  return SetCode::from(RelCode(std::move(pairs)));
}

SetCode separation_code(const SetCode& a, const std::function<bool(const SetCode&)>& keep) {
  OrdSet d;
  for (const Ordinal& beta : element_nodes(a))
    if (keep(element_at(a, beta))) d.insert(beta);
  if (d.empty()) return empty_set_code();
  return build_from_predecessors(a, d, lub(a.field()));
}

SetCode union_code(const SetCode& a) {
  OrdSet d;
  for (const Ordinal& gamma : element_nodes(a)) {
    const OrdSet ps = a.rel().preds(gamma);
    for (const Ordinal& beta : ps.elems())
      if (beta != a.bot()) d.insert(beta);
  }
  if (d.empty()) return empty_set_code();
  return build_from_predecessors(a, d, lub(a.field()));
}

SetCode choice_code(const SetCode& a) {
  std::vector<OrdSet> member_nodes;
  for (const Ordinal& beta : element_nodes(a)) {
    OrdSet ms = a.rel().preds(beta);
    ms.erase(a.bot());
    if (ms.empty()) throw DomainError("choice on a family with an empty member");
    member_nodes.push_back(std::move(ms));
  }
  // Distinct nodes of one code carry distinct sets, so node-level
  // disjointness is value-level disjointness.
  for (std::size_t i = 0; i < member_nodes.size(); ++i)
    for (std::size_t j = i + 1; j < member_nodes.size(); ++j)
      if (!member_nodes[i].intersect(member_nodes[j]).empty())
        throw DomainError("choice on a family that is not pairwise disjoint");
  if (member_nodes.empty()) return empty_set_code();
  OrdSet d;
  for (const OrdSet& ms : member_nodes) d.insert(ms.elems().front());
  return build_from_predecessors(a, d, lub(a.field()));
}

SetCode pair_code(const SetCode& a, const SetCode& b) {
  auto va = collapse_values(a.rel(), a.bot());
  auto vb = collapse_values(b.rel(), b.bot());
  std::map<HFSet, Ordinal> a_node_of;
  for (const auto& [node, v] : va) a_node_of.emplace(v, node);

  Ordinal next = lub(a.field());
  std::map<Ordinal, Ordinal> rename;
  rename.emplace(b.bot(), a.bot());
  const OrdSet bfield = b.field();
  for (const Ordinal& x : bfield.elems()) {
    if (x == b.bot()) continue;
    auto it = a_node_of.find(vb.at(x));
    if (it != a_node_of.end()) {
      rename.emplace(x, it->second);
    } else {
      rename.emplace(x, next);
      next += 1;
    }
  }

  std::vector<OrdPair> pairs = a.rel().pairs();
  for (const auto& p : b.rel().pairs())
    pairs.emplace_back(rename.at(p.first), rename.at(p.second));
  RelCode merged(std::move(pairs));

  OrdSet d;
  d.insert(a.top());
  d.insert(rename.at(b.top()));
  return SetCode::from(build_from_predecessors_rel(merged, d, next));
}

SetCode power_code(const SetCode& a, const Limits& limits) {
  std::vector<Ordinal> elems = element_nodes(a);
  if (elems.size() > limits.pow_base_limit) throw ResourceLimitError("power base too large");
  OrdSet succ_of_bot = a.rel().succs(a.bot());
  if (succ_of_bot.size() != 1) throw ContractError("set code bottom without a single successor");
  Ordinal s = succ_of_bot.elems().front();

  RelCode big;
  for (const Ordinal& delta : elems) {
    const RelCode below = cut(a, delta);
    for (const auto& p : below.pairs()) big.insert(p);
  }
  const RelCode below_s = cut(a, s);
  for (const auto& p : below_s.pairs()) big.insert(p);

  std::map<OrdSet, Ordinal> node_with_preds;
  const OrdSet big_field = big.field();
  for (const Ordinal& x : big_field.elems()) node_with_preds.emplace(big.preds(x), x);

  Ordinal zeta = lub(a.field());
  PowWitness w = pow_witness(OrdSet(elems), limits);

  std::vector<OrdPair> pairs = big.pairs();
  std::vector<Ordinal> subset_nodes;
  Ordinal used_max = big.field().empty() ? Ordinal(0) : big.field().elems().back();
  for (const auto& [z, xi] : w.xi) {
    auto it = node_with_preds.find(z);
    if (it != node_with_preds.end()) {
      subset_nodes.push_back(it->second);
    } else {
      Ordinal nu = godel_pair(xi, zeta);
      for (const Ordinal& alpha : z.elems()) pairs.emplace_back(alpha, nu);
      subset_nodes.push_back(nu);
      used_max = std::max(used_max, nu);
    }
  }
  Ordinal gamma = used_max + 1;
  for (const Ordinal& node : subset_nodes) pairs.emplace_back(node, gamma);
  pairs.emplace_back(s, gamma);
  return SetCode::from(RelCode(std::move(pairs)));
}

SetCode replacement_code(const SetCode& a,
                         const std::function<SetCode(const SetCode&)>& f,
                         const Limits& limits) {
  std::vector<Ordinal> elems = element_nodes(a);
  if (elems.empty()) return empty_set_code();

  std::set<HFSet> images;
  for (const Ordinal& beta : elems) {
    SetCode x = element_at(a, beta);
    SetCode y = f(x);
    if (y.field().size() > limits.replacement_field_limit)
      throw ResourceLimitError("replacement image too large");
    SetCode y2 = f(encode_hf(collapse(x)));
    if (y2.field().size() > limits.replacement_field_limit)
      throw ResourceLimitError("replacement image too large");
    HFSet w = collapse(y);
    if (w != collapse(y2)) throw ContractError("replacement map does not respect isomorphism");
    images.insert(std::move(w));
  }

  // Assemble the membership graph on the union of the images' transitive
  // closures, nodes numbered 1..n in canonical value order.
  std::set<HFSet> values;
  std::vector<HFSet> stack(images.begin(), images.end());
  while (!stack.empty()) {
    HFSet v = std::move(stack.back());
    stack.pop_back();
    if (!values.insert(v).second) continue;
    for (const HFSet& m : v.elements()) stack.push_back(m);
  }
  std::map<HFSet, Ordinal> id;
  Ordinal n = 0;
  for (const HFSet& v : values) {
    n += 1;
    id.emplace(v, n);
  }
  std::vector<OrdPair> pairs;
  for (const HFSet& v : values)
    for (const HFSet& m : v.elements()) pairs.emplace_back(id.at(m), id.at(v));
  pairs.emplace_back(0, id.at(HFSet()));
  Ordinal gamma = n + 1;
  for (const HFSet& w : images) pairs.emplace_back(id.at(w), gamma);
  return SetCode::from(RelCode(std::move(pairs)));
}

namespace {

// Mask-level screening on uint8 adjacency rows; only survivors are
// materialized as relations.
bool mask_is_set_code(const std::vector<std::pair<int, int>>& cells, std::uint64_t mask,
                      unsigned fb) {
  if (mask == 0) return false;
  unsigned succ[8] = {0}, pred[8] = {0};
  unsigned field = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!(mask >> k & 1)) continue;
    int i = cells[k].first, j = cells[k].second;
    succ[i] |= 1u << j;
    pred[j] |= 1u << i;
    field |= (1u << i) | (1u << j);
  }

  // fund: peel nodes whose remaining predecessors are gone
  unsigned alive = field;
  for (;;) {
    unsigned removable = 0;
    for (unsigned i = 0; i < fb; ++i)
      if ((alive >> i & 1) && (pred[i] & alive) == 0) removable |= 1u << i;
    if (removable == 0) break;
    alive &= ~removable;
  }
  if (alive != 0) return false;

  // ext: distinct predecessor sets over the field
  for (unsigned i = 0; i < fb; ++i) {
    if (!(field >> i & 1)) continue;
    for (unsigned j = i + 1; j < fb; ++j)
      if ((field >> j & 1) && pred[i] == pred[j]) return false;
  }

  // unibotsuc: a predecessor-less field node has exactly one successor
  for (unsigned i = 0; i < fb; ++i)
    if ((field >> i & 1) && pred[i] == 0 && __builtin_popcount(succ[i]) != 1) return false;

  // unitop: some node reaches the whole field downward (the relation is
  // well founded here, so chains reduce to reachability)
  for (unsigned t = 0; t < fb; ++t) {
    if (!(field >> t & 1)) continue;
    unsigned seen = 1u << t, work = 1u << t;
    while (work) {
      unsigned i = static_cast<unsigned>(__builtin_ctz(work));
      work &= work - 1;
      unsigned fresh = pred[i] & ~seen;
      seen |= fresh;
      work |= fresh;
    }
    if (seen == field) return true;
  }
  return false;
}

}  // namespace

SetCodeEnumerator::SetCodeEnumerator(unsigned field_bound, const Limits& limits) : fb_(field_bound) {
  if (field_bound < 1) throw DomainError("field bound must be positive");
  if (field_bound > limits.enum_field_limit) throw ResourceLimitError("field bound too large");
  for (unsigned i = 0; i < field_bound; ++i)
    for (unsigned j = 0; j < field_bound; ++j)
      if (i != j) cells_.emplace_back(int(i), int(j));
  mask_end_ = std::uint64_t(1) << cells_.size();
}

std::optional<SetCode> SetCodeEnumerator::next() {
  while (mask_ < mask_end_) {
    std::uint64_t m = mask_++;
    if (!mask_is_set_code(cells_, m, fb_)) continue;
    std::vector<OrdPair> pairs;
    for (std::size_t k = 0; k < cells_.size(); ++k)
      if (m >> k & 1) pairs.emplace_back(cells_[k].first, cells_[k].second);
    return SetCode::from(RelCode(std::move(pairs)));
  }
  return std::nullopt;
}

std::vector<SetCode> enumerate_set_codes(unsigned field_bound, const Limits& limits) {
  std::vector<SetCode> out;
  SetCodeEnumerator e(field_bound, limits);
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace ordkernel
