#include "ordkernel/hf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ordkernel/errors.hpp"

namespace ordkernel {

HFSet::HFSet(std::vector<HFSet> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool HFSet::contains(const HFSet& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

HFSet HFSet::with(const HFSet& x) const {
  std::vector<HFSet> v = elems_;
  v.push_back(x);
  return HFSet(std::move(v));
}

std::strong_ordering HFSet::operator<=>(const HFSet& other) const {
  return std::lexicographical_compare_three_way(
      elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

namespace {

HFSet parse_hf_at(const std::string& t, std::size_t& i) {
  auto skip = [&] {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  };
  skip();
  if (i >= t.size() || t[i] != '{') throw DomainError("expected '{' in set literal");
  ++i;
  std::vector<HFSet> elems;
  skip();
  if (i < t.size() && t[i] == '}') {
    ++i;
    return HFSet(std::move(elems));
  }
  for (;;) {
    elems.push_back(parse_hf_at(t, i));
    skip();
    if (i >= t.size()) throw DomainError("unterminated set literal");
    if (t[i] == ',') {
      ++i;
      skip();
      continue;
    }
    if (t[i] == '}') {
      ++i;
      return HFSet(std::move(elems));
    }
    throw DomainError("expected ',' or '}' in set literal");
  }
}

}  // namespace

HFSet parse_hf(const std::string& text) {
  std::size_t i = 0;
  HFSet x = parse_hf_at(text, i);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) throw DomainError("trailing text after set literal");
  return x;
}

std::string to_string(const HFSet& x) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const HFSet& e : x.elements()) {
    if (!first) out << ',';
    first = false;
    out << to_string(e);
  }
  out << '}';
  return out.str();
}

std::size_t hf_rank(const HFSet& x) {
  std::size_t r = 0;
  for (const HFSet& e : x.elements()) r = std::max(r, hf_rank(e) + 1);
  return r;
}

HFSet hf_of_ordinal(const Ordinal& n) {
  if (n < 0) throw DomainError("ordinal expected");
  HFSet cur;
  for (Ordinal i = 0; i < n; ++i) cur = cur.with(cur);
  return cur;
}

std::map<Ordinal, HFSet> collapse_values(const RelCode& r, const Ordinal& bot) {
  OrdSet field = r.field();
  const std::vector<Ordinal>& nodes = field.elems();
  std::map<Ordinal, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

  std::vector<std::vector<std::size_t>> pred_of(nodes.size()), succ_of(nodes.size());
  for (const auto& p : r.pairs()) {
    std::size_t from = index.at(p.first), to = index.at(p.second);
    pred_of[to].push_back(from);
    succ_of[from].push_back(to);
  }

  // Kahn order so every predecessor's value is ready first.
  std::vector<std::size_t> missing(nodes.size());
  std::vector<std::size_t> order, queue;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    missing[i] = pred_of[i].size();
    if (missing[i] == 0) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    order.push_back(i);
    for (std::size_t j : succ_of[i])
      if (--missing[j] == 0) queue.push_back(j);
  }
  if (order.size() != nodes.size())
    throw ContractError("collapse on a relation that is not well founded");

  std::vector<HFSet> value(nodes.size());
  std::map<Ordinal, HFSet> out;
  for (std::size_t i : order) {
    if (nodes[i] == bot) continue;
    std::vector<HFSet> members;
    members.reserve(pred_of[i].size());
    for (std::size_t p : pred_of[i])
      if (nodes[p] != bot) members.push_back(value[p]);
    value[i] = HFSet(std::move(members));
    out.emplace(nodes[i], value[i]);
  }
  return out;
}

HFSet collapse(const SetCode& a) {
  auto values = collapse_values(a.rel(), a.bot());
  auto it = values.find(a.top());
  if (it == values.end()) throw ContractError("set code top carries no value");
  return it->second;
}

namespace {

Ordinal number_subterms(const HFSet& x, std::map<HFSet, Ordinal>& ids, Ordinal& next) {
  auto it = ids.find(x);
  if (it != ids.end()) return it->second;
  for (const HFSet& e : x.elements()) number_subterms(e, ids, next);
  Ordinal id = next;
  next += 1;
  ids.emplace(x, id);
  return id;
}

}  // namespace

SetCode encode_hf(const HFSet& x) {
  std::map<HFSet, Ordinal> ids;
  Ordinal next = 1;
  number_subterms(x, ids, next);
  std::vector<OrdPair> edges;
  for (const auto& [set, id] : ids)
    for (const HFSet& e : set.elements()) edges.emplace_back(ids.at(e), id);
  edges.emplace_back(0, ids.at(HFSet()));
  return SetCode::from(RelCode(std::move(edges)));
}

}  // namespace ordkernel
