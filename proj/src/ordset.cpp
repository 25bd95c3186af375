#include "ordkernel/ordset.hpp"

#include <algorithm>
#include <sstream>

#include "ordkernel/errors.hpp"

namespace ordkernel {

OrdSet::OrdSet(std::vector<Ordinal> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 0) throw DomainError("OrdSet: negative element");
}

bool OrdSet::contains(const Ordinal& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

void OrdSet::insert(const Ordinal& x) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) elems_.insert(it, x);
}

void OrdSet::erase(const Ordinal& x) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it != elems_.end() && *it == x) elems_.erase(it);
}

OrdSet OrdSet::unite(const OrdSet& other) const {
  std::vector<Ordinal> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  OrdSet r;
  r.elems_ = std::move(out);
  return r;
}

OrdSet OrdSet::intersect(const OrdSet& other) const {
  std::vector<Ordinal> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
  OrdSet r;
  r.elems_ = std::move(out);
  return r;
}

OrdSet OrdSet::subtract(const OrdSet& other) const {
  std::vector<Ordinal> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out));
  OrdSet r;
  r.elems_ = std::move(out);
  return r;
}

bool OrdSet::subset_of(const OrdSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

OrdSet parse_ordset(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '{') throw DomainError("parse_ordset: expected '{': " + text);
  ++i;
  std::vector<Ordinal> elems;
  skip_ws();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw DomainError("parse_ordset: expected a number: " + text);
      elems.emplace_back(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == '}') { ++i; break; }
      throw DomainError("parse_ordset: expected ',' or '}': " + text);
    }
  }
  skip_ws();
  if (i != text.size()) throw DomainError("parse_ordset: trailing input: " + text);
  return OrdSet(std::move(elems));
}

std::string to_string(const OrdSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Ordinal& x : s.elems()) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << '}';
  return out.str();
}

OrdSet initial_segment(const Ordinal& a, const Limits& limits) {
  if (a < 0) throw DomainError("initial_segment: negative bound");
  if (a > limits.segment_limit)
    throw ResourceLimitError("initial_segment: bound exceeds the configured limit");
  std::vector<Ordinal> elems;
  for (Ordinal x = 0; x < a; ++x) elems.push_back(x);
  OrdSet r(std::move(elems));
  return r;
}

Ordinal lub(const OrdSet& s) {
  if (s.empty()) return 0;
  return s.elems().back() + 1;
}

OrdSet domain_of(const OrdSet& s) {
  OrdSet out;
  for (const Ordinal& g : s.elems()) out.insert(unpair(g).first);
  return out;
}

OrdSet range_of(const OrdSet& s) {
  OrdSet out;
  for (const Ordinal& g : s.elems()) out.insert(unpair(g).second);
  return out;
}

OrdSet field_of(const OrdSet& s) {
  OrdSet out;
  for (const Ordinal& g : s.elems()) {
    auto [a, b] = unpair(g);
    out.insert(a);
    out.insert(b);
  }
  return out;
}

OrdSet compose(const OrdSet& g, const OrdSet& f) {
  OrdSet out;
  for (const Ordinal& pf : f.elems()) {
    auto [a, c] = unpair(pf);
    for (const Ordinal& pg : g.elems()) {
      auto [c2, b] = unpair(pg);
      if (c == c2) out.insert(godel_pair(a, b));
    }
  }
  return out;
}

OrdSet restrict_to(const OrdSet& f, const OrdSet& y) {
  OrdSet out;
  for (const Ordinal& p : f.elems())
    if (y.contains(unpair(p).first)) out.insert(p);
  return out;
}

OrdSet image(const OrdSet& f, const OrdSet& x) {
  OrdSet out;
  for (const Ordinal& p : f.elems()) {
    auto [a, b] = unpair(p);
    if (x.contains(a)) out.insert(b);
  }
  return out;
}

std::vector<OrdSet> nonempty_subsets(const OrdSet& a) {
  const auto& elems = a.elems();
  std::size_t n = elems.size();
  std::vector<OrdSet> out;
  if (n >= 64) throw ResourceLimitError("nonempty_subsets: base too large");
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<Ordinal> z;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) z.push_back(elems[i]);
    out.emplace_back(std::move(z));
  }
  // Canonical order: by size, then lexicographic on the sorted elements.
  std::stable_sort(out.begin(), out.end(), [](const OrdSet& x, const OrdSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.elems() < y.elems();
  });
  return out;
}

const Ordinal* PowWitness::xi_of(const OrdSet& z) const {
  for (const auto& [zs, tag] : xi)
    if (zs == z) return &tag;
  return nullptr;
}

PowWitness pow_witness(const OrdSet& a, const Limits& limits) {
  if (a.size() > limits.pow_base_limit)
    throw ResourceLimitError("pow_witness: 2^|a| subsets exceed the configured limit");
  PowWitness w;
  w.base = a;
  Ordinal next = 0;
  for (OrdSet& z : nonempty_subsets(a)) {
    for (const Ordinal& b : z.elems()) w.code.insert(godel_pair(b, next));
    w.xi.emplace_back(std::move(z), next);
    ++next;
  }
  return w;
}

}  // namespace ordkernel
