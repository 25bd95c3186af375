#include "ordkernel/relcode.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ordkernel/errors.hpp"

namespace ordkernel {

RelCode::RelCode(std::vector<OrdPair> pairs) : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (p.first < 0 || p.second < 0) throw DomainError("relation pair with negative component");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool RelCode::has_edge(const Ordinal& from, const Ordinal& to) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), OrdPair{from, to});
}

void RelCode::insert(const OrdPair& p) {
  if (p.first < 0 || p.second < 0) throw DomainError("relation pair with negative component");
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

OrdSet RelCode::field() const {
  std::vector<Ordinal> v;
  v.reserve(pairs_.size() * 2);
  for (const auto& p : pairs_) {
    v.push_back(p.first);
    v.push_back(p.second);
  }
  return OrdSet(std::move(v));
}

OrdSet RelCode::preds(const Ordinal& a) const {
  std::vector<Ordinal> v;
  for (const auto& p : pairs_)
    if (p.second == a) v.push_back(p.first);
  return OrdSet(std::move(v));
}

OrdSet RelCode::succs(const Ordinal& a) const {
  std::vector<Ordinal> v;
  for (const auto& p : pairs_)
    if (p.first == a) v.push_back(p.second);
  return OrdSet(std::move(v));
}

OrdSet RelCode::reachable_down(const Ordinal& start) const {
  OrdSet seen;
  std::vector<Ordinal> work{start};
  seen.insert(start);
  while (!work.empty()) {
    Ordinal cur = work.back();
    work.pop_back();
    for (const auto& p : pairs_) {
      if (p.second == cur && !seen.contains(p.first)) {
        seen.insert(p.first);
        work.push_back(p.first);
      }
    }
  }
  return seen;
}

OrdSet RelCode::to_ordset() const {
  std::vector<Ordinal> v;
  v.reserve(pairs_.size());
  for (const auto& p : pairs_) v.push_back(godel_pair(p.first, p.second));
  return OrdSet(std::move(v));
}

RelCode RelCode::from_ordset(const OrdSet& s) {
  std::vector<OrdPair> v;
  v.reserve(s.size());
  for (const auto& g : s.elems()) v.push_back(unpair(g));
  return RelCode(std::move(v));
}

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

Ordinal read_number(const std::string& t, std::size_t& i) {
  skip_ws(t, i);
  std::size_t start = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == start) throw DomainError("expected a number in relation literal");
  return Ordinal(t.substr(start, i - start));
}

}  // namespace

RelCode parse_relcode(const std::string& text) {
  std::vector<OrdPair> pairs;
  std::size_t i = 0;
  skip_ws(text, i);
  bool braced = false;
  if (i < text.size() && text[i] == '{') {
    braced = true;
    ++i;
  }
  for (;;) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    char ch = text[i];
    if (ch == '}') {
      if (!braced) throw DomainError("unexpected '}' in relation literal");
      ++i;
      braced = false;
      break;
    }
    if (ch == ',' || ch == ';') {
      ++i;
      continue;
    }
    if (ch == '(') {
      ++i;
      Ordinal b = read_number(text, i);
      skip_ws(text, i);
      if (i >= text.size() || text[i] != ',') throw DomainError("expected ',' in relation pair");
      ++i;
      Ordinal a = read_number(text, i);
      skip_ws(text, i);
      if (i >= text.size() || text[i] != ')') throw DomainError("expected ')' in relation pair");
      ++i;
      pairs.emplace_back(b, a);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Ordinal b = read_number(text, i);
      skip_ws(text, i);
      if (i + 1 < text.size() && text[i] == '-' && text[i + 1] == '>') {
        i += 2;
        Ordinal a = read_number(text, i);
        pairs.emplace_back(b, a);
        continue;
      }
      throw DomainError("expected '->' in relation edge");
    }
    throw DomainError("unexpected character in relation literal");
  }
  skip_ws(text, i);
  if (braced || i != text.size()) throw DomainError("trailing text in relation literal");
  return RelCode(std::move(pairs));
}

std::string to_string(const RelCode& r) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& p : r.pairs()) {
    if (!first) out << ',';
    first = false;
    out << '(' << p.first << ',' << p.second << ')';
  }
  out << '}';
  return out.str();
}

namespace {

// Backtracking search for an induced ascending path bottom -> ... -> top.
// A node may join the path only when its sole path predecessor is the
// current endpoint and it has no edge back into the path.
bool extend_chain(const RelCode& a, const Ordinal& top, std::vector<Ordinal>& path) {
  const Ordinal cur = path.back();  // copy: path reallocates during recursion
  if (cur == top) return true;
  const OrdSet next = a.succs(cur);
  for (const Ordinal& y : next.elems()) {
    if (std::find(path.begin(), path.end(), y) != path.end()) continue;
    if (a.has_edge(y, y)) continue;
    bool ok = true;
    for (const Ordinal& z : path) {
      if (a.has_edge(y, z)) { ok = false; break; }
      if (z != cur && a.has_edge(z, y)) { ok = false; break; }
    }
    if (!ok) continue;
    path.push_back(y);
    if (extend_chain(a, top, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool chain_exists(const RelCode& a, const Ordinal& top, const Ordinal& bottom) {
  OrdSet f = a.field();
  if (!f.contains(top) || !f.contains(bottom)) return false;
  if (a.has_edge(bottom, bottom)) return false;
  if (top == bottom) return true;
  std::vector<Ordinal> path{bottom};
  return extend_chain(a, top, path);
}

namespace {

bool acyclic(const RelCode& a) {
  OrdSet f = a.field();
  std::map<Ordinal, int> color;  // 0 unseen, 1 on stack, 2 done
  for (const Ordinal& root : f.elems()) {
    if (color[root] != 0) continue;
    // explicit stack of (node, next successor index)
    std::vector<std::pair<Ordinal, std::size_t>> stack;
    std::vector<std::vector<Ordinal>> succs;
    color[root] = 1;
    stack.push_back({root, 0});
    succs.push_back(a.succs(root).elems());
    while (!stack.empty()) {
      auto& [node, idx] = stack.back();
      if (idx >= succs.back().size()) {
        color[node] = 2;
        stack.pop_back();
        succs.pop_back();
        continue;
      }
      Ordinal next = succs.back()[idx++];
      int c = color[next];
      if (c == 1) return false;
      if (c == 0) {
        color[next] = 1;
        stack.push_back({next, 0});
        succs.push_back(a.succs(next).elems());
      }
    }
  }
  return true;
}

bool reaches_all(const RelCode& a, const Ordinal& tau, const OrdSet& field, bool fund) {
  if (fund) return a.reachable_down(tau) == field;
  for (const Ordinal& beta : field.elems())
    if (!chain_exists(a, tau, beta)) return false;
  return true;
}

}  // namespace

Classification classify(const RelCode& a) {
  Classification c;
  c.nonempty = !a.empty();
  OrdSet f = a.field();
  c.fund = acyclic(a);

  c.ext = true;
  {
    std::vector<OrdSet> predsets;
    for (const Ordinal& x : f.elems()) predsets.push_back(a.preds(x));
    std::sort(predsets.begin(), predsets.end());
    for (std::size_t i = 0; i + 1 < predsets.size(); ++i)
      if (predsets[i] == predsets[i + 1]) { c.ext = false; break; }
  }

  c.unibotsuc = true;
  {
    std::vector<Ordinal> predless;
    for (const Ordinal& x : f.elems())
      if (a.preds(x).empty()) {
        predless.push_back(x);
        if (a.succs(x).size() != 1) c.unibotsuc = false;
      }
    if (predless.size() == 1) c.bot = predless.front();
  }

  {
    std::vector<Ordinal> tops;
    for (const Ordinal& tau : f.elems())
      if (reaches_all(a, tau, f, c.fund)) tops.push_back(tau);
    c.unitop = !tops.empty();
    if (tops.size() == 1) c.top = tops.front();
  }

  c.is_set = c.nonempty && c.fund && c.ext && c.unitop && c.unibotsuc;
  return c;
}

SetCode::SetCode(RelCode rel, Ordinal bot, Ordinal top)
    : rel_(std::move(rel)), bot_(std::move(bot)), top_(std::move(top)) {}

SetCode SetCode::from(const RelCode& rel) {
  Classification c = classify(rel);
  if (!c.is_set) throw DomainError("relation is not a set code: " + to_string(c));
  if (!c.bot || !c.top) throw ContractError("set code without unique bottom or top");
  return SetCode(rel, *c.bot, *c.top);
}

std::optional<SetCode> SetCode::try_from(const RelCode& rel) {
  Classification c = classify(rel);
  if (!c.is_set || !c.bot || !c.top) return std::nullopt;
  return SetCode(rel, *c.bot, *c.top);
}

RelCode cut_rel(const RelCode& a, const Ordinal& at) {
  OrdSet down = a.reachable_down(at);
  std::vector<OrdPair> keep;
  for (const auto& p : a.pairs())
    if (down.contains(p.first) && down.contains(p.second)) keep.push_back(p);
  return RelCode(std::move(keep));
}

RelCode cut(const SetCode& a, const Ordinal& at) {
  if (!a.field().contains(at)) throw DomainError("cut point must lie in the field");
  return cut_rel(a.rel(), at);
}

std::string to_string(const Classification& c) {
  std::ostringstream out;
  auto flag = [&](const char* name, bool v) { out << name << '=' << (v ? "true" : "false") << ' '; };
  flag("nonempty", c.nonempty);
  flag("fund", c.fund);
  flag("ext", c.ext);
  flag("unitop", c.unitop);
  flag("unibotsuc", c.unibotsuc);
  flag("set", c.is_set);
  out << "bot=";
  if (c.bot) out << *c.bot; else out << '-';
  out << " top=";
  if (c.top) out << *c.top; else out << '-';
  return out.str();
}

}  // namespace ordkernel
