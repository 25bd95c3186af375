#include "ordkernel/ordinal.hpp"

#include <boost/functional/hash.hpp>

#include "ordkernel/errors.hpp"

namespace ordkernel {

Ordinal godel_pair(const Ordinal& a, const Ordinal& b) {
  if (a < 0 || b < 0) throw DomainError("godel_pair: negative argument");
  if (a < b) return b * b + a;
  return a * a + a + b;
}

OrdPair unpair(const Ordinal& g) {
  if (g < 0) throw DomainError("unpair: negative argument");
  Ordinal m = boost::multiprecision::sqrt(g);
  Ordinal rest = g - m * m;
  if (rest < m) return {rest, m};   // a < b branch: g = b*b + a
  return {m, rest - m};             // a >= b branch: g = a*a + a + b
}

bool star_less(const OrdPair& p, const OrdPair& q) {
  const Ordinal& mp = p.first < p.second ? p.second : p.first;
  const Ordinal& mq = q.first < q.second ? q.second : q.first;
  if (mp != mq) return mp < mq;
  if (p.first != q.first) return p.first < q.first;
  return p.second < q.second;
}

Ordinal tuple_encode(const std::vector<Ordinal>& xs) {
  if (xs.empty()) throw ContractError("tuple_encode: arity must be at least 1");
  Ordinal acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = godel_pair(xs[i], acc);
  return acc;
}

std::vector<Ordinal> tuple_decode(const Ordinal& g, std::size_t arity) {
  if (arity == 0) throw ContractError("tuple_decode: arity must be at least 1");
  std::vector<Ordinal> out;
  out.reserve(arity);
  Ordinal rest = g;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    auto [x, r] = unpair(rest);
    out.push_back(x);
    rest = r;
  }
  out.push_back(rest);
  return out;
}

bool godel_closed(const Ordinal& eta) {
  if (eta < 0) throw DomainError("godel_closed: negative argument");
  if (eta <= 1) return true;
  // godel_pair is monotone in both coordinates, so the largest value over
  // eta x eta is attained at (eta-1, eta-1).
  return godel_pair(eta - 1, eta - 1) < eta;
}

Ordinal parse_ordinal(const std::string& text) {
  if (text.empty()) throw DomainError("parse_ordinal: empty input");
  for (char c : text)
    if (c < '0' || c > '9') throw DomainError("parse_ordinal: not a non-negative integer: " + text);
  return Ordinal(text);
}

std::size_t ordinal_hash(const Ordinal& x) {
  return boost::hash<Ordinal>{}(x);
}

std::size_t OrdinalVectorHash::operator()(const std::vector<Ordinal>& v) const {
  std::size_t h = v.size();
  for (const Ordinal& x : v) boost::hash_combine(h, ordinal_hash(x));
  return h;
}

}  // namespace ordkernel
