#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "ordkernel/errors.hpp"
#include "ordkernel/ordinal.hpp"
#include "ordkernel/ordset.hpp"
#include "support/oracles.hpp"

using namespace ordkernel;

namespace {
OrdSet set_of(std::initializer_list<int> xs) {
  std::vector<Ordinal> v;
  for (int x : xs) v.push_back(Ordinal(x));
  return OrdSet(v);
}
}  // namespace

TEST_CASE("pairing hand values") {
  CHECK(godel_pair(0, 0) == 0);
  CHECK(godel_pair(0, 1) == 1);
  CHECK(godel_pair(1, 0) == 2);
  CHECK(godel_pair(1, 1) == 3);
  CHECK(godel_pair(2, 1) == 7);
  CHECK(unpair(0) == OrdPair{0, 0});
  CHECK(unpair(7) == OrdPair{2, 1});
  CHECK(unpair(3) == OrdPair{1, 1});
}

TEST_CASE("closed form equals rank in the pair order, coordinates below 200") {
  long long bad = 0;
  for (const auto& [p, rank] : oracles::pair_ranks_below(200))
    if (godel_pair(p.first, p.second) != rank) ++bad;
  REQUIRE(bad == 0);
}

TEST_CASE("pairing bijective on small squares") {
  long long bad = 0;
  for (Ordinal g = 0; g < 10000; ++g) {
    auto [x, y] = unpair(g);
    if (godel_pair(x, y) != g) ++bad;
  }
  for (int a = 0; a < 100; ++a)
    for (int b = 0; b < 100; ++b)
      if (unpair(godel_pair(a, b)) != OrdPair{a, b}) ++bad;
  REQUIRE(bad == 0);
}

TEST_CASE("pairing dominates both coordinates") {
  long long bad = 0;
  for (int a = 0; a < 100; ++a)
    for (int b = 0; b < 100; ++b) {
      Ordinal g = godel_pair(a, b);
      int mx = a > b ? a : b;
      if (g < mx) ++bad;
      if (mx >= 2 && g <= mx) ++bad;
    }
  REQUIRE(bad == 0);
}

TEST_CASE("star_less examples") {
  CHECK(star_less({0, 1}, {1, 0}));
  CHECK_FALSE(star_less({1, 1}, {1, 1}));
  CHECK_FALSE(star_less({2, 0}, {1, 1}));
}

TEST_CASE("star_less agrees with pair values, coordinates below 50") {
  std::vector<OrdPair> ps;
  std::vector<Ordinal> vals;
  for (int a = 0; a < 50; ++a)
    for (int b = 0; b < 50; ++b) {
      ps.emplace_back(a, b);
      vals.push_back(godel_pair(a, b));
    }
  long long bad = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (star_less(ps[i], ps[j]) != (vals[i] < vals[j])) ++bad;
  REQUIRE(bad == 0);
}

TEST_CASE("tuple coding") {
  CHECK(tuple_encode({5}) == 5);
  CHECK(tuple_encode({0, 1}) == 1);
  CHECK(tuple_encode({10, 3}) == 113);
  CHECK(tuple_decode(1, 2) == std::vector<Ordinal>{0, 1});
  CHECK_THROWS_AS(tuple_encode({}), ContractError);
  CHECK_THROWS_AS(tuple_decode(5, 0), ContractError);

  // round trips at several arities
  std::vector<Ordinal> xs;
  for (int k = 0; k < 40; ++k) {
    xs.assign({Ordinal(k), Ordinal(3 * k % 17), Ordinal(k * k % 29), Ordinal(7)});
    for (std::size_t n = 1; n <= xs.size(); ++n) {
      std::vector<Ordinal> t(xs.begin(), xs.begin() + n);
      REQUIRE(tuple_decode(tuple_encode(t), n) == t);
    }
  }
}

TEST_CASE("godel_closed holds only at 0 and 1") {
  CHECK(godel_closed(0));
  CHECK(godel_closed(1));
  CHECK_FALSE(godel_closed(2));
  CHECK_FALSE(godel_closed(3));
  long long closed = 0;
  for (Ordinal eta = 0; eta < 10000; ++eta)
    if (godel_closed(eta)) ++closed;
  REQUIRE(closed == 2);
}

TEST_CASE("parse_ordinal") {
  CHECK(parse_ordinal("123") == 123);
  CHECK(parse_ordinal("0") == 0);
  CHECK_THROWS_AS(parse_ordinal(""), DomainError);
  CHECK_THROWS_AS(parse_ordinal("-1"), DomainError);
  CHECK_THROWS_AS(parse_ordinal("12x"), DomainError);
}

TEST_CASE("initial_segment") {
  CHECK(initial_segment(0) == set_of({}));
  CHECK(initial_segment(1) == set_of({0}));
  CHECK(initial_segment(3) == set_of({0, 1, 2}));
  CHECK_THROWS_AS(initial_segment(Ordinal(1000000)), ResourceLimitError);
}

TEST_CASE("lub") {
  CHECK(lub(set_of({})) == 0);
  CHECK(lub(set_of({0})) == 1);
  CHECK(lub(set_of({2, 5})) == 6);
  for (int k = 0; k < 30; ++k) REQUIRE(lub(initial_segment(k)) == k);
}

TEST_CASE("domain, range, field") {
  CHECK(domain_of(OrdSet({godel_pair(2, 5)})) == set_of({2}));
  CHECK(range_of(set_of({})) == set_of({}));
  CHECK(field_of(OrdSet({godel_pair(0, 1)})) == set_of({0, 1}));
  CHECK(range_of(OrdSet({godel_pair(2, 5), godel_pair(1, 5)})) == set_of({5}));
}

TEST_CASE("compose, restrict, image examples") {
  OrdSet f({godel_pair(0, 1)});
  OrdSet g({godel_pair(1, 1)});
  CHECK(compose(g, f) == OrdSet({godel_pair(0, 1)}));
  CHECK(restrict(OrdSet({godel_pair(0, 1), godel_pair(2, 3)}), set_of({0})) ==
        OrdSet({godel_pair(0, 1)}));
  CHECK(image(f, set_of({})) == set_of({}));
  CHECK(image(f, set_of({0})) == set_of({1}));
}

namespace {
// all relations whose pairs have both components below n, as coded sets
std::vector<OrdSet> relations_below(int n) {
  std::vector<Ordinal> codes;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) codes.push_back(godel_pair(a, b));
  std::vector<OrdSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << codes.size()); ++mask) {
    std::vector<Ordinal> sel;
    for (std::size_t i = 0; i < codes.size(); ++i)
      if (mask >> i & 1) sel.push_back(codes[i]);
    out.push_back(OrdSet(sel));
  }
  return out;
}
}  // namespace

TEST_CASE("restrict and image identities, all relations below 3") {
  auto rels = relations_below(3);
  std::vector<OrdSet> ys;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    std::vector<Ordinal> sel;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) sel.push_back(Ordinal(i));
    ys.push_back(OrdSet(sel));
  }
  long long bad = 0;
  for (const OrdSet& a : rels)
    for (const OrdSet& y : ys) {
      if (domain_of(restrict(a, y)) != domain_of(a).intersect(y)) ++bad;
      if (image(a, y) != range_of(restrict(a, y))) ++bad;
    }
  REQUIRE(bad == 0);
}

TEST_CASE("compose associative") {
  // exhaustive over the 2-point universe, sampled over the 6-point one
  auto rels = relations_below(2);
  long long bad = 0;
  for (const OrdSet& f : rels)
    for (const OrdSet& g : rels)
      for (const OrdSet& h : rels)
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) ++bad;
  REQUIRE(bad == 0);

  std::mt19937 rng(7);
  auto rnd_rel = [&] {
    std::vector<Ordinal> sel;
    for (int k = 0; k < 8; ++k)
      sel.push_back(godel_pair(Ordinal(rng() % 6), Ordinal(rng() % 6)));
    return OrdSet(sel);
  };
  for (int t = 0; t < 200; ++t) {
    OrdSet f = rnd_rel(), g = rnd_rel(), h = rnd_rel();
    REQUIRE(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

TEST_CASE("pow_witness examples") {
  PowWitness w0 = pow_witness(set_of({}));
  CHECK(w0.code == set_of({}));
  CHECK(w0.xi.empty());

  PowWitness w1 = pow_witness(set_of({0}));
  CHECK(w1.code == set_of({0}));
  REQUIRE(w1.xi.size() == 1);
  CHECK(w1.xi[0].first == set_of({0}));
  CHECK(w1.xi[0].second == 0);
  // the tag is the unique one below 20 satisfying the membership biconditional
  int tags = 0;
  for (Ordinal xi = 0; xi < 20; ++xi) {
    bool ok = true;
    for (Ordinal b = 0; b < 10; ++b)
      if (set_of({0}).contains(b) != w1.code.contains(godel_pair(b, xi))) ok = false;
    if (ok) ++tags;
  }
  CHECK(tags == 1);

  PowWitness w2 = pow_witness(set_of({0, 1}));
  REQUIRE(w2.xi.size() == 3);
  for (const auto& [z, xi] : w2.xi)
    for (Ordinal b = 0; b < 10; ++b)
      REQUIRE(z.contains(b) == w2.code.contains(godel_pair(b, xi)));
}

TEST_CASE("pow_witness invariant, bases up to five elements") {
  std::vector<OrdSet> bases{set_of({}),     set_of({0}),          set_of({0, 1}),
                            set_of({0, 1, 2}), set_of({0, 1, 2, 3}), set_of({0, 1, 2, 3, 4}),
                            set_of({1, 3, 4}), set_of({0, 2, 5, 7, 9})};
  for (const OrdSet& a : bases) {
    PowWitness w = pow_witness(a);
    auto subs = nonempty_subsets(a);
    REQUIRE(w.xi.size() == subs.size());
    Ordinal xi_bound = lub(w.code) + 1;
    Ordinal beta_bound = lub(a) + 2;
    std::set<Ordinal> seen;
    for (const OrdSet& z : subs) {
      const Ordinal* tag = w.xi_of(z);
      REQUIRE(tag != nullptr);
      REQUIRE(seen.insert(*tag).second);  // xi injective
      Ordinal hits = 0;
      for (Ordinal xi = 0; xi < xi_bound; ++xi) {
        bool ok = true;
        for (Ordinal b = 0; b < beta_bound; ++b)
          if (z.contains(b) != w.code.contains(godel_pair(b, xi))) ok = false;
        if (ok) {
          ++hits;
          REQUIRE(xi == *tag);
        }
      }
      REQUIRE(hits == 1);
    }
    // rows come in the canonical subset order
    for (std::size_t i = 0; i < w.xi.size(); ++i) REQUIRE(w.xi[i].first == subs[i]);
  }
}

TEST_CASE("pow_witness base limit") {
  std::vector<Ordinal> big;
  for (int i = 0; i < 13; ++i) big.push_back(Ordinal(i));
  CHECK_THROWS_AS(pow_witness(OrdSet(big)), ResourceLimitError);
}

TEST_CASE("ordset text form") {
  CHECK(to_string(set_of({0, 2, 5})) == "{0,2,5}");
  CHECK(to_string(set_of({})) == "{}");
  CHECK(parse_ordset("{5,0,2}") == set_of({0, 2, 5}));
  CHECK(parse_ordset(" { 1 , 2 } ") == set_of({1, 2}));
  CHECK_THROWS_AS(parse_ordset("{1,"), DomainError);
  CHECK_THROWS_AS(parse_ordset("1,2"), DomainError);
}

TEST_CASE("ordset operations") {
  OrdSet a = set_of({0, 1, 2}), b = set_of({2, 3});
  CHECK(a.unite(b) == set_of({0, 1, 2, 3}));
  CHECK(a.intersect(b) == set_of({2}));
  CHECK(a.subtract(b) == set_of({0, 1}));
  CHECK(set_of({1, 2}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  OrdSet c = a;
  c.insert(5);
  c.erase(0);
  CHECK(c == set_of({1, 2, 5}));
}
