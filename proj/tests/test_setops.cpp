#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "ordkernel/errors.hpp"
#include "ordkernel/hf.hpp"
#include "ordkernel/setops.hpp"
#include "support/oracles.hpp"

using namespace ordkernel;

namespace {

RelCode rel_of(std::initializer_list<std::pair<int, int>> edges) {
  std::vector<OrdPair> ps;
  for (const auto& [b, a] : edges) ps.emplace_back(Ordinal(b), Ordinal(a));
  return RelCode(ps);
}

// non-empty subsets of the field without the bottom
std::vector<OrdSet> admissible_ds(const SetCode& a) {
  std::vector<Ordinal> pool;
  const OrdSet f = a.field();
  for (const Ordinal& x : f.elems())
    if (x != a.bot()) pool.push_back(x);
  std::vector<OrdSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    OrdSet d;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) d.insert(pool[i]);
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("iso examples") {
  SetCode e = empty_set_code();
  auto w = iso_witness(e, e);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<OrdPair>{{0, 0}, {1, 1}});

  SetCode e79 = SetCode::from(rel_of({{7, 9}}));
  w = iso_witness(e, e79);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<OrdPair>{{0, 7}, {1, 9}});

  CHECK_FALSE(iso(e, code_of_ordinal(1)));
  CHECK_FALSE(iso_witness(e, code_of_ordinal(1)).has_value());
}

TEST_CASE("iso witnesses preserve edges both ways") {
  auto codes = enumerate_set_codes(4);
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = 0; j < codes.size(); ++j) {
      auto w = iso_witness(codes[i], codes[j]);
      if (!w) continue;
      std::map<Ordinal, Ordinal> fwd;
      for (const auto& [x, y] : *w) fwd[x] = y;
      REQUIRE(fwd.size() == codes[i].field().size());
      for (const auto& [b, a] : codes[i].rel().pairs())
        REQUIRE(codes[j].rel().has_edge(fwd.at(b), fwd.at(a)));
      REQUIRE(codes[j].rel().pairs().size() == codes[i].rel().pairs().size());
    }
}

TEST_CASE("mem examples") {
  SetCode e = empty_set_code();
  for (const SetCode& x : enumerate_set_codes(4)) REQUIRE_FALSE(mem(x, e));
  CHECK(mem(code_of_ordinal(1), code_of_ordinal(2)));
  CHECK_FALSE(mem(code_of_ordinal(2), code_of_ordinal(1)));
}

TEST_CASE("membership and iso match the collapse, field bound 4") {
  auto codes = enumerate_set_codes(4);
  std::vector<HFSet> vals;
  for (const SetCode& c : codes) vals.push_back(collapse(c));
  long long bad = 0;
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = 0; j < codes.size(); ++j) {
      if (mem(codes[i], codes[j]) != vals[j].contains(vals[i])) ++bad;
      if (iso(codes[i], codes[j]) != (vals[i] == vals[j])) ++bad;
    }
  REQUIRE(bad == 0);

  // so mem is a congruence: it only sees the coded set
  std::map<std::pair<HFSet, HFSet>, bool> table;
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = 0; j < codes.size(); ++j) {
      auto [it, fresh] = table.try_emplace({vals[i], vals[j]}, mem(codes[i], codes[j]));
      if (!fresh) REQUIRE(it->second == mem(codes[i], codes[j]));
    }

  // distinct iso classes = distinct collapses
  std::set<HFSet> distinct(vals.begin(), vals.end());
  std::vector<HFSet> reps;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    bool seen = false;
    for (const HFSet& r : reps)
      if (r == vals[i]) seen = true;
    if (!seen) reps.push_back(vals[i]);
  }
  REQUIRE(reps.size() == distinct.size());
}

TEST_CASE("element views") {
  SetCode two = code_of_ordinal(2);
  CHECK(element_nodes(two) == std::vector<Ordinal>{1, 2});
  CHECK(iso(element_at(two, 2), code_of_ordinal(1)));
  CHECK(iso(element_at(two, 1), empty_set_code()));
  CHECK_THROWS_AS(element_at(two, 0), DomainError);
  CHECK_THROWS_AS(element_at(two, 42), DomainError);
}

TEST_CASE("build_from_predecessors examples") {
  SetCode two = code_of_ordinal(2);
  SetCode b1 = build_from_predecessors(two, parse_ordset("{1}"), 9);
  CHECK(b1.rel() == rel_of({{0, 1}, {1, 9}}));
  CHECK(mem(empty_set_code(), b1));
  CHECK_FALSE(mem(code_of_ordinal(1), b1));

  SetCode b2 = build_from_predecessors(two, parse_ordset("{1,2}"), 9);
  CHECK(iso(b2, two));
  CHECK(collapse(b2) == hf_of_ordinal(2));

  CHECK_THROWS_AS(build_from_predecessors(two, parse_ordset("{0}"), 9), DomainError);
  CHECK_THROWS_AS(build_from_predecessors(two, OrdSet(), 9), DomainError);
  CHECK_THROWS_AS(build_from_predecessors(two, parse_ordset("{1}"), 3), DomainError);
  CHECK_THROWS_AS(build_from_predecessors(two, parse_ordset("{77}"), 9), DomainError);
}

TEST_CASE("built codes keep their cuts, field bound 4") {
  for (const SetCode& a : enumerate_set_codes(4)) {
    Ordinal alpha = lub(a.field());
    for (const OrdSet& d : admissible_ds(a)) {
      SetCode b = build_from_predecessors(a, d, alpha);
      for (const Ordinal& delta : d.elems()) REQUIRE(cut(b, delta) == cut(a, delta));
    }
  }
}

TEST_CASE("built codes have exactly the selected elements, small fields") {
  auto bs = enumerate_set_codes(3);
  for (const SetCode& a : enumerate_set_codes(4)) {
    Ordinal alpha = lub(a.field());
    for (const OrdSet& d : admissible_ds(a)) {
      SetCode built = build_from_predecessors(a, d, alpha);
      for (const SetCode& b : bs) {
        bool wanted = false;
        for (const Ordinal& delta : d.elems())
          if (iso(b, SetCode::from(cut(a, delta)))) wanted = true;
        REQUIRE(mem(b, built) == wanted);
      }
    }
  }
}

TEST_CASE("code_of_ordinal") {
  CHECK(code_of_ordinal(0).rel() == rel_of({{0, 1}}));
  CHECK(code_of_ordinal(2).rel() == rel_of({{0, 1}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(collapse(code_of_ordinal(3)) == hf_of_ordinal(3));
  CHECK_THROWS_AS(code_of_ordinal(100), ResourceLimitError);
}

TEST_CASE("separation_code examples") {
  SetCode two = code_of_ordinal(2);
  CHECK(iso(separation_code(two, [](const SetCode&) { return false; }), empty_set_code()));
  CHECK(iso(separation_code(two, [](const SetCode&) { return true; }), two));
  SetCode only1 = separation_code(code_of_ordinal(3), [](const SetCode& x) {
    return iso(x, code_of_ordinal(1));
  });
  CHECK(collapse(only1) == parse_hf("{{{}}}"));
}

TEST_CASE("union_code examples") {
  CHECK(iso(union_code(code_of_ordinal(1)), empty_set_code()));
  CHECK(iso(union_code(code_of_ordinal(3)), code_of_ordinal(2)));
  for (const SetCode& a : enumerate_set_codes(4))
    REQUIRE(collapse(union_code(a)) == oracles::hf_union(collapse(a)));
}

TEST_CASE("pair_code examples") {
  SetCode p = pair_code(empty_set_code(), code_of_ordinal(1));
  CHECK(collapse(p) == hf_of_ordinal(2));
  SetCode q = pair_code(code_of_ordinal(1), code_of_ordinal(1));
  CHECK(collapse(q) == parse_hf("{{{}}}"));
  auto codes = enumerate_set_codes(3);
  for (const SetCode& a : codes)
    for (const SetCode& b : codes)
      REQUIRE(collapse(pair_code(a, b)) == oracles::hf_pair(collapse(a), collapse(b)));
}

TEST_CASE("choice_code picks one element per member") {
  SetCode s0 = pair_code(empty_set_code(), empty_set_code());        // {0}
  SetCode s1 = pair_code(code_of_ordinal(1), code_of_ordinal(1));    // {1}
  SetCode fam = pair_code(s0, s1);                                   // {{0},{1}}
  HFSet picks = collapse(choice_code(fam));
  HFSet famv = collapse(fam);
  for (const HFSet& m : famv.elements()) {
    int hit = 0;
    for (const HFSet& x : picks.elements())
      if (m.contains(x)) ++hit;
    REQUIRE(hit == 1);
  }
  REQUIRE(picks.size() == famv.size());

  // members must be non-empty and pairwise disjoint
  CHECK_THROWS_AS(choice_code(code_of_ordinal(1)), DomainError);
  SetCode overlapping = pair_code(s0, code_of_ordinal(2));  // {0} and {0,1} share 0
  CHECK_THROWS_AS(choice_code(overlapping), DomainError);
}

TEST_CASE("power_code examples") {
  CHECK(collapse(power_code(empty_set_code())) == parse_hf("{{}}"));
  CHECK(collapse(power_code(code_of_ordinal(1))) == hf_of_ordinal(2));
  CHECK(collapse(power_code(code_of_ordinal(2))) == oracles::hf_power(hf_of_ordinal(2)));
  for (const SetCode& a : enumerate_set_codes(4))
    REQUIRE(collapse(power_code(a)) == oracles::hf_power(collapse(a)));
  CHECK_THROWS_AS(power_code(code_of_ordinal(13)), ResourceLimitError);
}

TEST_CASE("replacement_code examples") {
  auto ident = [](const SetCode& x) { return x; };
  CHECK(iso(replacement_code(empty_set_code(), ident), empty_set_code()));
  CHECK(iso(replacement_code(code_of_ordinal(2), ident), code_of_ordinal(2)));

  SetCode r = replacement_code(code_of_ordinal(2),
                               [](const SetCode& x) { return pair_code(x, x); });
  CHECK(collapse(r) == parse_hf("{{{}},{{{}}}}"));  // {{0},{{0}}}

  // a map keyed on node labels is caught by the canonical-code probe
  SetCode big = SetCode::from(rel_of({{3, 9}, {9, 11}}));
  auto label_sensitive = [](const SetCode& x) {
    return x.top() >= 9 ? code_of_ordinal(1) : empty_set_code();
  };
  CHECK_THROWS_AS(replacement_code(big, label_sensitive), ContractError);
}
