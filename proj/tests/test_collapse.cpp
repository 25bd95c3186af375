#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ordkernel/errors.hpp"
#include "ordkernel/hf.hpp"
#include "ordkernel/relcode.hpp"
#include "ordkernel/setops.hpp"
#include "support/oracles.hpp"

using namespace ordkernel;

namespace {

RelCode rel_of(std::initializer_list<std::pair<int, int>> ps) {
  std::vector<OrdPair> v;
  for (auto& p : ps) v.emplace_back(p.first, p.second);
  return RelCode(std::move(v));
}

std::vector<std::pair<int, int>> int_edges(const RelCode& r) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : r.pairs())
    out.emplace_back(static_cast<int>(p.first), static_cast<int>(p.second));
  std::sort(out.begin(), out.end());
  return out;
}

// Independent Mostowski oracle: plain memoized recursion over predecessors.
HFSet value_oracle(const RelCode& r, const Ordinal& bot, const Ordinal& node,
                   std::map<Ordinal, HFSet>& memo) {
  auto it = memo.find(node);
  if (it != memo.end()) return it->second;
  std::vector<HFSet> members;
  const OrdSet ps = r.preds(node);
  for (const Ordinal& p : ps.elems())
    if (p != bot) members.push_back(value_oracle(r, bot, p, memo));
  HFSet v{std::vector<HFSet>(members)};
  memo.emplace(node, v);
  return v;
}

}  // namespace

TEST_CASE("hf value basics") {
  HFSet empty;
  CHECK(empty.empty());
  CHECK(empty.size() == 0);

  HFSet one = empty.with(empty);  // {0}
  HFSet two = one.with(one);      // {0,{0}}
  CHECK(one.size() == 1);
  CHECK(one.contains(empty));
  CHECK_FALSE(one.contains(one));
  CHECK(two.contains(empty));
  CHECK(two.contains(one));
  CHECK_FALSE(two.contains(two));
  CHECK(one.with(empty) == one);  // adding a present element is a no-op

  // duplicates collapse in the constructor
  CHECK(HFSet(std::vector<HFSet>{empty, empty}) == one);
  CHECK(HFSet(std::vector<HFSet>{one, empty, one}) == two);

  // canonical order: child-list comparison, proper prefixes first
  HFSet sone = one.with(one);  // happens to equal two
  CHECK(sone == two);
  HFSet oneone = HFSet(std::vector<HFSet>{one});  // {{0}}
  CHECK(empty < one);
  CHECK(one < oneone);
  CHECK(one < two);       // {0} is a prefix of {0,{0}}
  CHECK(two < oneone);    // first children 0 < {0}
  CHECK((empty <=> empty) == std::strong_ordering::equal);

  // elements come out sorted regardless of construction order
  HFSet scrambled(std::vector<HFSet>{oneone, empty, one});
  REQUIRE(scrambled.size() == 3);
  CHECK(scrambled.elements()[0] == empty);
  CHECK(scrambled.elements()[1] == one);
  CHECK(scrambled.elements()[2] == oneone);
}

TEST_CASE("hf text form") {
  CHECK(to_string(HFSet{}) == "{}");
  CHECK(to_string(hf_of_ordinal(2)) == "{{},{{}}}");
  CHECK(parse_hf("{}") == HFSet{});
  CHECK(parse_hf("{{}}") == HFSet{}.with(HFSet{}));
  CHECK(parse_hf("{ { } , { { } } }") == hf_of_ordinal(2));
  // parse accepts any element order, printing restores the canonical one
  CHECK(to_string(parse_hf("{{{}},{}}")) == "{{},{{}}}");
  CHECK(parse_hf("{{},{}}") == parse_hf("{{}}"));  // duplicates are harmless

  for (const char* t : {"{}", "{{}}", "{{},{{}}}", "{{{}},{{},{{}}}}"}) {
    CAPTURE(t);
    CHECK(to_string(parse_hf(t)) == t);
  }

  CHECK_THROWS_AS(parse_hf(""), DomainError);
  CHECK_THROWS_AS(parse_hf("{"), DomainError);
  CHECK_THROWS_AS(parse_hf("{}}"), DomainError);
  CHECK_THROWS_AS(parse_hf("{,}"), DomainError);
  CHECK_THROWS_AS(parse_hf("x"), DomainError);
}

TEST_CASE("hf rank") {
  CHECK(hf_rank(parse_hf("{}")) == 0);
  CHECK(hf_rank(parse_hf("{{}}")) == 1);
  CHECK(hf_rank(parse_hf("{{{}},{}}")) == 2);

  // rank is 1 + max element rank, and level membership matches it
  const auto lvl3 = oracles::hf_level(3);
  int bad = 0;
  for (const HFSet& h : lvl3) {
    std::size_t want = 0;
    for (const HFSet& e : h.elements()) want = std::max(want, hf_rank(e) + 1);
    if (hf_rank(h) != want) ++bad;
    if (hf_rank(h) > 3) ++bad;
  }
  CHECK(bad == 0);
  const auto lvl2 = oracles::hf_level(2);
  for (const HFSet& h : lvl3)
    CHECK((hf_rank(h) <= 2) ==
          std::binary_search(lvl2.begin(), lvl2.end(), h));
}

TEST_CASE("von Neumann numerals") {
  CHECK(hf_of_ordinal(0) == parse_hf("{}"));
  CHECK(hf_of_ordinal(1) == parse_hf("{{}}"));
  CHECK(hf_of_ordinal(2) == parse_hf("{{},{{}}}"));
  CHECK(hf_of_ordinal(3) == parse_hf("{{},{{}},{{},{{}}}}"));

  HFSet prev = hf_of_ordinal(0);
  for (int n = 1; n <= 6; ++n) {
    HFSet cur = hf_of_ordinal(n);
    CHECK(cur == prev.with(prev));  // successor adds the numeral itself
    CHECK(cur.size() == static_cast<std::size_t>(n));
    CHECK(hf_rank(cur) == static_cast<std::size_t>(n));
    CHECK(cur.contains(prev));
    prev = cur;
  }

  CHECK_THROWS_AS(hf_of_ordinal(Ordinal(-1)), DomainError);
}

TEST_CASE("collapse examples") {
  CHECK(collapse(SetCode::from(rel_of({{0, 1}}))) == parse_hf("{}"));
  CHECK(collapse(SetCode::from(rel_of({{0, 1}, {1, 2}}))) == parse_hf("{{}}"));
  CHECK(collapse(SetCode::from(rel_of({{0, 1}, {1, 2}, {1, 3}, {2, 3}}))) ==
        parse_hf("{{},{{}}}"));
  // labels do not matter, only the shape above the bottom
  CHECK(collapse(SetCode::from(rel_of({{3, 5}}))) == parse_hf("{}"));
  CHECK(collapse(SetCode::from(rel_of({{7, 9}}))) == parse_hf("{}"));
}

TEST_CASE("collapse values map") {
  RelCode two = rel_of({{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  auto vals = collapse_values(two, 0);
  REQUIRE(vals.size() == 3);  // every field node except the bottom
  CHECK(vals.at(1) == parse_hf("{}"));
  CHECK(vals.at(2) == parse_hf("{{}}"));
  CHECK(vals.at(3) == parse_hf("{{},{{}}}"));
  CHECK(vals.count(0) == 0);

  // the bottom parameter picks which node's edges are foundation markers
  auto vals5 = collapse_values(rel_of({{3, 5}}), 3);
  REQUIRE(vals5.size() == 1);
  CHECK(vals5.at(5) == parse_hf("{}"));

  CHECK_THROWS_AS(collapse_values(rel_of({{0, 1}, {1, 0}}), 0), ContractError);
  CHECK_THROWS_AS(collapse_values(rel_of({{2, 2}}), 0), ContractError);
}

TEST_CASE("collapse values agree with recursive oracle") {
  int bad = 0;
  for (const SetCode& a : enumerate_set_codes(4)) {
    auto got = collapse_values(a.rel(), a.bot());
    std::map<Ordinal, HFSet> memo;
    const OrdSet f = a.field();
    for (const Ordinal& x : f.elems()) {
      if (x == a.bot()) continue;
      if (got.at(x) != value_oracle(a.rel(), a.bot(), x, memo)) ++bad;
    }
    if (got.size() != f.elems().size() - 1) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("encode examples") {
  CHECK(int_edges(encode_hf(parse_hf("{}")).rel()) ==
        std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(int_edges(encode_hf(parse_hf("{{}}")).rel()) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  // the numeral 2 encodes onto the standard four-edge code exactly
  CHECK(int_edges(encode_hf(hf_of_ordinal(2)).rel()) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});

  // numbering is depth-first postorder over the transitive closure
  HFSet x = parse_hf("{{{}},{{{}}}}");  // {a,{a}} with a = {0}
  CHECK(int_edges(encode_hf(x).rel()) ==
        std::vector<std::pair<int, int>>{
            {0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});

  SetCode c = encode_hf(hf_of_ordinal(3));
  CHECK(c.bot() == 0);
  CHECK(c.top() == 4);  // one node per member of TC({3}), numbered from 1
}

TEST_CASE("hf round trip") {
  // every set of rank at most 4 survives encode then collapse unchanged
  const auto lvl = oracles::hf_level(4);
  REQUIRE(lvl.size() == 65536);
  int bad = 0;
  for (const HFSet& h : lvl)
    if (collapse(encode_hf(h)) != h) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("code round trip") {
  // encode of the collapse lands in the code's isomorphism class
  for (unsigned fb = 2; fb <= 5; ++fb) {
    CAPTURE(fb);
    int bad = 0;
    for (const SetCode& a : enumerate_set_codes(fb))
      if (!iso(encode_hf(collapse(a)), a)) ++bad;
    CHECK(bad == 0);
  }
}
