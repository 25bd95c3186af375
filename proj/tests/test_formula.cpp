#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordkernel/errors.hpp"
#include "ordkernel/formula.hpp"
#include "ordkernel/interp.hpp"
#include "ordkernel/structure.hpp"

using namespace ordkernel;

namespace {

// carrier {a,b,c} with in = {(a,b),(b,c)}
FiniteStructure chain3() {
  FiniteStructure m;
  m.labels = {"a", "b", "c"};
  m.relations["in"] = {{0, 1}, {1, 2}};
  return m;
}

Signature rel2_signature(const std::string& name) {
  Signature sig;
  sig.relations[name] = RelInfo{2, {}};
  return sig;
}

// host with a symmetric link between b and c only
FiniteStructure linked3() {
  FiniteStructure m;
  m.labels = {"a", "b", "c"};
  m.relations["s"] = {{1, 2}, {2, 1}};
  return m;
}

// interpretation over linked3 that merges b and c; the target relation
// holds of the classes whose members touch the link
DefinedStructure merging_interpretation() {
  DefinedStructure a;
  a.host = rel2_signature("s");
  a.target = rel2_signature("t");
  a.phi_u = parse_formula("v1 = v1", a.host);
  a.phi_eq = parse_formula("v1 = v2 OR s(v1,v2)", a.host);
  a.rel_defs["t"] = parse_formula("(EX W . s(v1,W)) AND (EX W . s(v2,W))", a.host);
  return a;
}

}  // namespace

TEST_CASE("parse basics") {
  Formula f = parse_formula("ALL a . EX b . b = a");
  CHECK(f.kind == Formula::Kind::Forall);
  CHECK(f.head == "a");
  CHECK(f.kids[0].kind == Formula::Kind::Exists);
  CHECK(free_vars(f).empty());

  Formula g = parse_formula("alpha < beta");
  CHECK(g.kind == Formula::Kind::Atom);
  CHECK(g.head == "<");
  CHECK(g.args[0] == Term::var("alpha", Sort::Ord));

  // quantifier scope extends right
  Formula h = parse_formula("EX b . b = a AND a = b");
  CHECK(h.kind == Formula::Kind::Exists);
  CHECK(h.kids[0].kind == Formula::Kind::And);

  CHECK(convention_sort("alpha") == Sort::Ord);
  CHECK(convention_sort("zeta1") == Sort::Ord);
  CHECK(convention_sort("a") == Sort::SOrd);
  CHECK(convention_sort("X") == std::nullopt);
  CHECK(convention_sort("_r1") == std::nullopt);
}

TEST_CASE("precedence and associativity") {
  // NOT binds tighter than the binary connectives
  CHECK(parse_formula("NOT a = b OR c = d") ==
        f_or(f_not(parse_formula("a = b")), parse_formula("c = d")));
  // AND over OR
  CHECK(parse_formula("a = b AND c = d OR e = f") ==
        f_or(f_and(parse_formula("a = b"), parse_formula("c = d")), parse_formula("e = f")));
  // AND is left associative, IMP right associative
  CHECK(parse_formula("a = a AND b = b AND c = c") ==
        f_and(f_and(parse_formula("a = a"), parse_formula("b = b")), parse_formula("c = c")));
  CHECK(parse_formula("a = a IMP b = b IMP c = c") ==
        f_imp(parse_formula("a = a"), f_imp(parse_formula("b = b"), parse_formula("c = c"))));
  CHECK(parse_formula("a = a IFF b = b IFF c = c") ==
        f_iff(f_iff(parse_formula("a = a"), parse_formula("b = b")), parse_formula("c = c")));
  // parentheses override
  CHECK(parse_formula("(a = b OR c = d) AND e = f") ==
        f_and(f_or(parse_formula("a = b"), parse_formula("c = d")), parse_formula("e = f")));
}

TEST_CASE("sort discipline") {
  CHECK_THROWS_AS(parse_formula("a < b"), SortError);        // < is Ord only
  CHECK_THROWS_AS(parse_formula("X in alpha"), SortError);   // second slot wants SOrd
  CHECK_NOTHROW(parse_formula("alpha = a"));                 // equality spans both sorts
  CHECK_THROWS_AS(parse_formula("G(a, beta) = gamma"), SortError);
  CHECK_THROWS_AS(parse_formula("a:Ord = a:SOrd"), SortError);
  CHECK_NOTHROW(parse_formula("alpha < beta"));
  CHECK_NOTHROW(parse_formula("alpha in a"));
  CHECK_NOTHROW(parse_formula("X:SOrd = a"));    // annotation overrides convention
  CHECK_NOTHROW(parse_formula("G(alpha, X) = beta"));

  // the same checks run on hand-built trees
  Formula bad = f_atom("<", {Term::var("alpha", Sort::Ord), Term::var("a", Sort::SOrd)});
  CHECK_THROWS_AS(check_sorts(bad, lso_signature()), SortError);
  CHECK_THROWS_AS(check_sorts(f_atom("frob", {Term::var("X")}), lso_signature()), SortError);
  CHECK_THROWS_AS(check_sorts(f_atom("in", {Term::var("alpha", Sort::Ord)}), lso_signature()),
                  SortError);
  CHECK_NOTHROW(check_sorts(parse_formula("alpha in a"), lso_signature()));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("()"), ParseError);
  CHECK_THROWS_AS(parse_formula("alpha <"), ParseError);
  CHECK_THROWS_AS(parse_formula("EX . alpha = alpha"), ParseError);
  CHECK_THROWS_AS(parse_formula("ALL alpha alpha = alpha"), ParseError);
  CHECK_THROWS_AS(parse_formula("alpha = beta)"), ParseError);
  CHECK_THROWS_AS(parse_formula("frob(alpha)"), ParseError);  // undeclared applied name
  CHECK_THROWS_AS(parse_formula("alpha ? beta"), ParseError);
  CHECK_THROWS_AS(parse_formula("EX alpha:Frd . alpha = alpha"), ParseError);
}

TEST_CASE("print parse round trip") {
  const std::vector<std::string> corpus = {
      "alpha < beta",
      "NOT alpha < beta",
      "alpha < beta AND beta < gamma",
      "alpha < beta OR beta < alpha",
      "alpha < beta IMP beta < gamma",
      "alpha < beta IFF beta < alpha",
      "ALL alpha . alpha < beta",
      "EX alpha . alpha < beta",
      "ALL alpha . EX beta . alpha < beta",
      "EX a . alpha in a",
      "alpha in a",
      "G(alpha,beta) = gamma",
      "G(alpha,beta) < gamma",
      "G(G(alpha,beta),gamma) = delta",
      "ALL alpha . ALL beta . G(alpha,beta) = G(beta,alpha)",
      "EX gamma . G(alpha,beta) = gamma AND gamma < delta",
      "alpha = beta",
      "a = b",
      "NOT a = b",
      "ALL a . EX b . b = a",
      "EX X:Ord . X < alpha",
      "EX X:SOrd . alpha in X",
      "ALL X:Ord . X < X IMP X = X",
      "alpha = 3",
      "3 < alpha",
      "EX alpha . alpha = 0 OR alpha = 1",
      "NOT NOT alpha < beta",
      "NOT (alpha < beta AND beta < gamma)",
      "(alpha < beta OR beta < gamma) AND NOT alpha = gamma",
      "ALL alpha . (EX beta . alpha < beta) IMP alpha = alpha",
      "Ord(X)",
      "SOrd(Y)",
      "Ord(alpha) AND SOrd(a)",
      "ALL X . Ord(X) IMP X = X",
      "alpha < beta AND beta < gamma AND gamma < delta",
      "alpha < beta OR beta < gamma OR gamma < delta",
      "alpha < beta IMP beta < gamma IMP gamma < delta",
      "alpha < beta IFF beta < gamma IFF gamma < delta",
      "EX alpha . EX beta . EX gamma . G(alpha,beta) = gamma",
      "ALL a . ALL b . (ALL alpha . alpha in a IFF alpha in b) IMP a = b",
      "EX a . ALL alpha . NOT alpha in a",
      "ALL alpha . EX a . ALL beta . beta in a IFF beta < alpha",
      "EX beta . beta = G(alpha,gamma)",
      "ALL alpha:Ord . EX beta:Ord . alpha < beta",
      "EX U:SOrd . alpha in U AND beta in U",
      "NOT EX alpha . ALL beta . beta < alpha",
      "G(0,1) = 2",
      "alpha in a AND NOT beta in a",
      "ALL alpha . alpha in a IMP (EX beta . beta < alpha) OR alpha = 0",
      "(ALL alpha . alpha < beta) OR (EX a . beta in a)",
  };
  REQUIRE(corpus.size() == 50);
  for (const std::string& text : corpus) {
    CAPTURE(text);
    Formula f = parse_formula(text);
    Formula again = parse_formula(to_string(f));
    CHECK(again == f);
    CHECK(to_string(again) == to_string(f));  // printing is stable
  }
}

TEST_CASE("free variables and substitution") {
  CHECK(free_vars(parse_formula("b = a AND EX c . c = a")) ==
        std::set<std::string>{"a", "b"});
  CHECK(all_var_names(parse_formula("b = a AND EX c . c = a")) ==
        std::set<std::string>{"a", "b", "c"});

  // plain substitution under a harmless binder
  Formula f = parse_formula("EX b . b = a");
  Formula sub = subst_vars(f, {{"a", Term::var("c", Sort::SOrd)}});
  CHECK(sub == parse_formula("EX b . b = c"));

  // substituting the bound name forces a rename
  Formula cap = subst_vars(f, {{"a", Term::var("b", Sort::SOrd)}});
  CHECK(cap.kind == Formula::Kind::Exists);
  CHECK(cap.head != "b");
  CHECK(free_vars(cap) == std::set<std::string>{"b"});
  CHECK(cap.kids[0] == f_atom("=", {Term::var(cap.head, Sort::SOrd), Term::var("b", Sort::SOrd)}));

  // substitution leaves non-free occurrences alone
  Formula g = parse_formula("a = a AND EX a . a = a");
  Formula gsub = subst_vars(g, {{"a", Term::var("d", Sort::SOrd)}});
  CHECK(gsub == parse_formula("d = d AND EX a . a = a"));
}

TEST_CASE("finite structure basics") {
  FiniteStructure m = chain3();
  CHECK(m.size() == 3);
  CHECK(m.index_of("b") == 1);
  CHECK_THROWS_AS(m.index_of("z"), DomainError);
  CHECK(m.untyped());
  CHECK_NOTHROW(m.validate());

  FiniteStructure dup;
  dup.labels = {"a", "a"};
  CHECK_THROWS_AS(dup.validate(), DomainError);

  FiniteStructure oob = chain3();
  oob.relations["in"].insert({0, 5});
  CHECK_THROWS_AS(oob.validate(), DomainError);

  FiniteStructure mixed = chain3();
  mixed.relations["in"].insert({0});
  CHECK_THROWS_AS(mixed.validate(), DomainError);

  FiniteStructure mf = chain3();
  mf.functions["f"][{0}] = 1;
  mf.constants["z"] = 2;
  Signature sig = inferred_signature(mf);
  CHECK(sig.relations.at("in").arity == 2);
  CHECK(sig.functions.at("f").arity == 1);
  CHECK(sig.has_constant("z"));
}

TEST_CASE("structure json round trip") {
  FiniteStructure m = chain3();
  m.sorts["Ord"] = {0, 1};
  m.sorts["SOrd"] = {2};
  m.functions["f"][{0, 1}] = 2;
  m.constants["bot"] = 0;
  FiniteStructure back = structure_from_json(structure_to_json(m));
  CHECK(back == m);

  FiniteStructure plain = structure_from_json(R"({"carrier": ["x", "y"]})");
  CHECK(plain.size() == 2);
  CHECK(plain.untyped());

  CHECK_THROWS_AS(structure_from_json("{"), ParseError);
  CHECK_THROWS_AS(structure_from_json("{}"), ParseError);  // carrier is required
  CHECK_THROWS_AS(structure_from_json(R"({"carrier": ["a"], "relations": {"r": [["b"]]}})"),
                  Error);  // unknown label
}

TEST_CASE("formula evaluation") {
  FiniteStructure m = chain3();
  const Signature& lin = lin_signature();

  CHECK(eval_formula(parse_formula("X = X", lin), m, {{"X", 0}}));
  CHECK_FALSE(eval_formula(parse_formula("X = Y", lin), m, {{"X", 0}, {"Y", 1}}));
  CHECK(eval_formula(parse_formula("X in Y", lin), m, {{"X", 0}, {"Y", 1}}));
  CHECK(eval_formula(parse_formula("EX X . X in Y", lin), m, {{"Y", 1}}));
  CHECK_FALSE(eval_formula(parse_formula("ALL X . EX Y . X in Y", lin), m));
  CHECK(eval_formula(parse_formula("EX X . EX Y . X in Y AND NOT Y in X", lin), m));
  CHECK(eval_formula(parse_formula("ALL X . X in Y IMP NOT Y in X", lin), m, {{"Y", 1}}));

  CHECK_THROWS_AS(eval_formula(parse_formula("X = Y", lin), m, {{"X", 0}}), ContractError);

  // sort tags narrow quantifier ranges; without tags the carrier is the range
  FiniteStructure ms;
  ms.labels = {"0", "1", "s"};
  ms.sorts["Ord"] = {0, 1};
  ms.sorts["SOrd"] = {2};
  ms.relations["in"] = {{0, 2}, {1, 2}};
  CHECK(eval_formula(parse_formula("ALL X:Ord . X in S", lin), ms, {{"S", 2}}));
  FiniteStructure untyped = ms;
  untyped.sorts.clear();
  CHECK_FALSE(eval_formula(parse_formula("ALL X:Ord . X in S", lin), untyped, {{"S", 2}}));
}

TEST_CASE("three valued evaluation") {
  // False < Unknown < True; and is min, or is max, not flips the ends
  const Tri vals[] = {Tri::False, Tri::Unknown, Tri::True};
  for (Tri x : vals) {
    for (Tri y : vals) {
      CHECK(tri_and(x, y) == std::min(x, y));
      CHECK(tri_or(x, y) == std::max(x, y));
    }
  }
  CHECK(tri_not(Tri::False) == Tri::True);
  CHECK(tri_not(Tri::Unknown) == Tri::Unknown);
  CHECK(tri_not(Tri::True) == Tri::False);

  // a partial function: defined at 0, undefined at 1
  FiniteStructure m;
  m.labels = {"0", "1"};
  m.functions["f"][{0}] = 1;
  Signature sig;
  sig.functions["f"] = FunInfo{1, {}, std::nullopt};
  Formula att = parse_formula("f(X) = f(X)", sig);

  CHECK(eval_formula(att, m, {{"X", 0}}));
  CHECK_FALSE(eval_formula(att, m, {{"X", 1}}));  // undefined atom counts false
  CHECK(eval_formula(parse_formula("NOT f(X) = f(X)", sig), m, {{"X", 1}}));

  CHECK(eval_tri(att, m, {{"X", 0}}) == Tri::True);
  CHECK(eval_tri(att, m, {{"X", 1}}) == Tri::Unknown);
  CHECK(eval_tri(parse_formula("NOT f(X) = f(X)", sig), m, {{"X", 1}}) == Tri::Unknown);
  CHECK(eval_tri(parse_formula("f(X) = f(X) OR X = X", sig), m, {{"X", 1}}) == Tri::True);
  CHECK(eval_tri(parse_formula("f(X) = f(X) AND X = X", sig), m, {{"X", 1}}) == Tri::Unknown);
  CHECK(eval_tri(parse_formula("f(X) = f(X) AND NOT X = X", sig), m, {{"X", 1}}) == Tri::False);
}

TEST_CASE("relativization shapes") {
  const Signature& lin = lin_signature();
  DefinedStructure id = identity_interpretation(lin);
  const Term x = Term::var("X"), y = Term::var("Y");

  // variable equality becomes the equality formula
  CHECK(relativize(parse_formula("X = Y", lin), id) ==
        subst_vars(id.phi_eq, {{param_var(1), x}, {param_var(2), y}}));

  // connectives distribute syntactically; the equality atoms used here do
  // not consume fresh variables, so the pieces match the whole verbatim
  Formula p = parse_formula("X = Y", lin), q = parse_formula("Y = X", lin);
  CHECK(relativize(f_not(p), id) == f_not(relativize(p, id)));
  CHECK(relativize(f_or(p, q), id) == f_or(relativize(p, id), relativize(q, id)));
  CHECK(relativize(f_and(p, q), id) == f_and(relativize(p, id), relativize(q, id)));
  CHECK(relativize(f_imp(p, q), id) == f_imp(relativize(p, id), relativize(q, id)));
  CHECK(relativize(f_iff(p, q), id) == f_iff(relativize(p, id), relativize(q, id)));

  // a relation atom routes every argument through a bounded fresh variable
  Formula ratom = relativize(parse_formula("X in Y", lin), id);
  CHECK(ratom.kind == Formula::Kind::Exists);
  CHECK(ratom.head == "_r1");
  CHECK(ratom.kids[0].kids[1].head == "_r2");
  CHECK(free_vars(ratom) == std::set<std::string>{"X", "Y"});

  // quantifiers bound to the universe formula
  Formula ex = parse_formula("EX X . X = X", lin);
  CHECK(relativize(ex, id) ==
        f_ex("X", std::nullopt,
             f_and(subst_vars(id.phi_u, {{param_var(1), x}}),
                   relativize(parse_formula("X = X", lin), id))));
  Formula all = parse_formula("ALL X . X = X", lin);
  CHECK(relativize(all, id) ==
        f_all("X", std::nullopt,
              f_imp(subst_vars(id.phi_u, {{param_var(1), x}}),
                    relativize(parse_formula("X = X", lin), id))));

  // negation distributes even when fresh variables are involved
  DefinedStructure idso = identity_interpretation(lso_signature());
  Formula gat = parse_formula("alpha = G(beta,gamma)");
  CHECK(relativize(f_not(gat), idso) == f_not(relativize(gat, idso)));

  // a function atom unfolds with exactly one fresh existential per argument
  Formula rg = relativize(gat, idso);
  std::vector<std::string> fresh_names;
  const Formula* cur = &rg;
  while (cur->kind == Formula::Kind::Exists) {
    fresh_names.push_back(cur->head);
    const Formula* body = &cur->kids[0];
    REQUIRE(body->kind == Formula::Kind::And);
    cur = &body->kids[1];
  }
  CHECK(fresh_names == std::vector<std::string>{"_r1", "_r2"});
  CHECK(free_vars(rg) == std::set<std::string>{"alpha", "beta", "gamma"});

  // symbols the interpretation does not define are rejected
  DefinedStructure small = merging_interpretation();
  CHECK_THROWS_AS(relativize(f_atom("u", {x, y}), small), SignatureError);
}

TEST_CASE("definable structure checks") {
  FiniteStructure m = chain3();
  DefinedStructure id = identity_interpretation(lin_signature());
  CHECK_NOTHROW(id.validate());
  DefinableCheckReport rep = check_definable_structure(id, m);
  CHECK(rep.all_ok());
  CHECK_FALSE(rep.to_text().empty());

  // partial function formula trips the totality condition
  FiniteStructure mp;
  mp.labels = {"a", "b"};
  mp.relations["s"] = {{0, 1}};
  DefinedStructure part;
  part.host = rel2_signature("s");
  part.target.functions["f"] = FunInfo{1, {}, std::nullopt};
  part.phi_u = parse_formula("v1 = v1", part.host);
  part.phi_eq = parse_formula("v1 = v2", part.host);
  part.fun_defs["f"] = parse_formula("s(v1,v2)", part.host);
  CHECK_NOTHROW(part.validate());
  DefinableCheckReport prep = check_definable_structure(part, mp);
  CHECK_FALSE(prep.all_ok());
  bool totality_flagged = false, functionality_ok = true;
  for (const auto& item : prep.items) {
    if (item.condition == "function totality" && item.symbol == "f") totality_flagged = !item.ok;
    if (item.condition == "function functionality" && item.symbol == "f")
      functionality_ok = item.ok;
  }
  CHECK(totality_flagged);
  CHECK(functionality_ok);

  // an equality formula that is not transitive is reported
  FiniteStructure mt;
  mt.labels = {"a", "b", "c"};
  mt.relations["s"] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  DefinedStructure bad = merging_interpretation();
  bad.target = Signature{};
  bad.rel_defs.clear();
  DefinableCheckReport brep = check_definable_structure(bad, mt);
  CHECK_FALSE(brep.all_ok());
  bool equiv_flagged = false;
  for (const auto& item : brep.items)
    if (item.condition == "equality equivalence" && !item.ok) equiv_flagged = true;
  CHECK(equiv_flagged);

  // an empty universe is reported
  DefinedStructure empty = bad;
  empty.phi_eq = parse_formula("v1 = v2", empty.host);
  empty.phi_u = parse_formula("NOT v1 = v1", empty.host);
  DefinableCheckReport erep = check_definable_structure(empty, mt);
  bool universe_flagged = false;
  for (const auto& item : erep.items)
    if (item.condition == "universe nonempty" && !item.ok) universe_flagged = true;
  CHECK(universe_flagged);
}

TEST_CASE("quotient structures") {
  // the identity interpretation reproduces the structure
  FiniteStructure m = chain3();
  DefinedStructure id = identity_interpretation(lin_signature());
  CHECK(quotient_structure(id, m) == m);

  // merging two linked elements shrinks the carrier
  FiniteStructure ml = linked3();
  DefinedStructure merge = merging_interpretation();
  CHECK(check_definable_structure(merge, ml).all_ok());
  FiniteStructure q = quotient_structure(merge, ml);
  CHECK(q.labels == std::vector<std::string>{"a", "b"});
  CHECK(q.relations.at("t") == std::set<std::vector<std::size_t>>{{1, 1}});

  // failing checks block the quotient
  FiniteStructure mt;
  mt.labels = {"a", "b", "c"};
  mt.relations["s"] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  DefinedStructure bad = merging_interpretation();
  bad.target = Signature{};
  bad.rel_defs.clear();
  CHECK_THROWS_AS(quotient_structure(bad, mt), ContractError);
}

TEST_CASE("interpretation soundness on small hosts") {
  // identity interpretation over the chain
  {
    FiniteStructure m = chain3();
    DefinedStructure id = identity_interpretation(lin_signature());
    FiniteStructure q = quotient_structure(id, m);
    const std::vector<std::string> corpus = {
        "ALL X . X = X",
        "EX X . X in Y",
        "ALL X . EX Y . X in Y",
        "EX X . EX Y . X in Y AND Y in X",
        "ALL X . ALL Y . X in Y IMP NOT Y = X",
        "EX X . NOT X = Y",
        "NOT EX X . ALL Y . Y in X",
    };
    for (const std::string& text : corpus) {
      CAPTURE(text);
      Formula psi = parse_formula(text, lin_signature());
      Formula rel = relativize(psi, id);
      std::set<std::string> fv = free_vars(psi);
      if (fv.empty()) {
        CHECK(eval_formula(rel, m) == eval_formula(psi, q));
      } else {
        REQUIRE(fv == std::set<std::string>{"Y"});
        for (std::size_t e = 0; e < m.size(); ++e) {
          Assignment host{{"Y", e}};
          Assignment proj{{"Y", q.index_of(m.labels[e])}};
          CHECK(eval_formula(rel, m, host) == eval_formula(psi, q, proj));
        }
      }
    }
  }

  // merging interpretation over the linked host
  {
    FiniteStructure m = linked3();
    DefinedStructure merge = merging_interpretation();
    FiniteStructure q = quotient_structure(merge, m);
    const std::size_t proj_of[] = {0, 1, 1};  // c falls into b's class
    const std::vector<std::string> corpus = {
        "EX U . t(U,U)",
        "ALL U . t(U,U)",
        "ALL U . ALL W . t(U,W) IMP t(W,U)",
        "EX U . t(U,V)",
        "NOT t(V,V)",
        "ALL U . EX W . t(U,W) OR U = W",
        "EX U . EX W . t(U,W) AND NOT U = W",
    };
    for (const std::string& text : corpus) {
      CAPTURE(text);
      Formula psi = parse_formula(text, merge.target);
      Formula rel = relativize(psi, merge);
      std::set<std::string> fv = free_vars(psi);
      if (fv.empty()) {
        CHECK(eval_formula(rel, m) == eval_formula(psi, q));
      } else {
        REQUIRE(fv == std::set<std::string>{"V"});
        for (std::size_t e = 0; e < m.size(); ++e) {
          Assignment host{{"V", e}};
          Assignment proj{{"V", proj_of[e]}};
          CHECK(eval_formula(rel, m, host) == eval_formula(psi, q, proj));
        }
      }
    }
  }
}

TEST_CASE("interpretation json") {
  Signature lso = signature_from_json_text("\"LSO\"");
  CHECK(lso.has_relation("<"));
  CHECK(lso.has_relation("in"));
  CHECK(lso.has_function("G"));
  Signature lin = signature_from_json_text("\"LIN\"");
  CHECK(lin.has_relation("in"));
  CHECK_FALSE(lin.has_function("G"));

  Signature custom = signature_from_json_text(
      R"({"relations": {"r": {"arity": 2}},
          "functions": {"f": {"arity": 1, "result_sort": "Ord"}},
          "constants": {"c": null}})");
  CHECK(custom.relations.at("r").arity == 2);
  CHECK(custom.functions.at("f").result_sort == Sort::Ord);
  CHECK(custom.has_constant("c"));

  CHECK_THROWS_AS(signature_from_json_text("\"LFOO\""), ParseError);
  CHECK_THROWS_AS(signature_from_json_text("{bad"), ParseError);
  CHECK_THROWS_AS(signature_from_json_text(
                      R"({"relations": {"r": {"arity": 2, "arg_sorts": ["Ord"]}}})"),
                  ParseError);
  CHECK_THROWS_AS(signature_from_json_text(R"({"constants": {"c": "Xrd"}})"), ParseError);

  DefinedStructure a = defined_structure_from_json(
      R"({"host": "LIN",
          "target": {"relations": {"t": {"arity": 2}}},
          "phi_u": "v1 = v1",
          "phi_eq": "v1 = v2",
          "relations": {"t": "v1 in v2"}})");
  CHECK_NOTHROW(a.validate());
  CHECK(a.host.has_relation("in"));
  CHECK(a.target.has_relation("t"));
  // t(X,Y) unfolds through two fresh universe-bounded witnesses around the
  // substituted defining atom
  Formula rel = relativize(parse_formula("t(X,Y)", a.target), a);
  auto u_at = [](const std::string& v) {
    return f_atom("=", {Term::var(v), Term::var(v)});
  };
  Formula core = f_and(f_atom("=", {Term::var("_r1"), Term::var("X")}),
                       f_and(f_atom("=", {Term::var("_r2"), Term::var("Y")}),
                             f_atom("in", {Term::var("_r1"), Term::var("_r2")})));
  Formula expect =
      f_ex("_r1", std::nullopt,
           f_and(u_at("_r1"), f_ex("_r2", std::nullopt, f_and(u_at("_r2"), std::move(core)))));
  CHECK(rel == expect);

  CHECK_THROWS_AS(defined_structure_from_json("{}"), ParseError);
  CHECK_THROWS_AS(defined_structure_from_json(R"({"host": "LIN"})"), ParseError);
  CHECK_THROWS_AS(defined_structure_from_json(
                      R"({"host": "LIN", "target": "LIN", "phi_u": "v1 = (", "phi_eq": "v1 = v2",
                          "relations": {"in": "v1 in v2"}})"),
                  ParseError);
}
