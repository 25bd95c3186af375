#include "ordkernel/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordkernel/axioms.hpp"
#include "ordkernel/errors.hpp"
#include "ordkernel/formula.hpp"
#include "ordkernel/hf.hpp"
#include "ordkernel/interp.hpp"
#include "ordkernel/limits.hpp"
#include "ordkernel/ordinal.hpp"
#include "ordkernel/ordset.hpp"
#include "ordkernel/relcode.hpp"
#include "ordkernel/setops.hpp"
#include "ordkernel/starvm.hpp"
#include "ordkernel/structure.hpp"
#include "ordkernel/truncation.hpp"

namespace ordkernel {
namespace {

using nlohmann::json;

struct Ctx {
  std::ostream* out = nullptr;
  bool json_out = false;
  std::string beta0_text = "65536";
  std::string fuel_text = "10000000";
  std::string bound_text;  // empty means the flag was not given
};

std::string trim_copy(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// '@path' always reads the file; a bare argument naming an existing regular
// file is read too; anything else is the literal input.
std::string load_arg(const std::string& raw) {
  std::string s = trim_copy(raw);
  if (!s.empty() && s[0] == '@') {
    std::ifstream in(s.substr(1), std::ios::binary);
    if (!in) throw DomainError("cannot read file " + s.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    std::ifstream in(s, std::ios::binary);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
  }
  return raw;
}

Ordinal ord_arg(const std::string& s) { return parse_ordinal(trim_copy(s)); }

std::size_t size_arg(const std::string& s) {
  Ordinal v = ord_arg(s);
  if (v < 0 || v > 1'000'000'000) throw DomainError("count out of range: " + trim_copy(s));
  return v.convert_to<std::size_t>();
}

// Split outside of any braces, brackets, or parentheses.
std::vector<std::string> split_top(const std::string& s, char delim) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '(' || c == '[') ++depth;
    if (c == '}' || c == ')' || c == ']') --depth;
    if (c == delim && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  if (parts.size() == 1 && trim_copy(parts[0]).empty()) parts.clear();
  return parts;
}

std::vector<Ordinal> ords_arg(const std::string& s) {
  std::vector<Ordinal> out;
  for (const std::string& p : split_top(trim_copy(s), ',')) out.push_back(ord_arg(p));
  return out;
}

EvalBudget budget_of(const Ctx& ctx) {
  EvalBudget b;
  Ordinal fuel = ord_arg(ctx.fuel_text);
  if (fuel <= 0 || fuel > std::numeric_limits<long long>::max())
    throw DomainError("fuel out of range");
  b.fuel = fuel.convert_to<long long>();
  b.beta0 = ord_arg(ctx.beta0_text);
  if (b.beta0 <= 0) throw DomainError("beta0 must be positive");
  return b;
}

// --bound when given, else ORDKERNEL_BOUND, else nothing.
std::optional<std::string> bound_text(const Ctx& ctx) {
  if (!ctx.bound_text.empty()) return ctx.bound_text;
  if (const char* env = std::getenv("ORDKERNEL_BOUND"); env && *env) return std::string(env);
  return std::nullopt;
}

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void emit(const Ctx& ctx, const std::string& plain, const json& j) {
  if (ctx.json_out)
    *ctx.out << j.dump(2) << "\n";
  else
    *ctx.out << plain << "\n";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Signature named_signature(const std::string& name) {
  if (name == "lso") return lso_signature();
  if (name == "lin") return lin_signature();
  throw DomainError("unknown signature " + name + " (want lso or lin)");
}

Signature sig_for(const std::string& name, const FiniteStructure& m) {
  if (name == "auto") return inferred_signature(m);
  return named_signature(name);
}

Assignment assignment_arg(const std::string& text, const FiniteStructure& m) {
  Assignment a;
  for (const std::string& part : split_top(text, ',')) {
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw DomainError("bad assignment entry " + trim_copy(part) + " (want name=label)");
    a[trim_copy(part.substr(0, eq))] = m.index_of(trim_copy(part.substr(eq + 1)));
  }
  return a;
}

SetCode set_code_arg(const std::string& raw) {
  return SetCode::from(parse_relcode(load_arg(raw)));
}

json ohm(std::initializer_list<std::pair<std::string, json>> kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  Ctx ctx;
  ctx.out = &out;

  CLI::App app{
      "ordinal kernel: Godel pairing, relation-coded sets, a *-recursion VM, "
      "and a finite model checker for the two-sorted set theory"};
  app.name("ordkernel");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json_out, "machine readable output");
  app.add_option("--beta0", ctx.beta0_text,
                 "value truncation bound for program evaluation (default 65536)");
  app.add_option("--fuel", ctx.fuel_text, "evaluation step budget (default 10000000)");
  app.add_option("--bound", ctx.bound_text,
                 "numeric bound where a command takes one; env ORDKERNEL_BOUND "
                 "sets the default");

  struct Opts {
    std::string a, b, c;
    std::string code, program, args, formula, structure, interp, axiom, keep;
    std::string decode, arity, assign;
    std::string sig = "auto";
    std::string psig = "lso";
    std::string fn = "id";
    std::vector<std::string> assigns, phis;
    bool witness = false, tri = false, count_only = false;
  } o;

  // ---- ordinal core -------------------------------------------------------
  {
    auto* sc = app.add_subcommand("pair", "Godel pairing G(a, b)");
    sc->add_option("a", o.a, "first ordinal")->required();
    sc->add_option("b", o.b, "second ordinal")->required();
    sc->callback([&] {
      Ordinal av = ord_arg(o.a), bv = ord_arg(o.b);
      Ordinal r = godel_pair(av, bv);
      emit(ctx, r.str(), ohm({{"a", av.str()}, {"b", bv.str()}, {"result", r.str()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("unpair", "split a code into its pair");
    sc->add_option("code", o.a, "ordinal to split")->required();
    sc->callback([&] {
      Ordinal g = ord_arg(o.a);
      OrdPair p = unpair(g);
      emit(ctx, "(" + p.first.str() + "," + p.second.str() + ")",
           ohm({{"code", g.str()}, {"first", p.first.str()}, {"second", p.second.str()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("tuple", "right-nested tuple coding");
    sc->add_option("xs", o.a, "comma separated components to encode");
    sc->add_option("--decode", o.decode, "ordinal to decode instead");
    sc->add_option("--arity", o.arity, "component count for --decode");
    sc->callback([&] {
      if (!o.decode.empty()) {
        if (o.arity.empty()) throw CLI::RequiredError("--arity (with --decode)");
        std::vector<Ordinal> xs = tuple_decode(ord_arg(o.decode), size_arg(o.arity));
        std::string plain;
        json arr = json::array();
        for (const Ordinal& x : xs) {
          if (!plain.empty()) plain += ",";
          plain += x.str();
          arr.push_back(x.str());
        }
        emit(ctx, plain,
             ohm({{"code", ord_arg(o.decode).str()}, {"arity", xs.size()}, {"result", arr}}));
      } else {
        if (o.a.empty()) throw CLI::RequiredError("xs (or --decode)");
        std::vector<Ordinal> xs = ords_arg(o.a);
        Ordinal r = tuple_encode(xs);
        json arr = json::array();
        for (const Ordinal& x : xs) arr.push_back(x.str());
        emit(ctx, r.str(), ohm({{"xs", arr}, {"result", r.str()}}));
      }
    });
  }
  {
    auto* sc = app.add_subcommand("closed", "is eta closed under the pairing");
    sc->add_option("eta", o.a, "ordinal to test")->required();
    sc->callback([&] {
      bool r = godel_closed(ord_arg(o.a));
      emit(ctx, bool_text(r), ohm({{"eta", ord_arg(o.a).str()}, {"result", r}}));
    });
  }
  {
    auto* sc = app.add_subcommand("iota", "the set of ordinals below alpha");
    sc->add_option("alpha", o.a, "upper bound")->required();
    sc->callback([&] {
      OrdSet s = initial_segment(ord_arg(o.a));
      emit(ctx, to_string(s), ohm({{"alpha", ord_arg(o.a).str()}, {"result", to_string(s)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("lub", "least upper bound of a finite ordinal set");
    sc->add_option("set", o.a, "ordinal set literal like {0,2,5}")->required();
    sc->callback([&] {
      Ordinal r = lub(parse_ordset(load_arg(o.a)));
      emit(ctx, r.str(), ohm({{"result", r.str()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("powwitness", "power-set witness with its subset tags");
    sc->add_option("set", o.a, "base ordinal set literal")->required();
    sc->callback([&] {
      PowWitness w = pow_witness(parse_ordset(load_arg(o.a)));
      std::string plain = "base=" + to_string(w.base) + "\ncode=" + to_string(w.code);
      json rows = json::array();
      for (const auto& [z, xi] : w.xi) {
        plain += "\nxi(" + to_string(z) + ")=" + xi.str();
        rows.push_back(ohm({{"z", to_string(z)}, {"xi", xi.str()}}));
      }
      emit(ctx, plain,
           ohm({{"base", to_string(w.base)}, {"code", to_string(w.code)}, {"xi", rows}}));
    });
  }

  // ---- relation codes and set operations ----------------------------------
  {
    auto* sc = app.add_subcommand("classify", "test the set-code conditions on a relation");
    sc->add_option("rel", o.a, "relation literal like {(0,1),(1,2)}")->required();
    sc->callback([&] {
      Classification c = classify(parse_relcode(load_arg(o.a)));
      json j = ohm({{"nonempty", c.nonempty},
                    {"fund", c.fund},
                    {"ext", c.ext},
                    {"unitop", c.unitop},
                    {"unibotsuc", c.unibotsuc},
                    {"set", c.is_set}});
      j["bot"] = c.bot ? json(c.bot->str()) : json();
      j["top"] = c.top ? json(c.top->str()) : json();
      emit(ctx, to_string(c), j);
    });
  }
  {
    auto* sc = app.add_subcommand("cut", "the sub-code below a field node");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->add_option("at", o.b, "field node")->required();
    sc->callback([&] {
      RelCode r = cut(set_code_arg(o.a), ord_arg(o.b));
      emit(ctx, to_string(r), ohm({{"result", to_string(r)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("iso", "isomorphism of two set codes");
    sc->add_option("a", o.a, "first set code")->required();
    sc->add_option("b", o.b, "second set code")->required();
    sc->add_flag("--witness", o.witness, "print the node mapping or none");
    sc->callback([&] {
      SetCode a = set_code_arg(o.a), b = set_code_arg(o.b);
      if (o.witness) {
        auto w = iso_witness(a, b);
        if (!w) {
          emit(ctx, "none", ohm({{"iso", false}, {"witness", json()}}));
          return;
        }
        std::string plain = "{";
        json rows = json::array();
        for (const auto& [x, y] : *w) {
          if (plain.size() > 1) plain += ",";
          plain += x.str() + "->" + y.str();
          rows.push_back(json::array({x.str(), y.str()}));
        }
        plain += "}";
        emit(ctx, plain, ohm({{"iso", true}, {"witness", rows}}));
      } else {
        bool r = iso(a, b);
        emit(ctx, bool_text(r), ohm({{"iso", r}}));
      }
    });
  }
  {
    auto* sc = app.add_subcommand("mem", "coded membership: a in b");
    sc->add_option("a", o.a, "element set code")->required();
    sc->add_option("b", o.b, "container set code")->required();
    sc->callback([&] {
      bool r = mem(set_code_arg(o.a), set_code_arg(o.b));
      emit(ctx, bool_text(r), ohm({{"result", r}}));
    });
  }
  {
    auto* sc = app.add_subcommand("build", "adjoin the elements cut at members of d");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->add_option("d", o.b, "ordinal set of field nodes")->required();
    sc->add_option("alpha", o.c, "name of the new top")->required();
    sc->callback([&] {
      SetCode r =
          build_from_predecessors(set_code_arg(o.a), parse_ordset(load_arg(o.b)), ord_arg(o.c));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("ordcode", "the canonical code of a finite von Neumann ordinal");
    sc->add_option("n", o.a, "ordinal")->required();
    sc->callback([&] {
      SetCode r = code_of_ordinal(ord_arg(o.a));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("sep", "separation: keep elements with a listed collapse");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->add_option("--keep", o.keep,
                   "semicolon separated hereditarily finite literals, e.g. '{};{{}}'");
    sc->callback([&] {
      SetCode a = set_code_arg(o.a);
      std::vector<HFSet> keep;
      for (const std::string& part : split_top(load_arg(o.keep), ';'))
        keep.push_back(parse_hf(part));
      SetCode r = separation_code(a, [&](const SetCode& e) {
        return std::find(keep.begin(), keep.end(), collapse(e)) != keep.end();
      });
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("union", "union of the elements of a set code");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->callback([&] {
      SetCode r = union_code(set_code_arg(o.a));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("choice", "a choice set for a code of nonempty sets");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->callback([&] {
      SetCode r = choice_code(set_code_arg(o.a));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("pairset", "the unordered pair of two set codes");
    sc->add_option("a", o.a, "first set code")->required();
    sc->add_option("b", o.b, "second set code")->required();
    sc->callback([&] {
      SetCode r = pair_code(set_code_arg(o.a), set_code_arg(o.b));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("power", "the power set of a set code");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->callback([&] {
      SetCode r = power_code(set_code_arg(o.a));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("replace", "replacement along a named class function");
    sc->add_option("rel", o.a, "set code literal")->required();
    sc->add_option("--fn", o.fn, "one of id, power, union, pairself (default id)");
    sc->callback([&] {
      std::function<SetCode(const SetCode&)> f;
      if (o.fn == "id")
        f = [](const SetCode& x) { return x; };
      else if (o.fn == "power")
        f = [](const SetCode& x) { return power_code(x); };
      else if (o.fn == "union")
        f = [](const SetCode& x) { return union_code(x); };
      else if (o.fn == "pairself")
        f = [](const SetCode& x) { return pair_code(x, x); };
      else
        throw DomainError("unknown --fn " + o.fn + " (want id, power, union, or pairself)");
      SetCode r = replacement_code(set_code_arg(o.a), f);
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("enum", "every set code with field inside 0..fb-1");
    sc->add_option("fb", o.a, "field bound")->required();
    sc->add_flag("--count", o.count_only, "print only the number of codes");
    sc->callback([&] {
      std::vector<SetCode> codes =
          enumerate_set_codes(static_cast<unsigned>(size_arg(o.a)));
      if (o.count_only) {
        emit(ctx, std::to_string(codes.size()), ohm({{"count", codes.size()}}));
        return;
      }
      std::string plain;
      json arr = json::array();
      for (const SetCode& c : codes) {
        if (!plain.empty()) plain += "\n";
        plain += to_string(c.rel());
        arr.push_back(to_string(c.rel()));
      }
      emit(ctx, plain, ohm({{"count", codes.size()}, {"codes", arr}}));
    });
  }

  // ---- collapse and hereditarily finite sets ------------------------------
  {
    auto* sc = app.add_subcommand("collapse", "collapse a set code to its finite set");
    sc->add_option("--code", o.code, "set code literal")->required();
    sc->callback([&] {
      HFSet v = collapse(set_code_arg(o.code));
      emit(ctx, to_string(v), ohm({{"result", to_string(v)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("encode", "the canonical code of a finite set literal");
    sc->add_option("hf", o.a, "literal like {{},{{}}}")->required();
    sc->callback([&] {
      SetCode r = encode_hf(parse_hf(load_arg(o.a)));
      emit(ctx, to_string(r.rel()), ohm({{"result", to_string(r.rel())}}));
    });
  }
  {
    auto* sc = app.add_subcommand("rank", "rank of a finite set literal");
    sc->add_option("hf", o.a, "literal like {{},{{}}}")->required();
    sc->callback([&] {
      std::size_t r = hf_rank(parse_hf(load_arg(o.a)));
      emit(ctx, std::to_string(r), ohm({{"result", r}}));
    });
  }

  // ---- program machinery --------------------------------------------------
  {
    auto* sc = app.add_subcommand("eval", "run a program on arguments");
    sc->add_option("--program", o.program, "program text or file")->required();
    sc->add_option("--args", o.args, "comma separated ordinal arguments");
    sc->callback([&] {
      FunPtr f = parse_program(load_arg(o.program));
      Evaluator ev(budget_of(ctx));
      Ordinal r = ev.eval(f, ords_arg(o.args));
      emit(ctx, r.str(), ohm({{"result", r.str()}, {"steps", ev.steps()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("numof", "the index of a program");
    sc->add_option("--program", o.program, "program text or file")->required();
    sc->callback([&] {
      Ordinal r = number_of(parse_program(load_arg(o.program)), budget_of(ctx).beta0);
      emit(ctx, r.str(), ohm({{"result", r.str()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("astof", "the program behind an index");
    sc->add_option("code", o.a, "program index")->required();
    sc->callback([&] {
      FunPtr f = ast_of(ord_arg(o.a));
      emit(ctx, to_string(f), ohm({{"result", to_string(f)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("fun", "apply the universal evaluator");
    sc->add_option("--program", o.program, "program text or file");
    sc->add_option("--code", o.code, "program index instead of a program");
    sc->add_option("--args", o.args, "comma separated ordinal arguments")->required();
    sc->callback([&] {
      bool has_p = !o.program.empty(), has_c = !o.code.empty();
      if (has_p == has_c) throw CLI::RequiredError("exactly one of --program and --code");
      EvalBudget b = budget_of(ctx);
      Ordinal code =
          has_c ? ord_arg(load_arg(o.code)) : number_of(parse_program(load_arg(o.program)), b.beta0);
      std::vector<Ordinal> xs = ords_arg(o.args);
      if (xs.empty()) throw DomainError("--args must list at least one component");
      Ordinal r = fun_universal(code, tuple_encode(xs), b);
      emit(ctx, r.str(), ohm({{"code", code.str()}, {"result", r.str()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("iset", "the set a program index defines below alpha");
    sc->add_option("alpha", o.a, "bound")->required();
    sc->add_option("beta", o.b, "program index")->required();
    sc->add_option("gamma", o.c, "parameter")->required();
    sc->callback([&] {
      OrdSet r = define_set(ord_arg(o.a), ord_arg(o.b), ord_arg(o.c), budget_of(ctx));
      emit(ctx, to_string(r), ohm({{"result", to_string(r)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("minname", "least name of a set among coded definitions");
    sc->add_option("set", o.a, "ordinal set literal")->required();
    sc->callback([&] {
      auto bt = bound_text(ctx);
      Ordinal search = bt ? ord_arg(*bt) : Ordinal(10000);
      auto r = minimal_name(parse_ordset(load_arg(o.a)), search, budget_of(ctx));
      if (r)
        emit(ctx, r->str(), ohm({{"found", true}, {"delta", r->str()}}));
      else
        emit(ctx, "none", ohm({{"found", false}, {"delta", json()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("subtest", "subset test between two coded definitions");
    sc->add_option("t1", o.a, "first coded definition pair(beta, gamma)")->required();
    sc->add_option("t2", o.b, "second coded definition")->required();
    sc->add_option("eta", o.c, "bound")->required();
    sc->callback([&] {
      bool r = subset_test(ord_arg(o.a), ord_arg(o.b), ord_arg(o.c), budget_of(ctx));
      emit(ctx, bool_text(r), ohm({{"result", r}}));
    });
  }

  // ---- formulas, structures, axioms ---------------------------------------
  {
    auto* sc = app.add_subcommand("parse", "parse a formula and print it back");
    sc->add_option("--formula", o.formula, "formula text or file")->required();
    sc->add_option("--sig", o.psig, "signature: lso (default) or lin");
    sc->callback([&] {
      Formula f = parse_formula(load_arg(o.formula), named_signature(o.psig));
      emit(ctx, to_string(f), ohm({{"result", to_string(f)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("relativize", "rewrite a formula through an interpretation");
    sc->add_option("--formula", o.formula, "target formula text or file")->required();
    sc->add_option("--interp", o.interp, "interpretation JSON or file")->required();
    sc->callback([&] {
      DefinedStructure a = defined_structure_from_json(load_arg(o.interp));
      Formula psi = parse_formula(load_arg(o.formula), a.target);
      Formula r = relativize(psi, a);
      emit(ctx, to_string(r), ohm({{"result", to_string(r)}}));
    });
  }
  {
    auto* sc = app.add_subcommand("evalf", "evaluate a formula on a finite structure");
    sc->add_option("--formula", o.formula, "formula text or file")->required();
    sc->add_option("--structure", o.structure, "structure JSON or file")->required();
    sc->add_option("--assign", o.assign, "free variable assignment like x=0,y={0,1}");
    sc->add_option("--sig", o.sig, "signature: auto (default), lso, or lin");
    sc->add_flag("--tri", o.tri, "three valued evaluation");
    sc->callback([&] {
      FiniteStructure m = structure_from_json(load_arg(o.structure));
      Formula f = parse_formula(load_arg(o.formula), sig_for(o.sig, m));
      Assignment asg = assignment_arg(o.assign, m);
      if (o.tri) {
        Tri r = eval_tri(f, m, asg);
        emit(ctx, to_string(r), ohm({{"result", to_string(r)}}));
      } else {
        bool r = eval_formula(f, m, asg);
        emit(ctx, bool_text(r), ohm({{"result", bool_text(r)}}));
      }
    });
  }
  {
    auto* sc = app.add_subcommand("checkdef", "well-definedness report of an interpretation");
    sc->add_option("--interp", o.interp, "interpretation JSON or file")->required();
    sc->add_option("--structure", o.structure, "host structure JSON or file")->required();
    sc->callback([&] {
      DefinedStructure a = defined_structure_from_json(load_arg(o.interp));
      FiniteStructure m = structure_from_json(load_arg(o.structure));
      DefinableCheckReport rep = check_definable_structure(a, m);
      json items = json::array();
      for (const auto& it : rep.items)
        items.push_back(ohm({{"condition", it.condition},
                             {"symbol", it.symbol},
                             {"ok", it.ok},
                             {"detail", it.detail}}));
      emit(ctx, chomp(rep.to_text()), ohm({{"all_ok", rep.all_ok()}, {"items", items}}));
    });
  }
  {
    auto* sc = app.add_subcommand("quotient", "the structure an interpretation defines");
    sc->add_option("--interp", o.interp, "interpretation JSON or file")->required();
    sc->add_option("--structure", o.structure, "host structure JSON or file")->required();
    sc->callback([&] {
      DefinedStructure a = defined_structure_from_json(load_arg(o.interp));
      FiniteStructure m = structure_from_json(load_arg(o.structure));
      std::string js = structure_to_json(quotient_structure(a, m));
      emit(ctx, js, json::parse(js));
    });
  }
  {
    auto* sc = app.add_subcommand("sofv", "the rank-k two-sorted truncation structure");
    sc->add_option("k", o.a, "largest ordinal in the carrier")->required();
    sc->callback([&] {
      std::string js = structure_to_json(so_structure_of(static_cast<unsigned>(size_arg(o.a))));
      emit(ctx, js, json::parse(js));
    });
  }
  {
    auto* sc = app.add_subcommand("reflect", "least level where a formula relativizes truly");
    sc->add_option("--formula", o.formula, "formula text or file")->required();
    sc->add_option("--structure", o.structure, "truncation structure JSON or file")->required();
    sc->add_option("--param", o.assigns, "parameter assignment like gamma=3 (repeatable)")
        ->expected(1);
    sc->add_option("--sig", o.sig, "signature: auto (default), lso, or lin");
    sc->callback([&] {
      FiniteStructure m = structure_from_json(load_arg(o.structure));
      Formula f = parse_formula(load_arg(o.formula), sig_for(o.sig, m));
      std::vector<Assignment> params;
      for (const std::string& p : o.assigns) params.push_back(assignment_arg(p, m));
      auto r = reflect_search(f, m, params);
      if (r)
        emit(ctx, r->str(), ohm({{"found", true}, {"alpha", r->str()}}));
      else
        emit(ctx, "none", ohm({{"found", false}, {"alpha", json()}}));
    });
  }
  {
    auto* sc = app.add_subcommand("checkaxiom", "check one axiom on a finite structure");
    sc->add_option("--axiom", o.axiom,
                   "one of SOR, WO, INF, EXT, INI, BOU, GPF, SUR, SEP, REP, POW")
        ->required();
    sc->add_option("--structure", o.structure, "structure JSON or file")->required();
    sc->add_option("--phi", o.phis, "schema instance formula (repeatable, SEP and REP only)")
        ->expected(1);
    sc->callback([&] {
      auto id = parse_axiom_id(o.axiom);
      if (!id) throw DomainError("unknown axiom id " + o.axiom);
      FiniteStructure m = structure_from_json(load_arg(o.structure));
      std::vector<Formula> inst;
      for (const std::string& p : o.phis)
        inst.push_back(parse_formula(load_arg(p), lso_signature()));
      auto bt = bound_text(ctx);
      std::size_t bound = bt ? size_arg(*bt) : kNoBound;
      AxiomReport rep = check_axiom(*id, m, bound, inst);
      emit(ctx, rep.to_text(),
           ohm({{"axiom", to_string(rep.id)},
                {"verdict", rep.verdict},
                {"checked", rep.checked},
                {"holding", rep.holding},
                {"failing", rep.failing},
                {"boundary", rep.boundary},
                {"failing_samples", rep.failing_samples},
                {"note", rep.note}}));
    });
  }

  std::vector<std::string> argv_store;
  argv_store.push_back("ordkernel");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    out << "error: " << e.what() << "\n";
    return 4;
  } catch (const ResourceLimitError& e) {
    out << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ordkernel
