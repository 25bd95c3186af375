#include "ordkernel/starvm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ordkernel/errors.hpp"

namespace ordkernel {

namespace {

FunPtr make(FunAst ast) { return std::make_shared<const FunAst>(std::move(ast)); }

constexpr std::size_t kDecodeListCap = 65536;
constexpr int kDecodeDepthCap = 64;

}  // namespace

FunPtr fn_base(BaseFn fn) {
  if (fn == BaseFn::Proj) throw ContractError("projection needs indices, use fn_proj");
  return make(FunAst{FunAst::Base{fn, 0, 0}});
}

FunPtr fn_proj(std::size_t m, std::size_t n) {
  if (n == 0 || m >= n) throw ContractError("projection index out of range");
  return make(FunAst{FunAst::Base{BaseFn::Proj, m, n}});
}

FunPtr fn_comp(FunPtr g, std::vector<FunPtr> hs) {
  if (!g) throw ContractError("composition without outer function");
  if (hs.empty()) throw ContractError("composition needs at least one inner function");
  if (arity_of(g) != hs.size()) throw ContractError("composition arity mismatch");
  std::size_t m = arity_of(hs.front());
  for (const FunPtr& h : hs)
    if (!h || arity_of(h) != m) throw ContractError("inner functions must share one arity");
  return make(FunAst{FunAst::Comp{std::move(g), std::move(hs)}});
}

FunPtr fn_recmin(FunPtr g, std::vector<std::vector<FunPtr>> rows) {
  if (!g) throw ContractError("recursive minimization without test function");
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? arity_of(g) : rows.front().size() + 1;
  if (n < 1) throw ContractError("recursive minimization needs positive arity");
  if (n == 1 && m > 0) throw ContractError("unary recursive minimization cannot take rows");
  if (arity_of(g) != n + m) throw ContractError("test function arity must be n + m");
  for (const auto& row : rows) {
    if (row.size() != n - 1) throw ContractError("helper rows must have length n - 1");
    for (const FunPtr& h : row)
      if (!h || arity_of(h) != n) throw ContractError("helper functions must have arity n");
  }
  return make(FunAst{FunAst::RecMin{std::move(g), n, std::move(rows)}});
}

std::size_t arity_of(const FunAst& f) {
  if (const auto* b = std::get_if<FunAst::Base>(&f.node)) {
    switch (b->fn) {
      case BaseFn::Id: return 1;
      case BaseFn::Proj: return b->n;
      case BaseFn::Or: return 2;
      case BaseFn::Less: return 2;
      case BaseFn::Eq: return 2;
      case BaseFn::Not: return 1;
      case BaseFn::G1: return 1;
      case BaseFn::G2: return 1;
      case BaseFn::GBounded: return 3;
    }
    throw ContractError("unknown base function");
  }
  if (const auto* c = std::get_if<FunAst::Comp>(&f.node)) return arity_of(*c->hs.front());
  return std::get<FunAst::RecMin>(f.node).n;
}

std::size_t arity_of(const FunPtr& f) {
  if (!f) throw ContractError("null program");
  return arity_of(*f);
}

bool ast_equal(const FunAst& x, const FunAst& y) {
  if (x.node.index() != y.node.index()) return false;
  if (const auto* bx = std::get_if<FunAst::Base>(&x.node)) {
    const auto& by = std::get<FunAst::Base>(y.node);
    if (bx->fn != by.fn) return false;
    if (bx->fn == BaseFn::Proj) return bx->m == by.m && bx->n == by.n;
    return true;
  }
  if (const auto* cx = std::get_if<FunAst::Comp>(&x.node)) {
    const auto& cy = std::get<FunAst::Comp>(y.node);
    if (cx->hs.size() != cy.hs.size()) return false;
    if (!ast_equal(*cx->g, *cy.g)) return false;
    for (std::size_t i = 0; i < cx->hs.size(); ++i)
      if (!ast_equal(*cx->hs[i], *cy.hs[i])) return false;
    return true;
  }
  const auto& rx = std::get<FunAst::RecMin>(x.node);
  const auto& ry = std::get<FunAst::RecMin>(y.node);
  if (rx.n != ry.n || rx.rows.size() != ry.rows.size()) return false;
  if (!ast_equal(*rx.g, *ry.g)) return false;
  for (std::size_t j = 0; j < rx.rows.size(); ++j) {
    if (rx.rows[j].size() != ry.rows[j].size()) return false;
    for (std::size_t i = 0; i < rx.rows[j].size(); ++i)
      if (!ast_equal(*rx.rows[j][i], *ry.rows[j][i])) return false;
  }
  return true;
}

Ordinal eval_base(BaseFn fn, std::size_t m, std::size_t n, const std::vector<Ordinal>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw ContractError("base function arity mismatch");
  };
  switch (fn) {
    case BaseFn::Id:
      need(1);
      return args[0];
    case BaseFn::Proj:
      if (n == 0 || m >= n) throw ContractError("projection index out of range");
      need(n);
      return args[m];
    case BaseFn::Or:
      need(2);
      return (args[0] > 0 || args[1] > 0) ? 1 : 0;
    case BaseFn::Less:
      need(2);
      return args[0] < args[1] ? 1 : 0;
    case BaseFn::Eq:
      need(2);
      return args[0] == args[1] ? 1 : 0;
    case BaseFn::Not:
      need(1);
      return args[0] == 0 ? 1 : 0;
    case BaseFn::G1:
      need(1);
      return unpair(args[0]).first;
    case BaseFn::G2:
      need(1);
      return unpair(args[0]).second;
    case BaseFn::GBounded: {
      need(3);
      Ordinal p = godel_pair(args[1], args[2]);
      return p < args[0] ? p : args[0];
    }
  }
  throw ContractError("unknown base function");
}

std::size_t Evaluator::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<const void*>{}(k.node);
  h ^= OrdinalVectorHash{}(k.args) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Evaluator::Evaluator(EvalBudget budget) : budget_(std::move(budget)) {
  if (budget_.fuel <= 0) throw DomainError("fuel must be positive");
  if (budget_.beta0 <= 0) throw DomainError("argument bound must be positive");
}

Ordinal Evaluator::eval(const FunPtr& f, const std::vector<Ordinal>& args) {
  if (!f) throw ContractError("null program");
  if (args.size() != arity_of(*f)) throw ContractError("argument count does not match arity");
  for (const Ordinal& a : args) {
    if (a < 0) throw DomainError("arguments must be ordinals");
    if (a >= budget_.beta0) throw DomainError("argument exceeds the configured bound");
  }
  return eval_node(f.get(), args);
}

Ordinal Evaluator::eval_node(const FunAst* f, std::vector<Ordinal> args) {
  if (++steps_ > budget_.fuel) throw BudgetError("evaluation fuel exhausted");

  Key key{f, std::move(args)};
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;
  const std::vector<Ordinal>& a = key.args;

  Ordinal result;
  if (const auto* b = std::get_if<FunAst::Base>(&f->node)) {
    result = eval_base(b->fn, b->m, b->n, a);
  } else if (const auto* c = std::get_if<FunAst::Comp>(&f->node)) {
    std::vector<Ordinal> inner;
    inner.reserve(c->hs.size());
    for (const FunPtr& h : c->hs) inner.push_back(eval_node(h.get(), a));
    result = eval_node(c->g.get(), std::move(inner));
  } else {
    const auto& r = std::get<FunAst::RecMin>(f->node);
    std::size_t m = r.rows.size();
    const Ordinal& bound = a[0];
    result = bound;  // fallback when no delta qualifies
    for (Ordinal delta = 0; delta < bound; ++delta) {
      std::vector<Ordinal> gargs;
      gargs.reserve(r.n + m);
      gargs.push_back(delta);
      for (std::size_t i = 1; i < r.n; ++i) gargs.push_back(a[i]);
      for (std::size_t j = 0; j < m; ++j) {
        // gamma_j = row j applied to (delta, rest); the self-call is
        // truncated to 0 unless gamma_j descends pointwise below rest.
        std::vector<Ordinal> hargs(gargs.begin(), gargs.begin() + r.n);
        std::vector<Ordinal> gamma;
        gamma.reserve(r.n);
        gamma.push_back(bound);
        for (std::size_t i = 0; i + 1 < r.n; ++i)
          gamma.push_back(eval_node(r.rows[j][i].get(), hargs));
        bool below = true, equal = true;
        for (std::size_t i = 1; i < r.n; ++i) {
          if (gamma[i] > a[i]) below = false;
          if (gamma[i] != a[i]) equal = false;
        }
        gargs.push_back(below && !equal ? eval_node(f, std::move(gamma)) : Ordinal(0));
      }
      if (eval_node(r.g.get(), std::move(gargs)) > 0) {
        result = delta;
        break;
      }
    }
  }

  memo_.emplace(std::move(key), result);
  return result;
}

Ordinal eval(const FunPtr& f, const std::vector<Ordinal>& args, const EvalBudget& budget) {
  Evaluator e(budget);
  return e.eval(f, args);
}

namespace {

Ordinal enc_list(const std::vector<Ordinal>& xs) {
  return godel_pair(Ordinal(xs.size()), xs.empty() ? Ordinal(0) : tuple_encode(xs));
}

std::vector<Ordinal> dec_list(const Ordinal& e) {
  auto [len, enc] = unpair(e);
  if (len == 0) {
    if (enc != 0) throw DecodeError("empty list with nonzero payload");
    return {};
  }
  if (len > kDecodeListCap) throw DecodeError("implausibly long list in code");
  return tuple_decode(enc, len.convert_to<std::size_t>());
}

Ordinal base_payload(const FunAst::Base& b) {
  switch (b.fn) {
    case BaseFn::Id: return godel_pair(0, 0);
    case BaseFn::Proj: return godel_pair(1, godel_pair(Ordinal(b.m), Ordinal(b.n)));
    case BaseFn::Or: return godel_pair(2, 0);
    case BaseFn::Less: return godel_pair(3, 0);
    case BaseFn::Eq: return godel_pair(4, 0);
    case BaseFn::Not: return godel_pair(5, 0);
    case BaseFn::G1: return godel_pair(6, 0);
    case BaseFn::G2: return godel_pair(7, 0);
    case BaseFn::GBounded: return godel_pair(8, 0);
  }
  throw ContractError("unknown base function");
}

Ordinal raw_code(const FunAst& f, const Ordinal& beta0);

Ordinal lifted_code(const FunAst& f, const Ordinal& beta0) {
  if (std::holds_alternative<FunAst::Base>(f.node)) return raw_code(f, beta0);
  std::vector<Ordinal> top(arity_of(f), beta0 - 1);
  Ordinal t = tuple_encode(top);
  if (t < 1) t = 1;
  return godel_pair(t, raw_code(f, beta0));
}

Ordinal raw_code(const FunAst& f, const Ordinal& beta0) {
  if (const auto* b = std::get_if<FunAst::Base>(&f.node)) return godel_pair(0, base_payload(*b));
  if (const auto* c = std::get_if<FunAst::Comp>(&f.node)) {
    std::vector<Ordinal> hs;
    hs.reserve(c->hs.size());
    for (const FunPtr& h : c->hs) hs.push_back(lifted_code(*h, beta0));
    return godel_pair(1, godel_pair(lifted_code(*c->g, beta0), enc_list(hs)));
  }
  const auto& r = std::get<FunAst::RecMin>(f.node);
  std::vector<Ordinal> flat;
  for (const auto& row : r.rows)
    for (const FunPtr& h : row) flat.push_back(lifted_code(*h, beta0));
  Ordinal tail = godel_pair(Ordinal(r.n), godel_pair(Ordinal(r.rows.size()), enc_list(flat)));
  return godel_pair(2, godel_pair(lifted_code(*r.g, beta0), tail));
}

FunPtr decode(const Ordinal& code, int depth) {
  if (depth > kDecodeDepthCap) throw DecodeError("code nests too deeply");
  auto [head, body] = unpair(code);
  if (head == 0) {
    auto [kind, rest] = unpair(body);
    if (kind == 0) {
      if (rest != 0) throw DecodeError("bad identity payload");
      return fn_base(BaseFn::Id);
    }
    if (kind == 1) {
      auto [m, n] = unpair(rest);
      if (n > kDecodeListCap || m >= n) throw DecodeError("bad projection payload");
      return fn_proj(m.convert_to<std::size_t>(), n.convert_to<std::size_t>());
    }
    if (kind <= 8) {
      if (rest != 0) throw DecodeError("bad base payload");
      static const BaseFn fns[] = {BaseFn::Or, BaseFn::Less, BaseFn::Eq,  BaseFn::Not,
                                   BaseFn::G1, BaseFn::G2,   BaseFn::GBounded};
      return fn_base(fns[kind.convert_to<std::size_t>() - 2]);
    }
    throw DecodeError("unknown base tag");
  }
  auto [tag, payload] = unpair(body);
  if (tag == 1) {
    auto [gc, hl] = unpair(payload);
    FunPtr g = decode(gc, depth + 1);
    std::vector<FunPtr> hs;
    for (const Ordinal& hc : dec_list(hl)) hs.push_back(decode(hc, depth + 1));
    if (hs.empty() || arity_of(g) != hs.size()) throw DecodeError("composition arity mismatch");
    std::size_t m = arity_of(hs.front());
    for (const FunPtr& h : hs)
      if (arity_of(h) != m) throw DecodeError("composition arity mismatch");
    return fn_comp(std::move(g), std::move(hs));
  }
  if (tag == 2) {
    auto [gc, rest1] = unpair(payload);
    auto [nn, rest2] = unpair(rest1);
    auto [mm, flat_enc] = unpair(rest2);
    if (nn < 1 || nn > kDecodeListCap || mm > kDecodeListCap)
      throw DecodeError("bad minimization shape");
    std::size_t n = nn.convert_to<std::size_t>();
    std::size_t m = mm.convert_to<std::size_t>();
    if (n == 1 && m > 0) throw DecodeError("unary minimization cannot take rows");
    FunPtr g = decode(gc, depth + 1);
    if (arity_of(g) != n + m) throw DecodeError("minimization test arity mismatch");
    std::vector<Ordinal> flat = dec_list(flat_enc);
    if (flat.size() != m * (n - 1)) throw DecodeError("minimization row count mismatch");
    std::vector<std::vector<FunPtr>> rows(m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i + 1 < n; ++i) {
        FunPtr h = decode(flat[j * (n - 1) + i], depth + 1);
        if (arity_of(h) != n) throw DecodeError("helper arity mismatch");
        rows[j].push_back(std::move(h));
      }
    return fn_recmin(std::move(g), std::move(rows));
  }
  throw DecodeError("unknown constructor tag");
}

}  // namespace

Ordinal number_of(const FunAst& f, const Ordinal& beta0) {
  if (beta0 <= 0) throw DomainError("argument bound must be positive");
  return lifted_code(f, beta0);
}

Ordinal number_of(const FunPtr& f, const Ordinal& beta0) {
  if (!f) throw ContractError("null program");
  return number_of(*f, beta0);
}

FunPtr ast_of(const Ordinal& code) {
  if (code < 0) throw DecodeError("codes are ordinals");
  return decode(code, 0);
}

std::size_t arity_of(const Ordinal& code) { return arity_of(*ast_of(code)); }

Ordinal fun_universal(const Ordinal& code, const Ordinal& arg_tuple, const EvalBudget& budget) {
  FunPtr f = ast_of(code);
  std::vector<Ordinal> args = tuple_decode(arg_tuple, arity_of(*f));
  Evaluator e(budget);
  return e.eval(f, args);
}

OrdSet define_set(const Ordinal& alpha, const Ordinal& beta, const Ordinal& gamma,
                  const EvalBudget& budget) {
  if (alpha < 0) throw DomainError("range bound must be an ordinal");
  if (alpha > budget.beta0) throw DomainError("range bound exceeds the argument bound");
  FunPtr f;
  try {
    f = ast_of(beta);
  } catch (const DecodeError&) {
    return OrdSet();  // beta codes no program, so nothing qualifies
  }
  std::size_t k = arity_of(*f);
  Evaluator e(budget);
  OrdSet out;
  for (Ordinal eta = 0; eta < alpha; ++eta) {
    try {
      if (e.eval(f, tuple_decode(godel_pair(eta, gamma), k)) > 0) out.insert(eta);
    } catch (const DomainError&) {
      // an application outside the argument bound fails the test
    }
  }
  return out;
}

namespace {

struct NamedSet {
  Ordinal alpha;
  FunPtr f;  // null when beta decodes to nothing
  std::size_t k = 0;
  Ordinal gamma;
};

NamedSet open_triple(const Ordinal& t) {
  std::vector<Ordinal> parts = tuple_decode(t, 3);
  NamedSet s;
  s.alpha = parts[0];
  s.gamma = parts[2];
  try {
    s.f = ast_of(parts[1]);
    s.k = arity_of(*s.f);
  } catch (const DecodeError&) {
    s.f = nullptr;
  }
  return s;
}

bool element_of(Evaluator& e, const NamedSet& s, const Ordinal& eps) {
  if (!s.f || eps >= s.alpha) return false;
  try {
    return e.eval(s.f, tuple_decode(godel_pair(eps, s.gamma), s.k)) > 0;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

bool subset_test(const Ordinal& t1, const Ordinal& t2, const Ordinal& eta,
                 const EvalBudget& budget) {
  NamedSet s1 = open_triple(t1), s2 = open_triple(t2);
  Evaluator e1(budget), e2(budget);
  for (Ordinal eps = 0; eps < eta; ++eps)
    if (element_of(e1, s1, eps) && !element_of(e2, s2, eps)) return false;
  return true;
}

std::optional<Ordinal> minimal_name(const OrdSet& a, const Ordinal& search_bound,
                                    const EvalBudget& budget) {
  for (Ordinal delta = 0; delta < search_bound; ++delta) {
    std::vector<Ordinal> parts = tuple_decode(delta, 3);
    try {
      if (define_set(parts[0], parts[1], parts[2], budget) == a) return delta;
    } catch (const DomainError&) {
      // alpha beyond the argument bound: this triple names nothing
    }
  }
  return std::nullopt;
}

namespace {

struct SexpTokens {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    if (done()) throw ParseError("unexpected end of program");
    return toks[pos];
  }
  std::string take() {
    const std::string& t = peek();
    ++pos;
    return t;
  }
};

SexpTokens tokenize(const std::string& text) {
  SexpTokens out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.toks.push_back(std::string(1, c));
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')')
        ++i;
      out.toks.push_back(text.substr(start, i - start));
    }
  }
  return out;
}

std::optional<BaseFn> base_by_name(const std::string& name) {
  if (name == "id") return BaseFn::Id;
  if (name == "or") return BaseFn::Or;
  if (name == "less") return BaseFn::Less;
  if (name == "eq") return BaseFn::Eq;
  if (name == "not") return BaseFn::Not;
  if (name == "g1") return BaseFn::G1;
  if (name == "g2") return BaseFn::G2;
  if (name == "g") return BaseFn::GBounded;
  return std::nullopt;
}

std::size_t parse_index(const std::string& tok) {
  if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError("expected a small number, got '" + tok + "'");
  return std::stoul(tok);
}

FunPtr parse_expr(SexpTokens& ts) {
  std::string tok = ts.take();
  if (tok == ")") throw ParseError("unexpected ')'");
  if (tok != "(") {
    auto fn = base_by_name(tok);
    if (!fn) throw ParseError("unknown function name '" + tok + "'");
    return fn_base(*fn);
  }

  std::string head = ts.take();
  if (head == "proj") {
    std::size_t m = parse_index(ts.take());
    std::size_t n = parse_index(ts.take());
    if (ts.take() != ")") throw ParseError("expected ')' after projection");
    if (n == 0 || m >= n) throw ParseError("projection index out of range");
    return fn_proj(m, n);
  }
  if (head == "comp") {
    FunPtr g = parse_expr(ts);
    std::vector<FunPtr> hs;
    while (ts.peek() != ")") hs.push_back(parse_expr(ts));
    ts.take();
    if (hs.empty()) throw ParseError("composition needs inner functions");
    if (arity_of(g) != hs.size()) throw ParseError("composition arity mismatch");
    std::size_t m = arity_of(hs.front());
    for (const FunPtr& h : hs)
      if (arity_of(h) != m) throw ParseError("inner functions must share one arity");
    return fn_comp(std::move(g), std::move(hs));
  }
  if (head == "recmin") {
    FunPtr g = parse_expr(ts);
    if (ts.take() != "(") throw ParseError("expected row list after recmin");
    std::vector<std::vector<FunPtr>> rows;
    while (ts.peek() != ")") {
      if (ts.take() != "(") throw ParseError("expected a row");
      std::vector<FunPtr> row;
      while (ts.peek() != ")") row.push_back(parse_expr(ts));
      ts.take();
      rows.push_back(std::move(row));
    }
    ts.take();
    if (ts.take() != ")") throw ParseError("expected ')' after recmin");
    std::size_t m = rows.size();
    std::size_t n = m == 0 ? arity_of(g) : rows.front().size() + 1;
    if (n == 1 && m > 0) throw ParseError("unary recmin cannot take rows");
    if (arity_of(g) != n + m) throw ParseError("recmin test arity must be n + m");
    for (const auto& row : rows) {
      if (row.size() + 1 != n) throw ParseError("rows must share length n - 1");
      for (const FunPtr& h : row)
        if (arity_of(h) != n) throw ParseError("helpers must have arity n");
    }
    return fn_recmin(std::move(g), std::move(rows));
  }
  // base name in head position: application shorthand
  auto fn = base_by_name(head);
  if (!fn) throw ParseError("unknown head '" + head + "'");
  FunPtr g = fn_base(*fn);
  std::vector<FunPtr> hs;
  while (ts.peek() != ")") hs.push_back(parse_expr(ts));
  ts.take();
  if (hs.empty()) throw ParseError("application needs arguments");
  if (arity_of(g) != hs.size()) throw ParseError("application arity mismatch");
  std::size_t m = arity_of(hs.front());
  for (const FunPtr& h : hs)
    if (arity_of(h) != m) throw ParseError("arguments must share one arity");
  return fn_comp(std::move(g), std::move(hs));
}

void print_expr(std::ostringstream& out, const FunAst& f) {
  if (const auto* b = std::get_if<FunAst::Base>(&f.node)) {
    switch (b->fn) {
      case BaseFn::Id: out << "id"; return;
      case BaseFn::Proj: out << "(proj " << b->m << ' ' << b->n << ')'; return;
      case BaseFn::Or: out << "or"; return;
      case BaseFn::Less: out << "less"; return;
      case BaseFn::Eq: out << "eq"; return;
      case BaseFn::Not: out << "not"; return;
      case BaseFn::G1: out << "g1"; return;
      case BaseFn::G2: out << "g2"; return;
      case BaseFn::GBounded: out << "g"; return;
    }
    return;
  }
  if (const auto* c = std::get_if<FunAst::Comp>(&f.node)) {
    out << "(comp ";
    print_expr(out, *c->g);
    for (const FunPtr& h : c->hs) {
      out << ' ';
      print_expr(out, *h);
    }
    out << ')';
    return;
  }
  const auto& r = std::get<FunAst::RecMin>(f.node);
  out << "(recmin ";
  print_expr(out, *r.g);
  out << " (";
  for (std::size_t j = 0; j < r.rows.size(); ++j) {
    if (j) out << ' ';
    out << '(';
    for (std::size_t i = 0; i < r.rows[j].size(); ++i) {
      if (i) out << ' ';
      print_expr(out, *r.rows[j][i]);
    }
    out << ')';
  }
  out << "))";
}

}  // namespace

FunPtr parse_program(const std::string& text) {
  SexpTokens ts = tokenize(text);
  FunPtr f = parse_expr(ts);
  if (!ts.done()) throw ParseError("trailing text after program");
  return f;
}

std::string to_string(const FunAst& f) {
  std::ostringstream out;
  print_expr(out, f);
  return out.str();
}

std::string to_string(const FunPtr& f) {
  if (!f) throw ContractError("null program");
  return to_string(*f);
}

}  // namespace ordkernel
