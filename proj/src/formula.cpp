#include "ordkernel/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ordkernel {

std::string to_string(Sort s) { return s == Sort::Ord ? "Ord" : "SOrd"; }

namespace {

const std::set<std::string>& greek_names() {
  static const std::set<std::string> g = {
      "alpha", "beta",    "gamma", "delta", "epsilon", "zeta", "eta",     "theta",
      "iota",  "kappa",   "lambda", "mu",   "nu",      "xi",   "omicron", "pi",
      "rho",   "sigma",   "tau",   "upsilon", "phi",   "chi",  "psi",     "omega"};
  return g;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> r = {"ALL", "EX", "NOT", "AND", "OR", "IMP", "IFF", "in"};
  return r;
}

}  // namespace

std::optional<Sort> convention_sort(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name[0] == '_' || std::isupper(static_cast<unsigned char>(name[0]))) return std::nullopt;
  std::string stem = name;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (greek_names().count(stem)) return Sort::Ord;
  return Sort::SOrd;
}

Term Term::var(std::string n, std::optional<Sort> s) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(n);
  t.sort = s;
  return t;
}

Term Term::cst(std::string n) {
  Term t;
  t.kind = Kind::Const;
  t.name = std::move(n);
  return t;
}

Term Term::app(std::string f, std::vector<Term> as) {
  Term t;
  t.kind = Kind::App;
  t.name = std::move(f);
  t.args = std::move(as);
  return t;
}

Formula f_atom(std::string rel, std::vector<Term> args) {
  Formula f;
  f.kind = Formula::Kind::Atom;
  f.head = std::move(rel);
  f.args = std::move(args);
  return f;
}

namespace {
Formula binary(Formula::Kind k, Formula a, Formula b) {
  Formula f;
  f.kind = k;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}
}  // namespace

Formula f_not(Formula a) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.kids.push_back(std::move(a));
  return f;
}

Formula f_and(Formula a, Formula b) { return binary(Formula::Kind::And, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return binary(Formula::Kind::Or, std::move(a), std::move(b)); }
Formula f_imp(Formula a, Formula b) { return binary(Formula::Kind::Imp, std::move(a), std::move(b)); }
Formula f_iff(Formula a, Formula b) { return binary(Formula::Kind::Iff, std::move(a), std::move(b)); }

namespace {
Formula quant(Formula::Kind k, std::string var, std::optional<Sort> s, Formula body) {
  Formula f;
  f.kind = k;
  f.head = std::move(var);
  f.bind_sort = s;
  f.kids.push_back(std::move(body));
  return f;
}
}  // namespace

Formula f_ex(std::string var, std::optional<Sort> s, Formula body) {
  return quant(Formula::Kind::Exists, std::move(var), s, std::move(body));
}

Formula f_all(std::string var, std::optional<Sort> s, Formula body) {
  return quant(Formula::Kind::Forall, std::move(var), s, std::move(body));
}

Formula f_and_all(std::vector<Formula> fs) {
  if (fs.empty()) throw ContractError("conjunction of an empty list");
  Formula out = std::move(fs.back());
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = f_and(std::move(fs[i]), std::move(out));
  return out;
}

bool Signature::has_relation(const std::string& n) const { return relations.count(n) != 0; }
bool Signature::has_function(const std::string& n) const { return functions.count(n) != 0; }
bool Signature::has_constant(const std::string& n) const { return constants.count(n) != 0; }

const Signature& lso_signature() {
  static const Signature sig = [] {
    Signature s;
    s.relations["<"] = RelInfo{2, {Sort::Ord, Sort::Ord}};
    s.relations["in"] = RelInfo{2, {Sort::Ord, Sort::SOrd}};
    s.functions["G"] = FunInfo{2, {Sort::Ord, Sort::Ord}, Sort::Ord};
    return s;
  }();
  return sig;
}

const Signature& lin_signature() {
  static const Signature sig = [] {
    Signature s;
    s.relations["in"] = RelInfo{2, {}};
    return s;
  }();
  return sig;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
  enum class Kind { Name, Num, LParen, RParen, Comma, Dot, Colon, Less, Equal, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (c == '(') {
      t.kind = Token::Kind::LParen;
      ++i;
    } else if (c == ')') {
      t.kind = Token::Kind::RParen;
      ++i;
    } else if (c == ',') {
      t.kind = Token::Kind::Comma;
      ++i;
    } else if (c == '.') {
      t.kind = Token::Kind::Dot;
      ++i;
    } else if (c == ':') {
      t.kind = Token::Kind::Colon;
      ++i;
    } else if (c == '<') {
      t.kind = Token::Kind::Less;
      ++i;
    } else if (c == '=') {
      t.kind = Token::Kind::Equal;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Num;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) t.text += text[i++];
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Name;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        t.text += text[i++];
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                       std::to_string(i));
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.pos = n;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

  Formula parse() {
    Formula f = formula();
    expect(Token::Kind::End, "end of input");
    return f;
  }

 private:
  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t at_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(at_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(at_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw ParseError("expected " + what + " at position " + std::to_string(t.pos));
  }

  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail(what, peek());
    take();
  }

  bool at_word(const char* w) const {
    return peek().kind == Token::Kind::Name && peek().text == w;
  }

  Formula formula() { return iff(); }

  Formula iff() {
    Formula f = imp();
    while (at_word("IFF")) {
      take();
      f = f_iff(std::move(f), imp());
    }
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (at_word("IMP")) {
      take();
      return f_imp(std::move(f), imp());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (at_word("OR")) {
      take();
      f = f_or(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (at_word("AND")) {
      take();
      f = f_and(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (at_word("NOT")) {
      take();
      return f_not(unary());
    }
    if (at_word("ALL") || at_word("EX")) return quantified();
    return primary();
  }

  Formula quantified() {
    const bool is_all = peek().text == "ALL";
    take();
    if (peek().kind != Token::Kind::Name) fail("a variable after the quantifier", peek());
    const std::string var = take().text;
    if (reserved_words().count(var)) fail("a variable, not a reserved word", peek());
    std::optional<Sort> ann;
    if (peek().kind == Token::Kind::Colon) {
      take();
      ann = sort_name();
    }
    expect(Token::Kind::Dot, "'.' after the bound variable");
    Formula body = iff();
    return is_all ? f_all(var, ann, std::move(body)) : f_ex(var, ann, std::move(body));
  }

  Sort sort_name() {
    if (peek().kind != Token::Kind::Name) fail("a sort name", peek());
    const Token& t = take();
    if (t.text == "Ord") return Sort::Ord;
    if (t.text == "SOrd") return Sort::SOrd;
    throw ParseError("expected Ord or SOrd at position " + std::to_string(t.pos));
  }

  Formula primary() {
    if (peek().kind == Token::Kind::LParen) {
      take();
      Formula f = formula();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    return atom();
  }

  bool is_relation_name(const std::string& n) const {
    return n == "Ord" || n == "SOrd" || sig_.has_relation(n);
  }

  Formula atom() {
    if (peek().kind == Token::Kind::Name && peek(1).kind == Token::Kind::LParen &&
        is_relation_name(peek().text) && !sig_.has_function(peek().text)) {
      const std::string rel = take().text;
      return f_atom(rel, term_list());
    }
    Term lhs = term();
    if (peek().kind == Token::Kind::Less) {
      take();
      if (!sig_.has_relation("<")) fail("a signature declaring <", peek());
      return f_atom("<", {std::move(lhs), term()});
    }
    if (peek().kind == Token::Kind::Equal) {
      take();
      return f_atom("=", {std::move(lhs), term()});
    }
    if (at_word("in")) {
      take();
      if (!sig_.has_relation("in")) fail("a signature declaring in", peek());
      return f_atom("in", {std::move(lhs), term()});
    }
    fail("a relational atom", peek());
  }

  std::vector<Term> term_list() {
    expect(Token::Kind::LParen, "'('");
    std::vector<Term> ts;
    ts.push_back(term());
    while (peek().kind == Token::Kind::Comma) {
      take();
      ts.push_back(term());
    }
    expect(Token::Kind::RParen, "')'");
    return ts;
  }

  Term term() {
    if (peek().kind == Token::Kind::Num) return Term::cst(take().text);
    if (peek().kind != Token::Kind::Name) fail("a term", peek());
    const Token& t = peek();
    if (reserved_words().count(t.text)) fail("a term, not a reserved word", t);
    const std::string name = take().text;
    if (peek().kind == Token::Kind::LParen) {
      if (!sig_.has_function(name))
        throw ParseError("undeclared symbol '" + name + "' at position " +
                         std::to_string(t.pos));
      return Term::app(name, term_list());
    }
    if (sig_.has_constant(name)) return Term::cst(name);
    Term v = Term::var(name);
    if (peek().kind == Token::Kind::Colon) {
      take();
      v.sort = sort_name();
    }
    return v;
  }
};

// ---------------------------------------------------------------------------
// Sort resolution: binder annotations win inside their scope, explicit free
// occurrences must agree with each other, everything else follows convention.

std::optional<Sort> lookup_bound(
    const std::vector<std::pair<std::string, std::optional<Sort>>>& env, const std::string& name,
    bool& found) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == name) {
      found = true;
      return it->second;
    }
  }
  found = false;
  return std::nullopt;
}

void record_term(const Term& t,
                 std::vector<std::pair<std::string, std::optional<Sort>>>& env,
                 std::map<std::string, std::optional<Sort>>& free_ann) {
  if (t.kind == Term::Kind::App) {
    for (const Term& a : t.args) record_term(a, env, free_ann);
    return;
  }
  if (t.kind != Term::Kind::Var) return;
  bool bound = false;
  std::optional<Sort> bsort = lookup_bound(env, t.name, bound);
  if (bound) {
    if (t.sort && bsort && *t.sort != *bsort)
      throw SortError("variable " + t.name + " annotated " + to_string(*t.sort) +
                      " inside a " + to_string(*bsort) + " binder");
    if (t.sort && !bsort)
      throw SortError("variable " + t.name + " annotated inside an unsorted binder");
    return;
  }
  if (t.sort) {
    auto it = free_ann.find(t.name);
    if (it != free_ann.end()) {
      if (it->second != t.sort)
        throw SortError("conflicting sort annotations on free variable " + t.name);
    } else {
      free_ann[t.name] = t.sort;
    }
  }
}

void record_pass(const Formula& f,
                 std::vector<std::pair<std::string, std::optional<Sort>>>& env,
                 std::map<std::string, std::optional<Sort>>& free_ann) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      for (const Term& t : f.args) record_term(t, env, free_ann);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::optional<Sort> s = f.bind_sort ? f.bind_sort : convention_sort(f.head);
      env.emplace_back(f.head, s);
      record_pass(f.kids[0], env, free_ann);
      env.pop_back();
      return;
    }
    default:
      for (const Formula& k : f.kids) record_pass(k, env, free_ann);
      return;
  }
}

void assign_term(Term& t,
                 std::vector<std::pair<std::string, std::optional<Sort>>>& env,
                 const std::map<std::string, std::optional<Sort>>& free_ann) {
  if (t.kind == Term::Kind::App) {
    for (Term& a : t.args) assign_term(a, env, free_ann);
    return;
  }
  if (t.kind != Term::Kind::Var) return;
  bool bound = false;
  std::optional<Sort> bsort = lookup_bound(env, t.name, bound);
  if (bound) {
    t.sort = bsort;
    return;
  }
  auto it = free_ann.find(t.name);
  t.sort = it != free_ann.end() ? it->second : convention_sort(t.name);
}

void assign_pass(Formula& f,
                 std::vector<std::pair<std::string, std::optional<Sort>>>& env,
                 const std::map<std::string, std::optional<Sort>>& free_ann) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      for (Term& t : f.args) assign_term(t, env, free_ann);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      if (!f.bind_sort) f.bind_sort = convention_sort(f.head);
      env.emplace_back(f.head, f.bind_sort);
      assign_pass(f.kids[0], env, free_ann);
      env.pop_back();
      return;
    }
    default:
      for (Formula& k : f.kids) assign_pass(k, env, free_ann);
      return;
  }
}

// ---------------------------------------------------------------------------
// Sort and arity checking against a signature.

std::optional<Sort> term_sort(const Term& t, const Signature& sig);

void check_app(const Term& t, const Signature& sig) {
  auto it = sig.functions.find(t.name);
  if (it == sig.functions.end()) throw SortError("undeclared function symbol " + t.name);
  const FunInfo& info = it->second;
  if (t.args.size() != info.arity)
    throw SortError("function " + t.name + " expects " + std::to_string(info.arity) +
                    " arguments, got " + std::to_string(t.args.size()));
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    std::optional<Sort> got = term_sort(t.args[i], sig);
    std::optional<Sort> want =
        i < info.arg_sorts.size() ? info.arg_sorts[i] : std::optional<Sort>();
    if (got && want && *got != *want)
      throw SortError("argument " + std::to_string(i + 1) + " of " + t.name + " has sort " +
                      to_string(*got) + ", expected " + to_string(*want));
  }
}

std::optional<Sort> term_sort(const Term& t, const Signature& sig) {
  switch (t.kind) {
    case Term::Kind::Var:
      return t.sort;
    case Term::Kind::Const: {
      auto it = sig.constants.find(t.name);
      return it != sig.constants.end() ? it->second : std::optional<Sort>();
    }
    case Term::Kind::App:
      check_app(t, sig);
      return sig.functions.at(t.name).result_sort;
  }
  return std::nullopt;
}

void check_atom(const Formula& f, const Signature& sig) {
  unsigned arity = 0;
  std::vector<std::optional<Sort>> want;
  if (f.head == "=") {
    arity = 2;
  } else if (f.head == "Ord" || f.head == "SOrd") {
    arity = 1;
  } else {
    auto it = sig.relations.find(f.head);
    if (it == sig.relations.end()) throw SortError("undeclared relation symbol " + f.head);
    arity = it->second.arity;
    want = it->second.arg_sorts;
  }
  if (f.args.size() != arity)
    throw SortError("relation " + f.head + " expects " + std::to_string(arity) +
                    " arguments, got " + std::to_string(f.args.size()));
  for (std::size_t i = 0; i < f.args.size(); ++i) {
    std::optional<Sort> got = term_sort(f.args[i], sig);
    std::optional<Sort> w = i < want.size() ? want[i] : std::optional<Sort>();
    if (got && w && *got != *w)
      throw SortError("argument " + std::to_string(i + 1) + " of " + f.head + " has sort " +
                      to_string(*got) + ", expected " + to_string(*w));
  }
}

}  // namespace

void check_sorts(const Formula& f, const Signature& sig) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      check_atom(f, sig);
      return;
    default:
      for (const Formula& k : f.kids) check_sorts(k, sig);
      return;
  }
}

Formula parse_formula(const std::string& text, const Signature& sig) {
  Parser p(lex(text), sig);
  Formula f = p.parse();
  std::vector<std::pair<std::string, std::optional<Sort>>> env;
  std::map<std::string, std::optional<Sort>> free_ann;
  record_pass(f, env, free_ann);
  env.clear();
  assign_pass(f, env, free_ann);
  check_sorts(f, sig);
  return f;
}

// ---------------------------------------------------------------------------
// Printing. Binders and variables carry ":Sort" exactly when the sort differs
// from the name's convention, so reparsing reproduces the same AST.

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Const:
      return t.name;
    case Term::Kind::Var:
      if (t.sort != convention_sort(t.name)) {
        if (t.sort) return t.name + ":" + to_string(*t.sort);
      }
      return t.name;
    case Term::Kind::App: {
      std::string out = t.name + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ",";
        out += to_string(t.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

constexpr int kPrecIff = 1;
constexpr int kPrecImp = 2;
constexpr int kPrecOr = 3;
constexpr int kPrecAnd = 4;
constexpr int kPrecUnary = 5;

int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Iff:
      return kPrecIff;
    case Formula::Kind::Imp:
      return kPrecImp;
    case Formula::Kind::Or:
      return kPrecOr;
    case Formula::Kind::And:
      return kPrecAnd;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return kPrecUnary;
    case Formula::Kind::Atom:
      return kPrecUnary + 1;
  }
  return kPrecUnary + 1;
}

// trailing is true when more tokens of an enclosing formula follow this
// subformula. A binder's textual scope runs to the end of the input, so a
// quantifier with trailing material must be parenthesized regardless of
// precedence.
void print(const Formula& f, int min_prec, bool trailing, std::string& out) {
  const bool quant = f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall;
  const bool wrap = precedence(f) < min_prec || (quant && trailing);
  if (wrap) out += "(";
  const bool tr = !wrap && trailing;
  switch (f.kind) {
    case Formula::Kind::Atom:
      if (f.head == "<" || f.head == "=" || f.head == "in") {
        out += to_string(f.args[0]);
        out += f.head == "in" ? " in " : (" " + f.head + " ");
        out += to_string(f.args[1]);
      } else {
        out += f.head + "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ",";
          out += to_string(f.args[i]);
        }
        out += ")";
      }
      break;
    case Formula::Kind::Not:
      out += "NOT ";
      print(f.kids[0], kPrecUnary, tr, out);
      break;
    case Formula::Kind::And:
      print(f.kids[0], kPrecAnd, true, out);
      out += " AND ";
      print(f.kids[1], kPrecAnd + 1, tr, out);
      break;
    case Formula::Kind::Or:
      print(f.kids[0], kPrecOr, true, out);
      out += " OR ";
      print(f.kids[1], kPrecOr + 1, tr, out);
      break;
    case Formula::Kind::Imp:
      print(f.kids[0], kPrecImp + 1, true, out);
      out += " IMP ";
      print(f.kids[1], kPrecImp, tr, out);
      break;
    case Formula::Kind::Iff:
      print(f.kids[0], kPrecIff, true, out);
      out += " IFF ";
      print(f.kids[1], kPrecIff + 1, tr, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind == Formula::Kind::Exists ? "EX " : "ALL ";
      out += f.head;
      if (f.bind_sort != convention_sort(f.head) && f.bind_sort)
        out += ":" + to_string(*f.bind_sort);
      out += " . ";
      print(f.kids[0], kPrecIff, false, out);
      break;
  }
  if (wrap) out += ")";
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, kPrecIff, false, out);
  return out;
}

// ---------------------------------------------------------------------------
// Variable sets and substitution.

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const Term& a : t.args) term_vars(a, out);
}

void free_vars_rec(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      std::set<std::string> vs;
      for (const Term& t : f.args) term_vars(t, vs);
      for (const std::string& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool fresh = bound.insert(f.head).second;
      free_vars_rec(f.kids[0], bound, out);
      if (fresh) bound.erase(f.head);
      return;
    }
    default:
      for (const Formula& k : f.kids) free_vars_rec(k, bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

std::set<std::string> all_var_names(const Formula& f) {
  std::set<std::string> out;
  switch (f.kind) {
    case Formula::Kind::Atom:
      for (const Term& t : f.args) term_vars(t, out);
      return out;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(f.head);
      break;
    default:
      break;
  }
  for (const Formula& k : f.kids) {
    std::set<std::string> sub = all_var_names(k);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

namespace {

Term subst_term(const Term& t, const std::map<std::string, Term>& m) {
  if (t.kind == Term::Kind::Var) {
    auto it = m.find(t.name);
    if (it != m.end()) return it->second;
    return t;
  }
  if (t.kind == Term::Kind::App) {
    Term out = t;
    for (Term& a : out.args) a = subst_term(a, m);
    return out;
  }
  return t;
}

std::string rename_target(const std::string& base, const std::set<std::string>& taken) {
  for (unsigned k = 2;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace

Formula subst_vars(const Formula& f, const std::map<std::string, Term>& m) {
  if (m.empty()) return f;
  switch (f.kind) {
    case Formula::Kind::Atom: {
      Formula out = f;
      for (Term& t : out.args) t = subst_term(t, m);
      return out;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::map<std::string, Term> inner = m;
      inner.erase(f.head);
      if (inner.empty()) return f;
      std::set<std::string> incoming;
      for (const auto& [from, to] : inner) {
        (void)from;
        term_vars(to, incoming);
      }
      Formula out = f;
      if (incoming.count(f.head)) {
        std::set<std::string> taken = incoming;
        std::set<std::string> body_vars = all_var_names(f.kids[0]);
        taken.insert(body_vars.begin(), body_vars.end());
        for (const auto& [from, to] : inner) {
          (void)to;
          taken.insert(from);
        }
        const std::string fresh = rename_target(f.head, taken);
        std::map<std::string, Term> ren;
        ren[f.head] = Term::var(fresh, f.bind_sort);
        out.head = fresh;
        out.kids[0] = subst_vars(f.kids[0], ren);
      }
      out.kids[0] = subst_vars(out.kids[0], inner);
      return out;
    }
    default: {
      Formula out = f;
      for (Formula& k : out.kids) k = subst_vars(k, m);
      return out;
    }
  }
}

}  // namespace ordkernel
