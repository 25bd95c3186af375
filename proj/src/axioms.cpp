#include "ordkernel/axioms.hpp"

#include <algorithm>
#include <sstream>

#include "ordkernel/truncation.hpp"

namespace ordkernel {

std::vector<AxiomId> all_axioms() {
  return {AxiomId::SOR, AxiomId::WO,  AxiomId::INF, AxiomId::EXT, AxiomId::INI, AxiomId::BOU,
          AxiomId::GPF, AxiomId::SUR, AxiomId::SEP, AxiomId::REP, AxiomId::POW};
}

std::string to_string(AxiomId id) {
  switch (id) {
    case AxiomId::SOR: return "SOR";
    case AxiomId::WO: return "WO";
    case AxiomId::INF: return "INF";
    case AxiomId::EXT: return "EXT";
    case AxiomId::INI: return "INI";
    case AxiomId::BOU: return "BOU";
    case AxiomId::GPF: return "GPF";
    case AxiomId::SUR: return "SUR";
    case AxiomId::SEP: return "SEP";
    case AxiomId::REP: return "REP";
    case AxiomId::POW: return "POW";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom_id(const std::string& name) {
  for (AxiomId id : all_axioms())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool axiom_is_schema(AxiomId id) { return id == AxiomId::SEP || id == AxiomId::REP; }

namespace {

struct AxiomShape {
  std::vector<std::string> outer;  // outermost universal variables
  std::string inner;               // formula with the outer variables free
};

// (delta,epsilon) precedes (beta,gamma) in the max-lexicographic order,
// written out through eta = max(delta,epsilon) and theta = max(beta,gamma).
const char* kMaxLexText =
    "(EX eta . EX theta . ("
    "((epsilon < delta AND eta = delta) OR ((delta < epsilon OR delta = epsilon) AND eta = epsilon))"
    " AND ((gamma < beta AND theta = beta) OR ((beta < gamma OR beta = gamma) AND theta = gamma))"
    " AND (eta < theta OR (eta = theta AND delta < beta) OR"
    " (eta = theta AND delta = beta AND epsilon < gamma))))";

AxiomShape axiom_shape(AxiomId id) {
  switch (id) {
    case AxiomId::SOR:
      return {{"X", "Y"},
              "(Ord(X) IFF NOT SOrd(X)) AND (X < Y IMP Ord(X) AND Ord(Y))"
              " AND (X in Y IMP Ord(X) AND SOrd(Y)) AND Ord(G(X,Y))"};
    case AxiomId::WO:
      return {{"alpha", "beta", "gamma"},
              "(NOT alpha < alpha) AND ((alpha < beta AND beta < gamma) IMP alpha < gamma)"
              " AND (alpha < beta OR alpha = beta OR beta < alpha)"
              " AND (ALL a . ((EX delta . delta in a) IMP"
              " (EX delta . (delta in a AND (ALL eta . (eta < delta IMP NOT eta in a))))))"};
    case AxiomId::INF:
      return {{},
              "EX alpha . ((EX beta . beta < alpha) AND"
              " (ALL beta . (beta < alpha IMP (EX gamma . (beta < gamma AND gamma < alpha)))))"};
    case AxiomId::EXT:
      return {{"a", "b"}, "(ALL alpha . (alpha in a IFF alpha in b)) IMP a = b"};
    case AxiomId::INI:
      return {{"alpha"}, "EX a . ALL beta . (beta < alpha IFF beta in a)"};
    case AxiomId::BOU:
      return {{"a"}, "EX alpha . ALL beta . (beta in a IMP beta < alpha)"};
    case AxiomId::GPF:
      return {{"alpha", "beta", "gamma"},
              std::string("(G(beta,gamma) < alpha OR G(beta,gamma) = alpha) IFF"
                          " (ALL delta . ALL epsilon . (") +
                  kMaxLexText + " IMP G(delta,epsilon) < alpha))"};
    case AxiomId::SUR:
      return {{"alpha"}, "EX beta . EX gamma . alpha = G(beta,gamma)"};
    case AxiomId::POW:
      return {{"a"},
              "EX b . ALL z . (((EX alpha . alpha in z) AND"
              " (ALL alpha . (alpha in z IMP alpha in a))) IMP"
              " (EX xi . ((ALL beta . (beta in z IFF G(beta,xi) in b)) AND"
              " (ALL zeta . ((ALL beta . (beta in z IFF G(beta,zeta) in b)) IMP zeta = xi)))))"};
    case AxiomId::SEP:
    case AxiomId::REP:
      throw ContractError("schema " + to_string(id) + " needs an instance formula");
  }
  throw ContractError("unknown axiom");
}

Formula close_universally(const std::vector<std::string>& vars, Formula body) {
  for (std::size_t i = vars.size(); i-- > 0;)
    body = f_all(vars[i], convention_sort(vars[i]), std::move(body));
  return body;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (unsigned k = 2;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace

Formula axiom_formula(AxiomId id) {
  AxiomShape shape = axiom_shape(id);
  return close_universally(shape.outer, parse_formula(shape.inner));
}

Formula separation_instance(const Formula& phi) {
  const std::set<std::string> frees = free_vars(phi);
  std::set<std::string> avoid = all_var_names(phi);
  const std::string a = fresh_name("a", avoid);
  avoid.insert(a);
  const std::string b = fresh_name("b", avoid);
  const Term alpha = Term::var("alpha", Sort::Ord);
  Formula inner = f_iff(f_atom("in", {alpha, Term::var(b, Sort::SOrd)}),
                        f_and(f_atom("in", {alpha, Term::var(a, Sort::SOrd)}), phi));
  Formula closed = f_all(a, Sort::SOrd,
                         f_ex(b, Sort::SOrd, f_all("alpha", Sort::Ord, std::move(inner))));
  std::vector<std::string> params;
  for (const std::string& v : frees)
    if (v != "alpha") params.push_back(v);
  return close_universally(params, std::move(closed));
}

Formula replacement_instance(const Formula& phi) {
  const std::set<std::string> frees = free_vars(phi);
  std::set<std::string> avoid = all_var_names(phi);
  const std::string a = fresh_name("a", avoid);
  avoid.insert(a);
  const std::string b = fresh_name("b", avoid);
  avoid.insert(b);
  const std::string zeta1 = fresh_name("zeta1", avoid);
  avoid.insert(zeta1);
  const std::string zeta2 = fresh_name("zeta2", avoid);

  Formula phi1 = subst_vars(phi, {{"zeta", Term::var(zeta1, Sort::Ord)}});
  Formula phi2 = subst_vars(phi, {{"zeta", Term::var(zeta2, Sort::Ord)}});
  Formula functional = f_all(
      "xi", Sort::Ord,
      f_all(zeta1, Sort::Ord,
            f_all(zeta2, Sort::Ord,
                  f_imp(f_and(std::move(phi1), std::move(phi2)),
                        f_atom("=", {Term::var(zeta1, Sort::Ord), Term::var(zeta2, Sort::Ord)})))));

  Formula image = f_all(
      a, Sort::SOrd,
      f_ex(b, Sort::SOrd,
           f_all("zeta", Sort::Ord,
                 f_iff(f_atom("in", {Term::var("zeta", Sort::Ord), Term::var(b, Sort::SOrd)}),
                       f_ex("xi", Sort::Ord,
                            f_and(f_atom("in", {Term::var("xi", Sort::Ord),
                                                Term::var(a, Sort::SOrd)}),
                                  phi))))));

  Formula closed = f_imp(std::move(functional), std::move(image));
  std::vector<std::string> params;
  for (const std::string& v : frees)
    if (v != "xi" && v != "zeta") params.push_back(v);
  return close_universally(params, std::move(closed));
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  os << "(" << to_string(id) << ") " << verdict << "  checked=" << checked
     << " holding=" << holding << " failing=" << failing << " boundary=" << boundary;
  if (!note.empty()) os << "\n  note: " << note;
  for (const std::string& s : failing_samples) os << "\n  failing at " << s;
  return os.str();
}

namespace {

// Carrier indices an outer universal variable ranges over, honoring the
// sort tag and the numeric bound.
std::vector<std::size_t> outer_range(const FiniteStructure& m, const std::optional<Sort>& sort,
                                     std::size_t bound, const std::optional<TruncationView>& view) {
  std::vector<std::size_t> out;
  const SortRange base = default_range(m);
  for (std::size_t i : base(sort)) {
    if (bound != kNoBound) {
      if (!view) throw ContractError("a numeric bound needs a truncation-shaped structure");
      auto ov = view->ord_value.find(i);
      if (ov != view->ord_value.end()) {
        if (ov->second >= bound) continue;
      } else {
        auto sv = view->set_elems.find(i);
        if (sv != view->set_elems.end()) {
          bool inside = true;
          for (unsigned e : sv->second)
            if (e >= bound) {
              inside = false;
              break;
            }
          if (!inside) continue;
        }
      }
    }
    out.push_back(i);
  }
  return out;
}

void tally(AxiomReport& rep, Tri v, const std::string& sample) {
  ++rep.checked;
  switch (v) {
    case Tri::True:
      ++rep.holding;
      break;
    case Tri::Unknown:
      ++rep.boundary;
      break;
    case Tri::False:
      ++rep.failing;
      if (rep.failing_samples.size() < 5) rep.failing_samples.push_back(sample);
      break;
  }
}

void finish(AxiomReport& rep) {
  if (rep.failing > 0)
    rep.verdict = "fails";
  else if (rep.holding > 0)
    rep.verdict = "holds-on-bounded-instances";
  else
    rep.verdict = "inapplicable";
  if (rep.boundary > 0)
    rep.note = std::to_string(rep.boundary) +
               " instance(s) reach values outside the carrier and count as boundary";
}

}  // namespace

AxiomReport check_axiom(AxiomId id, const FiniteStructure& m, std::size_t bound,
                        const std::vector<Formula>& schema_instances) {
  AxiomReport rep;
  rep.id = id;

  if (axiom_is_schema(id)) {
    if (schema_instances.empty()) {
      rep.verdict = "inapplicable";
      rep.note = "no schema instances supplied";
      return rep;
    }
    for (std::size_t i = 0; i < schema_instances.size(); ++i) {
      Formula closed = id == AxiomId::SEP ? separation_instance(schema_instances[i])
                                          : replacement_instance(schema_instances[i]);
      tally(rep, eval_tri(closed, m), "instance " + std::to_string(i));
    }
    finish(rep);
    return rep;
  }

  const AxiomShape shape = axiom_shape(id);
  const Formula inner = parse_formula(shape.inner);

  std::optional<TruncationView> view;
  if (bound != kNoBound) {
    try {
      view = truncation_view(m);
    } catch (const ContractError&) {
      view.reset();
    }
  }

  std::vector<std::vector<std::size_t>> ranges;
  for (const std::string& v : shape.outer)
    ranges.push_back(outer_range(m, convention_sort(v), bound, view));

  std::vector<std::size_t> pick(shape.outer.size(), 0);
  Assignment asg;
  const auto run_instance = [&]() {
    asg.clear();
    std::string sample = "(";
    for (std::size_t i = 0; i < shape.outer.size(); ++i) {
      const std::size_t e = ranges[i][pick[i]];
      asg[shape.outer[i]] = e;
      if (i) sample += ",";
      sample += shape.outer[i] + "=" + m.labels[e];
    }
    sample += ")";
    tally(rep, eval_tri(inner, m, asg), sample);
  };

  if (shape.outer.empty()) {
    tally(rep, eval_tri(inner, m), "()");
  } else {
    bool any_empty = false;
    for (const auto& r : ranges) any_empty = any_empty || r.empty();
    if (!any_empty) {
      for (;;) {
        run_instance();
        std::size_t i = 0;
        while (i < pick.size()) {
          if (++pick[i] < ranges[i].size()) break;
          pick[i] = 0;
          ++i;
        }
        if (i == pick.size()) break;
      }
    }
  }
  finish(rep);
  return rep;
}

}  // namespace ordkernel
