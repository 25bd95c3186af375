#include "ordkernel/truncation.hpp"

#include <algorithm>
#include <string>

namespace ordkernel {

namespace {

std::string subset_label(unsigned mask) {
  std::string out = "{";
  bool first = true;
  for (unsigned b = 0; mask >> b; ++b) {
    if (!(mask >> b & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(b);
    first = false;
  }
  return out + "}";
}

}  // namespace

FiniteStructure so_structure_of(unsigned k, const Limits& limits) {
  if (k > limits.truncation_limit)
    throw ResourceLimitError("truncation rank " + std::to_string(k) + " exceeds the limit " +
                             std::to_string(limits.truncation_limit));
  FiniteStructure m;
  for (unsigned i = 0; i <= k; ++i) {
    m.labels.push_back(std::to_string(i));
    m.sorts["Ord"].insert(i);
    m.constants[std::to_string(i)] = i;
  }
  const unsigned subsets = 1u << k;
  for (unsigned mask = 0; mask < subsets; ++mask) {
    m.sorts["SOrd"].insert(m.labels.size());
    m.labels.push_back(subset_label(mask));
  }
  auto subset_index = [k](unsigned mask) { return static_cast<std::size_t>(k) + 1 + mask; };

  m.relations["<"];
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = i + 1; j <= k; ++j) m.relations["<"].insert({i, j});

  m.relations["in"];
  for (unsigned b = 0; b < k; ++b)
    for (unsigned mask = 0; mask < subsets; ++mask)
      if (mask >> b & 1u) m.relations["in"].insert({b, subset_index(mask)});

  auto& g = m.functions["G"];
  const std::size_t n = m.labels.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x <= k && y <= k) {
        const Ordinal v = godel_pair(Ordinal(x), Ordinal(y));
        if (v <= k) g[{x, y}] = static_cast<std::size_t>(v);
      } else {
        g[{x, y}] = 0;
      }
    }
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Reflection

TruncationView truncation_view(const FiniteStructure& m) {
  auto oit = m.sorts.find("Ord");
  auto sit = m.sorts.find("SOrd");
  if (oit == m.sorts.end() || sit == m.sorts.end())
    throw ContractError("expected a truncation with Ord and SOrd sorts");
  TruncationView shape;
  for (std::size_t i : oit->second) {
    const std::string& l = m.labels[i];
    if (l.empty() || l.find_first_not_of("0123456789") != std::string::npos)
      throw ContractError("ordinal element with non-numeric label '" + l + "'");
    const unsigned v = static_cast<unsigned>(std::stoul(l));
    shape.ord_value[i] = v;
    shape.max_ord = std::max(shape.max_ord, v);
  }
  for (std::size_t i : sit->second) {
    const std::string& l = m.labels[i];
    if (l.size() < 2 || l.front() != '{' || l.back() != '}')
      throw ContractError("set element with non-set label '" + l + "'");
    std::set<unsigned> elems;
    std::string body = l.substr(1, l.size() - 2);
    std::size_t at = 0;
    while (at < body.size()) {
      std::size_t comma = body.find(',', at);
      if (comma == std::string::npos) comma = body.size();
      const std::string piece = body.substr(at, comma - at);
      if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        throw ContractError("set element with non-set label '" + l + "'");
      elems.insert(static_cast<unsigned>(std::stoul(piece)));
      at = comma + 1;
    }
    shape.set_elems[i] = std::move(elems);
  }
  return shape;
}

std::optional<Ordinal> reflect_search(const Formula& phi, const FiniteStructure& m,
                                      const std::vector<Assignment>& params) {
  const TruncationView shape = truncation_view(m);
  const std::vector<Assignment> asgs = params.empty() ? std::vector<Assignment>{{}} : params;

  for (unsigned alpha = 0; alpha <= shape.max_ord; ++alpha) {
    SortRange restricted = [&m, &shape, alpha](const std::optional<Sort>& s) {
      std::vector<std::size_t> out;
      const bool want_ord = !s || *s == Sort::Ord;
      const bool want_set = !s || *s == Sort::SOrd;
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto ov = shape.ord_value.find(i);
        if (ov != shape.ord_value.end()) {
          if (want_ord && ov->second < alpha) out.push_back(i);
          continue;
        }
        auto sv = shape.set_elems.find(i);
        if (sv != shape.set_elems.end() && want_set) {
          bool inside = true;
          for (unsigned e : sv->second)
            if (e >= alpha) {
              inside = false;
              break;
            }
          if (inside) out.push_back(i);
        }
      }
      return out;
    };
    bool all_match = true;
    for (const Assignment& asg : asgs) {
      if (eval_formula_ranged(phi, m, asg, restricted) != eval_formula(phi, m, asg)) {
        all_match = false;
        break;
      }
    }
    if (all_match) return Ordinal(alpha);
  }
  return std::nullopt;
}

}  // namespace ordkernel
