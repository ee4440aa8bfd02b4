#include "orbh/loci.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbh {

namespace {

Poly var(int n, int i, int j) { return Poly::variable(n, i, j); }

Poly mono(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return Poly::from_monomial(n, graph_monomial(e));
}

bool meet(VarId s, VarId t) {
  return s.i() == t.i() || s.i() == t.j() || s.j() == t.i() || s.j() == t.j();
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  if (k > n) return;
  while (true) {
    visit(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

std::vector<Poly> gens_I(int n) {
  if (n < 1) throw std::invalid_argument("gens_I: n must be positive");
  std::vector<Poly> out;
  const auto vars = all_vars(n);
  for (std::size_t s = 0; s < vars.size(); ++s) {
    for (std::size_t t = s; t < vars.size(); ++t) {
      if (!meet(vars[s], vars[t])) continue;
      out.push_back(var(n, vars[s].i(), vars[s].j()) * var(n, vars[t].i(), vars[t].j()));
    }
  }
  for (int i = 1; i <= n; ++i) {
    Poly sum(n);
    for (int j = 1; j <= n; ++j) {
      if (j != i) sum += var(n, i, j);
    }
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<Poly> exchange_differences(int n) {
  std::vector<Poly> out;
  for_each_subset(n, 4, [&](const std::vector<int>& s) {
    const int a = s[0], b = s[1], c = s[2], d = s[3];
    Poly p1 = mono(n, {{a, b}, {c, d}});
    Poly p2 = mono(n, {{a, c}, {b, d}});
    Poly p3 = mono(n, {{a, d}, {b, c}});
    out.push_back(p1 - p2);
    out.push_back(p1 - p3);
    out.push_back(p2 - p3);
  });
  return out;
}

std::vector<Poly> gens_J(int n) {
  std::vector<Poly> out = gens_I(n);
  for (auto& p : exchange_differences(n)) out.push_back(std::move(p));
  return out;
}

std::vector<Poly> gens_gr_pi_2a(int a) {
  if (a < 1) throw std::invalid_argument("gens_gr_pi_2a: a must be positive");
  return gens_I(2 * a);
}

std::vector<Poly> gens_gr_pi_a2(int a) {
  if (a < 1) throw std::invalid_argument("gens_gr_pi_a2: a must be positive");
  return gens_J(2 * a);
}

std::vector<Poly> gens_I_nm(int n, int m, std::size_t tree_cap) {
  if (m < 1 || m > n) throw std::invalid_argument("gens_I_nm: need 1 <= m <= n");
  std::vector<Poly> out;
  for (const auto& v : all_vars(n)) {
    Poly x = var(n, v.i(), v.j());
    out.push_back(x * x);
  }
  for_each_subset(n, 3, [&](const std::vector<int>& s) {
    const int a = s[0], b = s[1], c = s[2];
    Poly p1 = mono(n, {{a, b}, {a, c}});
    Poly p2 = mono(n, {{a, b}, {b, c}});
    Poly p3 = mono(n, {{a, c}, {b, c}});
    out.push_back(p1 - p2);
    out.push_back(p1 - p3);
    out.push_back(p2 - p3);
  });
  if (m < n) {
    // C(n, m+1) subsets times (m+1)^(m-1) trees each.
    Integer count = binomial(n, m + 1);
    Integer per;
    mpz_ui_pow_ui(per.get_mpz_t(), static_cast<unsigned long>(m + 1),
                  static_cast<unsigned long>(m - 1));
    count *= per;
    if (count > Integer(static_cast<unsigned long>(tree_cap))) {
      throw BudgetExceeded("gens_I_nm: " + count.get_str() + " tree monomials exceed cap");
    }
    for_each_subset(n, m + 1, [&](const std::vector<int>& s) {
      for (const auto& tree : labeled_trees(s)) {
        out.push_back(Poly::from_monomial(n, graph_monomial(tree)));
      }
    });
  }
  return out;
}

Monomial matching_monomial(const Matching& tau) { return graph_monomial(tau.pairs()); }

Monomial standard_matching_monomial(std::span<const int> subset) {
  if (subset.size() % 2 != 0) {
    throw std::invalid_argument("standard_matching_monomial: subset of odd size");
  }
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("standard_matching_monomial: repeated element");
  }
  std::vector<VarId> vars;
  for (std::size_t k = 0; k < s.size(); k += 2) vars.emplace_back(s[k], s[k + 1]);
  return Monomial::product(vars);
}

Monomial graph_monomial(std::span<const Edge> edges) {
  std::vector<VarId> vars;
  vars.reserve(edges.size());
  for (const auto& [i, j] : edges) vars.emplace_back(i, j);
  return Monomial::product(vars);
}

Monomial graph_monomial(const Forest& f) { return graph_monomial(f.edges()); }

std::vector<Edge> spanning_trees_min(std::span<const int> block, const MonomialOrder& order) {
  return spanning_tree_min(block, [&](const std::vector<Edge>& a, const std::vector<Edge>& b) {
    return order.less(graph_monomial(a), graph_monomial(b));
  });
}

ForestChooser star_chooser() {
  return [](const SetPartition& pi) {
    std::vector<Edge> edges;
    for (const auto& block : pi.blocks()) {
      for (std::size_t k = 1; k < block.size(); ++k) edges.push_back(make_edge(block[0], block[k]));
    }
    return Forest(pi.n(), std::move(edges));
  };
}

ForestChooser path_chooser() {
  return [](const SetPartition& pi) {
    std::vector<Edge> edges;
    for (const auto& block : pi.blocks()) {
      for (std::size_t k = 1; k < block.size(); ++k) edges.push_back(make_edge(block[k - 1], block[k]));
    }
    return Forest(pi.n(), std::move(edges));
  };
}

ForestChooser min_tree_chooser(const MonomialOrder& order) {
  return [order](const SetPartition& pi) {
    std::vector<Edge> edges;
    for (const auto& block : pi.blocks()) {
      auto tree = spanning_trees_min(block, order);
      edges.insert(edges.end(), tree.begin(), tree.end());
    }
    return Forest(pi.n(), std::move(edges));
  };
}

std::vector<std::pair<SetPartition, Monomial>> forest_basis(int n, int m,
                                                            const ForestChooser& chooser) {
  std::vector<std::pair<SetPartition, Monomial>> out;
  for (const auto& pi : set_partitions_max_block(n, m)) {
    Forest f = chooser(pi);
    if (f.n() != n || !(f.components() == pi)) {
      throw std::invalid_argument("forest_basis: chooser returned a forest with components " +
                                  f.components().to_string() + " for " + pi.to_string());
    }
    out.emplace_back(pi, graph_monomial(f));
  }
  return out;
}

std::string IdealPreset::to_string() const {
  std::string out = name + ":";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    first = false;
    out += k + "=" + std::to_string(v);
  }
  return out;
}

IdealPreset parse_preset(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("preset must look like name:key=value,...: " + std::string(spec));
  }
  IdealPreset p;
  p.name = std::string(spec.substr(0, colon));
  std::string rest(spec.substr(colon + 1));
  std::istringstream in(rest);
  std::string field;
  while (std::getline(in, field, ',')) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("preset field without '=': " + field);
    std::string key = field.substr(0, eq);
    int value;
    try {
      std::size_t used = 0;
      value = std::stoi(field.substr(eq + 1), &used);
      if (used != field.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("preset value is not an integer: " + field);
    }
    if (!p.params.emplace(key, value).second) throw std::invalid_argument("repeated preset key " + key);
  }
  auto need = [&](const std::vector<std::string>& keys) {
    if (p.params.size() != keys.size()) {
      throw std::invalid_argument("preset " + p.name + " takes exactly the keys given in its grammar");
    }
    for (const auto& k : keys) {
      if (!p.params.count(k)) throw std::invalid_argument("preset " + p.name + " needs " + k);
    }
  };
  if (p.name == "gr2a") {
    need({"a"});
    p.n = 2 * p.params["a"];
    p.generators = gens_gr_pi_2a(p.params["a"]);
  } else if (p.name == "gra2") {
    need({"a"});
    p.n = 2 * p.params["a"];
    p.generators = gens_gr_pi_a2(p.params["a"]);
  } else if (p.name == "I") {
    need({"n"});
    p.n = p.params["n"];
    p.generators = gens_I(p.n);
  } else if (p.name == "J") {
    need({"n"});
    p.n = p.params["n"];
    p.generators = gens_J(p.n);
  } else if (p.name == "Inm") {
    need({"n", "m"});
    p.n = p.params["n"];
    p.generators = gens_I_nm(p.n, p.params["m"]);
  } else {
    throw std::invalid_argument("unknown preset: " + p.name);
  }
  return p;
}

}  // namespace orbh
