#include "orbh/orbit_harmonics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace orbh {

std::vector<int> embed(const SetPartition& pi) {
  const int n = pi.n();
  std::vector<int> z(static_cast<std::size_t>(num_vars(n)), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi.same_block(i, j)) z[VarId(i, j).index(n)] = 1;
    }
  }
  return z;
}

namespace {

Locus from_partitions(int n, const std::vector<SetPartition>& family, std::string label) {
  if (family.empty()) throw std::invalid_argument("locus family is empty");
  std::vector<std::vector<int>> points;
  points.reserve(family.size());
  for (const auto& pi : family) points.push_back(embed(pi));
  return build_locus(n, std::move(points), std::move(label));
}

}  // namespace

Locus build_locus(const Partition& lambda) {
  return from_partitions(lambda.size(), set_partitions_with_shape(lambda),
                         "pi:" + lambda.to_string());
}

Locus build_locus_pinm(int n, int m) {
  return from_partitions(n, set_partitions_max_block(n, m),
                         "pinm:" + std::to_string(n) + "," + std::to_string(m));
}

Locus build_locus(int n, std::vector<std::vector<int>> points, std::string label) {
  if (points.empty()) throw std::invalid_argument("build_locus: empty point list");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != num_vars(n)) {
      throw std::invalid_argument("build_locus: point of wrong dimension");
    }
    for (int c : p) {
      if (c != 0 && c != 1) throw std::invalid_argument("build_locus: coordinates must be 0 or 1");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {n, std::move(points), std::move(label)};
}

Locus parse_locus(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("locus spec needs 'kind:'");
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (kind == "pi") {
    Partition lambda = Partition::parse(rest);
    if (lambda.empty()) throw std::invalid_argument("pi: needs a nonempty partition");
    return build_locus(lambda);
  }
  if (kind == "pinm") {
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("pinm: expects n,m");
    int n, m;
    try {
      std::size_t used = 0;
      n = std::stoi(std::string(rest.substr(0, comma)), &used);
      if (used != comma) throw std::invalid_argument("n");
      std::string ms(rest.substr(comma + 1));
      m = std::stoi(ms, &used);
      if (used != ms.size()) throw std::invalid_argument("m");
    } catch (const std::exception&) {
      throw std::invalid_argument("pinm: malformed n,m in " + std::string(spec));
    }
    if (n < 1 || m < 1 || m > n) throw std::invalid_argument("pinm: need 1 <= m <= n");
    return build_locus_pinm(n, m);
  }
  throw std::invalid_argument("unknown locus kind: " + std::string(kind));
}

ClassFunction permutation_character(const Locus& locus) {
  const int n = locus.n;
  const auto vars = all_vars(n);
  return permutation_character(n, [&](const Permutation& w) {
    Integer count = 0;
    std::vector<int> image(vars.size());
    for (const auto& p : locus.points) {
      for (const auto& v : vars) image[VarId(w(v.i()), w(v.j())).index(n)] = p[v.index(n)];
      if (image == p) ++count;
    }
    return count;
  });
}

GroebnerBasis ideal_of_points(const Locus& locus, const MonomialOrder& order) {
  return ideal_of_points(locus.n, locus.points, order);
}

std::size_t GradedModuleReport::total_dim() const {
  std::size_t total = 0;
  for (const auto& d : degrees) total += d.dim;
  return total;
}

std::vector<std::size_t> GradedModuleReport::hilbert_function() const {
  std::vector<std::size_t> h;
  for (const auto& d : degrees) h.push_back(d.dim);
  return h;
}

nlohmann::json GradedModuleReport::to_json() const {
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : degrees) {
    nlohmann::json traces = nlohmann::json::object();
    for (const auto& [mu, v] : d.traces.values) traces[mu.to_string()] = v.get_str();
    degs.push_back({{"d", d.d}, {"dim", d.dim}, {"traces", traces}, {"frobenius", d.frobenius.to_json()}});
  }
  return {{"locus", source},
          {"n", n},
          {"order", order.kind_name()},
          {"var_order", order.var_order_name()},
          {"complete", complete},
          {"degrees", degs},
          {"grfrob", grfrob.to_json()},
          {"grfrob_text", grfrob.to_string()}};
}

GradedModuleReport graded_character_of_gb(const GroebnerBasis& gr, std::string source,
                                          const PipelineOptions& options) {
  for (const auto& g : gr.generators()) {
    if (!g.is_homogeneous()) {
      throw std::invalid_argument("graded_character: Groebner basis is not homogeneous");
    }
  }
  const int n = gr.n();
  GradedModuleReport report;
  report.source = std::move(source);
  report.order = gr.order();
  report.n = n;

  StandardMonomialSet standard = standard_monomials(gr, options.max_degree);
  if (options.max_degree && static_cast<int>(standard.by_degree.size()) > *options.max_degree) {
    // Degree max_degree + 1 may still be nonzero.
    const auto& top = standard.by_degree.back();
    const auto vars = all_vars(n);
    for (const auto& m : top) {
      for (const auto& v : vars) {
        if (!gr.in_initial_ideal(m * Monomial::variable(v))) report.complete = false;
      }
      if (!report.complete) break;
    }
  }

  const auto classes = conjugacy_class_data(n);
  const std::size_t ndeg = standard.by_degree.size();
  // cell (class c, degree d) -> trace
  std::vector<Rational> cells(classes.size() * ndeg);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t cell = next++; cell < cells.size(); cell = next++) {
      const auto& w = classes[cell / ndeg].representative;
      const auto& level = standard.by_degree[cell % ndeg];
      Rational trace = 0;
      for (const auto& m : level) {
        Monomial image = m.relabel(w);
        if (image == m) {
          trace += 1;
          continue;
        }
        trace += gr.normal_form(image).coefficient(m);
      }
      cells[cell] = trace;
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (std::size_t d = 0; d < ndeg; ++d) {
    DegreeReport dr;
    dr.d = static_cast<int>(d);
    dr.dim = standard.by_degree[d].size();
    dr.standard = standard.by_degree[d];
    dr.traces.n = n;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      dr.traces.values[classes[c].cycle_type] = cells[c * ndeg + d];
    }
    dr.frobenius = characteristic_map(dr.traces);
    SymFunc shifted = dr.frobenius * QPoly::monomial(dr.d);
    report.grfrob += shifted;
    report.degrees.push_back(std::move(dr));
  }
  return report;
}

GradedModuleReport graded_character(const Locus& locus, const MonomialOrder& order,
                                    const PipelineOptions& options) {
  if (!order.is_graded()) throw std::invalid_argument("graded_character: order must be graded");
  GroebnerBasis ideal = ideal_of_points(locus, order);
  GroebnerBasis gr = associated_graded(ideal);
  GradedModuleReport report = graded_character_of_gb(gr, locus.label, options);
  if (report.complete && report.total_dim() != locus.size()) {
    throw std::logic_error("graded_character: quotient dimension " + std::to_string(report.total_dim()) +
                           " differs from locus size " + std::to_string(locus.size()));
  }
  return report;
}

GradedModuleReport graded_character_of_ideal(std::span<const Poly> gens, int n,
                                             const MonomialOrder& order,
                                             const PipelineOptions& options, std::string source) {
  if (!order.is_graded()) throw std::invalid_argument("graded_character_of_ideal: order must be graded");
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) {
      throw std::invalid_argument("graded_character_of_ideal: generators must be homogeneous");
    }
  }
  GroebnerBasis gb = buchberger(gens, order, options.buchberger, n);
  return graded_character_of_gb(gb, std::move(source), options);
}

Poly symmetrizer_image(const Poly& f, int j, const GroebnerBasis& g) {
  const int n = std::max(f.n(), g.n());
  if (j < 1 || j > n) throw std::invalid_argument("symmetrizer_image: need 1 <= j <= n");
  std::vector<Poly::Term> terms;
  for_each_permutation(j, [&](const Permutation& sigma) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) images[i - 1] = i <= j ? sigma(i) : i;
    Permutation w(std::move(images));
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m.relabel(w), c);
  });
  return g.normal_form(Poly::from_terms(n, std::move(terms)));
}

Poly symmetrizer_image(const Monomial& m, int j, const GroebnerBasis& g) {
  return symmetrizer_image(Poly::from_monomial(g.n(), m), j, g);
}

}  // namespace orbh
