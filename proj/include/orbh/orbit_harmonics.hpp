#pragma once

// Locus -> I(Z) -> gr I(Z) -> R(Z) as a graded S_n-module, and its graded
// Frobenius image.

#include "orbh/groebner.hpp"
#include "orbh/sn_char.hpp"
#include "orbh/symfunc.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbh {

/// A finite set of 0/1 points in C^{C(n,2)}, coordinates indexed by
/// VarId::index(n).
struct Locus {
  int n = 0;
  std::vector<std::vector<int>> points;
  std::string label;

  std::size_t size() const { return points.size(); }
};

/// z_{i,j} = 1 iff i and j share a block.
std::vector<int> embed(const SetPartition& pi);

/// Pi_lambda, all set partitions with block sizes lambda.
Locus build_locus(const Partition& lambda);
/// Pi_{n,m}, all set partitions of [n] with blocks of size at most m.
Locus build_locus_pinm(int n, int m);
/// Explicit points; deduplicated and sorted. Rejects an empty list and
/// non-0/1 coordinates.
Locus build_locus(int n, std::vector<std::vector<int>> points, std::string label = "explicit");
/// "pi:2^3" or "pinm:5,3".
Locus parse_locus(std::string_view spec);

/// Number of points fixed by each conjugacy class representative.
ClassFunction permutation_character(const Locus& locus);

GroebnerBasis ideal_of_points(const Locus& locus, const MonomialOrder& order);

struct DegreeReport {
  int d = 0;
  std::size_t dim = 0;
  std::vector<Monomial> standard;  // ascending in the basis order
  ClassFunction traces;
  SymFunc frobenius{Basis::s};
};

struct GradedModuleReport {
  std::string source;
  MonomialOrder order;
  int n = 0;
  std::vector<DegreeReport> degrees;
  SymFunc grfrob{Basis::s};
  /// False when a degree cap cut the quotient short; the listed degrees are
  /// then exact but the total is not.
  bool complete = true;

  std::size_t total_dim() const;
  std::vector<std::size_t> hilbert_function() const;
  /// {locus, order, var_order, complete, degrees: [{d, dim, traces, frobenius}], grfrob}
  nlohmann::json to_json() const;
};

struct PipelineOptions {
  std::optional<int> max_degree;
  BuchbergerOptions buchberger;
  /// Worker threads for trace extraction; 0 picks the hardware count.
  unsigned threads = 0;
};

/// Characters of a quotient by a homogeneous Groebner basis.
GradedModuleReport graded_character_of_gb(const GroebnerBasis& gr, std::string source,
                                          const PipelineOptions& options = {});

/// Full pipeline for an S_n-stable locus. The order must be graded.
GradedModuleReport graded_character(const Locus& locus,
                                    const MonomialOrder& order = MonomialOrder::grevlex(),
                                    const PipelineOptions& options = {});

/// Same, starting from homogeneous generators of an ideal in C[x_{[n] choose 2}].
GradedModuleReport graded_character_of_ideal(std::span<const Poly> gens, int n,
                                             const MonomialOrder& order = MonomialOrder::grevlex(),
                                             const PipelineOptions& options = {},
                                             std::string source = "ideal");

/// NF(sum_{w in S_j} w.f, G), S_j permuting 1..j and fixing the rest.
Poly symmetrizer_image(const Poly& f, int j, const GroebnerBasis& g);
Poly symmetrizer_image(const Monomial& m, int j, const GroebnerBasis& g);

}  // namespace orbh
