#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlpa/rep_graph.hpp"
#include "wlpa/scalar.hpp"

namespace wlpa {

// Monomial of the weighted Leavitt path algebra: a composable word over the
// double hat alphabet anchored at a source vertex of E. An empty word is the
// vertex idempotent. No rewriting modulo relations is ever performed.
struct Monomial {
  int source = 0;
  std::vector<Letter> letters;

  bool operator==(const Monomial& o) const { return source == o.source && letters == o.letters; }
  bool operator<(const Monomial& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    if (source != o.source) return source < o.source;
    return letters < o.letters;
  }
};

// Formal K-linear combination of monomials; zero coefficients and
// non-composable monomials are never stored.
struct AlgebraElement {
  Field field;
  std::map<Monomial, Scalar> terms;

  static AlgebraElement zero(const Field& f) { return {f, {}}; }
  static AlgebraElement vertex(const Field& f, const WeightedGraph& e, int v);
  static AlgebraElement letter(const Field& f, const WeightedGraph& e, const Letter& l);
  static AlgebraElement monomial(const Field& f, const WeightedGraph& e, const Monomial& m,
                                 const Scalar& coeff);

  bool is_zero() const { return terms.empty(); }
  void add_term(const WeightedGraph& e, const Monomial& m, const Scalar& coeff);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement scaled(const Scalar& k) const;
};

// Free bilinear product: monomials concatenate when endpoints match and vanish
// otherwise. Throws FieldMismatch on mixed fields.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const WeightedGraph& e);

// Finitely supported vector of V_F over the basis F^0.
struct ModuleVector {
  Field field;
  std::map<int, Scalar> support;

  static ModuleVector zero(const Field& f) { return {f, {}}; }
  static ModuleVector basis(const Field& f, int vertex) {
    ModuleVector x{f, {}};
    x.support.emplace(vertex, Scalar::one(f));
    return x;
  }
  bool is_zero() const { return support.empty(); }
  void add(int vertex, const Scalar& coeff);
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector scaled(const Scalar& k) const;
  bool operator==(const ModuleVector& o) const { return field == o.field && support == o.support; }
};

// Result of a module action. `truncated` reports that some monomial walk was
// cut off by the frontier of a truncated graph; such walks contribute nothing
// and the numeric result must not be read as a genuine zero.
struct ActResult {
  ModuleVector vector;
  bool truncated = false;
};

// u . p = endpoint of the unique lift of p from u, or 0; extended bilinearly.
ActResult act(const ModuleVector& x, const AlgebraElement& a, const RepGraph& f);

struct RelationViolation {
  std::string relation;  // "1".."4"
  std::string vertex;
  std::string detail;
};

struct RelationReport {
  bool ok = true;
  int checked = 0;
  int skipped = 0;  // instances cut off by the frontier
  std::vector<RelationViolation> violations;
};

// Verifies the defining relations of the weighted Leavitt path algebra on the
// basis of V_F. Frontier vertices and truncated walks are skipped, not failed.
RelationReport check_relations(const RepGraph& f, const Field& field);

// V_F is simple exactly when F is an irreducible representation graph.
bool is_simple_module(const RepGraph& f);

// Degree assignment deciding gradedness of V_F: potentials along a spanning
// tree of F_d, checked on every edge; otherwise a witness cycle with nonzero
// length vector, reported as its image word based at the spanning-tree root.
struct GradingResult {
  bool graded = false;
  std::vector<DegreeVector> degrees;  // per F-vertex, relative to the first vertex
  PathWord witness;                   // image word of a closed F_d-walk (when !graded)
  int witness_base = 0;               // F-vertex the walk starts and ends at
};
GradingResult grading(const RepGraph& f);

struct HomCheckResult {
  bool ok = true;
  std::string vertex;     // first failing basis vertex of the domain
  std::string generator;  // first failing generator ("v", "e[1]", "e[1]*")
};

// sigma maps each basis vertex of `dom` to a vector over `cod`; checked to
// commute with every generator of the algebra on every basis vertex.
HomCheckResult check_module_hom(const RepGraph& dom, const RepGraph& cod,
                                const std::vector<ModuleVector>& sigma);

// V_alpha for a graph morphism: basis vertices map to their alpha-images.
std::vector<ModuleVector> induced_hom(const RepGraph& dom, const Morphism& alpha,
                                      const Field& field);

// Constructive simplicity witness: a scaled monomial k.p with x.(k.p) a single
// basis vertex, built from shortest separating words in BFS order.
struct SeparationResult {
  bool ok = false;
  Monomial word;
  Scalar scale;
  int vertex = 0;
  std::string failure;
};
SeparationResult separate_to_vertex(const RepGraph& f, const ModuleVector& x);

}  // namespace wlpa
