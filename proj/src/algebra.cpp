#include "wlpa/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wlpa {

AlgebraElement AlgebraElement::vertex(const Field& f, const WeightedGraph& e, int v) {
  AlgebraElement a{f, {}};
  a.add_term(e, Monomial{v, {}}, Scalar::one(f));
  return a;
}

AlgebraElement AlgebraElement::letter(const Field& f, const WeightedGraph& e, const Letter& l) {
  AlgebraElement a{f, {}};
  a.add_term(e, Monomial{letter_source(e, l), {l}}, Scalar::one(f));
  return a;
}

AlgebraElement AlgebraElement::monomial(const Field& f, const WeightedGraph& e, const Monomial& m,
                                        const Scalar& coeff) {
  AlgebraElement a{f, {}};
  a.add_term(e, m, coeff);
  return a;
}

void AlgebraElement::add_term(const WeightedGraph& e, const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (!is_composable(e, PathWord{m.source, m.letters}))
    throw Error("NonComposable", "monomial is not a composable word");
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (field != o.field) throw Error("FieldMismatch", "adding elements over different fields");
  AlgebraElement r = *this;
  for (const auto& [m, c] : o.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(-Scalar::one(field)); }

AlgebraElement AlgebraElement::scaled(const Scalar& k) const {
  AlgebraElement r{field, {}};
  if (k.is_zero()) return r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, c * k);
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const WeightedGraph& e) {
  if (a.field != b.field) throw Error("FieldMismatch", "multiplying elements over different fields");
  AlgebraElement r{a.field, {}};
  for (const auto& [ma, ca] : a.terms) {
    int ra = path_target(e, PathWord{ma.source, ma.letters});
    for (const auto& [mb, cb] : b.terms) {
      if (mb.source != ra) continue;  // mismatched concatenations vanish
      Monomial m{ma.source, ma.letters};
      m.letters.insert(m.letters.end(), mb.letters.begin(), mb.letters.end());
      r.add_term(e, m, ca * cb);
    }
  }
  return r;
}

void ModuleVector::add(int vertex, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = support.find(vertex);
  if (it == support.end()) {
    support.emplace(vertex, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) support.erase(it);
  }
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  if (field != o.field) throw Error("FieldMismatch", "adding vectors over different fields");
  ModuleVector r = *this;
  for (const auto& [v, c] : o.support) r.add(v, c);
  return r;
}

ModuleVector ModuleVector::scaled(const Scalar& k) const {
  ModuleVector r{field, {}};
  if (k.is_zero()) return r;
  for (const auto& [v, c] : support) r.support.emplace(v, c * k);
  return r;
}

namespace {

enum class WalkOutcome { landed, vanished, truncated };

// Walk a monomial from an F-vertex; truncation = a step missing at a frontier
// vertex, where the infinite graph may well continue.
WalkOutcome walk_monomial(const RepGraph& f, int u, const Monomial& m, int& out) {
  if (m.source != f.vertex(u).image) return WalkOutcome::vanished;
  int at = u;
  for (const auto& l : m.letters) {
    auto next = lift_step(f, at, l);
    if (!next) return f.is_frontier(at) ? WalkOutcome::truncated : WalkOutcome::vanished;
    at = *next;
  }
  out = at;
  return WalkOutcome::landed;
}

}  // namespace

ActResult act(const ModuleVector& x, const AlgebraElement& a, const RepGraph& f) {
  if (x.field != a.field) throw Error("FieldMismatch", "vector and element over different fields");
  ActResult r{ModuleVector::zero(x.field), false};
  for (const auto& [u, cu] : x.support) {
    for (const auto& [m, cm] : a.terms) {
      int target = -1;
      switch (walk_monomial(f, u, m, target)) {
        case WalkOutcome::landed:
          r.vector.add(target, cu * cm);
          break;
        case WalkOutcome::vanished:
          break;
        case WalkOutcome::truncated:
          r.truncated = true;
          break;
      }
    }
  }
  return r;
}

RelationReport check_relations(const RepGraph& f, const Field& field) {
  RelationReport report;
  const WeightedGraph& e = f.base();
  auto fail = [&](const std::string& relation, int u, const std::string& detail) {
    report.ok = false;
    report.violations.push_back({relation, f.vertex(u).id, detail});
  };
  auto run = [&](const std::string& relation, int u, const AlgebraElement& elem,
                 const ModuleVector& expect, const std::string& detail) {
    ActResult got = act(ModuleVector::basis(field, u), elem, f);
    if (got.truncated) {
      ++report.skipped;
      return;
    }
    ++report.checked;
    if (!(got.vector == expect)) fail(relation, u, detail);
  };

  for (int u = 0; u < f.vertex_count(); ++u) {
    if (f.is_frontier(u)) continue;
    int img = f.vertex(u).image;
    ModuleVector unit = ModuleVector::basis(field, u);
    ModuleVector zero = ModuleVector::zero(field);

    // (1) uv = delta_uv u, acting on basis vertices
    for (int v = 0; v < e.vertex_count(); ++v)
      run("1", u, AlgebraElement::vertex(field, e, v), img == v ? unit : zero,
          "vertex idempotent " + e.vertex_id(v));

    // (2) s(e) e_i = e_i = e_i r(e), spot-checked through the action
    for (const auto& t : build_hat_graph(e)) {
      Letter real{t, Direction::real};
      Letter ghost{t, Direction::ghost};
      for (const Letter& l : {real, ghost}) {
        AlgebraElement le = AlgebraElement::letter(field, e, l);
        AlgebraElement src = AlgebraElement::vertex(field, e, letter_source(e, l));
        AlgebraElement dst = AlgebraElement::vertex(field, e, letter_target(e, l));
        ActResult plain = act(unit, le, f);
        ActResult left = act(unit, multiply(src, le, e), f);
        ActResult right = act(unit, multiply(le, dst, e), f);
        if (plain.truncated || left.truncated || right.truncated) {
          ++report.skipped;
          continue;
        }
        ++report.checked;
        if (!(plain.vector == left.vector) || !(plain.vector == right.vector))
          fail("2", u, "unit relation at " + letter_to_string(e, l));
      }
    }

    // (3) sum_i e_i^* f_i = delta_ef r(e), for e, f emitted by the same vertex
    for (int v = 0; v < e.vertex_count(); ++v) {
      for (int ee : e.out_edges(v)) {
        for (int fe : e.out_edges(v)) {
          AlgebraElement sum = AlgebraElement::zero(field);
          int upto = std::min(e.edge(ee).weight, e.edge(fe).weight);
          for (int i = 1; i <= upto; ++i) {
            Monomial m{e.edge(ee).dst,
                       {Letter{{ee, i}, Direction::ghost}, Letter{{fe, i}, Direction::real}}};
            sum.add_term(e, m, Scalar::one(field));
          }
          ModuleVector expect = ee == fe
                                    ? act(unit, AlgebraElement::vertex(field, e, e.edge(ee).dst), f).vector
                                    : zero;
          run("3", u, sum, expect,
              "e = " + e.edge(ee).id + ", f = " + e.edge(fe).id);
        }
      }
    }

    // (4) sum_{e in s^-1(v)} e_i e_j^* = delta_ij v
    for (int v = 0; v < e.vertex_count(); ++v) {
      int w = e.vertex_weight(v);
      for (int i = 1; i <= w; ++i) {
        for (int j = 1; j <= w; ++j) {
          AlgebraElement sum = AlgebraElement::zero(field);
          for (int ee : e.out_edges(v)) {
            if (e.edge(ee).weight < i || e.edge(ee).weight < j) continue;
            Monomial m{v, {Letter{{ee, i}, Direction::real}, Letter{{ee, j}, Direction::ghost}}};
            sum.add_term(e, m, Scalar::one(field));
          }
          ModuleVector expect = (i == j && img == v) ? unit : zero;
          run("4", u, sum, expect,
              "v = " + e.vertex_id(v) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j));
        }
      }
    }
  }
  return report;
}

bool is_simple_module(const RepGraph& f) { return is_irreducible(f); }

GradingResult grading(const RepGraph& f) {
  if (!f.connected()) throw Error("DisconnectedGraph", "grading needs a connected graph");
  const WeightedGraph& e = f.base();
  GradingResult r;
  r.degrees.assign(f.vertex_count(), zero_degree(e));

  struct Parent {
    int edge = -1;
    bool forward = true;
  };
  std::vector<Parent> parent(f.vertex_count());
  std::vector<char> seen(f.vertex_count(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  auto plus = [](DegreeVector a, const DegreeVector& b, long long sign) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
    return a;
  };
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int fe : f.out_edges(v)) {
      int u = f.redge(fe).dst;
      if (seen[u]) continue;
      seen[u] = 1;
      r.degrees[u] = plus(r.degrees[v], unit_degree(e, f.redge(fe).image.tag), 1);
      parent[u] = {fe, true};
      queue.push_back(u);
    }
    for (int fe : f.in_edges(v)) {
      int u = f.redge(fe).src;
      if (seen[u]) continue;
      seen[u] = 1;
      r.degrees[u] = plus(r.degrees[v], unit_degree(e, f.redge(fe).image.tag), -1);
      parent[u] = {fe, false};
      queue.push_back(u);
    }
  }

  auto walk_to_root = [&](int v) {
    // letters along root -> v
    std::vector<Letter> down;
    while (parent[v].edge != -1) {
      const auto& edge = f.redge(parent[v].edge);
      bool fwd = parent[v].forward;
      down.push_back({edge.image, fwd ? Direction::real : Direction::ghost});
      v = fwd ? edge.src : edge.dst;
    }
    std::reverse(down.begin(), down.end());
    return down;
  };

  for (int fe = 0; fe < f.edge_count(); ++fe) {
    const auto& edge = f.redge(fe);
    DegreeVector expect = plus(r.degrees[edge.src], unit_degree(e, edge.image.tag), 1);
    if (expect == r.degrees[edge.dst]) continue;
    // witness: root -> s(f), f, r(f) -> root
    std::vector<Letter> word = walk_to_root(edge.src);
    word.push_back({edge.image, Direction::real});
    std::vector<Letter> back = walk_to_root(edge.dst);
    std::reverse(back.begin(), back.end());
    for (auto& l : back) l = l.inverse();
    word.insert(word.end(), back.begin(), back.end());
    r.graded = false;
    r.witness = PathWord{f.vertex(0).image, std::move(word)};
    r.witness_base = 0;
    r.degrees.clear();
    return r;
  }
  r.graded = true;
  return r;
}

namespace {

std::vector<std::pair<std::string, AlgebraElement>> generators(const WeightedGraph& e,
                                                               const Field& field) {
  std::vector<std::pair<std::string, AlgebraElement>> gens;
  for (int v = 0; v < e.vertex_count(); ++v)
    gens.emplace_back(e.vertex_id(v), AlgebraElement::vertex(field, e, v));
  for (const auto& l : all_letters(e))
    gens.emplace_back(letter_to_string(e, l), AlgebraElement::letter(field, e, l));
  return gens;
}

ModuleVector apply_sigma(const std::vector<ModuleVector>& sigma, const ModuleVector& x,
                         const Field& field) {
  ModuleVector r = ModuleVector::zero(field);
  for (const auto& [v, c] : x.support) r = r + sigma[v].scaled(c);
  return r;
}

}  // namespace

HomCheckResult check_module_hom(const RepGraph& dom, const RepGraph& cod,
                                const std::vector<ModuleVector>& sigma) {
  if (static_cast<int>(sigma.size()) != dom.vertex_count())
    throw Error("BadHom", "sigma must assign a vector to every basis vertex of the domain");
  Field field = sigma.empty() ? Field::rationals() : sigma[0].field;
  HomCheckResult result;
  for (int u = 0; u < dom.vertex_count(); ++u) {
    for (const auto& [name, gen] : generators(dom.base(), field)) {
      ModuleVector lhs = apply_sigma(sigma, act(ModuleVector::basis(field, u), gen, dom).vector, field);
      ModuleVector rhs = act(sigma[u], gen, cod).vector;
      if (!(lhs == rhs)) {
        result.ok = false;
        result.vertex = dom.vertex(u).id;
        result.generator = name;
        return result;
      }
    }
  }
  return result;
}

std::vector<ModuleVector> induced_hom(const RepGraph& dom, const Morphism& alpha,
                                      const Field& field) {
  std::vector<ModuleVector> sigma;
  for (int u = 0; u < dom.vertex_count(); ++u)
    sigma.push_back(ModuleVector::basis(field, alpha.vertex_map[u]));
  return sigma;
}

SeparationResult separate_to_vertex(const RepGraph& f, const ModuleVector& x) {
  SeparationResult out;
  if (x.is_zero()) {
    out.failure = "zero vector";
    return out;
  }
  const WeightedGraph& e = f.base();
  std::vector<Letter> letters = all_letters(e);

  ModuleVector y = x;
  Monomial word{f.vertex(x.support.begin()->first).image, {}};
  int guard = f.vertex_count() + 2;
  while (static_cast<int>(y.support.size()) > 1 && guard-- > 0) {
    auto it = y.support.begin();
    int v1 = it->first;
    int v2 = std::next(it)->first;
    std::optional<std::vector<Letter>> found;
    if (f.vertex(v1).image != f.vertex(v2).image) {
      found.emplace();  // the vertex idempotent of phi(v1) already separates
    } else {
      // shortest word defined from exactly one of v1, v2 (BFS over vertex pairs,
      // expanding only through non-frontier vertices of a truncation)
      struct State {
        int a, b;
        std::vector<Letter> path;
      };
      std::deque<State> queue{{v1, v2, {}}};
      std::set<std::pair<int, int>> seen{{v1, v2}};
      while (!queue.empty() && !found) {
        State s = queue.front();
        queue.pop_front();
        if (f.is_frontier(s.a) || f.is_frontier(s.b)) continue;
        for (const auto& l : letters) {
          auto da = lift_step(f, s.a, l);
          auto db = lift_step(f, s.b, l);
          if (da.has_value() != db.has_value()) {
            found = s.path;
            found->push_back(l);
            break;
          }
          if (da && seen.emplace(*da, *db).second) {
            State t{*da, *db, s.path};
            t.path.push_back(l);
            queue.push_back(std::move(t));
          }
        }
      }
    }
    if (!found) {
      out.failure = "no separating word for '" + f.vertex(v1).id + "' vs '" + f.vertex(v2).id +
                    "' within the truncation";
      return out;
    }
    Monomial step{f.vertex(v1).image, *found};
    ActResult next = act(y, AlgebraElement::monomial(y.field, e, step, Scalar::one(y.field)), f);
    if (next.truncated || next.vector.is_zero() ||
        next.vector.support.size() >= y.support.size()) {
      out.failure = "separating word did not shrink the support";
      return out;
    }
    word.letters.insert(word.letters.end(), found->begin(), found->end());
    y = next.vector;
  }
  if (y.support.size() != 1) {
    out.failure = "support did not reduce to a single vertex";
    return out;
  }
  out.ok = true;
  out.vertex = y.support.begin()->first;
  out.scale = y.support.begin()->second.inverse();
  out.word = word;
  return out;
}

}  // namespace wlpa
