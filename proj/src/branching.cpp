#include "wlpa/branching.hpp"

#include <algorithm>

namespace wlpa {

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return !(i.lo < i.hi); });
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (auto& p : parts) {
    if (!s.parts_.empty() && !(s.parts_.back().hi < p.lo)) {
      if (s.parts_.back().hi < p.hi) s.parts_.back().hi = p.hi;
    } else {
      s.parts_.push_back(p);
    }
  }
  return s;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const auto& p : parts_)
    if (!(x < p.lo) && x < p.hi) return true;
  return false;
}

Rational IntervalSet::measure() const {
  Rational m;
  for (const auto& p : parts_) m = m + (p.hi - p.lo);
  return m;
}

bool IntervalSet::operator==(const IntervalSet& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].lo != o.parts_[i].lo || parts_[i].hi != o.parts_[i].hi) return false;
  return true;
}

bool IntervalSet::disjoint_union(const std::vector<const IntervalSet*>& sets, IntervalSet& out,
                                 std::string& overlap_witness) {
  std::vector<Interval> all;
  for (const auto* s : sets)
    all.insert(all.end(), s->parts().begin(), s->parts().end());
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i + 1].lo < all[i].hi) {
      overlap_witness = all[i + 1].lo.to_string();
      return false;
    }
  }
  out = IntervalSet::of(all);
  return true;
}

int BranchingSystem::point_index(const std::string& id) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == id) return static_cast<int>(i);
  throw Error("PointOutsideCarrier", "unknown carrier point '" + id + "'");
}

bool BranchingSystem::in_carrier(const BPoint& x) const {
  if (interval_carrier) {
    if (!std::holds_alternative<Rational>(x)) return false;
    const Rational& q = std::get<Rational>(x);
    for (const auto& set : d_vertex_ivals)
      if (set.contains(q)) return true;
    return false;
  }
  if (!std::holds_alternative<int>(x)) return false;
  int i = std::get<int>(x);
  return i >= 0 && i < static_cast<int>(points.size());
}

namespace {

bool sorted_disjoint_union(const std::vector<const std::vector<int>*>& parts,
                           const std::vector<int>& whole, std::string& witness) {
  std::vector<int> all;
  for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) {
    witness = "duplicated point index " + std::to_string(*dup);
    return false;
  }
  std::vector<int> target = whole;
  std::sort(target.begin(), target.end());
  if (all != target) {
    witness = "union does not cover the target set";
    return false;
  }
  return true;
}

}  // namespace

BranchingReport validate_branching(const BranchingSystem& x) {
  BranchingReport report;
  const WeightedGraph& e = x.base;
  auto issue = [&](const std::string& text) {
    report.ok = false;
    report.issues.push_back(text);
  };
  auto range_of = [&](const TaggedEdge& t) -> const IntervalSet& {
    static const IntervalSet empty;
    auto it = x.range_ivals.find(t);
    return it == x.range_ivals.end() ? empty : it->second;
  };
  auto domain_of = [&](const TaggedEdge& t) -> const IntervalSet& {
    static const IntervalSet empty;
    auto it = x.domain_ivals.find(t);
    return it == x.domain_ivals.end() ? empty : it->second;
  };
  static const std::vector<int> no_points;
  auto range_pts_of = [&](const TaggedEdge& t) -> const std::vector<int>& {
    auto it = x.range_pts.find(t);
    return it == x.range_pts.end() ? no_points : it->second;
  };
  auto domain_pts_of = [&](const TaggedEdge& t) -> const std::vector<int>& {
    auto it = x.domain_pts.find(t);
    return it == x.domain_pts.end() ? no_points : it->second;
  };

  if (x.interval_carrier) {
    // (1) {D_v} partitions X
    {
      std::vector<const IntervalSet*> sets;
      for (const auto& s : x.d_vertex_ivals) sets.push_back(&s);
      IntervalSet all;
      std::string witness;
      if (!IntervalSet::disjoint_union(sets, all, witness))
        issue("axiom1: vertex sets overlap at " + witness);
    }
    // (2) per vertex and slot, the R-sets partition D_v
    for (int v = 0; v < e.vertex_count(); ++v) {
      for (int slot = 1; slot <= e.vertex_weight(v); ++slot) {
        std::vector<const IntervalSet*> sets;
        for (int ee : e.out_edges(v))
          if (e.edge(ee).weight >= slot) sets.push_back(&range_of({ee, slot}));
        IntervalSet all;
        std::string witness;
        if (!IntervalSet::disjoint_union(sets, all, witness)) {
          issue("axiom2: R-sets overlap at " + witness + " (vertex '" + e.vertex_id(v) +
                "', slot " + std::to_string(slot) + ")");
        } else if (!(all == x.d_vertex_ivals[v])) {
          issue("axiom2: R-sets do not cover D_v (vertex '" + e.vertex_id(v) + "', slot " +
                std::to_string(slot) + ")");
        }
      }
    }
    // (3) per edge, the D-sets partition D_{r(e)}
    for (int ee = 0; ee < e.edge_count(); ++ee) {
      std::vector<const IntervalSet*> sets;
      for (int i = 1; i <= e.edge(ee).weight; ++i) sets.push_back(&domain_of({ee, i}));
      IntervalSet all;
      std::string witness;
      if (!IntervalSet::disjoint_union(sets, all, witness)) {
        issue("axiom3: D-sets overlap at " + witness + " (edge '" + e.edge(ee).id + "')");
      } else if (!(all == x.d_vertex_ivals[e.edge(ee).dst])) {
        issue("axiom3: D-sets do not cover D_{r(e)} (edge '" + e.edge(ee).id + "')");
      }
    }
    // (4) each g an increasing affine bijection R -> D
    for (const auto& t : build_hat_graph(e)) {
      auto it = x.g_affine.find(t);
      if (it == x.g_affine.end()) {
        if (!range_of(t).empty())
          issue("bijection: no map for " + tagged_edge_to_string(e, t));
        continue;
      }
      if (!(Rational(0) < it->second.scale)) {
        issue("bijection: non-increasing map for " + tagged_edge_to_string(e, t));
        continue;
      }
      std::vector<Interval> image;
      for (const auto& p : range_of(t).parts())
        image.push_back({it->second.apply(p.lo), it->second.apply(p.hi)});
      if (!(IntervalSet::of(image) == domain_of(t)))
        issue("bijection: image of R differs from D for " + tagged_edge_to_string(e, t));
    }
  } else {
    std::vector<int> carrier(x.points.size());
    for (std::size_t i = 0; i < x.points.size(); ++i) carrier[i] = static_cast<int>(i);
    {
      std::vector<const std::vector<int>*> sets;
      for (const auto& s : x.d_vertex_pts) sets.push_back(&s);
      std::string witness;
      if (!sorted_disjoint_union(sets, carrier, witness)) issue("axiom1: " + witness);
    }
    for (int v = 0; v < e.vertex_count(); ++v) {
      for (int slot = 1; slot <= e.vertex_weight(v); ++slot) {
        std::vector<const std::vector<int>*> sets;
        for (int ee : e.out_edges(v))
          if (e.edge(ee).weight >= slot) sets.push_back(&range_pts_of({ee, slot}));
        std::string witness;
        if (!sorted_disjoint_union(sets, x.d_vertex_pts[v], witness))
          issue("axiom2 (vertex '" + e.vertex_id(v) + "', slot " + std::to_string(slot) +
                "): " + witness);
      }
    }
    for (int ee = 0; ee < e.edge_count(); ++ee) {
      std::vector<const std::vector<int>*> sets;
      for (int i = 1; i <= e.edge(ee).weight; ++i) sets.push_back(&domain_pts_of({ee, i}));
      std::string witness;
      if (!sorted_disjoint_union(sets, x.d_vertex_pts[e.edge(ee).dst], witness))
        issue("axiom3 (edge '" + e.edge(ee).id + "'): " + witness);
    }
    for (const auto& t : build_hat_graph(e)) {
      const auto& range = range_pts_of(t);
      const auto& domain = domain_pts_of(t);
      std::map<int, int> g;
      if (auto it = x.g_points.find(t); it != x.g_points.end()) g = it->second;
      std::vector<int> image;
      bool ok = g.size() == range.size();
      for (int p : range) {
        auto it = g.find(p);
        if (it == g.end()) {
          ok = false;
          break;
        }
        image.push_back(it->second);
      }
      std::sort(image.begin(), image.end());
      std::vector<int> expect = domain;
      std::sort(expect.begin(), expect.end());
      if (image.size() != range.size() ||
          std::adjacent_find(image.begin(), image.end()) != image.end())
        ok = false;
      if (ok && image != expect) ok = false;
      if (!ok) issue("bijection fails for " + tagged_edge_to_string(e, t));
    }
  }
  return report;
}

BranchingSystem interval_branching(const WeightedGraph& e, const std::vector<int>& vertex_order,
                                   const std::map<std::pair<int, int>, std::vector<int>>&
                                       slot_orders) {
  if (e.vertex_count() == 0) throw Error("EmptyGraph", "interval system needs a vertex");
  std::vector<int> slice_of(e.vertex_count());  // vertex -> interval index
  if (vertex_order.empty()) {
    for (int v = 0; v < e.vertex_count(); ++v) slice_of[v] = v;
  } else {
    if (static_cast<int>(vertex_order.size()) != e.vertex_count())
      throw Error("BadOrder", "vertex order must be a permutation of the vertices");
    std::vector<char> seen(e.vertex_count(), 0);
    for (int i = 0; i < e.vertex_count(); ++i) {
      int v = vertex_order[i];
      if (v < 0 || v >= e.vertex_count() || seen[v]++)
        throw Error("BadOrder", "vertex order must be a permutation of the vertices");
      slice_of[v] = i;
    }
  }

  BranchingSystem sys;
  sys.base = e;
  sys.interval_carrier = true;
  sys.d_vertex_ivals.resize(e.vertex_count());
  for (int v = 0; v < e.vertex_count(); ++v)
    sys.d_vertex_ivals[v] = IntervalSet::of({{Rational(slice_of[v]), Rational(slice_of[v] + 1)}});

  for (int v = 0; v < e.vertex_count(); ++v) {
    for (int slot = 1; slot <= e.vertex_weight(v); ++slot) {
      std::vector<int> family;  // X^i_j, in edge order unless reordered
      for (int ee : e.out_edges(v))
        if (e.edge(ee).weight >= slot) family.push_back(ee);
      if (auto it = slot_orders.find({v, slot}); it != slot_orders.end()) {
        std::vector<int> sorted_given = it->second, sorted_family = family;
        std::sort(sorted_given.begin(), sorted_given.end());
        std::sort(sorted_family.begin(), sorted_family.end());
        if (sorted_given != sorted_family)
          throw Error("BadOrder", "slot order must permute the slot family");
        family = it->second;
      }
      Rational size(static_cast<long long>(family.size()));
      for (std::size_t k = 0; k < family.size(); ++k) {
        Rational lo = Rational(slice_of[v]) + Rational(static_cast<long long>(k)) / size;
        Rational hi = Rational(slice_of[v]) + Rational(static_cast<long long>(k + 1)) / size;
        sys.range_ivals[{family[k], slot}] = IntervalSet::of({{lo, hi}});
      }
    }
  }
  for (int ee = 0; ee < e.edge_count(); ++ee) {
    int rv = slice_of[e.edge(ee).dst];
    Rational w(static_cast<long long>(e.edge(ee).weight));
    for (int i = 1; i <= e.edge(ee).weight; ++i) {
      Rational lo = Rational(rv) + Rational(i - 1) / w;
      Rational hi = Rational(rv) + Rational(i) / w;
      sys.domain_ivals[{ee, i}] = IntervalSet::of({{lo, hi}});
    }
  }
  // unique increasing affine bijection between the single pieces
  for (const auto& t : build_hat_graph(e)) {
    const auto& r = sys.range_ivals.at(t).parts().front();
    const auto& d = sys.domain_ivals.at(t).parts().front();
    AffineMap g;
    g.scale = (d.hi - d.lo) / (r.hi - r.lo);
    g.offset = d.lo - g.scale * r.lo;
    sys.g_affine[t] = g;
  }
  return sys;
}

void SupportedFunction::add(const BPoint& x, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = support.find(x);
  if (it == support.end()) {
    support.emplace(x, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) support.erase(it);
  }
}

namespace {

std::optional<BPoint> branching_step(const BranchingSystem& sys, const BPoint& x,
                                     const Letter& l) {
  const TaggedEdge& t = l.base;
  if (sys.interval_carrier) {
    const Rational& q = std::get<Rational>(x);
    auto g = sys.g_affine.find(t);
    if (l.dir == Direction::real) {
      auto r = sys.range_ivals.find(t);
      if (r == sys.range_ivals.end() || !r->second.contains(q) || g == sys.g_affine.end())
        return std::nullopt;
      return BPoint{g->second.apply(q)};
    }
    auto d = sys.domain_ivals.find(t);
    if (d == sys.domain_ivals.end() || !d->second.contains(q) || g == sys.g_affine.end())
      return std::nullopt;
    return BPoint{g->second.apply_inverse(q)};
  }
  int p = std::get<int>(x);
  auto g = sys.g_points.find(t);
  if (g == sys.g_points.end()) return std::nullopt;
  if (l.dir == Direction::real) {
    auto it = g->second.find(p);
    if (it == g->second.end()) return std::nullopt;
    return BPoint{it->second};
  }
  for (const auto& [from, to] : g->second)
    if (to == p) return BPoint{from};
  return std::nullopt;
}

std::optional<BPoint> branching_walk(const BranchingSystem& sys, BPoint x, const Monomial& m) {
  // vertex membership for the monomial's source idempotent
  bool in_source = sys.interval_carrier
                       ? sys.d_vertex_ivals[m.source].contains(std::get<Rational>(x))
                       : std::binary_search(sys.d_vertex_pts[m.source].begin(),
                                            sys.d_vertex_pts[m.source].end(), std::get<int>(x));
  if (!in_source) return std::nullopt;
  for (const auto& l : m.letters) {
    auto next = branching_step(sys, x, l);
    if (!next) return std::nullopt;
    x = *next;
  }
  return x;
}

}  // namespace

SupportedFunction branching_act(const SupportedFunction& x, const AlgebraElement& a,
                                const BranchingSystem& sys) {
  if (x.field != a.field) throw Error("FieldMismatch", "function and element over different fields");
  for (const auto& [p, c] : x.support) {
    (void)c;
    if (!sys.in_carrier(p)) throw Error("PointOutsideCarrier", "support point outside the carrier");
  }
  SupportedFunction r = SupportedFunction::zero(x.field);
  for (const auto& [p, cp] : x.support)
    for (const auto& [m, cm] : a.terms)
      if (auto q = branching_walk(sys, p, m)) r.add(*q, cp * cm);
  return r;
}

BranchingSystem branching_from_rep_graph(const RepGraph& f) {
  BranchingSystem sys;
  sys.base = f.base();
  sys.interval_carrier = false;
  for (const auto& v : f.vertices()) sys.points.push_back(v.id);
  sys.d_vertex_pts.resize(sys.base.vertex_count());
  for (int v = 0; v < f.vertex_count(); ++v)
    sys.d_vertex_pts[f.vertex(v).image].push_back(v);
  for (const auto& edge : f.redges()) {
    sys.range_pts[edge.image].push_back(edge.src);
    sys.domain_pts[edge.image].push_back(edge.dst);
    sys.g_points[edge.image][edge.src] = edge.dst;
  }
  for (auto& [t, pts] : sys.range_pts) std::sort(pts.begin(), pts.end());
  for (auto& [t, pts] : sys.domain_pts) std::sort(pts.begin(), pts.end());
  return sys;
}

int ActionTable::basis_index(const std::string& id) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == id) return static_cast<int>(i);
  throw Error("UnknownBasisElement", "unknown basis element '" + id + "'");
}

int ActionTable::entry(int b, const std::string& gen) const {
  auto it = rows[b].find(gen);
  return it == rows[b].end() ? -1 : it->second;
}

ActionTable action_table(const RepGraph& f, const Field& field) {
  if (f.truncated())
    throw Error("Truncated", "action tables need a complete representation graph");
  ActionTable t;
  t.base = f.base();
  t.field = field;
  for (const auto& v : f.vertices()) t.basis.push_back(v.id);
  t.rows.resize(f.vertex_count());
  for (int u = 0; u < f.vertex_count(); ++u) {
    t.rows[u][t.base.vertex_id(f.vertex(u).image)] = u;
    for (const auto& l : all_letters(t.base))
      if (auto v = lift_step(f, u, l)) t.rows[u][letter_to_string(t.base, l)] = *v;
  }
  return t;
}

namespace {

// Formal K-linear combination over basis indices.
using Combo = std::map<int, Scalar>;

void combo_add(Combo& c, int b, const Scalar& k) {
  if (b < 0 || k.is_zero()) return;
  auto it = c.find(b);
  if (it == c.end()) {
    c.emplace(b, k);
  } else {
    it->second = it->second + k;
    if (it->second.is_zero()) c.erase(it);
  }
}

int table_walk(const ActionTable& t, int b, const std::vector<std::string>& gens) {
  for (const auto& g : gens) {
    if (b < 0) return -1;
    b = t.entry(b, g);
  }
  return b;
}

}  // namespace

ReconstructResult reconstruct_rep_graph(const ActionTable& table, bool lenient) {
  ReconstructResult out;
  const WeightedGraph& e = table.base;
  const Field& field = table.field;
  int nb = static_cast<int>(table.basis.size());
  if (nb == 0) {
    out.rejection = "VPropertyViolation";
    out.detail = "empty basis";
    return out;
  }

  // assumption (iii) + the v-property
  std::vector<int> fixing_vertex(nb, -1);
  for (int b = 0; b < nb; ++b) {
    bool any = false;
    for (const auto& [gen, target] : table.rows[b])
      if (target >= 0) any = true;
    if (!any) {
      out.rejection = "VPropertyViolation";
      out.detail = "basis element '" + table.basis[b] + "' is annihilated by every generator";
      return out;
    }
    for (int v = 0; v < e.vertex_count(); ++v) {
      int img = table.entry(b, e.vertex_id(v));
      if (img < 0) continue;
      if (img != b) {
        out.rejection = "VPropertyViolation";
        out.detail = "vertex row of '" + table.basis[b] + "' is not fixing";
        return out;
      }
      if (fixing_vertex[b] != -1) {
        out.rejection = "VPropertyViolation";
        out.detail = "basis element '" + table.basis[b] + "' is fixed by two vertices";
        return out;
      }
      fixing_vertex[b] = v;
    }
    if (fixing_vertex[b] == -1) {
      out.rejection = "VPropertyViolation";
      out.detail = "basis element '" + table.basis[b] + "' is fixed by no vertex";
      return out;
    }
  }

  auto gen_real = [&](int ee, int i) { return letter_to_string(e, {{ee, i}, Direction::real}); };
  auto gen_ghost = [&](int ee, int i) { return letter_to_string(e, {{ee, i}, Direction::ghost}); };

  // assumption (iv): per-term vanishing, required outside characteristic 0
  if (field.characteristic() != 0 || lenient) {
    for (int b = 0; b < nb; ++b) {
      for (int v = 0; v < e.vertex_count(); ++v) {
        for (int ee : e.out_edges(v)) {
          for (int fe : e.out_edges(v)) {
            if (ee == fe) continue;
            int upto = std::min(e.edge(ee).weight, e.edge(fe).weight);
            for (int i = 1; i <= upto; ++i) {
              if (table_walk(table, b, {gen_ghost(ee, i), gen_real(fe, i)}) >= 0) {
                out.rejection = "AssumptionIVViolation";
                out.detail = "'" + table.basis[b] + "'.(" + gen_ghost(ee, i) + " " +
                             gen_real(fe, i) + ") is nonzero";
                return out;
              }
            }
          }
          for (int i = 1; i <= e.edge(ee).weight; ++i)
            for (int j = 1; j <= e.edge(ee).weight; ++j) {
              if (i == j) continue;
              if (table_walk(table, b, {gen_real(ee, i), gen_ghost(ee, j)}) >= 0) {
                out.rejection = "AssumptionIVViolation";
                out.detail = "'" + table.basis[b] + "'.(" + gen_real(ee, i) + " " +
                             gen_ghost(ee, j) + ") is nonzero";
                return out;
              }
            }
        }
      }
    }
  }

  // the defining relations evaluated on the basis
  for (int b = 0; b < nb; ++b) {
    // (3)
    for (int v = 0; v < e.vertex_count(); ++v) {
      for (int ee : e.out_edges(v)) {
        for (int fe : e.out_edges(v)) {
          Combo got;
          int upto = std::min(e.edge(ee).weight, e.edge(fe).weight);
          for (int i = 1; i <= upto; ++i)
            combo_add(got, table_walk(table, b, {gen_ghost(ee, i), gen_real(fe, i)}),
                      Scalar::one(field));
          Combo expect;
          if (ee == fe) combo_add(expect, table.entry(b, e.vertex_id(e.edge(ee).dst)),
                                  Scalar::one(field));
          if (!(got == expect)) {
            out.rejection = "RelationViolation";
            out.detail = "relation (3) fails at '" + table.basis[b] + "' with e = " +
                         e.edge(ee).id + ", f = " + e.edge(fe).id;
            return out;
          }
        }
      }
    }
    // (4)
    for (int v = 0; v < e.vertex_count(); ++v) {
      int w = e.vertex_weight(v);
      for (int i = 1; i <= w; ++i) {
        for (int j = 1; j <= w; ++j) {
          Combo got;
          for (int ee : e.out_edges(v)) {
            if (e.edge(ee).weight < i || e.edge(ee).weight < j) continue;
            combo_add(got, table_walk(table, b, {gen_real(ee, i), gen_ghost(ee, j)}),
                      Scalar::one(field));
          }
          Combo expect;
          if (i == j) combo_add(expect, table.entry(b, e.vertex_id(v)), Scalar::one(field));
          if (!(got == expect)) {
            out.rejection = "RelationViolation";
            out.detail = "relation (4) fails at '" + table.basis[b] + "' with v = " +
                         e.vertex_id(v) + ", i = " + std::to_string(i) + ", j = " +
                         std::to_string(j);
            return out;
          }
        }
      }
    }
  }

  // emit the graph
  std::vector<std::pair<std::string, std::string>> vertices;
  for (int b = 0; b < nb; ++b)
    vertices.emplace_back(table.basis[b], e.vertex_id(fixing_vertex[b]));
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  for (int b = 0; b < nb; ++b) {
    for (const auto& t : build_hat_graph(e)) {
      int target = table.entry(b, gen_real(t.edge, t.tag));
      if (target < 0) continue;
      edges.emplace_back("g(" + table.basis[b] + "," + tagged_edge_to_string(e, t) + ")",
                         table.basis[b], table.basis[target], e.edge(t.edge).id, t.tag);
    }
  }
  RepGraph graph = RepGraph::make(e, vertices, edges);
  ValidationReport report = validate(graph);
  if (!report.ok) {
    out.rejection = "ValidateFailed";
    out.detail = report.issues.front().axiom + " at '" + report.issues.front().vertex + "': " +
                 report.issues.front().detail;
    return out;
  }
  out.ok = true;
  out.graph = std::move(graph);
  return out;
}

BranchingRelationReport check_branching_relations(const BranchingSystem& sys, const Field& field,
                                                  std::uint64_t seed) {
  BranchingRelationReport report;
  const WeightedGraph& e = sys.base;

  // sample points: all of a finite carrier; midpoints plus 16 seeded rationals
  // per piece of an interval carrier
  std::vector<BPoint> samples;
  if (sys.interval_carrier) {
    std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next16 = [&]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return (state >> 33) & 0xFFFFull;
    };
    for (const auto& set : sys.d_vertex_ivals) {
      for (const auto& p : set.parts()) {
        Rational mid = (p.lo + p.hi) / Rational(2);
        samples.emplace_back(mid);
        for (int k = 0; k < 16; ++k) {
          Rational frac(static_cast<long long>(next16()), 65536);
          samples.emplace_back(p.lo + (p.hi - p.lo) * frac);
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < sys.points.size(); ++i)
      samples.emplace_back(static_cast<int>(i));
  }

  auto run = [&](const BPoint& x, const AlgebraElement& elem, const SupportedFunction& expect,
                 const std::string& label) {
    SupportedFunction got = branching_act(SupportedFunction::delta(field, x), elem, sys);
    ++report.checked;
    if (!(got == expect)) {
      report.ok = false;
      report.violations.push_back(label);
    }
  };

  for (const auto& x : samples) {
    SupportedFunction unit = SupportedFunction::delta(field, x);
    SupportedFunction zero = SupportedFunction::zero(field);
    // (1)
    for (int v = 0; v < e.vertex_count(); ++v) {
      bool inside = sys.interval_carrier
                        ? sys.d_vertex_ivals[v].contains(std::get<Rational>(x))
                        : std::binary_search(sys.d_vertex_pts[v].begin(),
                                             sys.d_vertex_pts[v].end(), std::get<int>(x));
      run(x, AlgebraElement::vertex(field, e, v), inside ? unit : zero,
          "relation (1) at vertex '" + e.vertex_id(v) + "'");
    }
    // (2)
    for (const auto& t : build_hat_graph(e)) {
      for (Direction dir : {Direction::real, Direction::ghost}) {
        Letter l{t, dir};
        AlgebraElement le = AlgebraElement::letter(field, e, l);
        AlgebraElement src = AlgebraElement::vertex(field, e, letter_source(e, l));
        AlgebraElement dst = AlgebraElement::vertex(field, e, letter_target(e, l));
        SupportedFunction plain = branching_act(unit, le, sys);
        SupportedFunction left = branching_act(unit, multiply(src, le, e), sys);
        SupportedFunction right = branching_act(unit, multiply(le, dst, e), sys);
        ++report.checked;
        if (!(plain == left) || !(plain == right)) {
          report.ok = false;
          report.violations.push_back("relation (2) at " + letter_to_string(e, l));
        }
      }
    }
    // (3)
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
          SupportedFunction expect = zero;
          if (ee == fe)
            expect = branching_act(unit, AlgebraElement::vertex(field, e, e.edge(ee).dst), sys);
          run(x, sum, expect, "relation (3) with e = " + e.edge(ee).id + ", f = " + e.edge(fe).id);
        }
      }
    }
    // (4)
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
          SupportedFunction expect = zero;
          if (i == j) expect = branching_act(unit, AlgebraElement::vertex(field, e, v), sys);
          run(x, sum, expect,
              "relation (4) with v = " + e.vertex_id(v) + ", i = " + std::to_string(i) +
                  ", j = " + std::to_string(j));
        }
      }
    }
  }
  return report;
}

ActionTable char2_action_table(const Field& field) {
  WeightedGraph e = WeightedGraph::make({"v"}, {{"e", "v", "v", 2}, {"f", "v", "v", 2}});
  ActionTable t;
  t.base = e;
  t.field = field;
  t.basis = {"1"};
  std::map<std::string, int> row;
  row["v"] = 0;
  row["e[1]"] = 0;
  row["e[1]*"] = 0;
  row["e[2]*"] = 0;
  row["f[1]"] = 0;
  row["f[2]"] = 0;
  row["f[2]*"] = 0;
  // e[2] and f[1]* act as zero
  t.rows.push_back(row);
  return t;
}

Char2Report verify_char2_example() {
  Char2Report report;
  Field f2 = Field::prime(2);
  ActionTable table = char2_action_table(f2);

  auto term = [&](const std::string& a, const std::string& b) {
    return table_walk(table, 0, {a, b}) >= 0 ? 1u : 0u;
  };
  std::vector<std::pair<std::string, std::uint64_t>> sums = {
      {"e[1]* e[1] + e[2]* e[2]", (term("e[1]*", "e[1]") + term("e[2]*", "e[2]")) % 2},
      {"e[1] e[1]* + f[1] f[1]*", (term("e[1]", "e[1]*") + term("f[1]", "f[1]*")) % 2},
      {"f[1]* f[1] + f[2]* f[2]", (term("f[1]*", "f[1]") + term("f[2]*", "f[2]")) % 2},
      {"e[2] e[2]* + f[2] f[2]*", (term("e[2]", "e[2]*") + term("f[2]", "f[2]*")) % 2},
      {"e[1]* f[1] + e[2]* f[2]", (term("e[1]*", "f[1]") + term("e[2]*", "f[2]")) % 2},
      {"e[1] e[2]* + f[1] f[2]*", (term("e[1]", "e[2]*") + term("f[1]", "f[2]*")) % 2},
      {"f[1]* e[1] + f[2]* e[2]", (term("f[1]*", "e[1]") + term("f[2]*", "e[2]")) % 2},
      {"e[2] e[1]* + f[2] f[1]*", (term("e[2]", "e[1]*") + term("f[2]", "f[1]*")) % 2},
  };
  report.sums = sums;
  std::vector<std::uint64_t> expected = {1, 1, 1, 1, 0, 0, 0, 0};
  report.sums_match = true;
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i].second != expected[i]) report.sums_match = false;

  ReconstructResult over_f2 = reconstruct_rep_graph(table);
  report.f2_rejection = over_f2.ok ? "(accepted)" : over_f2.rejection;
  report.f2_witness = over_f2.detail;

  ActionTable over_q = char2_action_table(Field::rationals());
  ReconstructResult q_result = reconstruct_rep_graph(over_q);
  report.rational_rejection = q_result.ok ? "(accepted)" : q_result.rejection;

  report.ok = report.sums_match && report.f2_rejection == "AssumptionIVViolation" &&
              report.rational_rejection == "RelationViolation";
  return report;
}

}  // namespace wlpa
