#include "wlpa/io.hpp"

#include <cctype>

namespace wlpa::io {

json graph_to_json(const WeightedGraph& e) {
  json j;
  j["vertices"] = e.vertex_ids();
  json edges = json::array();
  for (const auto& edge : e.edges()) {
    json je;
    je["id"] = edge.id;
    je["src"] = e.vertex_id(edge.src);
    je["dst"] = e.vertex_id(edge.dst);
    je["weight"] = edge.weight;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

WeightedGraph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error("BadFile", "graph file needs a 'vertices' array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(v.get<std::string>());
  std::vector<std::tuple<std::string, std::string, std::string, int>> edges;
  for (const auto& je : j.value("edges", json::array())) {
    for (const char* key : {"id", "src", "dst"})
      if (!je.contains(key))
        throw Error("BadFile", std::string("graph edge missing field '") + key + "'");
    edges.emplace_back(je["id"].get<std::string>(), je["src"].get<std::string>(),
                       je["dst"].get<std::string>(), je.value("weight", 1));
  }
  return WeightedGraph::make(vertices, edges);
}

json rep_to_json(const RepGraph& f) {
  json j;
  j["graph"] = graph_to_json(f.base());
  json rv = json::array();
  for (const auto& v : f.vertices()) {
    json jv;
    jv["id"] = v.id;
    jv["image"] = f.base().vertex_id(v.image);
    rv.push_back(jv);
  }
  j["rvertices"] = rv;
  json re = json::array();
  for (const auto& edge : f.redges()) {
    json je;
    je["id"] = edge.id;
    je["src"] = f.vertex(edge.src).id;
    je["dst"] = f.vertex(edge.dst).id;
    je["edge"] = f.base().edge(edge.image.edge).id;
    je["tag"] = edge.image.tag;
    re.push_back(je);
  }
  j["redges"] = re;
  if (f.truncated()) {
    json fr = json::array();
    for (int v : f.frontier_vertices()) fr.push_back(f.vertex(v).id);
    j["frontier"] = fr;
  }
  return j;
}

RepGraph rep_from_json(const json& j, std::optional<WeightedGraph> base) {
  if (!base) {
    if (!j.contains("graph"))
      throw Error("BadFile", "representation file must embed 'graph' or be given a base graph");
    base = graph_from_json(j["graph"]);
  }
  std::vector<std::pair<std::string, std::string>> vertices;
  for (const auto& jv : j.value("rvertices", json::array())) {
    if (!jv.contains("id") || !jv.contains("image"))
      throw Error("BadFile", "rvertex needs 'id' and 'image'");
    vertices.emplace_back(jv["id"].get<std::string>(), jv["image"].get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  for (const auto& je : j.value("redges", json::array())) {
    for (const char* key : {"id", "src", "dst", "edge"})
      if (!je.contains(key))
        throw Error("BadFile", std::string("redge missing field '") + key + "'");
    edges.emplace_back(je["id"].get<std::string>(), je["src"].get<std::string>(),
                       je["dst"].get<std::string>(), je["edge"].get<std::string>(),
                       je.value("tag", 1));
  }
  std::vector<std::string> frontier;
  for (const auto& v : j.value("frontier", json::array())) frontier.push_back(v.get<std::string>());
  return RepGraph::make(std::move(*base), vertices, edges, frontier);
}

json partition_to_json(const RepGraph& f, const Partition& p) {
  json j = json::array();
  for (const auto& block : p.blocks()) {
    json b = json::array();
    for (int v : block) b.push_back(f.vertex(v).id);
    j.push_back(b);
  }
  return j;
}

Partition partition_from_json(const json& j, const RepGraph& f) {
  Partition p;
  p.block_of.assign(f.vertex_count(), -1);
  int block = 0;
  for (const auto& jb : j) {
    for (const auto& jv : jb) {
      int v = f.vertex_index(jv.get<std::string>());
      if (p.block_of[v] != -1)
        throw Error("BadPartition", "vertex '" + jv.get<std::string>() + "' listed twice");
      p.block_of[v] = block;
    }
    ++block;
  }
  for (int v = 0; v < f.vertex_count(); ++v)
    if (p.block_of[v] == -1)
      throw Error("BadPartition", "vertex '" + f.vertex(v).id + "' missing from the partition");
  p.block_count = block;
  return p;
}

json module_vector_to_json(const RepGraph& f, const ModuleVector& x) {
  json j = json::object();
  for (const auto& [v, c] : x.support) j[f.vertex(v).id] = c.to_string();
  return j;
}

json morphism_to_json(const RepGraph& f, const RepGraph& g, const Morphism& m) {
  json j;
  json vertices = json::object();
  for (int v = 0; v < f.vertex_count(); ++v)
    vertices[f.vertex(v).id] = g.vertex(m.vertex_map[v]).id;
  json edges = json::object();
  for (int e = 0; e < f.edge_count(); ++e) edges[f.redge(e).id] = g.redge(m.edge_map[e]).id;
  j["vertices"] = vertices;
  j["edges"] = edges;
  return j;
}

GraphHom hom_from_json(const json& j, const WeightedGraph& f, const WeightedGraph& g) {
  GraphHom hom;
  hom.vertex_map.assign(f.vertex_count(), -1);
  hom.edge_map.assign(f.edge_count(), -1);
  if (!j.contains("vertices") || !j.contains("edges"))
    throw Error("BadFile", "homomorphism file needs 'vertices' and 'edges' maps");
  for (const auto& [from, to] : j["vertices"].items())
    hom.vertex_map[f.vertex_index(from)] = g.vertex_index(to.get<std::string>());
  for (const auto& [from, to] : j["edges"].items())
    hom.edge_map[f.edge_index(from)] = g.edge_index(to.get<std::string>());
  for (int v = 0; v < f.vertex_count(); ++v)
    if (hom.vertex_map[v] < 0)
      throw Error("MalformedHomomorphism", "vertex '" + f.vertex_id(v) + "' has no image");
  for (int e = 0; e < f.edge_count(); ++e)
    if (hom.edge_map[e] < 0)
      throw Error("MalformedHomomorphism", "edge '" + f.edge(e).id + "' has no image");
  return hom;
}

namespace {

json interval_set_to_json(const IntervalSet& s) {
  json j = json::array();
  for (const auto& p : s.parts()) j.push_back({p.lo.to_string(), p.hi.to_string()});
  return j;
}

IntervalSet interval_set_from_json(const json& j) {
  std::vector<Interval> parts;
  for (const auto& jp : j)
    parts.push_back({Rational::from_string(jp[0].get<std::string>()),
                     Rational::from_string(jp[1].get<std::string>())});
  return IntervalSet::of(std::move(parts));
}

TaggedEdge tagged_edge_from_string(const WeightedGraph& e, const std::string& s) {
  auto open = s.find('[');
  auto close = s.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error("BadFile", "expected a tagged edge like e[1], got '" + s + "'");
  return {e.edge_index(s.substr(0, open)), std::stoi(s.substr(open + 1, close - open - 1))};
}

}  // namespace

json branching_to_json(const BranchingSystem& sys) {
  const WeightedGraph& e = sys.base;
  json j;
  j["graph"] = graph_to_json(e);
  j["carrier"] = sys.interval_carrier ? "intervals" : "points";
  if (sys.interval_carrier) {
    json d = json::object();
    for (int v = 0; v < e.vertex_count(); ++v)
      d[e.vertex_id(v)] = interval_set_to_json(sys.d_vertex_ivals[v]);
    j["D"] = d;
    json r = json::object(), dt = json::object(), g = json::object();
    for (const auto& t : build_hat_graph(e)) {
      std::string key = tagged_edge_to_string(e, t);
      if (auto it = sys.range_ivals.find(t); it != sys.range_ivals.end())
        r[key] = interval_set_to_json(it->second);
      if (auto it = sys.domain_ivals.find(t); it != sys.domain_ivals.end())
        dt[key] = interval_set_to_json(it->second);
      if (auto it = sys.g_affine.find(t); it != sys.g_affine.end())
        g[key] = {it->second.scale.to_string(), it->second.offset.to_string()};
    }
    j["R"] = r;
    j["Dtag"] = dt;
    j["g"] = g;
  } else {
    j["points"] = sys.points;
    json d = json::object();
    for (int v = 0; v < e.vertex_count(); ++v) {
      json pts = json::array();
      for (int p : sys.d_vertex_pts[v]) pts.push_back(sys.points[p]);
      d[e.vertex_id(v)] = pts;
    }
    j["D"] = d;
    json r = json::object(), dt = json::object(), g = json::object();
    for (const auto& t : build_hat_graph(e)) {
      std::string key = tagged_edge_to_string(e, t);
      if (auto it = sys.range_pts.find(t); it != sys.range_pts.end()) {
        json pts = json::array();
        for (int p : it->second) pts.push_back(sys.points[p]);
        r[key] = pts;
      }
      if (auto it = sys.domain_pts.find(t); it != sys.domain_pts.end()) {
        json pts = json::array();
        for (int p : it->second) pts.push_back(sys.points[p]);
        dt[key] = pts;
      }
      if (auto it = sys.g_points.find(t); it != sys.g_points.end()) {
        json map = json::object();
        for (const auto& [from, to] : it->second) map[sys.points[from]] = sys.points[to];
        g[key] = map;
      }
    }
    j["R"] = r;
    j["Dtag"] = dt;
    j["g"] = g;
  }
  return j;
}

BranchingSystem branching_from_json(const json& j) {
  BranchingSystem sys;
  sys.base = graph_from_json(j.at("graph"));
  const WeightedGraph& e = sys.base;
  std::string carrier = j.value("carrier", "points");
  sys.interval_carrier = carrier == "intervals";
  // bind defaulted lookups to locals: items() must not outlive its json
  json r_obj = j.value("R", json::object());
  json dtag_obj = j.value("Dtag", json::object());
  json g_obj = j.value("g", json::object());
  if (sys.interval_carrier) {
    sys.d_vertex_ivals.resize(e.vertex_count());
    for (const auto& [vid, jset] : j.at("D").items())
      sys.d_vertex_ivals[e.vertex_index(vid)] = interval_set_from_json(jset);
    for (const auto& [key, jset] : r_obj.items())
      sys.range_ivals[tagged_edge_from_string(e, key)] = interval_set_from_json(jset);
    for (const auto& [key, jset] : dtag_obj.items())
      sys.domain_ivals[tagged_edge_from_string(e, key)] = interval_set_from_json(jset);
    for (const auto& [key, jg] : g_obj.items()) {
      AffineMap g;
      g.scale = Rational::from_string(jg[0].get<std::string>());
      g.offset = Rational::from_string(jg[1].get<std::string>());
      sys.g_affine[tagged_edge_from_string(e, key)] = g;
    }
  } else {
    for (const auto& p : j.at("points")) sys.points.push_back(p.get<std::string>());
    sys.d_vertex_pts.resize(e.vertex_count());
    for (const auto& [vid, jset] : j.at("D").items()) {
      auto& pts = sys.d_vertex_pts[e.vertex_index(vid)];
      for (const auto& p : jset) pts.push_back(sys.point_index(p.get<std::string>()));
      std::sort(pts.begin(), pts.end());
    }
    for (const auto& [key, jset] : r_obj.items()) {
      auto& pts = sys.range_pts[tagged_edge_from_string(e, key)];
      for (const auto& p : jset) pts.push_back(sys.point_index(p.get<std::string>()));
      std::sort(pts.begin(), pts.end());
    }
    for (const auto& [key, jset] : dtag_obj.items()) {
      auto& pts = sys.domain_pts[tagged_edge_from_string(e, key)];
      for (const auto& p : jset) pts.push_back(sys.point_index(p.get<std::string>()));
      std::sort(pts.begin(), pts.end());
    }
    for (const auto& [key, jg] : g_obj.items()) {
      auto& map = sys.g_points[tagged_edge_from_string(e, key)];
      for (const auto& [from, to] : jg.items())
        map[sys.point_index(from)] = sys.point_index(to.get<std::string>());
    }
  }
  return sys;
}

json supported_function_to_json(const BranchingSystem& sys, const SupportedFunction& x) {
  json j = json::object();
  for (const auto& [p, c] : x.support) {
    std::string key = std::holds_alternative<int>(p) ? sys.points[std::get<int>(p)]
                                                     : std::get<Rational>(p).to_string();
    j[key] = c.to_string();
  }
  return j;
}

json table_to_json(const ActionTable& t) {
  json j;
  j["graph"] = graph_to_json(t.base);
  j["field"] = t.field.to_string();
  j["basis"] = t.basis;
  json action = json::object();
  for (std::size_t b = 0; b < t.basis.size(); ++b) {
    json row = json::object();
    for (const auto& [gen, target] : t.rows[b]) row[gen] = target < 0 ? "0" : t.basis[target];
    action[t.basis[b]] = row;
  }
  j["action"] = action;
  return j;
}

ActionTable table_from_json(const json& j) {
  ActionTable t;
  t.base = graph_from_json(j.at("graph"));
  t.field = Field::parse(j.value("field", "q"));
  for (const auto& b : j.at("basis")) t.basis.push_back(b.get<std::string>());
  t.rows.resize(t.basis.size());
  json action_obj = j.value("action", json::object());
  for (const auto& [bid, row] : action_obj.items()) {
    int b = t.basis_index(bid);
    for (const auto& [gen, target] : row.items()) {
      std::string target_id = target.get<std::string>();
      if (target_id == "0") continue;
      t.rows[b][gen] = t.basis_index(target_id);
    }
  }
  return t;
}

json ev_path_to_json(const WeightedGraph& e, const EvPeriodicPath& p) {
  json j;
  json prefix = json::array(), cycle = json::array();
  for (int edge : p.prefix) prefix.push_back(e.edge(edge).id);
  for (int edge : p.cycle) cycle.push_back(e.edge(edge).id);
  j["prefix"] = prefix;
  j["cycle"] = cycle;
  return j;
}

json sink_path_to_json(const WeightedGraph& e, const SinkPath& p) {
  json j = json::array();
  for (int edge : p.edges) j.push_back(e.edge(edge).id);
  return j;
}

json degree_to_json(const DegreeVector& d) {
  json j = json::array();
  for (long long c : d) j.push_back(c);
  return j;
}

namespace {

struct Token {
  enum Kind { ident, number, lbracket, rbracket, star, plus, minus, slash, end } kind;
  std::string text;
  std::size_t pos;
  bool space_before;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  bool space = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      ++i;
      continue;
    }
    Token t{Token::end, "", i, space};
    space = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::number;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '.' || text[j] == ','))
        ++j;
      t.kind = Token::ident;
      t.text = text.substr(i, j - i);
      i = j;
    } else {
      switch (c) {
        case '[': t.kind = Token::lbracket; break;
        case ']': t.kind = Token::rbracket; break;
        case '*': t.kind = Token::star; break;
        case '+': t.kind = Token::plus; break;
        case '-': t.kind = Token::minus; break;
        case '/': t.kind = Token::slash; break;
        default:
          throw Error("SyntaxError", "unexpected character '" + std::string(1, c) +
                                         "' at position " + std::to_string(i));
      }
      t.text = std::string(1, c);
      ++i;
    }
    tokens.push_back(t);
  }
  tokens.push_back({Token::end, "", text.size(), space});
  return tokens;
}

// one factor: a vertex idempotent or a (possibly ghost) tagged letter
struct Factor {
  bool is_vertex;
  int vertex = -1;
  Letter letter;
};

}  // namespace

AlgebraElement parse_expr(const std::string& text, const WeightedGraph& e, const Field& field,
                          std::vector<std::string>* warnings) {
  std::vector<Token> tokens = tokenize(text);
  std::size_t at = 0;
  auto peek = [&]() -> const Token& { return tokens[at]; };
  auto advance = [&]() -> const Token& { return tokens[at++]; };
  auto expect = [&](Token::Kind kind, const std::string& what) -> const Token& {
    if (peek().kind != kind)
      throw Error("SyntaxError",
                  "expected " + what + " at position " + std::to_string(peek().pos));
    return advance();
  };

  AlgebraElement out = AlgebraElement::zero(field);
  bool negative = false;
  if (peek().kind == Token::plus || peek().kind == Token::minus)
    negative = advance().kind == Token::minus;

  for (;;) {
    // term := (coeff '*')? factor+
    Scalar coeff = Scalar::one(field);
    if (peek().kind == Token::number) {
      std::string num = advance().text;
      std::string lit = num;
      if (peek().kind == Token::slash) {
        advance();
        lit += "/" + expect(Token::number, "a denominator").text;
      }
      coeff = Scalar::parse(field, lit);
      expect(Token::star, "'*' after a coefficient");
    }
    if (negative) coeff = -coeff;

    std::vector<Factor> factors;
    while (peek().kind == Token::ident) {
      const Token& id = advance();
      Factor factor{};
      if (peek().kind == Token::lbracket) {
        advance();
        const Token& tag = expect(Token::number, "a tag");
        expect(Token::rbracket, "']'");
        auto edge = e.try_edge(id.text);
        if (!edge) throw Error("UnknownEdge", "unknown edge '" + id.text + "'");
        int tag_value = std::stoi(tag.text);
        if (tag_value < 1 || tag_value > e.edge(*edge).weight)
          throw Error("BadTag", "tag " + tag.text + " outside 1..w(" + id.text + ")");
        factor.is_vertex = false;
        factor.letter = {{*edge, tag_value}, Direction::real};
        // a star glued to ']' marks a ghost letter; a spaced star cannot occur
        // here since coefficients precede their term
        if (peek().kind == Token::star && !peek().space_before) {
          advance();
          factor.letter.dir = Direction::ghost;
        }
      } else {
        auto vertex = e.try_vertex(id.text);
        if (!vertex) throw Error("UnknownIdentifier", "unknown identifier '" + id.text + "'");
        factor.is_vertex = true;
        factor.vertex = *vertex;
      }
      factors.push_back(factor);
    }
    if (factors.empty())
      throw Error("SyntaxError", "expected a factor at position " + std::to_string(peek().pos));

    // compose factors into one monomial; mismatches collapse to zero
    bool alive = true;
    std::optional<int> source;
    int target = -1;
    std::vector<Letter> letters;
    for (const auto& factor : factors) {
      int fsrc = factor.is_vertex ? factor.vertex : letter_source(e, factor.letter);
      if (!source) {
        source = fsrc;
        target = fsrc;
      } else if (target != fsrc) {
        alive = false;
        break;
      }
      if (!factor.is_vertex) {
        letters.push_back(factor.letter);
        target = letter_target(e, factor.letter);
      }
    }
    if (alive) {
      out.add_term(e, Monomial{*source, std::move(letters)}, coeff);
    } else if (warnings) {
      warnings->push_back("term at position " + std::to_string(tokens[at ? at - 1 : 0].pos) +
                          " is not composable; collapsed to zero");
    }

    if (peek().kind == Token::end) break;
    if (peek().kind == Token::plus || peek().kind == Token::minus) {
      negative = advance().kind == Token::minus;
      continue;
    }
    throw Error("SyntaxError", "expected '+', '-' or end of input at position " +
                                   std::to_string(peek().pos));
  }
  return out;
}

std::string to_dot(const RepGraph& f) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::string dot = "digraph F {\n";
  for (const auto& v : f.vertices()) {
    dot += "  \"" + v.id + "\" [xlabel=\"" + f.base().vertex_id(v.image) + "\"";
    bool frontier = f.is_frontier(f.vertex_index(v.id));
    if (frontier) dot += ", style=dashed";
    dot += "];\n";
  }
  for (const auto& edge : f.redges()) {
    const char* color = palette[edge.image.edge % 10];
    dot += "  \"" + f.vertex(edge.src).id + "\" -> \"" + f.vertex(edge.dst).id + "\" [label=\"" +
           std::to_string(edge.image.tag) + "\", color=\"" + std::string(color) +
           "\", tooltip=\"" + tagged_edge_to_string(f.base(), edge.image) + "\"];\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace wlpa::io
