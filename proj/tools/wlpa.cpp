// Command-line front end: one subcommand per library operation, JSON bodies
// on standard output. Exit codes: 0 success or positive decision, 1 negative
// decision, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wlpa/io.hpp"

namespace {

using wlpa::io::json;
namespace fs = std::filesystem;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wlpa::Error("NoSuchFile", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw wlpa::Error("BadFile", "cannot parse '" + path + "': " + ex.what());
  }
  return j;
}

wlpa::WeightedGraph load_graph(const std::string& path) {
  return wlpa::io::graph_from_json(read_json_file(path));
}

// Representation graphs are validated on load; pass enforce = false where the
// subcommand's whole point is reporting the validation outcome.
wlpa::RepGraph load_rep(const std::string& path, bool enforce = true) {
  json j = read_json_file(path);
  std::optional<wlpa::WeightedGraph> base;
  if (j.contains("graph_file")) {
    fs::path resolved = fs::path(path).parent_path() / j["graph_file"].get<std::string>();
    base = load_graph(resolved.string());
  }
  wlpa::RepGraph f = wlpa::io::rep_from_json(j, std::move(base));
  if (enforce) {
    wlpa::ValidationReport report = wlpa::validate(f);
    if (!report.ok)
      throw wlpa::Error("InvalidRepresentation",
                        "'" + path + "': " + report.issues.front().axiom + " at '" +
                            report.issues.front().vertex + "': " + report.issues.front().detail);
  }
  return f;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_edge_list(const wlpa::WeightedGraph& e, const std::string& csv) {
  std::vector<int> out;
  std::string id;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!id.empty()) out.push_back(e.edge_index(id));
      id.clear();
    } else {
      id += c;
    }
  }
  return out;
}

json issues_to_json(const wlpa::ValidationReport& report) {
  json issues = json::array();
  for (const auto& issue : report.issues) {
    json ji;
    ji["axiom"] = issue.axiom;
    ji["vertex"] = issue.vertex;
    ji["detail"] = issue.detail;
    issues.push_back(ji);
  }
  return issues;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"representation graphs of weighted graphs and their Leavitt path algebra modules"};
  app.require_subcommand(1);
  app.fallthrough();  // --field and --seed may follow the subcommand

  std::string field_name = "q";
  std::uint64_t seed = 0;
  app.add_option("--field", field_name, "coefficient field: q or fp:P")->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();

  std::string file, other, map_file, expr, vertex, point, partition_file, table_file;
  std::string cycle_csv, prefix_csv, sink_id, start_id, out_file, sidecar_file, root_id;
  int depth = 0, budget = 0;
  bool immersion_only = false, lenient = false, run_checks = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the representation-graph axioms");
  validate_cmd->add_option("-f,--file", file)->required();

  auto* act_cmd = app.add_subcommand("act", "act an algebra element on a basis vertex");
  act_cmd->add_option("-f,--file", file)->required();
  act_cmd->add_option("--vertex", vertex)->required();
  act_cmd->add_option("--expr", expr)->required();

  auto* relations_cmd = app.add_subcommand("relations", "verify the defining relations on V_F");
  relations_cmd->add_option("-f,--file", file)->required();

  auto* simple_cmd = app.add_subcommand("simple", "decide simplicity of V_F");
  simple_cmd->add_option("-f,--file", file)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "quotient by the similarity partition");
  minimize_cmd->add_option("-f,--file", file)->required();

  auto* equivalent_cmd = app.add_subcommand("equivalent", "decide the class equivalence");
  equivalent_cmd->add_option("-f,--file", file)->required();
  equivalent_cmd->add_option("-g,--other", other)->required();

  auto* quotient_of_cmd = app.add_subcommand("quotient-of", "decide whether G is a quotient of F");
  quotient_of_cmd->add_option("-f,--file", file)->required();
  quotient_of_cmd->add_option("-g,--other", other)->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by an admissible partition");
  quotient_cmd->add_option("-f,--file", file)->required();
  quotient_cmd->add_option("--partition", partition_file)->required();

  auto* universal_cmd = app.add_subcommand("universal", "truncated universal representation");
  universal_cmd->add_option("-f,--file", file)->required();
  universal_cmd->add_option("--root", root_id)->required();
  universal_cmd->add_option("--depth", depth)->required();

  auto* cover_cmd = app.add_subcommand("cover-check", "check a covering or immersion");
  cover_cmd->add_option("-f,--file", file)->required();
  cover_cmd->add_option("-g,--other", other)->required();
  cover_cmd->add_option("-m,--map", map_file)->required();
  cover_cmd->add_flag("--immersion", immersion_only, "check the immersion condition only");

  auto* graded_cmd = app.add_subcommand("graded", "decide gradedness of V_F");
  graded_cmd->add_option("-f,--file", file)->required();

  auto* chen_rational_cmd = app.add_subcommand("chen-rational", "rational Chen graph");
  chen_rational_cmd->add_option("-f,--file", file)->required();
  chen_rational_cmd->add_option("--cycle", cycle_csv)->required();
  chen_rational_cmd->add_option("--depth", depth)->required();

  auto* chen_sink_cmd = app.add_subcommand("chen-sink", "sink Chen graph");
  chen_sink_cmd->add_option("-f,--file", file)->required();
  chen_sink_cmd->add_option("--sink", sink_id)->required();
  chen_sink_cmd->add_option("--depth", depth)->required();

  auto* chen_irrational_cmd = app.add_subcommand("chen-irrational", "irrational Chen graph");
  chen_irrational_cmd->add_option("-f,--file", file)->required();
  chen_irrational_cmd->add_option("--prefix", prefix_csv);
  chen_irrational_cmd->add_option("--depth", depth)->required();
  chen_irrational_cmd->add_option("--start", start_id);

  auto* chen_oracle_cmd = app.add_subcommand("chen-oracle", "action agreement oracle");
  chen_oracle_cmd->add_option("-f,--file", file)->required();
  chen_oracle_cmd->add_option("--cycle", cycle_csv);
  chen_oracle_cmd->add_option("--sink", sink_id);
  chen_oracle_cmd->add_option("--depth", depth)->required();
  chen_oracle_cmd->add_option("--budget", budget)->required();

  auto* branch_interval_cmd = app.add_subcommand("branch-interval", "interval branching system");
  branch_interval_cmd->add_option("-f,--file", file)->required();
  branch_interval_cmd->add_flag("--check", run_checks, "also sample the module relations");
  branch_interval_cmd->add_option("--out", out_file, "write the bare system to a file");

  auto* branch_from_cmd =
      app.add_subcommand("branch-from", "branching system of a representation graph");
  branch_from_cmd->add_option("-f,--file", file)->required();
  branch_from_cmd->add_flag("--check", run_checks, "also sample the module relations");
  branch_from_cmd->add_option("--out", out_file, "write the bare system to a file");

  auto* branch_act_cmd = app.add_subcommand("branch-act", "act on a delta function");
  branch_act_cmd->add_option("-x,--system", file)->required();
  branch_act_cmd->add_option("--point", point)->required();
  branch_act_cmd->add_option("--expr", expr)->required();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "representation graph from a table");
  reconstruct_cmd->add_option("--table", table_file)->required();
  reconstruct_cmd->add_flag("--lenient", lenient, "per-term vanishing even in characteristic 0");

  auto* char2_cmd = app.add_subcommand("char2-demo", "the exceptional characteristic fixture");
  (void)char2_cmd;

  auto* dot_cmd = app.add_subcommand("export-dot", "write a DOT rendering and a JSON sidecar");
  dot_cmd->add_option("-f,--file", file)->required();
  dot_cmd->add_option("--out", out_file)->required();
  dot_cmd->add_option("--sidecar", sidecar_file);

  CLI11_PARSE(app, argc, argv);

  try {
    wlpa::Field field = wlpa::Field::parse(field_name);

    if (validate_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file, /*enforce=*/false);
      wlpa::ValidationReport report = wlpa::validate(f);
      json out;
      out["ok"] = report.ok;
      out["issues"] = issues_to_json(report);
      emit(out);
      return report.ok ? 0 : 1;
    }

    if (act_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      std::vector<std::string> warnings;
      wlpa::AlgebraElement a = wlpa::io::parse_expr(expr, f.base(), field, &warnings);
      wlpa::ModuleVector x = wlpa::ModuleVector::basis(field, f.vertex_index(vertex));
      wlpa::ActResult r = wlpa::act(x, a, f);
      json out;
      out["result"] = wlpa::io::module_vector_to_json(f, r.vector);
      out["truncated"] = r.truncated;
      if (!warnings.empty()) out["warnings"] = warnings;
      emit(out);
      return 0;
    }

    if (relations_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::RelationReport report = wlpa::check_relations(f, field);
      json out;
      out["ok"] = report.ok;
      out["checked"] = report.checked;
      out["skipped"] = report.skipped;
      json violations = json::array();
      for (const auto& v : report.violations) {
        json jv;
        jv["relation"] = v.relation;
        jv["vertex"] = v.vertex;
        jv["detail"] = v.detail;
        violations.push_back(jv);
      }
      out["violations"] = violations;
      emit(out);
      return report.ok ? 0 : 1;
    }

    if (simple_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      bool simple = wlpa::is_simple_module(f);
      json out;
      out["irreducible"] = simple;
      emit(out);
      return simple ? 0 : 1;
    }

    if (minimize_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::RepGraph m = wlpa::minimize(f);
      json out;
      out["graph"] = wlpa::io::rep_to_json(m);
      out["vertices"] = m.vertex_count();
      emit(out);
      return 0;
    }

    if (equivalent_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::RepGraph g = load_rep(other);
      bool eq = wlpa::are_equivalent(f, g);
      json out;
      out["equivalent"] = eq;
      emit(out);
      return eq ? 0 : 1;
    }

    if (quotient_of_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::RepGraph g = load_rep(other);
      auto m = wlpa::find_morphism(f, g);
      json out;
      out["quotient_of"] = m.has_value();
      if (m) out["morphism"] = wlpa::io::morphism_to_json(f, g, *m);
      emit(out);
      return m ? 0 : 1;
    }

    if (quotient_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::Partition p = wlpa::io::partition_from_json(read_json_file(partition_file), f);
      wlpa::RepGraph q = wlpa::quotient(f, p);
      json out;
      out["graph"] = wlpa::io::rep_to_json(q);
      emit(out);
      return 0;
    }

    if (universal_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::UniversalRep u = wlpa::universal_representation(f, f.vertex_index(root_id), depth);
      json out;
      out["graph"] = wlpa::io::rep_to_json(u.graph);
      out["root"] = u.graph.vertex(u.root).id;
      out["vertices"] = u.graph.vertex_count();
      out["indecomposable_by_theorem"] = u.indecomposable_by_theorem;
      emit(out);
      return 0;
    }

    if (cover_cmd->parsed()) {
      wlpa::WeightedGraph f = load_graph(file);
      wlpa::WeightedGraph g = load_graph(other);
      wlpa::GraphHom hom = wlpa::io::hom_from_json(read_json_file(map_file), f, g);
      bool ok = immersion_only ? wlpa::is_immersion(f, g, hom) : wlpa::is_covering(f, g, hom);
      json out;
      out[immersion_only ? "immersion" : "covering"] = ok;
      emit(out);
      return ok ? 0 : 1;
    }

    if (graded_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      wlpa::GradingResult g = wlpa::grading(f);
      json out;
      out["graded"] = g.graded;
      if (g.graded) {
        json degrees = json::object();
        for (int v = 0; v < f.vertex_count(); ++v)
          degrees[f.vertex(v).id] = wlpa::io::degree_to_json(g.degrees[v]);
        out["degrees"] = degrees;
      } else {
        out["witness"] = wlpa::word_to_string(f.base(), g.witness);
        out["witness_base"] = f.vertex(g.witness_base).id;
      }
      emit(out);
      return g.graded ? 0 : 1;
    }

    if (chen_rational_cmd->parsed()) {
      wlpa::WeightedGraph e = load_graph(file);
      wlpa::ChenRational r = wlpa::rational_rep_graph(e, parse_edge_list(e, cycle_csv), depth);
      json out;
      out["graph"] = wlpa::io::rep_to_json(r.graph);
      json gamma = json::object();
      for (const auto& [v, path] : r.gamma)
        gamma[r.graph.vertex(v).id] = wlpa::io::ev_path_to_json(e, path);
      out["gamma"] = gamma;
      emit(out);
      return 0;
    }

    if (chen_sink_cmd->parsed()) {
      wlpa::WeightedGraph e = load_graph(file);
      wlpa::ChenSink s = wlpa::sink_rep_graph(e, e.vertex_index(sink_id), depth);
      json out;
      out["graph"] = wlpa::io::rep_to_json(s.graph);
      json alpha = json::object();
      for (const auto& [v, path] : s.alpha)
        alpha[s.graph.vertex(v).id] = wlpa::io::sink_path_to_json(e, path);
      out["alpha"] = alpha;
      emit(out);
      return 0;
    }

    if (chen_irrational_cmd->parsed()) {
      wlpa::WeightedGraph e = load_graph(file);
      int start = start_id.empty() ? (e.vertex_count() ? 0 : -1) : e.vertex_index(start_id);
      wlpa::RepGraph g = wlpa::irrational_rep_graph(e, parse_edge_list(e, prefix_csv), depth, start);
      json out;
      out["graph"] = wlpa::io::rep_to_json(g);
      emit(out);
      return 0;
    }

    if (chen_oracle_cmd->parsed()) {
      wlpa::WeightedGraph e = load_graph(file);
      wlpa::AgreementReport report =
          sink_id.empty()
              ? wlpa::chen_agreement_oracle(e, parse_edge_list(e, cycle_csv), depth, budget)
              : wlpa::sink_agreement_oracle(e, e.vertex_index(sink_id), depth, budget);
      json out;
      out["words_checked"] = report.words_checked;
      out["mismatches"] = report.mismatches;
      if (report.mismatches) out["details"] = report.details;
      emit(out);
      return report.mismatches == 0 ? 0 : 1;
    }

    if (branch_interval_cmd->parsed() || branch_from_cmd->parsed()) {
      wlpa::BranchingSystem sys;
      if (branch_interval_cmd->parsed()) {
        sys = wlpa::interval_branching(load_graph(file));
      } else {
        sys = wlpa::branching_from_rep_graph(load_rep(file));
      }
      wlpa::BranchingReport report = wlpa::validate_branching(sys);
      if (!out_file.empty()) {
        std::ofstream bare(out_file);
        if (!bare) throw wlpa::Error("NoSuchFile", "cannot write '" + out_file + "'");
        bare << wlpa::io::branching_to_json(sys).dump(2) << "\n";
      }
      json out;
      out["system"] = wlpa::io::branching_to_json(sys);
      out["valid"] = report.ok;
      if (!report.ok) out["issues"] = report.issues;
      if (run_checks) {
        wlpa::BranchingRelationReport rel = wlpa::check_branching_relations(sys, field, seed);
        json jrel;
        jrel["ok"] = rel.ok;
        jrel["checked"] = rel.checked;
        if (!rel.ok) jrel["violations"] = rel.violations;
        out["relations"] = jrel;
        emit(out);
        return report.ok && rel.ok ? 0 : 1;
      }
      emit(out);
      return report.ok ? 0 : 1;
    }

    if (branch_act_cmd->parsed()) {
      wlpa::BranchingSystem sys = wlpa::io::branching_from_json(read_json_file(file));
      std::vector<std::string> warnings;
      wlpa::AlgebraElement a = wlpa::io::parse_expr(expr, sys.base, field, &warnings);
      wlpa::BPoint x = sys.interval_carrier ? wlpa::BPoint{wlpa::Rational::from_string(point)}
                                            : wlpa::BPoint{sys.point_index(point)};
      wlpa::SupportedFunction r =
          wlpa::branching_act(wlpa::SupportedFunction::delta(field, x), a, sys);
      json out;
      out["result"] = wlpa::io::supported_function_to_json(sys, r);
      if (!warnings.empty()) out["warnings"] = warnings;
      emit(out);
      return 0;
    }

    if (reconstruct_cmd->parsed()) {
      wlpa::ActionTable table = wlpa::io::table_from_json(read_json_file(table_file));
      wlpa::ReconstructResult r = wlpa::reconstruct_rep_graph(table, lenient);
      json out;
      out["ok"] = r.ok;
      if (r.ok) {
        out["graph"] = wlpa::io::rep_to_json(r.graph);
      } else {
        out["rejection"] = r.rejection;
        out["detail"] = r.detail;
      }
      emit(out);
      return r.ok ? 0 : 1;
    }

    if (char2_cmd->parsed()) {
      wlpa::Char2Report report = wlpa::verify_char2_example();
      json out;
      json sums = json::array();
      for (const auto& [label, value] : report.sums) {
        json js;
        js["sum"] = label;
        js["value"] = value;
        sums.push_back(js);
      }
      out["sums"] = sums;
      out["sums_match"] = report.sums_match;
      out["f2_rejection"] = report.f2_rejection;
      out["f2_witness"] = report.f2_witness;
      out["rational_rejection"] = report.rational_rejection;
      out["ok"] = report.ok;
      emit(out);
      return report.ok ? 0 : 1;
    }

    if (dot_cmd->parsed()) {
      wlpa::RepGraph f = load_rep(file);
      std::ofstream dot(out_file);
      if (!dot) throw wlpa::Error("NoSuchFile", "cannot write '" + out_file + "'");
      dot << wlpa::io::to_dot(f);
      json out;
      out["dot"] = out_file;
      if (!sidecar_file.empty()) {
        std::ofstream side(sidecar_file);
        if (!side) throw wlpa::Error("NoSuchFile", "cannot write '" + sidecar_file + "'");
        side << wlpa::io::rep_to_json(f).dump(2) << "\n";
        out["sidecar"] = sidecar_file;
      }
      emit(out);
      return 0;
    }
  } catch (const wlpa::Error& ex) {
    json out;
    out["error"] = ex.code();
    out["message"] = ex.what();
    emit(out);
    return 2;
  } catch (const std::exception& ex) {
    json out;
    out["error"] = "Internal";
    out["message"] = ex.what();
    emit(out);
    return 2;
  }
  return 2;
}
