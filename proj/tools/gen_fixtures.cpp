// Regenerates the JSON fixtures shipped under fixtures/ from the canonical
// builders used by the test suites.

#include <fstream>
#include <iostream>

#include "../tests/fixtures.hpp"
#include "wlpa/io.hpp"

namespace {

void write(const std::string& dir, const std::string& name, const wlpa::io::json& j) {
  std::ofstream out(dir + "/" + name);
  if (!out) {
    std::cerr << "cannot write " << dir << "/" << name << "\n";
    std::exit(1);
  }
  out << j.dump(2) << "\n";
  std::cout << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  using namespace fixtures;
  namespace io = wlpa::io;

  write(dir, "three_loops.json", io::graph_to_json(three_loops()));
  write(dir, "two_loops_w2.json", io::graph_to_json(two_loops_w2()));
  write(dir, "two_loops_w3.json", io::graph_to_json(two_loops_w3()));
  write(dir, "parallel_pair.json", io::graph_to_json(parallel_pair()));
  write(dir, "mixed.json",
        io::graph_to_json(wlpa::WeightedGraph::make({"p", "q", "r"}, {{"a", "p", "q", 1},
                                                                      {"b", "q", "p", 3},
                                                                      {"c", "q", "q", 2},
                                                                      {"d", "p", "r", 1}})));
  write(dir, "sink_graph.json", io::graph_to_json(sink_graph()));

  auto fs = lattice_fixtures();
  for (int i = 0; i < 7; ++i)
    write(dir, "F" + std::to_string(i + 1) + ".json", io::rep_to_json(fs[i]));
  write(dir, "l23.json", io::rep_to_json(l23_truncated()));
  write(dir, "rational_efg.json", io::rep_to_json(rational_efg_named()));
  write(dir, "irrational_ef.json", io::rep_to_json(irrational_truncated(three_loops(), 1)));
  write(dir, "parallel_cover.json", io::rep_to_json(parallel_cover()));
  write(dir, "parallel_folded.json", io::rep_to_json(parallel_folded()));
  write(dir, "grid_patch.json", io::rep_to_json(grid_patch()));
  write(dir, "char2_table.json", io::table_to_json(wlpa::char2_action_table(wlpa::Field::prime(2))));
  return 0;
}
