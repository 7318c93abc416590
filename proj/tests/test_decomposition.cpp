#include "doctest.h"

#include <random>
#include <set>

#include "constructions.hpp"
#include "decomposition.hpp"
#include "errors.hpp"

using namespace mcg;

namespace {
WeightedGraph cat(const char* name) { return catalog(name).instance.graph(); }
} // namespace

TEST_CASE("bowtie splits into two triangle blocks at the shared node") {
  BlockDecomposition b = block_decomposition(cat("BOWTIE"));
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.cut_nodes == std::vector<std::string>{"c"});
  CHECK(b.nonbipartite_count == 2);
  for (const Block& blk : b.blocks) {
    CHECK(blk.node_indices.size() == 3);
    CHECK(blk.edge_indices.size() == 3);
    CHECK(!blk.bipartite);
  }
  // every block-tree edge touches the one cut node
  for (const auto& [block_ix, cut] : b.tree_edges) CHECK(cut == "c");
  CHECK(b.tree_edges.size() == 2);
}

TEST_CASE("2-connected graphs are a single block") {
  for (const char* name : {"C4", "K4", "K33", "PRISM", "GREM", "GSTAR"}) {
    BlockDecomposition b = block_decomposition(cat(name));
    CHECK(b.blocks.size() == 1);
    CHECK(b.cut_nodes.empty());
  }
}

TEST_CASE("a path graph has one block per edge") {
  Instance inst = parse_instance(R"({"type":"graph","nodes":["a","b","c"],
    "edges":[{"id":"e1","u":"a","v":"b","w":"1"},{"id":"e2","u":"b","v":"c","w":"1"}]})");
  BlockDecomposition b = block_decomposition(inst.graph());
  CHECK(b.blocks.size() == 2);
  CHECK(b.cut_nodes == std::vector<std::string>{"b"});
  for (const Block& blk : b.blocks) CHECK(blk.bipartite);
}

TEST_CASE("tight cut decomposition of GREM gives two bricks and one brace") {
  TightCutTree t = tight_cut_decomposition(cat("GREM"));
  CHECK(t.bricks == 2);
  CHECK(t.braces == 1);
  REQUIRE(t.leaves.size() == 3);
  std::multiset<std::pair<int, int>> shapes; // (nodes, edges) of brick leaves
  int braces = 0;
  for (const LeafSignature& leaf : t.leaves) {
    if (leaf.brick) shapes.insert({leaf.nodes, leaf.edges});
    else {
      ++braces;
      CHECK(leaf.nodes == 4);
      CHECK(leaf.edges == 12);
    }
  }
  CHECK(braces == 1);
  CHECK(shapes == std::multiset<std::pair<int, int>>{{4, 9}, {4, 9}});
}

TEST_CASE("bricks and braces at the bottom of the catalog") {
  TightCutTree k4 = tight_cut_decomposition(cat("K4"));
  CHECK(k4.bricks == 1);
  CHECK(k4.braces == 0);
  TightCutTree c4 = tight_cut_decomposition(cat("C4"));
  CHECK(c4.bricks == 0);
  CHECK(c4.braces == 1);
  TightCutTree k33 = tight_cut_decomposition(cat("K33"));
  CHECK(k33.bricks == 0);
  CHECK(k33.braces == 1);
  TightCutTree gstar = tight_cut_decomposition(cat("GSTAR"));
  CHECK(gstar.bricks == 1);
  CHECK(gstar.braces == 0);
}

TEST_CASE("leaf signatures are invariant under the cut choice") {
  WeightedGraph grem = cat("GREM");
  TightCutTree reference = tight_cut_decomposition(grem);
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    std::mt19937 rng(seed);
    CutChooser chooser = [&rng](std::size_t count) {
      return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    };
    TightCutTree t = tight_cut_decomposition(grem, tight_cut_budget(), chooser);
    CHECK(t.bricks == reference.bricks);
    CHECK(t.braces == reference.braces);
    CHECK(t.leaves == reference.leaves);
  }
}

TEST_CASE("tight cut decomposition needs a matching covered graph") {
  CHECK_THROWS_AS(tight_cut_decomposition(cat("K3")), not_applicable_error);
  CHECK_THROWS_AS(tight_cut_decomposition(cat("BOWTIE")), not_applicable_error);
}
