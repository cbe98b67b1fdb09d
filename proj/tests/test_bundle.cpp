#include "mixcon/bundle.hpp"

#include <sstream>

#include "doctest.h"
#include "mixcon/connectivity.hpp"
#include "mixcon/graph.hpp"
#include "mixcon/iso.hpp"

using namespace mixcon;

namespace {

BundleSpec twisted_torus_spec() {
  BundleSpec spec(cycle_graph(4), cycle_graph(4));
  spec.set_twist(0, 3, Permutation{1, 2, 3, 0});
  return spec;
}

}  // namespace

TEST_CASE("product vertex encoding puts the first factor on top") {
  Graph prod = cartesian_product({complete_graph(2), path_graph(3)});
  // (a, b) -> a * 3 + b.
  CHECK(prod.vertex_count() == 6);
  CHECK(prod.has_edge(0, 3));  // (0,0) -- (1,0)
  CHECK(prod.has_edge(0, 1));  // (0,0) -- (0,1)
  CHECK(!prod.has_edge(0, 4));
  CHECK(prod.edge_count() == 2 * 2 + 1 * 3);
}

TEST_CASE("triple product of K2 is the 3-cube, label for label") {
  CHECK(cartesian_product({complete_graph(2), complete_graph(2),
                           complete_graph(2)}) == hypercube_graph(3));
  CHECK_THROWS_AS(cartesian_product({}), std::invalid_argument);
}

TEST_CASE("spec twists validate and canonicalize") {
  BundleSpec spec(cycle_graph(4), cycle_graph(4));
  CHECK_THROWS_AS(spec.set_twist(0, 2, Permutation{0, 1, 2, 3}),
                  std::invalid_argument);  // not a base edge
  CHECK_THROWS_AS(spec.set_twist(0, 1, Permutation{1, 0, 2, 3}),
                  std::invalid_argument);  // lone swap is no C4 automorphism
  CHECK_THROWS_AS(spec.set_twist(0, 1, Permutation{0, 1}),
                  std::invalid_argument);  // wrong size

  const Permutation rot{1, 2, 3, 0};
  spec.set_twist(1, 0, rot);  // stored canonically under (0, 1)
  CHECK(spec.twist(1, 0) == rot);
  CHECK(spec.twist(0, 1) == inverse_permutation(rot));
  CHECK(spec.nontrivial_twists().size() == 1);

  spec.set_twist(0, 1, Permutation{0, 1, 2, 3});  // identity clears
  CHECK(spec.nontrivial_twists().empty());
  CHECK(spec == BundleSpec(cycle_graph(4), cycle_graph(4)));
}

TEST_CASE("identity bundle equals the cartesian product exactly") {
  Bundle b(BundleSpec(cycle_graph(4), complete_graph(3)));
  CHECK(b.total() == cartesian_product({cycle_graph(4), complete_graph(3)}));
}

TEST_CASE("one swap over a triangle base turns the prism into K_{3,3}") {
  BundleSpec plain(cycle_graph(3), complete_graph(2));
  BundleSpec swapped = plain;
  swapped.set_twist(0, 2, Permutation{1, 0});

  Graph prism = Bundle(plain).total();
  Graph twisted = Bundle(swapped).total();

  CHECK(twisted == Graph(6, {Edge(0, 1), Edge(0, 2), Edge(0, 5), Edge(1, 3),
                             Edge(1, 4), Edge(2, 3), Edge(2, 4), Edge(3, 5),
                             Edge(4, 5)}));
  CHECK(isomorphic(twisted, complete_bipartite_graph(3, 3)));
  CHECK(!isomorphic(prism, twisted));
  CHECK(isomorphic(prism, cartesian_product({cycle_graph(3), complete_graph(2)})));
}

TEST_CASE("twisted torus shape and odd cycle") {
  Bundle b(twisted_torus_spec());
  const Graph& g = b.total();
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 32);
  CHECK(g.min_degree() == 4);
  CHECK(is_connected(g));
  // The shift twist creates 5-cycles; the plain torus is bipartite.
  CHECK(!isomorphic(g, cartesian_product({cycle_graph(4), cycle_graph(4)})));
}

TEST_CASE("encode, project and classify agree") {
  Bundle b(twisted_torus_spec());
  CHECK(b.encode(2, 3) == 11);
  CHECK(b.base_of(11) == 2);
  CHECK(b.fibre_label_of(11) == 3);

  const Edge inside(b.encode(2, 0), b.encode(2, 1));
  CHECK(b.classify(inside) == EdgeKind::Degenerate);
  CHECK(std::get<int>(b.project(inside)) == 2);

  const Edge across(b.encode(1, 3), b.encode(2, 3));
  CHECK(b.classify(across) == EdgeKind::Nondegenerate);
  CHECK(std::get<Edge>(b.project(across)) == Edge(1, 2));

  CHECK_THROWS_AS(b.classify(Edge(0, 11)), std::invalid_argument);
}

TEST_CASE("fibre views are exact copies") {
  Bundle b(twisted_torus_spec());
  for (int u = 0; u < b.base_size(); ++u) {
    FibreView view = b.fibre_view(u);
    CHECK(view.graph == b.spec().fibre());
    REQUIRE(view.total_ids.size() == 4);
    for (int f = 0; f < 4; ++f) CHECK(view.total_ids[f] == b.encode(u, f));
  }
}

TEST_CASE("lifting applies twists directionally") {
  Bundle b(twisted_torus_spec());

  // Identity edges leave the fibre label alone.
  CHECK(b.lift(Path{{0, 1, 2}}, b.encode(0, 2)) ==
        Path{{b.encode(0, 2), b.encode(1, 2), b.encode(2, 2)}});

  // Crossing 0 -> 3 applies the rotation, 3 -> 0 its inverse.
  CHECK(b.lift(Path{{0, 3}}, b.encode(0, 3)) ==
        Path{{b.encode(0, 3), b.encode(3, 0)}});
  CHECK(b.lift(Path{{3, 0}}, b.encode(3, 0)) ==
        Path{{b.encode(3, 0), b.encode(0, 3)}});

  CHECK_THROWS_AS(b.lift(Path{{0, 2}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(b.lift(Path{{0, 1}}, b.encode(1, 0)), std::invalid_argument);
}

TEST_CASE("bundle spec text round trip is canonical") {
  BundleSpec spec = twisted_torus_spec();
  const std::string text = format_bundle_spec(spec);
  BundleSpec again = parse_bundle_spec(text);
  CHECK(again == spec);
  CHECK(format_bundle_spec(again) == text);

  BundleSpec parsed = parse_bundle_spec(
      "{\"base\": {\"n\": 3, \"edges\": [[0,1],[1,2],[0,2]]},"
      " \"fibre\": {\"n\": 2, \"edges\": [[0,1]]},"
      " \"twists\": [{\"u\": 0, \"v\": 2, \"perm\": [1,0]}]}");
  CHECK(parsed.base() == cycle_graph(3));
  CHECK(parsed.fibre() == complete_graph(2));
  CHECK(parsed.twist(0, 2) == Permutation{1, 0});

  CHECK_THROWS_AS(parse_bundle_spec("{\"base\": {\"n\": 2, \"edges\": []}}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_bundle_spec("not json"), std::invalid_argument);
  // Twist that is no automorphism of the fibre.
  CHECK_THROWS_AS(
      parse_bundle_spec(
          "{\"base\": {\"n\": 3, \"edges\": [[0,1],[1,2],[0,2]]},"
          " \"fibre\": {\"n\": 3, \"edges\": [[0,1]]},"
          " \"twists\": [{\"u\": 0, \"v\": 1, \"perm\": [1,2,0]}]}"),
      std::invalid_argument);
}

TEST_CASE("degenerate preimages really are fibre boxes") {
  // The constructor itself asserts p^-1(edge) is fibre x K2; this just
  // pins the public counting consequence |E| = |V(B)||E(F)| + |E(B)||V(F)|.
  for (const BundleSpec& spec :
       {twisted_torus_spec(), BundleSpec(complete_graph(4), cycle_graph(5)),
        BundleSpec(complete_bipartite_graph(2, 3), complete_graph(3))}) {
    Bundle b(spec);
    const int nb = spec.base().vertex_count();
    const int mb = spec.base().edge_count();
    const int nf = spec.fibre().vertex_count();
    const int mf = spec.fibre().edge_count();
    CHECK(b.total().vertex_count() == nb * nf);
    CHECK(b.total().edge_count() == nb * mf + mb * nf);
  }
}
