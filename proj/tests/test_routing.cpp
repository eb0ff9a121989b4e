// Copyright 2026 The paritysynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include "paritysynth/errors.hpp"
#include "paritysynth/random.hpp"
#include "paritysynth/routing.hpp"
#include "paritysynth/semantics.hpp"
#include "paritysynth/synth_unconstrained.hpp"
#include "test_util.hpp"

using namespace paritysynth;

TEST_CASE("A conforming circuit needs no SWAPs") {
  Circuit c(3);
  c.cnot(0, 1).rz(0.3, 1).cnot(1, 2);
  const RoutingReport r = route_swaps(c, line_graph(3), identity_mapping(3));
  CHECK(r.swaps_inserted == 0);
  REQUIRE(r.alpha.has_value());
  CHECK(*r.alpha == 1.0);
  CHECK(r.routed_circuit == c);
}

TEST_CASE("A distance-two CNOT on a line costs one SWAP") {
  Circuit c(3);
  c.cnot(0, 2);
  const RoutingReport r = route_swaps(c, line_graph(3), identity_mapping(3));
  CHECK(r.swaps_inserted == 1);
  CHECK(r.c_routed == 4);
  CHECK(*r.alpha == 4.0);
  CHECK(r.final_mapping == Mapping{1, 0, 2});
  CHECK(routing_equivalent(c, r));
}

TEST_CASE("Routing rejects bad mappings and SWAP input") {
  Circuit c(3);
  c.cnot(0, 2);
  CHECK_THROWS_AS(route_swaps(c, line_graph(3), Mapping{0, 0, 1}), MappingError);
  CHECK_THROWS_AS(route_swaps(c, line_graph(3), Mapping{0, 1}), MappingError);
  Circuit s(3);
  s.swap(0, 1);
  CHECK_THROWS_AS(route_swaps(s, line_graph(3), identity_mapping(3)), UnsupportedGateError);
  CHECK_THROWS_AS(route_swaps(c, line_graph(4), identity_mapping(4)), DimensionError);
}

TEST_CASE("overhead_factor") {
  CHECK(overhead_factor(40, 10) == 4.0);
  CHECK(overhead_factor(10, 10) == 1.0);
  CHECK_THROWS_AS(overhead_factor(3, 0), UndefinedOverheadError);
}

TEST_CASE("Routed synthesized circuits are equivalent and conforming") {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.below(8);
    const std::size_t max_g = std::min<std::size_t>((std::size_t{1} << n) - 1, 40);
    const PhasePolynomial p = random_polynomial(n, 1 + rng.below(max_g), rng);
    const Circuit c = synth_recursive(p).circuit;
    for (const char* family : {"line", "grid", "heavyhex", "ring"}) {
      const CouplingGraph g = graph_of_size(family, n);
      Mapping m = identity_mapping(n);
      if (trial % 2 == 1) std::reverse(m.begin(), m.end());
      const RoutingReport r = route_swaps(c, g, m);
      INFO("n=" << n << " graph=" << g.name());
      CHECK(check_connectivity(expand_swaps(r.routed_circuit), g).empty());
      CHECK(routing_equivalent(c, r));
      if (r.alpha) CHECK(*r.alpha >= 1.0);
    }
  }
}

TEST_CASE("Routing a circuit with Hadamards keeps them on the moved qubit") {
  Circuit c(3);
  c.cnot(0, 2).h(0).cnot(2, 0);
  const RoutingReport r = route_swaps(c, line_graph(3), identity_mapping(3));
  CHECK(check_connectivity(expand_swaps(r.routed_circuit), line_graph(3)).empty());
  // Logical 0 sits on physical 1 after the first SWAP.
  CHECK(r.routed_circuit.gates()[2] == Gate::h(1));
}
