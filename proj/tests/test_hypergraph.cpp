#include <doctest.h>

#include <random>

#include "hcm/errors.hpp"
#include "hcm/hypergraph.hpp"
#include "test_util.hpp"

using namespace hcm;
using hcm::testing::t1;

TEST_CASE("cut values on the four-node instance") {
  const Hypergraph h = t1();
  CHECK(h.cut_value(NodeSet{0}) == doctest::Approx(2.0));
  CHECK(h.cut_value(NodeSet{}) == 0.0);
  CHECK(h.cut_value(NodeSet{0, 3}) == doctest::Approx(2.0));
  CHECK(h.cut_value(NodeSet{0, 1, 2, 3}) == 0.0);
}

TEST_CASE("pi-expansion on the four-node instance") {
  const Hypergraph h = t1();
  const NodeWeights pi = NodeWeights::uniform(4);
  CHECK(pi_expansion(h, pi, {0, 3}) == doctest::Approx(1.0));
  CHECK(pi_expansion(h, pi, {0, 1}) == doctest::Approx(1.5));
  CHECK(pi_expansion(h, pi, {0}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(pi_expansion(h, pi, {}), Error);
  CHECK_THROWS_AS(pi_expansion(h, pi, {0, 1, 2, 3}), Error);
}

TEST_CASE("expansion is symmetric under complement") {
  std::mt19937_64 rng(11);
  const Hypergraph h = hcm::testing::random_hypergraph(
      rng, 7, 9, 5, [&](int k) { return hcm::testing::random_splitting(rng, k); });
  const NodeWeights pi = NodeWeights::uniform(h.num_nodes());
  for (int mask = 1; mask < (1 << h.num_nodes()) - 1; ++mask) {
    NodeSet s;
    for (int v = 0; v < h.num_nodes(); ++v) {
      if (mask & (1 << v)) s.push_back(v);
    }
    const NodeSet sbar = complement_set(s, h.num_nodes());
    CHECK(pi_expansion(h, pi, s) ==
          doctest::Approx(pi_expansion(h, pi, sbar)).epsilon(1e-12));
  }
}

TEST_CASE("generalized degrees") {
  CHECK(generalized_degrees(t1()).values() == std::vector<double>{2.0, 2.0, 2.0, 2.0});

  SplittingSpec dl;
  dl.kind = SplittingSpec::Kind::DeltaLinear;
  dl.param = 2.0;
  const Hypergraph single = Hypergraph::with_spec(3, {{0, 1, 2}}, {1.0}, dl);
  CHECK(generalized_degrees(single).values() == std::vector<double>{1.0, 1.0, 1.0});

  SplittingSpec aon;
  const Hypergraph isolated = Hypergraph::with_spec(6, {{0, 1, 2}}, {1.0}, aon);
  CHECK_THROWS_AS(generalized_degrees(isolated), Error);
  try {
    generalized_degrees(isolated);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IsolatedNode);
  }
}

TEST_CASE("scaling edge weights scales cuts and keeps argmins") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = hcm::testing::random_hypergraph(
        rng, 6, 7, 4, [&](int k) { return hcm::testing::random_splitting(rng, k); },
        true);
    const NodeWeights pi = NodeWeights::uniform(h.num_nodes());
    const double c = 0.5 + (trial % 5);
    const Hypergraph scaled = h.scaled(c);

    double best = 1e300, best_scaled = 1e300;
    int arg = -1, arg_scaled = -1;
    for (int mask = 1; mask < (1 << h.num_nodes()) - 1; ++mask) {
      NodeSet s;
      for (int v = 0; v < h.num_nodes(); ++v) {
        if (mask & (1 << v)) s.push_back(v);
      }
      const double phi = pi_expansion(h, pi, s);
      const double phi_scaled = pi_expansion(scaled, pi, s);
      CHECK(phi_scaled == doctest::Approx(c * phi).epsilon(1e-12));
      if (phi < best) {
        best = phi;
        arg = mask;
      }
      if (phi_scaled < best_scaled) {
        best_scaled = phi_scaled;
        arg_scaled = mask;
      }
    }
    CHECK(arg == arg_scaled);
  }
}

TEST_CASE("normalization brings both minima to one") {
  SplittingSpec aon;
  const Hypergraph h =
      Hypergraph::with_spec(4, {{0, 1}, {1, 2}, {2, 3}}, {0.25, 0.5, 4.0}, aon);
  const NodeWeights pi({3.0, 6.0, 9.0, 3.0});
  const NormalizedInstance normalized = normalize(h, pi);
  CHECK(normalized.h.min_cut_penalty() == doctest::Approx(1.0));
  CHECK(normalized.pi.min_value() == doctest::Approx(1.0));

  const NodeSet s{0, 1};
  const double phi_input = pi_expansion(h, pi, s);
  const double phi_norm = pi_expansion(normalized.h, normalized.pi, s);
  CHECK(normalized.scale.expansion_to_input(phi_norm) ==
        doctest::Approx(phi_input).epsilon(1e-12));
}

TEST_CASE("connected components and restriction") {
  SplittingSpec aon;
  const Hypergraph h =
      Hypergraph::with_spec(7, {{0, 1}, {1, 2}, {4, 5, 6}}, {1.0, 1.0, 1.0}, aon);
  const auto components = connected_components(h);
  CHECK(components.size() == 3);  // {0,1,2}, {3}, {4,5,6}
  const ComponentRestriction restriction = largest_component(h);
  CHECK(restriction.reduced);
  CHECK(restriction.h.num_nodes() == 3);
  CHECK(restriction.kept_nodes == std::vector<int>{0, 1, 2});
}
