#include <gtest/gtest.h>

#include "coxtwist/diagram.hpp"
#include "coxtwist/sphericity.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

CoxeterDiagram pair_inf() { return CoxeterDiagram::from_edges({"s", "t"}, {}); }

}  // namespace

TEST(Diagram, FromEdgesDefaultsToInfinity) {
  auto d = CoxeterDiagram::from_edges({"a", "b", "c"}, {{"a", "b", 3}});
  EXPECT_EQ(d.rank(), 3);
  EXPECT_EQ(d.order(0, 1), Order::finite(3));
  EXPECT_TRUE(d.order(0, 2).is_infinite());
  EXPECT_EQ(d.order(2, 2), Order::finite(1));
}

TEST(Diagram, RejectsBadMatrices) {
  EXPECT_THROW(CoxeterDiagram::from_edges({"a", "a"}, {}), ParseError);
  EXPECT_THROW(CoxeterDiagram::from_edges({"a", "b"}, {{"a", "b", 1}}), ParseError);
  EXPECT_THROW(CoxeterDiagram::from_edges({"a", "b"}, {{"a", "a", 3}}), ParseError);
  EXPECT_THROW(CoxeterDiagram::from_edges({"a", "b"}, {{"a", "z", 3}}), ParseError);
  std::vector<Order> m = {Order::finite(1), Order::finite(3), Order::finite(4), Order::finite(1)};
  EXPECT_THROW(CoxeterDiagram::from_matrix({"a", "b"}, m), ParseError);
}

TEST(Diagram, AdjacencyConventions) {
  auto d = CoxeterDiagram::from_edges({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}});
  EXPECT_EQ(d.bonded(1), d.set_of({"a", "c"}));
  EXPECT_EQ(d.linked(1), d.set_of({"c"}));
  EXPECT_EQ(d.commuting(1), d.set_of({"a"}));
  // a and c are joined by infinity: a Coxeter-graph edge, not a nerve bond
  EXPECT_TRUE(d.linked(0).contains(2));
  EXPECT_FALSE(d.bonded(0).contains(2));
}

TEST(Diagram, SetOfUnknownName) {
  auto d = fixture("e14").diagram;
  EXPECT_THROW(d.set_of({"a", "zz"}), DomainError);
}

TEST(Diagram, RestrictTo) {
  auto d = fixture("e15").diagram;
  std::vector<int> map;
  auto r = d.restrict_to(gs(d, {"b", "e", "g"}), &map);
  EXPECT_EQ(r.rank(), 3);
  EXPECT_EQ(r.names(), (std::vector<std::string>{"b", "e", "g"}));
  EXPECT_EQ(r.order(0, 1), Order::finite(3));
  EXPECT_EQ(d.name(map[2]), "g");
}

TEST(Components, Examples) {
  auto e14 = fixture("e14").diagram;
  EXPECT_EQ(components(e14, gs(e14, {"b1", "b2", "b3", "c"})), std::vector<GenSet>{gs(e14, {"b1", "b2", "b3", "c"})});
  auto tri = fixture("e1b3").diagram;
  EXPECT_EQ(components(tri, gs(tri, {"x", "y", "z"})).size(), 3u);
  EXPECT_TRUE(components(tri, GenSet{}).empty());
  EXPECT_TRUE(is_connected(tri, tri.all()));
  EXPECT_FALSE(is_connected(tri, gs(tri, {"x", "y"})));
}

TEST(Perp, Examples) {
  auto d = fixture("e14").diagram;
  EXPECT_EQ(perp(d, GenSet{}), d.all());
  // every edge of this fixture carries 2
  EXPECT_EQ(perp(d, gs(d, {"a"})), gs(d, {"b1", "b2", "b3"}));
  auto p = CoxeterDiagram::from_edges({"s", "t"}, {{"s", "t", 2}});
  EXPECT_TRUE(perp(p, GenSet::single(0)).contains(1));
}

TEST(SigmaNu, Examples) {
  auto e14 = fixture("e14").diagram;
  auto s = sigma_nu_split(e14, gs(e14, {"a", "b1"}));
  EXPECT_EQ(s.sigma, gs(e14, {"a", "b1"}));
  EXPECT_TRUE(s.nu.empty());
  auto e10 = fixture("e10").diagram;
  auto t = sigma_nu_split(e10, gs(e10, {"a1", "a2", "a3", "a4"}));
  EXPECT_EQ(t.sigma, gs(e10, {"a1", "a2"}));
  EXPECT_EQ(t.nu, gs(e10, {"a3", "a4"}));
  auto z = sigma_nu_split(e10, GenSet{});
  EXPECT_TRUE(z.sigma.empty() && z.nu.empty());
}

TEST(SigmaNu, InfinitePairIsOneInfiniteComponent) {
  auto d = pair_inf();
  EXPECT_EQ(irreducible_components(d, d.all()).size(), 1u);
  EXPECT_EQ(sigma_nu_split(d, d.all()).nu, d.all());
}

TEST(SphericalProduct, Examples) {
  auto e15 = fixture("e15").diagram;
  EXPECT_TRUE(is_spherical_product(e15, gs(e15, {"b", "d", "e"})));
  EXPECT_FALSE(is_spherical_product(e15, GenSet{}));
  EXPECT_FALSE(is_spherical_product(pair_inf(), pair_inf().all()));
  auto e10 = fixture("e10").diagram;
  EXPECT_TRUE(is_spherical_product(e10, gs(e10, {"a1", "a2", "a3", "a4"})));
}

TEST(SphericalProduct, WitnessCoversU) {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto d = random_connected(rng, 5, 0.5, {2, 2, 3, 4});
    for (GenSet u : all_subsets(d)) {
      auto w = spherical_product_witness(d, u);
      ASSERT_EQ(w.has_value(), is_spherical_product(d, u));
      if (!w) continue;
      EXPECT_TRUE(is_spherical(d, *w));
      EXPECT_TRUE((u - *w).subset_of(perp(d, *w)));
    }
  }
}

TEST(SphericalProduct, AgreesWithExhaustiveSigma) {
  std::mt19937 rng(12);
  for (int i = 0; i < 60; ++i) {
    auto d = random_connected(rng, 6, 0.5, {2, 2, 3, 4, 5});
    const auto sph = bf_spherical(d);
    for (GenSet u : all_subsets(d)) ASSERT_EQ(is_spherical_product(d, u), bf_spherical_product(d, u, sph));
  }
}
