#include <gtest/gtest.h>

#include "coxtwist/oracle.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

CoxeterDiagram path(std::vector<int> labels) {
  std::vector<std::string> names;
  std::vector<CoxeterDiagram::Edge> edges;
  for (std::size_t i = 0; i <= labels.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  for (std::size_t i = 0; i < labels.size(); ++i) edges.push_back({names[i], names[i + 1], labels[i]});
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = i + 2; k < names.size(); ++k) edges.push_back({names[i], names[k], 2});
  return CoxeterDiagram::from_edges(names, edges);
}

long long model_order(const FiniteModel& m) {
  long long n = 1;
  for (std::size_t f = 0; f < m.factors().size(); ++f) n *= static_cast<long long>(m.enumerate(f).elements.size());
  return n;
}

}  // namespace

TEST(Model, Orders) {
  auto a3 = path({3, 3});
  auto m = build_model(a3, a3.all());
  ASSERT_TRUE(m);
  EXPECT_EQ(model_order(*m), 24);
  auto b3 = path({4, 3});
  EXPECT_EQ(model_order(*build_model(b3, b3.all())), 48);
  auto h3 = path({5, 3});
  EXPECT_FALSE(build_model(h3, h3.all()).has_value());
  auto inf = CoxeterDiagram::from_edges({"s", "t"}, {});
  EXPECT_THROW(build_model(inf, inf.all()), DomainError);
}

TEST(Model, ClassicalTables) {
  EXPECT_EQ(classical_order({Family::A, 3}), 24);
  EXPECT_EQ(classical_order({Family::B, 4}), 384);
  EXPECT_EQ(classical_order({Family::D, 4}), 192);
  EXPECT_EQ(classical_order({Family::I2, 2, 5}), 10);
  EXPECT_EQ(positive_roots({Family::A, 3}), 6);
  EXPECT_EQ(positive_roots({Family::I2, 2, 3}), 3);
}

TEST(Longest, Lengths) {
  auto i3 = path({3});
  auto w = longest_element(*build_model(i3, i3.all()));
  EXPECT_EQ(w.length, 3);
  EXPECT_EQ(w.group_order, 6);
  auto a1 = CoxeterDiagram::from_edges({"s"}, {});
  auto m1 = *build_model(a1, a1.all());
  auto w1 = longest_element(m1);
  EXPECT_EQ(w1.length, 1);
  EXPECT_EQ(w1.element, m1.generator(0));
  auto a3 = path({3, 3});
  EXPECT_EQ(longest_element(*build_model(a3, a3.all())).length, 6);
}

TEST(Conjugation, Maps) {
  auto a3 = path({3, 3});
  auto m = *build_model(a3, a3.all());
  auto w = longest_element(m).element;
  auto c = conjugate_generators(a3, m, w);
  EXPECT_EQ(c, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(conjugate_generators(a3, m, m.identity()), (std::vector<int>{0, 1, 2}));
  auto i4 = path({4});
  auto m4 = *build_model(i4, i4.all());
  EXPECT_EQ(conjugate_generators(i4, m4, longest_element(m4).element), (std::vector<int>{0, 1}));
}

TEST(VerifyOmega, Fixtures) {
  auto ai = verify_omega(fixture("a_i").diagram);
  EXPECT_EQ(ai.mismatched, 0);
  EXPECT_GT(ai.passed, 0);
  auto e14 = verify_omega(fixture("e14").diagram);
  EXPECT_EQ(e14.mismatched, 0);
  auto inf = CoxeterDiagram::from_edges({"s", "t"}, {});
  auto r = verify_omega(inf);
  EXPECT_EQ(r.mismatched, 0);
  auto h3 = path({5, 3});
  auto rh = verify_omega(h3);
  EXPECT_EQ(rh.mismatched, 0);
  EXPECT_GT(rh.skipped, 0);
}
