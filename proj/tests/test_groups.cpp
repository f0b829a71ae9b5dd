#include <map>
#include <set>

#include "doctest.h"
#include "wadefect/catalog.hpp"
#include "wadefect/errors.hpp"
#include "wadefect/finite_groups.hpp"

using namespace wadefect;

namespace {

// Naive closure: multiply everything by everything until nothing new appears.
std::set<Element> naive_closure(const CayleyGroup& g, const std::vector<Element>& seed) {
  std::set<Element> s(seed.begin(), seed.end());
  s.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) grew |= s.insert(g.mul(a, b)).second;
  }
  return s;
}

FinAbInvariants inv(std::initializer_list<long> factors) {
  FinAbInvariants out;
  for (long f : factors) out.factors.emplace_back(f);
  return out;
}

std::size_t divisor_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST_CASE("permutation groups have the expected orders") {
  const std::map<std::string, std::size_t> orders{{"klein", 4}, {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}};
  for (const auto& [name, n] : orders) CHECK(named_group(name)->order() == n);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(named_group("C" + std::to_string(n))->order() == n);
}

TEST_CASE("BFS enumeration: identity first, words evaluate to their element") {
  for (const auto& name : test_group_names()) {
    const auto g = named_group(name);
    CHECK(g->identity() == 0);
    CHECK(g->word(0).empty());
    for (Element x = 0; x < g->order(); ++x) {
      CHECK(g->evaluate(g->word(x)) == x);
      CHECK(g->mul(x, g->inverse(x)) == 0);
    }
  }
}

TEST_CASE("BFS order for a small example") {
  // S3 from a 3-cycle r and a transposition s: e, r, s, r^2, rs, ...
  const auto g = named_group("S3");
  const auto r = g->generator_indices()[0], s = g->generator_indices()[1];
  CHECK(r == 1);
  CHECK(s == 2);
  CHECK(g->mul(r, r) == 3);
  CHECK(g->mul(r, s) == 4);
  CHECK(g->mul(s, r) == 5);
}

TEST_CASE("element orders of Q8") {
  const auto g = named_group("Q8");
  std::map<std::size_t, int> count;
  for (Element x = 0; x < g->order(); ++x) ++count[g->element_order(x)];
  CHECK(count == std::map<std::size_t, int>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("subgroup closure matches naive closure") {
  for (const auto& name : test_group_names()) {
    const auto g = named_group(name);
    for (Element a = 0; a < g->order(); ++a)
      for (Element b = a; b < g->order(); ++b) {
        const auto h = subgroup_closure(*g, {a, b});
        const auto naive = naive_closure(*g, {a, b});
        CHECK(std::set<Element>(h.elements.begin(), h.elements.end()) == naive);
        CHECK(subgroup_closure(*g, h.generators) == h);
      }
  }
}

TEST_CASE("subgroup counts") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> counts{
      {"klein", {5, 4}}, {"S3", {6, 5}}, {"D4", {10, 7}}, {"Q8", {6, 5}}, {"A4", {10, 8}}};
  for (const auto& [name, c] : counts) {
    const auto g = named_group(name);
    CAPTURE(name);
    CHECK(all_subgroups(*g).size() == c.first);
    CHECK(cyclic_subgroups(*g).size() == c.second);
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto g = named_group("C" + std::to_string(n));
    CHECK(all_subgroups(*g).size() == divisor_count(n));
    CHECK(cyclic_subgroups(*g).size() == divisor_count(n));
  }
}

TEST_CASE("every enumerated subgroup is a subgroup; cyclicity by brute force") {
  for (const auto& name : test_group_names()) {
    const auto g = named_group(name);
    for (const auto& h : all_subgroups(*g)) {
      CHECK(is_subgroup(*g, h));
      bool has_generator = false;
      for (auto x : h.elements) has_generator |= g->element_order(x) == h.order();
      CHECK(is_cyclic(*g, h) == has_generator);
    }
  }
}

TEST_CASE("normality and conjugation in S3") {
  const auto g = named_group("S3");
  int normal = 0;
  for (const auto& h : all_subgroups(*g)) {
    normal += is_normal(*g, h);
    for (Element x = 0; x < g->order(); ++x) {
      const auto c = conjugate_subgroup(*g, h, x);
      CHECK(c.order() == h.order());
      if (is_normal(*g, h)) CHECK(c == h);
    }
  }
  CHECK(normal == 3);  // trivial, A3, whole group
}

TEST_CASE("abelianization") {
  CHECK(abelianization(*named_group("klein")) == inv({2, 2}));
  CHECK(abelianization(*named_group("S3")) == inv({2}));
  CHECK(abelianization(*named_group("D4")) == inv({2, 2}));
  CHECK(abelianization(*named_group("Q8")) == inv({2, 2}));
  CHECK(abelianization(*named_group("A4")) == inv({3}));
  CHECK(abelianization(*named_group("C1")) == inv({}));
  CHECK(abelianization(*named_group("C12")) == inv({12}));
}

TEST_CASE("abelianization order is the index of the derived subgroup") {
  for (const auto& name : test_group_names()) {
    const auto g = named_group(name);
    std::vector<Element> commutators;
    for (Element a = 0; a < g->order(); ++a)
      for (Element b = 0; b < g->order(); ++b)
        commutators.push_back(g->mul(g->mul(a, b), g->mul(g->inverse(a), g->inverse(b))));
    const auto derived = naive_closure(*g, commutators);
    CHECK(abelianization(*g).order() == Integer(static_cast<unsigned long>(g->order() / derived.size())));
  }
}

TEST_CASE("subgroup as group keeps the multiplication") {
  const auto g = named_group("A4");
  for (const auto& h : all_subgroups(*g)) {
    const auto sub = subgroup_as_group(*g, h);
    REQUIRE(sub.order() == h.order());
    for (std::size_t i = 0; i < h.order(); ++i)
      for (std::size_t j = 0; j < h.order(); ++j)
        CHECK(h.elements[sub.mul(i, j)] == g->mul(h.elements[i], h.elements[j]));
  }
}

TEST_CASE("table groups keep their indexing") {
  // Z/3 with identity at index 2
  const std::vector<std::vector<std::size_t>> t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  const auto g = CayleyGroup::from_table(t);
  CHECK(g.identity() == 2);
  CHECK(g.mul(0, 0) == 1);
  CHECK(g.generator_indices().size() == 3);
  const auto h = CayleyGroup::from_table_with_generators(t, {0});
  CHECK(h.generator_indices() == std::vector<Element>{0});
  CHECK(h.table() == t);
  CHECK_THROWS_AS(CayleyGroup::from_table_with_generators(t, {2}), GroupError);
}

TEST_CASE("invalid tables and permutations are rejected") {
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 1}, {0, 1}}), GroupError);
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 1}, {1}}), GroupError);
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 2}, {1, 0}}), GroupError);
  // Latin square with identity 0 that is not associative
  const std::vector<std::vector<std::size_t>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(CayleyGroup::from_table(loop), GroupError);
  CHECK_THROWS_AS(CayleyGroup::from_permutations({{0, 0, 1}}), GroupError);
  CHECK_THROWS_AS(CayleyGroup::from_permutations({{1, 0}, {1, 2, 0}}), GroupError);
  CHECK_THROWS_AS(CayleyGroup::from_permutations({{1, 2, 3, 4, 0}}, GroupLimits{3, 512}), GroupError);
  CHECK_THROWS_AS(subgroup_from_elements(*named_group("S3"), {0, 1}), GroupError);
}

TEST_CASE("named group lookup") {
  CHECK_THROWS_AS(named_group("C0"), LookupError);
  CHECK_THROWS_AS(named_group("C65"), LookupError);
  CHECK_THROWS_AS(named_group("S4"), LookupError);
  CHECK(named_group("C64")->order() == 64);
}
