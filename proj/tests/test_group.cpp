#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "strongreal/group.hpp"

using namespace strongreal;

namespace {

std::vector<GroupElement> sl2_raw_gens(std::uint32_t q) {
  FieldRef f = Field::make_from_size(q);
  return {GroupElement(Matrix::from_ints(f, {{1, 1}, {0, 1}})),
          GroupElement(Matrix::from_ints(f, {{0, 1}, {-1, 0}}))};
}

Group alternating5() {
  std::vector<GroupElement> gens;
  for (std::uint16_t k = 3; k <= 5; ++k)
    gens.push_back(GroupElement(Permutation::three_cycle(5, 1, 2, k)));
  return Group::closure(std::move(gens));
}

std::multiset<std::uint64_t> class_sizes(const Group& g) {
  std::multiset<std::uint64_t> out;
  for (const ConjugacyClass& c : g.conjugacy().classes) out.insert(c.size());
  return out;
}

}  // namespace

TEST_CASE("SL2(3) closes to 24 elements from two generators") {
  Group g = Group::closure(sl2_raw_gens(3));
  CHECK(g.order() == 24);
  CHECK(g.identity().is_identity());
  CHECK(g.index_of(g.identity()).value() == 0);
}

TEST_CASE("A5 has the classical class structure") {
  Group g = alternating5();
  REQUIRE(g.order() == 60);
  CHECK(class_sizes(g) == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});
  // class_of is consistent with membership
  const ConjugacyData& cd = g.conjugacy();
  for (std::uint32_t ci = 0; ci < cd.classes.size(); ++ci)
    for (std::uint32_t m : cd.classes[ci].members) CHECK(cd.class_of[m] == ci);
  // representative is a member of its own class, of minimal canonical rank
  for (const ConjugacyClass& c : cd.classes) {
    auto it = std::min_element(c.members.begin(), c.members.end(),
                               [&](std::uint32_t a, std::uint32_t b) {
                                 return g.canonical_rank(a) < g.canonical_rank(b);
                               });
    CHECK(c.representative == *it);
  }
}

TEST_CASE("element orders divide the group order") {
  Group g = alternating5();
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const std::uint64_t n = g.order_of(i);
    CHECK(g.order() % n == 0);
    CHECK(n == g.element(i).order());  // cache agrees with direct computation
  }
}

TEST_CASE("inverse table is correct and involutive") {
  Group g = Group::closure(sl2_raw_gens(5));
  REQUIRE(g.order() == 120);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    CHECK((g.element(i) * g.element(g.inverse_index(i))).is_identity());
    CHECK(g.inverse_index(g.inverse_index(i)) == i);
  }
}

TEST_CASE("SL2(5) has a unique involution, the negated identity") {
  Group g = Group::closure(sl2_raw_gens(5));
  const auto& inv = g.involutions();
  REQUIRE(inv.size() == 1);
  FieldRef f = Field::make(5, 1);
  CHECK(g.element(inv[0]) == GroupElement(Matrix::from_ints(f, {{-1, 0}, {0, -1}})));
}

TEST_CASE("centralizer of a double transposition in A5 has order 4") {
  Group g = alternating5();
  // (1 2)(3 4) as 0-based images
  Permutation x = Permutation::from_one_based({2, 1, 4, 3, 5}, 0);
  auto cz = g.centralizer(GroupElement(x));
  CHECK(cz.size() == 4);
  for (std::uint32_t i : cz) CHECK(g.element(i) * GroupElement(x) == GroupElement(x) * g.element(i));
}

TEST_CASE("closure respects the element cap") {
  try {
    Group::closure(sl2_raw_gens(5), 50);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.partial_count == 51);
  }
}

TEST_CASE("enumeration order is deterministic") {
  Group a = Group::closure(sl2_raw_gens(5));
  Group b = Group::closure(sl2_raw_gens(5));
  REQUIRE(a.order() == b.order());
  for (std::uint32_t i = 0; i < a.order(); ++i) CHECK(a.element(i) == b.element(i));
}

TEST_CASE("canonical order sorts by byte key") {
  Group g = alternating5();
  const auto& co = g.canonical_order();
  REQUIRE(co.size() == g.order());
  for (std::size_t i = 1; i < co.size(); ++i)
    CHECK(g.element(co[i - 1]).key() < g.element(co[i]).key());
  // identity permutation has the lexicographically least image vector
  CHECK(g.element(co[0]).is_identity());
  for (std::uint32_t i = 0; i < g.order(); ++i) CHECK(co[g.canonical_rank(i)] == i);
}

TEST_CASE("conjugation permutes conjugacy classes") {
  Group g = Group::closure(sl2_raw_gens(5));
  const ConjugacyData& cd = g.conjugacy();
  std::mt19937 rng(2026);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(g.order() - 1));
  for (int rep = 0; rep < 200; ++rep) {
    const GroupElement& x = g.element(dist(rng));
    const GroupElement& h = g.element(dist(rng));
    CHECK(cd.class_of[g.require_index(x.conjugated_by(h))] ==
          cd.class_of[g.require_index(x)]);
  }
}

TEST_CASE("sampled products and inverses stay in the group") {
  Group g = alternating5();
  std::mt19937 rng(60601);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(g.order() - 1));
  for (int rep = 0; rep < 300; ++rep) {
    const GroupElement& x = g.element(dist(rng));
    const GroupElement& y = g.element(dist(rng));
    CHECK(g.contains(x * y));
    CHECK(g.contains(x.inverse()));
  }
  CHECK_FALSE(g.contains(GroupElement(Permutation::from_one_based({2, 1, 3, 4, 5}, 0))));
}

TEST_CASE("projective quotient of SL2(5) is PSL2(5)") {
  Group sl = Group::closure(sl2_raw_gens(5));
  Group psl = projective_quotient(sl, kDefaultClosureCap);
  CHECK(psl.order() == 60);
  CHECK(psl.identity().is_identity());
  CHECK(psl.index_of(psl.identity()).value() == 0);
  CHECK(class_sizes(psl) == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});  // PSL2(5) = A5
  // quotient of a quotient changes nothing: the scalar subgroup is now trivial
  Group again = projective_quotient(psl, kDefaultClosureCap);
  CHECK(again.order() == 60);
  CHECK(class_sizes(again) == class_sizes(psl));
}

TEST_CASE("projective quotient rejects permutation groups") {
  Group g = alternating5();
  CHECK_THROWS_AS(projective_quotient(g, kDefaultClosureCap), TypeMismatchError);
}

TEST_CASE("mixed generator shapes are rejected") {
  FieldRef f = Field::make(3, 1);
  std::vector<GroupElement> gens = {GroupElement(Matrix::identity(f, 2)),
                                    GroupElement(Permutation::identity(3))};
  CHECK_THROWS_AS(Group::closure(std::move(gens)), TypeMismatchError);
}

TEST_CASE("empty generator list yields the trivial group") {
  Group g = Group::closure({});
  CHECK(g.order() == 1);
  CHECK(g.identity().is_identity());
}
