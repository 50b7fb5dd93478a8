#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "strongreal/field.hpp"

using namespace strongreal;

namespace {

// Independent modulus oracle: naive poly arithmetic over F_p, nothing shared
// with the library internals.
bool oracle_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      std::vector<std::uint32_t> g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = r;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      // long division f by g
      std::vector<std::uint32_t> rem = f;
      while (rem.size() >= g.size()) {
        std::uint32_t lead = rem.back();
        if (lead != 0) {
          const std::size_t shift = rem.size() - g.size();
          for (std::size_t i = 0; i < g.size(); ++i)
            rem[shift + i] = (rem[shift + i] + p - (lead * g[i]) % p) % p;
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < g.size()) break;
      }
      if (rem.empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> oracle_lex_min_modulus(std::uint32_t p, std::uint32_t k) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < k; ++i) total *= p;
  for (std::uint64_t r = 0; r < total; ++r) {
    std::vector<std::uint32_t> f(k + 1, 0);
    f[k] = 1;
    std::uint64_t t = r;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint64_t weight = 1;
      for (std::uint32_t j = 0; j < k - 1 - i; ++j) weight *= p;
      f[i] = static_cast<std::uint32_t>((t / weight) % p);
    }
    (void)t;
    if (k == 1 || (f[0] != 0 && oracle_irreducible(f, p))) return f;
  }
  return {};
}

}  // namespace

TEST_CASE("modulus is the lex-min monic irreducible (frozen + oracle)") {
  // Frozen expectations, independently derived: x^2+1 over F_3, x^2+x+1 over
  // F_2, x^3+x^2+1 over F_2, x for every prime field.
  CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field::make(7, 1)->modulus() == std::vector<std::uint32_t>{0, 1});

  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {11, 2}, {13, 2}}) {
    CAPTURE(p, k);
    CHECK(Field::make(p, k)->modulus() == oracle_lex_min_modulus(p, k));
  }
}

TEST_CASE("GF(9) worked examples") {
  FieldRef f = Field::make(3, 2);
  const std::uint16_t x = f->from_coeffs({0, 1});
  CHECK(f->mul(x, x) == f->from_int(2));       // x^2 = -1 = 2
  CHECK(f->frobenius(x, 1) == f->from_coeffs({0, 2}));  // x^3 = 2x
  CHECK(f->size() == 9);
  CHECK(f->from_int(-1) == 2);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 81u}) {
    FieldRef f = Field::make_from_size(q);
    CAPTURE(q);
    REQUIRE(f->size() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ca = static_cast<std::uint16_t>(a);
      CHECK(f->add(ca, f->neg(ca)) == 0);
      if (a) CHECK(f->mul(ca, f->inv(ca)) == f->one());
      CHECK(f->mul(ca, f->one()) == ca);
      CHECK(f->add(ca, 0) == ca);
    }
    // commutativity, associativity, distributivity over all triples
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto ca = static_cast<std::uint16_t>(a), cb = static_cast<std::uint16_t>(b);
        REQUIRE(f->add(ca, cb) == f->add(cb, ca));
        REQUIRE(f->mul(ca, cb) == f->mul(cb, ca));
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto cc = static_cast<std::uint16_t>(c);
          REQUIRE(f->mul(ca, f->add(cb, cc)) == f->add(f->mul(ca, cb), f->mul(ca, cc)));
          REQUIRE(f->mul(f->mul(ca, cb), cc) == f->mul(ca, f->mul(cb, cc)));
          REQUIRE(f->add(f->add(ca, cb), cc) == f->add(ca, f->add(cb, cc)));
        }
      }
  }
}

TEST_CASE("frobenius is the p-power map and fixes exactly the prime subfield") {
  for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u, 49u, 81u}) {
    FieldRef f = Field::make_from_size(q);
    const std::uint32_t p = f->characteristic();
    CAPTURE(q);
    std::uint32_t fixed = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ca = static_cast<std::uint16_t>(a);
      CHECK(f->frobenius(ca, 1) == f->pow(ca, p));
      CHECK(f->frobenius(ca, f->degree()) == ca);  // a^q = a
      if (f->frobenius(ca, 1) == ca) ++fixed;
      // additivity of frobenius
      for (std::uint32_t b = 0; b < std::min(q, 16u); ++b)
        CHECK(f->frobenius(f->add(ca, static_cast<std::uint16_t>(b)), 1) ==
              f->add(f->frobenius(ca, 1), f->frobenius(static_cast<std::uint16_t>(b), 1)));
    }
    CHECK(fixed == p);
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u, 13u, 25u, 27u, 49u, 169u}) {
    FieldRef f = Field::make_from_size(q);
    std::uint16_t g = f->primitive_element();
    std::set<std::uint16_t> seen;
    std::uint16_t cur = f->one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      seen.insert(cur);
      cur = f->mul(cur, g);
    }
    CAPTURE(q);
    CHECK(seen.size() == q - 1);
    CHECK(cur == f->one());
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Field::make(4, 1), InvalidFieldError);   // not prime
  CHECK_THROWS_AS(Field::make(6, 2), InvalidFieldError);   // not prime
  CHECK_THROWS_AS(Field::make(2, 17), InvalidFieldError);  // 2^17 > 2^16
  CHECK_THROWS_AS(Field::make(257, 2), InvalidFieldError);
  CHECK_THROWS_AS(Field::make(3, 0), InvalidFieldError);
  CHECK_THROWS_AS(Field::make_from_size(12), InvalidFieldError);
  CHECK_NOTHROW(Field::make(2, 16));  // boundary 2^16 allowed
  CHECK(Field::make(5, 2) == Field::make(5, 2));  // memoized instance
  CHECK_THROWS_AS(Field::make(7, 1)->inv(0), DivisionByZeroError);
}

TEST_CASE("checked element type enforces matching fields") {
  FieldRef f9 = Field::make(3, 2), f4 = Field::make(2, 2);
  FieldElement a{f9, f9->from_int(2)}, b{f4, f4->one()};
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  FieldElement c{f9, f9->from_coeffs({0, 1})};
  CHECK((a * c).code == f9->mul(a.code, c.code));
  CHECK((c / c).code == f9->one());
  CHECK((-c + c).is_zero());
  CHECK(c.pow(8).code == f9->one());
}

TEST_CASE("coefficient text round-trips bit-exactly") {
  for (std::uint32_t q : {8u, 9u, 49u}) {
    FieldRef f = Field::make_from_size(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ca = static_cast<std::uint16_t>(a);
      CHECK(f->text_to_code(f->code_to_text(ca)) == ca);
    }
  }
  FieldRef f9 = Field::make(3, 2);
  CHECK(f9->code_to_text(f9->from_coeffs({2, 1})) == "2:1");
  CHECK_THROWS_AS(f9->text_to_code("3:0"), ParseError);
  CHECK_THROWS_AS(f9->text_to_code("1"), ParseError);
}
