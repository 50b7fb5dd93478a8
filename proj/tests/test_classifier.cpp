#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "strongreal/classifier.hpp"

using namespace strongreal;

namespace {

Outcome out(const std::string& name) { return classify(name).outcome; }

int item(const std::string& name) {
  Verdict v = classify(name);
  REQUIRE(v.outcome == Outcome::StronglyReal);
  return v.item;
}

}  // namespace

TEST_CASE("item (1): symplectic groups, q not 3 mod 4") {
  CHECK(item("PSp(4,5)") == 1);   // q = 1 mod 4
  CHECK(item("PSp(4,4)") == 1);   // q even
  CHECK(item("PSp(6,9)") == 1);
  CHECK(item("PSp(8,2)") == 1);
  CHECK(item("PSp(2,5)") == 1);   // n = 1, via PSL(2,5)
  CHECK(out("PSp(4,3)") == Outcome::NotStronglyReal);   // q = 3 mod 4
  CHECK(out("PSp(6,7)") == Outcome::NotStronglyReal);
  CHECK(out("PSp(4,2)") == Outcome::NotSimple);         // boundary: S6
  CHECK(item("PSL(2,4)") == 1);   // PSL(2,q) = PSp(2,q)
  CHECK(item("PSL(2,9)") == 1);
  CHECK(item("PSL(2,13)") == 1);
  CHECK(out("PSL(2,7)") == Outcome::NotStronglyReal);
  CHECK(out("PSL(2,11)") == Outcome::NotStronglyReal);
}

TEST_CASE("item (2): odd-dimensional orthogonal, q = 1 mod 4, dimension >= 7") {
  CHECK(item("Omega(7,5)") == 2);
  CHECK(item("Omega(7,13)") == 2);
  CHECK(item("Omega(11,9)") == 2);
  CHECK(out("Omega(7,3)") == Outcome::NotStronglyReal);  // q = 3 mod 4, dim != 9
  CHECK(out("Omega(7,7)") == Outcome::NotStronglyReal);
  // n = 2 is rejected from item (2) by rewriting to the symplectic family
  Verdict v = classify("Omega(5,5)");
  CHECK(v.outcome == Outcome::StronglyReal);
  CHECK(v.item == 1);
  // even q rewrites to symplectic as well
  CHECK(item("Omega(7,4)") == 1);
}

TEST_CASE("item (3): Omega(9,q), q = 3 mod 4") {
  CHECK(item("Omega(9,3)") == 3);
  CHECK(item("Omega(9,7)") == 3);
  CHECK(item("Omega(9,5)") == 2);  // q = 1 mod 4 takes the item (2) route
  CHECK(item("Omega(9,2)") == 1);  // even q leaves the odd-dimensional family
  CHECK(out("Omega(11,3)") == Outcome::NotStronglyReal);
}

TEST_CASE("item (4): minus-type orthogonal in dimension 4n, every q") {
  CHECK(item("POmega-(8,3)") == 4);
  CHECK(item("POmega-(8,5)") == 4);
  CHECK(item("POmega-(12,7)") == 4);
  CHECK(out("POmega-(10,5)") == Outcome::NotStronglyReal);  // dimension 2 mod 4
  CHECK(item("POmega-(4,3)") == 1);                         // rewrites to PSL(2,9)
  CHECK(out("POmega-(6,3)") == Outcome::NotStronglyReal);   // rewrites to PSU(4,3)
}

TEST_CASE("item (5): plus-type orthogonal in dimension 4n >= 12, q not 3 mod 4") {
  CHECK(item("POmega+(12,5)") == 5);
  CHECK(item("POmega+(12,2)") == 5);
  CHECK(item("POmega+(16,4)") == 5);
  CHECK(out("POmega+(12,7)") == Outcome::NotStronglyReal);  // q = 3 mod 4
  CHECK(out("POmega+(10,5)") == Outcome::NotStronglyReal);  // dimension 2 mod 4
  CHECK(out("POmega+(4,5)") == Outcome::NotSimple);         // direct product
}

TEST_CASE("item (6): POmega+(8,q) for every q, including q = 3 mod 4") {
  CHECK(item("POmega+(8,2)") == 6);
  CHECK(item("POmega+(8,3)") == 6);
  CHECK(item("POmega+(8,5)") == 6);
  CHECK(item("POmega+(8,7)") == 6);
}

TEST_CASE("item (7): triality groups for every q") {
  CHECK(item("3D4(2)") == 7);
  CHECK(item("3D4(3)") == 7);
  CHECK(item("3D4(4)") == 7);
}

TEST_CASE("item (8): the two alternating and two sporadic entries") {
  CHECK(item("A(10)") == 8);
  CHECK(item("A(14)") == 8);
  CHECK(item("J1") == 8);
  CHECK(item("J2") == 8);
  CHECK(out("A(7)") == Outcome::NotStronglyReal);
  CHECK(out("A(9)") == Outcome::NotStronglyReal);
  CHECK(out("A(11)") == Outcome::NotStronglyReal);
  CHECK(out("A(15)") == Outcome::NotStronglyReal);
  CHECK(out("J3") == Outcome::NotStronglyReal);
  CHECK(out("M11") == Outcome::NotStronglyReal);
  CHECK(out("Co1") == Outcome::NotStronglyReal);
  CHECK(out("B") == Outcome::NotStronglyReal);
  CHECK(out("M") == Outcome::NotStronglyReal);
}

TEST_CASE("off-list families") {
  CHECK(out("PSL(3,2)") == Outcome::NotStronglyReal);
  CHECK(out("PSL(4,3)") == Outcome::NotStronglyReal);
  CHECK(out("PSU(3,3)") == Outcome::NotStronglyReal);
  CHECK(out("PSU(4,3)") == Outcome::NotStronglyReal);
  CHECK(out("G2(4)") == Outcome::NotStronglyReal);
  CHECK(out("F4(2)") == Outcome::NotStronglyReal);
  CHECK(out("E8(2)") == Outcome::NotStronglyReal);
  CHECK(out("2B2(8)") == Outcome::NotStronglyReal);
  CHECK(out("2G2(27)") == Outcome::NotStronglyReal);
  CHECK(out("2E6(2)") == Outcome::NotStronglyReal);
}

TEST_CASE("non-simple parameters") {
  CHECK(out("PSL(2,2)") == Outcome::NotSimple);
  CHECK(out("PSL(2,3)") == Outcome::NotSimple);
  CHECK(out("PSL(1,7)") == Outcome::NotSimple);
  CHECK(out("PSU(3,2)") == Outcome::NotSimple);
  CHECK(out("PSU(2,2)") == Outcome::NotSimple);  // rewrites to PSL(2,2)
  CHECK(out("A(1)") == Outcome::NotSimple);
  CHECK(out("A(3)") == Outcome::NotSimple);
  CHECK(out("A(4)") == Outcome::NotSimple);
  CHECK(out("Omega(3,3)") == Outcome::NotSimple);  // rewrites to PSL(2,3)
  CHECK(out("G2(2)") == Outcome::NotSimple);
  CHECK(out("2B2(2)") == Outcome::NotSimple);
  CHECK(out("2G2(3)") == Outcome::NotSimple);
  CHECK(out("2F4(2)") == Outcome::NotSimple);
  CHECK(out("PSp(2,3)") == Outcome::NotSimple);  // rewrites to PSL(2,3)
}

TEST_CASE("normalization fixed table") {
  CHECK(normalize_name(parse_group_name("A(5)")) == parse_group_name("PSL(2,4)"));
  CHECK(normalize_name(parse_group_name("A(6)")) == parse_group_name("PSL(2,9)"));
  CHECK(normalize_name(parse_group_name("A(8)")) == parse_group_name("PSL(4,2)"));
  CHECK(normalize_name(parse_group_name("PSU(4,2)")) == parse_group_name("PSp(4,3)"));
  CHECK(normalize_name(parse_group_name("PSU(2,7)")) == parse_group_name("PSL(2,7)"));
  CHECK(normalize_name(parse_group_name("Omega(3,5)")) == parse_group_name("PSL(2,5)"));
  CHECK(normalize_name(parse_group_name("Omega(5,3)")) == parse_group_name("PSp(4,3)"));
  CHECK(normalize_name(parse_group_name("Omega(7,2)")) == parse_group_name("PSp(6,2)"));
  CHECK(normalize_name(parse_group_name("POmega+(6,3)")) == parse_group_name("PSL(4,3)"));
  CHECK(normalize_name(parse_group_name("POmega-(6,3)")) == parse_group_name("PSU(4,3)"));
  CHECK(normalize_name(parse_group_name("POmega-(4,3)")) == parse_group_name("PSL(2,9)"));
  CHECK(normalize_name(parse_group_name("PSp(2,7)")) == parse_group_name("PSL(2,7)"));
  CHECK(normalize_name(parse_group_name("J1")) == parse_group_name("J1"));  // fixed point
}

TEST_CASE("normalization is idempotent") {
  const char* names[] = {"A(5)",  "A(6)",        "A(8)",        "A(10)",        "PSU(4,2)",
                         "PSU(2,5)", "Omega(3,7)", "Omega(5,9)",  "Omega(9,4)",   "POmega+(6,5)",
                         "POmega-(6,5)", "POmega-(4,5)", "PSp(2,9)", "PSp(4,3)", "PSL(2,7)",
                         "3D4(2)", "J2",         "G2(4)",       "POmega+(8,3)", "Omega(9,3)"};
  for (const char* name : names) {
    SimpleGroupName once = normalize_name(parse_group_name(name));
    CHECK(normalize_name(once) == once);
  }
}

TEST_CASE("odd-dimensional orthogonal order formula matches the symplectic one") {
  // Omega(5,3) and PSp(4,3) share order 25920: B2 and C2 have equal orders.
  auto omega5_order = [](std::uint64_t q) {
    // |Omega(2n+1,q)| for n=2: q^4 (q^2-1)(q^4-1) / gcd(2, q-1)
    return q * q * q * q * (q * q - 1) * (q * q * q * q - 1) / 2;
  };
  CHECK(omega5_order(3) == 25920);
}

TEST_CASE("the grammar is whitespace- and case-insensitive") {
  CHECK(parse_group_name(" p s l ( 2 , 7 ) ") == parse_group_name("PSL(2,7)"));
  CHECK(parse_group_name("PSL2(7)") == parse_group_name("PSL(2,7)"));
  CHECK(parse_group_name("psu3(3)") == parse_group_name("PSU(3,3)"));
  CHECK(parse_group_name("a10") == parse_group_name("A(10)"));
  CHECK(parse_group_name("Alt(10)") == parse_group_name("A(10)"));
  CHECK(parse_group_name("alt 14") == parse_group_name("A(14)"));
  CHECK(parse_group_name("3d4(2)") == parse_group_name("3D4(2)"));
  CHECK(parse_group_name("j1") == parse_group_name("J1"));
  CHECK(parse_group_name("mcl") == parse_group_name("McL"));
  CHECK(parse_group_name("fi24'") == parse_group_name("Fi24'"));
  CHECK(parse_group_name("fi24") == parse_group_name("Fi24'"));
  CHECK(parse_group_name("POmega^+(8,3)") == parse_group_name("POmega+(8,3)"));
  CHECK(parse_group_name("omega9(3)") == parse_group_name("Omega(9,3)"));
}

TEST_CASE("invalid names are rejected") {
  CHECK_THROWS_AS(parse_group_name(""), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("XYZ(3)"), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("PGL(2,7)"), UnknownNameError);  // not a simple-group family
  CHECK_THROWS_AS(parse_group_name("PSL(2,6)"), UnknownNameError);  // 6 is not a prime power
  CHECK_THROWS_AS(parse_group_name("PSL(2)"), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("PSp(3,5)"), UnknownNameError);  // odd symplectic dimension
  CHECK_THROWS_AS(parse_group_name("Omega(6,3)"), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("POmega+(7,3)"), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("2B2(4)"), UnknownNameError);  // needs an odd power of 2
  CHECK_THROWS_AS(parse_group_name("2G2(9)"), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("A(0)"), UnknownNameError);
  CHECK_THROWS_AS(parse_group_name("PSL(2,7x)"), UnknownNameError);
  CHECK(classify("nonsense").outcome == Outcome::UnknownName);
}

TEST_CASE("classify is total over the encoded vocabulary") {
  const char* names[] = {"PSp(4,5)",  "PSp(6,3)",   "Omega(7,5)",  "Omega(9,3)", "POmega-(8,3)",
                         "POmega+(12,5)", "POmega+(8,2)", "3D4(2)", "A(10)", "A(14)",
                         "J1",        "J2",         "PSL(2,4)",    "PSL(3,2)",   "PSU(3,3)",
                         "A(5)",      "A(8)",       "PSU(4,2)",    "Omega(5,7)", "POmega-(4,9)",
                         "G2(3)",     "F4(2)",      "E6(3)",       "E7(2)",      "E8(2)",
                         "2E6(2)",    "2B2(8)",     "2G2(27)",     "2F4(8)",     "M24",
                         "Co3",       "Fi22",       "HS",          "Ly",         "Th"};
  for (const char* name : names) CHECK(classify(name).outcome != Outcome::UnknownName);
}

TEST_CASE("verdict justifications cite the item") {
  Verdict v = classify("PSp(4,5)");
  CHECK(v.justification.find("item (1)") != std::string::npos);
  Verdict w = classify("A(5)");
  CHECK(w.justification.find("A(5) = PSL(2,4)") != std::string::npos);  // normalization shown
  CHECK(w.item == 1);
  Verdict t = classify("3D4(2)");
  CHECK(t.justification.find("item (7)") != std::string::npos);
}
