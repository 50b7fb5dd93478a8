#pragma once

// The classification of strongly real finite simple groups as a total
// decision procedure over names, with the standard exceptional isomorphisms
// folded in so that brute-force results and table lookups can be compared on
// a common canonical name.

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongreal/errors.hpp"

namespace strongreal {

enum class Family {
  PSL,
  PSU,
  PSp,          // even dimension
  Omega,        // odd dimension
  POmegaPlus,   // even dimension
  POmegaMinus,  // even dimension
  TrialityD4,
  Alt,
  Sporadic,
  Exceptional,  // G2, F4, E6, E7, E8, 2E6, 2B2, 2G2, 2F4
};

struct SimpleGroupName {
  Family family{};
  std::uint64_t n = 0;  // dimension (matrix families) or degree (Alt)
  std::uint64_t q = 0;  // field size, when applicable
  std::string label;    // Sporadic / Exceptional token, canonical spelling

  friend bool operator==(const SimpleGroupName& a, const SimpleGroupName& b) {
    return a.family == b.family && a.n == b.n && a.q == b.q && a.label == b.label;
  }
};

enum class Outcome { StronglyReal, NotStronglyReal, NotSimple, UnknownName };

struct Verdict {
  Outcome outcome{};
  int item = 0;  // 1..8 when StronglyReal
  std::string justification;
};

namespace detail {

// q = p^k for a prime p, k >= 1.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint64_t k = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, k);
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline const std::vector<std::string>& sporadic_labels() {
  static const std::vector<std::string> labels = {
      "M11", "M12", "M22", "M23",  "M24", "J1", "J2", "J3", "J4",
      "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
      "Ru",  "Suz", "ON",  "HN",   "Ly",  "Th", "B",  "M"};
  return labels;
}

inline std::string strip_marks(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '\'' && c != '^') out += c;
  return out;
}

}  // namespace detail

inline std::string format_name(const SimpleGroupName& g) {
  switch (g.family) {
    case Family::PSL: return "PSL(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
    case Family::PSU: return "PSU(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
    case Family::PSp: return "PSp(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
    case Family::Omega: return "Omega(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
    case Family::POmegaPlus:
      return "POmega+(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
    case Family::POmegaMinus:
      return "POmega-(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
    case Family::TrialityD4: return "3D4(" + std::to_string(g.q) + ")";
    case Family::Alt: return "A(" + std::to_string(g.n) + ")";
    case Family::Sporadic: return g.label;
    case Family::Exceptional: return g.label + "(" + std::to_string(g.q) + ")";
  }
  return "?";
}

// Grammar: family token, then (n,q) / (q) / (n) as the family requires; the
// dimension may also be glued to the token, as in PSL2(7) or A10.  Tokens are
// case-insensitive and whitespace is ignored everywhere.
inline SimpleGroupName parse_group_name(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UnknownNameError("empty group name");
  const std::string low = detail::lower(s);

  // Bare sporadic label?
  for (const std::string& label : detail::sporadic_labels())
    if (detail::strip_marks(detail::lower(label)) == detail::strip_marks(low))
      return SimpleGroupName{Family::Sporadic, 0, 0, label};

  struct Token {
    const char* text;
    Family family;
    int params;  // 2 = (n,q), 1 = (q), 0 = (n)
    const char* canon;
  };
  static const Token tokens[] = {
      {"pomega+", Family::POmegaPlus, 2, ""},  {"pomega-", Family::POmegaMinus, 2, ""},
      {"omega", Family::Omega, 2, ""},         {"psl", Family::PSL, 2, ""},
      {"psu", Family::PSU, 2, ""},             {"psp", Family::PSp, 2, ""},
      {"3d4", Family::TrialityD4, 1, ""},      {"2e6", Family::Exceptional, 1, "2E6"},
      {"2b2", Family::Exceptional, 1, "2B2"},  {"2g2", Family::Exceptional, 1, "2G2"},
      {"2f4", Family::Exceptional, 1, "2F4"},  {"g2", Family::Exceptional, 1, "G2"},
      {"f4", Family::Exceptional, 1, "F4"},    {"e6", Family::Exceptional, 1, "E6"},
      {"e7", Family::Exceptional, 1, "E7"},    {"e8", Family::Exceptional, 1, "E8"},
      {"alt", Family::Alt, 0, ""},             {"a", Family::Alt, 0, ""},
  };

  const std::string bare = detail::strip_marks(low);
  for (const Token& tok : tokens) {
    const std::string t = tok.text;
    if (bare.rfind(t, 0) != 0) continue;
    std::string rest = bare.substr(t.size());

    auto parse_u64 = [&](const std::string& d) -> std::uint64_t {
      if (d.empty()) throw UnknownNameError("missing parameter in '" + text + "'");
      std::uint64_t v = 0;
      for (char c : d) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw UnknownNameError("bad parameter '" + d + "' in '" + text + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 1'000'000'000ull) throw UnknownNameError("parameter out of range in '" + text + "'");
      }
      return v;
    };

    std::vector<std::uint64_t> params;
    // Glued dimension digits before the parenthesis: PSL2(7), A10.
    std::string glued;
    while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
      glued += rest.front();
      rest.erase(rest.begin());
    }
    if (!glued.empty()) params.push_back(parse_u64(glued));
    if (!rest.empty()) {
      if (rest.front() != '(' || rest.back() != ')')
        throw UnknownNameError("cannot parse group name '" + text + "'");
      std::string inner = rest.substr(1, rest.size() - 2);
      std::string cur;
      for (char c : inner) {
        if (c == ',') {
          params.push_back(parse_u64(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      params.push_back(parse_u64(cur));
    }

    const std::size_t want = (tok.params == 2) ? 2 : 1;
    if (params.size() != want)
      throw UnknownNameError("expected " + std::to_string(want) + " parameter(s) for '" +
                             std::string(tok.text) + "' in '" + text + "'");

    SimpleGroupName g;
    g.family = tok.family;
    g.label = tok.canon;
    if (tok.params == 2) {
      g.n = params[0];
      g.q = params[1];
    } else if (tok.params == 1) {
      g.q = params[0];
    } else {
      g.n = params[0];
    }

    // Parameter validity.
    if (tok.params != 0) {
      auto pk = detail::prime_power(g.q);
      if (!pk) throw UnknownNameError("q = " + std::to_string(g.q) + " is not a prime power");
      if (g.family == Family::Exceptional) {
        // Suzuki and Ree families exist only for odd powers of their base prime.
        const std::uint64_t p = pk->first, k = pk->second;
        if ((g.label == "2B2" || g.label == "2F4") && (p != 2 || k % 2 == 0))
          throw UnknownNameError(g.label + " requires q an odd power of 2");
        if (g.label == "2G2" && (p != 3 || k % 2 == 0))
          throw UnknownNameError("2G2 requires q an odd power of 3");
      }
    }
    if (g.family == Family::PSp && (g.n < 2 || g.n % 2 != 0))
      throw UnknownNameError("PSp requires an even dimension >= 2");
    if (g.family == Family::Omega && (g.n < 3 || g.n % 2 != 1))
      throw UnknownNameError("Omega requires an odd dimension >= 3");
    if ((g.family == Family::POmegaPlus || g.family == Family::POmegaMinus) &&
        (g.n < 2 || g.n % 2 != 0))
      throw UnknownNameError("POmega requires an even dimension >= 2");
    if (g.family == Family::PSL && g.n < 1)
      throw UnknownNameError("PSL requires dimension >= 1");
    if (g.family == Family::PSU && g.n < 1)
      throw UnknownNameError("PSU requires dimension >= 1");
    if (g.family == Family::Alt && g.n < 1) throw UnknownNameError("A(n) requires n >= 1");
    return g;
  }
  throw UnknownNameError("unrecognized group name '" + text + "'");
}

// One rewriting pass of the exceptional-isomorphism table; the public
// normalize_name iterates this to a fixed point.
namespace detail {
inline bool normalize_step(SimpleGroupName& g) {
  switch (g.family) {
    case Family::Alt:
      if (g.n == 5) {
        g = {Family::PSL, 2, 4, ""};
        return true;
      }
      if (g.n == 6) {
        g = {Family::PSL, 2, 9, ""};
        return true;
      }
      if (g.n == 8) {
        g = {Family::PSL, 4, 2, ""};
        return true;
      }
      return false;
    case Family::PSU:
      if (g.n == 4 && g.q == 2) {
        g = {Family::PSp, 4, 3, ""};
        return true;
      }
      if (g.n == 2) {
        g = {Family::PSL, 2, g.q, ""};
        return true;
      }
      return false;
    case Family::PSp:
      if (g.n == 2) {
        g = {Family::PSL, 2, g.q, ""};
        return true;
      }
      return false;
    case Family::Omega:
      if (g.n == 3) {
        g = {Family::PSL, 2, g.q, ""};
        return true;
      }
      if (g.n == 5) {
        g = {Family::PSp, 4, g.q, ""};
        return true;
      }
      if (g.q % 2 == 0) {  // characteristic 2: B_n = C_n
        g = {Family::PSp, g.n - 1, g.q, ""};
        return true;
      }
      return false;
    case Family::POmegaPlus:
      if (g.n == 6) {
        g = {Family::PSL, 4, g.q, ""};
        return true;
      }
      return false;
    case Family::POmegaMinus:
      if (g.n == 6) {
        g = {Family::PSU, 4, g.q, ""};
        return true;
      }
      if (g.n == 4) {
        g = {Family::PSL, 2, g.q * g.q, ""};
        return true;
      }
      return false;
    default:
      return false;
  }
}
}  // namespace detail

inline SimpleGroupName normalize_name(SimpleGroupName g) {
  while (detail::normalize_step(g)) {
  }
  return g;
}

inline Verdict classify(const SimpleGroupName& input) {
  const SimpleGroupName g = normalize_name(input);
  std::string via;
  if (!(g == input)) via = format_name(input) + " = " + format_name(g) + "; ";

  auto not_simple = [&](const std::string& why) {
    return Verdict{Outcome::NotSimple, 0, via + format_name(g) + " is not simple: " + why};
  };
  auto strongly_real = [&](int item, const std::string& why) {
    return Verdict{Outcome::StronglyReal, item,
                   via + format_name(g) + " is strongly real by classification item (" +
                       std::to_string(item) + "): " + why};
  };
  auto not_strongly_real = [&](const std::string& why) {
    return Verdict{Outcome::NotStronglyReal, 0,
                   via + format_name(g) + " is not in the classification list: " + why};
  };

  switch (g.family) {
    case Family::PSL:
      if (g.n == 1) return not_simple("PSL(1,q) is trivial");
      if (g.n == 2 && (g.q == 2 || g.q == 3)) return not_simple("PSL(2,2) and PSL(2,3) are solvable");
      if (g.n == 2) {
        if (g.q % 4 != 3)
          return strongly_real(1, "PSL(2,q) = PSp(2,q) with q = " + std::to_string(g.q) +
                                      " not congruent to 3 mod 4");
        return not_strongly_real("PSL(2,q) with q = " + std::to_string(g.q) +
                                 " congruent to 3 mod 4");
      }
      return not_strongly_real("linear groups of dimension >= 3 are absent");
    case Family::PSU:
      if (g.n <= 2) return not_simple("degenerate unitary parameters");
      if (g.n == 3 && g.q == 2) return not_simple("PSU(3,2) is solvable");
      return not_strongly_real("unitary groups are absent");
    case Family::PSp:
      if (g.n == 4 && g.q == 2) return not_simple("PSp(4,2) = S6 has a simple subgroup of index 2");
      if (g.q % 4 != 3)
        return strongly_real(1, "symplectic with q = " + std::to_string(g.q) +
                                    " not congruent to 3 mod 4");
      return not_strongly_real("symplectic with q = " + std::to_string(g.q) +
                               " congruent to 3 mod 4");
    case Family::Omega:
      // Odd q, dimension >= 7 after normalization.
      if (g.n == 9 && g.q % 4 == 3)
        return strongly_real(3, "Omega(9,q) with q congruent to 3 mod 4");
      if (g.n >= 7 && g.q % 4 == 1)
        return strongly_real(2, "odd-dimensional orthogonal, dimension >= 7, q congruent to 1 mod 4");
      return not_strongly_real("odd-dimensional orthogonal outside items (2) and (3)");
    case Family::POmegaPlus:
      if (g.n <= 4) return not_simple("POmega+(4,q) is a direct product, smaller ranks degenerate");
      if (g.n == 8) return strongly_real(6, "POmega+(8,q) for every q");
      if (g.n % 4 == 0 && g.n >= 12 && g.q % 4 != 3)
        return strongly_real(5, "POmega+(4n,q), n >= 3, q not congruent to 3 mod 4");
      return not_strongly_real("plus-type orthogonal outside items (5) and (6)");
    case Family::POmegaMinus:
      if (g.n <= 2) return not_simple("degenerate minus-type parameters");
      if (g.n % 4 == 0 && g.n >= 8)
        return strongly_real(4, "POmega-(4n,q), n >= 2, for every q");
      return not_strongly_real("minus-type orthogonal of dimension not divisible by 4");
    case Family::TrialityD4:
      return strongly_real(7, "3D4(q) for every q");
    case Family::Alt:
      if (g.n <= 4) return not_simple("A(n) with n <= 4");
      if (g.n == 10 || g.n == 14)
        return strongly_real(8, "A(10) and A(14) are the listed alternating groups");
      return not_strongly_real("alternating groups other than A(10) and A(14)");
    case Family::Sporadic:
      if (g.label == "J1" || g.label == "J2")
        return strongly_real(8, g.label + " is one of the listed sporadic groups");
      return not_strongly_real("sporadic groups other than J1 and J2");
    case Family::Exceptional:
      if (g.label == "G2" && g.q == 2) return not_simple("G2(2) has a simple subgroup of index 2");
      if (g.label == "2B2" && g.q == 2) return not_simple("2B2(2) is solvable");
      if (g.label == "2G2" && g.q == 3) return not_simple("2G2(3) has a simple subgroup of index 3");
      if (g.label == "2F4" && g.q == 2) return not_simple("2F4(2) has a simple subgroup of index 2");
      return not_strongly_real("exceptional families other than 3D4 are absent");
  }
  return Verdict{Outcome::UnknownName, 0, "unhandled family"};
}

inline Verdict classify(const std::string& text) {
  try {
    return classify(parse_group_name(text));
  } catch (const UnknownNameError& e) {
    return Verdict{Outcome::UnknownName, 0, e.what()};
  }
}

}  // namespace strongreal
