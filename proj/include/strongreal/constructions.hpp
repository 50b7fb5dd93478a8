#pragma once

// Generator-based constructions of the desk-scale families, plus permutation
// group ingestion.  Every builder returns a fully enumerated Group; order
// formulas live here too so tests can assert closure counts against them.

#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "strongreal/errors.hpp"
#include "strongreal/group.hpp"

namespace strongreal {

inline FieldRef field_for_q(std::uint64_t q) {
  if (q < 2 || q > Field::kMaxSize)
    throw InvalidFieldError("q must be a prime power in [2, 2^16]");
  return Field::make_from_size(static_cast<std::uint32_t>(q));
}

// ---- order formulas -------------------------------------------------------

inline std::uint64_t order_sl2(std::uint64_t q) { return q * (q * q - 1); }
inline std::uint64_t order_gl2(std::uint64_t q) { return (q * q - 1) * (q * q - q); }
inline std::uint64_t order_pgl2(std::uint64_t q) { return q * (q * q - 1); }
inline std::uint64_t order_psl2(std::uint64_t q) {
  return order_sl2(q) / std::gcd<std::uint64_t>(2, q - 1);
}
inline std::uint64_t order_sl3(std::uint64_t q) { return q * q * q * (q * q * q - 1) * (q * q - 1); }
inline std::uint64_t order_psl3(std::uint64_t q) {
  return order_sl3(q) / std::gcd<std::uint64_t>(3, q - 1);
}
inline std::uint64_t order_sp4(std::uint64_t q) {
  return q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
}
inline std::uint64_t order_psp4(std::uint64_t q) {
  return order_sp4(q) / std::gcd<std::uint64_t>(2, q - 1);
}
inline std::uint64_t order_su3(std::uint64_t q) {
  return q * q * q * (q * q - 1) * (q * q * q + 1);
}
inline std::uint64_t order_psu3(std::uint64_t q) {
  return order_su3(q) / std::gcd<std::uint64_t>(3, q + 1);
}
inline std::uint64_t order_alternating(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return n < 2 ? 1 : f / 2;
}

// ---- linear and symplectic families ---------------------------------------

// Root-subgroup transvections over a basis {1, g, ..., g^(k-1)} of F_q plus
// the Weyl element; these generate all of SL2(q).
inline std::vector<GroupElement> sl2_generators(const FieldRef& f) {
  std::vector<GroupElement> gens;
  std::uint16_t gi = f->one();
  for (std::uint32_t i = 0; i < f->degree(); ++i) {
    Matrix u = Matrix::identity(f, 2);
    u.set(0, 1, gi);
    gens.push_back(GroupElement(u));
    gi = f->mul(gi, f->primitive_element());
  }
  gens.push_back(GroupElement(Matrix::from_ints(f, {{0, 1}, {-1, 0}})));
  return gens;
}

inline Group build_sl2(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return Group::closure(sl2_generators(field_for_q(q)), cap);
}

inline Group build_gl2(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  const FieldRef f = field_for_q(q);
  std::vector<GroupElement> gens = sl2_generators(f);
  Matrix d = Matrix::identity(f, 2);
  d.set(0, 0, f->primitive_element());
  gens.push_back(GroupElement(d));
  return Group::closure(gens, cap);
}

inline Group build_psl2(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return projective_quotient(build_sl2(q, cap), cap);
}

inline Group build_pgl2(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return projective_quotient(build_gl2(q, cap), cap);
}

// Elementary transvections I + g^i E_rs for all off-diagonal positions.
inline std::vector<GroupElement> sl3_generators(const FieldRef& f) {
  std::vector<GroupElement> gens;
  for (std::uint32_t r = 0; r < 3; ++r)
    for (std::uint32_t s = 0; s < 3; ++s) {
      if (r == s) continue;
      std::uint16_t gi = f->one();
      for (std::uint32_t i = 0; i < f->degree(); ++i) {
        Matrix t = Matrix::identity(f, 3);
        t.set(r, s, gi);
        gens.push_back(GroupElement(t));
        gi = f->mul(gi, f->primitive_element());
      }
    }
  return gens;
}

inline Group build_sl3(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return Group::closure(sl3_generators(field_for_q(q)), cap);
}

inline Group build_psl3(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return projective_quotient(build_sl3(q, cap), cap);
}

// The fixed alternating form for the symplectic family.
inline Matrix sp4_form(const FieldRef& f) {
  return Matrix::from_ints(
      f, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
}

inline bool preserves_sp4_form(const Matrix& m) {
  const Matrix J = sp4_form(m.field());
  return m.transpose() * J * m == J;
}

// Symplectic transvections x -> x + lambda <x,v> v for v over the standard
// basis and all pair sums, lambda over the basis scalars.  Every generator is
// checked against the form; closure order is pinned by tests.
inline std::vector<GroupElement> sp4_generators(const FieldRef& f) {
  const Matrix J = sp4_form(f);
  std::vector<std::vector<std::uint16_t>> dirs;
  for (std::uint32_t i = 0; i < 4; ++i) {
    std::vector<std::uint16_t> v(4, 0);
    v[i] = f->one();
    dirs.push_back(v);
  }
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = i + 1; j < 4; ++j) {
      std::vector<std::uint16_t> v(4, 0);
      v[i] = f->one();
      v[j] = f->one();
      dirs.push_back(v);
    }
  std::vector<GroupElement> gens;
  for (const auto& v : dirs) {
    // (Jv)_a = sum_b J[a][b] v[b]
    std::vector<std::uint16_t> jv(4, 0);
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = 0; b < 4; ++b)
        jv[a] = f->add(jv[a], f->mul(J.at(a, b), v[b]));
    std::uint16_t lambda = f->one();
    for (std::uint32_t i = 0; i < f->degree(); ++i) {
      Matrix t = Matrix::identity(f, 4);
      for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b)
          t.set(a, b, f->add(t.at(a, b), f->mul(lambda, f->mul(v[a], jv[b]))));
      if (!preserves_sp4_form(t)) throw Error("symplectic transvection fails the form");
      gens.push_back(GroupElement(t));
      lambda = f->mul(lambda, f->primitive_element());
    }
  }
  return gens;
}

inline Group build_sp4(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return Group::closure(sp4_generators(field_for_q(q)), cap);
}

inline Group build_psp4(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return projective_quotient(build_sp4(q, cap), cap);
}

// ---- special unitary family -----------------------------------------------

// u(alpha, beta) = [[1,a,b],[0,1,a^q],[0,0,1]]; member of SU3(q) exactly when
// beta + beta^q = alpha^(q+1).
inline Matrix su3_unipotent(const FieldRef& f2, std::uint64_t q, std::uint16_t alpha,
                            std::uint16_t beta) {
  Matrix u = Matrix::identity(f2, 3);
  u.set(0, 1, alpha);
  u.set(0, 2, beta);
  u.set(1, 2, f2->pow(alpha, q));
  return u;
}

inline bool su3_member(const Matrix& y, std::uint64_t q) {
  return iota_su(entrywise_power(y, q)) == y;
}

// All q^3 unipotents plus the form matrix A.
inline std::vector<GroupElement> su3_generators(std::uint64_t q) {
  const FieldRef f = field_for_q(q);
  const FieldRef f2 = Field::make(f->characteristic(), 2 * f->degree());
  std::vector<GroupElement> gens;
  for (std::uint32_t a = 0; a < f2->size(); ++a) {
    const std::uint16_t rhs = f2->pow(static_cast<std::uint16_t>(a), q + 1);
    for (std::uint32_t b = 0; b < f2->size(); ++b) {
      const std::uint16_t bb = static_cast<std::uint16_t>(b);
      if (f2->add(bb, f2->pow(bb, q)) != rhs) continue;
      Matrix u = su3_unipotent(f2, q, static_cast<std::uint16_t>(a), bb);
      if (!su3_member(u, q)) throw Error("unitary unipotent fails the stability equation");
      gens.push_back(GroupElement(u));
    }
  }
  Matrix A = su3_form(f2);
  if (!su3_member(A, q)) throw Error("form matrix fails the stability equation");
  gens.push_back(GroupElement(A));
  return gens;
}

inline Group build_su3(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return Group::closure(su3_generators(q), cap);
}

inline Group build_psu3(std::uint64_t q, std::uint64_t cap = kDefaultClosureCap) {
  return projective_quotient(build_su3(q, cap), cap);
}

// ---- permutation families ---------------------------------------------------

inline Group build_alternating(std::uint32_t n, std::uint64_t cap = kDefaultClosureCap) {
  if (n < 1) throw InvalidDegreeError("alternating degree must be >= 1");
  std::vector<GroupElement> gens;
  if (n < 3) {
    gens.push_back(GroupElement(Permutation::identity(n)));
  } else {
    for (std::uint32_t k = 3; k <= n; ++k)
      gens.push_back(GroupElement(Permutation::three_cycle(n, 1, 2, k)));
  }
  return Group::closure(gens, cap);
}

// File format: a "degree N" header line, then one generator per line as N
// whitespace-separated 1-based images.  '#' starts a comment; blank lines ok.
inline Group load_permutation_group(const std::string& path,
                                    std::uint64_t cap = kDefaultClosureCap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open permutation file '" + path + "'");
  std::size_t lineno = 0;
  std::uint64_t degree = 0;
  bool have_degree = false;
  std::vector<GroupElement> gens;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_degree) {
      std::string word;
      if (!(ls >> word)) continue;  // blank
      std::uint64_t n = 0;
      if (word != "degree" || !(ls >> n) || n < 1)
        throw ParseError("expected 'degree N' header", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after degree header", lineno);
      if (n > Permutation::kMaxDegree) throw InvalidDegreeError("degree too large");
      degree = n;
      have_degree = true;
      continue;
    }
    std::vector<std::uint64_t> images;
    std::string tok;
    while (ls >> tok) {
      std::uint64_t v = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError("bad image token '" + tok + "'", lineno);
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v > Permutation::kMaxDegree + 1ull)
          throw InvalidPermutationError("image out of range", lineno);
      }
      images.push_back(v);
    }
    if (images.empty()) continue;  // blank or comment-only line
    if (images.size() != degree)
      throw ParseError("expected " + std::to_string(degree) + " images, got " +
                           std::to_string(images.size()),
                       lineno);
    gens.push_back(GroupElement(Permutation::from_one_based(images, lineno)));
  }
  if (!have_degree) throw ParseError("missing 'degree N' header in '" + path + "'");
  if (gens.empty())
    gens.push_back(GroupElement(Permutation::identity(static_cast<std::uint32_t>(degree))));
  return Group::closure(gens, cap);
}

}  // namespace strongreal
