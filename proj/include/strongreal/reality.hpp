#pragma once

// Reality, strong reality, two-involution factorization, and Jordan
// decomposition for elements of an enumerated finite group.
//
// Every witness search walks the canonical element order, so witnesses are a
// pure function of the group (not of thread count or enumeration order).

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "strongreal/group.hpp"

namespace strongreal {

enum class WitnessKind { Real, StronglyReal, Factorization };

struct Witness {
  WitnessKind kind;
  GroupElement t;
  std::optional<GroupElement> s;  // Factorization only: s*t = x
};

struct JordanPair {
  GroupElement s;  // p'-part
  GroupElement u;  // p-part
};

namespace detail {

inline GroupElement element_pow(const GroupElement& x, std::uint64_t e) {
  GroupElement acc = x.identity();
  GroupElement base = x;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Multiplicative inverse of a mod m (m >= 1, gcd(a, m) = 1).
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    t = std::exchange(nt, t - qq * nt);
    r = std::exchange(nr, r - qq * nr);
  }
  if (r != 1) throw Error("inverse_mod of a non-unit");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

}  // namespace detail

// x = s*u = u*s with order(s) coprime to p and order(u) a power of p.  The
// exponents are forced by CRT on order(x), which also proves uniqueness
// within <x>.
inline JordanPair jordan_decomposition(const Group& g, const GroupElement& x, std::uint64_t p) {
  if (!detail::is_prime(p))
    throw UnsupportedParameterError("characteristic must be prime, got " + std::to_string(p));
  const std::uint32_t xi = g.require_index(x);
  const std::uint64_t n = g.order_of(xi);
  std::uint64_t pa = 1, m = n;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  // e1 = 0 mod p^a, 1 mod m; e2 = 1 mod p^a, 0 mod m; e1 + e2 = 1 mod n.
  const std::uint64_t e1 = (m == 1) ? 0 : pa * detail::inverse_mod(pa % m, m);
  const std::uint64_t e2 = (n + 1 - e1) % n;
  return JordanPair{detail::element_pow(x, e1), detail::element_pow(x, e2)};
}

// First conjugator t (canonical order) with t^-1 x t = x^-1, if any.
inline std::optional<Witness> is_real(const Group& g, const GroupElement& x) {
  const std::uint32_t xi = g.require_index(x);
  if (x.is_identity()) return Witness{WitnessKind::Real, g.identity(), std::nullopt};
  const GroupElement& xinv = g.element(g.inverse_index(xi));
  for (std::uint32_t i : g.canonical_order()) {
    const GroupElement& t = g.element(i);
    const GroupElement& tinv = g.element(g.inverse_index(i));
    if (tinv * x * t == xinv) return Witness{WitnessKind::Real, t, std::nullopt};
  }
  return std::nullopt;
}

// First involution (or identity, when order(x) <= 2 makes t = x work) with
// t x t = x^-1, if any.
inline std::optional<Witness> is_strongly_real(const Group& g, const GroupElement& x) {
  const std::uint32_t xi = g.require_index(x);
  if (g.order_of(xi) <= 2) return Witness{WitnessKind::StronglyReal, x, std::nullopt};
  const GroupElement& xinv = g.element(g.inverse_index(xi));
  for (std::uint32_t i : g.involutions()) {
    const GroupElement& t = g.element(i);
    if (t * x * t == xinv) return Witness{WitnessKind::StronglyReal, t, std::nullopt};
  }
  return std::nullopt;
}

// x = s*t with s, t each an involution or the identity, if possible.  For
// order(x) > 2 the pair is (w, w*x) for the strong-reality witness w; for an
// involution we look for a commuting involution first (the Klein four-group
// route), falling back to (e, x).
inline std::optional<Witness> two_involution_factorization(const Group& g, const GroupElement& x) {
  const std::uint32_t xi = g.require_index(x);
  const std::uint64_t n = g.order_of(xi);
  if (n == 1) return Witness{WitnessKind::Factorization, x, x};
  if (n == 2) {
    for (std::uint32_t i : g.involutions()) {
      const GroupElement& s = g.element(i);
      if (!(s == x) && s * x == x * s)
        return Witness{WitnessKind::Factorization, s * x, s};
    }
    return Witness{WitnessKind::Factorization, x, g.identity()};
  }
  auto w = is_strongly_real(g, x);
  if (!w) return std::nullopt;
  return Witness{WitnessKind::Factorization, w->t * x, w->t};
}

struct ClassRecord {
  std::uint64_t rep_order = 0;
  std::uint64_t class_size = 0;
  bool real = false;
  bool strongly_real = false;
  // The strong-reality witness when it exists, else the reality conjugator
  // when x is merely real, else absent.
  std::optional<Witness> witness;
};

struct RealityReport {
  std::string group_name;
  std::uint64_t group_order = 0;
  std::vector<ClassRecord> classes;  // in conjugacy-class order
  bool real = false;
  bool strongly_real = false;
  double elapsed_ms = 0.0;
};

// Per-class decision (strong reality is conjugation-invariant).  Classes may
// be processed by several workers; records always land in class order.
inline RealityReport group_strong_reality(const Group& g, unsigned workers = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  const ConjugacyData& cd = g.conjugacy();
  g.involutions();  // materialize shared caches before the parallel section
  const std::size_t k = cd.classes.size();

  RealityReport report;
  report.group_order = g.order();
  report.classes.resize(k);

  auto decide = [&](std::size_t ci) {
    const ConjugacyClass& c = cd.classes[ci];
    const GroupElement& x = g.element(c.representative);
    ClassRecord r;
    r.rep_order = g.order_of(c.representative);
    r.class_size = c.size();
    r.real = cd.class_of[g.inverse_index(c.representative)] == ci;
    if (r.real) {
      if (auto w = is_strongly_real(g, x)) {
        r.strongly_real = true;
        r.witness = std::move(w);
      } else {
        r.witness = is_real(g, x);
      }
    }
    report.classes[ci] = std::move(r);
  };

  if (workers <= 1) {
    for (std::size_t ci = 0; ci < k; ++ci) decide(ci);
  } else {
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (;;) {
        const std::size_t ci = next.fetch_add(1, std::memory_order_relaxed);
        if (ci >= k) return;
        decide(ci);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (std::thread& t : pool) t.join();
  }

  report.real = true;
  report.strongly_real = true;
  for (const ClassRecord& r : report.classes) {
    report.real = report.real && r.real;
    report.strongly_real = report.strongly_real && r.strongly_real;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace strongreal
