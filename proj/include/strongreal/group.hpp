#pragma once

// Explicit enumeration of a finite group from generators.
//
// The element table is filled by breadth-first closure (right-multiplication
// by the generators in the order given), which makes insertion order a pure
// function of the generator list.  Canonical order means lexicographic order
// of the injective byte keys; it does not depend on the generator list, and
// every "first witness" search in the toolkit walks it.

#include <atomic>
#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strongreal/element.hpp"
#include "strongreal/errors.hpp"

namespace strongreal {

constexpr std::uint64_t kDefaultClosureCap = 5'000'000;

struct ConjugacyClass {
  std::uint32_t representative;        // member with the smallest canonical rank
  std::vector<std::uint32_t> members;  // ascending insertion index
  std::uint64_t size() const { return members.size(); }
};

struct ConjugacyData {
  std::vector<ConjugacyClass> classes;  // sorted by (size, representative key)
  std::vector<std::uint32_t> class_of;  // element index -> class index
};

class Group {
 public:
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  Group(Group&&) = default;
  Group& operator=(Group&&) = default;

  // BFS closure of the generated subgroup; throws CapExceeded past the cap.
  // An empty generator list yields the trivial group (degree-1 permutation).
  static Group closure(std::vector<GroupElement> gens,
                       std::uint64_t cap = kDefaultClosureCap) {
    if (gens.empty()) gens.push_back(GroupElement(Permutation::identity(1)));
    for (std::size_t i = 1; i < gens.size(); ++i)
      if (!gens[0].same_shape(gens[i]))
        throw TypeMismatchError("generators must share one element shape");
    Group g;
    g.gens_ = gens;
    const GroupElement e = gens[0].identity();
    g.el_.push_back(e);
    g.index_.emplace(e.key(), 0);
    for (std::size_t i = 0; i < g.el_.size(); ++i) {
      for (const GroupElement& gen : g.gens_) {
        GroupElement w = g.el_[i] * gen;
        std::string k = w.key();
        if (g.index_.emplace(std::move(k), static_cast<std::uint32_t>(g.el_.size())).second) {
          if (g.el_.size() + 1 > cap)
            throw CapExceededError("closure exceeded cap " + std::to_string(cap),
                                   g.el_.size() + 1);
          g.el_.push_back(std::move(w));
        }
      }
    }
    g.finalize();
    return g;
  }

  std::uint64_t order() const { return el_.size(); }
  const GroupElement& element(std::uint32_t i) const { return el_[i]; }
  const GroupElement& identity() const { return el_[0]; }
  const std::vector<GroupElement>& generators() const { return gens_; }

  std::optional<std::uint32_t> index_of(const GroupElement& x) const {
    auto it = index_.find(x.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t require_index(const GroupElement& x) const {
    auto idx = index_of(x);
    if (!idx) throw NotAMemberError("element is not in the group");
    return *idx;
  }

  bool contains(const GroupElement& x) const { return index_of(x).has_value(); }

  std::uint32_t inverse_index(std::uint32_t i) const { return inv_[i]; }

  // canonical_order()[r] = index of the r-th element in key order.
  const std::vector<std::uint32_t>& canonical_order() const { return canon_; }
  std::uint32_t canonical_rank(std::uint32_t idx) const { return rank_[idx]; }

  std::uint64_t order_of(std::uint32_t i) const {
    std::uint32_t cached = orders_[i].load(std::memory_order_relaxed);
    if (cached) return cached;
    const std::uint64_t n = el_[i].order();
    orders_[i].store(static_cast<std::uint32_t>(n), std::memory_order_relaxed);
    return n;
  }

  // Conjugation orbits under the generators; computed once on first use.
  const ConjugacyData& conjugacy() const {
    std::call_once(lazy_->classes_once, [this] { compute_classes(); });
    return lazy_->classes;
  }

  // Order-2 elements, in canonical order; computed once on first use.
  const std::vector<std::uint32_t>& involutions() const {
    std::call_once(lazy_->invol_once, [this] { compute_involutions(); });
    return lazy_->invol;
  }

  std::vector<std::uint32_t> centralizer(const GroupElement& x) const {
    require_index(x);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < el_.size(); ++i)
      if (el_[i] * x == x * el_[i]) out.push_back(i);
    return out;
  }

  friend Group projective_quotient(const Group& g, std::uint64_t cap);

 private:
  Group() = default;

  struct LazyCaches {
    std::once_flag classes_once;
    ConjugacyData classes;
    std::once_flag invol_once;
    std::vector<std::uint32_t> invol;
  };

  void finalize() {
    const std::uint32_t n = static_cast<std::uint32_t>(el_.size());
    inv_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) inv_[i] = require_index(el_[i].inverse());
    std::vector<std::string> keys(n);
    for (std::uint32_t i = 0; i < n; ++i) keys[i] = el_[i].key();
    canon_.resize(n);
    std::iota(canon_.begin(), canon_.end(), 0u);
    std::sort(canon_.begin(), canon_.end(),
              [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    rank_.resize(n);
    for (std::uint32_t r = 0; r < n; ++r) rank_[canon_[r]] = r;
    orders_ = std::make_unique<std::atomic<std::uint32_t>[]>(n);
    for (std::uint32_t i = 0; i < n; ++i) orders_[i].store(0, std::memory_order_relaxed);
    lazy_ = std::make_unique<LazyCaches>();
  }

  void compute_classes() const {
    const std::uint32_t n = static_cast<std::uint32_t>(el_.size());
    std::vector<GroupElement> ginv;
    ginv.reserve(gens_.size());
    for (const GroupElement& g : gens_) ginv.push_back(g.inverse());
    std::vector<std::uint32_t> cls(n, UINT32_MAX);
    std::vector<ConjugacyClass> classes;
    for (std::uint32_t seed = 0; seed < n; ++seed) {
      if (cls[seed] != UINT32_MAX) continue;
      const std::uint32_t id = static_cast<std::uint32_t>(classes.size());
      std::vector<std::uint32_t> members{seed};
      cls[seed] = id;
      for (std::size_t head = 0; head < members.size(); ++head) {
        const GroupElement& x = el_[members[head]];
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
          const GroupElement y = ginv[gi] * x * gens_[gi];
          const std::uint32_t yi = require_index(y);
          if (cls[yi] == UINT32_MAX) {
            cls[yi] = id;
            members.push_back(yi);
          }
        }
      }
      std::sort(members.begin(), members.end());
      std::uint32_t rep = members[0];
      for (std::uint32_t m : members)
        if (rank_[m] < rank_[rep]) rep = m;
      classes.push_back(ConjugacyClass{rep, std::move(members)});
    }
    std::sort(classes.begin(), classes.end(),
              [&](const ConjugacyClass& a, const ConjugacyClass& b) {
                if (a.members.size() != b.members.size())
                  return a.members.size() < b.members.size();
                return rank_[a.representative] < rank_[b.representative];
              });
    for (std::uint32_t c = 0; c < classes.size(); ++c)
      for (std::uint32_t m : classes[c].members) cls[m] = c;
    lazy_->classes.classes = std::move(classes);
    lazy_->classes.class_of = std::move(cls);
  }

  void compute_involutions() const {
    for (std::uint32_t r = 0; r < canon_.size(); ++r) {
      const std::uint32_t i = canon_[r];
      const GroupElement& x = el_[i];
      if (!x.is_identity() && (x * x).is_identity()) lazy_->invol.push_back(i);
    }
  }

  std::vector<GroupElement> el_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<GroupElement> gens_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> canon_;
  std::vector<std::uint32_t> rank_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> orders_;
  std::unique_ptr<LazyCaches> lazy_;
};

// Quotient of a matrix group by its scalar subgroup.  Elements become
// canonical coset representatives (projective-tagged), so products stay
// canonical automatically.  |G| = |G/Z| * |Z| by construction.
inline Group projective_quotient(const Group& g, std::uint64_t cap = kDefaultClosureCap) {
  if (g.order() == 0 || !g.element(0).is_matrix())
    throw TypeMismatchError("projective quotient is defined for matrix groups");
  const FieldRef f = g.element(0).matrix().field();
  // Scalar members actually present in g: the central subgroup being factored out.
  std::vector<std::uint16_t> found;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (g.element(i).matrix().is_scalar()) found.push_back(g.element(i).matrix().at(0, 0));
  // The coset tag must absorb any scalar drift from multiplying representatives,
  // so it is the group generated by the old tag (if any) and the found scalars;
  // it can be strictly larger than the found set when g is already projective.
  std::set<std::uint16_t> span(found.begin(), found.end());
  if (g.element(0).is_projective())
    span.insert(g.element(0).coset()->begin(), g.element(0).coset()->end());
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint16_t a : std::vector<std::uint16_t>(span.begin(), span.end()))
      for (std::uint16_t b : std::vector<std::uint16_t>(span.begin(), span.end()))
        grew = span.insert(f->mul(a, b)).second || grew;
  }
  CosetScalars coset =
      std::make_shared<const std::vector<std::uint16_t>>(span.begin(), span.end());

  Group q;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    GroupElement rep = GroupElement::projective(g.element(i).matrix(), coset);
    std::string k = rep.key();
    if (q.index_.emplace(std::move(k), static_cast<std::uint32_t>(q.el_.size())).second) {
      if (q.el_.size() + 1 > cap)
        throw CapExceededError("projective quotient exceeded cap", q.el_.size() + 1);
      q.el_.push_back(std::move(rep));
    }
  }
  for (const GroupElement& gen : g.generators())
    q.gens_.push_back(GroupElement::projective(gen.matrix(), coset));
  if (q.el_.empty() || !q.el_[0].is_identity())
    throw Error("projective quotient lost the identity representative");
  if (q.el_.size() * found.size() != g.order())
    throw Error("projective quotient violates Lagrange counting");
  q.finalize();
  return q;
}

}  // namespace strongreal
