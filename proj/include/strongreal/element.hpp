#pragma once

// GroupElement: tagged union of Matrix and Permutation, with an optional
// projective tag.  A tagged matrix element is the canonical representative of
// its scalar coset (lexicographically smallest key among lambda*M for lambda
// in the coset scalar list), and multiplication re-canonicalizes, so quotient
// groups flow through every group algorithm unchanged.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strongreal/errors.hpp"
#include "strongreal/matrix.hpp"
#include "strongreal/permutation.hpp"

namespace strongreal {

using CosetScalars = std::shared_ptr<const std::vector<std::uint16_t>>;

class GroupElement {
 public:
  explicit GroupElement(Matrix m) : v_(std::move(m)) {}
  explicit GroupElement(Permutation p) : v_(std::move(p)) {}

  static GroupElement projective(Matrix m, CosetScalars scalars) {
    GroupElement e(std::move(m));
    e.coset_ = std::move(scalars);
    e.canonicalize();
    return e;
  }

  bool is_matrix() const { return std::holds_alternative<Matrix>(v_); }
  bool is_permutation() const { return std::holds_alternative<Permutation>(v_); }
  const Matrix& matrix() const { return std::get<Matrix>(v_); }
  const Permutation& permutation() const { return std::get<Permutation>(v_); }
  bool is_projective() const { return static_cast<bool>(coset_); }
  const CosetScalars& coset() const { return coset_; }

  bool same_shape(const GroupElement& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (is_matrix()) {
      if (matrix().field() != o.matrix().field() || matrix().dim() != o.matrix().dim())
        return false;
      if (static_cast<bool>(coset_) != static_cast<bool>(o.coset_)) return false;
      if (coset_ && coset_ != o.coset_ && *coset_ != *o.coset_) return false;
      return true;
    }
    return permutation().degree() == o.permutation().degree();
  }

  GroupElement identity() const {
    if (is_matrix()) {
      GroupElement e(Matrix::identity(matrix().field(), matrix().dim()));
      e.coset_ = coset_;  // identity is its own coset representative
      return e;
    }
    return GroupElement(Permutation::identity(permutation().degree()));
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (!a.same_shape(b))
      throw TypeMismatchError("product of group elements of different shapes");
    if (a.is_matrix()) {
      GroupElement e(a.matrix() * b.matrix());
      e.coset_ = a.coset_;
      e.canonicalize();
      return e;
    }
    return GroupElement(a.permutation() * b.permutation());
  }

  GroupElement inverse() const {
    if (is_matrix()) {
      GroupElement e(matrix().inverse());
      e.coset_ = coset_;
      e.canonicalize();
      return e;
    }
    return GroupElement(permutation().inverse());
  }

  // g^-1 * this * g
  GroupElement conjugated_by(const GroupElement& g) const { return g.inverse() * *this * g; }

  bool is_identity() const {
    if (is_matrix()) return matrix().is_identity();
    return permutation().is_identity();
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_matrix()) return a.matrix() == b.matrix();
    return a.permutation() == b.permutation();
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

  std::string key() const {
    if (is_matrix()) return matrix().key();
    return permutation().key();
  }

  std::string to_text() const {
    if (is_matrix()) return matrix().to_text();
    return permutation().to_text();
  }

  // Multiplicative order, computed directly.
  std::uint64_t order() const {
    GroupElement y = *this;
    std::uint64_t n = 1;
    while (!y.is_identity()) {
      y = y * *this;
      if (++n > kOrderGuard) throw Error("element order exceeds sanity guard");
    }
    return n;
  }

 private:
  static constexpr std::uint64_t kOrderGuard = 100'000'000;

  void canonicalize() {
    if (!coset_ || !is_matrix()) return;
    const Matrix& m = matrix();
    Matrix best = m;
    std::string best_key = m.key();
    for (std::uint16_t lambda : *coset_) {
      if (lambda == m.field()->one()) continue;
      Matrix cand = m.scaled(lambda);
      std::string k = cand.key();
      if (k < best_key) {
        best = std::move(cand);
        best_key = std::move(k);
      }
    }
    v_ = std::move(best);
  }

  std::variant<Matrix, Permutation> v_;
  CosetScalars coset_;
};

}  // namespace strongreal
