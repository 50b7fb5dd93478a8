#pragma once

// Permutations on {1..n}, stored 0-based.  Degree fits uint16 (J1's natural
// degree 266 is the largest anything here needs).

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "strongreal/errors.hpp"

namespace strongreal {

class Permutation {
 public:
  static constexpr std::uint32_t kMaxDegree = 65535;

  explicit Permutation(std::vector<std::uint16_t> images0) : img_(std::move(images0)) {
    if (img_.empty() || img_.size() > kMaxDegree)
      throw InvalidDegreeError("permutation degree must be in [1,65535]");
  }

  static Permutation identity(std::uint32_t n) {
    if (n < 1 || n > kMaxDegree)
      throw InvalidDegreeError("permutation degree must be in [1,65535]");
    std::vector<std::uint16_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = static_cast<std::uint16_t>(i);
    return Permutation(std::move(v));
  }

  // Validated 1-based image list, as read from permutation files.
  static Permutation from_one_based(const std::vector<std::uint64_t>& images,
                                    std::size_t line = 0) {
    const std::size_t n = images.size();
    if (n < 1 || n > kMaxDegree)
      throw InvalidPermutationError("permutation degree must be in [1,65535]", line);
    std::vector<std::uint16_t> v(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (images[i] < 1 || images[i] > n)
        throw InvalidPermutationError(
            "image " + std::to_string(images[i]) + " out of range 1.." + std::to_string(n), line);
      const std::size_t z = static_cast<std::size_t>(images[i] - 1);
      if (seen[z])
        throw InvalidPermutationError("duplicate image " + std::to_string(images[i]), line);
      seen[z] = true;
      v[i] = static_cast<std::uint16_t>(z);
    }
    return Permutation(std::move(v));
  }

  // 3-cycle (a b c), 1-based points.
  static Permutation three_cycle(std::uint32_t n, std::uint32_t a, std::uint32_t b,
                                 std::uint32_t c) {
    Permutation p = identity(n);
    p.img_[a - 1] = static_cast<std::uint16_t>(b - 1);
    p.img_[b - 1] = static_cast<std::uint16_t>(c - 1);
    p.img_[c - 1] = static_cast<std::uint16_t>(a - 1);
    return p;
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint16_t image(std::uint32_t i) const { return img_[i]; }

  // Composition: apply *this first, then other.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw InvalidDegreeError("permutation product degree mismatch");
    std::vector<std::uint16_t> v(a.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.img_[a.img_[i]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<std::uint16_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint16_t>(i);
    return Permutation(std::move(v));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

  std::string key() const {
    std::string s;
    s.reserve(3 + img_.size() * 2);
    s.push_back('P');
    s.push_back(static_cast<char>(img_.size() & 0xff));
    s.push_back(static_cast<char>((img_.size() >> 8) & 0xff));
    for (std::uint16_t c : img_) {
      s.push_back(static_cast<char>((c >> 8) & 0xff));
      s.push_back(static_cast<char>(c & 0xff));
    }
    return s;
  }

  // "p;degree;i1,i2,..." with 1-based images.
  std::string to_text() const {
    std::ostringstream os;
    os << "p;" << img_.size() << ';';
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (i) os << ',';
      os << img_[i] + 1;
    }
    return os.str();
  }

 private:
  std::vector<std::uint16_t> img_;
};

}  // namespace strongreal
