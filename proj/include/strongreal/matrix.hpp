#pragma once

// Square matrices over a shared Field, dimension 1..8.  Entries are stored as
// field codes row-major.  The canonical text form "n;q;e11,e12,...,enn" with
// entries "c0:c1:..." round-trips bit-exactly and is what reports print.

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strongreal/errors.hpp"
#include "strongreal/field.hpp"

namespace strongreal {

class Matrix {
 public:
  static constexpr std::uint32_t kMaxDim = 8;

  Matrix(FieldRef f, std::uint32_t n) : f_(std::move(f)), n_(n) {
    if (n < 1 || n > kMaxDim)
      throw InvalidDegreeError("matrix dimension must be in [1,8], got " + std::to_string(n));
    a_.assign(std::size_t(n) * n, 0);
  }

  static Matrix identity(const FieldRef& f, std::uint32_t n) {
    Matrix m(f, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, f->one());
    return m;
  }

  static Matrix scalar(const FieldRef& f, std::uint32_t n, std::uint16_t lambda) {
    Matrix m(f, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, lambda);
    return m;
  }

  // Integer literals are embedded via residue mod p, so -1 works in odd
  // characteristic and becomes 1 in characteristic 2.
  static Matrix from_ints(const FieldRef& f,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    Matrix m(f, static_cast<std::uint32_t>(rows.size()));
    std::uint32_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw InvalidDegreeError("matrix literal is not square");
      std::uint32_t j = 0;
      for (std::int64_t v : row) m.set(i, j++, f->from_int(v));
      ++i;
    }
    return m;
  }

  const FieldRef& field() const { return f_; }
  std::uint32_t dim() const { return n_; }

  std::uint16_t at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * n_ + j]; }
  void set(std::uint32_t i, std::uint32_t j, std::uint16_t code) {
    a_[std::size_t(i) * n_ + j] = code;
  }

  FieldElement elem(std::uint32_t i, std::uint32_t j) const { return {f_, at(i, j)}; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.f_ != b.f_) throw FieldMismatchError("matrix product across different fields");
    if (a.n_ != b.n_) throw InvalidDegreeError("matrix product dimension mismatch");
    const Field& F = *a.f_;
    const std::uint32_t n = a.n_;
    Matrix c(a.f_, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint16_t aik = a.at(i, k);
        if (!aik) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
          const std::uint16_t prod = F.mul(aik, b.at(k, j));
          if (prod) c.set(i, j, F.add(c.at(i, j), prod));
        }
      }
    return c;
  }

  Matrix transpose() const {
    Matrix t(f_, n_);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) t.set(j, i, at(i, j));
    return t;
  }

  Matrix scaled(std::uint16_t lambda) const {
    Matrix s(f_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = f_->mul(a_[i], lambda);
    return s;
  }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? f_->one() : 0)) return false;
    return true;
  }

  bool is_scalar() const {
    const std::uint16_t d = at(0, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? d : 0)) return false;
    return true;
  }

  std::uint16_t det() const {
    const Field& F = *f_;
    std::vector<std::uint16_t> m = a_;
    auto at2 = [&](std::uint32_t i, std::uint32_t j) -> std::uint16_t& {
      return m[std::size_t(i) * n_ + j];
    };
    std::uint16_t d = F.one();
    for (std::uint32_t col = 0; col < n_; ++col) {
      std::uint32_t piv = col;
      while (piv < n_ && at2(piv, col) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != col) {
        for (std::uint32_t j = 0; j < n_; ++j) std::swap(at2(piv, j), at2(col, j));
        d = F.neg(d);
      }
      d = F.mul(d, at2(col, col));
      const std::uint16_t pinv = F.inv(at2(col, col));
      for (std::uint32_t r = col + 1; r < n_; ++r) {
        const std::uint16_t factor = F.mul(at2(r, col), pinv);
        if (!factor) continue;
        for (std::uint32_t j = col; j < n_; ++j)
          at2(r, j) = F.sub(at2(r, j), F.mul(factor, at2(col, j)));
      }
    }
    return d;
  }

  Matrix inverse() const {
    const Field& F = *f_;
    std::vector<std::uint16_t> m = a_;
    Matrix inv = identity(f_, n_);
    auto at2 = [&](std::uint32_t i, std::uint32_t j) -> std::uint16_t& {
      return m[std::size_t(i) * n_ + j];
    };
    for (std::uint32_t col = 0; col < n_; ++col) {
      std::uint32_t piv = col;
      while (piv < n_ && at2(piv, col) == 0) ++piv;
      if (piv == n_) throw SingularMatrixError("matrix is singular");
      if (piv != col)
        for (std::uint32_t j = 0; j < n_; ++j) {
          std::swap(at2(piv, j), at2(col, j));
          std::uint16_t t = inv.at(piv, j);
          inv.set(piv, j, inv.at(col, j));
          inv.set(col, j, t);
        }
      const std::uint16_t pinv = F.inv(at2(col, col));
      for (std::uint32_t j = 0; j < n_; ++j) {
        at2(col, j) = F.mul(at2(col, j), pinv);
        inv.set(col, j, F.mul(inv.at(col, j), pinv));
      }
      for (std::uint32_t r = 0; r < n_; ++r) {
        if (r == col) continue;
        const std::uint16_t factor = at2(r, col);
        if (!factor) continue;
        for (std::uint32_t j = 0; j < n_; ++j) {
          at2(r, j) = F.sub(at2(r, j), F.mul(factor, at2(col, j)));
          inv.set(r, j, F.sub(inv.at(r, j), F.mul(factor, inv.at(col, j))));
        }
      }
    }
    return inv;
  }

  // Injective byte key; lexicographic comparison of keys is the canonical
  // element order used everywhere.
  std::string key() const {
    std::string s;
    s.reserve(5 + a_.size() * 2);
    s.push_back('M');
    s.push_back(static_cast<char>(n_));
    s.push_back(static_cast<char>(f_->size() & 0xff));
    s.push_back(static_cast<char>((f_->size() >> 8) & 0xff));
    s.push_back(static_cast<char>((f_->size() >> 16) & 0xff));
    for (std::uint16_t c : a_) {
      s.push_back(static_cast<char>((c >> 8) & 0xff));
      s.push_back(static_cast<char>(c & 0xff));
    }
    return s;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << n_ << ';' << f_->size() << ';';
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i) os << ',';
      os << f_->code_to_text(a_[i]);
    }
    return os.str();
  }

  static Matrix from_text(const std::string& s) {
    const std::size_t p1 = s.find(';');
    const std::size_t p2 = p1 == std::string::npos ? std::string::npos : s.find(';', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw ParseError("matrix text needs 'n;q;entries': '" + s + "'");
    auto parse_u32 = [](const std::string& t) -> std::uint32_t {
      if (t.empty()) throw ParseError("empty number in matrix text");
      std::uint64_t v = 0;
      for (char ch : t) {
        if (ch < '0' || ch > '9') throw ParseError("bad number '" + t + "' in matrix text");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v > 0xffffffffull) throw ParseError("number overflow in matrix text");
      }
      return static_cast<std::uint32_t>(v);
    };
    const std::uint32_t n = parse_u32(s.substr(0, p1));
    const std::uint32_t q = parse_u32(s.substr(p1 + 1, p2 - p1 - 1));
    FieldRef f = Field::make_from_size(q);
    Matrix m(f, n);
    std::size_t pos = p2 + 1;
    for (std::uint32_t idx = 0; idx < n * n; ++idx) {
      std::size_t next = s.find(',', pos);
      const bool last = idx + 1 == n * n;
      if (last != (next == std::string::npos))
        throw ParseError("expected " + std::to_string(n * n) + " matrix entries");
      std::string tok = last ? s.substr(pos) : s.substr(pos, next - pos);
      m.a_[idx] = f->text_to_code(tok);
      pos = last ? s.size() : next + 1;
    }
    return m;
  }

 private:
  FieldRef f_;
  std::uint32_t n_;
  std::vector<std::uint16_t> a_;
};

// y -> (y^-1)^T, the outer automorphism used for the linear case.
inline Matrix iota_sl(const Matrix& y) { return y.inverse().transpose(); }

// The fixed hermitian form matrix for the unitary case.
inline Matrix su3_form(const FieldRef& f) {
  return Matrix::from_ints(f, {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
}

// y -> A (y^-1)^T A over GF(q^2), 3x3 only.
inline Matrix iota_su(const Matrix& y) {
  if (y.dim() != 3) throw UnsupportedParameterError("iota_su is defined for 3x3 matrices");
  const Matrix A = su3_form(y.field());
  return A * y.inverse().transpose() * A;
}

// Entrywise e -> e^t where t must be a power of the field characteristic.
inline Matrix entrywise_power(const Matrix& y, std::uint64_t t) {
  const Field& F = *y.field();
  std::uint32_t e = 0;
  std::uint64_t rest = t;
  while (rest > 1 && rest % F.characteristic() == 0) {
    rest /= F.characteristic();
    ++e;
  }
  if (rest != 1)
    throw UnsupportedParameterError("entrywise power " + std::to_string(t) +
                                    " is not a power of the characteristic");
  Matrix r(y.field(), y.dim());
  for (std::uint32_t i = 0; i < y.dim(); ++i)
    for (std::uint32_t j = 0; j < y.dim(); ++j) r.set(i, j, F.frobenius(y.at(i, j), e));
  return r;
}

}  // namespace strongreal
