#pragma once

// Exact arithmetic in GF(p^k), p^k <= 2^16.
//
// Elements are stored as integer codes in [0, q): the base-p digit packing of
// the coefficient vector (c0, c1, ..., c_{k-1}) of the residue c0 + c1 x + ...
// in the polynomial basis.  The modulus is the lexicographically smallest
// monic irreducible polynomial of degree k over F_p, comparing coefficient
// tuples (c0, c1, ...) left to right, so a given (p, k) always produces the
// same field and the same codes.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "strongreal/errors.hpp"

namespace strongreal {

class Field;
using FieldRef = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense coefficient vectors over F_p, little-endian (index i = coeff of x^i).
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  poly_trim(r);
  return r;
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on integers; p prime, a != 0 mod p.
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// a = q*b + r with deg r < deg b.  b nonzero.
inline void poly_divrem(Poly a, const Poly& b, std::uint32_t p, Poly& q, Poly& r) {
  q.assign(a.size(), 0);
  const std::uint32_t binv = inv_mod_p(b.back(), p);
  while (poly_deg(a) >= poly_deg(b) && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint32_t c = (a.back() * binv) % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint32_t sub = (c * b[i]) % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    poly_trim(a);
  }
  r = a;
  poly_trim(q);
}

inline bool poly_divides(const Poly& d, const Poly& a, std::uint32_t p) {
  Poly q, r;
  poly_divrem(a, d, p, q, r);
  return r.empty();
}

// Monic poly of degree k with the given lex rank; c0 is the most significant
// position of the tuple.
inline Poly poly_from_lex_rank(std::uint64_t rank, std::uint32_t k, std::uint32_t p) {
  Poly c(k + 1, 0);
  c[k] = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint64_t weight = 1;
    for (std::uint32_t j = 0; j < k - 1 - i; ++j) weight *= p;
    c[i] = static_cast<std::uint32_t>((rank / weight) % p);
  }
  return c;
}

inline bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const int k = poly_deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = r;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  // Memoized: the same (p, k) always returns the same instance, so FieldRef
  // pointer equality is field equality.
  static FieldRef make(std::uint32_t p, std::uint32_t k) {
    if (!detail::is_prime_u32(p))
      throw InvalidFieldError("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw InvalidFieldError("field degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxSize)
        throw InvalidFieldError("field size " + std::to_string(p) + "^" + std::to_string(k) +
                                " exceeds 2^16");
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldRef> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = FieldRef(new Field(p, k, static_cast<std::uint32_t>(q)));
    return slot;
  }

  static FieldRef make_from_size(std::uint32_t q) {
    if (q < 2) throw InvalidFieldError("field size must be >= 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 0) return make(q, 1);
    std::uint32_t k = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
    if (t != 1)
      throw InvalidFieldError("field size " + std::to_string(q) + " is not a prime power");
    return make(p, k);
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }

  // Modulus coefficients c0..ck (monic, ck = 1).
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  std::uint16_t zero() const { return 0; }
  std::uint16_t one() const { return 1; }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    if (dense_) return add_[std::size_t(a) * q_ + b];
    return slow_add(a, b);
  }

  std::uint16_t neg(std::uint16_t a) const {
    if (dense_) return neg_[a];
    return slow_neg(a);
  }

  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add(a, neg(b)); }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (dense_) return mul_[std::size_t(a) * q_ + b];
    return slow_mul(a, b);
  }

  std::uint16_t inv(std::uint16_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }

  std::uint16_t div(std::uint16_t a, std::uint16_t b) const { return mul(a, inv(b)); }

  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const {
    std::uint16_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // a^(p^e).  The Frobenius automorphism iterated e times (e mod k matters).
  std::uint16_t frobenius(std::uint16_t a, std::uint32_t e = 1) const {
    std::uint16_t r = a;
    for (std::uint32_t i = 0; i < e % k_; ++i) r = pow(r, p_);
    return r;
  }

  // Smallest code generating the multiplicative group.
  std::uint16_t primitive_element() const { return prim_; }

  // Embeds an integer via its residue mod p (so -1 becomes p-1).
  std::uint16_t from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint16_t>(m);
  }

  std::uint16_t from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > k_)
      throw InvalidFieldError("coefficient vector longer than field degree");
    std::uint32_t code = 0, w = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= p_) throw InvalidFieldError("coefficient out of range");
      code += c[i] * w;
      w *= p_;
    }
    return static_cast<std::uint16_t>(code);
  }

  std::vector<std::uint32_t> coeffs(std::uint16_t a) const {
    std::vector<std::uint32_t> c(k_);
    std::uint32_t t = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
      c[i] = t % p_;
      t /= p_;
    }
    return c;
  }

  // "c0:c1:...:c_{k-1}", always k digits.
  std::string code_to_text(std::uint16_t a) const {
    std::ostringstream os;
    auto c = coeffs(a);
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (i) os << ':';
      os << c[i];
    }
    return os.str();
  }

  std::uint16_t text_to_code(const std::string& s) const {
    std::vector<std::uint32_t> c;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find(':', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty()) throw ParseError("empty field coefficient in '" + s + "'");
      std::uint64_t v = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError("bad field coefficient '" + tok + "'");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v >= p_) throw ParseError("field coefficient " + tok + " not reduced mod p");
      }
      c.push_back(static_cast<std::uint32_t>(v));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (c.size() != k_)
      throw ParseError("expected " + std::to_string(k_) + " coefficients in '" + s + "'");
    return from_coeffs(c);
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::uint32_t q) : p_(p), k_(k), q_(q) {
    // Lex-smallest monic irreducible modulus.
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    detail::Poly m;
    for (std::uint64_t r = 0; r < total; ++r) {
      m = detail::poly_from_lex_rank(r, k, p);
      if (detail::poly_irreducible(m, p)) break;
      m.clear();
    }
    mod_.assign(m.begin(), m.end());

    // redrow_[j] = coefficients of x^(k+j) mod m, j = 0..k-2.
    if (k >= 2) {
      redrow_.assign(std::size_t(k - 1) * k, 0);
      std::vector<std::uint32_t> cur(k);
      for (std::uint32_t i = 0; i < k; ++i) cur[i] = (p - mod_[i] % p) % p;  // x^k mod m
      for (std::uint32_t j = 0; j + 1 < k; ++j) {
        for (std::uint32_t i = 0; i < k; ++i) redrow_[std::size_t(j) * k + i] = cur[i];
        if (j + 2 < k) {
          // cur *= x mod m
          std::uint32_t top = cur[k - 1];
          for (std::uint32_t i = k - 1; i > 0; --i) cur[i] = cur[i - 1];
          cur[0] = 0;
          if (top)
            for (std::uint32_t i = 0; i < k; ++i)
              cur[i] = (cur[i] + top * ((p - mod_[i] % p) % p)) % p;
        }
      }
    }

    dense_ = q_ <= kDenseLimit;
    if (dense_) {
      add_.resize(std::size_t(q_) * q_);
      mul_.resize(std::size_t(q_) * q_);
      neg_.resize(q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        neg_[a] = slow_neg(static_cast<std::uint16_t>(a));
        for (std::uint32_t b = 0; b < q_; ++b) {
          add_[std::size_t(a) * q_ + b] = slow_add(static_cast<std::uint16_t>(a),
                                                   static_cast<std::uint16_t>(b));
          mul_[std::size_t(a) * q_ + b] = slow_mul(static_cast<std::uint16_t>(a),
                                                   static_cast<std::uint16_t>(b));
        }
      }
    }

    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a)
      inv_[a] = poly_inverse(static_cast<std::uint16_t>(a));

    prim_ = 1;
    if (q_ > 2) {
      std::vector<std::uint32_t> rad;
      std::uint32_t m = q_ - 1;
      for (std::uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          rad.push_back(d);
          while (m % d == 0) m /= d;
        }
      if (m > 1) rad.push_back(m);
      for (std::uint32_t c = 2; c < q_; ++c) {
        bool gen = true;
        for (std::uint32_t r : rad)
          if (pow(static_cast<std::uint16_t>(c), (q_ - 1) / r) == one()) {
            gen = false;
            break;
          }
        if (gen) {
          prim_ = static_cast<std::uint16_t>(c);
          break;
        }
      }
    }
  }

  static constexpr std::uint32_t kDenseLimit = 256;

  std::uint16_t slow_add(std::uint16_t a, std::uint16_t b) const {
    std::uint32_t ta = a, tb = b, code = 0, w = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      code += ((ta % p_ + tb % p_) % p_) * w;
      ta /= p_;
      tb /= p_;
      w *= p_;
    }
    return static_cast<std::uint16_t>(code);
  }

  std::uint16_t slow_neg(std::uint16_t a) const {
    std::uint32_t ta = a, code = 0, w = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      code += ((p_ - ta % p_) % p_) * w;
      ta /= p_;
      w *= p_;
    }
    return static_cast<std::uint16_t>(code);
  }

  std::uint16_t slow_mul(std::uint16_t a, std::uint16_t b) const {
    if (k_ == 1) return static_cast<std::uint16_t>((std::uint32_t(a) * b) % p_);
    std::array<std::uint32_t, 31> acc{};  // k <= 16, so 2k-1 <= 31
    std::uint32_t da[16], db[16];
    std::uint32_t ta = a, tb = b;
    for (std::uint32_t i = 0; i < k_; ++i) {
      da[i] = ta % p_;
      ta /= p_;
      db[i] = tb % p_;
      tb /= p_;
    }
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (!da[i]) continue;
      for (std::uint32_t j = 0; j < k_; ++j) acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    }
    for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
      const std::uint32_t c = acc[d];
      if (c) {
        const std::uint32_t* row = &redrow_[std::size_t(d - k_) * k_];
        for (std::uint32_t i = 0; i < k_; ++i) acc[i] = (acc[i] + c * row[i]) % p_;
      }
      if (d == k_) break;
    }
    std::uint32_t code = 0, w = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      code += acc[i] * w;
      w *= p_;
    }
    return static_cast<std::uint16_t>(code);
  }

  std::uint16_t poly_inverse(std::uint16_t a) const {
    // Extended Euclid in F_p[x] against the modulus.
    detail::Poly r0(mod_.begin(), mod_.end()), r1;
    {
      std::uint32_t t = a;
      for (std::uint32_t i = 0; i < k_; ++i) {
        r1.push_back(t % p_);
        t /= p_;
      }
      detail::poly_trim(r1);
    }
    detail::Poly s0, s1{1};
    while (!r1.empty()) {
      detail::Poly q, r;
      detail::poly_divrem(r0, r1, p_, q, r);
      detail::Poly qs = detail::poly_mul(q, s1, p_);
      detail::Poly s2(std::max(s0.size(), qs.size()), 0);
      for (std::size_t i = 0; i < s2.size(); ++i) {
        std::uint32_t x = i < s0.size() ? s0[i] : 0;
        std::uint32_t y = i < qs.size() ? qs[i] : 0;
        s2[i] = (x + p_ - y) % p_;
      }
      detail::poly_trim(s2);
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s2;
    }
    // r0 = gcd (a unit); normalize it to 1.
    const std::uint32_t c = detail::inv_mod_p(r0[0], p_);
    std::uint32_t code = 0, w = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t digit = i < s0.size() ? (s0[i] * c) % p_ : 0;
      code += digit * w;
      w *= p_;
    }
    return static_cast<std::uint16_t>(code);
  }

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint32_t> redrow_;
  bool dense_ = false;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::uint16_t prim_ = 1;
};

// Checked value type over a Field; convenient for tests and small formulas.
// Hot paths work on raw codes through Field directly.
struct FieldElement {
  FieldRef field;
  std::uint16_t code = 0;

  FieldElement() = default;
  FieldElement(FieldRef f, std::uint16_t c) : field(std::move(f)), code(c) {}

  static FieldElement of(const FieldRef& f, std::int64_t v) { return {f, f->from_int(v)}; }

  bool is_zero() const { return code == 0; }

  friend void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field || a.field != b.field)
      throw FieldMismatchError("field elements from different fields");
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field->add(a.code, b.code)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field->sub(a.code, b.code)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field->mul(a.code, b.code)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field->div(a.code, b.code)};
  }
  FieldElement operator-() const { return {field, field->neg(code)}; }
  FieldElement inverse() const { return {field, field->inv(code)}; }
  FieldElement pow(std::uint64_t e) const { return {field, field->pow(code, e)}; }
  FieldElement frobenius(std::uint32_t e = 1) const { return {field, field->frobenius(code, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a.code == b.code;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_text() const { return field->code_to_text(code); }
};

}  // namespace strongreal
