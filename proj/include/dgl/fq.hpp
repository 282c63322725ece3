#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgl {

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Context for F_q, q = p^m.  Elements are stored packed as an integer in
// [0, p^m): the element sum c_i x^i (c_i in F_p) is stored as sum c_i p^i,
// where x is the class of the defining modulus variable.  For m = 1 the
// packed value is just the residue mod p.
class FqCtx {
 public:
  explicit FqCtx(uint32_t p) : FqCtx(p, {}) {}

  // modulus: coefficients c_0..c_m of a monic irreducible over F_p
  // (empty means m = 1).
  FqCtx(uint32_t p, std::vector<uint32_t> modulus) : p_(p), mod_(std::move(modulus)) {
    if (p < 2 || !is_prime(p)) throw config_error("q = p^m requires prime p, got p=" + std::to_string(p));
    if (mod_.empty()) {
      m_ = 1;
    } else {
      if (mod_.size() < 3) throw config_error("extension modulus must have degree >= 2");
      for (auto& c : mod_) c %= p_;
      if (mod_.back() != 1) throw config_error("extension modulus must be monic");
      m_ = static_cast<uint32_t>(mod_.size() - 1);
      if (!modulus_irreducible()) throw config_error("extension modulus is reducible over F_p");
    }
    q_ = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      if (q_ > (1ull << 40) / p_) throw config_error("q too large");
      q_ *= p_;
    }
  }

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }

  uint64_t add(uint64_t a, uint64_t b) const {
    if (m_ == 1) {
      uint64_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return digitwise(a, b, /*sub=*/false);
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    if (m_ == 1) return a >= b ? a - b : a + p_ - b;
    return digitwise(a, b, /*sub=*/true);
  }
  uint64_t neg(uint64_t a) const { return sub(0, a); }

  uint64_t mul(uint64_t a, uint64_t b) const {
    if (m_ == 1) return (a * b) % p_;
    return mul_ext(a, b);
  }

  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  uint64_t inv(uint64_t a) const {
    if (a == 0) throw internal_error("division by zero in F_q");
    return pow(a, q_ - 2);
  }

  // canonical embedding of integers (useful for small constants and CLI input)
  uint64_t from_int(int64_t n) const {
    int64_t r = n % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint64_t>(r);
  }

  std::vector<uint32_t> digits(uint64_t a) const {
    std::vector<uint32_t> d(m_);
    for (uint32_t i = 0; i < m_; ++i) {
      d[i] = static_cast<uint32_t>(a % p_);
      a /= p_;
    }
    return d;
  }
  uint64_t from_digits(const std::vector<uint32_t>& d) const {
    if (d.size() > m_) {
      for (size_t i = m_; i < d.size(); ++i)
        if (d[i] % p_ != 0) throw config_error("element digit list longer than field degree");
    }
    uint64_t a = 0;
    for (size_t i = std::min<size_t>(d.size(), m_); i-- > 0;) a = a * p_ + (d[i] % p_);
    return a;
  }

  bool operator==(const FqCtx& o) const { return p_ == o.p_ && mod_ == o.mod_; }

 private:
  uint32_t p_, m_;
  uint64_t q_;
  std::vector<uint32_t> mod_;

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  uint64_t digitwise(uint64_t a, uint64_t b, bool sub) const {
    uint64_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      uint64_t da = a % p_, db = b % p_;
      a /= p_;
      b /= p_;
      uint64_t dc = sub ? (da >= db ? da - db : da + p_ - db) : (da + db >= p_ ? da + db - p_ : da + db);
      r += dc * mult;
      mult *= p_;
    }
    return r;
  }

  uint64_t mul_ext(uint64_t a, uint64_t b) const {
    // schoolbook product of digit vectors, reduced mod the modulus
    std::vector<uint32_t> da = digits(a), db = digits(b);
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i)
      for (uint32_t j = 0; j < m_; ++j) prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    for (size_t k = prod.size(); k-- > m_;) {
      uint64_t c = prod[k] % p_;
      if (c == 0) continue;
      // x^k = x^(k-m) * (x^m), and x^m = -(mod_0 + ... + mod_{m-1} x^{m-1})
      for (uint32_t i = 0; i < m_; ++i) {
        uint64_t s = (c * (p_ - mod_[i] % p_)) % p_;
        prod[k - m_ + i] += s;
      }
      prod[k] = 0;
    }
    uint64_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      r += (prod[i] % p_) * mult;
      mult *= p_;
    }
    return r;
  }

  bool modulus_irreducible() const {
    // x^(p^m) == x mod modulus, and x^(p^(m/e)) != x for prime e | m
    auto powx = [&](uint64_t e) {
      // compute x^(p^e) mod modulus by repeated Frobenius of x
      FqCtx tmp(*this);  // safe: only uses mul_ext which reads mod_
      uint64_t xv = p_;  // the element "x"
      uint64_t r = xv;
      for (uint64_t i = 0; i < e; ++i) r = tmp.pow(r, p_);
      return r;
    };
    if (powx(m_) != p_) return false;
    for (uint32_t e = 2; e <= m_; ++e)
      if (m_ % e == 0 && is_prime(e) && powx(m_ / e) == p_) return false;
    return true;
  }
};

// Value type for a single F_q element.  Carries its context so generic
// code over rings can treat it like any other self-contained ring element.
struct Fq {
  const FqCtx* C = nullptr;
  uint64_t v = 0;

  Fq() = default;
  Fq(const FqCtx& ctx, uint64_t value) : C(&ctx), v(value) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }

  Fq operator+(const Fq& o) const { return Fq(*C, C->add(v, o.v)); }
  Fq operator-(const Fq& o) const { return Fq(*C, C->sub(v, o.v)); }
  Fq operator*(const Fq& o) const { return Fq(*C, C->mul(v, o.v)); }
  Fq operator-() const { return Fq(*C, C->neg(v)); }
  Fq inv() const { return Fq(*C, C->inv(v)); }
  Fq operator/(const Fq& o) const { return *this * o.inv(); }
  Fq pow(uint64_t e) const { return Fq(*C, C->pow(v, e)); }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  bool operator==(const Fq& o) const { return v == o.v; }
  bool operator!=(const Fq& o) const { return v != o.v; }
};

inline Fq zero_like(const Fq& x) { return Fq(*x.C, 0); }
inline Fq one_like(const Fq& x) { return Fq(*x.C, 1); }
inline bool is_zero(const Fq& x) { return x.v == 0; }

// Frobenius twists fix F_q pointwise; exposed for ring-generic code.
inline Fq twist(const Fq& x, long /*n*/) { return x; }

}  // namespace dgl
