#pragma once

// Exact scalars: arbitrary-precision rationals (characteristic 0) and
// residues mod a prime. No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace descentlab {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long num) : v_(static_cast<long>(num)) {}
  Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  long long to_ll() const {
    if (!is_integer()) throw std::domain_error("not an integer");
    return static_cast<long long>(v_.get_num().get_si());
  }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(uint32_t v, uint32_t p) : v_(v % p), p_(p) {}

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { check(o); v_ = (v_ + o.v_) % p_; return *this; }
  Fp& operator-=(const Fp& o) { check(o); v_ = (v_ + p_ - o.v_) % p_; return *this; }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<uint32_t>((static_cast<uint64_t>(v_) * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // p prime: v^(p-2)
    uint64_t base = v_, acc = 1, e = p_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Fp(static_cast<uint32_t>(acc), p_);
  }

  std::string str() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field mismatch");
  }
  uint32_t v_, p_;
};

// Field contexts: carry the characteristic and build elements.
struct QQ {
  using Elem = Rational;
  int p() const { return 0; }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long k) const { return Rational(k); }
};

struct GF {
  uint32_t prime;
  explicit GF(uint32_t p) : prime(p) {
    if (p < 2) throw std::invalid_argument("GF needs a prime");
  }
  using Elem = Fp;
  int p() const { return static_cast<int>(prime); }
  Elem zero() const { return Fp(0, prime); }
  Elem one() const { return Fp(1, prime); }
  Elem from_int(long long k) const {
    long long r = k % static_cast<long long>(prime);
    if (r < 0) r += prime;
    return Fp(static_cast<uint32_t>(r), prime);
  }
};

}  // namespace descentlab
