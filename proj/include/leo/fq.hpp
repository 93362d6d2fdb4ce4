#pragma once

// Small finite fields F_{p^f} with a canonical (reproducible) modulus choice.
// Elements are coefficient vectors of length f over F_p, low degree first.
// All sizes here are desk scale: p <= a few hundred, f <= 8 or so.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "leo/errors.hpp"

namespace leo {

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

bool is_prime_u64(uint64_t n);

class FqField {
 public:
  // Canonical field: modulus is the lexicographically least monic irreducible
  // polynomial of degree f (coefficients compared low to high degree).
  static FieldPtr make(uint32_t p, uint32_t f);
  // Non-canonical construction from an explicit monic irreducible modulus.
  static FieldPtr make_with_modulus(uint32_t p, std::vector<uint32_t> modulus);

  uint32_t p() const { return p_; }
  uint32_t f() const { return f_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // Raw coefficient-vector operations; every pointer refers to f words.
  void set_zero(uint32_t* a) const;
  void set_scalar(uint32_t* a, uint32_t s) const;  // s already reduced mod p
  bool is_zero(const uint32_t* a) const;
  bool equal(const uint32_t* a, const uint32_t* b) const;
  void add(uint32_t* out, const uint32_t* a, const uint32_t* b) const;
  void sub(uint32_t* out, const uint32_t* a, const uint32_t* b) const;
  void neg(uint32_t* out, const uint32_t* a) const;
  void mul(uint32_t* out, const uint32_t* a, const uint32_t* b) const;
  void scalar_mul(uint32_t* out, const uint32_t* a, uint32_t s) const;
  void scalar_mul_add(uint32_t* out, const uint32_t* a, uint32_t s) const;  // out += s*a
  void pow(uint32_t* out, const uint32_t* a, uint64_t e) const;
  void inv(uint32_t* out, const uint32_t* a) const;  // requires a != 0

  uint64_t encode(const uint32_t* a) const;  // sum of c_i p^i
  void decode(uint32_t* out, uint64_t code) const;
  uint64_t mul_order(const uint32_t* a) const;  // requires a != 0

  std::string str(const uint32_t* a) const;

 private:
  FqField(uint32_t p, uint32_t f, std::vector<uint32_t> modulus);
  uint32_t p_, f_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;  // length f+1, monic
};

// Two handles denote the same field when (p, f, modulus) agree.
bool same_field(const FieldPtr& a, const FieldPtr& b);

class FqElem {
 public:
  FqElem() = default;
  FqElem(FieldPtr k, std::vector<uint32_t> coeffs);
  static FqElem zero(const FieldPtr& k);
  static FqElem one(const FieldPtr& k);
  static FqElem from_scalar(const FieldPtr& k, int64_t s);
  static FqElem decode(const FieldPtr& k, uint64_t code);

  const FieldPtr& field() const { return k_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  const uint32_t* raw() const { return c_.data(); }
  bool is_zero() const { return k_->is_zero(c_.data()); }
  uint64_t encode() const { return k_->encode(c_.data()); }
  uint64_t order() const { return k_->mul_order(c_.data()); }
  std::string str() const { return k_->str(c_.data()); }

  FqElem operator-() const;
  FqElem inverse() const;
  FqElem pow(uint64_t e) const;

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

 private:
  FieldPtr k_;
  std::vector<uint32_t> c_;
};

// Canonical order-m root of unity: g^((q-1)/m) for the least primitive
// element g under the coefficient encoding. Requires m | q-1.
FqElem fq_root_of_unity(const FieldPtr& k, uint64_t m);
FqElem fq_generator(const FieldPtr& k);

// Subfield embedding determined by the least root of the source modulus in
// the destination field. Requires src.f | dst.f and matching p.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr src, FieldPtr dst);
  FqElem operator()(const FqElem& x) const;
  const FqElem& root() const { return alpha_; }

 private:
  FieldPtr src_, dst_;
  FqElem alpha_;
};

inline FieldPtr make_field(uint32_t p, uint32_t f) { return FqField::make(p, f); }

}  // namespace leo
