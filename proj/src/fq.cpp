#include "leo/fq.hpp"

#include <algorithm>

namespace leo {

namespace {

uint64_t pow_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, low degree first, used only for modulus search.
using PolyP = std::vector<uint32_t>;

void ptrim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmulmod(const PolyP& a, const PolyP& b, const PolyP& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  }
  // reduce by the monic modulus
  size_t dm = m.size() - 1;
  for (size_t k = r.size(); k-- > dm;) {
    uint32_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (size_t j = 0; j < dm; ++j) {
      uint64_t t = uint64_t(c) * m[j] % p;
      r[k - dm + j] = static_cast<uint32_t>((r[k - dm + j] + p - t) % p);
    }
  }
  r.resize(dm);
  ptrim(r);
  return r;
}

PolyP ppowmod(PolyP base, uint64_t e, const PolyP& m, uint32_t p) {
  PolyP r = {1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PolyP pgcd(PolyP a, PolyP b, uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    uint32_t lead = b.back();
    uint32_t li = static_cast<uint32_t>(pow_u64(lead, p - 2, p));
    PolyP bm(b.size());
    for (size_t i = 0; i < b.size(); ++i) bm[i] = static_cast<uint32_t>(uint64_t(b[i]) * li % p);
    PolyP r = a;
    while (r.size() >= bm.size() && !r.empty()) {
      uint32_t c = r.back();
      size_t shift = r.size() - bm.size();
      if (c != 0)
        for (size_t j = 0; j < bm.size(); ++j) {
          uint64_t t = uint64_t(c) * bm[j] % p;
          r[shift + j] = static_cast<uint32_t>((r[shift + j] + p - t) % p);
        }
      ptrim(r);
      if (r.size() + 1 == bm.size() + shift + 1 && !r.empty() && r.size() == shift + bm.size()) break;
      if (r.size() < bm.size()) break;
      if (shift == 0 && r.size() >= bm.size() && r.back() == c) break;  // safety; should not happen
    }
    a = b;
    b = r;
    ptrim(b);
  }
  return a;
}

bool poly_irreducible(const PolyP& m, uint32_t p) {
  size_t f = m.size() - 1;
  if (f == 1) return true;
  PolyP x = {0, 1};
  // x^(p^f) must equal x mod m
  PolyP t = x;
  for (size_t i = 0; i < f; ++i) t = ppowmod(t, p, m, p);
  PolyP xt = x;
  ptrim(xt);
  if (t != xt) return false;
  for (uint64_t ell : prime_factors(f)) {
    PolyP u = x;
    for (size_t i = 0; i < f / ell; ++i) u = ppowmod(u, p, m, p);
    // gcd(u - x, m) must be constant
    PolyP diff = u;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    PolyP g = pgcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FqField::FqField(uint32_t p, uint32_t f, std::vector<uint32_t> modulus)
    : p_(p), f_(f), q_(1), modulus_(std::move(modulus)) {
  for (uint32_t i = 0; i < f_; ++i) q_ *= p_;
}

FieldPtr FqField::make(uint32_t p, uint32_t f) {
  if (p < 3 || !is_prime_u64(p)) fail(errc::invalid_argument, "field characteristic must be an odd prime");
  if (f < 1 || f > 16) fail(errc::invalid_argument, "extension degree out of range");
  double bits = f * std::log2(double(p));
  if (bits > 40) fail(errc::invalid_argument, "field too large for desk scale");
  // Enumerate monic degree-f polynomials in lexicographic order of
  // (c_0, c_1, ..., c_{f-1}) and take the first irreducible one.
  std::vector<uint32_t> c(f, 0);
  for (;;) {
    PolyP m(f + 1);
    for (uint32_t i = 0; i < f; ++i) m[i] = c[i];
    m[f] = 1;
    if (poly_irreducible(m, p)) return FieldPtr(new FqField(p, f, std::move(m)));
    // advance odometer with c_{f-1} changing fastest (lex order on the tuple)
    int i = static_cast<int>(f) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) fail(errc::internal, "no irreducible polynomial found");
    ++c[i];
  }
}

FieldPtr FqField::make_with_modulus(uint32_t p, std::vector<uint32_t> modulus) {
  if (p < 3 || !is_prime_u64(p)) fail(errc::invalid_argument, "field characteristic must be an odd prime");
  if (modulus.size() < 2 || modulus.back() != 1) fail(errc::invalid_argument, "modulus must be monic of degree >= 1");
  for (uint32_t v : modulus)
    if (v >= p) fail(errc::invalid_argument, "modulus coefficients must be reduced mod p");
  if (!poly_irreducible(modulus, p)) fail(errc::invalid_argument, "modulus is reducible");
  uint32_t f = static_cast<uint32_t>(modulus.size() - 1);
  return FieldPtr(new FqField(p, f, std::move(modulus)));
}

void FqField::set_zero(uint32_t* a) const { std::fill(a, a + f_, 0u); }

void FqField::set_scalar(uint32_t* a, uint32_t s) const {
  set_zero(a);
  a[0] = s;
}

bool FqField::is_zero(const uint32_t* a) const {
  for (uint32_t i = 0; i < f_; ++i)
    if (a[i] != 0) return false;
  return true;
}

bool FqField::equal(const uint32_t* a, const uint32_t* b) const {
  return std::equal(a, a + f_, b);
}

void FqField::add(uint32_t* out, const uint32_t* a, const uint32_t* b) const {
  for (uint32_t i = 0; i < f_; ++i) {
    uint32_t s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FqField::sub(uint32_t* out, const uint32_t* a, const uint32_t* b) const {
  for (uint32_t i = 0; i < f_; ++i) {
    uint32_t s = a[i] + p_ - b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FqField::neg(uint32_t* out, const uint32_t* a) const {
  for (uint32_t i = 0; i < f_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
}

void FqField::mul(uint32_t* out, const uint32_t* a, const uint32_t* b) const {
  if (f_ == 1) {
    out[0] = static_cast<uint32_t>(uint64_t(a[0]) * b[0] % p_);
    return;
  }
  uint64_t acc[31] = {0};
  for (uint32_t i = 0; i < f_; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < f_; ++j) acc[i + j] += uint64_t(a[i]) * b[j];
  }
  // fold degrees >= f using the monic modulus
  for (uint32_t k = 2 * f_ - 2; k + 1 > f_; --k) {
    uint64_t c = acc[k] % p_;
    acc[k] = 0;
    if (c == 0) continue;
    for (uint32_t j = 0; j < f_; ++j) acc[k - f_ + j] += c * (p_ - modulus_[j]);
  }
  for (uint32_t i = 0; i < f_; ++i) out[i] = static_cast<uint32_t>(acc[i] % p_);
}

void FqField::scalar_mul(uint32_t* out, const uint32_t* a, uint32_t s) const {
  for (uint32_t i = 0; i < f_; ++i) out[i] = static_cast<uint32_t>(uint64_t(a[i]) * s % p_);
}

void FqField::scalar_mul_add(uint32_t* out, const uint32_t* a, uint32_t s) const {
  for (uint32_t i = 0; i < f_; ++i)
    out[i] = static_cast<uint32_t>((out[i] + uint64_t(a[i]) * s) % p_);
}

void FqField::pow(uint32_t* out, const uint32_t* a, uint64_t e) const {
  std::vector<uint32_t> base(a, a + f_), r(f_, 0), tmp(f_);
  r[0] = 1;
  while (e) {
    if (e & 1) {
      mul(tmp.data(), r.data(), base.data());
      r = tmp;
    }
    mul(tmp.data(), base.data(), base.data());
    base = tmp;
    e >>= 1;
  }
  std::copy(r.begin(), r.end(), out);
}

void FqField::inv(uint32_t* out, const uint32_t* a) const {
  if (is_zero(a)) fail(errc::domain, "zero has no inverse");
  pow(out, a, q_ - 2);
}

uint64_t FqField::encode(const uint32_t* a) const {
  uint64_t code = 0;
  for (uint32_t i = f_; i-- > 0;) code = code * p_ + a[i];
  return code;
}

void FqField::decode(uint32_t* out, uint64_t code) const {
  for (uint32_t i = 0; i < f_; ++i) {
    out[i] = static_cast<uint32_t>(code % p_);
    code /= p_;
  }
}

uint64_t FqField::mul_order(const uint32_t* a) const {
  if (is_zero(a)) fail(errc::domain, "zero has no multiplicative order");
  uint64_t n = q_ - 1;
  std::vector<uint32_t> t(f_);
  for (uint64_t ell : prime_factors(q_ - 1)) {
    pow(t.data(), a, n / ell);
    while (n % ell == 0) {
      pow(t.data(), a, n / ell);
      uint32_t one0 = t[0];
      bool is_one = one0 == 1;
      for (uint32_t i = 1; i < f_ && is_one; ++i) is_one = t[i] == 0;
      if (!is_one) break;
      n /= ell;
    }
  }
  return n;
}

std::string FqField::str(const uint32_t* a) const {
  std::string s = "[";
  for (uint32_t i = 0; i < f_; ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p() == b->p() && a->f() == b->f() && a->modulus() == b->modulus();
}

FqElem::FqElem(FieldPtr k, std::vector<uint32_t> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
  if (c_.size() != k_->f()) fail(errc::invalid_argument, "coefficient vector length mismatch");
  for (uint32_t v : c_)
    if (v >= k_->p()) fail(errc::invalid_argument, "coefficient not reduced mod p");
}

FqElem FqElem::zero(const FieldPtr& k) { return FqElem(k, std::vector<uint32_t>(k->f(), 0)); }

FqElem FqElem::one(const FieldPtr& k) {
  std::vector<uint32_t> c(k->f(), 0);
  c[0] = 1;
  return FqElem(k, std::move(c));
}

FqElem FqElem::from_scalar(const FieldPtr& k, int64_t s) {
  int64_t p = k->p();
  int64_t r = s % p;
  if (r < 0) r += p;
  std::vector<uint32_t> c(k->f(), 0);
  c[0] = static_cast<uint32_t>(r);
  return FqElem(k, std::move(c));
}

FqElem FqElem::decode(const FieldPtr& k, uint64_t code) {
  std::vector<uint32_t> c(k->f());
  k->decode(c.data(), code);
  return FqElem(k, std::move(c));
}

static void require_same(const FqElem& a, const FqElem& b) {
  if (!same_field(a.field(), b.field())) fail(errc::invalid_argument, "elements of different fields");
}

FqElem FqElem::operator-() const {
  std::vector<uint32_t> out(c_.size());
  k_->neg(out.data(), c_.data());
  return FqElem(k_, std::move(out));
}

FqElem FqElem::inverse() const {
  std::vector<uint32_t> out(c_.size());
  k_->inv(out.data(), c_.data());
  return FqElem(k_, std::move(out));
}

FqElem FqElem::pow(uint64_t e) const {
  std::vector<uint32_t> out(c_.size());
  k_->pow(out.data(), c_.data(), e);
  return FqElem(k_, std::move(out));
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  require_same(a, b);
  std::vector<uint32_t> out(a.c_.size());
  a.k_->add(out.data(), a.c_.data(), b.c_.data());
  return FqElem(a.k_, std::move(out));
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  require_same(a, b);
  std::vector<uint32_t> out(a.c_.size());
  a.k_->sub(out.data(), a.c_.data(), b.c_.data());
  return FqElem(a.k_, std::move(out));
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  require_same(a, b);
  std::vector<uint32_t> out(a.c_.size());
  a.k_->mul(out.data(), a.c_.data(), b.c_.data());
  return FqElem(a.k_, std::move(out));
}

bool operator==(const FqElem& a, const FqElem& b) {
  require_same(a, b);
  return a.c_ == b.c_;
}

FqElem fq_generator(const FieldPtr& k) {
  std::vector<uint32_t> c(k->f());
  for (uint64_t code = 1; code < k->q(); ++code) {
    k->decode(c.data(), code);
    if (k->mul_order(c.data()) == k->q() - 1) return FqElem(k, c);
  }
  fail(errc::internal, "no primitive element found");
}

FqElem fq_root_of_unity(const FieldPtr& k, uint64_t m) {
  if (m == 0 || (k->q() - 1) % m != 0)
    fail(errc::domain, "field has no root of unity of order " + std::to_string(m));
  return fq_generator(k).pow((k->q() - 1) / m);
}

FieldEmbedding::FieldEmbedding(FieldPtr src, FieldPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->p() != dst_->p()) fail(errc::invalid_argument, "embedding requires equal characteristic");
  if (dst_->f() % src_->f() != 0) fail(errc::invalid_argument, "not a subfield: degree does not divide");
  const auto& m = src_->modulus();
  std::vector<uint32_t> x(dst_->f()), acc(dst_->f()), tmp(dst_->f());
  for (uint64_t code = 0; code < dst_->q(); ++code) {
    dst_->decode(x.data(), code);
    // Horner evaluation of the source modulus at x
    dst_->set_scalar(acc.data(), m.back());
    for (size_t i = m.size() - 1; i-- > 0;) {
      dst_->mul(tmp.data(), acc.data(), x.data());
      std::vector<uint32_t> ci(dst_->f(), 0);
      ci[0] = m[i];
      dst_->add(acc.data(), tmp.data(), ci.data());
    }
    if (dst_->is_zero(acc.data())) {
      alpha_ = FqElem(dst_, x);
      return;
    }
  }
  fail(errc::internal, "no root of subfield modulus found");
}

FqElem FieldEmbedding::operator()(const FqElem& x) const {
  if (!same_field(x.field(), src_)) fail(errc::invalid_argument, "element not in the embedding source field");
  FqElem acc = FqElem::zero(dst_);
  const auto& c = x.coeffs();
  for (size_t i = c.size(); i-- > 0;) acc = acc * alpha_ + FqElem::from_scalar(dst_, c[i]);
  return acc;
}

}  // namespace leo
