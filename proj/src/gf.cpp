#include "flagdes/gf.hpp"

#include <algorithm>

namespace flagdes {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (1LL << 62) / b) fail(Err::CapExceeded, "p^d out of range");
    r *= b;
  }
  return r;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// no trailing zeros (zero polynomial = empty vector).
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly &m, int p) {
  a = trim(std::move(a));
  int dm = (int)m.size() - 1;
  while ((int)a.size() - 1 >= dm) {
    int da = (int)a.size() - 1;
    // m is monic
    int c = a[da];
    int shift = da - dm;
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = (int)(((long long)a[i + shift] - (long long)c * m[i]) % p + p) % p;
    }
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (int)((r[i + j] + (long long)a[i] * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

bool divides(const Poly &div, const Poly &m, int p) {
  return poly_mod(m, div, p).empty();
}

// Irreducibility by exhaustive monic-divisor check up to degree d/2.
bool poly_irreducible(const Poly &m, int p) {
  int d = (int)m.size() - 1;
  if (d <= 0) return false;
  if (m[0] == 0 && d > 1) return false; // divisible by x
  if (d == 1) return true;
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long n = 0; n < count; ++n) {
      Poly f(dd + 1, 0);
      long long t = n;
      for (int i = 0; i < dd; ++i) {
        f[i] = (int)(t % p);
        t /= p;
      }
      f[dd] = 1;
      if (divides(f, m, p)) return false;
    }
  }
  return true;
}

std::vector<long long> factorize(long long n) {
  std::vector<long long> fs;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      fs.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

} // namespace

Field Field::create(int p, int d) {
  if (!is_prime(p)) fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (d < 1) fail(Err::BadDegree, "degree must be >= 1");
  // Smallest monic irreducible, coefficients (c0,...,c_{d-1}) compared c0 first.
  long long count = ipow(p, d);
  for (long long n = 0; n < count; ++n) {
    std::vector<int> c(d, 0);
    long long t = n;
    for (int i = d - 1; i >= 0; --i) {
      c[i] = (int)(t % p);
      t /= p;
    }
    Poly m(c.begin(), c.end());
    m.push_back(1);
    if (poly_irreducible(m, p)) return create(p, d, m);
  }
  fail(Err::ReduciblePolynomial, "no irreducible polynomial found"); // unreachable
}

Field Field::create(int p, int d, const std::vector<int> &poly) {
  if (!is_prime(p)) fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (d < 1) fail(Err::BadDegree, "degree must be >= 1");
  if ((int)poly.size() != d + 1 || poly[d] != 1)
    fail(Err::BadDegree, "modulus must be monic of degree d");
  Poly m(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) m[i] = ((poly[i] % p) + p) % p;
  if (!poly_irreducible(m, p))
    fail(Err::ReduciblePolynomial, "modulus polynomial factors over GF(p)");
  Field f;
  f.p_ = p;
  f.d_ = d;
  f.q_ = ipow(p, d);
  f.poly_.assign(m.begin(), m.end());
  if (f.q_ > (1 << 20)) fail(Err::CapExceeded, "field too large for table-based arithmetic");
  f.init_tables();
  return f;
}

void Field::init_tables() {
  // Designated primitive element: the id-smallest element of order q-1.
  auto fs = factorize(q_ - 1);
  Fel found;
  bool ok = false;
  for (long long id = 1; id < q_ && !ok; ++id) {
    Fel a = from_id(id);
    if (q_ == 2) { // GF(2): the only unit
      found = a;
      ok = true;
      break;
    }
    bool prim = true;
    for (long long f : fs) {
      if (pow(a, (q_ - 1) / f) == one()) {
        prim = false;
        break;
      }
    }
    if (prim) {
      found = a;
      ok = true;
    }
  }
  omega_ = found;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  Fel acc = one();
  for (long long e = 0; e < q_ - 1; ++e) {
    long long i = id(acc);
    exp_[e] = i;
    log_[i] = e;
    acc = mul(acc, omega_);
  }
}

Fel Field::zero() const { return Fel{std::vector<uint8_t>(d_, 0)}; }

Fel Field::one() const {
  Fel a = zero();
  a.c[0] = 1;
  return a;
}

Fel Field::from_id(long long id) const {
  Fel a = zero();
  for (int i = 0; i < d_; ++i) {
    a.c[i] = (uint8_t)(id % p_);
    id /= p_;
  }
  return a;
}

long long Field::id(const Fel &a) const {
  long long r = 0;
  for (int i = d_ - 1; i >= 0; --i) r = r * p_ + a.c[i];
  return r;
}

Fel Field::from_int(long long n) const {
  Fel a = zero();
  a.c[0] = (uint8_t)(((n % p_) + p_) % p_);
  return a;
}

bool Field::is_zero(const Fel &a) const {
  for (auto c : a.c)
    if (c) return false;
  return true;
}

Fel Field::add(const Fel &a, const Fel &b) const {
  if ((int)a.c.size() != d_ || (int)b.c.size() != d_)
    fail(Err::FieldMismatch, "element degree mismatch");
  Fel r = zero();
  for (int i = 0; i < d_; ++i) r.c[i] = (uint8_t)((a.c[i] + b.c[i]) % p_);
  return r;
}

Fel Field::neg(const Fel &a) const {
  Fel r = zero();
  for (int i = 0; i < d_; ++i) r.c[i] = (uint8_t)((p_ - a.c[i]) % p_);
  return r;
}

Fel Field::sub(const Fel &a, const Fel &b) const { return add(a, neg(b)); }

Fel Field::mul(const Fel &a, const Fel &b) const {
  if ((int)a.c.size() != d_ || (int)b.c.size() != d_)
    fail(Err::FieldMismatch, "element degree mismatch");
  Poly pa(a.c.begin(), a.c.end()), pb(b.c.begin(), b.c.end());
  Poly m(poly_.begin(), poly_.end());
  Poly r = poly_mulmod(trim(pa), trim(pb), m, p_);
  Fel out = zero();
  for (size_t i = 0; i < r.size(); ++i) out.c[i] = (uint8_t)r[i];
  return out;
}

Fel Field::pow(const Fel &a, long long e) const {
  if (is_zero(a)) {
    if (e < 0) fail(Err::ZeroInverse, "0 has no inverse");
    return e == 0 ? one() : zero();
  }
  long long m = q_ - 1;
  e %= m;
  if (e < 0) e += m;
  Fel base = a, r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fel Field::inv(const Fel &a) const {
  if (is_zero(a)) fail(Err::ZeroInverse, "0 has no inverse");
  return pow(a, q_ - 2);
}

Fel Field::frobenius(const Fel &a, long long i) const {
  if (i < 0) fail(Err::BadInput, "frobenius power must be >= 0");
  if (is_zero(a)) return a;
  // exponent p^i mod (q-1)
  long long m = q_ - 1, e = 1 % m;
  for (long long k = 0; k < i; ++k) e = (e * p_) % m;
  return pow(a, e == 0 ? m : e);
}

long long Field::dlog(const Fel &a) const {
  if (is_zero(a)) fail(Err::ZeroArgument, "dlog of 0");
  return log_[id(a)];
}

long long Field::mul_order(const Fel &a) const {
  if (is_zero(a)) fail(Err::ZeroArgument, "order of 0");
  Fel x = a;
  long long n = 1;
  while (!(x == one())) {
    x = mul(x, a);
    ++n;
    if (n > q_) fail(Err::BadInput, "order loop overran field size");
  }
  return n;
}

Fel Field::subfield_generator(int e) const {
  if (e < 1 || d_ % e != 0) fail(Err::BadDivisor, "subfield degree must divide d");
  long long sub = ipow(p_, e);
  return pow(omega_, (q_ - 1) / (sub - 1));
}

bool Field::in_subfield(const Fel &a, int e) const {
  if (e < 1 || d_ % e != 0) fail(Err::BadDivisor, "subfield degree must divide d");
  return frobenius(a, e) == a;
}

std::string Field::to_string(const Fel &a) const {
  if (is_zero(a)) return "0";
  long long e = dlog(a);
  if (e == 0) return "1";
  return "w^" + std::to_string(e);
}

} // namespace flagdes
