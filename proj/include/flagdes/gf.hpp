#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "flagdes/errors.hpp"

namespace flagdes {

/// Element of GF(p^d): coefficient vector of length d, constant term first.
/// Canonical: two elements are equal iff their coefficient vectors are equal.
struct Fel {
  std::vector<uint8_t> c;
  bool operator==(const Fel &o) const { return c == o.c; }
  bool operator!=(const Fel &o) const { return c != o.c; }
};

/// A fixed presentation of GF(p^d): modulus polynomial plus a designated
/// primitive element. Immutable after construction; safe to share.
class Field {
public:
  /// Default presentation: the lexicographically smallest monic irreducible
  /// polynomial of degree d (coefficients compared constant term first).
  static Field create(int p, int d);
  /// Explicit presentation. poly has length d+1, constant term first, monic.
  static Field create(int p, int d, const std::vector<int> &poly);

  int p() const { return p_; }
  int d() const { return d_; }
  long long q() const { return q_; }
  const std::vector<uint8_t> &poly() const { return poly_; }

  Fel zero() const;
  Fel one() const;
  Fel omega() const { return omega_; }

  /// Bijection GF(p^d) <-> [0, p^d): id = sum c_i p^i. id 0 is the zero element.
  Fel from_id(long long id) const;
  long long id(const Fel &a) const;
  Fel from_int(long long n) const; // n mod p as a constant

  Fel add(const Fel &a, const Fel &b) const;
  Fel sub(const Fel &a, const Fel &b) const;
  Fel neg(const Fel &a) const;
  Fel mul(const Fel &a, const Fel &b) const;
  Fel inv(const Fel &a) const;
  Fel pow(const Fel &a, long long e) const;
  Fel frobenius(const Fel &a, long long i) const; // a^(p^i)
  long long dlog(const Fel &a) const;             // e with omega^e = a
  long long mul_order(const Fel &a) const;        // multiplicative order

  bool is_zero(const Fel &a) const;
  /// Generator of the subfield GF(p^e), e | d: omega^((q-1)/(p^e-1)).
  Fel subfield_generator(int e) const;
  bool in_subfield(const Fel &a, int e) const; // a^(p^e) == a

  std::string to_string(const Fel &a) const;

private:
  Field() = default;
  void init_tables();
  int p_ = 0, d_ = 0;
  long long q_ = 0;
  std::vector<uint8_t> poly_;
  Fel omega_;
  std::vector<long long> exp_; // exp_[e] = id of omega^e, size q-1
  std::vector<long long> log_; // log_[id] = e, log_[0] = -1
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(long long n);
long long ipow(long long b, int e); // b^e, overflow-checked

} // namespace flagdes
