#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagdes/gf.hpp"

namespace flagdes {

/// Row vector over GF(p). Point id = sum coords[i] * p^i; id 0 is the zero vector.
struct Vec {
  int p = 0;
  std::vector<uint8_t> c;
  bool operator==(const Vec &o) const { return p == o.p && c == o.c; }
};

long long vec_id(const Vec &v);
Vec vec_from_id(int p, int dim, long long id);
Vec vec_of(int p, std::initializer_list<int> coords);
Vec vec_add(const Vec &a, const Vec &b);
Vec vec_sub(const Vec &a, const Vec &b);

/// Dense n x n matrix over GF(p), row major. Points are rows and matrices act
/// on the right: w = v * M.
struct Mat {
  int p = 0;
  int n = 0;
  std::vector<uint8_t> a;
  uint8_t &at(int i, int j) { return a[(size_t)i * n + j]; }
  uint8_t at(int i, int j) const { return a[(size_t)i * n + j]; }
  std::string key() const { return std::string(a.begin(), a.end()); }
  bool operator==(const Mat &o) const { return p == o.p && n == o.n && a == o.a; }
};

Mat mat_identity(int p, int n);
Mat mat_from_rows(int p, const std::vector<std::vector<int>> &rows);
Mat mat_mul(const Mat &A, const Mat &B);
Vec mat_apply(const Vec &v, const Mat &M);
int mat_det(const Mat &A);
Mat mat_inv(const Mat &A);
Mat mat_pow(const Mat &A, long long e); // negative e = inverse powers

Vec tensor(const Vec &u, const Vec &v);       // basis order (i,j)-lex
Mat mat_tensor(const Mat &A, const Mat &B);   // apply(A tensor B, u tensor v) = (uA) tensor (vB)

/// Canonical subspace of V_amb(p): reduced-row-echelon basis, dim rows.
/// Two subspaces are equal iff their RREF arrays are identical.
struct Subspace {
  int p = 0;
  int amb = 0;
  int dim = 0;
  std::vector<uint8_t> b; // dim x amb, row major, RREF
  std::string key() const;
  bool operator==(const Subspace &o) const { return key() == o.key(); }
  bool operator<(const Subspace &o) const { return key() < o.key(); }
};

Subspace span(int p, int amb, const std::vector<Vec> &vectors);
Subspace subspace_apply(const Subspace &S, const Mat &M);
bool subspace_contains(const Subspace &S, const Vec &v);
std::vector<Vec> subspace_points(const Subspace &S);         // all p^dim points
std::vector<long long> subspace_point_ids(const Subspace &S); // sorted

long long gaussian_binomial(int p, int d, int t);
std::vector<Subspace> enumerate_subspaces(int p, int d, int t, long long cap = 1000000);

/// Matrix with entries in an extension field, used as blowup input.
struct FMat {
  const Field *f = nullptr;
  int n = 0;
  std::vector<Fel> a;
  Fel &at(int i, int j) { return a[(size_t)i * n + j]; }
  const Fel &at(int i, int j) const { return a[(size_t)i * n + j]; }
};

FMat fmat_identity(const Field &f, int n);

/// Replace each GF(p^e) entry by its e x e multiplication matrix over the
/// coefficient basis {1, x, ..., x^{e-1}}. Output acts on row vectors whose
/// coordinates are grouped (vector coordinate major, field coefficient minor).
Mat field_blowup(const FMat &M);
Mat frobenius_matrix(const Field &f);              // matrix of x -> x^p
Mat mult_matrix(const Field &f, const Fel &z);     // matrix of x -> z*x

/// RREF in place; returns rank. rows x cols, row major.
int rref(std::vector<uint8_t> &m, int rows, int cols, int p);

uint64_t fnv1a(const void *data, size_t len, uint64_t seed = 1469598103934665603ULL);

} // namespace flagdes
