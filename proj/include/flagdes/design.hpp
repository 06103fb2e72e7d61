#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagdes/group.hpp"

namespace flagdes {

/// Incidence structure on points {0..v-1} with sorted, deduplicated blocks.
struct Design {
  long long v = 0;
  int p = 0, dim = 0;
  std::vector<std::vector<long long>> blocks; // each sorted; list sorted lexicographically
  std::vector<long long> base_block;          // sorted, contains 0
};

struct DesignParams {
  long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
  bool operator==(const DesignParams &o) const {
    return v == o.v && b == o.b && r == o.r && k == o.k && lambda == o.lambda;
  }
};

/// blocks = deduplicated { C + w : C in B^{G0}, w in V }. Requires 0 in B.
Design design_from_base_block(const Group &G0, const std::vector<long long> &B,
                              long long cap_blocks = 100000);

/// Full verification: k and r constant, every point pair in exactly lambda
/// blocks (complete pair enumeration). Throws NotResolvable / NotTwoDesign.
DesignParams verify_parameters(const Design &D);

struct FlagCheck {
  bool ok = false;
  std::vector<std::vector<long long>> zero_orbit; // B^{G0}, sorted
  long long r() const { return (long long)zero_orbit.size(); }
};

/// True iff { C - y : C in B^{G0}, y in C } is contained in B^{G0}.
/// When true, the blocks through 0 are exactly B^{G0} and T:G0 is
/// flag-transitive on the design generated by B.
FlagCheck flag_transitive_zero_check(const Group &G0, const std::vector<long long> &B);

struct Rational {
  long long num = 0, den = 1;
  bool is_integer() const { return den != 0 && num % den == 0; }
  long long value() const { return num / den; }
};

/// For each G0-orbit x^{G0} on V\{0}: lambda(x) = |B^{G0}| * |B n x^{G0}| / |x^{G0}|.
/// Precondition: flag_transitive_zero_check passed.
std::vector<std::pair<long long, Rational>> lambda_by_orbit_formula(const Group &G0,
                                                                    const std::vector<long long> &B);

enum class BlockShape { semiregular_k_divides_r, subspace_k_eq_pt, two_coset_k_eq_2pt };

struct BlockShapeReport {
  int t = 0; // |T_B| = p^t
  BlockShape shape = BlockShape::semiregular_k_divides_r;
  Rational translate_index; // 2 p^t (p^d - 1) / (k (k-1))
  bool index_integral = false;
};

BlockShapeReport block_shape(const std::vector<long long> &B, int p, int d);

/// Non-isomorphism evidence. The intersection profile (multiset of |B n B'|
/// over block pairs through point 0) is invariant under relabeling for the
/// point-transitive designs this library produces. The stabilizer orbit
/// signature is reported as auxiliary data only.
struct Fingerprint {
  DesignParams params;
  std::vector<long long> intersection_profile; // sorted
  std::vector<long long> orbit_signature;      // sorted orbit lengths of G0_B on points
  std::string digest;                          // hex, stable across runs/platforms
};

Fingerprint fingerprint(const Design &D, const Group &G0);
/// True certifies non-isomorphism; false is inconclusive (never read as isomorphism).
bool fingerprints_differ(const Fingerprint &a, const Fingerprint &b);

/// True iff every block through 0 is a GF(p^e)-subspace of V under the given
/// field presentation (e = 0 tests GF(p)-subspaces, i.e. additive closure).
bool blocks_field_structure(const Design &D, const Field &K, int e);

std::string dump_design(const Design &D, const DesignParams &P);

/// Search in T:G0 for an element mapping flag (x, B1) to flag (y, B2).
bool flag_mapping_exists(const Group &G0, int dim, long long x,
                         const std::vector<long long> &B1, long long y,
                         const std::vector<long long> &B2);

} // namespace flagdes
