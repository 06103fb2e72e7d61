#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagdes/design.hpp"

namespace flagdes {

const nlohmann::json &catalog();

/// Expected data attached to a catalog instance; -1 means "not asserted".
struct Expected {
  long long v = -1, k = -1, r = -1, b = -1, lambda = -1;
  long long g0_order = -1;
  long long g0b_order = -1;                 // setwise stabilizer of the base block in G0
  std::vector<long long> orbit_lengths;     // sorted; empty = not asserted
  std::string src;
};

struct ExampleInstance {
  std::string id;
  int p = 0, d = 0;
  Group g0;
  std::vector<long long> base_block; // sorted point ids, contains 0
  Expected expected;
  FieldPtr field;                    // ambient GF(p^d) presentation when one is fixed
  std::string note;
};

/// V_n(q) over GF(p) (q = p^e) glued to the big field K = GF(p^{ne}):
/// coordinates are grouped (vector coordinate major, field coefficient minor),
/// and scalars from K act through the change of basis phi.
struct SubfieldCtx {
  FieldPtr K;  // GF(p^d), d = n*e
  FieldPtr Fq; // GF(p^e), canonical presentation
  int n = 0, e = 0;
  Fel z;       // image of Fq's coefficient generator inside K
  Mat phi;     // row (i*e+a) = coefficients of embed(x_q^a) * omega_K^i
  Mat phi_inv;

  static SubfieldCtx make(int p, int d, int n);
  Fel embed(const Fel &a) const;              // Fq -> K
  Mat scalar_matrix(const Fel &mu_in_K) const; // action of mu on V coordinates
  Mat blowup(const FMat &A_over_Fq) const;     // GF(q)-matrix -> GF(p)-matrix on V
  Mat frobenius_block(int s) const;            // coordinatewise y -> y^(p^s)
  long long point_id(const Fel &z_in_K) const; // id in V coordinates
};

/// Standard generator families.
std::vector<std::pair<std::string, Mat>> sl_generators(const SubfieldCtx &ctx);
std::vector<std::pair<std::string, Mat>> sp_generators(const SubfieldCtx &ctx);

enum class LinearKind { SL, Sp, GL1 };

ExampleInstance ex_sem1dim_3pts(int p, int d, int n, LinearKind X, long long cap = 1000000);
ExampleInstance ex_sem1dim_subfield(int p, int d, int n, int t, bool allow_t_eq_dn = false,
                                    long long cap = 1000000);
ExampleInstance table1_instance(int line);
ExampleInstance ex_tensor(int which); // 1 or 2
ExampleInstance ex_hyperbolic();
Group table2_subgroup(int line);
long long table2_expected_order(int line);
long long table2_expected_stab(int line);
ExampleInstance ex_hall();
ExampleInstance ex_d8q8();
ExampleInstance ex_gamma_l1();

struct SpreadSet {
  int p = 0, amb = 0, t = 0;
  std::vector<Subspace> components; // sorted by key
};

SpreadSet desarguesian_spread(int p, int e, int m);
bool is_spread(const std::vector<Subspace> &components);
/// Dimension of the algebra of endomorphisms preserving every component, plus
/// whether all its nonzero elements are invertible (then it is a field).
struct SpreadKernel {
  int dim = 0;
  bool is_field = false;
};
SpreadKernel spread_kernel(const std::vector<Subspace> &components);

/// Shared data for the SL2(5) < GL4(3) constructions.
struct Sl25Data {
  Group sl29;                 // blown up to GL4(3)
  Group sl25;                 // located inside sl29
  SubspaceOrbits orbits2;     // SL2(5)-orbits on 2-subspaces
  SpreadSet hall1, hall2;     // the two invariant spreads among the 5-orbit unions
  std::vector<std::vector<Subspace>> five_orbits; // the four length-5 orbits
  int spread_union_count = 0; // how many of the 6 pair unions are spreads
};
const Sl25Data &sl25_data();

/// Hall-spread stabilizer in GL4(3) (computed by orbit/stabilizer on spreads)
/// and the derived data for the order-320 subgroup construction.
struct SpreadStabilizerData {
  Group stab;    // full setwise stabilizer of hall1
  Group o2;      // its largest normal 2-subgroup
  Group g320;    // order-320 transitive subgroup
};
const SpreadStabilizerData &spread_stabilizer_data();

ExampleInstance instance_by_id(const std::string &id);
std::vector<std::string> instance_ids(); // deterministic order

/// Runs the documented x3-symbol resolution for the second tensor block and
/// returns the chosen w (coordinates in V_3(2)).
std::vector<int> tensor_pi2_selection();

} // namespace flagdes
