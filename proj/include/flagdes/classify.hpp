#pragma once

#include <set>
#include <string>
#include <vector>

#include "flagdes/design.hpp"

namespace flagdes {

struct ParamCandidate {
  int p = 0, d = 0;
  long long k = 0, r = 0, b = 0;
  std::string notes; // which filters passed / parity flags
};

/// All (k, r) with r(k-1) = 2(p^d - 1), b = p^d r / k integral, r > sqrt(2) p^{d/2},
/// 2 < k < p^d and b >= v; restricted to even r when requested.
std::vector<ParamCandidate> param_feasible(int p, int d, bool require_even_r,
                                           long long cap = 1000000);

/// Subset of param_feasible(p, d, true) with r | 4(p^{d/2} - 1). d must be even.
std::vector<ParamCandidate> fato_candidates(int p, int d);

/// 2 p^t (p^d - 1) / (k (k - 1)); integrality is a necessary feasibility condition.
Rational cici_index(int p, int d, long long k, int t);

enum class ShapeCase { k_divides_r, subspace, two_coset };
std::set<ShapeCase> block_shape_cases(int p, int d, long long k, long long r);

/// True iff r/2 divides gcd of all G0-orbit lengths on V* and p^d - 1.
bool orbit_divisibility(const Group &G0, long long r);

struct SearchResult {
  std::vector<long long> block; // orbit representative (lexicographically minimal member)
  DesignParams params;
};

/// Candidates B = W u (W + y), W a t-subspace, y outside W; filtered through
/// flag_transitive_zero_check and the orbit lambda formula (= 2), deduplicated
/// up to the G0-orbit of B. reverse_candidates only permutes the scan order.
std::vector<SearchResult> search_two_coset_blocks(const Group &G0, int t,
                                                  long long cap = 100000,
                                                  bool reverse_candidates = false);
std::vector<SearchResult> search_subspace_blocks(const Group &G0, int t, long long cap = 100000,
                                                 bool reverse_candidates = false);
std::vector<SearchResult> search_small_blocks(const Group &G0, long long k,
                                              long long cap = 100000,
                                              bool reverse_candidates = false);

} // namespace flagdes
