#include "flagdes/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace flagdes {

std::vector<ParamCandidate> param_feasible(int p, int d, bool require_even_r, long long cap) {
  if (!is_prime(p)) fail(Err::NotPrime, "p must be prime");
  long long v = ipow(p, d);
  if (v > cap) fail(Err::CapExceeded, "p^d above cap");
  std::vector<ParamCandidate> out;
  long long rhs = 2 * (v - 1);
  for (long long km1 = 1; km1 <= rhs; ++km1) {
    if (rhs % km1) continue;
    long long k = km1 + 1, r = rhs / km1;
    if (k <= 2 || k >= v) continue;
    if (require_even_r && r % 2) continue;
    if ((v * r) % k) continue;
    long long b = v * r / k;
    if (b < v) continue;
    // r > sqrt(2) p^{d/2}  <=>  r^2 > 2 p^d
    if (r * r <= 2 * v) continue;
    ParamCandidate c;
    c.p = p;
    c.d = d;
    c.k = k;
    c.r = r;
    c.b = b;
    c.notes = (r % 2 ? "odd-r" : "even-r");
    c.notes += (r < k ? ",r<k" : ",r>=k");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const ParamCandidate &a, const ParamCandidate &b) { return a.k < b.k; });
  return out;
}

std::vector<ParamCandidate> fato_candidates(int p, int d) {
  if (d % 2) fail(Err::OddDegree, "needs even degree");
  long long bound = 4 * (ipow(p, d / 2) - 1);
  std::vector<ParamCandidate> out;
  for (auto &c : param_feasible(p, d, true)) {
    if (bound % c.r == 0) {
      c.notes += ",r|4(p^(d/2)-1)";
      out.push_back(c);
    }
  }
  return out;
}

Rational cici_index(int p, int d, long long k, int t) {
  return Rational{2 * ipow(p, t) * (ipow(p, d) - 1), k * (k - 1)};
}

std::set<ShapeCase> block_shape_cases(int p, int d, long long k, long long r) {
  (void)d;
  std::set<ShapeCase> out;
  if (r % k == 0) out.insert(ShapeCase::k_divides_r);
  long long pt = (long long)p * p;
  while (pt < k) pt *= p;
  if (pt == k) out.insert(ShapeCase::subspace); // k = p^t with t > 1
  if (p % 2 == 1 && k % 2 == 0) {
    long long half = k / 2, q = p;
    while (q < half) q *= p;
    if (q == half) out.insert(ShapeCase::two_coset); // k = 2 p^t, t >= 1
  }
  return out;
}

bool orbit_divisibility(const Group &G0, long long r) {
  if (r % 2) return false;
  auto dec = orbits_on_nonzero(G0);
  long long g = ipow(G0.p, G0.n) - 1;
  for (long long len : dec.lengths) g = std::gcd(g, len);
  return g % (r / 2) == 0;
}

namespace {

std::vector<SearchResult> run_block_search(const Group &G0,
                                           std::vector<std::vector<long long>> candidates,
                                           bool reverse_candidates) {
  if (reverse_candidates) std::reverse(candidates.begin(), candidates.end());
  long long v = ipow(G0.p, G0.n);
  std::map<std::vector<long long>, SearchResult> found; // keyed by orbit representative
  for (auto &B : candidates) {
    std::sort(B.begin(), B.end());
    auto fc = flag_transitive_zero_check(G0, B);
    if (!fc.ok) continue;
    bool lambda2 = true;
    for (const auto &[rep, lam] : lambda_by_orbit_formula(G0, B)) {
      (void)rep;
      if (!lam.is_integer() || lam.value() != 2) {
        lambda2 = false;
        break;
      }
    }
    if (!lambda2) continue;
    long long r = fc.r(), k = (long long)B.size();
    DesignParams P{v, v * r / k, r, k, 2};
    const auto &rep = fc.zero_orbit.front(); // lexicographically minimal member
    auto it = found.find(rep);
    if (it == found.end()) found.emplace(rep, SearchResult{rep, P});
  }
  std::vector<SearchResult> out;
  for (auto &kv : found) out.push_back(kv.second);
  return out;
}

} // namespace

std::vector<SearchResult> search_two_coset_blocks(const Group &G0, int t, long long cap,
                                                  bool reverse_candidates) {
  long long v = ipow(G0.p, G0.n);
  auto subs = enumerate_subspaces(G0.p, G0.n, t, cap);
  std::vector<std::vector<long long>> candidates;
  std::set<std::vector<long long>> seen;
  for (const auto &W : subs) {
    auto wids = subspace_point_ids(W);
    std::set<long long> wset(wids.begin(), wids.end());
    for (long long y = 1; y < v; ++y) {
      if (wset.count(y)) continue;
      std::vector<long long> B = wids;
      Vec yv = vec_from_id(G0.p, G0.n, y);
      for (long long id : wids) B.push_back(vec_id(vec_add(vec_from_id(G0.p, G0.n, id), yv)));
      std::sort(B.begin(), B.end());
      if (!seen.insert(B).second) continue;
      if ((long long)seen.size() > cap) fail(Err::CapExceeded, "two-coset candidates above cap");
      candidates.push_back(std::move(B));
    }
  }
  return run_block_search(G0, std::move(candidates), reverse_candidates);
}

std::vector<SearchResult> search_subspace_blocks(const Group &G0, int t, long long cap,
                                                 bool reverse_candidates) {
  auto subs = enumerate_subspaces(G0.p, G0.n, t, cap);
  std::vector<std::vector<long long>> candidates;
  for (const auto &W : subs) candidates.push_back(subspace_point_ids(W));
  return run_block_search(G0, std::move(candidates), reverse_candidates);
}

std::vector<SearchResult> search_small_blocks(const Group &G0, long long k, long long cap,
                                              bool reverse_candidates) {
  long long v = ipow(G0.p, G0.n);
  if (k < 3 || k >= v) fail(Err::TrivialBlock, "k out of range");
  // all k-subsets containing 0: C(v-1, k-1) candidates
  __int128 count = 1;
  for (long long i = 0; i < k - 1; ++i) count = count * (v - 1 - i) / (i + 1);
  if (count > cap) fail(Err::CapExceeded, "subset candidate count above cap");
  std::vector<std::vector<long long>> candidates;
  std::vector<long long> sel(k - 1);
  for (long long i = 0; i < k - 1; ++i) sel[i] = i + 1;
  while (true) {
    std::vector<long long> B{0};
    B.insert(B.end(), sel.begin(), sel.end());
    candidates.push_back(B);
    long long i = k - 2;
    while (i >= 0 && sel[i] == v - (k - 1) + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (long long j = i + 1; j < k - 1; ++j) sel[j] = sel[j - 1] + 1;
  }
  return run_block_search(G0, std::move(candidates), reverse_candidates);
}

} // namespace flagdes
