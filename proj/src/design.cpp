#include "flagdes/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace flagdes {

namespace {

struct IdSetHash {
  size_t operator()(const std::vector<long long> &v) const {
    return (size_t)fnv1a(v.data(), v.size() * sizeof(long long));
  }
};

std::vector<long long> translate(const std::vector<long long> &B, long long w, int p, int dim) {
  Vec wv = vec_from_id(p, dim, w);
  std::vector<long long> out;
  out.reserve(B.size());
  for (long long id : B) out.push_back(vec_id(vec_add(vec_from_id(p, dim, id), wv)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> translate_minus(const std::vector<long long> &B, long long y, int p,
                                       int dim) {
  Vec yv = vec_from_id(p, dim, y);
  std::vector<long long> out;
  out.reserve(B.size());
  for (long long id : B) out.push_back(vec_id(vec_sub(vec_from_id(p, dim, id), yv)));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Design design_from_base_block(const Group &G0, const std::vector<long long> &B,
                              long long cap_blocks) {
  long long v = ipow(G0.p, G0.n);
  std::vector<long long> base = B;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if ((long long)base.size() <= 2 || (long long)base.size() >= v)
    fail(Err::TrivialBlock, "base block size must satisfy 2 < k < v");
  if (base[0] != 0) fail(Err::PreconditionViolated, "base block must contain 0");

  auto zero_orbit = orbit_pointset(G0.gen_mats(), G0.n, base);
  std::unordered_set<std::vector<long long>, IdSetHash> all;
  for (const auto &C : zero_orbit) {
    for (long long w = 0; w < v; ++w) {
      auto T = translate(C, w, G0.p, G0.n);
      all.insert(std::move(T));
      if ((long long)all.size() > cap_blocks)
        fail(Err::CapExceeded, "block count above cap " + std::to_string(cap_blocks));
    }
  }
  Design D;
  D.v = v;
  D.p = G0.p;
  D.dim = G0.n;
  D.base_block = base;
  D.blocks.assign(all.begin(), all.end());
  std::sort(D.blocks.begin(), D.blocks.end());
  return D;
}

DesignParams verify_parameters(const Design &D) {
  if (D.blocks.empty()) fail(Err::NotResolvable, "design has no blocks");
  long long v = D.v, b = (long long)D.blocks.size();
  long long k = (long long)D.blocks[0].size();
  for (const auto &blk : D.blocks)
    if ((long long)blk.size() != k)
      fail(Err::NotResolvable, "blocks of unequal size (k not constant)");

  std::vector<long long> rcount(v, 0);
  for (const auto &blk : D.blocks)
    for (long long x : blk) ++rcount[x];
  long long r = rcount[0];
  for (long long x = 0; x < v; ++x)
    if (rcount[x] != r)
      fail(Err::NotResolvable, "replication number not constant at point " + std::to_string(x));

  // pair counts via per-block increments
  std::vector<long long> pairs((size_t)v * v, 0);
  for (const auto &blk : D.blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j) ++pairs[(size_t)blk[i] * v + blk[j]];
  long long lambda = v >= 2 ? pairs[1] : 0; // pair (0,1)
  for (long long x = 0; x < v; ++x)
    for (long long y = x + 1; y < v; ++y)
      if (pairs[(size_t)x * v + y] != lambda)
        fail(Err::NotTwoDesign, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                    ") lies in " + std::to_string(pairs[(size_t)x * v + y]) +
                                    " blocks, expected " + std::to_string(lambda));
  return DesignParams{v, b, r, k, lambda};
}

FlagCheck flag_transitive_zero_check(const Group &G0, const std::vector<long long> &B) {
  std::vector<long long> base = B;
  std::sort(base.begin(), base.end());
  if (base.empty() || base[0] != 0) fail(Err::PreconditionViolated, "block must contain 0");
  FlagCheck fc;
  fc.zero_orbit = orbit_pointset(G0.gen_mats(), G0.n, base);
  std::set<std::vector<long long>> orbit_set(fc.zero_orbit.begin(), fc.zero_orbit.end());
  fc.ok = true;
  for (const auto &C : fc.zero_orbit) {
    for (long long y : C) {
      if (!orbit_set.count(translate_minus(C, y, G0.p, G0.n))) {
        fc.ok = false;
        return fc;
      }
    }
  }
  return fc;
}

std::vector<std::pair<long long, Rational>> lambda_by_orbit_formula(
    const Group &G0, const std::vector<long long> &B) {
  auto fc = flag_transitive_zero_check(G0, B);
  if (!fc.ok) fail(Err::PreconditionViolated, "flag transitivity check failed");
  long long r = fc.r();
  std::set<long long> bset(B.begin(), B.end());
  auto dec = orbits_on_nonzero(G0);
  std::vector<std::pair<long long, Rational>> out;
  for (const auto &[rep, members] : dec.orbits) {
    long long inter = 0;
    for (long long x : members) inter += bset.count(x);
    out.push_back({rep, Rational{r * inter, (long long)members.size()}});
  }
  return out;
}

BlockShapeReport block_shape(const std::vector<long long> &B, int p, int d) {
  std::vector<long long> base = B;
  std::sort(base.begin(), base.end());
  if (base.empty() || base[0] != 0) fail(Err::PreconditionViolated, "block must contain 0");
  long long k = (long long)base.size();
  // T_B = { w : B + w = B }; any such w lies in B since 0 is in B.
  long long tb = 0;
  for (long long w : base) {
    if (translate(base, w, p, d) == base) ++tb;
  }
  int t = 0;
  long long pt = 1;
  while (pt < tb) {
    pt *= p;
    ++t;
  }
  if (pt != tb) fail(Err::BadInput, "|T_B| is not a power of p");
  BlockShapeReport rep;
  rep.t = t;
  if (k == pt && t >= 1)
    rep.shape = BlockShape::subspace_k_eq_pt;
  else if (p % 2 == 1 && k == 2 * pt && t >= 1)
    rep.shape = BlockShape::two_coset_k_eq_2pt;
  else
    rep.shape = BlockShape::semiregular_k_divides_r;
  long long vd = ipow(p, d);
  rep.translate_index = Rational{2 * pt * (vd - 1), k * (k - 1)};
  rep.index_integral = rep.translate_index.is_integer();
  return rep;
}

Fingerprint fingerprint(const Design &D, const Group &G0) {
  Fingerprint fp;
  fp.params = verify_parameters(D);
  std::vector<const std::vector<long long> *> thru0;
  for (const auto &blk : D.blocks)
    if (!blk.empty() && blk[0] == 0) thru0.push_back(&blk);
  for (size_t i = 0; i < thru0.size(); ++i)
    for (size_t j = i + 1; j < thru0.size(); ++j) {
      const auto &A = *thru0[i];
      const auto &Bb = *thru0[j];
      long long inter = 0;
      size_t a = 0, b2 = 0;
      while (a < A.size() && b2 < Bb.size()) {
        if (A[a] == Bb[b2]) {
          ++inter;
          ++a;
          ++b2;
        } else if (A[a] < Bb[b2])
          ++a;
        else
          ++b2;
      }
      fp.intersection_profile.push_back(inter);
    }
  std::sort(fp.intersection_profile.begin(), fp.intersection_profile.end());

  Group stab = setwise_stabilizer_points(G0, D.dim, D.base_block);
  std::vector<char> done(D.v, 0);
  auto gens = stab.gen_mats();
  for (long long x = 0; x < D.v; ++x) {
    if (done[x]) continue;
    auto orb = orbit_vector(gens, vec_from_id(D.p, D.dim, x));
    for (long long y : orb) done[y] = 1;
    fp.orbit_signature.push_back((long long)orb.size());
  }
  std::sort(fp.orbit_signature.begin(), fp.orbit_signature.end());

  uint64_t h = fnv1a(&fp.params, sizeof(fp.params));
  h = fnv1a(fp.intersection_profile.data(), fp.intersection_profile.size() * sizeof(long long), h);
  h = fnv1a(fp.orbit_signature.data(), fp.orbit_signature.size() * sizeof(long long), h);
  std::ostringstream os;
  os << std::hex << h;
  fp.digest = os.str();
  return fp;
}

bool fingerprints_differ(const Fingerprint &a, const Fingerprint &b) {
  if (!(a.params == b.params)) fail(Err::ParameterMismatch, "fingerprints of unequal parameters");
  return a.intersection_profile != b.intersection_profile;
}

bool blocks_field_structure(const Design &D, const Field &K, int e) {
  if (K.q() != D.v) fail(Err::ParameterMismatch, "field size does not match point count");
  if (e != 0 && (e < 0 || K.d() % e != 0)) fail(Err::BadDivisor, "e must divide d");
  Fel eta = (e == 0) ? K.one() : K.subfield_generator(e);
  for (const auto &blk : D.blocks) {
    if (blk.empty() || blk[0] != 0) continue;
    std::set<long long> s(blk.begin(), blk.end());
    for (long long x : blk)
      for (long long y : blk) {
        Fel sum = K.add(K.from_id(x), K.from_id(y));
        if (!s.count(K.id(sum))) return false;
      }
    if (e != 0) {
      for (long long x : blk)
        if (!s.count(K.id(K.mul(K.from_id(x), eta)))) return false;
    }
  }
  return true;
}

std::string dump_design(const Design &D, const DesignParams &P) {
  std::ostringstream os;
  os << P.v << ' ' << P.b << ' ' << P.r << ' ' << P.k << ' ' << P.lambda << '\n';
  for (const auto &blk : D.blocks) {
    for (size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
    os << '\n';
  }
  return os.str();
}

bool flag_mapping_exists(const Group &G0, int dim, long long x, const std::vector<long long> &B1,
                         long long y, const std::vector<long long> &B2) {
  std::vector<long long> b2 = B2;
  std::sort(b2.begin(), b2.end());
  Vec xv = vec_from_id(G0.p, dim, x), yv = vec_from_id(G0.p, dim, y);
  for (const Mat &g : G0.elems) {
    Vec w = vec_sub(yv, mat_apply(xv, g));
    long long wid = vec_id(w);
    std::vector<long long> img;
    img.reserve(B1.size());
    Vec wv = vec_from_id(G0.p, dim, wid);
    for (long long z : B1) img.push_back(vec_id(vec_add(mat_apply(vec_from_id(G0.p, dim, z), g), wv)));
    std::sort(img.begin(), img.end());
    if (img == b2) return true;
  }
  return false;
}

} // namespace flagdes
