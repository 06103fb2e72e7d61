#include "flagdes/group.hpp"

#include <algorithm>
#include <set>

namespace flagdes {

Group closure(std::vector<std::pair<std::string, Mat>> gens, long long cap) {
  if (gens.empty()) fail(Err::BadInput, "closure needs at least one generator");
  if (cap < 1) fail(Err::BadInput, "cap must be >= 1");
  int p = gens[0].second.p, n = gens[0].second.n;
  for (auto &g : gens) {
    if (g.second.p != p || g.second.n != n)
      fail(Err::DimensionMismatch, "generators over different spaces");
    if (mat_det(g.second) == 0) fail(Err::SingularGenerator, "generator is singular");
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [](const auto &a, const auto &b) { return a.second.key() < b.second.key(); });
  // drop duplicate generator matrices
  std::vector<std::pair<std::string, Mat>> uniq;
  for (auto &g : gens)
    if (uniq.empty() || !(uniq.back().second.key() == g.second.key())) uniq.push_back(g);

  Group G;
  G.p = p;
  G.n = n;
  G.gens = uniq;
  Mat id = mat_identity(p, n);
  G.elems.push_back(id);
  G.index[id.key()] = 0;
  for (size_t head = 0; head < G.elems.size(); ++head) {
    Mat cur = G.elems[head]; // copy: vector may reallocate
    for (auto &g : G.gens) {
      Mat m = mat_mul(cur, g.second);
      auto key = m.key();
      if (G.index.count(key)) continue;
      if ((long long)G.elems.size() >= cap)
        fail(Err::CapExceeded, "group closure exceeded cap " + std::to_string(cap));
      G.index[key] = (int)G.elems.size();
      G.elems.push_back(std::move(m));
    }
  }
  return G;
}

Group closure_mats(const std::vector<Mat> &gens, long long cap) {
  std::vector<std::pair<std::string, Mat>> g;
  for (size_t i = 0; i < gens.size(); ++i) g.push_back({"g" + std::to_string(i), gens[i]});
  return closure(std::move(g), cap);
}

bool try_closure(const std::vector<Mat> &gens, long long cap, Group &out) {
  try {
    out = closure_mats(gens, cap);
    return true;
  } catch (const Error &e) {
    if (e.code == Err::CapExceeded) return false;
    throw;
  }
}

long long element_order(const Mat &m) {
  Mat id = mat_identity(m.p, m.n);
  Mat x = m;
  long long n = 1;
  while (!(x == id)) {
    x = mat_mul(x, m);
    ++n;
    if (n > 10000000LL) fail(Err::CapExceeded, "element order loop overran");
  }
  return n;
}

std::vector<long long> orbit_vector(const std::vector<Mat> &gens, const Vec &seed) {
  std::set<long long> seen;
  std::vector<Vec> queue{seed};
  seen.insert(vec_id(seed));
  for (size_t head = 0; head < queue.size(); ++head) {
    Vec cur = queue[head];
    for (const Mat &g : gens) {
      Vec img = mat_apply(cur, g);
      if (seen.insert(vec_id(img)).second) queue.push_back(img);
    }
  }
  return std::vector<long long>(seen.begin(), seen.end());
}

std::vector<Subspace> orbit_subspace(const std::vector<Mat> &gens, const Subspace &seed) {
  std::set<Subspace> seen{seed};
  std::vector<Subspace> queue{seed};
  for (size_t head = 0; head < queue.size(); ++head) {
    Subspace cur = queue[head];
    for (const Mat &g : gens) {
      Subspace img = subspace_apply(cur, g);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return std::vector<Subspace>(seen.begin(), seen.end());
}

std::vector<std::vector<long long>> orbit_pointset(const std::vector<Mat> &gens, int dim,
                                                   const std::vector<long long> &B) {
  if (gens.empty()) fail(Err::BadInput, "orbit needs generators");
  int p = gens[0].p;
  std::vector<long long> start = B;
  std::sort(start.begin(), start.end());
  std::set<std::vector<long long>> seen{start};
  std::vector<std::vector<long long>> queue{start};
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<long long> cur = queue[head];
    for (const Mat &g : gens) {
      std::vector<long long> img;
      img.reserve(cur.size());
      for (long long id : cur) img.push_back(vec_id(mat_apply(vec_from_id(p, dim, id), g)));
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return std::vector<std::vector<long long>>(seen.begin(), seen.end());
}

OrbitDecomposition orbits_on_nonzero(const Group &G) {
  long long v = ipow(G.p, G.n);
  std::vector<char> done(v, 0);
  OrbitDecomposition dec;
  auto gens = G.gen_mats();
  for (long long id = 1; id < v; ++id) {
    if (done[id]) continue;
    auto orb = orbit_vector(gens, vec_from_id(G.p, G.n, id));
    for (long long x : orb) done[x] = 1;
    dec.orbits.push_back({id, orb});
    dec.lengths.push_back((long long)orb.size());
  }
  std::sort(dec.lengths.begin(), dec.lengths.end());
  return dec;
}

SubspaceOrbits orbits_on_subspaces(const Group &G, int t, long long cap) {
  auto all = enumerate_subspaces(G.p, G.n, t, cap);
  std::set<std::string> done;
  SubspaceOrbits so;
  auto gens = G.gen_mats();
  for (const Subspace &S : all) {
    if (done.count(S.key())) continue;
    auto orb = orbit_subspace(gens, S);
    for (const Subspace &U : orb) done.insert(U.key());
    so.orbits.push_back(orb);
    so.lengths.push_back((long long)orb.size());
  }
  std::sort(so.lengths.begin(), so.lengths.end());
  return so;
}

Group setwise_stabilizer_points(const Group &G, int dim, const std::vector<long long> &S) {
  std::vector<long long> target = S;
  std::sort(target.begin(), target.end());
  std::vector<std::pair<std::string, Mat>> stab;
  int k = 0;
  for (const Mat &g : G.elems) {
    std::vector<long long> img;
    img.reserve(target.size());
    for (long long id : target) img.push_back(vec_id(mat_apply(vec_from_id(G.p, dim, id), g)));
    std::sort(img.begin(), img.end());
    if (img == target) stab.push_back({"s" + std::to_string(k++), g});
  }
  // The matching subset of a full closure is itself closed.
  Group H;
  H.p = G.p;
  H.n = G.n;
  H.gens = stab;
  for (auto &kv : stab) {
    H.index[kv.second.key()] = (int)H.elems.size();
    H.elems.push_back(kv.second);
  }
  return H;
}

Group setwise_stabilizer_subspaces(const Group &G, const std::vector<Subspace> &S) {
  std::set<std::string> target;
  for (const Subspace &U : S) target.insert(U.key());
  std::vector<std::pair<std::string, Mat>> stab;
  int k = 0;
  for (const Mat &g : G.elems) {
    bool ok = true;
    for (const Subspace &U : S) {
      if (!target.count(subspace_apply(U, g).key())) {
        ok = false;
        break;
      }
    }
    if (ok) stab.push_back({"s" + std::to_string(k++), g});
  }
  Group H;
  H.p = G.p;
  H.n = G.n;
  H.gens = stab;
  for (auto &kv : stab) {
    H.index[kv.second.key()] = (int)H.elems.size();
    H.elems.push_back(kv.second);
  }
  return H;
}

namespace {

struct WordParser {
  const std::string &s;
  size_t pos = 0;
  const std::map<char, Mat> &env;

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Mat parse_seq() {
    Mat acc;
    bool have = false;
    while (!done() && peek() != ')') {
      Mat t = parse_term();
      acc = have ? mat_mul(acc, t) : t;
      have = true;
    }
    if (!have) fail(Err::ParseError, "empty word");
    return acc;
  }

  Mat parse_term() {
    Mat a = parse_atom();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws();
      bool negexp = false;
      if (pos < s.size() && s[pos] == '-') {
        negexp = true;
        ++pos;
      }
      skip_ws();
      if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
        fail(Err::ParseError, "expected digits after '^'");
      long long e = 0;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) {
        e = e * 10 + (s[pos] - '0');
        ++pos;
      }
      return mat_pow(a, negexp ? -e : e);
    }
    return a;
  }

  Mat parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail(Err::ParseError, "unexpected end of word");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Mat inner = parse_seq();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail(Err::ParseError, "missing ')'");
      ++pos;
      return inner;
    }
    if (isalpha((unsigned char)c)) {
      ++pos;
      auto it = env.find(c);
      if (it == env.end()) fail(Err::UnboundLabel, std::string("unbound label '") + c + "'");
      return it->second;
    }
    fail(Err::ParseError, std::string("unexpected character '") + c + "'");
  }
};

} // namespace

Mat word_eval(const std::string &word, const std::map<char, Mat> &bindings) {
  WordParser wp{word, 0, bindings};
  Mat m = wp.parse_seq();
  wp.skip_ws();
  if (wp.pos != word.size()) fail(Err::ParseError, "trailing characters in word");
  return m;
}

} // namespace flagdes
