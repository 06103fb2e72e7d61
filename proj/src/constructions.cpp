#include "flagdes/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flagdes {

namespace {

Fel token_to_fel(const Field &f, const std::string &tok) {
  if (tok == "0") return f.zero();
  if (tok == "1") return f.one();
  if (tok.size() >= 2 && tok[0] == 'w') {
    long long e = std::stoll(tok.substr(1));
    return f.pow(f.omega(), e);
  }
  fail(Err::BadInput, "bad field element token '" + tok + "'");
}

Expected expected_from_json(const nlohmann::json &j) {
  Expected e;
  const char *key = j.contains("expected") ? "expected" : (j.contains("params") ? "params" : "");
  if (*key) {
    const auto &x = j[key];
    e.v = x.value("v", -1);
    e.k = x.value("k", -1);
    e.r = x.value("r", -1);
    e.b = x.value("b", -1);
    e.lambda = x.value("lambda", -1);
    e.src = x.value("src", "");
  }
  e.g0_order = j.value("g0_order", -1);
  e.g0b_order = j.value("g0b_order", -1);
  if (j.contains("orbit_lengths"))
    for (const auto &x : j["orbit_lengths"]) e.orbit_lengths.push_back(x.get<long long>());
  return e;
}

std::vector<long long> sorted_unique(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

SubfieldCtx SubfieldCtx::make(int p, int d, int n) {
  if (n < 1 || d % n != 0) fail(Err::BadDivisor, "n must divide d");
  SubfieldCtx ctx;
  ctx.n = n;
  ctx.e = d / n;
  ctx.K = std::make_shared<Field>(Field::create(p, d));
  ctx.Fq = std::make_shared<Field>(Field::create(p, ctx.e));
  // image of Fq's coefficient generator: id-smallest root of Fq's modulus in K
  const auto &mq = ctx.Fq->poly();
  bool found = false;
  for (long long id = 0; id < ctx.K->q() && !found; ++id) {
    Fel a = ctx.K->from_id(id);
    Fel acc = ctx.K->zero(), apow = ctx.K->one();
    for (size_t i = 0; i < mq.size(); ++i) {
      acc = ctx.K->add(acc, ctx.K->mul(apow, ctx.K->from_int(mq[i])));
      apow = ctx.K->mul(apow, a);
    }
    if (ctx.K->is_zero(acc)) {
      ctx.z = a;
      found = true;
    }
  }
  if (!found) fail(Err::BadInput, "no root of subfield modulus in the big field");
  // phi row (i*e + a) = coefficients of z^a * omega^i
  std::vector<std::vector<int>> rows(d, std::vector<int>(d, 0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < ctx.e; ++a) {
      Fel val = ctx.K->mul(ctx.K->pow(ctx.z, a), ctx.K->pow(ctx.K->omega(), i));
      for (int j = 0; j < d; ++j) rows[i * ctx.e + a][j] = val.c[j];
    }
  ctx.phi = mat_from_rows(p, rows);
  ctx.phi_inv = mat_inv(ctx.phi);
  return ctx;
}

Fel SubfieldCtx::embed(const Fel &a) const {
  Fel acc = K->zero(), zp = K->one();
  for (size_t i = 0; i < a.c.size(); ++i) {
    acc = K->add(acc, K->mul(zp, K->from_int(a.c[i])));
    zp = K->mul(zp, z);
  }
  return acc;
}

Mat SubfieldCtx::scalar_matrix(const Fel &mu) const {
  return mat_mul(mat_mul(phi, mult_matrix(*K, mu)), phi_inv);
}

Mat SubfieldCtx::blowup(const FMat &A) const {
  if (A.f == nullptr || A.f->p() != Fq->p() || A.f->d() != Fq->d())
    fail(Err::FieldMismatch, "blowup expects a matrix over GF(q)");
  return field_blowup(A);
}

Mat SubfieldCtx::frobenius_block(int s) const {
  Mat F = mat_pow(frobenius_matrix(*Fq), s);
  int d = n * e;
  Mat R{Fq->p(), d, std::vector<uint8_t>((size_t)d * d, 0)};
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < e; ++a)
      for (int b = 0; b < e; ++b) R.at(i * e + a, i * e + b) = F.at(a, b);
  return R;
}

long long SubfieldCtx::point_id(const Fel &zk) const {
  Vec kv{K->p(), zk.c};
  return vec_id(mat_apply(kv, phi_inv));
}

std::vector<std::pair<std::string, Mat>> sl_generators(const SubfieldCtx &ctx) {
  if (ctx.n < 2) fail(Err::BadDegree, "SL generators need n >= 2");
  std::vector<std::pair<std::string, Mat>> gens;
  const Field &q = *ctx.Fq;
  for (int i = 0; i < ctx.n; ++i)
    for (int j = 0; j < ctx.n; ++j) {
      if (i == j) continue;
      for (long long aid = 1; aid < q.q(); ++aid) {
        FMat M = fmat_identity(q, ctx.n);
        M.at(i, j) = q.from_id(aid);
        gens.push_back({"e" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(aid),
                        ctx.blowup(M)});
      }
    }
  return gens;
}

std::vector<std::pair<std::string, Mat>> sp_generators(const SubfieldCtx &ctx) {
  int n = ctx.n;
  if (n < 2 || n % 2 != 0) fail(Err::BadDegree, "Sp generators need even n >= 2");
  const Field &q = *ctx.Fq;
  // alternating form pairing (e_{2i}, e_{2i+1})
  std::vector<std::vector<int>> jm(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; i += 2) {
    jm[i][i + 1] = 1;
    jm[i + 1][i] = -1;
  }
  auto form = [&](const std::vector<Fel> &x, const std::vector<Fel> &y) {
    Fel acc = q.zero();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (jm[i][j] == 0) continue;
        Fel t = q.mul(x[i], y[j]);
        if (jm[i][j] < 0) t = q.neg(t);
        acc = q.add(acc, t);
      }
    return acc;
  };
  std::vector<std::pair<std::string, Mat>> gens;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= q.q();
  for (long long vid = 1; vid < total; ++vid) {
    std::vector<Fel> v(n);
    long long t = vid;
    for (int i = 0; i < n; ++i) {
      v[i] = q.from_id(t % q.q());
      t /= q.q();
    }
    for (long long lam = 1; lam < q.q(); ++lam) {
      Fel l = q.from_id(lam);
      // transvection x -> x + lambda f(x, v) v
      FMat M = fmat_identity(q, n);
      for (int i = 0; i < n; ++i) {
        std::vector<Fel> ei(n, q.zero());
        ei[i] = q.one();
        Fel c = q.mul(l, form(ei, v));
        for (int j = 0; j < n; ++j) M.at(i, j) = q.add(M.at(i, j), q.mul(c, v[j]));
      }
      gens.push_back({"t" + std::to_string(vid) + "_" + std::to_string(lam), ctx.blowup(M)});
    }
  }
  return gens;
}

namespace {

Expected sem1dim_expected(const std::string &id) {
  for (const auto &row : catalog()["sem1dim"])
    if (row["id"] == id) return expected_from_json(row);
  return Expected{};
}

} // namespace

ExampleInstance ex_sem1dim_3pts(int p, int d, int n, LinearKind X, long long cap) {
  long long v = ipow(p, d);
  if ((v - 1) % 3 != 0) fail(Err::BadCongruence, "needs p^d = 1 (mod 3)");
  SubfieldCtx ctx = SubfieldCtx::make(p, d, n);
  Fel mu = ctx.K->pow(ctx.K->omega(), (v - 1) / 3);
  Mat Mmu = ctx.scalar_matrix(mu);
  Vec x = vec_from_id(p, d, 1); // first basis vector
  Vec x1 = mat_apply(x, Mmu);
  Vec x2 = mat_apply(x1, Mmu);
  std::vector<long long> B = {0, vec_id(vec_sub(x1, x)), vec_id(vec_sub(x2, x))};
  std::vector<std::pair<std::string, Mat>> gens;
  std::string xs;
  switch (X) {
  case LinearKind::GL1:
    gens.push_back({"w", ctx.scalar_matrix(ctx.K->omega())});
    xs = "gl1";
    break;
  case LinearKind::SL:
    gens = sl_generators(ctx);
    xs = "sl";
    break;
  case LinearKind::Sp:
    gens = sp_generators(ctx);
    xs = "sp";
    break;
  }
  ExampleInstance inst;
  inst.id = "3pts-" + std::to_string(p) + "-" + std::to_string(d) + "-" + std::to_string(n) +
            "-" + xs;
  inst.p = p;
  inst.d = d;
  inst.g0 = closure(std::move(gens), cap);
  inst.base_block = sorted_unique(B);
  inst.expected = sem1dim_expected(inst.id);
  inst.field = ctx.K;
  return inst;
}

ExampleInstance ex_sem1dim_subfield(int p, int d, int n, int t, bool allow_t_eq_dn,
                                    long long cap) {
  if (n < 1 || d % n != 0) fail(Err::BadDivisor, "n must divide d");
  int dn = d / n;
  if (t < 2 || t % 2 != 0) fail(Err::BadDivisor, "t must be even and >= 2");
  if (dn % t != 0) fail(Err::BadDivisor, "t must divide d/n");
  if (t == dn && !allow_t_eq_dn) fail(Err::BadDivisor, "t must be a proper divisor of d/n");
  SubfieldCtx ctx = SubfieldCtx::make(p, d, n);
  // B = GF(p^t)-multiples of the first basis vector
  std::vector<long long> B;
  for (long long aid = 0; aid < ctx.Fq->q(); ++aid) {
    Fel a = ctx.Fq->from_id(aid);
    if (!ctx.Fq->is_zero(a) && !ctx.Fq->in_subfield(a, t)) continue;
    Vec w = vec_from_id(p, d, 0);
    for (int j = 0; j < ctx.e; ++j) w.c[j] = a.c[j];
    B.push_back(vec_id(w));
  }
  std::vector<std::pair<std::string, Mat>> gens;
  if (n == 1)
    gens.push_back({"w", ctx.scalar_matrix(ctx.K->omega())});
  else
    gens = sl_generators(ctx);
  gens.push_back({"f", ctx.frobenius_block(t / 2)});
  ExampleInstance inst;
  inst.id = "subfield-" + std::to_string(p) + "-" + std::to_string(d) + "-" + std::to_string(n) +
            "-" + std::to_string(t);
  inst.p = p;
  inst.d = d;
  inst.g0 = closure(std::move(gens), cap);
  inst.base_block = sorted_unique(B);
  inst.expected = sem1dim_expected(inst.id);
  inst.field = ctx.K;
  return inst;
}

namespace {

// Lines of table 1 that share a translation complement reuse one closure.
const Group &table1_group(const nlohmann::json &row, const Field &fp) {
  static std::map<std::string, Group> cache;
  std::vector<std::pair<std::string, Mat>> gens;
  std::string key = std::to_string(fp.p()) + "|";
  int gi = 0;
  for (const auto &gj : row["gens"]) {
    std::vector<std::vector<int>> m;
    for (const auto &rj : gj) {
      std::vector<int> rr;
      for (const auto &tok : rj) rr.push_back((int)token_to_fel(fp, tok.get<std::string>()).c[0]);
      m.push_back(rr);
    }
    Mat g = mat_from_rows(fp.p(), m);
    key += g.key() + "|";
    gens.push_back({std::string(1, (char)('a' + gi++)), g});
  }
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, closure(std::move(gens))).first;
  return it->second;
}

} // namespace

ExampleInstance table1_instance(int line) {
  const auto &t1 = catalog()["table1"];
  if (line < 1 || line > (int)t1.size()) fail(Err::BadInput, "table1 line out of range");
  const auto &row = t1[line - 1];
  int p = row["p"].get<int>();
  auto fp = std::make_shared<Field>(Field::create(p, 1));
  ExampleInstance inst;
  inst.id = "table1-line" + std::to_string(line);
  inst.p = p;
  inst.d = 2;
  inst.g0 = table1_group(row, *fp);
  for (const auto &ptj : row["block"]) {
    Vec v{p, {token_to_fel(*fp, ptj[0].get<std::string>()).c[0],
              token_to_fel(*fp, ptj[1].get<std::string>()).c[0]}};
    inst.base_block.push_back(vec_id(v));
  }
  inst.base_block = sorted_unique(inst.base_block);
  inst.expected = expected_from_json(row);
  inst.field = fp;
  inst.note = row.value("structure", "");
  return inst;
}

namespace {

struct HyperbolicData {
  Mat alpha, beta;
  Group g0;
  std::vector<long long> block;
};

const HyperbolicData &hyperbolic_data() {
  static const HyperbolicData data = [] {
    HyperbolicData h;
    const auto &j = catalog()["hyperbolic"];
    std::vector<std::vector<int>> am, bm;
    for (const auto &r : j["alpha"]) am.push_back(r.get<std::vector<int>>());
    for (const auto &r : j["beta"]) bm.push_back(r.get<std::vector<int>>());
    h.alpha = mat_from_rows(3, am);
    h.beta = mat_from_rows(3, bm);
    h.g0 = closure({{"a", h.alpha}, {"b", h.beta}});
    for (const auto &r : j["block"]) {
      auto cs = r.get<std::vector<int>>();
      Vec v{3, {}};
      for (int c : cs) v.c.push_back((uint8_t)(((c % 3) + 3) % 3));
      h.block.push_back(vec_id(v));
    }
    std::sort(h.block.begin(), h.block.end());
    return h;
  }();
  return data;
}

} // namespace

ExampleInstance ex_hyperbolic() {
  const auto &h = hyperbolic_data();
  ExampleInstance inst;
  inst.id = "hyperbolic";
  inst.p = 3;
  inst.d = 4;
  inst.g0 = h.g0;
  inst.base_block = h.block;
  inst.expected = expected_from_json(catalog()["hyperbolic"]);
  return inst;
}

Group table2_subgroup(int line) {
  const auto &t2 = catalog()["table2"];
  if (line < 1 || line > (int)t2.size()) fail(Err::BadInput, "table2 line out of range");
  const auto &h = hyperbolic_data();
  std::map<char, Mat> env{{'a', h.alpha}, {'b', h.beta}};
  std::vector<std::pair<std::string, Mat>> gens;
  int i = 0;
  for (const auto &w : t2[line - 1]["words"])
    gens.push_back({"w" + std::to_string(i++), word_eval(w.get<std::string>(), env)});
  return closure(std::move(gens));
}

long long table2_expected_order(int line) {
  return catalog()["table2"][line - 1]["order"].get<long long>();
}

long long table2_expected_stab(int line) {
  return catalog()["table2"][line - 1]["stab"].get<long long>();
}

namespace {

struct TensorData {
  Mat a3, b2, g2;
  Group g0;
};

const TensorData &tensor_data() {
  static const TensorData data = [] {
    TensorData t;
    const auto &j = catalog()["tens"];
    std::vector<std::vector<int>> am, bm, gm;
    for (const auto &r : j["alpha"]) am.push_back(r.get<std::vector<int>>());
    for (const auto &r : j["beta"]) bm.push_back(r.get<std::vector<int>>());
    for (const auto &r : j["gamma"]) gm.push_back(r.get<std::vector<int>>());
    t.a3 = mat_from_rows(2, am);
    t.b2 = mat_from_rows(2, bm);
    t.g2 = mat_from_rows(2, gm);
    Mat i3 = mat_identity(2, 3), i2 = mat_identity(2, 2);
    t.g0 = closure({{"a", mat_tensor(t.a3, i2)},
                    {"b", mat_tensor(i3, t.b2)},
                    {"c", mat_tensor(i3, t.g2)}});
    return t;
  }();
  return data;
}

std::vector<long long> tensor_block(const std::vector<int> &w) {
  Vec x0 = vec_of(2, {1, 0, 0}), x1 = vec_of(2, {0, 1, 0});
  Vec u1 = vec_of(2, {1, 0}), u2 = vec_of(2, {0, 1});
  Vec wv{2, {}};
  for (int c : w) wv.c.push_back((uint8_t)(c & 1));
  Vec g1 = tensor(x0, u1);
  Vec g2 = vec_add(tensor(x1, u1), tensor(wv, u2));
  return subspace_point_ids(span(2, 6, {g1, g2}));
}

} // namespace

ExampleInstance ex_tensor(int which) {
  if (which != 1 && which != 2) fail(Err::BadInput, "tensor design index must be 1 or 2");
  const auto &t = tensor_data();
  const auto &j = catalog()["tens"];
  ExampleInstance inst;
  inst.id = "tens-" + std::to_string(which);
  inst.p = 2;
  inst.d = 6;
  inst.g0 = t.g0;
  std::vector<int> w;
  if (which == 1)
    w = {0, 0, 1}; // third basis vector
  else
    w = j["pi2_w"].get<std::vector<int>>();
  inst.base_block = tensor_block(w);
  inst.expected = expected_from_json(j);
  return inst;
}

std::vector<int> tensor_pi2_selection() {
  // Enumerate the second-block shape over all nonzero w, keep those whose
  // design is a flag-transitive 2-(64,4,2), and return the id-smallest w whose
  // design differs from the first one by fingerprint.
  ExampleInstance d1 = ex_tensor(1);
  Design D1 = design_from_base_block(d1.g0, d1.base_block);
  Fingerprint f1 = fingerprint(D1, d1.g0);
  const auto &t = tensor_data();
  for (long long wid = 1; wid < 8; ++wid) {
    Vec wv = vec_from_id(2, 3, wid);
    std::vector<int> w(wv.c.begin(), wv.c.end());
    auto B = tensor_block(w);
    auto fc = flag_transitive_zero_check(t.g0, B);
    if (!fc.ok || fc.r() != 42) continue;
    Design D = design_from_base_block(t.g0, B);
    DesignParams P = verify_parameters(D);
    if (!(P == DesignParams{64, 672, 42, 4, 2})) continue;
    Fingerprint f = fingerprint(D, t.g0);
    if (fingerprints_differ(f1, f)) return w;
  }
  fail(Err::SubgroupSearchFailed, "no second tensor block found");
}

SpreadSet desarguesian_spread(int p, int e, int m) {
  Field K = Field::create(p, e * m);
  int d = e * m;
  Fel eta = K.subfield_generator(e);
  std::set<std::string> seen;
  SpreadSet S;
  S.p = p;
  S.amb = d;
  S.t = e;
  for (long long id = 1; id < K.q(); ++id) {
    Fel z = K.from_id(id);
    std::vector<Vec> basis;
    Fel cur = z;
    for (int a = 0; a < e; ++a) {
      basis.push_back(Vec{p, cur.c});
      cur = K.mul(cur, eta);
    }
    Subspace comp = span(p, d, basis);
    if (seen.insert(comp.key()).second) S.components.push_back(comp);
  }
  std::sort(S.components.begin(), S.components.end());
  return S;
}

bool is_spread(const std::vector<Subspace> &components) {
  if (components.empty()) return false;
  int p = components[0].p, amb = components[0].amb, t = components[0].dim;
  long long v = ipow(p, amb);
  if (t < 1 || (v - 1) % (ipow(p, t) - 1) != 0) return false;
  if ((long long)components.size() != (v - 1) / (ipow(p, t) - 1)) return false;
  std::vector<char> covered(v, 0);
  for (const auto &S : components) {
    if (S.p != p || S.amb != amb || S.dim != t) return false;
    for (long long id : subspace_point_ids(S)) {
      if (id == 0) continue;
      if (covered[id]) return false;
      covered[id] = 1;
    }
  }
  for (long long id = 1; id < v; ++id)
    if (!covered[id]) return false;
  return true;
}

SpreadKernel spread_kernel(const std::vector<Subspace> &components) {
  if (components.empty()) fail(Err::BadInput, "empty spread");
  int p = components[0].p, d = components[0].amb;
  // Unknown M (d x d). For every component Y and basis row u of Y the reduced
  // vector of u*M against Y must vanish; each coordinate is linear in M.
  std::vector<std::vector<uint8_t>> rows;
  for (const auto &Y : components) {
    for (int r = 0; r < Y.dim; ++r) {
      std::vector<uint8_t> u(Y.b.begin() + (size_t)r * d, Y.b.begin() + (size_t)(r + 1) * d);
      // coordinate functionals of u*M on the entries of M
      std::vector<std::vector<uint8_t>> funct(d, std::vector<uint8_t>((size_t)d * d, 0));
      for (int i = 0; i < d; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < d; ++j)
          funct[j][(size_t)i * d + j] = (uint8_t)((funct[j][(size_t)i * d + j] + u[i]) % p);
      }
      // replicate the elimination against Y's RREF rows on the functionals
      for (int step = 0; step < Y.dim; ++step) {
        int lead = -1;
        for (int j = 0; j < d; ++j)
          if (Y.b[(size_t)step * d + j]) {
            lead = j;
            break;
          }
        std::vector<uint8_t> lead_funct = funct[lead];
        bool nonzero = false;
        for (auto x : lead_funct)
          if (x) nonzero = true;
        if (!nonzero) continue;
        for (int j = 0; j < d; ++j) {
          int coef = Y.b[(size_t)step * d + j];
          if (!coef) continue;
          for (size_t idx = 0; idx < funct[j].size(); ++idx)
            funct[j][idx] = (uint8_t)((funct[j][idx] + (p - coef) * lead_funct[idx]) % p);
        }
      }
      for (int j = 0; j < d; ++j) rows.push_back(funct[j]);
    }
  }
  int cols = d * d;
  std::vector<uint8_t> sys;
  for (auto &r : rows) sys.insert(sys.end(), r.begin(), r.end());
  int rank = rref(sys, (int)rows.size(), cols, p);
  SpreadKernel out;
  out.dim = cols - rank;
  std::vector<int> pivot_col;
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < cols; ++c)
      if (sys[(size_t)r * cols + c]) {
        pivot_col.push_back(c);
        break;
      }
  std::vector<bool> is_piv(cols, false);
  for (int c : pivot_col) is_piv[c] = true;
  std::vector<Mat> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<uint8_t> sol(cols, 0);
    sol[c] = 1;
    for (int r = 0; r < (int)pivot_col.size(); ++r)
      sol[pivot_col[r]] = (uint8_t)((p - sys[(size_t)r * cols + c]) % p);
    basis.push_back(Mat{p, d, sol});
  }
  // field test: all nonzero span elements invertible and the span is closed
  // under multiplication
  long long total = ipow(p, out.dim);
  out.is_field = true;
  std::vector<Mat> span_elems;
  for (long long nsel = 0; nsel < total; ++nsel) {
    Mat M{p, d, std::vector<uint8_t>((size_t)d * d, 0)};
    long long t = nsel;
    for (auto &Bm : basis) {
      int c = (int)(t % p);
      t /= p;
      if (c)
        for (size_t idx = 0; idx < M.a.size(); ++idx)
          M.a[idx] = (uint8_t)((M.a[idx] + c * Bm.a[idx]) % p);
    }
    span_elems.push_back(M);
    if (nsel > 0 && mat_det(M) == 0) out.is_field = false;
  }
  if (out.is_field) {
    std::set<std::string> keys;
    for (auto &M : span_elems) keys.insert(M.key());
    for (auto &A : span_elems)
      for (auto &B : span_elems)
        if (!keys.count(mat_mul(A, B).key())) out.is_field = false;
  }
  return out;
}

const Sl25Data &sl25_data() {
  static const Sl25Data data = [] {
    Sl25Data d;
    SubfieldCtx ctx = SubfieldCtx::make(3, 4, 2);
    d.sl29 = closure(sl_generators(ctx));
    if (d.sl29.order() != 720) fail(Err::BadInput, "SL2(9) closure has wrong order");
    // locate SL2(5): a pair of elements of orders 4 and 10 generating order 120
    const auto &want =
        catalog()["sl25_orbits"]["subspace_orbit_lengths"].get<std::vector<long long>>();
    std::vector<int> ord4, ord10;
    for (int i = 0; i < (int)d.sl29.elems.size(); ++i) {
      long long o = element_order(d.sl29.elems[i]);
      if (o == 4) ord4.push_back(i);
      if (o == 10) ord10.push_back(i);
    }
    bool found = false;
    for (int ia : ord4) {
      for (int ib : ord10) {
        Group cand;
        if (!try_closure({d.sl29.elems[ia], d.sl29.elems[ib]}, 121, cand)) continue;
        if (cand.order() != 120) continue;
        auto so = orbits_on_subspaces(cand, 2);
        if (so.lengths == want) {
          d.sl25 = std::move(cand);
          d.orbits2 = std::move(so);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) fail(Err::SubgroupSearchFailed, "no order-120 subgroup with the expected orbits");
    for (const auto &orb : d.orbits2.orbits)
      if (orb.size() == 5) d.five_orbits.push_back(orb);
    if (d.five_orbits.size() != 4) fail(Err::SpreadAssemblyFailed, "expected four 5-orbits");
    std::vector<std::vector<Subspace>> spreads;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) {
        std::vector<Subspace> u = d.five_orbits[i];
        u.insert(u.end(), d.five_orbits[j].begin(), d.five_orbits[j].end());
        std::sort(u.begin(), u.end());
        if (is_spread(u)) spreads.push_back(u);
      }
    d.spread_union_count = (int)spreads.size();
    if (spreads.size() != 2)
      fail(Err::SpreadAssemblyFailed,
           "expected exactly two spread unions, found " + std::to_string(spreads.size()));
    d.hall1 = SpreadSet{3, 4, 2, spreads[0]};
    d.hall2 = SpreadSet{3, 4, 2, spreads[1]};
    return d;
  }();
  return data;
}

ExampleInstance ex_hall() {
  const auto &sd = sl25_data();
  SubfieldCtx ctx = SubfieldCtx::make(3, 4, 2);
  std::vector<std::pair<std::string, Mat>> gens = sd.sl25.gens;
  FMat Z = fmat_identity(*ctx.Fq, 2);
  Z.at(0, 0) = ctx.Fq->omega();
  Z.at(1, 1) = ctx.Fq->omega();
  gens.push_back({"z", ctx.blowup(Z)});
  ExampleInstance inst;
  inst.id = "hall";
  inst.p = 3;
  inst.d = 4;
  inst.g0 = closure(std::move(gens));
  inst.base_block = subspace_point_ids(sd.hall1.components[0]);
  inst.expected = expected_from_json(catalog()["hall"]);
  return inst;
}

const SpreadStabilizerData &spread_stabilizer_data() {
  static const SpreadStabilizerData data = [] {
    SpreadStabilizerData sd;
    const auto &s25 = sl25_data();
    std::vector<Mat> gl_gens;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        for (int a = 1; a <= 2; ++a) {
          Mat m = mat_identity(3, 4);
          m.at(i, j) = (uint8_t)a;
          gl_gens.push_back(m);
        }
      }
    {
      Mat m = mat_identity(3, 4);
      m.at(0, 0) = 2;
      gl_gens.push_back(m);
    }
    // stabilizer of the first invariant spread via orbit/stabilizer
    auto spread_key = [](const std::vector<Subspace> &S) {
      std::string k;
      for (const auto &c : S) k += c.key();
      return k;
    };
    auto apply_spread = [](const std::vector<Subspace> &S, const Mat &g) {
      std::vector<Subspace> out;
      out.reserve(S.size());
      for (const auto &c : S) out.push_back(subspace_apply(c, g));
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<Subspace> S0 = s25.hall1.components;
    std::map<std::string, Mat> transversal;
    std::vector<std::vector<Subspace>> queue{S0};
    transversal[spread_key(S0)] = mat_identity(3, 4);
    std::vector<Mat> schreier;
    std::set<std::string> schreier_keys;
    for (size_t head = 0; head < queue.size(); ++head) {
      auto cur = queue[head];
      Mat rep = transversal[spread_key(cur)];
      for (const Mat &g : gl_gens) {
        auto img = apply_spread(cur, g);
        auto key = spread_key(img);
        auto it = transversal.find(key);
        if (it == transversal.end()) {
          transversal[key] = mat_mul(rep, g);
          queue.push_back(img);
        } else if (schreier.size() < 64) {
          Mat s = mat_mul(mat_mul(rep, g), mat_inv(it->second));
          if (schreier_keys.insert(s.key()).second) schreier.push_back(s);
        }
      }
    }
    long long gl_order = 1;
    for (int i = 0; i < 4; ++i) gl_order *= ipow(3, 4) - ipow(3, i);
    long long target = gl_order / (long long)queue.size();
    Group stab;
    size_t take = 8;
    while (true) {
      std::vector<Mat> use(schreier.begin(), schreier.begin() + std::min(take, schreier.size()));
      stab = closure_mats(use);
      if (stab.order() == target || take >= schreier.size()) break;
      take += 8;
    }
    if (stab.order() != target)
      fail(Err::SubgroupSearchFailed, "spread stabilizer order mismatch");
    sd.stab = std::move(stab);

    // largest normal 2-subgroup: conjugation-closed 2-classes whose normal
    // closure is a 2-group
    auto is_pow2 = [](long long x) { return x > 0 && (x & (x - 1)) == 0; };
    auto gens_mats = sd.stab.gen_mats();
    std::vector<Mat> gens_inv;
    for (auto &g : gens_mats) gens_inv.push_back(mat_inv(g));
    std::vector<Mat> o2_gens;
    Group o2;
    bool have_o2 = false;
    for (const Mat &g : sd.stab.elems) {
      long long og = element_order(g);
      if (og < 2 || !is_pow2(og)) continue;
      if (have_o2 && o2.contains(g)) continue;
      std::set<std::string> cls_keys{g.key()};
      std::vector<Mat> cls{g};
      bool small = true;
      for (size_t head = 0; head < cls.size() && small; ++head) {
        Mat cur = cls[head];
        for (size_t gi = 0; gi < gens_mats.size(); ++gi) {
          Mat conj = mat_mul(mat_mul(gens_inv[gi], cur), gens_mats[gi]);
          if (cls_keys.insert(conj.key()).second) {
            cls.push_back(conj);
            if (cls.size() > 32) {
              small = false;
              break;
            }
          }
        }
      }
      if (!small) continue;
      std::vector<Mat> cand_gens = o2_gens;
      cand_gens.insert(cand_gens.end(), cls.begin(), cls.end());
      Group cand;
      if (!try_closure(cand_gens, 33, cand)) continue;
      if (!is_pow2(cand.order())) continue;
      o2 = std::move(cand);
      o2_gens = cand_gens;
      have_o2 = true;
      if (o2.order() == 32) break;
    }
    if (!have_o2 || o2.order() != 32)
      fail(Err::SubgroupSearchFailed, "normal 2-subgroup of order 32 not found");
    sd.o2 = std::move(o2);

    Mat a;
    bool got_a = false;
    for (const Mat &g : sd.stab.elems)
      if (element_order(g) == 5) {
        a = g;
        got_a = true;
        break;
      }
    if (!got_a) fail(Err::SubgroupSearchFailed, "no element of order 5 in spread stabilizer");
    std::vector<Mat> h_gens = sd.o2.gen_mats();
    h_gens.push_back(a);
    Group H = closure_mats(h_gens, 200);
    if (H.order() != 160) fail(Err::SubgroupSearchFailed, "order-160 subgroup not found");

    for (const Mat &b : sd.stab.elems) {
      if (H.contains(b)) continue;
      if (!H.contains(mat_mul(b, b))) continue;
      Mat binv = mat_inv(b);
      bool normalizes = true;
      for (const Mat &hg : h_gens)
        if (!H.contains(mat_mul(mat_mul(binv, hg), b))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<Mat> g_gens = h_gens;
      g_gens.push_back(b);
      Group cand;
      if (!try_closure(g_gens, 321, cand)) continue;
      if (cand.order() != 320) continue;
      if ((long long)orbit_vector(cand.gen_mats(), vec_from_id(3, 4, 1)).size() != 80) continue;
      sd.g320 = std::move(cand);
      return sd;
    }
    fail(Err::SubgroupSearchFailed, "no order-320 transitive subgroup found");
  }();
  return data;
}

ExampleInstance ex_d8q8() {
  const auto &sd = spread_stabilizer_data();
  const auto &j = catalog()["d8q8"];
  // base block: a length-20 orbit of 2-subspaces giving a verified design
  auto so = orbits_on_subspaces(sd.g320, 2);
  for (const auto &orb : so.orbits) {
    if (orb.size() != 20) continue;
    auto B = subspace_point_ids(orb[0]);
    auto fc = flag_transitive_zero_check(sd.g320, B);
    if (!fc.ok || fc.r() != 20) continue;
    Design D = design_from_base_block(sd.g320, B);
    DesignParams P = verify_parameters(D);
    if (!(P == DesignParams{81, 180, 20, 9, 2})) continue;
    Group st = setwise_stabilizer_points(sd.g320, 4, B);
    if (st.order() != 8) continue;
    ExampleInstance inst;
    inst.id = "d8q8";
    inst.p = 3;
    inst.d = 4;
    inst.g0 = sd.g320;
    inst.base_block = B;
    inst.expected = expected_from_json(j);
    return inst;
  }
  fail(Err::SubgroupSearchFailed, "no suitable block orbit for the order-320 group");
}

ExampleInstance ex_gamma_l1() {
  const auto &j = catalog()["gamma_l1"];
  auto K = std::make_shared<Field>(Field::create(j["field"]["p"].get<int>(),
                                                 j["field"]["d"].get<int>(),
                                                 j["field"]["poly"].get<std::vector<int>>()));
  Mat alpha = mult_matrix(*K, K->pow(K->omega(), j["alpha_scalar_exp"].get<long long>()));
  Mat beta = mat_pow(frobenius_matrix(*K), j["beta_frobenius_power"].get<long long>());
  ExampleInstance inst;
  inst.id = "gamma-l1";
  inst.p = K->p();
  inst.d = K->d();
  inst.g0 = closure({{"a", alpha}, {"b", beta}});
  for (const auto &tok : j["block"])
    inst.base_block.push_back(K->id(token_to_fel(*K, tok.get<std::string>())));
  inst.base_block = sorted_unique(inst.base_block);
  inst.expected = expected_from_json(j);
  inst.field = K;
  return inst;
}

ExampleInstance instance_by_id(const std::string &id) {
  if (id.rfind("table1-line", 0) == 0) return table1_instance(std::stoi(id.substr(11)));
  if (id == "hyperbolic") return ex_hyperbolic();
  if (id == "gamma-l1") return ex_gamma_l1();
  if (id == "tens-1") return ex_tensor(1);
  if (id == "tens-2") return ex_tensor(2);
  if (id == "hall") return ex_hall();
  if (id == "d8q8") return ex_d8q8();
  if (id.rfind("3pts-", 0) == 0 || id.rfind("subfield-", 0) == 0) {
    std::vector<std::string> parts;
    std::string rest = id;
    size_t pos;
    while ((pos = rest.find('-')) != std::string::npos) {
      parts.push_back(rest.substr(0, pos));
      rest = rest.substr(pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() != 5) fail(Err::BadInput, "bad instance id '" + id + "'");
    int p = std::stoi(parts[1]), d = std::stoi(parts[2]), n = std::stoi(parts[3]);
    if (parts[0] == "3pts") {
      LinearKind k;
      if (parts[4] == "gl1")
        k = LinearKind::GL1;
      else if (parts[4] == "sl")
        k = LinearKind::SL;
      else if (parts[4] == "sp")
        k = LinearKind::Sp;
      else
        fail(Err::BadInput, "bad linear kind in '" + id + "'");
      return ex_sem1dim_3pts(p, d, n, k);
    }
    return ex_sem1dim_subfield(p, d, n, std::stoi(parts[4]));
  }
  fail(Err::BadInput, "unknown instance id '" + id + "'");
}

std::vector<std::string> instance_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 20; ++i) ids.push_back("table1-line" + std::to_string(i));
  ids.push_back("hyperbolic");
  ids.push_back("gamma-l1");
  ids.push_back("tens-1");
  ids.push_back("tens-2");
  ids.push_back("hall");
  ids.push_back("d8q8");
  for (const auto &row : catalog()["sem1dim"]) ids.push_back(row["id"].get<std::string>());
  return ids;
}

} // namespace flagdes
