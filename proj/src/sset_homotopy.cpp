#include "nervelab/sset.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace nervelab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// keys of the faces d_j for j != i, in ascending j
std::string horn_faces_key(const SSet& x, const SimplexRef& r, int n, int i) {
  std::string k;
  for (int j = 0; j <= n; ++j) {
    if (j == i) continue;
    k += ref_key(x.face(r, j));
    k += '|';
  }
  return k;
}

std::string required_key(const std::vector<SimplexRef>& t, int n, int i) {
  std::string k;
  for (int j = 0; j <= n; ++j) {
    if (j == i) continue;
    k += ref_key(t[j]);
    k += '|';
  }
  return k;
}

}  // namespace

KanReport is_kan(const SSet& x, const KanOptions& opt) {
  if (opt.up_to + 1 > x.cap()) throw std::invalid_argument("cap too small");
  KanReport rep;
  rep.up_to = opt.up_to;
  rep.inner_only = opt.inner_only;
  for (int n = 1; n <= opt.up_to; ++n) {
    const int lo = opt.inner_only ? 1 : 0;
    const int hi = opt.inner_only ? n - 1 : n;
    for (int i = lo; i <= hi; ++i) {
      if (opt.single && *opt.single != std::make_pair(n, i)) continue;
      auto hs = horn(n, i, n);
      const SSet& h = hs.extracted.complex;
      // top cells of the horn: parent faces j != i
      std::vector<CellId> top(n + 1, -1);
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        std::vector<int> verts;
        for (int v = 0; v <= n; ++v)
          if (v != j) verts.push_back(v);
        top[j] = hs.extracted.new_of_old[simplex_cell(hs.ambient, verts)];
      }
      // fillable horn signatures
      std::set<std::string> fillable;
      for (const auto& r : x.level(n)) fillable.insert(horn_faces_key(x, r, n, i));

      auto horns = enumerate_maps(h, x);
      rep.horns_checked += static_cast<long long>(horns.size());
      bool recorded = false;
      for (const auto& hm : horns) {
        std::vector<SimplexRef> t(n + 1);
        for (int j = 0; j <= n; ++j)
          if (j != i) t[j] = hm.assign[top[j]];
        if (!fillable.count(required_key(t, n, i))) {
          rep.ok = false;
          if (!recorded) {
            HornWitness w;
            w.n = n;
            w.i = i;
            for (CellId c = 0; c < h.total_cells(); ++c)
              w.horn_assignment.push_back(h.label(c) + " -> " + x.ref_repr(hm.assign[c]));
            rep.failures.push_back(std::move(w));
            recorded = true;
          }
        }
      }
    }
  }
  return rep;
}

KanReport is_kan(const SSet& x, int up_to) {
  KanOptions opt;
  opt.up_to = up_to;
  return is_kan(x, opt);
}

KanReport is_kan_fibration(const SimplicialMap& p, const KanOptions& opt) {
  const SSet& x = p.source;
  const SSet& y = p.target;
  if (opt.up_to + 1 > x.cap() || opt.up_to + 1 > y.cap())
    throw std::invalid_argument("cap too small");
  KanReport rep;
  rep.up_to = opt.up_to;
  rep.inner_only = opt.inner_only;
  for (int n = 1; n <= opt.up_to; ++n) {
    const int lo = opt.inner_only ? 1 : 0;
    const int hi = opt.inner_only ? n - 1 : n;
    for (int i = lo; i <= hi; ++i) {
      if (opt.single && *opt.single != std::make_pair(n, i)) continue;
      auto hs = horn(n, i, n);
      const SSet& h = hs.extracted.complex;
      std::vector<CellId> top(n + 1, -1);
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        std::vector<int> verts;
        for (int v = 0; v <= n; ++v)
          if (v != j) verts.push_back(v);
        top[j] = hs.extracted.new_of_old[simplex_cell(hs.ambient, verts)];
      }
      // group the n-simplices upstairs by their horn signature
      std::unordered_map<std::string, std::vector<SimplexRef>> lifts;
      for (const auto& r : x.level(n)) lifts[horn_faces_key(x, r, n, i)].push_back(r);
      std::unordered_map<std::string, std::vector<SimplexRef>> bases;
      for (const auto& r : y.level(n)) bases[horn_faces_key(y, r, n, i)].push_back(r);

      auto horns = enumerate_maps(h, x);
      bool recorded = false;
      for (const auto& hm : horns) {
        std::vector<SimplexRef> t(n + 1), u(n + 1);
        for (int j = 0; j <= n; ++j) {
          if (j == i) continue;
          t[j] = hm.assign[top[j]];
          u[j] = p.apply(t[j]);
        }
        auto bit = bases.find(required_key(u, n, i));
        if (bit == bases.end()) continue;  // no commuting square over this horn
        auto lit = lifts.find(required_key(t, n, i));
        for (const auto& base : bit->second) {
          rep.horns_checked += 1;
          bool found = false;
          if (lit != lifts.end()) {
            for (const auto& cand : lit->second) {
              if (p.apply(cand) == base) {
                found = true;
                break;
              }
            }
          }
          if (!found) {
            rep.ok = false;
            if (!recorded) {
              HornWitness w;
              w.n = n;
              w.i = i;
              for (CellId c = 0; c < h.total_cells(); ++c)
                w.horn_assignment.push_back(h.label(c) + " -> " +
                                            x.ref_repr(hm.assign[c]));
              w.base_simplex = y.ref_repr(base);
              rep.failures.push_back(std::move(w));
              recorded = true;
            }
          }
        }
      }
    }
  }
  return rep;
}

KanReport is_kan_fibration(const SimplicialMap& p, int up_to) {
  KanOptions opt;
  opt.up_to = up_to;
  return is_kan_fibration(p, opt);
}

// ---------------------------------------------------------------------------
// pi0

int Pi0::component_of(const SSet& x, CellId vertex) const {
  const auto& verts = x.cells(0);
  const auto it = std::find(verts.begin(), verts.end(), vertex);
  if (it == verts.end()) throw std::invalid_argument("not a vertex");
  return component_of_vertex[it - verts.begin()];
}

Pi0 pi0(const SSet& x) {
  const auto& verts = x.cells(0);
  std::unordered_map<CellId, int> pos;
  for (size_t k = 0; k < verts.size(); ++k) pos[verts[k]] = static_cast<int>(k);
  UnionFind uf(static_cast<int>(verts.size()));
  if (x.cap() >= 1) {
    for (CellId e : x.cells(1)) {
      const auto& fs = x.faces_of(e);
      uf.unite(pos.at(fs[0].nd), pos.at(fs[1].nd));
    }
  }
  Pi0 out;
  std::map<int, int> root_to_comp;
  out.component_of_vertex.resize(verts.size());
  for (size_t k = 0; k < verts.size(); ++k) {
    const int r = uf.find(static_cast<int>(k));
    auto [it, fresh] = root_to_comp.emplace(r, out.count);
    if (fresh) {
      ++out.count;
      out.representative.push_back(verts[r]);
    }
    out.component_of_vertex[k] = it->second;
    if (verts[k] < out.representative[it->second]) out.representative[it->second] = verts[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fundamental group (table-based, Kan inputs)

int FundamentalGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (mult[a][b] == unit && mult[b][a] == unit) return b;
  throw std::logic_error("no inverse");
}

int FundamentalGroup::element_order(int a) const {
  int cur = a, k = 1;
  while (cur != unit) {
    cur = mult[cur][a];
    ++k;
    if (k > order + 1) throw std::logic_error("order computation diverged");
  }
  return k;
}

FundamentalGroup fundamental_group(const SSet& x, CellId basepoint,
                                   const KanReport* cert) {
  if (x.dim_of(basepoint) != 0) throw std::invalid_argument("basepoint must be a vertex");
  if (cert) {
    if (!cert->ok || cert->up_to < 2)
      throw std::invalid_argument("pi1 requires a Kan certificate up to dimension 2");
  } else {
    auto rep = is_kan(x, 2);
    if (!rep.ok)
      throw std::invalid_argument(
          "pi1 requires a Kan input; pass a Kan certificate or use a "
          "group-nerve model");
  }
  const SimplexRef base{basepoint, {}};
  const SimplexRef s0v{basepoint, DegWord{{0}}};

  FundamentalGroup g;
  std::unordered_map<std::string, int> loop_index;
  for (const auto& r : x.level(1)) {
    if (x.face(r, 0) == base && x.face(r, 1) == base) {
      loop_index[ref_key(r)] = static_cast<int>(g.loops.size());
      g.loops.push_back(r);
    }
  }
  UnionFind uf(static_cast<int>(g.loops.size()));
  auto as_loop = [&](const SimplexRef& r) -> int {
    auto it = loop_index.find(ref_key(r));
    return it == loop_index.end() ? -1 : it->second;
  };
  std::vector<std::array<int, 3>> triangles;  // (loop d2, loop d0, loop d1)
  for (const auto& s : x.level(2)) {
    const auto d0 = x.face(s, 0), d1 = x.face(s, 1), d2 = x.face(s, 2);
    const int l0 = as_loop(d0), l1 = as_loop(d1), l2 = as_loop(d2);
    if (d0 == s0v && l2 >= 0 && l1 >= 0) uf.unite(l2, l1);
    if (d2 == s0v && l0 >= 0 && l1 >= 0) uf.unite(l0, l1);
    if (l0 >= 0 && l1 >= 0 && l2 >= 0) triangles.push_back({l2, l0, l1});
  }
  g.class_of_loop.resize(g.loops.size());
  std::map<int, int> root_to_class;
  for (size_t k = 0; k < g.loops.size(); ++k) {
    const int r = uf.find(static_cast<int>(k));
    auto [it, fresh] = root_to_class.emplace(r, g.order);
    if (fresh) {
      ++g.order;
      g.loop_rep.push_back(g.loops[k]);
    }
    g.class_of_loop[k] = it->second;
  }
  g.unit = g.class_of_loop[as_loop(s0v)];
  g.mult.assign(g.order, std::vector<int>(g.order, -1));
  for (const auto& t : triangles) {
    const int a = g.class_of_loop[t[0]];
    const int b = g.class_of_loop[t[1]];
    const int c = g.class_of_loop[t[2]];
    if (g.mult[a][b] == -1)
      g.mult[a][b] = c;
    else if (g.mult[a][b] != c)
      throw std::logic_error("pi1 product ill-defined; input is not Kan");
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mult[a][b] == -1)
        throw std::logic_error("pi1 product missing a filler; input is not Kan");
  // group axioms
  for (int a = 0; a < g.order; ++a) {
    if (g.mult[g.unit][a] != a || g.mult[a][g.unit] != a)
      throw std::logic_error("pi1 unit law failed");
    g.inverse(a);
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
          throw std::logic_error("pi1 associativity failed");
  }
  return g;
}

EdgeLoopPresentation edge_loop_presentation(const SSet& x) {
  EdgeLoopPresentation out;
  if (x.cap() >= 1) out.generators = x.cells(1);
  if (x.cap() >= 2) {
    for (CellId s : x.cells(2)) {
      const auto& fs = x.faces_of(s);
      out.relations.push_back({fs[0], fs[1], fs[2]});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite group tables

int GroupTable::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (mult[a][b] == unit && mult[b][a] == unit) return b;
  throw std::logic_error("no inverse in group table");
}

void GroupTable::validate() const {
  for (int a = 0; a < order; ++a) {
    if (mult[unit][a] != a || mult[a][unit] != a) throw std::logic_error("unit law");
    inverse(a);
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw std::logic_error("associativity");
  }
}

GroupTable cyclic_group(int n) {
  GroupTable g;
  g.name = "Z/" + std::to_string(n);
  g.order = n;
  g.unit = 0;
  g.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  return g;
}

GroupTable symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  g.name = "S3";
  g.order = 6;
  g.unit = 0;
  g.mult.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int t = 0; t < 3; ++t) c[t] = perms[a][perms[b][t]];
      g.mult[a][b] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.unit = a.unit * b.order + b.unit;
  g.mult.assign(g.order, std::vector<int>(g.order));
  for (int p = 0; p < g.order; ++p)
    for (int q = 0; q < g.order; ++q)
      g.mult[p][q] = a.mult[p / b.order][q / b.order] * b.order +
                     b.mult[p % b.order][q % b.order];
  return g;
}

namespace {
std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order; ++a) {
    int cur = a, k = 1;
    while (cur != g.unit) {
      cur = g.mult[cur][a];
      ++k;
    }
    out.push_back(k);
  }
  return out;
}
}  // namespace

bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order != b.order) return false;
  auto oa = element_orders(a), ob = element_orders(b);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> img(a.order, -1);
  std::vector<bool> used(b.order, false);
  std::function<bool(int)> rec = [&](int k) {
    if (k == a.order) return true;
    for (int t = 0; t < b.order; ++t) {
      if (used[t] || oa[k] != ob[t]) continue;
      img[k] = t;
      used[t] = true;
      bool ok = true;
      for (int j = 0; j <= k && ok; ++j) {
        if (img[a.mult[k][j]] != -1 && img[a.mult[k][j]] != b.mult[t][img[j]]) ok = false;
        if (ok && img[a.mult[j][k]] != -1 && img[a.mult[j][k]] != b.mult[img[j]][t])
          ok = false;
      }
      if (ok && rec(k + 1)) return true;
      img[k] = -1;
      used[t] = false;
    }
    return false;
  };
  return rec(0);
}

GroupTable group_of(const FundamentalGroup& g, const std::string& name) {
  GroupTable out;
  out.name = name;
  out.order = g.order;
  out.unit = g.unit;
  out.mult = g.mult;
  out.validate();
  return out;
}

namespace {

std::vector<int> tuple_digits(int order, int n, long long e) {
  std::vector<int> d(n);
  for (int k = n - 1; k >= 0; --k) {
    d[k] = static_cast<int>(e % order);
    e /= order;
  }
  return d;
}

long long tuple_index(int order, const std::vector<int>& d) {
  long long e = 0;
  for (int v : d) e = e * order + v;
  return e;
}

}  // namespace

SimplexRef GroupNerve::ref_of_tuple(const std::vector<int>& tuple) const {
  const int n = static_cast<int>(tuple.size());
  return ref_of.at(n).at(tuple_index(group.order, tuple));
}

GroupNerve group_nerve(const GroupTable& g, int cap) {
  g.validate();
  const GroupTable gt = g;
  const int ord = g.order;
  LevelwiseInput in;
  in.cap = cap;
  {
    long long t = 1;
    for (int n = 0; n <= cap; ++n) {
      in.sizes.push_back(t);
      t *= ord;
    }
  }
  in.face = [ord, gt](int n, long long e, int i) {
    auto d = tuple_digits(ord, n, e);
    std::vector<int> out;
    if (i == 0) {
      out.assign(d.begin() + 1, d.end());
    } else if (i == n) {
      out.assign(d.begin(), d.end() - 1);
    } else {
      out = d;
      // consecutive arrows compose, later arrow first
      out[i - 1] = gt.mult[d[i]][d[i - 1]];
      out.erase(out.begin() + i);
    }
    return tuple_index(ord, out);
  };
  in.degen = [ord, gt](int n, long long e, int i) {
    auto d = tuple_digits(ord, n, e);
    d.insert(d.begin() + i, gt.unit);
    return tuple_index(ord, d);
  };
  in.label = [ord](int n, long long e) {
    if (n == 0) return std::string("*");
    auto d = tuple_digits(ord, n, e);
    std::string s = "[";
    for (size_t t = 0; t < d.size(); ++t) {
      if (t) s += ',';
      s += "g" + std::to_string(d[t]);
    }
    s += ']';
    return s;
  };
  auto lw = build_levelwise(in);
  GroupNerve out;
  out.group = g;
  out.nerve = lw.sset;
  out.ref_of = std::move(lw.ref_of);
  return out;
}

SSet classifying_nerve(const GroupTable& g, int cap) { return group_nerve(g, cap).nerve; }

SimplicialMap nerve_map_of_hom(const GroupNerve& a, const GroupNerve& b,
                               const std::vector<int>& hom) {
  if (static_cast<int>(hom.size()) != a.group.order)
    throw std::invalid_argument("homomorphism table has the wrong size");
  if (hom[a.group.unit] != b.group.unit)
    throw std::invalid_argument("map does not preserve the unit");
  for (int p = 0; p < a.group.order; ++p)
    for (int q = 0; q < a.group.order; ++q)
      if (hom[a.group.mult[p][q]] != b.group.mult[hom[p]][hom[q]])
        throw std::invalid_argument("not a homomorphism");
  const int cap = std::min(a.nerve.cap(), b.nerve.cap());
  SimplicialMap f{a.nerve, b.nerve, {}};
  f.assign.resize(a.nerve.total_cells());
  for (int n = 0; n <= cap; ++n) {
    const long long total = static_cast<long long>(a.ref_of[n].size());
    for (long long e = 0; e < total; ++e) {
      const auto& r = a.ref_of[n][e];
      if (!r.word.empty()) continue;  // only nondegenerate cells carry data
      auto d = tuple_digits(a.group.order, n, e);
      for (int& v : d) v = hom[v];
      f.assign[r.nd] = b.ref_of_tuple(d);
    }
  }
  f.require_simplicial();
  return f;
}

std::vector<int> pi1_induced(const FundamentalGroup& gx, const FundamentalGroup& gy,
                             const SimplicialMap& f) {
  std::unordered_map<std::string, int> loop_class_y;
  for (size_t k = 0; k < gy.loops.size(); ++k)
    loop_class_y[ref_key(gy.loops[k])] = gy.class_of_loop[k];
  std::vector<int> img(gx.order, -1);
  for (size_t k = 0; k < gx.loops.size(); ++k) {
    const auto image = f.apply(gx.loops[k]);
    auto it = loop_class_y.find(ref_key(image));
    if (it == loop_class_y.end())
      throw std::invalid_argument("image is not a loop at the target basepoint");
    const int cls = gx.class_of_loop[k];
    if (img[cls] == -1)
      img[cls] = it->second;
    else if (img[cls] != it->second)
      throw std::logic_error("induced pi1 map ill-defined");
  }
  for (int a = 0; a < gx.order; ++a)
    for (int b = 0; b < gx.order; ++b)
      if (img[gx.mult[a][b]] != gy.mult[img[a]][img[b]])
        throw std::logic_error("induced pi1 map is not a homomorphism");
  return img;
}

bool pi1_isomorphism(const FundamentalGroup& gx, const FundamentalGroup& gy,
                     const SimplicialMap& f) {
  auto img = pi1_induced(gx, gy, f);
  if (gx.order != gy.order) return false;
  std::vector<bool> hit(gy.order, false);
  for (int v : img) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace nervelab
