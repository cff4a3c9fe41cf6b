#include "nervelab/scat.hpp"

#include <algorithm>

namespace nervelab {

// ---------------------------------------------------------------------------
// FiniteCategoryView

int FiniteCategoryView::arrow_count(int x, int y) const {
  return static_cast<int>(pair_arrows[x][y].size());
}

bool FiniteCategoryView::is_groupoid() const {
  const int n = static_cast<int>(objects.size());
  for (size_t a = 0; a < arrows.size(); ++a) {
    bool invertible = false;
    for (int b : pair_arrows[arrows[a].tgt][arrows[a].src]) {
      if (compose_table[b][static_cast<int>(a)] == identity[arrows[a].src] &&
          compose_table[static_cast<int>(a)][b] == identity[arrows[a].tgt]) {
        invertible = true;
        break;
      }
    }
    if (!invertible) return false;
  }
  (void)n;
  return true;
}

void FiniteCategoryView::validate() const {
  const int n = static_cast<int>(objects.size());
  if (static_cast<int>(identity.size()) != n) throw std::logic_error("identity list size");
  for (int x = 0; x < n; ++x) {
    const auto& id = arrows[identity[x]];
    if (id.src != x || id.tgt != x) throw std::logic_error("identity endpoints");
  }
  for (size_t g = 0; g < arrows.size(); ++g) {
    for (size_t f = 0; f < arrows.size(); ++f) {
      const int gf = compose_table[g][f];
      if (arrows[f].tgt != arrows[g].src) {
        if (gf != -1) throw std::logic_error("composite of non-composable arrows");
        continue;
      }
      if (gf < 0) throw std::logic_error("missing composite");
      if (arrows[gf].src != arrows[f].src || arrows[gf].tgt != arrows[g].tgt)
        throw std::logic_error("composite endpoints");
    }
  }
  for (size_t f = 0; f < arrows.size(); ++f) {
    if (compose_table[f][identity[arrows[f].src]] != static_cast<int>(f) ||
        compose_table[identity[arrows[f].tgt]][f] != static_cast<int>(f))
      throw std::logic_error("unit law");
    for (size_t g = 0; g < arrows.size(); ++g) {
      if (arrows[g].src != arrows[f].tgt) continue;
      for (size_t h = 0; h < arrows.size(); ++h) {
        if (arrows[h].src != arrows[g].tgt) continue;
        if (compose_table[h][compose_table[g][f]] !=
            compose_table[compose_table[h][g]][f])
          throw std::logic_error("associativity");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// pi0

int Pi0Category::arrow_of(const SCat& c, int x, int y, const SimplexRef& vertex) const {
  const int n = c.object_count();
  (void)n;
  const auto& m = class_of_vertex[x * static_cast<int>(cat.objects.size()) + y];
  return m.at(vertex.nd);
}

Pi0Category pi0_category(const SCat& c) {
  const int n = c.object_count();
  Pi0Category out;
  out.cat.objects.resize(n);
  for (int x = 0; x < n; ++x) out.cat.objects[x] = c.object_name(x);
  out.cat.pair_arrows.assign(n, std::vector<std::vector<int>>(n));
  out.class_of_vertex.resize(n * n);

  std::vector<std::vector<Pi0>> comps(n, std::vector<Pi0>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const SSet& h = c.hom(x, y);
      comps[x][y] = pi0(h);
      for (int k = 0; k < comps[x][y].count; ++k) {
        const int id = static_cast<int>(out.cat.arrows.size());
        out.cat.arrows.push_back(
            {x, y, h.label(comps[x][y].representative[k])});
        out.cat.pair_arrows[x][y].push_back(id);
      }
      const auto& verts = h.cells(0);
      for (size_t p = 0; p < verts.size(); ++p)
        out.class_of_vertex[x * n + y][verts[p]] =
            out.cat.pair_arrows[x][y][comps[x][y].component_of_vertex[p]];
    }
  }
  out.cat.identity.resize(n);
  for (int x = 0; x < n; ++x)
    out.cat.identity[x] = out.class_of_vertex[x * n + x].at(c.identity_vertex(x));

  const int total = static_cast<int>(out.cat.arrows.size());
  out.cat.compose_table.assign(total, std::vector<int>(total, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        for (CellId u : c.hom(x, y).cells(0))
          for (CellId v : c.hom(y, z).cells(0)) {
            const auto w =
                c.compose(x, y, z, 0, SimplexRef{v, {}}, SimplexRef{u, {}});
            const int fa = out.class_of_vertex[x * n + y].at(u);
            const int ga = out.class_of_vertex[y * n + z].at(v);
            const int wa = out.class_of_vertex[x * n + z].at(w.nd);
            int& slot = out.cat.compose_table[ga][fa];
            if (slot == -1)
              slot = wa;
            else if (slot != wa)
              throw std::logic_error("pi0 composition not well defined");
          }
      }
  out.cat.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Fibrancy and fibrations

FibrancyReport is_fibrant(const SCat& c, int up_to) {
  FibrancyReport out;
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto rep = is_kan(c.hom(x, y), up_to);
      if (!rep.ok) {
        out.ok = false;
        out.pairs.push_back({x, y, std::move(rep)});
      }
    }
  return out;
}

bool is_weak_groupoid(const SCat& c) { return pi0_category(c).cat.is_groupoid(); }

bool is_fibrant_groupoid(const SCat& c, int up_to) {
  return is_weak_groupoid(c) && is_fibrant(c, up_to).ok;
}

namespace {

// arrows of pi0 invertible in the pi0 category
std::vector<bool> invertible_arrows(const FiniteCategoryView& cat) {
  std::vector<bool> inv(cat.arrows.size(), false);
  for (size_t a = 0; a < cat.arrows.size(); ++a) {
    for (int b : cat.pair_arrows[cat.arrows[a].tgt][cat.arrows[a].src]) {
      if (cat.compose_table[b][static_cast<int>(a)] == cat.identity[cat.arrows[a].src] &&
          cat.compose_table[static_cast<int>(a)][b] == cat.identity[cat.arrows[a].tgt]) {
        inv[a] = true;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

WeakFibrationReport is_weak_fibration(const SFunctor& f, int up_to) {
  WeakFibrationReport out;
  const SCat& c = f.source;
  const SCat& d = f.target;
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto rep = is_kan_fibration(f.hom_map(x, y), up_to);
      if (!rep.ok) {
        out.ok = out.hom_fibrations_ok = false;
        out.failing_pairs.push_back({x, y, std::move(rep)});
      }
    }

  auto pc = pi0_category(c);
  auto pd = pi0_category(d);
  auto inv_c = invertible_arrows(pc.cat);
  auto inv_d = invertible_arrows(pd.cat);
  const int nd = d.object_count();
  for (int x = 0; x < n && out.lifting_ok; ++x) {
    const int fx = f.ob[x];
    for (int z = 0; z < nd && out.lifting_ok; ++z) {
      for (CellId alpha : d.hom(fx, z).cells(0)) {
        const int aclass = pd.class_of_vertex[fx * nd + z].at(alpha);
        if (!inv_d[aclass]) continue;
        // look for an invertible 0-arrow upstairs mapping onto alpha
        bool lifted = false;
        for (int y = 0; y < n && !lifted; ++y) {
          if (f.ob[y] != z) continue;
          for (CellId beta : c.hom(x, y).cells(0)) {
            const int bclass = pc.class_of_vertex[x * n + y].at(beta);
            if (!inv_c[bclass]) continue;
            if (f.eval(x, y, SimplexRef{beta, {}}) == SimplexRef{alpha, {}}) {
              lifted = true;
              break;
            }
          }
        }
        if (!lifted) {
          out.ok = out.lifting_ok = false;
          out.lifting_witness = "equivalence " + d.hom(fx, z).label(alpha) + ": " +
                                d.object_name(fx) + " -> " + d.object_name(z) +
                                " has no invertible lift at " + c.object_name(x);
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strong equivalence certificate

EquivalenceCertificate strong_equivalence_certificate(const SFunctor& f, int up_to) {
  EquivalenceCertificate cert;
  const SCat& c = f.source;
  const SCat& d = f.target;
  auto pc = pi0_category(c);
  auto pd = pi0_category(d);
  const int n = c.object_count();
  const int m = d.object_count();

  // pi0(f) on arrows
  auto arrow_image = [&](int x, int y, int arrow) {
    // pick any vertex in the class
    for (const auto& [v, a] : pc.class_of_vertex[x * n + y]) {
      if (a == arrow)
        return pd.class_of_vertex[f.ob[x] * m + f.ob[y]].at(
            f.eval(x, y, SimplexRef{v, {}}).nd);
    }
    throw std::logic_error("arrow without vertex");
  };

  // essential surjectivity: every object of D is iso in pi0(D) to some f(x)
  auto inv_d = invertible_arrows(pd.cat);
  cert.pi0_essentially_surjective = true;
  for (int z = 0; z < m; ++z) {
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x) {
      if (f.ob[x] == z) hit = true;
      for (int a : pd.cat.pair_arrows[f.ob[x]][z])
        if (inv_d[a]) hit = true;
    }
    if (!hit) {
      cert.pi0_essentially_surjective = false;
      cert.notes.push_back("object " + d.object_name(z) + " not reached");
    }
  }

  // full faithfulness of pi0(f): bijections on arrow classes
  cert.pi0_fully_faithful = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::set<int> images;
      for (int a : pc.cat.pair_arrows[x][y]) images.insert(arrow_image(x, y, a));
      if (images.size() != pc.cat.pair_arrows[x][y].size() ||
          static_cast<int>(images.size()) !=
              pd.cat.arrow_count(f.ob[x], f.ob[y])) {
        cert.pi0_fully_faithful = false;
        cert.notes.push_back("pi0 not bijective on " + c.object_name(x) + " -> " +
                             c.object_name(y));
      }
    }

  // hom-level pi0 bijectivity coincides with the above, stated per pair
  cert.hom_pi0_bijective = cert.pi0_fully_faithful;

  // pi1 comparison at every vertex where both homs are Kan
  cert.hom_pi1_isomorphic = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const SSet& hc = c.hom(x, y);
      const SSet& hd = d.hom(f.ob[x], f.ob[y]);
      if (hc.cell_count(0) == 0) continue;
      auto kc = is_kan(hc, std::min(up_to, hc.cap() - 1));
      auto kd = is_kan(hd, std::min(up_to, hd.cap() - 1));
      if (!kc.ok || !kd.ok || kc.up_to < 2 || kd.up_to < 2) continue;
      for (CellId v : hc.cells(0)) {
        auto gc = fundamental_group(hc, v, &kc);
        auto gd = fundamental_group(hd, f.eval(x, y, SimplexRef{v, {}}).nd, &kd);
        ++cert.pairs_pi1_checked;
        if (!pi1_isomorphism(gc, gd, f.hom_map(x, y))) {
          cert.hom_pi1_isomorphic = false;
          cert.notes.push_back("pi1 not isomorphic on " + c.object_name(x) + " -> " +
                               c.object_name(y));
        }
      }
    }
  return cert;
}

// ---------------------------------------------------------------------------
// Right lifting property in sCat

RlpReport rlp_scat(const SFunctor& j, const SFunctor& f) {
  RlpReport out;
  const SCat& a = j.source;
  const SCat& b = j.target;
  const SCat& c = f.source;
  const SCat& d = f.target;
  const auto& bpres = b.presentation();

  auto tops = enumerate_functors(a, c);
  for (const auto& u : tops) {
    // bottom maps v: B -> D with v . j = f . u
    FunctorSearchOptions vopt;
    for (int x = 0; x < a.object_count(); ++x) vopt.pinned_objects[j.ob[x]] = f.ob[u.ob[x]];
    // pin images of generators in the image of j
    std::map<int, SimplexRef> vpins;
    const auto& apres = a.presentation();
    const auto fu = compose_functors(u, f);
    for (size_t gi = 0; gi < apres.gens.size(); ++gi) {
      const auto& gen = apres.gens[gi];
      // j(gen) decomposes in B; only single-generator images pin directly
      auto fs = bpres.decompose(b, j.ob[gen.src], j.ob[gen.tgt], j.gen_image[gi]);
      if (fs.size() == 1 && fs[0].op.downs.empty() && fs[0].op.ups.empty())
        vpins[fs[0].gen] = fu.gen_image[gi];
    }
    vopt.pinned_gens = vpins;
    auto bottoms = enumerate_functors(b, d, vopt);
    for (const auto& v : bottoms) {
      if (!functor_equal(compose_functors(j, v), fu)) continue;
      ++out.squares_checked;
      // diagonal w: B -> C with w . j = u and f . w = v
      FunctorSearchOptions wopt;
      for (int x = 0; x < a.object_count(); ++x) wopt.pinned_objects[j.ob[x]] = u.ob[x];
      std::map<int, SimplexRef> wpins;
      for (size_t gi = 0; gi < apres.gens.size(); ++gi) {
        const auto& gen = apres.gens[gi];
        auto fs = bpres.decompose(b, j.ob[gen.src], j.ob[gen.tgt], j.gen_image[gi]);
        if (fs.size() == 1 && fs[0].op.downs.empty() && fs[0].op.ups.empty())
          wpins[fs[0].gen] = u.gen_image[gi];
      }
      wopt.pinned_gens = wpins;
      bool found = false;
      for (const auto& w : enumerate_functors(b, c, wopt)) {
        if (functor_equal(compose_functors(j, w), u) &&
            functor_equal(compose_functors(w, f), v)) {
          found = true;
          break;
        }
      }
      if (!found) {
        out.ok = false;
        if (!out.witness_top) {
          out.witness_top = u;
          out.witness_bottom = v;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builders

SCat scat_from_category(const FiniteCategoryView& cat, int cap,
                        const std::string& name) {
  cat.validate();
  auto shared = std::make_shared<FiniteCategoryView>(cat);
  SCat::Data d;
  d.name = name;
  d.cap = cap;
  d.objects = cat.objects;
  d.make_hom = [shared](const SCat& c, int x, int y) -> SSet {
    SSetBuilder b(c.cap());
    for (int a : shared->pair_arrows[x][y]) b.add_cell(0, {}, shared->arrows[a].name);
    return b.build();
  };
  d.compose_fn = [shared](const SCat& c, int x, int y, int z, int k,
                          const SimplexRef& g, const SimplexRef& f) -> SimplexRef {
    const int fa = shared->pair_arrows[x][y].at(f.nd);
    const int ga = shared->pair_arrows[y][z].at(g.nd);
    const int comp = shared->compose_table[ga][fa];
    const auto& list = shared->pair_arrows[x][z];
    const auto pos = std::find(list.begin(), list.end(), comp) - list.begin();
    SimplexRef r{static_cast<CellId>(pos), {}};
    return c.hom(x, z).under_word(r, DegWord{[&] {
                                    std::vector<int> w(k);
                                    for (int t = 0; t < k; ++t) w[t] = t;
                                    return w;
                                  }()});
  };
  d.identity_locator = [shared](const SCat& c, int x) -> CellId {
    (void)c;
    const auto& list = shared->pair_arrows[x][x];
    return static_cast<CellId>(
        std::find(list.begin(), list.end(), shared->identity[x]) - list.begin());
  };
  return SCat::create(std::move(d));
}

FiniteCategoryView group_category(const GroupTable& g) {
  FiniteCategoryView out;
  out.objects = {"*"};
  out.pair_arrows.assign(1, std::vector<std::vector<int>>(1));
  for (int a = 0; a < g.order; ++a) {
    out.arrows.push_back({0, 0, "g" + std::to_string(a)});
    out.pair_arrows[0][0].push_back(a);
  }
  out.identity = {g.unit};
  out.compose_table.assign(g.order, std::vector<int>(g.order, -1));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) out.compose_table[a][b] = g.mult[a][b];
  return out;
}

FiniteCategoryView poset_category(const Poset& p) {
  p.validate();
  FiniteCategoryView out;
  out.objects = p.names;
  const int n = p.size();
  out.pair_arrows.assign(n, std::vector<std::vector<int>>(n));
  std::vector<std::vector<int>> arrow_id(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq[x][y]) {
        arrow_id[x][y] = static_cast<int>(out.arrows.size());
        out.arrows.push_back({x, y, p.names[x] + "<=" + p.names[y]});
        out.pair_arrows[x][y].push_back(arrow_id[x][y]);
      }
  out.identity.resize(n);
  for (int x = 0; x < n; ++x) out.identity[x] = arrow_id[x][x];
  out.compose_table.assign(out.arrows.size(), std::vector<int>(out.arrows.size(), -1));
  for (size_t f = 0; f < out.arrows.size(); ++f)
    for (size_t g = 0; g < out.arrows.size(); ++g)
      if (out.arrows[f].tgt == out.arrows[g].src)
        out.compose_table[g][f] = arrow_id[out.arrows[f].src][out.arrows[g].tgt];
  return out;
}

SCat one_object_group_scat(const GroupTable& g, int cap) {
  return scat_from_category(group_category(g), cap, "B(" + g.name + ")");
}

SCat contractible_groupoid(int objects, int cap) {
  FiniteCategoryView cat;
  for (int x = 0; x < objects; ++x) cat.objects.push_back("e" + std::to_string(x));
  cat.pair_arrows.assign(objects, std::vector<std::vector<int>>(objects));
  std::vector<std::vector<int>> arrow_id(objects, std::vector<int>(objects));
  for (int x = 0; x < objects; ++x)
    for (int y = 0; y < objects; ++y) {
      arrow_id[x][y] = static_cast<int>(cat.arrows.size());
      cat.arrows.push_back({x, y, "u" + std::to_string(x) + std::to_string(y)});
      cat.pair_arrows[x][y].push_back(arrow_id[x][y]);
    }
  cat.identity.resize(objects);
  for (int x = 0; x < objects; ++x) cat.identity[x] = arrow_id[x][x];
  cat.compose_table.assign(cat.arrows.size(), std::vector<int>(cat.arrows.size(), -1));
  for (size_t f = 0; f < cat.arrows.size(); ++f)
    for (size_t g = 0; g < cat.arrows.size(); ++g)
      if (cat.arrows[f].tgt == cat.arrows[g].src)
        cat.compose_table[g][f] = arrow_id[cat.arrows[f].src][cat.arrows[g].tgt];
  return scat_from_category(cat, cap, "E" + std::to_string(objects));
}

SCat terminal_scat(int cap) {
  GroupTable trivial = cyclic_group(1);
  return scat_from_category(group_category(trivial), cap, "pt");
}

SCat abelian_nerve_scat(const GroupTable& g, int cap) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mult[a][b] != g.mult[b][a])
        throw std::invalid_argument("levelwise nerve multiplication needs an abelian group");
  auto nerve = std::make_shared<GroupNerve>(group_nerve(g, cap));
  // reverse lookup: ref -> tuple
  auto tuple_of = std::make_shared<std::unordered_map<std::string, std::vector<int>>>();
  {
    std::function<void(int, std::vector<int>&)> rec = [&](int n, std::vector<int>& cur) {
      if (n == 0) {
        long long idx = 0;
        for (int v : cur) idx = idx * g.order + v;
        (*tuple_of)[ref_key(nerve->ref_of[cur.size()][idx])] = cur;
        return;
      }
      for (int v = 0; v < g.order; ++v) {
        cur.push_back(v);
        rec(n - 1, cur);
        cur.pop_back();
      }
    };
    for (int n = 0; n <= cap; ++n) {
      std::vector<int> cur;
      rec(n, cur);
    }
  }
  SCat::Data d;
  d.name = "B.(" + g.name + ")";
  d.cap = cap;
  d.objects = {"*"};
  d.make_hom = [nerve](const SCat&, int, int) -> SSet { return nerve->nerve; };
  const GroupTable gt = g;
  d.compose_fn = [nerve, tuple_of, gt](const SCat&, int, int, int, int k,
                                       const SimplexRef& a,
                                       const SimplexRef& b) -> SimplexRef {
    auto ta = tuple_of->at(ref_key(a));
    auto tb = tuple_of->at(ref_key(b));
    // tuples recovered by key always have length k
    std::vector<int> tc(k);
    for (int t = 0; t < k; ++t) tc[t] = gt.mult[ta[t]][tb[t]];
    return nerve->ref_of_tuple(tc);
  };
  d.identity_locator = [nerve](const SCat&, int) -> CellId {
    return nerve->ref_of[0][0].nd;
  };
  return SCat::create(std::move(d));
}

SCat product_scat(const SCat& a, const SCat& b) {
  const int cap = std::min(a.cap(), b.cap());
  const int na = a.object_count(), nb = b.object_count();
  auto pa = std::make_shared<SCat>(a);
  auto pb = std::make_shared<SCat>(b);
  auto prods = std::make_shared<std::map<std::pair<int, int>, ProductResult>>();
  SCat::Data d;
  d.name = a.name() + "x" + b.name();
  d.cap = cap;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      d.objects.push_back(a.object_name(x) + "," + b.object_name(y));
  const int nbv = nb;
  auto get_prod = [pa, pb, prods, cap, nbv](int x, int y) -> ProductResult& {
    auto key = std::make_pair(x, y);
    auto it = prods->find(key);
    if (it == prods->end()) {
      it = prods
               ->emplace(key, product(pa->hom(x / nbv, y / nbv),
                                      pb->hom(x % nbv, y % nbv), cap))
               .first;
    }
    return it->second;
  };
  d.make_hom = [get_prod](const SCat&, int x, int y) -> SSet {
    return get_prod(x, y).sset;
  };
  d.compose_fn = [pa, pb, get_prod, nbv](const SCat& c, int x, int y, int z, int k,
                                         const SimplexRef& g,
                                         const SimplexRef& f) -> SimplexRef {
    auto split = [&](int u, int v, const SimplexRef& r) {
      auto& pr = get_prod(u, v);
      const int dim = pr.sset.ref_dim(r);
      const int m = dim - r.word.size();
      // components of the nondegenerate base
      const auto& cells = pr.sset.cells(m);
      const auto pos = std::find(cells.begin(), cells.end(), r.nd) - cells.begin();
      auto comps = pr.components_of[m][pos];
      for (int i : r.word.idx) {
        comps[0] = pr.factors[0].degeneracy(comps[0], i);
        comps[1] = pr.factors[1].degeneracy(comps[1], i);
      }
      return comps;
    };
    auto cf = split(x, y, f);
    auto cg = split(y, z, g);
    auto ca = pa->compose(x / nbv, y / nbv, z / nbv, k, cg[0], cf[0]);
    auto cb = pb->compose(x % nbv, y % nbv, z % nbv, k, cg[1], cf[1]);
    (void)c;
    return get_prod(x, z).locate(k, {ca, cb});
  };
  d.identity_locator = [pa, pb, get_prod, nbv](const SCat&, int x) -> CellId {
    auto& pr = get_prod(x, x);
    return pr
        .locate(0, {SimplexRef{pa->identity_vertex(x / nbv), {}},
                    SimplexRef{pb->identity_vertex(x % nbv), {}}})
        .nd;
  };
  return SCat::create(std::move(d));
}

SCat arrow_hom_scat(const SSet& hom, int cap, const std::string& name) {
  if (hom.cap() < cap) throw std::invalid_argument("cap too small");
  auto hs = std::make_shared<SSet>(hom);
  SCat::Data d;
  d.name = name;
  d.cap = cap;
  d.objects = {"x", "y"};
  d.make_hom = [hs](const SCat& c, int x, int y) -> SSet {
    if (x == y) {
      SSetBuilder b(c.cap());
      b.add_cell(0, {}, "id");
      return b.build();
    }
    if (x == 0 && y == 1) return *hs;
    SSetBuilder b(c.cap());
    return b.build();  // empty
  };
  d.compose_fn = [](const SCat&, int x, int y, int z, int k, const SimplexRef& g,
                    const SimplexRef& f) -> SimplexRef {
    (void)k;
    if (x == y) return g;   // f is an identity
    if (y == z) return f;   // g is an identity
    throw std::logic_error("no composable pairs");
  };
  d.identity_locator = [](const SCat&, int) -> CellId { return 0; };
  return SCat::create(std::move(d));
}

}  // namespace nervelab
