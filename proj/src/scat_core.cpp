#include "nervelab/scat.hpp"

#include <algorithm>

namespace nervelab {

std::string word_key(const FreeWord& w) {
  std::string s;
  for (const auto& a : w) {
    s += std::to_string(a.edge);
    s += ':';
    s += ref_key(a.cell);
    s += ';';
  }
  return s;
}

// ---------------------------------------------------------------------------
// SCat basics

SCat SCat::create(Data d) {
  const int n = static_cast<int>(d.objects.size());
  d.homs.assign(n * n, std::nullopt);
  d.identity_cache.assign(n, -1);
  d.free_tables.assign(n * n, std::nullopt);
  return SCat(std::make_shared<Data>(std::move(d)));
}

const SSet& SCat::hom(int x, int y) const {
  if (x < 0 || y < 0 || x >= object_count() || y >= object_count())
    throw std::out_of_range("object index");
  auto& slot = d_->homs[x * object_count() + y];
  if (!slot) slot = d_->make_hom(*this, x, y);
  return *slot;
}

SimplexRef SCat::compose(int x, int y, int z, int k, const SimplexRef& g,
                         const SimplexRef& f) const {
  return d_->compose_fn(*this, x, y, z, k, g, f);
}

CellId SCat::identity_vertex(int x) const {
  if (d_->identity_cache[x] < 0) d_->identity_cache[x] = d_->identity_locator(*this, x);
  return d_->identity_cache[x];
}

SimplexRef SCat::identity_ref(int x, int k) const {
  std::vector<int> w(k);
  for (int t = 0; t < k; ++t) w[t] = t;
  return SimplexRef{identity_vertex(x), DegWord{w}};
}

const Presentation& SCat::presentation() const {
  if (!d_->pres) throw std::logic_error("category has no free presentation");
  return *d_->pres;
}

// ---------------------------------------------------------------------------
// Free categories

namespace {

bool atom_is_unit(const SCat& c, const FreeAtom& a) {
  const auto& e = c.edges()[a.edge];
  return e.unit_vertex && a.cell.nd == *e.unit_vertex;
}

// composable edge paths x -> y with at most `bound` edges, by length then
// lexicographic in edge indices
std::vector<std::vector<int>> edge_paths(const std::vector<FreeEdge>& edges, int x,
                                         int y, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int at) {
    if (at == y) out.push_back(cur);
    if (static_cast<int>(cur.size()) == bound) return;
    for (size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].src != at) continue;
      cur.push_back(static_cast<int>(e));
      rec(edges[e].tgt);
      cur.pop_back();
    }
  };
  rec(x);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

SCat::Data::FreeHomTable build_free_hom_table(const SCat& c, int x, int y) {
  const auto& edges = c.edges();
  const int cap = c.cap();
  SCat::Data::FreeHomTable t;
  t.words.resize(cap + 1);
  t.index.resize(cap + 1);
  auto paths = edge_paths(edges, x, y, c.data()->word_bound);
  for (int k = 0; k <= cap; ++k) {
    for (const auto& path : paths) {
      if (path.empty() && x != y) continue;
      // tuples of non-unit simplices of the edge shapes, lexicographic
      std::vector<std::vector<SimplexRef>> levels;
      for (int e : path) levels.push_back(edges[e].shape.level(k));
      FreeWord cur(path.size());
      std::function<void(size_t)> rec = [&](size_t p) {
        if (p == path.size()) {
          t.index[k][word_key(cur)] = static_cast<long long>(t.words[k].size());
          t.words[k].push_back(cur);
          return;
        }
        for (const auto& r : levels[p]) {
          FreeAtom a{path[p], r};
          if (atom_is_unit(c, a)) continue;
          cur[p] = a;
          rec(p + 1);
        }
      };
      rec(0);
    }
  }
  return t;
}

FreeWord drop_units(const SCat& c, FreeWord w) {
  FreeWord out;
  for (auto& a : w)
    if (!atom_is_unit(c, a)) out.push_back(a);
  return out;
}

std::string atom_label(const SCat& c, const FreeAtom& a) {
  const auto& e = c.edges()[a.edge];
  std::string s = e.name;
  const std::string rep = e.shape.ref_repr(a.cell);
  s += '{';
  s += rep;
  s += '}';
  return s;
}

}  // namespace

FreeWord word_face(const SCat& c, int /*x*/, int /*y*/, const FreeWord& w, int i) {
  FreeWord out;
  out.reserve(w.size());
  for (const auto& a : w) {
    FreeAtom b{a.edge, c.edges()[a.edge].shape.face(a.cell, i)};
    if (!atom_is_unit(c, b)) out.push_back(b);
  }
  return out;
}

FreeWord word_degeneracy(const SCat& c, const FreeWord& w, int i) {
  FreeWord out;
  out.reserve(w.size());
  for (const auto& a : w)
    out.push_back(FreeAtom{a.edge, c.edges()[a.edge].shape.degeneracy(a.cell, i)});
  return out;
}

int word_dim(const SCat& c, const FreeWord& w) {
  if (w.empty()) throw std::invalid_argument("empty word has no intrinsic degree");
  return c.edges()[w[0].edge].shape.ref_dim(w[0].cell);
}

const std::vector<FreeWord>& SCat::level_words(int x, int y, int k) const {
  if (!is_free()) throw std::logic_error("not a free category");
  hom(x, y);  // forces the table
  return d_->free_tables[x * object_count() + y]->words.at(k);
}

SimplexRef SCat::ref_of_word(int x, int y, int k, const FreeWord& w) const {
  if (!is_free()) throw std::logic_error("not a free category");
  hom(x, y);
  const auto& t = *d_->free_tables[x * object_count() + y];
  auto it = t.index.at(k).find(word_key(w));
  if (it == t.index.at(k).end()) throw std::invalid_argument("word not in hom table");
  return t.refs.at(k).at(it->second);
}

FreeWord SCat::word_of_ref(int x, int y, const SimplexRef& r) const {
  if (!is_free()) throw std::logic_error("not a free category");
  hom(x, y);
  const auto& t = *d_->free_tables[x * object_count() + y];
  FreeWord w = t.word_of_nd.at(r.nd);
  for (int i : r.word.idx) w = word_degeneracy(*this, w, i);
  return w;
}

SCat free_scat(const std::vector<std::string>& objects,
               const std::vector<FreeEdge>& edges, int cap, int word_bound,
               const std::string& name) {
  for (const auto& e : edges) {
    if (e.unit_vertex && e.src != e.tgt)
      throw std::invalid_argument("unit classes only on endomorphism edges");
    if (e.shape.cap() < cap) throw std::invalid_argument("cap too small");
  }
  SCat::Data d;
  d.name = name;
  d.cap = cap;
  d.objects = objects;
  d.edges = edges;
  d.word_bound = word_bound;
  d.is_free = true;

  d.make_hom = [](const SCat& c, int x, int y) -> SSet {
    auto table = std::make_shared<SCat::Data::FreeHomTable>(build_free_hom_table(c, x, y));
    const int cap = c.cap();
    LevelwiseInput in;
    in.cap = cap;
    for (int k = 0; k <= cap; ++k)
      in.sizes.push_back(static_cast<long long>(table->words[k].size()));
    const SCat cc = c;
    in.face = [table, cc](int n, long long e, int i) {
      FreeWord w = word_face(cc, 0, 0, table->words[n][e], i);
      return table->index[n - 1].at(word_key(w));
    };
    in.degen = [table, cc](int n, long long e, int i) {
      FreeWord w = word_degeneracy(cc, table->words[n][e], i);
      return table->index[n + 1].at(word_key(w));
    };
    in.label = [table, cc](int n, long long e) {
      const auto& w = table->words[n][e];
      if (w.empty()) return std::string("id");
      std::string s;
      for (size_t t = 0; t < w.size(); ++t) {
        if (t) s += '*';
        s += atom_label(cc, w[w.size() - 1 - t]);  // target-to-source, like g.f
      }
      return s;
    };
    auto lw = build_levelwise(in);
    table->refs = lw.ref_of;
    for (int k = 0; k <= cap; ++k)
      for (size_t p = 0; p < lw.elem_of[k].size(); ++p) {
        const CellId cell = lw.sset.cells(k)[p];
        table->word_of_nd[cell] = table->words[k][lw.elem_of[k][p]];
      }
    c.data()->free_tables[x * c.object_count() + y] = std::move(*table);
    return lw.sset;
  };

  d.compose_fn = [](const SCat& c, int x, int y, int z, int k, const SimplexRef& g,
                    const SimplexRef& f) -> SimplexRef {
    FreeWord wf = c.word_of_ref(x, y, f);
    FreeWord wg = c.word_of_ref(y, z, g);
    FreeWord w = wf;
    w.insert(w.end(), wg.begin(), wg.end());
    if (static_cast<int>(w.size()) > c.data()->word_bound)
      throw std::runtime_error("word bound exceeded in composition");
    return c.ref_of_word(x, z, k, w);
  };

  d.identity_locator = [](const SCat& c, int x) -> CellId {
    return c.ref_of_word(x, x, 0, {}).nd;
  };

  // presentation: one generator per nondegenerate non-unit cell of each shape
  Presentation pres;
  std::map<std::pair<int, CellId>, int> gen_index;
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& shape = edges[e].shape;
    for (int m = 0; m <= shape.cap(); ++m) {
      for (CellId cell : shape.cells(m)) {
        if (edges[e].unit_vertex && cell == *edges[e].unit_vertex) continue;
        GenCell g;
        g.src = edges[e].src;
        g.tgt = edges[e].tgt;
        g.dim = m;
        g.edge = static_cast<int>(e);
        g.cell = cell;
        g.name = edges[e].name + "{" + shape.label(cell) + "}";
        gen_index[{static_cast<int>(e), cell}] = static_cast<int>(pres.gens.size());
        pres.gens.push_back(g);
      }
    }
  }
  pres.face_decomp.resize(pres.gens.size());
  for (size_t gi = 0; gi < pres.gens.size(); ++gi) {
    const auto& g = pres.gens[gi];
    const auto& shape = edges[g.edge].shape;
    if (g.dim == 0) continue;
    pres.face_decomp[gi].resize(g.dim + 1);
    for (int i = 0; i <= g.dim; ++i) {
      const SimplexRef fr = shape.face(SimplexRef{g.cell, {}}, i);
      if (edges[g.edge].unit_vertex && fr.nd == *edges[g.edge].unit_vertex) continue;
      Factor f;
      f.op = CellOp{{}, fr.word};
      f.gen = gen_index.at({g.edge, fr.nd});
      pres.face_decomp[gi][i].push_back(f);
    }
  }
  pres.decompose = [gen_index](const SCat& c, int x, int y,
                               const SimplexRef& r) -> std::vector<Factor> {
    FreeWord w = c.word_of_ref(x, y, r);
    std::vector<Factor> out;
    for (const auto& a : w) {
      Factor f;
      f.op = CellOp{{}, a.cell.word};
      f.gen = gen_index.at({a.edge, a.cell.nd});
      out.push_back(f);
    }
    return out;
  };
  d.pres = std::move(pres);
  return SCat::create(std::move(d));
}

SCat free_scat_on_graph(const std::vector<std::string>& objects,
                        const std::vector<GraphGenerator>& gens, int cap,
                        int word_bound, const std::string& name) {
  std::vector<FreeEdge> edges;
  for (const auto& g : gens) {
    FreeEdge e;
    e.src = g.src;
    e.tgt = g.tgt;
    e.shape = standard_simplex(g.degree, cap);
    e.name = g.name;
    edges.push_back(std::move(e));
  }
  return free_scat(objects, edges, cap, word_bound, name);
}

// ---------------------------------------------------------------------------
// Functors

SimplexRef SFunctor::eval_factors(int x, int y, int k,
                                  const std::vector<Factor>& fs) const {
  if (fs.empty()) return target.identity_ref(ob.at(x), k);
  (void)y;
  const auto& pres = source.presentation();
  SimplexRef cur;
  int cur_src = -1, cur_tgt = -1;
  for (size_t t = 0; t < fs.size(); ++t) {
    const auto& g = pres.gens[fs[t].gen];
    const SSet& h = target.hom(ob[g.src], ob[g.tgt]);
    SimplexRef v = gen_image.at(fs[t].gen);
    for (int dwn : fs[t].op.downs) v = h.face(v, dwn);
    v = h.under_word(v, fs[t].op.ups);
    if (h.ref_dim(v) != k) throw std::logic_error("factor degree mismatch");
    if (t == 0) {
      cur = v;
      cur_src = ob[g.src];
      cur_tgt = ob[g.tgt];
    } else {
      if (ob[g.src] != cur_tgt) throw std::logic_error("factor path mismatch");
      cur = target.compose(cur_src, cur_tgt, ob[g.tgt], k, v, cur);
      cur_tgt = ob[g.tgt];
    }
  }
  return cur;
}

SimplexRef SFunctor::eval(int x, int y, const SimplexRef& r) const {
  if (is_explicit()) return explicit_maps[x * source.object_count() + y].apply(r);
  const int k = source.hom(x, y).ref_dim(r);
  return eval_factors(x, y, k, source.presentation().decompose(source, x, y, r));
}

SimplexRef SFunctor::eval_word(int x, int y, const FreeWord& w) const {
  if (w.empty())
    throw std::invalid_argument("eval_word needs a degree; use eval on a ref");
  const auto& pres = source.presentation();
  // reuse eval_factors by translating atoms directly
  std::vector<Factor> fs;
  for (const auto& a : w) {
    // locate the generator for (edge, nd cell)
    int found = -1;
    for (size_t gi = 0; gi < pres.gens.size(); ++gi)
      if (pres.gens[gi].edge == a.edge && pres.gens[gi].cell == a.cell.nd) {
        found = static_cast<int>(gi);
        break;
      }
    if (found < 0) continue;  // unit atom
    fs.push_back(Factor{CellOp{{}, a.cell.word}, found});
  }
  const int k = word_dim(source, w);
  return eval_factors(x, y, k, fs);
}

SimplicialMap SFunctor::hom_map(int x, int y) const {
  if (is_explicit()) return explicit_maps[x * source.object_count() + y];
  const SSet& hs = source.hom(x, y);
  const SSet& ht = target.hom(ob[x], ob[y]);
  SimplicialMap f{hs, ht, {}};
  f.assign.resize(hs.total_cells());
  for (int m = 0; m <= hs.cap(); ++m)
    for (CellId c : hs.cells(m)) f.assign[c] = eval(x, y, SimplexRef{c, {}});
  return f;
}

std::string SFunctor::key() const {
  std::string s;
  for (int o : ob) {
    s += std::to_string(o);
    s += ',';
  }
  s += '#';
  for (const auto& r : gen_image) {
    s += ref_key(r);
    s += ';';
  }
  if (is_explicit()) {
    for (const auto& m : explicit_maps)
      for (const auto& r : m.assign) {
        s += ref_key(r);
        s += ';';
      }
  }
  return s;
}

void SFunctor::validate() const {
  const int n = source.object_count();
  for (int x = 0; x < n; ++x) {
    // identities
    for (int k = 0; k <= source.cap(); ++k) {
      if (eval(x, x, source.identity_ref(x, k)) != target.identity_ref(ob[x], k))
        throw std::logic_error("functor does not preserve identities");
    }
    for (int y = 0; y < n; ++y) {
      hom_map(x, y).require_simplicial();
      for (int z = 0; z < n; ++z) {
        const int deg = std::min(source.cap(), 2);
        for (int k = 0; k <= deg; ++k) {
          for (const auto& f : source.hom(x, y).level(k))
            for (const auto& g : source.hom(y, z).level(k)) {
              auto lhs = eval(x, z, source.compose(x, y, z, k, g, f));
              auto rhs = target.compose(ob[x], ob[y], ob[z], k, eval(y, z, g),
                                        eval(x, y, f));
              if (lhs != rhs)
                throw std::logic_error("functor does not preserve composition");
            }
        }
      }
    }
  }
}

bool functor_equal(const SFunctor& a, const SFunctor& b) {
  if (!a.source.same_object(b.source) || !a.target.same_object(b.target) ||
      a.ob != b.ob || a.gen_image != b.gen_image)
    return false;
  if (a.is_explicit() != b.is_explicit()) return a.key() == b.key();
  if (a.is_explicit()) {
    for (size_t p = 0; p < a.explicit_maps.size(); ++p)
      if (a.explicit_maps[p].assign != b.explicit_maps[p].assign) return false;
  }
  return true;
}

SFunctor identity_functor(const SCat& c) {
  const auto& pres = c.presentation();
  SFunctor f;
  f.source = c;
  f.target = c;
  f.ob.resize(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) f.ob[x] = x;
  for (const auto& g : pres.gens) {
    if (c.is_free()) {
      FreeWord w{FreeAtom{g.edge, SimplexRef{g.cell, {}}}};
      f.gen_image.push_back(c.ref_of_word(g.src, g.tgt, g.dim, w));
    } else {
      f.gen_image.push_back(SimplexRef{g.cell, {}});
    }
  }
  return f;
}

SFunctor compose_functors(const SFunctor& f, const SFunctor& g) {
  if (!f.target.same_object(g.source))
    throw std::invalid_argument("functor composition mismatch");
  SFunctor out;
  out.source = f.source;
  out.target = g.target;
  for (int x = 0; x < f.source.object_count(); ++x) out.ob.push_back(g.ob[f.ob[x]]);
  if (f.is_explicit()) {
    const int n = f.source.object_count();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out.explicit_maps.push_back(
            f.explicit_maps[x * n + y].then(g.hom_map(f.ob[x], f.ob[y])));
    return out;
  }
  const auto& pres = f.source.presentation();
  for (size_t gi = 0; gi < pres.gens.size(); ++gi) {
    const auto& gen = pres.gens[gi];
    out.gen_image.push_back(
        g.eval(f.ob[gen.src], f.ob[gen.tgt], f.gen_image[gi]));
  }
  return out;
}

SFunctor functor_from_hom_maps(const SCat& a, const SCat& c, std::vector<int> ob,
                               std::vector<SimplicialMap> maps) {
  const int n = a.object_count();
  if (static_cast<int>(ob.size()) != n ||
      static_cast<int>(maps.size()) != n * n)
    throw std::invalid_argument("functor data has the wrong shape");
  SFunctor f;
  f.source = a;
  f.target = c;
  f.ob = std::move(ob);
  f.explicit_maps = std::move(maps);
  f.validate();
  return f;
}

SFunctor group_hom_functor(const SCat& bg, const SCat& bh, const GroupTable& g,
                           const GroupTable& h, const std::vector<int>& hom) {
  for (int p = 0; p < g.order; ++p)
    for (int q = 0; q < g.order; ++q)
      if (hom[g.mult[p][q]] != h.mult[hom[p]][hom[q]])
        throw std::invalid_argument("not a homomorphism");
  const SSet& hg = bg.hom(0, 0);
  const SSet& hh = bh.hom(0, 0);
  SimplicialMap m{hg, hh, {}};
  m.assign.resize(hg.total_cells());
  for (CellId v : hg.cells(0)) m.assign[v] = SimplexRef{hom[v], {}};
  return functor_from_hom_maps(bg, bh, {0}, {m});
}

SimplicialMap map_vertices_by_label(
    const SSet& src, const SSet& dst,
    const std::map<std::string, std::string>& images) {
  for (int m = 1; m <= src.cap(); ++m)
    if (src.cell_count(m) > 0)
      throw std::invalid_argument("source is not a discrete simplicial set");
  SimplicialMap f{src, dst, {}};
  f.assign.resize(src.total_cells());
  for (CellId v : src.cells(0)) {
    const std::string& target_label = images.at(src.label(v));
    bool found = false;
    for (CellId w : dst.cells(0)) {
      if (dst.label(w) == target_label) {
        f.assign[v] = SimplexRef{w, {}};
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("no target vertex labelled " + target_label);
  }
  return f;
}

SFunctor collapse_to_point(const SCat& c, const SCat& pt) {
  if (pt.object_count() != 1 || pt.hom(0, 0).cell_count(0) != 1)
    throw std::invalid_argument("target is not terminal");
  const int n = c.object_count();
  std::vector<SimplicialMap> maps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      maps.push_back(constant_map(c.hom(x, y), pt.hom(0, 0), 0));
  return functor_from_hom_maps(c, pt, std::vector<int>(n, 0), std::move(maps));
}

// ---------------------------------------------------------------------------
// Functor enumeration

namespace {

struct HomIndex {
  const SSet& h;
  std::vector<std::optional<std::unordered_map<std::string, std::vector<SimplexRef>>>>
      by_faces;
  std::vector<std::optional<std::vector<SimplexRef>>> levels;

  explicit HomIndex(const SSet& hh) : h(hh) {
    by_faces.resize(h.cap() + 1);
    levels.resize(h.cap() + 1);
  }
  const std::vector<SimplexRef>& level(int m) {
    if (!levels[m]) levels[m] = h.level(m);
    return *levels[m];
  }
  static std::string key(const std::vector<SimplexRef>& fs) {
    std::string k;
    for (const auto& f : fs) {
      k += ref_key(f);
      k += '|';
    }
    return k;
  }
  const std::vector<SimplexRef>* candidates(int m, const std::vector<SimplexRef>& req) {
    if (!by_faces[m]) {
      by_faces[m].emplace();
      for (const auto& r : level(m)) {
        std::vector<SimplexRef> fs;
        for (int i = 0; i <= m; ++i) fs.push_back(h.face(r, i));
        (*by_faces[m])[key(fs)].push_back(r);
      }
    }
    auto it = by_faces[m]->find(key(req));
    return it == by_faces[m]->end() ? nullptr : &it->second;
  }
};

}  // namespace

std::vector<SFunctor> enumerate_functors(const SCat& a, const SCat& c,
                                         const FunctorSearchOptions& opt) {
  const auto& pres = a.presentation();
  const int na = a.object_count();
  const int nc = c.object_count();
  const int ng = static_cast<int>(pres.gens.size());

  // dependency order: every generator after the generators its faces use
  std::vector<std::vector<int>> deps(ng);
  for (int g = 0; g < ng; ++g) {
    if (pres.face_decomp.size() > static_cast<size_t>(g)) {
      for (const auto& fl : pres.face_decomp[g])
        for (const auto& f : fl)
          if (f.gen != g) deps[g].push_back(f.gen);
    }
  }
  std::vector<int> order;
  std::vector<char> state(ng, 0);
  std::function<void(int)> visit = [&](int g) {
    if (state[g] == 2) return;
    if (state[g] == 1) throw std::logic_error("cyclic generator dependencies");
    state[g] = 1;
    for (int d : deps[g]) visit(d);
    state[g] = 2;
    order.push_back(g);
  };
  for (int g = 0; g < ng; ++g) visit(g);

  std::vector<SFunctor> results;
  std::vector<int> obmap(na, -1);
  std::vector<SimplexRef> img(ng);
  std::map<std::pair<int, int>, std::unique_ptr<HomIndex>> indices;
  auto index_of = [&](int x, int y) -> HomIndex& {
    auto key = std::make_pair(x, y);
    auto it = indices.find(key);
    if (it == indices.end())
      it = indices.emplace(key, std::make_unique<HomIndex>(c.hom(x, y))).first;
    return *it->second;
  };

  // evaluates a factor list under the partial assignment
  std::function<SimplexRef(int, int, const std::vector<Factor>&)> eval_partial =
      [&](int src_obj, int k, const std::vector<Factor>& fs) -> SimplexRef {
    if (fs.empty()) return c.identity_ref(obmap[src_obj], k);
    SimplexRef cur;
    int cur_src = -1, cur_tgt = -1;
    for (size_t t = 0; t < fs.size(); ++t) {
      const auto& gen = pres.gens[fs[t].gen];
      const SSet& h = c.hom(obmap[gen.src], obmap[gen.tgt]);
      SimplexRef v = img[fs[t].gen];
      for (int dwn : fs[t].op.downs) v = h.face(v, dwn);
      v = h.under_word(v, fs[t].op.ups);
      if (t == 0) {
        cur = v;
        cur_src = obmap[gen.src];
        cur_tgt = obmap[gen.tgt];
      } else {
        cur = c.compose(cur_src, cur_tgt, obmap[gen.tgt], k, v, cur);
        cur_tgt = obmap[gen.tgt];
      }
    }
    return cur;
  };

  std::function<void(size_t)> rec_gens = [&](size_t t) {
    if (opt.limit >= 0 && static_cast<long long>(results.size()) >= opt.limit) return;
    if (t == order.size()) {
      SFunctor f;
      f.source = a;
      f.target = c;
      f.ob = obmap;
      f.gen_image = img;
      if (opt.validate_results) f.validate();
      results.push_back(std::move(f));
      return;
    }
    const int g = order[t];
    const auto& gen = pres.gens[g];
    const int m = gen.dim;
    const SSet& h = c.hom(obmap[gen.src], obmap[gen.tgt]);
    std::vector<SimplexRef> required;
    if (m >= 1) {
      required.reserve(m + 1);
      for (int i = 0; i <= m; ++i)
        required.push_back(eval_partial(gen.src, m - 1, pres.face_decomp[g][i]));
    }
    auto try_candidate = [&](const SimplexRef& r) {
      img[g] = r;
      rec_gens(t + 1);
    };
    auto pin = opt.pinned_gens.find(g);
    if (pin != opt.pinned_gens.end()) {
      const SimplexRef& r = pin->second;
      if (h.ref_dim(r) != m) return;
      for (int i = 0; i < static_cast<int>(required.size()); ++i)
        if (h.face(r, i) != required[i]) return;
      try_candidate(r);
      return;
    }
    if (m == 0) {
      for (CellId v : h.cells(0)) try_candidate(SimplexRef{v, {}});
      return;
    }
    auto& idx = index_of(obmap[gen.src], obmap[gen.tgt]);
    const auto* cands = idx.candidates(m, required);
    if (!cands) return;
    for (const auto& r : *cands) try_candidate(r);
  };

  std::function<void(int)> rec_obj = [&](int x) {
    if (opt.limit >= 0 && static_cast<long long>(results.size()) >= opt.limit) return;
    if (x == na) {
      rec_gens(0);
      return;
    }
    auto pin = opt.pinned_objects.find(x);
    if (pin != opt.pinned_objects.end()) {
      obmap[x] = pin->second;
      rec_obj(x + 1);
      obmap[x] = -1;
      return;
    }
    for (int o = 0; o < nc; ++o) {
      obmap[x] = o;
      rec_obj(x + 1);
      obmap[x] = -1;
    }
  };
  rec_obj(0);

  std::stable_sort(results.begin(), results.end(),
                   [](const SFunctor& p, const SFunctor& q) { return p.key() < q.key(); });
  return results;
}

// ---------------------------------------------------------------------------
// Validation of composition data

void SCat::validate(int max_exhaustive, long long sample_limit) const {
  const int n = object_count();
  for (int x = 0; x < n; ++x) {
    identity_ref(x, 0);
    for (int y = 0; y < n; ++y) {
      hom(x, y).validate();
      for (int z = 0; z < n; ++z) {
        long long budget = sample_limit;
        for (int k = 0; k <= cap(); ++k) {
          if (k > max_exhaustive && budget <= 0) break;
          for (const auto& f : hom(x, y).level(k)) {
            for (const auto& g : hom(y, z).level(k)) {
              if (k > max_exhaustive && --budget < 0) break;
              const auto gf = compose(x, y, z, k, g, f);
              if (hom(x, z).ref_dim(gf) != k)
                throw std::logic_error("composition changed degree");
              // unit laws
              if (compose(x, x, z, k, gf, identity_ref(x, k)) != gf)
                throw std::logic_error("right unit law failed");
              if (compose(x, z, z, k, identity_ref(z, k), gf) != gf)
                throw std::logic_error("left unit law failed");
              // simplicial naturality
              if (k >= 1) {
                for (int i = 0; i <= k; ++i) {
                  if (compose(x, y, z, k - 1, hom(y, z).face(g, i), hom(x, y).face(f, i)) !=
                      hom(x, z).face(gf, i))
                    throw std::logic_error("composition not simplicial (faces)");
                }
              }
              if (k < cap()) {
                for (int i = 0; i <= k; ++i) {
                  if (compose(x, y, z, k + 1, hom(y, z).degeneracy(g, i),
                              hom(x, y).degeneracy(f, i)) != hom(x, z).degeneracy(gf, i))
                    throw std::logic_error("composition not simplicial (degeneracies)");
                }
              }
              // associativity against all composable h
              for (int w = 0; w < n; ++w) {
                for (const auto& h : hom(z, w).level(k)) {
                  if (k > max_exhaustive && --budget < 0) break;
                  if (compose(x, y, w, k, compose(y, z, w, k, h, g), f) !=
                      compose(x, z, w, k, h, gf))
                    throw std::logic_error("associativity failed");
                }
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace nervelab
