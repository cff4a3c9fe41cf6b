#include "nervelab/sset.hpp"

#include <algorithm>

namespace nervelab {

namespace {

// all (k+1)-element subsets of {0..n}, lexicographic
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

SSet standard_simplex(int n, int cap) {
  if (n > cap) throw std::invalid_argument("cap too small");
  SSetBuilder b(cap);
  std::unordered_map<std::string, CellId> id_of;
  for (int m = 0; m <= std::min(n, cap); ++m) {
    for (const auto& verts : subsets_of_size(n, m)) {
      std::vector<SimplexRef> faces;
      if (m >= 1) {
        for (int i = 0; i <= m; ++i) {
          std::vector<int> sub = verts;
          sub.erase(sub.begin() + i);
          faces.push_back(SimplexRef{id_of.at(join_ints(sub)), {}});
        }
      }
      const CellId id = b.add_cell(m, std::move(faces), join_ints(verts));
      id_of[join_ints(verts)] = id;
    }
  }
  return b.build();
}

CellId simplex_cell(const SSet& dn, const std::vector<int>& verts) {
  const std::string key = join_ints(verts);
  const int m = static_cast<int>(verts.size()) - 1;
  for (CellId c : dn.cells(m))
    if (dn.label(c) == key) return c;
  throw std::invalid_argument("no cell with vertices " + key);
}

std::vector<int> simplex_cell_verts(const SSet& dn, CellId c) {
  std::vector<int> out;
  const std::string& lbl = dn.label(c);
  size_t pos = 0;
  while (pos < lbl.size()) {
    size_t next = lbl.find(',', pos);
    if (next == std::string::npos) next = lbl.size();
    out.push_back(std::stoi(lbl.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

ShapeInStandard boundary_subcomplex(int n, int cap) {
  if (n < 1) throw std::invalid_argument("boundary needs n >= 1");
  ShapeInStandard out;
  out.ambient = standard_simplex(n, cap);
  Subcomplex s{out.ambient, {}};
  s.members.resize(cap + 1);
  for (int m = 0; m <= std::min(n - 1, cap); ++m)
    for (CellId c : out.ambient.cells(m)) s.members[m].insert(c);
  out.sub = s;
  out.extracted = extract(s);
  return out;
}

ShapeInStandard horn(int n, int i, int cap) {
  if (n < 1) throw std::invalid_argument("horn needs n >= 1");
  if (i < 0 || i > n) throw std::invalid_argument("horn index out of range");
  ShapeInStandard out;
  out.ambient = standard_simplex(n, cap);
  std::vector<int> omitted;
  for (int v = 0; v <= n; ++v)
    if (v != i) omitted.push_back(v);
  const CellId skip = simplex_cell(out.ambient, omitted);
  Subcomplex s{out.ambient, {}};
  s.members.resize(cap + 1);
  for (int m = 0; m <= std::min(n - 1, cap); ++m)
    for (CellId c : out.ambient.cells(m))
      if (c != skip) s.members[m].insert(c);
  out.sub = s;
  out.extracted = extract(s);
  return out;
}

// ---------------------------------------------------------------------------
// Posets

void Poset::validate() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) throw std::logic_error("poset not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) throw std::logic_error("poset not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw std::logic_error("poset not transitive");
    }
}

Poset chain_poset(int n) {
  Poset p;
  for (int v = 0; v <= n; ++v) p.names.push_back(std::to_string(v));
  p.leq.assign(n + 1, std::vector<bool>(n + 1, false));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) p.leq[a][b] = true;
  return p;
}

Poset product_poset(const Poset& p, const Poset& q) {
  Poset out;
  const int np = p.size(), nq = q.size();
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) out.names.push_back(p.names[a] + "," + q.names[b]);
  out.leq.assign(np * nq, std::vector<bool>(np * nq, false));
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b)
      for (int c = 0; c < np; ++c)
        for (int d = 0; d < nq; ++d)
          out.leq[a * nq + b][c * nq + d] = p.leq[a][c] && q.leq[b][d];
  return out;
}

Poset antichain(int n) {
  Poset p;
  for (int v = 0; v < n; ++v) p.names.push_back(std::to_string(v));
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) p.leq[v][v] = true;
  return p;
}

SimplexRef PosetNerveResult::ref_of_chain(const std::vector<int>& chain) const {
  auto it = by_chain_key.find(join_ints(chain));
  if (it == by_chain_key.end()) throw std::invalid_argument("not a chain of the poset");
  return it->second;
}

PosetNerveResult nerve_of_poset(const Poset& p, int cap) {
  p.validate();
  // chains per level, lexicographic
  auto chains = std::make_shared<std::vector<std::vector<std::vector<int>>>>();
  auto index = std::make_shared<std::vector<std::unordered_map<std::string, long long>>>();
  chains->resize(cap + 1);
  index->resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
      if (static_cast<int>(cur.size()) == n + 1) {
        (*index)[n][join_ints(cur)] = static_cast<long long>((*chains)[n].size());
        (*chains)[n].push_back(cur);
        return;
      }
      for (int v = 0; v < p.size(); ++v) {
        if (!cur.empty() && !p.leq[cur.back()][v]) continue;
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  LevelwiseInput in;
  in.cap = cap;
  for (int n = 0; n <= cap; ++n) in.sizes.push_back((*chains)[n].size());
  in.face = [chains, index](int n, long long e, int i) {
    std::vector<int> c = (*chains)[n][e];
    c.erase(c.begin() + i);
    return (*index)[n - 1].at(join_ints(c));
  };
  in.degen = [chains, index](int n, long long e, int i) {
    std::vector<int> c = (*chains)[n][e];
    c.insert(c.begin() + i, c[i]);
    return (*index)[n + 1].at(join_ints(c));
  };
  auto names = std::make_shared<std::vector<std::string>>(p.names);
  in.label = [chains, names](int n, long long e) {
    const auto& c = (*chains)[n][e];
    std::string s;
    for (size_t t = 0; t < c.size(); ++t) {
      if (t) s += '<';
      s += (*names)[c[t]];
    }
    return s;
  };
  auto lw = build_levelwise(in);
  PosetNerveResult out;
  out.sset = lw.sset;
  out.chain_of.resize(cap + 1);
  for (int n = 0; n <= cap; ++n)
    for (long long e : lw.elem_of[n]) out.chain_of[n].push_back((*chains)[n][e]);
  for (int n = 0; n <= cap; ++n)
    for (long long e = 0; e < in.sizes[n]; ++e)
      out.by_chain_key[join_ints((*chains)[n][e])] = lw.ref_of[n][e];
  return out;
}

// ---------------------------------------------------------------------------
// Cubes

namespace {
std::string mask_label(unsigned mask, int arity) {
  std::string s;
  for (int t = 0; t < arity; ++t) s += ((mask >> t) & 1u) ? '1' : '0';
  if (arity == 0) s = "()";
  return s;
}

std::string mask_chain_key(const std::vector<unsigned>& chain) {
  std::string s;
  for (size_t t = 0; t < chain.size(); ++t) {
    if (t) s += '<';
    s += std::to_string(chain[t]);
  }
  return s;
}
}  // namespace

CellId Cube::chain_cell(const std::vector<unsigned>& chain) const {
  const int m = static_cast<int>(chain.size()) - 1;
  for (size_t k = 0; k < mask_chain_of[m].size(); ++k)
    if (mask_chain_of[m][k] == chain) return nerve.cells(m)[k];
  throw std::invalid_argument("not a strict chain of the cube");
}

Cube cube(const std::vector<int>& coords, int cap) {
  const int arity = static_cast<int>(coords.size());
  const unsigned top = (1u << arity) - 1u;
  // poset of bitmasks ordered by inclusion
  Poset p;
  for (unsigned v = 0; v <= top; ++v) p.names.push_back(mask_label(v, arity));
  if (arity == 0) {
    p.names.assign(1, mask_label(0, 0));
  }
  const int n = static_cast<int>(p.names.size());
  p.leq.assign(n, std::vector<bool>(n, false));
  for (unsigned v = 0; v < static_cast<unsigned>(n); ++v)
    for (unsigned w = 0; w < static_cast<unsigned>(n); ++w)
      p.leq[v][w] = (v & w) == v;
  auto nerve = nerve_of_poset(p, cap);
  Cube out;
  out.coords = coords;
  out.nerve = nerve.sset;
  out.vertex_of_mask.resize(n);
  for (int k = 0; k < static_cast<int>(nerve.chain_of[0].size()); ++k)
    out.vertex_of_mask[nerve.chain_of[0][k][0]] = out.nerve.cells(0)[k];
  out.mask_chain_of.resize(cap + 1);
  for (int m = 0; m <= cap; ++m)
    for (const auto& chain : nerve.chain_of[m]) {
      std::vector<unsigned> mc(chain.begin(), chain.end());
      out.mask_chain_of[m].push_back(mc);
    }
  return out;
}

Subcomplex cube_face(const Cube& c, int coord, int eps) {
  auto it = std::find(c.coords.begin(), c.coords.end(), coord);
  if (it == c.coords.end()) throw std::invalid_argument("coordinate not in cube");
  const int bit = static_cast<int>(it - c.coords.begin());
  Subcomplex s{c.nerve, {}};
  s.members.resize(c.nerve.cap() + 1);
  for (int m = 0; m <= c.nerve.cap(); ++m) {
    for (size_t k = 0; k < c.mask_chain_of[m].size(); ++k) {
      bool all = true;
      for (unsigned mask : c.mask_chain_of[m][k])
        if (static_cast<int>((mask >> bit) & 1u) != eps) {
          all = false;
          break;
        }
      if (all) s.members[m].insert(c.nerve.cells(m)[k]);
    }
  }
  return s;
}

Subcomplex cube_boundary_sub(const Cube& c) {
  Subcomplex s{c.nerve, {}};
  s.members.resize(c.nerve.cap() + 1);
  for (int x : c.coords)
    for (int eps : {0, 1}) s = subcomplex_union(s, cube_face(c, x, eps));
  return s;
}

Subcomplex cube_horn_sub(const Cube& c, int coord, int eps) {
  if (std::find(c.coords.begin(), c.coords.end(), coord) == c.coords.end())
    throw std::invalid_argument("coordinate not in cube");
  Subcomplex s{c.nerve, {}};
  s.members.resize(c.nerve.cap() + 1);
  for (int x : c.coords)
    for (int e : {0, 1}) {
      if (x == coord && e == eps) continue;
      s = subcomplex_union(s, cube_face(c, x, e));
    }
  return s;
}

SubcomplexResult cube_boundary(const Cube& c) { return extract(cube_boundary_sub(c)); }

SubcomplexResult cube_horn(const Cube& c, int coord, int eps) {
  return extract(cube_horn_sub(c, coord, eps));
}

// ---------------------------------------------------------------------------
// Quotients

QuotientResult quotient_collapse(const SSet& x, const Subcomplex& a) {
  if (!a.parent.same_object(x)) throw std::invalid_argument("subcomplex of a different complex");
  a.require_closed();
  bool empty = true;
  for (const auto& m : a.members) empty = empty && m.empty();
  if (empty) throw std::invalid_argument("cannot collapse an empty subcomplex");

  // level elements: 0 = the class of A, then the refs outside A in level order
  auto kept = std::make_shared<std::vector<std::vector<SimplexRef>>>();
  auto index = std::make_shared<std::vector<std::unordered_map<std::string, long long>>>();
  kept->resize(x.cap() + 1);
  index->resize(x.cap() + 1);
  for (int n = 0; n <= x.cap(); ++n) {
    for (const auto& r : x.level(n)) {
      if (a.contains_ref(r)) continue;
      (*index)[n][ref_key(r)] = static_cast<long long>((*kept)[n].size()) + 1;
      (*kept)[n].push_back(r);
    }
  }
  const SSet xs = x;
  LevelwiseInput in;
  in.cap = x.cap();
  for (int n = 0; n <= x.cap(); ++n) in.sizes.push_back(1 + (*kept)[n].size());
  auto cls = [kept, index, xs, a](int n, const SimplexRef& r) -> long long {
    if (a.contains_ref(r)) return 0;
    return (*index)[n].at(ref_key(r));
  };
  in.face = [kept, cls, xs](int n, long long e, int i) -> long long {
    if (e == 0) return 0;
    return cls(n - 1, xs.face((*kept)[n][e - 1], i));
  };
  in.degen = [kept, cls, xs](int n, long long e, int i) -> long long {
    if (e == 0) return 0;
    return cls(n + 1, xs.degeneracy((*kept)[n][e - 1], i));
  };
  in.label = [kept, xs](int n, long long e) {
    if (e == 0) return std::string("*");
    return xs.ref_repr((*kept)[n][e - 1]);
  };
  auto lw = build_levelwise(in);
  QuotientResult out;
  out.sset = lw.sset;
  out.basepoint = lw.ref_of[0][0].nd;
  out.projection = SimplicialMap{x, out.sset, {}};
  out.projection.assign.resize(x.total_cells());
  for (int n = 0; n <= x.cap(); ++n) {
    for (CellId c : x.cells(n)) {
      const SimplexRef r{c, {}};
      if (a.contains(c))
        out.projection.assign[c] = lw.ref_of[n][0];
      else
        out.projection.assign[c] = lw.ref_of[n][(*index)[n].at(ref_key(r))];
    }
  }
  out.projection.require_simplicial();
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {
std::string tuple_key(const std::vector<SimplexRef>& refs) {
  std::string k;
  for (const auto& r : refs) {
    k += ref_key(r);
    k += '|';
  }
  return k;
}
}  // namespace

SimplexRef ProductResult::locate(int n, const std::vector<SimplexRef>& comps) const {
  return by_key[n].at(tuple_key(comps));
}

ProductResult product(const std::vector<SSet>& factors, int cap) {
  for (const auto& f : factors)
    if (f.cap() < cap) throw std::invalid_argument("cap too small");
  const size_t nf = factors.size();

  auto tuples = std::make_shared<std::vector<std::vector<std::vector<SimplexRef>>>>();
  auto index = std::make_shared<std::vector<std::unordered_map<std::string, long long>>>();
  tuples->resize(cap + 1);
  index->resize(cap + 1);
  constexpr long long kGuard = 4000000;
  for (int n = 0; n <= cap; ++n) {
    long long total = 1;
    std::vector<std::vector<SimplexRef>> levels;
    for (const auto& f : factors) {
      levels.push_back(f.level(n));
      total *= static_cast<long long>(levels.back().size());
      if (total > kGuard) throw std::runtime_error("product level too large");
    }
    std::vector<SimplexRef> cur(nf);
    std::function<void(size_t)> rec = [&](size_t t) {
      if (t == nf) {
        (*index)[n][tuple_key(cur)] = static_cast<long long>((*tuples)[n].size());
        (*tuples)[n].push_back(cur);
        return;
      }
      for (const auto& r : levels[t]) {
        cur[t] = r;
        rec(t + 1);
      }
    };
    rec(0);
  }
  auto facs = std::make_shared<std::vector<SSet>>(factors);
  LevelwiseInput in;
  in.cap = cap;
  for (int n = 0; n <= cap; ++n) in.sizes.push_back((*tuples)[n].size());
  in.face = [tuples, index, facs](int n, long long e, int i) {
    std::vector<SimplexRef> t = (*tuples)[n][e];
    for (size_t k = 0; k < t.size(); ++k) t[k] = (*facs)[k].face(t[k], i);
    return (*index)[n - 1].at(tuple_key(t));
  };
  in.degen = [tuples, index, facs](int n, long long e, int i) {
    std::vector<SimplexRef> t = (*tuples)[n][e];
    for (size_t k = 0; k < t.size(); ++k) t[k] = (*facs)[k].degeneracy(t[k], i);
    return (*index)[n + 1].at(tuple_key(t));
  };
  in.label = [tuples, facs](int n, long long e) {
    const auto& t = (*tuples)[n][e];
    std::string s = "(";
    for (size_t k = 0; k < t.size(); ++k) {
      if (k) s += '|';
      s += (*facs)[k].ref_repr(t[k]);
    }
    s += ')';
    return s;
  };
  auto lw = build_levelwise(in);
  ProductResult out;
  out.sset = lw.sset;
  out.factors = factors;
  out.components_of.resize(cap + 1);
  for (int n = 0; n <= cap; ++n)
    for (long long e : lw.elem_of[n]) out.components_of[n].push_back((*tuples)[n][e]);
  out.by_key.resize(cap + 1);
  for (int n = 0; n <= cap; ++n)
    for (long long e = 0; e < in.sizes[n]; ++e)
      out.by_key[n][tuple_key((*tuples)[n][e])] = lw.ref_of[n][e];
  return out;
}

ProductResult product(const SSet& x, const SSet& y, int cap) {
  return product(std::vector<SSet>{x, y}, cap);
}

// ---------------------------------------------------------------------------
// Pointed spaces

Pointed simplicial_circle(int cap) {
  auto bd = boundary_subcomplex(1, cap);
  auto q = quotient_collapse(bd.ambient, bd.sub);
  return Pointed{q.sset, q.basepoint};
}

Pointed pointed_interval(int cap) {
  auto d1 = standard_simplex(1, cap);
  return Pointed{d1, simplex_cell(d1, {1})};
}

Pointed smash(const Pointed& x, const Pointed& y, int cap) {
  auto prod = product(x.space, y.space, cap);
  Subcomplex wedge{prod.sset, {}};
  wedge.members.resize(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    const auto& cells = prod.sset.cells(m);
    for (size_t k = 0; k < cells.size(); ++k) {
      const auto& comps = prod.components_of[m][k];
      if (comps[0].nd == x.basepoint || comps[1].nd == y.basepoint)
        wedge.members[m].insert(cells[k]);
    }
  }
  auto q = quotient_collapse(prod.sset, wedge);
  return Pointed{q.sset, q.basepoint};
}

Pointed smash_power_circle(int k, int cap) {
  if (k == 0) {
    // two points, the first one marked
    SSetBuilder b(cap);
    const CellId base = b.add_cell(0, {}, "*");
    b.add_cell(0, {}, "pt");
    return Pointed{b.build(), base};
  }
  Pointed acc = simplicial_circle(cap);
  for (int t = 1; t < k; ++t) acc = smash(acc, simplicial_circle(cap), cap);
  return acc;
}

}  // namespace nervelab
