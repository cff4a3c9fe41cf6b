#include "nervelab/sset.hpp"

#include <algorithm>
#include <sstream>

namespace nervelab {

namespace {

// Degeneracy application at the reference level needs no ambient complex:
// it only rewrites the word.
SimplexRef ref_degeneracy(const SimplexRef& r, int i) {
  return SimplexRef{r.nd, word_push(r.word, i)};
}

}  // namespace

DegWord word_push(const DegWord& w, int i) {
  DegWord out;
  out.idx.reserve(w.idx.size() + 1);
  bool inserted = false;
  for (int j : w.idx) {
    if (j < i) {
      out.idx.push_back(j);
    } else {
      if (!inserted) {
        out.idx.push_back(i);
        inserted = true;
      }
      out.idx.push_back(j + 1);
    }
  }
  if (!inserted) out.idx.push_back(i);
  return out;
}

std::string ref_key(const SimplexRef& r) {
  std::string s = std::to_string(r.nd);
  s += '/';
  for (size_t t = 0; t < r.word.idx.size(); ++t) {
    if (t) s += '.';
    s += std::to_string(r.word.idx[t]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t t = 0; t < v.size(); ++t) {
    if (t) s += sep;
    s += std::to_string(v[t]);
  }
  return s;
}

std::vector<std::vector<int>> increasing_words(int len, int min_dim) {
  // strictly increasing words w with w[t] <= min_dim + t, lexicographic
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int t) {
    if (t == len) {
      out.push_back(cur);
      return;
    }
    int lo = cur.empty() ? 0 : cur.back() + 1;
    for (int v = lo; v <= min_dim + t; ++v) {
      cur.push_back(v);
      rec(t + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// SSet

const std::vector<CellId>& SSet::cells(int dim) const {
  static const std::vector<CellId> kEmpty;
  if (dim < 0 || dim > d_->cap) return kEmpty;
  return d_->cells[dim];
}

int SSet::cell_count(int dim) const { return static_cast<int>(cells(dim).size()); }

const std::vector<SimplexRef>& SSet::faces_of(CellId c) const {
  return d_->faces_of.at(c);
}

SimplexRef SSet::face(const SimplexRef& r, int i) const {
  const int rd = ref_dim(r);
  if (rd < 1) throw std::logic_error("face of a 0-simplex");
  if (i < 0 || i > rd) throw std::out_of_range("face index out of range");
  std::vector<int> outer;  // accumulated degeneracies, outermost first
  const auto& w = r.word.idx;
  int k = static_cast<int>(w.size());
  int fi = i;
  while (k > 0) {
    const int j = w[k - 1];
    if (fi == j || fi == j + 1) {
      SimplexRef res{r.nd, DegWord{std::vector<int>(w.begin(), w.begin() + (k - 1))}};
      for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        res = ref_degeneracy(res, *it);
      return res;
    }
    if (fi < j) {
      outer.push_back(j - 1);
    } else {
      outer.push_back(j);
      --fi;
    }
    --k;
  }
  if (dim_of(r.nd) == 0)
    throw std::logic_error("face reached a vertex; malformed word");
  SimplexRef res = faces_of(r.nd).at(fi);
  for (auto it = outer.rbegin(); it != outer.rend(); ++it)
    res = ref_degeneracy(res, *it);
  return res;
}

SimplexRef SSet::degeneracy(const SimplexRef& r, int i) const {
  const int rd = ref_dim(r);
  if (i < 0 || i > rd) throw std::out_of_range("degeneracy index out of range");
  if (rd + 1 > cap()) throw std::invalid_argument("cap too small");
  return ref_degeneracy(r, i);
}

SimplexRef SSet::under_word(const SimplexRef& r, const DegWord& w) const {
  SimplexRef res = r;
  for (int i : w.idx) res = degeneracy(res, i);
  return res;
}

std::vector<SimplexRef> SSet::level(int n) const {
  if (n < 0 || n > cap()) throw std::invalid_argument("cap too small");
  std::vector<SimplexRef> out;
  for (int m = 0; m <= n; ++m) {
    for (CellId c : cells(m)) {
      for (auto& w : increasing_words(n - m, m))
        out.push_back(SimplexRef{c, DegWord{w}});
    }
  }
  return out;
}

long long SSet::level_size(int n) const {
  long long total = 0;
  for (int m = 0; m <= n; ++m)
    total += static_cast<long long>(cell_count(m)) *
             static_cast<long long>(increasing_words(n - m, m).size());
  return total;
}

std::string SSet::ref_repr(const SimplexRef& r) const {
  std::string s = label(r.nd);
  if (!r.word.empty()) {
    s += "[s";
    s += join_ints(r.word.idx);
    s += ']';
  }
  return s;
}

void SSet::validate() const {
  for (int m = 1; m <= cap(); ++m) {
    for (CellId c : cells(m)) {
      const auto& fs = faces_of(c);
      if (static_cast<int>(fs.size()) != m + 1)
        throw std::logic_error("cell " + label(c) + ": wrong face count");
      for (const auto& f : fs)
        if (ref_dim(f) != m - 1)
          throw std::logic_error("cell " + label(c) + ": face dimension mismatch");
      if (m >= 2) {
        for (int j = 1; j <= m; ++j) {
          for (int i = 0; i < j; ++i) {
            if (face(fs[j], i) != face(fs[i], j - 1))
              throw std::logic_error("simplicial identity d_i d_j failed at cell " +
                                     label(c));
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Builder

SSetBuilder::SSetBuilder(int cap) : data_(std::make_shared<SSet::Data>()) {
  if (cap < 0) throw std::invalid_argument("negative cap");
  data_->cap = cap;
  data_->cells.resize(cap + 1);
}

CellId SSetBuilder::add_cell(int dim, std::vector<SimplexRef> faces, std::string label) {
  if (dim < 0 || dim > data_->cap) throw std::invalid_argument("cap too small");
  if (dim >= 1 && static_cast<int>(faces.size()) != dim + 1)
    throw std::invalid_argument("face list must have dim+1 entries");
  if (dim == 0 && !faces.empty())
    throw std::invalid_argument("vertices have no faces");
  const CellId id = static_cast<CellId>(data_->dim_of.size());
  for (auto& f : faces) {
    if (f.nd < 0 || f.nd >= id) throw std::invalid_argument("face refers to unknown cell");
    if (data_->dim_of[f.nd] + f.word.size() != dim - 1)
      throw std::invalid_argument("face has wrong dimension");
    for (size_t t = 1; t < f.word.idx.size(); ++t)
      if (f.word.idx[t] <= f.word.idx[t - 1])
        throw std::invalid_argument("degeneracy word not strictly increasing");
  }
  data_->cells[dim].push_back(id);
  data_->dim_of.push_back(dim);
  data_->faces_of.push_back(std::move(faces));
  data_->label_of.push_back(label.empty() ? "c" + std::to_string(id) : std::move(label));
  return id;
}

SSet SSetBuilder::build() {
  SSet out(data_);
  out.validate();
  data_ = nullptr;
  return out;
}

// ---------------------------------------------------------------------------
// Levelwise construction

LevelwiseResult build_levelwise(const LevelwiseInput& in) {
  SSetBuilder b(in.cap);
  LevelwiseResult out;
  out.ref_of.resize(in.cap + 1);
  out.elem_of.resize(in.cap + 1);
  for (int n = 0; n <= in.cap; ++n) {
    out.ref_of[n].assign(in.sizes[n], SimplexRef{});
    for (long long e = 0; e < in.sizes[n]; ++e) {
      bool degenerate = false;
      if (n >= 1) {
        for (int i = 0; i < n; ++i) {
          const long long f = in.face(n, e, i);
          if (in.degen(n - 1, f, i) == e) {
            out.ref_of[n][e] = ref_degeneracy(out.ref_of[n - 1][f], i);
            degenerate = true;
            break;
          }
        }
      }
      if (!degenerate) {
        std::vector<SimplexRef> faces;
        if (n >= 1) {
          faces.reserve(n + 1);
          for (int i = 0; i <= n; ++i)
            faces.push_back(out.ref_of[n - 1][in.face(n, e, i)]);
        }
        const std::string lbl = in.label ? in.label(n, e) : std::string();
        const CellId id = b.add_cell(n, std::move(faces), lbl);
        out.ref_of[n][e] = SimplexRef{id, {}};
        out.elem_of[n].push_back(e);
      }
    }
  }
  out.sset = b.build();
  return out;
}

// ---------------------------------------------------------------------------
// Maps

SimplexRef SimplicialMap::apply(const SimplexRef& r) const {
  return target.under_word(assign.at(r.nd), r.word);
}

bool SimplicialMap::is_simplicial() const {
  if (static_cast<int>(assign.size()) != source.total_cells()) return false;
  for (int m = 0; m <= source.cap(); ++m) {
    for (CellId c : source.cells(m)) {
      if (target.ref_dim(assign[c]) != m) return false;
      if (m >= 1) {
        for (int i = 0; i <= m; ++i) {
          if (target.face(assign[c], i) != apply(source.faces_of(c)[i])) return false;
        }
      }
    }
  }
  return true;
}

void SimplicialMap::require_simplicial() const {
  if (!is_simplicial()) throw std::logic_error("assignment does not commute with faces");
}

SimplicialMap SimplicialMap::then(const SimplicialMap& g) const {
  if (!target.same_object(g.source))
    throw std::invalid_argument("composition: target/source mismatch");
  SimplicialMap out{source, g.target, {}};
  out.assign.reserve(assign.size());
  for (const auto& r : assign) out.assign.push_back(g.apply(r));
  return out;
}

bool map_equal(const SimplicialMap& a, const SimplicialMap& b) {
  return a.source.same_object(b.source) && a.target.same_object(b.target) &&
         a.assign == b.assign;
}

SimplicialMap identity_map(const SSet& x) {
  SimplicialMap out{x, x, {}};
  out.assign.reserve(x.total_cells());
  for (CellId c = 0; c < x.total_cells(); ++c) out.assign.push_back(SimplexRef{c, {}});
  return out;
}

SimplicialMap constant_map(const SSet& s, const SSet& x, CellId vertex) {
  if (x.dim_of(vertex) != 0) throw std::invalid_argument("constant map needs a vertex");
  SimplicialMap out{s, x, {}};
  out.assign.reserve(s.total_cells());
  for (CellId c = 0; c < s.total_cells(); ++c) {
    SimplexRef r{vertex, {}};
    for (int i = 0; i < s.dim_of(c); ++i) r = x.degeneracy(r, i);
    out.assign.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcomplexes

bool Subcomplex::contains(CellId c) const {
  const int m = parent.dim_of(c);
  return members[m].count(c) > 0;
}

void Subcomplex::require_closed() const {
  for (int m = 1; m < static_cast<int>(members.size()); ++m) {
    for (CellId c : members[m]) {
      for (const auto& f : parent.faces_of(c)) {
        if (!contains(f.nd))
          throw std::logic_error("subcomplex not closed under faces at " +
                                 parent.label(c));
      }
    }
  }
}

Subcomplex full_subcomplex(const SSet& x) {
  Subcomplex s{x, {}};
  s.members.resize(x.cap() + 1);
  for (int m = 0; m <= x.cap(); ++m)
    s.members[m].insert(x.cells(m).begin(), x.cells(m).end());
  return s;
}

Subcomplex span_subcomplex(const SSet& x, const std::vector<CellId>& seed) {
  Subcomplex s{x, {}};
  s.members.resize(x.cap() + 1);
  std::vector<CellId> stack = seed;
  while (!stack.empty()) {
    const CellId c = stack.back();
    stack.pop_back();
    const int m = x.dim_of(c);
    if (!s.members[m].insert(c).second) continue;
    if (m >= 1)
      for (const auto& f : x.faces_of(c)) stack.push_back(f.nd);
  }
  return s;
}

Subcomplex subcomplex_union(const Subcomplex& a, const Subcomplex& b) {
  if (!a.parent.same_object(b.parent))
    throw std::invalid_argument("subcomplex union: different parents");
  Subcomplex s{a.parent, a.members};
  for (size_t m = 0; m < b.members.size(); ++m)
    s.members[m].insert(b.members[m].begin(), b.members[m].end());
  return s;
}

SubcomplexResult extract(const Subcomplex& s) {
  s.require_closed();
  const SSet& p = s.parent;
  SubcomplexResult out;
  out.new_of_old.assign(p.total_cells(), -1);
  SSetBuilder b(p.cap());
  for (int m = 0; m <= p.cap(); ++m) {
    for (CellId c : p.cells(m)) {
      if (!s.members[m].count(c)) continue;
      std::vector<SimplexRef> faces;
      if (m >= 1) {
        for (const auto& f : p.faces_of(c))
          faces.push_back(SimplexRef{out.new_of_old[f.nd], f.word});
      }
      const CellId id = b.add_cell(m, std::move(faces), p.label(c));
      out.new_of_old[c] = id;
      out.old_of_new.push_back(c);
    }
  }
  out.complex = b.build();
  out.inclusion = SimplicialMap{out.complex, p, {}};
  for (CellId c : out.old_of_new) out.inclusion.assign.push_back(SimplexRef{c, {}});
  return out;
}

// ---------------------------------------------------------------------------
// Map enumeration

namespace {

struct TargetIndex {
  const SSet& x;
  std::vector<std::optional<std::vector<SimplexRef>>> levels;
  std::vector<std::optional<std::unordered_map<std::string, std::vector<SimplexRef>>>>
      by_faces;

  explicit TargetIndex(const SSet& xx) : x(xx) {
    levels.resize(x.cap() + 1);
    by_faces.resize(x.cap() + 1);
  }

  const std::vector<SimplexRef>& level(int n) {
    if (!levels[n]) levels[n] = x.level(n);
    return *levels[n];
  }

  static std::string faces_key(const SSet& x, const std::vector<SimplexRef>& fs) {
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
        fs.reserve(m + 1);
        for (int i = 0; i <= m; ++i) fs.push_back(x.face(r, i));
        (*by_faces[m])[faces_key(x, fs)].push_back(r);
      }
    }
    auto it = by_faces[m]->find(faces_key(x, req));
    return it == by_faces[m]->end() ? nullptr : &it->second;
  }
};

}  // namespace

std::vector<SimplicialMap> enumerate_maps(const SSet& s, const SSet& x,
                                          const MapSearchOptions& opt) {
  if (s.cap() > x.cap()) {
    // only a problem if s has cells above x's cap
    for (int m = x.cap() + 1; m <= s.cap(); ++m)
      if (s.cell_count(m) > 0) throw std::invalid_argument("cap too small");
  }
  std::vector<CellId> order;
  for (int m = 0; m <= s.cap(); ++m)
    for (CellId c : s.cells(m)) order.push_back(c);

  TargetIndex index(x);
  std::vector<SimplexRef> assign(s.total_cells());
  std::vector<SimplicialMap> results;

  std::function<void(size_t)> rec = [&](size_t k) {
    if (opt.limit >= 0 && static_cast<long long>(results.size()) >= opt.limit) return;
    if (k == order.size()) {
      results.push_back(SimplicialMap{s, x, assign});
      return;
    }
    const CellId c = order[k];
    const int m = s.dim_of(c);
    std::vector<SimplexRef> required;
    if (m >= 1) {
      required.reserve(m + 1);
      for (const auto& f : s.faces_of(c))
        required.push_back(x.under_word(assign[f.nd], f.word));
    }
    auto pin = opt.pinned.find(c);
    if (pin != opt.pinned.end()) {
      const SimplexRef& r = pin->second;
      if (x.ref_dim(r) != m) return;
      for (int i = 0; i < static_cast<int>(required.size()); ++i)
        if (x.face(r, i) != required[i]) return;
      assign[c] = r;
      rec(k + 1);
      return;
    }
    if (m == 0) {
      for (CellId v : x.cells(0)) {
        assign[c] = SimplexRef{v, {}};
        rec(k + 1);
      }
      return;
    }
    const auto* cands = index.candidates(m, required);
    if (!cands) return;
    for (const auto& r : *cands) {
      assign[c] = r;
      rec(k + 1);
    }
  };
  rec(0);
  return results;
}

std::optional<SimplicialMap> find_isomorphism(const SSet& x, const SSet& y) {
  for (int m = 0; m <= std::max(x.cap(), y.cap()); ++m) {
    const int cx = m <= x.cap() ? x.cell_count(m) : 0;
    const int cy = m <= y.cap() ? y.cell_count(m) : 0;
    if (cx != cy) return std::nullopt;
  }
  std::vector<CellId> order;
  for (int m = 0; m <= x.cap(); ++m)
    for (CellId c : x.cells(m)) order.push_back(c);
  std::vector<SimplexRef> assign(x.total_cells());
  std::set<CellId> used;
  std::optional<SimplicialMap> found;

  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == order.size()) {
      found = SimplicialMap{x, y, assign};
      return true;
    }
    const CellId c = order[k];
    const int m = x.dim_of(c);
    for (CellId t : y.cells(m)) {
      if (used.count(t)) continue;
      bool ok = true;
      if (m >= 1) {
        const auto& fs = x.faces_of(c);
        const auto& gs = y.faces_of(t);
        for (int i = 0; i <= m && ok; ++i)
          ok = y.under_word(assign[fs[i].nd], fs[i].word) == gs[i];
      }
      if (!ok) continue;
      assign[c] = SimplexRef{t, {}};
      used.insert(t);
      if (rec(k + 1)) return true;
      used.erase(t);
    }
    return false;
  };
  rec(0);
  if (found) found->require_simplicial();
  return found;
}

bool isomorphic(const SSet& x, const SSet& y) { return find_isomorphism(x, y).has_value(); }

}  // namespace nervelab
