#pragma once

// Truncated simplicial sets in nondegenerate-simplex normal form:
// only nondegenerate cells are stored, every simplex is addressed as a
// degeneracy word applied to a nondegenerate cell (Eilenberg-Zilber form).

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nervelab {

using CellId = int;

// Strictly increasing index list [i1 < ... < ik] encoding the composite
// degeneracy operator s_{ik} ... s_{i1} (outermost operator has the
// largest index).
struct DegWord {
  std::vector<int> idx;

  int size() const { return static_cast<int>(idx.size()); }
  bool empty() const { return idx.empty(); }
  auto operator<=>(const DegWord&) const = default;
};

// Normal form of s_i applied on the outside of an existing normal word.
DegWord word_push(const DegWord& w, int i);

struct SimplexRef {
  CellId nd = -1;
  DegWord word;

  auto operator<=>(const SimplexRef&) const = default;
};

std::string ref_key(const SimplexRef& r);

class SSet {
 public:
  struct Data {
    int cap = 0;
    std::vector<std::vector<CellId>> cells;          // per dimension
    std::vector<int> dim_of;                         // per cell id
    std::vector<std::vector<SimplexRef>> faces_of;   // per cell id (dim>=1)
    std::vector<std::string> label_of;               // per cell id
  };

  SSet() = default;
  explicit SSet(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  bool valid_handle() const { return d_ != nullptr; }
  int cap() const { return d_->cap; }
  const std::vector<CellId>& cells(int dim) const;
  int cell_count(int dim) const;
  int total_cells() const { return static_cast<int>(d_->dim_of.size()); }
  int dim_of(CellId c) const { return d_->dim_of.at(c); }
  const std::vector<SimplexRef>& faces_of(CellId c) const;
  const std::string& label(CellId c) const { return d_->label_of.at(c); }

  int ref_dim(const SimplexRef& r) const { return dim_of(r.nd) + r.word.size(); }

  // d_i and s_i on normal-form references.
  SimplexRef face(const SimplexRef& r, int i) const;
  SimplexRef degeneracy(const SimplexRef& r, int i) const;
  // s_W(r) for a normal word W (applied innermost-first).
  SimplexRef under_word(const SimplexRef& r, const DegWord& w) const;

  // All n-simplices (degenerate included), canonical order:
  // nd cells by creation order, words lexicographic.
  std::vector<SimplexRef> level(int n) const;
  long long level_size(int n) const;

  // Human-readable "label[word]" form.
  std::string ref_repr(const SimplexRef& r) const;

  // Checks the simplicial identities d_i d_j = d_{j-1} d_i on all stored
  // data; throws std::logic_error on violation.
  void validate() const;

  bool same_object(const SSet& o) const { return d_ == o.d_; }
  const std::shared_ptr<const Data>& data() const { return d_; }

 private:
  std::shared_ptr<const Data> d_;
};

class SSetBuilder {
 public:
  explicit SSetBuilder(int cap);
  CellId add_cell(int dim, std::vector<SimplexRef> faces, std::string label);
  int count(int dim) const { return static_cast<int>(data_->cells[dim].size()); }
  SSet build();

 private:
  std::shared_ptr<SSet::Data> data_;
};

// ---------------------------------------------------------------------------
// Maps

struct SimplicialMap {
  SSet source;
  SSet target;
  std::vector<SimplexRef> assign;  // per source nd cell id

  SimplexRef apply(const SimplexRef& r) const;
  bool is_simplicial() const;           // commutes with all face maps
  void require_simplicial() const;      // throws if not
  SimplicialMap then(const SimplicialMap& g) const;  // g after this
  auto operator<=>(const SimplicialMap&) const = delete;
};

bool map_equal(const SimplicialMap& a, const SimplicialMap& b);
SimplicialMap identity_map(const SSet& x);
SimplicialMap constant_map(const SSet& s, const SSet& x, CellId vertex);

// ---------------------------------------------------------------------------
// Subcomplexes

struct Subcomplex {
  SSet parent;
  std::vector<std::set<CellId>> members;  // per dimension

  bool contains(CellId c) const;
  bool contains_ref(const SimplexRef& r) const { return contains(r.nd); }
  void require_closed() const;  // faces of members are members
};

struct SubcomplexResult {
  SSet complex;
  SimplicialMap inclusion;            // complex -> parent
  std::vector<CellId> old_of_new;     // new nd cell id -> parent cell id
  std::vector<CellId> new_of_old;     // parent cell id -> new id or -1
};

Subcomplex full_subcomplex(const SSet& x);
Subcomplex span_subcomplex(const SSet& x, const std::vector<CellId>& seed);
SubcomplexResult extract(const Subcomplex& s);

// union / difference at the member level (same parent)
Subcomplex subcomplex_union(const Subcomplex& a, const Subcomplex& b);

// ---------------------------------------------------------------------------
// Generic levelwise construction. The caller enumerates all n-simplices of
// the would-be simplicial set per level (deduplicated, in a deterministic
// order) and provides face/degeneracy maps as index functions; the builder
// classifies nondegenerate elements and produces the normal-form structure.

struct LevelwiseInput {
  int cap = 0;
  std::vector<long long> sizes;  // per level 0..cap
  std::function<long long(int n, long long e, int i)> face;
  std::function<long long(int n, long long e, int i)> degen;
  std::function<std::string(int n, long long e)> label;  // may be null
};

struct LevelwiseResult {
  SSet sset;
  std::vector<std::vector<SimplexRef>> ref_of;  // [n][element] -> normal form
  std::vector<std::vector<long long>> elem_of;  // per dim: nd cell order -> element
};

LevelwiseResult build_levelwise(const LevelwiseInput& in);

// ---------------------------------------------------------------------------
// Standard shapes

SSet standard_simplex(int n, int cap);
// vertex subsets S of {0..n} name the cells of standard_simplex; lookup:
CellId simplex_cell(const SSet& dn, const std::vector<int>& verts);
std::vector<int> simplex_cell_verts(const SSet& dn, CellId c);

struct ShapeInStandard {
  SSet ambient;       // the standard simplex Delta^n
  Subcomplex sub;
  SubcomplexResult extracted;
};

ShapeInStandard boundary_subcomplex(int n, int cap);
ShapeInStandard horn(int n, int i, int cap);

struct Poset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(names.size()); }
  void validate() const;  // reflexive, antisymmetric, transitive
};

Poset chain_poset(int n);                         // 0 < 1 < ... < n
Poset product_poset(const Poset& p, const Poset& q);
Poset antichain(int n);

struct PosetNerveResult {
  SSet sset;
  // chains of poset element indices <-> cells
  std::vector<std::vector<std::vector<int>>> chain_of;  // per dim, cell order
  SimplexRef ref_of_chain(const std::vector<int>& chain) const;
  std::unordered_map<std::string, SimplexRef> by_chain_key;
};

PosetNerveResult nerve_of_poset(const Poset& p, int cap);

// Cubes: nerve of {0,1}^X with 0 < 1. Vertices are bitmasks over the
// coordinate list (bit t = coordinate coords[t]).
struct Cube {
  std::vector<int> coords;
  SSet nerve;
  std::vector<CellId> vertex_of_mask;  // 2^|X| entries
  std::vector<std::vector<std::vector<unsigned>>> mask_chain_of;  // per dim, cell order
  int arity() const { return static_cast<int>(coords.size()); }
  CellId chain_cell(const std::vector<unsigned>& chain) const;
};

Cube cube(const std::vector<int>& coords, int cap);
Subcomplex cube_face(const Cube& c, int coord, int eps);  // { f_coord = eps }
Subcomplex cube_boundary_sub(const Cube& c);
Subcomplex cube_horn_sub(const Cube& c, int coord, int eps);
SubcomplexResult cube_boundary(const Cube& c);
SubcomplexResult cube_horn(const Cube& c, int coord, int eps);

// Collapse a nonempty subcomplex to a single vertex. The basepoint is the
// class of A (vertex id 0 of the result).
struct QuotientResult {
  SSet sset;
  SimplicialMap projection;  // X -> X/A
  CellId basepoint;
};
QuotientResult quotient_collapse(const SSet& x, const Subcomplex& a);

// Levelwise product; cap must be <= every factor's cap.
struct ProductResult {
  SSet sset;
  std::vector<SSet> factors;
  // per dim, nd cell order -> component refs
  std::vector<std::vector<std::vector<SimplexRef>>> components_of;
  SimplexRef locate(int n, const std::vector<SimplexRef>& comps) const;
  std::vector<std::unordered_map<std::string, SimplexRef>> by_key;  // per level
};

ProductResult product(const std::vector<SSet>& factors, int cap);
ProductResult product(const SSet& x, const SSet& y, int cap);

// Pointed simplicial sets and smash products.
struct Pointed {
  SSet space;
  CellId basepoint;
};

Pointed simplicial_circle(int cap);              // Delta^1 / boundary
Pointed smash(const Pointed& x, const Pointed& y, int cap);
Pointed smash_power_circle(int k, int cap);      // k-fold smash of circles; k=0 -> S^0
Pointed pointed_interval(int cap);               // Delta^1 marked at vertex 1

// ---------------------------------------------------------------------------
// Map enumeration

struct MapSearchOptions {
  // pinned[c] fixes the image of source nd cell c
  std::map<CellId, SimplexRef> pinned;
  long long limit = -1;  // stop after this many (-1: all)
};

std::vector<SimplicialMap> enumerate_maps(const SSet& s, const SSet& x,
                                          const MapSearchOptions& opt = {});

std::optional<SimplicialMap> find_isomorphism(const SSet& x, const SSet& y);
bool isomorphic(const SSet& x, const SSet& y);

// ---------------------------------------------------------------------------
// Kan conditions

struct HornWitness {
  int n = -1;
  int i = -1;
  std::vector<std::string> horn_assignment;   // per top face j != i: image repr
  std::string base_simplex;                   // fibration case: base n-simplex
};

struct KanOptions {
  int up_to = 1;
  bool inner_only = false;
  std::optional<std::pair<int, int>> single;  // check only this (n, i)
};

struct KanReport {
  bool ok = true;
  int up_to = 0;
  bool inner_only = false;
  long long horns_checked = 0;
  std::vector<HornWitness> failures;  // canonical order; first is the witness
};

KanReport is_kan(const SSet& x, const KanOptions& opt);
KanReport is_kan(const SSet& x, int up_to);
KanReport is_kan_fibration(const SimplicialMap& p, const KanOptions& opt);
KanReport is_kan_fibration(const SimplicialMap& p, int up_to);

// ---------------------------------------------------------------------------
// pi0 and the fundamental group

struct Pi0 {
  int count = 0;
  std::vector<int> component_of_vertex;  // indexed by vertex cell id position in cells(0)
  std::vector<CellId> representative;    // per component, least vertex id
  int component_of(const SSet& x, CellId vertex) const;
};

Pi0 pi0(const SSet& x);

// Table-based fundamental group of a Kan simplicial set at a vertex.
struct FundamentalGroup {
  int order = 0;
  int unit = 0;
  std::vector<std::vector<int>> mult;     // class x class
  std::vector<SimplexRef> loop_rep;       // per class
  std::vector<SimplexRef> loops;          // all loops at the basepoint
  std::vector<int> class_of_loop;

  int inverse(int a) const;
  int element_order(int a) const;
};

// Requires is_kan(x, 2) unless a certificate is supplied; throws
// std::invalid_argument otherwise.
FundamentalGroup fundamental_group(const SSet& x, CellId basepoint,
                                   const KanReport* kan_certificate = nullptr);

// Edge-path presentation (any simplicial set): generators are the
// nondegenerate edges, one relation per nondegenerate 2-cell.
struct EdgeLoopPresentation {
  std::vector<CellId> generators;
  struct Relation {
    SimplexRef d0, d1, d2;  // d1 = d0 * d2
  };
  std::vector<Relation> relations;
};

EdgeLoopPresentation edge_loop_presentation(const SSet& x);

// Group-with-table utilities used by tests, the battery and pi1 comparison.
struct GroupTable {
  std::string name;
  int order = 0;
  int unit = 0;
  std::vector<std::vector<int>> mult;

  int inverse(int a) const;
  void validate() const;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group_3();
GroupTable product_group(const GroupTable& a, const GroupTable& b);
bool groups_isomorphic(const GroupTable& a, const GroupTable& b);
GroupTable group_of(const FundamentalGroup& g, const std::string& name);

// Classifying nerve of a finite group, truncated at cap. n-simplices are
// tuples of n group elements with the usual nerve faces.
struct GroupNerve {
  GroupTable group;
  SSet nerve;
  std::vector<std::vector<SimplexRef>> ref_of;  // [n][tuple index, mixed radix]

  SimplexRef ref_of_tuple(const std::vector<int>& tuple) const;
};

GroupNerve group_nerve(const GroupTable& g, int cap);
SSet classifying_nerve(const GroupTable& g, int cap);

// The simplicial map of classifying nerves induced by a homomorphism
// (hom[a] = image of element a; checked to be a homomorphism).
SimplicialMap nerve_map_of_hom(const GroupNerve& a, const GroupNerve& b,
                               const std::vector<int>& hom);

// Induced map on fundamental groups; basepoints must correspond.
// Returns per-class images; throws if not a homomorphism.
std::vector<int> pi1_induced(const FundamentalGroup& gx, const FundamentalGroup& gy,
                             const SimplicialMap& f);
bool pi1_isomorphism(const FundamentalGroup& gx, const FundamentalGroup& gy,
                     const SimplicialMap& f);

// ---------------------------------------------------------------------------
// Shared helpers

std::vector<std::vector<int>> increasing_words(int len, int min_dim);
std::string join_ints(const std::vector<int>& v, char sep = ',');

}  // namespace nervelab
