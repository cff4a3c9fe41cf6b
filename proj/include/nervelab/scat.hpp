#pragma once

// Simplicially enriched categories with finite object sets and truncated
// simplicial hom sets. Homs are materialized lazily per ordered pair;
// free categories additionally carry a symbolic word calculus so that
// large homs never need full enumeration.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nervelab/sset.hpp"

namespace nervelab {

class SCat;

// ---------------------------------------------------------------------------
// Free categories on simplicial graphs

struct FreeEdge {
  int src = 0, tgt = 0;
  SSet shape;                          // the simplicial set of generators
  std::optional<CellId> unit_vertex;   // atoms over this class act as units
  std::string name;
};

struct FreeAtom {
  int edge = -1;
  SimplexRef cell;  // simplex of the edge's shape
  auto operator<=>(const FreeAtom&) const = default;
};

// composable words, source-to-target order; empty = identity
using FreeWord = std::vector<FreeAtom>;

std::string word_key(const FreeWord& w);

// A simplicial operator applied to a generator cell: faces first (in list
// order), then the degeneracy word (innermost-first).
struct CellOp {
  std::vector<int> downs;
  DegWord ups;
};

struct Factor {
  CellOp op;
  int gen = -1;
};

struct GenCell {
  int src = 0, tgt = 0, dim = 0;
  std::string name;
  int edge = -1;     // free categories: which edge
  CellId cell = -1;  // nd cell in the edge shape (free) or in hom(src,tgt)
};

struct Presentation {
  std::vector<GenCell> gens;
  // per gen, per face index: decomposition of that face into factors
  std::vector<std::vector<std::vector<Factor>>> face_decomp;
  std::function<std::vector<Factor>(const SCat&, int x, int y, const SimplexRef&)>
      decompose;
};

// ---------------------------------------------------------------------------
// The category type

class SCat {
 public:
  struct Data {
    std::string name;
    int cap = 0;
    std::vector<std::string> objects;
    std::function<SSet(const SCat&, int, int)> make_hom;
    std::function<SimplexRef(const SCat&, int x, int y, int z, int k,
                             const SimplexRef& g, const SimplexRef& f)>
        compose_fn;
    std::function<CellId(const SCat&, int x)> identity_locator;
    std::optional<Presentation> pres;

    // free-category payload
    std::vector<FreeEdge> edges;
    int word_bound = 0;
    bool is_free = false;

    mutable std::vector<std::optional<SSet>> homs;
    mutable std::vector<CellId> identity_cache;

    // free categories: per-pair word tables, built with the hom
    struct FreeHomTable {
      std::vector<std::vector<FreeWord>> words;  // per level
      std::vector<std::unordered_map<std::string, long long>> index;  // per level
      std::vector<std::vector<SimplexRef>> refs;  // per level, word position
      std::unordered_map<CellId, FreeWord> word_of_nd;
    };
    mutable std::vector<std::optional<FreeHomTable>> free_tables;
  };

  SCat() = default;
  explicit SCat(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  static SCat create(Data d);

  bool valid_handle() const { return d_ != nullptr; }
  const std::string& name() const { return d_->name; }
  int cap() const { return d_->cap; }
  int object_count() const { return static_cast<int>(d_->objects.size()); }
  const std::string& object_name(int x) const { return d_->objects.at(x); }

  const SSet& hom(int x, int y) const;
  SimplexRef compose(int x, int y, int z, int k, const SimplexRef& g,
                     const SimplexRef& f) const;
  CellId identity_vertex(int x) const;
  SimplexRef identity_ref(int x, int k) const;

  bool has_presentation() const { return d_->pres.has_value(); }
  const Presentation& presentation() const;
  bool is_free() const { return d_->is_free; }
  const std::vector<FreeEdge>& edges() const { return d_->edges; }

  // free categories: words of a level, ref <-> word translation
  const std::vector<FreeWord>& level_words(int x, int y, int k) const;
  SimplexRef ref_of_word(int x, int y, int k, const FreeWord& w) const;
  FreeWord word_of_ref(int x, int y, const SimplexRef& r) const;

  // checks composition tables: units, associativity, simplicial naturality;
  // exhaustive through degree max_exhaustive, first samples above
  void validate(int max_exhaustive = 2, long long sample_limit = 2000) const;

  bool same_object(const SCat& o) const { return d_ == o.d_; }
  const std::shared_ptr<Data>& data() const { return d_; }

 private:
  std::shared_ptr<Data> d_;
};

// free simplicial category on a simplicial graph; shapes of degree-m
// generators are standard m-simplices
SCat free_scat(const std::vector<std::string>& objects,
               const std::vector<FreeEdge>& edges, int cap, int word_bound,
               const std::string& name);

struct GraphGenerator {
  int src, tgt, degree;
  std::string name;
};
SCat free_scat_on_graph(const std::vector<std::string>& objects,
                        const std::vector<GraphGenerator>& gens, int cap,
                        int word_bound, const std::string& name);

// symbolic word calculus (free categories)
FreeWord word_face(const SCat& c, int x, int y, const FreeWord& w, int i);
FreeWord word_degeneracy(const SCat& c, const FreeWord& w, int i);
int word_dim(const SCat& c, const FreeWord& w);

// ---------------------------------------------------------------------------
// Functors

struct SFunctor {
  SCat source, target;
  std::vector<int> ob;
  // presented sources carry generator images; arbitrary sources carry one
  // simplicial map per ordered object pair (row-major)
  std::vector<SimplexRef> gen_image;
  std::vector<SimplicialMap> explicit_maps;

  bool is_explicit() const { return !explicit_maps.empty(); }
  SimplexRef eval(int x, int y, const SimplexRef& r) const;
  SimplexRef eval_word(int x, int y, const FreeWord& w) const;
  SimplexRef eval_factors(int x, int y, int k, const std::vector<Factor>& fs) const;
  SimplicialMap hom_map(int x, int y) const;
  std::string key() const;
  void validate() const;  // identities, composition, simplicial naturality
};

bool functor_equal(const SFunctor& a, const SFunctor& b);
SFunctor identity_functor(const SCat& c);
SFunctor compose_functors(const SFunctor& f, const SFunctor& g);  // g after f

// functor from explicit per-pair assignments of nondegenerate hom cells;
// validates naturality and composition preservation
SFunctor functor_from_hom_maps(const SCat& a, const SCat& c, std::vector<int> ob,
                               std::vector<SimplicialMap> maps);
// the functor of one-object categories induced by a group homomorphism
SFunctor group_hom_functor(const SCat& bg, const SCat& bh, const GroupTable& g,
                           const GroupTable& h, const std::vector<int>& hom);
// the unique functor to the terminal category
SFunctor collapse_to_point(const SCat& c, const SCat& pt);
// map of discrete simplicial sets given by vertex labels
SimplicialMap map_vertices_by_label(
    const SSet& src, const SSet& dst,
    const std::map<std::string, std::string>& images);

struct FunctorSearchOptions {
  std::map<int, int> pinned_objects;
  std::map<int, SimplexRef> pinned_gens;
  long long limit = -1;
  bool validate_results = false;
};

std::vector<SFunctor> enumerate_functors(const SCat& a, const SCat& c,
                                         const FunctorSearchOptions& opt = {});

// ---------------------------------------------------------------------------
// pi0 and certificates

struct FiniteCategoryView {
  std::vector<std::string> objects;
  struct Arrow {
    int src, tgt;
    std::string name;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::vector<int>>> pair_arrows;  // [x][y]
  std::vector<int> identity;                               // per object
  std::vector<std::vector<int>> compose_table;  // [g][f] = g after f, or -1

  int arrow_count(int x, int y) const;
  bool is_groupoid() const;
  void validate() const;
};

struct Pi0Category {
  FiniteCategoryView cat;
  // per pair (x*n+y): vertex cell id -> arrow id
  std::vector<std::map<CellId, int>> class_of_vertex;
  int arrow_of(const SCat& c, int x, int y, const SimplexRef& vertex) const;
};

Pi0Category pi0_category(const SCat& c);

struct PairReport {
  int x = 0, y = 0;
  KanReport kan;
};

struct FibrancyReport {
  bool ok = true;
  std::vector<PairReport> pairs;  // failing pairs recorded with witnesses
};

FibrancyReport is_fibrant(const SCat& c, int up_to);
bool is_weak_groupoid(const SCat& c);
bool is_fibrant_groupoid(const SCat& c, int up_to);

struct WeakFibrationReport {
  bool ok = true;
  bool hom_fibrations_ok = true;
  bool lifting_ok = true;
  std::vector<PairReport> failing_pairs;
  std::string lifting_witness;  // description of an unliftable equivalence
};

WeakFibrationReport is_weak_fibration(const SFunctor& f, int up_to);

struct EquivalenceCertificate {
  bool pi0_essentially_surjective = false;
  bool pi0_fully_faithful = false;
  bool hom_pi0_bijective = false;
  bool hom_pi1_isomorphic = false;  // where both homs certified Kan
  int pairs_pi1_checked = 0;
  bool certified() const {
    return pi0_essentially_surjective && pi0_fully_faithful && hom_pi0_bijective &&
           hom_pi1_isomorphic;
  }
  std::vector<std::string> notes;
};

EquivalenceCertificate strong_equivalence_certificate(const SFunctor& f, int up_to);

struct RlpReport {
  bool ok = true;
  long long squares_checked = 0;
  // witness square on failure
  std::optional<SFunctor> witness_top;   // A -> C
  std::optional<SFunctor> witness_bottom;  // B -> D
};

RlpReport rlp_scat(const SFunctor& j, const SFunctor& f);

// ---------------------------------------------------------------------------
// Builders used across tests, scenarios and the CLI

SCat scat_from_category(const FiniteCategoryView& cat, int cap,
                        const std::string& name);
SCat one_object_group_scat(const GroupTable& g, int cap);
SCat contractible_groupoid(int objects, int cap);
SCat terminal_scat(int cap);
// one-object category whose hom is the classifying nerve of an abelian
// group, multiplied levelwise
SCat abelian_nerve_scat(const GroupTable& g, int cap);
SCat product_scat(const SCat& a, const SCat& b);
// one pair of objects x -> y with the given hom simplicial set and no
// nontrivial compositions
SCat arrow_hom_scat(const SSet& hom, int cap, const std::string& name);

FiniteCategoryView group_category(const GroupTable& g);
FiniteCategoryView poset_category(const Poset& p);

}  // namespace nervelab
