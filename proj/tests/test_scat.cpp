#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nervelab/scat.hpp"

using namespace nervelab;

namespace {

// one-object category whose hom is the nerve of a bounded meet-semilattice,
// composed by pointwise minimum (unit = the top element)
SCat min_monoid_scat(int top, int cap) {
  auto nerve = std::make_shared<PosetNerveResult>(nerve_of_poset(chain_poset(top), cap));
  auto chains = std::make_shared<std::vector<std::vector<std::vector<int>>>>();
  // chain lookup per ref
  auto chain_of_ref = std::make_shared<std::unordered_map<std::string, std::vector<int>>>();
  for (const auto& [key, ref] : nerve->by_chain_key) {
    std::vector<int> chain;
    size_t pos = 0;
    while (pos < key.size()) {
      size_t next = key.find(',', pos);
      if (next == std::string::npos) next = key.size();
      chain.push_back(std::stoi(key.substr(pos, next - pos)));
      pos = next + 1;
    }
    (*chain_of_ref)[ref_key(ref)] = chain;
  }
  (void)chains;
  SCat::Data d;
  d.name = "min[" + std::to_string(top) + "]";
  d.cap = cap;
  d.objects = {"*"};
  d.make_hom = [nerve](const SCat&, int, int) { return nerve->sset; };
  const int top_elem = top;
  d.compose_fn = [nerve, chain_of_ref, top_elem](const SCat&, int, int, int, int k,
                                                 const SimplexRef& g,
                                                 const SimplexRef& f) {
    (void)top_elem;
    auto ca = chain_of_ref->at(ref_key(g));
    auto cb = chain_of_ref->at(ref_key(f));
    std::vector<int> cc(k + 1);
    for (int t = 0; t <= k; ++t) cc[t] = std::min(ca[t], cb[t]);
    return nerve->ref_of_chain(cc);
  };
  d.identity_locator = [nerve, top_elem](const SCat&, int) {
    return nerve->ref_of_chain({top_elem}).nd;
  };
  return SCat::create(std::move(d));
}

}  // namespace

TEST_CASE("category builders validate") {
  one_object_group_scat(cyclic_group(2), 3).validate();
  contractible_groupoid(2, 3).validate();
  terminal_scat(2).validate();
  abelian_nerve_scat(cyclic_group(2), 3).validate();
  min_monoid_scat(1, 3).validate();
  product_scat(one_object_group_scat(cyclic_group(2), 2),
               one_object_group_scat(cyclic_group(3), 2))
      .validate();
}

TEST_CASE("pi0 of a discrete category returns the category") {
  auto e2 = contractible_groupoid(2, 2);
  auto p = pi0_category(e2);
  CHECK(p.cat.objects.size() == 2);
  CHECK(p.cat.arrows.size() == 4);
  CHECK(p.cat.is_groupoid());

  // one object, hom the interval: connected, so one endomorphism
  auto mm = min_monoid_scat(1, 2);
  auto pm = pi0_category(mm);
  CHECK(pm.cat.arrows.size() == 1);
}

TEST_CASE("fibrancy") {
  CHECK(is_fibrant(contractible_groupoid(3, 3), 2).ok);
  CHECK(is_fibrant(abelian_nerve_scat(cyclic_group(2), 3), 2).ok);

  // a hom equal to a 0-horn is not Kan; witness reported
  auto h20 = horn(2, 0, 3);
  auto bad = arrow_hom_scat(h20.extracted.complex, 3, "hom=horn");
  auto rep = is_fibrant(bad, 2);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.pairs.empty());
  CHECK(rep.pairs[0].kan.failures[0].n == 2);
}

TEST_CASE("weak groupoids and fibrant groupoids") {
  CHECK(is_weak_groupoid(one_object_group_scat(cyclic_group(3), 3)));
  CHECK(is_fibrant_groupoid(one_object_group_scat(cyclic_group(3), 3), 2));
  CHECK(is_fibrant_groupoid(contractible_groupoid(3, 3), 2));

  // the one-arrow category is not a weak groupoid
  auto two = scat_from_category(poset_category(chain_poset(1)), 2, "[1]");
  CHECK_FALSE(is_weak_groupoid(two));
}

TEST_CASE("free categories on graphs") {
  // one 0-generator a -> b
  auto f = free_scat_on_graph({"a", "b"}, {{0, 1, 0, "u"}}, 2, 4, "free1");
  f.validate();
  CHECK(f.hom(0, 1).cell_count(0) == 1);
  CHECK(f.hom(1, 0).cell_count(0) == 0);
  CHECK(f.hom(0, 0).cell_count(0) == 1);  // identity only
  CHECK(f.hom(1, 1).cell_count(0) == 1);

  // two 2-generators in a row: Hom(0,2)_2 is all pairs of operator images
  auto sc2 = free_scat_on_graph({"0", "1", "2"},
                                {{0, 1, 2, "f1"}, {1, 2, 2, "f2"}}, 2, 4, "sc2");
  sc2.validate();
  CHECK(sc2.hom(0, 2).level_size(2) == 100);  // 10 monotone maps each factor
  // the word f2.f1 is present
  FreeWord w{FreeAtom{0, SimplexRef{sc2.edges()[0].shape.cells(2)[0], {}}},
             FreeAtom{1, SimplexRef{sc2.edges()[1].shape.cells(2)[0], {}}}};
  CHECK_NOTHROW(sc2.ref_of_word(0, 2, 2, w));

  // mixed degrees reproduce the expected hom cardinalities
  auto wb2 = free_scat_on_graph({"0", "1", "2"},
                                {{0, 1, 1, "g1"}, {1, 2, 0, "g2"}}, 2, 4, "wb2");
  wb2.validate();
  CHECK(wb2.hom(0, 2).level_size(0) == 2);
  CHECK(wb2.hom(0, 2).level_size(1) == 3);
  CHECK(wb2.hom(0, 2).level_size(2) == 4);
}

TEST_CASE("pi0 of a free category on 0-generators is the free category") {
  auto f = free_scat_on_graph({"0", "1", "2"}, {{0, 1, 0, "a"}, {1, 2, 0, "b"}}, 2, 4,
                              "path");
  auto p = pi0_category(f);
  CHECK(p.cat.arrow_count(0, 1) == 1);
  CHECK(p.cat.arrow_count(1, 2) == 1);
  CHECK(p.cat.arrow_count(0, 2) == 1);  // the word b.a
  CHECK(p.cat.arrow_count(2, 0) == 0);
  CHECK(p.cat.arrow_count(0, 0) == 1);
}

TEST_CASE("functor enumeration") {
  auto pt = free_scat({"x"}, {}, 2, 2, "free-point");
  auto e3 = contractible_groupoid(3, 2);
  CHECK(enumerate_functors(pt, e3).size() == 3);

  // a single 0-arrow source enumerates the 0-arrows of the target
  auto arrow = free_scat_on_graph({"a", "b"}, {{0, 1, 0, "u"}}, 2, 4, "arrow");
  auto bz2 = one_object_group_scat(cyclic_group(2), 2);
  CHECK(enumerate_functors(arrow, bz2).size() == 2);
  CHECK(enumerate_functors(arrow, e3).size() == 9);

  // determinism
  auto a1 = enumerate_functors(arrow, e3);
  auto a2 = enumerate_functors(arrow, e3);
  REQUIRE(a1.size() == a2.size());
  for (size_t k = 0; k < a1.size(); ++k) CHECK(functor_equal(a1[k], a2[k]));

  // validation of enumerated functors
  FunctorSearchOptions opt;
  opt.validate_results = true;
  CHECK_NOTHROW(enumerate_functors(arrow, bz2, opt));
}

TEST_CASE("explicit functors") {
  auto bz4 = one_object_group_scat(cyclic_group(4), 3);
  auto bz2 = one_object_group_scat(cyclic_group(2), 3);
  auto f = group_hom_functor(bz4, bz2, cyclic_group(4), cyclic_group(2), {0, 1, 0, 1});
  CHECK_NOTHROW(f.validate());
  CHECK_THROWS_AS(group_hom_functor(bz4, bz2, cyclic_group(4), cyclic_group(2),
                                    {0, 0, 1, 0}),
                  std::invalid_argument);

  auto pt = terminal_scat(3);
  CHECK_NOTHROW(collapse_to_point(bz4, pt).validate());
}

TEST_CASE("weak fibrations") {
  auto bz2 = one_object_group_scat(cyclic_group(2), 3);
  auto id = group_hom_functor(bz2, bz2, cyclic_group(2), cyclic_group(2), {0, 1});
  CHECK(is_weak_fibration(id, 2).ok);

  // surjective group quotient
  auto bz4 = one_object_group_scat(cyclic_group(4), 3);
  auto q = group_hom_functor(bz4, bz2, cyclic_group(4), cyclic_group(2), {0, 1, 0, 1});
  CHECK(is_weak_fibration(q, 2).ok);

  // inclusion of one object into the contractible groupoid on two objects:
  // the equivalence to the missing object has no lift
  auto e2 = contractible_groupoid(2, 3);
  auto pt1 = terminal_scat(3);
  std::vector<SimplicialMap> maps{
      map_vertices_by_label(pt1.hom(0, 0), e2.hom(0, 0), {{"g0", "u00"}})};
  auto incl = functor_from_hom_maps(pt1, e2, {0}, std::move(maps));
  auto rep = is_weak_fibration(incl, 2);
  CHECK_FALSE(rep.ok);
  CHECK(rep.hom_fibrations_ok);
  CHECK_FALSE(rep.lifting_ok);
  CHECK(rep.lifting_witness.find("u01") != std::string::npos);
}

TEST_CASE("strong equivalence certificates") {
  auto bz2 = one_object_group_scat(cyclic_group(2), 3);
  auto id = group_hom_functor(bz2, bz2, cyclic_group(2), cyclic_group(2), {0, 1});
  auto cert = strong_equivalence_certificate(id, 2);
  CHECK(cert.certified());
  CHECK(cert.pairs_pi1_checked > 0);

  // inclusion of BZ/2 into the doubled groupoid (two objects, homs Z/2)
  auto doubled = product_scat(contractible_groupoid(2, 3), bz2);
  std::map<std::string, std::string> im{{"g0", "(u00|g0)"}, {"g1", "(u00|g1)"}};
  auto incl = functor_from_hom_maps(
      bz2, doubled, {0},
      {map_vertices_by_label(bz2.hom(0, 0), doubled.hom(0, 0), im)});
  auto cert2 = strong_equivalence_certificate(incl, 2);
  CHECK(cert2.certified());

  // collapsing the Z/2 endomorphisms to a point fails the hom checks
  auto pt = terminal_scat(3);
  auto col = collapse_to_point(bz2, pt);
  auto cert3 = strong_equivalence_certificate(col, 2);
  CHECK_FALSE(cert3.certified());
  CHECK_FALSE(cert3.pi0_fully_faithful);
}

TEST_CASE("free category associativity and naturality hold exhaustively") {
  auto f = free_scat_on_graph({"0", "1", "2"}, {{0, 1, 1, "a"}, {1, 2, 1, "b"}}, 2, 4,
                              "chk");
  f.validate(2);
}
