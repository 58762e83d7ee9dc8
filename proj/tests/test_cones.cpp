#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "exhall/cones.hpp"
#include "exhall/format.hpp"
#include "exhall/verify.hpp"

using namespace exhall;

namespace {

const Catalog& a2() {
  static const Catalog cat = build_catalog(parse_quiver(kQuiverA2));
  return cat;
}

const Catalog& a3() {
  static const Catalog cat = build_catalog(parse_quiver(kQuiverA3));
  return cat;
}

const Catalog& disjoint() {
  static const Catalog cat = build_catalog(parse_quiver(kQuiverDisjointA2));
  return cat;
}

const Catalog& d4() {
  static const Catalog cat = build_catalog(parse_quiver(
      "vertices: [1, 2, 3, 4]\narrows: [[1, 2], [3, 2], [4, 2]]\n"));
  return cat;
}

std::vector<Rat> rat_vec(const std::vector<int>& v) {
  std::vector<Rat> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("K0 presentations of the A_3 structures") {
  const Catalog& cat = a3();

  const K0Presentation add = k0_quotient(cat, structure_add(cat.ar));
  CHECK(add.ambient_rank == 6);
  CHECK(add.relations.empty());
  CHECK(add.rank == 6);

  const K0Presentation e1 = k0_quotient(cat, parse_structure(cat.ar, "1"));
  CHECK(e1.relations == std::vector<KClass>{{1, -1, -1, 1, 0, 0}});
  CHECK(e1.invariant_factors == std::vector<long long>{1});
  CHECK(e1.rank == 5);

  const K0Presentation e12 = k0_quotient(cat, parse_structure(cat.ar, "1,2"));
  CHECK(e12.relations ==
        std::vector<KClass>{{1, -1, -1, 1, 0, 0}, {0, 1, 0, -1, 1, 0}});
  CHECK(e12.invariant_factors == std::vector<long long>{1, 1});
  CHECK(e12.rank == 4);

  const K0Presentation max = k0_quotient(cat, structure_max(cat.ar));
  CHECK(max.relations.size() == 3);
  CHECK(max.rank == 3);
}

TEST_CASE("K0 rank drops by one per admitted mesh") {
  for (const Catalog* cat : {&a2(), &a3(), &disjoint(), &d4()})
    for (const ExactStructure& e : enumerate_structures(cat->ar)) {
      const K0Presentation pres = k0_quotient(*cat, e);
      CHECK(pres.rank == cat->n - e.size());
      for (long long f : pres.invariant_factors) CHECK(f == 1);  // always a free quotient
    }
}

TEST_CASE("relative conflation cones") {
  const Catalog& cat = a3();
  const ExactStructure e1 = parse_structure(cat.ar, "1");
  const ExactStructure e12 = parse_structure(cat.ar, "1,2");

  CHECK(cone_C(cat, e12, e1).generators == std::vector<KClass>{{0, 1, 0, -1, 1, 0}});
  CHECK(cone_C(cat, e12, e12).generators.empty());
  CHECK(cone_C(cat, structure_max(cat.ar), structure_add(cat.ar)).generators ==
        std::vector<KClass>{{1, -1, -1, 1, 0, 0}, {0, 1, 0, -1, 1, 0}, {0, 0, 1, -1, 0, 1}});

  CHECK_THROWS_AS(cone_C(cat, e1, e12), InputError);
}

TEST_CASE("cones are simplicial for every structure") {
  // cone_C validates linear independence internally and would throw
  for (const Catalog* cat : {&a2(), &a3(), &disjoint(), &d4()})
    for (const ExactStructure& e : enumerate_structures(cat->ar)) {
      const ConeC cone = cone_C(*cat, e, structure_add(cat->ar));
      CHECK(int(cone.generators.size()) == e.size());
    }
}

TEST_CASE("degree cone H-description and membership") {
  const Catalog& cat = a3();
  const ExactStructure e1 = parse_structure(cat.ar, "1");
  const ExactStructure e12 = parse_structure(cat.ar, "1,2");

  const ConeD cone = cone_D(cat, e12, e1);
  CHECK(cone.ambient_dim == 6);
  CHECK(cone.zero == std::vector<KClass>{{1, -1, -1, 1, 0, 0}});
  CHECK(cone.strict == std::vector<KClass>{{0, 1, 0, -1, 1, 0}});

  // dim Hom(S_3, -) lies in the relative cone of (E_12, E_1)
  CHECK(membership(rat_vec({0, 0, 0, 0, 1, 0}), cone));
  // ... but the zero vector does not (it is not strict anywhere)
  CHECK_FALSE(membership(rat_vec({0, 0, 0, 0, 0, 0}), cone));
  // the zero vector is the apex of the cone of a pair with e' = e
  CHECK(membership(rat_vec({0, 0, 0, 0, 0, 0}), cone_D(cat, e12, e12)));

  CHECK_THROWS_AS(membership(rat_vec({1, 2, 3}), cone), InputError);
  CHECK_THROWS_AS(cone_D(cat, e1, e12), InputError);
}

TEST_CASE("valuation vectors") {
  CHECK(valuation_vector(Valuation{{0, 1, 2}}) == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("closure and linearity dimensions") {
  const Catalog& cat = a3();
  const ExactStructure e1 = parse_structure(cat.ar, "1");
  const ExactStructure e12 = parse_structure(cat.ar, "1,2");

  CHECK(closure_dimension(cat, e12, e1) == 5);
  CHECK(linearity_dimension(cat, e12, e1) == 4);

  CHECK(closure_dimension(cat, structure_max(cat.ar), structure_add(cat.ar)) == 6);
  CHECK(linearity_dimension(cat, structure_max(cat.ar), structure_add(cat.ar)) == 3);

  // for e' = e the cone is the full equality subspace
  CHECK(closure_dimension(cat, e12, e12) == 4);
  CHECK(linearity_dimension(cat, e12, e12) == 4);
}

TEST_CASE("face lattices") {
  const Catalog& cat3 = a3();
  // the faces of the full simplicial cone are exactly the exact structures
  CHECK(face_lattice(cat3, structure_max(cat3.ar)) == enumerate_structures(cat3.ar));

  const std::vector<ExactStructure> sub = face_lattice(cat3, parse_structure(cat3.ar, "1,2"));
  REQUIRE(sub.size() == 4);
  CHECK(sub[0] == structure_add(cat3.ar));
  CHECK(sub[1] == parse_structure(cat3.ar, "1"));
  CHECK(sub[2] == parse_structure(cat3.ar, "2"));
  CHECK(sub[3] == parse_structure(cat3.ar, "1,2"));

  CHECK(face_lattice(a2(), structure_max(a2().ar)).size() == 2);
}

TEST_CASE("cone membership classifies valuations") {
  const Catalog& cat = a3();
  const std::vector<ExactStructure> all = enumerate_structures(cat.ar);

  // walk every weight vector in {0,1,2}^6
  Valuation w = zero_valuation(cat);
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    for (int i = 0; i < 6; ++i, rest /= 3) w.w[i] = rest % 3;
    const std::vector<Rat> d = valuation_vector(w);

    for (const ExactStructure& e : all) {
      const ValuationClass cls = classify_valuation(cat, w, e);
      int member_of = 0;
      for (const ExactStructure& ep : all) {
        if (!structure_leq(ep, e)) continue;
        const bool in_cone = membership(d, cone_D(cat, e, ep));
        const bool characteristic =
            cls.kind == ValuationKind::Valuation && cls.characteristic_for == ep;
        if (in_cone != characteristic) {
          CAPTURE(code, structure_name(e), structure_name(ep));
          REQUIRE(in_cone == characteristic);
        }
        member_of += in_cone;
      }
      // the relative cones partition the valuations of e
      CHECK(member_of == (cls.kind == ValuationKind::Valuation ? 1 : 0));
    }
  }
}

TEST_CASE("strict feasibility oracle") {
  const Catalog& cat = a3();
  const std::vector<ExactStructure> all = enumerate_structures(cat.ar);
  for (const ExactStructure& e : all)
    for (const ExactStructure& ep : all)
      if (structure_leq(ep, e)) CHECK(fm_strict_feasible(cone_D(cat, e, ep)));

  // the same row required both strict and zero is infeasible
  CHECK_FALSE(fm_strict_feasible(ConeD{6,
                                       {KClass{1, -1, -1, 1, 0, 0}},
                                       {KClass{1, -1, -1, 1, 0, 0}}}));
  // opposite strict rows are infeasible
  CHECK_FALSE(fm_strict_feasible(ConeD{1, {KClass{1}, KClass{-1}}, {}}));
  CHECK(fm_strict_feasible(ConeD{1, {KClass{1}}, {}}));
}
