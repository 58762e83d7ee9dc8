#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "exhall/format.hpp"
#include "exhall/fqrep.hpp"
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

std::map<ObjClass, unsigned long long> table_of(const Catalog& cat, const ObjClass& a,
                                                const ObjClass& c, int p) {
  std::map<ObjClass, unsigned long long> out;
  for (const auto& [b, cnt] : ext_table(cat, a, c, p)) out[b] = cnt;
  return out;
}

}  // namespace

TEST_CASE("the A_3 Hom table") {
  const std::vector<std::vector<int>> expected{
      {1, 1, 1, 1, 0, 0},  // S_2 (projective cover of vertex 2)
      {0, 1, 0, 1, 0, 1},  // P_1
      {0, 0, 1, 1, 1, 0},  // P_3
      {0, 0, 0, 1, 1, 1},  // I_2
      {0, 0, 0, 0, 1, 0},  // S_3
      {0, 0, 0, 0, 0, 1},  // S_1
  };
  CHECK(a3().hom == expected);
}

TEST_CASE("the A_2 Hom table") {
  const std::vector<std::vector<int>> expected{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK(a2().hom == expected);
}

TEST_CASE("indecomposable representatives have one-dimensional End") {
  for (const Catalog* cat : {&a2(), &a3()})
    for (int p : {2, 3, 5})
      for (int i = 0; i < cat->n; ++i) {
        const Rep& r = indec_rep(*cat, i, p);
        CHECK(hom_dim(cat->q, r, r) == 1);
        CHECK(r.vdim == cat->ar.ind[i].dim);
      }
}

TEST_CASE("representatives are deterministic for a fixed seed") {
  const Catalog one = build_catalog(parse_quiver(kQuiverA3), 42);
  const Catalog two = build_catalog(parse_quiver(kQuiverA3), 42);
  for (int i = 0; i < one.n; ++i) {
    CHECK(indec_rep(one, i, 3).arr == indec_rep(two, i, 3).arr);
    CHECK(indec_rep(one, i, 5).arr == indec_rep(two, i, 5).arr);
  }
}

TEST_CASE("computed invariants do not depend on the seed") {
  const Catalog base = build_catalog(parse_quiver(kQuiverA3));
  const Catalog other = build_catalog(parse_quiver(kQuiverA3), 7);
  CHECK(base.hom == other.hom);
  const ObjClass a = parse_class(base, "I2"), c = parse_class(base, "S2");
  CHECK(ext_table(base, a, c, 3) == ext_table(other, a, c, 3));
  CHECK(aut_order_class(base, parse_class(base, "P1+S1"), 2) ==
        aut_order_class(other, parse_class(other, "P1+S1"), 2));
}

TEST_CASE("hom_dim_class is additive in both arguments") {
  const Catalog& cat = a3();
  const ObjClass p1 = parse_class(cat, "P1"), i2 = parse_class(cat, "I2");
  const ObjClass s2 = parse_class(cat, "S2");
  CHECK(hom_dim_class(cat, oplus(p1, s2), i2) == 2);
  CHECK(hom_dim_class(cat, p1, oplus(i2, i2)) == 2);
  CHECK(hom_dim_class(cat, oplus(p1, p1), oplus(i2, s2)) == 2);
  CHECK(hom_dim_class(cat, zero_class(cat.n), i2) == 0);
}

TEST_CASE("ext dimensions from the Euler form") {
  const Catalog& cat2 = a2();
  CHECK(ext1_dim_class(cat2, parse_class(cat2, "S1"), parse_class(cat2, "S2")) == 1);
  CHECK(ext1_dim_class(cat2, parse_class(cat2, "S2"), parse_class(cat2, "S1")) == 0);

  const Catalog& cat3 = a3();
  CHECK(ext1_dim_class(cat3, parse_class(cat3, "I2"), parse_class(cat3, "S2")) == 1);
  CHECK(ext1_dim_class(cat3, parse_class(cat3, "S2"), parse_class(cat3, "I2")) == 0);
}

TEST_CASE("realize and decompose round-trip") {
  for (const Catalog* cat : {&a2(), &a3()})
    for (int p : {2, 3})
      for (const ObjClass& c : classes_up_to_total_dim(*cat, 5)) {
        const Rep r = realize(*cat, c, p);
        CHECK(r.vdim == cat->dimvec(c));
        CHECK(decompose(*cat, r) == c);
      }
}

TEST_CASE("decompose identifies the zero-map representation") {
  const Catalog& cat = a2();
  Rep r = zero_rep(cat.q, 2);
  CHECK(decompose(cat, r) == zero_class(cat.n));

  // dim (1,1) with zero arrow map is S_1 + S_2, not P_1
  r.vdim = {1, 1};
  r.arr[0] = fq::Mat(1, 1);
  CHECK(decompose(cat, r) == parse_class(cat, "S1+S2"));
}

TEST_CASE("class enumeration respects the bound") {
  const Catalog& cat = a2();
  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, 3);
  CHECK(classes.size() == 13);
  std::set<ObjClass> seen(classes.begin(), classes.end());
  CHECK(seen.size() == classes.size());
  CHECK(seen.count(zero_class(cat.n)) == 1);
  for (const ObjClass& c : classes) CHECK(cat.total_dim(c) <= 3);
}

TEST_CASE("subobject counts") {
  const Catalog& cat = a2();
  const ObjClass s1 = parse_class(cat, "S1"), s2 = parse_class(cat, "S2");

  for (int p : {2, 3}) {
    const Rep p1 = realize(cat, parse_class(cat, "P1"), p);
    CHECK(subobject_count(cat, p1, s2, s1) == 1);  // radical is the unique S_2
    CHECK(subobject_count(cat, p1, s1, s2) == 0);  // S_1 is the top, not a sub
    const Rep split = realize(cat, parse_class(cat, "S1+S2"), p);
    CHECK(subobject_count(cat, split, s2, s1) == 1);
    CHECK(subobject_count(cat, split, s1, s2) == 1);
  }

  // dimension mismatch short-circuits to zero
  CHECK(subobject_count(cat, realize(cat, parse_class(cat, "P1"), 2), s2, s2) == 0);

  // every k-dimensional subspace of S_2^3 works: Gaussian binomial counts
  const Rep cube = realize(cat, parse_class(cat, "S2^3"), 2);
  CHECK(subobject_count(cat, cube, parse_class(cat, "S2"), parse_class(cat, "S2^2")) == 7);
}

TEST_CASE("automorphism counts") {
  const Catalog& cat = a2();
  CHECK(aut_order_enum(cat, realize(cat, parse_class(cat, "S1"), 2)) == 1);
  CHECK(aut_order_enum(cat, realize(cat, parse_class(cat, "S1"), 3)) == 2);
  CHECK(aut_order_enum(cat, realize(cat, parse_class(cat, "S1^2"), 2)) == 6);  // |GL_2(F_2)|

  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(0, 2) == 1);

  // closed form against enumeration, across several classes and primes
  for (int p : {2, 3})
    for (const char* text : {"S1", "S2", "P1", "S1+S2", "P1+S1", "P1+S2", "S1^2", "S1^2+S2"}) {
      const ObjClass c = parse_class(cat, text);
      CHECK(aut_order_class(cat, c, p) == aut_order_enum(cat, realize(cat, c, p)));
    }

  // |Aut(P_1 + S_1)| = (p-1)^2 p^{hom(P_1,S_1)}
  CHECK(aut_order_class(cat, parse_class(cat, "P1+S1"), 2) == 2);
  CHECK(aut_order_class(cat, parse_class(cat, "P1+S1"), 3) == 12);
}

TEST_CASE("extension count tables") {
  const Catalog& cat = a2();
  const ObjClass s1 = parse_class(cat, "S1"), s2 = parse_class(cat, "S2");
  const ObjClass p1 = parse_class(cat, "P1"), split = parse_class(cat, "S1+S2");

  CHECK(table_of(cat, s1, s2, 2) ==
        std::map<ObjClass, unsigned long long>{{p1, 1}, {split, 1}});
  CHECK(table_of(cat, s1, s2, 3) ==
        std::map<ObjClass, unsigned long long>{{p1, 2}, {split, 1}});
  CHECK(table_of(cat, s2, s1, 2) == std::map<ObjClass, unsigned long long>{{split, 1}});

  CHECK(ext_count(cat, s1, s2, p1, 5) == 4);
  CHECK(ext_count(cat, s1, s2, split, 5) == 1);

  const Catalog& cat3 = a3();
  const ObjClass m1 = parse_class(cat3, "S2"), m4 = parse_class(cat3, "I2");
  CHECK(table_of(cat3, m4, m1, 2) ==
        std::map<ObjClass, unsigned long long>{{parse_class(cat3, "P1+P3"), 1},
                                               {parse_class(cat3, "S2+I2"), 1}});
  // no extensions the other way: I_2 is injective
  CHECK(table_of(cat3, m1, m4, 2) ==
        std::map<ObjClass, unsigned long long>{{parse_class(cat3, "S2+I2"), 1}});
}

TEST_CASE("extension totals and split middles") {
  for (const Catalog* cat : {&a2(), &a3()})
    for (int p : {2, 3})
      for (const ObjClass& a : classes_up_to_total_dim(*cat, 2))
        for (const ObjClass& c : classes_up_to_total_dim(*cat, 2)) {
          unsigned long long total = 0;
          for (const auto& [b, cnt] : ext_table(*cat, a, c, p)) total += cnt;
          BigInt expected = big_pow(p, ext1_dim_class(*cat, a, c));
          CHECK(BigInt(total) == expected);
          CHECK(ext_count(*cat, a, c, oplus(a, c), p) == 1);
        }
}

TEST_CASE("work budgets are enforced") {
  Limits tight;
  tight.max_end_enum = 100;
  const Catalog cat = build_catalog(parse_quiver(kQuiverA2), 0, tight);
  // End(S_1^3) has 2^9 elements, over the cap
  CHECK_THROWS_AS(aut_order_enum(cat, realize(cat, parse_class(cat, "S1^3"), 2)),
                  BudgetExceeded);

  Limits small;
  small.max_subspaces = 2;
  const Catalog cat2 = build_catalog(parse_quiver(kQuiverA2), 0, small);
  const Rep cube = realize(cat2, parse_class(cat2, "S2^3"), 2);
  CHECK_THROWS_AS(
      subobject_count(cat2, cube, parse_class(cat2, "S2"), parse_class(cat2, "S2^2")),
      BudgetExceeded);

  CHECK_THROWS_AS(indec_rep(a2(), 0, 4), InputError);  // 4 is not a supported prime
}

TEST_CASE("class labels") {
  const Catalog& cat = a3();
  CHECK(class_label(cat, zero_class(cat.n)) == "0");
  CHECK(class_label(cat, parse_class(cat, "S2")) == "0.1.0");
  CHECK(class_label(cat, parse_class(cat, "S2+S1^2")) == "0.1.0+1.0.0^2");
}
