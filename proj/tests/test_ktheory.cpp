#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "sftkit/catalog.hpp"
#include "sftkit/dimension_group.hpp"
#include "sftkit/graph.hpp"
#include "sftkit/k0.hpp"
#include "sftkit/perron.hpp"

using namespace sftkit;

namespace {

GroupRef group_of(const std::string& id) { return DimensionGroup::create(catalog_entry(id).matrix(), id); }

DimElement el(const GroupRef& g, IntVector v, unsigned long k) { return DimElement(g, std::move(v), k); }

DimElement random_element(std::mt19937& rng, const GroupRef& g) {
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<unsigned long> stage(0, 3);
  IntVector v;
  for (std::size_t i = 0; i < g->dim(); ++i) v.push_back(entry(rng));
  return DimElement(g, v, stage(rng));
}

// v A^l >= 0 for some l <= bound, by direct iteration.
bool eventually_nonnegative(const IntMatrix& a, IntVector v, unsigned bound) {
  for (unsigned l = 0; l <= bound; ++l) {
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; })) return true;
    v = v * a;
  }
  return false;
}

}  // namespace

TEST_CASE("dg_add") {
  const GroupRef f11 = group_of("F1_1");
  const DimElement x = el(f11, {3, -2}, 2);
  CHECK(dg_eq(dg_add(x, el(f11, {0, 0}, 0)), x));

  // [(1,1),1] + [(1,1),2] = [(1,1)A^2 + (1,1)A, 3]
  const DimElement sum = dg_add(el(f11, {1, 1}, 1), el(f11, {1, 1}, 2));
  const IntMatrix a = f11->matrix();
  CHECK(IntVector{1, 1} * (power(a, 2) + a) == IntVector{5, 3});
  CHECK(dg_eq(sum, el(f11, {5, 3}, 3)));
  CHECK(dg_eq(sum, el(f11, {1, 1}, 0)));

  const DimElement p = el(f11, {1, 4}, 2), q = el(f11, {-3, 2}, 2);
  CHECK(dg_eq(dg_add(p, q), el(f11, {-2, 6}, 2)));

  CHECK_THROWS_AS(dg_add(x, el(group_of("F2_1"), {1, 0}, 0)), std::invalid_argument);
}

TEST_CASE("dg_eq") {
  const GroupRef f11 = group_of("F1_1");
  const IntVector v{2, -1};
  CHECK(dg_eq(el(f11, v, 0), el(f11, v * f11->matrix(), 1)));
  CHECK_FALSE(dg_eq(el(f11, {1, 0}, 0), el(f11, {0, 1}, 0)));

  const GroupRef nil = DimensionGroup::create(IntMatrix{{0, 0}, {0, 1}});
  CHECK(dg_eq(el(nil, {1, 0}, 0), el(nil, {0, 0}, 0)));
  CHECK(el(nil, {1, 0}, 0).is_zero());
}

TEST_CASE("dg_shift reproduces the vertex actions") {
  const GroupRef e11 = group_of("E1_1");
  const GroupRef e61 = group_of("E6_1");
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const long a = d(rng), b = d(rng), c = d(rng);
    CHECK(dg_eq(dg_shift(el(e11, {a, b, c}, 0), 1), el(e11, {c, a, b + c}, 0)));
    CHECK(dg_eq(dg_shift(el(e61, {a, b, c}, 0), 1), el(e61, {b + c, a + c, a + b}, 0)));
    const DimElement x = el(e11, {a, b, c}, 1);
    CHECK(dg_eq(dg_shift(x, 0), x));
  }
}

TEST_CASE("order unit") {
  const DimElement u = order_unit(group_of("E2_1"));
  CHECK(u.v() == IntVector{1, 1, 1});
  CHECK(u.k() == 0);
  CHECK(order_unit(group_of("R1_2")).v() == IntVector{1});
}

TEST_CASE("embedding into Q^r") {
  CHECK(embed_invertible(order_unit(group_of("F1_1"))) == RatVector{1, 1});
  CHECK(embed_invertible(el(group_of("E1_3"), {1, 1, 1}, 1)) == RatVector{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(embed_invertible(el(group_of("R1_2"), {1}, 1)) == RatVector{Rat(1, 2)});
  CHECK_THROWS_AS(embed_invertible(el(group_of("E1_5"), {1, 0, 0}, 1)), std::domain_error);
}

TEST_CASE("Delta membership") {
  const IntMatrix e13 = catalog_entry("E1_3").matrix();
  const auto half = delta_contains(e13, {Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(half.contained);
  CHECK(half.k == 1);
  CHECK_FALSE(delta_contains(e13, {Rat(1, 3), Rat(0), Rat(0)}).contained);
  const auto integral = delta_contains(e13, {Rat(4), Rat(-1), Rat(0)});
  CHECK(integral.contained);
  CHECK(integral.k == 0);
  CHECK_THROWS_AS(delta_contains(catalog_entry("E1_5").matrix(), {Rat(1), Rat(0), Rat(0)}), std::domain_error);
}

TEST_CASE("Delta membership agrees with iterating u A^k") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 8);
  for (const auto& e : load_catalog()) {
    const IntMatrix a = e.matrix();
    if (determinant(a) == 0) continue;
    for (int trial = 0; trial < 30; ++trial) {
      RatVector u;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Rat x(num(rng), den(rng));
        x.canonicalize();
        u.push_back(x);
      }
      const DeltaMembership m = delta_contains(a, u);
      // Denominators divide 8!, so any witness appears well before 40 steps.
      RatVector w = u;
      std::optional<unsigned> first;
      const RatMatrix ar = to_rational(a);
      for (unsigned k = 0; k < 40 && !first; ++k) {
        if (is_integral(w)) first = k;
        w = w * ar;
      }
      CAPTURE(e.id);
      CHECK(m.contained == first.has_value());
      if (first) CHECK(m.k == *first);
    }
  }
}

TEST_CASE("Delta claims") {
  const IntMatrix e13 = catalog_entry("E1_3").matrix();
  REQUIRE(catalog_entry("E1_3").delta_claim);
  const DeltaClaim good = *catalog_entry("E1_3").delta_claim;
  CHECK(good.w == std::vector<IntVector>{{1, 1, 1}});
  CHECK(good.d == 2);
  CHECK(delta_claim_verify(e13, good, 8).ok);

  const IntMatrix f31 = catalog_entry("F3_1").matrix();
  CHECK(f31 == IntMatrix{{0, 1}, {2, 2}});
  // A^2 = 2U with U unimodular, so Delta_A = Z[1/2]^2.
  CHECK(power(f31, 2) == IntMatrix{{2, 2}, {4, 6}});
  const DeltaClaim plane{{IntVector{1, 0}, IntVector{0, 1}}, Int(2), {}, "(Z[1/2])^2"};
  CHECK(delta_claim_verify(f31, plane, 8).ok);

  DeltaClaim wrong = good;
  wrong.d = 3;
  const auto r = delta_claim_verify(e13, wrong, 2);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_level == 1u);
  // (1/3)(1,1,1) A = (2/3)(1,1,1) is not integral.
  CHECK(IntVector{1, 1, 1} * e13 == IntVector{2, 2, 2});

  const DeltaClaim dependent{{IntVector{1, 1, 1}}, Int(2), {IntVector{2, 2, 2}}, "dependent"};
  CHECK_THROWS_AS(delta_claim_verify(e13, dependent, 2), std::invalid_argument);
  CHECK_THROWS_AS(delta_claim_verify(catalog_entry("E1_5").matrix(), good, 2), std::domain_error);

  for (const auto& e : load_catalog())
    if (e.delta_claim) {
      CAPTURE(e.id);
      CHECK(delta_claim_verify(e.matrix(), *e.delta_claim, 8).ok);
    }
}

TEST_CASE("positive cone") {
  const GroupRef f11 = group_of("F1_1");
  const ConeResult c = cone_contains(el(f11, {1, -1}, 0));
  CHECK(c.verdict == ConeVerdict::In);
  if (c.stage == ConeStage::PowerWitness) {
    const IntVector w = IntVector{1, -1} * power(f11->matrix(), c.witness_power);
    CHECK(std::all_of(w.begin(), w.end(), [](const Int& x) { return x >= 0; }));
  }
  // Independent check: (1,-1).(phi, 1) = phi - 1 > 0.
  CHECK((1 + std::sqrt(5.0)) / 2 - 1 > 0);

  const GroupRef e71 = group_of("E7_1");
  const ConeResult out = cone_contains(el(e71, {1, -1, 0}, 0));
  CHECK(out.verdict == ConeVerdict::Out);
  CHECK(out.pf_sign == 0);
  const auto z = oracle::perron_vector(oracle::of(e71->matrix()));
  CHECK(z[0] - z[1] == doctest::Approx(0).epsilon(1e-9));
  // Its orbit alternates between two vectors with negative entries.
  CHECK(IntVector{1, -1, 0} * e71->matrix() == IntVector{-1, 0, 1});
  CHECK(IntVector{-1, 0, 1} * e71->matrix() == IntVector{1, -1, 0});

  CHECK(cone_contains(el(e71, {0, 0, 0}, 3)).verdict == ConeVerdict::In);
  CHECK(cone_contains(el(f11, {-1, 0}, 0)).verdict == ConeVerdict::Out);
}

TEST_CASE("cone decisions agree with floating-point Perron signs on small 0/1 matrices") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<long> entry(-3, 3);
  int decided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto m = oracle::random_matrix(rng, n, n, 0, 1);
    if (!oracle::primitive(m) || oracle::det(m) == 0) continue;
    const GroupRef g = DimensionGroup::create(oracle::to_int(m));
    const auto z = oracle::perron_vector(m);
    IntVector v;
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(entry(rng));
      dot += v.back().get_d() * z[i];
    }
    if (std::abs(dot) < 1e-3) continue;
    const ConeResult c = cone_contains(DimElement(g, v, 0));
    REQUIRE(c.verdict != ConeVerdict::Undecided);
    CHECK((c.verdict == ConeVerdict::In) == (dot > 0));
    CHECK((c.verdict == ConeVerdict::In) == eventually_nonnegative(oracle::to_int(m), v, 200));
    ++decided;
  }
  CHECK(decided > 50);
}

TEST_CASE("cone is closed under addition") {
  std::mt19937 rng(53);
  for (const char* id : {"F1_1", "E1_8", "E2_1", "E7_2"}) {
    const GroupRef g = group_of(id);
    std::vector<DimElement> inside;
    for (int i = 0; i < 200 && inside.size() < 20; ++i) {
      DimElement x = random_element(rng, g);
      if (cone_contains(x).verdict == ConeVerdict::In) inside.push_back(x);
    }
    REQUIRE(inside.size() >= 5);
    for (std::size_t i = 0; i + 1 < inside.size(); ++i)
      CHECK(cone_contains(dg_add(inside[i], inside[i + 1])).verdict == ConeVerdict::In);
  }
}

TEST_CASE("talented monoid") {
  const GroupRef f11 = group_of("F1_1");
  const TalentedElement w1w2(f11, {1, 1}, 0);
  const TalentedElement rhs = tm_add(TalentedElement(f11, {1, 1}, 1), TalentedElement(f11, {1, 1}, 2));
  CHECK(tm_eq(w1w2, rhs));
  CHECK(tm_eq(TalentedElement(f11, {1, 0}, 0), TalentedElement(f11, {1, 0}, 0)));

  const GroupRef f21 = group_of("F2_1");
  CHECK(f21->matrix() == IntMatrix{{1, 2}, {1, 0}});
  CHECK(IntVector{1, 1} * f21->matrix() == IntVector{2, 2});
  CHECK(tm_eq(TalentedElement(f21, {1, 1}, 0), TalentedElement(f21, {2, 2}, 1)));
  CHECK(tm_eq(TalentedElement(f21, {1, 1}, 0),
              tm_add(TalentedElement(f21, {1, 1}, 1), TalentedElement(f21, {1, 1}, 1))));

  // ^n v(i) = v(i + n) acts as theta^{-n} on classes.
  const TalentedElement x(f21, {2, 1}, 1);
  CHECK(dg_eq(tm_shift(x, 2).cls(), dg_shift(x.cls(), -2)));

  const GroupRef with_sink = DimensionGroup::create(IntMatrix{{1, 1}, {0, 0}});
  CHECK_THROWS_AS(TalentedElement(with_sink, {1, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(TalentedElement(f11, {-1, 0}, 0), std::invalid_argument);
}

TEST_CASE("group laws on random elements") {
  std::mt19937 rng(59);
  for (const auto* e : small_entries()) {
    const GroupRef g = group_of(e->id);
    const bool invertible = g->det() != 0;
    CAPTURE(e->id);
    for (int trial = 0; trial < 100; ++trial) {
      const DimElement a = random_element(rng, g), b = random_element(rng, g), c = random_element(rng, g);
      REQUIRE(dg_eq(dg_add(a, b), dg_add(b, a)));
      REQUIRE(dg_eq(dg_add(dg_add(a, b), c), dg_add(a, dg_add(b, c))));
      REQUIRE(dg_add(a, dg_neg(a)).is_zero());
      REQUIRE(dg_eq(dg_shift(dg_add(a, b), 2), dg_add(dg_shift(a, 2), dg_shift(b, 2))));
      REQUIRE(dg_eq(dg_shift(dg_shift(a, 1), -1), a));
      if (invertible) {
        CHECK((embed_invertible(a) == embed_invertible(b)) == dg_eq(a, b));
        RatVector s = embed_invertible(a);
        const RatVector t = embed_invertible(b);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += t[i];
        CHECK(embed_invertible(dg_add(a, b)) == s);
      }
    }
  }
}

TEST_CASE("K0 examples") {
  CHECK(k0_group(catalog_entry("E1_1").matrix()).rendering == "{0̄}");
  CHECK(k0_group(catalog_entry("E1_1").matrix()).trivial());
  CHECK(k0_group(catalog_entry("E2_1").matrix()).rendering == "Z/2Z");
  CHECK(k0_group(catalog_entry("E6_1").matrix()).rendering == "Z/2Z ⊕ Z/2Z");
  CHECK(k0_group(catalog_entry("E7_1").matrix()).rendering == "Z");
  CHECK(k0_group(IntMatrix{{2}}).rendering == "{0̄}");
  CHECK(render_k0({Int(1), Int(3), Int(0)}) == "Z/3Z ⊕ Z");
}

TEST_CASE("K0 matches determinantal divisors and is transpose invariant") {
  const auto check = [](const IntMatrix& a) {
    auto m = oracle::transpose(oracle::of(a));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j) - m[i][j];
    std::vector<long long> got;
    for (const auto& f : k0_group(a).invariant_factors) got.push_back(f.get_si());
    CHECK(got == oracle::invariant_factors(m));
    CHECK(k0_group(a).rendering == k0_group(a.transpose()).rendering);
  };
  for (const auto& e : load_catalog()) {
    CAPTURE(e.id);
    check(e.matrix());
  }
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) check(oracle::to_int(oracle::random_matrix(rng, 1 + trial % 4, 1 + trial % 4, 0, 3)));
}

TEST_CASE("graded group descriptions") {
  const KgrRegistry& reg = kgr_registry();
  const KgrDescription e12 = kgr_description(catalog_entry("E1_2").matrix(), &reg);
  CHECK(e12.kind == KgrKind::Unimodular);
  CHECK(e12.rendering == "Z^3");

  const KgrDescription e13 = kgr_description(catalog_entry("E1_3").matrix(), &reg);
  CHECK(e13.kind == KgrKind::DeltaClaim);
  REQUIRE(e13.claim_report);
  CHECK(e13.claim_report->ok);

  const KgrDescription e15 = kgr_description(catalog_entry("E1_5").matrix(), &reg);
  CHECK(e15.kind == KgrKind::Reduction);
  CHECK(e15.via == std::vector<std::string>{"F1_1"});
  CHECK(e15.rendering == "Z^2");
  CHECK(abs(determinant(catalog_entry("F1_1").matrix())) == 1);

  const KgrDescription f12 = kgr_description(catalog_entry("F1_2").matrix(), &reg);
  CHECK(f12.via == std::vector<std::string>{"R1_2"});
  CHECK(f12.rendering == "Z[1/2]");

  CHECK(kgr_description(catalog_entry("E1_5").matrix()).kind == KgrKind::Unresolved);
}

TEST_CASE("shift and negation keep elements canonical") {
  std::mt19937 rng(67);
  const auto canonical = [](const DimElement& x) { return x.k() == 0 || !x.group()->pull_back(x.v()); };
  for (const auto& e : load_catalog()) {
    const GroupRef g = group_of(e.id);
    CAPTURE(e.id);
    for (int trial = 0; trial < 40; ++trial) {
      const DimElement x = random_element(rng, g);
      REQUIRE(canonical(x));
      for (long n = -3; n <= 3; ++n) {
        const DimElement s = dg_shift(x, n);
        CHECK(canonical(s));
        const DimElement slow = n >= 0 ? DimElement(g, g->apply_power(x.v(), n), x.k())
                                       : DimElement(g, x.v(), x.k() + static_cast<unsigned long>(-n));
        CHECK(dg_eq(s, slow));
        // Only invertible A has a unique canonical stage; for singular A the greedy pull-back
        // can stop at different stages for the same class.
        if (g->det() != 0) CHECK(s.k() == slow.k());
      }
      CHECK(canonical(dg_neg(x)));
    }
  }
}
