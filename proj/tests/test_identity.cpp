#include <doctest.h>

#include <random>

#include "agkit/enumerator.hpp"
#include "agkit/identity.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace agkit;
using I = IdentityId;

namespace {

PropertySet oracle_properties(const Magma& m) {
  PropertySet out;
  for (auto id : kAllIdentities) {
    if (oracle::holds(m, id)) out.insert(id);
  }
  return out;
}

void check_witness(const Magma& m, IdentityId id, const Witness& w) {
  const auto values = w.values();
  const auto& eq = equation(id);
  CHECK(w.lhs_value != w.rhs_value);
  CHECK(eq.lhs().evaluate(m, values) == w.lhs_value);
  CHECK(eq.rhs().evaluate(m, values) == w.rhs_value);
}

}  // namespace

TEST_CASE("catalog shape") {
  REQUIRE(catalog().size() == kIdentityCount);
  for (std::size_t i = 0; i < kIdentityCount; ++i) {
    CHECK(catalog()[i].id == kAllIdentities[i]);
    CHECK(identity_from_name(name(kAllIdentities[i])) == kAllIdentities[i]);
  }
  CHECK_FALSE(identity_from_name("semigroup").has_value());
}

TEST_CASE("catalog equations") {
  CHECK(equation(I::LeftInvertive).to_string() == "(ab)c = (cb)a");
  CHECK(equation(I::LeftInvertive).variables().size() == 3);
  CHECK(equation(I::Lad).to_string() == "a(bc) = (ab)(ca)");
  CHECK(equation(I::Rad).to_string() == "(ab)c = (ca)(bc)");
  CHECK(equation(I::Medial).to_string() == "(ab)(cd) = (ac)(bd)");
  CHECK(equation(I::Paramedial).to_string() == "(ab)(cd) = (db)(ca)");
  CHECK(equation(I::LeftNuclearSquare).to_string() == "(aa)(bc) = ((aa)b)c");
  CHECK(equation(I::Medial).variables().size() == 4);
  CHECK(equation(I::Commutative).variables().size() == 2);
  CHECK(name(I::AgStarStar) == "ag-star-star");
}

TEST_CASE("satisfies on the published examples") {
  const Magma lad = fixtures::lad_example();
  CHECK(satisfies(lad, I::Lad));
  CHECK(satisfies(lad, I::LeftInvertive));
  CHECK_FALSE(satisfies(lad, I::Associative));
  // (3*3)*3 = 2*3 = 1 but 3*(3*3) = 3*2 = 0.
  CHECK(lad(lad(3, 3), 3) == 1);
  CHECK(lad(3, lad(3, 3)) == 0);

  const Magma ld = fixtures::ld_not_lad();
  CHECK(satisfies(ld, I::LeftDistributive));
  CHECK_FALSE(satisfies(ld, I::Lad));
}

TEST_CASE("constant magmas satisfy everything") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Magma m = Magma::constant(n);
    for (auto id : kAllIdentities) {
      CHECK(satisfies(m, id));
      CHECK_FALSE(witness_failure(m, id).has_value());
    }
  }
}

TEST_CASE("witnesses") {
  SUBCASE("LD example fails LAD") {
    const Magma m = fixtures::ld_not_lad();
    const auto w = witness_failure(m, I::Lad);
    REQUIRE(w.has_value());
    check_witness(m, I::Lad, *w);
    // Lexicographically first falsifying assignment.
    CHECK(w->values() == std::array<Element, 4>{0, 0, 1, 0});
    CHECK(w->lhs_value == 3);
    CHECK(w->rhs_value == 1);
    // The published witness a=0, b=1, c=3 also falsifies.
    CHECK(m(0, m(1, 3)) == 3);
    CHECK(m(m(0, 1), m(3, 0)) == 2);
  }
  SUBCASE("RD example fails RAD") {
    const Magma m = fixtures::rd_not_rad();
    const auto w = witness_failure(m, I::Rad);
    REQUIRE(w.has_value());
    check_witness(m, I::Rad, *w);
    CHECK(w->values() == std::array<Element, 4>{0, 0, 1, 0});
  }
  SUBCASE("assignment lists variables in order") {
    const auto w = witness_failure(fixtures::lad_example(), I::Associative);
    REQUIRE(w.has_value());
    REQUIRE(w->assignment.size() == 3);
    CHECK(w->assignment[0].first == 'a');
    CHECK(w->assignment[2].first == 'c');
  }
}

TEST_CASE("classify the published examples") {
  const PropertySet rad = classify(fixtures::rad_example());
  CHECK(rad.includes({I::LeftInvertive, I::Rad, I::RightDistributive,
                      I::Medial}));
  CHECK_FALSE(rad.contains(I::Associative));

  CHECK(classify(Magma::constant(1)).size() == kIdentityCount);

  const PropertySet ld = classify(fixtures::ld_not_lad());
  CHECK(ld.includes({I::LeftInvertive, I::LeftDistributive}));
  CHECK_FALSE(ld.contains(I::Lad));
}

TEST_CASE("is_ag_groupoid") {
  for (const Magma& m :
       {fixtures::lad_example(), fixtures::lad_test_example(),
        fixtures::ld_not_lad(), fixtures::rad_example(),
        fixtures::rad_test_example(), fixtures::rd_not_rad()}) {
    CHECK(is_ag_groupoid(m));
  }
  // x*y = 1 iff x == y: every instance of (ab)c = (cb)a holds.
  CHECK(is_ag_groupoid(Magma(2, {1, 0, 0, 1})));
  CHECK(is_ag_groupoid(Magma::constant(3)));
  CHECK_FALSE(is_ag_groupoid(Magma(2, {0, 0, 1, 1})));
}

TEST_CASE("evaluator agrees with hand-written loops on all tables of order <= 2"
          " and a sample of order 3") {
  for (std::size_t n = 1; n <= 2; ++n) {
    oracle::for_each_table(n, [&](const oracle::Linear& t) {
      const Magma m = oracle::magma_of(n, t);
      CHECK(classify(m) == oracle_properties(m));
    });
  }
  std::size_t checked = 0;
  oracle::for_each_table(3, [&](const oracle::Linear& t) {
    if (checked++ % 7 != 0) return;
    const Magma m = oracle::magma_of(3, t);
    CHECK(classify(m) == oracle_properties(m));
  });
}

TEST_CASE("evaluator agrees with hand-written loops on every order-3 AG class") {
  for (const auto& t : oracle::ag_classes(3)) {
    const Magma m = oracle::magma_of(3, t);
    CHECK(classify(m) == oracle_properties(m));
  }
}

TEST_CASE("witness exists exactly when the identity fails") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int i = 0; i < 200; ++i) {
      const Magma m = oracle::random_magma(n, rng);
      for (auto id : kAllIdentities) {
        const auto w = witness_failure(m, id);
        CHECK(w.has_value() != satisfies(m, id));
        if (w) check_witness(m, id, *w);
      }
    }
  }
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 100; ++i) {
      const Magma m = oracle::random_magma(n, rng);
      const Permutation p = oracle::random_permutation(n, rng);
      CHECK(classify(relabel(m, p)) == classify(m));
    }
  }
}

TEST_CASE("every AG-groupoid of order <= 4 is medial") {
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_ag(n, all_ag_filter(), [&](const Magma& m) {
      ++classes;
      CHECK(satisfies(m, I::Medial));
    });
  }
  CHECK(classes == 1 + 3 + 20 + 331);
}

TEST_CASE("PropertySet") {
  PropertySet s{I::Rad, I::LeftInvertive};
  CHECK(s.to_string() == "left-invertive,rad");
  CHECK(s.includes({I::Rad}));
  CHECK_FALSE(s.includes({I::Lad}));
  CHECK(s.disjoint({I::Lad, I::Associative}));
  s.erase(I::Rad);
  CHECK(s == PropertySet{I::LeftInvertive});
  CHECK((s | PropertySet{I::Lad}).size() == 2);
}
