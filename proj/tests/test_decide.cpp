#include <doctest.h>

#include <random>

#include "gradex/decide.hpp"

using namespace gradex;

namespace {

const GroupSpec kZ = GroupSpec::parse("Z");
const GroupSpec kZ2 = GroupSpec::parse("Z/2");
const GroupSpec kZ3 = GroupSpec::parse("Z/3");
const RingSpec kQ = RingSpec::rationals();

VeryGoodGrading example_a() {
  return {kZ3, {kZ3.element({0}), kZ3.element({1}), kZ3.element({2})}};
}
VeryGoodGrading example_b() {
  return {kZ, {kZ.element({0}), kZ.element({-1}), kZ.element({-2})}};
}
VeryGoodGrading example_c() {
  return {kZ2, {kZ2.element({0}), kZ2.element({0}), kZ2.element({1})}};
}

// All tuples (g_1 = e fixed) over a finite group.
std::vector<VeryGoodGrading> all_tuples(const GroupSpec& g, std::size_t n) {
  std::vector<VeryGoodGrading> out;
  auto elements = g.enumerate();
  std::size_t m = elements.size();
  std::size_t total = 1;
  for (std::size_t k = 1; k < n; ++k) total *= m;
  for (std::size_t rank = 0; rank < total; ++rank) {
    std::vector<GroupElement> tuple = {g.identity()};
    std::size_t r = rank;
    for (std::size_t k = 1; k < n; ++k) {
      tuple.push_back(elements[r % m]);
      r /= m;
    }
    out.emplace_back(g, std::move(tuple));
  }
  return out;
}

}  // namespace

TEST_CASE("locally strong verdicts") {
  Verdict c1 = is_locally_strong(example_c(), kZ2.element({1}));
  CHECK(c1.answer == Answer::yes);
  // Oracle: S_1 S_1 spans S_0 on matrix units (1 = -1 in Z/2).
  ProductSpanCheck span = unit_product_span(example_c(), kZ2.element({1}), kZ2.element({1}));
  CHECK(span.spans);
  CHECK_FALSE(span.product_zero);

  Verdict b1 = is_locally_strong(example_b(), kZ.element({1}));
  CHECK(b1.answer == Answer::no);
  CHECK_FALSE(unit_product_span(example_b(), kZ.element({1}), kZ.element({-1})).spans);

  CHECK(is_locally_strong(example_b(), kZ.identity()).answer == Answer::yes);
  CHECK(is_locally_strong(example_a(), kZ3.element({2})).answer == Answer::yes);
}

TEST_CASE("strong verdicts") {
  Verdict a = is_strong(example_a());
  CHECK(a.answer == Answer::yes);
  const auto* table = std::get_if<EpsilonTable>(&a.certificate);
  REQUIRE(table != nullptr);
  CHECK(table->entries.size() == 3);  // all of Z/3
  for (const auto& eps : table->entries) CHECK(eps.left_set.size() == 3);

  VeryGoodGrading grading_b = example_b();
  Verdict b = is_strong(grading_b);
  CHECK(b.answer == Answer::no);
  const auto* missing = std::get_if<MissingDegree>(&b.certificate);
  REQUIRE(missing != nullptr);
  std::set<GroupElement> present(grading_b.tuple().begin(), grading_b.tuple().end());
  CHECK_FALSE(present.count(missing->degree));

  CHECK(is_strong(example_c()).answer == Answer::yes);
}

TEST_CASE("epsilon-strong: very good gradings with a verified table") {
  Verdict v = is_epsilon_strong(GradingDescriptor{example_b()}, kQ);
  CHECK(v.answer == Answer::yes);
  const auto* table = std::get_if<EpsilonTable>(&v.certificate);
  REQUIRE(table != nullptr);
  REQUIRE(table->entries.size() == 5);  // degrees -2..2
  std::map<GroupElement, std::vector<std::size_t>> expect = {
      {kZ.element({-2}), {2}},
      {kZ.element({-1}), {1, 2}},
      {kZ.element({0}), {0, 1, 2}},
      {kZ.element({1}), {0, 1}},
      {kZ.element({2}), {0}},
  };
  for (const auto& eps : table->entries) CHECK(eps.left_set == expect.at(eps.g));

  // A good grading over an ungraded ring is very good, hence epsilon-strong.
  GoodGrading pos = GoodGrading::from_offdiagonal(kZ2, {kZ2.element({1})});
  CHECK(is_epsilon_strong(GradingDescriptor{pos}, kQ).answer == Answer::yes);
}

TEST_CASE("epsilon-strong: product gradings") {
  GoodGrading pos = GoodGrading::from_offdiagonal(kZ2, {kZ2.element({1})});

  ProductGrading poly = product_grading(kZ, pos);
  Verdict no = is_epsilon_strong(GradingDescriptor{poly}, RingSpec::poly_ring());
  CHECK(no.answer == Answer::no);
  const auto* vc = std::get_if<VanishingComponent>(&no.certificate);
  REQUIRE(vc != nullptr);
  CHECK(vc->degree == poly.total_group().element({1, 0}));
  CHECK(vc->nonzero_witness == "x*e_{1,1}");

  ProductGrading gauss = product_grading(kZ2, pos);
  Verdict unknown = is_epsilon_strong(GradingDescriptor{gauss}, RingSpec::gaussian_field());
  CHECK(unknown.answer == Answer::unknown);

  ProductGrading degenerate = product_grading(GroupSpec{}, pos);
  CHECK(is_epsilon_strong(GradingDescriptor{degenerate}, kQ).answer == Answer::yes);

  CHECK_THROWS_AS(is_epsilon_strong(GradingDescriptor{poly}, kQ), domain_error);
}

TEST_CASE("epsilon-crossed verdicts with certificates") {
  Verdict b = epsilon_crossed_verdict(example_b(), kQ);
  CHECK(b.answer == Answer::yes);
  const auto* witnesses = std::get_if<WitnessSet>(&b.certificate);
  REQUIRE(witnesses != nullptr);
  CHECK(witnesses->pairs.size() == 5);  // g in {0, +-1, +-2}

  Verdict c = epsilon_crossed_verdict(example_c(), kQ);
  CHECK(c.answer == Answer::no);
  const auto* rank = std::get_if<RankCertificate>(&c.certificate);
  REQUIRE(rank != nullptr);
  CHECK(rank->class_sizes.at(kZ2.element({0})) == 2);
  CHECK(rank->class_sizes.at(kZ2.element({1})) == 1);
  CHECK(rank->rank_se == 5);
  CHECK(rank->lhs == 9);
  CHECK(rank->rhs == 10);

  Verdict l = epsilon_crossed_verdict(example_c(), RingSpec::leavitt());
  CHECK(l.answer == Answer::unknown);
  CHECK(std::holds_alternative<ClassSizeTable>(l.certificate));
}

TEST_CASE("rank invariants") {
  RankCertificate c = rank_invariants(example_c());
  CHECK(c.rank_se == 5);
  CHECK(c.supp_size == 2);
  CHECK(c.lhs == 9);
  CHECK(c.rhs == 10);
  // Oracle: Rank(S_e) equals the number of matrix units of degree e.
  std::size_t degree_e_units = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (example_c().unit_degree(i, j) == kZ2.identity()) ++degree_e_units;
  CHECK(degree_e_units == c.rank_se);

  RankCertificate a = rank_invariants(example_a());
  CHECK(a.rank_se == 3);
  CHECK(a.lhs == 9);
  CHECK(a.rhs == 9);

  VeryGoodGrading trivial(kZ3, std::vector<GroupElement>(4, kZ3.identity()));
  RankCertificate t = rank_invariants(trivial);
  CHECK(t.supp_size == 1);
  CHECK(t.rank_se == 16);
  CHECK(t.lhs == t.rhs);
}

TEST_CASE("qs_gap") {
  CHECK(qs_gap({Int(2), Int(1)}) == 1);
  CHECK(qs_gap({Int(1), Int(1), Int(1)}) == 0);
  CHECK(qs_gap({Int(3), Int(0), Int(0)}) == 18);
  CHECK_THROWS_AS(qs_gap({}), domain_error);
  CHECK_THROWS_AS(qs_gap({Int(-1)}), domain_error);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::vector<Int> xs;
    std::size_t n = 1 + rng() % 6;
    for (std::size_t k = 0; k < n; ++k) xs.push_back(Int(rng() % 50));
    Int gap = qs_gap(xs);
    CHECK(gap >= 0);
    bool all_equal = std::all_of(xs.begin(), xs.end(), [&](const Int& x) { return x == xs[0]; });
    CHECK((gap == 0) == all_equal);
  }
}

TEST_CASE("brute-force axiom check") {
  CHECK(brute_force_axiom_check(GradingDescriptor{example_b()}, kQ, 0).passed);

  // Deliberately corrupted unit-degree table: fails with an offending pair.
  std::vector<GroupElement> bad(9, kZ2.identity());
  bad[1] = kZ2.element({1});  // d(1,2) = 1, everything else 0
  GoodGrading corrupt = GoodGrading::from_unit_degrees(kZ2, 3, bad, /*validate=*/false);
  AxiomCheckReport report = brute_force_axiom_check(GradingDescriptor{corrupt}, kQ, 0);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.violations.empty());

  GoodGrading pos = GoodGrading::from_offdiagonal(kZ2, {kZ2.element({1})});
  ProductGrading poly = product_grading(kZ, pos);
  AxiomCheckReport poly_report =
      brute_force_axiom_check(GradingDescriptor{poly}, RingSpec::poly_ring(), 3);
  CHECK(poly_report.passed);
  CHECK(poly_report.pairs_checked == 256);  // (4 units x 4 generators)^2
}

TEST_CASE("locally-strong and strong agree with brute force on small censuses") {
  for (const GroupSpec& g : {kZ2, kZ3}) {
    auto elements = g.enumerate();
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& vg : all_tuples(g, n)) {
        bool all_locally = true;
        for (const auto& deg : elements) {
          Verdict v = is_locally_strong(vg, deg);
          ProductSpanCheck span = unit_product_span(vg, deg, g.neg(deg));
          CHECK((v.answer == Answer::yes) == span.spans);
          all_locally = all_locally && v.answer == Answer::yes;
        }
        Verdict strong = is_strong(vg);
        std::set<GroupElement> present(vg.tuple().begin(), vg.tuple().end());
        CHECK((strong.answer == Answer::yes) == (present.size() == elements.size()));
        CHECK((strong.answer == Answer::yes) == all_locally);
      }
    }
  }
}

TEST_CASE("class-size criterion, rank formula and witnesses agree on random instances") {
  std::mt19937_64 rng(64);
  std::vector<GroupSpec> pool = {kZ, kZ2, kZ3, GroupSpec::parse("Z/4"),
                                 GroupSpec::parse("Z/2 x Z/2"), GroupSpec::parse("Z x Z/2")};
  for (int t = 0; t < 150; ++t) {
    const GroupSpec& g = pool[rng() % pool.size()];
    std::size_t n = 1 + rng() % 8;
    std::vector<GroupElement> tuple = {g.identity()};
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<std::int64_t> comps;
      for (auto m : g.factors())
        comps.push_back(m == 0 ? static_cast<std::int64_t>(rng() % 7) - 3
                               : static_cast<std::int64_t>(rng() % m));
      tuple.push_back(g.element(std::move(comps)));
    }
    VeryGoodGrading vg(g, tuple);

    DegreeClasses classes = x_classes(vg);
    std::size_t first = classes.classes.begin()->second.size();
    bool sizes_equal =
        std::all_of(classes.classes.begin(), classes.classes.end(),
                    [&](const auto& kv) { return kv.second.size() == first; });

    RankCertificate cert = rank_invariants(vg);
    CHECK(sizes_equal == (cert.lhs == cert.rhs));
    // n^2 >= supp*rank is false in general; the assertable relation is
    // (sum sizes)^2 <= supp * sum sizes^2 with equality iff all equal.
    CHECK(cert.lhs <= cert.rhs);

    bool witnesses_ok = true;
    try {
      for (const auto& deg : vg.unit_degree_support()) construct_witnesses(vg, deg);
    } catch (const precondition_error&) {
      witnesses_ok = false;
    }
    CHECK(witnesses_ok == sizes_equal);

    Verdict verdict = epsilon_crossed_verdict(vg, kQ);
    CHECK((verdict.answer == Answer::yes) == sizes_equal);
    if (verdict.answer == Answer::no) {
      std::vector<Int> sizes;
      for (const auto& [deg, idxs] : classes.classes)
        sizes.push_back(Int(static_cast<std::int64_t>(idxs.size())));
      CHECK(qs_gap(sizes) > 0);
    }
  }
}
