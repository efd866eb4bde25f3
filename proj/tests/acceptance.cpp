// Acceptance suite: end-to-end checks of the analyzer against the known
// desk-scale gradings, exhaustive small censuses and randomized
// equivalence sweeps. Prints one pass/fail line per criterion; the
// process exits nonzero if any criterion fails or overruns its budget.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gradex/analysis.hpp"

using namespace gradex;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

std::string config_path(const std::string& name) {
  return std::string(GRADEX_CONFIG_DIR) + "/" + name;
}

const GroupSpec kZ = GroupSpec::parse("Z");
const GroupSpec kZ2 = GroupSpec::parse("Z/2");
const GroupSpec kZ3 = GroupSpec::parse("Z/3");
const RingSpec kQ = RingSpec::rationals();

// Matrix-level oracle, independent of the row-set criterion inside
// is_locally_strong: multiply every pair of units from S_g x S_{-g} and
// compare the set of nonzero products with the units of S_e.
bool oracle_locally_strong(const VeryGoodGrading& vg, const GroupElement& g) {
  std::size_t n = vg.n();
  std::vector<GradedMatrix> left, right;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (vg.unit_degree(i, j) == g) left.push_back(GradedMatrix::unit(n, kQ, i, j));
      if (vg.unit_degree(i, j) == vg.group().neg(g))
        right.push_back(GradedMatrix::unit(n, kQ, i, j));
    }
  std::set<std::pair<std::size_t, std::size_t>> hit, target;
  for (const auto& a : left)
    for (const auto& b : right) {
      GradedMatrix prod = matrix_mul(a, b);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!ring_is_zero(prod.at(i, j))) hit.insert({i, j});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (vg.unit_degree(i, j) == vg.group().identity()) target.insert({i, j});
  return hit == target;
}

// ---------------------------------------------------------------------------

void criterion_1_z_graded_m3() {
  AnalysisReport report = run_analyze_file(config_path("example_b.cfg"));
  require(report.epsilon_strong.answer == Answer::yes, "epsilon-strong must be yes");
  require(report.strong.has_value() && report.strong->answer == Answer::no,
          "strong must be no");

  // Brute-force confirmation that S_3 S_{-3} = {0} != S_0.
  VeryGoodGrading vg(report.config.group, report.config.tuple);
  GroupElement three = kZ.element({3});
  std::size_t units_deg3 = 0, units_deg_e = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (vg.unit_degree(i, j) == three) ++units_deg3;
      if (vg.unit_degree(i, j) == kZ.identity()) ++units_deg_e;
    }
  require(units_deg3 == 0 && units_deg_e == 3, "S_3 must be zero while S_0 is not");
  require(epsilon(vg, three).epsilon.is_zero(), "eps_3 must be the zero matrix");
  require(!oracle_locally_strong(vg, three), "S_3 S_{-3} must not span S_0");

  require(report.epsilon_crossed.has_value() &&
              report.epsilon_crossed->answer == Answer::yes,
          "epsilon-crossed must be yes");
  require(report.witnesses.size() == 5, "expected 5 witness pairs, got " +
                                            std::to_string(report.witnesses.size()));
  for (const auto& w : report.witnesses) {
    require(matrix_mul(w.a, w.b) == epsilon(vg, w.g, kQ).epsilon, "A*B != eps_g");
    require(matrix_mul(w.b, w.a) == epsilon(vg, kZ.neg(w.g), kQ).epsilon, "B*A != eps_{-g}");
  }
}

void criterion_2_z2_graded_m3_rank() {
  AnalysisReport report = run_analyze_file(config_path("example_c_rational.cfg"));
  require(report.strong.has_value() && report.strong->answer == Answer::yes,
          "strong must be yes");
  require(report.epsilon_crossed.has_value() &&
              report.epsilon_crossed->answer == Answer::no,
          "epsilon-crossed must be no");
  const auto* cert = std::get_if<RankCertificate>(&report.epsilon_crossed->certificate);
  require(cert != nullptr, "no rank certificate attached");
  require(cert->class_sizes.at(kZ2.element({0})) == 2 &&
              cert->class_sizes.at(kZ2.element({1})) == 1,
          "class sizes must be {2, 1}");
  require(cert->rank_se == 5, "Rank(S_e) must be 5");
  require(cert->lhs == 9 && cert->rhs == 10, "9 != 2*5 must be the exact comparison");
}

void criterion_3_leavitt_square() {
  LeavittVerifyReport report = run_leavitt_verify();
  RingSpec ring = RingSpec::leavitt();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      require(report.c_squared.at(i, j) == (i == j ? ring_one(ring) : ring_zero(ring)),
              "C^2 entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  ") is not the Kronecker delta");
  require(report.c_homogeneous_degree_one, "C must be homogeneous of degree 1");
  require(report.all_ok(), "leavitt verification reported a failure");
}

void criterion_4_z3_crossed() {
  AnalysisReport report = run_analyze_file(config_path("example_a.cfg"));
  require(report.strong.has_value() && report.strong->answer == Answer::yes,
          "strong must be yes");
  VeryGoodGrading vg(report.config.group, report.config.tuple);
  for (const auto& g : kZ3.enumerate())
    require(epsilon(vg, g).epsilon == GradedMatrix::identity(3, kQ),
            "eps_" + kZ3.format_element(g) + " must be the identity");
  require(report.epsilon_crossed.has_value() &&
              report.epsilon_crossed->answer == Answer::yes,
          "epsilon-crossed must be yes");
  require(!report.witnesses.empty(), "witnesses missing");
  for (const auto& w : report.witnesses) {
    require(matrix_mul(w.a, w.b) == GradedMatrix::identity(3, kQ),
            "witness A*B must be the identity (invertible witness)");
    require(matrix_mul(w.b, w.a) == GradedMatrix::identity(3, kQ),
            "witness B*A must be the identity (invertible witness)");
  }
}

void criterion_5_polynomial_counterexample() {
  AnalysisReport report = run_analyze_file(config_path("example_polyring.cfg"));
  require(report.config.degree_bound == 3, "bundled config must check at degree bound 3");
  require(report.axiom_check.passed, "the product grading must satisfy the grading axioms");
  require(report.epsilon_strong.answer == Answer::no, "epsilon-strong must be no");
  const auto* cert = std::get_if<VanishingComponent>(&report.epsilon_strong.certificate);
  require(cert != nullptr, "no vanishing-component certificate attached");
  GroupSpec total = GroupSpec::parse("Z x Z/2");
  require(cert->degree == total.element({1, 0}), "certificate degree must be (1,0)");
}

void criterion_6_non_homogeneous_witness() {
  GoodGrading pos = GoodGrading::from_offdiagonal(kZ2, {kZ2.element({1})});
  ProductGrading gauss = product_grading(kZ2, pos);
  RingSpec q_i = RingSpec::gaussian_field();
  GradedMatrix m = GradedMatrix::scaled_unit(2, q_i, gaussian(1, 1), 0, 0);
  auto parts = decompose(m, GradingDescriptor{gauss});
  require(parts.size() == 2, "(1+i)e_{1,1} must decompose into exactly 2 components, got " +
                                 std::to_string(parts.size()));
}

void criterion_7_exhaustive_oracle_equivalence() {
  std::size_t checked = 0;
  for (const GroupSpec& g : {kZ2, kZ3}) {
    auto elements = g.enumerate();
    std::size_t m = elements.size();
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t total = 1;
      for (std::size_t k = 1; k < n; ++k) total *= m;
      for (std::size_t rank = 0; rank < total; ++rank) {
        std::vector<GroupElement> tuple = {g.identity()};
        std::size_t r = rank;
        for (std::size_t k = 1; k < n; ++k) {
          tuple.push_back(elements[r % m]);
          r /= m;
        }
        VeryGoodGrading vg(g, tuple);
        bool all_local = true;
        for (const auto& deg : elements) {
          bool got = is_locally_strong(vg, deg).answer == Answer::yes;
          bool expect = oracle_locally_strong(vg, deg);
          require(got == expect, "locally-strong disagrees with brute force");
          all_local = all_local && got;
          ++checked;
        }
        std::set<GroupElement> present(tuple.begin(), tuple.end());
        bool strong = is_strong(vg).answer == Answer::yes;
        require(strong == (present.size() == m), "strong disagrees with tuple coverage");
        require(strong == all_local, "strong disagrees with all-degrees locally strong");
      }
    }
  }
  require(checked == (2 * 15 + 3 * 40), "unexpected instance count");
}

void criterion_8_randomized_equivalences() {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<GroupSpec> pool = {kZ,
                                 kZ2,
                                 kZ3,
                                 GroupSpec::parse("Z/4"),
                                 GroupSpec::parse("Z/5"),
                                 GroupSpec::parse("Z/6"),
                                 GroupSpec::parse("Z/2 x Z/2"),
                                 GroupSpec::parse("Z x Z/2")};
  for (int t = 0; t < 1000; ++t) {
    const GroupSpec& g = pool[rng() % pool.size()];
    std::size_t n = 1 + rng() % 8;
    std::vector<GroupElement> tuple = {g.identity()};
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<std::int64_t> comps;
      for (auto m : g.factors())
        comps.push_back(m == 0 ? static_cast<std::int64_t>(rng() % 9) - 4
                               : static_cast<std::int64_t>(rng() % m));
      tuple.push_back(g.element(std::move(comps)));
    }
    VeryGoodGrading vg(g, tuple);

    // Degree-class sizes, counted directly from the tuple.
    std::map<GroupElement, std::uint64_t> sizes;
    for (const auto& deg : tuple) ++sizes[deg];
    std::uint64_t first = sizes.begin()->second;
    bool criterion_sizes = std::all_of(sizes.begin(), sizes.end(),
                                       [&](const auto& kv) { return kv.second == first; });

    // Rank formula n^2 = |Supp(V)| * Rank(S_e), computed in place.
    std::uint64_t rank_se = 0;
    for (const auto& [deg, s] : sizes) rank_se += s * s;
    bool criterion_rank =
        static_cast<std::uint64_t>(n) * n == sizes.size() * rank_se;
    require(static_cast<std::uint64_t>(n) * n <= sizes.size() * rank_se,
            "(sum sizes)^2 <= supp * sum sizes^2 must always hold");

    // Witness construction across the unit-degree support.
    bool witnesses_ok = true;
    try {
      for (const auto& deg : vg.unit_degree_support()) {
        WitnessPair w = construct_witnesses(vg, deg);
        require(matrix_mul(w.a, w.b) == epsilon(vg, deg).epsilon, "A*B != eps_g");
        require(matrix_mul(w.b, w.a) == epsilon(vg, g.neg(deg)).epsilon, "B*A != eps_{-g}");
      }
    } catch (const precondition_error&) {
      witnesses_ok = false;
    }

    require(criterion_sizes == criterion_rank,
            "class-size criterion and rank formula disagree");
    require(criterion_sizes == witnesses_ok,
            "class-size criterion and witness construction disagree");

    // qs_gap: both formulas agree (checked internally) and detect equality.
    std::vector<Int> size_list;
    for (const auto& [deg, s] : sizes) size_list.push_back(Int(s));
    Int gap = qs_gap(size_list);
    require((gap == 0) == criterion_sizes, "qs_gap zero-test disagrees with class sizes");

    // Epsilon table properties over the unit-degree support.
    for (const auto& deg : vg.unit_degree_support()) {
      EpsilonData eps = epsilon(vg, deg);
      EpsilonData eps_neg = epsilon(vg, g.neg(deg));
      require(matrix_mul(eps.epsilon, eps.epsilon) == eps.epsilon, "eps_g not idempotent");
      require(eps.right_set == eps_neg.left_set, "R_g != L_{-g}");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (vg.unit_degree(i, j) != deg) continue;
          GradedMatrix u = GradedMatrix::unit(n, kQ, i, j);
          require(matrix_mul(eps.epsilon, u) == u, "eps_g does not fix S_g on the left");
          require(matrix_mul(u, eps_neg.epsilon) == u,
                  "eps_{-g} does not fix S_g on the right");
        }
    }
  }
}

// Independent all-orders rewriting oracle for the L(1,2) relations.
using Terms = std::map<LeavittWord, Rational>;

const Terms& nf_all_orders(const LeavittWord& w, std::map<LeavittWord, Terms>& memo) {
  struct Rule {
    const char* lhs;
    std::vector<std::pair<int, const char*>> rhs;
  };
  static const std::vector<Rule> rules = {
      {"aA", {{1, ""}}},  {"bB", {{1, ""}}},           {"aB", {}},
      {"bA", {}},         {"Bb", {{1, ""}, {-1, "Aa"}}},
  };
  auto hit = memo.find(w);
  if (hit != memo.end()) return hit->second;
  std::vector<Terms> results;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos)
    for (const auto& rule : rules) {
      if (w.compare(pos, 2, rule.lhs) != 0) continue;
      Terms acc;
      for (const auto& [coef, infix] : rule.rhs) {
        LeavittWord next = w.substr(0, pos) + infix + w.substr(pos + 2);
        for (const auto& [word, c] : nf_all_orders(next, memo)) {
          acc[word] += c * coef;
          if (acc[word] == 0) acc.erase(word);
        }
      }
      results.push_back(std::move(acc));
    }
  if (results.empty()) {
    Terms self;
    self[w] = 1;
    return memo.emplace(w, std::move(self)).first->second;
  }
  for (std::size_t k = 1; k < results.size(); ++k)
    require(results[k] == results[0], "rewriting is strategy-dependent at word " + w);
  return memo.emplace(w, std::move(results[0])).first->second;
}

void criterion_9_leavitt_engine() {
  RingSpec spec = RingSpec::leavitt();
  auto nf = [&](const LeavittWord& w) {
    return leavitt_normal_form({{Rational(1), w}}, spec);
  };

  // The five defining relations.
  require(nf("aA") == ring_one(spec), "y1 x1 != 1");
  require(nf("bB") == ring_one(spec), "y2 x2 != 1");
  require(nf("aB") == ring_zero(spec), "y1 x2 != 0");
  require(nf("bA") == ring_zero(spec), "y2 x1 != 0");
  require(leavitt_normal_form({{1, LeavittWord("Aa")}, {1, LeavittWord("Bb")}}, spec) ==
              ring_one(spec),
          "x1 y1 + x2 y2 != 1");

  // All words of length <= 5.
  std::vector<LeavittWord> words = {LeavittWord{}};
  {
    const char gens[] = {'A', 'B', 'a', 'b'};
    std::vector<LeavittWord> layer = {LeavittWord{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<LeavittWord> next;
      for (const auto& w : layer)
        for (char c : gens) next.push_back(w + c);
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }
  require(words.size() == 1365, "word enumeration is off");

  // Strategy independence against the all-orders oracle.
  std::map<LeavittWord, Terms> memo;
  std::map<LeavittWord, RingElement> nf_cache;
  for (const auto& w : words) {
    RingElement got = nf(w);
    require(std::get<LeavittValue>(got.value) == nf_all_orders(w, memo),
            "fixed strategy disagrees with the all-orders oracle at " + w);
    nf_cache.emplace(w, std::move(got));
  }

  // Multiplicativity on every word pair: concatenate-then-reduce equals
  // reduce-then-multiply, and the unit laws hold.
  for (const auto& u : words) {
    require(ring_mul(ring_one(spec), nf_cache.at(u), spec) == nf_cache.at(u), "1*u != u");
    for (const auto& v : words)
      require(nf(u + v) == ring_mul(nf_cache.at(u), nf_cache.at(v), spec),
              "normal form is not multiplicative at " + u + " | " + v);
  }

  // Associativity: exhaustive on words of length <= 3, sampled beyond.
  std::vector<LeavittWord> short_words(words.begin(), words.begin() + 85);
  for (const auto& a : short_words)
    for (const auto& b : short_words)
      for (const auto& c : short_words) {
        const RingElement& na = nf_cache.at(a);
        const RingElement& nb = nf_cache.at(b);
        const RingElement& nc = nf_cache.at(c);
        require(ring_mul(ring_mul(na, nb, spec), nc, spec) ==
                    ring_mul(na, ring_mul(nb, nc, spec), spec),
                "associativity fails");
      }
  std::mt19937_64 rng(12345);
  auto random_sum = [&]() {
    std::vector<std::pair<Rational, LeavittWord>> terms;
    for (int k = 0; k < 2; ++k)
      terms.emplace_back(Rational(static_cast<std::int64_t>(rng() % 9) - 4),
                         words[rng() % words.size()]);
    return leavitt_normal_form(terms, spec);
  };
  for (int t = 0; t < 1000; ++t) {
    RingElement a = random_sum(), b = random_sum(), c = random_sum();
    require(ring_mul(ring_mul(a, b, spec), c, spec) ==
                ring_mul(a, ring_mul(b, c, spec), spec),
            "associativity fails on formal sums");
    require(ring_mul(a, ring_add(b, c, spec), spec) ==
                ring_add(ring_mul(a, b, spec), ring_mul(a, c, spec), spec),
            "left distributivity fails");
    require(ring_mul(ring_add(a, b, spec), c, spec) ==
                ring_add(ring_mul(a, c, spec), ring_mul(b, c, spec), spec),
            "right distributivity fails");
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  void (*body)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Z-graded M_3(Q), tuple (0,-1,-2): epsilon-strong, not strong, crossed with 5 "
          "verified witness pairs", 1.0, criterion_1_z_graded_m3},
      {2, "Z/2-graded M_3(Q), tuple (0,0,1): strong but not crossed, rank certificate "
          "{2,1}, 5, 9 != 10", 1.0, criterion_2_z2_graded_m3_rank},
      {3, "M_3(L(1,2)): C^2 = I entrywise and C homogeneous of degree 1", 1.0,
       criterion_3_leavitt_square},
      {4, "Z/3-graded M_3(Q), tuple (0,1,2): strong, all epsilons = 1, invertible "
          "witnesses", 1.0, criterion_4_z3_crossed},
      {5, "Z x Z/2 product grading on M_2(Q[x]): axioms pass at degree bound 3, not "
          "epsilon-strong with vanishing component (1,0)", 1.0,
       criterion_5_polynomial_counterexample},
      {6, "(1+i)e_{1,1} under the Z/2 x Z/2 grading of M_2(Q(i)) has exactly 2 "
          "components", 1.0, criterion_6_non_homogeneous_witness},
      {7, "exhaustive n <= 4 over Z/2 and Z/3: locally-strong and strong match brute "
          "force, zero disagreements", 30.0, criterion_7_exhaustive_oracle_equivalence},
      {8, "1000 random instances (n <= 8): class-size criterion, rank formula and "
          "witness construction pairwise consistent; epsilon table properties hold", 60.0,
       criterion_8_randomized_equivalences},
      {9, "L(1,2) engine: defining relations, ring axioms on all word pairs up to length "
          "5, strategy-independent normal forms", 120.0, criterion_9_leavitt_engine},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      c.body();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && elapsed >= c.budget_seconds)
      problem = "exceeded the " + std::to_string(c.budget_seconds) + "s budget";
    std::ostringstream line;
    line << (problem.empty() ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
         << c.title << " (" << static_cast<long>(elapsed * 1000.0) << " ms)";
    if (!problem.empty()) {
      line << "\n       " << problem;
      ++failures;
    }
    std::cout << line.str() << "\n";
  }
  if (failures != 0) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
