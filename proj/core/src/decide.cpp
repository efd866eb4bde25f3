#include "gradex/decide.hpp"

#include <algorithm>
#include <set>

namespace gradex {

std::string answer_text(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  throw domain_error("corrupt answer");
}

std::string property_text(Property p) {
  switch (p) {
    case Property::locally_strong: return "locally-strong";
    case Property::strong: return "strong";
    case Property::epsilon_strong: return "epsilon-strong";
    case Property::epsilon_crossed: return "epsilon-crossed";
  }
  throw domain_error("corrupt property");
}

Verdict is_locally_strong(const VeryGoodGrading& grading, const GroupElement& g) {
  auto rows = row_degree_sets(grading);
  std::vector<std::size_t> missing_rows;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].count(g)) missing_rows.push_back(i);

  EpsilonData eps = epsilon(grading, g);
  bool eps_is_identity = eps.left_set.size() == grading.n();
  if (missing_rows.empty() != eps_is_identity)
    throw std::logic_error("row criterion and epsilon criterion disagree");

  Verdict v{Property::locally_strong, g, missing_rows.empty() ? Answer::yes : Answer::no,
            EpsilonTable{{eps}}, ""};
  if (!missing_rows.empty()) {
    v.note = "degree missing from row(s):";
    for (auto i : missing_rows) v.note += " " + std::to_string(i + 1);
  }
  return v;
}

namespace {

// An element of G outside the tuple set, if any.
std::optional<GroupElement> find_missing_degree(const VeryGoodGrading& grading) {
  const GroupSpec& gs = grading.group();
  std::set<GroupElement> present(grading.tuple().begin(), grading.tuple().end());
  if (gs.is_finite()) {
    for (const auto& g : gs.enumerate())
      if (!present.count(g)) return g;
    return std::nullopt;
  }
  // Overshoot every tuple entry in the first free coordinate.
  std::size_t free_pos = 0;
  while (gs.factors()[free_pos] != 0) ++free_pos;
  std::int64_t beyond = 1;
  for (const auto& g : grading.tuple())
    beyond = std::max({beyond, g.comps[free_pos] + 1, -g.comps[free_pos] + 1});
  std::vector<std::int64_t> comps(gs.factor_count(), 0);
  comps[free_pos] = beyond;
  return gs.element(std::move(comps));
}

}  // namespace

Verdict is_strong(const VeryGoodGrading& grading) {
  auto missing = find_missing_degree(grading);

  // Cross-check against the componentwise criterion.
  std::vector<GroupElement> domain = grading.unit_degree_support();
  if (grading.group().is_finite()) {
    auto all = grading.group().enumerate();
    domain.insert(domain.end(), all.begin(), all.end());
  }
  if (!missing.has_value()) {
    for (const auto& g : domain)
      if (is_locally_strong(grading, g).answer != Answer::yes)
        throw std::logic_error("full tuple but a degree is not locally strong");
  } else if (is_locally_strong(grading, grading.group().neg(*missing)).answer != Answer::no) {
    throw std::logic_error("missing degree but its inverse is locally strong");
  }

  if (missing.has_value()) {
    Verdict v{Property::strong, std::nullopt, Answer::no, MissingDegree{*missing}, ""};
    v.note = grading.group().is_finite()
                 ? "degree tuple does not cover " + grading.group().format()
                 : "a finite tuple cannot cover the infinite group " + grading.group().format();
    return v;
  }
  EpsilonTable table;
  for (const auto& g : grading.group().enumerate())
    table.entries.push_back(epsilon(grading, g));
  return Verdict{Property::strong, std::nullopt, Answer::yes, std::move(table), ""};
}

namespace {

// eps_g s = s and s eps_{-g} = s for every homogeneous basis element s
// of degree g, checked by exact multiplication.
void verify_epsilon_entry(const VeryGoodGrading& grading, const EpsilonData& eps,
                          const RingSpec& ring) {
  EpsilonData eps_neg = epsilon(grading, grading.group().neg(eps.g), ring);
  for (std::size_t i = 0; i < grading.n(); ++i)
    for (std::size_t j = 0; j < grading.n(); ++j) {
      if (grading.unit_degree(i, j) != eps.g) continue;
      GradedMatrix u = GradedMatrix::unit(grading.n(), ring, i, j);
      if (matrix_mul(eps.epsilon, u) != u || matrix_mul(u, eps_neg.epsilon) != u)
        throw std::logic_error("epsilon fails to act as a unit on its component");
    }
}

Verdict epsilon_strong_very_good(const VeryGoodGrading& vg, const RingSpec& ring) {
  EpsilonTable table;
  for (const auto& g : vg.unit_degree_support()) {
    EpsilonData eps = epsilon(vg, g, ring);
    verify_epsilon_entry(vg, eps, ring);
    table.entries.push_back(std::move(eps));
  }
  return Verdict{Property::epsilon_strong, std::nullopt, Answer::yes, std::move(table), ""};
}

}  // namespace

Verdict is_epsilon_strong(const GradingDescriptor& grading, const RingSpec& ring) {
  if (const auto* vg = std::get_if<VeryGoodGrading>(&grading))
    return epsilon_strong_very_good(*vg, ring);
  if (const auto* gg = std::get_if<GoodGrading>(&grading))
    return epsilon_strong_very_good(gg->to_very_good(), ring);

  const auto& pg = std::get<ProductGrading>(grading);
  if (pg.coeff_group.is_trivial())
    return epsilon_strong_very_good(pg.position.to_very_good(), ring);

  auto ring_group = ring.coeff_grading_group();
  if (!ring_group.has_value() || *ring_group != pg.coeff_group)
    throw domain_error("product grading coefficient group " + pg.coeff_group.format() +
                       " does not match ring " + ring.format());

  if (auto a = coeff_vanishing_degree(ring)) {
    // S_(a,e) contains r*e_{1,1} for nonzero r of coefficient degree a,
    // while S_(-a,e) = 0: no epsilon can act as a unit on S_(a,e).
    GroupElement g = pg.total_degree(*a, 0, 0);
    std::int64_t a0 = a->comps.at(0);
    auto gens = coeff_homogeneous_generators(ring, a0 < 0 ? -a0 : a0);
    std::string witness = "e_{1,1}";
    for (const auto& [deg, r] : gens)
      if (deg == *a) witness = ring_format(r, ring) + "*e_{1,1}";
    return Verdict{Property::epsilon_strong, std::nullopt, Answer::no,
                   VanishingComponent{g, witness},
                   "component of the negated degree vanishes"};
  }
  return Verdict{Property::epsilon_strong, std::nullopt, Answer::unknown, std::monostate{},
                 "no vanishing-component witness exists; full decision for product "
                 "gradings is out of scope"};
}

RankCertificate rank_invariants(const VeryGoodGrading& grading) {
  DegreeClasses classes = x_classes(grading);
  RankCertificate cert;
  std::uint64_t total = 0;
  for (const auto& [g, idxs] : classes.classes) {
    cert.class_sizes[g] = idxs.size();
    cert.rank_se += static_cast<std::uint64_t>(idxs.size()) * idxs.size();
    total += idxs.size();
  }
  if (total != grading.n()) throw std::logic_error("degree classes do not partition indices");
  cert.supp_size = classes.supp.size();
  cert.lhs = static_cast<std::uint64_t>(grading.n()) * grading.n();
  cert.rhs = cert.supp_size * cert.rank_se;
  return cert;
}

Verdict epsilon_crossed_verdict(const VeryGoodGrading& grading, const RingSpec& ring) {
  DegreeClasses classes = x_classes(grading);
  std::size_t first = classes.classes.begin()->second.size();
  bool equal_sizes = std::all_of(classes.classes.begin(), classes.classes.end(),
                                 [&](const auto& kv) { return kv.second.size() == first; });

  if (equal_sizes) {
    WitnessSet witnesses;
    for (const auto& g : grading.unit_degree_support()) {
      WitnessPair w = construct_witnesses(grading, g, ring);
      EpsilonData eps = epsilon(grading, g, ring);
      EpsilonData eps_neg = epsilon(grading, grading.group().neg(g), ring);
      if (matrix_mul(w.a, w.b) != eps.epsilon || matrix_mul(w.b, w.a) != eps_neg.epsilon)
        throw std::logic_error("witness products do not reproduce the epsilons");
      auto deg = homogeneous_degree(w.a, GradingDescriptor{grading});
      if (!w.a.is_zero() && (!deg.has_value() || *deg != g))
        throw std::logic_error("witness is not homogeneous of the requested degree");
      witnesses.pairs.push_back(std::move(w));
    }
    return Verdict{Property::epsilon_crossed, std::nullopt, Answer::yes, std::move(witnesses),
                   "all nonempty degree classes share cardinality " + std::to_string(first)};
  }

  if (ring.has_ibn()) {
    RankCertificate cert = rank_invariants(grading);
    return Verdict{Property::epsilon_crossed, std::nullopt, Answer::no, cert,
                   "rank criterion fails: " + std::to_string(cert.lhs) +
                       " != " + std::to_string(cert.supp_size) + "*" +
                       std::to_string(cert.rank_se)};
  }

  ClassSizeTable sizes;
  for (const auto& [g, idxs] : classes.classes) sizes.sizes[g] = idxs.size();
  return Verdict{Property::epsilon_crossed, std::nullopt, Answer::unknown, std::move(sizes),
                 "class sizes differ but " + ring.format() +
                     " lacks IBN; the count criterion is sufficient, not necessary"};
}

Int qs_gap(const std::vector<Int>& xs) {
  if (xs.empty()) throw domain_error("qs_gap needs a nonempty sequence");
  for (const auto& x : xs)
    if (x < 0) throw domain_error("qs_gap entries must be non-negative");
  Int n = static_cast<std::int64_t>(xs.size());
  Int sum = 0, sum_sq = 0;
  for (const auto& x : xs) {
    sum += x;
    sum_sq += x * x;
  }
  Int direct = n * sum_sq - sum * sum;
  Int pairwise = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      pairwise += (xs[i] - xs[j]) * (xs[i] - xs[j]);
  if (direct != pairwise) throw std::logic_error("qs_gap formulas disagree");
  return direct;
}

AxiomCheckReport brute_force_axiom_check(const GradingDescriptor& grading,
                                         const RingSpec& ring, std::int64_t degree_bound) {
  std::size_t n = descriptor_n(grading);
  const auto* pg = std::get_if<ProductGrading>(&grading);
  bool graded_coeff = pg != nullptr && !pg->coeff_group.is_trivial();
  auto coeff_gens = graded_coeff
                        ? coeff_homogeneous_generators(ring, degree_bound)
                        : std::vector<std::pair<GroupElement, RingElement>>{
                              {GroupElement{{}}, ring_one(ring)}};

  struct Generator {
    GroupElement degree;
    GradedMatrix m;
  };
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [a, r] : coeff_gens) {
        GradedMatrix m = GradedMatrix::scaled_unit(n, ring, r, i, j);
        auto deg = homogeneous_degree(m, grading);
        if (!deg.has_value())
          throw std::logic_error("basis generator is not homogeneous");
        gens.push_back({*deg, std::move(m)});
      }

  AxiomCheckReport report;
  GroupSpec total = descriptor_total_group(grading);
  for (const auto& left : gens)
    for (const auto& right : gens) {
      ++report.pairs_checked;
      auto parts = decompose(matrix_mul(left.m, right.m), grading);
      GroupElement expect = total.op(left.degree, right.degree);
      if (parts.empty()) continue;  // zero product is in every component
      if (parts.size() != 1 || parts.begin()->first != expect) {
        report.passed = false;
        report.violations.push_back(
            {left.degree, right.degree,
             "product of degrees " + total.format_element(left.degree) + ", " +
                 total.format_element(right.degree) + " not concentrated in degree " +
                 total.format_element(expect)});
      }
    }
  return report;
}

ProductSpanCheck unit_product_span(const VeryGoodGrading& grading, const GroupElement& g,
                                   const GroupElement& h) {
  std::size_t n = grading.n();
  GroupElement gh = grading.group().op(g, h);
  std::set<std::pair<std::size_t, std::size_t>> target, hit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (grading.unit_degree(i, j) == gh) target.insert({i, j});
  bool any_product = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (grading.unit_degree(i, k) != g) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (grading.unit_degree(k, j) == h) {
          any_product = true;
          hit.insert({i, j});
        }
    }
  return ProductSpanCheck{!any_product, hit == target};
}

}  // namespace gradex
