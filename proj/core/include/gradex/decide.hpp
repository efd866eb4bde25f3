#ifndef GRADEX_DECIDE_HPP
#define GRADEX_DECIDE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gradex/matrix.hpp"

namespace gradex {

enum class Answer { yes, no, unknown };
enum class Property { locally_strong, strong, epsilon_strong, epsilon_crossed };

std::string answer_text(Answer a);
std::string property_text(Property p);

struct EpsilonTable {
  std::vector<EpsilonData> entries;
};

struct WitnessSet {
  std::vector<WitnessPair> pairs;
};

struct ClassSizeTable {
  std::map<GroupElement, std::size_t> sizes;
};

/// Rank bookkeeping behind the count criterion: with class sizes
/// |X_g|, Rank(S_e) = sum |X_g|^2, and the grading is a crossed product
/// over an IBN ring iff n^2 = |Supp(V)| * Rank(S_e).
struct RankCertificate {
  std::map<GroupElement, std::size_t> class_sizes;
  std::uint64_t rank_se = 0;
  std::uint64_t supp_size = 0;
  std::uint64_t lhs = 0;  // n^2
  std::uint64_t rhs = 0;  // supp_size * rank_se
};

/// A degree g whose component is nonzero while the degree -g component
/// vanishes, so no epsilon idempotent can act as a unit on S_g.
struct VanishingComponent {
  GroupElement degree;
  std::string nonzero_witness;  // e.g. "x*e_{1,1}"
};

/// An element of G outside the degree tuple, refuting strongness.
struct MissingDegree {
  GroupElement degree;
};

using Certificate = std::variant<std::monostate, EpsilonTable, WitnessSet, RankCertificate,
                                 VanishingComponent, MissingDegree, ClassSizeTable>;

struct Verdict {
  Property property;
  std::optional<GroupElement> subject;  // the degree, for locally_strong
  Answer answer = Answer::unknown;
  Certificate certificate;
  std::string note;
};

/// S_g S_{-g} = S_e iff g lies in every row degree set iff eps_g = 1;
/// both criteria are computed and must agree.
Verdict is_locally_strong(const VeryGoodGrading& grading, const GroupElement& g);

/// Strong iff the degree tuple covers all of G; never strong over an
/// infinite group. Cross-checked against is_locally_strong.
Verdict is_strong(const VeryGoodGrading& grading);

/// Very good gradings are always epsilon-strong (certificate: verified
/// epsilon table). Product gradings are refuted by a vanishing
/// component when one exists, otherwise undecided here.
Verdict is_epsilon_strong(const GradingDescriptor& grading, const RingSpec& ring);

/// Yes with a verified witness set when all nonempty degree classes
/// share one cardinality; otherwise no via the rank criterion when the
/// ring has IBN, and unknown without IBN.
Verdict epsilon_crossed_verdict(const VeryGoodGrading& grading, const RingSpec& ring);

RankCertificate rank_invariants(const VeryGoodGrading& grading);

/// N*sum(x_i^2) - (sum x_i)^2, computed both directly and as
/// sum_{i<j} (x_i - x_j)^2; the two must agree. Zero iff all equal.
Int qs_gap(const std::vector<Int>& xs);

struct AxiomCheckReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  struct Violation {
    GroupElement g, h;
    std::string detail;
  };
  std::vector<Violation> violations;
};

/// Multiplies every pair of homogeneous basis generators (matrix units
/// times homogeneous coefficient generators, truncated at degree_bound
/// for polynomial coefficients) and checks each product lands in the
/// degree g+h component.
AxiomCheckReport brute_force_axiom_check(const GradingDescriptor& grading,
                                         const RingSpec& ring, std::int64_t degree_bound);

/// Combinatorics of S_g * S_h against S_{g+h} on matrix units:
/// product_zero when no unit of degree g composes with one of degree h,
/// spans when every unit of degree g+h arises as such a product.
struct ProductSpanCheck {
  bool product_zero = false;
  bool spans = false;
};

ProductSpanCheck unit_product_span(const VeryGoodGrading& grading, const GroupElement& g,
                                   const GroupElement& h);

}  // namespace gradex

#endif
