#ifndef GRADEX_COEFF_HPP
#define GRADEX_COEFF_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gradex/errors.hpp"
#include "gradex/groups.hpp"
#include "gradex/numeric.hpp"

namespace gradex {

enum class RingVariant {
  rationals,       // Q
  prime_field,     // F_p
  integers,        // Z
  gaussian_field,  // Q(i), Z/2-graded: degree 0 real, degree 1 imaginary
  poly_ring,       // Q[x], Z-graded by x-degree (support in N)
  leavitt          // Leavitt algebra L(1,2) over Q or F_p
};

class RingSpec {
 public:
  static RingSpec rationals() { return RingSpec(RingVariant::rationals, 0); }
  static RingSpec prime_field(std::int64_t p);
  static RingSpec integers() { return RingSpec(RingVariant::integers, 0); }
  static RingSpec gaussian_field() { return RingSpec(RingVariant::gaussian_field, 0); }
  static RingSpec poly_ring() { return RingSpec(RingVariant::poly_ring, 0); }
  /// base_prime = 0 means base field Q, otherwise F_p.
  static RingSpec leavitt(std::int64_t base_prime = 0);

  /// Parses "Q", "Z", "F5", "Q(i)", "Q[x]", "L(1,2)", "L(1,2;F5)".
  static RingSpec parse(const std::string& text);
  std::string format() const;

  RingVariant variant() const { return variant_; }
  std::int64_t prime() const { return p_; }

  /// Classification fact, never computed: every variant except the
  /// Leavitt algebra has invariant basis number.
  bool has_ibn() const { return variant_ != RingVariant::leavitt; }

  /// Intrinsic coefficient grading: Z/2 for Q(i), Z for Q[x], absent
  /// for the ungraded variants.
  std::optional<GroupSpec> coeff_grading_group() const;

  bool operator==(const RingSpec&) const = default;

 private:
  RingSpec(RingVariant v, std::int64_t p) : variant_(v), p_(p) {}
  RingVariant variant_;
  std::int64_t p_;  // prime for prime_field; Leavitt base prime (0 = Q)
};

/// Residue in [0, p).
struct PrimeFieldValue {
  std::int64_t v = 0;
  auto operator<=>(const PrimeFieldValue&) const = default;
};

/// a + b*i with exact rational a, b.
struct GaussianValue {
  Rational re, im;
  bool operator==(const GaussianValue&) const = default;
};

/// x-degree -> coefficient; no zero coefficients stored.
using PolyValue = std::map<std::int64_t, Rational>;

/// Word over the Leavitt generators, one char per generator.
enum class LGen : char { x1 = 'A', x2 = 'B', y1 = 'a', y2 = 'b' };
using LeavittWord = std::string;
LeavittWord lword(std::initializer_list<LGen> gens);
std::string leavitt_word_text(const LeavittWord& w);  // "y1*x1"; "1" when empty

/// Formal sum word -> scalar in normal form: no zero scalars, no word
/// containing a factor reducible by the L(1,2) rewriting rules.
using LeavittValue = std::map<LeavittWord, Rational>;

struct RingElement {
  std::variant<Rational, PrimeFieldValue, Int, GaussianValue, PolyValue, LeavittValue> value;
  bool operator==(const RingElement&) const = default;
};

enum class RingOp { add, mul, neg, sub };

RingElement ring_zero(const RingSpec& spec);
RingElement ring_one(const RingSpec& spec);
RingElement ring_from_int(const Int& n, const RingSpec& spec);
bool ring_is_zero(const RingElement& a);

RingElement ring_add(const RingElement& a, const RingElement& b, const RingSpec& spec);
RingElement ring_sub(const RingElement& a, const RingElement& b, const RingSpec& spec);
RingElement ring_mul(const RingElement& a, const RingElement& b, const RingSpec& spec);
RingElement ring_neg(const RingElement& a, const RingSpec& spec);
RingElement ring_arithmetic(const RingElement& a, const RingElement& b, RingOp op,
                            const RingSpec& spec);

/// Multiplicative inverse where the variant is a field (Q, F_p, Q(i));
/// nullopt for zero, unsupported_operation for non-field variants.
std::optional<RingElement> ring_inverse(const RingElement& a, const RingSpec& spec);

std::string ring_format(const RingElement& a, const RingSpec& spec);
RingElement ring_parse(const std::string& text, const RingSpec& spec);

/// Tagged-union JSON {"variant": ..., "value": ...}, bit-exact round trip.
std::string ring_element_to_json(const RingElement& a, const RingSpec& spec);
RingElement ring_element_from_json(const std::string& json_text, const RingSpec& spec);

// Convenience constructors.
RingElement gaussian(Rational re, Rational im);
RingElement poly_monomial(Rational coeff, std::int64_t degree);

/// Splits a graded-coefficient element into its nonzero homogeneous
/// parts, keyed by the grading group of the variant. The parts sum to
/// the input. Throws unsupported_operation on ungraded variants.
std::map<GroupElement, RingElement> coeff_homogeneous_parts(const RingElement& a,
                                                            const RingSpec& spec);

/// Homogeneous generators with their degrees, enough to span every
/// component up to degree_bound: {1, i} for Q(i), {1, x, ..., x^bound}
/// for Q[x], {1} at the trivial degree for ungraded variants.
std::vector<std::pair<GroupElement, RingElement>> coeff_homogeneous_generators(
    const RingSpec& spec, std::int64_t degree_bound);

/// True when the coefficient component R_a is nonzero.
bool coeff_component_nonzero(const RingSpec& spec, const GroupElement& a);

/// A degree a with R_a != 0 and R_{-a} = 0, when one exists (x-degree 1
/// for Q[x]; none for Q(i) whose support is all of Z/2).
std::optional<GroupElement> coeff_vanishing_degree(const RingSpec& spec);

/// Rewrites a formal sum of scalar-word pairs to its normal form under
/// the L(1,2) relations, leftmost redex first, like terms collected:
///   y1*x1 -> 1,  y2*x2 -> 1,  y1*x2 -> 0,  y2*x1 -> 0,
///   x2*y2 -> 1 - x1*y1.
RingElement leavitt_normal_form(const std::vector<std::pair<Rational, LeavittWord>>& terms,
                                const RingSpec& spec);

}  // namespace gradex

#endif
