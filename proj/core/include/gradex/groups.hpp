#ifndef GRADEX_GROUPS_HPP
#define GRADEX_GROUPS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gradex/errors.hpp"
#include "gradex/numeric.hpp"

namespace gradex {

/// Element of a finitely generated abelian group, written additively.
/// Components are aligned with the factors of the owning GroupSpec and
/// torsion residues are always stored reduced into [0, m).
struct GroupElement {
  std::vector<std::int64_t> comps;

  auto operator<=>(const GroupElement&) const = default;
};

/// A finitely generated abelian group Z^r x Z/m_1 x ... x Z/m_k, kept as
/// the ordered factor list it was written as. A factor value of 0 denotes
/// a free factor Z; a value m >= 2 denotes Z/m.
class GroupSpec {
 public:
  GroupSpec() = default;  // trivial group, zero factors
  explicit GroupSpec(std::vector<std::int64_t> factors);

  /// Parses "Z", "Z/3", "Z x Z/2", ... ("1" is accepted for the trivial
  /// group). Throws parse_error on malformed text, domain_error on m < 2.
  static GroupSpec parse(const std::string& text);
  std::string format() const;

  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t free_rank() const;
  std::vector<std::int64_t> torsion() const;
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const { return factors_.empty(); }
  Int order() const;  // throws unsupported_operation if infinite

  GroupElement identity() const;
  /// Builds an element from raw components, reducing torsion entries.
  GroupElement element(std::vector<std::int64_t> comps) const;
  bool contains(const GroupElement& a) const;

  GroupElement op(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  /// All elements of a finite group in lexicographic order.
  std::vector<GroupElement> enumerate() const;

  /// Element text: a single integer for one-factor groups ("2"), a
  /// parenthesized comma tuple otherwise ("(1,0)", "()" for trivial).
  GroupElement parse_element(const std::string& text) const;
  std::string format_element(const GroupElement& a) const;

  /// Concatenates the factor lists; elements combine componentwise.
  static GroupSpec product(const GroupSpec& a, const GroupSpec& b);
  GroupElement combine(const GroupElement& a, const GroupElement& b,
                       const GroupSpec& left) const;

  bool operator==(const GroupSpec&) const = default;

 private:
  void check_member(const GroupElement& a) const;
  std::vector<std::int64_t> factors_;
};

}  // namespace gradex

#endif
