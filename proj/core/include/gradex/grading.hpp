#ifndef GRADEX_GRADING_HPP
#define GRADEX_GRADING_HPP

#include <cstddef>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "gradex/errors.hpp"
#include "gradex/groups.hpp"

namespace gradex {

/// Grading of M_n(R) in which every R-line R*e_{i,j} is homogeneous,
/// determined by the degree tuple (g_1,...,g_n) with g_1 = e via
/// deg(e_{i,j}) = g_i - g_j. Indices are 0-based in code.
class VeryGoodGrading {
 public:
  VeryGoodGrading(GroupSpec group, std::vector<GroupElement> tuple, bool normalize = false);

  const GroupSpec& group() const { return group_; }
  std::size_t n() const { return tuple_.size(); }
  const std::vector<GroupElement>& tuple() const { return tuple_; }

  GroupElement unit_degree(std::size_t i, std::size_t j) const;

  /// Sorted distinct values of deg(e_{i,j}); at most n^2 of them.
  std::vector<GroupElement> unit_degree_support() const;

  bool operator==(const VeryGoodGrading&) const = default;

 private:
  GroupSpec group_;
  std::vector<GroupElement> tuple_;
};

VeryGoodGrading very_good_from_tuple(const GroupSpec& group, std::vector<GroupElement> tuple,
                                     bool normalize = false);

/// Grading in which every matrix unit e_{i,j} is homogeneous, stored as
/// the full n x n table of unit degrees d(i,j). Valid tables satisfy
/// d(i,i) = e, d(i,j) = -d(j,i) and d(i,j) + d(j,k) = d(i,k).
class GoodGrading {
 public:
  static GoodGrading from_offdiagonal(const GroupSpec& group,
                                      const std::vector<GroupElement>& f);
  static GoodGrading from_unit_degrees(const GroupSpec& group, std::size_t n,
                                       std::vector<GroupElement> degrees, bool validate = true);
  static GoodGrading from_very_good(const VeryGoodGrading& vg);

  const GroupSpec& group() const { return group_; }
  std::size_t n() const { return n_; }
  GroupElement unit_degree(std::size_t i, std::size_t j) const;

  void validate() const;
  /// Equivalent tuple description, g_i := d(i, 0).
  VeryGoodGrading to_very_good() const;

  bool operator==(const GoodGrading&) const = default;

 private:
  GoodGrading(GroupSpec group, std::size_t n, std::vector<GroupElement> degrees);
  GroupSpec group_;
  std::size_t n_;
  std::vector<GroupElement> degrees_;  // row-major n x n
};

/// Grading of M_n(R) by the product group A x B: coefficient grading of
/// R by A times a position grading of the matrix units by B. The total
/// degree of r*e_{i,j} with r homogeneous of A-degree a is (a, d(i,j)).
struct ProductGrading {
  GroupSpec coeff_group;  // A
  GoodGrading position;   // over B

  GroupSpec total_group() const;
  GroupElement total_degree(const GroupElement& coeff_degree, std::size_t i,
                            std::size_t j) const;
  /// Total degree of the matrix unit e_{i,j} itself, (e_A, d(i,j)).
  GroupElement unit_degree(std::size_t i, std::size_t j) const;
  std::size_t n() const { return position.n(); }

  bool operator==(const ProductGrading&) const = default;
};

ProductGrading product_grading(const GroupSpec& coeff_group, GoodGrading position);

using GradingDescriptor = std::variant<VeryGoodGrading, GoodGrading, ProductGrading>;

std::size_t descriptor_n(const GradingDescriptor& d);
GroupSpec descriptor_total_group(const GradingDescriptor& d);

/// A very good grading is one whose whole coefficient line sits in a
/// single component; a product grading achieves that exactly when its
/// coefficient group is trivial.
bool is_very_good(const GradingDescriptor& d);

/// The degree classes X_g = {i : g_i = g} of the basis grading, plus
/// the support Supp(V) = {g : X_g nonempty}.
struct DegreeClasses {
  std::map<GroupElement, std::vector<std::size_t>> classes;
  std::vector<GroupElement> supp;
};

DegreeClasses x_classes(const VeryGoodGrading& vg);

/// Row degree sets RowDeg_i = {deg(e_{i,j}) : j}.
std::vector<std::set<GroupElement>> row_degree_sets(const VeryGoodGrading& vg);

}  // namespace gradex

#endif
