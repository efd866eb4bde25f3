#ifndef GRADEX_MATRIX_HPP
#define GRADEX_MATRIX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gradex/coeff.hpp"
#include "gradex/grading.hpp"

namespace gradex {

/// Dense n x n matrix over an exact coefficient ring.
class GradedMatrix {
 public:
  GradedMatrix(std::size_t n, RingSpec ring);  // zero matrix
  static GradedMatrix identity(std::size_t n, const RingSpec& ring);
  static GradedMatrix unit(std::size_t n, const RingSpec& ring, std::size_t i, std::size_t j);
  static GradedMatrix scaled_unit(std::size_t n, const RingSpec& ring, const RingElement& r,
                                  std::size_t i, std::size_t j);

  std::size_t n() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  const RingElement& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, RingElement value);
  bool is_zero() const;

  bool operator==(const GradedMatrix&) const = default;

 private:
  std::size_t n_;
  RingSpec ring_;
  std::vector<RingElement> entries_;  // row-major
};

GradedMatrix matrix_add(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matrix_mul(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matrix_neg(const GradedMatrix& a);
GradedMatrix matrix_transpose(const GradedMatrix& a);

/// Homogeneous decomposition of M against a grading descriptor: a finite
/// map of nonzero components that sum back to M. For very good and good
/// gradings the degree-g component keeps entry (i,j) iff d(i,j) = g; a
/// product grading further splits each entry by its coefficient parts.
std::map<GroupElement, GradedMatrix> decompose(const GradedMatrix& m,
                                               const GradingDescriptor& grading);

bool is_homogeneous(const GradedMatrix& m, const GradingDescriptor& grading);
/// Degree of a nonzero homogeneous matrix; nullopt if zero or mixed.
std::optional<GroupElement> homogeneous_degree(const GradedMatrix& m,
                                               const GradingDescriptor& grading);

/// The epsilon idempotent of a degree: eps_g = sum of e_{i,i} over
/// L_g = {i : some e_{i,j} has degree g}, together with
/// R_g = {j : some e_{i,j} has degree g} = L_{-g}. Zero when L_g is
/// empty, which happens exactly when the component S_g is zero.
struct EpsilonData {
  GroupElement g;
  std::vector<std::size_t> left_set;   // L_g
  std::vector<std::size_t> right_set;  // R_g
  GradedMatrix epsilon;
};

EpsilonData epsilon(const VeryGoodGrading& grading, const GroupElement& g,
                    const RingSpec& ring = RingSpec::rationals());

/// How eps_g acts on the column basis: kernel = {i : g_i not in
/// g + Supp(V)}, image = complement; eps_g fixes v_i for image indices.
struct EpsilonAction {
  std::vector<std::size_t> kernel;
  std::vector<std::size_t> image;
};

EpsilonAction epsilon_action_indices(const VeryGoodGrading& grading, const GroupElement& g);

/// Pair of homogeneous matrices certifying the crossed-product
/// factorization of eps_g: A has degree g, B degree -g, A*B = eps_g and
/// B*A = eps_{-g}.
struct WitnessPair {
  GroupElement g;
  GradedMatrix a;
  GradedMatrix b;
};

/// Requires all nonempty degree classes to share one cardinality
/// (throws precondition_error carrying the class sizes otherwise). The
/// bijections between classes are the order-preserving ones, so the
/// witnesses are deterministic.
WitnessPair construct_witnesses(const VeryGoodGrading& grading, const GroupElement& g,
                                const RingSpec& ring = RingSpec::rationals());

}  // namespace gradex

#endif
