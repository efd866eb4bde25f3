#include "gradex/grading.hpp"

#include <algorithm>

namespace gradex {

VeryGoodGrading::VeryGoodGrading(GroupSpec group, std::vector<GroupElement> tuple,
                                 bool normalize)
    : group_(std::move(group)), tuple_(std::move(tuple)) {
  if (tuple_.empty()) throw invalid_grading("degree tuple must be nonempty");
  for (const auto& g : tuple_)
    if (!group_.contains(g))
      throw invalid_grading("tuple entry does not conform to group " + group_.format());
  if (tuple_[0] != group_.identity()) {
    if (!normalize)
      throw invalid_grading("very good grading needs g_1 = e, got g_1 = " +
                            group_.format_element(tuple_[0]));
    // Translate by g_1^-1; unit degrees g_i - g_j are unchanged.
    GroupElement shift = group_.neg(tuple_[0]);
    for (auto& g : tuple_) g = group_.op(g, shift);
  }
}

GroupElement VeryGoodGrading::unit_degree(std::size_t i, std::size_t j) const {
  if (i >= n() || j >= n()) throw domain_error("matrix unit index out of range");
  return group_.sub(tuple_[i], tuple_[j]);
}

std::vector<GroupElement> VeryGoodGrading::unit_degree_support() const {
  std::set<GroupElement> degrees;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) degrees.insert(unit_degree(i, j));
  return {degrees.begin(), degrees.end()};
}

VeryGoodGrading very_good_from_tuple(const GroupSpec& group, std::vector<GroupElement> tuple,
                                     bool normalize) {
  return VeryGoodGrading(group, std::move(tuple), normalize);
}

GoodGrading::GoodGrading(GroupSpec group, std::size_t n, std::vector<GroupElement> degrees)
    : group_(std::move(group)), n_(n), degrees_(std::move(degrees)) {}

GoodGrading GoodGrading::from_offdiagonal(const GroupSpec& group,
                                          const std::vector<GroupElement>& f) {
  std::size_t n = f.size() + 1;
  std::vector<GroupElement> degrees(n * n, group.identity());
  // d(i,j) = f(i) + ... + f(j-1) for i < j, antisymmetric below.
  for (std::size_t i = 0; i < n; ++i) {
    GroupElement acc = group.identity();
    for (std::size_t j = i + 1; j < n; ++j) {
      acc = group.op(acc, f[j - 1]);
      degrees[i * n + j] = acc;
      degrees[j * n + i] = group.neg(acc);
    }
  }
  GoodGrading g(group, n, std::move(degrees));
  g.validate();
  return g;
}

GoodGrading GoodGrading::from_unit_degrees(const GroupSpec& group, std::size_t n,
                                           std::vector<GroupElement> degrees, bool validate) {
  if (degrees.size() != n * n)
    throw invalid_grading("unit degree table must have n*n entries");
  GoodGrading g(group, n, std::move(degrees));
  if (validate) g.validate();
  return g;
}

GoodGrading GoodGrading::from_very_good(const VeryGoodGrading& vg) {
  std::size_t n = vg.n();
  std::vector<GroupElement> degrees;
  degrees.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) degrees.push_back(vg.unit_degree(i, j));
  return GoodGrading(vg.group(), n, std::move(degrees));
}

GroupElement GoodGrading::unit_degree(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw domain_error("matrix unit index out of range");
  return degrees_[i * n_ + j];
}

void GoodGrading::validate() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (degrees_[i * n_ + i] != group_.identity())
      throw invalid_grading("d(i,i) must be the identity at i = " + std::to_string(i + 1));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (!group_.contains(degrees_[i * n_ + j]))
        throw invalid_grading("unit degree outside group " + group_.format());
      if (degrees_[j * n_ + i] != group_.neg(degrees_[i * n_ + j]))
        throw invalid_grading("d(i,j) = -d(j,i) fails at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (group_.op(degrees_[i * n_ + j], degrees_[j * n_ + k]) != degrees_[i * n_ + k])
          throw invalid_grading("d(i,j) + d(j,k) = d(i,k) fails at (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
}

VeryGoodGrading GoodGrading::to_very_good() const {
  std::vector<GroupElement> tuple;
  tuple.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) tuple.push_back(unit_degree(i, 0));
  return VeryGoodGrading(group_, std::move(tuple));
}

GroupSpec ProductGrading::total_group() const {
  return GroupSpec::product(coeff_group, position.group());
}

GroupElement ProductGrading::total_degree(const GroupElement& coeff_degree, std::size_t i,
                                          std::size_t j) const {
  return total_group().combine(coeff_degree, position.unit_degree(i, j), coeff_group);
}

GroupElement ProductGrading::unit_degree(std::size_t i, std::size_t j) const {
  return total_degree(coeff_group.identity(), i, j);
}

ProductGrading product_grading(const GroupSpec& coeff_group, GoodGrading position) {
  position.validate();
  return ProductGrading{coeff_group, std::move(position)};
}

std::size_t descriptor_n(const GradingDescriptor& d) {
  return std::visit([](const auto& g) { return g.n(); }, d);
}

GroupSpec descriptor_total_group(const GradingDescriptor& d) {
  if (const auto* vg = std::get_if<VeryGoodGrading>(&d)) return vg->group();
  if (const auto* gg = std::get_if<GoodGrading>(&d)) return gg->group();
  return std::get<ProductGrading>(d).total_group();
}

bool is_very_good(const GradingDescriptor& d) {
  if (const auto* pg = std::get_if<ProductGrading>(&d)) return pg->coeff_group.is_trivial();
  return true;
}

DegreeClasses x_classes(const VeryGoodGrading& vg) {
  DegreeClasses out;
  for (std::size_t i = 0; i < vg.n(); ++i) out.classes[vg.tuple()[i]].push_back(i);
  for (const auto& [g, idxs] : out.classes) out.supp.push_back(g);
  return out;
}

std::vector<std::set<GroupElement>> row_degree_sets(const VeryGoodGrading& vg) {
  std::vector<std::set<GroupElement>> rows(vg.n());
  for (std::size_t i = 0; i < vg.n(); ++i)
    for (std::size_t j = 0; j < vg.n(); ++j) rows[i].insert(vg.unit_degree(i, j));
  return rows;
}

}  // namespace gradex
