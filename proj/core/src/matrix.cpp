#include "gradex/matrix.hpp"

#include <algorithm>

namespace gradex {

GradedMatrix::GradedMatrix(std::size_t n, RingSpec ring)
    : n_(n), ring_(std::move(ring)), entries_(n * n, ring_zero(ring_)) {
  if (n == 0) throw domain_error("matrix size must be positive");
}

GradedMatrix GradedMatrix::identity(std::size_t n, const RingSpec& ring) {
  GradedMatrix m(n, ring);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring_one(ring));
  return m;
}

GradedMatrix GradedMatrix::unit(std::size_t n, const RingSpec& ring, std::size_t i,
                                std::size_t j) {
  return scaled_unit(n, ring, ring_one(ring), i, j);
}

GradedMatrix GradedMatrix::scaled_unit(std::size_t n, const RingSpec& ring,
                                       const RingElement& r, std::size_t i, std::size_t j) {
  GradedMatrix m(n, ring);
  m.set(i, j, r);
  return m;
}

const RingElement& GradedMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw domain_error("matrix index out of range");
  return entries_[i * n_ + j];
}

void GradedMatrix::set(std::size_t i, std::size_t j, RingElement value) {
  if (i >= n_ || j >= n_) throw domain_error("matrix index out of range");
  entries_[i * n_ + j] = std::move(value);
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), ring_is_zero);
}

namespace {

void check_compatible(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.n() != b.n()) throw domain_error("matrix sizes differ");
  if (a.ring() != b.ring()) throw domain_error("matrix coefficient rings differ");
}

}  // namespace

GradedMatrix matrix_add(const GradedMatrix& a, const GradedMatrix& b) {
  check_compatible(a, b);
  GradedMatrix out(a.n(), a.ring());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      out.set(i, j, ring_add(a.at(i, j), b.at(i, j), a.ring()));
  return out;
}

GradedMatrix matrix_mul(const GradedMatrix& a, const GradedMatrix& b) {
  check_compatible(a, b);
  GradedMatrix out(a.n(), a.ring());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      RingElement acc = ring_zero(a.ring());
      for (std::size_t k = 0; k < a.n(); ++k)
        acc = ring_add(acc, ring_mul(a.at(i, k), b.at(k, j), a.ring()), a.ring());
      out.set(i, j, std::move(acc));
    }
  return out;
}

GradedMatrix matrix_neg(const GradedMatrix& a) {
  GradedMatrix out(a.n(), a.ring());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out.set(i, j, ring_neg(a.at(i, j), a.ring()));
  return out;
}

GradedMatrix matrix_transpose(const GradedMatrix& a) {
  GradedMatrix out(a.n(), a.ring());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out.set(i, j, a.at(j, i));
  return out;
}

std::map<GroupElement, GradedMatrix> decompose(const GradedMatrix& m,
                                               const GradingDescriptor& grading) {
  if (descriptor_n(grading) != m.n())
    throw domain_error("grading size does not match matrix size");

  std::map<GroupElement, GradedMatrix> parts;
  auto add_part = [&](const GroupElement& g, std::size_t i, std::size_t j,
                      const RingElement& r) {
    auto it = parts.find(g);
    if (it == parts.end())
      it = parts.emplace(g, GradedMatrix(m.n(), m.ring())).first;
    it->second.set(i, j, r);
  };

  if (const auto* pg = std::get_if<ProductGrading>(&grading)) {
    auto ring_group = m.ring().coeff_grading_group();
    if (pg->coeff_group.is_trivial()) {
      if (ring_group.has_value())
        throw domain_error("ring " + m.ring().format() +
                           " is coefficient-graded; product grading needs coeff group " +
                           ring_group->format());
    } else if (!ring_group.has_value() || *ring_group != pg->coeff_group) {
      throw domain_error("product grading coefficient group " + pg->coeff_group.format() +
                         " does not match ring " + m.ring().format());
    }
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = 0; j < m.n(); ++j) {
        if (ring_is_zero(m.at(i, j))) continue;
        if (pg->coeff_group.is_trivial()) {
          add_part(pg->total_degree(pg->coeff_group.identity(), i, j), i, j, m.at(i, j));
        } else {
          for (const auto& [a, part] : coeff_homogeneous_parts(m.at(i, j), m.ring()))
            add_part(pg->total_degree(a, i, j), i, j, part);
        }
      }
    return parts;
  }

  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (ring_is_zero(m.at(i, j))) continue;
      GroupElement g = std::visit([&](const auto& gr) { return gr.unit_degree(i, j); },
                                  grading);
      add_part(g, i, j, m.at(i, j));
    }
  return parts;
}

bool is_homogeneous(const GradedMatrix& m, const GradingDescriptor& grading) {
  return decompose(m, grading).size() <= 1;
}

std::optional<GroupElement> homogeneous_degree(const GradedMatrix& m,
                                               const GradingDescriptor& grading) {
  auto parts = decompose(m, grading);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

EpsilonData epsilon(const VeryGoodGrading& grading, const GroupElement& g,
                    const RingSpec& ring) {
  if (!grading.group().contains(g))
    throw domain_error("degree does not conform to group " + grading.group().format());
  const auto& tuple = grading.tuple();
  std::set<GroupElement> supp(tuple.begin(), tuple.end());

  EpsilonData out{g, {}, {}, GradedMatrix(grading.n(), ring)};
  for (std::size_t i = 0; i < grading.n(); ++i) {
    // i in L_g iff g_i - g is some g_j; j in R_g iff g_j + g is some g_i.
    if (supp.count(grading.group().sub(tuple[i], g))) {
      out.left_set.push_back(i);
      out.epsilon.set(i, i, ring_one(ring));
    }
    if (supp.count(grading.group().op(tuple[i], g))) out.right_set.push_back(i);
  }
  return out;
}

EpsilonAction epsilon_action_indices(const VeryGoodGrading& grading, const GroupElement& g) {
  const auto& tuple = grading.tuple();
  std::set<GroupElement> shifted;  // g + Supp(V)
  for (const auto& h : tuple) shifted.insert(grading.group().op(g, h));

  EpsilonAction out;
  for (std::size_t i = 0; i < grading.n(); ++i) {
    if (shifted.count(tuple[i]))
      out.image.push_back(i);
    else
      out.kernel.push_back(i);
  }
  return out;
}

WitnessPair construct_witnesses(const VeryGoodGrading& grading, const GroupElement& g,
                                const RingSpec& ring) {
  DegreeClasses classes = x_classes(grading);
  std::vector<std::size_t> sizes;
  for (const auto& [h, idxs] : classes.classes) sizes.push_back(idxs.size());
  if (!std::all_of(sizes.begin(), sizes.end(),
                   [&](std::size_t s) { return s == sizes.front(); })) {
    std::string msg = "degree classes have unequal sizes:";
    for (auto s : sizes) msg += " " + std::to_string(s);
    throw precondition_error(msg, sizes);
  }

  const GroupSpec& gs = grading.group();
  const auto& tuple = grading.tuple();
  // Order-preserving bijection X_from -> X_to at matching positions.
  auto map_index = [&](const GroupElement& from, const GroupElement& to, std::size_t i) {
    const auto& src = classes.classes.at(from);
    const auto& dst = classes.classes.at(to);
    std::size_t pos = std::lower_bound(src.begin(), src.end(), i) - src.begin();
    return dst[pos];
  };

  GradedMatrix b(grading.n(), ring);
  GradedMatrix a(grading.n(), ring);
  for (std::size_t i = 0; i < grading.n(); ++i) {
    // B_{-g}: v_i -> v_{b(i)} with b : X_{g_i} -> X_{g_i - g}, when that
    // class is nonempty.
    GroupElement h = gs.sub(tuple[i], g);
    if (classes.classes.count(h)) b.set(map_index(tuple[i], h, i), i, ring_one(ring));
    // A_g: v_i -> v_{c(i)} with c : X_{g_i} -> X_{g_i + g}.
    GroupElement k = gs.op(tuple[i], g);
    if (classes.classes.count(k)) a.set(map_index(tuple[i], k, i), i, ring_one(ring));
  }
  return WitnessPair{g, std::move(a), std::move(b)};
}

}  // namespace gradex
