#ifndef GRADEX_COEFF_DETAIL_HPP
#define GRADEX_COEFF_DETAIL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gradex/coeff.hpp"

namespace gradex::detail {

// Scalars of a Leavitt element over base F_p live in [0, p) with
// denominator 1; base_p = 0 leaves rationals untouched.
Rational reduce_base_scalar(const Rational& c, std::int64_t base_p);

LeavittValue leavitt_nf_terms(const std::vector<std::pair<Rational, LeavittWord>>& terms,
                              std::int64_t base_p);

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace gradex::detail

#endif
