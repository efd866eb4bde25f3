#include "gradex/coeff.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coeff_detail.hpp"

namespace gradex {

namespace detail {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw domain_error("element not invertible modulo " + std::to_string(p));
  return t < 0 ? t + p : t;
}

Rational reduce_base_scalar(const Rational& c, std::int64_t base_p) {
  if (base_p == 0) return c;
  Int num = boost::multiprecision::numerator(c) % base_p;
  Int den = boost::multiprecision::denominator(c) % base_p;
  std::int64_t n = static_cast<std::int64_t>(num);
  std::int64_t d = static_cast<std::int64_t>(den);
  if (n < 0) n += base_p;
  if (d < 0) d += base_p;
  if (d == 0) throw domain_error("scalar denominator vanishes modulo " + std::to_string(base_p));
  unsigned __int128 prod =
      static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(mod_inverse(d, base_p));
  return Rational(static_cast<std::int64_t>(prod % static_cast<unsigned __int128>(base_p)));
}

}  // namespace detail

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_add(std::int64_t a, std::int64_t b, std::int64_t p) { return (a + b) % p; }

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  unsigned __int128 prod = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  return static_cast<std::int64_t>(prod % static_cast<unsigned __int128>(p));
}

template <typename T>
const T& payload(const RingElement& a, const RingSpec& spec) {
  if (const auto* v = std::get_if<T>(&a.value)) return *v;
  throw domain_error("ring element does not conform to spec " + spec.format());
}

void prune_zeros(PolyValue& p) {
  for (auto it = p.begin(); it != p.end();)
    it = (it->second == 0) ? p.erase(it) : std::next(it);
}

}  // namespace

RingSpec RingSpec::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw domain_error("F_p needs a prime modulus, got " + std::to_string(p));
  return RingSpec(RingVariant::prime_field, p);
}

RingSpec RingSpec::leavitt(std::int64_t base_prime) {
  if (base_prime != 0 && !is_prime(base_prime))
    throw domain_error("Leavitt base F_p needs a prime, got " + std::to_string(base_prime));
  return RingSpec(RingVariant::leavitt, base_prime);
}

RingSpec RingSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s == "Q") return rationals();
  if (s == "Z") return integers();
  if (s == "Q(i)") return gaussian_field();
  if (s == "Q[x]") return poly_ring();
  if (s == "L(1,2)") return leavitt();
  if (s.rfind("L(1,2;F", 0) == 0 && s.back() == ')') {
    std::string digits = s.substr(7, s.size() - 8);
    try {
      return leavitt(std::stoll(digits));
    } catch (const std::logic_error&) {
      throw parse_error("bad Leavitt base in ring spec '" + text + "'");
    }
  }
  if (s.size() > 1 && s[0] == 'F') {
    try {
      return prime_field(std::stoll(s.substr(1)));
    } catch (const std::logic_error&) {
      throw parse_error("bad prime in ring spec '" + text + "'");
    }
  }
  throw parse_error("unknown ring spec '" + text + "'");
}

std::string RingSpec::format() const {
  switch (variant_) {
    case RingVariant::rationals: return "Q";
    case RingVariant::prime_field: return "F" + std::to_string(p_);
    case RingVariant::integers: return "Z";
    case RingVariant::gaussian_field: return "Q(i)";
    case RingVariant::poly_ring: return "Q[x]";
    case RingVariant::leavitt:
      return p_ == 0 ? "L(1,2)" : "L(1,2;F" + std::to_string(p_) + ")";
  }
  throw domain_error("corrupt ring spec");
}

std::optional<GroupSpec> RingSpec::coeff_grading_group() const {
  switch (variant_) {
    case RingVariant::gaussian_field: return GroupSpec({2});
    case RingVariant::poly_ring: return GroupSpec({0});
    default: return std::nullopt;
  }
}

RingElement ring_zero(const RingSpec& spec) { return ring_from_int(0, spec); }

RingElement ring_one(const RingSpec& spec) { return ring_from_int(1, spec); }

RingElement ring_from_int(const Int& n, const RingSpec& spec) {
  switch (spec.variant()) {
    case RingVariant::rationals: return RingElement{Rational(n)};
    case RingVariant::prime_field: {
      Int r = n % spec.prime();
      if (r < 0) r += spec.prime();
      return RingElement{PrimeFieldValue{static_cast<std::int64_t>(r)}};
    }
    case RingVariant::integers: return RingElement{n};
    case RingVariant::gaussian_field: return RingElement{GaussianValue{Rational(n), 0}};
    case RingVariant::poly_ring: {
      PolyValue p;
      if (n != 0) p[0] = Rational(n);
      return RingElement{p};
    }
    case RingVariant::leavitt: {
      LeavittValue v;
      Rational c = detail::reduce_base_scalar(Rational(n), spec.prime());
      if (c != 0) v[LeavittWord{}] = c;
      return RingElement{v};
    }
  }
  throw domain_error("corrupt ring spec");
}

bool ring_is_zero(const RingElement& a) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Int>)
          return v == 0;
        else if constexpr (std::is_same_v<T, PrimeFieldValue>)
          return v.v == 0;
        else if constexpr (std::is_same_v<T, GaussianValue>)
          return v.re == 0 && v.im == 0;
        else
          return v.empty();  // PolyValue / LeavittValue
      },
      a.value);
}

RingElement ring_add(const RingElement& a, const RingElement& b, const RingSpec& spec) {
  switch (spec.variant()) {
    case RingVariant::rationals:
      return RingElement{Rational(payload<Rational>(a, spec) + payload<Rational>(b, spec))};
    case RingVariant::prime_field:
      return RingElement{PrimeFieldValue{mod_add(payload<PrimeFieldValue>(a, spec).v,
                                                 payload<PrimeFieldValue>(b, spec).v,
                                                 spec.prime())}};
    case RingVariant::integers:
      return RingElement{Int(payload<Int>(a, spec) + payload<Int>(b, spec))};
    case RingVariant::gaussian_field: {
      const auto& x = payload<GaussianValue>(a, spec);
      const auto& y = payload<GaussianValue>(b, spec);
      return RingElement{GaussianValue{x.re + y.re, x.im + y.im}};
    }
    case RingVariant::poly_ring: {
      PolyValue sum = payload<PolyValue>(a, spec);
      for (const auto& [d, c] : payload<PolyValue>(b, spec)) sum[d] += c;
      prune_zeros(sum);
      return RingElement{sum};
    }
    case RingVariant::leavitt: {
      std::vector<std::pair<Rational, LeavittWord>> terms;
      for (const auto& [w, c] : payload<LeavittValue>(a, spec)) terms.emplace_back(c, w);
      for (const auto& [w, c] : payload<LeavittValue>(b, spec)) terms.emplace_back(c, w);
      return RingElement{detail::leavitt_nf_terms(terms, spec.prime())};
    }
  }
  throw domain_error("corrupt ring spec");
}

RingElement ring_neg(const RingElement& a, const RingSpec& spec) {
  switch (spec.variant()) {
    case RingVariant::rationals: return RingElement{Rational(-payload<Rational>(a, spec))};
    case RingVariant::prime_field: {
      std::int64_t v = payload<PrimeFieldValue>(a, spec).v;
      return RingElement{PrimeFieldValue{v == 0 ? 0 : spec.prime() - v}};
    }
    case RingVariant::integers: return RingElement{Int(-payload<Int>(a, spec))};
    case RingVariant::gaussian_field: {
      const auto& x = payload<GaussianValue>(a, spec);
      return RingElement{GaussianValue{-x.re, -x.im}};
    }
    case RingVariant::poly_ring: {
      PolyValue out = payload<PolyValue>(a, spec);
      for (auto& [d, c] : out) c = -c;
      return RingElement{out};
    }
    case RingVariant::leavitt: {
      std::vector<std::pair<Rational, LeavittWord>> terms;
      for (const auto& [w, c] : payload<LeavittValue>(a, spec)) terms.emplace_back(-c, w);
      return RingElement{detail::leavitt_nf_terms(terms, spec.prime())};
    }
  }
  throw domain_error("corrupt ring spec");
}

RingElement ring_sub(const RingElement& a, const RingElement& b, const RingSpec& spec) {
  return ring_add(a, ring_neg(b, spec), spec);
}

RingElement ring_mul(const RingElement& a, const RingElement& b, const RingSpec& spec) {
  switch (spec.variant()) {
    case RingVariant::rationals:
      return RingElement{Rational(payload<Rational>(a, spec) * payload<Rational>(b, spec))};
    case RingVariant::prime_field:
      return RingElement{PrimeFieldValue{mod_mul(payload<PrimeFieldValue>(a, spec).v,
                                                 payload<PrimeFieldValue>(b, spec).v,
                                                 spec.prime())}};
    case RingVariant::integers:
      return RingElement{Int(payload<Int>(a, spec) * payload<Int>(b, spec))};
    case RingVariant::gaussian_field: {
      const auto& x = payload<GaussianValue>(a, spec);
      const auto& y = payload<GaussianValue>(b, spec);
      return RingElement{GaussianValue{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}};
    }
    case RingVariant::poly_ring: {
      PolyValue prod;
      for (const auto& [da, ca] : payload<PolyValue>(a, spec))
        for (const auto& [db, cb] : payload<PolyValue>(b, spec)) prod[da + db] += ca * cb;
      prune_zeros(prod);
      return RingElement{prod};
    }
    case RingVariant::leavitt: {
      std::vector<std::pair<Rational, LeavittWord>> terms;
      for (const auto& [wa, ca] : payload<LeavittValue>(a, spec))
        for (const auto& [wb, cb] : payload<LeavittValue>(b, spec))
          terms.emplace_back(ca * cb, wa + wb);
      return RingElement{detail::leavitt_nf_terms(terms, spec.prime())};
    }
  }
  throw domain_error("corrupt ring spec");
}

RingElement ring_arithmetic(const RingElement& a, const RingElement& b, RingOp op,
                            const RingSpec& spec) {
  switch (op) {
    case RingOp::add: return ring_add(a, b, spec);
    case RingOp::mul: return ring_mul(a, b, spec);
    case RingOp::sub: return ring_sub(a, b, spec);
    case RingOp::neg: return ring_neg(a, spec);
  }
  throw domain_error("corrupt ring op");
}

std::optional<RingElement> ring_inverse(const RingElement& a, const RingSpec& spec) {
  switch (spec.variant()) {
    case RingVariant::rationals: {
      const auto& q = payload<Rational>(a, spec);
      if (q == 0) return std::nullopt;
      return RingElement{Rational(Rational(1) / q)};
    }
    case RingVariant::prime_field: {
      std::int64_t v = payload<PrimeFieldValue>(a, spec).v;
      if (v == 0) return std::nullopt;
      return RingElement{PrimeFieldValue{detail::mod_inverse(v, spec.prime())}};
    }
    case RingVariant::gaussian_field: {
      // (a + bi)^-1 = (a - bi) / (a^2 + b^2)
      const auto& x = payload<GaussianValue>(a, spec);
      Rational norm = x.re * x.re + x.im * x.im;
      if (norm == 0) return std::nullopt;
      return RingElement{GaussianValue{x.re / norm, -x.im / norm}};
    }
    default:
      throw unsupported_operation("inverse not implemented for ring " + spec.format());
  }
}

RingElement gaussian(Rational re, Rational im) {
  return RingElement{GaussianValue{std::move(re), std::move(im)}};
}

RingElement poly_monomial(Rational coeff, std::int64_t degree) {
  if (degree < 0) throw domain_error("polynomial degree must be non-negative");
  PolyValue p;
  if (coeff != 0) p[degree] = std::move(coeff);
  return RingElement{p};
}

// ---------------------------------------------------------------------------
// Text parsing and formatting
// ---------------------------------------------------------------------------

namespace {

std::string strip_space(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

Rational parse_rational(const std::string& tok) {
  if (tok.empty()) throw parse_error("empty number");
  std::size_t slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(tok));
    Int num(tok.substr(0, slash));
    Int den(tok.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + tok + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const parse_error*>(&e)) throw;
    throw parse_error("bad number '" + tok + "'");
  }
}

// Splits "3-2*x" into signed-term strings {"3", "-2*x"}; the leading
// sign of the first term stays attached.
std::vector<std::string> split_signed_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (char c : s) {
    if ((c == '+' || c == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  if (!cur.empty()) terms.push_back(cur);
  if (terms.empty()) throw parse_error("empty ring element");
  return terms;
}

// Separates a signed term into (sign, body).
std::pair<int, std::string> term_sign(const std::string& term) {
  if (term.empty()) throw parse_error("empty term");
  if (term[0] == '-') return {-1, term.substr(1)};
  if (term[0] == '+') return {1, term.substr(1)};
  return {1, term};
}

RingElement parse_gaussian(const std::string& text) {
  Rational re = 0, im = 0;
  for (const auto& raw : split_signed_terms(text)) {
    auto [sign, body] = term_sign(raw);
    if (!body.empty() && body.back() == 'i') {
      std::string coeff = body.substr(0, body.size() - 1);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      im += sign * (coeff.empty() ? Rational(1) : parse_rational(coeff));
    } else {
      re += sign * parse_rational(body);
    }
  }
  return gaussian(re, im);
}

RingElement parse_poly(const std::string& text) {
  PolyValue p;
  for (const auto& raw : split_signed_terms(text)) {
    auto [sign, body] = term_sign(raw);
    auto xpos = body.find('x');
    if (xpos == std::string::npos) {
      p[0] += sign * parse_rational(body);
      continue;
    }
    std::string coeff = body.substr(0, xpos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    std::string rest = body.substr(xpos + 1);
    std::int64_t degree = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw parse_error("bad monomial '" + raw + "'");
      try {
        degree = std::stoll(rest.substr(1));
      } catch (const std::logic_error&) {
        throw parse_error("bad exponent in '" + raw + "'");
      }
      if (degree < 0) throw parse_error("negative exponent in '" + raw + "'");
    }
    p[degree] += sign * (coeff.empty() ? Rational(1) : parse_rational(coeff));
  }
  prune_zeros(p);
  return RingElement{p};
}

RingElement parse_leavitt(const std::string& text, const RingSpec& spec) {
  std::vector<std::pair<Rational, LeavittWord>> terms;
  for (const auto& raw : split_signed_terms(text)) {
    auto [sign, body] = term_sign(raw);
    if (body.empty()) throw parse_error("dangling sign in '" + text + "'");
    Rational scalar = sign;
    LeavittWord word;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto next = body.find('*', pos);
      std::string factor =
          next == std::string::npos ? body.substr(pos) : body.substr(pos, next - pos);
      if (factor == "x1")
        word.push_back(static_cast<char>(LGen::x1));
      else if (factor == "x2")
        word.push_back(static_cast<char>(LGen::x2));
      else if (factor == "y1")
        word.push_back(static_cast<char>(LGen::y1));
      else if (factor == "y2")
        word.push_back(static_cast<char>(LGen::y2));
      else
        scalar *= parse_rational(factor);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    terms.emplace_back(scalar, word);
  }
  return leavitt_normal_form(terms, spec);
}

std::string rational_abs_str(const Rational& q) {
  std::ostringstream out;
  out << (q < 0 ? -q : q);
  return out.str();
}

void append_term(std::string& out, bool negative, const std::string& magnitude) {
  if (out.empty())
    out += negative ? "-" + magnitude : magnitude;
  else
    out += (negative ? "-" : "+") + magnitude;
}

}  // namespace

std::string ring_format(const RingElement& a, const RingSpec& spec) {
  switch (spec.variant()) {
    case RingVariant::rationals: {
      std::ostringstream out;
      out << payload<Rational>(a, spec);
      return out.str();
    }
    case RingVariant::prime_field:
      return std::to_string(payload<PrimeFieldValue>(a, spec).v);
    case RingVariant::integers: {
      std::ostringstream out;
      out << payload<Int>(a, spec);
      return out.str();
    }
    case RingVariant::gaussian_field: {
      const auto& x = payload<GaussianValue>(a, spec);
      if (x.re == 0 && x.im == 0) return "0";
      std::string out;
      if (x.re != 0) append_term(out, x.re < 0, rational_abs_str(x.re));
      if (x.im != 0) {
        Rational mag = x.im < 0 ? -x.im : x.im;
        append_term(out, x.im < 0, mag == 1 ? "i" : rational_abs_str(x.im) + "i");
      }
      return out;
    }
    case RingVariant::poly_ring: {
      const auto& p = payload<PolyValue>(a, spec);
      if (p.empty()) return "0";
      std::string out;
      for (const auto& [d, c] : p) {
        std::string mag;
        Rational abs = c < 0 ? -c : c;
        if (d == 0)
          mag = rational_abs_str(c);
        else
          mag = (abs == 1 ? "" : rational_abs_str(c) + "*") + "x" +
                (d == 1 ? "" : "^" + std::to_string(d));
        append_term(out, c < 0, mag);
      }
      return out;
    }
    case RingVariant::leavitt: {
      const auto& v = payload<LeavittValue>(a, spec);
      if (v.empty()) return "0";
      std::string out;
      for (const auto& [w, c] : v) {
        std::string mag;
        Rational abs = c < 0 ? -c : c;
        if (w.empty())
          mag = rational_abs_str(c);
        else
          mag = (abs == 1 ? "" : rational_abs_str(c) + "*") + leavitt_word_text(w);
        append_term(out, c < 0, mag);
      }
      return out;
    }
  }
  throw domain_error("corrupt ring spec");
}

RingElement ring_parse(const std::string& text, const RingSpec& spec) {
  std::string s = strip_space(text);
  if (s.empty()) throw parse_error("empty ring element");
  switch (spec.variant()) {
    case RingVariant::rationals: return RingElement{parse_rational(s)};
    case RingVariant::prime_field: {
      Rational q = parse_rational(s);
      Rational r = detail::reduce_base_scalar(q, spec.prime());
      return RingElement{
          PrimeFieldValue{static_cast<std::int64_t>(boost::multiprecision::numerator(r))}};
    }
    case RingVariant::integers: {
      Rational q = parse_rational(s);
      if (boost::multiprecision::denominator(q) != 1)
        throw parse_error("'" + text + "' is not an integer");
      return RingElement{Int(boost::multiprecision::numerator(q))};
    }
    case RingVariant::gaussian_field: return parse_gaussian(s);
    case RingVariant::poly_ring: return parse_poly(s);
    case RingVariant::leavitt: return parse_leavitt(s, spec);
  }
  throw domain_error("corrupt ring spec");
}

std::string ring_element_to_json(const RingElement& a, const RingSpec& spec) {
  nlohmann::json j;
  j["variant"] = spec.format();
  j["value"] = ring_format(a, spec);
  return j.dump();
}

RingElement ring_element_from_json(const std::string& json_text, const RingSpec& spec) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("bad ring element JSON: ") + e.what());
  }
  if (!j.contains("variant") || !j.contains("value"))
    throw parse_error("ring element JSON needs 'variant' and 'value'");
  if (j["variant"].get<std::string>() != spec.format())
    throw domain_error("ring element JSON variant '" + j["variant"].get<std::string>() +
                       "' does not match spec " + spec.format());
  return ring_parse(j["value"].get<std::string>(), spec);
}

// ---------------------------------------------------------------------------
// Coefficient grading structure
// ---------------------------------------------------------------------------

std::map<GroupElement, RingElement> coeff_homogeneous_parts(const RingElement& a,
                                                            const RingSpec& spec) {
  std::map<GroupElement, RingElement> parts;
  switch (spec.variant()) {
    case RingVariant::gaussian_field: {
      const auto& x = payload<GaussianValue>(a, spec);
      if (x.re != 0) parts[GroupElement{{0}}] = gaussian(x.re, 0);
      if (x.im != 0) parts[GroupElement{{1}}] = gaussian(0, x.im);
      return parts;
    }
    case RingVariant::poly_ring: {
      for (const auto& [d, c] : payload<PolyValue>(a, spec))
        parts[GroupElement{{d}}] = poly_monomial(c, d);
      return parts;
    }
    default:
      throw unsupported_operation("ring " + spec.format() + " carries no coefficient grading");
  }
}

std::vector<std::pair<GroupElement, RingElement>> coeff_homogeneous_generators(
    const RingSpec& spec, std::int64_t degree_bound) {
  switch (spec.variant()) {
    case RingVariant::gaussian_field:
      return {{GroupElement{{0}}, ring_one(spec)}, {GroupElement{{1}}, gaussian(0, 1)}};
    case RingVariant::poly_ring: {
      std::vector<std::pair<GroupElement, RingElement>> gens;
      for (std::int64_t d = 0; d <= degree_bound; ++d)
        gens.emplace_back(GroupElement{{d}}, poly_monomial(1, d));
      return gens;
    }
    default:
      // Ungraded: the unit in the trivial degree.
      return {{GroupElement{{}}, ring_one(spec)}};
  }
}

bool coeff_component_nonzero(const RingSpec& spec, const GroupElement& a) {
  switch (spec.variant()) {
    case RingVariant::gaussian_field:
      return a.comps.size() == 1;  // both Z/2 components are nonzero
    case RingVariant::poly_ring:
      return a.comps.size() == 1 && a.comps[0] >= 0;
    default:
      return a.comps.empty();  // trivial grading, only the identity degree
  }
}

std::optional<GroupElement> coeff_vanishing_degree(const RingSpec& spec) {
  if (spec.variant() == RingVariant::poly_ring) return GroupElement{{1}};
  return std::nullopt;
}

}  // namespace gradex
