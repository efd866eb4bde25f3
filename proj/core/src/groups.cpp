#include "gradex/groups.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gradex {

namespace {

std::int64_t reduce_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& tok, const std::string& context) {
  std::int64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw parse_error("expected an integer in " + context + ", got '" + tok + "'");
  return value;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (auto m : factors_)
    if (m != 0 && m < 2)
      throw domain_error("torsion modulus must be >= 2, got " + std::to_string(m));
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string body = trim(text);
  if (body == "1") return GroupSpec{};  // trivial group
  if (body.empty()) throw parse_error("empty group spec");

  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto next = body.find('x', pos);
    std::string tok = trim(next == std::string::npos ? body.substr(pos)
                                                     : body.substr(pos, next - pos));
    if (tok == "Z") {
      factors.push_back(0);
    } else if (tok.rfind("Z/", 0) == 0) {
      std::int64_t m = parse_int(tok.substr(2), "group factor '" + tok + "'");
      if (m < 2) throw domain_error("torsion modulus must be >= 2, got Z/" + std::to_string(m));
      factors.push_back(m);
    } else {
      throw parse_error("bad group factor '" + tok + "' (expected Z or Z/m)");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return GroupSpec(std::move(factors));
}

std::string GroupSpec::format() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << " x ";
    if (factors_[i] == 0)
      out << "Z";
    else
      out << "Z/" << factors_[i];
  }
  return out.str();
}

std::size_t GroupSpec::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), 0));
}

std::vector<std::int64_t> GroupSpec::torsion() const {
  std::vector<std::int64_t> out;
  for (auto m : factors_)
    if (m != 0) out.push_back(m);
  return out;
}

Int GroupSpec::order() const {
  if (!is_finite()) throw unsupported_operation("group " + format() + " is infinite");
  Int n = 1;
  for (auto m : factors_) n *= m;
  return n;
}

GroupElement GroupSpec::identity() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement GroupSpec::element(std::vector<std::int64_t> comps) const {
  if (comps.size() != factors_.size())
    throw domain_error("element has " + std::to_string(comps.size()) + " components, group " +
                       format() + " needs " + std::to_string(factors_.size()));
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (factors_[i] != 0) comps[i] = reduce_mod(comps[i], factors_[i]);
  return GroupElement{std::move(comps)};
}

bool GroupSpec::contains(const GroupElement& a) const {
  if (a.comps.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i] != 0 && (a.comps[i] < 0 || a.comps[i] >= factors_[i])) return false;
  return true;
}

void GroupSpec::check_member(const GroupElement& a) const {
  if (!contains(a))
    throw domain_error("element does not conform to group " + format());
}

GroupElement GroupSpec::op(const GroupElement& a, const GroupElement& b) const {
  check_member(a);
  check_member(b);
  std::vector<std::int64_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = a.comps[i] + b.comps[i];
    if (factors_[i] != 0) out[i] = reduce_mod(out[i], factors_[i]);
  }
  return GroupElement{std::move(out)};
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  check_member(a);
  std::vector<std::int64_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = -a.comps[i];
    if (factors_[i] != 0) out[i] = reduce_mod(out[i], factors_[i]);
  }
  return GroupElement{std::move(out)};
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  return op(a, neg(b));
}

std::vector<GroupElement> GroupSpec::enumerate() const {
  Int total = order();
  if (total > 100000000)
    throw unsupported_operation("group " + format() + " is too large to enumerate");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::int64_t> cur(factors_.size(), 0);
  while (true) {
    out.push_back(GroupElement{cur});
    // lexicographic successor: last component varies fastest
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

GroupElement GroupSpec::parse_element(const std::string& text) const {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw parse_error("unbalanced parentheses in '" + text + "'");
    std::string inner = body.substr(1, body.size() - 2);
    std::vector<std::int64_t> comps;
    if (!trim(inner).empty()) {
      std::size_t pos = 0;
      while (pos <= inner.size()) {
        auto next = inner.find(',', pos);
        std::string tok = trim(next == std::string::npos ? inner.substr(pos)
                                                         : inner.substr(pos, next - pos));
        comps.push_back(parse_int(tok, "group element '" + text + "'"));
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    }
    return element(std::move(comps));
  }
  if (factors_.size() != 1)
    throw parse_error("element of " + format() + " must be a parenthesized tuple, got '" +
                      text + "'");
  return element({parse_int(body, "group element")});
}

std::string GroupSpec::format_element(const GroupElement& a) const {
  check_member(a);
  if (factors_.size() == 1) return std::to_string(a.comps[0]);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.comps.size(); ++i) {
    if (i) out << ',';
    out << a.comps[i];
  }
  out << ')';
  return out.str();
}

GroupSpec GroupSpec::product(const GroupSpec& a, const GroupSpec& b) {
  std::vector<std::int64_t> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return GroupSpec(std::move(factors));
}

GroupElement GroupSpec::combine(const GroupElement& a, const GroupElement& b,
                                const GroupSpec& left) const {
  if (a.comps.size() != left.factor_count() ||
      a.comps.size() + b.comps.size() != factors_.size())
    throw domain_error("component shapes do not match product group " + format());
  std::vector<std::int64_t> comps = a.comps;
  comps.insert(comps.end(), b.comps.begin(), b.comps.end());
  return element(std::move(comps));
}

}  // namespace gradex
