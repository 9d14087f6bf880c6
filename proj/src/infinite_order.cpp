#include "lyntree/infinite_order.hpp"

#include <numeric>

namespace lyntree {

Outcome reverse(Outcome o) noexcept {
  switch (o) {
    case Outcome::Less: return Outcome::Greater;
    case Outcome::Greater: return Outcome::Less;
    case Outcome::Equal: return Outcome::Equal;
  }
  return o;
}

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Less: return "less";
    case Outcome::Equal: return "equal";
    case Outcome::Greater: return "greater";
  }
  return "?";
}

namespace {

void check_operands(const Word& u, const Word& v) {
  require_nonempty(u, "u");
  require_nonempty(v, "v");
  require_same_alphabet(u, v);
}

// Compares uv with vu letter by letter, without building either word.
Outcome concat_compare(const Word& u, const Word& v) {
  const std::size_t n = u.size() + v.size();
  auto at_uv = [&](std::size_t i) { return i < u.size() ? u[i] : v[i - u.size()]; };
  auto at_vu = [&](std::size_t i) { return i < v.size() ? v[i] : u[i - v.size()]; };
  for (std::size_t i = 0; i < n; ++i) {
    Symbol a = at_uv(i);
    Symbol b = at_vu(i);
    if (a != b) return a < b ? Outcome::Less : Outcome::Greater;
  }
  return Outcome::Equal;
}

std::optional<std::size_t> scan_mismatch(const Word& u, const Word& v) {
  const std::size_t bound = fine_wilf_bound(u.size(), v.size());
  std::size_t iu = 0;
  std::size_t iv = 0;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (u[iu] != v[iv]) return k;
    if (++iu == u.size()) iu = 0;
    if (++iv == v.size()) iv = 0;
  }
  return std::nullopt;
}

}  // namespace

std::size_t fine_wilf_bound(std::size_t u_len, std::size_t v_len) noexcept {
  return u_len + v_len - std::gcd(u_len, v_len);
}

Outcome omega_outcome(const Word& u, const Word& v) {
  check_operands(u, v);
  return concat_compare(u, v);
}

OmegaComparison omega_cmp(const Word& u, const Word& v) {
  OmegaComparison result;
  result.outcome = omega_outcome(u, v);
  if (result.outcome == Outcome::Equal) {
    result.common_root = primitive_root(u).root;
    return result;
  }
  result.mismatch_position = scan_mismatch(u, v);
  if (!result.mismatch_position) {
    throw Error(ErrorKind::InternalError, "omega comparison found no mismatch within the bound for '" +
                                              u.str() + "', '" + v.str() + "'");
  }
  return result;
}

std::optional<std::size_t> omega_mismatch_position(const Word& u, const Word& v) {
  check_operands(u, v);
  return scan_mismatch(u, v);
}

bool comparison_within_first_factor(const Word& u, const Word& v) {
  auto k = omega_mismatch_position(u, v);
  if (!k) {
    throw Error(ErrorKind::OmegaEqual,
                "'" + u.str() + "' and '" + v.str() + "' have equal infinite powers");
  }
  return *k <= v.size();
}

SixConditions six_conditions(const Word& u, const Word& v) {
  check_operands(u, v);
  const Word uv = u + v;
  const Word vu = v + u;
  auto less = [](const Word& x, const Word& y) { return concat_compare(x, y) == Outcome::Less; };
  SixConditions c;
  c.c1 = less(u, v);
  c.c2 = less(uv, v);
  c.c3 = less(u, vu);
  c.c4 = less(uv, vu);
  c.c5 = less(u, uv);
  c.c6 = less(vu, v);
  return c;
}

bool bergman_chain(const Word& u, const Word& v) {
  if (omega_outcome(u, v) != Outcome::Less) {
    throw Error(ErrorKind::PreconditionFailed,
                "bergman chain needs ('" + u.str() + "')^ω < ('" + v.str() + "')^ω");
  }
  const Word uv = u + v;
  const Word vu = v + u;
  return concat_compare(u, uv) == Outcome::Less && concat_compare(uv, vu) == Outcome::Less &&
         concat_compare(vu, v) == Outcome::Less;
}

}  // namespace lyntree
