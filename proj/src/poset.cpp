#include "ncposet/poset.hpp"

#include "ncposet/comm_young.hpp"
#include "ncposet/errors.hpp"
#include "ncposet/nc_poset.hpp"
#include "ncposet/variants.hpp"

namespace ncposet {

std::string to_string(Family f) {
  switch (f) {
    case Family::NC: return "nc";
    case Family::Q: return "q";
    case Family::P: return "p";
    case Family::COMM: return "comm";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "nc") return Family::NC;
  if (text == "q") return Family::Q;
  if (text == "p") return Family::P;
  if (text == "comm") return Family::COMM;
  throw ParseError("unknown poset '" + std::string(text) + "'", 0);
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::LT: return "LT";
    case Comparison::GT: return "GT";
    case Comparison::EQ: return "EQ";
    case Comparison::INCOMPARABLE: return "INCOMPARABLE";
  }
  return "?";
}

bool leq(const PosetHandle& h, const Element& a, const Element& b) {
  if (h.takes_monomials()) {
    const auto* ta = std::get_if<CommMonomial>(&a);
    const auto* tb = std::get_if<CommMonomial>(&b);
    if (!ta || !tb) throw DomainError("comm poset compares commutative monomials");
    return comm_leq(*ta, *tb, h.n);
  }
  const auto* ma = std::get_if<Word>(&a);
  const auto* mb = std::get_if<Word>(&b);
  if (!ma || !mb) throw DomainError(to_string(h.family) + " poset compares words");
  switch (h.family) {
    case Family::NC: return nc_leq(*ma, *mb, h.n);
    case Family::Q: return q_leq(*ma, *mb, h.n);
    case Family::P:
      ma->check_bound(h.n);
      mb->check_bound(h.n);
      return p_leq(*ma, *mb);
    case Family::COMM: break;
  }
  return false;
}

Comparison compare(const PosetHandle& h, const Element& a, const Element& b) {
  const bool forward = leq(h, a, b);
  if (a == b) return Comparison::EQ;
  const bool backward = leq(h, b, a);
  if (forward) return Comparison::LT;
  if (backward) return Comparison::GT;
  return Comparison::INCOMPARABLE;
}

Element parse_element(const PosetHandle& h, std::string_view text) {
  if (h.takes_monomials()) return parse_monomial(text);
  return parse_word(text);
}

std::string format_element(const Element& e) {
  if (const auto* w = std::get_if<Word>(&e)) return format_word(*w);
  return format_monomial(std::get<CommMonomial>(e));
}

}  // namespace ncposet
