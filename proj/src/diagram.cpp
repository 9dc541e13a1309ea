#include "mks/diagram.hpp"

namespace mks {

std::pair<Fraction, Fraction> uv_of(const Vertex& v) {
  switch (v.kind) {
    case VertexKind::Tangle:
      return {Fraction(v.value.den() - 1, v.value.den()), v.value};
    case VertexKind::Circle:
      return {Fraction(1), v.value};
    case VertexKind::Infinity:
      return {Fraction(-1), Fraction(0)};
  }
  throw std::invalid_argument("uv_of: bad vertex kind");
}

CurveSystemCoords abc_of(VertexKind kind, const Fraction& f) {
  switch (kind) {
    case VertexKind::Tangle:
      return {1, f.den() - 1, f.num(), 0};
    case VertexKind::Circle:
      return {0, f.den(), f.num(), 0};
    default:
      throw std::invalid_argument("abc_of: expects a tangle or circle curve system");
  }
}

EdgeKind classify_edge(const Vertex& a, const Vertex& b) {
  if (a.kind == VertexKind::Infinity || b.kind == VertexKind::Infinity) {
    const Vertex& other = a.kind == VertexKind::Infinity ? b : a;
    if (a.kind == b.kind || other.kind != VertexKind::Tangle || !other.value.is_integer())
      throw std::invalid_argument("classify_edge: <inf> connects only to integer vertices");
    return EdgeKind::Infinity;
  }
  if (a.kind == VertexKind::Circle || b.kind == VertexKind::Circle) {
    if (a.kind == b.kind || a.value != b.value)
      throw std::invalid_argument("classify_edge: horizontal edges join <p/q> and o<p/q>");
    return EdgeKind::Horizontal;
  }
  edge_sign(a.value, b.value);  // adjacency check
  return a.value.is_integer() && b.value.is_integer() ? EdgeKind::Vertical : EdgeKind::Ordinary;
}

int edge_sign(const Fraction& pq, const Fraction& rs) {
  mpz_class d = pq.num() * rs.den() - pq.den() * rs.num();
  if (d != 1 && d != -1)
    throw std::invalid_argument("edge_sign: " + pq.str() + " and " + rs.str() +
                                " are not Farey-adjacent");
  return d > 0 ? 1 : -1;
}

Fraction partial_edge_length(const mpz_class& q, const mpz_class& s, const Fraction& u0) {
  if (!(s > q && q >= 1))
    throw std::invalid_argument("partial_edge_length: need s > q >= 1");
  if (u0 < Fraction(q - 1, q) || u0 > Fraction(s - 1, s))
    throw std::invalid_argument("partial_edge_length: u0 = " + u0.str() +
                                " outside the edge's u-range");
  Fraction um1 = u0 - Fraction(1);
  return (Fraction(1) + Fraction(s) * um1) / (Fraction(s - q) * um1);
}

}  // namespace mks
