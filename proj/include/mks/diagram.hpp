#pragma once

#include <utility>

#include "mks/fraction.hpp"

namespace mks {

// Vertices of the diagram on the uv-plane: tangle points <p/q> at
// ((q-1)/q, p/q), circle points o<p/q> at (1, p/q), and <inf> at (-1, 0).
enum class VertexKind { Tangle, Circle, Infinity };

struct Vertex {
  VertexKind kind = VertexKind::Tangle;
  Fraction value;  // p/q; ignored for Infinity

  static Vertex tangle(Fraction f) { return {VertexKind::Tangle, std::move(f)}; }
  static Vertex circle(Fraction f) { return {VertexKind::Circle, std::move(f)}; }
  static Vertex infinity() { return {VertexKind::Infinity, Fraction()}; }
};

std::pair<Fraction, Fraction> uv_of(const Vertex& v);

enum class EdgeKind { Ordinary, Vertical, Infinity, Horizontal };

// <inf>-<0> counts as an infinity edge even though it is horizontal as a
// segment of the plane.
struct Edge {
  Vertex a, b;
  EdgeKind kind = EdgeKind::Ordinary;
  Fraction completeness{1};  // k/m in (0,1], 1 = complete
};

// Kind of the edge joining two vertices; throws for pairs the diagram does
// not join (non-adjacent tangle vertices, circle-circle, tangle-circle with
// different values).
EdgeKind classify_edge(const Vertex& a, const Vertex& b);

// Curve-system coordinates: a, b, c arc counts plus the count d of
// infinity tangles. Coordinates of a disjoint union add component-wise.
struct CurveSystemCoords {
  mpz_class a, b, c, d;

  friend CurveSystemCoords operator+(const CurveSystemCoords& x, const CurveSystemCoords& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend bool operator==(const CurveSystemCoords& x, const CurveSystemCoords& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Tangle p/q -> (1, q-1, p, 0); circle p/q -> (0, q, p, 0).
CurveSystemCoords abc_of(VertexKind kind, const Fraction& f);

// Sign of the edge <p/q>-<r/s> traversed leftward from <r/s> toward <p/q>:
// +1 if v increases, -1 if it decreases, computed as sign(p*s - q*r).
// Vertical edges (q = s = 1) fit the same formula with the convention that
// motion toward increasing v has sign +1. Throws if |ps-qr| != 1.
int edge_sign(const Fraction& pq, const Fraction& rs);

// Length of the partial edge of <p/q>-<r/s> (s > q >= 1) cut at u-coordinate
// u0: (1 + s(u0-1)) / ((s-q)(u0-1)), the k/(k+l) sheet ratio of the cut
// point. Requires (q-1)/q <= u0 <= (s-1)/s.
Fraction partial_edge_length(const mpz_class& q, const mpz_class& s, const Fraction& u0);

}  // namespace mks
