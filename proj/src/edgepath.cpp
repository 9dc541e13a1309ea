#include "mks/edgepath.hpp"

#include "mks/arith.hpp"

namespace mks {

namespace {

void basic_dfs(std::vector<Fraction>& chain, std::vector<Edgepath>& out, const Fraction& start) {
  const Fraction cur = chain.back();  // by value: chain reallocates below
  if (cur.is_integer()) {
    Edgepath p;
    p.start = start;
    p.vertices = chain;
    out.push_back(std::move(p));
    return;
  }
  const Fraction prev = chain.size() >= 2 ? chain[chain.size() - 2] : Fraction(0);
  const bool has_prev = chain.size() >= 2;
  auto [lo, hi] = farey_parents(cur);
  for (const Fraction* next : {&lo, &hi}) {
    if (has_prev && prev == mediant(cur, *next)) continue;
    chain.push_back(*next);
    basic_dfs(chain, out, start);
    chain.pop_back();
  }
}

Fraction u_of_tangle(const Fraction& f) { return Fraction(f.den() - 1, f.den()); }

}  // namespace

std::vector<Edgepath> enumerate_basic_edgepaths(const Fraction& k) {
  if (k.is_integer())
    throw std::invalid_argument("enumerate_basic_edgepaths: integral tangle " + k.str());
  std::vector<Edgepath> out;
  std::vector<Fraction> chain{k};
  basic_dfs(chain, out, k);
  return out;
}

Fraction eval_extended(const Edgepath& path, const Fraction& u) {
  if (u <= Fraction(0) || u >= Fraction(1))
    throw std::invalid_argument("eval_extended: u = " + u.str() + " outside (0,1)");
  if (path.is_constant() || u >= u_of_tangle(path.start)) return path.start;
  Fraction ur = u_of_tangle(path.vertices.front());
  Fraction vr = path.vertices.front();
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    Fraction ul = u_of_tangle(path.vertices[i]);
    const Fraction& vl = path.vertices[i];
    if (u >= ul) return vl + (u - ul) * (vr - vl) / (ur - ul);
    ur = std::move(ul);
    vr = vl;
  }
  throw std::invalid_argument("eval_extended: u = " + u.str() + " below the path's range");
}

Fraction value_at_zero(const Edgepath& path) {
  if (path.is_constant())
    throw std::invalid_argument("value_at_zero: constant edgepath never reaches u = 0");
  const Fraction& last = path.vertices.back();
  if (!last.is_integer())
    throw std::invalid_argument("value_at_zero: path does not reach u = 0");
  return last;
}

Fraction path_length(const Edgepath& path, bool restrict_positive_u) {
  if (path.is_constant()) return Fraction(0);
  Fraction len(0);
  std::size_t edges = path.vertices.size() - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    if (i + 1 == edges && path.final_partial)
      len += *path.final_partial;
    else
      len += Fraction(1);
  }
  if (!restrict_positive_u) {
    len += Fraction(mpz_class(abs(path.vertical_run)));
    if (path.appended_infinity) len += Fraction(1);
  }
  return len;
}

Fraction twist_of_edgepath(const Edgepath& path) {
  if (path.is_constant()) return Fraction(0);
  Fraction tw(0);
  std::size_t edges = path.vertices.size() - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    Fraction len = (i + 1 == edges && path.final_partial) ? *path.final_partial : Fraction(1);
    if (len.is_zero()) continue;
    int sigma = edge_sign(path.vertices[i + 1], path.vertices[i]);
    tw += Fraction(-2 * sigma) * len;
  }
  tw += Fraction(mpz_class(-2 * path.vertical_run));
  return tw;
}

std::string encode(const Edgepath& path) {
  if (path.is_constant())
    return "const(" + path.constant_ratio->str() + ")@<" + path.start.str() + ">";
  std::string s;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) s += "-";
    s += "<" + path.vertices[i].str() + ">";
  }
  if (path.final_partial) s += "*" + path.final_partial->str();
  if (path.vertical_run != 0) {
    s += ";v=";
    if (path.vertical_run > 0) s += "+";
    s += path.vertical_run.get_str();
  }
  if (path.appended_infinity) s += ";inf";
  return s;
}

}  // namespace mks
