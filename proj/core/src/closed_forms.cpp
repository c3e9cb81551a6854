#include <algorithm>
#include <set>
#include <stdexcept>

#include "drawn.hpp"
#include "strata/algebra.hpp"
#include "strata/hyperelliptic.hpp"

namespace strata {

TautClass drawn(int n, const Drawn& d) {
  Graph gr;
  for (int g : d.genus) gr.add_vertex(g);
  std::vector<bool> used(n + 1, false);
  std::vector<int> open;  // leg indices still to be labeled
  for (int v = 0; v < static_cast<int>(d.legs.size()); ++v) {
    for (int m : d.legs[v]) {
      if (m < 0 || m > n) throw std::invalid_argument("drawn: marking out of range");
      if (m) {
        if (used[m]) throw std::invalid_argument("drawn: marking used twice");
        used[m] = true;
      } else {
        open.push_back(gr.num_legs());
      }
      gr.add_leg(v, m);
    }
  }
  for (auto [u, v] : d.edges) gr.add_edge(u, v);
  std::vector<int> avail;
  for (int m = 1; m <= n; ++m)
    if (!used[m]) avail.push_back(m);
  if (avail.size() != open.size()) throw std::invalid_argument("drawn: leg count does not match n");

  TautClass out(gr.total_genus(), n);
  std::set<std::string> seen;
  do {
    DecGraph dg = DecGraph::bare(gr);
    for (std::size_t k = 0; k < open.size(); ++k) dg.graph.legs[open[k]].marking = avail[k];
    for (auto [e, side] : d.psi) ++dg.dec.psi[dg.graph.edge_flag(e, side)];
    validate(dg.graph);
    Canonical c = canonicalize(dg, false);
    if (!seen.insert(c.key).second) continue;
    out.add(dg, Rational(1, c.aut));
  } while (std::next_permutation(avail.begin(), avail.end()));
  return out;
}

namespace {

using Legs = std::vector<int>;

Legs free_legs(int k) { return Legs(k, 0); }

// genus-1 vertex joined by two edges to a rational vertex
Drawn banana(Legs rational, Legs elliptic) {
  return {{0, 1}, {std::move(rational), std::move(elliptic)}, {{0, 1}, {0, 1}}, {}};
}

// a -- b == elliptic: the rational vertex b carries the double edge
Drawn dangle(Legs a, Legs b, Legs elliptic) {
  return {{0, 0, 1}, {std::move(a), std::move(b), std::move(elliptic)}, {{2, 1}, {2, 1}, {1, 0}}, {}};
}

Drawn triangle(Legs elliptic, Legs x, Legs y) {
  return {{1, 0, 0}, {std::move(elliptic), std::move(x), std::move(y)}, {{0, 1}, {0, 2}, {1, 2}}, {}};
}

// a0 -- a1 -- a2 == elliptic
Drawn chain(Legs a0, Legs a1, Legs a2, Legs elliptic) {
  return {{0, 0, 0, 1},
          {std::move(a0), std::move(a1), std::move(a2), std::move(elliptic)},
          {{3, 2}, {3, 2}, {2, 1}, {0, 1}},
          {}};
}

// two rational vertices each doubly joined to a middle rational vertex
Drawn double_banana(Legs a0, Legs mid, Legs a1) {
  return {{0, 0, 0}, {std::move(a0), std::move(a1), std::move(mid)}, {{2, 1}, {2, 1}, {2, 0}, {2, 0}}, {}};
}

// a0 == a1 == a2 -- a3, all rational
Drawn double_chain(Legs a0, Legs a1, Legs a2, Legs a3) {
  return {{0, 0, 0, 0},
          {std::move(a0), std::move(a1), std::move(a2), std::move(a3)},
          {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}},
          {}};
}

// elliptic vertex 0 joined to 1 and 3; 1 joined to 2 and 3
Drawn kite(Legs elliptic, Legs a1, Legs a2, Legs a3) {
  return {{1, 0, 0, 0},
          {std::move(elliptic), std::move(a1), std::move(a2), std::move(a3)},
          {{0, 1}, {0, 3}, {1, 2}, {1, 3}},
          {}};
}

// elliptic == a2, a2 joined to a0 and a1
Drawn fork(Legs a0, Legs a1, Legs a2) {
  return {{0, 0, 0, 1}, {std::move(a0), std::move(a1), std::move(a2), {}}, {{3, 2}, {3, 2}, {2, 0}, {2, 1}}, {}};
}

// cycle through the elliptic vertex
Drawn ring(std::vector<Legs> rational) {
  Drawn d{{1}, {{}}, {}, {}};
  const int r = static_cast<int>(rational.size());
  for (auto& l : rational) {
    d.genus.push_back(0);
    d.legs.push_back(std::move(l));
  }
  for (int v = 0; v < r; ++v) d.edges.push_back({v, v + 1});
  d.edges.push_back({r, 0});
  return d;
}

Drawn with_psi(Drawn d, int edge, int side) {
  d.psi.push_back({edge, side});
  return d;
}

struct Ctx {
  int n;
  TautClass L;  // lambda + delta_1
  explicit Ctx(int n_) : n(n_), L(lambda_class(2, n_) + delta_1(2, n_)) {}
  TautClass D(const Drawn& d) const { return drawn(n, d); }
  TautClass Lx(const TautClass& a) const { return multiply(L, a); }
  TautClass L2x(const TautClass& a) const { return multiply(L, multiply(L, a)); }
  TautClass W(int i) const { return weierstrass_divisor(n, i); }
  TautClass Hct(const std::vector<int>& I) const {
    return place_markings(hyp_ct_formula(static_cast<int>(I.size())), I, n);
  }
};

TautClass nct3() {
  Ctx c(3);
  TautClass out(2, 3);
  for (int i = 1; i <= 3; ++i) out -= multiply(c.W(i), c.D(banana(free_legs(2), {i})));
  out += c.Lx(c.D(banana(free_legs(3), {})));
  out += c.D(dangle(free_legs(3), {}, {}));
  out += c.D(dangle(free_legs(2), free_legs(1), {}));
  return out;
}

TautClass nct4() {
  Ctx c(4);
  TautClass out(2, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) out -= multiply(c.Hct({i, j}), c.D(banana(free_legs(2), {i, j})));
  for (int i = 1; i <= 4; ++i) {
    TautClass inner = c.Lx(c.D(banana(free_legs(3), {i})));
    inner += c.D(dangle(free_legs(2), free_legs(1), {i}));
    inner += c.D(dangle(free_legs(3), {}, {i}));
    out += multiply(c.W(i), inner);
  }
  out -= c.L2x(c.D(banana(free_legs(4), {})));
  TautClass bracket = c.D(triangle({}, free_legs(2), free_legs(2)));
  bracket += c.D(dangle(free_legs(2), free_legs(2), {}));
  bracket += c.D(dangle(free_legs(3), free_legs(1), {}));
  bracket += c.D(dangle(free_legs(4), {}, {}));
  out -= c.Lx(bracket);
  out -= c.D(chain(free_legs(2), free_legs(1), free_legs(1), {}));
  out -= c.D(chain(free_legs(2), free_legs(2), {}, {}));
  out += c.D(double_banana(free_legs(2), {}, free_legs(2)));
  return out;
}

TautClass tail5(const Ctx& c) {
  TautClass out(2, 5);
  out -= Rational(1, 4) * c.D(ring({{0}, {0}, {0}, {0, 5}}));
  out += Rational(3, 4) * c.D(ring({{0}, {0}, {5, 0}, {0}}));
  // psi on the half-edge at vertex 3 of the edge 1-3
  out += c.D(with_psi(kite({}, {5}, free_legs(2), free_legs(2)), 3, 1));
  // psi on the half-edge at vertex 1 of the edge 0-1
  out += c.D(with_psi(kite({}, {0}, free_legs(2), {0, 5}), 0, 1));
  // 0 - 1 - 2, 2 - 4, 2 - 3, 4 - 0
  out -= c.D(Drawn{{1, 0, 0, 0, 0}, {{}, {0}, {5}, {0, 0}, {0}}, {{0, 1}, {1, 2}, {2, 4}, {2, 3}, {4, 0}}, {}});
  // 0 - 1 - 2 - 3 - 0, 3 - 4
  out -= c.D(Drawn{{1, 0, 0, 0, 0}, {{}, {0}, {5, 0}, {}, {0, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}, {}});
  // elliptic 4 == 3; 1 - 2, 3 - 0, 3 - 1
  out += c.D(Drawn{{0, 0, 0, 0, 1}, {{0, 5}, {0}, {0, 0}, {}, {}}, {{4, 3}, {4, 3}, {1, 2}, {3, 0}, {3, 1}}, {}});
  // elliptic 4 == 3; 3 - 2, 2 - 0, 2 - 1
  out += c.D(Drawn{{0, 0, 0, 0, 1}, {{0, 5}, {0, 0}, {}, {0}, {}}, {{4, 3}, {4, 3}, {3, 2}, {2, 0}, {2, 1}}, {}});
  out += c.D(Drawn{{0, 0, 0, 0, 1}, {{0, 5}, {0, 0}, {0}, {}, {}}, {{4, 3}, {4, 3}, {3, 2}, {2, 0}, {2, 1}}, {}});
  // elliptic 4 == 3 - 2 - 1 - 0
  out += c.D(Drawn{{0, 0, 0, 0, 1}, {{0, 5}, {0}, {0}, {0}, {}}, {{4, 3}, {4, 3}, {3, 2}, {2, 1}, {1, 0}}, {}});
  out += c.D(Drawn{{0, 0, 0, 0, 1}, {{0, 5}, {0}, {0, 0}, {}, {}}, {{4, 3}, {4, 3}, {3, 2}, {2, 1}, {1, 0}}, {}});
  return out;
}

TautClass nct5() {
  Ctx c(5);
  TautClass out(2, 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      std::vector<int> rest;
      for (int k = 1; k <= 5; ++k)
        if (k != i && k != j) rest.push_back(k);
      out -= multiply(c.Hct(rest), c.D(banana({j, i}, free_legs(3))));
      TautClass inner = c.Lx(c.D(banana(free_legs(3), {i, j})));
      inner += c.D(dangle(free_legs(2), free_legs(1), {i, j}));
      inner += c.D(dangle(free_legs(3), {}, {i, j}));
      out += multiply(c.Hct({i, j}), inner);
    }
  for (int i = 1; i <= 5; ++i) {
    TautClass inner = c.L2x(c.D(banana(free_legs(4), {i})));
    TautClass br = c.D(triangle({i}, free_legs(2), free_legs(2)));
    br += c.D(dangle(free_legs(2), free_legs(2), {i}));
    br += c.D(dangle(free_legs(3), free_legs(1), {i}));
    br += c.D(dangle(free_legs(4), {}, {i}));
    inner += c.Lx(br);
    inner += c.D(chain(free_legs(2), free_legs(1), free_legs(1), {i}));
    inner += c.D(chain(free_legs(2), free_legs(2), {}, {i}));
    inner -= c.D(double_banana(free_legs(2), {i}, free_legs(2)));
    out -= multiply(c.W(i), inner);
  }
  {
    TautClass br = c.Lx(c.D(double_banana(free_legs(2), {}, free_legs(3))));
    br += c.D(double_chain(free_legs(2), {}, free_legs(1), free_legs(2)));
    br += c.D(double_chain(free_legs(2), {}, {}, free_legs(3)));
    out -= br;
  }
  {
    TautClass l3 = multiply(c.L, c.L2x(c.D(banana(free_legs(5), {}))));
    out += l3;
    TautClass br = c.D(triangle({}, free_legs(3), free_legs(2)));
    br += c.D(dangle(free_legs(2), free_legs(3), {}));
    br += c.D(dangle(free_legs(3), free_legs(2), {}));
    br += c.D(dangle(free_legs(4), free_legs(1), {}));
    br += c.D(dangle(free_legs(5), {}, {}));
    out += c.L2x(br);
  }
  {
    TautClass br = c.D(kite({}, {}, free_legs(3), free_legs(2)));
    br += c.D(kite({}, free_legs(1), free_legs(2), free_legs(2)));
    // psi on the half-edge at vertex 1 of the edge 1-2
    br += c.D(with_psi(triangle({}, free_legs(3), {0, 5}), 2, 0));
    br += c.D(fork({0, 5}, free_legs(2), free_legs(1)));
    br += c.D(fork({0, 5}, free_legs(3), {}));
    br -= c.D(ring({free_legs(2), free_legs(1), {5, 0}}));
    br += c.D(chain(free_legs(2), free_legs(2), free_legs(1), {}));
    br += c.D(chain(free_legs(2), free_legs(3), {}, {}));
    br += c.D(chain({5, 0, 0}, free_legs(1), free_legs(1), {}));
    br += c.D(chain({5, 0, 0}, free_legs(2), {}, {}));
    br += c.D(chain({5, 0}, free_legs(1), free_legs(2), {}));
    br += c.D(chain(free_legs(2), free_legs(1), {0, 5}, {}));
    out += c.Lx(br);
  }
  out += tail5(c);
  return out;
}

}  // namespace

TautClass nct_closed(int n) {
  switch (n) {
    case 2:
      return -drawn(2, banana({1, 2}, {}));
    case 3:
      return nct3();
    case 4:
      return nct4();
    case 5:
      return nct5();
    default:
      throw std::invalid_argument("nct_closed: 2 <= n <= 5");
  }
}

TautClass nct5_tail() { return tail5(Ctx(5)); }

std::vector<TautClass> nct5_spot_classes() {
  TautClass lambda = lambda_class(2, 5);
  return {multiply(lambda, drawn(5, banana({3, 2, 1}, {5, 4}))),
          multiply(lambda, drawn(5, banana({5, 2, 1}, {3, 4})))};
}

}  // namespace strata
