#include "fiburn/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace fiburn {

namespace {

// Concrete model of a transitive fibered biset: points are classes of
// (alpha, m) in Z/e x P modulo (alpha, m*u) ~ (alpha + ups(u), m).
struct ConcreteBiset {
  const Group* prod;
  int e;
  std::vector<int> canon;        // raw index (alpha * |P| + m) -> point id
  std::vector<int> rep_raw;      // point id -> representative raw index
  int points() const { return static_cast<int>(rep_raw.size()); }

  ConcreteBiset(const FiberedPair& fp, int fiber) : prod(fp.U.parent.get()), e(fiber) {
    int np = prod->order();
    std::vector<int> upsilon_int(fp.U.elems.size());
    for (std::size_t i = 0; i < fp.U.elems.size(); ++i) {
      const QZ& v = fp.upsilon.values[i];
      upsilon_int[i] = static_cast<int>(v.num * (e / v.den));
    }
    canon.assign(static_cast<std::size_t>(e) * np, -1);
    for (int alpha = 0; alpha < e; ++alpha) {
      for (Elt m = 0; m < np; ++m) {
        int raw = alpha * np + m;
        if (canon[raw] >= 0) continue;
        int id = points();
        // orbit of (alpha, m): (alpha + ups(u), m * u^-1)
        int best = raw;
        std::vector<int> orbit;
        for (std::size_t i = 0; i < fp.U.elems.size(); ++i) {
          int a2 = (alpha + upsilon_int[i]) % e;
          Elt m2 = prod->mul(m, prod->inv(fp.U.elems[i]));
          int raw2 = a2 * np + m2;
          orbit.push_back(raw2);
          best = std::min(best, raw2);
        }
        for (int r : orbit) canon[r] = id;
        rep_raw.push_back(best);
      }
    }
  }

  int fiber_shift(int pt, int b) const {
    int np = prod->order();
    int raw = rep_raw[pt];
    int alpha = raw / np, m = raw % np;
    return canon[((alpha + b) % e) * np + m];
  }
  // left multiplication by an element of the product group
  int act(int pt, Elt g) const {
    int np = prod->order();
    int raw = rep_raw[pt];
    int alpha = raw / np, m = raw % np;
    return canon[alpha * np + prod->mul(g, m)];
  }
};

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

AlgebraElement tensor_oracle(const FiberedPair& x, const FiberedPair& y) {
  const auto& ix = x.U.parent->product_info();
  const auto& iy = y.U.parent->product_info();
  if (!ix || !iy) throw MathError("tensor_oracle: pairs must live in products");
  const GroupPtr& g = ix->left;
  const GroupPtr& h = ix->right;
  const GroupPtr& k = iy->right;
  if (iy->left.get() != h.get())
    throw MathError("tensor_oracle: middle groups differ");
  if (g->order() > caps().oracle || h->order() > caps().oracle ||
      k->order() > caps().oracle)
    throw CapExceeded("tensor_oracle: factor order exceeds the oracle cap");

  int e = static_cast<int>(std::lcm(std::lcm(static_cast<long>(g->exponent()),
                                             static_cast<long>(h->exponent())),
                                    static_cast<long>(k->exponent())));
  ConcreteBiset bx(x, e), by(y, e);
  int nx = bx.points(), ny = by.points();

  // (A x H)-orbits on X x Y; the action of h is ((1,h) o x, (h,1) o y) and
  // the action of the fiber generator is ((-1) x, (+1) y).
  int nh = h->order(), nk = k->order();
  UnionFind uf(nx * ny);
  std::vector<Elt> hgens = h->minimal_generators();
  for (int px = 0; px < nx; ++px) {
    for (int py = 0; py < ny; ++py) {
      int z = px * ny + py;
      uf.unite(z, bx.fiber_shift(px, e - 1) * ny + by.fiber_shift(py, 1));
      for (Elt hg : hgens) {
        int qx = bx.act(px, hg);              // (1, hg) in G x H
        int qy = by.act(py, hg * nk);         // (hg, 1) in H x K
        uf.unite(z, qx * ny + qy);
      }
    }
  }

  std::vector<int> orbit_id(nx * ny, -1);
  std::vector<int> orbit_member;
  for (int z = 0; z < nx * ny; ++z) {
    int r = uf.find(z);
    if (orbit_id[r] < 0) {
      orbit_id[r] = static_cast<int>(orbit_member.size());
      orbit_member.push_back(r);
    }
    orbit_id[z] = orbit_id[r];
  }
  int norb = static_cast<int>(orbit_member.size());

  auto move_orbit = [&](int o, auto&& point_move) {
    int z = orbit_member[o];
    int px = z / ny, py = z % ny;
    auto [qx, qy] = point_move(px, py);
    return orbit_id[uf.find(qx * ny + qy)];
  };

  // residual fiber action on orbits
  std::vector<int> fiber_perm(norb);
  for (int o = 0; o < norb; ++o)
    fiber_perm[o] = move_orbit(o, [&](int px, int py) {
      return std::make_pair(bx.fiber_shift(px, 1), py);
    });

  std::vector<char> free_orbit(norb, 0);
  for (int o = 0; o < norb; ++o) {
    int d = 1, cur = fiber_perm[o];
    while (cur != o) {
      cur = fiber_perm[cur];
      ++d;
    }
    free_orbit[o] = (d == e);
  }

  // group the A-free orbits into (A x G x K)-orbits
  UnionFind super(norb);
  std::vector<Elt> ggens = g->minimal_generators();
  std::vector<Elt> kgens = k->minimal_generators();
  for (int o = 0; o < norb; ++o) {
    if (!free_orbit[o]) continue;
    super.unite(o, fiber_perm[o]);
    for (Elt gg : ggens)
      super.unite(o, move_orbit(o, [&](int px, int py) {
                    return std::make_pair(bx.act(px, gg * nh), py);
                  }));
    for (Elt kg : kgens)
      super.unite(o, move_orbit(o, [&](int px, int py) {
                    return std::make_pair(px, by.act(py, kg));
                  }));
  }

  SpacePtr space = BisetSpace::get(g, k);
  const GroupPtr& pgk = space->product();
  AlgebraElement out(space);
  std::vector<char> done(norb, 0);
  for (int o = 0; o < norb; ++o) {
    if (!free_orbit[o] || done[super.find(o)]) continue;
    done[super.find(o)] = 1;
    // stabilizing pair at this orbit: (g,k) with (g,k) o p0 = b . p0
    std::vector<int> cycle(norb, -1);  // orbit -> fiber power b
    int cur = o;
    for (int b = 0; b < e; ++b) {
      cycle[cur] = b;
      cur = fiber_perm[cur];
    }
    FiberedPair fp;
    fp.U.parent = pgk;
    for (Elt a = 0; a < g->order(); ++a) {
      for (Elt c = 0; c < k->order(); ++c) {
        int img = move_orbit(o, [&](int px, int py) {
          return std::make_pair(bx.act(px, a * nh), by.act(py, c));
        });
        if (cycle[img] < 0) continue;
        fp.U.elems.push_back(space->pair(a, c));
        fp.upsilon.values.push_back(QZ(cycle[img], e));
      }
    }
    fp.upsilon.domain = fp.U;
    out.add_term(space->canonical(fp), 1);
  }
  return out;
}

}  // namespace fiburn
