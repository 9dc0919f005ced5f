#include "fiburn/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace fiburn {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint16_t> empty_table(int n) {
  return std::vector<std::uint16_t>(static_cast<std::size_t>(n) * n);
}

}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) throw MathError("cyclic: order must be positive");
  if (n == 1) return trivial_group();
  auto t = empty_table(n);
  for (Elt i = 0; i < n; ++i)
    for (Elt j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>((i + j) % n);
  return Group::make(n, std::move(t), "C" + std::to_string(n));
}

GroupPtr dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw MathError("dihedral: order must be even and >= 2");
  int m = order / 2;  // element r^i s^j stored as i + m*j
  auto t = empty_table(order);
  auto id = [m](int i, int j) { return ((i % m) + m) % m + m * j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = j == 0 ? i + k : i - k;
          t[static_cast<std::size_t>(id(i, j)) * order + id(k, l)] =
              static_cast<std::uint16_t>(id(ii, (j + l) % 2));
        }
  return Group::make(order, std::move(t), "D" + std::to_string(order));
}

GroupPtr quaternion(int order) {
  if (order != 8 && order != 16)
    throw MathError("quaternion: only Q8 and Q16 are supported");
  int m = order / 4;  // a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1; a^i b^j <-> i + 2m*j
  int tm = 2 * m;
  auto t = empty_table(order);
  auto id = [tm](int i, int j) { return ((i % tm) + tm) % tm + tm * j; };
  for (int i = 0; i < tm; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < tm; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = j == 0 ? i + k : i - k;
          int jj = j + l;
          if (jj == 2) {
            ii += m;
            jj = 0;
          }
          t[static_cast<std::size_t>(id(i, j)) * order + id(k, l)] =
              static_cast<std::uint16_t>(id(ii, jj));
        }
  return Group::make(order, std::move(t), "Q" + std::to_string(order));
}

GroupPtr modular_group(int order) {
  int p = 2;
  while (order % p != 0) ++p;
  int k = 0, n = order;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1 || k < 3)
    throw MathError("modular group order must be p^k with k >= 3");
  // <x, y | x^p = y^(p^(k-1)) = 1, x y x^-1 = y^(1+p^(k-2))>; y^i x^j <-> i*p + j
  long py = 1;
  for (int i = 0; i < k - 1; ++i) py *= p;
  long s = 1 + py / p;  // 1 + p^(k-2)
  std::vector<long> spow(p, 1);
  for (int j = 1; j < p; ++j) spow[j] = (spow[j - 1] * s) % py;
  auto id = [p](long i, int j) { return static_cast<int>(i) * p + j; };
  auto t = empty_table(order);
  for (long i = 0; i < py; ++i)
    for (int j = 0; j < p; ++j)
      for (long kk = 0; kk < py; ++kk)
        for (int l = 0; l < p; ++l) {
          long ii = (i + kk * spow[j]) % py;
          t[static_cast<std::size_t>(id(i, j)) * order + id(kk, l)] =
              static_cast<std::uint16_t>(id(ii, (j + l) % p));
        }
  return Group::make(order, std::move(t), "M" + std::to_string(order));
}

namespace {

// Heisenberg group mod p: triples (a,b,c), product adds coordinates with the
// cocycle a*b' on the centre coordinate.  Exponent p for odd p.
GroupPtr heisenberg(int p) {
  int n = p * p * p;
  auto t = empty_table(n);
  auto id = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[static_cast<std::size_t>(id(a, b, c)) * n + id(a2, b2, c2)] =
                  static_cast<std::uint16_t>(
                      id((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p));
  return Group::make(n, std::move(t), "X(" + std::to_string(p) + ",1,+)");
}

Elt min_central_of_order(const GroupPtr& g, int p) {
  for (Elt z : g->center().elems)
    if (g->elt_order(z) == p) return z;
  throw MathError("no central element of order " + std::to_string(p));
}

}  // namespace

Elt center_involution(const GroupPtr& g) {
  Elt found = -1;
  for (Elt z : g->center().elems) {
    if (g->elt_order(z) == 2) {
      if (found >= 0) throw MathError("center-involution is ambiguous");
      found = z;
    }
  }
  if (found < 0) throw MathError("no central involution");
  return found;
}

GroupPtr extraspecial(int p, int l, char sign) {
  if (!is_prime(p)) throw MathError("extraspecial: p must be prime");
  if (l < 1) throw MathError("extraspecial: l must be >= 1");
  if (sign != '+' && sign != '-') throw MathError("extraspecial: sign must be + or -");
  GroupPtr base;
  if (p == 2)
    base = sign == '+' ? dihedral(8) : quaternion(8);
  else
    base = sign == '+' ? heisenberg(p) : modular_group(p * p * p);
  GroupPtr g = base;
  for (int i = 1; i < l; ++i) {
    GroupPtr ext = p == 2 ? dihedral(8) : heisenberg(p);
    g = central_product(ext, min_central_of_order(ext, p), g,
                        min_central_of_order(g, p));
  }
  std::ostringstream nm;
  nm << "X(" << p << "," << l << "," << sign << ")";
  if (l == 1 && p == 2) return g;  // keeps the D8 / Q8 names
  // Rebuild with the family name for display purposes.
  std::vector<std::uint16_t> t(static_cast<std::size_t>(g->order()) * g->order());
  for (Elt a = 0; a < g->order(); ++a)
    for (Elt b = 0; b < g->order(); ++b)
      t[static_cast<std::size_t>(a) * g->order() + b] =
          static_cast<std::uint16_t>(g->mul(a, b));
  return Group::make(g->order(), std::move(t), nm.str());
}

GroupPtr from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("table file not readable: " + path);
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("table file: bad order line");
  std::vector<std::uint16_t> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  long v;
  while (in >> v) {
    if (v < 0 || v >= n) throw ParseError("table file: element id out of range");
    t.push_back(static_cast<std::uint16_t>(v));
  }
  if (t.size() != static_cast<std::size_t>(n) * n)
    throw ParseError("table file: wrong number of entries");
  return Group::make(n, std::move(t), "table:" + path);
}

// --- spec parser ---------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("group spec: expected '" + std::string(1, c) +
                       "' at position " + std::to_string(pos) + " in '" + s + "'");
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("group spec: expected a number in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  GroupPtr product() {
    GroupPtr g = atom();
    while (true) {
      std::size_t save = pos;
      skip_ws();
      if (pos < s.size() && s[pos] == 'x' &&
          (pos + 1 == s.size() ||
           !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
        ++pos;
        GroupPtr h = atom();
        g = direct_product(g, h).group;
      } else {
        pos = save;
        break;
      }
    }
    return g;
  }

  Elt element_spec(const GroupPtr& g) {
    skip_ws();
    if (s.compare(pos, 17, "center-involution") == 0) {
      pos += 17;
      return center_involution(g);
    }
    int e = number();
    if (e < 0 || e >= g->order())
      throw ParseError("group spec: element id out of range");
    return e;
  }

  GroupPtr atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("group spec: unexpected end in '" + s + "'");
    if (s.compare(pos, 3, "cp(") == 0) {
      pos += 3;
      GroupPtr a = product();
      expect('@');
      Elt za = element_spec(a);
      skip_ws();
      expect(',');
      GroupPtr b = product();
      expect('@');
      Elt zb = element_spec(b);
      skip_ws();
      expect(')');
      return central_product(a, za, b, zb);
    }
    if (s.compare(pos, 6, "table:") == 0) {
      pos += 6;
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ')' &&
             !std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      return from_table_file(s.substr(start, pos - start));
    }
    char c = s[pos];
    if (c == 'C') {
      ++pos;
      return cyclic(number());
    }
    if (c == 'D') {
      ++pos;
      return dihedral(number());
    }
    if (c == 'Q') {
      ++pos;
      return quaternion(number());
    }
    if (c == 'M') {
      ++pos;
      return modular_group(number());
    }
    if (c == 'X') {
      ++pos;
      expect('(');
      int p = number();
      skip_ws();
      expect(',');
      int l = number();
      skip_ws();
      expect(',');
      skip_ws();
      char sign = pos < s.size() ? s[pos] : '?';
      if (sign != '+' && sign != '-')
        throw ParseError("group spec: extraspecial sign must be + or -");
      ++pos;
      skip_ws();
      expect(')');
      return extraspecial(p, l, sign);
    }
    throw ParseError("group spec: cannot parse '" + s.substr(pos) + "'");
  }
};

}  // namespace

GroupPtr build_group(const std::string& spec) {
  static std::map<std::string, GroupPtr> memo;
  auto it = memo.find(spec);
  if (it != memo.end()) return it->second;
  Parser p(spec);
  GroupPtr g = p.product();
  p.skip_ws();
  if (p.pos != spec.size())
    throw ParseError("group spec: trailing input in '" + spec + "'");
  memo.emplace(spec, g);
  return g;
}

}  // namespace fiburn
