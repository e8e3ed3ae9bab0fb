#include "weylext/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylext {

namespace {

// ---------------------------------------------------------------------------
// coefficient fields
//
// Each field is a small context object; elements are plain values (Int for
// prime fields, coefficient vectors for extensions).  Only the operations
// the solver needs are provided.
// ---------------------------------------------------------------------------

Int mod_pow(Int base, Int exp, Int m) {
  Int r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % m;
    base = (__int128)base * base % m;
    exp >>= 1;
  }
  return r;
}

struct PrimeField {
  Int p;
  using Elem = Int;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(Int v) const { return ((v % p) + p) % p; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
  Elem mul(Elem a, Elem b) const { return (__int128)a * b % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::logic_error("division by zero in F_p");
    return mod_pow(a, p - 2, p);
  }
  bool is_zero(Elem a) const { return a == 0; }
  std::string str(Elem a) const { return std::to_string(a); }
};

// dense polynomials over F_p, little-endian coefficients
using Poly = std::vector<Int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, Int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (__int128)a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// remainder of a by monic-normalised b
Poly poly_mod(Poly a, const Poly& b, Int p) {
  PrimeField F{p};
  Int lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Int coef = F.mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(coef, b[i]));
    a = poly_trim(std::move(a));
    if (a.size() < b.size()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, Int p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // make monic
    PrimeField F{p};
    Int inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

Poly poly_powmod(Poly base, Int exp, const Poly& m, Int p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (exp > 0) {
    if (exp & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    exp >>= 1;
  }
  return r;
}

// cyclotomic polynomial Phi_l over the integers, by exact division of
// x^l - 1 by the Phi_d for proper divisors d
std::vector<Int> cyclotomic(Int l) {
  std::vector<Int> num(static_cast<size_t>(l + 1), 0);
  num[0] = -1;
  num[static_cast<size_t>(l)] = 1;
  for (Int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    std::vector<Int> phi_d = cyclotomic(d);
    // exact division num /= phi_d (both monic up to sign handling)
    std::vector<Int> q(num.size() - phi_d.size() + 1, 0);
    std::vector<Int> rem = num;
    for (size_t i = q.size(); i-- > 0;) {
      Int coef = rem[i + phi_d.size() - 1] / phi_d.back();
      q[i] = coef;
      for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= coef * phi_d[j];
    }
    num = q;
  }
  return num;
}

// smallest d with p^d = 1 mod l
Int mult_order(Int p, Int l) {
  Int d = 1, v = p % l;
  while (v != 1) {
    v = v * (p % l) % l;
    if (++d > l) throw std::logic_error("order computation ran away");
  }
  return d;
}

// an irreducible degree-d factor of Phi_l over F_p (all factors share that
// degree); deterministic LCG drives the equal-degree splitting
Poly irreducible_factor(Int l, Int p) {
  Int d = mult_order(p, l);
  std::vector<Int> phiZ = cyclotomic(l);
  Poly f;
  for (Int c : phiZ) f.push_back(((c % p) + p) % p);
  f = poly_trim(std::move(f));
  double size = 1;
  for (Int i = 0; i < d; ++i) size *= (double)p;
  if (size > 1e9) throw std::invalid_argument("quantum coefficient field too large");
  Int q = 1;
  for (Int i = 0; i < d; ++i) q *= p;

  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (Int)((state >> 33) % (std::uint64_t)p);
  };
  while ((Int)f.size() - 1 > d) {
    Poly r(f.size() - 1);
    for (auto& c : r) c = next();
    r = poly_trim(std::move(r));
    if (r.empty()) continue;
    Poly h;
    if (p == 2) {
      Poly t = poly_mod(r, f, p);  // trace map sum r^(2^i)
      Poly acc = t;
      for (Int i = 1; i < d; ++i) {
        t = poly_mod(poly_mul(t, t, p), f, p);
        acc.resize(std::max(acc.size(), t.size()), 0);
        for (size_t j = 0; j < t.size(); ++j) acc[j] ^= t[j];
        acc = poly_trim(std::move(acc));
      }
      h = poly_gcd(f, acc, p);
    } else {
      Poly t = poly_powmod(r, (q - 1) / 2, f, p);
      if (t.empty())
        h = poly_gcd(f, r, p);
      else {
        t[0] = (t[0] + p - 1) % p;
        h = poly_gcd(f, poly_trim(std::move(t)), p);
      }
    }
    if (h.size() <= 1 || h.size() >= f.size()) continue;
    f = (2 * h.size() <= f.size()) ? h : [&] {
      // keep the cofactor: divide f by h
      Poly quo, rem = f;
      PrimeField F{p};
      quo.assign(f.size() - h.size() + 1, 0);
      Int lead_inv = F.inv(h.back());
      for (size_t i = quo.size(); i-- > 0;) {
        Int coef = F.mul(rem[i + h.size() - 1], lead_inv);
        quo[i] = coef;
        for (size_t j = 0; j < h.size(); ++j) rem[i + j] = F.sub(rem[i + j], F.mul(coef, h[j]));
      }
      return poly_trim(std::move(quo));
    }();
  }
  // normalise monic
  PrimeField F{p};
  Int inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

struct ExtField {  // F_p[x]/(g), zeta = class of x, a primitive l-th root
  Int p;
  Poly g;
  using Elem = Poly;  // degree < deg g, trimmed
  Elem zero() const { return {}; }
  Elem one() const { return {1}; }
  Elem zeta() const {
    if (g.size() == 2) return poly_mod({0, 1}, g, p);  // degree-1 modulus: zeta is a scalar
    return {0, 1};
  }
  Elem from_int(Int v) const {
    Int r = ((v % p) + p) % p;
    return r ? Elem{r} : Elem{};
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c = a;
    c.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
    return poly_trim(std::move(c));
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem c = a;
    c.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
    return poly_trim(std::move(c));
  }
  Elem mul(const Elem& a, const Elem& b) const { return poly_mod(poly_mul(a, b, p), g, p); }
  Elem inv(const Elem& a) const {
    // extended Euclid in F_p[x]
    if (a.empty()) throw std::logic_error("division by zero in F_q");
    Poly r0 = g, r1 = a, s0 = {}, s1 = {1};
    PrimeField F{p};
    while (!r1.empty()) {
      // r0 = q r1 + r2
      Poly q(std::max<size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1), 0);
      Poly rem = r0;
      Int lead_inv = F.inv(r1.back());
      while (rem.size() >= r1.size() && !rem.empty()) {
        Int coef = F.mul(rem.back(), lead_inv);
        size_t shift = rem.size() - r1.size();
        q[shift] = coef;
        for (size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = F.sub(rem[shift + i], F.mul(coef, r1[i]));
        rem = poly_trim(std::move(rem));
      }
      Poly s2 = sub_raw(s0, poly_mul(q, s1, p));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 = gcd (a unit times 1 since g is irreducible and a != 0 mod g)
    if (r0.size() != 1) throw std::logic_error("non-invertible element in F_q");
    Int c_inv = F.inv(r0[0]);
    Poly out = s0;
    for (auto& c : out) c = F.mul(c, c_inv);
    return poly_mod(std::move(out), g, p);
  }
  bool is_zero(const Elem& a) const { return a.empty(); }
  std::string str(const Elem& a) const {
    if (a.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) os << '+';
      os << a[i];
      if (i >= 1) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  }

 private:
  Poly sub_raw(const Poly& a, const Poly& b) const {
    Poly c = a;
    c.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
    return poly_trim(std::move(c));
  }
};

struct CycloField {  // Q[x]/(Phi_l), exact rational coefficients
  Int l;
  std::vector<mpq_class> phi;  // monic
  using Elem = std::vector<mpq_class>;
  static Elem trim(Elem a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }
  Elem zero() const { return {}; }
  Elem one() const { return {mpq_class(1)}; }
  Elem zeta() const {
    if (phi.size() == 2) {  // l = 2: zeta = -1 rational
      return trim({-phi[0]});
    }
    return {mpq_class(0), mpq_class(1)};
  }
  Elem from_int(Int v) const { return v ? Elem{mpq_class((long)v)} : Elem{}; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c = a;
    c.resize(std::max(a.size(), b.size()));
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return trim(std::move(c));
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem c = a;
    c.resize(std::max(a.size(), b.size()));
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return trim(std::move(c));
  }
  Elem redc(Elem a) const {
    while (a.size() >= phi.size()) {
      mpq_class coef = a.back();
      size_t shift = a.size() - phi.size();
      for (size_t i = 0; i < phi.size(); ++i) a[shift + i] -= coef * phi[i];
      a = trim(std::move(a));
      if (a.size() < phi.size()) break;
    }
    return a;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.empty() || b.empty()) return {};
    Elem c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return redc(trim(std::move(c)));
  }
  Elem inv(const Elem& a) const {
    if (a.empty()) throw std::logic_error("division by zero in Q(zeta)");
    Elem r0 = phi, r1 = a, s0 = {}, s1 = one();
    while (!r1.empty()) {
      Elem q(std::max<size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1));
      Elem rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        mpq_class coef = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] = coef;
        for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= coef * r1[i];
        rem = trim(std::move(rem));
      }
      Elem qs1;
      if (!q.empty() && !s1.empty()) {
        qs1.resize(q.size() + s1.size() - 1);
        for (size_t i = 0; i < q.size(); ++i)
          for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
      }
      Elem s2 = sub(s0, trim(std::move(qs1)));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("non-invertible element in Q(zeta)");
    Elem out = s0;
    for (auto& c : out) c /= r0[0];
    return redc(trim(std::move(out)));
  }
  bool is_zero(const Elem& a) const { return a.empty(); }
  std::string str(const Elem& a) const {
    if (a.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) os << '+';
      os << a[i].get_str();
      if (i >= 1) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Gaussian binomial tables and the equivariance solver
// ---------------------------------------------------------------------------

// Balanced Gaussian binomials at a root of unity.  zeta is a primitive
// L-th root with ord(zeta^2) = l; the balanced value is
//   [n choose k] = zeta^{-k(n-k)} * (unbalanced binomial at q = zeta^2),
// the form in which the divided powers satisfy the quantum relations.
// zeta = 1 (with L = 1) gives ordinary binomials mod p.
template <class F>
struct QBinomTable {
  const F& field;
  typename F::Elem zeta;
  Int order;  // zeta^order = 1
  typename F::Elem zero_elem;
  std::vector<std::vector<typename F::Elem>> rows;  // unbalanced at zeta^2
  std::vector<typename F::Elem> q2_pow;
  std::vector<typename F::Elem> zeta_pow;  // zeta^0 .. zeta^{order-1}

  QBinomTable(const F& f, typename F::Elem z, Int ord)
      : field(f), zeta(std::move(z)), order(ord), zero_elem(f.zero()) {
    rows.push_back({field.one()});
    q2_pow.push_back(field.one());
    zeta_pow.push_back(field.one());
    for (Int i = 1; i < order; ++i) zeta_pow.push_back(field.mul(zeta_pow.back(), zeta));
  }
  const typename F::Elem& unbalanced(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return zero_elem;
    auto q2 = field.mul(zeta, zeta);
    while ((Int)rows.size() <= n) {
      Int m = (Int)rows.size();
      while ((Int)q2_pow.size() <= m) q2_pow.push_back(field.mul(q2_pow.back(), q2));
      std::vector<typename F::Elem> row(static_cast<size_t>(m + 1));
      row[0] = field.one();
      row[static_cast<size_t>(m)] = field.one();
      for (Int j = 1; j < m; ++j)
        row[static_cast<size_t>(j)] =
            field.add(rows.back()[static_cast<size_t>(j - 1)],
                      field.mul(q2_pow[static_cast<size_t>(j)], rows.back()[static_cast<size_t>(j)]));
      rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }
  typename F::Elem get(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return zero_elem;
    const auto& u = unbalanced(n, k);
    Int twist = ((-(k % order) * ((n - k) % order)) % order + order) % order;
    return field.mul(zeta_pow[static_cast<size_t>(twist)], u);
  }
};

// Weight-respecting equivariant maps nabla(c) -> nabla(c') form a space of
// diagonal-band coefficients t_k; every divided-power constraint is a
// two-term proportionality, so weighted union-find resolves the system.
template <class F>
struct BandSolver {
  const F& field;
  std::vector<Int> parent;
  std::vector<typename F::Elem> ratio;  // t_i = ratio_i * t_parent
  std::vector<bool> dead;

  explicit BandSolver(const F& f, Int n)
      : field(f), parent(static_cast<size_t>(n)), ratio(static_cast<size_t>(n)), dead(static_cast<size_t>(n), false) {
    for (Int i = 0; i < n; ++i) {
      parent[static_cast<size_t>(i)] = i;
      ratio[static_cast<size_t>(i)] = field.one();
    }
  }
  std::pair<Int, typename F::Elem> find(Int i) {
    if (parent[static_cast<size_t>(i)] == i) return {i, ratio[static_cast<size_t>(i)]};
    auto [root, r] = find(parent[static_cast<size_t>(i)]);
    parent[static_cast<size_t>(i)] = root;
    ratio[static_cast<size_t>(i)] = field.mul(ratio[static_cast<size_t>(i)], r);
    return {root, ratio[static_cast<size_t>(i)]};
  }
  void kill(Int i) {
    dead[static_cast<size_t>(find(i).first)] = true;
  }
  // impose a*t_u = b*t_v with a, b nonzero
  void relate(Int u, Int v, const typename F::Elem& a, const typename F::Elem& b) {
    auto [ru, qu] = find(u);
    auto [rv, qv] = find(v);
    // t_u = (b/a) t_v
    typename F::Elem k = field.mul(b, field.inv(a));
    if (ru == rv) {
      // consistency: qu == k * qv, else the component collapses to zero
      if (!field.is_zero(field.sub(qu, field.mul(k, qv)))) dead[static_cast<size_t>(ru)] = true;
      return;
    }
    // attach ru under rv: t_ru = (k qv / qu) t_rv
    parent[static_cast<size_t>(ru)] = rv;
    ratio[static_cast<size_t>(ru)] = field.mul(field.mul(k, qv), field.inv(qu));
    dead[static_cast<size_t>(rv)] = dead[static_cast<size_t>(rv)] || dead[static_cast<size_t>(ru)];
  }
  Int live_components() {
    std::vector<char> seen(parent.size(), 0);
    Int count = 0;
    for (Int i = 0; i < (Int)parent.size(); ++i) {
      Int root = find(i).first;
      if (!seen[static_cast<size_t>(root)]) {
        seen[static_cast<size_t>(root)] = 1;
        if (!dead[static_cast<size_t>(root)]) ++count;
      }
    }
    return count;
  }
};

template <class F>
Int hom_dim_impl(const F& field, typename F::Elem zeta, Int order, Int c, Int cp) {
  if (((c - cp) % 2 + 2) % 2 != 0) return 0;  // no matching weight spaces
  Int D = (c - cp) / 2;                       // v_k maps to w_{k-D}
  Int lo = std::max<Int>(0, D), hi = std::min(c, cp + D);
  if (lo > hi) return 0;
  Int nvars = hi - lo + 1;
  QBinomTable<F> qb(field, zeta, order);
  BandSolver<F> solver(field, nvars);
  auto var = [&](Int k) { return k - lo; };
  auto in_band = [&](Int k) { return k >= lo && k <= hi; };
  Int rmax = std::max(c, cp);

  for (Int r = 1; r <= rmax; ++r) {
    for (Int k = 0; k <= c; ++k) {
      // F-side: coefficients of w_{k+r-D} in M F^(r) v_k and F^(r) M v_k
      {
        Int tgt = k + r;
        bool lhs = (tgt <= c) && in_band(tgt);
        bool rhs = in_band(k) && (k - D + r >= 0) && (k - D + r <= cp);
        const auto A = lhs ? qb.get(c - k, r) : field.zero();
        const auto B = rhs ? qb.get(cp - (k - D), r) : field.zero();
        bool az = field.is_zero(A), bz = field.is_zero(B);
        if (lhs && rhs) {
          if (!az && !bz)
            solver.relate(var(tgt), var(k), A, B);
          else if (!az)
            solver.kill(var(tgt));
          else if (!bz)
            solver.kill(var(k));
        } else if (lhs && !az) {
          solver.kill(var(tgt));
        } else if (rhs && !bz) {
          solver.kill(var(k));
        }
      }
      // E-side
      {
        Int tgt = k - r;
        bool lhs = (tgt >= 0) && in_band(tgt);
        bool rhs = in_band(k) && (k - D - r >= 0) && (k - D - r <= cp);
        const auto A = lhs ? qb.get(k, r) : field.zero();
        const auto B = rhs ? qb.get(k - D, r) : field.zero();
        bool az = field.is_zero(A), bz = field.is_zero(B);
        if (lhs && rhs) {
          if (!az && !bz)
            solver.relate(var(tgt), var(k), A, B);
          else if (!az)
            solver.kill(var(tgt));
          else if (!bz)
            solver.kill(var(k));
        } else if (lhs && !az) {
          solver.kill(var(tgt));
        } else if (rhs && !bz) {
          solver.kill(var(k));
        }
      }
    }
  }
  return solver.live_components();
}

template <class F>
bool simple_impl(const F& field, typename F::Elem zeta, Int order, Int c) {
  QBinomTable<F> qb(field, zeta, order);
  Int n = c + 1;
  auto reach = [&](bool forward) {
    std::vector<char> vis(static_cast<size_t>(n), 0);
    std::vector<Int> stack{0};
    vis[0] = 1;
    while (!stack.empty()) {
      Int k = stack.back();
      stack.pop_back();
      for (Int r = 1; r <= c; ++r) {
        // neighbours along F (k -> k+r) and E (k -> k-r); reverse for the
        // transposed graph
        Int fk = forward ? k : k - r;  // source of the F-arrow
        if (fk >= 0 && fk + r <= c && !field.is_zero(qb.get(c - fk, r))) {
          Int to = forward ? k + r : k - r;
          if (to >= 0 && to <= c && !vis[static_cast<size_t>(to)]) {
            vis[static_cast<size_t>(to)] = 1;
            stack.push_back(to);
          }
        }
        Int ek = forward ? k : k + r;  // source of the E-arrow
        if (ek <= c && ek - r >= 0 && !field.is_zero(qb.get(ek, r))) {
          Int to = forward ? k - r : k + r;
          if (to >= 0 && to <= c && !vis[static_cast<size_t>(to)]) {
            vis[static_cast<size_t>(to)] = 1;
            stack.push_back(to);
          }
        }
      }
    }
    return vis;
  };
  auto fwd = reach(true), bwd = reach(false);
  for (Int k = 0; k <= c; ++k)
    if (!fwd[static_cast<size_t>(k)] || !bwd[static_cast<size_t>(k)]) return false;
  return true;
}

template <class F>
bool composition_rule_impl(const F& field, typename F::Elem zeta, Int order, Int c) {
  QBinomTable<F> qb(field, zeta, order);
  // E^(a) E^(b) v_k = [k,b][k-b,a] v_{k-a-b} must equal [a+b,a][k,a+b] v_{k-a-b}
  for (Int a = 1; a <= c; ++a)
    for (Int b = 1; a + b <= c; ++b)
      for (Int k = a + b; k <= c; ++k) {
        auto lhs = field.mul(qb.get(k, b), qb.get(k - b, a));
        auto rhs = field.mul(qb.get(a + b, a), qb.get(k, a + b));
        if (!field.is_zero(field.sub(lhs, rhs))) return false;
      }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// public wrapper
// ---------------------------------------------------------------------------

struct Sl2Oracle::Impl {
  FieldParams params;
  Int desk_limit;
  enum class Kind { Classical, ExtQuantum, CycloQuantum } kind;
  PrimeField fp{0};
  ExtField fq{};
  CycloField fc{};

  Int root_order = 1;

  explicit Impl(FieldParams pr, Int limit) : params(pr), desk_limit(limit) {
    params.validate();
    if (params.classical()) {
      kind = Kind::Classical;
      fp = PrimeField{params.p};
      root_order = 1;
    } else {
      // a primitive L-th root with ord(zeta^2) = l carries the balanced
      // q-numbers matching order-l behaviour
      root_order = (params.l % 2 == 1) ? params.l : 2 * params.l;
      if (params.p == 0) {
        kind = Kind::CycloQuantum;
        fc.l = root_order;
        for (Int c : cyclotomic(root_order)) fc.phi.emplace_back((long)c);
      } else {
        kind = Kind::ExtQuantum;
        fq.p = params.p;
        fq.g = irreducible_factor(root_order, params.p);
      }
    }
  }

  void check(Int c) const {
    if (c < 0) throw std::invalid_argument("highest weight must be nonnegative");
    if (c > desk_limit) throw std::invalid_argument("weight beyond the oracle desk limit");
  }

  template <class Fn>
  auto dispatch(Fn&& fn) const {
    switch (kind) {
      case Kind::Classical:
        return fn(fp, fp.one(), root_order);
      case Kind::ExtQuantum:
        return fn(fq, fq.zeta(), root_order);
      case Kind::CycloQuantum:
        return fn(fc, fc.zeta(), root_order);
    }
    throw std::logic_error("unreachable");
  }
};

Sl2Oracle::Sl2Oracle(FieldParams params, Int desk_limit)
    : impl_(new Impl(params, desk_limit)) {}
Sl2Oracle::~Sl2Oracle() { delete impl_; }
Sl2Oracle::Sl2Oracle(Sl2Oracle&& o) noexcept : impl_(o.impl_) { o.impl_ = nullptr; }
Sl2Oracle& Sl2Oracle::operator=(Sl2Oracle&& o) noexcept {
  std::swap(impl_, o.impl_);
  return *this;
}

Int Sl2Oracle::hom_dim(Int c, Int cprime) const {
  impl_->check(c);
  impl_->check(cprime);
  return impl_->dispatch(
      [&](const auto& f, auto z, Int ord) { return hom_dim_impl(f, z, ord, c, cprime); });
}

bool Sl2Oracle::module_is_simple(Int c) const {
  impl_->check(c);
  return impl_->dispatch([&](const auto& f, auto z, Int ord) { return simple_impl(f, z, ord, c); });
}

bool Sl2Oracle::check_composition_rule(Int c) const {
  impl_->check(c);
  return impl_->dispatch(
      [&](const auto& f, auto z, Int ord) { return composition_rule_impl(f, z, ord, c); });
}

std::string Sl2Oracle::f_coeff_str(Int c, Int r, Int k) const {
  impl_->check(c);
  return impl_->dispatch([&](const auto& f, auto z, Int ord) {
    QBinomTable<std::decay_t<decltype(f)>> qb(f, z, ord);
    return f.str(qb.get(c - k, r));
  });
}

std::string Sl2Oracle::e_coeff_str(Int c, Int r, Int k) const {
  impl_->check(c);
  return impl_->dispatch([&](const auto& f, auto z, Int ord) {
    QBinomTable<std::decay_t<decltype(f)>> qb(f, z, ord);
    return f.str(qb.get(k, r));
  });
}

Int Sl2Oracle::desk_limit() const { return impl_->desk_limit; }
FieldParams Sl2Oracle::params() const { return impl_->params; }

bool is_nabla_simple(Int c, const FieldParams& params) {
  params.validate();
  if (c < 0) throw std::invalid_argument("highest weight must be nonnegative");
  if (c == 0) return true;
  mpz_class dim_l = 1;
  Int c0 = c % params.l;
  dim_l *= (long)(c0 + 1);
  Int rest = c / params.l;
  if (params.p == 0) {
    dim_l *= (long)(rest + 1);  // char 0: the higher layer is semisimple
  } else {
    while (rest > 0) {
      dim_l *= (long)(rest % params.p + 1);
      rest /= params.p;
    }
  }
  return dim_l == (long)(c + 1);
}

ModuleDump build_module_dump(Int c, const FieldParams& params, Int rmax) {
  Sl2Oracle oracle(params);
  if (rmax < 0) rmax = c;
  ModuleDump dump;
  dump.c = c;
  dump.dim = c + 1;
  for (Int r = 1; r <= rmax; ++r) {
    std::vector<std::string> frow, erow;
    for (Int k = 0; k <= c; ++k) {
      frow.push_back(k + r <= c ? oracle.f_coeff_str(c, r, k) : "0");
      erow.push_back(k - r >= 0 ? oracle.e_coeff_str(c, r, k) : "0");
    }
    dump.f_action.push_back(std::move(frow));
    dump.e_action.push_back(std::move(erow));
  }
  return dump;
}

}  // namespace weylext
