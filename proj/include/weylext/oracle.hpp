#ifndef WEYLEXT_ORACLE_HPP
#define WEYLEXT_ORACLE_HPP

#include <string>
#include <vector>

#include "weylext/weights.hpp"

/*
  Desk-scale ground truth for rank 2.  The induced module with highest
  weight (c,0) is the c-th symmetric power of the natural module; on the
  monomial basis v_k = x^{c-k} y^k the divided powers act by

      F^{(r)} v_k = C(c-k, r) v_{k+r}      E^{(r)} v_k = C(k, r) v_{k-r}

  with binomials taken in the ground field: reduced mod p classically, or
  Gaussian binomials evaluated at a primitive l-th root of unity for the
  quantum layer (over F_{p^d} when p > 0, over Q(zeta_l) when p = 0).

  Hom dimensions come from solving for weight-respecting linear maps that
  commute with every divided power up to order max(c, c'); all arithmetic
  is exact.
*/

namespace weylext {

inline constexpr Int kOracleDeskLimit = 512;

class Sl2Oracle {
 public:
  explicit Sl2Oracle(FieldParams params, Int desk_limit = kOracleDeskLimit);
  ~Sl2Oracle();
  Sl2Oracle(Sl2Oracle&&) noexcept;
  Sl2Oracle& operator=(Sl2Oracle&&) noexcept;

  // dim Hom(nabla(c), nabla(c')) by exact linear algebra.
  Int hom_dim(Int c, Int cprime) const;

  // Simplicity read off the action graph: nabla(c) is simple iff every
  // basis vector generates the whole module.
  bool module_is_simple(Int c) const;

  // Divided-power composition rule E^(a) E^(b) = C(a+b,a) E^(a+b), checked
  // entrywise on nabla(c); test hook.
  bool check_composition_rule(Int c) const;

  // Action coefficient of F^{(r)} (resp. E^{(r)}) from basis vector k,
  // rendered as a string in the coefficient field; for CLI dumps.
  std::string f_coeff_str(Int c, Int r, Int k) const;
  std::string e_coeff_str(Int c, Int r, Int k) const;

  Int desk_limit() const;
  FieldParams params() const;

 private:
  struct Impl;
  Impl* impl_;
};

// Steinberg digit criterion: dim L(c) = prod(digit_j + 1) with digits taken
// base (l, p, p, ...); nabla(c) is simple iff that product equals c+1.
// p = 0 uses the two-level expansion c = c_0 + l*c_1.
bool is_nabla_simple(Int c, const FieldParams& params);

// Module dump for the CLI: dimensions plus stringified action tables.
struct ModuleDump {
  Int c = 0;
  Int dim = 0;
  std::vector<std::vector<std::string>> f_action;  // [r-1][k]
  std::vector<std::vector<std::string>> e_action;
};
ModuleDump build_module_dump(Int c, const FieldParams& params, Int rmax = -1);

}  // namespace weylext

#endif
