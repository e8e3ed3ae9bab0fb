#ifndef WEYLEXT_TRANSFER_HPP
#define WEYLEXT_TRANSFER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylext/engine.hpp"
#include "weylext/weights.hpp"

/*
  The dictionary between Schur-algebra and Hecke-algebra Ext groups: the
  degree windows in which values transfer verbatim, conjugation and
  determinant-shift symmetries, Kuenneth combination along cuts, rank
  stability, and the global dimension formulas.

  A transfer never changes a dimension: when the window is valid the
  Hecke-side value equals the Schur-side value exactly.  Outside the
  windows nothing is emitted; the caveats say why.
*/

namespace weylext {

struct TransferResult {
  std::optional<Int> value;
  bool window_ok = false;
  std::vector<std::string> rules;
  std::vector<std::string> caveats;
};

// Ext^i_H(S^lambda, S^mu) through the Schur algebra engine.  Valid windows:
// l >= 3 with 0 <= i <= l-3; i = 0 at l = 2 when lambda is row 2-regular or
// mu is column 2-regular; i = 1 at l = 3 for row 3-regular 3-part pairs
// (window reported, value only when cut-reducible to 2-part blocks).
TransferResult specht_ext(const Partition& lambda, const Partition& mu, Int i,
                          ExtEngine& engine);

// (lambda, mu) -> (mu', lambda'): equal Ext in every degree.
std::pair<Partition, Partition> conjugate_query(const Partition& lambda, const Partition& mu);

// Sum over compositions m = m_1 + ... + m_k of products of leaf values;
// nullopt as soon as a leaf value is missing.
using KunnethLeaf = std::function<std::optional<Int>(const Partition&, const Partition&, Int)>;
std::optional<Int> kunneth_combine(const CutDecomposition& blocks, Int m,
                                   const KunnethLeaf& leaf);

// Engine-backed Schur-side value for a partition pair: directly at rank 2,
// through the finest horizontal cut otherwise.
struct SchurExtValue {
  std::optional<Int> value;
  bool used_cut = false;
  bool unsupported = false;
};
SchurExtValue schur_ext_value(const Partition& lambda, const Partition& mu, Int m,
                              ExtEngine& engine, QueryKind kind = QueryKind::NablaNabla);

// Hecke-side Kuenneth: enforces the degree window of the cut theorem and
// refuses simple-target leaves outright (the factorization fails on the
// Hecke side for those).
TransferResult hecke_kunneth(const Partition& lambda, const Partition& mu, Int m,
                             ExtEngine& engine, QueryKind kind);

// The determinant-shift query: Ext against the pair (D_{(s,n)}lambda,
// D_{(s,n)}mu) in the stated windows.
struct DShiftResult {
  Weight lambda_shift, mu_shift;
  TransferResult transfer;
};
DShiftResult d_shift_query(const Partition& lambda, const Partition& mu, Int s, Int n, Int i,
                           ExtEngine& engine);

// Ext between induced modules is independent of the rank once both weights
// fit; requires lambda, mu in Lambda(n, r) and n <= N.
bool rank_stability_note(const Partition& lambda, const Partition& mu, Int n, Int N);

// Global dimension of S(n, r): 2(n-1) floor(r/l) for l > n, and 2(l-1)(r/l)
// for l = n with l | r; nullopt outside the theorem's range.
std::optional<Int> global_dimension(Int n, Int r, const FieldParams& params);

// (Ext^m(L,L), Ext^m(nabla,Delta) vanish; top degree is one-dimensional):
// first flag at m >= d(lambda)+d(mu), second at equality for interior pairs.
std::pair<bool, bool> parker_bounds(const Weight& lambda, const Weight& mu, Int m, Int l);

}  // namespace weylext

#endif
