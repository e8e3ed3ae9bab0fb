#ifndef WEYLEXT_CERTIFY_HPP
#define WEYLEXT_CERTIFY_HPP

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "weylext/weights.hpp"

/*
  Certificate search for nonzero homomorphisms between Specht modules.

  Tableaux are held as multiplicity matrices: mult[j][i] counts the entries
  equal to i+1 in row j+1.  Together with the shape this pins the unique
  row-weakly-increasing filling, so "entries weakly increase along rows"
  costs nothing and enumeration is lattice-point enumeration with two
  marginals and a support mask.

  Certifiers work in the Specht orientation of the tableau calculus: boxes
  move DOWN from lambda to mu.  Translation to the induced-module
  orientation goes through conjugation and is performed by the transfer
  module, never silently here.
*/

namespace weylext {

struct Tableau {
  Partition shape;
  Composition type;
  std::vector<std::vector<Int>> mult;  // rows() x type.length()

  // T_j^i: entries equal to i in row j (1-based)
  Int count(Int j, Int i) const {
    if (j < 1 || j > shape.rows() || i < 1 || i > type.length()) return 0;
    return mult[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
  }
  // T_h: entries bigger than h in row h
  Int bigger_than_row(Int h) const {
    Int total = 0;
    for (Int i = h + 1; i <= type.length(); ++i) total += count(h, i);
    return total;
  }
  // row h rendered as the weakly increasing filling, for output
  std::vector<Int> row_filling(Int h) const;
};

// Canonical one-move shape data: lambda = (l0+s, l1^{m1-1}, ..., lr^{mr-m_{r-1}}),
// mu the same with first row l0 and a new bottom row s.
struct ShapeData {
  Int s = 0;
  std::vector<Int> len;   // len[0] = l0, len[1..r] distinct lower row lengths
  std::vector<Int> rows;  // rows[0] = m0 = 1, rows[1..r] cumulative row counts
  Int r = 0;
  Partition lambda, mu;

  Int l(Int i) const { return i <= r ? len[static_cast<size_t>(i)] : s; }        // l_{r+1} = s
  Int m(Int i) const { return i <= r ? rows[static_cast<size_t>(i)] : rows[static_cast<size_t>(r)] + 1; }
};

// Extracts (s, l_i, m_i, r) when mu is lambda with s > 0 boxes moved from
// the first row to a new bottom row; nullopt otherwise.
std::optional<ShapeData> canonicalize_fm_pair(const Partition& lambda, const Partition& mu);

// All pseudo-standard tableaux of the given shape and type: T_j^i != 0 only
// if i = j or lambda_i < lambda_j.  Throws on size mismatch.
std::vector<Tableau> enumerate_pseudo_standard(const Partition& shape, const Composition& type);

// Nice: for each i >= 1 the entries bigger than m_i in the rows of length
// l_i number at most l_i - l_{i+1}.
bool is_nice(const Tableau& t, const ShapeData& data);

// f(T) = prod_i gamma_i^{(s - n_i(T)) falling} * prod_{h in block i} T_h!
mpz_class f_coeff(const Tableau& t, const std::vector<Int>& gamma, const ShapeData& data);

// n_b(T) with the b = 0 convention n_0 = T_{m_0}
Int n_block(const Tableau& t, const ShapeData& data, Int b);

// The case-split coefficient of the divisibility condition, exact integer.
mpz_class g_coeff_gis(const Tableau& s_tab, Int b, Int t, const std::vector<Int>& gamma,
                      const ShapeData& data);
// The simplified closed form; nullopt when its denominator vanishes.
std::optional<mpq_class> g_coeff_galt(const Tableau& s_tab, Int b, Int t,
                                      const std::vector<Int>& gamma, const ShapeData& data);

// Candidate gamma vectors: empty unless l0 + m_r = 0 mod p; otherwise the
// canonical residues lifted by 0..window-1 multiples of p, streamed in
// lexicographic order of the lifts.
void gamma_candidates(const ShapeData& data, Int p, Int window,
                      const std::function<bool(const std::vector<Int>&)>& yield);

Int val_p(const mpz_class& v, Int p);  // p-adic valuation; -1 encodes v = 0 (infinite)

struct FMCertificate {
  Int e = 0;
  std::vector<Int> gamma;
  Tableau witness;  // nice pseudo-standard T with val_p f(T) < e
  ShapeData data;
};

struct FmBounds {
  Int window = 8;  // lifts tried per gamma entry
  Int emax = 12;   // cap on the divisibility exponent
};

// Searches (gamma, e) within the bounds.  A returned certificate proves
// Hom(S^lambda, S^mu) != 0 over characteristic p; absence proves nothing.
// Requires the canonical shape and p >= 3.
std::optional<FMCertificate> fayers_martin_certificate(const Partition& lambda,
                                                       const Partition& mu, Int p,
                                                       const FmBounds& bounds = {});

struct CPCertificate {
  Int i = 0, j = 0;  // rows, i > j, boxes move up from row i to row j
  Int a = 0;
  Int m = 0;
  Int d = 0;  // boxes moved, 0 < d < modulus
};

// Exhaustive search for mu as a local reflection of lambda: d = lambda_i -
// lambda_j - i + j - m*p^a with 0 < d < p^a and the move transforming
// lambda into mu.  Quantum (l != p) certificates are emitted for adjacent
// rows only, with p^a replaced by l p^{a-1}.
std::optional<CPCertificate> carter_payne_certificate(const Partition& lambda,
                                                      const Partition& mu, Int p, Int l);

// Wen's closed form for a commutative reflection subset of size d:
// (dim Ext^i(L, nabla(w.lambda)), dim Ext^i(nabla, nabla(w.lambda))).
// Requires lambda strictly dominant and interior, 0 <= i <= d <= n/2.
std::pair<Int, Int> wen_dims(const Weight& lambda, Int d, Int i, Int l);

// True iff m(mu)' is not strictly dominated by lambda (with the diagonal
// lambda = mu always false); when true, Ext^1(D^lambda, D^mu) is computed
// by Hom(rad S^lambda, D^mu).  Requires l >= 4 and row-regular inputs.
bool kleshchev_sheth_condition(const Partition& lambda, const Partition& mu, Int l);

// Upper bound for Hom from the one-row induced module; informational.
Int kulkarni_bound(const Partition& lambda);

}  // namespace weylext

#endif
