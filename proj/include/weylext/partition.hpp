#ifndef WEYLEXT_PARTITION_HPP
#define WEYLEXT_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

/*
  Partition and composition combinatorics: dominance order, conjugation,
  row/column regularity, the Mullineux involution (computed through the
  rim-symbol construction) and the nu-composition used by the tableau
  coefficient machinery.

  Partitions are kept in canonical form: weakly decreasing, trailing zeros
  trimmed.  Operations that need a fixed number of rows pad on demand.
*/

namespace weylext {

using Int = long long;

class Partition {
 public:
  Partition() = default;

  // Validates weak decrease and nonnegativity, trims trailing zeros.
  // Throws std::invalid_argument on bad input.
  explicit Partition(std::vector<Int> parts);

  static Partition from_parts(std::vector<Int> parts) { return Partition(std::move(parts)); }

  const std::vector<Int>& parts() const { return parts_; }
  Int size() const { return size_; }
  Int rows() const { return static_cast<Int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row access; rows past the end are 0.
  Int part(Int i) const {
    return (i >= 1 && i <= rows()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  std::string to_string() const;  // "4,3,3"; "-" for the empty partition

 private:
  std::vector<Int> parts_;
  Int size_ = 0;
};

// A composition keeps its entries verbatim (zeros included, no monotonicity).
struct Composition {
  std::vector<Int> parts;

  Composition() = default;
  explicit Composition(std::vector<Int> p);  // throws on negative entries

  Int size() const;
  Int length() const { return static_cast<Int>(parts.size()); }
  Int part(Int i) const {
    return (i >= 1 && i <= length()) ? parts[static_cast<size_t>(i - 1)] : 0;
  }
  bool operator==(const Composition& o) const { return parts == o.parts; }
};

// True iff |lhs| = |rhs| and every prefix sum of rhs is <= that of lhs.
// The paper writes mu <= lambda for "lambda dominates mu"; unequal sizes
// give false rather than an error.
bool dominates(const Partition& lhs, const Partition& rhs);

// Strict dominance: dominates and distinct.
bool strictly_dominates(const Partition& lhs, const Partition& rhs);

Partition conjugate(const Partition& lambda);

// Column regular: every consecutive difference (last part vs 0 included) < l.
bool is_column_regular(const Partition& lambda, Int l);
// Row regular: conjugate is column regular, i.e. no part repeats l times.
bool is_row_regular(const Partition& lambda, Int l);

// The Mullineux involution m(-) on row l-regular partitions, computed via
// the rim symbol: strip l-rims, recording (boxes removed, rows) per strip;
// the image has symbol (a_j, a_j - r_j + [l does not divide a_j]).
// Throws std::invalid_argument if lambda is not row l-regular or l < 2.
Partition mullineux(const Partition& lambda, Int l);

// Mullineux symbol columns (a_j, r_j), outermost strip first.  Exposed for
// tests and the CLI.
std::vector<std::pair<Int, Int>> mullineux_symbol(const Partition& lambda, Int l);

// One l-rim strip removal; returns the peeled partition and the strip size.
std::pair<Partition, Int> remove_l_rim(const Partition& lambda, Int l);

// nu(mu, d, t): moves t boxes from row d+1 to row d of the composition.
// Requires d >= 1 and 0 <= t <= mu_{d+1}; throws otherwise.
Composition nu_composition(const Partition& mu, Int d, Int t);

// All partitions of n (descending lex order), optionally capped at max_rows.
std::vector<Partition> partitions_of(Int n, Int max_rows = -1);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace weylext

#endif
