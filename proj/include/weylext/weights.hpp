#ifndef WEYLEXT_WEIGHTS_HPP
#define WEYLEXT_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "weylext/partition.hpp"

/*
  Weight-level predicates and transforms.  A Weight is an integer vector of
  fixed rank, weakly decreasing, possibly negative; a polynomial weight is a
  partition padded to the rank.  The shifted coordinates lambda_i - i turn
  the dot action of the affine Weyl group into plain arithmetic, which is
  all this module needs: alcove depth d(lambda), interior and wall tests,
  Steinberg weights, the residue block test, the D_{(s,n)} flip, horizontal
  and vertical cuts, and the Koppinen Steinberg-orbit construction.
*/

namespace weylext {

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> entries);  // throws unless weakly decreasing
  Weight(const Partition& p, Int rank);       // pad with zeros to rank

  const std::vector<Int>& entries() const { return e_; }
  Int rank() const { return static_cast<Int>(e_.size()); }
  Int entry(Int i) const { return e_[static_cast<size_t>(i - 1)]; }  // 1-based
  Int degree() const;

  bool is_polynomial() const { return e_.empty() || e_.back() >= 0; }
  Partition to_partition() const;  // requires polynomial

  bool operator==(const Weight& o) const { return e_ == o.e_; }
  auto operator<=>(const Weight& o) const { return e_ <=> o.e_; }
  std::string to_string() const;

 private:
  std::vector<Int> e_;
};

// Field / quantum parameters: characteristic p (0 or a prime) and the
// quantum order l >= 2; l = p is the classical case q = 1.
struct FieldParams {
  Int p = 0;
  Int l = 2;

  bool classical() const { return p > 0 && l == p; }
  void validate() const;  // throws std::invalid_argument
};

bool is_prime(Int n);

// d(lambda) = sum_{i<j} floor((lambda_i - lambda_j - i + j - 1)/l).
Int d_value(const Weight& lambda, Int l);

// Interior of an alcove: l divides no lambda_i - lambda_j - i + j, i < j.
bool is_interior(const Weight& lambda, Int l);

// All consecutive differences congruent to -1 mod p.  Rejects p = 0.
bool is_steinberg(const Weight& mu, Int p);

// lambda - (l-1)rho dominant, i.e. every gap >= l-1.
bool is_strictly_dominant(const Weight& lambda, Int l);

// Necessary linkage test: the residue multisets {lambda_i - i mod l} agree.
// False proves all Ext groups vanish; true only grants permission.
// Throws on size or rank mismatch.
bool same_block_candidate(const Weight& lambda, const Weight& mu, Int l);

// D_{(s,n)} lambda = (s - lambda_n, ..., s - lambda_1); an involution.
Weight d_reflect(const Weight& lambda, Int s);

// A stacked decomposition of a pair of partitions into blocks of equal
// sizes; concatenating the blocks reproduces the pair.
struct CutDecomposition {
  enum class Orientation { Horizontal, Vertical };
  std::vector<std::pair<Partition, Partition>> blocks;
  Orientation orientation = Orientation::Horizontal;
};

// Finest decomposition into stacked blocks with equal block sizes, or
// nullopt when only the trivial one-block decomposition exists.
// Throws on |lambda| != |mu|.
std::optional<CutDecomposition> find_horizontal_cut(const Partition& lambda,
                                                    const Partition& mu);
// Vertical cut: horizontal cut of the conjugates.
std::optional<CutDecomposition> find_vertical_cut(const Partition& lambda,
                                                  const Partition& mu);

// Koppinen orbit J = W_p^mu . lambda for a dominant Steinberg weight mu and
// lambda in the star of mu (|shifted(lambda)_i - shifted(mu)_i| < p for all
// i): permute the shifted offset and keep the dominant results.  For any
// xi >= xi' in J the Hom space between the induced modules is 1-dimensional.
// Throws on a non-Steinberg mu or lambda outside the star.
std::vector<Weight> koppinen_orbit(const Weight& mu, const Weight& lambda, Int p);

}  // namespace weylext

#endif
