#include "weylext/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylext {

Weight::Weight(std::vector<Int> entries) : e_(std::move(entries)) {
  for (size_t i = 0; i + 1 < e_.size(); ++i)
    if (e_[i] < e_[i + 1]) throw std::invalid_argument("weight entries must be weakly decreasing");
}

Weight::Weight(const Partition& p, Int rank) {
  if (p.rows() > rank) throw std::invalid_argument("partition has more parts than the rank");
  e_.resize(static_cast<size_t>(rank));
  for (Int i = 1; i <= rank; ++i) e_[static_cast<size_t>(i - 1)] = p.part(i);
}

Int Weight::degree() const { return std::accumulate(e_.begin(), e_.end(), Int{0}); }

Partition Weight::to_partition() const {
  if (!is_polynomial()) throw std::invalid_argument("weight is not polynomial");
  return Partition(e_);
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  return os.str();
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void FieldParams::validate() const {
  if (l < 2) throw std::invalid_argument("quantum order l must be >= 2");
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or a prime");
  if (p > 0 && l != p && std::gcd(l, p) != 1)
    throw std::invalid_argument("a root of unity of order l needs gcd(l,p)=1 unless l=p");
}

Int d_value(const Weight& lambda, Int l) {
  if (l < 2) throw std::invalid_argument("d_value needs l >= 2");
  Int n = lambda.rank(), total = 0;
  for (Int i = 1; i <= n; ++i)
    for (Int j = i + 1; j <= n; ++j) {
      Int num = lambda.entry(i) - lambda.entry(j) - i + j - 1;
      total += num / l;  // num >= 0 for dominant lambda
    }
  return total;
}

bool is_interior(const Weight& lambda, Int l) {
  Int n = lambda.rank();
  for (Int i = 1; i <= n; ++i)
    for (Int j = i + 1; j <= n; ++j)
      if ((lambda.entry(i) - lambda.entry(j) - i + j) % l == 0) return false;
  return true;
}

bool is_steinberg(const Weight& mu, Int p) {
  if (p <= 0) throw std::invalid_argument("Steinberg test needs p > 0");
  for (Int i = 1; i < mu.rank(); ++i)
    if (((mu.entry(i) - mu.entry(i + 1) + 1) % p) != 0) return false;
  return true;
}

bool is_strictly_dominant(const Weight& lambda, Int l) {
  for (Int i = 1; i < lambda.rank(); ++i)
    if (lambda.entry(i) - lambda.entry(i + 1) < l - 1) return false;
  return true;
}

bool same_block_candidate(const Weight& lambda, const Weight& mu, Int l) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("block test needs equal ranks");
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("block test needs equal degrees");
  auto residues = [l](const Weight& w) {
    std::vector<Int> r;
    for (Int i = 1; i <= w.rank(); ++i) r.push_back((((w.entry(i) - i) % l) + l) % l);
    std::sort(r.begin(), r.end());
    return r;
  };
  return residues(lambda) == residues(mu);
}

Weight d_reflect(const Weight& lambda, Int s) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(lambda.rank()));
  for (Int i = lambda.rank(); i >= 1; --i) out.push_back(s - lambda.entry(i));
  return Weight(std::move(out));
}

std::optional<CutDecomposition> find_horizontal_cut(const Partition& lambda,
                                                    const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("cut needs equal sizes");
  Int len = std::max(lambda.rows(), mu.rows());
  std::vector<Int> cuts;
  Int a = 0, b = 0;
  for (Int j = 1; j < len; ++j) {
    a += lambda.part(j);
    b += mu.part(j);
    if (a == b) cuts.push_back(j);  // stacking is automatic for partitions
  }
  if (cuts.empty()) return std::nullopt;
  CutDecomposition dec;
  Int start = 1;
  cuts.push_back(len);
  for (Int end : cuts) {
    std::vector<Int> lb, mb;
    for (Int i = start; i <= end; ++i) {
      lb.push_back(lambda.part(i));
      mb.push_back(mu.part(i));
    }
    dec.blocks.emplace_back(Partition(std::move(lb)), Partition(std::move(mb)));
    start = end + 1;
  }
  return dec;
}

std::optional<CutDecomposition> find_vertical_cut(const Partition& lambda,
                                                  const Partition& mu) {
  auto dec = find_horizontal_cut(conjugate(lambda), conjugate(mu));
  if (!dec) return std::nullopt;
  dec->orientation = CutDecomposition::Orientation::Vertical;
  return dec;
}

std::vector<Weight> koppinen_orbit(const Weight& mu, const Weight& lambda, Int p) {
  if (!is_steinberg(mu, p)) throw std::invalid_argument("koppinen_orbit needs a Steinberg weight");
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("rank mismatch");
  Int n = mu.rank();
  std::vector<Int> shift_mu(static_cast<size_t>(n)), delta(static_cast<size_t>(n));
  for (Int i = 1; i <= n; ++i) {
    shift_mu[static_cast<size_t>(i - 1)] = mu.entry(i) - i;
    delta[static_cast<size_t>(i - 1)] = lambda.entry(i) - i - shift_mu[static_cast<size_t>(i - 1)];
    if (std::abs(delta[static_cast<size_t>(i - 1)]) >= p)
      throw std::invalid_argument("lambda lies outside the star of mu");
  }
  std::vector<Int> perm = delta;
  std::sort(perm.begin(), perm.end());
  std::set<std::vector<Int>> seen;
  std::vector<Weight> orbit;
  do {
    std::vector<Int> shifted(static_cast<size_t>(n));
    bool dominant = true;
    for (Int i = 0; i < n; ++i) {
      shifted[static_cast<size_t>(i)] = shift_mu[static_cast<size_t>(i)] + perm[static_cast<size_t>(i)];
      if (i > 0 && shifted[static_cast<size_t>(i - 1)] <= shifted[static_cast<size_t>(i)])
        dominant = false;  // shifted coordinates of a dominant weight are strictly decreasing
    }
    if (dominant && seen.insert(shifted).second) {
      std::vector<Int> w(static_cast<size_t>(n));
      for (Int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = shifted[static_cast<size_t>(i - 1)] + i;
      orbit.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(orbit.begin(), orbit.end(), [](const Weight& a, const Weight& b) { return b < a; });
  return orbit;
}

}  // namespace weylext
