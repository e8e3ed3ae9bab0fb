#include "weylext/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weylext {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Composition::Composition(std::vector<Int> p) : parts(std::move(p)) {
  for (Int x : parts)
    if (x < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

Int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), Int{0}); }

bool dominates(const Partition& lhs, const Partition& rhs) {
  if (lhs.size() != rhs.size()) return false;
  Int a = 0, b = 0;
  Int n = std::max(lhs.rows(), rhs.rows());
  for (Int i = 1; i <= n; ++i) {
    a += lhs.part(i);
    b += rhs.part(i);
    if (b > a) return false;
  }
  return true;
}

bool strictly_dominates(const Partition& lhs, const Partition& rhs) {
  return !(lhs == rhs) && dominates(lhs, rhs);
}

Partition conjugate(const Partition& lambda) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(lambda.part(1)));
  for (Int j = 1; j <= lambda.part(1); ++j) {
    Int count = 0;
    for (Int x : lambda.parts())
      if (x >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool is_column_regular(const Partition& lambda, Int l) {
  if (l < 2) throw std::invalid_argument("regularity needs l >= 2");
  Int n = lambda.rows();
  for (Int i = 1; i <= n; ++i)
    if (lambda.part(i) - lambda.part(i + 1) >= l) return false;
  return true;
}

bool is_row_regular(const Partition& lambda, Int l) {
  if (l < 2) throw std::invalid_argument("regularity needs l >= 2");
  // no part repeated l or more times
  Int run = 1;
  for (Int i = 2; i <= lambda.rows(); ++i) {
    if (lambda.part(i) == lambda.part(i - 1)) {
      if (++run >= l) return false;
    } else {
      run = 1;
    }
  }
  return true;
}

/*
  The l-rim of lambda is read along the rim from the end of the first row:
  segments of l boxes, and after each completed segment the next one starts
  in the row below the row holding the last box taken.  Each row i loses
  t_i = min(c_i, budget) boxes, where c_i counts the rim boxes of row i.
*/
std::pair<Partition, Int> remove_l_rim(const Partition& lambda, Int l) {
  if (l < 2) throw std::invalid_argument("rim removal needs l >= 2");
  const Int k = lambda.rows();
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(k));
  Int removed = 0;
  Int budget = l;
  for (Int i = 1; i <= k; ++i) {
    Int c = (i < k) ? lambda.part(i) - lambda.part(i + 1) + 1 : lambda.part(k);
    Int t = std::min(c, budget);
    out.push_back(lambda.part(i) - t);
    removed += t;
    budget = (c >= budget) ? l : budget - c;
  }
  return {Partition(std::move(out)), removed};
}

std::vector<std::pair<Int, Int>> mullineux_symbol(const Partition& lambda, Int l) {
  std::vector<std::pair<Int, Int>> cols;
  Partition cur = lambda;
  while (!cur.empty()) {
    Int rows = cur.rows();
    auto [next, a] = remove_l_rim(cur, l);
    cols.emplace_back(a, rows);
    cur = next;
  }
  return cols;
}

namespace {

// Inverse of a single rim strip: the unique mu with `rows` rows whose l-rim
// has `a` boxes and removes to nu.  Depth-first over per-row increments
// (each row gains between 1 and l boxes), checked against the forward map.
bool add_rim_strip(const Partition& nu, Int a, Int rows, Int l, Partition& out) {
  if (rows < 1 || a < rows || a > l * rows || nu.rows() > rows) return false;
  std::vector<Int> mu(static_cast<size_t>(rows), 0);
  // fill from the bottom row up so the weak-decrease constraint is local
  std::function<bool(Int, Int)> rec = [&](Int row, Int left) -> bool {
    if (row == 0) {
      if (left != 0) return false;
      Partition cand{std::vector<Int>(mu)};
      if (cand.rows() != rows) return false;
      auto [peeled, removed] = remove_l_rim(cand, l);
      if (removed == a && peeled == nu) {
        out = cand;
        return true;
      }
      return false;
    }
    Int lo = 1, hi = std::min(l, left - (row - 1));
    for (Int t = lo; t <= hi; ++t) {
      Int val = nu.part(row) + t;
      if (row < rows && val < mu[static_cast<size_t>(row)]) continue;  // must weakly decrease
      mu[static_cast<size_t>(row - 1)] = val;
      if (rec(row - 1, left - t)) return true;
    }
    return false;
  };
  return rec(rows, a);
}

}  // namespace

Partition mullineux(const Partition& lambda, Int l) {
  if (l < 2) throw std::invalid_argument("mullineux needs l >= 2");
  if (!is_row_regular(lambda, l))
    throw std::invalid_argument("mullineux requires a row l-regular partition");
  auto cols = mullineux_symbol(lambda, l);
  for (auto& [a, r] : cols) r = a - r + (a % l != 0 ? 1 : 0);
  Partition result;  // empty
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    Partition next;
    if (!add_rim_strip(result, it->first, it->second, l, next))
      throw std::logic_error("mullineux symbol reconstruction failed");
    result = next;
  }
  return result;
}

Composition nu_composition(const Partition& mu, Int d, Int t) {
  if (d < 1) throw std::invalid_argument("nu_composition needs d >= 1");
  if (t < 0 || t > mu.part(d + 1))
    throw std::invalid_argument("nu_composition needs 0 <= t <= mu_{d+1}");
  Int len = std::max(mu.rows(), d + 1);
  std::vector<Int> nu(static_cast<size_t>(len));
  for (Int i = 1; i <= len; ++i) nu[static_cast<size_t>(i - 1)] = mu.part(i);
  nu[static_cast<size_t>(d - 1)] += t;
  nu[static_cast<size_t>(d)] -= t;
  return Composition(std::move(nu));
}

namespace {
void gen_partitions(Int n, Int max_part, Int rows_left, std::vector<Int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{std::vector<Int>(acc)});
    return;
  }
  if (rows_left == 0) return;
  for (Int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, rows_left - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(Int n, Int max_rows) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<Int> acc;
  gen_partitions(n, n == 0 ? 1 : n, max_rows < 0 ? n + 1 : max_rows, acc, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace weylext
