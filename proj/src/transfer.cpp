#include "weylext/transfer.hpp"

#include <stdexcept>

namespace weylext {

namespace {

Weight2 to_weight2(const Partition& p) {
  if (p.rows() > 2) throw std::invalid_argument("partition has more than two parts");
  return Weight2{p.part(1), p.part(2)};
}

}  // namespace

std::pair<Partition, Partition> conjugate_query(const Partition& lambda, const Partition& mu) {
  return {conjugate(mu), conjugate(lambda)};
}

std::optional<Int> kunneth_combine(const CutDecomposition& blocks, Int m,
                                   const KunnethLeaf& leaf) {
  // convolution of the per-block degree sequences
  std::vector<Int> acc(static_cast<size_t>(m + 1), 0);
  acc[0] = 1;
  for (auto& [lb, mb] : blocks.blocks) {
    std::vector<Int> dims(static_cast<size_t>(m + 1));
    for (Int d = 0; d <= m; ++d) {
      auto v = leaf(lb, mb, d);
      if (!v) return std::nullopt;
      dims[static_cast<size_t>(d)] = *v;
    }
    std::vector<Int> next(static_cast<size_t>(m + 1), 0);
    for (Int a = 0; a <= m; ++a)
      for (Int b = 0; a + b <= m; ++b)
        next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(a)] * dims[static_cast<size_t>(b)];
    acc = std::move(next);
  }
  return acc[static_cast<size_t>(m)];
}

SchurExtValue schur_ext_value(const Partition& lambda, const Partition& mu, Int m,
                              ExtEngine& engine, QueryKind kind) {
  SchurExtValue out;
  if (lambda.rows() <= 2 && mu.rows() <= 2) {
    auto v = engine.ext(kind, to_weight2(lambda), to_weight2(mu), m);
    if (v.status == ExtStatus::Unsupported)
      out.unsupported = true;
    else
      out.value = v.dim;
    return out;
  }
  if (lambda.size() != mu.size()) return out;
  auto cut = find_horizontal_cut(lambda, mu);
  if (!cut) return out;
  for (auto& [lb, mb] : cut->blocks)
    if (lb.rows() > 2 || mb.rows() > 2) return out;
  out.used_cut = true;
  bool unsupported = false;
  auto leaf = [&](const Partition& lb, const Partition& mb, Int d) -> std::optional<Int> {
    auto v = engine.ext(kind, to_weight2(lb), to_weight2(mb), d);
    if (v.status == ExtStatus::Unsupported) {
      unsupported = true;
      return std::nullopt;
    }
    return v.dim;
  };
  auto value = kunneth_combine(*cut, m, leaf);
  out.unsupported = unsupported;
  if (value) out.value = *value;
  return out;
}

TransferResult specht_ext(const Partition& lambda, const Partition& mu, Int i,
                          ExtEngine& engine) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("Specht labels must partition the same r");
  if (i < 0) throw std::invalid_argument("degree must be >= 0");
  const Int l = engine.params().l;
  TransferResult res;
  if (l >= 3 && i <= l - 3) {
    res.window_ok = true;
    res.rules.push_back("Cor3.7");
  } else if (l == 2 && i == 0 &&
             (is_row_regular(lambda, 2) || is_column_regular(mu, 2))) {
    res.window_ok = true;
    res.rules.push_back("Thm3.1");
  } else if (l == 3 && i == 1 && lambda.rows() <= 3 && mu.rows() <= 3 &&
             is_row_regular(lambda, 3) && is_row_regular(mu, 3)) {
    res.window_ok = true;
    res.rules.push_back("Prop3.8");
  } else {
    res.caveats.push_back("degree outside the transfer window (need i <= l-3, or a documented alternate)");
    return res;
  }

  auto schur = schur_ext_value(lambda, mu, i, engine);
  if (schur.used_cut) res.rules.push_back("Thm3.11");
  if (schur.value) {
    res.value = schur.value;
  } else if (schur.unsupported) {
    res.caveats.push_back("engine could not decide the Schur-side value");
  } else {
    res.caveats.push_back("value derivable only for 2-part pairs or cut-reducible shapes");
  }
  return res;
}

TransferResult hecke_kunneth(const Partition& lambda, const Partition& mu, Int m,
                             ExtEngine& engine, QueryKind kind) {
  TransferResult res;
  if (kind == QueryKind::NablaSimple) {
    // the factorization fails on the Hecke side for simple-target leaves
    res.caveats.push_back("Rem3.14(iv): no Hecke-side Kuenneth with simple-target leaves");
    return res;
  }
  const Int l = engine.params().l;
  if (!(l >= 3 && m <= l - 3)) {
    res.caveats.push_back("Cor3.12 window requires 0 <= m <= l-3");
    return res;
  }
  res.window_ok = true;
  res.rules = {"Cor3.12"};
  auto schur = schur_ext_value(lambda, mu, m, engine, kind);
  if (schur.used_cut) res.rules.push_back("Thm3.11");
  if (schur.value)
    res.value = schur.value;
  else
    res.caveats.push_back(schur.unsupported ? "engine could not decide a block value"
                                            : "no horizontal cut into 2-part blocks");
  return res;
}

DShiftResult d_shift_query(const Partition& lambda, const Partition& mu, Int s, Int n, Int i,
                           ExtEngine& engine) {
  if (n < std::max(lambda.rows(), mu.rows()))
    throw std::invalid_argument("rank too small for the pair");
  DShiftResult out;
  out.lambda_shift = d_reflect(Weight(lambda, n), s);
  out.mu_shift = d_reflect(Weight(mu, n), s);
  TransferResult& res = out.transfer;
  const Int l = engine.params().l;

  bool hecke_range = s > lambda.part(1) && s > mu.part(1);
  if (!hecke_range)
    res.caveats.push_back("weight-level identity only: s must exceed both first parts for the Hecke statement");
  if (l >= 3 && i <= l - 3) {
    res.window_ok = true;
    res.rules.push_back("Thm3.18");
  } else if (l == 2 && i == 0 && (is_row_regular(lambda, 2) || is_column_regular(mu, 2))) {
    res.window_ok = true;
    res.rules.push_back("Thm3.18-l2");
  } else {
    res.caveats.push_back("degree outside the shift-transfer window");
  }
  res.rules.push_back("Cor3.16");

  if (n == 2 && lambda.size() == mu.size()) {
    auto v = engine.ext_nabla_nabla(
        Weight2{out.lambda_shift.entry(1), out.lambda_shift.entry(2)},
        Weight2{out.mu_shift.entry(1), out.mu_shift.entry(2)}, i);
    if (v.status != ExtStatus::Unsupported) res.value = v.dim;
  }
  return out;
}

bool rank_stability_note(const Partition& lambda, const Partition& mu, Int n, Int N) {
  if (lambda.rows() > n || mu.rows() > n)
    throw std::invalid_argument("weights do not fit in Lambda(n, r)");
  if (n > N) throw std::invalid_argument("rank stability needs n <= N");
  return true;
}

std::optional<Int> global_dimension(Int n, Int r, const FieldParams& params) {
  params.validate();
  if (n < 1 || r < 0) throw std::invalid_argument("bad algebra parameters");
  if (params.l > n) return 2 * (n - 1) * (r / params.l);
  if (params.l == n && r % params.l == 0) return 2 * (params.l - 1) * (r / params.l);
  return std::nullopt;
}

std::pair<bool, bool> parker_bounds(const Weight& lambda, const Weight& mu, Int m, Int l) {
  Int total = d_value(lambda, l) + d_value(mu, l);
  bool ll_zero = m >= total;
  bool top_dim_one = is_interior(lambda, l) && is_interior(mu, l) && m == total;
  return {ll_zero, top_dim_one};
}

}  // namespace weylext
