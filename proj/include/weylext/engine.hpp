#ifndef WEYLEXT_ENGINE_HPP
#define WEYLEXT_ENGINE_HPP

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylext/weights.hpp"

/*
  Memoized recursive computation of dim Ext^m between pairs of rank-2
  induced modules, and between an induced and a simple module.

  Conventions fixed here (and printed by the CLI):
    * nonzero Ext(nabla(lambda), nabla(mu)) requires that the FIRST
      argument dominates: mu <= lambda.  This is the orientation the
      recursion grounds in (Hom(nabla(3,0), nabla(2,1)) = k at p = 3,
      confirmed by the rank-2 oracle).
    * degree-(-1) terms of the recursion are the zero module.
    * the recursion works in two layers: the quantum layer at order l and
      a classical layer at p reached through the Frobenius-type steps;
      p = 0 makes the classical layer semisimple.

  Every value carries a status and a derivation trace naming the applied
  rules with their instantiated parameters.  Same-block shapes the rules do
  not reach are reported Unsupported, never guessed.
*/

namespace weylext {

enum class QueryKind { NablaNabla, NablaSimple };
enum class ExtStatus { Exact, ZeroByBlock, ZeroByBound, Unsupported };

const char* to_string(ExtStatus s);
const char* to_string(QueryKind k);

struct Weight2 {
  Int a = 0, b = 0;  // weakly decreasing; entries may be negative
  bool dominant() const { return a >= b; }
  Int degree() const { return a + b; }
  bool operator==(const Weight2&) const = default;
  Weight to_weight() const { return Weight(std::vector<Int>{a, b}); }
  std::string to_string() const;
};

struct TraceStep {
  std::string rule;
  std::vector<std::pair<std::string, Int>> args;
};

struct ExtValue {
  Int dim = 0;
  ExtStatus status = ExtStatus::Exact;
  std::vector<TraceStep> trace;

  bool exact_or_zero() const { return status != ExtStatus::Unsupported; }
};

// det-twist both weights so the first becomes (a-b, 0); Ext dims are
// unchanged by a simultaneous one-dimensional twist.
std::tuple<Weight2, Weight2, Int> normalize_pair(Weight2 lambda, Weight2 mu);

// Complete m = 0 classification at rank 2: 1 iff lambda = mu or the pair is
// a single adjacent-row reflection with moduli p^a (classical) resp.
// l p^{a-1} (quantum).  Always at most one-dimensional.
Int hom_base_gl2(Weight2 lambda, Weight2 mu, const FieldParams& params);

class ExtEngine {
 public:
  explicit ExtEngine(FieldParams params, bool memo_enabled = true);

  ExtValue ext(QueryKind kind, Weight2 lambda, Weight2 mu, Int m);
  ExtValue ext_nabla_nabla(Weight2 lambda, Weight2 mu, Int m) {
    return ext(QueryKind::NablaNabla, lambda, mu, m);
  }
  ExtValue ext_nabla_simple(Weight2 lambda, Weight2 mu, Int m) {
    return ext(QueryKind::NablaSimple, lambda, mu, m);
  }

  // Alternating sum over 0..d(lambda)-d(mu); true iff it vanishes.
  // Throws on lambda = mu or any Unsupported term.
  bool euler_check(Weight2 lambda, Weight2 mu);

  const FieldParams& params() const { return params_; }
  void clear_cache();
  size_t cache_size() const;

 private:
  enum class Layer { Quantum, Classical };

  struct Key {
    QueryKind kind;
    Layer layer;
    Int c, e, d, m;  // normalized pair: (c,0) vs (e,d)
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };

  Int modulus(Layer layer) const { return layer == Layer::Quantum ? params_.l : params_.p; }
  ExtValue eval(QueryKind kind, Layer layer, Weight2 lambda, Weight2 mu, Int m, Int depth);
  ExtValue eval_nn(Layer layer, Int c, Int e, Int d, Int m, Int depth);
  ExtValue eval_ns(Layer layer, Int c, Int e, Int d, Int m, Int depth);
  Int hom_base_layer(Layer layer, Int c, Int e, Int d) const;
  bool nabla_simple_layer(Layer layer, Int c) const;

  FieldParams params_;
  bool memo_enabled_;
  std::unordered_map<Key, ExtValue, KeyHash> memo_;
  mutable std::mutex memo_mutex_;
};

}  // namespace weylext

#endif
