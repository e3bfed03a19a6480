#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ildtt/checker.hpp"

namespace ildtt::gen {

/// The signature random terms are drawn over: base types A, B, C, a
/// family P over A, a family Q over 2, and constants a, b, p.
const std::string& generator_source();

struct GenOptions {
  std::size_t max_linear = 4;      // size of Ξ
  std::size_t max_int = 2;         // size of Δ
  int fuel = 3;                    // nesting of eliminations and redexes
  std::size_t max_input_space = 512;  // product of the Ξ fiber bounds
  std::size_t max_eval_cost = 4096;   // see eval_cost
};

struct Sample {
  DualContext ctx;
  TypePtr type;
  std::vector<TermPtr> terms;  // unchecked, elab set on every node
};

/// Worst-case number of points of ⟦A⟧ when every base fiber has `n` points.
std::size_t fiber_bound(const TypePtr& a, std::size_t n = 4);
/// Worst-case number of body evaluations when `t` is evaluated once.
std::size_t eval_cost(const TermPtr& t, std::size_t n = 4);

class TermGenerator {
 public:
  TermGenerator(const Signature& sig, std::uint64_t seed, GenOptions opts = {});

  /// A random context with `linear` linear variables, a type, and up to
  /// `count` terms of that type. Fewer terms (possibly none) come back
  /// when generation keeps failing.
  Sample sample(std::size_t count, std::size_t linear);

 private:
  struct Fail {};
  using Zone = std::vector<std::pair<std::string, TypePtr>>;

  TermPtr gen(const Zone& d, const Zone& xi, const TypePtr& t, int fuel);
  TermPtr intro(const Zone& d, const Zone& xi, const TypePtr& t, int fuel);
  TermPtr elim(const Zone& d, const Zone& xi, std::size_t y, const TypePtr& t, int fuel);
  TermPtr redex(const Zone& d, const Zone& xi, const TypePtr& t, int fuel);
  TermPtr closed(const Zone& d, const TypePtr& t, int fuel);

  TypePtr base_type(const Zone& d);
  TypePtr small_type(const Zone& d);
  TypePtr random_type(const Zone& d, int depth);

  std::vector<Zone> split(const Zone& xi, std::size_t parts);
  std::string fresh(const char* stem);
  std::size_t pick(std::size_t n);
  bool coin(double p);

  const Signature& sig_;
  GenOptions opts_;
  std::mt19937_64 rng_;
  std::size_t counter_ = 0;  // fresh names
  std::size_t work_ = 0;     // gen calls for the current term
};

}  // namespace ildtt::gen
