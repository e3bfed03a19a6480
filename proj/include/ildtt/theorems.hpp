#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ildtt/fam.hpp"

namespace ildtt::thm {

/// One line of a theorem report.
struct Item {
  std::string name;
  bool pass = true;
  std::string details;
  std::optional<std::string> witness;
};

struct Bounds {
  std::size_t max_index = 3;
  std::size_t max_fiber = 4;
};

/// The module of witness terms (types A, B and a family F over 2).
const std::string& witness_source();

/// Sizes of the two sides of a fiber isomorphism and the result of
/// checking the explicit bijection and its inverse.
struct IsoCount {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  fam::BijectionCheck check;
};

// Single fibers with |A| = a, |B| = b points (basepoint included).
IsoCount pi_vs_lolli(std::size_t a, std::size_t b);
IsoCount sigma_vs_tensor(std::size_t a, std::size_t b);
IsoCount sigma_unit_vs_bang(std::size_t a);
IsoCount bang_top_vs_unit();
IsoCount bang_with_vs_tensor(std::size_t a, std::size_t b);
// A family over 2 with |A(tt)| = att and |A(ff)| = aff.
IsoCount pi_two_vs_with(std::size_t att, std::size_t aff);
IsoCount sigma_two_vs_plus(std::size_t att, std::size_t aff);

std::vector<Item> check_bang_index(const Bounds& b, std::uint64_t seed);
std::vector<Item> check_bang_sigma(const Bounds& b, std::uint64_t seed);
std::vector<Item> check_seely(const Bounds& b, std::uint64_t seed);
std::vector<Item> check_two_index(const Bounds& b, std::uint64_t seed);
std::vector<Item> check_consistency(std::uint64_t seed);
std::vector<Item> check_separation(const Bounds& b);

/// Every check above, in order.
std::vector<Item> run_all(const Bounds& b, std::uint64_t seed);

}  // namespace ildtt::thm
