#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "affinv/invariants.hpp"
#include "affinv/linalg.hpp"
#include "affinv/modular_data.hpp"

namespace affinv {

// Pairs (lambda, mu) with t_lambda - t_mu integral, lexicographic order.
std::vector<WeightPair> t_compatible_pairs(const ModularData& md);

// Solution space of XS = SX, XT = TX. Coordinates are indexed by `pairs`;
// basis[i] has a 1 at free_pairs[i] and 0 at the other free pairs.
struct CommutantBasis {
  int level = 0;
  std::vector<WeightPair> pairs;
  std::vector<std::size_t> free_pairs;  // positions into `pairs`
  std::vector<RationalVector> basis;
  std::size_t equation_count = 0;  // after deduplication

  std::size_t dimension() const { return basis.size(); }
  std::size_t position(const WeightPair& p) const;  // throws std::out_of_range
  // Dense |P^k| x |P^k| matrix of basis element i in md.weights order.
  RationalMatrix matrix(std::size_t i, const ModularData& md) const;
};

CommutantBasis commutant_basis(const ModularData& md);

// True iff x is zero off the T-compatible pairs and equals the basis
// combination read off its free coordinates.
bool in_span(const CommutantBasis& cb, const ModularInvariant& x);

// floor of a certified upper bound for 1 / (S_{0 lambda} S_{0 mu}).
// Throws std::domain_error if positivity cannot be certified.
std::int64_t entry_bound(const ModularData& md, const Weight& lambda, const Weight& mu, int precision_bits = 128);

struct EnumerationOptions {
  std::size_t guard_dim = 64;
  std::uint64_t guard_nodes = 100'000'000;
  unsigned workers = 1;
  int precision_bits = 128;
  // First-level subtrees (values of the first search coordinate) already
  // finished by an earlier, interrupted run.
  std::set<std::int64_t> skip_subtrees;
};

struct EnumerationResult {
  std::vector<ModularInvariant> invariants;  // sorted by support
  bool complete = true;  // false when subtrees were skipped
  std::size_t commutant_dim = 0;
  std::uint64_t nodes = 0;
};

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::vector<std::int64_t> completed, std::vector<ModularInvariant> partial,
                std::uint64_t nodes)
      : std::runtime_error(what), completed_subtrees(std::move(completed)), partial_results(std::move(partial)),
        nodes(nodes) {}
  std::vector<std::int64_t> completed_subtrees;
  std::vector<ModularInvariant> partial_results;
  std::uint64_t nodes;
};

// All X in the commutant with nonnegative integer entries and X_00 = 1.
// Throws GuardExceeded when the commutant is larger than guard_dim or the
// search visits more than guard_nodes nodes.
EnumerationResult enumerate_physical(const ModularData& md, const EnumerationOptions& options = {});
EnumerationResult enumerate_physical(const ModularData& md, const CommutantBasis& cb,
                                     const EnumerationOptions& options = {});

// Deterministic order for invariant lists: by sorted support.
bool support_less(const ModularInvariant& a, const ModularInvariant& b);

}  // namespace affinv
