#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "affinv/lie.hpp"
#include "affinv/modular_data.hpp"

namespace affinv {

using WeightPair = std::pair<Weight, Weight>;

// Sparse nonnegative-integer matrix over P^k x P^k, keyed by shifted
// weights. Absent entries are zero.
class ModularInvariant {
 public:
  ModularInvariant() = default;
  explicit ModularInvariant(int level, std::string name = {}) : level_(level), name_(std::move(name)) {}

  int level() const { return level_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::int64_t at(const Weight& lambda, const Weight& mu) const;
  // Stores v at (lambda, mu); v = 0 erases. Throws std::invalid_argument for
  // v < 0 or for weights outside P^k.
  void set(const Weight& lambda, const Weight& mu, std::int64_t v);
  void add(const Weight& lambda, const Weight& mu, std::int64_t v) { set(lambda, mu, at(lambda, mu) + v); }

  const std::map<WeightPair, std::int64_t>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  ModularInvariant transpose() const;

 private:
  int level_ = 0;
  std::string name_;
  std::map<WeightPair, std::int64_t> entries_;
};

// Family names defined at level k, in report order: A, D, E5, E9_1, E9_2, E21.
std::vector<std::string> named_families(int k);

// Builds a family of the invariant table; "<family>^C" builds the conjugate.
// Throws std::invalid_argument for a name not defined at k and
// std::domain_error if an expanded entry is not an integer.
ModularInvariant build_named(int k, std::string_view name);

// (X^C)_{lambda, mu} = X_{lambda, h(mu)}. The name gains or loses "^C".
ModularInvariant conjugate(const ModularInvariant& x);
std::string conjugate_name(std::string_view name);

// Entrywise equality; names are ignored. Throws on level mismatch.
bool equal(const ModularInvariant& x, const ModularInvariant& y);

// (lambda, mu, value) in lexicographic order of (lambda, mu).
std::vector<std::tuple<Weight, Weight, std::int64_t>> support(const ModularInvariant& x);

struct InvariantReport {
  bool p1 = false;  // X_00 = 1
  bool p2 = false;  // nonnegative integers on P^k
  bool commutes_with_s = false;
  bool commutes_with_t = false;
  std::optional<WeightPair> failing_position;
  std::string detail;
  bool passed() const { return p1 && p2 && commutes_with_s && commutes_with_t; }
};

// Exact check of (P1)-(P3). Throws std::invalid_argument on level mismatch.
InvariantReport is_modular_invariant(const ModularInvariant& x, const ModularData& md);

}  // namespace affinv
