#include "affinv/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "affinv/int_cyc.hpp"

namespace affinv {

std::int64_t ModularInvariant::at(const Weight& lambda, const Weight& mu) const {
  auto it = entries_.find({lambda, mu});
  return it == entries_.end() ? 0 : it->second;
}

void ModularInvariant::set(const Weight& lambda, const Weight& mu, std::int64_t v) {
  if (v < 0) throw std::invalid_argument("ModularInvariant: negative entry");
  if (!lambda.in_alcove(level_) || !mu.in_alcove(level_)) {
    throw std::invalid_argument("ModularInvariant: index " + to_string(lambda) + "," + to_string(mu) +
                                " outside P^" + std::to_string(level_));
  }
  if (v == 0) {
    entries_.erase({lambda, mu});
  } else {
    entries_[{lambda, mu}] = v;
  }
}

ModularInvariant ModularInvariant::transpose() const {
  ModularInvariant out(level_, name_);
  for (const auto& [key, v] : entries_) out.entries_[{key.second, key.first}] = v;
  return out;
}

namespace {

Weight w(int m, int n) { return Weight::shifted_weight(m, n); }

// |Z_{l1} + ... + Z_{ls}|^2 scaled by `factor`.
void add_block(ModularInvariant& x, const std::vector<Weight>& block, std::int64_t factor = 1) {
  for (const auto& a : block) {
    for (const auto& b : block) x.add(a, b, factor);
  }
}

// (Z_{l1} + ...) conj(Z_{m1} + ...)
void add_cross(ModularInvariant& x, const std::vector<Weight>& left, const std::vector<Weight>& right) {
  for (const auto& a : left) {
    for (const auto& b : right) x.add(a, b, 1);
  }
}

Weight sigma_power(int k, Weight lambda, int e) {
  for (int i = 0; i < e; ++i) lambda = map_sigma(k, lambda);
  return lambda;
}

ModularInvariant build_d(int k) {
  ModularInvariant x(k, "D");
  if (k % 3 != 0) {
    for (const auto& lam : dominant_weights(k)) {
      const int e = ((k * (lam.m - lam.n)) % 3 + 3) % 3;
      x.set(lam, sigma_power(k, lam, e), 1);
    }
    return x;
  }
  // (1/3) sum over m = n (mod 3) of the orbit block, expanded literally.
  std::map<WeightPair, std::int64_t> thrice;
  for (const auto& lam : dominant_weights(k)) {
    if ((lam.m - lam.n) % 3 != 0) continue;
    const std::vector<Weight> orbit{lam, map_sigma(k, lam), sigma_power(k, lam, 2)};
    for (const auto& a : orbit) {
      for (const auto& b : orbit) thrice[{a, b}] += 1;
    }
  }
  for (const auto& [key, v] : thrice) {
    if (v % 3 != 0) {
      throw std::domain_error("D_" + std::to_string(k) + ": non-integer entry " + std::to_string(v) + "/3 at " +
                              to_string(key.first) + "," + to_string(key.second));
    }
    x.set(key.first, key.second, v / 3);
  }
  return x;
}

ModularInvariant build_e5() {
  ModularInvariant x(5, "E5");
  add_block(x, {w(1, 1), w(3, 3)});
  add_block(x, {w(1, 3), w(4, 3)});
  add_block(x, {w(3, 1), w(3, 4)});
  add_block(x, {w(3, 2), w(1, 6)});
  add_block(x, {w(4, 1), w(1, 4)});
  add_block(x, {w(2, 3), w(6, 1)});
  return x;
}

ModularInvariant build_e9_1() {
  ModularInvariant x(9, "E9_1");
  add_block(x, {w(1, 1), w(1, 10), w(10, 1), w(5, 5), w(5, 2), w(2, 5)});
  add_block(x, {w(3, 3), w(3, 6), w(6, 3)}, 2);
  return x;
}

ModularInvariant build_e9_2() {
  ModularInvariant x(9, "E9_2");
  add_block(x, {w(1, 1), w(10, 1), w(1, 10)});
  add_block(x, {w(3, 3), w(3, 6), w(6, 3)});
  add_block(x, {w(4, 4)}, 2);
  add_block(x, {w(1, 4), w(7, 1), w(4, 7)});
  add_block(x, {w(4, 1), w(1, 7), w(7, 4)});
  add_block(x, {w(5, 5), w(5, 2), w(2, 5)});
  add_cross(x, {w(2, 2), w(2, 8), w(8, 2)}, {w(4, 4)});
  add_cross(x, {w(4, 4)}, {w(2, 2), w(2, 8), w(8, 2)});
  return x;
}

ModularInvariant build_e21() {
  ModularInvariant x(21, "E21");
  add_block(x, {w(1, 1), w(5, 5), w(7, 7), w(11, 11), w(22, 1), w(1, 22), w(14, 5), w(5, 14), w(11, 2), w(2, 11),
                w(10, 7), w(7, 10)});
  add_block(x, {w(16, 7), w(7, 16), w(16, 1), w(1, 16), w(11, 8), w(8, 11), w(11, 5), w(5, 11), w(8, 5), w(5, 8),
                w(7, 1), w(1, 7)});
  return x;
}

bool family_defined(int k, std::string_view family) {
  if (family == "A") return k >= 1;
  if (family == "D") return k >= 4 || (k >= 3 && k % 3 == 0);
  if (family == "E5") return k == 5;
  if (family == "E9_1" || family == "E9_2") return k == 9;
  if (family == "E21") return k == 21;
  return false;
}

}  // namespace

std::vector<std::string> named_families(int k) {
  std::vector<std::string> out;
  for (const char* f : {"A", "D", "E5", "E9_1", "E9_2", "E21"}) {
    if (family_defined(k, f)) out.emplace_back(f);
  }
  return out;
}

std::string conjugate_name(std::string_view name) {
  if (name.empty()) return {};
  if (name.ends_with("^C")) return std::string(name.substr(0, name.size() - 2));
  return std::string(name) + "^C";
}

ModularInvariant build_named(int k, std::string_view name) {
  if (k < 1) throw std::invalid_argument("build_named: level must be >= 1");
  if (name.ends_with("^C")) return conjugate(build_named(k, name.substr(0, name.size() - 2)));
  if (!family_defined(k, name)) {
    throw std::invalid_argument("invariant family '" + std::string(name) + "' is not defined at level " +
                                std::to_string(k));
  }
  if (name == "A") {
    ModularInvariant x(k, "A");
    for (const auto& lam : dominant_weights(k)) x.set(lam, lam, 1);
    return x;
  }
  if (name == "D") return build_d(k);
  if (name == "E5") return build_e5();
  if (name == "E9_1") return build_e9_1();
  if (name == "E9_2") return build_e9_2();
  return build_e21();
}

ModularInvariant conjugate(const ModularInvariant& x) {
  ModularInvariant out(x.level(), conjugate_name(x.name()));
  for (const auto& [key, v] : x.entries()) out.set(key.first, map_h(x.level(), key.second), v);
  return out;
}

bool equal(const ModularInvariant& x, const ModularInvariant& y) {
  if (x.level() != y.level()) throw std::invalid_argument("equal: level mismatch");
  return x.entries() == y.entries();
}

std::vector<std::tuple<Weight, Weight, std::int64_t>> support(const ModularInvariant& x) {
  std::vector<std::tuple<Weight, Weight, std::int64_t>> out;
  out.reserve(x.nonzero_count());
  for (const auto& [key, v] : x.entries()) out.emplace_back(key.first, key.second, v);
  return out;
}

InvariantReport is_modular_invariant(const ModularInvariant& x, const ModularData& md) {
  if (x.level() != md.level) throw std::invalid_argument("is_modular_invariant: level mismatch");
  InvariantReport r;
  const Weight vac = Weight::shifted_weight(1, 1);

  r.p1 = x.at(vac, vac) == 1;
  if (!r.p1) {
    r.failing_position = WeightPair{vac, vac};
    r.detail = "X_00 = " + std::to_string(x.at(vac, vac)) + ", expected 1";
  }

  const std::size_t dim = md.size();
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows(dim), cols(dim);
  r.p2 = true;
  for (const auto& [key, v] : x.entries()) {
    const auto a = md.index_of(key.first);
    const auto b = md.index_of(key.second);
    if (!a || !b || v <= 0) {
      r.p2 = false;
      if (!r.failing_position) {
        r.failing_position = key;
        r.detail = "entry outside P^k or not a positive integer";
      }
      continue;
    }
    rows[*a].emplace_back(*b, v);
    cols[*b].emplace_back(*a, v);
  }

  r.commutes_with_t = true;
  for (const auto& [key, v] : x.entries()) {
    if (!key.first.in_alcove(md.level) || !key.second.in_alcove(md.level)) continue;
    const Rational diff = md.t_exponents[md.index(key.first)] - md.t_exponents[md.index(key.second)];
    if (!is_integer(diff)) {
      r.commutes_with_t = false;
      if (!r.failing_position) {
        r.failing_position = key;
        r.detail = "T-exponents differ by " + to_string(diff) + ", not an integer";
      }
      break;
    }
  }

  // (XS - SX)_{ab} on the integer-scaled S, reduced modulo Phi_N.
  const int N = md.conductor;
  const IntCycMatrix M(md.s, dim, N);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(N));
  r.commutes_with_s = r.p2;
  for (std::size_t a = 0; a < dim && r.commutes_with_s; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (rows[a].empty() && cols[b].empty()) continue;
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& [c, v] : rows[a]) {
        for (const auto& [e, coeff] : M.at(c, b)) acc[static_cast<std::size_t>(e)] += v * coeff;
      }
      for (const auto& [c, v] : cols[b]) {
        for (const auto& [e, coeff] : M.at(a, c)) acc[static_cast<std::size_t>(e)] -= v * coeff;
      }
      reduce_mod_cyclotomic(std::span<std::int64_t>(acc), N);
      if (std::any_of(acc.begin(), acc.end(), [](std::int64_t t) { return t != 0; })) {
        r.commutes_with_s = false;
        const WeightPair pos{md.weights[a], md.weights[b]};
        if (!r.failing_position) {
          r.failing_position = pos;
          r.detail = "(XS - SX) nonzero at " + to_string(pos.first) + "," + to_string(pos.second);
        }
        break;
      }
    }
  }
  return r;
}

}  // namespace affinv
