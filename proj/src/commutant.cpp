#include "affinv/commutant.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "affinv/int_cyc.hpp"

namespace affinv {

std::vector<WeightPair> t_compatible_pairs(const ModularData& md) {
  std::vector<WeightPair> out;
  for (std::size_t a = 0; a < md.size(); ++a) {
    for (std::size_t b = 0; b < md.size(); ++b) {
      if (is_integer(md.t_exponents[a] - md.t_exponents[b])) out.emplace_back(md.weights[a], md.weights[b]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CommutantBasis::position(const WeightPair& p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) throw std::out_of_range("pair is not T-compatible");
  return static_cast<std::size_t>(it - pairs.begin());
}

RationalMatrix CommutantBasis::matrix(std::size_t i, const ModularData& md) const {
  RationalMatrix out(md.size(), md.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out(md.index(pairs[p].first), md.index(pairs[p].second)) = basis.at(i)[p];
  }
  return out;
}

namespace {

// Certified lower endpoints of S_{0 lambda}, at `bits` precision.
std::vector<BigFloat> vacuum_lower_bounds(const ModularData& md, int bits) {
  std::vector<BigFloat> out;
  for (const auto& ball : vacuum_row_enclosures(md, bits)) {
    if (!ball.certainly_positive_real()) throw std::domain_error("vacuum row positivity could not be certified");
    out.push_back(ball.real_lower());
  }
  return out;
}

std::int64_t bound_from_lower(const BigFloat& a, const BigFloat& b) {
  BigFloat prod(a.precision());
  mpfr_mul(prod.get(), a.get(), b.get(), MPFR_RNDD);
  BigFloat inv(a.precision());
  mpfr_ui_div(inv.get(), 1, prod.get(), MPFR_RNDU);
  if (!mpfr_fits_slong_p(inv.get(), MPFR_RNDD)) throw std::overflow_error("entry bound exceeds int64");
  return mpfr_get_si(inv.get(), MPFR_RNDD);
}

double weight_lower(const BigFloat& a, const BigFloat& b) {
  BigFloat prod(a.precision());
  mpfr_mul(prod.get(), a.get(), b.get(), MPFR_RNDD);
  return mpfr_get_d(prod.get(), MPFR_RNDD);
}

}  // namespace

std::int64_t entry_bound(const ModularData& md, const Weight& lambda, const Weight& mu, int precision_bits) {
  const auto a = md.S(0, md.index(lambda)).to_complex(precision_bits);
  const auto b = md.S(0, md.index(mu)).to_complex(precision_bits);
  if (!a.certainly_positive_real() || !b.certainly_positive_real()) {
    throw std::domain_error("entry_bound: vacuum row positivity could not be certified");
  }
  return bound_from_lower(a.real_lower(), b.real_lower());
}

CommutantBasis commutant_basis(const ModularData& md) {
  CommutantBasis cb;
  cb.level = md.level;
  cb.pairs = t_compatible_pairs(md);
  const std::size_t dim = md.size();
  const std::size_t npairs = cb.pairs.size();
  const int N = md.conductor;
  const auto phi = static_cast<std::size_t>(euler_phi(N));

  // Column order: decreasing entry bound, vacuum pair last, so the free
  // columns Bareiss leaves behind are the most tightly bounded ones.
  const auto lower = vacuum_lower_bounds(md, 128);
  std::vector<std::int64_t> bound(npairs);
  std::vector<std::size_t> pa(npairs), pb(npairs);
  for (std::size_t p = 0; p < npairs; ++p) {
    pa[p] = md.index(cb.pairs[p].first);
    pb[p] = md.index(cb.pairs[p].second);
    bound[p] = bound_from_lower(lower[pa[p]], lower[pb[p]]);
  }
  std::vector<std::size_t> col_pair(npairs);
  for (std::size_t p = 0; p < npairs; ++p) col_pair[p] = p;
  std::stable_sort(col_pair.begin(), col_pair.end(), [&](std::size_t x, std::size_t y) {
    const bool vx = pa[x] == 0 && pb[x] == 0;
    const bool vy = pa[y] == 0 && pb[y] == 0;
    if (vx != vy) return vy;
    return bound[x] > bound[y];
  });
  std::vector<std::uint32_t> pair_col(npairs);
  for (std::size_t c = 0; c < npairs; ++c) pair_col[col_pair[c]] = static_cast<std::uint32_t>(c);

  const IntCycMatrix M(md.s, dim, N);
  std::vector<std::vector<std::int64_t>> R(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) R[i * dim + j] = M.reduced(i, j);
  }
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> by_row(dim), by_col(dim);
  for (std::size_t p = 0; p < npairs; ++p) {
    by_row[pa[p]].emplace_back(pb[p], pair_col[p]);
    by_col[pb[p]].emplace_back(pa[p], pair_col[p]);
  }

  // (XS - SX)_{ab} = sum_c X_{ac} S_{cb} - sum_c S_{ac} X_{cb}, one row per
  // power-basis coordinate.
  std::vector<SparseRow> rows;
  SparseRow scratch;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      for (std::size_t i = 0; i < phi; ++i) {
        scratch.clear();
        for (const auto& [c, col] : by_row[a]) {
          if (const auto v = R[c * dim + b][i]; v != 0) scratch.emplace_back(col, v);
        }
        for (const auto& [c, col] : by_col[b]) {
          if (const auto v = R[a * dim + c][i]; v != 0) scratch.emplace_back(col, -v);
        }
        if (scratch.empty()) continue;
        std::sort(scratch.begin(), scratch.end());
        SparseRow merged;
        for (const auto& e : scratch) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
          } else {
            merged.push_back(e);
          }
        }
        rows.push_back(std::move(merged));
      }
    }
  }
  rows = dedupe_rows(std::move(rows));
  cb.equation_count = rows.size();

  const KernelResult kr = sparse_integer_kernel(rows, npairs);
  for (std::size_t f : kr.free_columns) cb.free_pairs.push_back(col_pair[f]);
  for (const auto& v : kr.basis) {
    RationalVector x(npairs);
    for (std::size_t c = 0; c < npairs; ++c) x[col_pair[c]] = v[c];
    cb.basis.push_back(std::move(x));
  }
  return cb;
}

bool in_span(const CommutantBasis& cb, const ModularInvariant& x) {
  if (x.level() != cb.level) return false;
  for (const auto& [key, v] : x.entries()) {
    if (!std::binary_search(cb.pairs.begin(), cb.pairs.end(), key)) return false;
  }
  RationalVector combo(cb.pairs.size(), Rational(0));
  for (std::size_t i = 0; i < cb.basis.size(); ++i) {
    const auto& fp = cb.pairs[cb.free_pairs[i]];
    const std::int64_t c = x.at(fp.first, fp.second);
    if (c == 0) continue;
    for (std::size_t p = 0; p < combo.size(); ++p) combo[p] += cb.basis[i][p] * c;
  }
  for (std::size_t p = 0; p < combo.size(); ++p) {
    if (combo[p] != x.at(cb.pairs[p].first, cb.pairs[p].second)) return false;
  }
  return true;
}

bool support_less(const ModularInvariant& a, const ModularInvariant& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  return a.entries() < b.entries();
}

namespace {

using Wide = __int128;

struct Contribution {
  std::size_t dep;
  std::int64_t num;
  Wide rem_max;  // largest positive amount later depths can still add
  bool last;     // dependent is fully determined after this depth
};

struct SearchPlan {
  std::size_t vacuum_pair = 0;
  std::vector<std::size_t> free_pair;  // per depth
  std::vector<std::int64_t> bound;     // per depth
  std::vector<double> weight;          // per depth
  std::vector<std::vector<Contribution>> contrib;  // per depth
  std::vector<std::size_t> dep_pair;
  std::vector<std::int64_t> dep_den;
  std::vector<double> dep_weight;
  std::vector<Wide> dep_start;  // contribution of X_00 = 1
  std::vector<std::size_t> complete_at_start;
  double vacuum_weight = 0;
};

constexpr double kBudgetSlack = 1e-9;

SearchPlan make_plan(const ModularData& md, const CommutantBasis& cb, int bits) {
  SearchPlan plan;
  const std::size_t npairs = cb.pairs.size();
  const auto lower = vacuum_lower_bounds(md, bits);
  std::vector<double> w(npairs);
  std::vector<std::int64_t> bound(npairs);
  for (std::size_t p = 0; p < npairs; ++p) {
    const auto a = md.index(cb.pairs[p].first);
    const auto b = md.index(cb.pairs[p].second);
    w[p] = weight_lower(lower[a], lower[b]);
    bound[p] = bound_from_lower(lower[a], lower[b]);
  }
  const WeightPair vac{Weight::shifted_weight(1, 1), Weight::shifted_weight(1, 1)};
  plan.vacuum_pair = cb.position(vac);

  // basis index per free pair, then search order by increasing bound.
  std::size_t vac_basis = cb.basis.size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < cb.free_pairs.size(); ++i) {
    if (cb.free_pairs[i] == plan.vacuum_pair) {
      vac_basis = i;
    } else {
      order.push_back(i);
    }
  }
  if (vac_basis == cb.basis.size()) throw std::logic_error("vacuum coordinate is not free in the commutant basis");
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return bound[cb.free_pairs[x]] < bound[cb.free_pairs[y]];
  });
  for (std::size_t i : order) {
    plan.free_pair.push_back(cb.free_pairs[i]);
    plan.bound.push_back(bound[cb.free_pairs[i]]);
    plan.weight.push_back(w[cb.free_pairs[i]]);
  }
  plan.vacuum_weight = w[plan.vacuum_pair];
  const std::size_t depth = order.size();
  plan.contrib.resize(depth);

  std::vector<bool> is_free(npairs, false);
  for (std::size_t f : cb.free_pairs) is_free[f] = true;
  for (std::size_t p = 0; p < npairs; ++p) {
    if (is_free[p]) continue;
    BigInt den = 1;
    for (const auto& v : cb.basis) den = lcm(den, v[p].get_den());
    if (!den.fits_slong_p()) throw std::overflow_error("commutant basis denominators exceed int64");
    const std::size_t dep = plan.dep_pair.size();
    plan.dep_pair.push_back(p);
    plan.dep_den.push_back(den.get_si());
    plan.dep_weight.push_back(w[p]);
    auto numerator = [&](std::size_t basis_index) {
      const BigInt v = cb.basis[basis_index][p].get_num() * (den / cb.basis[basis_index][p].get_den());
      if (!v.fits_slong_p()) throw std::overflow_error("commutant basis numerators exceed int64");
      return v.get_si();
    };
    plan.dep_start.push_back(numerator(vac_basis));
    std::vector<std::pair<std::size_t, std::int64_t>> touches;
    for (std::size_t d = 0; d < depth; ++d) {
      const std::int64_t num = numerator(order[d]);
      if (num != 0) touches.emplace_back(d, num);
    }
    if (touches.empty()) {
      plan.complete_at_start.push_back(dep);
      continue;
    }
    Wide rem = 0;
    for (std::size_t t = touches.size(); t-- > 0;) {
      const auto [d, num] = touches[t];
      plan.contrib[d].push_back({dep, num, rem, t + 1 == touches.size()});
      if (num > 0) rem += static_cast<Wide>(num) * plan.bound[d];
      if (rem > (static_cast<Wide>(1) << 100)) throw std::overflow_error("search ranges too large");
    }
  }
  return plan;
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t limit = 0;
};

struct GuardHit {};

class Searcher {
 public:
  Searcher(const SearchPlan& plan, SharedState& shared) : plan_(plan), shared_(shared) {
    cur_ = plan.dep_start;
    values_.assign(plan.free_pair.size(), 0);
  }

  // Returns false if the root itself is infeasible.
  bool root_ok(double& budget) const {
    budget = plan_.vacuum_weight;
    for (std::size_t dep : plan_.complete_at_start) {
      if (!determined_ok(dep, budget)) return false;
    }
    return budget <= 1 + kBudgetSlack;
  }

  std::int64_t first_level_max(double budget) const { return max_value(0, budget); }

  // Explores the subtree with values_[0] = x0.
  std::vector<std::vector<std::int64_t>> run_subtree(std::int64_t x0, double budget) {
    solutions_.clear();
    if (plan_.free_pair.empty()) {
      solutions_.push_back(snapshot());
      return solutions_;
    }
    try_value(0, x0, budget);
    return solutions_;
  }

 private:
  std::int64_t max_value(std::size_t d, double budget) const {
    std::int64_t hi = plan_.bound[d];
    if (plan_.weight[d] > 0) {
      const double room = (1 + kBudgetSlack - budget) / plan_.weight[d];
      if (room < static_cast<double>(hi)) hi = room < 0 ? -1 : static_cast<std::int64_t>(room);
    }
    return hi;
  }

  bool determined_ok(std::size_t dep, double& budget) const {
    const Wide v = cur_[dep];
    const std::int64_t den = plan_.dep_den[dep];
    if (v < 0 || v % den != 0) return false;
    budget += plan_.dep_weight[dep] * static_cast<double>(v / den);
    return true;
  }

  void try_value(std::size_t d, std::int64_t x, double budget) {
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.limit || shared_.stop.load()) {
      shared_.stop.store(true);
      throw GuardHit{};
    }
    const auto& contrib = plan_.contrib[d];
    for (const auto& c : contrib) cur_[c.dep] += static_cast<Wide>(x) * c.num;
    double b = budget + plan_.weight[d] * static_cast<double>(x);
    bool ok = true;
    for (const auto& c : contrib) {
      if (c.last) {
        if (!determined_ok(c.dep, b)) {
          ok = false;
          break;
        }
      } else if (cur_[c.dep] + c.rem_max < 0) {
        ok = false;
        break;
      }
    }
    if (ok && b <= 1 + kBudgetSlack) {
      values_[d] = x;
      if (d + 1 == plan_.free_pair.size()) {
        solutions_.push_back(snapshot());
      } else {
        const std::int64_t hi = max_value(d + 1, b);
        for (std::int64_t y = 0; y <= hi; ++y) try_value(d + 1, y, b);
      }
    }
    for (const auto& c : contrib) cur_[c.dep] -= static_cast<Wide>(x) * c.num;
  }

  // Values on every pair: free coordinates, then dependents.
  std::vector<std::int64_t> snapshot() const {
    std::vector<std::int64_t> out(plan_.free_pair.size() + plan_.dep_pair.size() + 1);
    std::size_t i = 0;
    out[i++] = 1;
    for (auto v : values_) out[i++] = v;
    for (std::size_t dep = 0; dep < plan_.dep_pair.size(); ++dep) {
      out[i++] = static_cast<std::int64_t>(cur_[dep] / plan_.dep_den[dep]);
    }
    return out;
  }

  const SearchPlan& plan_;
  SharedState& shared_;
  std::vector<Wide> cur_;
  std::vector<std::int64_t> values_;
  std::vector<std::vector<std::int64_t>> solutions_;
};

ModularInvariant to_invariant(const ModularData& md, const CommutantBasis& cb, const SearchPlan& plan,
                              const std::vector<std::int64_t>& values) {
  ModularInvariant x(md.level);
  std::size_t i = 0;
  auto put = [&](std::size_t p, std::int64_t v) { x.set(cb.pairs[p].first, cb.pairs[p].second, v); };
  put(plan.vacuum_pair, values[i++]);
  for (std::size_t p : plan.free_pair) put(p, values[i++]);
  for (std::size_t p : plan.dep_pair) put(p, values[i++]);
  return x;
}

}  // namespace

EnumerationResult enumerate_physical(const ModularData& md, const EnumerationOptions& options) {
  return enumerate_physical(md, commutant_basis(md), options);
}

EnumerationResult enumerate_physical(const ModularData& md, const CommutantBasis& cb,
                                     const EnumerationOptions& options) {
  EnumerationResult result;
  result.commutant_dim = cb.dimension();
  if (cb.dimension() > options.guard_dim) {
    throw GuardExceeded("commutant dimension " + std::to_string(cb.dimension()) + " exceeds guard_dim " +
                            std::to_string(options.guard_dim),
                        {}, {}, 0);
  }
  const SearchPlan plan = make_plan(md, cb, options.precision_bits);
  SharedState shared;
  shared.limit = options.guard_nodes;

  double root_budget = 0;
  {
    Searcher probe(plan, shared);
    if (!probe.root_ok(root_budget)) return result;
  }
  std::vector<std::int64_t> subtrees;
  if (plan.free_pair.empty()) {
    subtrees.push_back(0);
  } else {
    Searcher probe(plan, shared);
    for (std::int64_t x = 0; x <= probe.first_level_max(root_budget); ++x) subtrees.push_back(x);
  }
  std::erase_if(subtrees, [&](std::int64_t x) {
    if (!options.skip_subtrees.contains(x)) return false;
    result.complete = false;
    return true;
  });

  std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> done;
  std::mutex mu;
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(subtrees.size())));
  auto work = [&](unsigned w) {
    Searcher s(plan, shared);
    for (std::size_t i = w; i < subtrees.size(); i += workers) {
      if (shared.stop.load()) return;
      try {
        auto sols = s.run_subtree(subtrees[i], root_budget);
        std::lock_guard lock(mu);
        done.emplace(subtrees[i], std::move(sols));
      } catch (const GuardHit&) {
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  result.nodes = std::min(shared.nodes.load(), shared.limit);

  std::vector<ModularInvariant> found;
  for (const auto& [x0, sols] : done) {
    for (const auto& v : sols) found.push_back(to_invariant(md, cb, plan, v));
  }
  std::sort(found.begin(), found.end(), support_less);
  if (shared.stop.load()) {
    std::vector<std::int64_t> completed;
    for (const auto& [x0, sols] : done) completed.push_back(x0);
    throw GuardExceeded("search exceeded guard_nodes = " + std::to_string(options.guard_nodes), std::move(completed),
                        std::move(found), result.nodes);
  }
  result.invariants = std::move(found);
  return result;
}

}  // namespace affinv
