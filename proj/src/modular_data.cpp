#include "affinv/modular_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affinv/int_cyc.hpp"

namespace affinv {

std::optional<std::size_t> ModularData::index_of(const Weight& w) const {
  if (!w.in_alcove(level)) return std::nullopt;
  const long n0 = shifted_level;
  const long idx = (w.m - 1) * (n0 - 1) - static_cast<long>(w.m) * (w.m - 1) / 2 + (w.n - 1);
  if (idx >= 0 && static_cast<std::size_t>(idx) < weights.size() && weights[static_cast<std::size_t>(idx)] == w) {
    return static_cast<std::size_t>(idx);
  }
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end()) return std::nullopt;
  return static_cast<std::size_t>(it - weights.begin());
}

std::size_t ModularData::index(const Weight& w) const {
  auto idx = index_of(w);
  if (!idx) throw std::out_of_range("weight " + to_string(w) + " not in P^" + std::to_string(level));
  return *idx;
}

std::vector<Weight> dominant_weights(int k) {
  if (k < 1) throw std::invalid_argument("dominant_weights: level must be >= 1");
  std::vector<Weight> out;
  const int n0 = k + 3;
  for (int m = 1; m < n0; ++m) {
    for (int n = 1; m + n < n0; ++n) out.push_back(Weight::shifted_weight(m, n));
  }
  return out;
}

Rational conformal_weight(int k, const Weight& lambda) {
  if (!lambda.dominant_at_level(k)) {
    throw std::out_of_range("conformal_weight: " + to_string(lambda) + " is not in P^k_+ for k=" + std::to_string(k));
  }
  const Weight two_rho_shift{lambda.m + 2, lambda.n + 2, false};
  return inner_product(lambda, two_rho_shift) / Rational(2 * (k + 3));
}

Weight map_h(int k, const Weight& w) {
  if (!w.in_alcove(k)) throw std::out_of_range("map_h: " + to_string(w) + " is not in P^k");
  return Weight::shifted_weight(w.n, w.m);
}

Weight map_sigma(int k, const Weight& w) {
  if (!w.in_alcove(k)) throw std::out_of_range("map_sigma: " + to_string(w) + " is not in P^k");
  return Weight::shifted_weight(k + 3 - w.m - w.n, w.m);
}

Rational sl3_central_charge(int k) { return make_rational(8L * k, k + 3); }

std::vector<CycNum> s_matrix(int k) {
  const auto weights = dominant_weights(k);
  const int n = k + 3;
  const int conductor = 12 * n;
  const auto& weyl = weyl_group_a2();
  // -i / (sqrt(3) n) = -(z^{4n} + z^{2n}) / (3n) with z = zeta_{12n}.
  const Rational unit = make_rational(-1, 3L * n);
  std::vector<CycNum> out;
  out.reserve(weights.size() * weights.size());
  for (const auto& lam : weights) {
    for (const auto& mu : weights) {
      std::vector<CycNum::Term> terms;
      terms.reserve(2 * weyl.size());
      for (const auto& w : weyl) {
        const auto [a, b] = w.apply(lam.m, lam.n);
        // 3 <w(lam), mu>
        const long three_ip = 2L * a * mu.m + 2L * b * mu.n + 1L * a * mu.n + 1L * b * mu.m;
        // exp(-2 pi i <w lam, mu> / n) = z^{-4 * three_ip}
        const long e = -4 * three_ip;
        const Rational c = unit * w.sign;
        terms.push_back({static_cast<int>((e + 4L * n) % conductor), c});
        terms.push_back({static_cast<int>((e + 2L * n) % conductor), c});
      }
      out.emplace_back(conductor, std::move(terms));
    }
  }
  return out;
}

std::vector<Rational> t_vector(int k) {
  const Rational c24 = sl3_central_charge(k) / 24;
  std::vector<Rational> out;
  for (const auto& w : dominant_weights(k)) out.push_back(conformal_weight(k, w.unshift()) - c24);
  return out;
}

bool ModularDataReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<std::vector<int>> t_root_exponents(const ModularData& md) {
  std::vector<int> out;
  out.reserve(md.t_exponents.size());
  for (const auto& t : md.t_exponents) {
    const Rational scaled = t * md.conductor;
    if (!is_integer(scaled)) return std::nullopt;
    long e = scaled.get_num().get_si() % md.conductor;
    if (e < 0) e += md.conductor;
    out.push_back(static_cast<int>(e));
  }
  return out;
}

std::vector<ComplexBall> vacuum_row_enclosures(const ModularData& md, int precision_bits) {
  std::vector<ComplexBall> out;
  out.reserve(md.size());
  for (std::size_t j = 0; j < md.size(); ++j) out.push_back(md.S(0, j).to_complex(precision_bits));
  return out;
}

namespace {

bool is_zero_mod_cyclotomic(std::vector<std::int64_t>& acc, int conductor) {
  fold_accumulator(acc, conductor);
  std::span<std::int64_t> head(acc.data(), static_cast<std::size_t>(conductor));
  reduce_mod_cyclotomic(head, conductor);
  return std::all_of(head.begin(), head.end(), [](std::int64_t v) { return v == 0; });
}

std::string pair_label(const ModularData& md, std::size_t a, std::size_t b) {
  return "(" + to_string(md.weights[a]) + "," + to_string(md.weights[b]) + ")";
}

}  // namespace

ModularDataReport verify_modular_data(const ModularData& md) {
  ModularDataReport report;
  report.level = md.level;
  const std::size_t dim = md.size();
  const int N = md.conductor;
  if (dim == 0 || md.s.size() != dim * dim || md.t_exponents.size() != dim) {
    report.checks.push_back({"shape", false, "inconsistent matrix dimensions"});
    return report;
  }

  const IntCycMatrix M(md.s, dim, N);
  const BigInt scale_big = M.scale();
  if (!scale_big.fits_slong_p() || scale_big * scale_big > BigInt(1L << 40)) {
    report.checks.push_back({"shape", false, "S denominators too large for the integer kernel"});
    return report;
  }
  const std::int64_t D = scale_big.get_si();
  const double worst = static_cast<double>(dim) * static_cast<double>(M.max_terms() * M.max_terms()) *
                       static_cast<double>(M.max_abs_coeff()) * static_cast<double>(M.max_abs_coeff());
  if (worst > 1e15) {
    report.checks.push_back({"shape", false, "S coefficients too large for the integer kernel"});
    return report;
  }
  std::vector<std::int64_t> acc(3 * static_cast<std::size_t>(N), 0);
  auto reset = [&] { std::fill(acc.begin(), acc.end(), 0); };

  // Symmetry.
  {
    CheckResult r{"symmetric", true, ""};
    for (std::size_t a = 0; a < dim && r.passed; ++a) {
      for (std::size_t b = a + 1; b < dim; ++b) {
        if (md.S(a, b).identical(md.S(b, a))) continue;
        if (M.reduced(a, b) != M.reduced(b, a)) {
          r.passed = false;
          r.detail = "S differs from its transpose at " + pair_label(md, a, b);
          break;
        }
      }
    }
    report.checks.push_back(r);
  }
  const bool symmetric = report.checks.back().passed;

  // Unitarity: M conj(M)^T = D^2 I. Hermitian, so the upper triangle suffices.
  {
    std::vector<IntCycMatrix::Entry> conj_entries(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        auto e = M.at(i, j);
        for (auto& [x, c] : e) x = (N - x) % N;
        conj_entries[i * dim + j] = std::move(e);
      }
    }
    CheckResult r{"unitary", true, ""};
    for (std::size_t a = 0; a < dim && r.passed; ++a) {
      for (std::size_t b = a; b < dim; ++b) {
        reset();
        for (std::size_t c = 0; c < dim; ++c) accumulate_product(M.at(a, c), conj_entries[b * dim + c], 1, 0, acc);
        if (a == b) acc[0] -= D * D;
        if (!is_zero_mod_cyclotomic(acc, N)) {
          r.passed = false;
          r.detail = "S conj(S)^T differs from identity at " + pair_label(md, a, b);
          break;
        }
      }
    }
    report.checks.push_back(r);
  }

  // S^2 = P_h.
  {
    CheckResult r{"s_squared_is_charge_conjugation", true, ""};
    for (std::size_t a = 0; a < dim && r.passed; ++a) {
      const auto ha = md.index_of(Weight::shifted_weight(md.weights[a].n, md.weights[a].m));
      if (!ha) {
        r.passed = false;
        r.detail = "weight list not closed under h";
        break;
      }
      for (std::size_t b = symmetric ? a : 0; b < dim; ++b) {
        reset();
        for (std::size_t c = 0; c < dim; ++c) accumulate_product(M.at(a, c), M.at(c, b), 1, 0, acc);
        if (b == *ha) acc[0] -= D * D;
        if (!is_zero_mod_cyclotomic(acc, N)) {
          r.passed = false;
          r.detail = "S^2 differs from P_h at " + pair_label(md, a, b);
          break;
        }
      }
    }
    report.checks.push_back(r);
  }

  // (ST)^3 = S^2, checked in the equivalent form S T S = T^-1 S T^-1
  // (multiply on the left by (ST)^-1 S^-1 ... using invertibility of S and T).
  {
    CheckResult r{"st_cubed_equals_s_squared", true, ""};
    const auto tau = t_root_exponents(md);
    if (!tau) {
      r.passed = false;
      r.detail = "T exponents not representable at conductor " + std::to_string(N);
    } else {
      for (std::size_t a = 0; a < dim && r.passed; ++a) {
        for (std::size_t b = symmetric ? a : 0; b < dim; ++b) {
          reset();
          for (std::size_t c = 0; c < dim; ++c) accumulate_product(M.at(a, c), M.at(c, b), 1, (*tau)[c], acc);
          // D * z^{-tau_a - tau_b} M(a, b)
          int shift = -((*tau)[a] + (*tau)[b]);
          shift %= N;
          if (shift < 0) shift += N;
          for (const auto& [e, c] : M.at(a, b)) acc[static_cast<std::size_t>(e + shift)] -= D * c;
          if (!is_zero_mod_cyclotomic(acc, N)) {
            r.passed = false;
            r.detail = "(ST)^3 differs from S^2 (S T S vs T^-1 S T^-1) at " + pair_label(md, a, b);
            break;
          }
        }
      }
    }
    report.checks.push_back(r);
  }

  // Vacuum row: exactly real, certified positive.
  {
    CheckResult r{"vacuum_row_positive", true, ""};
    if (md.weights.front() != Weight::shifted_weight(1, 1)) {
      r.passed = false;
      r.detail = "vacuum (1,1) is not the first weight";
    }
    for (std::size_t j = 0; j < dim && r.passed; ++j) {
      const CycNum& v = md.S(0, j);
      if (!(v == v.conj())) {
        r.passed = false;
        r.detail = "S_{0," + to_string(md.weights[j]) + "} is not real";
        break;
      }
      if (!v.to_complex(128).certainly_positive_real()) {
        r.passed = false;
        r.detail = "S_{0," + to_string(md.weights[j]) + "} is not certified positive";
      }
    }
    report.checks.push_back(r);
  }
  return report;
}

ModularData build_modular_data(int k) {
  ModularData md;
  md.level = k;
  md.shifted_level = k + 3;
  md.conductor = 12 * (k + 3);
  md.weights = dominant_weights(k);
  md.s = s_matrix(k);
  md.t_exponents = t_vector(k);
  md.central_charge = sl3_central_charge(k);
  const auto report = verify_modular_data(md);
  if (!report.passed()) {
    std::ostringstream os;
    os << "modular data at level " << k << " failed verification:";
    for (const auto& c : report.checks) {
      if (!c.passed) os << " [" << c.name << ": " << c.detail << "]";
    }
    throw std::runtime_error(os.str());
  }
  return md;
}

}  // namespace affinv
