#include "affinv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affinv {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<std::int64_t> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<std::int64_t> poly(static_cast<size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const size_t dd = divisor.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - dd, 0);
    for (size_t i = poly.size() - 1; i + 1 > dd; --i) {
      const std::int64_t c = poly[i];
      if (c == 0) continue;
      quotient[i - dd] = c;
      for (size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
      if (i == dd) break;
    }
    poly = std::move(quotient);
  }
  return poly;
}

struct SparseCyclotomic {
  int degree;
  // nonzero coefficients of Phi_n below the leading term
  std::vector<std::pair<int, std::int64_t>> lower;
};

const SparseCyclotomic& sparse_cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, SparseCyclotomic> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const auto& dense = cyclotomic_polynomial(n);
  SparseCyclotomic sc;
  sc.degree = static_cast<int>(dense.size()) - 1;
  for (int j = 0; j < sc.degree; ++j) {
    if (dense[static_cast<size_t>(j)] != 0) sc.lower.emplace_back(j, dense[static_cast<size_t>(j)]);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(sc)).first->second;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p = q * d + r with deg r < deg d.
void poly_divmod(const Poly& p, const Poly& d, Poly& q, Poly& r) {
  r = p;
  trim(r);
  q.assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Rational(0));
  const Rational& lead = d.back();
  while (r.size() >= d.size() && !r.empty()) {
    const size_t shift = r.size() - d.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
    trim(r);
  }
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  // a - q*b
  Poly out = a;
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  trim(out);
  return out;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::recursive_mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto poly = compute_cyclotomic(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

void reduce_mod_cyclotomic(std::span<Rational> coeffs, int n) {
  const auto& phi = sparse_cyclotomic(n);
  const int d = phi.degree;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= d; --i) {
    Rational& top = coeffs[static_cast<size_t>(i)];
    if (top == 0) continue;
    const Rational c = top;
    top = 0;
    for (const auto& [j, pj] : phi.lower) {
      coeffs[static_cast<size_t>(i - d + j)] -= c * pj;
    }
  }
}

void reduce_mod_cyclotomic(std::span<std::int64_t> coeffs, int n) {
  const auto& phi = sparse_cyclotomic(n);
  const int d = phi.degree;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= d; --i) {
    std::int64_t& top = coeffs[static_cast<size_t>(i)];
    if (top == 0) continue;
    const std::int64_t c = top;
    top = 0;
    for (const auto& [j, pj] : phi.lower) {
      std::int64_t prod = 0;
      std::int64_t& slot = coeffs[static_cast<size_t>(i - d + j)];
      if (__builtin_mul_overflow(c, pj, &prod) || __builtin_sub_overflow(slot, prod, &slot)) {
        throw std::overflow_error("cyclotomic reduction overflowed int64");
      }
    }
  }
}

CycNum::CycNum(const Rational& value, int conductor) : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("CycNum: conductor must be positive");
  if (value != 0) terms_.push_back({0, value});
}

CycNum::CycNum(int conductor, std::vector<Term> terms) : conductor_(conductor), terms_(std::move(terms)) {
  if (conductor < 1) throw std::invalid_argument("CycNum: conductor must be positive");
  normalize();
}

CycNum CycNum::root_of_unity(int conductor, long exponent) {
  return CycNum(conductor, {Term{static_cast<int>(exponent % conductor), Rational(1)}});
}

void CycNum::normalize() {
  for (auto& t : terms_) {
    t.exponent %= conductor_;
    if (t.exponent < 0) t.exponent += conductor_;
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

CycNum CycNum::lift(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor < 1 || conductor % conductor_ != 0) {
    throw std::invalid_argument("CycNum::lift: target conductor must be a multiple of the current one");
  }
  const int factor = conductor / conductor_;
  CycNum out;
  out.conductor_ = conductor;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.exponent *= factor;
  return out;
}

CycNum CycNum::conj() const {
  CycNum out;
  out.conductor_ = conductor_;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.exponent = (conductor_ - t.exponent) % conductor_;
  out.normalize();
  return out;
}

CycNum CycNum::scaled(const Rational& factor) const {
  if (factor == 0) return CycNum(Rational(0), conductor_);
  CycNum out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

std::vector<Rational> CycNum::reduced() const {
  std::vector<Rational> dense(static_cast<size_t>(conductor_), Rational(0));
  for (const auto& t : terms_) dense[static_cast<size_t>(t.exponent)] += t.coeff;
  reduce_mod_cyclotomic(dense, conductor_);
  dense.resize(static_cast<size_t>(euler_phi(conductor_)));
  return dense;
}

bool CycNum::is_zero() const {
  if (terms_.empty()) return true;
  const auto r = reduced();
  return std::all_of(r.begin(), r.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::identical(const CycNum& other) const {
  if (conductor_ != other.conductor_ || terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent != other.terms_[i].exponent || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

CycNum CycNum::inverse() const {
  Poly a = reduced();
  trim(a);
  if (a.empty()) throw std::domain_error("CycNum::inverse: zero has no inverse");
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  Poly f(phi_int.begin(), phi_int.end());

  // Extended Euclid: track s with s * a == r (mod f).
  Poly r0 = f, r1 = a;
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_N is irreducible, so the gcd is a nonzero constant.
  if (r0.size() != 1) throw std::logic_error("CycNum::inverse: non-unit gcd with cyclotomic polynomial");
  const Rational g = r0[0];
  std::vector<Term> terms;
  for (size_t i = 0; i < s0.size(); ++i) {
    if (s0[i] != 0) terms.push_back({static_cast<int>(i), s0[i] / g});
  }
  // s0 may exceed degree phi(N); reduce by re-normalizing through the dense path.
  CycNum raw;
  raw.conductor_ = conductor_;
  std::vector<Rational> dense(std::max(static_cast<size_t>(conductor_), s0.size()), Rational(0));
  for (const auto& t : terms) dense[static_cast<size_t>(t.exponent)] += t.coeff;
  reduce_mod_cyclotomic(dense, conductor_);
  for (size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) raw.terms_.push_back({static_cast<int>(i), dense[i]});
  }
  raw.normalize();
  return raw;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  const int n = lcm_int(conductor_, rhs.conductor_);
  if (n != conductor_) *this = lift(n);
  const CycNum other = rhs.lift(n);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].exponent < other.terms_[j].exponent)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].exponent < terms_[i].exponent) {
      merged.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (c != 0) merged.push_back({terms_[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
  const int n = std::lcm(lhs.conductor_, rhs.conductor_);
  const int fl = n / lhs.conductor_;
  const int fr = n / rhs.conductor_;
  CycNum out;
  out.conductor_ = n;
  out.terms_.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      out.terms_.push_back({(a.exponent * fl + b.exponent * fr) % n, a.coeff * b.coeff});
    }
  }
  out.normalize();
  return out;
}

CycNum operator-(const CycNum& value) {
  CycNum out = value;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ComplexBall CycNum::to_complex(int precision_bits) const {
  if (precision_bits < 53) throw std::invalid_argument("to_complex: precision_bits must be >= 53");
  const mpfr_prec_t w = precision_bits + 32;
  ComplexBall ball{BigFloat(w), BigFloat(w), BigFloat(w)};
  if (terms_.empty()) return ball;

  BigFloat pi(w), theta(w), c(w), s(w), coeff(w), prod(w);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  Rational abs_sum = 0;
  for (const auto& t : terms_) {
    mpfr_mul_ui(theta.get(), pi.get(), 2UL * static_cast<unsigned long>(t.exponent), MPFR_RNDN);
    mpfr_div_ui(theta.get(), theta.get(), static_cast<unsigned long>(conductor_), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    mpfr_set_q(coeff.get(), t.coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(prod.get(), coeff.get(), c.get(), MPFR_RNDN);
    mpfr_add(ball.re.get(), ball.re.get(), prod.get(), MPFR_RNDN);
    mpfr_mul(prod.get(), coeff.get(), s.get(), MPFR_RNDN);
    mpfr_add(ball.im.get(), ball.im.get(), prod.get(), MPFR_RNDN);
    abs_sum += abs(t.coeff);
  }
  // Per-term error <= 23u|c| (angle, trig, coefficient and product
  // rounding); each of the t additions adds <= 1.01u * sum|c|.
  const Rational factor = abs_sum * (24 + 2 * static_cast<long>(terms_.size()));
  mpfr_set_q(ball.radius.get(), factor.get_mpq_t(), MPFR_RNDU);
  mpfr_mul_2si(ball.radius.get(), ball.radius.get(), -static_cast<long>(w), MPFR_RNDU);
  return ball;
}

std::string CycNum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << affinv::to_string(t.coeff);
    if (t.exponent != 0) os << "*z" << conductor_ << "^" << t.exponent;
  }
  return os.str();
}

CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
CycNum cyc_neg(const CycNum& a) { return -a; }
CycNum cyc_conj(const CycNum& a) { return a.conj(); }
bool cyc_is_zero(const CycNum& a) { return a.is_zero(); }
ComplexBall cyc_to_complex(const CycNum& a, int precision_bits) { return a.to_complex(precision_bits); }

}  // namespace affinv
