#include "blocklab/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blocklab {

namespace {

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

bool same_prime_divisors(long a, long b) {
  auto radical = [](long v) {
    long r = 1;
    for (long p = 2; p * p <= v; ++p) {
      if (v % p == 0) {
        r *= p;
        while (v % p == 0) v /= p;
      }
    }
    return v > 1 ? r * v : r;
  };
  return radical(a) == radical(b);
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational rpow(const Rational& base, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

int nu2(const BigInt& v) {
  if (v == 0) throw std::domain_error("nu2 of zero");
  BigInt t = abs(v);
  int r = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++r;
  }
  return r;
}

int nu2(const Rational& v) {
  return nu2(BigInt(numerator(v))) - nu2(BigInt(denominator(v)));
}

int nu2(long long v) { return nu2(BigInt(v)); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
  static std::mutex lock;
  static std::map<long, std::vector<BigInt>> cache;
  std::lock_guard<std::mutex> guard(lock);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1 divided by Phi_d for every proper divisor d; computed without
  // recursion into the cache to keep the lock simple.
  std::map<long, std::vector<BigInt>> local;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<BigInt> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (auto& [e, phi] : local) {
      if (d % e != 0 || e == d) continue;
      // exact division by monic phi
      std::vector<BigInt> quotient(poly.size() - phi.size() + 1, 0);
      for (long i = static_cast<long>(poly.size()) - 1; i >= static_cast<long>(phi.size()) - 1; --i) {
        BigInt c = poly[i];
        long shift = i - (static_cast<long>(phi.size()) - 1);
        quotient[shift] = c;
        if (c != 0)
          for (std::size_t j = 0; j < phi.size(); ++j) poly[shift + j] -= c * phi[j];
      }
      poly = quotient;
    }
    local[d] = poly;
  }
  return cache.emplace(n, local[n]).first->second;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(long long value) : conductor_(1), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value, long conductor)
    : conductor_(conductor), coeffs_(euler_phi(conductor), Rational(0)) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

std::vector<Rational> Cyclotomic::reduce(long conductor, std::vector<Rational> full) {
  long phi = euler_phi(conductor);
  if (is_power_of_two(conductor) && conductor > 1) {
    long half = conductor / 2;
    for (long i = half; i < conductor; ++i) full[i - half] -= full[i];
  } else {
    const auto& poly = cyclotomic_polynomial(conductor);
    for (long d = conductor - 1; d >= phi; --d) {
      if (full[d] == 0) continue;
      Rational c = full[d];
      for (long j = 0; j <= phi; ++j) full[d - phi + j] -= c * Rational(poly[j]);
    }
  }
  full.resize(phi);
  return full;
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long long exponent) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> full(conductor, Rational(0));
  full[mod(exponent, conductor)] = 1;
  return Cyclotomic(conductor, reduce(conductor, std::move(full)));
}

Cyclotomic Cyclotomic::from_exponents(long conductor, const std::map<long long, Rational>& terms) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> full(conductor, Rational(0));
  for (const auto& [e, c] : terms) full[mod(e, conductor)] += c;
  return Cyclotomic(conductor, reduce(conductor, std::move(full)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_integral() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  long t = m / conductor_;
  std::vector<Rational> full(m, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * t] = coeffs_[i];
  return Cyclotomic(m, reduce(m, std::move(full)));
}

Cyclotomic Cyclotomic::restricted(long d) const {
  if (d == conductor_) return *this;
  if (d < 1 || conductor_ % d != 0) throw std::invalid_argument("restriction target must divide the conductor");
  if (d <= 2) return Cyclotomic(rational_value(), d);
  if (!same_prime_divisors(conductor_, d))
    throw std::invalid_argument("restriction between conductors with different prime divisors is unsupported");
  long t = conductor_ / d;
  std::vector<Rational> out(euler_phi(d), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (i % t != 0) throw std::domain_error("element does not lie in the requested subfield");
    out[i / t] = coeffs_[i];
  }
  return Cyclotomic(d, std::move(out));
}

Cyclotomic Cyclotomic::galois(long long g) const {
  if (std::gcd(mod(g, conductor_), static_cast<long long>(conductor_)) != 1)
    throw std::invalid_argument("Galois exponent must be coprime to the conductor");
  if (conductor_ <= 2) return *this;
  std::vector<Rational> full(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) full[mod(static_cast<long long>(i) * g, conductor_)] += coeffs_[i];
  return Cyclotomic(conductor_, reduce(conductor_, std::move(full)));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(conductor_);
    z += static_cast<double>(coeffs_[i]) * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Rational a = abs(c);
    if (i == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "z" << conductor_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long n = std::lcm(conductor_, o.conductor_);
  Cyclotomic b = o.lifted(n);
  if (n != conductor_) *this = lifted(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long n = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lifted(n);
  Cyclotomic b = o.lifted(n);
  std::vector<Rational> full(n, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      full[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(n, reduce(n, std::move(full)));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  long n = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  long n = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic x = a.lifted(n);
  Cyclotomic y = b.lifted(n);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] < y.coeffs_[i]) return -1;
    if (y.coeffs_[i] < x.coeffs_[i]) return 1;
  }
  return 0;
}

std::string Valuation::to_string() const {
  if (infinite) return "inf";
  std::ostringstream out;
  out << value;
  return out.str();
}

Rational resultant(std::vector<Rational> f, std::vector<Rational> g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  Rational acc = 1;
  while (true) {
    long m = static_cast<long>(f.size()) - 1;
    long n = static_cast<long>(g.size()) - 1;
    if (n == 0) return acc * rpow(g[0], m);
    if (m == 0) return acc * rpow(f[0], n);
    if (m < n) {
      if ((m * n) % 2 == 1) acc = -acc;
      std::swap(f, g);
      continue;
    }
    // r = f mod g
    std::vector<Rational> r = f;
    const Rational& lead = g.back();
    for (long d = m; d >= n; --d) {
      if (r[d] == 0) continue;
      Rational c = r[d] / lead;
      for (long j = 0; j <= n; ++j) r[d - n + j] -= c * g[j];
    }
    r.resize(n);
    trim(r);
    if (r.empty()) return 0;
    long k = static_cast<long>(r.size()) - 1;
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= rpow(lead, m - k);
    f = std::move(g);
    g = std::move(r);
  }
}

Rational absolute_norm(const Cyclotomic& c) {
  const auto& phi = cyclotomic_polynomial(c.conductor());
  std::vector<Rational> f(phi.begin(), phi.end());
  return resultant(std::move(f), c.coeffs());
}

Valuation valuation(const Cyclotomic& c) {
  if (!is_power_of_two(c.conductor()))
    throw std::invalid_argument("valuation requires a 2-power conductor");
  if (c.is_zero()) return Valuation::infinity();
  Rational norm = absolute_norm(c);
  return Valuation{false, Rational(nu2(norm)) / Rational(euler_phi(c.conductor()))};
}

long long CoeffColumns::at(std::size_t row, long long i) const {
  long long full = 2 * half();
  long long r = mod(i, full);
  if (r < half()) return a.at(row).at(r);
  return -a.at(row).at(r - half());
}

std::vector<Cyclotomic> galois_expand(const CoeffColumns& cols, long long gamma_exponent) {
  if (gamma_exponent % 2 == 0) throw std::invalid_argument("Galois exponent must be odd");
  if (cols.k < 1) throw std::invalid_argument("element order must be at least 2");
  long conductor = 1L << cols.k;
  std::vector<Cyclotomic> out;
  out.reserve(cols.rows());
  for (const auto& row : cols.a) {
    if (static_cast<long long>(row.size()) != cols.half())
      throw std::invalid_argument("coefficient row has wrong length");
    std::map<long long, Rational> terms;
    for (long long s = 0; s < cols.half(); ++s)
      if (row[s] != 0) terms[mod(s * gamma_exponent, conductor)] += row[s];
    out.push_back(Cyclotomic::from_exponents(conductor, terms));
  }
  return out;
}

CoeffColumns galois_coeffs(const GaloisFamily& family) {
  if (family.k < 1) throw std::invalid_argument("element order must be at least 2");
  if (family.a < family.k) throw std::invalid_argument("transversal conductor 2^a must be at least 2^k");
  long long big = 1LL << family.a;
  if (static_cast<long long>(family.columns.size()) != big / 2)
    throw std::invalid_argument("incomplete Galois transversal");
  std::size_t rows = 0;
  bool first = true;
  for (const auto& [g, col] : family.columns) {
    if (g % 2 == 0 || g < 0 || g >= big) throw std::invalid_argument("transversal keys must be odd residues mod 2^a");
    if (first) rows = col.size();
    else if (col.size() != rows) throw std::invalid_argument("columns have different lengths");
    first = false;
  }
  long conductor = 1L << family.k;
  CoeffColumns out;
  out.k = family.k;
  out.a.assign(rows, std::vector<long long>(out.half(), 0));
  Rational scale = Rational(1) / Rational(big / 2);
  for (long long s = 0; s < out.half(); ++s) {
    for (std::size_t r = 0; r < rows; ++r) {
      Cyclotomic acc;
      for (const auto& [g, col] : family.columns)
        acc += col[r] * Cyclotomic::root_of_unity(conductor, -g * s);
      if (!acc.is_rational()) throw std::domain_error("family is not Galois-consistent (irrational coefficient)");
      Rational v = acc.scaled(scale).rational_value();
      if (denominator(v) != 1) throw std::domain_error("family is not Galois-consistent (non-integral coefficient)");
      out.a[r][s] = static_cast<long long>(numerator(v));
    }
  }
  return out;
}

bool parity_check_height_zero(const CoeffColumns& cols, std::size_t row) {
  long long sum = 0;
  for (long long i = 0; i < cols.half(); ++i) sum += cols.at(row, i);
  return sum % 2 != 0;
}

}  // namespace blocklab
