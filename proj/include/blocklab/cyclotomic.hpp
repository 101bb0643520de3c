#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blocklab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2-adic valuation of a nonzero integer / rational.
int nu2(const BigInt& v);
int nu2(const Rational& v);
int nu2(long long v);

/// Euler phi, and the N-th cyclotomic polynomial as integer coefficients
/// (constant term first). Results are cached.
long euler_phi(long n);
const std::vector<BigInt>& cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_N).
///
/// Stored as coefficients of 1, zeta, ..., zeta^{phi(N)-1}, i.e. reduced
/// modulo the N-th cyclotomic polynomial. For N = 2^k this is the basis in
/// which zeta^{2^{k-1}} = -1 has been eliminated. Binary operations lift both
/// operands to the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long long value);  // NOLINT: implicit from integers is convenient
  Cyclotomic(const Rational& value, long conductor = 1);

  /// zeta_N^e for any integer e.
  static Cyclotomic root_of_unity(long conductor, long long exponent);
  /// Builds sum_e c_e zeta_N^e from an exponent -> coefficient map.
  static Cyclotomic from_exponents(long conductor, const std::map<long long, Rational>& terms);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// True iff the element lies in Z[zeta_N] (all basis coefficients integral).
  bool is_integral() const;
  Rational rational_value() const;

  /// Same element written over conductor m (m must be a multiple of N).
  Cyclotomic lifted(long m) const;
  /// Same element written over conductor d | N. Supported when N and d have
  /// the same prime divisors (or d = 1 for rationals); throws if the element
  /// does not lie in Q(zeta_d).
  Cyclotomic restricted(long d) const;

  /// Galois action zeta_N -> zeta_N^g, gcd(g, N) = 1.
  Cyclotomic galois(long long g) const;
  Cyclotomic conj() const { return galois(-1); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Total order: lexicographic on coefficients over the common conductor.
  /// Only meaningful for deterministic sorting.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic scaled(const Rational& r) const;

 private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs);
  /// Reduces a length-N exponent vector modulo Phi_N.
  static std::vector<Rational> reduce(long conductor, std::vector<Rational> full);

  long conductor_;
  std::vector<Rational> coeffs_;
};

/// Value of the normalized 2-adic valuation nu (nu(2) = 1). Zero maps to the
/// infinite sentinel.
struct Valuation {
  bool infinite = false;
  Rational value = 0;

  static Valuation infinity() { return Valuation{true, 0}; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return infinity();
    return Valuation{false, a.value + b.value};
  }
  std::string to_string() const;
};

/// Resultant of two polynomials over Q (constant term first).
Rational resultant(std::vector<Rational> f, std::vector<Rational> g);

/// Absolute norm N_{Q(zeta_N)/Q}(c), computed as Res(Phi_N, c).
Rational absolute_norm(const Cyclotomic& c);

/// nu(c) = nu_2(Norm(c)) / phi(2^k) for c of 2-power conductor.
Valuation valuation(const Cyclotomic& c);

/// Integer coefficients a_i^u(chi) of the generalized decomposition column of
/// an element u of order 2^k, one row per character, i in [0, 2^{k-1}).
/// Indices outside that range follow a_{i+2^{k-1}} = -a_i.
struct CoeffColumns {
  int k = 1;
  std::vector<std::vector<long long>> a;

  long long half() const { return 1LL << (k - 1); }
  long long at(std::size_t row, long long i) const;
  std::size_t rows() const { return a.size(); }
};

/// d(u^g) = sum_s a_s zeta_{2^k}^{s g}, for odd g.
std::vector<Cyclotomic> galois_expand(const CoeffColumns& cols, long long gamma_exponent);

/// Columns d(u^g) for every odd residue g modulo 2^a (a >= k), i.e. a full
/// transversal of Gal(Q(zeta_{2^a})|Q).
struct GaloisFamily {
  int k = 1;
  int a = 1;
  std::map<long long, std::vector<Cyclotomic>> columns;
};

/// Inverse transform a_s = 2^{1-a} sum_g d(u^g) zeta_{2^k}^{-g s}.
CoeffColumns galois_coeffs(const GaloisFamily& family);

/// True iff sum_{i < 2^{k-1}} a_i(row) is odd (necessary for height zero).
bool parity_check_height_zero(const CoeffColumns& cols, std::size_t row);

}  // namespace blocklab
