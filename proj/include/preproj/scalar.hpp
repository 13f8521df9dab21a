#pragma once

// Exact coefficient domains. Every domain exposes the same small policy
// interface (Scalar, zero/one, in-place arithmetic, unit test, formatting)
// so that polynomial and Groebner code can be instantiated once per domain.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace preproj {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Sorted distinct prime factors of |n|.
std::vector<unsigned> prime_factors(const mpz_class& n);

/// Rationals, Integers, and Z[1/S] all share exact rational arithmetic.
/// Integers and the localization only differ in which values they contain
/// and which values are units.
class RationalDomain {
 public:
  using Scalar = mpq_class;
  enum class Kind { Rationals, Integers, Localized };

  RationalDomain() = default;
  static RationalDomain rationals() { return RationalDomain{}; }
  static RationalDomain integers();
  static RationalDomain localized(std::vector<unsigned> primes);

  Kind kind() const { return kind_; }
  const std::vector<unsigned>& primes() const { return primes_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return Scalar(v); }
  /// Throws DomainError when q is not an element of this domain.
  Scalar from_rational(const mpq_class& q) const;
  mpq_class to_rational(const Scalar& s) const { return s; }

  static bool is_zero(const Scalar& s) { return sgn(s) == 0; }
  static bool is_one(const Scalar& s) { return s == 1; }
  static void add_to(Scalar& acc, const Scalar& a) { acc += a; }
  static void sub_from(Scalar& acc, const Scalar& a) { acc -= a; }
  static void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) { acc -= a * b; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar neg(const Scalar& a) { return -a; }
  Scalar inverse(const Scalar& a) const;

  bool contains(const Scalar& s) const;
  bool is_unit(const Scalar& s) const;

  std::string format(const Scalar& s) const { return s.get_str(); }
  std::string name() const;

  bool operator==(const RationalDomain& o) const {
    return kind_ == o.kind_ && primes_ == o.primes_;
  }

 private:
  Kind kind_ = Kind::Rationals;
  std::vector<unsigned> primes_;
};

/// Z/p for a prime p < 2^31; residues are kept canonical in [0, p).
class PrimeField {
 public:
  using Scalar = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  mpq_class to_rational(const Scalar& s) const { return mpq_class(s); }

  static bool is_zero(Scalar s) { return s == 0; }
  static bool is_one(Scalar s) { return s == 1; }
  void add_to(Scalar& acc, Scalar a) const {
    std::uint64_t t = std::uint64_t(acc) + a;
    acc = Scalar(t >= p_ ? t - p_ : t);
  }
  void sub_from(Scalar& acc, Scalar a) const { acc = acc >= a ? acc - a : acc + (p_ - a); }
  void sub_mul(Scalar& acc, Scalar a, Scalar b) const { sub_from(acc, mul(a, b)); }
  Scalar mul(Scalar a, Scalar b) const { return Scalar(std::uint64_t(a) * b % p_); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar inverse(Scalar a) const;

  bool contains(Scalar) const { return true; }
  bool is_unit(Scalar s) const { return s != 0; }

  std::string format(Scalar s) const { return std::to_string(s); }
  std::string name() const { return "F" + std::to_string(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// Runtime description of a coefficient domain, as selected on the command
/// line (`Q`, `Z`, `Fp:<p>` / `F<p>`, `Z[1/2,1/3]`).
struct ScalarDomain {
  enum class Kind { Rationals, PrimeField, Integers, Localized };
  Kind kind = Kind::Rationals;
  std::uint32_t modulus = 0;
  std::vector<unsigned> primes;

  static ScalarDomain rationals() { return {}; }
  static ScalarDomain integers() { return {Kind::Integers, 0, {}}; }
  static ScalarDomain prime_field(std::uint32_t p);
  static ScalarDomain localized(std::vector<unsigned> primes);
  static ScalarDomain parse(std::string_view text);

  bool is_field() const { return kind == Kind::Rationals || kind == Kind::PrimeField; }
  RationalDomain rational_domain() const;
  PrimeField prime_field() const { return PrimeField(modulus); }
  std::string name() const;

  bool operator==(const ScalarDomain&) const = default;
};

/// Calls f with the concrete domain policy object for d.
template <class F>
decltype(auto) visit_domain(const ScalarDomain& d, F&& f) {
  if (d.kind == ScalarDomain::Kind::PrimeField) return f(d.prime_field());
  return f(d.rational_domain());
}

}  // namespace preproj
