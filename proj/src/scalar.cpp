#include "preproj/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace preproj {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_factors(const mpz_class& n) {
  std::vector<unsigned> out;
  mpz_class m = abs(n);
  for (unsigned d = 2; m > 1; ++d) {
    if (mpz_class(d) * d > m) {
      if (!m.fits_uint_p()) throw DomainError("prime_factors: cofactor too large");
      out.push_back(static_cast<unsigned>(m.get_ui()));
      break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) m /= d;
    }
  }
  return out;
}

namespace {

bool only_primes_in(const mpz_class& n, const std::vector<unsigned>& primes) {
  mpz_class m = abs(n);
  for (unsigned p : primes)
    while (m > 1 && mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
  return m == 1;
}

std::vector<unsigned> normalized_primes(std::vector<unsigned> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) throw DomainError("localized integers need a nonempty prime set");
  for (unsigned p : primes)
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  return primes;
}

}  // namespace

RationalDomain RationalDomain::integers() {
  RationalDomain d;
  d.kind_ = Kind::Integers;
  return d;
}

RationalDomain RationalDomain::localized(std::vector<unsigned> primes) {
  RationalDomain d;
  d.kind_ = Kind::Localized;
  d.primes_ = normalized_primes(std::move(primes));
  return d;
}

RationalDomain::Scalar RationalDomain::from_rational(const mpq_class& q) const {
  if (!contains(q)) throw DomainError(q.get_str() + " is not an element of " + name());
  return q;
}

RationalDomain::Scalar RationalDomain::inverse(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  Scalar r = 1 / a;
  if (!contains(r)) throw DomainError(a.get_str() + " is not a unit in " + name());
  return r;
}

bool RationalDomain::contains(const Scalar& s) const {
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Integers: return s.get_den() == 1;
    case Kind::Localized: return only_primes_in(s.get_den(), primes_);
  }
  return false;
}

bool RationalDomain::is_unit(const Scalar& s) const {
  if (is_zero(s)) return false;
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Integers: return s == 1 || s == -1;
    case Kind::Localized:
      return only_primes_in(s.get_num(), primes_) && only_primes_in(s.get_den(), primes_);
  }
  return false;
}

std::string RationalDomain::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::Localized: {
      std::ostringstream os;
      os << "Z[";
      for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << "1/" << primes_[i];
      os << "]";
      return os.str();
    }
  }
  return "?";
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) throw DomainError("invalid prime field modulus " + std::to_string(p));
}

PrimeField::Scalar PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  return static_cast<Scalar>(r < 0 ? r + p_ : r);
}

PrimeField::Scalar PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0)
    throw DomainError(q.get_str() + " has a denominator divisible by " + std::to_string(p_));
  if (num < 0) num += p_;
  return mul(static_cast<Scalar>(num.get_ui()), inverse(static_cast<Scalar>(den.get_ui())));
}

PrimeField::Scalar PrimeField::inverse(Scalar a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Scalar>(t);
}

ScalarDomain ScalarDomain::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  return {Kind::PrimeField, p, {}};
}

ScalarDomain ScalarDomain::localized(std::vector<unsigned> primes) {
  return {Kind::Localized, 0, normalized_primes(std::move(primes))};
}

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("cannot parse domain '" + std::string(whole) + "'");
  return v;
}

}  // namespace

ScalarDomain ScalarDomain::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Z" || text == "ZZ") return integers();
  if (text.starts_with("Fp:")) return prime_field(parse_unsigned(text.substr(3), text));
  if (text.starts_with("F") && text.size() > 1) return prime_field(parse_unsigned(text.substr(1), text));
  if (text.starts_with("Z[") && text.ends_with("]")) {
    std::vector<unsigned> primes;
    std::string_view body = text.substr(2, text.size() - 3);
    while (!body.empty()) {
      auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      if (!item.starts_with("1/")) throw DomainError("cannot parse domain '" + std::string(text) + "'");
      primes.push_back(parse_unsigned(item.substr(2), text));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return localized(std::move(primes));
  }
  throw DomainError("unknown domain '" + std::string(text) + "'");
}

RationalDomain ScalarDomain::rational_domain() const {
  switch (kind) {
    case Kind::Rationals: return RationalDomain::rationals();
    case Kind::Integers: return RationalDomain::integers();
    case Kind::Localized: return RationalDomain::localized(primes);
    case Kind::PrimeField: break;
  }
  throw DomainError("prime field has no rational domain");
}

std::string ScalarDomain::name() const {
  if (kind == Kind::PrimeField) return "F" + std::to_string(modulus);
  return rational_domain().name();
}

}  // namespace preproj
