#include "specht/field.hpp"

namespace specht {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Residue inverse by extended Euclid; pre: 0 < a < p, p prime.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses decide primality for all n < 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31))
    throw DomainError("prime field characteristic must be < 2^31, got " +
                      std::to_string(p));
  if (!is_prime_u64(p))
    throw DomainError("field characteristic must be prime, got " +
                      std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a prime after \"fp:\"", 3);
    return prime_field(std::stoull(digits));
  }
  throw ParseError("field must be \"q\" or \"fp:<prime>\", got \"" + text +
                       "\"",
                   0);
}

std::string Field::str() const {
  return char_ == 0 ? "q" : "fp:" + std::to_string(char_);
}

Scalar Scalar::of_int(long v, const Field& K) {
  if (K.is_rationals()) return Scalar(mpq_class(v));
  const std::uint64_t p = K.characteristic();
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::of_integer(const mpz_class& v, const Field& K) {
  if (K.is_rationals()) return Scalar(mpq_class(v));
  const std::uint64_t p = K.characteristic();
  mpz_class r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(r.get_ui()), p});
}

Scalar Scalar::of_rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::of_residue(std::uint64_t v, std::uint64_t p) {
  Field K = Field::prime_field(p);
  return Scalar(Residue{v % p, K.characteristic()});
}

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(rep_)) return Field::rationals();
  return Field(std::get<Residue>(rep_).p);
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 0;
  return std::get<Residue>(rep_).v == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  return std::get<Residue>(rep_).v == 1;
}

const Scalar::Residue& Scalar::check_same_prime(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if (a == nullptr || b == nullptr || a->p != b->p)
    throw FieldMismatchError("scalar arithmetic across different fields (" +
                             field().str() + " vs " + o.field().str() + ")");
  return *b;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_))
    return Scalar(mpq_class(-*q));
  const Residue& r = std::get<Residue>(rep_);
  return Scalar(Residue{r.v == 0 ? 0 : r.p - r.v, r.p});
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* oq = std::get_if<mpq_class>(&o.rep_);
    if (oq == nullptr) check_same_prime(o);
    return Scalar(mpq_class(*q + *oq));
  }
  const Residue& b = check_same_prime(o);
  const Residue& a = std::get<Residue>(rep_);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return Scalar(Residue{s, a.p});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* oq = std::get_if<mpq_class>(&o.rep_);
    if (oq == nullptr) check_same_prime(o);
    return Scalar(mpq_class(*q * *oq));
  }
  const Residue& b = check_same_prime(o);
  const Residue& a = std::get<Residue>(rep_);
  return Scalar(Residue{a.v * b.v % a.p, a.p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&rep_))
    return Scalar(mpq_class(1 / *q));
  const Residue& r = std::get<Residue>(rep_);
  return Scalar(Residue{invmod(r.v, r.p), r.p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* oq = std::get_if<mpq_class>(&o.rep_);
    return oq != nullptr && *q == *oq;
  }
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  return b != nullptr && a->p == b->p && a->v == b->v;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  return std::to_string(std::get<Residue>(rep_).v);
}

const mpq_class& Scalar::rational_value() const {
  const auto* q = std::get_if<mpq_class>(&rep_);
  if (q == nullptr) throw DomainError("not a rational scalar");
  return *q;
}

std::uint64_t Scalar::residue_value() const {
  const auto* r = std::get_if<Residue>(&rep_);
  if (r == nullptr) throw DomainError("not a prime-field scalar");
  return r->v;
}

}  // namespace specht
