#include "specht/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "specht/errors.hpp"

namespace specht {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::one() { return ZPoly({mpz_class(1)}); }

ZPoly ZPoly::monomial(int k) {
  if (k < 0) throw DomainError("monomial exponent must be >= 0");
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return ZPoly(std::move(c));
}

const mpz_class& ZPoly::coeff(int i) const {
  static const mpz_class zero = 0;
  if (i < 0 || i > degree()) return zero;
  return c_[static_cast<std::size_t>(i)];
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return ZPoly(std::move(c));
}

mpz_class ZPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

ZPoly ZPoly::times_one_minus_t() const {
  if (is_zero()) return ZPoly();
  std::vector<mpz_class> c(c_.size() + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c[i] += c_[i];
    c[i + 1] -= c_[i];
  }
  return ZPoly(std::move(c));
}

ZPoly ZPoly::divided_by_one_minus_t() const {
  if (is_zero()) return ZPoly();
  if (at_one() != 0)
    throw DomainError("numerator is not divisible by (1-t)");
  // (1-t)q = c  =>  q_i = c_i + q_{i-1}; the top coefficient telescopes out.
  std::vector<mpz_class> q(c_.size() - 1, 0);
  mpz_class run = 0;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    run += c_[i];
    q[i] = run;
  }
  return ZPoly(std::move(q));
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const mpz_class& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    mpz_class mag = abs(v);
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? "-" : "+");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str();
      out << "t";
      if (i >= 2) out << "^" << i;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- HilbertSeries

HilbertSeries::HilbertSeries(ZPoly numerator, int denom_exponent)
    : num_(std::move(numerator)), e_(denom_exponent) {
  if (e_ < 0) throw DomainError("denominator exponent must be >= 0");
  if (num_.is_zero()) {
    e_ = 0;
    return;
  }
  while (e_ > 0 && num_.at_one() == 0) {
    num_ = num_.divided_by_one_minus_t();
    --e_;
  }
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  int e = std::max(e_, o.e_);
  ZPoly a = num_, b = o.num_;
  for (int i = e_; i < e; ++i) a = a.times_one_minus_t();
  for (int i = o.e_; i < e; ++i) b = b.times_one_minus_t();
  return HilbertSeries(a + b, e);
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  int e = std::max(e_, o.e_);
  ZPoly a = num_, b = o.num_;
  for (int i = e_; i < e; ++i) a = a.times_one_minus_t();
  for (int i = o.e_; i < e; ++i) b = b.times_one_minus_t();
  return HilbertSeries(a - b, e);
}

HilbertSeries HilbertSeries::shifted(int t_power, int extra_denom) const {
  if (t_power < 0 || extra_denom < 0)
    throw DomainError("shift parameters must be >= 0");
  return HilbertSeries(num_ * ZPoly::monomial(t_power), e_ + extra_denom);
}

std::vector<mpz_class> HilbertSeries::expand(int up_to) const {
  if (up_to < 0) throw DomainError("expansion bound must be >= 0");
  std::vector<mpz_class> h(static_cast<std::size_t>(up_to) + 1, 0);
  for (int k = 0; k <= up_to; ++k) {
    mpz_class s = 0;
    for (int i = 0; i <= std::min(k, num_.degree()); ++i) {
      if (e_ == 0) {
        if (i == k) s += num_.coeff(i);
        continue;
      }
      // [t^{k-i}] (1-t)^{-e} = C(k-i+e-1, e-1)
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(),
                   static_cast<unsigned long>(k - i + e_ - 1),
                   static_cast<unsigned long>(e_ - 1));
      s += num_.coeff(i) * bin;
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  return h;
}

std::string HilbertSeries::str() const {
  std::string num = num_.str();
  if (e_ == 0) return num;
  int printed_terms = 0;
  for (int i = 0; i <= num_.degree(); ++i)
    if (num_.coeff(i) != 0) ++printed_terms;
  std::ostringstream out;
  if (printed_terms > 1)
    out << "(" << num << ")";
  else
    out << num;
  out << "/(1-t)";
  if (e_ >= 2) out << "^" << e_;
  return out.str();
}

std::string HilbertSeries::json_text() const {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (int i = 0; i <= num_.degree(); ++i) {
    const mpz_class& v = num_.coeff(i);
    if (!v.fits_slong_p())
      throw DomainError("numerator coefficient exceeds JSON integer range");
    arr.push_back(static_cast<long>(v.get_si()));
  }
  j["numerator"] = arr;
  j["denom_exponent"] = e_;
  return j.dump();
}

HilbertSeries HilbertSeries::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad series JSON: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("numerator") ||
      !j.contains("denom_exponent"))
    throw ParseError("series JSON needs \"numerator\" and \"denom_exponent\"",
                     0);
  std::vector<mpz_class> c;
  for (const auto& v : j["numerator"]) c.emplace_back(v.get<long>());
  return HilbertSeries(ZPoly(std::move(c)), j["denom_exponent"].get<int>());
}

HilbertFunction hilbert_function(const HilbertSeries& s, int up_to) {
  HilbertFunction f;
  f.values = s.expand(up_to);
  f.dimension = s.denom_exponent();
  if (s.is_zero())
    f.stable_from = 0;
  else if (s.denom_exponent() == 0)
    f.stable_from = s.numerator().degree() + 1;
  else
    f.stable_from =
        std::max(0, s.numerator().degree() - s.denom_exponent() + 1);
  return f;
}

// ------------------------------------------------- monomial-ideal series

namespace {

using GensKey = std::vector<std::vector<int>>;

GensKey key_of(const MonomialIdeal& M) {
  GensKey k;
  k.reserve(M.generators().size());
  for (const auto& m : M.generators()) k.push_back(m.exponents());
  return k;
}

ZPoly numerator_rec(const MonomialIdeal& M, std::map<GensKey, ZPoly>& memo) {
  const auto& gens = M.generators();
  if (gens.empty()) return ZPoly::one();
  if (gens.front().degree() == 0) return ZPoly();

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    ZPoly p = ZPoly::one();
    for (const auto& g : gens)
      p = p * (ZPoly::one() - ZPoly::monomial(g.degree()));
    return p;
  }

  GensKey key = key_of(M);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // Pivot: the variable hitting the most generators (smallest index wins),
  // necessarily shared by at least two of them here.
  const int n = M.ambient();
  int best = 0, best_count = -1;
  for (int v = 1; v <= n; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exponent(v) > 0) ++count;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }

  std::vector<Monomial> plus = gens;
  plus.push_back(Monomial::variable(best, n));
  MonomialIdeal Mplus(std::move(plus), n);

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.exponent(best) > 0)
      colon.push_back(g / Monomial::variable(best, n));
    else
      colon.push_back(g);
  }
  MonomialIdeal Mcolon(std::move(colon), n);

  ZPoly result = numerator_rec(Mplus, memo) +
                 ZPoly::monomial(1) * numerator_rec(Mcolon, memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

HilbertSeries series_from_monomial_ideal(const MonomialIdeal& M) {
  std::map<GensKey, ZPoly> memo;
  return HilbertSeries(numerator_rec(M, memo), M.ambient());
}

HilbertSeries series_of_quotient(const Ideal& I, int degree_cap) {
  if (I.is_zero())
    return HilbertSeries(ZPoly::one(), I.ambient());
  return series_from_monomial_ideal(initial_ideal(I.groebner(degree_cap)));
}

// ------------------------------------------------------------ closed forms

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

}  // namespace

HilbertSeries closed_form_two_row(int n, int d) {
  if (d < 1 || n - d < d)
    throw DomainError("closed form needs n - d >= d >= 1");
  if (d == 1) return HilbertSeries(ZPoly::one(), 1);
  std::vector<mpz_class> h(static_cast<std::size_t>(d) + 1);
  h[0] = 1;
  for (int i = 1; i <= d - 1; ++i)
    h[static_cast<std::size_t>(i)] = binom(n - d + i - 1, i);
  h[static_cast<std::size_t>(d)] = binom(n - 1, d - 2);
  return HilbertSeries(ZPoly(std::move(h)), d);
}

HilbertSeries closed_form_hook(int d) {
  if (d < 1) throw DomainError("closed form needs d >= 1");
  std::vector<mpz_class> h(static_cast<std::size_t>(d) + 2);
  for (int i = 0; i <= d + 1; ++i)
    h[static_cast<std::size_t>(i)] = binom(d + i - 1, i);
  return HilbertSeries(ZPoly(std::move(h)), d + 1);
}

// ------------------------------------------------------------- identities

namespace {

HilbertSeries quotient_series_of_shape(const Partition& shape,
                                       SeriesMode mode) {
  if (mode == SeriesMode::Closed) {
    SpechtIdealSpec spec = SpechtIdealSpec::of(shape);
    if (spec.family == SpechtFamily::TwoRow)
      return closed_form_two_row(spec.n, spec.d);
    if (spec.family == SpechtFamily::HookTwoRow)
      return closed_form_hook(spec.d);
    throw FamilyError("no closed form for this shape");
  }
  Ideal I = specht_ideal(SpechtIdealSpec::of(shape), Field::rationals());
  return series_of_quotient(I);
}

}  // namespace

bool recursion_check_two_row(int n, int d, SeriesMode mode) {
  if (d < 2 || n - d <= d)
    throw DomainError("recursion needs n - d > d >= 2");
  HilbertSeries lhs = quotient_series_of_shape(Partition({n - d, d}), mode);
  HilbertSeries a = quotient_series_of_shape(Partition({n - 1 - d, d}), mode);
  HilbertSeries b =
      quotient_series_of_shape(Partition({n - d, d - 1}), mode);
  return lhs == a + b.shifted(1, 1);
}

bool recursion_check_square(int d, SeriesMode mode) {
  if (d < 2) throw DomainError("square recursion needs d >= 2");
  HilbertSeries lhs = quotient_series_of_shape(Partition({d, d}), mode);
  HilbertSeries a =
      (d == 2)
          ? quotient_series_of_shape(Partition({1, 1, 1}), mode)
          : quotient_series_of_shape(Partition({d - 1, d - 1, 1}), mode);
  HilbertSeries b = quotient_series_of_shape(Partition({d, d - 1}), mode);
  return lhs == a + b.shifted(1, 1);
}

bool ses_check_jdd(int d, int degree_cap) {
  if (d < 2) throw DomainError("exact-sequence check needs d >= 2");
  const Field Q = Field::rationals();
  const int n = 2 * d;
  const MonomialOrder order = MonomialOrder::default_lex(n);

  Ideal hook = specht_ideal(
      SpechtIdealSpec::of(Partition({d, d, 1})), Q);
  Ideal pi_hook = quotient_by_linear(hook);
  HilbertSeries A = series_of_quotient(pi_hook, degree_cap);

  Ideal Idd = specht_ideal(SpechtIdealSpec::of(Partition({d, d})), Q);
  HilbertSeries B = series_of_quotient(Idd, degree_cap);

  MonomialIdeal m = squarefree_monomial_ideal(n, d + 1);
  HilbertSeries C = series_from_monomial_ideal(m);

  std::vector<Polynomial> jg = Idd.generators();
  for (auto& p : m.to_polynomials(Q, order)) jg.push_back(std::move(p));
  Ideal J(std::move(jg), n, Q, order);
  HilbertSeries D = series_of_quotient(J, degree_cap);

  if (A + D != B + C) return false;

  // x_{2d+1} is regular on R/I^Sp_(d,d,1), so the full series is A/(1-t).
  HilbertSeries full = series_of_quotient(hook, degree_cap);
  return full == A.shifted(0, 1);
}

CharIndependenceReport char_independence_check(
    const std::function<Ideal(const Field&)>& builder,
    const std::vector<std::uint64_t>& primes, int degree_cap) {
  CharIndependenceReport rep;
  rep.rational = series_of_quotient(builder(Field::rationals()), degree_cap);
  for (std::uint64_t p : primes) {
    HilbertSeries s =
        series_of_quotient(builder(Field::prime_field(p)), degree_cap);
    bool match = (s == rep.rational);
    rep.prime_matches.emplace_back(p, match);
    if (!match) rep.ok = false;
  }
  return rep;
}

int regularity_cm(const HilbertSeries& s) {
  if (s.is_zero()) throw DomainError("regularity of the zero series");
  return s.numerator().degree();
}

}  // namespace specht
