#include "specht/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "specht/errors.hpp"

namespace specht {

namespace {

// Strict descending comparator wrapping a MonomialOrder.
struct DescByOrder {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(int ambient, Field K, MonomialOrder order)
    : ambient_(ambient), field_(std::move(K)), order_(std::move(order)) {
  if (ambient < 0) throw DomainError("polynomial ambient must be >= 0");
  if (order_.ambient() != ambient_)
    throw DomainError("monomial order ambient mismatch");
}

Polynomial Polynomial::zero(int ambient, const Field& K,
                            const MonomialOrder& order) {
  return Polynomial(ambient, K, order);
}

Polynomial Polynomial::constant(const Scalar& c, int ambient,
                                const MonomialOrder& order) {
  Polynomial p(ambient, c.field(), order);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(ambient), c});
  return p;
}

Polynomial Polynomial::term(const Scalar& c, const Monomial& m,
                            const MonomialOrder& order) {
  Polynomial p(m.ambient(), c.field(), order);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(int i, int ambient, const Field& K,
                                const MonomialOrder& order) {
  Polynomial p(ambient, K, order);
  p.terms_.push_back({Monomial::variable(i, ambient), Scalar::one(K)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, int ambient,
                                  const Field& K, const MonomialOrder& order) {
  Polynomial p(ambient, K, order);
  std::map<Monomial, Scalar, DescByOrder> acc{DescByOrder{&p.order_}};
  for (auto& t : terms) {
    if (t.mono.ambient() != ambient)
      throw DomainError("term ambient mismatch");
    if (!(t.coeff.field() == K)) throw FieldMismatchError("term field mismatch");
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(t.mono, t.coeff);
    else
      it->second = it->second + t.coeff;
  }
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms, int ambient,
                                         const Field& K,
                                         const MonomialOrder& order) {
  Polynomial p(ambient, K, order);
  p.terms_ = std::move(terms);
  return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ambient_ != o.ambient_) throw DomainError("polynomial ambient mismatch");
  if (!(field_ == o.field_)) throw FieldMismatchError("polynomial field mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  const Polynomial& g = (order_ == o.order_) ? o : o.with_order(order_);
  Polynomial r(ambient_, field_, order_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = order_.compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + g.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  const Polynomial& g = (order_ == o.order_) ? o : o.with_order(order_);
  Polynomial r(ambient_, field_, order_);
  if (terms_.empty() || g.terms_.empty()) return r;
  // Accumulate into an order-keyed map; multiplying the smaller side out.
  std::map<Monomial, Scalar, DescByOrder> acc{DescByOrder{&r.order_}};
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      Monomial m = a.mono * b.mono;
      Scalar c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = it->second + c;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scalar_mul(const Scalar& c) const {
  if (!(c.field() == field_)) throw FieldMismatchError("scalar field mismatch");
  Polynomial r(ambient_, field_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::term_mul(const Scalar& c, const Monomial& m) const {
  if (!(c.field() == field_)) throw FieldMismatchError("scalar field mismatch");
  if (m.ambient() != ambient_) throw DomainError("monomial ambient mismatch");
  Polynomial r(ambient_, field_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a fixed monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scalar_mul(terms_.front().coeff.inverse());
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != ambient_)
    throw DomainError("evaluation point has wrong arity");
  for (const auto& v : point)
    if (!(v.field() == field_))
      throw FieldMismatchError("evaluation point field mismatch");
  Scalar total = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar prod = t.coeff;
    for (int i = 1; i <= ambient_; ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      Scalar base = point[static_cast<std::size_t>(i - 1)];
      Scalar pw = base;
      for (int k = 1; k < e; ++k) pw = pw * base;
      prod = prod * pw;
    }
    total = total + prod;
  }
  return total;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order.ambient() != ambient_)
    throw DomainError("monomial order ambient mismatch");
  Polynomial r(ambient_, field_, order);
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&order](const Term& a, const Term& b) {
              return order.compare(a.mono, b.mono) > 0;
            });
  return r;
}

Polynomial Polynomial::extended_to(int ambient, const MonomialOrder& order) const {
  if (ambient < ambient_) throw DomainError("extended_to shrinks ambient");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e = t.mono.exponents();
    e.resize(static_cast<std::size_t>(ambient), 0);
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return from_terms(std::move(ts), ambient, field_, order);
}

Polynomial Polynomial::restricted_to(int ambient, const MonomialOrder& order) const {
  if (ambient > ambient_) throw DomainError("restricted_to grows ambient");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e = t.mono.exponents();
    for (int i = ambient; i < ambient_; ++i)
      if (e[static_cast<std::size_t>(i)] != 0)
        throw DomainError("restricted_to: term uses a dropped variable");
    e.resize(static_cast<std::size_t>(ambient));
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return from_terms(std::move(ts), ambient, field_, order);
}

Polynomial Polynomial::substitute_zero(int i) const {
  if (i < 1 || i > ambient_) throw DomainError("variable index out of range");
  Polynomial r(ambient_, field_, order_);
  for (const auto& t : terms_)
    if (t.mono.exponent(i) == 0) r.terms_.push_back(t);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ambient_ != o.ambient_ || !(field_ == o.field_)) return false;
  const Polynomial& g = (order_ == o.order_) ? o : o.with_order(order_);
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].mono != g.terms_[k].mono ||
        !(terms_[k].coeff == g.terms_[k].coeff))
      return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.str();
    bool neg = !c.empty() && c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (t.mono.degree() == 0) {
      out << mag;
    } else if (mag == "1") {
      out << t.mono.str();
    } else {
      out << mag << "*" << t.mono.str();
    }
  }
  return out.str();
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial negate(const Polynomial& f) { return -f; }
Polynomial scalar_mul(const Scalar& c, const Polynomial& f) {
  return f.scalar_mul(c);
}
std::pair<Monomial, Scalar> leading_term(const Polynomial& f) {
  const auto& t = f.leading_term();
  return {t.mono, t.coeff};
}
Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point) {
  return f.evaluate(point);
}

}  // namespace specht
