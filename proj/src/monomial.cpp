#include "specht/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace specht {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  degree_ = 0;
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::one(int ambient) {
  return Monomial(std::vector<int>(ambient, 0));
}

Monomial Monomial::variable(int i, int ambient) {
  if (i < 1 || i > ambient)
    throw DomainError("variable index " + std::to_string(i) +
                      " out of range for ambient " + std::to_string(ambient));
  std::vector<int> e(ambient, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

int Monomial::exponent(int i) const {
  if (i < 1 || i > ambient())
    throw DomainError("variable index out of range");
  return exps_[i - 1];
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (ambient() != o.ambient())
    throw DomainError("monomial product across different ambients");
  std::vector<int> e(exps_);
  for (int i = 0; i < ambient(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (ambient() != o.ambient()) return false;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw DomainError("inexact monomial division");
  std::vector<int> e(exps_);
  for (int i = 0; i < ambient(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient())
    throw DomainError("monomial lcm across different ambients");
  std::vector<int> e(a.exps_);
  for (int i = 0; i < a.ambient(); ++i) e[i] = std::max(e[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  if (ambient() != o.ambient()) return false;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > 0) s.push_back(i + 1);
  return s;
}

int Monomial::support_size() const {
  int c = 0;
  for (int e : exps_)
    if (e > 0) ++c;
  return c;
}

bool Monomial::is_squarefree() const {
  for (int e : exps_)
    if (e > 1) return false;
  return true;
}

std::vector<int> Monomial::deep_support() const {
  std::vector<int> s;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] >= 2) s.push_back(i + 1);
  return s;
}

std::string Monomial::str() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (int i = 0; i < ambient(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

MonomialOrder MonomialOrder::default_lex(int ambient) {
  if (ambient < 1) throw DomainError("ambient must be positive");
  std::vector<int> p(ambient);
  for (int i = 0; i < ambient; ++i) p[i] = ambient - i;
  return MonomialOrder(std::move(p));
}

MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
  const int n = static_cast<int>(priority.size());
  if (n < 1) throw DomainError("empty variable priority");
  std::vector<bool> seen(n, false);
  for (int v : priority) {
    if (v < 1 || v > n || seen[v - 1])
      throw DomainError("variable priority must be a permutation of 1..n");
    seen[v - 1] = true;
  }
  return MonomialOrder(std::move(priority));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.ambient() != ambient() || b.ambient() != ambient())
    throw DomainError("monomial/order ambient mismatch");
  for (int v : priority_) {
    const int ea = a.exponents()[v - 1];
    const int eb = b.exponents()[v - 1];
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::str() const {
  std::string out = "lex:";
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i > 0) out += ">";
    out += "x" + std::to_string(priority_[i]);
  }
  return out;
}

}  // namespace specht
