#include "specht/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "specht/errors.hpp"
#include "specht/parse.hpp"

namespace specht {

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators, int ambient)
    : ambient_(ambient) {
  if (ambient < 0) throw DomainError("monomial ideal ambient must be >= 0");
  for (const auto& m : generators)
    if (m.ambient() != ambient)
      throw DomainError("monomial ideal generator ambient mismatch");
  // Sort by (degree, exponents) so divisors precede multiples, then sweep.
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a < b;
            });
  for (const auto& m : generators) {
    bool redundant = false;
    for (const auto& g : gens_)
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(m);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.ambient() != ambient_) throw DomainError("ambient mismatch");
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

std::vector<Polynomial> MonomialIdeal::to_polynomials(
    const Field& K, const MonomialOrder& order) const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& m : gens_)
    out.push_back(Polynomial::term(Scalar::one(K), m, order));
  return out;
}

// ---------------------------------------------------------------- reduction

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw DomainError("s_polynomial of a zero polynomial");
  const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.term_mul(f.leading_coefficient().inverse(),
                            L / f.leading_monomial());
  Polynomial b = g.term_mul(g.leading_coefficient().inverse(),
                            L / g.leading_monomial());
  return a - b;
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& G) {
  for (const auto& g : G) {
    if (g.is_zero()) throw DomainError("normal_form against a zero divisor");
    if (!(g.order() == f.order()))
      throw DomainError("normal_form divisors must share the order of f");
  }
  Polynomial p = f;
  std::vector<Polynomial::Term> rem;
  while (!p.is_zero()) {
    const auto& ts = p.terms();
    std::size_t k = 0;
    const Polynomial* red = nullptr;
    for (; k < ts.size(); ++k) {
      for (const auto& g : G)
        if (g.leading_monomial().divides(ts[k].mono)) {
          red = &g;
          break;
        }
      if (red) break;
    }
    if (!red) {
      rem.insert(rem.end(), ts.begin(), ts.end());
      break;
    }
    // Terms above the reducible one are already in normal form.
    rem.insert(rem.end(), ts.begin(), ts.begin() + static_cast<long>(k));
    Polynomial suffix = Polynomial::from_sorted_terms(
        {ts.begin() + static_cast<long>(k), ts.end()}, p.ambient(), p.field(),
        p.order());
    Scalar c = ts[k].coeff / red->leading_coefficient();
    Monomial m = ts[k].mono / red->leading_monomial();
    p = suffix - red->term_mul(c, m);
  }
  return Polynomial::from_sorted_terms(std::move(rem), f.ambient(), f.field(),
                                       f.order());
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct PairEntry {
  int lcm_degree;
  Monomial lcm;
  std::size_t i, j;  // i < j
};

// Normal strategy: smallest lcm degree, then lcm ascending, then indices.
struct PairLess {
  const MonomialOrder* order;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

void check_cap(const Polynomial& p, int cap) {
  if (p.degree() > cap) {
    std::ostringstream msg;
    msg << "degree cap " << cap << " exceeded (element of degree "
        << p.degree() << ")";
    throw DegreeCapError(msg.str());
  }
}

// Minimalize + tail-reduce + monic + sort descending: the reduced basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G,
                                     const MonomialOrder& order) {
  // Keep elements whose leading monomial no kept element's divides; scanning
  // by ascending leading monomial keeps divisors and drops multiples.
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> kept;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : kept)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  // Tail-reduce each element by the others; leading terms are untouched
  // because kept leading monomials form an antichain.
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.push_back(kept[b]);
    out.push_back(normal_form(kept[a], others).monic());
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.compare(a.leading_monomial(),
                                   b.leading_monomial()) > 0;
            });
  return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order, int degree_cap) {
  std::vector<Polynomial> G;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (f.order() == order)
      G.push_back(f.monic());
    else
      G.push_back(f.with_order(order).monic());
    check_cap(G.back(), degree_cap);
  }
  if (G.empty()) return GroebnerBasis({}, order, true);

  using Key = std::pair<std::size_t, std::size_t>;
  std::set<PairEntry, PairLess> queue{PairLess{&order}};
  std::set<Key> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial L = Monomial::lcm(G[i].leading_monomial(),
                               G[j].leading_monomial());
    int d = L.degree();
    queue.insert(PairEntry{d, std::move(L), i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    PairEntry e = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({e.i, e.j});

    const Monomial& mi = G[e.i].leading_monomial();
    const Monomial& mj = G[e.j].leading_monomial();
    if (mi.coprime(mj)) continue;
    // Chain criterion: some k divides the lcm and both companion pairs are
    // already handled.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == e.i || k == e.j) continue;
      if (!G[k].leading_monomial().divides(e.lcm)) continue;
      Key ik{std::min(e.i, k), std::max(e.i, k)};
      Key jk{std::min(e.j, k), std::max(e.j, k)};
      if (!pending.count(ik) && !pending.count(jk)) skip = true;
    }
    if (skip) continue;

    Polynomial r = normal_form(s_polynomial(G[e.i], G[e.j]), G);
    if (r.is_zero()) continue;
    check_cap(r, degree_cap);
    G.push_back(r.monic());
    std::size_t j = G.size() - 1;
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
  }

  return GroebnerBasis(reduce_basis(std::move(G), order), order, true);
}

GBCheck is_groebner_basis(const std::vector<Polynomial>& G,
                          const MonomialOrder& order) {
  std::vector<Polynomial> H;
  for (const auto& g : G) {
    if (g.is_zero()) throw DomainError("zero element in candidate basis");
    H.push_back(g.order() == order ? g : g.with_order(order));
  }
  for (std::size_t j = 1; j < H.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (H[i].leading_monomial().coprime(H[j].leading_monomial())) continue;
      Polynomial r = normal_form(s_polynomial(H[i], H[j]), H);
      if (!r.is_zero()) return GBCheck{false, i, j, std::move(r)};
    }
  return GBCheck{true, 0, 0, std::nullopt};
}

GroebnerBasis GroebnerBasis::certify(std::vector<Polynomial> elements,
                                     const MonomialOrder& order) {
  std::vector<Polynomial> H;
  for (const auto& g : elements) {
    if (g.is_zero()) throw DomainError("zero element in candidate basis");
    H.push_back((g.order() == order ? g : g.with_order(order)).monic());
  }
  GBCheck chk = is_groebner_basis(H, order);
  if (!chk.ok) {
    std::ostringstream msg;
    msg << "not a Groebner basis: S-pair (" << chk.i << ", " << chk.j
        << ") has nonzero normal form " << chk.remainder->str();
    throw DomainError(msg.str());
  }
  // Reduced iff monic (already ensured) and no element has a term divisible
  // by another element's leading monomial.
  bool reduced = true;
  for (std::size_t a = 0; a < H.size() && reduced; ++a)
    for (std::size_t b = 0; b < H.size() && reduced; ++b) {
      if (a == b) continue;
      for (const auto& t : H[a].terms())
        if (H[b].leading_monomial().divides(t.mono)) {
          reduced = false;
          break;
        }
    }
  return GroebnerBasis(std::move(H), order, reduced);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) {
  int ambient = G.order().ambient();
  return MonomialIdeal(G.leading_monomials(), ambient);
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(std::vector<Polynomial> generators, int ambient, const Field& K,
             const MonomialOrder& order)
    : ambient_(ambient), field_(K), order_(order) {
  if (order.ambient() != ambient) throw DomainError("order ambient mismatch");
  for (auto& f : generators) {
    if (f.is_zero()) continue;
    if (f.ambient() != ambient)
      throw DomainError("ideal generator ambient mismatch");
    if (!(f.field() == K))
      throw FieldMismatchError("ideal generator field mismatch");
    gens_.push_back(f.order() == order ? std::move(f) : f.with_order(order));
  }
}

const GroebnerBasis& Ideal::groebner(int degree_cap) const {
  if (!gb_)
    gb_ = std::make_shared<const GroebnerBasis>(
        buchberger(gens_, order_, degree_cap));
  return *gb_;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.ambient() != ambient_) throw DomainError("ambient mismatch");
  if (!(f.field() == field_)) throw FieldMismatchError("field mismatch");
  Polynomial g = f.order() == order_ ? f : f.with_order(order_);
  return normal_form(g, groebner().elements()).is_zero();
}

// ---------------------------------------------------------------- derived ops

Ideal intersect(const Ideal& I, const Ideal& J, int degree_cap) {
  if (I.ambient() != J.ambient()) throw DomainError("ambient mismatch");
  if (!(I.field() == J.field())) throw FieldMismatchError("field mismatch");
  const int n = I.ambient();
  if (I.is_zero()) return I;
  if (J.is_zero()) return J;

  // Auxiliary t = x_{n+1}, the largest variable of the extended lex order,
  // so basis elements free of t generate the elimination ideal.
  const MonomialOrder ext = MonomialOrder::default_lex(n + 1);
  const Field& K = I.field();
  Polynomial t = Polynomial::variable(n + 1, n + 1, K, ext);
  Polynomial one = Polynomial::constant(Scalar::one(K), n + 1, ext);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    gens.push_back(t * f.extended_to(n + 1, ext));
  for (const auto& g : J.generators())
    gens.push_back((one - t) * g.extended_to(n + 1, ext));

  GroebnerBasis gb = buchberger(gens, ext, degree_cap);
  std::vector<Polynomial> result;
  for (const auto& g : gb.elements()) {
    bool uses_t = false;
    for (const auto& term : g.terms())
      if (term.mono.exponent(n + 1) > 0) {
        uses_t = true;
        break;
      }
    if (!uses_t) result.push_back(g.restricted_to(n, I.order()));
  }
  // Soundness of the elimination: every generator lies in both inputs.
  for (const auto& g : result)
    if (!I.contains(g) || !J.contains(g))
      throw DomainError("intersection verification failed");
  return Ideal(std::move(result), n, K, I.order());
}

Ideal contract_to_subring(const Ideal& I, int keep, int degree_cap) {
  const int n = I.ambient();
  if (keep < 0 || keep > n)
    throw DomainError("contraction must keep an initial segment of variables");
  const MonomialOrder full = MonomialOrder::default_lex(n);
  const MonomialOrder sub = MonomialOrder::default_lex(keep);
  GroebnerBasis gb = (I.order() == full && I.has_cached_groebner())
                         ? I.groebner(degree_cap)
                         : buchberger(I.generators(), full, degree_cap);
  std::vector<Polynomial> result;
  for (const auto& g : gb.elements()) {
    bool inside = true;
    for (const auto& term : g.terms())
      for (int v = keep + 1; v <= n && inside; ++v)
        if (term.mono.exponent(v) > 0) inside = false;
    if (inside) result.push_back(g.restricted_to(keep, sub));
  }
  return Ideal(std::move(result), keep, I.field(), sub);
}

Ideal quotient_by_linear(const Ideal& I) {
  const int n = I.ambient();
  if (n < 1) throw DomainError("no variable to quotient by");
  const MonomialOrder sub = MonomialOrder::default_lex(n - 1);
  std::vector<Polynomial> result;
  for (const auto& f : I.generators()) {
    Polynomial g = f.substitute_zero(n);
    if (!g.is_zero()) result.push_back(g.restricted_to(n - 1, sub));
  }
  return Ideal(std::move(result), n - 1, I.field(), sub);
}

bool ideal_equal(const Ideal& I, const Ideal& J, int degree_cap) {
  if (I.ambient() != J.ambient() || !(I.field() == J.field())) return false;
  const GroebnerBasis& gi = I.groebner(degree_cap);
  const auto gj = (J.order() == I.order())
                      ? J.groebner(degree_cap).elements()
                      : buchberger(J.generators(), I.order(), degree_cap)
                            .elements();
  return gi.elements() == gj;
}

// ---------------------------------------------------------------- JSON

namespace {

std::string order_to_str(const MonomialOrder& order) { return order.str(); }

MonomialOrder order_from_str(const std::string& text, int ambient) {
  if (text.rfind("lex:", 0) != 0)
    throw ParseError("order must start with \"lex:\"", 0);
  std::vector<int> priority;
  std::size_t pos = 4;
  while (pos < text.size()) {
    if (text[pos] != 'x') throw ParseError("expected variable", pos);
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected variable index", pos);
    priority.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos < text.size()) {
      if (text[pos] != '>') throw ParseError("expected '>'", pos);
      ++pos;
    }
  }
  if (static_cast<int>(priority.size()) != ambient)
    throw ParseError("order lists wrong number of variables", 0);
  return MonomialOrder::lex(priority);
}

}  // namespace

std::string ideal_to_json_text(const Ideal& I) {
  nlohmann::json j;
  j["ambient"] = I.ambient();
  j["field"] = I.field().str();
  j["order"] = order_to_str(I.order());
  auto gens = nlohmann::json::array();
  for (const auto& f : I.generators()) gens.push_back(f.str());
  j["generators"] = gens;
  return j.dump();
}

Ideal ideal_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad ideal JSON: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("ambient") || !j.contains("generators"))
    throw ParseError("ideal JSON needs \"ambient\" and \"generators\"", 0);
  int n = j["ambient"].get<int>();
  if (n < 0) throw ParseError("ambient must be >= 0", 0);
  Field K = j.contains("field") ? Field::parse(j["field"].get<std::string>())
                                : Field::rationals();
  MonomialOrder order =
      j.contains("order")
          ? order_from_str(j["order"].get<std::string>(), n)
          : MonomialOrder::default_lex(n);
  std::vector<Polynomial> gens;
  for (const auto& s : j["generators"])
    gens.push_back(parse_polynomial(s.get<std::string>(), n, K, order));
  return Ideal(std::move(gens), n, K, order);
}

std::string gb_to_json_text(const GroebnerBasis& G, const Field& K) {
  nlohmann::json j;
  j["ambient"] = G.order().ambient();
  j["field"] = K.str();
  j["order"] = order_to_str(G.order());
  j["reduced"] = G.reduced();
  auto elems = nlohmann::json::array();
  auto lms = nlohmann::json::array();
  for (const auto& g : G.elements()) {
    elems.push_back(g.str());
    lms.push_back(g.leading_monomial().str());
  }
  j["elements"] = elems;
  j["leading_monomials"] = lms;
  return j.dump();
}

}  // namespace specht
