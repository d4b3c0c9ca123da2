#include "specht/specht.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "specht/errors.hpp"

namespace specht {

std::string family_name(SpechtFamily f) {
  switch (f) {
    case SpechtFamily::TwoRow: return "two-row";
    case SpechtFamily::HookTwoRow: return "hook-two-row";
    case SpechtFamily::ColumnHook: return "column-hook";
    case SpechtFamily::General: return "general";
  }
  return "general";
}

SpechtIdealSpec SpechtIdealSpec::of(const Partition& lambda) {
  const auto& p = lambda.parts();
  const int h = lambda.height();
  if (h == 1) return {lambda, lambda.n(), SpechtFamily::TwoRow, 0};
  if (h == 2) return {lambda, lambda.n(), SpechtFamily::TwoRow, p[1]};
  if (h == 3 && p[0] == p[1] && p[2] == 1)
    return {lambda, lambda.n(), SpechtFamily::HookTwoRow, p[0]};
  bool hook = true;
  for (int i = 1; i < h; ++i)
    if (p[static_cast<std::size_t>(i)] != 1) hook = false;
  if (hook) return {lambda, lambda.n(), SpechtFamily::ColumnHook, h - 1};
  return {lambda, lambda.n(), SpechtFamily::General, 0};
}

Polynomial specht_polynomial(const YoungTableau& T, int ambient,
                             const Field& K, const MonomialOrder& order) {
  if (!T.letters().empty() && T.letters().back() > ambient)
    throw DomainError("tableau letter exceeds the ambient");
  Polynomial f = Polynomial::constant(Scalar::one(K), ambient, order);
  for (int j = 1; j <= T.shape().part(1); ++j) {
    std::vector<int> col = T.column_entries(j);
    for (std::size_t s = 0; s + 1 < col.size(); ++s)
      for (std::size_t t = s + 1; t < col.size(); ++t) {
        Polynomial diff =
            Polynomial::variable(col[s], ambient, K, order) -
            Polynomial::variable(col[t], ambient, K, order);
        f = f * diff;
      }
  }
  return f;
}

Polynomial specht_polynomial(const YoungTableau& T) {
  int ambient = T.letters().back();
  return specht_polynomial(T, ambient, Field::rationals(),
                           MonomialOrder::default_lex(ambient));
}

Ideal specht_ideal(const SpechtIdealSpec& spec, const Field& K) {
  const int n = spec.n;
  const MonomialOrder order = MonomialOrder::default_lex(n);
  std::vector<Polynomial> gens;
  for (const auto& T : enumerate_standard_tableaux(spec.lambda))
    gens.push_back(specht_polynomial(T, n, K, order));
  return Ideal(std::move(gens), n, K, order);
}

YoungTableau column_normalized(const YoungTableau& T) {
  std::vector<std::vector<int>> rows = T.rows();
  for (int j = 1; j <= T.shape().part(1); ++j) {
    std::vector<int> col;
    for (const auto& row : rows)
      if (static_cast<int>(row.size()) >= j)
        col.push_back(row[static_cast<std::size_t>(j - 1)]);
    std::sort(col.begin(), col.end());
    for (std::size_t r = 0; r < col.size(); ++r)
      rows[r][static_cast<std::size_t>(j - 1)] = col[r];
  }
  return YoungTableau(std::move(rows));
}

Monomial initial_monomial_two_row(const YoungTableau& T, int ambient) {
  if (T.shape().height() > 2)
    throw ShapeError("initial monomial needs a two-row shape");
  if (!T.letters().empty() && T.letters().back() > ambient)
    throw DomainError("tableau letter exceeds the ambient");
  Monomial m = Monomial::one(ambient);
  if (T.shape().height() == 2) {
    for (int j = 1; j <= T.shape().part(2); ++j) {
      int top = T.entry(1, j), bottom = T.entry(2, j);
      if (top >= bottom)
        throw DomainError("tableau is not column-normalized");
      m = m * Monomial::variable(bottom, ambient);
    }
  }
  return m;
}

Polynomial trimmed_form(const Polynomial& f, int d) {
  if (d < 0) throw DomainError("trim bound must be >= 0");
  std::vector<Polynomial::Term> kept;
  for (const auto& t : f.terms())
    if (t.mono.support_size() <= d) kept.push_back(t);
  return Polynomial::from_sorted_terms(std::move(kept), f.ambient(),
                                       f.field(), f.order());
}

namespace {

// All k-subsets of [1..n], lexicographically ascending.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int v = next; v <= n - need + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

MonomialIdeal squarefree_monomial_ideal(int n, int k) {
  if (k < 1 || k > n)
    throw DomainError("squarefree degree must satisfy 1 <= k <= n");
  std::vector<Monomial> gens;
  for (const auto& F : subsets_of_size(n, k)) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int v : F) e[static_cast<std::size_t>(v - 1)] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(gens), n);
}

std::vector<Polynomial> structured_groebner_set(int d, const Field& K,
                                                bool syt_only) {
  if (d < 2) throw DomainError("structured basis needs d >= 2");
  const int n = 2 * d;
  const MonomialOrder order = MonomialOrder::default_lex(n);
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  auto add = [&](Polynomial p) {
    if (p.is_zero()) return;
    if (seen.insert(p.str()).second) out.push_back(std::move(p));
  };

  for (int c = 0; c <= d; ++c) {
    for (const auto& F : subsets_of_size(n, c)) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int v : F) e[static_cast<std::size_t>(v - 1)] = 2;
      Monomial sq{std::move(e)};
      std::vector<int> letters;
      for (int v = 1; v <= n; ++v)
        if (!std::binary_search(F.begin(), F.end(), v)) letters.push_back(v);
      if (c == d) {
        // Shape (d, 0): the tableau is a single row and f = 1.
        add(Polynomial::term(Scalar::one(K), sq, order));
        continue;
      }
      Partition shape({d, d - c});
      std::vector<YoungTableau> tabs;
      if (syt_only) {
        tabs = enumerate_standard_tableaux(shape, letters);
      } else {
        std::set<std::string> reps;
        for (const auto& T : enumerate_all_tableaux(shape, letters)) {
          YoungTableau N = column_normalized(T);
          if (reps.insert(N.json_text()).second) tabs.push_back(N);
        }
      }
      for (const auto& T : tabs)
        add(specht_polynomial(T, n, K, order).term_mul(Scalar::one(K), sq));
    }
  }
  for (auto& p : squarefree_monomial_ideal(n, d + 1).to_polynomials(K, order))
    add(std::move(p));
  return out;
}

Ideal prime_component(const std::vector<int>& F, int n, const Field& K) {
  if (F.empty()) throw DomainError("prime component needs a nonempty subset");
  std::vector<int> S = F;
  std::sort(S.begin(), S.end());
  if (std::unique(S.begin(), S.end()) != S.end())
    throw DomainError("prime component subset has repeats");
  if (S.front() < 1 || S.back() > n)
    throw DomainError("prime component subset out of range");
  const MonomialOrder order = MonomialOrder::default_lex(n);
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i < S.size(); ++i)
    gens.push_back(Polynomial::variable(S[i], n, K, order) -
                   Polynomial::variable(S[0], n, K, order));
  return Ideal(std::move(gens), n, K, order);
}

std::vector<std::vector<int>> radical_component_sets(
    const SpechtIdealSpec& spec) {
  int k;
  if (spec.family == SpechtFamily::TwoRow)
    k = spec.n - spec.d + 1;
  else if (spec.family == SpechtFamily::HookTwoRow)
    k = spec.d + 1;
  else
    throw FamilyError("radical decomposition covers two-row and (d,d,1) only");
  return subsets_of_size(spec.n, k);
}

std::vector<Ideal> radical_decomposition(const SpechtIdealSpec& spec,
                                         const Field& K) {
  std::vector<Ideal> out;
  for (const auto& F : radical_component_sets(spec))
    out.push_back(prime_component(F, spec.n, K));
  return out;
}

VanishingReport vanishing_check(const SpechtIdealSpec& spec, int trials,
                                std::uint64_t seed) {
  int k;
  if (spec.family == SpechtFamily::TwoRow)
    k = spec.n - spec.d + 1;
  else if (spec.family == SpechtFamily::HookTwoRow)
    k = spec.d + 1;
  else
    throw FamilyError("vanishing pattern covers two-row and (d,d,1) only");
  if (k > spec.n) throw DomainError("no vanishing pattern for this shape");
  if (trials < 1) throw DomainError("trials must be >= 1");

  const std::uint64_t p = 2147483647;  // 2^31 - 1
  const Field Fp = Field::prime_field(p);
  const Ideal I = specht_ideal(spec, Fp);
  const int n = spec.n;

  std::mt19937_64 rng(seed);
  // r() % m keeps runs byte-identical across platforms; the bias at
  // m ~ 2^31 is ~2^-33 and irrelevant here.
  auto residue = [&]() { return Scalar::of_residue(rng() % p, p); };

  VanishingReport rep;
  rep.trials = trials;
  rep.prime = p;
  rep.pattern_size = k;

  for (int trial = 0; trial < trials; ++trial) {
    // Random k-subset: partial Fisher-Yates over [1..n].
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
      std::size_t j = static_cast<std::size_t>(i) +
                      static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    std::vector<bool> in_F(static_cast<std::size_t>(n + 1), false);
    for (int i = 0; i < k; ++i) in_F[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = true;

    Scalar common = residue();
    std::vector<Scalar> point;
    point.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
      point.push_back(in_F[static_cast<std::size_t>(v)] ? common : residue());
    for (const auto& g : I.generators())
      if (!g.evaluate(point).is_zero()) {
        ++rep.vanish_failures;
        break;
      }

    std::vector<Scalar> generic;
    generic.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) generic.push_back(residue());
    bool some_nonzero = false;
    for (const auto& g : I.generators())
      if (!g.evaluate(generic).is_zero()) {
        some_nonzero = true;
        break;
      }
    if (!some_nonzero) ++rep.control_failures;
  }
  return rep;
}

SytBasisReport syt_basis_rank(const Partition& lambda) {
  SytBasisReport rep;
  rep.expected = count_syt_hook(lambda);
  const int n = lambda.n();
  const Field Q = Field::rationals();
  const MonomialOrder order = MonomialOrder::default_lex(n);

  std::vector<Polynomial> polys;
  std::set<std::string> initials;
  for (const auto& T : enumerate_standard_tableaux(lambda))
    polys.push_back(specht_polynomial(T, n, Q, order));
  for (const auto& f : polys) initials.insert(f.leading_monomial().str());
  rep.initials_distinct = initials.size() == polys.size();

  // Coefficient matrix over Q, rows = tableaux, columns = monomials.
  std::map<Monomial, std::size_t> col_of;
  for (const auto& f : polys)
    for (const auto& t : f.terms())
      col_of.emplace(t.mono, col_of.size());
  std::vector<std::vector<mpq_class>> M(
      polys.size(), std::vector<mpq_class>(col_of.size(), 0));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms())
      M[r][col_of[t.mono]] = t.coeff.rational_value();

  // Plain Gaussian elimination; exact arithmetic, so rank is exact.
  std::size_t rank = 0;
  std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[rank], M[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      mpq_class factor = M[r][c] / M[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        M[r][cc] -= factor * M[rank][cc];
    }
    ++rank;
  }
  rep.rank = static_cast<long>(rank);
  return rep;
}

}  // namespace specht
