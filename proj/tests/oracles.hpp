#pragma once

// Test-side oracles. Each one recomputes a quantity the library derives
// through its main algorithms, by a deliberately different route: brute
// force, direct counting, or dense linear algebra. Keep them dumb.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "specht/partition.hpp"
#include "specht/polynomial.hpp"

namespace oracles {

/// p(n) by the coin-change recurrence.
inline long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int s = k; s <= n; ++s)
      p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - k)];
  return p[static_cast<std::size_t>(n)];
}

/// Number of standard tableaux by filtering all n! fillings, with the
/// row/column checks written out directly.
inline long syt_count_brute(const specht::Partition& shape) {
  const int n = shape.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    // Row i takes the next parts[i] letters of the permutation.
    std::vector<std::vector<int>> rows;
    std::size_t at = 0;
    for (int r = 1; r <= shape.height(); ++r) {
      std::size_t len = static_cast<std::size_t>(shape.part(r));
      rows.emplace_back(perm.begin() + static_cast<long>(at),
                        perm.begin() + static_cast<long>(at + len));
      at += len;
    }
    bool ok = true;
    for (const auto& row : rows)
      for (std::size_t j = 0; ok && j + 1 < row.size(); ++j)
        if (row[j] >= row[j + 1]) ok = false;
    for (std::size_t r = 0; ok && r + 1 < rows.size(); ++r)
      for (std::size_t j = 0; ok && j < rows[r + 1].size(); ++j)
        if (rows[r][j] >= rows[r + 1][j]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// All exponent vectors of total degree k in n variables.
inline std::vector<std::vector<int>> monomials_of_degree(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> place = [&](int var, int left) {
    if (var == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(var)] = e;
      place(var + 1, left - e);
    }
    cur[static_cast<std::size_t>(var)] = 0;
  };
  place(0, k);
  return out;
}

/// dim_k of R/M for a monomial ideal given by generator exponent vectors:
/// count degree-k monomials no generator divides.
inline long monomial_quotient_dim(const std::vector<std::vector<int>>& gens,
                                  int n, int k) {
  long dim = 0;
  for (const auto& m : monomials_of_degree(n, k)) {
    bool killed = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (int i = 0; i < n && divides; ++i)
        if (g[static_cast<std::size_t>(i)] > m[static_cast<std::size_t>(i)])
          divides = false;
      if (divides) {
        killed = true;
        break;
      }
    }
    if (!killed) ++dim;
  }
  return dim;
}

/// dim_k of the degree-k slice of (gens) over Q by Gaussian elimination:
/// rows are m*g for every generator g and monomial m of complementary
/// degree. Generators must be homogeneous. No Groebner machinery.
inline long ideal_slice_dim(const std::vector<specht::Polynomial>& gens,
                            int n, int k) {
  using specht::Monomial;
  const auto cols = monomials_of_degree(n, k);
  std::map<std::vector<int>, std::size_t> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;

  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    const int dg = g.degree();
    if (dg > k) continue;
    for (const auto& m : monomials_of_degree(n, k - dg)) {
      specht::Polynomial shifted =
          g.term_mul(specht::Scalar::one(g.field()),
                     Monomial(std::vector<int>(m)));
      std::vector<mpq_class> row(cols.size(), 0);
      for (const auto& t : shifted.terms())
        row[col_of.at(t.mono.exponents())] = t.coeff.rational_value();
      rows.push_back(std::move(row));
    }
  }

  long rank = 0;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols.size() && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      mpq_class factor = rows[r][col] / rows[lead][col];
      for (std::size_t c = col; c < cols.size(); ++c)
        rows[r][c] -= factor * rows[lead][c];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

/// C(n + k - 1, k): dim_k of the full polynomial ring.
inline long full_ring_dim(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
               static_cast<unsigned long>(k));
  return b.get_si();
}

}  // namespace oracles
