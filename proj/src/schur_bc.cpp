#include "qschur/schur_bc.hpp"

#include <algorithm>
#include <functional>

namespace qschur {

std::vector<Mat> enumerate_xi(int n, int d) {
  // free cells: (0, j) for j > 0 and (i, j) for i > 0; each counts twice
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= n; ++j) cells.push_back({0, j});
  for (int i = 1; i <= n; ++i)
    for (int j = -n; j <= n; ++j) cells.push_back({i, j});
  std::vector<Mat> out;
  std::vector<int> vals(cells.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == cells.size()) {
      Mat A(n);
      A.at(0, 0) = 2 * left + 1;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [i, j] = cells[k];
        A.at(i, j) = vals[k];
        A.at(-i, -j) = vals[k];
      }
      out.push_back(std::move(A));
      return;
    }
    for (int x = 0; x <= left; ++x) {
      vals[pos] = x;
      rec(pos + 1, left - x);
    }
    vals[pos] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

int degree_of(const Mat& A) { return (A.total() - 1) / 2; }

Composition composition_of(const std::vector<int>& sums) {
  int n = static_cast<int>(sums.size()) / 2;
  if (sums[n] < 1 || sums[n] % 2 == 0) throw std::invalid_argument("middle sum must be odd and positive");
  std::vector<int> parts(n + 1);
  parts[0] = (sums[n] - 1) / 2;
  for (int i = 1; i <= n; ++i) parts[i] = sums[n + i];
  return Composition(parts);
}

std::vector<int> sums_of(const Composition& c) {
  int n = c.n();
  std::vector<int> s(2 * n + 1);
  for (int k = -n; k <= n; ++k) s[k + n] = c.full(k);
  return s;
}

Mat kappa(const Composition& lam, const SignedPerm& g, const Composition& mu) {
  if (lam.n() != mu.n() || lam.d() != mu.d()) throw DimMismatch("compositions of different shape");
  Blocks L = lam.blocks(), M = mu.blocks();
  if (!is_min_double(g, L, M)) throw NotMinimalRep("kappa needs a minimal double coset representative");
  int n = lam.n();
  Mat A(n);
  for (int j = -n; j <= n; ++j)
    for (int x : M.R(j)) {
      int y = g(x);
      for (int i = -n; i <= n; ++i) {
        const auto& R = L.R(i);
        if (std::find(R.begin(), R.end(), y) != R.end()) {
          ++A.at(i, j);
          break;
        }
      }
    }
  return A;
}

KappaTriple kappa_inv(const Mat& A) {
  if (!is_schur_index(A)) throw std::invalid_argument("not an index matrix: " + A.str());
  int n = A.n(), d = degree_of(A);
  // fill -d..d row by row, then read column by column
  std::vector<std::vector<std::vector<int>>> P(2 * n + 1, std::vector<std::vector<int>>(2 * n + 1));
  int val = -d;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j)
      for (int k = 0; k < A(i, j); ++k) P[i + n][j + n].push_back(val++);
  std::vector<int> seq;
  for (int j = -n; j <= n; ++j)
    for (int i = -n; i <= n; ++i)
      for (int x : P[i + n][j + n]) seq.push_back(x);
  std::vector<int> window(seq.begin() + d + 1, seq.end());
  return {composition_of(A.ro()), SignedPerm(Family::BC, window), composition_of(A.co())};
}

Lengths lengths_of(const Mat& A) {
  int n = A.n();
  // type A inversions between blocks, including the fixed point 0
  long inv = 0;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (!A(i, j)) continue;
      for (int x = i + 1; x <= n; ++x)
        for (int y = -n; y < j; ++y) inv += static_cast<long>(A(i, j)) * A(x, y);
    }
  int neg = 0;
  for (int x = 1; x <= n; ++x)
    for (int y = -n; y < 0; ++y) neg += A(x, y);
  Lengths L;
  L.lc = neg;
  L.l = static_cast<int>((inv - neg) / 2);
  L.la = L.l - L.lc;
  return L;
}

BiLaurent fact_c(const Mat& A) {
  int n = A.n();
  BiLaurent r = bc_factorial((A(0, 0) - 1) / 2);
  for (int j = 1; j <= n; ++j) r *= qfact(A(0, j));
  for (int i = 1; i <= n; ++i)
    for (int j = -n; j <= n; ++j) r *= qfact(A(i, j));
  return r;
}

Composition delta_of(const Mat& A) {
  int n = A.n();
  std::vector<int> parts{(A(0, 0) - 1) / 2};
  for (int i = 1; i <= n; ++i) parts.push_back(A(i, 0));
  for (int j = 1; j <= n; ++j)
    for (int i = -n; i <= n; ++i) parts.push_back(A(i, j));
  return Composition(parts);
}

HeckeElt e_action(const Mat& A) {
  KappaTriple k = kappa_inv(A);
  return coset_sum(k.row.blocks(), k.g, k.col.blocks());
}

SchurElt oracle_mult(const Mat& B, const Mat& A) {
  if (B.n() != A.n() || degree_of(B) != degree_of(A)) throw DimMismatch("matrices of different shape");
  SchurElt r(Basis::E);
  if (B.co() != A.ro()) return r;
  KappaTriple kb = kappa_inv(B), ka = kappa_inv(A);
  Blocks L = kb.row.blocks(), N = ka.col.blocks();
  // e_B(x_mu T_g x_nu) = T^h_{lambda mu} T_g x_nu, then divide by [A]!_c
  HeckeElt P = coset_sum(L, kb.g, kb.col.blocks()) * HeckeElt::T(ka.g);
  P = times_sum(P, parabolic_elements(N));
  P = P.exact_div(fact_c(A));
  for (auto& [y, c] : reexpress_coset(P, L, N)) r.add(kappa(kb.row, y, ka.col), c);
  return r;
}

SchurElt bar_oracle(const Mat& A) {
  KappaTriple k = kappa_inv(A);
  Blocks L = k.row.blocks(), M = k.col.blocks();
  HeckeElt bT = bar(coset_sum(L, k.g, M));
  // bar(x_mu) = u^{-2 lc} v^{-2 la} x_mu with the lengths of the longest element
  Lengths wo = lengths(longest_element(M));
  BiLaurent scale = uv(2 * wo.lc, 2 * wo.la) * std_factor(A).bar();
  SchurElt e(Basis::E);
  for (auto& [y, c] : reexpress_coset(bT, L, M)) e.add(kappa(k.row, y, k.col), scale * c);
  return to_std(e);
}

SchurElt bar_oracle(const SchurElt& x) {
  SchurElt s = to_std(x);
  SchurElt r(Basis::Std);
  for (auto& [A, c] : s.terms()) r += c.bar() * bar_oracle(A);
  return r;
}

bool imath_index(const Mat& A) {
  int n = A.n();
  return A.ro()[n] == 1 && A.co()[n] == 1;
}

}  // namespace qschur
