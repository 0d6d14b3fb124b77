#include "qschur/bases.hpp"

#include <map>
#include <set>
#include <tuple>

namespace qschur {

std::vector<Mat> monomial_chain(const Mat& A) {
  int n = A.n();
  Mat M = Mat::diagonal(A.co());
  std::vector<Mat> applied;
  // columns left to right; each upper entry is carried up from the diagonal
  // one row at a time, the mirrored move fills the lower half
  for (int j = -n + 1; j <= n; ++j) {
    int imin = j;
    for (int i = -n; i < j; ++i)
      if (A(i, j) > 0) {
        imin = i;
        break;
      }
    for (int k = j - 1; k >= imin; --k) {
      int m = 0;
      for (int i = -n; i <= k; ++i) m += A(i, j);
      if (m == 0) continue;
      ChevShape s = k >= 0 ? ChevShape{false, k + 1, m} : ChevShape{true, -k, m};
      applied.push_back(chevalley_with_co(n, s, M.ro()));
      M.at(k + 1, j) -= m;
      M.at(k, j) += m;
      M.at(-k - 1, -j) -= m;
      M.at(-k, -j) += m;
    }
  }
  if (M != A) throw DecompositionFailed("chain does not reach " + A.str());
  return {applied.rbegin(), applied.rend()};
}

SchurElt chain_product(const std::vector<Mat>& chain, const SchurElt& x, Algebra alg) {
  SchurElt r = x;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) r = left_mult(*it, r, alg);
  return r;
}

namespace {

bool strictly_below(const Mat& B, const Mat& A) { return B != A && leq_alg(B, A); }

SchurElt product_from_diagonal(const Mat& A, const std::vector<Mat>& chain, Algebra alg) {
  return chain_product(chain, SchurElt::single(Mat::diagonal(A.co())), alg);
}

}  // namespace

std::vector<Mat> monomial_decompose(const Mat& A, Algebra alg) {
  if (!valid_in(A, alg)) throw std::invalid_argument("index outside the algebra: " + A.str());
  std::vector<Mat> chain = monomial_chain(A);
  SchurElt m = product_from_diagonal(A, chain, alg);
  if (m.coeff(A) != BiLaurent(1)) throw DecompositionFailed("leading coefficient is not 1 for " + A.str());
  for (auto& [B, c] : m.terms())
    if (B != A && !strictly_below(B, A)) throw DecompositionFailed("term " + B.str() + " not below " + A.str());
  return chain;
}

const SchurElt& monomial_element(const Mat& A, Algebra alg) {
  thread_local std::map<std::pair<int, Mat>, SchurElt> memo;
  auto key = std::make_pair(static_cast<int>(alg), A);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  SchurElt m = product_from_diagonal(A, monomial_decompose(A, alg), alg);
  return memo.emplace(key, std::move(m)).first->second;
}

const SchurElt& std_in_monomials(const Mat& A, Algebra alg) {
  thread_local std::map<std::pair<int, Mat>, SchurElt> memo;
  auto key = std::make_pair(static_cast<int>(alg), A);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // [A] = m_A - sum over B < A of c_B [B]
  SchurElt r = SchurElt::single(A);
  for (auto& [B, c] : monomial_element(A, alg).terms())
    if (B != A) r -= c * std_in_monomials(B, alg);
  return memo.emplace(key, std::move(r)).first->second;
}

SchurElt multiply(const SchurElt& x, const SchurElt& y, Algebra alg) {
  if (x.basis() != Basis::Std || y.basis() != Basis::Std) throw std::invalid_argument("multiply expects the standard basis");
  SchurElt r(Basis::Std);
  for (auto& [A, a] : x.terms())
    for (auto& [B, b] : std_in_monomials(A, alg).terms())
      r += (a * b) * chain_product(monomial_decompose(B, alg), y, alg);
  return r;
}

const SpecElt& bar_recursive(const Mat& A, const WeightFn& L, Algebra alg) {
  thread_local std::map<std::tuple<int, int, int, Mat>, SpecElt> memo;
  auto key = std::make_tuple(static_cast<int>(alg), L.L0, L.L1, A);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  SpecElt m = specialize(monomial_element(A, alg), L);
  SpecElt r = m;
  for (auto& [B, c] : m.terms())
    if (B != A) r -= c.bar() * bar_recursive(B, L, alg);
  return memo.emplace(key, std::move(r)).first->second;
}

SpecElt bar_recursive(const SpecElt& x, const WeightFn& L, Algebra alg) {
  SpecElt r(Basis::Std);
  for (auto& [A, c] : x.terms()) r += c.bar() * bar_recursive(A, L, alg);
  return r;
}

void check_bar_involution(const Mat& A, const WeightFn& L, Algebra alg) {
  SpecElt twice = bar_recursive(bar_recursive(A, L, alg), L, alg);
  if (twice != SpecElt::single(A)) throw BarInconsistency("bar is not an involution at " + A.str());
}

SpecElt canonical_element(const Mat& A, const BarFn& bar_of) {
  // support closure of the bar expansions below A
  std::map<Mat, SpecElt> bars;
  std::vector<Mat> todo{A};
  while (!todo.empty()) {
    Mat C = todo.back();
    todo.pop_back();
    if (bars.count(C)) continue;
    SpecElt b = bar_of(C);
    if (b.coeff(C) != UniLaurent(1)) throw BarInconsistency("bar is not unitriangular at " + C.str());
    for (auto& [B, c] : b.terms()) {
      if (B != C && !strictly_below(B, C)) throw BarInconsistency("bar leaves the lower cone at " + C.str());
      if (!bars.count(B)) todo.push_back(B);
    }
    bars.emplace(C, std::move(b));
  }
  std::vector<Mat> order;
  for (auto& [C, b] : bars) order.push_back(C);
  sort_descending(order);

  std::map<Mat, UniLaurent> pi{{A, UniLaurent(1)}};
  for (const Mat& B : order) {
    if (B == A) continue;
    // pi_B - bar(pi_B) = sum over B < C <= A of r_BC bar(pi_C)
    UniLaurent s;
    for (auto& [C, p] : pi)
      if (C != B) s += bars.at(C).coeff(B) * p.bar();
    std::vector<UniLaurent::Term> neg;
    for (auto& [e, c] : s.terms())
      if (e[0] < 0) neg.push_back({e, c});
    UniLaurent p = UniLaurent::from_terms(neg);
    if (p - p.bar() != s) throw BarInconsistency("correction term is not anti-invariant at " + B.str());
    if (!p.is_zero()) pi[B] = p;
  }
  SpecElt r(Basis::Std);
  for (auto& [C, p] : pi) r.add(C, p);
  return r;
}

SpecElt canonical_element(const Mat& A, const WeightFn& L, Algebra alg) {
  return canonical_element(A, [&](const Mat& B) { return bar_recursive(B, L, alg); });
}

}  // namespace qschur
