#include "doctest.h"
#include "qschur/bases.hpp"
#include "qschur/schur_bc.hpp"
#include "qschur/stab.hpp"

using namespace qschur;

namespace {

// Chevalley matrices acting on A: every shape with amount up to max_amount.
std::vector<Mat> chevalley_for(const Mat& A, int max_amount) {
  std::vector<Mat> out;
  int n = A.n();
  for (int h = 1; h <= n; ++h)
    for (bool lower : {true, false})
      for (int b = 1; b <= max_amount; ++b) out.push_back(chevalley_with_co(n, ChevShape{lower, h, b}, A.ro()));
  return out;
}

SchurElt shift_keys(const SchurElt& x, int p) {
  SchurElt r(x.basis());
  for (auto& [M, c] : x.terms()) r.add(M.shifted(p), c);
  return r;
}

SchurElt single(const Mat& A) { return SchurElt::single(A); }

}  // namespace

TEST_CASE("pi-deformed factors") {
  for (int a = -3; a <= 5; ++a) {
    CHECK(eval_ratio(r_one(a, 1), 0) == (vpow(-2 * (a - 1)) - 1).exact_div(vpow(-2) - 1));
    CHECK(eval_ratio(r_one(a, 0), 0) == BiLaurent(1));
  }
  // r_one at pi = v^-p is a barred binomial
  for (int a = 0; a <= 4; ++a)
    for (int k = 1; k <= 3; ++k) CHECK(eval_ratio(r_one(a + k + 1, k), -4) == bar_qbinom(a + 4 + k, k));
}

TEST_CASE("stabilization products: idempotents and large diagonals") {
  for (auto& A : stab_window(1, 2)) {
    CHECK(mult_chevalley_stab(Mat::diagonal(A.ro()), A) == single(A));
    for (auto& B : chevalley_for(A, 2)) {
      if (!valid_in(B, Algebra::Kj)) continue;
      int p = 16;
      Mat Ap = A.shifted(p), Bp = B.shifted(p);
      CHECK(mult_chevalley_stab(Bp, Ap) == mult_chevalley(Bp, Ap, Algebra::Schur));
    }
  }
}

TEST_CASE("negative center: raising into positive center has zero coefficient") {
  int checked = 0;
  for (auto& A : stab_window(1, 3)) {
    if (A(0, 0) >= 0) continue;
    for (int c = 1; c <= 3; ++c) {
      Mat C = chevalley_with_co(1, ChevShape{false, 1, c}, A.ro());
      for (auto& z : zeta_terms(C, A)) {
        if (z.target(0, 0) <= 0) continue;
        CHECK(eval_ratio({z.numerator, z.denominator}, 0).is_zero());
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("structure constants stabilize under diagonal shifts") {
  int mismatches_printed = 0, compared = 0;
  for (auto& A : stab_window(1, 2))
    for (auto& B : chevalley_for(A, 2)) {
      if (!valid_in(B, Algebra::Kj)) continue;
      int need = zeta_threshold(B, A);
      for (int p : {8, 10, 12}) {
        if (p < need) {
          CHECK_THROWS_AS(eval_zeta(B, A, p), ThresholdNotReached);
          continue;
        }
        SchurElt fin = mult_chevalley(B.shifted(p), A.shifted(p), Algebra::Schur);
        CHECK_MESSAGE(shift_keys(eval_zeta(B, A, p), p) == fin, B.str(), " ", A.str(), " p=", p);
        ++compared;
      }
      CHECK(eval_zeta_one(B, A) == mult_chevalley_stab(B, A));
      if (eval_zeta_one(B, A, MiddleFactor::AsPrinted) != mult_chevalley_stab(B, A)) ++mismatches_printed;
    }
  CHECK(compared > 100);
  // the printed h = 1 raising factor does not reproduce the closed formula
  CHECK(mismatches_printed > 0);
}

TEST_CASE("stabilization algebra: associativity on Chevalley triples") {
  for (int n = 1; n <= 2; ++n)
    for (auto& A : stab_window(n, n == 1 ? 2 : 1))
      for (auto& B : chevalley_for(A, 1))
        for (auto& C : chevalley_for(B, 1)) {
          if (!valid_in(B, Algebra::Kj) || !valid_in(C, Algebra::Kj)) continue;
          SchurElt left(Basis::Std);
          SchurElt cb = mult_chevalley_stab(C, B);
          for (auto& [M, c] : cb.terms()) left += c * multiply(single(M), single(A), Algebra::Kj);
          SchurElt right = left_mult(C, mult_chevalley_stab(B, A), Algebra::Kj);
          CHECK_MESSAGE(left == right, C.str(), " ", B.str(), " ", A.str());
        }
}

TEST_CASE("stabilization algebra: monomial, bar and canonical bases") {
  const std::vector<WeightFn> weights{{1, 1}, {2, 1}, {1, 2}};
  for (auto& A : stab_window(1, 2)) {
    REQUIRE_NOTHROW(monomial_decompose(A, Algebra::Kj));
    const SchurElt& m = monomial_element(A, Algebra::Kj);
    CHECK(m.coeff(A) == BiLaurent(1));
    for (auto& [B, c] : m.terms())
      if (B != A) CHECK(leq_alg(B, A));
    auto chain = monomial_chain(A);
    auto shifted = monomial_chain(A.shifted(2));
    REQUIRE(chain.size() == shifted.size());
    for (std::size_t k = 0; k < chain.size(); ++k) CHECK(shifted[k] == chain[k].shifted(2));
    for (auto& L : weights) {
      check_bar_involution(A, L, Algebra::Kj);
      SpecElt c = canonical_element(A, L, Algebra::Kj);
      CHECK(bar_recursive(c, L, Algebra::Kj) == c);
      CHECK(c.coeff(A) == UniLaurent(1));
      for (auto& [B, p] : c.terms())
        if (B != A) CHECK(p.max_coords()[0] < 0);
      if (A.is_diagonal()) CHECK(c == SpecElt::single(A));
    }
  }
}

TEST_CASE("canonical basis supports are stable under shifts") {
  WeightFn L(2, 1);
  for (auto& A : enumerate_xi(1, 2)) {
    for (int p : {4, 6}) {
      SpecElt c1 = canonical_element(A.shifted(p), L, Algebra::Kj);
      SpecElt c2 = canonical_element(A.shifted(p + 2), L, Algebra::Kj);
      std::vector<Mat> s1, s2;
      for (auto& [B, x] : c1.terms()) s1.push_back(B.shifted(-p));
      for (auto& [B, x] : c2.terms()) s2.push_back(B.shifted(-p - 2));
      CHECK_MESSAGE(s1 == s2, A.str());
    }
  }
}

TEST_CASE("transpose anti-involution") {
  for (auto& A : stab_window(1, 2)) {
    CHECK(transpose_antiinv(transpose_antiinv(single(A))) == single(A));
    if (A.is_diagonal()) CHECK(transpose_antiinv(single(A)) == single(A));
    for (auto& B : chevalley_for(A, 2)) {
      if (!valid_in(B, Algebra::Kj)) continue;
      SchurElt lhs = transpose_antiinv(mult_chevalley_stab(B, A));
      SchurElt rhs = multiply(transpose_antiinv(single(A)), transpose_antiinv(single(B)), Algebra::Kj);
      CHECK_MESSAGE(lhs == rhs, B.str(), " ", A.str());
    }
  }
}

TEST_CASE("ideal J and the positive-center quotient") {
  CHECK(in_J(single(Mat::from_rows({{0, 0, 0}, {0, -1, 0}, {0, 0, 0}}))));
  for (auto& A : stab_window(1, 3))
    for (auto& B : chevalley_for(A, 3)) {
      if (!valid_in(B, Algebra::Kj)) continue;
      SchurElt prod = mult_chevalley_stab(B, A);
      if (in_J_index(A)) {
        CHECK_MESSAGE(in_J(prod), B.str(), " ", A.str());
      } else if (valid_in(B, Algebra::KjGt)) {
        CHECK(sharp(prod) == mult_chevalley_stab(B, A, Algebra::KjGt));
      }
    }
  // right closure, directly: transposes of Chevalley matrices with column sums co(A)
  for (auto& A : stab_window(1, 2)) {
    if (!in_J_index(A)) continue;
    for (bool lower : {true, false})
      for (int b = 1; b <= 2; ++b) {
        Mat B = chevalley_with_co(1, ChevShape{lower, 1, b}, A.co()).transpose();
        if (!valid_in(B, Algebra::Kj)) continue;
        CHECK(in_J(multiply(single(A), single(B), Algebra::Kj)));
      }
  }
}

TEST_CASE("imath stabilization subalgebra") {
  CHECK(imath_stab(Mat::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 2}})));
  std::vector<Mat> imath;
  for (auto& A : stab_window(1, 2))
    if (imath_stab(A)) imath.push_back(A);
  REQUIRE(!imath.empty());
  for (auto& B : imath)
    for (auto& A : imath) {
      if (B.co() != A.ro()) continue;
      SchurElt gt = multiply(single(B), single(A), Algebra::KjGt);
      for (auto& [M, c] : gt.terms()) CHECK(imath_stab(M));
      // the subquotient of Kj with middle sums 1 modulo J
      CHECK(project_J(multiply(single(B), single(A), Algebra::Kj)) == gt);
    }
  WeightFn L(2, 1);
  for (auto& A : imath) {
    SpecElt c = canonical_element(A, L, Algebra::KjGt);
    for (auto& [M, x] : c.terms()) CHECK(imath_stab(M));
    SpecElt cj = canonical_element(A, L, Algebra::Kj);
    SpecElt proj(Basis::Std);
    for (auto& [M, x] : cj.terms())
      if (!in_J_index(M)) proj.add(M, x);
    CHECK(proj == c);
  }
}
