// Closed multiplication formulas for a Chevalley matrix acting on the left of
// a standard basis element.  The finite Schur algebra and the two
// stabilization algebras share the coefficients and differ only in which
// t-vectors are summed over.
#pragma once

#include <vector>

#include "qschur/matrix.hpp"

namespace qschur {

enum class Algebra {
  Schur,  // finite Schur algebra, every entry natural
  Kj,     // stabilization algebra, integer diagonal
  KjGt,   // stabilization algebra on matrices with positive center
};

bool valid_in(const Mat& A, Algebra alg);

struct ChevTerm {
  std::vector<int> t;  // t[l + n], l in [-n, n]
  Mat target;
};

// The t-vectors allowed for the given shape acting on A, with the resulting
// matrices.  No validity filtering is applied to the targets.
std::vector<ChevTerm> chevalley_range(const ChevShape& s, const Mat& A, Algebra alg);

// Coefficient of [target] in [B][A] in the standard basis.  The binomial at
// column skip is left out (outside the raising h = 1 case).
inline constexpr int kNoSkip = 1 << 30;
BiLaurent chevalley_coeff(const ChevShape& s, const Mat& A, const std::vector<int>& t, int skip = kNoSkip);
// Coefficient of e_target in e_B e_A (finite Schur algebra only).
BiLaurent chevalley_coeff_e(const ChevShape& s, const Mat& A, const std::vector<int>& t);

// [B][A] in the standard basis.  Zero when co(B) != ro(A).
SchurElt mult_chevalley(const Mat& B, const Mat& A, Algebra alg);
// e_B e_A in the e basis, finite Schur algebra.
SchurElt mult_chevalley_e(const Mat& B, const Mat& A);
// [B] x for x in the standard basis.
SchurElt left_mult(const Mat& B, const SchurElt& x, Algebra alg);

// Memoized barred Gaussian binomial.
const BiLaurent& bar_qbinom(int a, int b);
const BiLaurent& qbinom_cached(int a, int b);

}  // namespace qschur
