// Stabilization algebras on matrices with integer diagonal: Chevalley
// multiplication, the pi-deformed structure constants and their shift
// threshold, bases, the transpose anti-involution, the ideal J and the
// imath subalgebra.
#pragma once

#include <stdexcept>
#include <vector>

#include "qschur/bases.hpp"
#include "qschur/chevalley.hpp"
#include "qschur/matrix.hpp"

namespace qschur {

struct ThresholdNotReached : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [B][A] in the stabilization algebra (Kj) or its positive-center version (KjGt).
SchurElt mult_chevalley_stab(const Mat& B, const Mat& A, Algebra alg = Algebra::Kj);

// numerator(u, v, pi) over denominator(u, v)
struct PiRatio {
  TriLaurent numerator;
  BiLaurent denominator;
};
// prod_{i=1..k} (v^{-2(a-i)} pi^2 - 1) / (v^{-2i} - 1)
PiRatio r_one(int a, int k);
// prod_{i=1..k} (u^-2 v^{-2(a-1-i)} pi + 1)(v^{-2(a-i)} pi - 1) / (v^{-2i} - 1)
PiRatio r_two(int a, int k);
// Substitutes pi = v^e and divides.
BiLaurent eval_ratio(const PiRatio& r, int e);

// Diagonal factor for the h = 1 raising case: the printed exponents are one
// step short of what the closed formula needs.
enum class MiddleFactor { Corrected, AsPrinted };

// Structure constant of [B][A] as numerator(u, v, pi) / denominator(u, v).
struct ZetaTerm {
  std::vector<int> t;
  Mat target;
  TriLaurent numerator;
  BiLaurent denominator;
};
std::vector<ZetaTerm> zeta_terms(const Mat& B, const Mat& A, MiddleFactor mf = MiddleFactor::Corrected);
// Smallest even p with every constraint inactive on A + pI and all shifted
// indices natural.
int zeta_threshold(const Mat& B, const Mat& A);
// pi = v^-p, keyed by the unshifted targets; p below the threshold throws.
SchurElt eval_zeta(const Mat& B, const Mat& A, int p, MiddleFactor mf = MiddleFactor::Corrected);
// pi = 1.
SchurElt eval_zeta_one(const Mat& B, const Mat& A, MiddleFactor mf = MiddleFactor::Corrected);

// All stabilization indices of rank n with off-diagonal entries in [0, bound]
// and diagonal entries in [-bound, bound].
std::vector<Mat> stab_window(int n, int bound);

// [A] -> u^{-hat lc(A) + hat lc(tA)} v^{-hat la(A) + hat la(tA)} [tA]
SchurElt transpose_antiinv(const SchurElt& x);

bool in_J_index(const Mat& A);  // negative center
bool in_J(const SchurElt& x);
// Drops the J part, i.e. the representative of x + J on positive centers.
SchurElt project_J(const SchurElt& x);
// [A] + J -> [A] into the positive-center algebra.
SchurElt sharp(const SchurElt& x);

// positive center and middle row and column sums equal to 1
bool imath_stab(const Mat& A);

}  // namespace qschur
