// Monomial products of Chevalley matrices, general products through them, the
// bar involution by triangular recursion, and canonical bases.  Shared by the
// finite Schur algebra and the stabilization algebras.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qschur/chevalley.hpp"
#include "qschur/matrix.hpp"

namespace qschur {

struct DecompositionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BarInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chevalley matrices A(1), ..., A(x) with [A(1)] ... [A(x)] equal to [A] plus
// strictly lower terms; A(x) acts first.
std::vector<Mat> monomial_chain(const Mat& A);
// The chain above, checked to be unitriangular; throws DecompositionFailed.
std::vector<Mat> monomial_decompose(const Mat& A, Algebra alg);
// [A(1)] ... [A(x)] x, standard basis.
SchurElt chain_product(const std::vector<Mat>& chain, const SchurElt& x, Algebra alg);
// m_A, memoized per thread.
const SchurElt& monomial_element(const Mat& A, Algebra alg);
// Coordinates of [A] in the monomial basis, keyed by the index of m_B.
const SchurElt& std_in_monomials(const Mat& A, Algebra alg);

// x y for x, y in the standard basis.
SchurElt multiply(const SchurElt& x, const SchurElt& y, Algebra alg);

// bar([A]) at weight L from bar(m_A) = m_A, memoized per thread.
const SpecElt& bar_recursive(const Mat& A, const WeightFn& L, Algebra alg);
SpecElt bar_recursive(const SpecElt& x, const WeightFn& L, Algebra alg);
// bar(bar([A])) == [A]; throws BarInconsistency otherwise.
void check_bar_involution(const Mat& A, const WeightFn& L, Algebra alg);

// Canonical basis element {A}: bar invariant, [A] plus strictly lower terms
// with coefficients in w^-1 Z[w^-1].  bar_of(B) must return bar([B]).
using BarFn = std::function<SpecElt(const Mat&)>;
SpecElt canonical_element(const Mat& A, const BarFn& bar_of);
SpecElt canonical_element(const Mat& A, const WeightFn& L, Algebra alg);

}  // namespace qschur
