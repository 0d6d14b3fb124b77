// The Schur algebra of type B/C with two parameters: index set, the bijection
// with double cosets, lengths, and the Hecke algebra oracle.
#pragma once

#include <vector>

#include "qschur/chevalley.hpp"
#include "qschur/hecke.hpp"
#include "qschur/matrix.hpp"
#include "qschur/weyl.hpp"

namespace qschur {

// All index matrices of rank n and total 2d + 1, sorted.
std::vector<Mat> enumerate_xi(int n, int d);
int degree_of(const Mat& A);  // d with total 2d + 1

// Row or column sum vector (index k + n) read as a composition.
Composition composition_of(const std::vector<int>& sums);
std::vector<int> sums_of(const Composition& c);

struct KappaTriple {
  Composition row;
  SignedPerm g;
  Composition col;
};
Mat kappa(const Composition& lam, const SignedPerm& g, const Composition& mu);
KappaTriple kappa_inv(const Mat& A);

// Lengths of g_A from the entries of A.
Lengths lengths_of(const Mat& A);
// [A]!_c = [a00 nat]!_c times [a_ij]! over the upper half
BiLaurent fact_c(const Mat& A);
// Composition whose parabolic subgroup is g^-1 W_row g meet W_col.
Composition delta_of(const Mat& A);

// e_A(x_col) = T^g_{row,col} as an element of the Hecke algebra.
HeckeElt e_action(const Mat& A);
// e_B e_A computed inside the Hecke algebra, in the e basis.
SchurElt oracle_mult(const Mat& B, const Mat& A);
// bar([A]) computed inside the Hecke algebra, in the standard basis.
SchurElt bar_oracle(const Mat& A);
SchurElt bar_oracle(const SchurElt& x);

// Indices with middle row and column sums equal to 1.
bool imath_index(const Mat& A);
template <class C>
MatElt<C> imath_filter(const MatElt<C>& x) {
  MatElt<C> r(x.basis());
  for (auto& [M, c] : x.terms())
    if (imath_index(M)) r.add(M, c);
  return r;
}

}  // namespace qschur
