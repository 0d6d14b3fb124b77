// Schur algebras of type D: signed compositions and signed matrices, the
// bijection with double cosets, lengths, factorials, the Hecke algebra oracle
// and the Chevalley multiplication formulas.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/coeffs.hpp"
#include "qschur/hecke.hpp"
#include "qschur/matrix.hpp"
#include "qschur/weyl.hpp"

namespace qschur {

struct CompatMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};


enum class DSign { Zero, Plus, Minus };
char sign_char(DSign s);
DSign parse_sign(char c);
// sign of a product of a left sign and a right sign
DSign combine_signs(DSign left, DSign right);

// (lambda_0, ..., lambda_n) with a sign; sign Zero exactly when lambda_0 > 0.
struct SignedComp {
  std::vector<int> parts;
  DSign sign = DSign::Zero;
  int n() const { return static_cast<int>(parts.size()) - 1; }
  int d() const;
  bool valid() const;
  std::string str() const;
  friend bool operator==(const SignedComp&, const SignedComp&) = default;
  friend auto operator<=>(const SignedComp&, const SignedComp&) = default;
};
std::vector<SignedComp> all_signed_compositions(int n, int d);
// Blocks R_i inside {-d..-1, 1..d}.  Minus is Plus with 1 and -1 swapped.
// Also accepts a zero middle part with sign Zero, which lays out like Plus.
Blocks blocks_d(const SignedComp& c);

struct SignedMat {
  Mat base;
  DSign sign = DSign::Zero;
  int n() const { return base.n(); }
  int d() const { return base.total() / 2; }
  std::string str() const;
  friend bool operator==(const SignedMat& a, const SignedMat& b) { return a.sign == b.sign && a.base == b.base; }
  friend bool operator!=(const SignedMat& a, const SignedMat& b) { return !(a == b); }
  friend bool operator<(const SignedMat& a, const SignedMat& b) {
    return a.base != b.base ? a.base < b.base : a.sign < b.sign;
  }
};
// natural, centro-symmetric, even total, sign Zero exactly when both middle sums are positive
bool is_signed_index(const SignedMat& A);
std::vector<SignedMat> enumerate_xi_d(int n, int d);

// Attributes read off the matrix and its sign.
DSign s_left(const SignedMat& A);
DSign s_right(const SignedMat& A);
DSign parity(const SignedMat& A);  // Minus when the entries with i < 0 < j sum to an odd number

struct KappaTripleD {
  SignedComp row;
  SignedPerm g;
  SignedComp col;
};
SignedMat kappa_d(const SignedComp& row, const SignedPerm& g, const SignedComp& col);
// Looked up in a per-thread table of all double cosets of the given shape.
// A sign-zero matrix with a_00 = 0 has two cosets; the one with g(1) > 0 is
// returned.
KappaTripleD kappa_d_inv(const SignedMat& A);
// Every double coset with the given signed matrix.
std::vector<KappaTripleD> kappa_d_preimages(const SignedMat& A);

int length_d(const SignedMat& A);
// [a00]!_D times the ordinary factorials over the positive half
UniLaurent fact_d(const SignedMat& A);
// (a00/2, a_10, ..., a_n0, a_{-n,1}, ..., a_{n,n}) with the right sign.  With
// a00 = 0 and right sign zero the sign is taken from sgn(A) and the parity,
// and is Plus for the shared matrices (the coset picked by kappa_d_inv).
SignedComp delta_d(const SignedMat& A);

class SchurEltD {
 public:
  using Map = std::map<SignedMat, UniLaurent>;
  void add(const SignedMat& A, const UniLaurent& c);
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  UniLaurent coeff(const SignedMat& A) const;
  friend bool operator==(const SchurEltD& a, const SchurEltD& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SchurEltD& a, const SchurEltD& b) { return !(a == b); }
  std::string str() const;

 private:
  Map terms_;
};

// 1: lowering at h != 1, 2: lowering at h = 1, 3: raising at h != 1,
// 4: raising at h = 1, 0: diagonal.
int chevalley_case_d(const SignedMat& B);
// e_B e_A by the closed formulas for any amount r.
SchurEltD mult_d(const SignedMat& B, const SignedMat& A);
// Doubling of the middle term in the amount-one lowering at h = 1.
// Printed: 2 unless ro_0 = 2.  General: 2 only when also a_00 = 2, which
// is the amount-one case of the general formula.
enum class UnitDoubling { General, Printed };
// e_B e_A by the amount-one formulas.
SchurEltD mult_d_unit(const SignedMat& B, const SignedMat& A, UnitDoubling dbl = UnitDoubling::General);
// Signed matrices shared by two double cosets: sign zero and a_00 = 0.
bool shared_by_two_cosets(const SignedMat& A);
// e_B e_A computed in the Hecke algebra of type D; any B.  A shared matrix
// on the right is taken as the coset picked by kappa_d_inv.
SchurEltD oracle_mult_d(const SignedMat& B, const SignedMat& A);

}  // namespace qschur
