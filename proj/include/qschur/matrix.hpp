// Square integer matrices indexed by [-n, n]^2, used as basis labels of the
// Schur algebras and of their stabilization algebras.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/coeffs.hpp"

namespace qschur {

struct DimMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotChevalley : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_((2 * n + 1) * (2 * n + 1), 0) {}
  // rows listed top to bottom, i.e. from index -n to n
  static Mat from_rows(const std::vector<std::vector<int>>& rows);
  static Mat diagonal(const std::vector<int>& diag);  // entries for -n..n

  int n() const { return n_; }
  int size() const { return 2 * n_ + 1; }
  int operator()(int i, int j) const { return a_[(i + n_) * size() + (j + n_)]; }
  int& at(int i, int j) { return a_[(i + n_) * size() + (j + n_)]; }
  const std::vector<int>& flat() const { return a_; }

  // += c (E_ij + E_{-i,-j}); at (0, 0) this adds 2c
  void add_theta(int i, int j, int c);

  std::vector<int> ro() const;  // index k + n holds ro_k
  std::vector<int> co() const;
  int total() const;
  bool centro_symmetric() const;
  bool is_diagonal() const;
  bool offdiag_nonneg() const;
  bool all_nonneg() const;
  Mat transpose() const;
  Mat shifted(int p) const;  // A + pI
  std::vector<std::vector<int>> rows() const;
  std::string str() const;

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) { return a.n_ != b.n_ ? a.n_ < b.n_ : a.a_ < b.a_; }

 private:
  int n_ = 0;
  std::vector<int> a_;
};

// Member of the finite index set: naturals, centro-symmetric, odd center.
bool is_schur_index(const Mat& A);
// Member of the stabilized index set: integer diagonal, natural off-diagonal.
bool is_stab_index(const Mat& A);

// sigma_ij(A) = sum over x <= i, y >= j
int sigma(const Mat& A, int i, int j);
bool leq_alg(const Mat& A, const Mat& B);
// sum of sigma_ij over i < j; strictly increasing along <_alg
int sigma_weight(const Mat& A);
// Sorted so that every matrix precedes all matrices strictly below it;
// ties broken lexicographically.
void sort_descending(std::vector<Mat>& ms);

struct HatLengths {
  int l = 0;
  int lc = 0;
  int la = 0;
};
// Generalized lengths given by entry products; meaningful for integer diagonals.
HatLengths hat_lengths(const Mat& A);
// u^{-hat lc} v^{-hat la}, the factor with [A] = factor * e_A
BiLaurent std_factor(const Mat& A);

// Off-diagonal shape of a Chevalley matrix: amount * E^theta_{h,h-1} (lower)
// or amount * E^theta_{h-1,h} (raise), h in [1, n].  Diagonal matrices have
// amount 0.
struct ChevShape {
  bool lower = true;
  int h = 1;
  int amount = 0;
};
std::optional<ChevShape> chevalley_shape(const Mat& B);
// Chevalley matrix of the given shape whose column sums are co.
Mat chevalley_with_co(int n, const ChevShape& s, const std::vector<int>& co);

// Finitely supported combination of basis symbols [M] (or e_M).
enum class Basis { E, Std };

template <class C>
class MatElt {
 public:
  using Map = std::map<Mat, C>;
  MatElt() = default;
  explicit MatElt(Basis b) : basis_(b) {}
  static MatElt single(const Mat& M, const C& c = C(1), Basis b = Basis::Std) {
    MatElt r(b);
    r.add(M, c);
    return r;
  }
  Basis basis() const { return basis_; }
  void set_basis(Basis b) { basis_ = b; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(const Mat& M) const {
    auto it = terms_.find(M);
    return it == terms_.end() ? C() : it->second;
  }
  void add(const Mat& M, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(M, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  MatElt& operator+=(const MatElt& o) {
    for (auto& [M, c] : o.terms_) add(M, c);
    return *this;
  }
  MatElt& operator-=(const MatElt& o) {
    for (auto& [M, c] : o.terms_) add(M, -c);
    return *this;
  }
  friend MatElt operator+(MatElt a, const MatElt& b) { return a += b; }
  friend MatElt operator-(MatElt a, const MatElt& b) { return a -= b; }
  friend MatElt operator*(const C& s, const MatElt& a) {
    MatElt r(a.basis_);
    for (auto& [M, c] : a.terms_) r.add(M, s * c);
    return r;
  }
  friend bool operator==(const MatElt& a, const MatElt& b) { return a.basis_ == b.basis_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MatElt& a, const MatElt& b) { return !(a == b); }

 private:
  Basis basis_ = Basis::Std;
  Map terms_;
};

using SchurElt = MatElt<BiLaurent>;
using SpecElt = MatElt<UniLaurent>;

SpecElt specialize(const SchurElt& x, const WeightFn& L);
// Rescale between the e basis and the standard basis.
SchurElt to_std(const SchurElt& x);
SchurElt to_e(const SchurElt& x);

}  // namespace qschur
