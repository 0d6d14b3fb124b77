// Signed permutation groups of type B/C and D, parabolic subgroups and coset
// representatives.
#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

enum class Family { BC, D };

struct SizeGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotMinimalRep : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kSizeGuard = 1000000;

// A signed permutation stored by its window (g(1), ..., g(d)).
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(Family f, std::vector<int> window);

  static SignedPerm identity(Family f, int d);
  // s0 = (-1,1) for BC, (1,-2)(2,-1) for D; s_k = (k,k+1)(-k,-k-1) otherwise.
  static SignedPerm gen(Family f, int d, int k);
  static SignedPerm parse(const std::string& s, Family f = Family::BC);

  Family family() const { return fam_; }
  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  int operator()(int i) const { return i > 0 ? w_[i - 1] : (i < 0 ? -w_[-i - 1] : 0); }
  bool is_identity() const;

  // (g*h)(i) = g(h(i))
  SignedPerm operator*(const SignedPerm& h) const;
  SignedPerm inverse() const;
  SignedPerm times_gen(int k) const;  // g s_k
  SignedPerm gen_times(int k) const;  // s_k g
  bool right_descent(int k) const;    // l(g s_k) < l(g)
  bool left_descent(int k) const;     // l(s_k g) < l(g)

  std::string str() const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.fam_ == b.fam_ && a.w_ == b.w_; }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.fam_ != b.fam_ ? a.fam_ < b.fam_ : a.w_ < b.w_;
  }

 private:
  Family fam_ = Family::BC;
  std::vector<int> w_;
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& g) const;
};

struct Lengths {
  int l = 0;
  int lc = 0;  // number of s0 letters (type B/C only)
  int la = 0;
  friend bool operator==(const Lengths&, const Lengths&) = default;
};

// Type B/C: symmetrized pair counts; type D: only l is meaningful.
Lengths lengths(const SignedPerm& g);
int length(const SignedPerm& g);
// Reduced word k1..km with g = s_{k1} ... s_{km}.
std::vector<int> reduced_word(const SignedPerm& g);
SignedPerm from_word(Family f, int d, const std::vector<int>& word);

// The sets R_i (i in [-n, n]) cut out by a composition, with the ambient group.
class Blocks {
 public:
  Blocks() = default;
  Blocks(Family f, int d, int n, std::vector<std::vector<int>> sets);
  // Prescribed generators instead of the block-stabilizing ones.
  Blocks(Family f, int d, int n, std::vector<std::vector<int>> sets, std::vector<int> gens);
  Family family() const { return fam_; }
  int rank() const { return d_; }
  int n() const { return n_; }
  const std::vector<int>& R(int i) const { return sets_.at(i + n_); }
  // Generators of the ambient group that stabilize every block.
  const std::vector<int>& generators() const { return gens_; }
  bool stabilizes(const SignedPerm& g) const;
  friend bool operator==(const Blocks& a, const Blocks& b) { return a.fam_ == b.fam_ && a.d_ == b.d_ && a.sets_ == b.sets_; }
  friend bool operator<(const Blocks& a, const Blocks& b) {
    if (a.fam_ != b.fam_) return a.fam_ < b.fam_;
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.sets_ < b.sets_;
  }

 private:
  Family fam_ = Family::BC;
  int d_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> sets_;
  std::vector<int> gens_;
};

// Weak composition (l0, l1, ..., ln) of d, encoding (ln..l1, 2 l0 + 1, l1..ln).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  int n() const { return static_cast<int>(parts_.size()) - 1; }
  int d() const { return total_; }
  int part(int i) const { return parts_.at(i < 0 ? -i : i); }
  const std::vector<int>& parts() const { return parts_; }
  // Entry k in [-n, n] of the symmetric sequence (middle entry 2 l0 + 1).
  int full(int k) const { return k == 0 ? 2 * parts_[0] + 1 : part(k); }
  Blocks blocks() const;
  std::string str() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

std::vector<Composition> all_compositions(int n, int d);

std::size_t group_order(Family f, int d);
// All elements of W(B_d) or W(D_d), sorted by window.
std::vector<SignedPerm> all_elements(Family f, int d);

// Subgroup generated by the block-stabilizing generators.
std::vector<SignedPerm> parabolic_elements(const Blocks& b);
std::vector<SignedPerm> stabilizer_elements(const Blocks& b);
// Minimal length representatives of W_b \ W.
std::vector<SignedPerm> min_coset_reps(const Blocks& b);
bool is_min_left(const SignedPerm& g, const Blocks& left);    // no left descent in W_left
bool is_min_right(const SignedPerm& g, const Blocks& right);  // no right descent in W_right
bool is_min_double(const SignedPerm& g, const Blocks& left, const Blocks& right);
SignedPerm min_double_rep(SignedPerm g, const Blocks& left, const Blocks& right);
SignedPerm min_double_rep_bruteforce(const SignedPerm& g, const Blocks& left, const Blocks& right);
std::vector<SignedPerm> double_coset(const SignedPerm& g, const Blocks& left, const Blocks& right);
std::vector<SignedPerm> min_double_reps(const Blocks& left, const Blocks& right);
SignedPerm longest_element(const Blocks& b);
// Elements of W_right whose conjugate g w g^-1 lies in W_left.
std::vector<SignedPerm> intersection_elements(const SignedPerm& g, const Blocks& left, const Blocks& right);
SignedPerm longest_double_rep(const SignedPerm& g, const Blocks& left, const Blocks& right);

}  // namespace qschur
