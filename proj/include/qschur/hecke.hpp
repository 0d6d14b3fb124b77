// Hecke algebra of a signed permutation group with parameter u^2 at s0 and
// v^2 elsewhere (type B/C), or v^2 everywhere (type D).
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qschur/coeffs.hpp"
#include "qschur/weyl.hpp"

namespace qschur {

struct NotInCosetModule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadratic parameter q_k of generator k: (T_s + 1)(T_s - q_k) = 0.
BiLaurent quad_param(Family f, int k);

class HeckeElt {
 public:
  using Map = std::map<SignedPerm, BiLaurent>;

  HeckeElt() = default;
  HeckeElt(Family f, int d) : fam_(f), d_(d) {}
  static HeckeElt T(const SignedPerm& g, const BiLaurent& c = BiLaurent(1));
  static HeckeElt sum(Family f, int d, const std::vector<SignedPerm>& elems);

  Family family() const { return fam_; }
  int rank() const { return d_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BiLaurent coeff(const SignedPerm& g) const;

  void add_term(const SignedPerm& g, const BiLaurent& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const BiLaurent& c, const HeckeElt& a);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  HeckeElt times_gen(int k) const;  // h * T_{s_k}
  HeckeElt gen_times(int k) const;  // T_{s_k} * h
  HeckeElt map_coeffs(BiLaurent (*f)(const BiLaurent&)) const;
  HeckeElt exact_div(const BiLaurent& c) const;

 private:
  Family fam_ = Family::BC;
  int d_ = 0;
  Map terms_;
};

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
// a * sum_{w in elems} T_w; elems must be closed under taking right prefixes
// of reduced words (true for parabolic subgroups and their double cosets).
HeckeElt times_sum(const HeckeElt& a, const std::vector<SignedPerm>& elems);

HeckeElt bar(const HeckeElt& a);
// bar(T_g), memoized per thread.
const HeckeElt& bar_T(const SignedPerm& g);

HeckeElt x_lambda(const Blocks& b);
HeckeElt coset_sum(const Blocks& left, const SignedPerm& g, const Blocks& right);

// Minimal representatives of the double cosets W_left \ W / W_right together
// with the cosets themselves, cached per thread.
struct CosetTable {
  std::vector<SignedPerm> reps;
  std::vector<std::vector<SignedPerm>> cosets;
  std::map<SignedPerm, std::size_t> index;  // element -> position of its coset
};
const CosetTable& coset_table(const Blocks& left, const Blocks& right);

// Coordinates of h in the basis of double coset sums; throws
// NotInCosetModule when h is not such a combination.
std::map<SignedPerm, BiLaurent> reexpress_coset(const HeckeElt& h, const Blocks& left, const Blocks& right);

// Specialized Hecke element: coefficients in Z[w, w^-1].
using SpecHecke = std::map<SignedPerm, UniLaurent>;
SpecHecke specialize(const HeckeElt& h, const WeightFn& L);
// The bar-invariant basis element c_w at weight L (triangular correction over
// all elements of smaller length).
SpecHecke cL_basis(const SignedPerm& w, const WeightFn& L);
SpecHecke bar_spec(const SpecHecke& h, const WeightFn& L);

}  // namespace qschur
