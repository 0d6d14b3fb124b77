// Generators of the idempotented coideal algebras realized in the
// stabilization algebras, and checks of their defining relations.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/matrix.hpp"

namespace qschur {

enum class Variant { Jmath, Imath };

struct IndexOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ProfileMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// e_i, f_i or t.  For Jmath the index k stands for the half integer k - 1/2;
// for Imath it is the integer i itself.
struct Letter {
  enum Kind { E, F, T } kind;
  int index = 0;
  std::string str(Variant v) const;
  friend bool operator==(const Letter&, const Letter&) = default;
};
Letter parse_letter(const std::string& s, Variant v);

using LocElt = MatElt<LocalizedBi>;

// Weight (lambda_0, lambda_1, ..., lambda_n) as a diagonal matrix.
Mat weight_matrix(const std::vector<int>& parts);
bool valid_weight(Variant v, const std::vector<int>& parts);

// The image of x_1 x_2 ... x_k 1_lambda, letters applied right to left.
LocElt aleph_eval(Variant v, const std::vector<Letter>& word, const std::vector<int>& lambda);
// The letter acting on the left of x.
LocElt apply_letter(Variant v, const Letter& l, const LocElt& x, int n);

struct RelationCheck {
  std::string relation;
  std::vector<int> lambda;
  std::vector<int> params;  // generator indices in the letter convention
  bool holds = false;
  int denom_power = 0;      // common power of (v - v^-1) cleared before comparing
  LocElt lhs, rhs;
};

// Relation tags of the catalog for the variant.
std::vector<std::string> relation_tags(Variant v);
// Checks one relation; params holds the indices the tag needs.
RelationCheck verify_relation(Variant v, const std::string& tag, const std::vector<int>& params,
                              const std::vector<int>& lambda);
// Every relation over every weight with entries in [-window, window].
std::vector<RelationCheck> verify_suite(Variant v, int n, int window);
// All weights of the variant with entries in [-window, window].
std::vector<std::vector<int>> weight_window(Variant v, int n, int window);

std::string to_string(const LocElt& x);

}  // namespace qschur
