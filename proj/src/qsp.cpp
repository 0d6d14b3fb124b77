#include "qschur/qsp.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qschur/bases.hpp"
#include "qschur/chevalley.hpp"

namespace qschur {

std::string Letter::str(Variant v) const {
  if (kind == T) return "t";
  std::string s = kind == E ? "e" : "f";
  if (v == Variant::Jmath) return s + std::to_string(2 * index - 1) + "/2";
  return s + std::to_string(index);
}

Letter parse_letter(const std::string& s, Variant v) {
  if (s == "t") {
    if (v != Variant::Imath) throw IndexOutOfRange("t exists only in the imath variant");
    return {Letter::T, 0};
  }
  if (s.size() < 2 || (s[0] != 'e' && s[0] != 'f')) throw std::invalid_argument("bad letter: " + s);
  Letter::Kind kind = s[0] == 'e' ? Letter::E : Letter::F;
  std::string rest = s.substr(1);
  auto slash = rest.find('/');
  if (v == Variant::Jmath) {
    if (slash == std::string::npos || rest.substr(slash + 1) != "2") throw IndexOutOfRange("jmath index must be a half integer: " + s);
    int odd = std::stoi(rest.substr(0, slash));
    if (odd % 2 == 0 || odd < 1) throw IndexOutOfRange("jmath index must be positive and half integral: " + s);
    return {kind, (odd + 1) / 2};
  }
  if (slash != std::string::npos) throw IndexOutOfRange("imath index must be an integer: " + s);
  return {kind, std::stoi(rest)};
}

Mat weight_matrix(const std::vector<int>& parts) {
  int n = static_cast<int>(parts.size()) - 1;
  Mat M(n);
  for (int a = 0; a <= n; ++a) {
    M.at(a, a) = parts[a];
    M.at(-a, -a) = parts[a];
  }
  return M;
}

bool valid_weight(Variant v, const std::vector<int>& parts) {
  if (parts.empty()) return false;
  int c = parts[0];
  if (v == Variant::Imath) return c == 1;
  return (c % 2 + 2) % 2 == 1;
}

namespace {

Algebra algebra_of(Variant v) { return v == Variant::Jmath ? Algebra::Kj : Algebra::KjGt; }

void check_index(Variant v, const Letter& l, int n) {
  if (l.kind == Letter::T) {
    if (v != Variant::Imath) throw IndexOutOfRange("t exists only in the imath variant");
    if (n < 1) throw IndexOutOfRange("t needs n >= 1");
    return;
  }
  int lo = 1, hi = v == Variant::Jmath ? n : n - 1;
  if (l.index < lo || l.index > hi) throw IndexOutOfRange("generator index out of range: " + l.str(v));
}

ChevShape shape_of(Variant v, const Letter& l) {
  int h = v == Variant::Jmath ? l.index : l.index + 1;
  return ChevShape{l.kind == Letter::F, h, 1};
}

LocElt lift(const SchurElt& x, const LocalizedBi& c) {
  LocElt r(Basis::Std);
  for (auto& [M, a] : x.terms()) r.add(M, c * LocalizedBi(a));
  return r;
}

// t 1_mu = [mu - E11 + E-1,1] + v^{-mu_1} (u - u^-1)/(v - v^-1) [mu]
LocElt t_times(const Mat& M, const LocalizedBi& c) {
  int n = M.n();
  std::vector<int> mu = M.ro();
  Mat T = Mat::diagonal(mu);
  T.add_theta(1, 1, -1);
  T.add_theta(-1, 1, 1);
  LocElt r = lift(multiply(SchurElt::single(T), SchurElt::single(M), Algebra::KjGt), c);
  int mu1 = mu[n + 1];
  LocalizedBi scalar(uv(1, -mu1) - uv(-1, -mu1), 1);
  r.add(M, c * scalar);
  return r;
}

LocalizedBi bracket_of(int r) { return LocalizedBi(bracket(r)); }

}  // namespace

LocElt apply_letter(Variant v, const Letter& l, const LocElt& x, int n) {
  check_index(v, l, n);
  LocElt r(Basis::Std);
  for (auto& [M, c] : x.terms()) {
    if (M.n() != n) throw DimMismatch("element of the wrong rank");
    if (l.kind == Letter::T) {
      r += t_times(M, c);
      continue;
    }
    Mat C = chevalley_with_co(n, shape_of(v, l), M.ro());
    if (!valid_in(C, algebra_of(v))) continue;  // the generator vanishes on this weight
    r += lift(mult_chevalley(C, M, algebra_of(v)), c);
  }
  return r;
}

LocElt aleph_eval(Variant v, const std::vector<Letter>& word, const std::vector<int>& lambda) {
  if (!valid_weight(v, lambda)) throw ProfileMismatch("weight not allowed for the variant");
  int n = static_cast<int>(lambda.size()) - 1;
  LocElt x = LocElt::single(weight_matrix(lambda));
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply_letter(v, *it, x, n);
  return x;
}

namespace {

using Word = std::vector<Letter>;

Letter E(int k) { return {Letter::E, k}; }
Letter F(int k) { return {Letter::F, k}; }
Letter Tt() { return {Letter::T, 0}; }

std::vector<int> shift_weight(Variant v, std::vector<int> lam, int k, int sign) {
  // lambda + sign * alpha
  if (v == Variant::Jmath) {
    lam[k - 1] += sign * (k == 1 ? 2 : 1);
    lam[k] -= sign;
  } else {
    lam[k] += sign;
    lam[k + 1] -= sign;
  }
  return lam;
}

struct Sides {
  LocElt lhs, rhs;
};

using RelFn = std::function<Sides(Variant, const std::vector<int>&, const std::vector<int>&)>;

LocElt ev(Variant v, const Word& w, const std::vector<int>& lam) { return aleph_eval(v, w, lam); }

LocElt scaled(const LocalizedBi& c, const LocElt& x) {
  LocElt r(Basis::Std);
  for (auto& [M, a] : x.terms()) r.add(M, c * a);
  return r;
}

const std::map<std::string, RelFn>& catalog() {
  static const std::map<std::string, RelFn> cat = {
      {"idempotents",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         // p is the second weight
         SchurElt prod = mult_chevalley(weight_matrix(p), weight_matrix(lam), algebra_of(v));
         LocElt want(Basis::Std);
         if (p == lam) want.add(weight_matrix(lam), LocalizedBi(1));
         return Sides{lift(prod, LocalizedBi(1)), want};
       }},
      {"weight_e",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         LocElt x = ev(v, {E(p[0])}, lam);
         LocElt lhs(Basis::Std);
         Mat target = weight_matrix(shift_weight(v, lam, p[0], 1));
         for (auto& [M, c] : x.terms()) lhs += lift(mult_chevalley(target, M, algebra_of(v)), c);
         return Sides{lhs, x};
       }},
      {"weight_f",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         LocElt x = ev(v, {F(p[0])}, lam);
         LocElt lhs(Basis::Std);
         Mat target = weight_matrix(shift_weight(v, lam, p[0], -1));
         for (auto& [M, c] : x.terms()) lhs += lift(mult_chevalley(target, M, algebra_of(v)), c);
         return Sides{lhs, x};
       }},
      {"weight_t",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         LocElt x = ev(v, {Tt()}, lam);
         LocElt lhs(Basis::Std);
         for (auto& [M, c] : x.terms()) lhs += lift(mult_chevalley(weight_matrix(lam), M, algebra_of(v)), c);
         return Sides{lhs, x};
       }},
      {"ef_commute",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         return Sides{ev(v, {E(p[0]), F(p[1])}, lam), ev(v, {F(p[1]), E(p[0])}, lam)};
       }},
      {"ef_bracket",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         int k = p[0];
         int r = v == Variant::Jmath ? lam[k - 1] - lam[k] : lam[k] - lam[k + 1];
         LocElt lhs = ev(v, {E(k), F(k)}, lam) - ev(v, {F(k), E(k)}, lam);
         return Sides{lhs, scaled(bracket_of(r), LocElt::single(weight_matrix(lam)))};
       }},
      {"ee_commute",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         return Sides{ev(v, {E(p[0]), E(p[1])}, lam), ev(v, {E(p[1]), E(p[0])}, lam)};
       }},
      {"ff_commute",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         return Sides{ev(v, {F(p[0]), F(p[1])}, lam), ev(v, {F(p[1]), F(p[0])}, lam)};
       }},
      {"serre_e",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         int i = p[0], j = p[1];
         return Sides{ev(v, {E(i), E(i), E(j)}, lam) + ev(v, {E(j), E(i), E(i)}, lam),
                      scaled(bracket_of(2), ev(v, {E(i), E(j), E(i)}, lam))};
       }},
      {"serre_f",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         int i = p[0], j = p[1];
         return Sides{ev(v, {F(i), F(i), F(j)}, lam) + ev(v, {F(j), F(i), F(i)}, lam),
                      scaled(bracket_of(2), ev(v, {F(i), F(j), F(i)}, lam))};
       }},
      {"eef",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         LocElt lhs = scaled(bracket_of(2), ev(v, {E(1), F(1), E(1)}, lam)) - ev(v, {E(1), E(1), F(1)}, lam) -
                      ev(v, {F(1), E(1), E(1)}, lam);
         int d = lam[0] - lam[1];
         LocalizedBi c = bracket_of(2) * LocalizedBi(uv(1, d) + uv(-1, -d));
         return Sides{lhs, scaled(c, ev(v, {E(1)}, lam))};
       }},
      {"ffe",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         LocElt lhs = scaled(bracket_of(2), ev(v, {F(1), E(1), F(1)}, lam)) - ev(v, {F(1), F(1), E(1)}, lam) -
                      ev(v, {E(1), F(1), F(1)}, lam);
         int d = lam[0] - lam[1] - 3;
         LocalizedBi c = bracket_of(2) * LocalizedBi(uv(1, d) + uv(-1, -d));
         return Sides{lhs, scaled(c, ev(v, {F(1)}, lam))};
       }},
      {"et_commute",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         return Sides{ev(v, {E(p[0]), Tt()}, lam), ev(v, {Tt(), E(p[0])}, lam)};
       }},
      {"ft_commute",
       [](Variant v, const std::vector<int>& p, const std::vector<int>& lam) {
         return Sides{ev(v, {F(p[0]), Tt()}, lam), ev(v, {Tt(), F(p[0])}, lam)};
       }},
      {"tte",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         return Sides{ev(v, {Tt(), Tt(), E(1)}, lam) + ev(v, {E(1), Tt(), Tt()}, lam),
                      scaled(bracket_of(2), ev(v, {Tt(), E(1), Tt()}, lam)) + ev(v, {E(1)}, lam)};
       }},
      {"eet",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         return Sides{ev(v, {E(1), E(1), Tt()}, lam) + ev(v, {Tt(), E(1), E(1)}, lam),
                      scaled(bracket_of(2), ev(v, {E(1), Tt(), E(1)}, lam))};
       }},
      {"ttf",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         return Sides{ev(v, {Tt(), Tt(), F(1)}, lam) + ev(v, {F(1), Tt(), Tt()}, lam),
                      scaled(bracket_of(2), ev(v, {Tt(), F(1), Tt()}, lam)) + ev(v, {F(1)}, lam)};
       }},
      {"fft",
       [](Variant v, const std::vector<int>&, const std::vector<int>& lam) {
         return Sides{ev(v, {F(1), F(1), Tt()}, lam) + ev(v, {Tt(), F(1), F(1)}, lam),
                      scaled(bracket_of(2), ev(v, {F(1), Tt(), F(1)}, lam))};
       }},
  };
  return cat;
}

int max_denominator(const LocElt& x) {
  int k = 0;
  for (auto& [M, c] : x.terms()) k = std::max(k, c.denom_power());
  return k;
}

// Parameter lists for a tag at rank n.
std::vector<std::vector<int>> params_for(Variant v, const std::string& tag, int n) {
  int hi = v == Variant::Jmath ? n : n - 1;
  std::vector<std::vector<int>> out;
  auto singles = [&](int lo) {
    for (int k = lo; k <= hi; ++k) out.push_back({k});
  };
  auto pairs = [&](auto pred) {
    for (int a = 1; a <= hi; ++a)
      for (int b = 1; b <= hi; ++b)
        if (pred(a, b)) out.push_back({a, b});
  };
  if (tag == "weight_e" || tag == "weight_f") singles(1);
  else if (tag == "ef_bracket") singles(v == Variant::Jmath ? 2 : 1);
  else if (tag == "ef_commute") pairs([](int a, int b) { return a != b; });
  else if (tag == "ee_commute" || tag == "ff_commute") pairs([](int a, int b) { return std::abs(a - b) > 1; });
  else if (tag == "serre_e" || tag == "serre_f") pairs([](int a, int b) { return std::abs(a - b) == 1; });
  else if (tag == "et_commute" || tag == "ft_commute") singles(2);
  else if (tag == "eef" || tag == "ffe") {
    if (n >= 1) out.push_back({});
  } else if (tag == "tte" || tag == "eet" || tag == "ttf" || tag == "fft") {
    if (n >= 2) out.push_back({});
  } else if (tag == "weight_t") {
    out.push_back({});
  }
  return out;
}

}  // namespace

std::vector<std::string> relation_tags(Variant v) {
  if (v == Variant::Jmath)
    return {"idempotents", "weight_e", "weight_f", "ef_commute", "ef_bracket", "ee_commute",
            "ff_commute", "serre_e", "serre_f", "eef", "ffe"};
  return {"idempotents", "weight_e", "weight_f", "weight_t", "ef_commute", "ef_bracket", "ee_commute", "ff_commute",
          "serre_e", "serre_f", "et_commute", "ft_commute", "ttf", "fft", "tte", "eet"};
}

RelationCheck verify_relation(Variant v, const std::string& tag, const std::vector<int>& params,
                              const std::vector<int>& lambda) {
  auto it = catalog().find(tag);
  if (it == catalog().end()) throw std::invalid_argument("unknown relation: " + tag);
  auto tags = relation_tags(v);
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw std::invalid_argument("relation not in this catalog: " + tag);
  RelationCheck r;
  r.relation = tag;
  r.lambda = lambda;
  r.params = params;
  Sides s = it->second(v, params, lambda);
  r.lhs = std::move(s.lhs);
  r.rhs = std::move(s.rhs);
  r.denom_power = std::max(max_denominator(r.lhs), max_denominator(r.rhs));
  // clear (v - v^-1)^k on both sides and compare Laurent numerators
  bool same = true;
  std::map<Mat, std::pair<BiLaurent, BiLaurent>> cmp;
  for (auto& [M, c] : r.lhs.terms()) cmp[M].first = c.numerator_at(r.denom_power);
  for (auto& [M, c] : r.rhs.terms()) cmp[M].second = c.numerator_at(r.denom_power);
  for (auto& [M, p] : cmp)
    if (p.first != p.second) same = false;
  r.holds = same;
  return r;
}

std::vector<std::vector<int>> weight_window(Variant v, int n, int window) {
  std::vector<std::vector<int>> out;
  std::vector<int> lam(n + 1, 0);
  std::function<void(int)> rec = [&](int a) {
    if (a > n) {
      if (valid_weight(v, lam)) out.push_back(lam);
      return;
    }
    for (int x = -window; x <= window; ++x) {
      lam[a] = x;
      rec(a + 1);
    }
  };
  if (window < 0) return out;
  rec(0);
  return out;
}

std::vector<RelationCheck> verify_suite(Variant v, int n, int window) {
  std::vector<RelationCheck> out;
  for (auto& lam : weight_window(v, n, window))
    for (auto& tag : relation_tags(v)) {
      if (tag == "idempotents") {
        // the weight itself and its neighbours
        std::vector<std::vector<int>> others{lam};
        int hi = v == Variant::Jmath ? n : n - 1;
        for (int k = 1; k <= hi; ++k)
          for (int s : {1, -1}) others.push_back(shift_weight(v, lam, k, s));
        for (auto& mu : others) {
          if (!valid_weight(v, mu)) continue;
          out.push_back(verify_relation(v, tag, mu, lam));
        }
        continue;
      }
      for (auto& p : params_for(v, tag, n)) out.push_back(verify_relation(v, tag, p, lam));
    }
  return out;
}

std::string to_string(const LocElt& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto& [M, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + M.str();
  }
  return s;
}

}  // namespace qschur
