// Exact Laurent polynomial arithmetic over Z in one, two or three variables.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}
}  // namespace detail

// Sparse Laurent polynomial in N commuting variables.  Terms are kept sorted
// by exponent vector (lexicographic) and zero coefficients are never stored,
// so operator== is semantic equality.
template <int N>
class Laurent {
 public:
  using Exp = std::array<int, N>;
  using Term = std::pair<Exp, int64_t>;

  Laurent() = default;
  Laurent(int64_t c) {  // NOLINT: implicit constants are convenient in formulas
    if (c != 0) terms_.push_back({Exp{}, c});
  }

  static Laurent monomial(const Exp& e, int64_t c = 1) {
    Laurent r;
    if (c != 0) r.terms_.push_back({e, c});
    return r;
  }
  static Laurent from_terms(std::vector<Term> ts) {
    Laurent r;
    r.terms_ = std::move(ts);
    r.normalize();
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of a given monomial (0 when absent).
  int64_t coeff(const Exp& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, 1); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, -1); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc.push_back({add_exp(ea, eb), detail::checked_mul(ca, cb)});
    return from_terms(std::move(acc));
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

  // Multiply by the monomial x^e.
  Laurent shift(const Exp& e) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first = add_exp(t.first, e);
    return r;
  }

  // Inverts every variable.
  Laurent bar() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Exp ne;
      for (int k = 0; k < N; ++k) ne[k] = -e[k];
      r.terms_.push_back({ne, c});
    }
    std::sort(r.terms_.begin(), r.terms_.end());
    return r;
  }

  Laurent pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    Laurent r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // Exact quotient, or nullopt when b does not divide *this in the Laurent ring.
  std::optional<Laurent> try_div(const Laurent& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return Laurent{};
    if (b.terms_.size() == 1) {
      const auto& [eb, cb] = b.terms_[0];
      Laurent q;
      for (const auto& [e, c] : terms_) {
        if (c % cb != 0) return std::nullopt;
        q.terms_.push_back({sub_exp(e, eb), c / cb});
      }
      return q;
    }
    // The Newton polytope of the quotient is the Minkowski difference, so each
    // coordinate of a quotient exponent lies in a known box.
    Exp lo, hi;
    {
      Exp alo = min_coords(), ahi = max_coords(), blo = b.min_coords(), bhi = b.max_coords();
      for (int k = 0; k < N; ++k) {
        lo[k] = alo[k] - blo[k];
        hi[k] = ahi[k] - bhi[k];
        if (lo[k] > hi[k]) return std::nullopt;
      }
    }
    const auto& [lb_e, lb_c] = b.terms_.back();
    Laurent r = *this;
    std::vector<Term> qt;
    while (!r.is_zero()) {
      const auto& [le, lc] = r.terms_.back();
      if (lc % lb_c != 0) return std::nullopt;
      Exp qe = sub_exp(le, lb_e);
      for (int k = 0; k < N; ++k)
        if (qe[k] < lo[k] || qe[k] > hi[k]) return std::nullopt;
      Term qterm{qe, lc / lb_c};
      qt.push_back(qterm);
      r = r - b.times_term(qterm);
    }
    std::reverse(qt.begin(), qt.end());
    return from_terms(std::move(qt));
  }

  Laurent exact_div(const Laurent& b) const {
    auto q = try_div(b);
    if (!q) throw NonExactDivision("non-exact division: (" + str() + ") / (" + b.str() + ")");
    return *q;
  }

  Exp min_coords() const {
    Exp m;
    m.fill(0);
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (const auto& t : terms_)
      for (int k = 0; k < N; ++k) m[k] = std::min(m[k], t.first[k]);
    return m;
  }
  Exp max_coords() const {
    Exp m;
    m.fill(0);
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (const auto& t : terms_)
      for (int k = 0; k < N; ++k) m[k] = std::max(m[k], t.first[k]);
    return m;
  }

  // Human readable form using the given variable names.
  std::string str(const std::array<const char*, N>& names = default_names()) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      int64_t ac = c < 0 ? -c : c;
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      if (ac != 1 || constant) s += std::to_string(ac);
      for (int k = 0; k < N; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty() && s.back() != ' ' && s.back() != '-') s += "*";
        s += names[k];
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
      }
    }
    return s;
  }

  static std::array<const char*, N> default_names() {
    if constexpr (N == 1) return {"v"};
    else if constexpr (N == 2) return {"u", "v"};
    else return {"u", "v", "p"};
  }

 private:
  std::vector<Term> terms_;

  static Exp add_exp(const Exp& a, const Exp& b) {
    Exp r;
    for (int k = 0; k < N; ++k) r[k] = a[k] + b[k];
    return r;
  }
  static Exp sub_exp(const Exp& a, const Exp& b) {
    Exp r;
    for (int k = 0; k < N; ++k) r[k] = a[k] - b[k];
    return r;
  }

  Laurent times_term(const Term& t) const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.push_back({add_exp(e, t.first), detail::checked_mul(c, t.second)});
    return r;
  }

  static Laurent merge(const Laurent& a, const Laurent& b, int sign) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.push_back({j->first, sign * j->second});
        ++j;
      } else {
        int64_t c = detail::checked_add(i->second, sign * j->second);
        if (c != 0) r.terms_.push_back({i->first, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) out.back().second = detail::checked_add(out.back().second, t.second);
      else out.push_back(t);
      if (out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }
};

using UniLaurent = Laurent<1>;
using BiLaurent = Laurent<2>;
using TriLaurent = Laurent<3>;

inline BiLaurent uv(int i, int j, int64_t c = 1) { return BiLaurent::monomial({i, j}, c); }
inline BiLaurent vpow(int j) { return BiLaurent::monomial({0, j}); }
inline BiLaurent upow(int i) { return BiLaurent::monomial({i, 0}); }
inline UniLaurent wpow(int k, int64_t c = 1) { return UniLaurent::monomial({k}, c); }

// Weight function on the generators: L0 on s0, L1 on the others.
struct WeightFn {
  int L0 = 1;
  int L1 = 1;
  WeightFn() = default;
  WeightFn(int l0, int l1);
  int c() const { return std::gcd(L0, L1); }
  friend bool operator==(const WeightFn&, const WeightFn&) = default;
};

// u^i v^j -> w^{i L0 + j L1}
UniLaurent specialize(const BiLaurent& a, const WeightFn& L);
// Reads a polynomial in v alone (no u) as a one-variable polynomial.
UniLaurent v_only(const BiLaurent& a);
BiLaurent from_v(const UniLaurent& a);

// Element numerator / (v - v^-1)^k, kept reduced.
class LocalizedBi {
 public:
  LocalizedBi() = default;
  LocalizedBi(BiLaurent num, int k = 0);
  LocalizedBi(int64_t c) : LocalizedBi(BiLaurent(c)) {}  // NOLINT

  const BiLaurent& numerator() const { return num_; }
  int denom_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  // Numerator over (v - v^-1)^k for a prescribed k >= denom_power().
  BiLaurent numerator_at(int k) const;

  friend LocalizedBi operator+(const LocalizedBi& a, const LocalizedBi& b);
  friend LocalizedBi operator-(const LocalizedBi& a, const LocalizedBi& b);
  friend LocalizedBi operator*(const LocalizedBi& a, const LocalizedBi& b);
  LocalizedBi operator-() const { return LocalizedBi(-num_, k_); }
  LocalizedBi& operator+=(const LocalizedBi& o) { return *this = *this + o; }
  LocalizedBi& operator-=(const LocalizedBi& o) { return *this = *this - o; }
  friend bool operator==(const LocalizedBi& a, const LocalizedBi& b) { return a.k_ == b.k_ && a.num_ == b.num_; }
  friend bool operator!=(const LocalizedBi& a, const LocalizedBi& b) { return !(a == b); }
  friend bool operator<(const LocalizedBi& a, const LocalizedBi& b) {
    return a.k_ != b.k_ ? a.k_ < b.k_ : a.num_ < b.num_;
  }
  std::string str() const;

 private:
  BiLaurent num_;
  int k_ = 0;
  void reduce();
};

// v - v^-1
BiLaurent v_minus_vinv();

// Quantum integers and friends, all in Z[v, v^-1] unless u appears explicitly.
BiLaurent qnum(int a);                 // (v^{2a} - 1)/(v^2 - 1)
BiLaurent qfact(int t);                // [1][2]...[t]
BiLaurent qbinom(int a, int b);        // prod_{i=1..b} (v^{2(a-i+1)} - 1)/(v^{2i} - 1)
BiLaurent bc_even(int t);              // [t](u^2 v^{2(t-1)} + 1)
BiLaurent bc_factorial(int t);         // prod_{k=1..t} bc_even(k)
BiLaurent bracket(int r);              // (v^r - v^-r)/(v - v^-1)
UniLaurent d_factorial(int k);         // type D factorial attached to a middle entry 2k

}  // namespace qschur
