#include "qschur/type_d.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qschur {

char sign_char(DSign s) { return s == DSign::Zero ? '0' : (s == DSign::Plus ? '+' : '-'); }

DSign parse_sign(char c) {
  switch (c) {
    case '0': return DSign::Zero;
    case '+': return DSign::Plus;
    case '-': return DSign::Minus;
  }
  throw std::invalid_argument(std::string("bad sign: ") + c);
}

DSign combine_signs(DSign left, DSign right) { return left != DSign::Zero ? left : right; }

namespace {

DSign flip(DSign s) {
  if (s == DSign::Plus) return DSign::Minus;
  if (s == DSign::Minus) return DSign::Plus;
  return s;
}

BiLaurent lift(const UniLaurent& a) {
  BiLaurent r;
  for (auto& [e, c] : a.terms()) r += uv(0, e[0], c);
  return r;
}

BiLaurent d_fact_bi(int a00) { return lift(d_factorial(a00 / 2)); }

// all vectors of `len` naturals summing to `total`
void for_each_split(int len, int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(len, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == len - 1) {
      t[k] = left;
      f(t);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      t[k] = x;
      rec(k + 1, left - x);
    }
  };
  if (len == 0) return;
  rec(0, total);
}

}  // namespace

int SignedComp::d() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool SignedComp::valid() const {
  if (parts.empty()) return false;
  for (int p : parts)
    if (p < 0) return false;
  return (sign == DSign::Zero) == (parts[0] > 0);
}

std::string SignedComp::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")" + sign_char(sign);
}

std::vector<SignedComp> all_signed_compositions(int n, int d) {
  std::vector<SignedComp> out;
  for (auto& c : all_compositions(n, d)) {
    if (c.part(0) > 0) {
      out.push_back({c.parts(), DSign::Zero});
    } else {
      out.push_back({c.parts(), DSign::Plus});
      out.push_back({c.parts(), DSign::Minus});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Blocks blocks_d(const SignedComp& c) {
  for (int p : c.parts)
    if (p < 0) throw std::invalid_argument("negative composition part");
  if (c.sign != DSign::Zero && c.parts[0] > 0) throw std::invalid_argument("signed composition with a positive middle part");
  int n = c.n();
  std::vector<std::vector<int>> sets(2 * n + 1);
  for (int x = 1; x <= c.parts[0]; ++x) {
    sets[n].push_back(x);
    sets[n].push_back(-x);
  }
  int lo = c.parts[0];
  for (int i = 1; i <= n; ++i) {
    for (int x = lo + 1; x <= lo + c.parts[i]; ++x) {
      sets[n + i].push_back(x);
      sets[n - i].push_back(-x);
    }
    lo += c.parts[i];
  }
  if (c.sign == DSign::Minus)
    for (auto& s : sets)
      for (int& x : s)
        if (x == 1 || x == -1) x = -x;
  return Blocks(Family::D, c.d(), n, std::move(sets));
}

std::string SignedMat::str() const { return base.str() + sign_char(sign); }

bool is_signed_index(const SignedMat& A) {
  const Mat& M = A.base;
  if (!M.all_nonneg() || !M.centro_symmetric() || M.total() % 2 != 0) return false;
  int n = M.n();
  bool both = M.ro()[n] > 0 && M.co()[n] > 0;
  return both == (A.sign == DSign::Zero);
}

std::vector<SignedMat> enumerate_xi_d(int n, int d) {
  // free entries: a00 / 2, a_0j (j > 0), a_ij (i > 0); they sum to d
  std::vector<std::pair<int, int>> slots{{0, 0}};
  for (int j = 1; j <= n; ++j) slots.push_back({0, j});
  for (int i = 1; i <= n; ++i)
    for (int j = -n; j <= n; ++j) slots.push_back({i, j});
  std::vector<SignedMat> out;
  for_each_split(static_cast<int>(slots.size()), d, [&](const std::vector<int>& t) {
    Mat M(n);
    M.at(0, 0) = 2 * t[0];
    for (std::size_t k = 1; k < slots.size(); ++k) {
      auto [i, j] = slots[k];
      M.at(i, j) = t[k];
      M.at(-i, -j) = t[k];
    }
    for (DSign s : {DSign::Zero, DSign::Plus, DSign::Minus}) {
      SignedMat A{M, s};
      if (is_signed_index(A)) out.push_back(A);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

DSign s_left(const SignedMat& A) { return A.base.ro()[A.n()] > 0 ? DSign::Zero : A.sign; }

DSign s_right(const SignedMat& A) {
  int n = A.n();
  if (A.base.co()[n] > 0) return DSign::Zero;
  if (A.base.ro()[n] == 0 && parity(A) == DSign::Minus) return flip(A.sign);
  return A.sign;
}

DSign parity(const SignedMat& A) {
  int n = A.n(), s = 0;
  for (int i = -n; i < 0; ++i)
    for (int j = 1; j <= n; ++j) s += A.base(i, j);
  return s % 2 ? DSign::Minus : DSign::Plus;
}

SignedMat kappa_d(const SignedComp& row, const SignedPerm& g, const SignedComp& col) {
  if (!row.valid() || !col.valid()) throw std::invalid_argument("invalid signed composition");
  if (row.n() != col.n() || row.d() != col.d()) throw DimMismatch("compositions of different shape");
  Blocks L = blocks_d(row), M = blocks_d(col);
  if (!is_min_double(g, L, M)) throw NotMinimalRep("kappa needs a minimal double coset representative");
  int n = row.n();
  Mat A(n);
  for (int j = -n; j <= n; ++j)
    for (int x : M.R(j)) {
      int y = g(x);
      for (int i = -n; i <= n; ++i) {
        const auto& R = L.R(i);
        if (std::find(R.begin(), R.end(), y) != R.end()) {
          ++A.at(i, j);
          break;
        }
      }
    }
  return {A, combine_signs(row.sign, col.sign)};
}

namespace {

const std::map<SignedMat, std::vector<KappaTripleD>>& kappa_table(int n, int d) {
  thread_local std::map<std::pair<int, int>, std::map<SignedMat, std::vector<KappaTripleD>>> cache;
  auto key = std::make_pair(n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (group_order(Family::D, d) > kSizeGuard) throw SizeGuardExceeded("type D group too large");
  std::map<SignedMat, std::vector<KappaTripleD>> table;
  auto comps = all_signed_compositions(n, d);
  for (auto& row : comps)
    for (auto& col : comps)
      for (auto& g : min_double_reps(blocks_d(row), blocks_d(col))) {
        SignedMat A = kappa_d(row, g, col);
        table[A].push_back(KappaTripleD{row, g, col});
      }
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

KappaTripleD kappa_d_inv(const SignedMat& A) {
  if (!is_signed_index(A)) throw std::invalid_argument("not a signed matrix: " + A.str());
  const auto& table = kappa_table(A.n(), A.d());
  auto it = table.find(A);
  if (it == table.end()) throw std::logic_error("signed matrix without a double coset: " + A.str());
  if (it->second.size() == 1) return it->second.front();
  // shared by two cosets: take the one with g(1) > 0
  for (auto& k : it->second)
    if (k.g(1) > 0) return k;
  throw std::logic_error("no preimage with g(1) > 0: " + A.str());
}

std::vector<KappaTripleD> kappa_d_preimages(const SignedMat& A) {
  if (!is_signed_index(A)) throw std::invalid_argument("not a signed matrix: " + A.str());
  const auto& table = kappa_table(A.n(), A.d());
  auto it = table.find(A);
  return it == table.end() ? std::vector<KappaTripleD>{} : it->second;
}

int length_d(const SignedMat& A) {
  const Mat& M = A.base;
  int n = M.n();
  auto a1 = [&](int i, int j) { return i == 0 && j == 0 ? M(0, 0) / 2 : M(i, j); };
  auto a2 = [&](int i, int j) { return i == 0 && j == 0 ? M(0, 0) - 1 : M(i, j); };
  long twice = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i == 0 ? 0 : -n; j <= n; ++j) {
      int w = a1(i, j);
      if (w == 0) continue;
      for (int x = -n; x <= n; ++x)
        for (int y = -n; y <= n; ++y)
          if ((x > i && y < j) || (x < i && y > j)) twice += static_cast<long>(w) * a2(x, y);
    }
  if (twice % 2 != 0) throw std::logic_error("odd doubled length for " + A.str());
  return static_cast<int>(twice / 2);
}

UniLaurent fact_d(const SignedMat& A) {
  const Mat& M = A.base;
  int n = M.n();
  BiLaurent r = d_fact_bi(M(0, 0));
  for (int j = 1; j <= n; ++j) r *= qfact(M(0, j));
  for (int i = 1; i <= n; ++i)
    for (int j = -n; j <= n; ++j) r *= qfact(M(i, j));
  return v_only(r);
}

SignedComp delta_d(const SignedMat& A) {
  const Mat& M = A.base;
  int n = M.n();
  std::vector<int> parts{M(0, 0) / 2};
  for (int i = 1; i <= n; ++i) parts.push_back(M(i, 0));
  for (int j = 1; j <= n; ++j)
    for (int i = -n; i <= n; ++i) parts.push_back(M(i, j));
  DSign s = s_right(A);
  // empty middle part under a sign-zero column: the side of the swap comes from the parity
  if (parts[0] == 0 && s == DSign::Zero)
    s = A.sign == DSign::Zero ? DSign::Plus : parity(A) == DSign::Plus ? A.sign : flip(A.sign);
  return {parts, s};
}

void SchurEltD::add(const SignedMat& A, const UniLaurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(A, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniLaurent SchurEltD::coeff(const SignedMat& A) const {
  auto it = terms_.find(A);
  return it == terms_.end() ? UniLaurent() : it->second;
}

std::string SchurEltD::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [A, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str({"v"}) + ")e" + A.str();
  }
  return s;
}

int chevalley_case_d(const SignedMat& B) {
  auto s = chevalley_shape(B.base);
  if (!s) throw NotChevalley("not a Chevalley matrix: " + B.str());
  if (s->amount == 0) return 0;
  if (s->lower) return s->h == 1 ? 2 : 1;
  return s->h == 1 ? 4 : 3;
}

namespace {

void check_pair(const SignedMat& B, const SignedMat& A) {
  if (!is_signed_index(B) || !is_signed_index(A)) throw std::invalid_argument("not a signed matrix");
  if (B.n() != A.n() || B.d() != A.d()) throw DimMismatch("signed matrices of different shape");
  if (B.base.co() != A.base.ro() || s_right(B) != s_left(A))
    throw CompatMismatch("incompatible factors " + B.str() + " " + A.str());
}

// Adds c e_T when T with the product sign is a signed matrix with the
// expected one-sided signs; otherwise the term is zero.
void add_target(SchurEltD& r, const Mat& T, const SignedMat& B, const SignedMat& A, const BiLaurent& c) {
  if (!T.all_nonneg()) return;
  SignedMat X{T, combine_signs(s_left(B), s_right(A))};
  if (!is_signed_index(X) || s_left(X) != s_left(B) || s_right(X) != s_right(A)) return;
  r.add(X, v_only(c));
}

// A + t_p E^theta_{to,p} - t_p E^theta_{from,p}
Mat moved(const Mat& A, int to, int from, const std::vector<int>& t) {
  int n = A.n();
  Mat T = A;
  for (int p = -n; p <= n; ++p) {
    int x = t[p + n];
    if (!x) continue;
    T.add_theta(to, p, x);
    T.add_theta(from, p, -x);
  }
  return T;
}

}  // namespace

SchurEltD mult_d(const SignedMat& B, const SignedMat& A) {
  check_pair(B, A);
  SchurEltD r;
  int kind = chevalley_case_d(B);
  if (kind == 0) {
    r.add(A, UniLaurent(1));
    return r;
  }
  ChevShape s = *chevalley_shape(B.base);
  const Mat& M = A.base;
  int n = M.n(), h = s.h;
  auto a = [&](int i, int j) { return M(i, j); };
  for_each_split(2 * n + 1, s.amount, [&](const std::vector<int>& tv) {
    auto t = [&](int p) { return tv[p + n]; };
    BiLaurent c(1);
    int e = 0;
    if (kind == 1 || kind == 2) {
      for (int p = -n; p <= n; ++p)
        for (int k = -n; k < p; ++k) e += 2 * t(p) * a(h, k);
      for (int p = -n; p <= n; ++p) c *= qbinom(a(h, p) + t(p), t(p));
      if (kind == 2) {
        int half = a(0, 0) / 2;
        bool extra = 2 * s.amount != M.ro()[n] && half != 0 && half == t(0);
        if (extra) c *= BiLaurent(2);
      }
      add_target(r, moved(M, h, h - 1, tv), B, A, vpow(e) * c);
    } else if (kind == 3) {
      for (int p = -n; p <= n; ++p)
        for (int k = p + 1; k <= n; ++k) e += 2 * t(p) * a(h - 1, k);
      for (int p = -n; p <= n; ++p) c *= qbinom(a(h - 1, p) + t(p), t(p));
      add_target(r, moved(M, h - 1, h, tv), B, A, vpow(e) * c);
    } else {
      for (int p = -n; p <= n; ++p)
        for (int k = p + 1; k <= n; ++k) e += 2 * a(0, k) * t(p);
      for (int p = -n; p < 0; ++p) {
        for (int k = p + 1; k < -p; ++k) e += 2 * t(p) * t(k);
        e += t(p) * (t(p) - 1);
      }
      BiLaurent num = d_fact_bi(a(0, 0) + 2 * t(0)), den = d_fact_bi(a(0, 0)) * qfact(t(0));
      for (int p = 1; p <= n; ++p) {
        num *= qfact(a(0, p) + t(p) + t(-p));
        den *= qfact(a(0, p)) * qfact(t(p)) * qfact(t(-p));
      }
      add_target(r, moved(M, 0, 1, tv), B, A, vpow(e) * num.exact_div(den));
    }
  });
  return r;
}

bool shared_by_two_cosets(const SignedMat& A) {
  const Mat& M = A.base;
  return A.sign == DSign::Zero && M(0, 0) == 0;
}

SchurEltD mult_d_unit(const SignedMat& B, const SignedMat& A, UnitDoubling dbl) {
  check_pair(B, A);
  int kind = chevalley_case_d(B);
  SchurEltD r;
  if (kind == 0) {
    r.add(A, UniLaurent(1));
    return r;
  }
  ChevShape s = *chevalley_shape(B.base);
  if (s.amount != 1) throw std::invalid_argument("amount-one formulas need amount one");
  const Mat& M = A.base;
  int n = M.n(), h = s.h;
  for (int p = -n; p <= n; ++p) {
    std::vector<int> tv(2 * n + 1, 0);
    tv[p + n] = 1;
    int e = 0;
    BiLaurent c;
    if (kind == 1 || kind == 2) {
      for (int k = -n; k < p; ++k) e += 2 * M(h, k);
      c = qnum(M(h, p) + 1);
      if (kind == 2 && p == 0) {
        bool twice = M.ro()[n] != 2 && (dbl == UnitDoubling::Printed || M(0, 0) == 2);
        if (twice) c *= BiLaurent(2);
      }
      add_target(r, moved(M, h, h - 1, tv), B, A, vpow(e) * c);
    } else {
      int row = kind == 3 ? h - 1 : 0;
      for (int k = p + 1; k <= n; ++k) e += 2 * M(row, k);
      c = qnum(M(row, p) + 1);
      if (kind == 4 && p == 0) c = qnum(M(0, 0) + 1) + (M(0, 0) != 0 ? vpow(M(0, 0)) : BiLaurent());
      add_target(r, moved(M, h - 1, h, tv), B, A, vpow(e) * c);
    }
  }
  return r;
}

SchurEltD oracle_mult_d(const SignedMat& B, const SignedMat& A) {
  check_pair(B, A);
  if (A.d() > 3) throw SizeGuardExceeded("type D oracle limited to d <= 3");
  KappaTripleD kb = kappa_d_inv(B), ka = kappa_d_inv(A);
  Blocks L = blocks_d(kb.row), N = blocks_d(ka.col);
  // e_B(x_mu T_g x_nu) / [A]!_D
  HeckeElt P = coset_sum(L, kb.g, blocks_d(kb.col)) * HeckeElt::T(ka.g);
  P = times_sum(P, parabolic_elements(N)).exact_div(lift(fact_d(A)));
  SchurEltD r;
  // both double cosets of a shared signed matrix are read as that matrix
  for (auto& [y, c] : reexpress_coset(P, L, N)) r.add(kappa_d(kb.row, y, ka.col), v_only(c));
  return r;
}

}  // namespace qschur
