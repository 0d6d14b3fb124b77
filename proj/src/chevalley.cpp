#include "qschur/chevalley.hpp"

#include <map>

namespace qschur {

bool valid_in(const Mat& A, Algebra alg) {
  switch (alg) {
    case Algebra::Schur:
      return is_schur_index(A);
    case Algebra::Kj:
      return is_stab_index(A);
    case Algebra::KjGt:
      return is_stab_index(A) && A(0, 0) > 0;
  }
  return false;
}

const BiLaurent& qbinom_cached(int a, int b) {
  thread_local std::map<std::pair<int, int>, BiLaurent> memo;
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, qbinom(a, b)).first->second;
}

const BiLaurent& bar_qbinom(int a, int b) {
  thread_local std::map<std::pair<int, int>, BiLaurent> memo;
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, qbinom_cached(a, b).bar()).first->second;
}

namespace {

void enumerate_t(int pos, int left, const std::vector<int>& cap, std::vector<int>& t,
                 std::vector<std::vector<int>>& out) {
  int N = static_cast<int>(cap.size());
  if (pos == N - 1) {
    if (left <= cap[pos]) {
      t[pos] = left;
      out.push_back(t);
    }
    return;
  }
  for (int x = 0; x <= std::min(left, cap[pos]); ++x) {
    t[pos] = x;
    enumerate_t(pos + 1, left - x, cap, t, out);
  }
  t[pos] = 0;
}

// Factor [a + 1] ... [a + t0] with the u-twisted even numbers, over [t0]!.
BiLaurent middle_ratio(int anat, int t0) {
  BiLaurent num(1);
  for (int k = anat + 1; k <= anat + t0; ++k) num *= bc_even(k);
  return num.exact_div(qfact(t0));
}

}  // namespace

std::vector<ChevTerm> chevalley_range(const ChevShape& s, const Mat& A, Algebra alg) {
  int n = A.n(), N = 2 * n + 1, h = s.h;
  auto T = [&](const std::vector<int>& t, int l) { return t[l + n]; };
  std::vector<int> cap(N, s.amount);
  if (s.lower) {
    for (int l = -n; l <= n; ++l) {
      if (h > 1) {
        if (alg == Algebra::Schur || l != h - 1) cap[l + n] = std::min(cap[l + n], A(h - 1, l));
      } else if (l != 0) {
        cap[l + n] = std::min(cap[l + n], A(0, l));
      }
    }
  } else {
    for (int l = -n; l <= n; ++l)
      if (alg == Algebra::Schur || l != h) cap[l + n] = std::min(cap[l + n], A(h, l));
  }
  for (int& c : cap)
    if (c < 0) return {};
  std::vector<std::vector<int>> ts;
  std::vector<int> t(N, 0);
  enumerate_t(0, s.amount, cap, t, ts);

  std::vector<ChevTerm> out;
  for (auto& tv : ts) {
    if (s.lower && h == 1) {
      bool ok = true;
      for (int l = 1; l <= n; ++l)
        if (T(tv, l) + T(tv, -l) > A(0, l)) ok = false;
      if (alg != Algebra::Kj && 2 * T(tv, 0) > A(0, 0)) ok = false;
      if (!ok) continue;
    }
    Mat Z = A;
    for (int l = -n; l <= n; ++l) {
      int x = T(tv, l);
      if (!x) continue;
      if (s.lower) {
        Z.add_theta(h, l, x);
        Z.add_theta(h - 1, l, -x);
      } else {
        Z.add_theta(h, l, -x);
        Z.add_theta(h - 1, l, x);
      }
    }
    out.push_back({tv, std::move(Z)});
  }
  return out;
}

BiLaurent chevalley_coeff(const ChevShape& s, const Mat& A, const std::vector<int>& t, int skip) {
  int n = A.n(), h = s.h;
  auto T = [&](int l) { return t[l + n]; };
  BiLaurent c(1);
  if (s.lower) {
    int ue = 0;
    long beta = 0;
    for (int l = -n; l <= n; ++l) {
      if (!T(l)) continue;
      for (int k = -n; k <= l; ++k) beta += static_cast<long>(T(l)) * A(h, k);
      for (int k = -n; k < l; ++k) beta -= static_cast<long>(T(l)) * (A(h - 1, k) - T(k));
    }
    if (h == 1) {
      for (int l = 1; l <= n; ++l) {
        ue -= T(l);
        beta += T(l) * (T(l) + 3) / 2;
        for (int k = -l + 1; k < l; ++k) beta += T(l) * T(k);
      }
    }
    c = uv(ue, static_cast<int>(beta));
    for (int l = -n; l <= n; ++l)
      if (T(l) && l != skip) c *= bar_qbinom(A(h, l) + T(l), T(l));
    return c;
  }
  if (h != 1) {
    long beta = 0;
    for (int l = -n; l <= n; ++l) {
      if (!T(l)) continue;
      for (int k = l; k <= n; ++k) beta += static_cast<long>(T(l)) * A(h - 1, k);
      for (int k = l + 1; k <= n; ++k) beta -= static_cast<long>(T(l)) * (A(h, k) - T(k));
    }
    c = vpow(static_cast<int>(beta));
    for (int l = -n; l <= n; ++l)
      if (T(l) && l != skip) c *= bar_qbinom(A(h - 1, l) + T(l), T(l));
    return c;
  }
  int ue = 0;
  long beta = 0;
  for (int l = -n; l <= n; ++l) {
    if (!T(l)) continue;
    for (int k = l; k <= n; ++k) beta += static_cast<long>(T(l)) * A(0, k);
    for (int k = l + 1; k <= n; ++k) beta -= static_cast<long>(T(l)) * (A(1, k) - T(k));
  }
  for (int l = -n; l <= 0; ++l) {
    ue += T(l);
    beta += T(l) * (T(l) - 3) / 2;
    for (int k = l + 1; k <= -l; ++k) beta += T(l) * T(k);
  }
  BiLaurent ratio = middle_ratio((A(0, 0) - 1) / 2, T(0));
  for (int l = 1; l <= n; ++l) {
    int s2 = T(l) + T(-l);
    if (!s2) continue;
    ratio *= qbinom_cached(A(0, l) + s2, s2) * qbinom_cached(s2, T(l));
  }
  return uv(ue, static_cast<int>(beta)) * ratio.bar();
}

BiLaurent chevalley_coeff_e(const ChevShape& s, const Mat& A, const std::vector<int>& t) {
  int n = A.n(), h = s.h;
  auto T = [&](int l) { return t[l + n]; };
  if (s.lower || h != 1) {
    int row = s.lower ? h : h - 1;
    long e = 0;
    for (int l = -n; l <= n; ++l) {
      if (!T(l)) continue;
      if (s.lower)
        for (int k = -n; k < l; ++k) e += static_cast<long>(T(l)) * A(h, k);
      else
        for (int k = l + 1; k <= n; ++k) e += static_cast<long>(T(l)) * A(h - 1, k);
    }
    BiLaurent c = vpow(2 * static_cast<int>(e));
    for (int l = -n; l <= n; ++l)
      if (T(l)) c *= qbinom_cached(A(row, l) + T(l), T(l));
    return c;
  }
  int ue = 0;
  long e = 0;
  for (int l = -n; l <= n; ++l) {
    if (!T(l)) continue;
    for (int k = l + 1; k <= n; ++k) e += 2L * A(0, k) * T(l);
  }
  for (int l = -n; l < 0; ++l) {
    ue += 2 * T(l);
    e += T(l) * (T(l) - 3);
    for (int k = l + 1; k < -l; ++k) e += 2L * T(l) * T(k);
  }
  BiLaurent ratio = middle_ratio((A(0, 0) - 1) / 2, T(0));
  for (int l = 1; l <= n; ++l) {
    int s2 = T(l) + T(-l);
    if (!s2) continue;
    ratio *= qbinom_cached(A(0, l) + s2, s2) * qbinom_cached(s2, T(l));
  }
  return uv(ue, static_cast<int>(e)) * ratio;
}

namespace {

ChevShape shape_or_throw(const Mat& B) {
  auto s = chevalley_shape(B);
  if (!s) throw NotChevalley("not a Chevalley matrix: " + B.str());
  return *s;
}

}  // namespace

SchurElt mult_chevalley(const Mat& B, const Mat& A, Algebra alg) {
  if (B.n() != A.n()) throw DimMismatch("matrices of different rank");
  ChevShape s = shape_or_throw(B);
  if (!valid_in(B, alg) || !valid_in(A, alg)) throw std::invalid_argument("index outside the algebra: " + B.str() + " " + A.str());
  SchurElt r(Basis::Std);
  if (B.co() != A.ro()) return r;
  if (s.amount == 0) {
    r.add(A, BiLaurent(1));
    return r;
  }
  for (auto& term : chevalley_range(s, A, alg)) {
    BiLaurent c = chevalley_coeff(s, A, term.t);
    if (!valid_in(term.target, alg)) {
      if (!c.is_zero()) throw std::logic_error("nonzero coefficient on an invalid index " + term.target.str());
      continue;
    }
    r.add(term.target, c);
  }
  return r;
}

SchurElt mult_chevalley_e(const Mat& B, const Mat& A) {
  if (B.n() != A.n()) throw DimMismatch("matrices of different rank");
  ChevShape s = shape_or_throw(B);
  SchurElt r(Basis::E);
  if (B.co() != A.ro()) return r;
  if (s.amount == 0) {
    r.add(A, BiLaurent(1));
    return r;
  }
  for (auto& term : chevalley_range(s, A, Algebra::Schur)) r.add(term.target, chevalley_coeff_e(s, A, term.t));
  return r;
}

SchurElt left_mult(const Mat& B, const SchurElt& x, Algebra alg) {
  if (x.basis() != Basis::Std) throw std::invalid_argument("left_mult expects the standard basis");
  SchurElt r(Basis::Std);
  for (auto& [A, c] : x.terms()) r += c * mult_chevalley(B, A, alg);
  return r;
}

}  // namespace qschur
