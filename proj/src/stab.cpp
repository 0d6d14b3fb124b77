#include "qschur/stab.hpp"

#include <algorithm>
#include <functional>

namespace qschur {

SchurElt mult_chevalley_stab(const Mat& B, const Mat& A, Algebra alg) {
  if (alg == Algebra::Schur) throw std::invalid_argument("stabilization product needs Kj or KjGt");
  return mult_chevalley(B, A, alg);
}

namespace {

TriLaurent lift(const BiLaurent& a) {
  std::vector<TriLaurent::Term> ts;
  for (auto& [e, c] : a.terms()) ts.push_back({{e[0], e[1], 0}, c});
  return TriLaurent::from_terms(ts);
}

TriLaurent uvpi(int i, int j, int k, int64_t c = 1) { return TriLaurent::monomial({i, j, k}, c); }

BiLaurent at_pi(const TriLaurent& a, int pi_v_exp) {
  std::vector<BiLaurent::Term> ts;
  for (auto& [e, c] : a.terms()) ts.push_back({{e[0], e[1] + e[2] * pi_v_exp}, c});
  return BiLaurent::from_terms(ts);
}

ChevShape shape_of(const Mat& B) {
  auto s = chevalley_shape(B);
  if (!s) throw NotChevalley("not a Chevalley matrix: " + B.str());
  return *s;
}

}  // namespace

PiRatio r_one(int a, int k) {
  PiRatio r{TriLaurent(1), BiLaurent(1)};
  for (int i = 1; i <= k; ++i) {
    r.numerator *= uvpi(0, -2 * (a - i), 2) - 1;
    r.denominator *= vpow(-2 * i) - 1;
  }
  return r;
}

PiRatio r_two(int a, int k) {
  PiRatio r{TriLaurent(1), BiLaurent(1)};
  for (int i = 1; i <= k; ++i) {
    r.numerator *= (uvpi(-2, -2 * (a - 1 - i), 1) + 1) * (uvpi(0, -2 * (a - i), 1) - 1);
    r.denominator *= vpow(-2 * i) - 1;
  }
  return r;
}

BiLaurent eval_ratio(const PiRatio& r, int e) { return at_pi(r.numerator, e).exact_div(r.denominator); }

std::vector<ZetaTerm> zeta_terms(const Mat& B, const Mat& A, MiddleFactor mf) {
  if (B.n() != A.n()) throw DimMismatch("matrices of different rank");
  ChevShape s = shape_of(B);
  std::vector<ZetaTerm> out;
  if (B.co() != A.ro()) return out;
  int n = A.n();
  if (s.amount == 0) {
    out.push_back({std::vector<int>(2 * n + 1, 0), A, TriLaurent(1), BiLaurent(1)});
    return out;
  }
  for (auto& term : chevalley_range(s, A, Algebra::Kj)) {
    const auto& t = term.t;
    auto T = [&](int l) { return t[l + n]; };
    TriLaurent num(1);
    BiLaurent den(1);
    if (s.lower || s.h != 1) {
      int row = s.lower ? s.h : s.h - 1;
      int a = A(row, row), td = T(row);
      // the diagonal binomial [a + td, td] barred, with the shift carried by pi^2
      PiRatio diag = r_one(a + td + 1, td);
      num = diag.numerator;
      den = diag.denominator;
      BiLaurent rest = chevalley_coeff(s, A, t, row);
      num *= lift(rest);
    } else {
      int anat = (A(0, 0) - 1) / 2, t0 = T(0);
      PiRatio mid = r_two(anat + t0 + (mf == MiddleFactor::Corrected ? 1 : 0), t0);
      num = mid.numerator;
      den = mid.denominator;
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
      BiLaurent ratio(1);
      for (int l = 1; l <= n; ++l) {
        int s2 = T(l) + T(-l);
        if (s2) ratio *= qbinom_cached(A(0, l) + s2, s2) * qbinom_cached(s2, T(l));
      }
      num *= lift(uv(ue, static_cast<int>(beta)) * ratio.bar());
    }
    out.push_back({t, term.target, std::move(num), std::move(den)});
  }
  return out;
}

int zeta_threshold(const Mat& B, const Mat& A) {
  ChevShape s = shape_of(B);
  auto terms = chevalley_range(s, A, Algebra::Kj);
  int n = A.n(), worst = 0;
  for (int i = -n; i <= n; ++i) worst = std::max({worst, -A(i, i), -B(i, i)});
  for (auto& term : terms)
    for (int i = -n; i <= n; ++i) worst = std::max(worst, -term.target(i, i));
  int limit = 2 * (worst + s.amount) + 4;
  for (int p = 0; p <= limit; p += 2) {
    Mat Ap = A.shifted(p), Bp = B.shifted(p);
    if (!is_schur_index(Ap) || !is_schur_index(Bp)) continue;
    auto fin = chevalley_range(s, Ap, Algebra::Schur);
    if (fin.size() != terms.size()) continue;
    bool same = true;
    for (std::size_t k = 0; k < fin.size() && same; ++k) same = fin[k].t == terms[k].t && is_schur_index(fin[k].target);
    if (same) return p;
  }
  throw std::logic_error("no stabilization threshold found for " + B.str() + " " + A.str());
}

SchurElt eval_zeta(const Mat& B, const Mat& A, int p, MiddleFactor mf) {
  if (p % 2 != 0) throw std::invalid_argument("shift must be even");
  int need = zeta_threshold(B, A);
  if (p < need) throw ThresholdNotReached("shift " + std::to_string(p) + " below threshold " + std::to_string(need));
  SchurElt r(Basis::Std);
  for (auto& z : zeta_terms(B, A, mf)) r.add(z.target, at_pi(z.numerator, -p).exact_div(z.denominator));
  return r;
}

SchurElt eval_zeta_one(const Mat& B, const Mat& A, MiddleFactor mf) {
  SchurElt r(Basis::Std);
  for (auto& z : zeta_terms(B, A, mf)) {
    BiLaurent c = at_pi(z.numerator, 0).exact_div(z.denominator);
    if (!valid_in(z.target, Algebra::Kj)) {
      if (!c.is_zero()) throw std::logic_error("nonzero coefficient on an invalid index " + z.target.str());
      continue;
    }
    r.add(z.target, c);
  }
  return r;
}

std::vector<Mat> stab_window(int n, int bound) {
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= n; ++j) cells.push_back({0, j});
  for (int i = 1; i <= n; ++i)
    for (int j = -n; j <= n; ++j) cells.push_back({i, j});
  std::vector<Mat> out;
  Mat A(n);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cells.size()) {
      for (int c = -bound; c <= bound; ++c) {
        if ((c % 2 + 2) % 2 != 1) continue;
        A.at(0, 0) = c;
        out.push_back(A);
      }
      return;
    }
    auto [i, j] = cells[pos];
    int lo = i == j ? -bound : 0;
    for (int x = lo; x <= bound; ++x) {
      A.add_theta(i, j, x - A(i, j));
      rec(pos + 1);
    }
    A.add_theta(i, j, -A(i, j));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

SchurElt transpose_antiinv(const SchurElt& x) {
  SchurElt s = to_std(x);
  SchurElt r(Basis::Std);
  for (auto& [A, c] : s.terms()) {
    Mat At = A.transpose();
    HatLengths a = hat_lengths(A), b = hat_lengths(At);
    r.add(At, c * uv(-a.lc + b.lc, -a.la + b.la));
  }
  return r;
}

bool in_J_index(const Mat& A) { return A(0, 0) < 0; }

bool in_J(const SchurElt& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& kv) { return in_J_index(kv.first); });
}

SchurElt project_J(const SchurElt& x) {
  SchurElt r(x.basis());
  for (auto& [A, c] : x.terms())
    if (!in_J_index(A)) r.add(A, c);
  return r;
}

SchurElt sharp(const SchurElt& x) { return project_J(x); }

bool imath_stab(const Mat& A) {
  int n = A.n();
  return is_stab_index(A) && A(0, 0) > 0 && A.ro()[n] == 1 && A.co()[n] == 1;
}

}  // namespace qschur
