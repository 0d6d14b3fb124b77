#include "qschur/matrix.hpp"

#include <algorithm>

namespace qschur {

Mat Mat::from_rows(const std::vector<std::vector<int>>& rows) {
  int s = static_cast<int>(rows.size());
  if (s % 2 == 0) throw std::invalid_argument("matrix size must be odd");
  Mat M(s / 2);
  for (int r = 0; r < s; ++r) {
    if (static_cast<int>(rows[r].size()) != s) throw std::invalid_argument("matrix must be square");
    for (int c = 0; c < s; ++c) M.a_[r * s + c] = rows[r][c];
  }
  return M;
}

Mat Mat::diagonal(const std::vector<int>& diag) {
  Mat M(static_cast<int>(diag.size()) / 2);
  for (int i = -M.n_; i <= M.n_; ++i) M.at(i, i) = diag[i + M.n_];
  return M;
}

void Mat::add_theta(int i, int j, int c) {
  at(i, j) += c;
  at(-i, -j) += c;
}

std::vector<int> Mat::ro() const {
  std::vector<int> r(size(), 0);
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j <= n_; ++j) r[i + n_] += (*this)(i, j);
  return r;
}

std::vector<int> Mat::co() const {
  std::vector<int> r(size(), 0);
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j <= n_; ++j) r[j + n_] += (*this)(i, j);
  return r;
}

int Mat::total() const {
  int s = 0;
  for (int x : a_) s += x;
  return s;
}

bool Mat::centro_symmetric() const {
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j <= n_; ++j)
      if ((*this)(i, j) != (*this)(-i, -j)) return false;
  return true;
}

bool Mat::is_diagonal() const {
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j <= n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool Mat::offdiag_nonneg() const {
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j <= n_; ++j)
      if (i != j && (*this)(i, j) < 0) return false;
  return true;
}

bool Mat::all_nonneg() const {
  return std::all_of(a_.begin(), a_.end(), [](int x) { return x >= 0; });
}

Mat Mat::transpose() const {
  Mat t(n_);
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j <= n_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::shifted(int p) const {
  Mat t = *this;
  for (int i = -n_; i <= n_; ++i) t.at(i, i) += p;
  return t;
}

std::vector<std::vector<int>> Mat::rows() const {
  std::vector<std::vector<int>> r(size(), std::vector<int>(size()));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) r[i][j] = a_[i * size() + j];
  return r;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < size(); ++j) {
      if (j) s += ",";
      s += std::to_string(a_[i * size() + j]);
    }
    s += "]";
  }
  return s + "]";
}

bool is_stab_index(const Mat& A) {
  return A.centro_symmetric() && A.offdiag_nonneg() && ((A(0, 0) % 2 + 2) % 2 == 1);
}

bool is_schur_index(const Mat& A) { return is_stab_index(A) && A.all_nonneg(); }

int sigma(const Mat& A, int i, int j) {
  int s = 0;
  for (int x = -A.n(); x <= i; ++x)
    for (int y = j; y <= A.n(); ++y) s += A(x, y);
  return s;
}

bool leq_alg(const Mat& A, const Mat& B) {
  if (A.n() != B.n() || A.ro() != B.ro() || A.co() != B.co()) return false;
  int n = A.n();
  for (int i = -n; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(A, i, j) > sigma(B, i, j)) return false;
  return true;
}

int sigma_weight(const Mat& A) {
  int s = 0, n = A.n();
  for (int i = -n; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s += sigma(A, i, j);
  return s;
}

void sort_descending(std::vector<Mat>& ms) {
  std::vector<std::pair<int, Mat>> keyed;
  keyed.reserve(ms.size());
  for (auto& M : ms) keyed.push_back({-sigma_weight(M), M});
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < ms.size(); ++k) ms[k] = std::move(keyed[k].second);
}

HatLengths hat_lengths(const Mat& A) {
  int n = A.n();
  // Partial sums over the quadrants x <= i, y > j and x >= i, y < j.
  auto upper_right = [&](int i, int j) {
    int s = 0;
    for (int x = -n; x <= i; ++x)
      for (int y = j + 1; y <= n; ++y) s += A(x, y);
    return s;
  };
  auto lower_left = [&](int i, int j) {
    int s = 0;
    for (int x = i; x <= n; ++x)
      for (int y = -n; y < j; ++y) s += A(x, y);
    return s;
  };
  long twice = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (i == 0 && j < 0) continue;
      int a = (i == 0 && j == 0) ? (A(0, 0) - 1) / 2 : A(i, j);
      if (a == 0) continue;
      twice += static_cast<long>(a) * (upper_right(i, j) + lower_left(i, j));
    }
  int twice_c = 0;
  for (int x = 0; x <= n; ++x)
    for (int y = -n; y < 0; ++y) twice_c += A(x, y);
  for (int x = -n; x <= 0; ++x)
    for (int y = 1; y <= n; ++y) twice_c += A(x, y);
  if (twice % 2 != 0 || twice_c % 2 != 0) throw std::logic_error("generalized length is not an integer for " + A.str());
  HatLengths h;
  h.l = static_cast<int>(twice / 2);
  h.lc = twice_c / 2;
  h.la = h.l - h.lc;
  if (is_schur_index(A) && (h.lc < 0 || h.la < 0)) throw std::logic_error("negative generalized length for " + A.str());
  return h;
}

BiLaurent std_factor(const Mat& A) {
  HatLengths h = hat_lengths(A);
  return uv(-h.lc, -h.la);
}

std::optional<ChevShape> chevalley_shape(const Mat& B) {
  int n = B.n();
  std::vector<std::pair<int, int>> off;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j)
      if (i != j && B(i, j) != 0) off.push_back({i, j});
  if (off.empty()) return ChevShape{true, 1, 0};
  for (int h = 1; h <= n; ++h)
    for (bool lower : {true, false}) {
      int r = lower ? h : h - 1, c = lower ? h - 1 : h;
      int b = B(r, c);
      if (b <= 0) continue;
      Mat E(n);
      E.add_theta(r, c, b);
      bool ok = true;
      for (auto [i, j] : off)
        if (E(i, j) != B(i, j)) ok = false;
      int cnt = 0;
      for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
          if (i != j && E(i, j) != 0) ++cnt;
      if (ok && cnt == static_cast<int>(off.size())) return ChevShape{lower, h, b};
    }
  return std::nullopt;
}

Mat chevalley_with_co(int n, const ChevShape& s, const std::vector<int>& co) {
  Mat B = Mat::diagonal(co);
  if (s.amount == 0) return B;
  int r = s.lower ? s.h : s.h - 1, c = s.lower ? s.h - 1 : s.h;
  B.add_theta(r, c, s.amount);
  B.add_theta(c, c, -s.amount);
  if (B.n() != n) throw DimMismatch("column sums of the wrong length");
  return B;
}

SpecElt specialize(const SchurElt& x, const WeightFn& L) {
  SpecElt r(x.basis());
  for (auto& [M, c] : x.terms()) r.add(M, specialize(c, L));
  return r;
}

SchurElt to_std(const SchurElt& x) {
  if (x.basis() == Basis::Std) return x;
  SchurElt r(Basis::Std);
  // e_M = u^{hat lc} v^{hat la} [M]
  for (auto& [M, c] : x.terms()) r.add(M, c * std_factor(M).bar());
  return r;
}

SchurElt to_e(const SchurElt& x) {
  if (x.basis() == Basis::E) return x;
  SchurElt r(Basis::E);
  for (auto& [M, c] : x.terms()) r.add(M, c * std_factor(M));
  return r;
}

}  // namespace qschur
