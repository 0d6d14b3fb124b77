#include "qschur/coeffs.hpp"

namespace qschur {

WeightFn::WeightFn(int l0, int l1) : L0(l0), L1(l1) {
  if (l0 < 1 || l1 < 1) throw std::invalid_argument("weight values must be positive");
}

UniLaurent specialize(const BiLaurent& a, const WeightFn& L) {
  std::vector<UniLaurent::Term> ts;
  ts.reserve(a.size());
  for (const auto& [e, c] : a.terms()) ts.push_back({{e[0] * L.L0 + e[1] * L.L1}, c});
  return UniLaurent::from_terms(std::move(ts));
}

UniLaurent v_only(const BiLaurent& a) {
  std::vector<UniLaurent::Term> ts;
  for (const auto& [e, c] : a.terms()) {
    if (e[0] != 0) throw std::invalid_argument("polynomial involves u: " + a.str());
    ts.push_back({{e[1]}, c});
  }
  return UniLaurent::from_terms(std::move(ts));
}

BiLaurent from_v(const UniLaurent& a) {
  std::vector<BiLaurent::Term> ts;
  for (const auto& [e, c] : a.terms()) ts.push_back({{0, e[0]}, c});
  return BiLaurent::from_terms(std::move(ts));
}

BiLaurent v_minus_vinv() { return vpow(1) - vpow(-1); }

LocalizedBi::LocalizedBi(BiLaurent num, int k) : num_(std::move(num)), k_(k) {
  if (k < 0) throw std::invalid_argument("negative denominator power");
  reduce();
}

void LocalizedBi::reduce() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  static const BiLaurent d = v_minus_vinv();
  while (k_ > 0) {
    auto q = num_.try_div(d);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

BiLaurent LocalizedBi::numerator_at(int k) const {
  if (k < k_) throw std::invalid_argument("denominator power too small");
  return num_ * v_minus_vinv().pow(k - k_);
}

LocalizedBi operator+(const LocalizedBi& a, const LocalizedBi& b) {
  int k = std::max(a.k_, b.k_);
  return LocalizedBi(a.numerator_at(k) + b.numerator_at(k), k);
}

LocalizedBi operator-(const LocalizedBi& a, const LocalizedBi& b) {
  int k = std::max(a.k_, b.k_);
  return LocalizedBi(a.numerator_at(k) - b.numerator_at(k), k);
}

LocalizedBi operator*(const LocalizedBi& a, const LocalizedBi& b) {
  return LocalizedBi(a.num_ * b.num_, a.k_ + b.k_);
}

std::string LocalizedBi::str() const {
  if (k_ == 0) return num_.str();
  return "(" + num_.str() + ")/(v - v^-1)^" + std::to_string(k_);
}

BiLaurent qnum(int a) {
  if (a == 0) return {};
  return (vpow(2 * a) - 1).exact_div(vpow(2) - 1);
}

BiLaurent qfact(int t) {
  if (t < 0) throw std::invalid_argument("negative factorial");
  BiLaurent r(1);
  for (int k = 1; k <= t; ++k) r *= qnum(k);
  return r;
}

BiLaurent qbinom(int a, int b) {
  if (b < 0) throw std::invalid_argument("negative lower binomial index");
  BiLaurent num(1), den(1);
  for (int i = 1; i <= b; ++i) {
    num *= vpow(2 * (a - i + 1)) - 1;
    den *= vpow(2 * i) - 1;
  }
  return num.exact_div(den);
}

BiLaurent bc_even(int t) { return qnum(t) * (uv(2, 2 * (t - 1)) + 1); }

BiLaurent bc_factorial(int t) {
  if (t < 0) throw std::invalid_argument("negative factorial");
  BiLaurent r(1);
  for (int k = 1; k <= t; ++k) r *= bc_even(k);
  return r;
}

BiLaurent bracket(int r) { return (vpow(r) - vpow(-r)).exact_div(v_minus_vinv()); }

UniLaurent d_factorial(int k) {
  if (k < 0) throw std::invalid_argument("negative factorial");
  if (k <= 1) return UniLaurent(1);
  BiLaurent r = qnum(k);
  for (int j = 1; j <= k - 1; ++j) r *= qnum(2 * j);
  return v_only(r);
}

}  // namespace qschur
