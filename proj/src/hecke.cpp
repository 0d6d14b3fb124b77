#include "qschur/hecke.hpp"

#include <algorithm>

namespace qschur {

BiLaurent quad_param(Family f, int k) {
  if (f == Family::BC && k == 0) return upow(2);
  return vpow(2);
}

HeckeElt HeckeElt::T(const SignedPerm& g, const BiLaurent& c) {
  HeckeElt h(g.family(), g.rank());
  h.add_term(g, c);
  return h;
}

HeckeElt HeckeElt::sum(Family f, int d, const std::vector<SignedPerm>& elems) {
  HeckeElt h(f, d);
  for (auto& g : elems) h.add_term(g, BiLaurent(1));
  return h;
}

BiLaurent HeckeElt::coeff(const SignedPerm& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? BiLaurent() : it->second;
}

void HeckeElt::add_term(const SignedPerm& g, const BiLaurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (terms_.empty()) fam_ = o.fam_, d_ = o.d_;
  for (auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (terms_.empty()) fam_ = o.fam_, d_ = o.d_;
  for (auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

HeckeElt operator*(const BiLaurent& c, const HeckeElt& a) {
  HeckeElt r(a.fam_, a.d_);
  if (c.is_zero()) return r;
  for (auto& [g, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), g, c * x);
  return r;
}

HeckeElt HeckeElt::times_gen(int k) const {
  HeckeElt r(fam_, d_);
  const BiLaurent q = quad_param(fam_, k);
  const BiLaurent qm1 = q - 1;
  for (auto& [w, c] : terms_) {
    SignedPerm ws = w.times_gen(k);
    if (!w.right_descent(k)) {
      r.add_term(ws, c);
    } else {
      r.add_term(w, qm1 * c);
      r.add_term(ws, q * c);
    }
  }
  return r;
}

HeckeElt HeckeElt::gen_times(int k) const {
  HeckeElt r(fam_, d_);
  const BiLaurent q = quad_param(fam_, k);
  const BiLaurent qm1 = q - 1;
  for (auto& [w, c] : terms_) {
    SignedPerm sw = w.gen_times(k);
    if (!w.left_descent(k)) {
      r.add_term(sw, c);
    } else {
      r.add_term(w, qm1 * c);
      r.add_term(sw, q * c);
    }
  }
  return r;
}

HeckeElt HeckeElt::map_coeffs(BiLaurent (*f)(const BiLaurent&)) const {
  HeckeElt r(fam_, d_);
  for (auto& [g, c] : terms_) r.add_term(g, f(c));
  return r;
}

HeckeElt HeckeElt::exact_div(const BiLaurent& c) const {
  HeckeElt r(fam_, d_);
  for (auto& [g, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), g, x.exact_div(c));
  return r;
}

namespace {

HeckeElt times_T(const HeckeElt& a, const SignedPerm& y) {
  HeckeElt r = a;
  for (int k : reduced_word(y)) r = r.times_gen(k);
  return r;
}

}  // namespace

HeckeElt times_sum(const HeckeElt& a, const std::vector<SignedPerm>& elems) {
  std::vector<std::pair<int, SignedPerm>> order;
  order.reserve(elems.size());
  for (auto& w : elems) order.push_back({length(w), w});
  std::sort(order.begin(), order.end());
  std::map<SignedPerm, HeckeElt> memo;
  HeckeElt total(a.family(), a.rank());
  for (auto& [l, w] : order) {
    HeckeElt val;
    bool found = false;
    for (int k = 0; k < w.rank() && !found; ++k) {
      if (!w.right_descent(k)) continue;
      auto it = memo.find(w.times_gen(k));
      if (it != memo.end()) {
        val = it->second.times_gen(k);
        found = true;
      }
    }
    if (!found) val = times_T(a, w);
    total += val;
    memo.emplace(w, std::move(val));
  }
  return total;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.family() != b.family() || (a.rank() != b.rank() && !a.is_zero() && !b.is_zero()))
    throw std::invalid_argument("Hecke elements of different groups");
  HeckeElt r(a.family(), a.rank());
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::pair<int, SignedPerm>> order;
  for (auto& [y, c] : b.terms()) order.push_back({length(y), y});
  std::sort(order.begin(), order.end());
  std::map<SignedPerm, HeckeElt> memo;
  for (auto& [l, y] : order) {
    HeckeElt val;
    bool found = false;
    for (int k = 0; k < y.rank() && !found; ++k) {
      if (!y.right_descent(k)) continue;
      auto it = memo.find(y.times_gen(k));
      if (it != memo.end()) {
        val = it->second.times_gen(k);
        found = true;
      }
    }
    if (!found) val = times_T(a, y);
    r += b.coeff(y) * val;
    memo.emplace(y, std::move(val));
  }
  return r;
}

const HeckeElt& bar_T(const SignedPerm& g) {
  thread_local std::map<SignedPerm, HeckeElt> memo;
  auto it = memo.find(g);
  if (it != memo.end()) return it->second;
  HeckeElt val;
  if (g.is_identity()) {
    val = HeckeElt::T(g);
  } else {
    int k = 0;
    while (!g.right_descent(k)) ++k;
    const HeckeElt& prev = bar_T(g.times_gen(k));
    BiLaurent qi = quad_param(g.family(), k).bar();
    val = qi * prev.times_gen(k) + (qi - 1) * prev;
  }
  return memo.emplace(g, std::move(val)).first->second;
}

HeckeElt bar(const HeckeElt& a) {
  HeckeElt r(a.family(), a.rank());
  for (auto& [g, c] : a.terms()) r += c.bar() * bar_T(g);
  return r;
}

HeckeElt x_lambda(const Blocks& b) { return HeckeElt::sum(b.family(), b.rank(), parabolic_elements(b)); }

HeckeElt coset_sum(const Blocks& left, const SignedPerm& g, const Blocks& right) {
  if (!is_min_double(g, left, right)) throw NotMinimalRep("coset_sum needs a minimal representative");
  return HeckeElt::sum(g.family(), g.rank(), double_coset(g, left, right));
}

const CosetTable& coset_table(const Blocks& left, const Blocks& right) {
  thread_local std::map<std::pair<Blocks, Blocks>, CosetTable> cache;
  auto key = std::make_pair(left, right);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CosetTable t;
  t.reps = min_double_reps(left, right);
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    t.cosets.push_back(double_coset(t.reps[i], left, right));
    for (auto& w : t.cosets.back()) t.index[w] = i;
  }
  return cache.emplace(key, std::move(t)).first->second;
}

std::map<SignedPerm, BiLaurent> reexpress_coset(const HeckeElt& h, const Blocks& left, const Blocks& right) {
  const CosetTable& t = coset_table(left, right);
  std::map<SignedPerm, BiLaurent> out;
  std::vector<std::size_t> seen(t.reps.size(), 0);
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    BiLaurent c = h.coeff(t.reps[i]);
    if (!c.is_zero()) out[t.reps[i]] = c;
  }
  for (auto& [w, c] : h.terms()) {
    std::size_t i = t.index.at(w);
    auto it = out.find(t.reps[i]);
    if (it == out.end() || it->second != c)
      throw NotInCosetModule("element is not a combination of double coset sums (at " + w.str() + ")");
    ++seen[i];
  }
  for (std::size_t i = 0; i < t.reps.size(); ++i)
    if (out.count(t.reps[i]) && seen[i] != t.cosets[i].size())
      throw NotInCosetModule("double coset only partially present (at " + t.reps[i].str() + ")");
  return out;
}

SpecHecke specialize(const HeckeElt& h, const WeightFn& L) {
  SpecHecke r;
  for (auto& [g, c] : h.terms()) {
    UniLaurent s = specialize(c, L);
    if (!s.is_zero()) r[g] = s;
  }
  return r;
}

namespace {

int weight_of(const SignedPerm& g, const WeightFn& L) {
  Lengths l = lengths(g);
  return l.lc * L.L0 + l.la * L.L1;
}

}  // namespace

SpecHecke bar_spec(const SpecHecke& h, const WeightFn& L) {
  SpecHecke r;
  for (auto& [g, c] : h) {
    SpecHecke b = specialize(bar_T(g), L);
    for (auto& [y, x] : b) {
      UniLaurent add = c.bar() * x;
      auto [it, fresh] = r.try_emplace(y, add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

SpecHecke cL_basis(const SignedPerm& w, const WeightFn& L) {
  // Work in the normalized basis Tn_y = w^{-L(y)} T_y, where bar(Tn_z) = sum r_{y,z} Tn_y.
  auto elems = all_elements(w.family(), w.rank());
  int lw = length(w);
  std::vector<std::pair<int, SignedPerm>> order;
  for (auto& y : elems)
    if (length(y) < lw) order.push_back({length(y), y});
  std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });

  auto r_col = [&](const SignedPerm& z) {
    std::map<SignedPerm, UniLaurent> col;
    int Lz = weight_of(z, L);
    for (auto& [y, c] : specialize(bar_T(z), L)) col[y] = c.shift({Lz + weight_of(y, L)});
    return col;
  };

  std::map<SignedPerm, UniLaurent> p;  // coefficients on the normalized basis
  std::map<SignedPerm, std::map<SignedPerm, UniLaurent>> cols;
  p[w] = UniLaurent(1);
  cols[w] = r_col(w);
  for (auto& [ly, y] : order) {
    UniLaurent h;
    for (auto& [z, pz] : p) {
      auto it = cols[z].find(y);
      if (it != cols[z].end()) h += it->second * pz.bar();
    }
    if (!(h + h.bar()).is_zero()) throw std::logic_error("bar correction is not anti-invariant");
    std::vector<UniLaurent::Term> neg;
    for (auto& t : h.terms())
      if (t.first[0] < 0) neg.push_back(t);
    UniLaurent py = UniLaurent::from_terms(std::move(neg));
    if (!py.is_zero()) {
      p[y] = py;
      cols[y] = r_col(y);
    }
  }
  SpecHecke out;
  for (auto& [y, py] : p) out[y] = py.shift({-weight_of(y, L)});
  return out;
}

}  // namespace qschur
