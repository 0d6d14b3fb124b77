#include "qschur/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace qschur {

namespace {

int count_negative(const std::vector<int>& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}

// g^-1(x) for x != 0
int inverse_at(const std::vector<int>& w, int x) {
  int ax = x < 0 ? -x : x;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == ax) return x > 0 ? static_cast<int>(i) + 1 : -static_cast<int>(i) - 1;
    if (w[i] == -ax) return x > 0 ? -static_cast<int>(i) - 1 : static_cast<int>(i) + 1;
  }
  throw std::logic_error("value outside window");
}

int num_gens(Family f, int d) {
  if (f == Family::D) return d >= 2 ? d : 0;
  return d;
}

}  // namespace

SignedPerm::SignedPerm(Family f, std::vector<int> window) : fam_(f), w_(std::move(window)) {
  int d = rank();
  std::vector<bool> seen(d + 1, false);
  for (int x : w_) {
    int a = x < 0 ? -x : x;
    if (a < 1 || a > d || seen[a]) throw std::invalid_argument("not a signed permutation window");
    seen[a] = true;
  }
  if (f == Family::D && count_negative(w_) % 2 != 0)
    throw std::invalid_argument("type D window needs an even number of negative entries");
}

SignedPerm SignedPerm::identity(Family f, int d) {
  std::vector<int> w(d);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(f, std::move(w));
}

SignedPerm SignedPerm::gen(Family f, int d, int k) {
  if (k < 0 || k >= num_gens(f, d)) throw std::out_of_range("generator index out of range");
  return identity(f, d).times_gen(k);
}

SignedPerm SignedPerm::parse(const std::string& s, Family f) {
  std::string body = s;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '|' || c == ' '; }), body.end());
  std::vector<int> w;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) w.push_back(std::stoi(tok));
  return SignedPerm(f, std::move(w));
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

SignedPerm SignedPerm::operator*(const SignedPerm& h) const {
  if (fam_ != h.fam_ || rank() != h.rank()) throw std::invalid_argument("rank or family mismatch");
  SignedPerm r = h;
  for (int& x : r.w_) x = (*this)(x);
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r = *this;
  for (int i = 0; i < rank(); ++i) {
    int x = w_[i];
    if (x > 0) r.w_[x - 1] = i + 1;
    else r.w_[-x - 1] = -(i + 1);
  }
  return r;
}

SignedPerm SignedPerm::times_gen(int k) const {
  SignedPerm r = *this;
  if (k >= 1) {
    std::swap(r.w_[k - 1], r.w_[k]);
  } else if (fam_ == Family::BC) {
    r.w_[0] = -r.w_[0];
  } else {
    r.w_[0] = -w_[1];
    r.w_[1] = -w_[0];
  }
  return r;
}

SignedPerm SignedPerm::gen_times(int k) const {
  SignedPerm r = *this;
  for (int& x : r.w_) {
    int a = x < 0 ? -x : x, sg = x < 0 ? -1 : 1;
    if (k >= 1) {
      if (a == k) a = k + 1;
      else if (a == k + 1) a = k;
    } else if (fam_ == Family::BC) {
      if (a == 1) sg = -sg;
    } else {
      if (a == 1) a = 2, sg = -sg;
      else if (a == 2) a = 1, sg = -sg;
    }
    x = sg * a;
  }
  return r;
}

bool SignedPerm::right_descent(int k) const {
  if (k >= 1) return w_[k - 1] > w_[k];
  if (fam_ == Family::BC) return w_[0] < 0;
  return w_[0] + w_[1] < 0;
}

bool SignedPerm::left_descent(int k) const {
  if (k >= 1) return inverse_at(w_, k) > inverse_at(w_, k + 1);
  if (fam_ == Family::BC) return inverse_at(w_, 1) < 0;
  return inverse_at(w_, 1) + inverse_at(w_, 2) < 0;
}

std::string SignedPerm::str() const {
  std::string s = "|";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + "|";
}

std::size_t SignedPermHash::operator()(const SignedPerm& g) const {
  std::size_t h = g.family() == Family::D ? 0x9e3779b97f4a7c15ULL : 0;
  for (int x : g.window()) h = h * 1000003u ^ static_cast<std::size_t>(x + 64);
  return h;
}

Lengths lengths(const SignedPerm& g) {
  int d = g.rank();
  Lengths r;
  if (g.family() == Family::BC) {
    int pairs = 0;
    for (int i = 1; i <= d; ++i)
      for (int j = -d; j <= d; ++j) {
        if (i < j && g(i) > g(j)) ++pairs;
        if (i > j && g(i) < g(j)) ++pairs;
      }
    if (pairs % 2 != 0) throw std::logic_error("odd symmetrized pair count");
    r.l = pairs / 2;
    r.lc = count_negative(g.window());
    r.la = r.l - r.lc;
  } else {
    for (int i = -d; i <= d; ++i) {
      if (i == 0) continue;
      for (int j = 1; j <= d; ++j)
        if ((i < 0 ? -i : i) < j && g(i) > g(j)) ++r.l;
    }
    r.la = r.l;
  }
  return r;
}

int length(const SignedPerm& g) { return lengths(g).l; }

std::vector<int> reduced_word(const SignedPerm& g) {
  std::vector<int> word;
  SignedPerm x = g;
  int ng = num_gens(x.family(), x.rank());
  while (!x.is_identity()) {
    int k = 0;
    while (k < ng && !x.right_descent(k)) ++k;
    if (k == ng) throw std::logic_error("no descent for non-identity element");
    word.push_back(k);
    x = x.times_gen(k);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SignedPerm from_word(Family f, int d, const std::vector<int>& word) {
  SignedPerm g = SignedPerm::identity(f, d);
  for (int k : word) g = g.times_gen(k);
  return g;
}

Blocks::Blocks(Family f, int d, int n, std::vector<std::vector<int>> sets)
    : fam_(f), d_(d), n_(n), sets_(std::move(sets)) {
  if (static_cast<int>(sets_.size()) != 2 * n + 1) throw std::invalid_argument("need 2n+1 blocks");
  for (auto& s : sets_) std::sort(s.begin(), s.end());
  int ng = num_gens(f, d);
  for (int k = 0; k < ng; ++k)
    if (stabilizes(SignedPerm::gen(f, d, k))) gens_.push_back(k);
}

Blocks::Blocks(Family f, int d, int n, std::vector<std::vector<int>> sets, std::vector<int> gens)
    : fam_(f), d_(d), n_(n), sets_(std::move(sets)), gens_(std::move(gens)) {
  if (static_cast<int>(sets_.size()) != 2 * n + 1) throw std::invalid_argument("need 2n+1 blocks");
  for (auto& s : sets_) std::sort(s.begin(), s.end());
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (int k : gens_)
    if (k < 0 || k >= num_gens(f, d)) throw std::out_of_range("generator index out of range");
}

bool Blocks::stabilizes(const SignedPerm& g) const {
  for (const auto& s : sets_)
    for (int x : s)
      if (!std::binary_search(s.begin(), s.end(), g(x))) return false;
  return true;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty composition");
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("negative composition part");
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Blocks Composition::blocks() const {
  int nn = n();
  std::vector<std::vector<int>> sets(2 * nn + 1);
  for (int x = -parts_[0]; x <= parts_[0]; ++x) sets[nn].push_back(x);
  int lo = parts_[0];
  for (int i = 1; i <= nn; ++i) {
    for (int x = lo + 1; x <= lo + parts_[i]; ++x) {
      sets[nn + i].push_back(x);
      sets[nn - i].push_back(-x);
    }
    lo += parts_[i];
  }
  return Blocks(Family::BC, total_, nn, std::move(sets));
}

std::string Composition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

std::vector<Composition> all_compositions(int n, int d) {
  std::vector<Composition> out;
  std::vector<int> parts(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      parts[n] = left;
      out.emplace_back(parts);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      parts[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t group_order(Family f, int d) {
  std::size_t r = 1;
  for (int k = 1; k <= d; ++k) r *= 2 * static_cast<std::size_t>(k);
  if (f == Family::D && d >= 1) r /= 2;
  return r;
}

std::vector<SignedPerm> all_elements(Family f, int d) {
  if (group_order(f, d) > kSizeGuard) throw SizeGuardExceeded("group too large to enumerate");
  std::vector<SignedPerm> out;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      if (f == Family::D && __builtin_popcount(mask) % 2) continue;
      std::vector<int> w(perm);
      for (int i = 0; i < d; ++i)
        if (mask >> i & 1) w[i] = -w[i];
      out.emplace_back(f, std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<SignedPerm> closure(const SignedPerm& start, const std::vector<int>& left, const std::vector<int>& right) {
  std::unordered_set<SignedPerm, SignedPermHash> seen{start};
  std::deque<SignedPerm> todo{start};
  while (!todo.empty()) {
    SignedPerm x = todo.front();
    todo.pop_front();
    auto visit = [&](SignedPerm y) {
      if (seen.insert(y).second) {
        if (seen.size() > kSizeGuard) throw SizeGuardExceeded("subgroup enumeration exceeds guard");
        todo.push_back(std::move(y));
      }
    };
    for (int k : left) visit(x.gen_times(k));
    for (int k : right) visit(x.times_gen(k));
  }
  std::vector<SignedPerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SignedPerm> parabolic_elements(const Blocks& b) {
  return closure(SignedPerm::identity(b.family(), b.rank()), {}, b.generators());
}

std::vector<SignedPerm> stabilizer_elements(const Blocks& b) {
  std::vector<SignedPerm> out;
  for (auto& g : all_elements(b.family(), b.rank()))
    if (b.stabilizes(g)) out.push_back(g);
  return out;
}

bool is_min_left(const SignedPerm& g, const Blocks& left) {
  for (int k : left.generators())
    if (g.left_descent(k)) return false;
  return true;
}

bool is_min_right(const SignedPerm& g, const Blocks& right) {
  for (int k : right.generators())
    if (g.right_descent(k)) return false;
  return true;
}

bool is_min_double(const SignedPerm& g, const Blocks& left, const Blocks& right) {
  return is_min_left(g, left) && is_min_right(g, right);
}

std::vector<SignedPerm> min_coset_reps(const Blocks& b) {
  std::vector<SignedPerm> out;
  for (auto& g : all_elements(b.family(), b.rank()))
    if (is_min_left(g, b)) out.push_back(g);
  return out;
}

SignedPerm min_double_rep(SignedPerm g, const Blocks& left, const Blocks& right) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k : left.generators())
      if (g.left_descent(k)) {
        g = g.gen_times(k);
        changed = true;
      }
    for (int k : right.generators())
      if (g.right_descent(k)) {
        g = g.times_gen(k);
        changed = true;
      }
  }
  return g;
}

std::vector<SignedPerm> double_coset(const SignedPerm& g, const Blocks& left, const Blocks& right) {
  return closure(g, left.generators(), right.generators());
}

SignedPerm min_double_rep_bruteforce(const SignedPerm& g, const Blocks& left, const Blocks& right) {
  auto cos = double_coset(g, left, right);
  return *std::min_element(cos.begin(), cos.end(), [](const SignedPerm& a, const SignedPerm& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
}

std::vector<SignedPerm> min_double_reps(const Blocks& left, const Blocks& right) {
  std::vector<SignedPerm> out;
  for (auto& g : all_elements(left.family(), left.rank()))
    if (is_min_double(g, left, right)) out.push_back(g);
  return out;
}

SignedPerm longest_element(const Blocks& b) {
  SignedPerm g = SignedPerm::identity(b.family(), b.rank());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k : b.generators())
      if (!g.right_descent(k)) {
        g = g.times_gen(k);
        changed = true;
      }
  }
  return g;
}

std::vector<SignedPerm> intersection_elements(const SignedPerm& g, const Blocks& left, const Blocks& right) {
  std::vector<SignedPerm> out;
  SignedPerm gi = g.inverse();
  for (auto& w : parabolic_elements(right))
    if (left.stabilizes(g * w * gi)) out.push_back(w);
  return out;
}

SignedPerm longest_double_rep(const SignedPerm& g, const Blocks& left, const Blocks& right) {
  if (!is_min_double(g, left, right)) throw NotMinimalRep("element is not a minimal double coset representative");
  auto inter = intersection_elements(g, left, right);
  SignedPerm wd = *std::max_element(inter.begin(), inter.end(), [](const SignedPerm& a, const SignedPerm& b) {
    return length(a) < length(b);
  });
  SignedPerm wl = longest_element(left), wr = longest_element(right);
  SignedPerm gp = wl * g * wd * wr;
  if (length(gp) != length(wl) + length(g) - length(wd) + length(wr))
    throw std::logic_error("length identity for the longest double coset element failed");
  return gp;
}

}  // namespace qschur
