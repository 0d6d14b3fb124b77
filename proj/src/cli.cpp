#include "qschur/cli.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qschur/bases.hpp"
#include "qschur/chevalley.hpp"
#include "qschur/qsp.hpp"
#include "qschur/schur_bc.hpp"
#include "qschur/stab.hpp"
#include "qschur/type_d.hpp"

namespace qschur {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOracleMaxD = 3;

void need_oracle_size(const JobSpec& s) {
  if (s.oracle && s.d > kOracleMaxD)
    throw SizeGuardExceeded("oracle limited to d <= " + std::to_string(kOracleMaxD) + "; pass --no-oracle");
}

// ascending: every matrix after all matrices strictly below it, ties lexicographic
void sort_canonical(std::vector<Mat>& ms) {
  std::stable_sort(ms.begin(), ms.end(), [](const Mat& a, const Mat& b) {
    int wa = sigma_weight(a), wb = sigma_weight(b);
    return wa != wb ? wa < wb : a < b;
  });
}

std::string poly(const BiLaurent& c) { return c.str(); }
std::string poly(const UniLaurent& c) { return c.str(); }

std::string ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

bool nondiagonal_chevalley(const Mat& B) {
  auto s = chevalley_shape(B);
  return s && s->amount > 0;
}

void base_params(Artifact& a, const JobSpec& s) {
  a.command = s.command;
  a.params.push_back({"n", std::to_string(s.n)});
  a.params.push_back({"d", std::to_string(s.d)});
}

Artifact job_enumerate(const JobSpec& s) {
  Artifact a;
  base_params(a, s);
  a.columns = {"index", "matrix", "l", "lc", "la"};
  auto xi = enumerate_xi(s.n, s.d);
  sort_canonical(xi);
  long long k = 0;
  for (auto& A : xi) {
    Lengths L = lengths_of(A);
    a.rows.push_back({k++, A, (long long)L.l, (long long)L.lc, (long long)L.la});
  }
  a.summary.push_back({"count", std::to_string(xi.size())});
  return a;
}

Artifact job_schur_mult(const JobSpec& s) {
  need_oracle_size(s);
  Artifact a;
  base_params(a, s);
  a.params.push_back({"oracle", s.oracle ? "true" : "false"});
  a.columns = {"left", "right", "target", "coeff"};
  if (s.oracle) a.columns.push_back("oracle_agrees");
  auto xi = enumerate_xi(s.n, s.d);
  sort_canonical(xi);
  long long pairs = 0, bad = 0;
  for (auto& B : xi) {
    if (!nondiagonal_chevalley(B)) continue;
    for (auto& A : xi) {
      if (B.co() != A.ro()) continue;
      ++pairs;
      bool agrees = true;
      if (s.oracle) agrees = mult_chevalley_e(B, A) == oracle_mult(B, A);
      bad += !agrees;
      SchurElt y = mult_chevalley(B, A, Algebra::Schur);
      std::vector<Mat> ts;
      for (auto& [T, c] : y.terms()) ts.push_back(T);
      sort_canonical(ts);
      for (auto& T : ts) {
        std::vector<Cell> row{B, A, T, poly(y.coeff(T))};
        if (s.oracle) row.push_back(agrees);
        a.rows.push_back(std::move(row));
      }
    }
  }
  a.summary.push_back({"pairs", std::to_string(pairs)});
  if (s.oracle) a.summary.push_back({"oracle_mismatches", std::to_string(bad)});
  a.ok = bad == 0;
  return a;
}

void canonical_rows(Artifact& a, const std::vector<Mat>& indices, const WeightFn& L, Algebra alg) {
  a.columns = {"index", "term", "coeff"};
  long long not_invariant = 0;
  for (auto& A : indices) {
    SpecElt c = canonical_element(A, L, alg);
    if (bar_recursive(c, L, alg) != c) ++not_invariant;
    std::vector<Mat> ts;
    for (auto& [T, x] : c.terms()) ts.push_back(T);
    sort_canonical(ts);
    std::reverse(ts.begin(), ts.end());
    for (auto& T : ts) a.rows.push_back({A, T, poly(c.coeff(T))});
  }
  a.summary.push_back({"elements", std::to_string(indices.size())});
  a.summary.push_back({"bar_invariant", not_invariant ? "false" : "true"});
  a.ok = not_invariant == 0;
}

WeightFn weight_or_default(const JobSpec& s) { return s.weight.value_or(WeightFn(1, 1)); }

void weight_param(Artifact& a, const WeightFn& L) {
  a.params.push_back({"weight", std::to_string(L.L0) + "," + std::to_string(L.L1)});
}

Artifact job_schur_canonical(const JobSpec& s) {
  Artifact a;
  base_params(a, s);
  WeightFn L = weight_or_default(s);
  weight_param(a, L);
  auto xi = enumerate_xi(s.n, s.d);
  sort_canonical(xi);
  canonical_rows(a, xi, L, Algebra::Schur);
  return a;
}

std::vector<Mat> sorted_window(const JobSpec& s, int dflt) {
  int w = s.window.value_or(dflt);
  if (w < 0) throw BadJob("window must be non-negative");
  auto ms = stab_window(s.n, w);
  sort_canonical(ms);
  return ms;
}

Artifact job_stab_mult(const JobSpec& s) {
  Artifact a;
  a.command = s.command;
  a.params.push_back({"n", std::to_string(s.n)});
  a.params.push_back({"window", std::to_string(s.window.value_or(1))});
  a.columns = {"left", "right", "target", "coeff"};
  auto win = sorted_window(s, 1);
  long long pairs = 0;
  for (auto& B : win) {
    if (!nondiagonal_chevalley(B)) continue;
    for (auto& A : win) {
      if (B.co() != A.ro()) continue;
      ++pairs;
      SchurElt y = mult_chevalley_stab(B, A, Algebra::Kj);
      std::vector<Mat> ts;
      for (auto& [T, c] : y.terms()) ts.push_back(T);
      sort_canonical(ts);
      for (auto& T : ts) a.rows.push_back({B, A, T, poly(y.coeff(T))});
    }
  }
  a.summary.push_back({"pairs", std::to_string(pairs)});
  return a;
}

Artifact job_stab_canonical(const JobSpec& s) {
  Artifact a;
  a.command = s.command;
  a.params.push_back({"n", std::to_string(s.n)});
  a.params.push_back({"window", std::to_string(s.window.value_or(1))});
  WeightFn L = weight_or_default(s);
  weight_param(a, L);
  canonical_rows(a, sorted_window(s, 1), L, Algebra::Kj);
  return a;
}

Artifact job_qsp_verify(const JobSpec& s) {
  Artifact a;
  a.command = s.command;
  int w = s.window.value_or(2);
  a.params.push_back({"n", std::to_string(s.n)});
  a.params.push_back({"window", std::to_string(w)});
  a.columns = {"variant", "relation", "weight", "params", "holds", "denominator_power"};
  long long total = 0, failed = 0;
  for (Variant v : {Variant::Jmath, Variant::Imath}) {
    for (auto& r : verify_suite(v, s.n, w)) {
      ++total;
      failed += !r.holds;
      a.rows.push_back({std::string(v == Variant::Jmath ? "jmath" : "imath"), r.relation, ints(r.lambda),
                        ints(r.params), r.holds, (long long)r.denom_power});
    }
  }
  a.summary.push_back({"checks", std::to_string(total)});
  a.summary.push_back({"failed", std::to_string(failed)});
  a.ok = failed == 0;
  return a;
}

std::string sign_text(DSign s) { return std::string(1, sign_char(s)); }

Artifact job_typed_mult(const JobSpec& s) {
  need_oracle_size(s);
  Artifact a;
  base_params(a, s);
  a.params.push_back({"oracle", s.oracle ? "true" : "false"});
  a.columns = {"left", "left_sign", "right", "right_sign", "target", "target_sign", "coeff", "right_shared"};
  if (s.oracle) a.columns.push_back("oracle_agrees");
  auto xi = enumerate_xi_d(s.n, s.d);
  std::stable_sort(xi.begin(), xi.end(), [](const SignedMat& x, const SignedMat& y) {
    int wx = sigma_weight(x.base), wy = sigma_weight(y.base);
    return wx != wy ? wx < wy : x < y;
  });
  long long pairs = 0, bad = 0, bad_unshared = 0;
  for (auto& B : xi) {
    if (!nondiagonal_chevalley(B.base)) continue;
    for (auto& A : xi) {
      if (B.base.co() != A.base.ro() || s_right(B) != s_left(A)) continue;
      ++pairs;
      SchurEltD y = mult_d(B, A);
      bool shared = shared_by_two_cosets(A), agrees = true;
      if (s.oracle) agrees = y == oracle_mult_d(B, A);
      bad += !agrees;
      bad_unshared += !agrees && !shared;
      for (auto& [T, c] : y.terms()) {
        std::vector<Cell> row{B.base, sign_text(B.sign), A.base, sign_text(A.sign), T.base, sign_text(T.sign),
                              poly(c), shared};
        if (s.oracle) row.push_back(agrees);
        a.rows.push_back(std::move(row));
      }
    }
  }
  a.summary.push_back({"pairs", std::to_string(pairs)});
  if (s.oracle) {
    a.summary.push_back({"oracle_mismatches", std::to_string(bad)});
    a.summary.push_back({"oracle_mismatches_unshared_right", std::to_string(bad_unshared)});
  }
  a.ok = bad_unshared == 0;
  return a;
}

Artifact job_verify_oracle(const JobSpec& s) {
  if (!s.oracle) throw BadJob("verify-oracle needs the oracle");
  need_oracle_size(s);
  Artifact a;
  base_params(a, s);
  a.columns = {"left", "right", "agrees"};
  auto xi = enumerate_xi(s.n, s.d);
  sort_canonical(xi);
  long long pairs = 0, bad = 0;
  for (auto& B : xi) {
    if (!nondiagonal_chevalley(B)) continue;
    for (auto& A : xi) {
      if (B.co() != A.ro()) continue;
      ++pairs;
      bool ok = mult_chevalley_e(B, A) == oracle_mult(B, A);
      bad += !ok;
      a.rows.push_back({B, A, ok});
    }
  }
  a.summary.push_back({"pairs", std::to_string(pairs)});
  a.summary.push_back({"mismatches", std::to_string(bad)});
  a.summary.push_back(
      {"report", bad ? std::to_string(bad) + " Chevalley products disagree" : "all Chevalley products agree"});
  a.ok = bad == 0;
  return a;
}

// ---- encodings

ojson cell_json(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return *i;
  if (auto* b = std::get_if<bool>(&c)) return *b;
  if (auto* s = std::get_if<std::string>(&c)) return *s;
  const Mat& M = std::get<Mat>(c);
  return ojson{{"n", M.n()}, {"rows", M.rows()}};
}

Cell json_cell(const ojson& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) return Mat::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
  throw std::invalid_argument("unexpected cell " + j.dump());
}

char cell_kind(const Cell& c) { return "ibsm"[c.index()]; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cur += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string cell_text(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  if (auto* s = std::get_if<std::string>(&c)) return *s;
  return std::get<Mat>(c).str();
}

Cell text_cell(const std::string& t, char kind) {
  switch (kind) {
    case 'i': return std::stoll(t);
    case 'b': return t == "true";
    case 's': return t;
    case 'm': return Mat::from_rows(nlohmann::json::parse(t).get<std::vector<std::vector<int>>>());
  }
  throw std::invalid_argument(std::string("unknown cell kind ") + kind);
}

std::pair<std::string, std::string> split_kv(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + s);
  return {s.substr(0, eq), s.substr(eq + 1)};
}

std::string hex_sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned k = 0; k < len; ++k) {
    s += hex[md[k] >> 4];
    s += hex[md[k] & 15];
  }
  return s;
}

WeightFn parse_weight(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw BadJob("weight must be L0,L1");
  try {
    return WeightFn(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
  } catch (const std::invalid_argument& e) {
    throw BadJob(std::string("bad weight '") + s + "': " + e.what());
  }
}

bool artifact_ok(const std::string& bytes, Format f) { return (f == Format::Json ? decode_json(bytes) : decode_csv(bytes)).ok; }

}  // namespace

std::vector<std::string> command_names() {
  return {"schur-mult",  "schur-canonical", "stab-mult",     "stab-canonical",
          "qsp-verify",  "typed-mult",      "verify-oracle", "enumerate"};
}

Artifact run_job(const JobSpec& s) {
  if (s.n < 1) throw BadJob("n must be positive");
  if (s.d < 0) throw BadJob("d must be non-negative");
  if (s.command == "enumerate") return job_enumerate(s);
  if (s.command == "schur-mult") return job_schur_mult(s);
  if (s.command == "schur-canonical") return job_schur_canonical(s);
  if (s.command == "stab-mult") return job_stab_mult(s);
  if (s.command == "stab-canonical") return job_stab_canonical(s);
  if (s.command == "qsp-verify") return job_qsp_verify(s);
  if (s.command == "typed-mult") return job_typed_mult(s);
  if (s.command == "verify-oracle") return job_verify_oracle(s);
  throw BadJob("unknown command '" + s.command + "'");
}

std::string encode(const Artifact& a, Format f) {
  if (f == Format::Json) {
    ojson j;
    j["command"] = a.command;
    j["params"] = ojson::object();
    for (auto& [k, v] : a.params) j["params"][k] = v;
    j["columns"] = a.columns;
    j["rows"] = ojson::array();
    for (auto& r : a.rows) {
      ojson row = ojson::array();
      for (auto& c : r) row.push_back(cell_json(c));
      j["rows"].push_back(row);
    }
    j["summary"] = ojson::object();
    for (auto& [k, v] : a.summary) j["summary"][k] = v;
    j["ok"] = a.ok;
    // one key per line, one row per line
    std::string out = "{";
    bool first = true;
    for (auto& [k, v] : j.items()) {
      out += first ? "\n" : ",\n";
      first = false;
      out += " " + ojson(k).dump() + ": ";
      if (k != "rows" || v.empty()) {
        out += v.dump();
        continue;
      }
      out += "[";
      for (std::size_t r = 0; r < v.size(); ++r) out += (r ? ",\n  " : "\n  ") + v[r].dump();
      out += "\n ]";
    }
    return out + "\n}\n";
  }
  std::string out = "# command=" + a.command + "\n";
  for (auto& [k, v] : a.params) out += "# param " + k + "=" + v + "\n";
  out += std::string("# ok=") + (a.ok ? "true" : "false") + "\n";
  std::string kinds;
  if (!a.rows.empty())
    for (auto& c : a.rows.front()) kinds += cell_kind(c);
  out += "# kinds=" + kinds + "\n";
  for (std::size_t k = 0; k < a.columns.size(); ++k) out += (k ? "," : "") + csv_field(a.columns[k]);
  out += "\n";
  for (auto& r : a.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + csv_field(cell_text(r[k]));
    out += "\n";
  }
  for (auto& [k, v] : a.summary) out += "# summary " + k + "=" + v + "\n";
  return out;
}

Artifact decode_json(const std::string& text) {
  ojson j = ojson::parse(text);
  Artifact a;
  a.command = j.at("command").get<std::string>();
  for (auto& [k, v] : j.at("params").items()) a.params.push_back({k, v.get<std::string>()});
  a.columns = j.at("columns").get<std::vector<std::string>>();
  for (auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (auto& c : r) row.push_back(json_cell(c));
    a.rows.push_back(std::move(row));
  }
  for (auto& [k, v] : j.at("summary").items()) a.summary.push_back({k, v.get<std::string>()});
  a.ok = j.at("ok").get<bool>();
  return a;
}

Artifact decode_csv(const std::string& text) {
  Artifact a;
  std::istringstream in(text);
  std::string line, kinds;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      std::string body = line.substr(2);
      if (body.rfind("param ", 0) == 0) {
        a.params.push_back(split_kv(body.substr(6)));
      } else if (body.rfind("summary ", 0) == 0) {
        a.summary.push_back(split_kv(body.substr(8)));
      } else {
        auto [k, v] = split_kv(body);
        if (k == "command") a.command = v;
        else if (k == "ok") a.ok = v == "true";
        else if (k == "kinds") kinds = v;
      }
      continue;
    }
    auto fields = csv_split(line);
    if (!header) {
      a.columns = fields;
      header = true;
      continue;
    }
    if (fields.size() != kinds.size()) throw std::invalid_argument("csv row width does not match kinds");
    std::vector<Cell> row;
    for (std::size_t k = 0; k < fields.size(); ++k) row.push_back(text_cell(fields[k], kinds[k]));
    a.rows.push_back(std::move(row));
  }
  return a;
}

std::string error_record(const std::string& type, const std::string& message) {
  ojson j;
  j["error"] = ojson{{"type", type}, {"message", message}};
  return j.dump() + "\n";
}

template <int N>
Laurent<N> parse_laurent(const std::string& s, const std::array<const char*, N>& names) {
  using L = Laurent<N>;
  if (s == "0") return L();
  std::vector<typename L::Term> terms;
  std::size_t pos = 0;
  int sign = 1;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    pos = 1;
  }
  while (pos <= s.size()) {
    std::size_t plus = s.find(" + ", pos), minus = s.find(" - ", pos);
    std::size_t end = std::min(plus, minus);
    std::string body = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    typename L::Exp e{};
    int64_t c = 1;
    std::istringstream fs(body);
    std::string factor;
    while (std::getline(fs, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("bad polynomial '" + s + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        c = std::stoll(factor);
        continue;
      }
      auto caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      int k = 0;
      while (k < N && name != names[k]) ++k;
      if (k == N) throw std::invalid_argument("unknown variable '" + name + "' in '" + s + "'");
      e[k] += caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    }
    terms.push_back({e, sign * c});
    if (end == std::string::npos) break;
    sign = end == plus ? 1 : -1;
    pos = end + 3;
  }
  return L::from_terms(std::move(terms));
}

template Laurent<1> parse_laurent<1>(const std::string&, const std::array<const char*, 1>&);
template Laurent<2> parse_laurent<2>(const std::string&, const std::array<const char*, 2>&);
template Laurent<3> parse_laurent<3>(const std::string&, const std::array<const char*, 3>&);

std::string cache_key(const JobSpec& s, const std::string& version) {
  std::string w = s.weight ? std::to_string(s.weight->L0) + "," + std::to_string(s.weight->L1) : "-";
  std::string win = s.window ? std::to_string(*s.window) : "-";
  std::string text = "qschur|" + version + "|" + s.command + "|n=" + std::to_string(s.n) + "|d=" +
                     std::to_string(s.d) + "|weight=" + w + "|window=" + win +
                     "|format=" + (s.format == Format::Json ? "json" : "csv") + "|oracle=" + (s.oracle ? "1" : "0");
  return hex_sha256(text);
}

std::filesystem::path Cache::path_of(const std::string& key) const { return dir_ / (key + ".out"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  std::ifstream in(path_of(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Cache::put(const std::string& key, const std::string& bytes) const {
  std::filesystem::create_directories(dir_);
  auto target = path_of(key);
  if (std::filesystem::exists(target)) return;
  static std::atomic<unsigned> counter{0};
  auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::filesystem::filesystem_error("cannot write", tmp, std::make_error_code(std::errc::io_error));
    out << bytes;
    out.close();
    if (!out) throw std::filesystem::filesystem_error("cannot write", tmp, std::make_error_code(std::errc::io_error));
  }
  std::filesystem::rename(tmp, target);
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Structure constants and bases of Schur algebras of type B/C/D and their stabilizations"};
  JobSpec spec;
  std::string weight, format = "json", cache_dir;
  int window = -1;
  bool no_oracle = false;
  app.add_option("command", spec.command, "command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--n", spec.n, "rank n")->capture_default_str();
  app.add_option("--d", spec.d, "degree d")->capture_default_str();
  app.add_option("--weight", weight, "weight function L0,L1");
  app.add_option("--window", window, "entry bound for windows");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "cache directory (default $QSCHUR_CACHE_DIR)");
  app.add_flag("--no-oracle", no_oracle, "skip Hecke algebra computations");
  app.set_version_flag("--version", kCodeVersion);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_record("UsageError", e.what());
    return 1;
  }
  try {
    if (!weight.empty()) spec.weight = parse_weight(weight);
    if (window >= 0) spec.window = window;
    spec.format = format == "csv" ? Format::Csv : Format::Json;
    spec.oracle = !no_oracle;
    if (cache_dir.empty())
      if (const char* env = std::getenv("QSCHUR_CACHE_DIR")) cache_dir = env;
    std::optional<Cache> cache;
    std::string key;
    if (!cache_dir.empty()) {
      cache.emplace(cache_dir);
      key = cache_key(spec);
      if (auto hit = cache->get(key)) {
        std::cout << *hit;
        return artifact_ok(*hit, spec.format) ? 0 : 3;
      }
    }
    Artifact a = run_job(spec);
    std::string bytes = encode(a, spec.format);
    if (cache) cache->put(key, bytes);
    std::cout << bytes;
    return a.ok ? 0 : 3;
  } catch (const BadJob& e) {
    std::cout << error_record("BadJob", e.what());
  } catch (const SizeGuardExceeded& e) {
    std::cout << error_record("SizeGuardExceeded", e.what());
  } catch (const NonExactDivision& e) {
    std::cout << error_record("NonExactDivision", e.what());
  } catch (const DimMismatch& e) {
    std::cout << error_record("DimMismatch", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cout << error_record("IOError", e.what());
  } catch (const std::exception& e) {
    std::cout << error_record("Error", e.what());
  }
  return 1;
}

}  // namespace qschur
