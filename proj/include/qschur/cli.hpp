// Job driver behind the command line tool: runs one command, encodes the
// result as JSON or CSV, and keeps a content-addressed on-disk cache.
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qschur/coeffs.hpp"
#include "qschur/matrix.hpp"

namespace qschur {

inline constexpr const char* kCodeVersion = "0.1.0";

struct BadJob : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv };

struct JobSpec {
  std::string command;
  int n = 1;
  int d = 1;
  std::optional<WeightFn> weight;
  std::optional<int> window;
  Format format = Format::Json;
  bool oracle = true;  // false skips every Hecke algebra computation
};
std::vector<std::string> command_names();

// One cell: integer, flag, text, or a matrix.  Coefficients are text in the
// printed polynomial form.
using Cell = std::variant<long long, bool, std::string, Mat>;

struct Artifact {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;   // in print order
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> summary;  // in print order
  bool ok = true;  // false when a verification found a failure
  friend bool operator==(const Artifact&, const Artifact&) = default;
};

Artifact run_job(const JobSpec& spec);

std::string encode(const Artifact& a, Format f);
Artifact decode_json(const std::string& text);
Artifact decode_csv(const std::string& text);
// {"error": {"type": ..., "message": ...}}
std::string error_record(const std::string& type, const std::string& message);

// Reads back a polynomial printed by Laurent::str with the given names.
template <int N>
Laurent<N> parse_laurent(const std::string& s, const std::array<const char*, N>& names = Laurent<N>::default_names());

// Key over (command, parameters, format, code version).
std::string cache_key(const JobSpec& spec, const std::string& version = kCodeVersion);

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::optional<std::string> get(const std::string& key) const;
  // Existing entries are left alone; writes go through a temporary file and a rename.
  void put(const std::string& key, const std::string& bytes) const;
  std::filesystem::path path_of(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

// Command line entry; returns the exit status.  0 success, 1 error record
// printed, 3 a verification failed.
int cli_main(int argc, char** argv);

}  // namespace qschur
