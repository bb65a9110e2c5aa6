#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "vpvxy/exact/rational.hpp"
#include "vpvxy/vpv.hpp"

namespace vpvxy::cli {

enum class Status { ok, error, warning };
std::string_view to_string(Status s);

/// Outcome of one subcommand: {command, inputs, results, status, message}.
struct CommandResult {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  Status status = Status::ok;
  std::string message;

  int exit_code() const { return status == Status::error ? 1 : 0; }
  nlohmann::ordered_json to_json() const;
};

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr std::uint64_t kDefaultTruncation = 400;

struct GlobalOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::uint64_t truncation = kDefaultTruncation;
  Convention convention = Convention::Axis;
  std::uint64_t point_budget = 10'000'000;
};

/// Flag value if given, else VPV_PRECISION_BITS, else the default.
unsigned resolve_precision(std::optional<unsigned> flag);

/// Transform source: either an Euler index or the (a, b, c) family parameters.
struct TransformSource {
  std::optional<long> n;
  std::optional<std::string> a, b, c;
};

CommandResult cmd_euler(long n_max);
CommandResult cmd_family(long b, long c, const std::optional<std::string>& a);
CommandResult cmd_verify(const std::string& x, const std::string& y, const std::string& v,
                         const std::string& w);
CommandResult cmd_digits(long b, long c);
CommandResult cmd_vpv_eval(const std::string& x, const std::string& y, ProductForm form,
                           const GlobalOptions& options);
CommandResult cmd_transform(const TransformSource& source, const GlobalOptions& options);
CommandResult cmd_search(long b_max, long c_max);

/// Plain-text rendering carrying the same fields as the JSON document.
std::string render_human(const CommandResult& result);

/// {"decimal": ..., "hex": ...}
nlohmann::ordered_json real_json(const Real& value);

}  // namespace vpvxy::cli
