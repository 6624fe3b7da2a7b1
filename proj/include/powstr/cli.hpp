#pragma once

// Command-line front end: `powstr <verb> [flags]`.

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powstr/ring.hpp"
#include "powstr/series.hpp"

namespace powstr::cli {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Verb { zeta, hilb, power, verify };
enum class Format { plain, json };

struct Command {
  Verb verb = Verb::zeta;
  std::string model_selector;
  RingModel model = RingModel::integers();
  std::string kind = "mot";
  std::optional<RingElement> element; // --class / --surface
  std::vector<RingElement> series;    // --series, one entry per coefficient
  std::optional<RingElement> exponent;
  std::size_t order = 0;
  int d = 2;
  std::string law;
  std::optional<std::string> hom;
  std::size_t cases = 20;
  std::uint64_t seed = 1;
  Format format = Format::plain;
  /// Set when --help was requested; execute() prints it.
  std::optional<std::string> help;
};

/// "Z", "ZL", "Zuv", or "custom:x,y" with an optional ";min=-k" floor.
RingModel model_from_selector(std::string_view selector);

/// Smallest standard target for a hom text: the variables named on the
/// right-hand sides, in order of appearance; Z when there are none.
RingModel infer_hom_target(std::string_view hom_text);

/// args excludes the program name. Throws UsageError (malformed element
/// texts report their position).
Command parse_args(std::span<const std::string> args);

struct Outcome {
  std::string output;
  int exit_code = 0;
};

/// Exit codes: 0 success or passing verification, 2 verification mismatch,
/// 1 error.
Outcome execute(const Command &c);

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace powstr::cli
