#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ffh/transform.hpp"

namespace ffh::cli {

// One verb per invocation; options are validated before any computation.
struct Command {
  enum class Verb { Transform, Verify, PaperExamples, Moments, Classify, Oracle };

  struct Options {
    std::string h;        // holomorphic seed text ("1/(1+z^2)" selects the
                          // built-in numeric seed, anything else is parsed)
    std::string Pk, Pl;   // polynomial overrides; empty means builtin
    int p = 3, q = 3, k = 0, l = 0;
    int n = 0;
    std::string format = "plain";  // plain | json | latex
    bool numeric = false;
    bool has_at = false;
    double at_r = 0.0, at_rho = 0.0;
    double tol = -1.0;  // negative: per-verb default
  };

  Verb verb = Verb::Transform;
  Options options;
};

// Grammar: term (('+'|'-') term)*, term = [coef '*'] 'z' ['^' uint] | coef,
// coef = rational | rational '*i' | 'i'.  Whitespace-insensitive; errors
// carry the offending offset.
HolomorphicInput parse_holomorphic(const std::string& text);

// Grammar: signed product terms of rationals, variables x0/x<i>/y<j> with
// optional '^' exponent, and blades e<digits>; shared with the printers.
CartesianPoly parse_poly(const std::string& text, CartesianPoly::Shape shape);

// Thrown by parse_command when --help is requested; carries the help text.
struct HelpRequested {
  std::string text;
};

Command parse_command(const std::vector<std::string>& args);

// 0 success, 1 verification failure, 2 usage error.
int run(const Command& cmd, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffh::cli
