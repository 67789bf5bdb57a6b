#ifndef LIEBRANCH_CLI_HPP
#define LIEBRANCH_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liebranch/branching.hpp"

namespace liebranch {

/*
  Command layer. Exit codes: 0 success, 2 usage error, 3 guard exceeded,
  4 internal inconsistency.
*/

enum class Command { Branch, FanCmd, Xi, Verify };
enum class Basis { Dynkin, EBasis };
enum class Method { Fan, Weyl, Partition, Oracle, All };
enum class Format { Text, Json };
enum class ChargeNorm { Raw, Integerized };

struct Request {
  Command command = Command::Branch;
  std::string algebra;     // e.g. "B4"
  std::string subalgebra;  // e.g. "A3xU1"
  std::string hw;          // comma-separated labels or e-basis coordinates
  Basis basis = Basis::Dynkin;
  Method method = Method::Fan;
  Format format = Format::Text;
  ChargeNorm charge_norm = ChargeNorm::Raw;
  std::string hw_file;  // batch mode; one weight per line, '#' comments
  bool parallel = false;
  bool trace = false;  // text-mode level trace for branch
};

// Executes a request, writing rendered output to `out` and diagnostics to
// `err`. Returns the process exit code.
int run_request(const Request& req, std::ostream& out, std::ostream& err);

// Renderers, exposed for tests. All output is newline-terminated and
// byte-stable across runs.
std::string render_branch_text(const Injection& inj, const BranchingResult& r, ChargeNorm norm);
std::string render_branch_json(const Injection& inj, const BranchingResult& r,
                               ChargeNorm norm, const CheckReport* checks);
std::string render_xi_text(const XiSet& xi);
std::string render_xi_json(const Injection& inj, const XiSet& xi);
std::string render_fan_text(const Injection& inj, const Fan& fan);
std::string render_fan_json(const Injection& inj, const Fan& fan);

// Token helpers (throw std::invalid_argument on malformed input).
std::pair<Series, int> parse_algebra_token(const std::string& tok);
Injection resolve_injection(const std::string& algebra, const std::string& subalgebra);
Weight parse_hw(const Injection& inj, const std::string& hw, Basis basis);

}  // namespace liebranch

#endif
