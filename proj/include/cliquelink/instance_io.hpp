#pragma once

// Line-based text formats.
//
// Instance:            Linkage:
//   # comment            path 1: (0,0) (0,1)
//   version 1            path 2: (1,0) (1,2) (2,2)
//   dims 2 3
//   pair 0 0 2 1
//
// Coordinates are 0-based. `version` is optional; `;` may separate lines.

#include <iosfwd>
#include <string>

#include "cliquelink/errors.hpp"
#include "cliquelink/linkage.hpp"

namespace cliquelink {

/// Malformed or unreadable input. The message starts with "line N:" when a
/// line is to blame.
class InputError : public ContractError {
 public:
  using ContractError::ContractError;
};

inline constexpr int instance_format_version = 1;

LinkageProblem parse_instance(std::istream& in);
LinkageProblem parse_instance(const std::string& text);
LinkageProblem read_instance(const std::string& path);

/// Canonical form: version line, dims line, one pair line per pair.
std::string serialize_instance(const LinkageProblem& p);

/// One `path i:` line per path, 1-based.
std::string format_linkage(const Linkage& l);

/// Reads `path i:` lines; '#' lines and blank lines are skipped. Indices must
/// be 1..m, each once.
Linkage parse_linkage(std::istream& in);
Linkage parse_linkage(const std::string& text);
Linkage read_linkage(const std::string& path);

}  // namespace cliquelink
