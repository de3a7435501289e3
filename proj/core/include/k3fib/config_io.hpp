#pragma once

#include <string>

#include "k3fib/curves.hpp"

namespace k3fib {

// Line-oriented configuration format:
//   surface k3|res
//   smoothbranch true|false
//   curve <name> <self-intersection>
//   meet <name> <name> <int>
//   derived <name> <k>*<curve> ...       class given as a combination of curves
//   lift <curve> <name>                  base name of the double-cover lifts
//   fibration fiber <id> <name>...
//   fibration section <name>...
//   fibration zero <name>
//   action <name> (a b)(c d e) ... fix f g   appends one generator
//   record <id> [<k>*]<name>...          named divisor
//   record <id> zero <name>
// '#' starts a comment. Meets involving a derived curve are checked, not set.
CurveConfig parse_config(const std::string& text);
CurveConfig load_config_file(const std::string& path);
std::string serialize_config(const CurveConfig& c);

}  // namespace k3fib
