#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubezero::cli {

// Runs one cubezero command. `args` excludes the program name (argv[1..]).
// Reports go to `out`; usage and input errors go to `err`.
//
// Exit codes:
//   check:        0 HOLDS, 1 FAILS, 2 UNKNOWN, 3 input error
//   verify:       0 zero failures, 1 failures found, 3 unknown lemma / bad flags
//   hilbert-det:  0 formula and elimination agree, 1 mismatch (never expected)
//   socle, gr, ideals, hankel-rank: 0 on success, 3 on input error
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cubezero::cli
