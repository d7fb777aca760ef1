#pragma once

#include <iosfwd>

#include "smallcanc/examples.hpp"
#include "smallcanc/oracle.hpp"

namespace smallcanc {

// One CLI invocation's effective settings; every report starts with a
// reproducibility header derived from this.
struct SessionConfig {
  std::string presentation_path;
  std::optional<int> tau_override;
  std::size_t virt_depth = 2;
  ClosureCaps closure_caps = {};
  std::size_t oracle_bound = 20;
  Policy policy = Policy::kFirstBranch;
  std::size_t step_budget = 10000;
  std::string format = "text";  // text | kv

  std::string header(int effective_tau) const;
};

// Exit codes: 0 = success/pass, 1 = a check or verdict failed, 2 = usage,
// parse, closure, or resource errors.

// Closure re-verification plus all three axiom checkers; passes when the
// closure is compatible, small cancellation holds, and at least one
// isolation side holds up to its bound.
int cmd_check(const SessionConfig& cfg, std::ostream& out);

// query: pieces | lambda <w> | chart <w> | fchar <w> | level <w> |
// derived <w> | turn <w> <occ#> <rel#> | member <poly> | oracle <poly> |
// basis-sample [len] | nontrivial
int cmd_query(const SessionConfig& cfg, const std::vector<std::string>& query,
              std::ostream& out);

// kind "corpus": writes the 20-instance corpus plus manifest.tsv into dir.
// kind "trinomial" / "group-algebra": runs the screening search and writes a
// single presentation file; params are positional numbers (see CLI help).
int cmd_gen(const std::string& kind, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& dir, std::ostream& out);

}  // namespace smallcanc
