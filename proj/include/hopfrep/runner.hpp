#pragma once

#include <string>
#include <vector>

#include "hopfrep/catalog.hpp"
#include "hopfrep/parser.hpp"

namespace hopfrep {

/// One CLI check invocation. Check names form a closed set:
/// axioms | module | comodule | hopf-module | hopf-rep-1 | hopf-rep-2 |
/// hopf-rep | subgroup | induce | confluence | oracle.
struct CheckRequest {
    std::string check;
    std::vector<std::string> instances;  // catalog names or .hp file paths
    std::string pi_path;                 // projection file for subgroup/induce
    std::string module_name = "trivial";
    int degree = -1;  // -1: per-check default (4 for confluence, 3 otherwise)
    std::string expect = "pass";
    std::string format = "text";  // text | json
    Rational oracle_q0 = Rational(2);
    unsigned seed = 0;  // reserved for randomized suites
};

struct RunOutcome {
    Report report;
    std::string rendered;  // deterministic bytes in the requested format
    int exit_code = 0;     // 0 expected verdict, 1 unexpected, 2 usage/parse
};

/// Resolve a catalog name (eq2 | ak | cyclic:<n>) or parse a DSL file path.
HopfPtr resolve_algebra(const std::string& name);

/// Run a request end to end; throws ParseError/Error for malformed input
/// (mapped to exit code 2 by the CLI).
RunOutcome run_check(const CheckRequest& req);

}  // namespace hopfrep
