#pragma once

#include "cayley_ht/circulant.hpp"

#include <iosfwd>

namespace cayley_ht {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitInfeasible = 3,
};

/// Entry point of the `cayley-ht` tool. Records go to `out`, diagnostics to `err`.
///
///   hit       exact hitting times by one method (json or csv records)
///   verify    property suites: inverse, identities, closedforms, all
///   simulate  Monte-Carlo estimate, optionally compared with the exact value
///   bench     wall-clock of full-vector computations (csv)
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Milliseconds to compute h(0, 1..N-1) on Cay(Z_N, {+1, +2}) with `method`,
/// table construction included; the minimum over a few repetitions.
/// Supports Oracle, RowSum, Corrected and Printed.
double bench_full_vector_ms(Method method, long long modulus);

}  // namespace cayley_ht
