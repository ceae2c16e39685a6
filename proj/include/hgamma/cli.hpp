#pragma once

namespace hgamma {

/// Entry point for the hgamma command-line tool. Exit codes: 0 success,
/// 1 verification failure, 2 usage error, 3 internal convention mismatch.
int run_cli(int argc, char** argv);

}  // namespace hgamma
