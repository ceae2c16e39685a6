#pragma once

#include <string>
#include <vector>

#include "hgamma/rational.hpp"
#include "hgamma/space.hpp"

namespace hgamma {

struct VerifyOptions {
    std::vector<Rational> gammas;
    Weight weight = Weight::F;
    unsigned long max_degree = 4;
};

struct IdentityClassResult {
    std::string name;
    bool pass = true;
    std::string counterexample;  // first failure, empty when the class passes
};

/// Runs the oracle-equivalence suite. For weight f this is seven identity
/// classes (monomial fast path, closed form vs Gram–Schmidt, recursion,
/// cancellation, term projection, normal equations, distance series); for
/// f^2 it is the single recursion class, which requires gamma = 1. Each
/// class stops at its first counterexample but all classes always run.
std::vector<IdentityClassResult> run_identity_classes(const VerifyOptions& opts);

}  // namespace hgamma
