#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "secm/quadrature.hpp"
#include "secm/verification.hpp"

namespace secm {

/// paper: every published value and formula the library reproduces.
/// quick: a subset that finishes in a few seconds.
enum class Suite { paper, quick };

Suite parse_suite(std::string_view name);  // throws InputError

/// `seed` drives the sample points of the randomized checks.
std::vector<VerificationReport> run_suite(Suite suite, const IntegrationSpec& spec = {},
                                          std::uint64_t seed = 1);

}  // namespace secm
