#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "latstack/chain_count.hpp"

namespace latstack {

/// "a" or "a..b". ParseError names `field` on malformed input.
Range parse_range(const std::string& text, const std::string& field);

/// LATSTACK_BUDGET when set and valid, otherwise kDefaultBudget.
std::size_t budget_from_env();

/// Exit status: 0 success, 1 failed verification or runtime error, 2 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latstack
