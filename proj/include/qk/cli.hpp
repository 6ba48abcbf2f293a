#pragma once

#include <iosfwd>

namespace qk {

/// Entry point of the qk tool; streams injected so tests can capture output.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qk
