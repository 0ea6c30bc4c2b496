#pragma once

#include <iostream>

#include "dqc1/grid.hpp"

namespace dqc1::cli {

/// Bad command-line argument; mapped to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

/// Entry point behind the `dqc1` binary. Exit codes: 0 success, 1 I/O
/// failure, 2 usage error, 3 dimension/tiling mismatch, 4 domain-validation
/// failure.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

/// Radians, with `<k>pi` literals accepted: "0.5pi", "pi", "-0.25pi", "1.57".
double parse_angle(const std::string& text);

/// "1920x1080" -> width 1920, height 1080.
PanelDims parse_dims(const std::string& text);

/// "10" -> 10x10 cells, "5x8" -> 5 wide, 8 tall.
CellSpec parse_cells(const std::string& text);

}  // namespace dqc1::cli
