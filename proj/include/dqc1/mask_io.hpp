#pragma once

#include <filesystem>

#include "dqc1/phase_mask.hpp"

namespace dqc1 {

/// Text format, UTF-8 with LF endings and `#` comment lines:
///   PMASK1 <width> <height>            decimal radians, height rows
///   PMASK1 <width> <height> L<levels>  integer levels, phase = 2*pi*k/levels
/// Saved decimals use shortest round-trip formatting, so save/load is
/// bit-exact; loaded phases are reduced to [0, 2*pi) either way.
void save_mask(const PhaseMask& mask, const std::filesystem::path& path);

/// Integer-level variant; every phase must already be an exact multiple of
/// 2*pi/levels (see quantize).
void save_mask_levels(const PhaseMask& mask, const std::filesystem::path& path,
                      int levels);

PhaseMask load_mask(const std::filesystem::path& path);

}  // namespace dqc1
