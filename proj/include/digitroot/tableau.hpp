#pragma once

#include <string>

#include "digitroot/root_engine.hpp"

namespace digitroot {

/// Renders an extraction trace as the long-form worked layout: a marker line
/// ('-' over anchor places, '^' over intermediate places), the input digits,
/// right-aligned subtrahends with a leading '-', running remainders, and a
/// final "Root result:" line. Output is fixed-width ASCII and byte-stable.
std::string render_text(const RootResult& result, const DecimalNatural& input, RootKind kind);

} // namespace digitroot
