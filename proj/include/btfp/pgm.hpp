#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "btfp/dense.hpp"

namespace btfp {

/// Binary portable graymap ("P5", maxval 255).
void write_pgm(std::ostream& out, std::size_t width, std::size_t height,
               std::span<const std::uint8_t> pixels);

/// Row-major gray levels for a matrix over F_p: value v maps to
/// floor(255 * v / (p - 1)) (so p = 2 maps 0 -> 0 and 1 -> 255).
std::vector<std::uint8_t> gray_pixels(const DenseMatrix& m);

}  // namespace btfp
