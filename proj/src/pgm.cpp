#include "btfp/pgm.hpp"

#include "btfp/error.hpp"

namespace btfp {

void write_pgm(std::ostream& out, std::size_t width, std::size_t height,
               std::span<const std::uint8_t> pixels) {
    if (pixels.size() != width * height)
        raise(ErrorCode::DimensionMismatch, "pixel count does not match width*height");
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

std::vector<std::uint8_t> gray_pixels(const DenseMatrix& m) {
    const std::uint64_t denom = m.field().modulus() - 1;
    std::vector<std::uint8_t> px;
    px.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            px.push_back(static_cast<std::uint8_t>(255u * static_cast<std::uint64_t>(m.at(r, c)) / denom));
    return px;
}

}  // namespace btfp
