#include "btfp/json_io.hpp"

namespace btfp {

namespace {

nlohmann::json matrix_to_json(const DenseMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

DenseMatrix matrix_from_json(const PrimeField& field, const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        raise(ErrorCode::BadInput, "matrix JSON must be a non-empty array of arrays");
    const std::size_t rows = j.size(), cols = j[0].size();
    DenseMatrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) raise(ErrorCode::BadInput, "ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::uint64_t v = j[r][c].get<std::uint64_t>();
            if (v >= field.modulus()) raise(ErrorCode::BadInput, "matrix entry is not a residue");
            m.at(r, c) = static_cast<std::uint32_t>(v);
        }
    }
    return m;
}

}  // namespace

nlohmann::json band_to_json(const BandSpec& spec) {
    return {{"p", spec.field().modulus()}, {"lower", spec.lower()}, {"band", spec.coeffs()}};
}

BandSpec band_from_json(const nlohmann::json& j) {
    PrimeField field(j.at("p").get<std::uint32_t>());
    return BandSpec(field, j.at("lower").get<unsigned>(), j.at("band").get<std::vector<std::uint32_t>>());
}

nlohmann::json to_json(const PeriodicInverse& inv) {
    nlohmann::json j = band_to_json(inv.spec());
    j["n"] = inv.order();
    j["period"] = inv.period();
    j["det"] = inv.det();
    j["blocks"] = {{"diag", matrix_to_json(inv.block_diag())},
                   {"upper", matrix_to_json(inv.block_upper())},
                   {"lower", matrix_to_json(inv.block_lower())}};
    return j;
}

PeriodicInverse periodic_inverse_from_json(const nlohmann::json& j) {
    BandSpec spec = band_from_json(j);
    const auto& blocks = j.at("blocks");
    return PeriodicInverse(spec, j.at("n").get<std::uint64_t>(), j.at("period").get<std::uint64_t>(),
                           j.at("det").get<std::uint32_t>(), matrix_from_json(spec.field(), blocks.at("diag")),
                           matrix_from_json(spec.field(), blocks.at("upper")),
                           matrix_from_json(spec.field(), blocks.at("lower")));
}

}  // namespace btfp
