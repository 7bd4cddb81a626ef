#pragma once

#include "waveatom/detector.hpp"
#include "waveatom/fields.hpp"
#include "waveatom/spinor.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace waveatom::io {

/// 9 significant digits, scientific notation (the fixed CSV float format).
std::string format_sci(double v);

/// Comma-separated, header row, LF line endings, floats via format_sci.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void raw_row(const std::vector<std::string>& cells);
    void number_row(const std::vector<double>& values);

    const std::string& str() const { return buffer_; }
    void write(const std::filesystem::path& path) const;

private:
    std::size_t columns_;
    std::string buffer_;
};

void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Loads a two-column `z,rel_intensity` CSV (header required).
fields::TabulatedProfile load_intensity_csv(const std::filesystem::path& path);

/// Spinor grid CSV: `ix,iy,iz,re_up,im_up,re_down,im_down`, one row per
/// grid point, all points present exactly once. Shape is inferred from
/// the maximum indices.
spinor::SpinorGrid load_spinor_grid_csv(const std::filesystem::path& path,
                                        const std::array<double, 3>& spacing,
                                        bool periodic = true);

std::string spinor_grid_csv(const spinor::SpinorGrid& grid);

/// One current component per file: `ix,iy,iz,jx,jy,jz`.
std::string current_field_csv(const spinor::SpinorGrid& grid, const std::vector<Vec3>& field);

/// P2 (ASCII) PGM: white background, excited atoms as black pixels,
/// pixel grid = window discretized at `scale` pixels per length unit.
/// Atom positions map to the nearest pixel cell; collisions are
/// idempotent. Row 0 is the top of the window (+y up).
std::string render_pgm(const detector::Snapshot& snapshot, const detector::Window& window,
                       double scale);

} // namespace waveatom::io
