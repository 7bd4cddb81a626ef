#include "waveatom/io.hpp"

#include "waveatom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace waveatom::io {

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    raw_row(header);
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw config_error("CsvWriter: wrong column count");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) buffer_ += ',';
        buffer_ += cells[i];
    }
    buffer_ += '\n';
}

void CsvWriter::number_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (const double v : values) cells.push_back(format_sci(v));
    raw_row(cells);
}

void CsvWriter::write(const std::filesystem::path& path) const { write_file(path, buffer_); }

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw config_error("write failed: " + path.string());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw config_error("bad numeric value '" + s + "' in " + where);
    }
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace

fields::TabulatedProfile load_intensity_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw config_error("empty intensity table: " + path.string());
    if (lines.front() != "z,rel_intensity") {
        throw config_error("intensity table must start with header 'z,rel_intensity': " +
                           path.string());
    }
    fields::TabulatedProfile t;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv_line(lines[i]);
        if (cells.size() != 2) {
            throw config_error("intensity table row " + std::to_string(i) + ": expected 2 columns");
        }
        t.z.push_back(parse_double(cells[0], path.string()));
        t.rel_intensity.push_back(parse_double(cells[1], path.string()));
    }
    fields::validate(t);
    return t;
}

spinor::SpinorGrid load_spinor_grid_csv(const std::filesystem::path& path,
                                        const std::array<double, 3>& spacing, bool periodic) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw config_error("empty spinor grid: " + path.string());
    if (lines.front() != "ix,iy,iz,re_up,im_up,re_down,im_down") {
        throw config_error("spinor grid must start with header "
                           "'ix,iy,iz,re_up,im_up,re_down,im_down': " + path.string());
    }
    struct Row {
        std::size_t ix, iy, iz;
        spinor::Spinor2 value;
    };
    std::vector<Row> rows;
    std::array<std::size_t, 3> shape{0, 0, 0};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv_line(lines[i]);
        if (cells.size() != 7) {
            throw config_error("spinor grid row " + std::to_string(i) + ": expected 7 columns");
        }
        Row r;
        auto parse_index = [&](const std::string& cell) {
            const double v = parse_double(cell, path.string());
            if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) {
                throw config_error("spinor grid: bad index '" + cell + "' in " + path.string());
            }
            return static_cast<std::size_t>(v);
        };
        r.ix = parse_index(cells[0]);
        r.iy = parse_index(cells[1]);
        r.iz = parse_index(cells[2]);
        r.value.up = {parse_double(cells[3], path.string()), parse_double(cells[4], path.string())};
        r.value.down = {parse_double(cells[5], path.string()), parse_double(cells[6], path.string())};
        shape[0] = std::max(shape[0], r.ix + 1);
        shape[1] = std::max(shape[1], r.iy + 1);
        shape[2] = std::max(shape[2], r.iz + 1);
        rows.push_back(r);
    }
    spinor::SpinorGrid grid;
    grid.shape = shape;
    grid.spacing = spacing;
    grid.periodic = periodic;
    grid.samples.resize(grid.size());
    std::vector<char> seen(grid.size(), 0);
    for (const auto& r : rows) {
        const std::size_t idx = grid.index(r.ix, r.iy, r.iz);
        if (seen[idx]) throw config_error("spinor grid: duplicate point in " + path.string());
        seen[idx] = 1;
        grid.samples[idx] = r.value;
    }
    if (rows.size() != grid.size()) {
        throw config_error("spinor grid: " + std::to_string(rows.size()) + " rows do not fill a " +
                           std::to_string(shape[0]) + "x" + std::to_string(shape[1]) + "x" +
                           std::to_string(shape[2]) + " grid");
    }
    spinor::validate(grid);
    return grid;
}

std::string spinor_grid_csv(const spinor::SpinorGrid& grid) {
    CsvWriter csv({"ix", "iy", "iz", "re_up", "im_up", "re_down", "im_down"});
    for (std::size_t iz = 0; iz < grid.shape[2]; ++iz) {
        for (std::size_t iy = 0; iy < grid.shape[1]; ++iy) {
            for (std::size_t ix = 0; ix < grid.shape[0]; ++ix) {
                const auto& s = grid.at(ix, iy, iz);
                csv.raw_row({std::to_string(ix), std::to_string(iy), std::to_string(iz),
                             format_sci(s.up.real()), format_sci(s.up.imag()),
                             format_sci(s.down.real()), format_sci(s.down.imag())});
            }
        }
    }
    return csv.str();
}

std::string current_field_csv(const spinor::SpinorGrid& grid, const std::vector<Vec3>& field) {
    if (field.size() != grid.size()) throw config_error("current_field_csv: size mismatch");
    CsvWriter csv({"ix", "iy", "iz", "jx", "jy", "jz"});
    for (std::size_t iz = 0; iz < grid.shape[2]; ++iz) {
        for (std::size_t iy = 0; iy < grid.shape[1]; ++iy) {
            for (std::size_t ix = 0; ix < grid.shape[0]; ++ix) {
                const auto& j = field[grid.index(ix, iy, iz)];
                csv.raw_row({std::to_string(ix), std::to_string(iy), std::to_string(iz),
                             format_sci(j.x), format_sci(j.y), format_sci(j.z)});
            }
        }
    }
    return csv.str();
}

std::string render_pgm(const detector::Snapshot& snapshot, const detector::Window& window,
                       double scale) {
    if (!(scale > 0.0)) throw config_error("render_pgm: scale must be > 0");
    if (!(window.lz > 0.0 && window.ly > 0.0)) {
        throw config_error("render_pgm: zero-area window");
    }
    const auto width = static_cast<std::size_t>(std::ceil(window.lz * scale));
    const auto height = static_cast<std::size_t>(std::ceil(window.ly * scale));
    std::vector<std::uint8_t> black(width * height, 0);
    for (std::size_t i = 0; i < snapshot.count(); ++i) {
        auto px = static_cast<std::ptrdiff_t>(std::floor((snapshot.z[i] + 0.5 * window.lz) * scale));
        auto py = static_cast<std::ptrdiff_t>(std::floor((0.5 * window.ly - snapshot.y[i]) * scale));
        px = std::clamp<std::ptrdiff_t>(px, 0, static_cast<std::ptrdiff_t>(width) - 1);
        py = std::clamp<std::ptrdiff_t>(py, 0, static_cast<std::ptrdiff_t>(height) - 1);
        black[static_cast<std::size_t>(py) * width + static_cast<std::size_t>(px)] = 1;
    }

    std::string out = "P2\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    // PGM plain format caps lines at 70 characters; 17 four-char cells fit.
    std::size_t on_line = 0;
    for (std::size_t i = 0; i < black.size(); ++i) {
        out += black[i] ? "0" : "255";
        if (++on_line == 17 || i + 1 == black.size()) {
            out += '\n';
            on_line = 0;
        } else {
            out += ' ';
        }
    }
    return out;
}

} // namespace waveatom::io
