/* grid.hpp */

#ifndef DMPF_GRID_HPP
#define DMPF_GRID_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/geometry.hpp"

namespace dmpf {

enum class CellState : std::uint8_t { Free, Occupied, Unknown };

/*
 * OccupancyGrid is a width x height lattice of cells stored row-major.
 * Cell (cx, cy) covers [cx, cx+1) x [cy, cy+1) in grid units; its center
 * sits at origin * ((cx + 0.5) * resolution, (cy + 0.5) * resolution).
 * The same type is used for ground-truth worlds and robot belief maps.
 */
class OccupancyGrid
{
public:
    OccupancyGrid() = default;

    OccupancyGrid(int width, int height, double resolution,
                  CellState fill = CellState::Unknown,
                  const Pose2& origin = Pose2::identity()) :
        mWidth(width), mHeight(height), mResolution(resolution),
        mOrigin(origin),
        mCells(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), fill)
    {
        if (width <= 0 || height <= 0)
            throw ValidationError("dimensions", "zero-area map ("
                + std::to_string(width) + "x" + std::to_string(height) + ")");
        if (!(resolution > 0.0))
            throw ValidationError("resolution", "must be positive");
    }

    /* Same geometry, every cell set to `fill` */
    static OccupancyGrid like(const OccupancyGrid& other, CellState fill)
    {
        return { other.mWidth, other.mHeight, other.mResolution, fill, other.mOrigin };
    }

    int width() const { return mWidth; }
    int height() const { return mHeight; }
    double resolution() const { return mResolution; }
    const Pose2& origin() const { return mOrigin; }
    std::size_t size() const { return mCells.size(); }

    bool in_bounds(const Cell& c) const
    {
        return c.x >= 0 && c.y >= 0 && c.x < mWidth && c.y < mHeight;
    }

    std::size_t index(const Cell& c) const
    {
        return static_cast<std::size_t>(c.y) * mWidth + c.x;
    }

    Cell cell_at(std::size_t idx) const
    {
        return { static_cast<int>(idx % mWidth), static_cast<int>(idx / mWidth) };
    }

    CellState at(const Cell& c) const { return mCells[index(c)]; }
    CellState at(std::size_t idx) const { return mCells[idx]; }
    void set(const Cell& c, CellState s) { mCells[index(c)] = s; }
    void set(std::size_t idx, CellState s) { mCells[idx] = s; }

    /* Out-of-bounds cells read as Unknown */
    CellState get_or_unknown(const Cell& c) const
    {
        return in_bounds(c) ? at(c) : CellState::Unknown;
    }

    bool is_free(const Cell& c) const
    {
        return in_bounds(c) && at(c) == CellState::Free;
    }

    const std::vector<CellState>& cells() const { return mCells; }

    /* World coordinates of a cell center */
    Pose2 cell_center(const Cell& c) const
    {
        return mOrigin * Pose2((c.x + 0.5) * mResolution, (c.y + 0.5) * mResolution, 0.0);
    }

    /* Continuous grid coordinates (in cells) of a world point */
    void world_to_grid(double wx, double wy, double& gx, double& gy) const
    {
        double lx = 0.0;
        double ly = 0.0;
        mOrigin.inverse().transform_point(wx, wy, lx, ly);
        gx = lx / mResolution;
        gy = ly / mResolution;
    }

    Cell world_to_cell(double wx, double wy) const
    {
        double gx = 0.0;
        double gy = 0.0;
        world_to_grid(wx, wy, gx, gy);
        return { static_cast<int>(std::floor(gx)), static_cast<int>(std::floor(gy)) };
    }

    Cell world_to_cell(const Pose2& p) const { return world_to_cell(p.x, p.y); }

    std::size_t count(CellState s) const
    {
        return static_cast<std::size_t>(std::count(mCells.begin(), mCells.end(), s));
    }

    bool same_geometry(const OccupancyGrid& other) const
    {
        return mWidth == other.mWidth && mHeight == other.mHeight
            && mResolution == other.mResolution && mOrigin == other.mOrigin;
    }

    bool operator==(const OccupancyGrid& other) const
    {
        return same_geometry(other) && mCells == other.mCells;
    }

private:
    int mWidth = 0;
    int mHeight = 0;
    double mResolution = 1.0;
    Pose2 mOrigin;
    std::vector<CellState> mCells;
};

/* 8-bit rendering shared by PGM export and the SSIM metric */
inline std::uint8_t cell_intensity(CellState s)
{
    switch (s) {
        case CellState::Free:     return 255;
        case CellState::Occupied: return 0;
        default:                  return 128;
    }
}

namespace detail {

inline OccupancyGrid parse_ascii_world(const std::string& text, double resolution)
{
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::size_t width = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        for (std::size_t col = 0; col < line.size(); ++col) {
            if (line[col] != '#' && line[col] != '.')
                throw ParseError("line " + std::to_string(line_no) + ", column "
                    + std::to_string(col + 1) + ": unexpected character '"
                    + std::string(1, line[col]) + "' (expected '#' or '.')");
        }
        if (width == 0)
            width = line.size();
        else if (line.size() != width)
            throw ParseError("line " + std::to_string(line_no) + ": row has "
                + std::to_string(line.size()) + " cells, expected " + std::to_string(width));
        rows.push_back(line);
    }

    if (rows.empty())
        throw ValidationError("dimensions", "zero-area map");

    OccupancyGrid grid(static_cast<int>(width), static_cast<int>(rows.size()),
                       resolution, CellState::Free);
    for (std::size_t y = 0; y < rows.size(); ++y)
        for (std::size_t x = 0; x < width; ++x)
            if (rows[y][x] == '#')
                grid.set(Cell { static_cast<int>(x), static_cast<int>(y) }, CellState::Occupied);
    return grid;
}

/* Reads one whitespace/comment-delimited header token of a PGM file */
inline std::string pgm_token(const std::string& data, std::size_t& pos)
{
    for (;;) {
        while (pos < data.size() && std::isspace(static_cast<unsigned char>(data[pos])))
            ++pos;
        if (pos < data.size() && data[pos] == '#') {
            while (pos < data.size() && data[pos] != '\n')
                ++pos;
            continue;
        }
        break;
    }
    const std::size_t start = pos;
    while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos])))
        ++pos;
    if (start == pos)
        throw ParseError("byte " + std::to_string(start) + ": truncated PGM header");
    return data.substr(start, pos - start);
}

inline int pgm_int(const std::string& data, std::size_t& pos)
{
    const std::size_t at = pos;
    const std::string tok = pgm_token(data, pos);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("byte " + std::to_string(at) + ": expected integer in PGM header, got '"
            + tok + "'");
    }
}

inline OccupancyGrid parse_pgm_world(const std::string& data, double resolution)
{
    std::size_t pos = 0;
    const std::string magic = pgm_token(data, pos);
    if (magic != "P5")
        throw ParseError("byte 0: unsupported PGM magic '" + magic + "' (expected P5)");
    const int width = pgm_int(data, pos);
    const int height = pgm_int(data, pos);
    const int maxval = pgm_int(data, pos);
    if (width <= 0 || height <= 0)
        throw ValidationError("dimensions", "zero-area map");
    if (maxval <= 0 || maxval > 255)
        throw ParseError("byte " + std::to_string(pos) + ": only 8-bit PGM supported (maxval "
            + std::to_string(maxval) + ")");
    /* exactly one whitespace byte separates the header from the raster */
    ++pos;

    const std::size_t needed = static_cast<std::size_t>(width) * height;
    if (data.size() < pos + needed)
        throw ParseError("byte " + std::to_string(data.size()) + ": raster truncated, expected "
            + std::to_string(needed) + " bytes after offset " + std::to_string(pos));

    OccupancyGrid grid(width, height, resolution, CellState::Free);
    for (std::size_t i = 0; i < needed; ++i)
        if (static_cast<unsigned char>(data[pos + i]) < 128)
            grid.set(i, CellState::Occupied);
    return grid;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    return { std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
}

} /* namespace detail */

/*
 * Loads a ground-truth world. Files starting with "P5" are read as binary
 * PGM (pixel < 128 is occupied); anything else as an ASCII grid where '#'
 * is occupied and '.' is free. Text row r becomes cell row y = r.
 */
inline OccupancyGrid load_world(const std::string& path, double resolution = 0.5)
{
    const std::string data = detail::read_file(path);
    try {
        if (data.size() >= 2 && data[0] == 'P' && data[1] == '5')
            return detail::parse_pgm_world(data, resolution);
        return detail::parse_ascii_world(data, resolution);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline OccupancyGrid parse_world_text(const std::string& text, double resolution = 0.5)
{
    return detail::parse_ascii_world(text, resolution);
}

/* Binary PGM (P5) snapshot: Free=255, Occupied=0, Unknown=128 */
inline void write_pgm(const OccupancyGrid& grid, std::ostream& out)
{
    out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
    for (const CellState s : grid.cells())
        out.put(static_cast<char>(cell_intensity(s)));
}

inline void save_pgm(const OccupancyGrid& grid, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    write_pgm(grid, out);
}

inline std::string to_ascii(const OccupancyGrid& grid)
{
    std::string s;
    s.reserve(grid.size() + grid.height());
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            switch (grid.at(Cell { x, y })) {
                case CellState::Free:     s += '.'; break;
                case CellState::Occupied: s += '#'; break;
                default:                  s += '?'; break;
            }
        }
        s += '\n';
    }
    return s;
}

} /* namespace dmpf */

#endif /* DMPF_GRID_HPP */
