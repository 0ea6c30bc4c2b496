#include "dqc1/profile_io.hpp"

#include <cmath>

#include "dqc1/reduction.hpp"
#include "io_util.hpp"

namespace dqc1 {
namespace {

constexpr const char* profile_kind = "profile file";
constexpr const char* counts_kind = "counts file";

}  // namespace

void save_profile(const IntensityProfile& profile,
                  const std::filesystem::path& path) {
  const PanelDims dims = profile.dims();
  std::string out;
  out.reserve(static_cast<std::size_t>(profile.pixel_count()) * 20 + 64);
  out += "IPROF1 " + std::to_string(dims.width) + " " +
         std::to_string(dims.height) + "\n";
  for (int j = 0; j < dims.height; ++j) {
    for (int i = 0; i < dims.width; ++i) {
      if (i) out += ' ';
      io::append_double(out, profile.weights()(j, i));
    }
    out += '\n';
  }
  io::write_text_file(path, out);
}

IntensityProfile load_profile(const std::filesystem::path& path,
                              ProfileLoadStats* stats) {
  const std::string text = io::read_text_file(path);
  const io::TextBody body = io::split_body(text, profile_kind);
  const auto toks = io::tokenize(body.header);
  if (toks.size() != 3 || toks[0] != "IPROF1")
    throw IoError("malformed profile file: bad header");
  const int width = static_cast<int>(io::parse_int(toks[1], profile_kind));
  const int height = static_cast<int>(io::parse_int(toks[2], profile_kind));
  if (width < 1 || height < 1)
    throw IoError("malformed profile file: non-positive dimensions");

  GridXd g = io::parse_grid(body.payload, height, width, profile_kind,
                            [](std::string_view tok) {
                              return io::parse_double(tok, profile_kind);
                            });
  if ((g < 0.0).any())
    throw ValidationError("profile file contains a negative weight");
  const double input_sum = compensated_sum(g);
  if (stats) {
    stats->input_sum = input_sum;
    stats->renormalized = std::abs(input_sum - 1.0) > 1e-6;
  }
  return IntensityProfile::from_weights(std::move(g));
}

void save_counts(const CountsGrid& grid, const std::filesystem::path& path) {
  validate_counts(grid);
  std::string out;
  out += "CGRID1 " + std::to_string(grid.cells_x) + " " +
         std::to_string(grid.cells_y) + " " + std::to_string(grid.cell_size) +
         "\n";
  for (int cy = 0; cy < grid.cells_y; ++cy) {
    for (int cx = 0; cx < grid.cells_x; ++cx) {
      if (cx) out += ' ';
      io::append_double(out, grid.counts(cy, cx));
    }
    out += '\n';
  }
  io::write_text_file(path, out);
}

CountsGrid load_counts(const std::filesystem::path& path) {
  const std::string text = io::read_text_file(path);
  const io::TextBody body = io::split_body(text, counts_kind);
  const auto toks = io::tokenize(body.header);
  if (toks.size() != 4 || toks[0] != "CGRID1")
    throw IoError("malformed counts file: bad header");
  CountsGrid grid;
  grid.cells_x = static_cast<int>(io::parse_int(toks[1], counts_kind));
  grid.cells_y = static_cast<int>(io::parse_int(toks[2], counts_kind));
  grid.cell_size = static_cast<int>(io::parse_int(toks[3], counts_kind));
  if (grid.cells_x < 1 || grid.cells_y < 1 || grid.cell_size < 1)
    throw IoError("malformed counts file: non-positive header fields");
  grid.counts = io::parse_grid(body.payload, grid.cells_y, grid.cells_x,
                               counts_kind, [](std::string_view tok) {
                                 return io::parse_double(tok, counts_kind);
                               });
  validate_counts(grid);
  return grid;
}

}  // namespace dqc1
