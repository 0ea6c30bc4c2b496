#include "dqc1/mask_io.hpp"

#include <cmath>

#include "io_util.hpp"

namespace dqc1 {
namespace {

constexpr const char* file_kind = "mask file";

struct MaskHeader {
  int width = 0;
  int height = 0;
  int levels = 0;  // 0 = decimal payload
};

MaskHeader parse_header(std::string_view line) {
  const auto toks = io::tokenize(line);
  if (toks.size() < 3 || toks.size() > 4 || toks[0] != "PMASK1")
    throw IoError("malformed mask file: bad header");
  MaskHeader h;
  h.width = static_cast<int>(io::parse_int(toks[1], file_kind));
  h.height = static_cast<int>(io::parse_int(toks[2], file_kind));
  if (h.width < 1 || h.height < 1)
    throw IoError("malformed mask file: non-positive dimensions");
  if (toks.size() == 4) {
    if (toks[3].size() < 2 || toks[3][0] != 'L')
      throw IoError("malformed mask file: bad level marker");
    h.levels = static_cast<int>(io::parse_int(toks[3].substr(1), file_kind));
    if (h.levels < 2) throw IoError("malformed mask file: bad level count");
  }
  return h;
}

}  // namespace

void save_mask(const PhaseMask& mask, const std::filesystem::path& path) {
  std::string out;
  out.reserve(static_cast<std::size_t>(mask.pixel_count()) * 20 + 64);
  out += "PMASK1 " + std::to_string(mask.width()) + " " +
         std::to_string(mask.height()) + "\n";
  for (int j = 0; j < mask.height(); ++j) {
    for (int i = 0; i < mask.width(); ++i) {
      if (i) out += ' ';
      io::append_double(out, mask.phases()(j, i));
    }
    out += '\n';
  }
  io::write_text_file(path, out);
}

void save_mask_levels(const PhaseMask& mask, const std::filesystem::path& path,
                      int levels) {
  if (levels < 2) throw ValidationError("level count must be at least 2");
  const double l = static_cast<double>(levels);
  std::string out;
  out.reserve(static_cast<std::size_t>(mask.pixel_count()) * 5 + 64);
  out += "PMASK1 " + std::to_string(mask.width()) + " " +
         std::to_string(mask.height()) + " L" + std::to_string(levels) + "\n";
  for (int j = 0; j < mask.height(); ++j) {
    for (int i = 0; i < mask.width(); ++i) {
      const double phi = mask.phases()(j, i);
      const auto k = std::llround(phi * l / two_pi);
      if (two_pi * static_cast<double>(k) / l != phi)
        throw ValidationError("mask is not quantized to " +
                              std::to_string(levels) + " levels");
      if (i) out += ' ';
      out += std::to_string(k);
    }
    out += '\n';
  }
  io::write_text_file(path, out);
}

PhaseMask load_mask(const std::filesystem::path& path) {
  const std::string text = io::read_text_file(path);
  const io::TextBody body = io::split_body(text, file_kind);
  const MaskHeader h = parse_header(body.header);

  GridXd g;
  if (h.levels == 0) {
    g = io::parse_grid(body.payload, h.height, h.width, file_kind,
                       [](std::string_view tok) {
                         return io::parse_double(tok, file_kind);
                       });
  } else {
    const double l = static_cast<double>(h.levels);
    g = io::parse_grid(body.payload, h.height, h.width, file_kind,
                       [l](std::string_view tok) {
                         const auto k = io::parse_int(tok, file_kind);
                         return two_pi * static_cast<double>(k) / l;
                       });
  }
  return PhaseMask(std::move(g));
}

}  // namespace dqc1
