#include "tsw/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace tsw {

static_assert(std::endian::native == std::endian::little,
              "TSWF I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'T', 'S', 'W', 'F'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T take(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw std::runtime_error("TSWF: truncated file");
  return value;
}

}  // namespace

void write_field(const std::filesystem::path& path, const Field& field) {
  std::string bytes;
  bytes.reserve(17 + 16 * static_cast<std::size_t>(field.samples.size()));
  bytes.append(kMagic, 4);
  put<std::uint32_t>(bytes, kVersion);
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(field.grid.dimension));
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(field.grid.points_per_axis));
  put<double>(bytes, field.grid.box_length);
  put<std::uint8_t>(bytes, static_cast<std::uint8_t>(field.representation));
  for (std::int64_t i = 0; i < field.samples.size(); ++i) {
    put<double>(bytes, field.samples[i].real());
    put<double>(bytes, field.samples[i].imag());
  }
  write_file_atomically(path, bytes);
}

Field read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("TSWF: cannot open " + path.string());

  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("TSWF: bad magic in " + path.string());
  const auto version = take<std::uint32_t>(in);
  if (version != kVersion)
    throw std::runtime_error("TSWF: unsupported version " + std::to_string(version));

  const auto n = take<std::uint32_t>(in);
  const auto N = take<std::uint32_t>(in);
  const auto L = take<double>(in);
  const auto flag = take<std::uint8_t>(in);
  if (flag > 1) throw std::runtime_error("TSWF: bad representation flag");

  GridSpec grid = make_grid(static_cast<int>(n), static_cast<int>(N), L);
  Field field = make_field(grid, static_cast<Representation>(flag));
  for (std::int64_t i = 0; i < field.samples.size(); ++i) {
    const double re = take<double>(in);
    const double im = take<double>(in);
    field.samples[i] = Complex(re, im);
  }
  return field;
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::string& bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tsw
