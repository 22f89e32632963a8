#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ggl/arith.hpp"

namespace ggl {

// Binary cache for PrimeTable.
//
// Layout (little-endian):
//   bytes 0..3   magic "GGL1"
//   bytes 4..11  u64 limit
//   bytes 12..19 u64 count
//   then `count` prime gaps as unsigned LEB128 varints (first gap is the
//   first prime itself), then `count` tag bytes: 0x00 for epsilon(p) = +1,
//   0x01 for epsilon(p) = -1.
inline constexpr std::array<char, 4> kPrimeCacheMagic = {'G', 'G', 'L', '1'};

namespace detail {

inline void write_u64_le(std::ostream& os, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(buf, 8);
}

inline std::uint64_t read_u64_le(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  if (!is) throw std::runtime_error("prime cache: truncated header");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

inline void write_varint(std::ostream& os, std::uint64_t v) {
  while (v >= 0x80) {
    os.put(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  os.put(static_cast<char>(v));
}

inline std::uint64_t read_varint(std::istream& is) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    int c = is.get();
    if (c == std::istream::traits_type::eof())
      throw std::runtime_error("prime cache: truncated varint");
    v |= static_cast<std::uint64_t>(c & 0x7F) << shift;
    if (!(c & 0x80)) break;
    shift += 7;
    if (shift > 63) throw std::runtime_error("prime cache: varint overflow");
  }
  return v;
}

}  // namespace detail

inline void save_prime_table(const PrimeTable& table, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("prime cache: cannot open for write: " + path.string());
  os.write(kPrimeCacheMagic.data(), 4);
  detail::write_u64_le(os, table.limit);
  detail::write_u64_le(os, table.primes.size());
  std::uint64_t prev = 0;
  for (std::uint64_t p : table.primes) {
    detail::write_varint(os, p - prev);
    prev = p;
  }
  for (std::int8_t tag : table.class_tag)
    os.put(tag > 0 ? '\x00' : '\x01');
  if (!os) throw std::runtime_error("prime cache: write failed: " + path.string());
}

inline PrimeTable load_prime_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("prime cache: cannot open: " + path.string());
  std::array<char, 4> magic{};
  is.read(magic.data(), 4);
  if (!is || magic != kPrimeCacheMagic)
    throw std::runtime_error("prime cache: bad magic in " + path.string());
  PrimeTable table;
  table.limit = detail::read_u64_le(is);
  const std::uint64_t count = detail::read_u64_le(is);
  table.primes.reserve(count);
  table.class_tag.reserve(count);
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    prev += detail::read_varint(is);
    table.primes.push_back(prev);
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    int c = is.get();
    if (c == std::istream::traits_type::eof())
      throw std::runtime_error("prime cache: truncated tag stream");
    table.class_tag.push_back(c == 0 ? std::int8_t{1} : std::int8_t{-1});
  }
  return table;
}

}  // namespace ggl
