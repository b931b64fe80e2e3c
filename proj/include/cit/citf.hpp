// CITF field dump format (bit-exact):
//   magic "CITF" | version u32=1 | d u8 | rank u8 | N u32 |
//   N^d * ncomp float64, little-endian, row-major, component-major.
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "cit/field.hpp"

namespace cit {

static_assert(std::endian::native == std::endian::little,
              "CITF writer assumes a little-endian host");

namespace detail {

inline void citf_header(std::ostream& os, std::uint8_t d, std::uint8_t rank, std::uint32_t N) {
    os.write("CITF", 4);
    const std::uint32_t version = 1;
    os.write(reinterpret_cast<const char*>(&version), 4);
    os.write(reinterpret_cast<const char*>(&d), 1);
    os.write(reinterpret_cast<const char*>(&rank), 1);
    os.write(reinterpret_cast<const char*>(&N), 4);
}

inline void citf_read_header(std::istream& is, std::uint8_t& d, std::uint8_t& rank,
                             std::uint32_t& N) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "CITF", 4) != 0)
        throw std::runtime_error("CITF: bad magic");
    std::uint32_t version = 0;
    is.read(reinterpret_cast<char*>(&version), 4);
    if (!is || version != 1) throw std::runtime_error("CITF: unsupported version");
    is.read(reinterpret_cast<char*>(&d), 1);
    is.read(reinterpret_cast<char*>(&rank), 1);
    is.read(reinterpret_cast<char*>(&N), 4);
    if (!is) throw std::runtime_error("CITF: truncated header");
}

inline void citf_write_comp(std::ostream& os, const std::vector<double>& v) {
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(double)));
}

inline void citf_read_comp(std::istream& is, std::vector<double>& v) {
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!is) throw std::runtime_error("CITF: truncated payload");
}

}  // namespace detail

inline void dump_citf(const std::string& path, const ScalarField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("CITF: cannot open " + path);
    detail::citf_header(os, static_cast<std::uint8_t>(f.grid.d), 0,
                        static_cast<std::uint32_t>(f.grid.N));
    detail::citf_write_comp(os, f.v);
}

inline void dump_citf(const std::string& path, const VectorField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("CITF: cannot open " + path);
    detail::citf_header(os, static_cast<std::uint8_t>(f.grid.d), 1,
                        static_cast<std::uint32_t>(f.grid.N));
    for (const auto& c : f.comp) detail::citf_write_comp(os, c.v);
}

inline void dump_citf(const std::string& path, const SymTensorField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("CITF: cannot open " + path);
    detail::citf_header(os, static_cast<std::uint8_t>(f.grid.d), 2,
                        static_cast<std::uint32_t>(f.grid.N));
    for (const auto& c : f.comp) detail::citf_write_comp(os, c.v);
}

struct CitfInfo {
    int d;
    int rank;
    int N;
};

inline CitfInfo peek_citf(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("CITF: cannot open " + path);
    std::uint8_t d, rank;
    std::uint32_t N;
    detail::citf_read_header(is, d, rank, N);
    return {static_cast<int>(d), static_cast<int>(rank), static_cast<int>(N)};
}

inline ScalarField load_citf_scalar(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("CITF: cannot open " + path);
    std::uint8_t d, rank;
    std::uint32_t N;
    detail::citf_read_header(is, d, rank, N);
    if (rank != 0) throw std::runtime_error("CITF: rank mismatch (want scalar)");
    ScalarField f(make_grid(d, static_cast<int>(N)));
    detail::citf_read_comp(is, f.v);
    return f;
}

inline VectorField load_citf_vector(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("CITF: cannot open " + path);
    std::uint8_t d, rank;
    std::uint32_t N;
    detail::citf_read_header(is, d, rank, N);
    if (rank != 1) throw std::runtime_error("CITF: rank mismatch (want vector)");
    VectorField f(make_grid(d, static_cast<int>(N)));
    for (auto& c : f.comp) detail::citf_read_comp(is, c.v);
    return f;
}

inline SymTensorField load_citf_tensor(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("CITF: cannot open " + path);
    std::uint8_t d, rank;
    std::uint32_t N;
    detail::citf_read_header(is, d, rank, N);
    if (rank != 2) throw std::runtime_error("CITF: rank mismatch (want tensor)");
    SymTensorField f(make_grid(d, static_cast<int>(N)));
    for (auto& c : f.comp) detail::citf_read_comp(is, c.v);
    return f;
}

}  // namespace cit
