#pragma once

// Lattice files and the text encodings used on the command line.
// Lattice file: {"name": string, "gram": [[int, ...], ...]}; entries may also
// be decimal strings for values beyond 64 bits.

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "lorentz/lattice.hpp"

namespace lorentz::io {

/// Malformed input text (as opposed to a mathematically invalid lattice).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Lattice parse_lattice(std::string_view text, const std::string& fallback_name = {});
Lattice load_lattice(const std::filesystem::path& path);
std::string dump_lattice(const Lattice& lattice);

/// "1,-2,3"
IntVec parse_int_list(std::string_view text);
/// "1,0,0;0,1,0": one vector per ';'-separated group.
std::vector<IntVec> parse_vector_list(std::string_view text);
/// Rows separated by ';'.
IntMatrix parse_matrix(std::string_view text);

}  // namespace lorentz::io
