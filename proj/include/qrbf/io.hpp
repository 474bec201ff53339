#pragma once

// Truth-table file formats.
//
// Text:   first line `n=<int>`, second line 2^n characters from {+,-} in
//         ascending x order.
// Packed: one byte holding n, then 2^n signs packed 8 per byte, LSB first,
//         bit 0 for +1 and bit 1 for -1.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrbf/core.hpp"

namespace qrbf {

BooleanFunction parse_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const BooleanFunction& f);
std::string to_truth_table_text(const BooleanFunction& f);

BooleanFunction unpack_truth_table(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> pack_truth_table(const BooleanFunction& f);

/// Reads either format; packed files are recognised by not starting with "n=".
BooleanFunction load_truth_table(const std::string& path);
void save_truth_table(const std::string& path, const BooleanFunction& f, bool packed = false);

}  // namespace qrbf
