#pragma once

#include <cstdint>
#include <string>

#include "fplab/table.hpp"

namespace fplab {

// Text tables: one complex value per line in index order, "re" or "re im".
TableFunction read_table_text(const std::string& path, std::int32_t p, int n);
void write_table_text(const std::string& path, const TableFunction& f);

// Binary tables: p^n little-endian double pairs (re, im), no header.
TableFunction read_table_binary(const std::string& path, std::int32_t p, int n);
void write_table_binary(const std::string& path, const TableFunction& f);

// Function specs accepted everywhere a function is an input:
//   "poly:<polynomial>"        the phase table of the polynomial,
//   "indicator:<set spec>"     a 0/1 table (see load_indicator),
//   anything else              a path, binary when it ends in ".bin".
TableFunction load_function(const std::string& spec, std::int32_t p, int n);

// Set specs:
//   "poly:<polynomial>:in:<r1,r2,...>"  points where the value lands in the
//                                       residue list,
//   anything else                       a path to a text file of point
//                                       indices, one per line.
TableFunction load_indicator(const std::string& spec, std::int32_t p, int n);

}  // namespace fplab
