#ifndef PECC_IO_HPP
#define PECC_IO_HPP

#include <iosfwd>
#include <string>

#include "pecc/instance.hpp"

namespace pecc {

// Registry CSV: optional header, then lines `n,radius` with radius >= 1 and
// unique n. Throws std::runtime_error on unreadable or malformed input.
BestKnownRegistry load_registry(const std::string& path);
BestKnownRegistry parse_registry(std::istream& in, const std::string& origin);

// Solution text format: first line `n R`, then n lines `x y`, all reals with
// 17 significant digits so values round-trip exactly.
std::string format_solution(const Solution& solution);
void write_solution(const std::string& path, const Solution& solution);

// Parses the text format and recomputes the energy field. Throws
// std::runtime_error on malformed input.
Solution read_solution_text(const std::string& text, const std::string& origin);
Solution read_solution(const std::string& path);

}  // namespace pecc

#endif
