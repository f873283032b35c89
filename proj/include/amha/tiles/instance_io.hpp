#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "amha/tiles/board.hpp"

namespace amha::tiles {

/// One board per line: "width height t0 t1 ...". Blank lines and '#'
/// comments are skipped. Throws std::runtime_error with the line number.
std::vector<TileBoard> read_instances(std::istream& in);
std::vector<TileBoard> read_instances_file(const std::string& path);
TileBoard parse_board(const std::string& line);

void write_instances(std::ostream& out, const std::vector<TileBoard>& boards);

}  // namespace amha::tiles
