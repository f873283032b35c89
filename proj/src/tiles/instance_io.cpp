#include "amha/tiles/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amha::tiles {

TileBoard parse_board(const std::string& line) {
  std::istringstream is(line);
  int width = 0;
  int height = 0;
  if (!(is >> width >> height)) throw std::runtime_error("expected 'width height' at the start of the board");
  std::vector<std::uint8_t> tiles;
  int v = 0;
  while (is >> v) {
    if (v < 0 || v > 255) throw std::runtime_error("tile value out of range");
    tiles.push_back(static_cast<std::uint8_t>(v));
  }
  if (!is.eof()) throw std::runtime_error("non-numeric token in board");
  try {
    return TileBoard(width, height, std::move(tiles));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

std::vector<TileBoard> read_instances(std::istream& in) {
  std::vector<TileBoard> boards;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      boards.push_back(parse_board(line));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("instance line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return boards;
}

std::vector<TileBoard> read_instances_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  return read_instances(in);
}

void write_instances(std::ostream& out, const std::vector<TileBoard>& boards) {
  for (const auto& b : boards) out << b.to_string() << '\n';
}

}  // namespace amha::tiles
