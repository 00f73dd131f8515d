#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chemenum {

// Vertex color alphabet with valences. The position of a color in the table
// is its interned id and defines the total order used by every
// lexicographic comparison in this project (id 0 is the smallest color).
class ColorTable {
public:
  ColorTable() = default;

  // Appends a color and returns its id. Symbols must be unique and must not
  // contain digit characters; the text encoding of colored sequences relies
  // on that to stay unambiguous.
  int add(const std::string& symbol, int valence) {
    if (symbol.empty())
      throw std::invalid_argument("color symbol must not be empty");
    for (char c : symbol)
      if (c >= '0' && c <= '9')
        throw std::invalid_argument("color symbol must not contain digits: " + symbol);
    if (valence < 1)
      throw std::invalid_argument("valence must be >= 1 for color " + symbol);
    if (find(symbol) >= 0)
      throw std::invalid_argument("duplicate color symbol: " + symbol);
    symbols_.push_back(symbol);
    valences_.push_back(valence);
    return static_cast<int>(symbols_.size()) - 1;
  }

  int size() const { return static_cast<int>(symbols_.size()); }

  const std::string& symbol(int id) const { return symbols_.at(id); }
  int valence(int id) const { return valences_.at(id); }

  // Returns the id of `symbol`, or -1 if unknown.
  int find(const std::string& symbol) const {
    for (int i = 0; i < size(); ++i)
      if (symbols_[i] == symbol) return i;
    return -1;
  }

  int id_or_throw(const std::string& symbol) const {
    int id = find(symbol);
    if (id < 0) throw std::invalid_argument("unknown color symbol: " + symbol);
    return id;
  }

  bool operator==(const ColorTable& o) const {
    return symbols_ == o.symbols_ && valences_ == o.valences_;
  }

private:
  std::vector<std::string> symbols_;
  std::vector<int> valences_;
};

}  // namespace chemenum
