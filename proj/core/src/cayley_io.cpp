#include "cmkit/cayley_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmkit {

FiniteGroup read_cayley_table(std::istream& in, std::string name) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw std::runtime_error("cayley: empty input");
  int n = 0;
  try {
    n = std::stoi(line);
  } catch (...) {
    throw std::runtime_error("cayley: first line must be the order");
  }
  if (n < 1) throw std::runtime_error("cayley: order must be positive");

  if (!next_line()) throw std::runtime_error("cayley: missing table rows");
  std::vector<std::string> labels;
  std::size_t first = line.find_first_not_of(" \t\r");
  bool has_labels = !std::isdigit(static_cast<unsigned char>(line[first]));
  if (has_labels) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) labels.push_back(tok);
    if (static_cast<int>(labels.size()) != n)
      throw std::runtime_error("cayley: label count mismatch");
    if (!next_line()) throw std::runtime_error("cayley: missing table rows");
  }

  std::vector<int> mul;
  mul.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    if (row > 0 && !next_line()) throw std::runtime_error("cayley: missing table rows");
    std::istringstream ss(line);
    int v, count = 0;
    while (ss >> v) {
      mul.push_back(v);
      ++count;
    }
    if (count != n) throw std::runtime_error("cayley: row length mismatch");
  }
  return FiniteGroup::from_table(std::move(name), n, std::move(mul), std::move(labels));
}

FiniteGroup read_cayley_table_text(const std::string& text, std::string name) {
  std::istringstream in(text);
  return read_cayley_table(in, std::move(name));
}

FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cayley: cannot open " + path);
  return read_cayley_table(in, "cayley:" + path);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& G) {
  int n = G.order();
  out << n << "\n";
  bool emit_labels = true;
  for (const auto& l : G.labels()) {
    if (l.empty() || std::isdigit(static_cast<unsigned char>(l[0])) ||
        l.find_first_of(" \t") != std::string::npos) {
      emit_labels = false;
      break;
    }
  }
  if (emit_labels) {
    for (int i = 0; i < n; ++i) out << (i ? " " : "") << G.label(i);
    out << "\n";
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << G.mul(a, b);
    out << "\n";
  }
}

std::string cayley_table_text(const FiniteGroup& G) {
  std::ostringstream out;
  write_cayley_table(out, G);
  return out.str();
}

}  // namespace cmkit
