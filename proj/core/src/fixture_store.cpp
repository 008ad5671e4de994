#include "cmkit/fixture_store.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cmkit/constructions.hpp"
#include "cmkit/mappings.hpp"

namespace cmkit {

FixtureStore FixtureStore::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixture store: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

FixtureStore FixtureStore::parse(const std::string& text) {
  FixtureStore store;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ss(line);
    FixtureRecord rec;
    std::string parity;
    if (!(ss >> rec.group >> parity >> rec.cycles >> rec.provenance))
      throw std::runtime_error("fixture store: malformed line " + std::to_string(lineno));
    if (parity == "even") rec.parity = Parity::even;
    else if (parity == "odd") rec.parity = Parity::odd;
    else throw std::runtime_error("fixture store: bad parity on line " + std::to_string(lineno));
    store.add(std::move(rec));
  }
  return store;
}

void FixtureStore::add(FixtureRecord rec) {
  // cycle text must parse, and its parity must match the label; the
  // degree is not known here, so parse against a degree bound.
  Perm p = parse_perm(rec.cycles, 65536);
  if (parity_by_cycles(p) != rec.parity)
    throw std::runtime_error("fixture store: parity label does not match cycles for " +
                             rec.group);
  records_.push_back(std::move(rec));
}

void FixtureStore::append_to_file(const std::string& path, const FixtureRecord& rec) const {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("fixture store: cannot append to " + path);
  out << rec.group << " " << to_string(rec.parity) << " " << rec.cycles << " "
      << rec.provenance << "\n";
}

std::vector<FixtureRecord> FixtureStore::for_group(const std::string& group_name) const {
  std::vector<FixtureRecord> out;
  for (const auto& r : records_)
    if (r.group == group_name) out.push_back(r);
  return out;
}

std::optional<FixtureRecord> FixtureStore::find(const std::string& group_name,
                                                Parity parity) const {
  for (const auto& r : records_)
    if (r.group == group_name && r.parity == parity) return r;
  return std::nullopt;
}

std::string FixtureStore::serialize() const {
  std::string out = "# cmkit-fixtures v1\n";
  for (const auto& r : records_)
    out += r.group + " " + to_string(r.parity) + " " + r.cycles + " " + r.provenance + "\n";
  return out;
}

std::vector<std::pair<Perm, Parity>> builtin_fixtures(const FiniteGroup& G) {
  std::vector<std::pair<Perm, Parity>> out;
  const std::string& name = G.name();
  auto push = [&](Perm p) {
    Parity par = parity_by_cycles(p);
    out.emplace_back(std::move(p), par);
  };

  if (G.order() % 2 == 1) {
    push(Perm::identity(G.order()));  // g -> g*g is bijective in odd order
  }
  if (name == "cyclic:9") push(field_fixture(FieldFixtureId::z9).perm);
  if (name == "cyclic:11") push(field_fixture(FieldFixtureId::f11).perm);
  if (name == "elem:3:2") push(field_fixture(FieldFixtureId::f9).perm);

  auto starts = [&](const char* prefix) { return name.rfind(prefix, 0) == 0; };
  if (starts("elem:2:")) {
    int d = std::stoi(name.substr(7));
    if (d >= 2 && d <= 8) push(singer_even_cm(d));
    if (d == 4) push(field_fixture(FieldFixtureId::f16).perm);
  }
  if (starts("2group:")) {
    std::string rest = name.substr(7);
    auto colon = rest.find(':');
    std::string kind = rest.substr(0, colon);
    int n = std::stoi(rest.substr(colon + 1));
    if (kind == "D" || kind == "Q" || kind == "SD")
      push(hall_paige_even_cm(kind == "D"   ? TwoGenKind::D
                              : kind == "Q" ? TwoGenKind::Q
                                            : TwoGenKind::SD,
                              n));
    if (kind == "SD") {
      // even orthomorphism composed with the (odd) inversion
      Perm g = sd_orthomorphism(n);
      push(compose_with_inversion(G, g, Side::right));
    }
    if (kind == "M") push(modular_harmonious(n).perm);
  }
  if (starts("modular16k:")) {
    int k = std::stoi(name.substr(11));
    push(modular_even_cm_16k(k));
  }
  if (starts("small16:")) {
    int id = std::stoi(name.substr(8));
    for (auto [fid, par] : order16_fixture_ids())
      if (fid == id) push(order16_fixture(fid, par).perm);
  }
  return out;
}

}  // namespace cmkit
