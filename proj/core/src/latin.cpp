#include "cmkit/latin.hpp"

#include <sstream>
#include <stdexcept>

namespace cmkit {

RowLatinSquare::RowLatinSquare(int degree, std::vector<int> cells, LatinProvenance prov)
    : n_(degree), cells_(std::move(cells)), prov_(prov) {
  if (cells_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("RowLatinSquare: cell count mismatch");
  std::vector<bool> seen(n_);
  for (int i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n_; ++j) {
      int v = at(i, j);
      if (v < 0 || v >= n_ || seen[v])
        throw std::invalid_argument("RowLatinSquare: row is not a permutation");
      seen[v] = true;
    }
  }
}

Perm RowLatinSquare::row_perm(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("row_perm: index out of range");
  std::vector<int> img(n_);
  for (int j = 0; j < n_; ++j) img[j] = at(i, j);
  return Perm(std::move(img));
}

bool RowLatinSquare::columns_are_permutations() const {
  std::vector<bool> seen(n_);
  for (int j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n_; ++i) {
      int v = at(i, j);
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

LatinSquare::LatinSquare(int degree, std::vector<int> cells, LatinProvenance prov)
    : RowLatinSquare(degree, std::move(cells), prov) {
  if (!columns_are_permutations())
    throw std::invalid_argument("LatinSquare: column is not a permutation");
}

Perm LatinSquare::col_perm(int j) const {
  if (j < 0 || j >= n_) throw std::invalid_argument("col_perm: index out of range");
  std::vector<int> img(n_);
  for (int i = 0; i < n_; ++i) img[i] = at(i, j);
  return Perm(std::move(img));
}

Perm LatinSquare::symbol_perm(int x) const {
  if (x < 0 || x >= n_) throw std::invalid_argument("symbol_perm: index out of range");
  std::vector<int> img(n_, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) == x) {
        img[i] = j;
        break;
      }
  return Perm(std::move(img));
}

LatinSquare l_h_square(const FiniteGroup& G, const Perm& h) {
  if (h.degree() != G.order()) throw std::invalid_argument("l_h_square: degree mismatch");
  int n = G.order();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(i) * n + j] = G.mul(h(i), j);
  return LatinSquare(n, std::move(cells), LatinProvenance::l_h);
}

LatinSquare cayley_square(const FiniteGroup& G) {
  int n = G.order();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(i) * n + j] = G.mul(i, j);
  return LatinSquare(n, std::move(cells), LatinProvenance::cayley);
}

std::string to_string(const FHWType& t) {
  return std::string("(") + std::to_string(static_cast<int>(t.rows)) + "," +
         std::to_string(static_cast<int>(t.cols)) + "," +
         std::to_string(static_cast<int>(t.symbols)) + ")";
}

FHWType parities(const LatinSquare& L) {
  int n = L.degree();
  Parity pr = Parity::even, pc = Parity::even, ps = Parity::even;
  for (int i = 0; i < n; ++i) pr = pr ^ parity_by_cycles(L.row_perm(i));
  for (int j = 0; j < n; ++j) pc = pc ^ parity_by_cycles(L.col_perm(j));
  for (int x = 0; x < n; ++x) ps = ps ^ parity_by_cycles(L.symbol_perm(x));
  int choose2 = (static_cast<long long>(n) * (n - 1) / 2) % 2;
  if ((static_cast<int>(pr) + static_cast<int>(pc) + static_cast<int>(ps)) % 2 != choose2)
    throw std::logic_error("parities: fundamental relation violated");
  return FHWType{pr, pc, ps};
}

KType kotlar_type(const LatinSquare& L) {
  int n = L.degree();
  int even_rows = 0, even_cols = 0;
  for (int i = 0; i < n; ++i)
    if (parity_by_cycles(L.row_perm(i)) == Parity::even) ++even_rows;
  for (int j = 0; j < n; ++j)
    if (parity_by_cycles(L.col_perm(j)) == Parity::even) ++even_cols;
  return KType{std::min(even_rows, n - even_rows), std::min(even_cols, n - even_cols)};
}

RowLatinSquare mann_product(const RowLatinSquare& L1, const RowLatinSquare& L2) {
  if (L1.degree() != L2.degree())
    throw std::invalid_argument("mann_product: degree mismatch");
  int n = L1.degree();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Perm p = compose(L1.row_perm(i), L2.row_perm(i));
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(i) * n + j] = p(j);
  }
  return RowLatinSquare(n, std::move(cells), LatinProvenance::mann_product);
}

std::optional<LatinSquare> as_latin(const RowLatinSquare& L) {
  if (!L.columns_are_permutations()) return std::nullopt;
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(L.degree()) * L.degree());
  for (int i = 0; i < L.degree(); ++i)
    for (int j = 0; j < L.degree(); ++j) cells.push_back(L.at(i, j));
  return LatinSquare(L.degree(), std::move(cells), L.provenance());
}

bool is_orthogonal(const LatinSquare& L1, const LatinSquare& L2) {
  if (L1.degree() != L2.degree())
    throw std::invalid_argument("is_orthogonal: degree mismatch");
  int n = L1.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  bool superposed = true;
  for (int i = 0; i < n && superposed; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t pair = static_cast<std::size_t>(L1.at(i, j)) * n + L2.at(i, j);
      if (seen[pair]) {
        superposed = false;
        break;
      }
      seen[pair] = true;
    }
  // Mann: orthogonal iff L2 = L1 * Q with Q Latin, i.e. the quotient square
  // with rows P_i^-1 o Q_i is Latin
  int deg = n;
  std::vector<int> cells(static_cast<std::size_t>(deg) * deg);
  for (int i = 0; i < deg; ++i) {
    Perm q = compose(L1.row_perm(i).inverse(), L2.row_perm(i));
    for (int j = 0; j < deg; ++j) cells[static_cast<std::size_t>(i) * deg + j] = q(j);
  }
  RowLatinSquare quotient(deg, std::move(cells), LatinProvenance::mann_product);
  bool mann = quotient.columns_are_permutations();
  if (mann != superposed)
    throw std::logic_error("is_orthogonal: superposition and Mann criterion disagree");
  return superposed;
}

Parity sigma(const FiniteGroup& G) {
  Parity sum = Parity::even;
  for (int g = 0; g < G.order(); ++g)
    sum = sum ^ parity_by_cycles(regular_rep(G, g, Side::left));
  Parity closed = (G.order() % 4 == 2) ? Parity::odd : Parity::even;
  if (sum != closed) throw std::logic_error("sigma: closed form violated");
  return sum;
}

FHWType fhw_expected(int order_mod_4, Parity h_parity) {
  switch (order_mod_4) {
    case 0: return {Parity::even, Parity::even, Parity::even};
    case 1: return {Parity::even, h_parity, h_parity};
    case 2: return {Parity::odd, Parity::odd, Parity::odd};
    case 3: return {Parity::even, h_parity, h_parity ^ Parity::odd};
    default: throw std::invalid_argument("fhw_expected: residue out of range");
  }
}

bool fhw_theorem_check(const FiniteGroup& G, const Perm& h) {
  FHWType actual = parities(l_h_square(G, h));
  FHWType expected = fhw_expected(G.order() % 4, parity_by_cycles(h));
  return actual == expected;
}

LatinSquare read_latin_square(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw std::runtime_error("latin: bad order line");
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  int v;
  for (int i = 0; i < n * n; ++i) {
    if (!(in >> v)) throw std::runtime_error("latin: missing cells");
    cells.push_back(v);
  }
  return LatinSquare(n, std::move(cells), LatinProvenance::external);
}

LatinSquare read_latin_square_text(const std::string& text) {
  std::istringstream in(text);
  return read_latin_square(in);
}

void write_latin_square(std::ostream& out, const LatinSquare& L) {
  out << L.degree() << "\n";
  for (int i = 0; i < L.degree(); ++i) {
    for (int j = 0; j < L.degree(); ++j) out << (j ? " " : "") << L.at(i, j);
    out << "\n";
  }
}

}  // namespace cmkit
