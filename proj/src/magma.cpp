#include "agkit/magma.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace agkit {

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  if (images_.size() > kMaxOrder) {
    throw std::invalid_argument("permutation larger than maximum order");
  }
  std::array<bool, kMaxOrder> seen{};
  for (Element v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) {
    inv[images_[a]] = static_cast<Element>(a);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("composing permutations of different sizes");
  }
  std::vector<Element> images(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    images[a] = p(q(static_cast<Element>(a)));
  }
  return Permutation(std::move(images));
}

Magma::Magma(std::size_t order, std::span<const Element> row_major)
    : order_(order) {
  if (order == 0 || order > kMaxOrder) {
    throw std::invalid_argument("magma order must be in 1.." +
                                std::to_string(kMaxOrder));
  }
  if (row_major.size() != order * order) {
    throw std::invalid_argument("expected " + std::to_string(order * order) +
                                " cells, got " +
                                std::to_string(row_major.size()));
  }
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    if (row_major[i] >= order) {
      throw std::invalid_argument("cell " + std::to_string(i) +
                                  " is out of range");
    }
    cells_[i] = row_major[i];
  }
}

Magma::Magma(std::size_t order, std::initializer_list<int> row_major) {
  std::vector<Element> cells;
  cells.reserve(row_major.size());
  for (int v : row_major) {
    if (v < 0 || v >= static_cast<int>(kMaxOrder)) {
      throw std::invalid_argument("cell value out of range");
    }
    cells.push_back(static_cast<Element>(v));
  }
  *this = Magma(order, std::span<const Element>(cells));
}

Magma Magma::constant(std::size_t order, Element value) {
  std::vector<Element> cells(order * order, value);
  return Magma(order, std::span<const Element>(cells));
}

std::string Magma::linear_string() const {
  std::string out;
  out.reserve(order_ * order_);
  for (Element v : linear()) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::strong_ordering operator<=>(const Magma& x, const Magma& y) {
  if (auto c = x.order_ <=> y.order_; c != 0) return c;
  auto lx = x.linear();
  auto ly = y.linear();
  return std::lexicographical_compare_three_way(lx.begin(), lx.end(),
                                                ly.begin(), ly.end());
}

bool operator==(const Magma& x, const Magma& y) {
  return (x <=> y) == 0;
}

Magma relabel(const Magma& m, const Permutation& p) {
  const std::size_t n = m.order();
  if (p.size() != n) {
    throw std::invalid_argument("permutation size does not match magma order");
  }
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      cells[p(a) * n + p(b)] = p(m(a, b));
    }
  }
  return Magma(n, std::span<const Element>(cells));
}

std::vector<Element> find_left_identities(const Magma& m) {
  std::vector<Element> out;
  for (Element e = 0; e < m.order(); ++e) {
    bool ok = true;
    for (Element a = 0; a < m.order() && ok; ++a) ok = m(e, a) == a;
    if (ok) out.push_back(e);
  }
  return out;
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader:
      return "MalformedHeader";
    case ParseErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ParseErrorKind::OutOfRangeEntry:
      return "OutOfRangeEntry";
  }
  return "?";
}

namespace {

std::string describe(ParseErrorKind kind, std::size_t line, std::size_t row,
                     std::size_t column, const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind) << " at line " << line;
  if (row > 0) os << " (row " << row << ", column " << column << ")";
  os << ": " << detail;
  return os.str();
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      out.push_back({number, line});
    }
    if (text.empty()) break;
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_uint(std::string_view token, unsigned long& value) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t row,
                       std::size_t column, const std::string& detail)
    : std::runtime_error(describe(kind, line, row, column, detail)),
      kind_(kind),
      line_(line),
      row_(row),
      column_(column),
      detail_(detail) {}

Magma parse_magma(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(ParseErrorKind::MalformedHeader, 1, 0, 1,
                     "missing order line");
  }
  const Line& header = lines.front();
  const auto header_tokens = split_tokens(header.text);
  unsigned long n = 0;
  if (header_tokens.size() != 1 || !parse_uint(header_tokens[0], n) ||
      n == 0) {
    throw ParseError(ParseErrorKind::MalformedHeader, header.number, 0,
                     header.text.find_first_not_of(" \t") + 1,
                     "first line must be a single positive integer");
  }
  if (n > kMaxOrder) {
    throw ParseError(ParseErrorKind::MalformedHeader, header.number, 0, 1,
                     "order " + std::to_string(n) + " exceeds maximum " +
                         std::to_string(kMaxOrder));
  }

  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r + 1 >= lines.size()) {
      const std::size_t at = lines.back().number + 1;
      throw ParseError(ParseErrorKind::DimensionMismatch, at, r + 1, 0,
                       "expected " + std::to_string(n) + " rows, found " +
                           std::to_string(r));
    }
    const Line& line = lines[r + 1];
    const auto tokens = split_tokens(line.text);
    for (std::size_t c = 0; c < tokens.size() && c < n; ++c) {
      unsigned long v = 0;
      if (!parse_uint(tokens[c], v) || v >= n) {
        throw ParseError(ParseErrorKind::OutOfRangeEntry, line.number, r + 1,
                         c + 1,
                         "entry '" + std::string(tokens[c]) +
                             "' is not in 0.." + std::to_string(n - 1));
      }
      cells.push_back(static_cast<Element>(v));
    }
    if (tokens.size() != n) {
      throw ParseError(ParseErrorKind::DimensionMismatch, line.number, r + 1,
                       std::min(tokens.size(), n) + 1,
                       "expected " + std::to_string(n) + " entries, found " +
                           std::to_string(tokens.size()));
    }
  }
  if (lines.size() > n + 1) {
    throw ParseError(ParseErrorKind::DimensionMismatch, lines[n + 1].number,
                     n + 1, 1, "unexpected extra row");
  }
  return Magma(n, std::span<const Element>(cells));
}

std::string render_magma(const Magma& m) {
  std::string out = std::to_string(m.order()) + "\n";
  for (Element a = 0; a < m.order(); ++a) {
    for (Element b = 0; b < m.order(); ++b) {
      if (b > 0) out.push_back(' ');
      out += std::to_string(m(a, b));
    }
    out.push_back('\n');
  }
  return out;
}

Magma read_magma_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_magma(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), e.row(), e.column(),
                     path + ": " + e.detail());
  }
}

}  // namespace agkit
