#include "loopsmith/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "loopsmith/inner_maps.hpp"

namespace loopsmith {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper:
      return "paper";
    case Provenance::Trivial:
      return "trivial";
    case Provenance::Derived:
      return "derived";
  }
  return "?";
}

namespace {

// Code loop of order 16 with the non-trivial half-automorphism (5 8).
constexpr std::array<std::array<int, 16>, 16> kQ1 = {{
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16},
    {2, 4, 8, 6, 3, 1, 5, 7, 14, 9, 16, 10, 11, 12, 13, 15},
    {3, 5, 4, 7, 6, 8, 1, 2, 15, 13, 9, 11, 14, 16, 12, 10},
    {4, 6, 7, 1, 8, 2, 3, 5, 12, 14, 15, 9, 16, 10, 11, 13},
    {5, 7, 2, 8, 4, 3, 6, 1, 13, 11, 14, 16, 12, 15, 10, 9},
    {6, 1, 5, 2, 7, 4, 8, 3, 10, 12, 13, 14, 15, 9, 16, 11},
    {7, 8, 1, 3, 2, 5, 4, 6, 11, 16, 12, 15, 10, 13, 9, 14},
    {8, 3, 6, 5, 1, 7, 2, 4, 16, 15, 10, 13, 9, 11, 14, 12},
    {9, 10, 11, 12, 16, 14, 15, 13, 4, 6, 7, 1, 5, 2, 3, 8},
    {10, 12, 16, 14, 15, 9, 13, 11, 2, 4, 5, 6, 3, 1, 8, 7},
    {11, 13, 12, 15, 10, 16, 9, 14, 3, 8, 4, 7, 6, 5, 1, 2},
    {12, 14, 15, 9, 13, 10, 11, 16, 1, 2, 3, 4, 8, 6, 7, 5},
    {13, 15, 10, 16, 9, 11, 14, 12, 8, 7, 2, 5, 4, 3, 6, 1},
    {14, 9, 13, 10, 11, 12, 16, 15, 6, 1, 8, 2, 7, 4, 5, 3},
    {15, 16, 9, 11, 14, 13, 12, 10, 7, 5, 1, 3, 2, 8, 4, 6},
    {16, 11, 14, 13, 12, 15, 10, 9, 5, 3, 6, 8, 1, 7, 2, 4},
}};

// Automorphic, non-Moufang loop of order 8 with half-automorphism
// (3,5)(4,6)(7,8).
constexpr std::array<std::array<int, 8>, 8> kQ2 = {{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, 1, 4, 3, 6, 5, 8, 7},
    {3, 4, 1, 2, 7, 8, 6, 5},
    {4, 3, 2, 1, 8, 7, 5, 6},
    {5, 6, 8, 7, 1, 2, 4, 3},
    {6, 5, 7, 8, 2, 1, 3, 4},
    {7, 8, 5, 6, 3, 4, 2, 1},
    {8, 7, 6, 5, 4, 3, 1, 2},
}};

template <std::size_t N>
RawTable to_raw(const std::array<std::array<int, N>, N>& rows) {
  RawTable raw;
  for (const auto& row : rows) raw.emplace_back(row.begin(), row.end());
  return raw;
}

RawTable table_from(int n, auto&& product) {
  RawTable raw(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) raw[x - 1][y - 1] = product(x, y);
  return raw;
}

}  // namespace

LoopTable make_cyclic(int n) {
  if (n < 1) throw argument_error("cyclic group order must be positive");
  return LoopTable::from_raw(
      table_from(n, [n](int k, int m) { return ((k - 1) + (m - 1)) % n + 1; }),
      "Z" + std::to_string(n));
}

LoopTable make_dihedral(int n) {
  if (n < 2 || n % 2 != 0) throw argument_error("dihedral group order must be even and positive");
  const int m = n / 2;
  auto decode = [m](int x) { return std::pair{(x - 1) % m, (x - 1) / m}; };
  return LoopTable::from_raw(table_from(n,
                                        [&](int x, int y) {
                                          const auto [a, e] = decode(x);
                                          const auto [b, f] = decode(y);
                                          const int rot = ((e ? a - b : a + b) % m + m) % m;
                                          return rot + m * (e ^ f) + 1;
                                        }),
                             "D" + std::to_string(n));
}

LoopTable make_symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; x·y applies y first.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto label = [&](const std::array<int, 3>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin()) + 1;
  };
  return LoopTable::from_raw(table_from(6,
                                        [&](int x, int y) {
                                          const auto& p = perms[x - 1];
                                          const auto& q = perms[y - 1];
                                          return label({p[q[0]], p[q[1]], p[q[2]]});
                                        }),
                             "S3");
}

LoopTable make_quaternion8() {
  // Labels 1,2,...,8 = 1,-1,i,-i,j,-j,k,-k.
  // unit_product[a][b] = (sign, unit) of unit a times unit b, units 1,i,j,k.
  constexpr int kUnit[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  return LoopTable::from_raw(table_from(8,
                                        [&](int x, int y) {
                                          const int ux = (x - 1) / 2;
                                          const int uy = (y - 1) / 2;
                                          const int sx = (x - 1) % 2 ? -1 : 1;
                                          const int sy = (y - 1) % 2 ? -1 : 1;
                                          const int sign = sx * sy * kUnit[ux][uy][0];
                                          return 2 * kUnit[ux][uy][1] + (sign < 0 ? 2 : 1);
                                        }),
                             "Q8");
}

LoopTable make_chein(const LoopTable& group) {
  if (!is_associative(group)) throw argument_error("Chein doubling needs a group");
  const int m = group.order();
  auto g_mul = [&](int a, int b) { return group.mul_unchecked(a, b); };
  auto g_inv = [&](int a) { return group.ldiv_unchecked(a, 1); };
  // g·h = gh, g·(hu) = (hg)u, (gu)·h = (gh⁻¹)u, (gu)·(hu) = h⁻¹g
  auto raw = table_from(2 * m, [&](int x, int y) {
    const bool xu = x > m;
    const bool yu = y > m;
    const int g = xu ? x - m : x;
    const int h = yu ? y - m : y;
    if (!xu && !yu) return g_mul(g, h);
    if (!xu && yu) return g_mul(h, g) + m;
    if (xu && !yu) return g_mul(g, g_inv(h)) + m;
    return g_mul(g_inv(h), g);
  });
  std::string name = group.name().empty() ? std::string("M(G,2)") : "M(" + group.name() + ",2)";
  LoopTable out = LoopTable::from_raw(raw, std::move(name));
  if (!is_moufang(out)) throw internal_error("Chein doubling is not Moufang");
  if (!is_commutative(group) && is_associative(out))
    throw internal_error("Chein doubling of a nonabelian group is associative");
  return out;
}

std::variant<bool, long long> evaluate_property(const LoopTable& loop, std::string_view property) {
  if (property == "order") return static_cast<long long>(loop.order());
  if (property == "associative") return is_associative(loop);
  if (property == "commutative") return is_commutative(loop);
  if (property == "diassociative") return is_diassociative(loop);
  if (property == "moufang") return is_moufang(loop);
  if (property == "left_automorphic") return is_left_automorphic(loop);
  if (property == "automorphic") return is_automorphic(loop);
  throw argument_error("unknown property '" + std::string(property) + "'");
}

std::vector<std::string> verify_expectations(const CatalogEntry& entry) {
  std::vector<std::string> failures;
  for (const Expectation& e : entry.expected) {
    const auto actual = evaluate_property(entry.table, e.property);
    if (actual != e.value) {
      std::ostringstream msg;
      msg << entry.key << ": " << e.property << " expected ";
      std::visit([&](auto v) { msg << v; }, e.value);
      msg << " [" << to_string(e.provenance) << "], got ";
      std::visit([&](auto v) { msg << v; }, actual);
      failures.push_back(msg.str());
    }
  }
  return failures;
}

namespace {

std::vector<Expectation> group_expectations(int n) {
  return {
      {"order", static_cast<long long>(n), Provenance::Trivial},
      {"associative", true, Provenance::Trivial},
      {"moufang", true, Provenance::Trivial},
      {"automorphic", true, Provenance::Trivial},
  };
}

CatalogEntry group_entry(std::string key, LoopTable table) {
  const int n = table.order();
  return {std::move(key), std::move(table), group_expectations(n)};
}

CatalogEntry make_entry(std::string_view key) {
  if (key == "Q1") {
    return {"Q1",
            LoopTable::from_raw(to_raw(kQ1), "Q1"),
            {
                {"order", 16LL, Provenance::Paper},
                {"moufang", true, Provenance::Paper},
                {"left_automorphic", true, Provenance::Paper},
                {"commutative", false, Provenance::Paper},
                {"automorphic", false, Provenance::Derived},
                {"associative", false, Provenance::Derived},
            }};
  }
  if (key == "Q2") {
    return {"Q2",
            LoopTable::from_raw(to_raw(kQ2), "Q2"),
            {
                {"order", 8LL, Provenance::Paper},
                {"automorphic", true, Provenance::Paper},
                {"moufang", false, Provenance::Paper},
                {"associative", false, Provenance::Derived},
            }};
  }
  if (key == "S3") return group_entry("S3", make_symmetric3());
  if (key == "Q8") return group_entry("Q8", make_quaternion8());
  if (key.starts_with("Chein_")) {
    const std::string base(key.substr(6));
    const LoopTable g = builtin(base).table;
    const bool abelian = is_commutative(g);
    return {std::string(key),
            make_chein(g).renamed(std::string(key)),
            {
                {"order", 2LL * g.order(), Provenance::Trivial},
                {"moufang", true, Provenance::Derived},
                {"associative", abelian, Provenance::Derived},
            }};
  }
  auto number = [&](std::size_t prefix) {
    int value = 0;
    const auto tail = key.substr(prefix);
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
    if (ec != std::errc{} || ptr != tail.data() + tail.size()) return -1;
    return value;
  };
  if (key.starts_with("Z")) {
    const int n = number(1);
    if (n >= 1 && n <= 16) return group_entry(std::string(key), make_cyclic(n));
  }
  if (key.starts_with("D")) {
    const int n = number(1);
    if (n >= 6 && n <= 16 && n % 2 == 0) return group_entry(std::string(key), make_dihedral(n));
  }
  throw LoopError(ErrorKind::NotFound, "no builtin loop named '" + std::string(key) + "'");
}

}  // namespace

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (int n = 1; n <= 16; ++n) out.push_back("Z" + std::to_string(n));
    for (int n = 6; n <= 16; n += 2) out.push_back("D" + std::to_string(n));
    for (const char* k : {"S3", "Q8", "Chein_Z3", "Chein_S3", "Chein_D8", "Chein_Q8", "Q1", "Q2"})
      out.emplace_back(k);
    return out;
  }();
  return keys;
}

const CatalogEntry& builtin(std::string_view key) {
  static std::recursive_mutex mutex;
  static std::map<std::string, CatalogEntry, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CatalogEntry entry = make_entry(key);
  if (auto failures = verify_expectations(entry); !failures.empty())
    throw internal_error("catalog expectation failed: " + failures.front());
  return cache.emplace(std::string(key), std::move(entry)).first->second;
}

LoopFileError::LoopFileError(int line, int column, const std::string& message)
    : LoopError(ErrorKind::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    message),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    throw LoopFileError(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
  return value;
}

}  // namespace

LoopFile read_loop_text(std::string_view text) {
  LoopFile file;
  int order = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    const bool last = end == text.size();
    pos = end + 1;

    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
      if (last) break;
      continue;
    }

    if (order < 0) {
      if (const auto colon = body.find(':'); colon != std::string_view::npos) {
        const std::string_view key = trim(body.substr(0, colon));
        const std::string_view value = trim(body.substr(colon + 1));
        if (key == "name") {
          file.name = std::string(value);
        } else if (key == "normalize") {
          if (value == "true")
            file.normalize = true;
          else if (value == "false")
            file.normalize = false;
          else
            throw LoopFileError(line_no, static_cast<int>(line.find(value)) + 1,
                                "normalize expects true or false");
        } else {
          throw LoopFileError(line_no, 1, "unknown directive '" + std::string(key) + "'");
        }
        if (last) break;
        continue;
      }
      const auto tokens = split_tokens(line);
      if (tokens.size() != 1)
        throw LoopFileError(line_no, tokens.size() > 1 ? tokens[1].column : 1,
                            "header must be a single integer (the order)");
      order = parse_int(tokens.front(), line_no);
      if (order < 1) throw LoopFileError(line_no, tokens.front().column, "order must be positive");
      if (last) break;
      continue;
    }

    if (static_cast<int>(file.raw.size()) == order)
      throw LoopFileError(line_no, 1, "more than " + std::to_string(order) + " table rows");
    const auto tokens = split_tokens(line);
    if (static_cast<int>(tokens.size()) != order) {
      const int column = static_cast<int>(tokens.size()) > order ? tokens[order].column
                                                                 : static_cast<int>(line.size()) + 1;
      throw LoopFileError(line_no, column,
                          "row has " + std::to_string(tokens.size()) + " entries, expected " +
                              std::to_string(order));
    }
    std::vector<int> row;
    std::vector<int> columns;
    for (const Token& tok : tokens) {
      const int value = parse_int(tok, line_no);
      if (value < 1 || value > order)
        throw LoopFileError(line_no, tok.column,
                            "entry " + std::to_string(value) + " outside 1.." + std::to_string(order));
      row.push_back(value);
      columns.push_back(tok.column);
    }
    file.raw.push_back(std::move(row));
    file.row_lines.push_back(line_no);
    file.cell_columns.push_back(std::move(columns));
    if (last) break;
  }
  if (order < 0) throw LoopFileError(line_no, 1, "missing order line");
  if (static_cast<int>(file.raw.size()) != order)
    throw LoopFileError(line_no, 1,
                        "expected " + std::to_string(order) + " table rows, found " +
                            std::to_string(file.raw.size()));
  return file;
}

CatalogEntry parse_loop_file(std::string_view text, bool force_normalize) {
  LoopFile file = read_loop_text(text);
  const bool normalize = file.normalize || force_normalize;
  ValidationReport report = validate(file.raw);
  if (!report.clean()) {
    std::ostringstream msg;
    const Violation& first = report.violations.front();
    if (!first.cells.empty() && first.cells.back().row >= 1 && first.cells.back().col >= 1) {
      const Cell c = first.cells.back();
      msg << "line " << file.row_lines[c.row - 1] << ", column "
          << file.cell_columns[c.row - 1][c.col - 1] << ": ";
    }
    msg << first.message;
    throw ValidationError(std::move(report), msg.str());
  }
  if (*report.identity_index != 1 && !normalize) {
    const int row = *report.identity_index;
    throw LoopFileError(file.row_lines[row - 1], 1,
                        "identity is element " + std::to_string(row) +
                            ", not 1; add 'normalize: true' to relabel");
  }
  LoopTable table = LoopTable::from_raw(file.raw, file.name, normalize);
  return {file.name, std::move(table), {}};
}

std::string write_loop_file(const LoopTable& table) {
  std::string out;
  if (!table.name().empty()) out += "name: " + table.name() + "\n";
  out += std::to_string(table.order()) + "\n";
  for (int x = 1; x <= table.order(); ++x) {
    for (int y = 1; y <= table.order(); ++y) {
      if (y > 1) out += ' ';
      out += std::to_string(table.mul_unchecked(x, y));
    }
    out += '\n';
  }
  return out;
}

std::string write_loop_file(const CatalogEntry& entry) { return write_loop_file(entry.table); }

std::string export_json(const CatalogEntry& entry) {
  nlohmann::json expected = nlohmann::json::object();
  for (const Expectation& e : entry.expected) {
    nlohmann::json value;
    std::visit([&](auto v) { value = v; }, e.value);
    expected[e.property] = {{"value", value}, {"provenance", to_string(e.provenance)}};
  }
  return nlohmann::json{{"name", entry.table.name()},
                        {"order", entry.table.order()},
                        {"table", entry.table.raw()},
                        {"expected", expected}}
      .dump(2);
}

}  // namespace loopsmith
