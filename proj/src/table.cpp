#include "loopsmith/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace loopsmith {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotSquare:
      return "not_square";
    case ViolationKind::OutOfRange:
      return "out_of_range";
    case ViolationKind::RowRepeat:
      return "row_repeat";
    case ViolationKind::ColumnRepeat:
      return "column_repeat";
    case ViolationKind::NoIdentity:
      return "no_identity";
  }
  return "unknown";
}

bool ValidationReport::has_parse_level_violation() const {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::NotSquare || v.kind == ViolationKind::OutOfRange;
  });
}

namespace {

std::string describe(const ValidationReport& report) {
  std::ostringstream out;
  out << "table is not a loop";
  if (!report.violations.empty()) out << ": " << report.violations.front().message;
  if (report.violations.size() > 1)
    out << " (and " << report.violations.size() - 1 << " more)";
  return out.str();
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : LoopError(ErrorKind::InvalidLoop, describe(report)), report_(std::move(report)) {}

ValidationError::ValidationError(ValidationReport report, const std::string& message)
    : LoopError(ErrorKind::InvalidLoop, message), report_(std::move(report)) {}

ValidationReport validate(const RawTable& raw) {
  ValidationReport report;
  const int n = static_cast<int>(raw.size());

  if (n == 0) {
    report.violations.push_back({ViolationKind::NotSquare, {}, "empty table"});
    return report;
  }
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(raw[r].size()) != n) {
      std::ostringstream msg;
      msg << "row " << r + 1 << " has " << raw[r].size() << " entries, expected " << n;
      report.violations.push_back({ViolationKind::NotSquare, {{r + 1, 0}}, msg.str()});
    }
  }
  if (!report.violations.empty()) return report;

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = raw[r][c];
      if (v < 1 || v > n) {
        std::ostringstream msg;
        msg << "entry " << v << " at (" << r + 1 << "," << c + 1 << ") is outside 1.." << n;
        report.violations.push_back(
            {ViolationKind::OutOfRange, {{r + 1, c + 1}}, msg.str()});
      }
    }
  }
  if (!report.violations.empty()) return report;

  report.is_quasigroup = true;
  for (int r = 0; r < n; ++r) {
    std::vector<int> seen(n + 1, 0);
    for (int c = 0; c < n; ++c) {
      const int v = raw[r][c];
      if (seen[v] != 0) {
        report.is_quasigroup = false;
        std::ostringstream msg;
        msg << "row " << r + 1 << " repeats " << v << " in columns " << seen[v] << " and "
            << c + 1;
        report.violations.push_back(
            {ViolationKind::RowRepeat, {{r + 1, seen[v]}, {r + 1, c + 1}}, msg.str()});
        break;
      }
      seen[v] = c + 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<int> seen(n + 1, 0);
    for (int r = 0; r < n; ++r) {
      const int v = raw[r][c];
      if (seen[v] != 0) {
        report.is_quasigroup = false;
        std::ostringstream msg;
        msg << "column " << c + 1 << " repeats " << v << " in rows " << seen[v] << " and "
            << r + 1;
        report.violations.push_back(
            {ViolationKind::ColumnRepeat, {{seen[v], c + 1}, {r + 1, c + 1}}, msg.str()});
        break;
      }
      seen[v] = r + 1;
    }
  }

  for (int e = 1; e <= n && !report.identity_index; ++e) {
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x)
      ok = raw[e - 1][x - 1] == x && raw[x - 1][e - 1] == x;
    if (ok) report.identity_index = e;
  }
  report.has_identity = report.identity_index.has_value();
  if (!report.has_identity)
    report.violations.push_back({ViolationKind::NoIdentity, {}, "no two-sided identity"});
  return report;
}

LoopTable LoopTable::from_raw(const RawTable& raw, std::string name, bool normalize) {
  ValidationReport report = validate(raw);
  if (!report.clean()) throw ValidationError(std::move(report));

  const int n = static_cast<int>(raw.size());
  const Element e = *report.identity_index;
  if (e != 1 && !normalize) {
    std::ostringstream msg;
    msg << "identity is element " << e << ", not 1 (use normalization to relabel)";
    throw LoopError(ErrorKind::InvalidLoop, msg.str());
  }

  // Relabeling swaps e and 1; it is the identity map when e == 1.
  auto relabel = [e](int v) { return v == e ? 1 : (v == 1 ? e : v); };

  auto data = std::make_shared<Data>();
  data->n = n;
  data->name = std::move(name);
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  data->mul.assign(cells, 0);
  data->ldiv.assign(cells, 0);
  data->rdiv.assign(cells, 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const int z = relabel(raw[relabel(x) - 1][relabel(y) - 1]);
      const auto at = [n](int a, int b) {
        return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(b - 1);
      };
      data->mul[at(x, y)] = z;
      data->ldiv[at(x, z)] = y;
      data->rdiv[at(z, y)] = x;
    }
  }
  return LoopTable(std::move(data));
}

LoopTable LoopTable::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return LoopTable(std::move(data));
}

void LoopTable::check_element(Element x) const {
  if (x < 1 || x > data_->n) {
    std::ostringstream msg;
    msg << "element " << x << " is outside 1.." << data_->n;
    throw argument_error(msg.str());
  }
}

Element LoopTable::mul(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return mul_unchecked(x, y);
}

Element LoopTable::ldiv(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return ldiv_unchecked(x, y);
}

Element LoopTable::rdiv(Element y, Element x) const {
  check_element(y);
  check_element(x);
  return rdiv_unchecked(y, x);
}

RawTable LoopTable::raw() const {
  const int n = order();
  RawTable out(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) out[x - 1][y - 1] = mul_unchecked(x, y);
  return out;
}

bool LoopTable::operator==(const LoopTable& other) const {
  return data_->n == other.data_->n && data_->mul == other.data_->mul;
}

std::vector<Element> LoopTable::elements() const {
  std::vector<Element> out(order());
  for (int i = 0; i < order(); ++i) out[i] = i + 1;
  return out;
}

Element left_inverse(const LoopTable& loop, Element x) { return loop.rdiv(1, x); }

Element right_inverse(const LoopTable& loop, Element x) { return loop.ldiv(x, 1); }

ElementOrder element_order(const LoopTable& loop, Element x) {
  loop.check_element(x);
  const int n = loop.order();
  auto first_return = [&](bool left) {
    Element power = x;
    for (int k = 1; k <= n; ++k) {
      if (power == 1) return k;
      power = left ? loop.mul_unchecked(x, power) : loop.mul_unchecked(power, x);
    }
    return 0;
  };
  const int left = first_return(true);
  const int right = first_return(false);
  ElementOrder out;
  out.order = left;
  out.ambiguous = left == 0 || left != right;
  return out;
}

bool is_commutative(const LoopTable& loop) {
  const int n = loop.order();
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      if (loop.mul_unchecked(x, y) != loop.mul_unchecked(y, x)) return false;
  return true;
}

namespace {

bool associative_on(const LoopTable& loop, std::span<const Element> set) {
  for (Element x : set)
    for (Element y : set) {
      const Element xy = loop.mul_unchecked(x, y);
      for (Element z : set)
        if (loop.mul_unchecked(xy, z) != loop.mul_unchecked(x, loop.mul_unchecked(y, z)))
          return false;
    }
  return true;
}

}  // namespace

bool is_associative(const LoopTable& loop) {
  const auto all = loop.elements();
  return associative_on(loop, all);
}

bool is_flexible(const LoopTable& loop) {
  const int n = loop.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (loop.mul_unchecked(loop.mul_unchecked(x, y), x) !=
          loop.mul_unchecked(x, loop.mul_unchecked(y, x)))
        return false;
  return true;
}

std::vector<Element> closure(const LoopTable& loop, std::span<const Element> seed) {
  const int n = loop.order();
  std::vector<char> in(n + 1, 0);
  std::vector<Element> members;
  auto add = [&](Element z) {
    if (!in[z]) {
      in[z] = 1;
      members.push_back(z);
    }
  };
  add(1);
  for (Element s : seed) {
    loop.check_element(s);
    add(s);
  }
  // Every new member is combined with every member seen so far, in both
  // orders, under all three operations.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Element a = members[i];
      const Element b = members[j];
      add(loop.mul_unchecked(a, b));
      add(loop.mul_unchecked(b, a));
      add(loop.ldiv_unchecked(a, b));
      add(loop.ldiv_unchecked(b, a));
      add(loop.rdiv_unchecked(a, b));
      add(loop.rdiv_unchecked(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_diassociative(const LoopTable& loop) {
  const int n = loop.order();
  std::set<std::vector<Element>> checked;
  for (int x = 1; x <= n; ++x) {
    for (int y = x; y <= n; ++y) {
      const std::array<Element, 2> seed{x, y};
      auto sub = closure(loop, seed);
      if (checked.contains(sub)) continue;
      if (!associative_on(loop, sub)) return false;
      checked.insert(std::move(sub));
    }
  }
  return true;
}

bool has_two_sided_inverses(const LoopTable& loop) {
  for (int x = 1; x <= loop.order(); ++x)
    if (loop.rdiv_unchecked(1, x) != loop.ldiv_unchecked(x, 1)) return false;
  return true;
}

Element commutator(const LoopTable& loop, Element x, Element y) {
  loop.check_element(x);
  loop.check_element(y);
  const Element xi = loop.ldiv_unchecked(x, 1);
  const Element yi = loop.ldiv_unchecked(y, 1);
  return loop.mul_unchecked(loop.mul_unchecked(loop.mul_unchecked(xi, yi), x), y);
}

Element associator(const LoopTable& loop, Element x, Element y, Element z) {
  loop.check_element(x);
  loop.check_element(y);
  loop.check_element(z);
  const Element right = loop.mul_unchecked(x, loop.mul_unchecked(y, z));
  const Element left = loop.mul_unchecked(loop.mul_unchecked(x, y), z);
  return loop.ldiv_unchecked(right, left);
}

MoufangReport moufang_report(const LoopTable& loop) {
  const int n = loop.order();
  MoufangReport report;
  report.identities = {true, true, true};
  auto m = [&](Element a, Element b) { return loop.mul_unchecked(a, b); };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) {
        if (report.identities[0] && m(m(m(x, y), x), z) != m(x, m(y, m(x, z))))
          report.identities[0] = false;
        if (report.identities[1] && m(m(m(x, y), z), y) != m(x, m(y, m(z, y))))
          report.identities[1] = false;
        if (report.identities[2] && m(m(x, y), m(z, x)) != m(m(x, m(y, z)), x))
          report.identities[2] = false;
      }
  return report;
}

}  // namespace loopsmith
