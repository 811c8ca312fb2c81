#include "loopsmith/inner_maps.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace loopsmith {

Perm::Perm(std::vector<Element> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  for (Element v : images_) {
    if (v < 1 || v > n || seen[v]) {
      std::ostringstream msg;
      msg << "not a permutation of 1.." << n << " (image " << v << ")";
      throw argument_error(msg.str());
    }
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<Element> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::string_view cycles, int degree) {
  std::vector<Element> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  std::vector<char> moved(degree + 1, 0);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw argument_error("cycle notation: expected '('");
    ++pos;
    std::vector<Element> cycle;
    for (;;) {
      skip_space();
      if (pos >= cycles.size()) throw argument_error("cycle notation: unterminated cycle");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      if (cycles[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
        throw argument_error("cycle notation: unexpected character");
      int value = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        value = value * 10 + (cycles[pos++] - '0');
      if (value < 1 || value > degree || moved[value])
        throw argument_error("cycle notation: point " + std::to_string(value) +
                             " out of range or repeated");
      moved[value] = 1;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Perm(std::move(images));
}

Perm Perm::after(const Perm& inner) const {
  if (inner.degree() != degree()) throw argument_error("composing permutations of different degree");
  std::vector<Element> images(images_.size());
  for (int z = 1; z <= degree(); ++z) images[z - 1] = (*this)(inner(z));
  Perm out;
  out.images_ = std::move(images);
  return out;
}

Perm Perm::inverse() const {
  std::vector<Element> images(images_.size());
  for (int z = 1; z <= degree(); ++z) images[(*this)(z) - 1] = z;
  Perm out;
  out.images_ = std::move(images);
  return out;
}

bool Perm::is_identity() const {
  for (int z = 1; z <= degree(); ++z)
    if ((*this)(z) != z) return false;
  return true;
}

std::string Perm::cycle_string(std::string_view separator) const {
  std::string out;
  std::vector<char> done(degree() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (done[start] || (*this)(start) == start) continue;
    out += '(';
    Element z = start;
    bool first = true;
    while (!done[z]) {
      if (!first) out += separator;
      out += std::to_string(z);
      done[z] = 1;
      first = false;
      z = (*this)(z);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm left_translation(const LoopTable& loop, Element a) {
  loop.check_element(a);
  std::vector<Element> images(loop.order());
  for (int z = 1; z <= loop.order(); ++z) images[z - 1] = loop.mul_unchecked(a, z);
  return Perm(std::move(images));
}

Perm right_translation(const LoopTable& loop, Element a) {
  loop.check_element(a);
  std::vector<Element> images(loop.order());
  for (int z = 1; z <= loop.order(); ++z) images[z - 1] = loop.mul_unchecked(z, a);
  return Perm(std::move(images));
}

Perm inner_l(const LoopTable& loop, Element x, Element y) {
  loop.check_element(x);
  loop.check_element(y);
  const Element xy = loop.mul_unchecked(x, y);
  std::vector<Element> images(loop.order());
  for (int z = 1; z <= loop.order(); ++z)
    images[z - 1] = loop.ldiv_unchecked(xy, loop.mul_unchecked(x, loop.mul_unchecked(y, z)));
  return Perm(std::move(images));
}

Perm inner_r(const LoopTable& loop, Element x, Element y) {
  loop.check_element(x);
  loop.check_element(y);
  const Element xy = loop.mul_unchecked(x, y);
  std::vector<Element> images(loop.order());
  for (int z = 1; z <= loop.order(); ++z)
    images[z - 1] = loop.rdiv_unchecked(loop.mul_unchecked(loop.mul_unchecked(z, x), y), xy);
  return Perm(std::move(images));
}

Perm inner_t(const LoopTable& loop, Element x) {
  loop.check_element(x);
  std::vector<Element> images(loop.order());
  for (int z = 1; z <= loop.order(); ++z)
    images[z - 1] = loop.ldiv_unchecked(x, loop.mul_unchecked(z, x));
  return Perm(std::move(images));
}

namespace {

// First pair (a,b) with σ(ab) ≠ σ(a)σ(b).
std::optional<std::pair<Element, Element>> first_break(const LoopTable& loop, const Perm& sigma) {
  const int n = loop.order();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (sigma(loop.mul_unchecked(a, b)) != loop.mul_unchecked(sigma(a), sigma(b)))
        return std::pair{a, b};
  return std::nullopt;
}

std::optional<InnerWitness> scan_generators(const LoopTable& loop, bool left_only) {
  const int n = loop.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (auto bad = first_break(loop, inner_l(loop, x, y)))
        return InnerWitness{InnerFamily::L, x, y, bad->first, bad->second};
  if (left_only) return std::nullopt;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (auto bad = first_break(loop, inner_r(loop, x, y)))
        return InnerWitness{InnerFamily::R, x, y, bad->first, bad->second};
  for (int x = 1; x <= n; ++x)
    if (auto bad = first_break(loop, inner_t(loop, x)))
      return InnerWitness{InnerFamily::T, x, 0, bad->first, bad->second};
  return std::nullopt;
}

}  // namespace

bool is_automorphism(const LoopTable& loop, const Perm& sigma) {
  if (sigma.degree() != loop.order()) throw argument_error("permutation degree does not match loop order");
  return !first_break(loop, sigma);
}

const char* to_string(InnerFamily family) {
  switch (family) {
    case InnerFamily::L:
      return "l";
    case InnerFamily::R:
      return "r";
    case InnerFamily::T:
      return "T";
  }
  return "?";
}

std::optional<InnerWitness> automorphic_witness(const LoopTable& loop) {
  return scan_generators(loop, false);
}

std::optional<InnerWitness> left_automorphic_witness(const LoopTable& loop) {
  return scan_generators(loop, true);
}

bool moufang_l_iff_r_check(const LoopTable& loop) {
  if (!is_moufang(loop))
    throw LoopError(ErrorKind::Precondition, "l/r automorphism equivalence needs a Moufang loop");
  const int n = loop.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (is_automorphism(loop, inner_l(loop, x, y)) != is_automorphism(loop, inner_r(loop, x, y)))
        return false;
  return true;
}

std::vector<Perm> left_inner_generators(const LoopTable& loop) {
  std::set<Perm> gens;
  for (int x = 1; x <= loop.order(); ++x)
    for (int y = 1; y <= loop.order(); ++y) gens.insert(inner_l(loop, x, y));
  return {gens.begin(), gens.end()};
}

std::vector<Perm> inner_generators(const LoopTable& loop) {
  std::set<Perm> gens;
  for (int x = 1; x <= loop.order(); ++x) {
    for (int y = 1; y <= loop.order(); ++y) {
      gens.insert(inner_l(loop, x, y));
      gens.insert(inner_r(loop, x, y));
    }
    gens.insert(inner_t(loop, x));
  }
  return {gens.begin(), gens.end()};
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Element v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

PermGroupHandle group_closure(std::span<const Perm> generators, std::size_t cap) {
  if (generators.empty()) throw argument_error("group closure needs at least one generator");
  if (cap < 1) throw argument_error("group closure cap must be at least 1");
  const int degree = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != degree) throw argument_error("generators of different degree");

  PermGroupHandle handle;
  handle.generators.assign(generators.begin(), generators.end());

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  const Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Perm current = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : generators) {
      Perm next = g.after(current);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          handle.capped = true;
          return handle;
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<Perm> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  handle.order = elements.size();
  handle.elements = std::move(elements);
  return handle;
}

}  // namespace loopsmith
