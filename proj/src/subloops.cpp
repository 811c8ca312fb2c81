#include "loopsmith/subloops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace loopsmith {

namespace {

std::vector<char> mask_of(int n, std::span<const Element> set) {
  std::vector<char> mask(n + 1, 0);
  for (Element x : set) mask[x] = 1;
  return mask;
}

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

std::string format_set(std::span<const Element> set) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
  out << '}';
  return out.str();
}

}  // namespace

bool is_closed(const LoopTable& loop, std::span<const Element> set) {
  const auto mask = mask_of(loop.order(), set);
  if (!mask[1]) return false;
  for (Element a : set)
    for (Element b : set)
      if (!mask[loop.mul_unchecked(a, b)] || !mask[loop.ldiv_unchecked(a, b)] ||
          !mask[loop.rdiv_unchecked(a, b)])
        return false;
  return true;
}

Subloop::Subloop(LoopTable parent, std::vector<Element> elements, std::vector<Element> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element x : elements_) parent_.check_element(x);
  if (!is_closed(parent_, elements_))
    throw internal_error("set " + format_set(elements_) + " is not a subloop");
  member_ = mask_of(parent_.order(), elements_);
  is_group_ = associative_on(parent_, elements_);
}

bool Subloop::contains(Element x) const {
  return x >= 1 && x <= parent_.order() && member_[x] != 0;
}

bool Subloop::is_subset_of(const Subloop& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element x) { return other.contains(x); });
}

Element Subloop::local_label(Element x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return 0;
  return static_cast<Element>(it - elements_.begin()) + 1;
}

LoopTable Subloop::as_loop(std::string name) const {
  const int k = order();
  RawTable raw(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      raw[i][j] = local_label(parent_.mul_unchecked(elements_[i], elements_[j]));
  return LoopTable::from_raw(raw, std::move(name));
}

Subloop generate_subloop(const LoopTable& loop, std::span<const Element> seed) {
  std::vector<Element> gens(seed.begin(), seed.end());
  return Subloop(loop, closure(loop, seed), std::move(gens));
}

Subloop whole_loop(const LoopTable& loop) { return Subloop(loop, loop.elements()); }

Subloop commutator_subloop(const LoopTable& loop) {
  std::set<Element> values;
  for (int x = 1; x <= loop.order(); ++x)
    for (int y = 1; y <= loop.order(); ++y) values.insert(commutator(loop, x, y));
  const std::vector<Element> seed(values.begin(), values.end());
  return generate_subloop(loop, seed);
}

Subloop associator_subloop(const LoopTable& loop) {
  std::set<Element> values;
  const int n = loop.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) values.insert(associator(loop, x, y, z));
  const std::vector<Element> seed(values.begin(), values.end());
  return generate_subloop(loop, seed);
}

namespace {

// position 0: (x,a,b), 1: (a,x,b), 2: (a,b,x)
std::vector<Element> nucleus_set(const LoopTable& loop, int position) {
  const int n = loop.order();
  std::vector<Element> out;
  for (int x = 1; x <= n; ++x) {
    bool in = true;
    for (int a = 1; a <= n && in; ++a)
      for (int b = 1; b <= n && in; ++b) {
        Element v = 1;
        switch (position) {
          case 0:
            v = associator(loop, x, a, b);
            break;
          case 1:
            v = associator(loop, a, x, b);
            break;
          default:
            v = associator(loop, a, b, x);
            break;
        }
        in = v == 1;
      }
    if (in) out.push_back(x);
  }
  return out;
}

Subloop checked_subloop(const LoopTable& loop, std::vector<Element> set, const char* what) {
  if (!is_closed(loop, set))
    throw internal_error(std::string(what) + " " + format_set(set) +
                         " is not closed; the table is corrupt");
  return Subloop(loop, std::move(set));
}

std::vector<Element> intersect(std::span<const Element> a, std::span<const Element> b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Subloop nucleus_left(const LoopTable& loop) {
  return checked_subloop(loop, nucleus_set(loop, 0), "left nucleus");
}

Subloop nucleus_middle(const LoopTable& loop) {
  return checked_subloop(loop, nucleus_set(loop, 1), "middle nucleus");
}

Subloop nucleus_right(const LoopTable& loop) {
  return checked_subloop(loop, nucleus_set(loop, 2), "right nucleus");
}

Subloop nucleus(const LoopTable& loop) {
  auto left = nucleus_set(loop, 0);
  auto middle = nucleus_set(loop, 1);
  auto right = nucleus_set(loop, 2);
  return checked_subloop(loop, intersect(intersect(left, middle), right), "nucleus");
}

Commutant commutant(const LoopTable& loop) {
  Commutant out;
  const int n = loop.order();
  for (int x = 1; x <= n; ++x) {
    bool central = true;
    for (int a = 1; a <= n && central; ++a)
      central = loop.mul_unchecked(x, a) == loop.mul_unchecked(a, x);
    if (central) out.elements.push_back(x);
  }
  out.closed = is_closed(loop, out.elements);
  return out;
}

Subloop center(const LoopTable& loop) {
  const auto z = commutant(loop);
  const auto nuc = nucleus(loop);
  return checked_subloop(loop, intersect(z.elements, nuc.elements()), "center");
}

bool is_normal(const LoopTable& loop, const Subloop& sub) {
  const int n = loop.order();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const Element xy = loop.mul_unchecked(x, y);
      for (Element h : sub.elements()) {
        const Element l = loop.ldiv_unchecked(xy, loop.mul_unchecked(x, loop.mul_unchecked(y, h)));
        const Element r = loop.rdiv_unchecked(loop.mul_unchecked(loop.mul_unchecked(h, x), y), xy);
        if (!sub.contains(l) || !sub.contains(r)) return false;
      }
    }
    for (Element h : sub.elements())
      if (!sub.contains(loop.ldiv_unchecked(x, loop.mul_unchecked(h, x)))) return false;
  }
  return true;
}

Quotient quotient(const LoopTable& loop, const Subloop& normal) {
  const int n = loop.order();
  std::vector<Element> label(n + 1, 0);
  std::vector<std::vector<Element>> cosets;
  for (int x = 1; x <= n; ++x) {
    if (label[x]) continue;
    std::vector<Element> coset;
    for (Element h : normal.elements()) coset.push_back(loop.mul_unchecked(x, h));
    std::sort(coset.begin(), coset.end());
    const auto id = static_cast<Element>(cosets.size()) + 1;
    for (Element c : coset) {
      if (label[c]) {
        std::ostringstream msg;
        msg << "cosets " << x << "H and " << cosets[label[c] - 1].front()
            << "H overlap at " << c << "; subloop is not normal";
        throw LoopError(ErrorKind::Precondition, msg.str());
      }
      label[c] = id;
    }
    cosets.push_back(std::move(coset));
  }

  const int k = static_cast<int>(cosets.size());
  RawTable raw(k, std::vector<int>(k, 0));
  std::vector<std::pair<Element, Element>> first_rep(static_cast<std::size_t>(k) * k);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const Element cx = label[x];
      const Element cy = label[y];
      const Element c = label[loop.mul_unchecked(x, y)];
      int& cell = raw[cx - 1][cy - 1];
      auto& rep = first_rep[static_cast<std::size_t>(cx - 1) * k + (cy - 1)];
      if (cell == 0) {
        cell = c;
        rep = {x, y};
      } else if (cell != c) {
        std::ostringstream msg;
        msg << "coset product ill-defined: " << rep.first << "·" << rep.second << " and " << x
            << "·" << y << " land in different cosets; subloop is not normal";
        throw LoopError(ErrorKind::Precondition, msg.str());
      }
    }

  std::string name = loop.name().empty() ? std::string{} : loop.name() + "/H";
  Quotient out{LoopTable::from_raw(raw, std::move(name)), {}, std::move(cosets)};
  out.projection.assign(label.begin() + 1, label.end());

  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (out.project(loop.mul_unchecked(x, y)) !=
          out.table.mul_unchecked(out.project(x), out.project(y)))
        throw internal_error("quotient projection is not a homomorphism");
  return out;
}

int p_part(int n, int p) {
  int part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of(int value, int p) {
  if (value < 1) return false;
  while (value % p == 0) value /= p;
  return value == 1;
}

}  // namespace

SylowResult sylow_subloop(const LoopTable& loop, int p) {
  if (!is_prime(p)) throw argument_error(std::to_string(p) + " is not prime");
  SylowResult result;
  result.target_order = p_part(loop.order(), p);

  std::vector<Element> p_elements;
  for (int x = 1; x <= loop.order(); ++x) {
    const auto ord = element_order(loop, x);
    if (is_power_of(ord.order, p)) p_elements.push_back(x);
  }

  auto consider = [&](std::vector<Element> seed) {
    ++result.candidates_examined;
    Subloop sub = generate_subloop(loop, seed);
    if (!is_power_of(sub.order(), p)) return false;
    if (sub.order() > result.best_order) result.best_order = sub.order();
    if (sub.order() == result.target_order) {
      result.subloop = std::move(sub);
      result.exact = true;
      return true;
    }
    return false;
  };

  if (consider(p_elements)) return result;

  // Bounded fallback over seeds of at most three p-elements.
  const std::size_t m = p_elements.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (consider({p_elements[i]})) return result;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (result.candidates_examined >= kSylowSearchCap) return result;
      if (consider({p_elements[i], p_elements[j]})) return result;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (result.candidates_examined >= kSylowSearchCap) return result;
        if (consider({p_elements[i], p_elements[j], p_elements[k]})) return result;
      }
    }
  }
  return result;
}

HallResult hall_3prime_subgroup(const LoopTable& loop) {
  HallResult result;
  result.target_order = loop.order() / p_part(loop.order(), 3);
  std::vector<Element> seed;
  for (int x = 1; x <= loop.order(); ++x) {
    const auto ord = element_order(loop, x);
    if (ord.order > 0 && ord.order % 3 != 0) seed.push_back(x);
  }
  Subloop sub = generate_subloop(loop, seed);
  result.closure_order = sub.order();
  const Subloop nuc = nucleus(loop);
  result.in_nucleus = sub.is_subset_of(nuc);

  std::ostringstream diag;
  if (sub.order() != result.target_order)
    diag << "closure of 3'-elements has order " << sub.order() << ", expected "
         << result.target_order << ". ";
  if (!result.in_nucleus) diag << "closure is not contained in the nucleus. ";
  if (!sub.is_group()) diag << "closure is not associative. ";
  result.diagnostics = diag.str();
  if (result.diagnostics.empty()) result.subgroup = std::move(sub);
  return result;
}

namespace {

// Elements of different factors commute, and every associator whose
// arguments are drawn from at least two factors is trivial.
bool factors_interact_trivially(const LoopTable& loop, std::span<const Subloop> factors) {
  std::vector<int> owner(loop.order() + 1, -1);
  std::vector<Element> all;
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (Element x : factors[f].elements())
      if (x != 1) {
        owner[x] = static_cast<int>(f);
        all.push_back(x);
      }
  for (Element a : all)
    for (Element b : all)
      if (owner[a] != owner[b] && loop.mul_unchecked(a, b) != loop.mul_unchecked(b, a))
        return false;
  for (Element a : all)
    for (Element b : all)
      for (Element c : all) {
        if (owner[a] == owner[b] && owner[b] == owner[c]) continue;
        if (associator(loop, a, b, c) != 1) return false;
      }
  return true;
}

}  // namespace

bool is_direct_product(const LoopTable& loop, std::span<const Subloop> factors) {
  if (factors.empty()) return loop.order() == 1;
  long long product = 1;
  for (const Subloop& f : factors) product *= f.order();
  if (product != loop.order()) return false;

  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (intersect(factors[i].elements(), factors[j].elements()).size() != 1) return false;

  // Unique factorization: the left-normed products f1·f2·…·fk hit every
  // element exactly once.
  std::vector<Element> products{1};
  for (const Subloop& f : factors) {
    std::vector<Element> next;
    next.reserve(products.size() * f.elements().size());
    for (Element acc : products)
      for (Element x : f.elements()) next.push_back(loop.mul_unchecked(acc, x));
    products = std::move(next);
  }
  std::vector<char> hit(loop.order() + 1, 0);
  for (Element x : products) {
    if (hit[x]) return false;
    hit[x] = 1;
  }

  if (!factors_interact_trivially(loop, factors)) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [&](const Subloop& f) { return is_normal(loop, f); });
}

bool is_direct_product(const LoopTable& loop, const Subloop& a, const Subloop& b) {
  const std::vector<Subloop> factors{a, b};
  return is_direct_product(loop, std::span<const Subloop>(factors));
}

std::optional<int> commutative_nilpotency_class(const LoopTable& loop) {
  const int n = loop.order();
  std::set<Element> values;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) values.insert(commutator(loop, x, y));

  std::set<std::set<Element>> seen;
  for (int k = 1;; ++k) {
    if (values == std::set<Element>{1}) return k;
    if (!seen.insert(values).second) return std::nullopt;
    std::set<Element> next;
    for (Element v : values)
      for (int q = 1; q <= n; ++q) next.insert(commutator(loop, v, q));
    values = std::move(next);
  }
}

}  // namespace loopsmith
