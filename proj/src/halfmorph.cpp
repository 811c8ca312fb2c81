#include "loopsmith/halfmorph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "loopsmith/threads.hpp"

namespace loopsmith {

namespace {

std::string describe_failure(Element x, Element y, const PairEvaluation& v) {
  std::ostringstream msg;
  msg << "not a half-isomorphism at (" << x << "," << y << "): tau(xy) = " << v.image_of_product
      << ", tau(x)tau(y) = " << v.hom_value << ", tau(y)tau(x) = " << v.anti_value;
  return msg.str();
}

}  // namespace

HalfMapError::HalfMapError(Element x, Element y, PairEvaluation values)
    : LoopError(ErrorKind::Argument, describe_failure(x, y, values)), x_(x), y_(y), values_(values) {}

PairEvaluation HalfMap::evaluate(Element x, Element y) const {
  domain_.check_element(x);
  domain_.check_element(y);
  PairEvaluation v;
  v.image_of_product = perm_(domain_.mul_unchecked(x, y));
  v.hom_value = codomain_.mul_unchecked(perm_(x), perm_(y));
  v.anti_value = codomain_.mul_unchecked(perm_(y), perm_(x));
  return v;
}

HalfMap make_half_map(const LoopTable& domain, const LoopTable& codomain,
                      std::vector<Element> images) {
  if (domain.order() != codomain.order())
    throw argument_error("domain and codomain orders differ");
  if (static_cast<int>(images.size()) != domain.order())
    throw argument_error("image array has the wrong length");
  HalfMap tau(domain, codomain, Perm(std::move(images)));
  const int n = domain.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const PairEvaluation v = tau.evaluate(x, y);
      if (!v.hom() && !v.anti()) throw HalfMapError(x, y, v);
    }
  if (tau(1) != 1) throw internal_error("half-isomorphism does not fix the identity");
  return tau;
}

HalfMap make_half_map(const LoopTable& loop, const Perm& perm) {
  return make_half_map(loop, loop, std::vector<Element>(perm.images().begin(), perm.images().end()));
}

const char* to_string(HalfKind kind) {
  switch (kind) {
    case HalfKind::Isomorphism:
      return "Isomorphism";
    case HalfKind::AntiIsomorphism:
      return "AntiIsomorphism";
    case HalfKind::Both:
      return "Both";
    case HalfKind::ProperHalf:
      return "ProperHalf";
  }
  return "?";
}

HalfClass classify(const HalfMap& tau) {
  HalfClass out;
  const int n = tau.domain().order();
  const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const PairEvaluation v = tau.evaluate(x, y);
      if (v.hom()) ++out.hom_pairs;
      if (v.anti()) ++out.anti_pairs;
      if (v.hom_only() && !out.witness_hom) out.witness_hom = std::pair{x, y};
      if (v.anti_only() && !out.witness_anti) out.witness_anti = std::pair{x, y};
    }
  const bool all_hom = out.hom_pairs == total;
  const bool all_anti = out.anti_pairs == total;
  if (all_hom && all_anti)
    out.kind = HalfKind::Both;
  else if (all_hom)
    out.kind = HalfKind::Isomorphism;
  else if (all_anti)
    out.kind = HalfKind::AntiIsomorphism;
  else
    out.kind = HalfKind::ProperHalf;
  return out;
}

namespace {

// Depth-first search with forward checking. Once a and b have images, the
// image of ab is confined to {τ(a)τ(b), τ(b)τ(a)}; each step assigns the
// unassigned element with the fewest remaining candidates.
class HalfSearch {
 public:
  explicit HalfSearch(const LoopTable& loop)
      : loop_(loop), n_(loop.order()), image_(n_ + 1, 0), preimage_(n_ + 1, 0) {
    image_[1] = 1;
    preimage_[1] = 1;
    assigned_.push_back(1);
  }

  // Enumerates the subtree where element 2 maps to first_image (all of it
  // when first_image == 0). Stops once results reaches limit (0 = no limit).
  void run(Element first_image, std::size_t limit, std::vector<std::vector<Element>>& results) {
    limit_ = limit;
    results_ = &results;
    if (n_ == 1) {
      results.push_back({1});
      return;
    }
    if (first_image != 0) {
      if (preimage_[first_image] == 0 && assign(2, first_image)) descend();
      unassign(2);
    } else {
      descend();
    }
  }

 private:
  Element mul(Element a, Element b) const { return loop_.mul_unchecked(a, b); }

  // Pairs involving x whose product already has an image must agree.
  bool consistent(Element x) const {
    const Element tx = image_[x];
    for (Element a : assigned_) {
      const Element ta = image_[a];
      const Element p = image_[mul(a, x)];
      if (p != 0 && p != mul(ta, tx) && p != mul(tx, ta)) return false;
      const Element q = image_[mul(x, a)];
      if (q != 0 && q != mul(tx, ta) && q != mul(ta, tx)) return false;
    }
    return true;
  }

  bool assign(Element x, Element v) {
    image_[x] = v;
    preimage_[v] = x;
    assigned_.push_back(x);
    return consistent(x);
  }

  void unassign(Element x) {
    preimage_[image_[x]] = 0;
    image_[x] = 0;
    assigned_.pop_back();
  }

  // Free images allowed for x by every assigned pair (a,b) with ab = x, as
  // a bitmask over 1..n; all free images when no pair constrains x.
  std::uint64_t candidates(Element x) const {
    std::uint64_t mask = free_mask();
    for (Element a : assigned_) {
      const Element b = loop_.ldiv_unchecked(a, x);
      if (image_[b] == 0) continue;
      const Element ta = image_[a];
      const Element tb = image_[b];
      mask &= bit(mul(ta, tb)) | bit(mul(tb, ta));
      if (mask == 0) break;
    }
    return mask;
  }

  std::uint64_t free_mask() const {
    std::uint64_t mask = 0;
    for (Element v = 2; v <= n_; ++v)
      if (preimage_[v] == 0) mask |= bit(v);
    return mask;
  }

  static std::uint64_t bit(Element v) { return std::uint64_t{1} << v; }

  bool full_check() const {
    for (Element a = 1; a <= n_; ++a)
      for (Element b = 1; b <= n_; ++b) {
        const Element t = image_[mul(a, b)];
        if (t != mul(image_[a], image_[b]) && t != mul(image_[b], image_[a])) return false;
      }
    return true;
  }

  void descend() {
    if (stopped()) return;
    if (static_cast<int>(assigned_.size()) == n_) {
      if (!full_check()) throw internal_error("pruned search produced an invalid leaf");
      results_->emplace_back(image_.begin() + 1, image_.end());
      return;
    }
    Element best = 0;
    std::uint64_t best_mask = 0;
    int best_count = n_ + 1;
    for (Element x = 2; x <= n_; ++x) {
      if (image_[x] != 0) continue;
      const std::uint64_t mask = candidates(x);
      const int count = std::popcount(mask);
      if (count == 0) return;
      if (count < best_count) {
        best = x;
        best_mask = mask;
        best_count = count;
      }
    }
    for (Element v = 2; v <= n_; ++v) {
      if (!(best_mask & bit(v))) continue;
      if (assign(best, v)) descend();
      unassign(best);
      if (stopped()) return;
    }
  }

  bool stopped() const { return limit_ != 0 && results_->size() >= limit_; }

  const LoopTable& loop_;
  int n_;
  std::vector<Element> image_;
  std::vector<Element> preimage_;
  std::vector<Element> assigned_;
  std::size_t limit_ = 0;
  std::vector<std::vector<Element>>* results_ = nullptr;
};

}  // namespace

HalfEnumeration enumerate_half_automorphisms(const LoopTable& loop, std::size_t limit) {
  const int n = loop.order();
  if (n > kMaxHalfSearchOrder)
    throw argument_error("half-automorphism search supports order at most " +
                         std::to_string(kMaxHalfSearchOrder));
  std::vector<std::vector<Element>> found;
  bool truncated = false;

  const unsigned workers = worker_count();
  if (limit != 0 || n <= 2 || workers <= 1) {
    // One extra result distinguishes "exactly limit maps" from truncation.
    HalfSearch search(loop);
    search.run(0, limit == 0 ? 0 : limit + 1, found);
    if (limit != 0 && found.size() > limit) {
      truncated = true;
      found.resize(limit);
    }
  } else {
    // One subtree per image of element 2; merged in subtree order, which
    // keeps the lexicographic order of a sequential run.
    std::vector<std::vector<std::vector<Element>>> buckets(static_cast<std::size_t>(n + 1));
    std::atomic<int> next{2};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
      for (int v = next++; v <= n; v = next++) {
        try {
          HalfSearch search(loop);
          search.run(v, 0, buckets[v]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(n - 1));
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (auto& bucket : buckets)
      for (auto& images : bucket) found.push_back(std::move(images));
  }

  std::sort(found.begin(), found.end());
  HalfEnumeration out;
  out.complete = !truncated;
  out.maps.reserve(found.size());
  for (auto& images : found) out.maps.push_back(make_half_map(loop, loop, std::move(images)));
  return out;
}

bool half_maps_form_group(std::span<const HalfMap> maps) {
  if (maps.empty()) return false;
  std::set<Perm> set;
  for (const HalfMap& m : maps) set.insert(m.perm());
  // A finite set of permutations is a group iff the group it generates has
  // the same size. Generators are added greedily until they span the set.
  std::vector<Perm> gens;
  std::set<Perm> span{Perm::identity(maps.front().perm().degree())};
  for (const Perm& p : set) {
    if (span.contains(p)) continue;
    gens.push_back(p);
    const PermGroupHandle g = group_closure(gens, set.size());
    if (g.capped) return false;
    span = std::set<Perm>(g.elements->begin(), g.elements->end());
  }
  return span == set;
}

bool half_maps_form_group_check(const HalfEnumeration& enumeration) {
  if (!enumeration.complete)
    throw LoopError(ErrorKind::Precondition, "group check needs a complete enumeration");
  return half_maps_form_group(enumeration.maps);
}

SemiIsomorphismReport semi_isomorphism_report(const HalfMap& tau) {
  const LoopTable& dom = tau.domain();
  const LoopTable& cod = tau.codomain();
  SemiIsomorphismReport report;
  report.flexible_domain = is_flexible(dom);
  report.holds = true;
  report.printed_variant = true;
  const int n = dom.order();
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      const Element tu = tau(u);
      const Element tv = tau(v);
      const Element lhs = tau(dom.mul_unchecked(dom.mul_unchecked(u, v), u));
      bool ok = lhs == cod.mul_unchecked(cod.mul_unchecked(tu, tv), tu);
      if (!report.flexible_domain)
        ok = ok && tau(dom.mul_unchecked(u, dom.mul_unchecked(v, u))) ==
                       cod.mul_unchecked(tu, cod.mul_unchecked(tv, tu));
      if (!ok && report.holds) {
        report.holds = false;
        report.first_failure = std::pair{u, v};
      }
      if (lhs != cod.mul_unchecked(cod.mul_unchecked(tu, tv), tv)) report.printed_variant = false;
    }
  return report;
}

std::vector<GGTriple> find_gg_triples(const HalfMap& tau) {
  const LoopTable& dom = tau.domain();
  if (!is_moufang(dom))
    throw LoopError(ErrorKind::Precondition, "GG-triples are defined for Moufang loops");
  const int n = dom.order();
  std::vector<std::vector<Element>> hom_partners(n + 1);
  std::vector<std::vector<Element>> anti_partners(n + 1);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (commutator(dom, x, y) == 1) continue;
      const PairEvaluation v = tau.evaluate(x, y);
      if (v.hom_only()) hom_partners[x].push_back(y);
      if (v.anti_only()) anti_partners[x].push_back(y);
    }
  std::vector<GGTriple> out;
  for (int x = 1; x <= n; ++x)
    for (Element y : hom_partners[x])
      for (Element z : anti_partners[x]) out.push_back({x, y, z});
  return out;
}

std::vector<Element> d_set(const HalfMap& tau) {
  const int n = tau.domain().order();
  std::vector<Element> out;
  for (int g = 1; g <= n; ++g)
    for (int h = 1; h <= n; ++h)
      if (tau.evaluate(g, h).anti_only()) {
        out.push_back(g);
        break;
      }
  return out;
}

InducedMap induced_on_quotient(const HalfMap& tau) {
  const LoopTable& dom = tau.domain();
  const LoopTable& cod = tau.codomain();
  const Subloop dom_assoc = associator_subloop(dom);
  const Subloop cod_assoc = associator_subloop(cod);
  if (!is_normal(dom, dom_assoc))
    throw LoopError(ErrorKind::Precondition, "associator subloop of the domain is not normal");
  if (!is_normal(cod, cod_assoc))
    throw LoopError(ErrorKind::Precondition, "associator subloop of the codomain is not normal");
  if (dom_assoc.order() != cod_assoc.order())
    throw LoopError(ErrorKind::Precondition, "tau does not map associator subloop onto associator subloop");
  for (Element a : dom_assoc.elements())
    if (!cod_assoc.contains(tau(a))) {
      std::ostringstream msg;
      msg << "tau(" << a << ") = " << tau(a) << " leaves the associator subloop";
      throw LoopError(ErrorKind::Precondition, msg.str());
    }

  Quotient dq = quotient(dom, dom_assoc);
  Quotient cq = quotient(cod, cod_assoc);
  const int k = dq.table.order();
  std::vector<Element> images(k, 0);
  for (int x = 1; x <= dom.order(); ++x) {
    const Element c = dq.project(x);
    const Element image = cq.project(tau(x));
    Element& slot = images[c - 1];
    if (slot == 0) {
      slot = image;
    } else if (slot != image) {
      std::ostringstream msg;
      msg << "induced map depends on the representative: " << x << " and "
          << dq.cosets[c - 1].front() << " share a coset but their images do not";
      throw LoopError(ErrorKind::Precondition, msg.str());
    }
  }
  HalfMap map = make_half_map(dq.table, cq.table, std::move(images));
  return InducedMap{std::move(dq), std::move(cq), std::move(map)};
}

HalfMap inverse_half_map(const HalfMap& tau) {
  const Perm inv = tau.perm().inverse();
  try {
    return make_half_map(tau.codomain(), tau.domain(),
                         std::vector<Element>(inv.images().begin(), inv.images().end()));
  } catch (const HalfMapError& e) {
    throw internal_error(std::string("inverse of a half-isomorphism failed: ") + e.what());
  }
}

InversionComposite compose_with_inversion(const HalfMap& tau) {
  const LoopTable& cod = tau.codomain();
  if (!has_two_sided_inverses(cod))
    throw LoopError(ErrorKind::Precondition, "codomain lacks two-sided inverses");
  const int n = cod.order();
  std::vector<Element> images(n);
  for (int x = 1; x <= n; ++x) images[x - 1] = cod.ldiv_unchecked(tau(x), 1);
  InversionComposite out{Perm(std::move(images)), true};
  const LoopTable& dom = tau.domain();
  for (int x = 1; x <= n && out.is_homomorphism; ++x)
    for (int y = 1; y <= n; ++y)
      if (out.map(dom.mul_unchecked(x, y)) != cod.mul_unchecked(out.map(x), out.map(y))) {
        out.is_homomorphism = false;
        break;
      }
  return out;
}

HalfCensus census(std::span<const HalfMap> maps) {
  HalfCensus out;
  for (const HalfMap& m : maps) {
    ++out.total;
    switch (classify(m).kind) {
      case HalfKind::Isomorphism:
        ++out.isomorphisms;
        break;
      case HalfKind::AntiIsomorphism:
        ++out.anti_isomorphisms;
        break;
      case HalfKind::Both:
        ++out.both;
        break;
      case HalfKind::ProperHalf:
        ++out.proper;
        break;
    }
  }
  return out;
}

TheoremReport verify_main_theorem(const LoopTable& loop) {
  TheoremReport report;
  report.name = loop.name();
  report.order = loop.order();
  report.moufang = is_moufang(loop);
  report.automorphic = is_automorphic(loop);
  const HalfEnumeration all = enumerate_half_automorphisms(loop);
  report.complete = all.complete;
  report.counts = census(all.maps);
  for (const HalfMap& m : all.maps)
    if (!classify(m).trivial()) report.proper_witnesses.push_back(m.perm());
  if (report.hypotheses_hold() && report.counts.proper != 0) {
    std::ostringstream msg;
    msg << "automorphic Moufang loop " << loop.name() << " has proper half-automorphism "
        << report.proper_witnesses.front().cycle_string();
    throw LoopError(ErrorKind::TheoremViolation, msg.str());
  }
  return report;
}

}  // namespace loopsmith
