#include "ybx/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ybx/errors.hpp"

namespace ybx {

namespace {

constexpr std::string_view kStandardAlphabet =
    "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

bool reserved_label(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
         c == ',' || c == ':' || c == '#' || c == '\0';
}

}  // namespace

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(std::string labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("empty point set");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto c = static_cast<unsigned char>(labels_[i]);
    if (reserved_label(labels_[i]))
      throw std::invalid_argument("reserved character used as a label");
    if (lookup_[c] != -1)
      throw std::invalid_argument(std::string("duplicate label '") +
                                  labels_[i] + "'");
    lookup_[c] = static_cast<std::int16_t>(i);
  }
}

PointSet PointSet::standard(std::size_t n) {
  if (n == 0 || n > kMaxStandard)
    throw std::invalid_argument("standard point sets hold 1.." +
                                std::to_string(kMaxStandard) + " points");
  return PointSet(std::string(kStandardAlphabet.substr(0, n)));
}

std::optional<Point> PointSet::find(char label) const {
  const auto v = lookup_[static_cast<unsigned char>(label)];
  if (v < 0) return std::nullopt;
  return static_cast<Point>(v);
}

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || hit[v])
      throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    q.images_[images_[i]] = static_cast<Point>(i);
  return q;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<Point> img(q.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(static_cast<Point>(i)));
  return Perm(std::move(img));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Cycle notation

Perm parse_cycles(std::string_view text, const PointSet& points) {
  using Kind = CycleParseError::Kind;
  const std::size_t n = points.size();
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);

  bool open = false;
  std::vector<Point> cyc;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') {
      if (open) throw CycleParseError(Kind::Malformed, "nested '('");
      open = true;
      cyc.clear();
    } else if (c == ')') {
      if (!open) throw CycleParseError(Kind::Malformed, "unmatched ')'");
      open = false;
      for (std::size_t i = 0; i < cyc.size(); ++i)
        img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    } else if (c == ',') {
      if (!open) throw CycleParseError(Kind::Malformed, "',' outside a cycle");
    } else {
      if (!open)
        throw CycleParseError(Kind::Malformed,
                              std::string("label '") + c + "' outside a cycle",
                              c);
      const auto p = points.find(c);
      if (!p)
        throw CycleParseError(Kind::UnknownLabel,
                              std::string("unknown label '") + c + "'", c);
      if (used[*p])
        throw CycleParseError(Kind::RepeatedLabel,
                              std::string("label '") + c + "' repeated", c);
      used[*p] = true;
      cyc.push_back(*p);
    }
  }
  if (open) throw CycleParseError(Kind::Malformed, "unterminated cycle");
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p, const PointSet& points) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    out += '(';
    for (Point v : cyc) out += points.label(v);
    out += ')';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbits

Partition orbits(std::span<const Perm> gens, std::size_t n) {
  std::vector<long> comp(n, -1);
  Partition out;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const long id = static_cast<long>(out.size());
    std::vector<Point> orbit{static_cast<Point>(start)};
    comp[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : gens) {
        const Point q = g(orbit[k]);
        if (comp[q] < 0) {
          comp[q] = id;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::closure(std::span<const Perm> gens,
                                 std::size_t degree, std::size_t max_order) {
  FiniteGroup g;
  g.degree_ = degree;
  g.generators_.assign(gens.begin(), gens.end());
  for (const Perm& s : g.generators_)
    if (s.degree() != degree)
      throw std::invalid_argument("generator has the wrong degree");

  g.elements_.push_back(Perm::identity(degree));
  g.parent_.push_back(0);
  g.via_.push_back(0);
  g.index_.emplace(g.elements_[0], 0);
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (std::size_t s = 0; s < g.generators_.size(); ++s) {
      Perm h = compose(g.generators_[s], g.elements_[k]);
      if (g.index_.contains(h)) continue;
      if (g.elements_.size() >= max_order) throw GroupTooLarge(max_order);
      g.index_.emplace(h, g.elements_.size());
      g.elements_.push_back(std::move(h));
      g.parent_.push_back(k);
      g.via_.push_back(s);
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_elements(std::span<const Perm> elements,
                                       std::size_t degree) {
  std::unordered_map<Perm, std::size_t, PermHash> wanted;
  for (const Perm& p : elements) wanted.emplace(p, wanted.size());
  if (wanted.empty())
    throw std::invalid_argument("a subgroup contains the identity");

  std::vector<Perm> gens;
  FiniteGroup current = closure(gens, degree);
  for (const Perm& p : elements) {
    if (current.contains(p)) continue;
    gens.push_back(p);
    try {
      current = closure(gens, degree, wanted.size());
    } catch (const GroupTooLarge&) {
      throw std::invalid_argument("element set is not closed");
    }
  }
  if (current.order() != wanted.size())
    throw std::invalid_argument("element set is not closed");
  for (const Perm& p : current.elements())
    if (!wanted.contains(p))
      throw std::invalid_argument("element set is not closed");
  return current;
}

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FiniteGroup::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(via_[i]);
    i = parent_[i];
  }
  return w;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a)
    for (std::size_t b = a + 1; b < generators_.size(); ++b)
      if (compose(generators_[a], generators_[b]) !=
          compose(generators_[b], generators_[a]))
        return false;
  return true;
}

std::map<std::size_t, std::size_t> FiniteGroup::order_profile() const {
  std::map<std::size_t, std::size_t> prof;
  for (const Perm& p : elements_) ++prof[p.order()];
  return prof;
}

bool FiniteGroup::same_elements(const FiniteGroup& other) const {
  if (order() != other.order()) return false;
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [&](const Perm& p) { return contains(p); });
}

// ---------------------------------------------------------------------------
// Subgroups, homomorphisms, isomorphism

std::vector<std::size_t> small_generating_set(const FiniteGroup& g) {
  std::vector<std::size_t> candidates(g.order());
  std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  std::vector<std::size_t> orders(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) orders[i] = g.element(i).order();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) {
                     return orders[a] > orders[b];
                   });

  std::vector<std::size_t> chosen;
  std::vector<Perm> gens;
  FiniteGroup current = FiniteGroup::closure(gens, g.degree());
  for (std::size_t c : candidates) {
    if (current.order() == g.order()) break;
    if (current.contains(g.element(c))) continue;
    chosen.push_back(c);
    gens.push_back(g.element(c));
    current = FiniteGroup::closure(gens, g.degree(), g.order());
  }
  return chosen;
}

namespace {

// Extends gens[i] -> images[i] (element indices of g and h) along the Cayley
// graph of the subgroup generated by gens. Returns the h-index of every
// reached element of g (-1 elsewhere), or nothing when the assignment does
// not extend to a homomorphism, or to an injective one when requested.
std::optional<std::vector<long>> extend_homomorphism(
    const FiniteGroup& g, std::span<const std::size_t> gens,
    const FiniteGroup& h, std::span<const std::size_t> images,
    bool injective) {
  std::vector<long> image(g.order(), -1);
  std::vector<bool> used(h.order(), false);
  image[0] = 0;
  used[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t a = queue[k];
    const Perm& ha = h.element(static_cast<std::size_t>(image[a]));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t b = *g.index_of(compose(g.element(gens[i]), g.element(a)));
      const long t = static_cast<long>(
          *h.index_of(compose(h.element(images[i]), ha)));
      if (image[b] >= 0) {
        if (image[b] != t) return std::nullopt;
        continue;
      }
      if (injective && used[static_cast<std::size_t>(t)]) return std::nullopt;
      image[b] = t;
      used[static_cast<std::size_t>(t)] = true;
      queue.push_back(b);
    }
  }
  return image;
}

bool backtrack_iso(const FiniteGroup& g, const FiniteGroup& h,
                   const std::vector<std::size_t>& gens,
                   const std::vector<std::vector<std::size_t>>& candidates,
                   std::vector<std::size_t>& images) {
  const std::size_t depth = images.size();
  if (depth == gens.size()) return true;
  for (std::size_t c : candidates[depth]) {
    images.push_back(c);
    const std::span<const std::size_t> prefix(gens.data(), depth + 1);
    if (extend_homomorphism(g, prefix, h, images, true) &&
        backtrack_iso(g, h, gens, candidates, images))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool is_normal(const FiniteGroup& sub, const FiniteGroup& g) {
  for (const Perm& p : sub.elements())
    if (!g.contains(p))
      throw std::invalid_argument("subgroup is not contained in the group");
  for (const Perm& t : g.generators()) {
    const Perm ti = t.inverse();
    for (const Perm& s : sub.generators())
      if (!sub.contains(compose(t, compose(s, ti)))) return false;
  }
  return true;
}

std::vector<FiniteGroup> index2_subgroups(const FiniteGroup& g) {
  const auto gens = small_generating_set(g);
  const FiniteGroup z2 = named_group(GroupSpec::cyclic(2));
  std::vector<FiniteGroup> out;
  const std::size_t k = gens.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = (mask >> i) & 1u;
    const auto hom = extend_homomorphism(g, gens, z2, images, false);
    if (!hom) continue;
    std::vector<Perm> kernel;
    for (std::size_t e = 0; e < g.order(); ++e)
      if ((*hom)[e] == 0) kernel.push_back(g.element(e));
    out.push_back(FiniteGroup::from_elements(kernel, g.degree()));
  }
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_subgroups(
    const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound) throw GroupTooLarge(bound);
  struct Entry {
    std::vector<std::size_t> members;
    std::vector<Perm> gens;
  };
  std::set<std::vector<std::size_t>> seen;
  std::vector<Entry> work{{{0}, {}}};
  seen.insert(work[0].members);
  for (std::size_t k = 0; k < work.size(); ++k) {
    std::vector<bool> in(g.order(), false);
    for (std::size_t m : work[k].members) in[m] = true;
    for (std::size_t e = 0; e < g.order(); ++e) {
      if (in[e]) continue;
      auto gens = work[k].gens;
      gens.push_back(g.element(e));
      const FiniteGroup sub = FiniteGroup::closure(gens, g.degree(), g.order());
      std::vector<std::size_t> members;
      members.reserve(sub.order());
      for (const Perm& p : sub.elements()) members.push_back(*g.index_of(p));
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second)
        work.push_back({std::move(members), std::move(gens)});
    }
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(work.size());
  for (auto& w : work) out.push_back(std::move(w.members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                   std::size_t bound) {
  if (g.order() > bound || h.order() > bound) throw GroupTooLarge(bound);
  if (g.order() != h.order()) return false;
  if (g.order_profile() != h.order_profile()) return false;

  const auto gens = small_generating_set(g);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = g.element(gens[i]).order();
    for (std::size_t e = 0; e < h.order(); ++e)
      if (h.element(e).order() == ord) candidates[i].push_back(e);
  }
  std::vector<std::size_t> images;
  return backtrack_iso(g, h, gens, candidates, images);
}

// ---------------------------------------------------------------------------
// Named groups

std::size_t GroupSpec::order() const {
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Dihedral:
      return param;
    case Kind::Symmetric: {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= param; ++i) {
        if (f > SIZE_MAX / i) return SIZE_MAX;
        f *= i;
      }
      return f;
    }
    case Kind::Product: {
      std::size_t o = 1;
      for (const auto& f : factors) {
        const std::size_t fo = f.order();
        if (fo != 0 && o > SIZE_MAX / fo) return SIZE_MAX;
        o *= fo;
      }
      return o;
    }
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::Cyclic:
      return "Z/" + std::to_string(param);
    case Kind::Dihedral:
      return "D" + std::to_string(param);
    case Kind::Symmetric:
      return "Sym" + std::to_string(param);
    case Kind::Product: {
      std::string s;
      for (const auto& f : factors) {
        if (!s.empty()) s += " x ";
        s += f.name();
      }
      return s.empty() ? "Z/1" : s;
    }
  }
  return {};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::size_t parse_param(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad group name '" + std::string(whole) + "'");
  return std::stoul(std::string(digits));
}

GroupSpec parse_atom(std::string_view t) {
  if (t.starts_with("Z/")) return GroupSpec::cyclic(parse_param(t.substr(2), t));
  if (t.starts_with("Sym"))
    return GroupSpec::symmetric(parse_param(t.substr(3), t));
  if (t.starts_with("C")) return GroupSpec::cyclic(parse_param(t.substr(1), t));
  if (t.starts_with("D")) return GroupSpec::dihedral(parse_param(t.substr(1), t));
  if (t.starts_with("S")) return GroupSpec::symmetric(parse_param(t.substr(1), t));
  throw std::invalid_argument("bad group name '" + std::string(t) + "'");
}

Perm cycle_perm(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Perm(std::move(img));
}

// Generators and degree of a realization.
std::pair<std::vector<Perm>, std::size_t> realize(const GroupSpec& spec) {
  using Kind = GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::Cyclic:
      if (spec.param == 0) throw std::invalid_argument("cyclic group of order 0");
      if (spec.param == 1) return {{}, 1};
      return {{cycle_perm(spec.param)}, spec.param};
    case Kind::Dihedral: {
      if (spec.param == 0 || spec.param % 2 != 0)
        throw std::invalid_argument("dihedral groups have even order");
      const std::size_t m = spec.param / 2;
      if (m == 1) return {{Perm({1, 0})}, 2};
      if (m == 2) return {{Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})}, 4};
      std::vector<Point> refl(m);
      for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
      return {{cycle_perm(m), Perm(std::move(refl))}, m};
    }
    case Kind::Symmetric:
      if (spec.param == 0) throw std::invalid_argument("Sym0 is not supported");
      if (spec.param == 1) return {{}, 1};
      if (spec.param == 2) return {{Perm({1, 0})}, 2};
      {
        std::vector<Point> swap(spec.param);
        std::iota(swap.begin(), swap.end(), Point{0});
        std::swap(swap[0], swap[1]);
        return {{Perm(std::move(swap)), cycle_perm(spec.param)}, spec.param};
      }
    case Kind::Product: {
      std::vector<std::pair<std::vector<Perm>, std::size_t>> parts;
      std::size_t degree = 0;
      for (const auto& f : spec.factors) {
        parts.push_back(realize(f));
        degree += parts.back().second;
      }
      if (degree == 0) return {{}, 1};
      std::vector<Perm> gens;
      std::size_t offset = 0;
      for (const auto& [fgens, fdeg] : parts) {
        for (const Perm& p : fgens) {
          std::vector<Point> img(degree);
          std::iota(img.begin(), img.end(), Point{0});
          for (std::size_t i = 0; i < fdeg; ++i)
            img[offset + i] = static_cast<Point>(offset + p(static_cast<Point>(i)));
          gens.emplace_back(std::move(img));
        }
        offset += fdeg;
      }
      return {gens, degree};
    }
  }
  throw std::invalid_argument("unsupported group spec");
}

int kind_rank(GroupSpec::Kind k) {
  switch (k) {
    case GroupSpec::Kind::Cyclic: return 0;
    case GroupSpec::Kind::Dihedral: return 1;
    case GroupSpec::Kind::Symmetric: return 2;
    case GroupSpec::Kind::Product: return 3;
  }
  return 4;
}

bool atom_less(const GroupSpec& a, const GroupSpec& b) {
  if (kind_rank(a.kind) != kind_rank(b.kind))
    return kind_rank(a.kind) < kind_rank(b.kind);
  return a.param < b.param;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  std::vector<GroupSpec> factors;
  std::string_view rest = text;
  while (true) {
    const auto pos = rest.find(" x ");
    const std::string_view token = trim(rest.substr(0, pos));
    if (token.empty())
      throw std::invalid_argument("bad group name '" + std::string(text) + "'");
    factors.push_back(parse_atom(token));
    if (pos == std::string_view::npos) break;
    rest = rest.substr(pos + 3);
  }
  if (factors.size() == 1) return factors.front();
  return GroupSpec::product(std::move(factors));
}

FiniteGroup named_group(const GroupSpec& spec, std::size_t max_order) {
  if (spec.order() > max_order) throw GroupTooLarge(max_order);
  const auto [gens, degree] = realize(spec);
  return FiniteGroup::closure(gens, degree, max_order);
}

std::optional<GroupSpec> identify_group(const FiniteGroup& g,
                                        std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound) return std::nullopt;
  if (n == 1) return GroupSpec::cyclic(1);

  // Atoms whose order divides n. D4 = Z/2 x Z/2 and Sym3 = D6 are left out
  // so every catalogue group has one preferred name.
  std::vector<GroupSpec> atoms;
  for (std::size_t k = 2; k <= n; ++k)
    if (n % k == 0) atoms.push_back(GroupSpec::cyclic(k));
  for (std::size_t k = 6; k <= n; k += 2)
    if (n % k == 0) atoms.push_back(GroupSpec::dihedral(k));
  for (std::size_t k = 4; GroupSpec::symmetric(k).order() <= n; ++k)
    if (n % GroupSpec::symmetric(k).order() == 0)
      atoms.push_back(GroupSpec::symmetric(k));
  std::sort(atoms.begin(), atoms.end(), atom_less);

  std::vector<std::vector<GroupSpec>> catalogue;
  std::vector<GroupSpec> current;
  std::function<void(std::size_t, std::size_t)> extend =
      [&](std::size_t from, std::size_t remaining) {
        if (remaining == 1) {
          if (!current.empty()) catalogue.push_back(current);
          return;
        }
        if (current.size() == 3) return;
        for (std::size_t i = from; i < atoms.size(); ++i) {
          const std::size_t o = atoms[i].order();
          if (remaining % o != 0) continue;
          current.push_back(atoms[i]);
          extend(i, remaining / o);
          current.pop_back();
        }
      };
  extend(0, n);
  std::stable_sort(catalogue.begin(), catalogue.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  for (const auto& factors : catalogue) {
    GroupSpec spec = factors.size() == 1 ? factors.front()
                                         : GroupSpec::product(factors);
    if (is_isomorphic(g, named_group(spec), bound)) return spec;
  }
  return std::nullopt;
}

}  // namespace ybx
