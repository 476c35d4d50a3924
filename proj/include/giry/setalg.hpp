#pragma once

// Finite ground sets, algebras of subsets, semi-rings and premeasurable maps.
//
// On a finite ground set every algebra is a sigma-algebra, so Algebra serves
// both roles. An algebra is stored by its atom partition; members are the
// 2^k unions of atoms and are only materialized on request.

#include "errors.hpp"
#include "rational.hpp"
#include "subset.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace giry {

inline constexpr std::size_t kDefaultMaxGroundSize = 16;

/// Ordered list of distinct point labels. The order is the canonical order
/// used for bit positions and for every serialization.
class GroundSet {
 public:
  GroundSet() = default;

  static GroundSet make(std::vector<std::string> labels, std::size_t max_size = kDefaultMaxGroundSize) {
    if (labels.empty()) throw invalid_input("ground set must have at least one point");
    if (labels.size() > max_size)
      throw invalid_input("ground set has " + std::to_string(labels.size()) + " points; limit is " +
                          std::to_string(max_size));
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw invalid_input("duplicate point label \"" + l + "\"");
    GroundSet g;
    g.labels_ = std::move(labels);
    return g;
  }

  /// Points labelled "0", "1", ..., "n-1".
  static GroundSet range(std::size_t n, std::size_t max_size = kDefaultMaxGroundSize) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return make(std::move(labels), max_size);
  }

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  [[nodiscard]] std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw domain_error("point \"" + label + "\" is not in the ground set");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  [[nodiscard]] Subset empty_set() const { return Subset(size()); }
  [[nodiscard]] Subset whole() const { return Subset::full(size()); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Sorted, duplicate-free family of subsets of one ground set.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  SubsetFamily(std::size_t universe, std::vector<Subset> members) : universe_(universe), members_(std::move(members)) {
    for (const auto& m : members_)
      if (m.universe() != universe_) throw invalid_input("family member has the wrong ground set size");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  [[nodiscard]] std::size_t universe() const { return universe_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] const std::vector<Subset>& members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] bool contains(const Subset& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Subset> members_;
};

/// Algebra of subsets of a finite ground set, held as its atom partition.
/// Cheap to copy: the data is shared and immutable.
class Algebra {
 public:
  Algebra() = default;

  /// Atoms must be non-empty, pairwise disjoint and cover the ground set.
  /// They are stored ordered by their lowest point.
  static Algebra from_atoms(GroundSet ground, std::vector<Subset> atoms) {
    const std::size_t n = ground.size();
    Subset covered(n);
    for (const auto& a : atoms) {
      if (a.universe() != n) throw invalid_input("atom has the wrong ground set size");
      if (a.empty()) throw invalid_input("atoms must be non-empty");
      if (a.intersects(covered)) throw invalid_input("atoms must be pairwise disjoint");
      covered |= a;
    }
    if (!covered.is_full()) throw invalid_input("atoms must cover the ground set");
    std::sort(atoms.begin(), atoms.end(), [](const Subset& a, const Subset& b) { return a.first() < b.first(); });
    auto data = std::make_shared<Data>();
    data->atom_of_point.assign(n, 0);
    for (std::size_t k = 0; k < atoms.size(); ++k)
      for (auto p : atoms[k].indices()) data->atom_of_point[p] = k;
    data->ground = std::move(ground);
    data->atoms = std::move(atoms);
    Algebra alg;
    alg.data_ = std::move(data);
    return alg;
  }

  /// Validates that the family is an algebra: contains the empty set and the
  /// whole set, and is closed under complement and binary intersection.
  static Algebra from_family(GroundSet ground, const SubsetFamily& family) {
    const std::size_t n = ground.size();
    if (family.universe() != n) throw invalid_input("family and ground set sizes differ");
    if (!family.contains(Subset(n))) throw invalid_input("family is not an algebra: missing the empty set");
    if (!family.contains(Subset::full(n))) throw invalid_input("family is not an algebra: missing the whole set");
    const auto& ms = family.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (!family.contains(~ms[i]))
        throw invalid_input("family is not an algebra: not closed under complement",
                            nlohmann::json{{"set", ms[i].indices()}});
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (!family.contains(ms[i] & ms[j]))
          throw invalid_input("family is not an algebra: not closed under intersection",
                              nlohmann::json{{"a", ms[i].indices()}, {"b", ms[j].indices()}});
    }
    std::vector<Subset> atoms;
    for (const auto& m : ms) {
      if (m.empty()) continue;
      bool minimal = std::none_of(ms.begin(), ms.end(),
                                  [&](const Subset& o) { return !o.empty() && o != m && o.is_subset_of(m); });
      if (minimal) atoms.push_back(m);
    }
    return from_atoms(std::move(ground), std::move(atoms));
  }

  static Algebra powerset(GroundSet ground) {
    std::vector<Subset> atoms;
    for (std::size_t i = 0; i < ground.size(); ++i) atoms.push_back(Subset::singleton(ground.size(), i));
    return from_atoms(std::move(ground), std::move(atoms));
  }

  static Algebra trivial(GroundSet ground) {
    auto whole = ground.whole();
    return from_atoms(std::move(ground), {whole});
  }

  [[nodiscard]] bool valid() const { return data_ != nullptr; }
  [[nodiscard]] const GroundSet& ground() const { return data_->ground; }
  [[nodiscard]] std::size_t universe() const { return data_->ground.size(); }
  [[nodiscard]] const std::vector<Subset>& atoms() const { return data_->atoms; }
  [[nodiscard]] std::size_t atom_count() const { return data_->atoms.size(); }
  [[nodiscard]] const Subset& atom(std::size_t k) const { return data_->atoms.at(k); }
  [[nodiscard]] std::size_t atom_of(std::size_t point) const { return data_->atom_of_point.at(point); }
  /// Lowest point of atom k.
  [[nodiscard]] std::size_t representative(std::size_t k) const { return atom(k).first(); }

  [[nodiscard]] bool contains(const Subset& s) const {
    if (s.universe() != universe()) return false;
    return std::all_of(atoms().begin(), atoms().end(), [&](const Subset& a) {
      auto cut = a & s;
      return cut.empty() || cut == a;
    });
  }

  /// Indices of the atoms making up a member; throws domain_error otherwise.
  [[nodiscard]] std::vector<std::size_t> atoms_within(const Subset& member) const {
    if (!contains(member)) throw domain_error("set is not a member of the algebra", nlohmann::json(member.indices()));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < atom_count(); ++k)
      if (atom(k).is_subset_of(member)) out.push_back(k);
    return out;
  }

  /// Union of the atoms whose indices are set in `selection` (a subset of the
  /// atom index set).
  [[nodiscard]] Subset union_of_atoms(const Subset& selection) const {
    Subset out(universe());
    for (auto k : selection.indices()) out |= atom(k);
    return out;
  }

  [[nodiscard]] std::size_t member_count() const {
    if (atom_count() >= 63) throw std::length_error("algebra too large to count");
    return std::size_t{1} << atom_count();
  }

  /// All 2^k members in canonical order.
  [[nodiscard]] SubsetFamily members() const {
    if (atom_count() > 20) throw std::length_error("refusing to materialize more than 2^20 members");
    std::vector<Subset> out;
    out.reserve(member_count());
    for (std::size_t mask = 0; mask < member_count(); ++mask) {
      Subset s(universe());
      for (std::size_t k = 0; k < atom_count(); ++k)
        if ((mask >> k) & 1U) s |= atom(k);
      out.push_back(std::move(s));
    }
    return SubsetFamily(universe(), std::move(out));
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->ground == b.data_->ground && a.data_->atoms == b.data_->atoms;
  }

 private:
  struct Data {
    GroundSet ground;
    std::vector<Subset> atoms;
    std::vector<std::size_t> atom_of_point;
  };
  std::shared_ptr<const Data> data_;
};

/// Smallest algebra containing every generator. Atoms come from partition
/// refinement of the ground set against each generator in turn.
inline Algebra generate_algebra(const GroundSet& ground, const SubsetFamily& generators) {
  if (generators.universe() != ground.size() && !generators.empty())
    throw invalid_input("generators and ground set sizes differ");
  std::vector<Subset> blocks{ground.whole()};
  for (const auto& g : generators) {
    std::vector<Subset> next;
    next.reserve(blocks.size() * 2);
    for (const auto& b : blocks) {
      auto in = b & g;
      auto out = b - g;
      if (!in.empty()) next.push_back(std::move(in));
      if (!out.empty()) next.push_back(std::move(out));
    }
    blocks = std::move(next);
  }
  return Algebra::from_atoms(ground, std::move(blocks));
}

inline const std::vector<Subset>& atoms(const Algebra& algebra) { return algebra.atoms(); }

/// Partition of `target` into pairwise disjoint members of `family`, if one
/// exists. Exact-cover search, branching on the lowest uncovered point.
inline std::optional<std::vector<Subset>> decompose_disjoint(const Subset& target, const SubsetFamily& family) {
  std::vector<const Subset*> candidates;
  for (const auto& m : family)
    if (!m.empty() && m.is_subset_of(target)) candidates.push_back(&m);
  std::sort(candidates.begin(), candidates.end(), [](auto a, auto b) { return a->count() > b->count(); });
  std::unordered_set<Subset, SubsetHash> dead;
  std::vector<Subset> pieces;
  auto search = [&](auto& self, const Subset& rest) -> bool {
    if (rest.empty()) return true;
    if (dead.contains(rest)) return false;
    auto p = rest.first();
    for (const auto* c : candidates) {
      if (!c->test(p) || !c->is_subset_of(rest)) continue;
      pieces.push_back(*c);
      if (self(self, rest - *c)) return true;
      pieces.pop_back();
    }
    dead.insert(rest);
    return false;
  };
  if (search(search, target)) return pieces;
  return std::nullopt;
}

enum class SemiringClause { contains_empty, intersection, relative_complement };

inline const char* to_string(SemiringClause c) {
  switch (c) {
    case SemiringClause::contains_empty: return "contains_empty";
    case SemiringClause::intersection: return "intersection";
    case SemiringClause::relative_complement: return "relative_complement";
  }
  return "?";
}

struct SemiringViolation {
  SemiringClause clause;
  Subset a;
  Subset b;
};

struct SemiringCheck {
  bool ok = true;
  std::optional<SemiringViolation> violation;
  explicit operator bool() const { return ok; }
};

/// Checks the three semi-ring clauses; on failure reports the first violating
/// pair and the clause it breaks.
inline SemiringCheck is_semiring(const GroundSet& ground, const SubsetFamily& family) {
  const std::size_t n = ground.size();
  if (!family.empty() && family.universe() != n) throw invalid_input("family and ground set sizes differ");
  if (!family.contains(Subset(n)))
    return {false, SemiringViolation{SemiringClause::contains_empty, Subset(n), Subset(n)}};
  const auto& ms = family.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!family.contains(ms[i] & ms[j])) return {false, SemiringViolation{SemiringClause::intersection, ms[i], ms[j]}};
  std::unordered_map<Subset, bool, SubsetHash> decomposable;
  for (const auto& a : ms)
    for (const auto& b : ms) {
      auto diff = a - b;
      if (diff.empty() || family.contains(diff)) continue;
      auto [it, fresh] = decomposable.try_emplace(diff, false);
      if (fresh) it->second = decompose_disjoint(diff, family).has_value();
      if (!it->second) return {false, SemiringViolation{SemiringClause::relative_complement, a, b}};
    }
  return {};
}

/// A family validated as a semi-ring.
class SemiRing {
 public:
  static SemiRing make(GroundSet ground, SubsetFamily family) {
    auto check = is_semiring(ground, family);
    if (!check) {
      const auto& v = *check.violation;
      throw precondition_error(std::string("family is not a semi-ring: ") + to_string(v.clause) + " clause fails",
                               nlohmann::json{{"clause", to_string(v.clause)}, {"a", v.a.indices()}, {"b", v.b.indices()}});
    }
    SemiRing s;
    s.ground_ = std::move(ground);
    s.family_ = std::move(family);
    return s;
  }

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const SubsetFamily& members() const { return family_; }

  /// Disjoint members whose union is a minus b.
  [[nodiscard]] std::vector<Subset> difference_decomposition(const Subset& a, const Subset& b) const {
    auto diff = a - b;
    if (diff.empty()) return {};
    auto pieces = decompose_disjoint(diff, family_);
    if (!pieces) throw std::logic_error("semi-ring invariant broken: difference does not decompose");
    return *pieces;
  }

 private:
  GroundSet ground_;
  SubsetFamily family_;
};

/// Algebra generated by the level sets {x : f(x) > r} of the given functions,
/// with r ranging over the finitely many values each function takes.
inline Algebra sigma_of_functions(const GroundSet& ground, const std::vector<std::vector<Rational>>& fns) {
  const std::size_t n = ground.size();
  std::vector<Subset> generators;
  for (const auto& f : fns) {
    if (f.size() != n) throw invalid_input("function is not total on the ground set");
    for (const auto& r : f) {
      Subset level(n);
      for (std::size_t x = 0; x < n; ++x)
        if (f[x] > r) level.set(x);
      generators.push_back(std::move(level));
    }
  }
  return generate_algebra(ground, SubsetFamily(n, std::move(generators)));
}

/// Point map between ground sets: map[x] is the image of point x.
using PointMap = std::vector<std::size_t>;

inline Subset preimage(const PointMap& map, const Subset& target) {
  Subset out(map.size());
  for (std::size_t x = 0; x < map.size(); ++x)
    if (target.test(map[x])) out.set(x);
  return out;
}

inline void check_total(const PointMap& map, const GroundSet& dom, const GroundSet& cod) {
  if (map.size() != dom.size()) throw domain_error("map is not total on its domain");
  for (auto y : map)
    if (y >= cod.size()) throw domain_error("map sends a point outside its codomain");
}

struct PremeasurabilityCheck {
  bool ok = true;
  std::optional<Subset> witness;  // codomain member whose preimage is not measurable
  explicit operator bool() const { return ok; }
};

/// A map is premeasurable iff the preimage of every codomain member is a
/// domain member; checking the codomain atoms suffices.
inline PremeasurabilityCheck is_premeasurable(const PointMap& map, const Algebra& dom, const Algebra& cod) {
  check_total(map, dom.ground(), cod.ground());
  for (const auto& b : cod.atoms())
    if (!dom.contains(preimage(map, b))) return {false, b};
  return {};
}

}  // namespace giry
