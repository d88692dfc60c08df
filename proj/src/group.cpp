#include "rotgroup/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "rotgroup/error.hpp"

namespace rotgroup {

namespace {

void require_enumerable(std::size_t order) {
  if (order > kMaxEnumerableOrder) throw GroupTooLarge(order, kMaxEnumerableOrder);
}

std::vector<char> mask_of(const Subgroup& s, std::size_t n) {
  std::vector<char> mask(n, 0);
  for (ElementIndex i : s.members()) mask[i] = 1;
  return mask;
}

}  // namespace

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::vector<ElementIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(ElementIndex i) const { return std::binary_search(members_.begin(), members_.end(), i); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

// ---------------------------------------------------------- FiniteRotGroup

std::optional<ElementIndex> FiniteRotGroup::index_of(const Rot3& m) const {
  if (auto it = index_.find(m); it != index_.end()) return it->second;
  return std::nullopt;
}

Subgroup FiniteRotGroup::whole() const {
  std::vector<ElementIndex> all(order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(std::move(all));
}

Subgroup FiniteRotGroup::generated_by(std::span<const ElementIndex> gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<ElementIndex> members{identity_index()};
  seen[identity_index()] = 1;
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    for (ElementIndex g : gens) {
      const ElementIndex p = multiply(members[pos], g);
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
      }
    }
  }
  return Subgroup(std::move(members));
}

bool FiniteRotGroup::is_subgroup(const Subgroup& s) const {
  if (!s.contains(identity_index())) return false;
  for (ElementIndex i : s.members()) {
    if (i >= order()) return false;
  }
  const auto mask = mask_of(s, order());
  for (ElementIndex a : s.members()) {
    if (!mask[inverse(a)]) return false;
    for (ElementIndex b : s.members()) {
      if (!mask[multiply(a, b)]) return false;
    }
  }
  return true;
}

bool FiniteRotGroup::is_abelian(const Subgroup& s) const {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!commute(m[i], m[j])) return false;
    }
  }
  return true;
}

bool FiniteRotGroup::has_involution(const Subgroup& s) const {
  return std::any_of(s.members().begin(), s.members().end(),
                     [this](ElementIndex i) { return element_order(i) == 2; });
}

FiniteRotGroup generate_closure(std::span<const Rot3> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  if (cap == 0) throw std::invalid_argument("closure cap must be positive");
  const Ambient d = gens.front().ambient();
  for (const Rot3& g : gens) {
    if (g.ambient() != d) throw AmbientMismatch(d, g.ambient());
  }

  std::vector<Rot3> steps;
  for (const Rot3& g : gens) {
    for (Rot3 s : {g, g.inverse()}) {
      if (std::find(steps.begin(), steps.end(), s) == steps.end()) steps.push_back(std::move(s));
    }
  }

  FiniteRotGroup grp;
  grp.elements_.push_back(Rot3::identity(d));
  grp.index_.emplace(grp.elements_.front(), 0);
  std::size_t layer_begin = 0;
  while (layer_begin < grp.elements_.size()) {
    const std::size_t layer_end = grp.elements_.size();
    std::vector<Rot3> fresh;
    std::unordered_set<Rot3, Rot3Hash> fresh_set;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const Rot3& s : steps) {
        Rot3 p = grp.elements_[i] * s;
        if (grp.index_.contains(p) || fresh_set.contains(p)) continue;
        if (layer_end + fresh.size() + 1 > cap) throw ClosureExceedsCap(layer_end + fresh.size() + 1);
        fresh_set.insert(p);
        fresh.push_back(std::move(p));
      }
    }
    std::sort(fresh.begin(), fresh.end(), [](const Rot3& a, const Rot3& b) { return lex_compare(a, b) < 0; });
    for (Rot3& m : fresh) {
      grp.index_.emplace(m, grp.elements_.size());
      grp.elements_.push_back(std::move(m));
    }
    layer_begin = layer_end;
  }

  const std::size_t n = grp.elements_.size();
  grp.cayley_.resize(n * n);
  grp.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementIndex p = grp.index_.at(grp.elements_[a] * grp.elements_[b]);
      grp.cayley_[a * n + b] = p;
      if (p == 0) grp.inverses_[a] = b;
    }
  }
  grp.element_orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (ElementIndex p = a; p != 0; p = grp.cayley_[p * n + a]) ++k;
    grp.element_orders_[a] = a == 0 ? 1 : k;
  }
  for (const Rot3& g : gens) grp.generators_.push_back(grp.index_.at(g));
  return grp;
}

// ------------------------------------------------------------- subgroups

std::vector<Subgroup> subgroups(const FiniteRotGroup& g) {
  require_enumerable(g.order());
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const ElementIndex gen[] = {x};
    Subgroup c = g.generated_by(gen);
    if (found.insert(c).second) cyclic.push_back(std::move(c));
  }
  // Join every known subgroup with every cyclic subgroup until nothing new appears.
  std::vector<Subgroup> queue(found.begin(), found.end());
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    for (const Subgroup& c : cyclic) {
      if (c.is_subset_of(queue[pos])) continue;
      std::vector<ElementIndex> gens = queue[pos].members();
      gens.insert(gens.end(), c.members().begin(), c.members().end());
      Subgroup joined = g.generated_by(gens);
      if (found.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  return {found.begin(), found.end()};
}

Subgroup center(const FiniteRotGroup& g) {
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementIndex y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) members.push_back(x);
  }
  return Subgroup(std::move(members));
}

Subgroup centralizer(const FiniteRotGroup& g, ElementIndex x) {
  if (x >= g.order()) throw std::out_of_range("element index out of range");
  std::vector<ElementIndex> members;
  for (ElementIndex y = 0; y < g.order(); ++y) {
    if (g.commute(x, y)) members.push_back(y);
  }
  return Subgroup(std::move(members));
}

std::vector<Subgroup> maximal_abelian_subgroups(const FiniteRotGroup& g, const Subgroup& s) {
  require_enumerable(g.order());
  std::vector<Subgroup> abelian;
  for (Subgroup& h : subgroups(g)) {
    if (h.is_subset_of(s) && g.is_abelian(h)) abelian.push_back(std::move(h));
  }
  std::vector<Subgroup> maximal;
  for (const Subgroup& h : abelian) {
    const bool dominated = std::any_of(abelian.begin(), abelian.end(), [&](const Subgroup& other) {
      return other.order() > h.order() && h.is_subset_of(other);
    });
    if (!dominated) maximal.push_back(h);
  }
  return maximal;
}

std::vector<Subgroup> maximal_abelian_subgroups(const FiniteRotGroup& g) {
  return maximal_abelian_subgroups(g, g.whole());
}

bool is_malnormal(const FiniteRotGroup& g, const Subgroup& ambient, const Subgroup& h) {
  if (!g.is_subgroup(h) || !g.is_subgroup(ambient) || !h.is_subset_of(ambient)) throw NotASubgroup();
  for (ElementIndex x : ambient.members()) {
    if (h.contains(x)) continue;
    for (ElementIndex y : h.members()) {
      if (y == FiniteRotGroup::identity_index()) continue;
      if (h.contains(g.multiply(g.multiply(x, y), g.inverse(x)))) return false;
    }
  }
  return true;
}

bool is_malnormal(const FiniteRotGroup& g, const Subgroup& h) { return is_malnormal(g, g.whole(), h); }

// -------------------------------------------------------- decompositions

bool is_valid_decomposition(const FiniteRotGroup& g, const Subgroup& s, const Decomposition& dec) {
  const Subgroup& h = dec.factor_h;
  const Subgroup& k = dec.factor_k;
  if (!g.is_subgroup(h) || !g.is_subgroup(k)) return false;
  if (!h.is_subset_of(s) || !k.is_subset_of(s)) return false;
  if (h.is_trivial() || k.is_trivial()) return false;
  if (h.order() * k.order() != s.order()) return false;
  for (ElementIndex a : h.members()) {
    if (a != FiniteRotGroup::identity_index() && k.contains(a)) return false;
    for (ElementIndex b : k.members()) {
      if (!g.commute(a, b)) return false;
    }
  }
  return true;
}

std::vector<Decomposition> direct_product_decompositions(const FiniteRotGroup& g, const Subgroup& s,
                                                         std::span<const Subgroup> all_subgroups) {
  require_enumerable(s.order());
  std::vector<const Subgroup*> candidates;
  for (const Subgroup& h : all_subgroups) {
    if (!h.is_trivial() && h.order() < s.order() && s.order() % h.order() == 0 && h.is_subset_of(s)) {
      candidates.push_back(&h);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Subgroup* a, const Subgroup* b) { return *a < *b; });

  std::vector<Decomposition> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Subgroup& h = *candidates[i];
    const auto h_mask = mask_of(h, g.order());
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Subgroup& k = *candidates[j];
      if (h.order() * k.order() != s.order()) continue;
      bool ok = true;
      for (ElementIndex b : k.members()) {
        if (b != FiniteRotGroup::identity_index() && h_mask[b]) {
          ok = false;
          break;
        }
      }
      for (std::size_t ai = 0; ok && ai < h.members().size(); ++ai) {
        for (ElementIndex b : k.members()) {
          if (!g.commute(h.members()[ai], b)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) out.push_back({h, k});
    }
  }
  return out;
}

std::vector<Decomposition> direct_product_decompositions(const FiniteRotGroup& g, const Subgroup& s) {
  require_enumerable(g.order());
  const auto all = subgroups(g);
  return direct_product_decompositions(g, s, all);
}

// -------------------------------------------------------- classification

IsoType classify_iso_type(const FiniteRotGroup& g, const Subgroup& s) {
  const std::size_t n = s.order();
  if (n == 1) return {IsoFamily::Trivial, 0};
  std::map<std::size_t, std::size_t> order_counts;
  for (ElementIndex x : s.members()) ++order_counts[g.element_order(x)];
  if (order_counts.contains(n)) return {IsoFamily::Cyclic, n};

  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    for (ElementIndex x : s.members()) {
      if (g.element_order(x) != m) continue;
      const ElementIndex gen[] = {x};
      const Subgroup rotations = g.generated_by(gen);
      const bool rest_involutions = std::all_of(s.members().begin(), s.members().end(), [&](ElementIndex y) {
        return rotations.contains(y) || g.element_order(y) == 2;
      });
      if (rest_involutions) return {IsoFamily::Dihedral, m};
      break;
    }
  }

  auto counts_are = [&](std::size_t c2, std::size_t c3, std::size_t c4, std::size_t c5) {
    auto count = [&](std::size_t k) { return order_counts.contains(k) ? order_counts.at(k) : 0; };
    return count(2) == c2 && count(3) == c3 && count(4) == c4 && count(5) == c5;
  };
  if (n == 12 && counts_are(3, 8, 0, 0)) return {IsoFamily::TetrahedralA4, 0};
  if (n == 24 && counts_are(9, 8, 6, 0)) return {IsoFamily::OctahedralS4, 0};
  if (n == 60 && counts_are(15, 20, 0, 24)) return {IsoFamily::IcosahedralA5, 0};
  throw UnrecognizedGroup("no finite rotation group family matches a group of order " + std::to_string(n));
}

IsoType classify_iso_type(const FiniteRotGroup& g) { return classify_iso_type(g, g.whole()); }

std::string to_string(const IsoType& t) {
  switch (t.family) {
    case IsoFamily::Trivial: return "Trivial";
    case IsoFamily::Cyclic: return "C" + std::to_string(t.n);
    case IsoFamily::Dihedral: return "Dihedral(" + std::to_string(t.n) + ")";
    case IsoFamily::TetrahedralA4: return "A4";
    case IsoFamily::OctahedralS4: return "S4";
    case IsoFamily::IcosahedralA5: return "A5";
  }
  return "?";
}

std::vector<FactorTypes> decomposition_types(const FiniteRotGroup& g, std::span<const Decomposition> decs) {
  std::vector<FactorTypes> out;
  for (const Decomposition& d : decs) {
    IsoType a = classify_iso_type(g, d.factor_h);
    IsoType b = classify_iso_type(g, d.factor_k);
    if (b < a) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const FactorTypes& t) { return to_string(t.first) + " × " + to_string(t.second); }

// ----------------------------------------------------------- word search

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(std::abs(w[i]));
    if (w[i] < 0) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i += run;
  }
  return out;
}

Rot3 evaluate_word(std::span<const Rot3> gens, const Word& w) {
  if (gens.empty()) throw std::invalid_argument("word evaluation needs generators");
  Rot3 m = Rot3::identity(gens.front().ambient());
  for (int letter : w) {
    const Rot3& g = gens[static_cast<std::size_t>(std::abs(letter) - 1)];
    m = letter > 0 ? m * g : m * g.inverse();
  }
  return m;
}

namespace {

Word freely_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

WordSearchResult abelian_search(std::span<const Rot3> gens, std::size_t max_len) {
  const auto bound = static_cast<long>(max_len);
  const std::size_t k = gens.size();
  // powers[i][m + bound] = g_i^m
  std::vector<std::vector<Rot3>> powers(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (long m = -bound; m <= bound; ++m) powers[i].push_back(power(gens[i], m));
  }
  // Values by increasing magnitude, positive first: 0, 1, -1, 2, -2, ...
  std::vector<long> values{0};
  for (long m = 1; m <= bound; ++m) {
    values.push_back(m);
    values.push_back(-m);
  }

  WordSearchResult result;
  result.abelian_mode = true;
  result.count = 1;  // the zero tuple
  std::vector<long> exps(k, 0);
  for (long radius = 1; radius <= bound; ++radius) {
    std::function<bool(std::size_t, bool)> visit = [&](std::size_t pos, bool hit_radius) -> bool {
      if (pos == k) {
        if (!hit_radius) return false;
        ++result.count;
        Rot3 m = Rot3::identity(gens.front().ambient());
        for (std::size_t i = 0; i < k; ++i) m = m * powers[i][static_cast<std::size_t>(exps[i] + bound)];
        if (!m.is_identity()) return false;
        for (std::size_t i = 0; i < k; ++i) {
          const int letter = exps[i] > 0 ? static_cast<int>(i + 1) : -static_cast<int>(i + 1);
          for (long r = 0; r < std::abs(exps[i]); ++r) result.relation.push_back(letter);
        }
        result.all_distinct = false;
        return true;
      }
      for (long v : values) {
        if (std::abs(v) > radius) break;
        exps[pos] = v;
        if (visit(pos + 1, hit_radius || std::abs(v) == radius)) return true;
      }
      exps[pos] = 0;
      return false;
    };
    if (visit(0, false)) return result;
  }
  return result;
}

WordSearchResult free_search(std::span<const Rot3> gens, std::size_t max_len) {
  const int k = static_cast<int>(gens.size());
  std::vector<Rot3> inverses;
  for (const Rot3& g : gens) inverses.push_back(g.inverse());

  std::vector<Word> words{Word{}};
  std::vector<Rot3> values{Rot3::identity(gens.front().ambient())};
  std::unordered_map<Rot3, std::size_t, Rot3Hash> seen;
  seen.emplace(values.front(), 0);

  WordSearchResult result;
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = words.size();
    for (std::size_t w = layer_begin; w < layer_end; ++w) {
      for (int letter = -k; letter <= k; ++letter) {
        if (letter == 0 || (!words[w].empty() && words[w].back() == -letter)) continue;
        const std::size_t g = static_cast<std::size_t>(std::abs(letter) - 1);
        Rot3 value = values[w] * (letter > 0 ? gens[g] : inverses[g]);
        Word word = words[w];
        word.push_back(letter);
        if (auto it = seen.find(value); it != seen.end()) {
          // word · other⁻¹ = E
          Word rel = word;
          const Word& other = words[it->second];
          for (auto r = other.rbegin(); r != other.rend(); ++r) rel.push_back(-*r);
          result.all_distinct = false;
          result.relation = freely_reduce(rel);
          result.count = words.size() + 1;
          return result;
        }
        seen.emplace(value, words.size());
        words.push_back(std::move(word));
        values.push_back(std::move(value));
      }
    }
    layer_begin = layer_end;
  }
  result.count = words.size();
  return result;
}

}  // namespace

WordSearchResult word_no_relation_search(std::span<const Rot3> gens, std::size_t max_len) {
  if (gens.empty()) throw std::invalid_argument("word search needs generators");
  if (max_len == 0) throw std::invalid_argument("word length must be positive");
  if (max_len > kMaxWordLength) throw DepthTooLarge(max_len, kMaxWordLength);
  const Ambient d = gens.front().ambient();
  bool pairwise_commuting = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].ambient() != d) throw AmbientMismatch(d, gens[i].ambient());
    for (std::size_t j = i + 1; j < gens.size(); ++j) pairwise_commuting = pairwise_commuting && rot_commutes(gens[i], gens[j]);
  }
  return pairwise_commuting ? abelian_search(gens, max_len) : free_search(gens, max_len);
}

}  // namespace rotgroup
