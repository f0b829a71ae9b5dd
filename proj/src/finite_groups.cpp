#include "wadefect/finite_groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "wadefect/errors.hpp"

namespace wadefect {
namespace {

void check_element(const CayleyGroup& g, Element x) {
  if (x >= g.order())
    throw GroupError("element index " + std::to_string(x) + " out of range for group of order " +
                     std::to_string(g.order()));
}

std::vector<Element> closure_from(const CayleyGroup& g, const std::vector<Element>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> elems{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(elems[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

CayleyGroup CayleyGroup::from_permutations(const std::vector<Permutation>& generators,
                                           const GroupLimits& limits) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw GroupError("permutation generators act on domains of different sizes");
    std::vector<char> hit(degree, 0);
    for (std::size_t x : p) {
      if (x >= degree || hit[x]) throw GroupError("permutation generator is not a bijection");
      hit[x] = 1;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;

  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Permutation> perms{id};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  const std::size_t ngen = generators.size();
  std::vector<Element> right;  // right[x * ngen + s] = x * generator s

  for (std::size_t x = 0; x < perms.size(); ++x) {
    for (std::size_t s = 0; s < ngen; ++s) {
      Permutation y(degree);
      for (std::size_t k = 0; k < degree; ++k) y[k] = perms[x][generators[s][k]];
      auto [it, inserted] = index.emplace(y, perms.size());
      if (inserted) {
        if (perms.size() >= limits.order_cap)
          throw GroupError("group order exceeds the configured cap of " + std::to_string(limits.order_cap));
        perms.push_back(std::move(y));
        parent.push_back(x);
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  CayleyGroup g;
  g.order_ = perms.size();
  g.identity_ = 0;
  g.generators_.resize(ngen);
  // generator s is the element reached from the identity along s
  for (std::size_t s = 0; s < ngen; ++s) g.generators_[s] = right[s];
  g.table_.assign(g.order_ * g.order_, 0);
  // BFS order guarantees parent[j] < j, so row i fills left to right
  for (std::size_t i = 0; i < g.order_; ++i) {
    g.table_[i * g.order_] = i;
    for (std::size_t j = 1; j < g.order_; ++j) {
      Element left = g.table_[i * g.order_ + parent[j]];
      g.table_[i * g.order_ + j] = right[left * ngen + via[j]];
    }
  }
  g.words_.resize(g.order_);
  for (std::size_t j = 1; j < g.order_; ++j) {
    g.words_[j] = g.words_[parent[j]];
    g.words_[j].push_back(via[j]);
  }
  g.inverses_.resize(g.order_);
  for (std::size_t i = 0; i < g.order_; ++i)
    for (std::size_t j = 0; j < g.order_; ++j)
      if (g.table_[i * g.order_ + j] == 0) {
        g.inverses_[i] = j;
        break;
      }
  return g;
}

CayleyGroup CayleyGroup::from_table(const std::vector<std::vector<std::size_t>>& table, const GroupLimits& limits) {
  std::vector<Element> gens(table.size());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = i;
  return from_table_with_generators(table, gens, limits);
}

CayleyGroup CayleyGroup::from_table_with_generators(const std::vector<std::vector<std::size_t>>& table,
                                                    const std::vector<Element>& generators,
                                                    const GroupLimits& limits) {
  CayleyGroup g;
  g.order_ = table.size();
  if (g.order_ == 0) throw GroupError("empty multiplication table");
  if (g.order_ > limits.order_cap)
    throw GroupError("group order exceeds the configured cap of " + std::to_string(limits.order_cap));
  g.table_.reserve(g.order_ * g.order_);
  for (const auto& row : table) {
    if (row.size() != g.order_) throw GroupError("multiplication table is not square");
    for (std::size_t x : row) {
      if (x >= g.order_) throw GroupError("multiplication table entry out of range");
      g.table_.push_back(x);
    }
  }
  g.generators_ = generators;
  for (Element s : g.generators_)
    if (s >= g.order_) throw GroupError("generator index out of range");
  g.validate_and_complete(limits);
  g.compute_words();
  return g;
}

void CayleyGroup::validate_and_complete(const GroupLimits& limits) {
  const std::size_t n = order_;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Element r = table_[i * n + j];
      Element c = table_[j * n + i];
      if (row[r] || col[c]) throw GroupError("multiplication table is not a Latin square");
      row[r] = col[c] = 1;
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table_[e * n + j] == j && table_[j * n + e] == j;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupError("multiplication table has no identity element");
  if (n <= limits.associativity_check_bound) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Element ab = table_[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (table_[ab * n + c] != table_[a * n + table_[b * n + c]])
            throw GroupError("multiplication table is not associative: (" + std::to_string(a) + "*" +
                             std::to_string(b) + ")*" + std::to_string(c));
      }
  }
  inverses_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i * n + j] == identity_) inverses_[i] = j;
}

void CayleyGroup::compute_words() {
  words_.assign(order_, {});
  std::vector<char> seen(order_, 0);
  std::vector<Element> queue{identity_};
  seen[identity_] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Element x = queue[q];
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      Element y = mul(x, generators_[s]);
      if (!seen[y]) {
        seen[y] = 1;
        words_[y] = words_[x];
        words_[y].push_back(s);
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != order_) throw GroupError("designated generators do not generate the group");
}

Element CayleyGroup::power(Element a, std::size_t k) const {
  Element x = identity_;
  for (std::size_t i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::size_t CayleyGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

Element CayleyGroup::evaluate(const Word& w) const {
  Element x = identity_;
  for (std::size_t s : w) {
    if (s >= generators_.size()) throw GroupError("generator word refers to unknown generator " + std::to_string(s));
    x = mul(x, generators_[s]);
  }
  return x;
}

std::vector<std::vector<std::size_t>> CayleyGroup::table() const {
  std::vector<std::vector<std::size_t>> t(order_, std::vector<std::size_t>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t[i][j] = mul(i, j);
  return t;
}

bool Subgroup::contains(Element g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup subgroup_closure(const CayleyGroup& g, const std::vector<Element>& seed) {
  std::vector<Element> gens;
  for (Element x : seed) {
    check_element(g, x);
    if (x != g.identity() && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  }
  return Subgroup{closure_from(g, gens), gens};
}

Subgroup subgroup_from_elements(const CayleyGroup& g, std::vector<Element> elements) {
  for (Element x : elements) check_element(g, x);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h{elements, {}};
  if (!is_subgroup(g, h)) throw GroupError("element list is not a subgroup (not closed or missing the identity)");
  std::vector<Element> current{g.identity()};
  for (Element x : h.elements) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    h.generators.push_back(x);
    current = closure_from(g, h.generators);
  }
  return h;
}

Subgroup whole_group(const CayleyGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return subgroup_from_elements(g, std::move(all));
}

Subgroup trivial_subgroup(const CayleyGroup& g) { return Subgroup{{g.identity()}, {}}; }

bool is_subgroup(const CayleyGroup& g, const Subgroup& h) {
  if (h.elements.empty() || !std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  for (Element x : h.elements)
    if (x >= g.order()) return false;
  if (!h.contains(g.identity())) return false;
  for (Element a : h.elements)
    for (Element b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

bool is_cyclic(const CayleyGroup& g, const Subgroup& h) {
  return std::any_of(h.elements.begin(), h.elements.end(),
                     [&](Element x) { return g.element_order(x) == h.order(); });
}

bool is_normal(const CayleyGroup& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!(conjugate_subgroup(g, h, x) == h)) return false;
  return true;
}

std::vector<Subgroup> cyclic_subgroups(const CayleyGroup& g) {
  std::map<std::vector<Element>, Element> found;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<Element> powers{g.identity()};
    for (Element y = x; y != g.identity(); y = g.mul(y, x)) powers.push_back(y);
    std::sort(powers.begin(), powers.end());
    found.emplace(std::move(powers), x);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [elems, gen] : found) {
    Subgroup h{elems, {}};
    if (gen != g.identity()) h.generators.push_back(gen);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const CayleyGroup& g) {
  const auto cyclic = cyclic_subgroups(g);
  std::map<std::vector<Element>, Subgroup> found;
  std::vector<Subgroup> frontier;
  for (const auto& c : cyclic) {
    found.emplace(c.elements, c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (c.generators.empty() || h.contains(c.generators.front())) continue;
        auto gens = h.generators;
        gens.push_back(c.generators.front());
        Subgroup join = subgroup_closure(g, gens);
        if (found.emplace(join.elements, join).second) next.push_back(join);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [elems, h] : found) out.push_back(h);
  return out;
}

Subgroup conjugate_subgroup(const CayleyGroup& g, const Subgroup& h, Element by) {
  check_element(g, by);
  for (Element x : h.elements) check_element(g, x);
  const Element inv = g.inverse(by);
  auto conj = [&](Element x) { return g.mul(g.mul(by, x), inv); };
  Subgroup out;
  for (Element x : h.elements) out.elements.push_back(conj(x));
  std::sort(out.elements.begin(), out.elements.end());
  for (Element x : h.generators) out.generators.push_back(conj(x));
  return out;
}

CayleyGroup subgroup_as_group(const CayleyGroup& g, const Subgroup& h) {
  const std::size_t n = h.order();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  auto local = [&](Element x) {
    return static_cast<std::size_t>(std::lower_bound(h.elements.begin(), h.elements.end(), x) - h.elements.begin());
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = local(g.mul(h.elements[i], h.elements[j]));
  std::vector<Element> gens;
  for (Element x : h.generators) gens.push_back(local(x));
  GroupLimits limits;
  limits.order_cap = std::max(limits.order_cap, n);
  limits.associativity_check_bound = 0;  // inherited from g
  return CayleyGroup::from_table_with_generators(table, gens, limits);
}

FinAbInvariants abelianization(const CayleyGroup& g) {
  std::vector<Element> commutators;
  {
    std::set<Element> seen;
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b) {
        Element c = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
        if (seen.insert(c).second) commutators.push_back(c);
      }
  }
  // the commutator set is conjugation-stable, so its closure is normal
  const Subgroup derived = subgroup_closure(g, commutators);
  const std::size_t quotient_order = g.order() / derived.order();

  std::vector<Integer> cyclic_orders;
  std::size_t rest = quotient_order;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::size_t p_part = 1;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }
    // exponent_counts[k-1] = number of cyclic p-factors of exponent >= k
    std::vector<std::size_t> exponent_counts;
    std::size_t previous_log = 0;
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t killed = 0;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (derived.contains(g.power(x, pk))) ++killed;
      std::size_t count = killed / derived.order();
      // count is p^(log) times the number of p'-elements killed, which is 1
      std::size_t log = 0;
      for (std::size_t c = count; c % p == 0 && c > 1; c /= p) ++log;
      exponent_counts.push_back(log - previous_log);
      previous_log = log;
      std::size_t full = 1;
      for (std::size_t i = 0; i < log; ++i) full *= p;
      if (full == p_part) break;
    }
    const std::size_t factors = exponent_counts.front();
    for (std::size_t i = 1; i <= factors; ++i) {
      Integer q = 1;
      for (std::size_t k = 0; k < exponent_counts.size(); ++k)
        if (exponent_counts[k] >= i) q *= static_cast<unsigned long>(p);
      cyclic_orders.push_back(q);
    }
  }
  return FinAbInvariants::from_cyclic_orders(cyclic_orders);
}

}  // namespace wadefect
