#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "wadefect/lattice.hpp"

namespace wadefect {

using Element = std::size_t;
using Word = std::vector<std::size_t>;  // indices into generator_indices()
using Permutation = std::vector<std::size_t>;

struct GroupLimits {
  std::size_t order_cap = 2000;
  std::size_t associativity_check_bound = 512;
};

// Finite group stored as a dense multiplication table.
//
// Groups built from permutations are indexed by breadth-first closure from the
// identity (index 0): elements are taken from the queue in order and multiplied
// on the right by each generator in the given order; a product seen for the
// first time receives the next index. words()[i] is the generator word along
// which element i was discovered, so words()[0] is empty. Permutations compose
// as functions: (p*q)[k] = p[q[k]].
class CayleyGroup {
 public:
  static CayleyGroup from_permutations(const std::vector<Permutation>& generators,
                                       const GroupLimits& limits = {});
  // Keeps the table's own indexing; every element is a designated generator.
  static CayleyGroup from_table(const std::vector<std::vector<std::size_t>>& table,
                                const GroupLimits& limits = {});
  // Keeps the table's indexing and designates the given generators.
  static CayleyGroup from_table_with_generators(const std::vector<std::vector<std::size_t>>& table,
                                                const std::vector<Element>& generators,
                                                const GroupLimits& limits = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, std::size_t k) const;
  std::size_t element_order(Element a) const;

  const std::vector<Element>& generator_indices() const { return generators_; }
  const Word& word(Element a) const { return words_[a]; }
  Element evaluate(const Word& w) const;

  std::vector<std::vector<std::size_t>> table() const;

  friend bool operator==(const CayleyGroup& a, const CayleyGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_ && a.generators_ == b.generators_;
  }

 private:
  CayleyGroup() = default;
  void validate_and_complete(const GroupLimits& limits);
  void compute_words();

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
  std::vector<Word> words_;
};

using GroupPtr = std::shared_ptr<const CayleyGroup>;

// Subgroup stored extensionally; elements are sorted.
struct Subgroup {
  std::vector<Element> elements;
  std::vector<Element> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Element g) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup subgroup_closure(const CayleyGroup& g, const std::vector<Element>& seed);
// Checks closure of an explicit element list and picks a small generating set.
Subgroup subgroup_from_elements(const CayleyGroup& g, std::vector<Element> elements);
Subgroup whole_group(const CayleyGroup& g);
Subgroup trivial_subgroup(const CayleyGroup& g);

bool is_subgroup(const CayleyGroup& g, const Subgroup& h);
bool is_cyclic(const CayleyGroup& g, const Subgroup& h);
bool is_normal(const CayleyGroup& g, const Subgroup& h);

std::vector<Subgroup> cyclic_subgroups(const CayleyGroup& g);
// Every subgroup, as joins of cyclic ones; sorted by element list.
std::vector<Subgroup> all_subgroups(const CayleyGroup& g);

Subgroup conjugate_subgroup(const CayleyGroup& g, const Subgroup& h, Element by);

// The subgroup as a group in its own right, indexed by position in h.elements.
CayleyGroup subgroup_as_group(const CayleyGroup& g, const Subgroup& h);

FinAbInvariants abelianization(const CayleyGroup& g);

}  // namespace wadefect
