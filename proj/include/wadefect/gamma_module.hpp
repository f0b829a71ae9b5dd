#pragma once

#include <vector>

#include "wadefect/finite_groups.hpp"
#include "wadefect/int_matrix.hpp"
#include "wadefect/lattice.hpp"

namespace wadefect {

// Finitely generated abelian group Z^n / span(relations) with a left action
// of a finite group. The action is given on the designated generators of the
// group; matrices of all other elements are derived from the stored words.
// Instances are validated on construction and immutable afterwards.
class GammaModule {
 public:
  static GammaModule create(GroupPtr group, std::size_t rank, IntMatrix relations,
                            std::vector<IntMatrix> generator_action);

  const CayleyGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& relations() const { return relations_; }
  const std::vector<IntMatrix>& generator_action() const { return generator_action_; }
  const IntMatrix& action(Element g) const { return element_action_.at(g); }
  bool relation_free() const { return relations_.cols() == 0; }
  AbelianPresentation presentation() const { return AbelianPresentation(rank_, relations_); }

 private:
  GammaModule() = default;
  static std::vector<IntMatrix> derive_and_check(const GammaModule& m);
  friend void validate(const GammaModule& m);

  GroupPtr group_;
  std::size_t rank_ = 0;
  IntMatrix relations_;
  std::vector<IntMatrix> generator_action_;
  std::vector<IntMatrix> element_action_;
};

// Throws ModuleError naming the first violating (element, generator) pair.
void validate(const GammaModule& m);

// A free abelian group Z^rank with an exact (not merely modulo relations)
// action, one matrix per group element.
struct GammaLattice {
  GroupPtr group;
  std::size_t rank = 0;
  std::vector<IntMatrix> action;

  static GammaLattice from_module(const GammaModule& m);  // requires m.relation_free()
  void check_group_law() const;
};

GammaModule trivial_module(GroupPtr g, std::size_t rank);

// Augmentation kernel I_G with basis {g - e : g != e} in element order.
GammaModule norm_one_module(GroupPtr g);

// Permutation module Z[G/H] on left cosets, numbered by least element index.
GammaModule induced_module(GroupPtr g, const Subgroup& h);

// Z with g acting by +1 on the index-2 subgroup `kernel` and -1 elsewhere.
GammaModule character_module(GroupPtr g, const Subgroup& kernel);

GammaModule direct_sum(const GammaModule& a, const GammaModule& b);

// Same module presented on every generator twice: Z^{2n} modulo R and e_i - e_{n+i}.
GammaModule duplicate_generators(const GammaModule& m);

// Same abelian group with the action restricted to h; the group of the
// result is subgroup_as_group(m.group(), h).
GammaModule restrict_module(const GammaModule& m, const Subgroup& h);

// Isomorphic module in the coordinates x -> p x (p unimodular, p_inverse its inverse).
GammaModule change_basis(const GammaModule& m, const IntMatrix& p, const IntMatrix& p_inverse);

}  // namespace wadefect
