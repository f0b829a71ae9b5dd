#include "wadefect/gamma_module.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wadefect/errors.hpp"

namespace wadefect {
namespace {

// Columns of x lie in the lattice with Hermite basis h (h may have no columns).
bool columns_in(const IntMatrix& h, const IntMatrix& x) {
  if (h.cols() == 0) return x.is_zero();
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (!solve_in_hermite_basis(h, x.column(j))) return false;
  return true;
}

std::vector<Element> elements_by_word_length(const CayleyGroup& g) {
  std::vector<Element> order(g.order());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return g.word(a).size() < g.word(b).size(); });
  return order;
}

}  // namespace

GammaModule GammaModule::create(GroupPtr group, std::size_t rank, IntMatrix relations,
                                std::vector<IntMatrix> generator_action) {
  if (!group) throw ModuleError("module has no group");
  GammaModule m;
  m.group_ = std::move(group);
  m.rank_ = rank;
  if (relations.rows() == 0 && relations.cols() == 0) relations = IntMatrix(rank, 0);
  m.relations_ = std::move(relations);
  m.generator_action_ = std::move(generator_action);
  m.element_action_ = derive_and_check(m);
  return m;
}

void validate(const GammaModule& m) {
  if (GammaModule::derive_and_check(m) != m.element_action_) throw ModuleError("cached element actions are stale");
}

std::vector<IntMatrix> GammaModule::derive_and_check(const GammaModule& m) {
  const CayleyGroup& g = *m.group_;
  const std::size_t n = m.rank_;
  if (m.relations_.rows() != n)
    throw ModuleError("relation vectors have length " + std::to_string(m.relations_.rows()) + ", expected " +
                      std::to_string(n));
  if (m.generator_action_.size() != g.generator_indices().size())
    throw ModuleError("expected " + std::to_string(g.generator_indices().size()) + " action matrices, got " +
                      std::to_string(m.generator_action_.size()));
  for (std::size_t s = 0; s < m.generator_action_.size(); ++s) {
    const auto& a = m.generator_action_[s];
    if (a.rows() != n || a.cols() != n)
      throw ModuleError("action matrix of generator " + std::to_string(s) + " is not " + std::to_string(n) + "x" +
                        std::to_string(n));
  }

  const IntMatrix rel = hermite_basis(m.relations_);
  for (std::size_t s = 0; s < m.generator_action_.size(); ++s) {
    if (!columns_in(rel, m.generator_action_[s] * m.relations_))
      throw ModuleError("relation lattice is not stable under generator " + std::to_string(s));
  }

  std::vector<IntMatrix> actions(g.order());
  actions[g.identity()] = IntMatrix::identity(n);
  for (Element x : elements_by_word_length(g)) {
    const Word& w = g.word(x);
    if (w.empty()) continue;
    Word prefix(w.begin(), w.end() - 1);
    actions[x] = actions[g.evaluate(prefix)] * m.generator_action_[w.back()];
  }

  // A_x A_s == A_{xs} for every element x and generator s implies the full
  // group law modulo relations, by induction along words.
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < g.generator_indices().size(); ++s) {
      const Element xs = g.mul(x, g.generator_indices()[s]);
      if (!columns_in(rel, actions[x] * m.generator_action_[s] - actions[xs]))
        throw ModuleError("incompatible action: A(" + std::to_string(x) + ") * A(" +
                          std::to_string(g.generator_indices()[s]) + ") != A(" + std::to_string(xs) +
                          ") modulo relations");
    }
  }
  return actions;
}

GammaLattice GammaLattice::from_module(const GammaModule& m) {
  if (!m.relation_free()) throw PreconditionError("a lattice needs a relation-free module");
  GammaLattice l{m.group_ptr(), m.rank(), {}};
  for (std::size_t x = 0; x < m.group().order(); ++x) l.action.push_back(m.action(x));
  l.check_group_law();
  return l;
}

void GammaLattice::check_group_law() const {
  const CayleyGroup& g = *group;
  if (action.size() != g.order()) throw ModuleError("lattice action does not cover every element");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (action[a] * action[b] != action[g.mul(a, b)])
        throw ModuleError("lattice action violates the group law at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
}

GammaModule trivial_module(GroupPtr g, std::size_t rank) {
  std::vector<IntMatrix> act(g->generator_indices().size(), IntMatrix::identity(rank));
  return GammaModule::create(std::move(g), rank, IntMatrix(rank, 0), std::move(act));
}

GammaModule norm_one_module(GroupPtr g) {
  const std::size_t n = g->order();
  const Element e = g->identity();
  // position of g - e in the basis
  std::vector<std::size_t> pos(n, n);
  std::size_t k = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (x != e) pos[x] = k++;
  std::vector<IntMatrix> act;
  for (Element h : g->generator_indices()) {
    IntMatrix a(n - 1, n - 1);
    for (std::size_t x = 0; x < n; ++x) {
      if (x == e) continue;
      // h (x - e) = (hx - e) - (h - e)
      const Element hx = g->mul(h, x);
      if (hx != e) a(pos[hx], pos[x]) += 1;
      if (h != e) a(pos[h], pos[x]) -= 1;
    }
    act.push_back(std::move(a));
  }
  return GammaModule::create(g, n - 1, IntMatrix(n - 1, 0), std::move(act));
}

GammaModule induced_module(GroupPtr g, const Subgroup& h) {
  if (!is_subgroup(*g, h)) throw GroupError("induced_module: not a subgroup");
  const std::size_t n = g->order();
  std::vector<std::size_t> coset(n, n);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    for (Element y : h.elements) coset[g->mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t r = reps.size();
  std::vector<IntMatrix> act;
  for (Element s : g->generator_indices()) {
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i) a(coset[g->mul(s, reps[i])], i) = 1;
    act.push_back(std::move(a));
  }
  return GammaModule::create(g, r, IntMatrix(r, 0), std::move(act));
}

GammaModule character_module(GroupPtr g, const Subgroup& kernel) {
  if (!is_subgroup(*g, kernel) || g->order() != 2 * kernel.order())
    throw GroupError("character_module: kernel must be a subgroup of index 2");
  std::vector<IntMatrix> act;
  for (Element s : g->generator_indices()) act.push_back(IntMatrix::from_rows({{kernel.contains(s) ? 1L : -1L}}));
  return GammaModule::create(g, 1, IntMatrix(1, 0), std::move(act));
}

GammaModule direct_sum(const GammaModule& a, const GammaModule& b) {
  if (!(a.group() == b.group())) throw ModuleError("direct_sum: modules over different groups");
  std::vector<IntMatrix> act;
  for (std::size_t s = 0; s < a.generator_action().size(); ++s)
    act.push_back(block_diagonal(a.generator_action()[s], b.generator_action()[s]));
  return GammaModule::create(a.group_ptr(), a.rank() + b.rank(), block_diagonal(a.relations(), b.relations()),
                             std::move(act));
}

GammaModule duplicate_generators(const GammaModule& m) {
  const std::size_t n = m.rank();
  IntMatrix glue(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    glue(i, i) = 1;
    glue(n + i, i) = -1;
  }
  IntMatrix rel = hconcat(vconcat(m.relations(), IntMatrix(n, m.relations().cols())), glue);
  std::vector<IntMatrix> act;
  for (const auto& a : m.generator_action()) act.push_back(block_diagonal(a, a));
  return GammaModule::create(m.group_ptr(), 2 * n, std::move(rel), std::move(act));
}

GammaModule restrict_module(const GammaModule& m, const Subgroup& h) {
  if (!is_subgroup(m.group(), h)) throw GroupError("restrict: not a subgroup of the module's group");
  auto sub = std::make_shared<const CayleyGroup>(subgroup_as_group(m.group(), h));
  std::vector<IntMatrix> act;
  for (Element x : h.generators) act.push_back(m.action(x));
  return GammaModule::create(std::move(sub), m.rank(), m.relations(), std::move(act));
}

GammaModule change_basis(const GammaModule& m, const IntMatrix& p, const IntMatrix& p_inverse) {
  if (!(p * p_inverse).is_identity()) throw PreconditionError("change_basis: matrices are not inverse");
  std::vector<IntMatrix> act;
  for (const auto& a : m.generator_action()) act.push_back(p * a * p_inverse);
  return GammaModule::create(m.group_ptr(), m.rank(), p * m.relations(), std::move(act));
}

}  // namespace wadefect
