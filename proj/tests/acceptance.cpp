// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wadefect/catalog.hpp"
#include "wadefect/defect.hpp"
#include "wadefect/random_instances.hpp"
#include "wadefect/selfcheck.hpp"
#include "wadefect/smith.hpp"

using namespace wadefect;

namespace {

// budgets and sizes
constexpr double kScenarioBudgetMs = 1000.0;
constexpr double kOracleBudgetS = 60.0;
constexpr double kLinalgBudgetS = 30.0;
constexpr std::size_t kOracleInstances = 240;
constexpr std::size_t kRandomScenarios = 150;
constexpr std::size_t kMatrices = 500;
constexpr std::size_t kMaxDim = 8;
constexpr long kEntryBound = 9;
constexpr long kRelationBound = 4;
constexpr std::size_t kMaxModuleRank = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

FinAbInvariants cyclic(long d) { return FinAbInvariants::from_cyclic_orders({Integer(d)}); }

FinAbInvariants exact(const Scenario& sc) { return defect(sc, DefectOptions{false}).invariants; }

std::vector<Subgroup> order_two(const CayleyGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& c : cyclic_subgroups(g))
    if (c.order() == 2) out.push_back(c);
  return out;
}

void ac1(Outcome& o) {
  const auto g = named_group("klein");
  const auto m = norm_one_module(g);
  const auto whole = whole_group(*g);
  const auto twos = order_two(*g);
  struct Case {
    const char* label;
    Scenario sc;
    FinAbInvariants expected;
  };
  const std::vector<Case> cases{
      {"a", {g, m, {whole, whole}, {}}, cyclic(2)},
      {"b", {g, m, {whole, whole}, {whole}}, {}},
      {"c", {g, m, {twos[0], twos[1], twos[2]}, {}}, {}},
      {"d", {g, induced_module(g, trivial_subgroup(*g)), {whole, whole}, {}}, {}},
  };
  for (const auto& c : cases) {
    for (bool shortcuts : {false, true}) {
      const auto t = Clock::now();
      const auto r = defect(c.sc, DefectOptions{shortcuts});
      const double ms = 1000.0 * seconds_since(t);
      if (!(r.invariants == c.expected))
        o.fail(std::string("(") + c.label + ") got " + r.invariants.pretty() + ", expected " + c.expected.pretty());
      if (ms >= kScenarioBudgetMs) o.fail(std::string("(") + c.label + ") took " + std::to_string(ms) + " ms");
      if (!shortcuts) o.detail << c.label << "=" << r.invariants.pretty() << " (" << ms << " ms) ";
    }
  }
}

void ac2(Outcome& o) {
  const auto g = named_group("klein");
  const auto m = norm_one_module(g);
  const auto full = h1(m, whole_group(*g));
  if (!(full == cyclic(2)) || !(h1_bar(m, whole_group(*g)) == cyclic(2))) o.fail("H1(G, I_G) = " + full.pretty());
  for (const auto& c : order_two(*g)) {
    const auto v = h1(m, c);
    if (!v.is_trivial() || !h1_bar(m, c).is_trivial()) o.fail("H1(order 2, I_G) = " + v.pretty());
  }
  o.detail << "H1(G)=" << full.pretty() << ", three order-2 subgroups trivial";
}

void ac3(Outcome& o) {
  Rng rng(20260101);
  const auto names = test_group_names();
  const auto t = Clock::now();
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < kOracleInstances; ++i) {
    const std::string& name = names[i % names.size()];
    const auto g = named_group(name);
    const auto m = random_module(rng, g, RandomModuleOptions{kMaxModuleRank, kRelationBound});
    validate(m);
    const auto h = i % 3 == 0 ? whole_group(*g) : random_subgroup(rng, *g);
    const auto a = h1(m, h);
    const auto b = h1_bar(m, h);
    nontrivial += !a.is_trivial();
    if (!(a == b)) o.fail("instance " + std::to_string(i) + " over " + name + ": " + a.pretty() + " vs " + b.pretty());
  }
  const double s = seconds_since(t);
  if (s >= kOracleBudgetS) o.fail("took " + std::to_string(s) + " s");
  o.detail << kOracleInstances << " instances, " << nontrivial << " nontrivial, " << s << " s";
}

void ac4(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& name : test_group_names()) {
    const auto g = named_group(name);
    const auto regular = induced_module(g, trivial_subgroup(*g));
    const auto subs = all_subgroups(*g);
    for (const auto& m : {regular, direct_sum(regular, regular)}) {
      const auto y = GammaLattice::from_module(m);
      std::vector<Subgroup> noncyclic;
      for (const auto& h : subs) {
        ++checks;
        if (!h1(m, h).is_trivial()) o.fail("h1 over " + name);
        if (!tate_h_minus1(y, h).is_trivial()) o.fail("tate over " + name);
        if (!is_cyclic(*g, h)) noncyclic.push_back(h);
        if (!exact({g, m, {h}, {}}).is_trivial()) o.fail("defect over " + name);
      }
      if (!exact({g, m, noncyclic, {}}).is_trivial()) o.fail("defect over " + name);
      if (!exact({g, m, subs, {}}).is_trivial()) o.fail("defect over " + name);
    }
  }
  o.detail << checks << " (group, subgroup, k) triples";
}

void ac5(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& name : test_group_names()) {
    const auto g = named_group(name);
    const auto z = trivial_module(g, 1);
    for (const auto& h : all_subgroups(*g)) {
      ++checks;
      const auto a = h1(z, h);
      const auto b = abelianization(subgroup_as_group(*g, h));
      if (!(a == b)) o.fail(name + ": " + a.pretty() + " vs " + b.pretty());
    }
  }
  o.detail << checks << " subgroups";
}

// Random scenarios followed by norm-one tori of the non-cyclic groups with
// every single non-cyclic subgroup, and all of them at once, as S.
std::vector<Scenario> scenario_pool(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Scenario> pool;
  for (std::size_t i = 0; i < kRandomScenarios; ++i) pool.push_back(random_scenario(rng));
  for (const char* name : {"klein", "S3", "D4", "Q8", "A4"}) {
    const auto g = named_group(name);
    const auto m = norm_one_module(g);
    std::vector<Subgroup> noncyclic;
    for (const auto& h : all_subgroups(*g))
      if (!is_cyclic(*g, h)) noncyclic.push_back(h);
    for (const auto& h : noncyclic) pool.push_back({g, m, {h}, {}});
    pool.push_back({g, m, noncyclic, {}});
    pool.push_back({g, direct_sum(m, trivial_module(g, 1)), noncyclic, {}});
  }
  return pool;
}

void ac6(Outcome& o) {
  Rng rng(424243);
  const auto pool = scenario_pool(424242);
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Scenario& sc = pool[i];
    const CayleyGroup& g = *sc.group;
    const auto base = exact(sc);
    nontrivial += !base.is_trivial();
    const std::string at = "scenario " + std::to_string(i);
    if (!base.is_finite()) o.fail(at + ": infinite");
    if (!(exact(reduce_to_noncyclic(sc)) == base)) o.fail(at + ": reduction changed the result");
    Scenario more = sc;
    more.sc_subgroups.push_back(random_subgroup(rng, g));
    if (base.order() % exact(more).order() != 0) o.fail(at + ": complement growth did not divide");
    const Element x = static_cast<Element>(rng() % g.order());
    if (!sc.s_subgroups.empty()) {
      Scenario conj = sc;
      conj.s_subgroups.push_back(conjugate_subgroup(g, sc.s_subgroups[rng() % sc.s_subgroups.size()], x));
      if (!(exact(conj) == base)) o.fail(at + ": conjugate in S changed the result");
    }
    if (!sc.sc_subgroups.empty()) {
      Scenario conj = sc;
      conj.sc_subgroups.push_back(conjugate_subgroup(g, sc.sc_subgroups[rng() % sc.sc_subgroups.size()], x));
      if (!(exact(conj) == base)) o.fail(at + ": conjugate in the complement changed the result");
    }
  }
  o.detail << pool.size() << " scenarios, " << nontrivial << " nontrivial";
}

void ac7(Outcome& o) {
  const auto pool = scenario_pool(424242);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Scenario& sc = pool[i];
    Scenario doubled = sc;
    doubled.module = duplicate_generators(sc.module);
    const auto a = exact(sc), b = exact(doubled);
    if (!(a == b)) o.fail("scenario " + std::to_string(i) + ": " + a.pretty() + " vs " + b.pretty());
  }
  o.detail << pool.size() << " scenarios";
}

// every nonzero box vector v with A v = 0 lies in the span of k
bool saturated_in_box(const IntMatrix& a, const IntMatrix& k, long radius) {
  const std::size_t n = a.cols();
  std::vector<long> v(n, -radius);
  std::vector<std::vector<long>> rows(a.rows(), std::vector<long>(n));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j).get_si();
  while (true) {
    bool zero = true, nonzero = false;
    for (const auto& r : rows) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += r[j] * v[j];
      if (s != 0) {
        zero = false;
        break;
      }
    }
    for (long x : v) nonzero |= x != 0;
    if (zero && nonzero) {
      IntVector w(v.begin(), v.end());
      if (!membership(w, k)) return false;
    }
    std::size_t i = 0;
    while (i < n && v[i] == radius) v[i++] = -radius;
    if (i == n) return true;
    ++v[i];
  }
}

void ac8(Outcome& o) {
  Rng rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, kMaxDim);
  const auto t = Clock::now();
  std::size_t with_kernel = 0;
  for (std::size_t i = 0; i < kMatrices; ++i) {
    // every third matrix gets a repeated row
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -kEntryBound, kEntryBound);
    if (i % 3 == 0 && a.rows() > 1) {
      const auto src = rng() % a.rows(), dst = (src + 1) % a.rows();
      for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) = a(src, c);
    }
    const std::string why = smith_postcondition_failure(a);
    if (!why.empty()) o.fail("matrix " + std::to_string(i) + ": " + why);
    const IntMatrix k = kernel_basis(a);
    if (!(a * k).is_zero()) o.fail("matrix " + std::to_string(i) + ": kernel vector not annihilated");
    if (k.cols() + matrix_rank(a) != a.cols()) o.fail("matrix " + std::to_string(i) + ": kernel rank");
    if (k.cols() == 0) continue;
    ++with_kernel;
    for (const auto& d : smith_diagonal(k))
      if (d != 1) o.fail("matrix " + std::to_string(i) + ": kernel lattice not saturated");
    const long radius = a.cols() <= 5 ? 2 : 1;
    if (!saturated_in_box(a, k, radius)) o.fail("matrix " + std::to_string(i) + ": box kernel vector outside span");
  }
  const double s = seconds_since(t);
  if (s >= kLinalgBudgetS) o.fail("took " + std::to_string(s) + " s");
  o.detail << kMatrices << " matrices, " << with_kernel << " with nonzero kernel, " << s << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"AC1 Klein scenarios (Z/2, 0, 0, 0), < 1 s each", ac1},
      {"AC2 H1(Klein, I) = Z/2, order-2 subgroups trivial", ac2},
      {"AC3 h1 == h1_bar on random instances, < 60 s", ac3},
      {"AC4 free modules: H1, Tate and defect vanish", ac4},
      {"AC5 H1(trivial Z) = abelianization", ac5},
      {"AC6 reduction, complement and conjugation laws", ac6},
      {"AC7 cover independence", ac7},
      {"AC8 Smith and kernel postconditions, < 30 s", ac8},
  };
  int failures = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << label << "  [" << o.detail.str() << "]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
