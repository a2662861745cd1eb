#pragma once

#include "topfan/fan.hpp"
#include "topfan/simplicial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topfan {

enum class LabelingMode { Unimodular, ToricSign, Mod2 };

struct SignTable {
  std::vector<Simplex> ordered_facets;  // vertex order as supplied
  std::vector<int> signs;
};

struct SignTableResult {
  std::optional<SignTable> table;
  std::vector<std::size_t> contradiction_cycle;  // closed walk of facet indices, empty if consistent
};

// sign rule on ordered facets: replacing one vertex in place flips the determinant sign.
// throws InvalidComplex (not a pseudomanifold), DisconnectedDualGraph
SignTableResult derive_sign_table(int m, const std::vector<Simplex>& ordered_facets, std::size_t seed_facet = 0,
                                  int seed_sign = 1);

struct LabelingProblem {
  SimplicialComplex complex;
  std::vector<Simplex> ordered_facets;  // empty: complex.facets()
  LabelingMode mode = LabelingMode::Unimodular;
  int bound = 1;
  std::optional<std::size_t> normalization_facet;  // index into ordered facets; default lexicographically first
  int n = 0;                                       // 0: dim + 1
  std::vector<int> signs;                          // toric_sign: explicit table, else derived
};

struct SearchOptions {
  bool deterministic = true;
  int threads = 0;                  // 0: TOPFAN_THREADS or hardware
  std::vector<Vertex> vertex_order;  // unpinned vertices; empty: greedy max-constraint
  long long node_limit = -1;
  bool use_certificates = true;     // sign contradiction / pigeonhole short-circuits
};

enum class LabelingStatus { Sat, Unsat, Infeasible, Unknown };

struct LabelingOutcome {
  LabelingStatus status = LabelingStatus::Unknown;
  std::vector<ZVec> v;                  // Sat: v[i-1]
  std::vector<std::int64_t> facet_dets;  // Sat: per ordered facet (unimodular/toric)
  std::vector<std::uint32_t> classes;    // Sat in mod2: bitmask classes
  int bound = 0;
  std::string certificate;               // "sign-contradiction", "pigeonhole-clique", "mod2-exhausted"
  std::vector<std::size_t> cycle;
  std::vector<Vertex> clique;
  std::vector<int> signs;
  long long nodes = 0;
};

LabelingOutcome search_labeling(const LabelingProblem& problem, const SearchOptions& options = {});

// independent rational-determinant check
bool verify_labeling(const std::vector<Simplex>& ordered_facets, const std::vector<ZVec>& v, LabelingMode mode,
                     const std::vector<int>& signs = {});

struct Mod2Result {
  enum class Status { Feasible, Infeasible, Unknown } status = Status::Unknown;
  bool pigeonhole = false;
  std::vector<Vertex> clique;
  std::vector<std::uint32_t> classes;
  long long nodes = 0;
};

Mod2Result mod2_obstruction(const SimplicialComplex& k, int n, long long node_limit = -1);
std::vector<Vertex> max_clique(const Graph& g, std::size_t stop_at = 0);

// polynomial system on the Barnette transition matrix. d[i][j] = d_{i+1, j+1}
using BarnetteMatrix = std::array<std::array<std::int64_t, 4>, 4>;

struct EquationCheck {
  std::string name;
  bool holds = false;
};

struct BarnetteEquationReport {
  std::vector<EquationCheck> equations;
  bool all_hold() const;
};

BarnetteEquationReport verify_barnette_system(const BarnetteMatrix& d);
// assignments of the 12 off-diagonal unknowns in [-bound, bound] satisfying the system (with d_ii = -1)
long long count_barnette_solutions(int bound, long long* nodes = nullptr);

// polynomials in the 12 off-diagonal d_ij with d_ii = -1 substituted
class IntPoly {
 public:
  using Exps = std::array<std::uint8_t, 12>;
  static int var_index(int i, int j);  // 1-based, i != j
  static IntPoly constant(std::int64_t c);
  static IntPoly d(int i, int j);      // d_ii gives -1

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, std::int64_t>& terms() const { return terms_; }
  // substitute known variables (known[v] set)
  IntPoly substitute(const std::array<std::optional<std::int64_t>, 12>& known) const;
  std::string str() const;

 private:
  void add(const Exps& e, std::int64_t c);
  std::map<Exps, std::int64_t> terms_;
};

struct NamedEquation {
  std::string name;
  IntPoly lhs_minus_rhs;  // equation holds iff this vanishes
};

std::vector<NamedEquation> barnette_equations();
// det[v(p1),..,v(p4)] for facet number 1..19 of the ordered Barnette list, symbolic
IntPoly barnette_symbolic_determinant(int facet_no);

struct DeductionStep {
  std::string equation;
  std::string conclusion;
};

struct CaseRefutation {
  std::string assumption;
  std::vector<DeductionStep> steps;
  bool refuted = false;
};

struct BarnetteCertificate {
  std::string case_split;
  std::vector<CaseRefutation> cases;
  bool complete() const;
};

BarnetteCertificate barnette_infeasibility_certificate();

// four-colour construction over supplied vertex positions
TopologicalFan realize_2sphere(const SimplicialComplex& k, const std::vector<QVec>& positions,
                               long long node_limit = 1000000);

TopologicalFan stellar_subdivide_fan(const TopologicalFan& fan, const Simplex& sigma);
TopologicalFan suspend_fan(const TopologicalFan& fan);
TopologicalFan product_fan(const TopologicalFan& a, const TopologicalFan& b);

}  // namespace topfan
