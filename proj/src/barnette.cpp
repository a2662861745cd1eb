#include "topfan/errors.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>
#include <functional>

namespace topfan {

namespace {

using Known = std::array<std::optional<std::int64_t>, 12>;

std::string var_name(int idx) {
  static const char* names[] = {"d12", "d13", "d14", "d21", "d23", "d24", "d31", "d32", "d34", "d41", "d42", "d43"};
  return names[idx];
}

}  // namespace

int IntPoly::var_index(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) throw BadParameters("d_ij index out of range");
  return (i - 1) * 3 + (j < i ? j - 1 : j - 2);
}

IntPoly IntPoly::constant(std::int64_t c) {
  IntPoly p;
  p.add(Exps{}, c);
  return p;
}

IntPoly IntPoly::d(int i, int j) {
  if (i == j) return constant(-1);
  IntPoly p;
  Exps e{};
  e[var_index(i, j)] = 1;
  p.add(e, 1);
  return p;
}

void IntPoly::add(const Exps& e, std::int64_t c) {
  if (c == 0) return;
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e{};
      for (int k = 0; k < 12; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.add(e, ca * cb);
    }
  return r;
}

IntPoly IntPoly::substitute(const Known& known) const {
  IntPoly r;
  for (const auto& [e, c] : terms_) {
    Exps rest = e;
    std::int64_t coef = c;
    for (int k = 0; k < 12; ++k)
      if (known[k] && rest[k]) {
        for (int t = 0; t < rest[k]; ++t) coef *= *known[k];
        rest[k] = 0;
      }
    r.add(rest, coef);
  }
  return r;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < 12; ++k)
      for (int t = 0; t < e[k]; ++t) mono += var_name(k);
    std::int64_t a = c < 0 ? -c : c;
    std::string term = (mono.empty() || a != 1) ? std::to_string(a) + mono : mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::vector<NamedEquation> barnette_equations() {
  using P = IntPoly;
  auto d = [](int i, int j) { return P::d(i, j); };
  std::vector<NamedEquation> eqs;
  const int pairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
  for (auto [i, j] : pairs) eqs.push_back({"pair(" + std::to_string(i) + "," + std::to_string(j) + ")", d(i, j) * d(j, i)});
  for (auto [i, j] : pairs)
    eqs.push_back({"column4(" + std::to_string(i) + "," + std::to_string(j) + ")", d(j, 4) + d(i, 4) * d(j, i) + P::constant(1)});
  for (auto [i, j] : pairs)
    eqs.push_back({"row4(" + std::to_string(i) + "," + std::to_string(j) + ")", d(j, i) + d(j, 4) * d(4, i) + P::constant(1)});
  const int triples[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (auto [i, j, k] : triples)
    eqs.push_back({"triple(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                   d(i, j) - d(k, j) - d(4, j) - d(i, j) * d(k, 4) * d(4, k) - P::constant(1)});
  eqs.push_back({"cycle", d(1, 3) * d(3, 2) * d(2, 1) + d(1, 2) * d(2, 3) * d(3, 1)});
  return eqs;
}

IntPoly barnette_symbolic_determinant(int facet_no) {
  auto bs = fixtures::barnette_sphere();
  if (facet_no < 1 || facet_no > static_cast<int>(bs.ordered_facets.size())) throw BadParameters("facet number out of range");
  const auto& f = bs.ordered_facets[facet_no - 1];
  // column c is v(f[c]); v(e_k) = e_k, v(d_i) = (d_i1, .., d_i4)
  std::array<std::array<IntPoly, 4>, 4> m;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) {
      Vertex x = f[c];
      if (x <= 4) m[r][c] = IntPoly::constant(r + 1 == x ? 1 : 0);
      else m[r][c] = IntPoly::d(x - 4, r + 1);
    }
  // Leibniz
  IntPoly det;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inv = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inv += perm[a] > perm[b];
    IntPoly term = IntPoly::constant(inv % 2 ? -1 : 1);
    for (int r = 0; r < 4; ++r) term = term * m[r][perm[r]];
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool BarnetteEquationReport::all_hold() const {
  return std::all_of(equations.begin(), equations.end(), [](const EquationCheck& e) { return e.holds; });
}

BarnetteEquationReport verify_barnette_system(const BarnetteMatrix& d) {
  BarnetteEquationReport rep;
  for (int i = 0; i < 4; ++i) rep.equations.push_back({"diagonal(" + std::to_string(i + 1) + ")", d[i][i] == -1});
  Known known;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) known[IntPoly::var_index(i, j)] = d[i - 1][j - 1];
  for (const auto& eq : barnette_equations()) rep.equations.push_back({eq.name, eq.lhs_minus_rhs.substitute(known).is_zero()});
  return rep;
}

long long count_barnette_solutions(int bound, long long* nodes) {
  auto eqs = barnette_equations();
  // order: the three cyclic pairs, then the d_i4, then the d_4i
  const int order[12][2] = {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {1, 3}, {3, 1},
                            {1, 4}, {2, 4}, {3, 4}, {4, 1}, {4, 2}, {4, 3}};
  std::array<int, 12> slot{};
  for (int s = 0; s < 12; ++s) slot[s] = IntPoly::var_index(order[s][0], order[s][1]);
  // equations become checkable once their last variable is set
  std::vector<std::vector<const IntPoly*>> ready(12);
  for (const auto& eq : eqs) {
    int last = -1;
    for (const auto& [e, c] : eq.lhs_minus_rhs.terms())
      for (int s = 0; s < 12; ++s)
        if (e[slot[s]]) last = std::max(last, s);
    if (last >= 0) ready[last].push_back(&eq.lhs_minus_rhs);
  }
  Known known;
  long long count = 0, visited = 0;
  std::function<void(int)> go = [&](int s) {
    ++visited;
    if (s == 12) {
      ++count;
      return;
    }
    for (std::int64_t val = -bound; val <= bound; ++val) {
      known[slot[s]] = val;
      bool ok = true;
      for (const auto* p : ready[s])
        if (!p->substitute(known).is_zero()) {
          ok = false;
          break;
        }
      if (ok) go(s + 1);
    }
    known[slot[s]].reset();
  };
  go(0);
  if (nodes) *nodes = visited;
  return count;
}

namespace {

struct Engine {
  Known known;
  std::array<bool, 12> nonzero{};
  std::vector<DeductionStep> steps;

  void set(int idx, std::int64_t value, const std::string& why) {
    known[idx] = value;
    steps.push_back({why, var_name(idx) + " = " + std::to_string(value)});
  }

  // true on contradiction
  bool run(const std::vector<NamedEquation>& eqs) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& eq : eqs) {
        IntPoly p = eq.lhs_minus_rhs.substitute(known);
        if (p.is_zero()) continue;
        const auto& terms = p.terms();
        std::vector<int> vars;
        for (const auto& [e, c] : terms)
          for (int k = 0; k < 12; ++k)
            if (e[k] && std::find(vars.begin(), vars.end(), k) == vars.end()) vars.push_back(k);
        if (vars.empty()) {
          steps.push_back({eq.name, "reduces to " + p.str() + " = 0, contradiction"});
          return true;
        }
        if (vars.size() == 1) {
          int x = vars[0];
          std::int64_t a = 0, b = 0;
          bool linear = true;
          for (const auto& [e, c] : terms) {
            if (e[x] == 0) b += c;
            else if (e[x] == 1) a += c;
            else linear = false;
          }
          if (linear && a != 0) {
            if (b % a != 0) {
              steps.push_back({eq.name, "needs non-integral " + var_name(x) + ", contradiction"});
              return true;
            }
            std::int64_t val = -b / a;
            if (nonzero[x] && val == 0) {
              steps.push_back({eq.name, "forces " + var_name(x) + " = 0 against the assumption, contradiction"});
              return true;
            }
            set(x, val, eq.name);
            progress = true;
            continue;
          }
        }
        if (terms.size() == 1) {
          const auto& e = terms.begin()->first;
          std::vector<int> unknown;
          for (int k = 0; k < 12; ++k)
            if (e[k] && !nonzero[k]) unknown.push_back(k);
          if (unknown.empty()) {
            steps.push_back({eq.name, "reduces to " + p.str() + " = 0 with nonzero factors, contradiction"});
            return true;
          }
          if (unknown.size() == 1) {
            set(unknown[0], 0, eq.name);
            progress = true;
          }
        }
      }
    }
    return false;
  }
};

}  // namespace

bool BarnetteCertificate::complete() const {
  return cases.size() == 5 &&
         std::all_of(cases.begin(), cases.end(), [](const CaseRefutation& c) { return c.refuted; });
}

BarnetteCertificate barnette_infeasibility_certificate() {
  BarnetteCertificate cert;
  cert.case_split =
      "x1=d21, x2=d32, x3=d13 (cyclic). Either all vanish, all are nonzero, or some x_r != 0 with x_{r+1} = 0.";
  auto eqs = barnette_equations();
  const int x[3] = {IntPoly::var_index(2, 1), IntPoly::var_index(3, 2), IntPoly::var_index(1, 3)};

  struct Case {
    std::string label;
    std::vector<int> zero, nonzero;
  };
  std::vector<Case> cases{{"d21 = d32 = d13 = 0", {x[0], x[1], x[2]}, {}},
                          {"d21, d32, d13 all nonzero", {}, {x[0], x[1], x[2]}}};
  for (int r = 0; r < 3; ++r)
    cases.push_back({var_name(x[r]) + " != 0, " + var_name(x[(r + 1) % 3]) + " = 0", {x[(r + 1) % 3]}, {x[r]}});
  for (const auto& c : cases) {
    Engine e;
    for (int z : c.zero) e.set(z, 0, "assumption");
    for (int nz : c.nonzero) {
      e.nonzero[nz] = true;
      e.steps.push_back({"assumption", var_name(nz) + " != 0"});
    }
    CaseRefutation ref{c.label, {}, false};
    ref.refuted = e.run(eqs);
    ref.steps = std::move(e.steps);
    cert.cases.push_back(std::move(ref));
  }
  return cert;
}

}  // namespace topfan
