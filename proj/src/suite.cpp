#include "skewbi/suite.hpp"

#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "skewbi/oddgraph.hpp"

namespace skewbi {

bool SuiteReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.passed) return false;
  return true;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& c : report.criteria)
    criteria.push_back({{"index", c.index},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail}});
  return {{"schema", 1},
          {"criteria", std::move(criteria)},
          {"all_pass", report.all_pass()}};
}

namespace {

// Aggregates one criterion: records the first failure message and counts
// the checks performed.
class Check {
 public:
  void require(bool ok, const std::string& label) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = label;
  }

  CriterionResult result(int index, const std::string& name) const {
    CriterionResult r{index, name, failure_.empty(), {}};
    r.detail = failure_.empty()
                   ? std::to_string(count_) + " checks"
                   : "failed: " + failure_;
    return r;
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

Word random_word(std::mt19937& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> len(1, max_degree);
  std::uniform_int_distribution<int> gen(0, 3);
  Word w(len(rng));
  for (auto& g : w) g = static_cast<Gen>(gen(rng));
  return w;
}

Matrix word_matrix(const Representation& rep, const Word& w) {
  Matrix out = Matrix::identity(rep.dim);
  const Matrix* gens[4] = {&rep.E, &rep.F, &rep.H, &rep.rho};
  for (Gen g : w) out = out * (*gens[static_cast<int>(g)]);
  return out;
}

// --- Criterion 1: PBW rewriting vs. splitting and matrix evaluation ----

CriterionResult criterion1(const SuiteCaps& caps, std::mt19937& rng) {
  Check check;
  std::vector<Representation> reps;
  for (unsigned n = 0; n <= 6; ++n)
    for (int sign : {+1, -1}) reps.push_back(build_irreducible({n, sign}));

  for (unsigned trial = 0; trial < caps.ring_words; ++trial) {
    const Word w = random_word(rng, caps.ring_degree);
    const RingElement nf = normal_form(w);

    // Rewriting respects concatenation: every split multiplies back.
    std::uniform_int_distribution<std::size_t> cut(0, w.size());
    const std::size_t k = cut(rng);
    const RingElement left = normal_form(Word(w.begin(), w.begin() + k));
    const RingElement right = normal_form(Word(w.begin() + k, w.end()));
    check.require(multiply(left, right) == nf, "split product != normal form");

    // Oracle: evaluation on the irreducible modules.
    for (const auto& rep : reps)
      check.require(act(rep, nf) == word_matrix(rep, w),
                    "matrix evaluation mismatch");
  }

  // Associativity of the normalized product on random triples.
  for (unsigned trial = 0; trial < caps.ring_words / 5; ++trial) {
    const RingElement x = normal_form(random_word(rng, caps.ring_degree));
    const RingElement y = normal_form(random_word(rng, caps.ring_degree));
    const RingElement z = normal_form(random_word(rng, caps.ring_degree));
    check.require(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)),
                  "associativity");
  }
  return check.result(1, "PBW normal form vs. splitting and module oracle");
}

// --- Criterion 2: Hopf laws -------------------------------------------

using TripleTensor = std::map<std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>,
                              Rational>;

void add_triple(TripleTensor& t, const PBWMonomial& a, const PBWMonomial& b,
                const PBWMonomial& c, const Rational& coeff) {
  auto it = t.emplace(std::make_tuple(a, b, c), 0).first;
  it->second += coeff;
  if (it->second == 0) t.erase(it);
}

TripleTensor delta_left(const RingElement& x) {  // (Delta x id) Delta
  TripleTensor out;
  const TensorElement dx = comultiply(x);
  for (const auto& [key, coeff] : dx.terms()) {
    const TensorElement inner = comultiply(RingElement::monomial(key.first));
    for (const auto& [pair, c2] : inner.terms())
      add_triple(out, pair.first, pair.second, key.second, coeff * c2);
  }
  return out;
}

TripleTensor delta_right(const RingElement& x) {  // (id x Delta) Delta
  TripleTensor out;
  const TensorElement dx = comultiply(x);
  for (const auto& [key, coeff] : dx.terms()) {
    const TensorElement inner = comultiply(RingElement::monomial(key.second));
    for (const auto& [pair, c2] : inner.terms())
      add_triple(out, key.first, pair.first, pair.second, coeff * c2);
  }
  return out;
}

CriterionResult criterion2(const SuiteCaps& caps, std::mt19937& rng) {
  Check check;
  std::vector<RingElement> samples;
  for (Gen g : {Gen::E, Gen::F, Gen::H, Gen::Rho})
    samples.push_back(RingElement::generator(g));
  for (unsigned trial = 0; trial < caps.hopf_words; ++trial)
    samples.push_back(normal_form(random_word(rng, caps.ring_degree)));

  const RingElement unit{Rational(1)};
  for (const auto& x : samples) {
    check.require(delta_left(x) == delta_right(x), "coassociativity");

    RingElement counit_left, counit_right, antipode_left, antipode_right;
    const TensorElement dx = comultiply(x);
    for (const auto& [key, coeff] : dx.terms()) {
      const RingElement a = RingElement::monomial(key.first);
      const RingElement b = RingElement::monomial(key.second);
      counit_left = counit_left + counit(a) * coeff * b;
      counit_right = counit_right + counit(b) * coeff * a;
      antipode_left = antipode_left + coeff * multiply(antipode(a), b);
      antipode_right = antipode_right + coeff * multiply(a, antipode(b));
    }
    check.require(counit_left == x, "(eps x id) Delta != id");
    check.require(counit_right == x, "(id x eps) Delta != id");
    check.require(antipode_left == counit(x) * unit, "m(S x id) Delta != eps");
    check.require(antipode_right == counit(x) * unit, "m(id x S) Delta != eps");
  }

  // Delta and eps are algebra maps; S is an anti-automorphism.
  for (unsigned trial = 0; trial < caps.hopf_words / 2; ++trial) {
    const RingElement x = normal_form(random_word(rng, caps.ring_degree / 2));
    const RingElement y = normal_form(random_word(rng, caps.ring_degree / 2));
    const RingElement xy = multiply(x, y);
    check.require(comultiply(xy) == comultiply(x) * comultiply(y),
                  "Delta not multiplicative");
    check.require(counit(xy) == counit(x) * counit(y),
                  "eps not multiplicative");
    check.require(antipode(xy) == multiply(antipode(y), antipode(x)),
                  "S not antimultiplicative");
  }
  return check.result(2, "Hopf laws: coassociativity, counit, antipode");
}

// --- Criterion 3: defining relations and Casimir scalars --------------

CriterionResult criterion3(const SuiteCaps& caps) {
  Check check;
  const RingElement lambda = casimir();
  for (unsigned n = 0; n <= caps.module_n_max; ++n)
    for (int sign : {+1, -1}) {
      const Representation rep = build_irreducible({n, sign});
      check.require(verify_defining_relations(rep).all_pass(),
                    "relations on " + to_string(IrrLabel{n, sign}));
      const Rational scalar = Rational(n) * (Rational(n) + 2) / 2;
      check.require(act(rep, lambda) == Matrix::identity(rep.dim) * scalar,
                    "Casimir scalar on " + to_string(IrrLabel{n, sign}));
    }
  for (unsigned omega = 0; omega <= caps.powerset_max; ++omega)
    check.require(verify_defining_relations(powerset_rep(omega)).all_pass(),
                  "relations on powerset rep " + std::to_string(omega));
  return check.result(3, "defining relations and Casimir scalars");
}

// --- Criterion 4: Clebsch-Gordan labels and rho signs -----------------

CriterionResult criterion4(const SuiteCaps& caps) {
  Check check;
  for (unsigned m = 0; m <= caps.cg_max; ++m)
    for (unsigned n = m; n <= caps.cg_max; ++n)
      for (int ds : {+1, -1})
        for (int es : {+1, -1}) {
          const auto summands = cg_decompose({m, ds}, {n, es});
          check.require(summands.size() == m + 1, "summand count");
          std::size_t total = 0;
          for (unsigned p = 0; p <= m && p < summands.size(); ++p) {
            const auto& s = summands[p];
            const int expect_sign = ((p % 2 == 0) ? 1 : -1) * ds * es;
            check.require(s.label.n == m + n - 2 * p &&
                              s.label.sign == expect_sign,
                          "label at p=" + std::to_string(p));
            total += s.label.n + 1;
          }
          check.require(total == (m + 1) * (n + 1), "dimension bookkeeping");
        }
  return check.result(4, "Clebsch-Gordan labels, rho signs, dimensions");
}

// --- Criterion 5: powerset multiplicities and their recurrence --------

Rational powerset_multiplicity(long D, long i) {
  return Rational(D - 2 * i + 1, D - i + 1) * Rational(binomial(D, i));
}

CriterionResult criterion5(const SuiteCaps& caps) {
  Check check;
  for (unsigned omega = 0; omega <= caps.powerset_max; ++omega) {
    const auto formula = powerset_decompose(omega);
    const auto computed = isotypic_components(powerset_rep(omega));
    check.require(formula.size() == computed.size(), "component count");
    for (const auto& [label, mult] : formula) {
      bool found = false;
      for (const auto& c : computed)
        if (c.label == label && c.multiplicity == mult) found = true;
      check.require(found, "multiplicity of " + to_string(label) + " in 2^" +
                               std::to_string(omega));
    }
  }
  for (long D = 1; D <= static_cast<long>(caps.recurrence_max); ++D)
    for (long i = 1; 2 * i <= D; ++i)
      check.require(powerset_multiplicity(D - 1, i - 1) +
                            powerset_multiplicity(D - 1, i) ==
                        powerset_multiplicity(D, i),
                    "recurrence at D=" + std::to_string(D));
  return check.result(5, "powerset multiplicities: formula and recurrence");
}

// --- Criteria 6-8: the V(1) sweep --------------------------------------

// Cubic consequences of the defining relations; `everywhere` accumulates
// criterion 12.
bool bi_cubic_identities(const BITriple& t) {
  const CentralElements ce = central_elements(t);
  const Matrix& x = t.X;
  const Matrix lhs1 =
      x * x * t.Y + x * t.Y * x * Rational(2) + t.Y * x * x - t.Y;
  const Matrix lhs2 =
      x * x * t.Z + x * t.Z * x * Rational(2) + t.Z * x * x - t.Z;
  return lhs1 == ce.kappa * x * Rational(2) + ce.mu &&
         lhs2 == ce.mu * x * Rational(2) + ce.kappa;
}

struct SweepState {
  Check c6, c7, c8;
  Check everywhere;  // criterion 12 accumulator
};

void sweep_v1(const SuiteCaps& caps, SweepState& state) {
  for (unsigned m = 0; m <= caps.v1_max; ++m)
    for (unsigned n = m; n <= caps.v1_max; ++n)
      for (int ds : {+1, -1})
        for (int es : {+1, -1}) {
          const TensorRepresentation t = tensor_rep(
              build_irreducible({m, ds}), build_irreducible({n, es}));
          const std::string tag = " on L_" + std::to_string(m) +
                                  (ds > 0 ? "+" : "-") + " x L_" +
                                  std::to_string(n) + (es > 0 ? "+" : "-");
          if ((m + n) % 2 == 0) {
            state.c7.require(weight_subspace(t, 1).dim() == 0,
                             "V(1) nonzero at even m+n" + tag);
            continue;
          }

          V1Module v1;
          try {
            v1 = bi_on_v1(t);  // asserts closure, {X,Y}=Z, kappa=lambda=0
          } catch (const std::exception& e) {
            state.c6.require(false, std::string(e.what()) + tag);
            continue;
          }
          const std::size_t dim = v1.basis.dim();
          state.c7.require(dim == m + 1, "dim V(1)" + tag);

          const CentralElements ce = central_elements(v1.triple);
          const Matrix id = Matrix::identity(dim);
          const Rational cm = Rational(m) * (Rational(m) + 2) / 2;
          const Rational cn = Rational(n) * (Rational(n) + 2) / 2;
          state.c6.require(ce.kappa == Matrix(dim, dim), "kappa != 0" + tag);
          state.c6.require(ce.lambda == Matrix(dim, dim), "lambda != 0" + tag);
          state.c6.require(ce.mu == id * (cm - cn), "mu scalar" + tag);
          state.c6.require(bi_casimir(v1.triple) == id * (cm + cn + Rational(3, 4)),
                           "Casimir" + tag);
          state.everywhere.require(bi_cubic_identities(v1.triple),
                                   "cubic identities" + tag);

          state.c7.require(is_irreducible_matrix(v1.triple),
                           "Burnside" + tag);
          state.c7.require(leonard_check(v1.triple).is_leonard,
                           "Leonard" + tag);

          // Predicted name vs. the matrices, both factor orders.
          const BIModuleParams predicted =
              identify_v1(m, n, ds, es, FactorOrder::AsGiven);
          state.c8.require(
              v1.identification &&
                  identification_consistent(predicted, *v1.identification),
              "identification" + tag);
        }

  // Closed-form w basis against the restriction, sign pair (+,+).
  for (unsigned m = 0; m <= caps.v1_max; ++m)
    for (unsigned n = m + 1; n <= caps.v1_max; n += 2) {
      const std::string tag =
          " at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
      const WBasis w = explicit_w_basis(m, n);
      const TensorRepresentation t =
          tensor_rep(build_irreducible({m, +1}), build_irreducible({n, +1}));
      const V1Module v1 = bi_on_v1(t);
      const auto change = solve(v1.basis.basis, w.basis);
      if (!change) {
        state.c8.require(false, "w basis outside V(1)" + tag);
        continue;
      }
      state.c8.require(v1.triple.X * *change == *change * w.X,
                       "X closed form" + tag);
      state.c8.require(v1.triple.Y * *change == *change * w.Y,
                       "Y closed form" + tag);
      const Rational expected_trace =
          (m % 2 == 0) ? Rational(n + 1, 2) : Rational(m + 1, 2);
      state.c8.require(v1.triple.X.trace() == expected_trace,
                       "X trace" + tag);
    }
}

// --- Criteria 9, 11: the parameter grid --------------------------------

struct GridState {
  Check c9, c11;
};

void sweep_grid(const SuiteCaps& caps, GridState& grid, Check& everywhere) {
  std::vector<Rational> values;
  for (long k = -6; k <= 6; ++k) values.push_back(Rational(k, 2));

  for (unsigned n = 0; n <= caps.grid_n_max; ++n) {
    const Parity parity = (n % 2 == 0) ? Parity::Odd : Parity::Even;
    for (const Rational& a : values)
      for (const Rational& b : values)
        for (const Rational& c : values) {
          const BIModuleParams p{parity, n, a, b, c, {}};
          if (!is_irreducible_params(p)) continue;
          const std::string tag = " for " + to_string(p);
          const BITriple t = build_bi_module(p);

          bool leonard;
          try {
            leonard = leonard_check(t).is_leonard;
          } catch (const std::exception& e) {
            grid.c9.require(false, std::string(e.what()) + tag);
            continue;
          }
          grid.c9.require(leonard == leonard_predict(p),
                          "predictor mismatch" + tag);

          try {
            grid.c11.require(
                identification_consistent(p, identify_irreducible(t)),
                "round trip" + tag);
          } catch (const std::exception& e) {
            grid.c11.require(false, std::string(e.what()) + tag);
          }
          everywhere.require(bi_cubic_identities(t), "cubic identities" + tag);
        }
  }
}

// --- Criterion 10: odd graphs ------------------------------------------

CriterionResult criterion10(const SuiteCaps& caps, Check& everywhere) {
  Check check;
  const unsigned top = caps.include_d5 ? 5u : std::min(caps.max_d, 4u);
  for (unsigned d = 1; d <= top; ++d) {
    const std::string tag = " at d=" + std::to_string(d);
    const OddGraph g = build_odd_graph(d);
    const BITriple images = terwilliger_images(g, 0);
    check.require(verify_homomorphism(images).all_pass(),
                  "homomorphism relations" + tag);
    everywhere.require(bi_cubic_identities(images),
                       "cubic identities on T(x0)" + tag);

    const MatchReport match = match_with_v1(d, 0);
    check.require(match.all_pass(), "V(1) comparison" + tag);
    check.require(Integer(match.v1_dim) == binomial(2 * d + 1, d),
                  "dim V(1)" + tag);

    const DecompositionReport r = decompose_standard_module(d, 0);
    check.require(r.dimension_ok, "dimension sum" + tag);
    check.require(r.spectrum_partition_ok, "spectrum partition" + tag);
    for (const auto& s : r.summands) {
      check.require(s.leonard, "Leonard summand" + tag);
      check.require(s.identification_consistent,
                    "summand identification" + tag);
    }

    if (d == 2) {
      // Petersen oracle: full characteristic polynomial of A.
      const auto roots = rational_roots(characteristic_polynomial(g.A));
      const std::vector<std::pair<Rational, std::size_t>> petersen = {
          {-2, 4}, {1, 5}, {3, 1}};
      check.require(roots && roots->roots == petersen, "Petersen spectrum");
      check.require(r.adjacency_spectrum == petersen,
                    "Petersen spectrum in the report");
    }
  }
  return check.result(10, "odd graphs: relations, V(1) match, decomposition");
}

}  // namespace

SuiteReport run_acceptance(const SuiteCaps& caps) {
  std::mt19937 rng(caps.seed);
  SuiteReport report;

  report.criteria.push_back(criterion1(caps, rng));
  report.criteria.push_back(criterion2(caps, rng));
  report.criteria.push_back(criterion3(caps));
  report.criteria.push_back(criterion4(caps));
  report.criteria.push_back(criterion5(caps));

  SweepState sweep;
  sweep_v1(caps, sweep);
  report.criteria.push_back(
      sweep.c6.result(6, "V(1) relations, central values, Casimir"));
  report.criteria.push_back(
      sweep.c7.result(7, "V(1) nonzero iff m+n odd; irreducible; Leonard"));
  report.criteria.push_back(
      sweep.c8.result(8, "closed-form w basis and identifications"));

  GridState grid;
  sweep_grid(caps, grid, sweep.everywhere);
  report.criteria.push_back(
      grid.c9.result(9, "Leonard predictor vs. exact check on the grid"));

  report.criteria.push_back(criterion10(caps, sweep.everywhere));

  report.criteria.push_back(
      grid.c11.result(11, "trace and identification round trips"));
  report.criteria.push_back(
      sweep.everywhere.result(12, "cubic central identities on every triple"));
  return report;
}

}  // namespace skewbi
