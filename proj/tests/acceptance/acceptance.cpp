// Acceptance gate. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria (0 when all pass). `--criterion N` runs one.

#include "cartan/cdga_io.hpp"
#include "cartan/groebner.hpp"
#include "cartan/obstruct.hpp"
#include "cartan/report.hpp"
#include "cartan/weyl.hpp"
#include "cli.hpp"

#include "cdga_checks.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace cartan;

namespace {

// Runtime budgets in seconds.
constexpr double kFastBudget = 1.0;
constexpr double kCohomologyBudget = 60.0;
constexpr int kRandomRegularSequences = 20;

const std::string kSource = CARTAN_TEST_SOURCE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const Catalog& catalog() {
  static const Catalog c = load_validated_catalog(kSource + "/data/catalog.txt");
  return c;
}

// Restricted D4 invariants on x1 = 0, x4 = x2 + x3.
std::vector<Polynomial> restricted_d4() {
  const auto& e = catalog().lookup_embedding("so(3)xso(3)-in-so(8)");
  return restrict_invariants(catalog().lookup_group("so(8)"), e).restricted;
}

Outcome criterion1() {
  Outcome o;
  const auto r = restricted_d4();
  o.require(r.size() == 4, "expected four invariants");
  const std::vector<Polynomial> ideal{r[0], r[1]};
  const bool member = ideal_member(r[2], ideal);
  const auto gb = buchberger(ideal, MonomialOrder::for_context(OrderKind::grevlex, r[0].context()));
  o.require(member, "g12 not in (g4, g8): normal form " + to_string(normal_form(r[2], gb)));
  o.require(r[3].is_zero(), "restricted Pfaffian is " + to_string(r[3]));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto p = PoincareSeries::exterior({3, 7, 7, 11});
  o.require(p.coefficient(16) == 0, "t^16 coefficient " + std::to_string(p.coefficient(16)));
  o.require(p.coefficient(20) == 0, "t^20 coefficient " + std::to_string(p.coefficient(20)));
  o.require(p.coefficient(0) == 1, "t^0 coefficient " + std::to_string(p.coefficient(0)));
  o.require(p.sum() == 16, "coefficient sum " + std::to_string(p.sum()));
  const auto& so8 = catalog().lookup_group("so(8)");
  o.require(check_primitive_degree(so8, 16).fired && check_primitive_degree(so8, 20).fired,
            "primitive check does not fire at 16 and 20");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto cases = paper_case_list(catalog());
  const auto g22 = check_dimension(cases[1]);
  const auto su12 = check_dimension(cases[0]);
  o.require(g22.d_b == 8 && g22.n == 20,
            "SO(4,4)/G2(2): d_B = " + std::to_string(g22.d_b) + ", n = " + std::to_string(g22.n));
  o.require(su12.d_b == 12 && su12.n == 16,
            "SO(4,4)/SU(1,2): d_B = " + std::to_string(su12.d_b) + ", n = " + std::to_string(su12.n));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto c = paper_case_list(catalog())[2];
  const auto t = check_tncz_degree(c, 22);
  std::cout << "  authoritative P(t) = " << t.authoritative.to_string() << "\n";
  std::cout << "  literal reading    = " << t.literal.to_string() << "\n";
  o.require(t.d == 8, "d = " + std::to_string(t.d));
  o.require(t.coefficient == 0, "dim H^8 = " + std::to_string(t.coefficient));
  o.require(t.authoritative.evaluate(-1) == 0, "P(-1) = " + t.authoritative.evaluate(-1).get_str());
  o.require(t.literal.size() > 0, "literal reading missing");

  // The standalone fixture file must agree with the pipeline.
  const auto file = read_cdga(kSource + "/data/cdga/so8_so3xso3.cdga");
  const auto p = poincare_polynomial(file.algebra, 22);
  o.require(p == t.authoritative.truncated(22), "fixture file gives " + p.to_string());
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto cp1 = read_cdga(kSource + "/data/cdga/cp1.cdga");
  o.require(poincare_polynomial(cp1.algebra, 2).to_string() == "1 + t^2", "CP^1");
  const auto ly3 = read_cdga(kSource + "/data/cdga/lambda_y3.cdga");
  o.require(poincare_polynomial(ly3.algebra, 3).to_string() == "1 + t^3", "Lambda(y3)");
  const auto su3 = read_cdga(kSource + "/data/cdga/su3_t.cdga");
  const auto p = poincare_polynomial(su3.algebra, 6);
  o.require(p.to_string() == "1 + 2*t^2 + 2*t^4 + t^6", "SU(3)/T gives " + p.to_string());
  o.require(p.evaluate(1) == 6, "SU(3)/T at t = 1");

  std::mt19937 rng(20240601);
  std::uniform_int_distribution<unsigned> nvars(1, 3);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  int checked = 0;
  int attempts = 0;
  while (checked < kRandomRegularSequences && attempts < 200) {
    ++attempts;
    const std::size_t n = nvars(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    const auto ctx = VariableContext::make(names);
    std::vector<oracle::DenseGen> dense;
    std::vector<Polynomial> gens;
    std::vector<unsigned> degrees;
    for (std::size_t i = 0; i < n; ++i) {
      dense.push_back(oracle::random_form(rng, n, deg(rng)));
      degrees.push_back(dense.back().degree);
      gens.push_back(oracle::to_polynomial(dense.back(), ctx));
    }
    const unsigned top = 6;
    const auto expected = oracle::regular_sequence_series(n, degrees, top);
    std::vector<std::size_t> brute;
    for (unsigned k = 0; k <= top; ++k) brute.push_back(oracle::quotient_dim(n, dense, k));
    if (!std::equal(brute.begin(), brute.end(), expected.begin(),
                    [](std::size_t a, long long b) { return static_cast<long long>(a) == b; })) {
      continue;  // not a regular sequence
    }
    const auto q = quotient_poincare(gens, ctx, 2 * top);
    for (unsigned k = 0; k <= top; ++k) {
      o.require(q.coefficient(2 * k) == static_cast<long long>(brute[k]),
                "random ideal " + std::to_string(checked) + " differs in degree " + std::to_string(2 * k));
    }
    ++checked;
  }
  o.require(checked >= kRandomRegularSequences, "only " + std::to_string(checked) + " regular sequences generated");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::string> args{"check", "--format", "json"};
  for (const auto* f : {"so44_su12.case", "so44_g22.case", "so35_g22.case", "spin17_g2.case"}) {
    args.push_back(kSource + "/cases/paper/" + f);
  }
  std::ostringstream out1;
  std::ostringstream err1;
  const int code = cli::run_cli(args, out1, err1);
  std::ostringstream out2;
  std::ostringstream err2;
  cli::run_cli(args, out2, err2);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out1.str() == out2.str(), "JSON differs between runs");
  std::vector<std::string> verdicts;
  for (const auto& r : parse_report_json(out1.str())) verdicts.push_back(r.case_name + "=" + to_string(r.verdict));
  const std::vector<std::string> expected{"SO(4,4)/SU(1,2)=no-amenable-form", "SO(4,4)/G2(2)=no-amenable-form",
                                          "SO(3,5)/G2(2)=no-amenable-form", "Spin(1,7)/G2=vacuous-h-compact"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    o.require(i < verdicts.size() && verdicts[i] == expected[i], "got " + (i < verdicts.size() ? verdicts[i] : "nothing"));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::string why;
  // CDGAs: bundled files plus the pipeline's model.
  for (const auto* f : {"cp1.cdga", "lambda_y3.cdga", "su3_t.cdga", "so8_so3xso3.cdga"}) {
    const auto file = read_cdga(kSource + "/data/cdga/" + f);
    o.require(checks::d_squared_vanishes(file.algebra, 22, &why), std::string(f) + ": " + why);
    o.require(checks::leibniz_holds(file.algebra, 14, &why), std::string(f) + ": " + why);
  }
  const auto model =
      build_cartan_model(catalog().lookup_group("so(8)"), catalog().lookup_embedding("so(3)xso(3)-in-so(8)"));
  o.require(checks::d_squared_vanishes(model.algebra, 22, &why), "model: " + why);
  o.require(checks::leibniz_holds(model.algebra, 14, &why), "model: " + why);

  // Groebner confluence under random divisor choice.
  std::mt19937 rng(7);
  const auto ctx = VariableContext::make({"x", "y", "z"});
  std::uniform_int_distribution<unsigned> deg(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracle::to_polynomial(oracle::random_form(rng, 3, deg(rng), 2), ctx));
    const auto order = MonomialOrder::for_context(OrderKind::grevlex, *ctx);
    const auto gb = buchberger(ctx, gens, order);
    const auto f = oracle::to_polynomial(oracle::random_form(rng, 3, 5), ctx);
    const auto reference = normal_form(f, gb);
    for (int s = 0; s < 5; ++s) {
      const auto r = reduce(f, gb.generators(), order, [&rng](std::span<const std::size_t> c) {
        return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
      });
      o.require(r == reference, "reduction not confluent in trial " + std::to_string(trial));
    }
  }

  // rank + kernel = cols.
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    SparseMatrix m(dim(rng), dim(rng));
    std::vector<std::vector<mpq_class>> dense(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const int v = val(rng) * (val(rng) > 0);
        m.set(r, c, v);
        dense[r][c] = v;
      }
    }
    o.require(rank(m) + kernel_dim(m) == m.cols(), "rank + kernel != cols");
    o.require(rank(m) == oracle::dense_rank(dense), "rank differs from dense oracle");
  }

  // D4 invariants under the 192 signed permutations with an even number of sign changes.
  const auto d4 = weyl_invariant_generators(RootFamily::D, 4);
  std::vector<std::size_t> perm{0, 1, 2, 3};
  int elements = 0;
  do {
    for (unsigned mask = 0; mask < 16; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      std::vector<std::vector<Rational>> images(4, std::vector<Rational>(4));
      for (std::size_t i = 0; i < 4; ++i) images[i][perm[i]] = (mask >> i & 1U) ? -1 : 1;
      const LinearSubstitution w(d4.context, d4.context, images);
      for (const auto& f : d4.polynomials) o.require(substitute_linear(f, w) == f, "not invariant: " + to_string(f));
      ++elements;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  o.require(elements == 192, "group has " + std::to_string(elements) + " elements");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "ideal membership g12 in (g4, g8), Pfaffian restricts to 0", kFastBudget, criterion1},
      {2, "primitive-degree coefficients of so(8)", kFastBudget, criterion2},
      {3, "dimension criterion d_B and n", kFastBudget, criterion3},
      {4, "TNCZ degree: dim H^8(SO(8)/SO(3)xSO(3)) = 0, P(-1) = 0", kCohomologyBudget, criterion4},
      {5, "engine oracles and random regular sequences", kFastBudget * 10, criterion5},
      {6, "golden check over the four reference cases", kCohomologyBudget, criterion6},
      {7, "property suites", kCohomologyBudget, criterion7},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failed = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget) o.require(false, "took " + std::to_string(seconds) + " s");
    std::cout << (o.pass ? "PASS" : "FAIL") << " C" << c.id << " " << c.title << " (" << std::fixed
              << std::setprecision(3) << seconds << " s)" << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
    failed += !o.pass;
  }
  return failed;
}
