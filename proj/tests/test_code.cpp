#include <gtest/gtest.h>

#include <random>

#include "hgc/code.hpp"
#include "hgc/counting.hpp"

namespace {

using namespace hgc;

const ProjectiveSystem& system_for(int m, int p) {
  static std::map<std::pair<int, int>, ProjectiveSystem> cache;
  auto it = cache.find({m, p});
  if (it == cache.end()) it = cache.emplace(std::pair{m, p}, build_system(HermitianSpace(Field::make(p, 1), m))).first;
  return it->second;
}

AlternatingForm random_form(std::mt19937_64& rng, const Field& f, int m) {
  std::vector<Elem> u(pair_count(m));
  for (auto& x : u) x = static_cast<Elem>(rng() % f.q2());
  return AlternatingForm::from_upper(f, m, u);
}

TEST(AlternatingForm, ValidatesMatrix) {
  const Field f = Field::make(3, 1);
  Matrix s(3, 3);
  s(0, 1) = 1;
  EXPECT_THROW(AlternatingForm(f, s), std::invalid_argument);  // not antisymmetric
  s(1, 0) = f.neg(1);
  EXPECT_NO_THROW(AlternatingForm(f, s));
  EXPECT_THROW(AlternatingForm(f, Matrix(2, 3)), std::invalid_argument);
  const Field g = Field::make(2, 1);
  Matrix d(2, 2);
  d(0, 0) = 1;  // symmetric in characteristic 2 but not alternating
  EXPECT_THROW(AlternatingForm(g, d), std::invalid_argument);
  EXPECT_THROW(AlternatingForm::from_upper(g, 4, std::vector<Elem>(5)), std::invalid_argument);
}

TEST(AlternatingForm, RankIsEvenAndRadicalIsTheKernel) {
  const Field f = Field::make(3, 1);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 6;
    const auto phi = random_form(rng, f, m);
    EXPECT_EQ(phi.rank() % 2, 0);
    EXPECT_EQ(phi.radical().dim(), m - phi.rank());
    for (int i = 0; i < phi.radical().dim(); ++i) EXPECT_TRUE(apply(f, phi.matrix(), phi.radical().vector(i)).is_zero());
    EXPECT_EQ(AlternatingForm::from_upper(f, m, phi.upper()).matrix(), phi.matrix());
    const Vec x = Vec::unit(m, trial % m);
    EXPECT_EQ(phi(x, x), 0);
  }
}

TEST(AlternatingForm, RankTwoRadical) {
  const Field f = Field::make(2, 1);
  const Vec a{1, 0, 2, 0, 1}, b{0, 1, 1, 3, 0};
  const auto phi = AlternatingForm::rank2(f, a, b);
  EXPECT_EQ(phi.rank(), 2);
  Matrix ab(2, 5);
  for (int j = 0; j < 5; ++j) {
    ab(0, j) = a[j];
    ab(1, j) = b[j];
  }
  EXPECT_EQ(phi.radical(), kernel(f, ab));
  EXPECT_TRUE(AlternatingForm::rank2(f, a, scale(f, 2, a)).is_zero());
}

TEST(Code, EvaluationMatchesPlueckerPairing) {
  const auto& sys = system_for(5, 2);
  const Field& f = sys.field();
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = random_form(rng, f, 5);
    for (std::size_t j = 0; j < sys.n(); ++j) {
      const auto& l = sys.lines()[j];
      // vᵀSw = Σ_{i<j} S_ij (v_i w_j - v_j w_i) on the unnormalized coordinates.
      Elem by_pairs = 0;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
          by_pairs = f.add(by_pairs, f.mul(phi.matrix()(a, b), f.sub(f.mul(l.v[a], l.w[b]), f.mul(l.v[b], l.w[a]))));
      EXPECT_EQ(evaluate(phi, l), by_pairs);
      EXPECT_EQ(evaluate_pluecker(phi, sys.column(j)) == 0, by_pairs == 0);
    }
  }
}

TEST(Code, CodewordIsLinearInTheForm) {
  const auto& sys = system_for(4, 3);
  const Field& f = sys.field();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_form(rng, f, 4), b = random_form(rng, f, 4);
    const Elem s = static_cast<Elem>(rng() % f.q2());
    const auto ca = codeword(a, sys), cb = codeword(b, sys);
    const auto sum = codeword(a.plus(b), sys), scaled = codeword(a.scaled(s), sys);
    for (std::size_t j = 0; j < sys.n(); ++j) {
      EXPECT_EQ(sum.values[j], f.add(ca.values[j], cb.values[j]));
      EXPECT_EQ(scaled.values[j], f.mul(s, ca.values[j]));
    }
    EXPECT_EQ(ca.weight, weight_direct(a, sys));
  }
  EXPECT_EQ(weight_direct(AlternatingForm::zero(f, 4), sys), 0u);
}

TEST(Code, EngineMatchesDirectEvaluation) {
  for (auto [m, p] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}, std::pair{4, 3}, std::pair{5, 3}}) {
    const auto& sys = system_for(m, p);
    const CodewordEngine eng(sys);
    std::mt19937_64 rng(m * 10 + p);
    std::vector<Elem> c;
    for (int trial = 0; trial < 40; ++trial) {
      const auto phi = random_form(rng, sys.field(), m);
      const auto direct = codeword(phi, sys);
      eng.codeword(phi.upper(), c);
      EXPECT_EQ(std::vector<Elem>(c.begin(), c.begin() + sys.n()), direct.values);
      EXPECT_EQ(eng.weight(phi.upper()), direct.weight);
    }
  }
}

TEST(Code, CaseValues) {
  EXPECT_EQ(case_values(4, 2).secant, 3u);
  EXPECT_EQ(case_values(4, 2).tangent, 2u);
  EXPECT_EQ(case_values(5, 2).secant, 6u);
  EXPECT_EQ(case_values(5, 2).tangent, 8u);
  EXPECT_EQ(case_values(6, 2).secant, 36u);
  EXPECT_EQ(case_values(5, 3).secant, 27u - 3);
}

TEST(Code, PointWeightsFromScanAndStarAgree) {
  const auto& sys = system_for(5, 2);
  const PointStar star(sys.space(), sys.points(), sys.lines());
  std::mt19937_64 rng(4);
  const auto cv = case_values(5, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto phi = random_form(rng, sys.field(), 5);
    for (std::size_t i = 0; i < sys.points().size(); ++i) {
      const auto& u = sys.points()[i].coords;
      const auto w = wt_phi_u(phi, sys.space(), sys.points(), u);
      EXPECT_EQ(w, wt_phi_u(phi, star, i, u));
      EXPECT_TRUE(w == 0 || w == cv.secant || w == cv.tangent) << w;
    }
  }
  const auto phi = random_form(rng, sys.field(), 5);
  EXPECT_THROW(wt_phi_u(phi, sys.space(), sys.points(), Vec(5)), std::invalid_argument);
  EXPECT_THROW(wt_phi_u(phi, sys.space(), sys.points(), Vec::unit(5, 0)), std::invalid_argument);
}

TEST(Code, RecursiveWeightMatchesDirect) {
  for (auto [m, p] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{4, 3}}) {
    const auto& sys = system_for(m, p);
    const PointStar star(sys.space(), sys.points(), sys.lines());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const auto phi = random_form(rng, sys.field(), m);
      EXPECT_EQ(weight_recursive(phi, sys, star).weight, weight_direct(phi, sys));
    }
  }
}

TEST(Spectrum, ExhaustiveMatchesBruteForce) {
  const auto& sys = system_for(4, 2);
  std::map<std::uint64_t, std::uint64_t> brute;
  for (std::uint64_t idx = 0; idx < 4096; ++idx)
    ++brute[weight_direct(AlternatingForm::from_upper(sys.field(), 4, form_digits(idx, 6, 4)), sys)];
  SpectrumOptions opt;
  opt.keep_min_words = 1000;
  const auto rep = spectrum(sys, opt);
  EXPECT_EQ(rep.histogram, brute);
  EXPECT_EQ(rep.forms_scanned, 4096u);
  EXPECT_EQ(rep.min_nonzero_weight, 12u);
  EXPECT_EQ(rep.min_words.size(), brute[12]);
  EXPECT_TRUE(std::is_sorted(rep.min_words.begin(), rep.min_words.end()));
  for (const auto& u : rep.min_words)
    EXPECT_EQ(weight_direct(AlternatingForm::from_upper(sys.field(), 4, u), sys), 12u);
}

TEST(Spectrum, WorkerCountDoesNotChangeResults) {
  const auto& sys = system_for(4, 3);
  SpectrumOptions one;
  one.keep_min_words = 50;
  SpectrumOptions three = one;
  three.jobs = 3;
  const auto a = spectrum(sys, one), b = spectrum(sys, three);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.min_words, b.min_words);
  EXPECT_EQ(a.min_nonzero_weight, 72u);

  SpectrumOptions s1;
  s1.exhaustive = false;
  s1.samples = 20000;
  s1.seed = 99;
  s1.keep_min_words = 5;
  SpectrumOptions s3 = s1;
  s3.jobs = 3;
  const auto c = spectrum(sys, s1), d = spectrum(sys, s3);
  EXPECT_EQ(c.histogram, d.histogram);
  EXPECT_EQ(c.min_words, d.min_words);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.histogram.count(0), 0u);
}

TEST(Spectrum, GoldenFiveTwoDistribution) {
  const auto& sys = system_for(5, 2);
  const auto rep = spectrum(sys, SpectrumOptions{});
  const std::map<std::uint64_t, std::uint64_t> expected = {
      {0, 1}, {192, 24948}, {216, 295680}, {224, 498960}, {232, 228096}, {256, 891}};
  EXPECT_EQ(rep.histogram, expected);
}

TEST(Spectrum, BudgetIsEnforced) {
  SpectrumOptions opt;
  opt.budget = 1000;
  EXPECT_THROW(spectrum(system_for(4, 2), opt), std::length_error);
}

TEST(Spectrum, FormDigitsAndSampler) {
  EXPECT_EQ(form_digits(0, 3, 4), (std::vector<Elem>{0, 0, 0}));
  EXPECT_EQ(form_digits(1 + 2 * 4 + 3 * 16, 3, 4), (std::vector<Elem>{1, 2, 3}));
  FormSampler a(6, 4, 7, true), b(6, 4, 7, true);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_TRUE(std::any_of(x.begin(), x.end(), [](Elem e) { return e != 0; }));
    for (Elem e : x) EXPECT_LT(e, 4);
  }
  // Values pinned to mt19937_64(7) mod 4.
  std::mt19937_64 ref(7);
  FormSampler c(3, 4, 7, false);
  const auto first = c.next();
  for (int i = 0; i < 3; ++i) EXPECT_EQ(first[i], ref() % 4);
}

}  // namespace
