// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "halftruth/inference.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "halftruth/error.hpp"
#include "halftruth/generators.hpp"
#include "oracles.hpp"

namespace halftruth {
namespace {

using testing::lkm_by_joint_enumeration;
using testing::masked_marginal_by_definition;
using testing::pmf_by_enumeration;
using testing::random_probabilities;
using testing::random_realization;

// One additive node reading parents {0, 1, 2} through [0, .25, .5, 1].
DbnModel three_parent_additive() {
  return DbnModel{{0.5, 0.5, 0.5},
                  {Stage1Node{{0, 1, 2}, AdditiveTransition{{0.0, 0.25, 0.5, 1.0}}}}};
}

// One informative parent (index 0) among three stage-0 variables; x0 = 011
// gives q = 0 and hiding index 0 gives r = 0.375.
DbnModel toy_model() {
  return DbnModel{{0.5, 0.5, 0.5},
                  {Stage1Node{{0}, AdditiveTransition{{0.0, 0.75}}}}};
}

TEST(TruePosteriorTest, AdditiveLookup) {
  EXPECT_EQ(true_posterior(three_parent_additive(), Realization{1, 0, 1}),
            (PosteriorVector{0.5}));
}

TEST(TruePosteriorTest, AllZeroRealization) {
  EXPECT_EQ(true_posterior(three_parent_additive(), Realization{0, 0, 0}),
            (PosteriorVector{0.0}));
}

TEST(TruePosteriorTest, LinearDotProduct) {
  const DbnModel model{{0.5, 0.5}, {Stage1Node{{0, 1}, LinearTransition{{0.3, 0.2}}}}};
  EXPECT_DOUBLE_EQ(true_posterior(model, Realization{0, 1})[0], 0.2);
}

TEST(TruePosteriorTest, LengthMismatch) {
  EXPECT_THROW(true_posterior(three_parent_additive(), Realization{1, 0}), Error);
}

TEST(MaskedPosteriorTest, EmptyMaskIsTruePosterior) {
  const DbnModel model = three_parent_additive();
  const Realization x0{1, 0, 1};
  EXPECT_EQ(masked_posterior(model, x0, Mask::empty(MaskAction::kHide)),
            true_posterior(model, x0));
}

TEST(MaskedPosteriorTest, AdditiveHideOneParent) {
  // Hidden parent 0: 0.5 * table[1] + 0.5 * table[2].
  const auto r = masked_posterior(three_parent_additive(), Realization{1, 0, 1},
                                  Mask({0}, MaskAction::kHide));
  EXPECT_DOUBLE_EQ(r[0], 0.375);
}

TEST(MaskedPosteriorTest, LinearHideOneParent) {
  const DbnModel model{{0.5, 0.5}, {Stage1Node{{0, 1}, LinearTransition{{0.3, 0.2}}}}};
  const Realization x0{0, 1};
  const Mask mask({0}, MaskAction::kHide);
  EXPECT_DOUBLE_EQ(masked_posterior(model, x0, mask)[0], 0.35);
  EXPECT_DOUBLE_EQ(masked_posterior_by_enumeration(model, x0, mask)[0], 0.35);
}

TEST(MaskedPosteriorTest, RejectsFlipMask) {
  try {
    masked_posterior(three_parent_additive(), Realization{1, 0, 1},
                     Mask({0}, MaskAction::kFlip));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongMaskAction);
  }
}

TEST(MaskedPosteriorTest, GeneralHiddenCap) {
  DbnModel model;
  model.priors.assign(21, 0.5);
  model.nodes.push_back(Stage1Node{{}, GeneralTransition{{0.5}}});
  // A 21-parent general node cannot be built, so check the cap through
  // enumeration of an additive node's expansion instead.
  Stage1Node wide;
  for (Index j = 0; j < 21; ++j) wide.parents.push_back(j);
  wide.transition = AdditiveTransition{std::vector<double>(22, 0.5)};
  model.nodes.push_back(wide);
  std::vector<Index> all(21);
  for (Index j = 0; j < 21; ++j) all[j] = j;
  const Realization x0(std::vector<std::uint8_t>(21, 0));
  EXPECT_NO_THROW(masked_posterior(model, x0, Mask(all, MaskAction::kHide)));
  try {
    masked_posterior_by_enumeration(model, x0, Mask(all, MaskAction::kHide));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParentCapExceeded);
  }
}

TEST(MaskedPosteriorTest, FastPathsMatchEnumeration) {
  Rng rng(2024);
  for (int instance = 0; instance < 150; ++instance) {
    const Family family = instance % 3 == 0   ? Family::kRandomGeneral
                          : instance % 3 == 1 ? Family::kRandomAdditive
                                              : Family::kRandomLinear;
    const std::size_t n0 = 1 + rng.below(10);
    const DbnModel model = gen_random(
        GenSpec{family, n0, 1 + rng.below(5), rng.uniform(), false, rng.below(1U << 31)});
    const Realization x0 = random_realization(rng, n0);
    std::vector<Index> hidden;
    for (Index j = 0; j < n0; ++j) {
      if (rng.bernoulli(0.5)) hidden.push_back(j);
    }
    const Mask mask(hidden, MaskAction::kHide);
    const auto fast = masked_posterior(model, x0, mask);
    const auto slow = masked_posterior_by_enumeration(model, x0, mask);
    for (std::size_t i = 0; i < model.n1(); ++i) {
      EXPECT_NEAR(fast[i], slow[i], 1e-12);
      EXPECT_NEAR(fast[i], masked_marginal_by_definition(model, x0, mask, i), 1e-12);
    }
  }
}

TEST(FlippedPosteriorTest, EmptyMaskIsTruePosterior) {
  const DbnModel model = three_parent_additive();
  const Realization x0{1, 0, 1};
  EXPECT_EQ(flipped_posterior(model, x0, Mask::empty(MaskAction::kFlip)),
            true_posterior(model, x0));
}

TEST(FlippedPosteriorTest, FlipRaisesParentSum) {
  const auto r = flipped_posterior(three_parent_additive(), Realization{1, 0, 1},
                                   Mask({1}, MaskAction::kFlip));
  EXPECT_EQ(r[0], 1.0);
}

TEST(FlippedPosteriorTest, RejectsHideMask) {
  EXPECT_THROW(flipped_posterior(three_parent_additive(), Realization{1, 0, 1},
                                 Mask({1}, MaskAction::kHide)),
               Error);
}

TEST(DisagreementTest, Examples) {
  EXPECT_DOUBLE_EQ(disagreement(std::vector{0.5}, std::vector{0.9})[0], 0.5);
  EXPECT_DOUBLE_EQ(disagreement(std::vector{0.2}, std::vector{0.7})[0], 0.62);
  EXPECT_EQ(disagreement(std::vector{0.0}, std::vector{1.0})[0], 1.0);
  EXPECT_EQ(disagreement(std::vector{0.0}, std::vector{0.0})[0], 0.0);
  EXPECT_THROW(disagreement(std::vector{0.0}, std::vector{0.0, 1.0}), Error);
}

TEST(PoissonBinomialTest, FairCoins) {
  EXPECT_EQ(poisson_binomial_pmf(std::vector{0.5, 0.5}),
            (std::vector{0.25, 0.5, 0.25}));
}

TEST(PoissonBinomialTest, Deterministic) {
  EXPECT_EQ(poisson_binomial_pmf(std::vector{1.0, 1.0, 1.0}),
            (std::vector{0.0, 0.0, 0.0, 1.0}));
}

TEST(PoissonBinomialTest, MatchesEnumeration) {
  const std::vector d{0.1, 0.2, 0.3};
  const auto oracle = pmf_by_enumeration(d);
  // Frozen from the enumeration oracle.
  const std::vector expected{0.504, 0.398, 0.092, 0.006};
  const auto pmf = poisson_binomial_pmf(d);
  for (std::size_t m = 0; m < expected.size(); ++m) {
    EXPECT_NEAR(oracle[m], expected[m], 1e-15);
    EXPECT_NEAR(pmf[m], expected[m], 1e-15);
  }
}

TEST(PoissonBinomialTest, RandomVectorsMatchEnumeration) {
  Rng rng(5);
  for (int instance = 0; instance < 200; ++instance) {
    const auto d = random_probabilities(rng, rng.below(13));
    const auto pmf = poisson_binomial_pmf(d);
    const auto oracle = pmf_by_enumeration(d);
    double sum = 0.0;
    for (std::size_t m = 0; m < pmf.size(); ++m) {
      EXPECT_NEAR(pmf[m], oracle[m], 1e-13);
      sum += pmf[m];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(LkmDistanceTest, Examples) {
  const std::vector d{0.5, 0.25};
  EXPECT_DOUBLE_EQ(lkm_distance(d, Norm::finite(1)), 0.75);
  EXPECT_DOUBLE_EQ(lkm_distance(d, Norm::infinity()), 0.625);
  // Four equally likely outcomes: counts 0, 1, 1, 2.
  EXPECT_NEAR(lkm_distance(std::vector{0.5, 0.5}, Norm::finite(2)),
              0.5 + 0.25 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(lkm_distance(std::vector{1.0, 1.0}, Norm::finite(2)),
              std::sqrt(2.0), 1e-15);
  EXPECT_EQ(lkm_distance(std::vector<double>{}, Norm::finite(3)), 0.0);
}

TEST(LkmDistanceTest, JointEnumerationOracle) {
  Rng rng(99);
  for (int instance = 0; instance < 60; ++instance) {
    const std::size_t n = rng.below(7);
    const auto q = random_probabilities(rng, n);
    const auto r = random_probabilities(rng, n);
    const auto d = disagreement(q, r);
    for (Norm norm : {Norm::finite(1), Norm::finite(2), Norm::finite(3),
                      Norm::infinity()}) {
      EXPECT_NEAR(lkm_distance(d, norm), lkm_by_joint_enumeration(q, r, norm), 1e-10)
          << "p=" << norm.to_string();
    }
  }
}

TEST(LkmDistanceTest, PmfPathAgreesWithClosedForms) {
  Rng rng(7);
  for (int instance = 0; instance < 200; ++instance) {
    const auto d = random_probabilities(rng, rng.below(51));
    const auto pmf = poisson_binomial_pmf(d);
    EXPECT_NEAR(lkm_from_pmf(pmf, Norm::finite(1)), lkm_distance(d, Norm::finite(1)), 1e-12);
    EXPECT_NEAR(lkm_from_pmf(pmf, Norm::infinity()), lkm_distance(d, Norm::infinity()), 1e-12);
  }
}

TEST(LkmDistanceTest, MonotoneAndBounded) {
  Rng rng(8);
  for (int instance = 0; instance < 300; ++instance) {
    const std::size_t n = 1 + rng.below(20);
    auto d = random_probabilities(rng, n);
    for (Norm norm : {Norm::finite(1), Norm::finite(2), Norm::finite(5),
                      Norm::infinity()}) {
      const double base = lkm_distance(d, norm);
      const double cap = norm.is_infinite()
                             ? 1.0
                             : std::pow(static_cast<double>(n), 1.0 / norm.p());
      EXPECT_GE(base, 0.0);
      EXPECT_LE(base, cap + 1e-12);
      auto raised = d;
      const std::size_t i = rng.below(n);
      raised[i] += (1.0 - raised[i]) * rng.uniform();
      EXPECT_GE(lkm_distance(raised, norm), base - 1e-12);
    }
  }
}

TEST(NormTest, Parse) {
  EXPECT_EQ(Norm::parse("2"), Norm::finite(2));
  EXPECT_TRUE(Norm::parse("inf").is_infinite());
  EXPECT_THROW(Norm::parse("0"), Error);
  EXPECT_THROW(Norm::parse("1.5"), Error);
  EXPECT_THROW(Norm::finite(0), Error);
}

TEST(ObjectiveTest, EmptyMaskKeepsSelfDistance) {
  // r = q, so each coordinate disagrees with probability 2q(1-q).
  const DbnModel model = gen_random(GenSpec{Family::kRandomAdditive, 6, 4, 0.5, false, 3});
  const Realization x0{1, 0, 1, 1, 0, 0};
  const PosteriorVector q = true_posterior(model, x0);
  for (Norm norm : {Norm::finite(1), Norm::finite(2), Norm::infinity()}) {
    EXPECT_NEAR(objective_value(model, x0, Mask::empty(MaskAction::kHide), norm,
                                ObjectiveMode::untargeted()),
                testing::lkm_by_joint_enumeration(q, q, norm), 1e-12);
  }
}

TEST(ObjectiveTest, EmptyMaskIsZeroForDeterministicPosterior) {
  EXPECT_EQ(objective_value(toy_model(), Realization{0, 1, 1},
                            Mask::empty(MaskAction::kHide), Norm::infinity(),
                            ObjectiveMode::untargeted()),
            0.0);
}

TEST(ObjectiveTest, HidingTheInformativeParent) {
  EXPECT_DOUBLE_EQ(objective_value(toy_model(), Realization{0, 1, 1},
                                   Mask({0}, MaskAction::kHide), Norm::finite(1),
                                   ObjectiveMode::untargeted()),
                   0.375);
}

TEST(ObjectiveTest, TargetedIsNegatedDistance) {
  const DbnModel model = toy_model();
  const Realization x0{0, 1, 1};
  // Deterministic alpha equal to a deterministic q: zero distance.
  EXPECT_EQ(objective_value(model, x0, Mask::empty(MaskAction::kHide),
                            Norm::finite(1), ObjectiveMode::targeted({0.0})),
            0.0);
  // alpha = 1, r = 0.375 -> d = 1 - 0.375.
  EXPECT_DOUBLE_EQ(objective_value(model, x0, Mask({0}, MaskAction::kHide),
                                   Norm::finite(1), ObjectiveMode::targeted({1.0})),
                   -0.625);
  // Non-deterministic alpha = q = 0.5 keeps a positive distance 2q(1-q).
  const DbnModel half{{0.5}, {Stage1Node{{0}, AdditiveTransition{{0.5, 0.5}}}}};
  EXPECT_DOUBLE_EQ(objective_value(half, Realization{1}, Mask::empty(MaskAction::kHide),
                                   Norm::finite(1), ObjectiveMode::targeted({0.5})),
                   -0.5);
}

TEST(ObjectiveTest, TargetLengthMismatch) {
  EXPECT_THROW(ObjectiveEvaluator(toy_model(), Realization{0, 1, 1}, Norm::finite(1),
                                  ObjectiveMode::targeted({0.1, 0.2})),
               Error);
}

TEST(ObjectiveTest, EvaluatorCountsCalls) {
  const DbnModel model = toy_model();
  const ObjectiveEvaluator eval(model, Realization{0, 1, 1}, Norm::finite(1),
                                ObjectiveMode::untargeted());
  eval(Mask::empty(MaskAction::kHide));
  eval(Mask({0}, MaskAction::kFlip));
  EXPECT_EQ(eval.evaluations(), 2U);
}

}  // namespace
}  // namespace halftruth
