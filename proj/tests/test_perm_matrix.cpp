// Copyright 2026 The tensorperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tensorperm/perm_matrix.hpp"

namespace tensorperm {
namespace {

using testing::all_dim_lists;
using testing::naive_matmul;
using testing::permutation_from_action;
using testing::random_int_matrix;

Sigma to_sigma(const std::vector<Index>& images) { return Sigma(images); }

std::vector<IntMatrix> random_factors(std::mt19937_64& rng,
                                      const DimList& dims) {
  std::vector<IntMatrix> out;
  for (Index t = 1; t <= dims.size(); ++t) {
    out.push_back(random_int_matrix(rng, dims.dim(t), dims.dim(t)));
  }
  return out;
}

TEST(Spec, Validation) {
  EXPECT_THROW(TensorPermSpec(DimList{2, 3}, Sigma{1, 2, 3}), DimensionError);
  const auto spec = TensorPermSpec::commutation(3, 2);
  EXPECT_EQ(spec.order(), 6u);
  EXPECT_EQ(spec.output_dims(), (DimList{2, 3}));
}

TEST(BuildDelta, WorkedExamples) {
  EXPECT_EQ(build_delta(TensorPermSpec::commutation(3, 2)),
            testing::reference_u32());
  EXPECT_EQ(build_delta(TensorPermSpec::commutation(2, 3)),
            testing::reference_u23());
  EXPECT_EQ(build_delta({DimList{2, 2, 2}, Sigma{3, 2, 1}}),
            testing::reference_u222_reversal());
  EXPECT_EQ(build_delta(TensorPermSpec::commutation(3, 5)),
            testing::reference_u35());
}

TEST(BuildDelta, TrivialFactorGivesIdentity) {
  for (Index n = 1; n <= 9; ++n) {
    EXPECT_EQ(build_delta(TensorPermSpec::commutation(1, n)),
              identity_matrix(n));
    EXPECT_EQ(build_delta(TensorPermSpec::commutation(n, 1)),
              identity_matrix(n));
  }
}

TEST(BuildDelta, MatchesActionOracle) {
  for (const auto& dims : all_dim_lists(3, 24, 1)) {
    std::vector<Index> images(dims.size());
    for (Index t = 0; t < images.size(); ++t) images[t] = t + 1;
    do {
      ASSERT_EQ(build_delta({DimList(dims), to_sigma(images)}),
                permutation_from_action(dims, images));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(BuildDelta, CapacityBound) {
  EXPECT_THROW((void)build_delta(TensorPermSpec::commutation(100, 100)),
               CapacityError);
  EXPECT_NO_THROW(
      (void)build_delta(TensorPermSpec::commutation(10, 10), 100));
}

TEST(ElementarySum, AgreesWithDelta) {
  EXPECT_EQ(build_elementary_sum(TensorPermSpec::commutation(3, 5)),
            testing::reference_u35());
  for (const auto& dims : all_dim_lists(4, 36, 1)) {
    for (const Sigma& s : all_sigmas(dims.size())) {
      const TensorPermSpec spec(DimList(dims), s);
      ASSERT_EQ(build_elementary_sum(spec), build_delta(spec));
    }
  }
}

TEST(StrideRule, WorkedExampleAndClosedForm) {
  EXPECT_EQ(build_stride_rule(3, 5), testing::reference_u35());
  EXPECT_EQ(build_stride_rule(3, 2), testing::reference_u32());
  for (Index n = 1; n <= 10; ++n) {
    for (Index p = 1; p <= 10; ++p) {
      ASSERT_EQ(build_stride_rule(n, p), build_stride_closed_form(n, p));
      ASSERT_EQ(build_stride_rule(n, p),
                build_delta(TensorPermSpec::commutation(n, p)));
    }
  }
}

TEST(Apply, Examples) {
  const std::vector<Integer> v{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(apply<Integer>(TensorPermSpec::commutation(3, 2), v),
            (std::vector<Integer>{1, 3, 5, 2, 4, 6}));
  const std::vector<Integer> w{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(apply<Integer>({DimList{2, 2, 2}, Sigma{3, 2, 1}}, w),
            (std::vector<Integer>{1, 5, 3, 7, 2, 6, 4, 8}));
  EXPECT_THROW(
      (void)apply<Integer>(TensorPermSpec::commutation(3, 2),
                           std::span<const Integer>(v).first(5)),
      DimensionError);
}

TEST(Apply, PermutesTensorProducts) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Integer> dist(-9, 9);
  for (const auto& dims : all_dim_lists(4, 36, 1)) {
    for (const Sigma& s : all_sigmas(dims.size())) {
      const TensorPermSpec spec(DimList(dims), s);
      std::vector<std::vector<Integer>> parts;
      for (Index d : dims) {
        std::vector<Integer> a(d);
        for (Integer& x : a) x = dist(rng);
        parts.push_back(std::move(a));
      }
      std::vector<std::vector<Integer>> permuted;
      for (Index t = 1; t <= dims.size(); ++t) {
        permuted.push_back(parts[s.image(t) - 1]);
      }
      ASSERT_EQ(apply<Integer>(spec, testing::kron_vectors(parts)),
                testing::kron_vectors(permuted));
    }
  }
}

TEST(Apply, ComplexVectors) {
  const std::vector<Complex> v{{1, 1}, {2, 0}, {0, 3}, {4, -1}};
  const auto out = apply<Complex>(TensorPermSpec::commutation(2, 2), v);
  EXPECT_EQ(out, (std::vector<Complex>{{1, 1}, {0, 3}, {2, 0}, {4, -1}}));
}

TEST(Conjugation, HoldsForRandomFactors) {
  std::mt19937_64 rng(12);
  for (const auto& dims : all_dim_lists(3, 24, 1)) {
    for (const Sigma& s : all_sigmas(dims.size())) {
      const TensorPermSpec spec(DimList(dims), s);
      for (int trial = 0; trial < 3; ++trial) {
        const auto factors = random_factors(rng, spec.dims());
        ASSERT_TRUE(commutation_conjugation_check(spec, factors));
      }
    }
  }
}

TEST(Conjugation, DetectsCorruptedMatrix) {
  std::mt19937_64 rng(13);
  const auto spec = TensorPermSpec::commutation(3, 2);
  IntMatrix u = build_delta(spec);
  for (Index c = 1; c <= 6; ++c) std::swap(u(2, c), u(3, c));
  const auto factors = random_factors(rng, spec.dims());
  // Dense oracle: the two sides really differ.
  const IntMatrix lhs =
      naive_matmul(u, kron(factors[0], factors[1]));
  const IntMatrix rhs =
      naive_matmul(kron(factors[1], factors[0]), u);
  ASSERT_NE(lhs, rhs);
  EXPECT_FALSE(conjugation_holds(u, spec, factors));
  EXPECT_TRUE(conjugation_holds(identity_matrix(6), spec,
                                std::vector<IntMatrix>{identity_matrix(3),
                                                       identity_matrix(2)}));
}

TEST(Conjugation, ShapeErrors) {
  const auto spec = TensorPermSpec::commutation(3, 2);
  const std::vector<IntMatrix> one{identity_matrix(3)};
  EXPECT_THROW((void)commutation_conjugation_check(spec, one), DimensionError);
  const std::vector<IntMatrix> wrong{identity_matrix(2), identity_matrix(3)};
  EXPECT_THROW((void)commutation_conjugation_check(spec, wrong),
               DimensionError);
}

TEST(Commutation, TransposeDualityAndInverse) {
  for (Index n = 1; n <= 64; ++n) {
    for (Index p = 1; n * p <= 64; ++p) {
      const IntMatrix u = build_delta(TensorPermSpec::commutation(n, p));
      const IntMatrix v = build_delta(TensorPermSpec::commutation(p, n));
      ASSERT_EQ(transpose(u), v);
      ASSERT_EQ(matmul(u, v), identity_matrix(n * p));
    }
  }
}

TEST(Commutation, SquareCaseIsSymmetricInvolution) {
  for (Index n = 1; n <= 8; ++n) {
    const IntMatrix u = build_delta(TensorPermSpec::commutation(n, n));
    EXPECT_EQ(transpose(u), u);
    EXPECT_EQ(naive_matmul(u, u), identity_matrix(n * n));
  }
}

TEST(Commutation, IndexPermMatchesDense) {
  for (Index n = 1; n <= 12; ++n) {
    for (Index p = 1; p <= 12; ++p) {
      EXPECT_EQ(to_dense(tcm_perm(n, p)),
                build_delta(TensorPermSpec::commutation(n, p)));
    }
  }
}

TEST(Commutation, EveryBuiltMatrixIsAPermutation) {
  for (const auto& dims : all_dim_lists(4, 48, 1)) {
    for (const Sigma& s : all_sigmas(dims.size())) {
      ASSERT_TRUE(is_permutation_matrix(build_delta({DimList(dims), s})));
    }
  }
}

TEST(Labels, OrderTwelve) {
  const auto labels = tcm_labels(12);
  const std::vector<TcmLabel> expect{{1, 12}, {12, 1}, {2, 6},
                                     {6, 2},  {3, 4},  {4, 3}};
  EXPECT_EQ(labels, expect);
  EXPECT_EQ((TcmLabel{3, 2}.to_string()), "3⊗2");
}

TEST(Labels, NontrivialOrderTwelveMatricesAreDistinct) {
  const std::vector<TcmLabel> labels{{2, 6}, {6, 2}, {3, 4}, {4, 3}};
  for (std::size_t a = 0; a < labels.size(); ++a) {
    const IntMatrix ua =
        build_delta(TensorPermSpec::commutation(labels[a].n, labels[a].p));
    EXPECT_NE(ua, identity_matrix(12));
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      EXPECT_NE(ua, build_delta(TensorPermSpec::commutation(labels[b].n,
                                                            labels[b].p)));
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_tcm(identity_matrix(12)),
            (std::vector<TcmLabel>{{1, 12}, {12, 1}}));
  EXPECT_EQ(classify_tcm(build_delta(TensorPermSpec::commutation(3, 4))),
            (std::vector<TcmLabel>{{3, 4}}));
  const IntMatrix product =
      matmul(build_delta(TensorPermSpec::commutation(2, 6)),
             build_delta(TensorPermSpec::commutation(4, 3)));
  EXPECT_TRUE(classify_tcm(product).empty());
  EXPECT_THROW((void)classify_tcm(IntMatrix(2, 3)), DimensionError);
}

TEST(Closure, Examples) {
  EXPECT_TRUE(closure_check(2, 2).closed);
  EXPECT_TRUE(closure_check(1, 5).closed);
  EXPECT_TRUE(closure_check(5, 1).closed);

  const ClosureReport report = closure_check(3, 2);
  ASSERT_FALSE(report.closed);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->description(), "U_{3⊗2}·U_{3⊗2}");

  // Dense oracle: U_{3⊗2} squared is none of I, U_{3⊗2}, U_{2⊗3}.
  const IntMatrix u = testing::reference_u32();
  const IntMatrix sq = naive_matmul(u, u);
  EXPECT_NE(sq, identity_matrix(6));
  EXPECT_NE(sq, testing::reference_u32());
  EXPECT_NE(sq, testing::reference_u23());
  EXPECT_EQ(to_dense(report.witness->product), sq);
}

}  // namespace
}  // namespace tensorperm
