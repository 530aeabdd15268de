// Copyright 2026 The superchan Authors
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

#include <cmath>

#include "superchan/channels.hpp"
#include "superchan/random.hpp"
#include "superchan/supermaps.hpp"
#include "test_util.hpp"

namespace sc = superchan;
using sc::Channel;
using sc::CMatrix;
using sc::DensityMatrix;

namespace {

std::vector<CMatrix> pauli_kraus() {
  std::vector<CMatrix> k;
  for (int i = 0; i < 4; ++i) k.push_back(sc::qubit::pauli(i) / 2.0);
  return k;
}

CMatrix swap_unitary() {
  CMatrix s = CMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s(b * 2 + a, a * 2 + b) = 1.0;
  return s;
}

CMatrix cnot() {
  // control first factor, target second
  return sc::kron(sc::matrix_unit(2, 0, 0), sc::qubit::I()) +
         sc::kron(sc::matrix_unit(2, 1, 1), sc::qubit::X());
}

double choi_fidelity(const CMatrix& a, const CMatrix& b) {
  // overlap of normalized Choi states; 1 iff equal for rank-aligned inputs
  const double na = a.norm(), nb = b.norm();
  return (a.adjoint() * b).trace().real() / (na * nb);
}

}  // namespace

TEST(ChannelFromKraus, IdentityList) {
  const Channel c = sc::channel_from_kraus({CMatrix::Identity(2, 2)});
  EXPECT_EQ(c.dim_in(), 2u);
  EXPECT_EQ(c.dim_out(), 2u);
  EXPECT_LE(sc::choi_distance(c, sc::identity(2)), 1e-15);
}

TEST(ChannelFromKraus, PauliListIsCompletelyDepolarizing) {
  const Channel c = sc::channel_from_kraus(pauli_kraus());
  const CMatrix expected = CMatrix::Identity(4, 4) / 2.0;  // I ⊗ I/2
  EXPECT_LE(oracle::max_abs(sc::choi_matrix(c), expected), 1e-12);
}

TEST(ChannelFromKraus, RejectsOvercompleteListWithResidual) {
  try {
    sc::channel_from_kraus({CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)});
    FAIL() << "expected CPTPError";
  } catch (const sc::CPTPError& e) {
    EXPECT_NEAR(e.residual(), 1.0, 1e-12);  // ||2I - I||
    EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
  }
}

TEST(ChannelFromKraus, RejectsEmptyAndRaggedLists) {
  EXPECT_THROW(sc::channel_from_kraus({}), sc::Error);
  EXPECT_THROW(sc::channel_from_kraus({CMatrix::Identity(2, 2) / std::sqrt(2.0),
                                       CMatrix::Identity(3, 3) / std::sqrt(2.0)}),
               sc::Error);
}

TEST(Apply, DepolarizingGivesMaximallyMixed) {
  sc::random::Rng rng(3);
  for (int n = 0; n < 10; ++n) {
    const auto out = sc::apply(sc::depolarizing(2), sc::random::mixed_state(rng, 2));
    EXPECT_LE(oracle::max_abs(out.matrix(), CMatrix::Identity(2, 2) / 2), 1e-12);
  }
}

TEST(Apply, IdentityIsIdentity) {
  sc::random::Rng rng(4);
  const auto rho = sc::random::mixed_state(rng, 3);
  EXPECT_LE(oracle::max_abs(sc::apply(sc::identity(3), rho).matrix(), rho.matrix()), 1e-15);
}

TEST(Apply, DephasingKillsCoherence) {
  const auto out = sc::apply(sc::classical_identity(2), DensityMatrix::pure(sc::qubit::plus()));
  EXPECT_LE(oracle::max_abs(out.matrix(), CMatrix::Identity(2, 2) / 2), 1e-15);
}

TEST(Apply, DimensionMismatchThrows) {
  EXPECT_THROW(sc::apply(sc::identity(2), DensityMatrix::maximally_mixed(3)), sc::DimensionError);
}

TEST(ApplyProperty, PreservesTraceAndPositivity) {
  sc::random::Rng rng(5);
  const std::vector<Channel> channels{sc::random::channel(rng, 2), sc::random::channel(rng, 2, 3, 2),
                                      sc::random::channel(rng, 3, 2, 5), sc::depolarizing(3)};
  for (const auto& ch : channels)
    for (int n = 0; n < 1000; ++n) {
      const auto rho = sc::random::mixed_state(rng, ch.dim_in(), 1 + n % ch.dim_in());
      const CMatrix out = ch(rho.matrix());
      EXPECT_NEAR(std::abs(out.trace() - 1.0), 0.0, 1e-9);
      EXPECT_GE(sc::hermitian_eigs(out).values.minCoeff(), -1e-9);
    }
}

TEST(Choi, DepolarizingIsFullRankMultipleOfIdentity) {
  const auto c = sc::choi_of(sc::depolarizing(2));
  EXPECT_LE(oracle::max_abs(c.matrix(), CMatrix::Identity(4, 4) / 2), 1e-12);
}

TEST(Choi, IdentityIsRankOneMaximallyEntangled) {
  const CMatrix c = sc::choi_matrix(sc::identity(2));
  CMatrix expected = CMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) expected(i * 2 + i, j * 2 + j) = 1.0;
  EXPECT_LE(oracle::max_abs(c, expected), 1e-15);
  EXPECT_EQ(sc::kraus_from_choi(sc::choi_of(sc::identity(2))).kraus_rank(), 1u);
}

TEST(Choi, MatchesEntrywiseOracle) {
  sc::random::Rng rng(6);
  for (int n = 0; n < 20; ++n) {
    const Channel ch = sc::random::channel(rng, 2, 3, 3);
    EXPECT_LE(oracle::max_abs(sc::choi_matrix(ch), oracle::choi(oracle::kraus_map(ch), 2, 3)),
              1e-13);
  }
}

TEST(ChoiProperty, KrausRoundTrip) {
  sc::random::Rng rng(7);
  for (int n = 0; n < 200; ++n) {
    const std::size_t din = 2 + n % 2, dout = 2 + (n / 2) % 2, r = 1 + n % 4;
    const Channel ch = sc::random::channel(rng, din, dout, r);
    const auto choi = sc::choi_of(ch);
    const Channel back = sc::kraus_from_choi(choi);
    EXPECT_LE((sc::choi_matrix(back) - choi.matrix()).norm(), 1e-9);
    EXPECT_GE(choi_fidelity(sc::choi_matrix(back), choi.matrix()), 1 - 1e-9);
    EXPECT_EQ(back.kraus_rank(), std::min(r, din * dout));
  }
}

TEST(Choi, RejectsNonCptpMatrix) {
  EXPECT_THROW(sc::ChoiMatrix(CMatrix::Identity(4, 4), 2, 2), sc::ValidationError);  // Tr_out = 2I
  CMatrix neg = CMatrix::Identity(4, 4) / 2;
  neg(0, 0) = -0.5;
  neg(1, 1) = 1.5;
  EXPECT_THROW(sc::ChoiMatrix(neg, 2, 2), sc::ValidationError);
}

TEST(Compose, DepolarizingIsIdempotent) {
  EXPECT_LE(sc::choi_distance(sc::compose(sc::depolarizing(2), sc::depolarizing(2)),
                              sc::depolarizing(2)),
            1e-9);
}

TEST(Compose, IdentityIsNeutral) {
  sc::random::Rng rng(8);
  const Channel ch = sc::random::channel(rng, 3);
  EXPECT_LE(sc::choi_distance(sc::compose(sc::identity(3), ch), ch), 1e-12);
  EXPECT_LE(sc::choi_distance(sc::compose(ch, sc::identity(3)), ch), 1e-12);
}

TEST(Compose, DimensionMismatchThrows) {
  EXPECT_THROW(sc::compose(sc::identity(2), sc::identity(3)), sc::DimensionError);
}

TEST(Tensor, DepolarizingOnBellHalf) {
  sc::CVector phi = sc::CVector::Zero(4);
  phi(0) = phi(3) = 1 / std::sqrt(2.0);
  const CMatrix out = sc::tensor(sc::depolarizing(2), sc::identity(2))(sc::projector(phi));
  EXPECT_LE(oracle::max_abs(out, CMatrix::Identity(4, 4) / 4), 1e-12);
}

TEST(ComposeProperty, MatchesSequentialApplicationOracle) {
  sc::random::Rng rng(9);
  for (int n = 0; n < 50; ++n) {
    const Channel b = sc::random::channel(rng, 2, 3, 2);
    const Channel a = sc::random::channel(rng, 3, 2, 3);
    const CMatrix brute = oracle::choi(oracle::chain({oracle::kraus_map(b), oracle::kraus_map(a)}), 2, 2);
    EXPECT_LE((sc::choi_matrix(sc::compose(a, b)) - brute).norm(), 1e-9);
  }
}

TEST(TensorProperty, MatchesLoopKronOracle) {
  sc::random::Rng rng(10);
  for (int n = 0; n < 20; ++n) {
    const Channel a = sc::random::channel(rng, 2, 2, 2);
    const Channel b = sc::random::channel(rng, 3, 2, 2);
    const CMatrix brute = oracle::choi(oracle::tensor_map(a, b), 6, 4);
    EXPECT_LE((sc::choi_matrix(sc::tensor(a, b)) - brute).norm(), 1e-10);
  }
}

TEST(Constructors, ConstantChannelKraus) {
  sc::random::Rng rng(11);
  const sc::CVector psi0 = sc::random::pure_vector(rng, 2);
  const Channel c = sc::constant_channel(DensityMatrix::pure(psi0), 3);
  ASSERT_EQ(c.dim_in(), 3u);
  // the Kraus set spans {|psi0><j|}: each operator is |psi0> times a row
  for (const auto& k : c.kraus()) {
    const CMatrix proj = sc::projector(psi0) * k;
    EXPECT_LE(oracle::max_abs(proj, k), 1e-12);
  }
  CMatrix sum = CMatrix::Zero(3, 3);
  for (const auto& k : c.kraus()) sum += k.adjoint() * k;
  EXPECT_LE(oracle::max_abs(sum, CMatrix::Identity(3, 3)), 1e-12);
  EXPECT_EQ(c.kraus_rank(), 3u);
}

TEST(Constructors, DepolarizingEqualsUniformPauliMixture) {
  EXPECT_LE(sc::choi_distance(sc::depolarizing(2), sc::pauli_channel({0.25, 0.25, 0.25, 0.25})),
            1e-12);
}

TEST(Constructors, QutritDepolarizingOutputsMaximallyMixed) {
  sc::random::Rng rng(12);
  const auto out = sc::apply(sc::depolarizing(3), sc::random::mixed_state(rng, 3));
  EXPECT_LE(oracle::max_abs(out.matrix(), CMatrix::Identity(3, 3) / 3), 1e-12);
}

TEST(Constructors, ClassicalIdentityKeepsBasisStates) {
  const auto out = sc::apply(sc::classical_identity(2), DensityMatrix::basis(2, 0));
  EXPECT_LE(oracle::max_abs(out.matrix(), sc::matrix_unit(2, 0, 0)), 1e-15);
}

TEST(Constructors, PauliChannelRejectsInvalidProbabilities) {
  EXPECT_THROW(sc::pauli_channel({0.5, 0.5, 0.5, -0.5}), sc::ValidationError);
  EXPECT_THROW(sc::pauli_channel({0.3, 0.3, 0.3, 0.3}), sc::ValidationError);
  EXPECT_NO_THROW(sc::pauli_channel({1.0, 0, 0, 1e-12}));
}

TEST(ConstructorsProperty, OutputsPassKrausValidation) {
  sc::random::Rng rng(13);
  const std::vector<Channel> all{sc::identity(3), sc::depolarizing(2), sc::depolarizing(3),
                                 sc::constant_channel(sc::random::mixed_state(rng, 2), 2),
                                 sc::classical_identity(3), sc::pauli_channel({0.1, 0.2, 0.3, 0.4}),
                                 sc::partial_trace_channel({2, 3}, {1})};
  for (const auto& c : all) EXPECT_NO_THROW(sc::channel_from_kraus(c.kraus()));
}

TEST(IsConstant, ConstantIdentityAndSwitch) {
  sc::random::Rng rng(14);
  EXPECT_TRUE(sc::is_constant(sc::constant_channel(sc::random::mixed_state(rng, 2), 2), 1e-9));
  EXPECT_FALSE(sc::is_constant(sc::identity(2), 1e-9));
  const auto omega = sc::random::mixed_state(rng, 2);
  EXPECT_TRUE(sc::is_constant(sc::switch_place(sc::depolarizing(2), sc::identity(2), omega), 1e-9));
}

TEST(CombCheck, ProductOfStepsPasses) {
  sc::random::Rng rng(15);
  const Channel c1 = sc::random::channel(rng, 2), c2 = sc::random::channel(rng, 2);
  EXPECT_TRUE(sc::comb_check(sc::MultiPartiteChannel(sc::tensor(c1, c2), {{2, 2}, {2, 2}})));
}

TEST(CombCheck, SwapSignalsBackwards) {
  EXPECT_FALSE(sc::comb_check(
      sc::MultiPartiteChannel(sc::unitary_channel(swap_unitary()), {{2, 2}, {2, 2}})));
}

TEST(CombCheck, SingleStepAlwaysPasses) {
  sc::random::Rng rng(16);
  EXPECT_TRUE(sc::comb_check(sc::MultiPartiteChannel(sc::random::channel(rng, 3), {{3, 3}})));
}

TEST(CombCheck, CnotSignalsBothWaysByPhaseKickback) {
  const Channel c = sc::unitary_channel(cnot());
  EXPECT_FALSE(sc::comb_check(sc::MultiPartiteChannel(c, {{2, 2}, {2, 2}})));
}

TEST(CombCheck, ClassicallyControlledNotIsOneWay) {
  const Channel c = sc::compose(sc::unitary_channel(cnot()),
                                sc::tensor(sc::classical_identity(2), sc::identity(2)));
  EXPECT_TRUE(sc::comb_check(sc::MultiPartiteChannel(c, {{2, 2}, {2, 2}})));
  const Channel reversed = sc::compose(sc::unitary_channel(swap_unitary()),
                                       sc::compose(c, sc::unitary_channel(swap_unitary())));
  EXPECT_FALSE(sc::comb_check(sc::MultiPartiteChannel(reversed, {{2, 2}, {2, 2}})));
}

TEST(CombCheck, ThreeStepProductAndBackwardSignal) {
  sc::random::Rng rng(17);
  const Channel p = sc::tensor({sc::random::channel(rng, 2), sc::random::channel(rng, 2),
                                sc::random::channel(rng, 2)});
  EXPECT_TRUE(sc::comb_check(sc::MultiPartiteChannel(p, {{2, 2}, {2, 2}, {2, 2}})));
  // step 3 input routed to step 1 output
  const CMatrix back = sc::kron(swap_unitary(), sc::qubit::I());
  const CMatrix u = sc::kron(sc::qubit::I(), swap_unitary()) * back;
  EXPECT_FALSE(sc::comb_check(sc::MultiPartiteChannel(sc::unitary_channel(u), {{2, 2}, {2, 2}, {2, 2}})));
}

TEST(NoSignalling, ProductsPass) {
  sc::random::Rng rng(18);
  EXPECT_TRUE(sc::no_signalling_check(sc::MultiPartiteChannel(
      sc::tensor(sc::random::channel(rng, 2), sc::random::channel(rng, 3)), {{2, 2}, {3, 3}})));
  EXPECT_TRUE(sc::no_signalling_check(sc::MultiPartiteChannel(
      sc::tensor(sc::classical_identity(2), sc::identity(2)), {{2, 2}, {2, 2}})));
}

TEST(NoSignalling, CnotSignals) {
  EXPECT_FALSE(sc::no_signalling_check(
      sc::MultiPartiteChannel(sc::unitary_channel(cnot()), {{2, 2}, {2, 2}})));
}

TEST(NoSignalling, ThreePartiesAllSubsets) {
  sc::random::Rng rng(19);
  const Channel p = sc::tensor({sc::random::channel(rng, 2), sc::random::channel(rng, 2),
                                sc::random::channel(rng, 2)});
  EXPECT_TRUE(sc::no_signalling_check(sc::MultiPartiteChannel(p, {{2, 2}, {2, 2}, {2, 2}})));
  // CNOT between parties 1 and 3, party 2 idle
  const CMatrix s23 = sc::kron(sc::qubit::I(), swap_unitary());
  const CMatrix u = s23 * sc::kron(cnot(), sc::qubit::I()) * s23;
  EXPECT_FALSE(
      sc::no_signalling_check(sc::MultiPartiteChannel(sc::unitary_channel(u), {{2, 2}, {2, 2}, {2, 2}})));
}

TEST(StructuralProperty, ProductsPassBothChecksAndNoSignallingImpliesCombBothWays) {
  sc::random::Rng rng(20);
  for (int n = 0; n < 20; ++n) {
    const Channel a = sc::random::channel(rng, 2, 2, 1 + n % 4);
    const Channel b = sc::random::channel(rng, 2, 3, 1 + n % 3);
    const sc::MultiPartiteChannel ab(sc::tensor(a, b), {{2, 2}, {2, 3}});
    const sc::MultiPartiteChannel ba(sc::tensor(b, a), {{2, 3}, {2, 2}});
    EXPECT_TRUE(sc::no_signalling_check(ab));
    EXPECT_TRUE(sc::comb_check(ab));
    EXPECT_TRUE(sc::comb_check(ba));
  }
  // a signalling channel fails no-signalling and at least one comb ordering
  const sc::MultiPartiteChannel c(sc::unitary_channel(cnot()), {{2, 2}, {2, 2}});
  const sc::MultiPartiteChannel r(sc::unitary_channel(swap_unitary() * cnot() * swap_unitary()),
                                  {{2, 2}, {2, 2}});
  EXPECT_FALSE(sc::no_signalling_check(c));
  EXPECT_FALSE(sc::comb_check(c) && sc::comb_check(r));
}

TEST(MultiPartiteChannel, StepDimsMustMultiply) {
  EXPECT_THROW(sc::MultiPartiteChannel(sc::identity(4), {{2, 2}, {3, 2}}), sc::DimensionError);
}
