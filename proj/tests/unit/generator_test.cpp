#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ciprng/errors.hpp"
#include "ciprng/generator.hpp"

namespace ciprng {
namespace {

Generator table_one_generator() {
  return Generator({1, 0, 1, 0, 0}, TranscriptDriver({2, 4, 2, 2, 5, 1, 1, 5, 5, 3, 2, 3, 3}, {4, 5, 4}));
}

TEST(LogisticStep, Examples) {
  EXPECT_EQ(logistic_step(0.5), 1.0);
  EXPECT_EQ(logistic_step(0.0), 0.0);
  EXPECT_EQ(logistic_step(1.0), 0.0);
  // Printed six-digit prefix of the first iterate.
  EXPECT_EQ(std::floor(logistic_step(0.484076) * 1e6) / 1e6, 0.998985);
}

TEST(LogisticStep, StaysInUnitIntervalProperty) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double y = unit(rng);
    for (int k = 0; k < 50; ++k) {
      y = logistic_step(y);
      ASSERT_GE(y, 0.0);
      ASSERT_LE(y, 1.0);
    }
  }
}

TEST(StrategyFromY, Examples) {
  EXPECT_EQ(strategy_from_y(0.0, 5), 1u);
  EXPECT_EQ(strategy_from_y(0.25, 5), 1u);
  // binary64 1e7 * 0.998985 == 9989850 exactly (integer oracle), 9989850 mod 5 = 0.
  EXPECT_EQ(strategy_from_y(0.998985, 5), 1u);
  EXPECT_EQ(strategy_from_y(0.998985, 8), 3u);
  EXPECT_EQ(strategy_from_y(0.1234567, 5), 3u);
  EXPECT_EQ(strategy_from_y(0.9999999, 8), 8u);
  EXPECT_EQ(strategy_from_y(1.0, 5), 1u);
}

TEST(StrategyFromY, DriverTrajectoryFromWorkedSeed) {
  // Exact-integer oracle over the binary64 trajectory from 0.484076.
  const std::size_t expected[] = {1, 3, 1, 1, 4, 5, 5, 4, 4};
  double y = 0.484076;
  for (auto s : expected) {
    EXPECT_EQ(strategy_from_y(y, 5), s) << y;
    y = logistic_step(y);
  }
}

TEST(MFromY, Examples) {
  const std::vector<unsigned> m45 = {4, 5};
  EXPECT_EQ(m_from_y(0.484076, m45), 4u);
  EXPECT_EQ(m_from_y(0.5, m45), 5u);
  EXPECT_EQ(m_from_y(std::nextafter(0.5, 0.0), m45), 4u);
  EXPECT_EQ(m_from_y(0.999, std::vector<unsigned>{14, 15}), 15u);
  EXPECT_EQ(m_from_y(1.0, m45), 5u);
  EXPECT_EQ(m_from_y(0.7, std::vector<unsigned>{8}), 8u);
  const std::vector<unsigned> eight = {1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(m_from_y(0.0, eight), 1u);
  EXPECT_EQ(m_from_y(0.125, eight), 2u);
  EXPECT_EQ(m_from_y(0.99, eight), 8u);
}

TEST(MFromY, MatchesPrintedGapPrefix) {
  // The printed m list starts 4, 5, 4, 4, 4, 4, 5, 5 for y^0 .. y^7.
  const unsigned expected[] = {4, 5, 4, 4, 4, 4, 5, 5};
  double y = 0.484076;
  for (auto m : expected) {
    EXPECT_EQ(m_from_y(y, std::vector<unsigned>{4, 5}), m);
    y = logistic_step(y);
  }
}

TEST(ChaoticStep, Examples) {
  EXPECT_EQ(chaotic_step(BitSequence{1, 0, 1, 0, 0}, 2), (BitSequence{1, 1, 1, 0, 0}));
  EXPECT_EQ(chaotic_step(BitSequence{1, 1, 1, 1, 0}, 5), (BitSequence{1, 1, 1, 1, 1}));
  EXPECT_THROW(chaotic_step(BitSequence{1, 0}, 0), std::out_of_range);
  EXPECT_THROW(chaotic_step(BitSequence{1, 0}, 3), std::out_of_range);
}

TEST(ChaoticStep, InvolutionAndFullNegationProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    BitSequence x(2 + rng() % 30);
    for (auto& b : x) b = rng() & 1;
    const std::size_t s = 1 + rng() % x.size();
    EXPECT_EQ(chaotic_step(chaotic_step(x, s), s), x);
    auto all = x;
    for (std::size_t c = 1; c <= x.size(); ++c) all = chaotic_step(all, c);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(all[i], 1 - x[i]);
  }
}

TEST(NextBlock, WorkedExampleBlocks) {
  auto gen = table_one_generator();
  EXPECT_EQ(gen.next_block(), (BitSequence{1, 0, 1, 0, 0}));
  EXPECT_EQ(gen.iter_count(), 0u);
  EXPECT_EQ(gen.next_block(), (BitSequence{1, 1, 1, 1, 0}));
  EXPECT_EQ(gen.iter_count(), 4u);
  EXPECT_EQ(gen.next_block(), (BitSequence{1, 1, 1, 1, 1}));
  EXPECT_EQ(gen.iter_count(), 9u);
  EXPECT_EQ(gen.next_block(), (BitSequence{1, 0, 0, 1, 1}));
  EXPECT_EQ(gen.iter_count(), 13u);
  EXPECT_EQ(gen.blocks_emitted(), 4u);
  EXPECT_THROW(gen.next_block(), TranscriptExhausted);
}

TEST(GenerateBits, WorkedExampleOutput) {
  auto gen = table_one_generator();
  EXPECT_EQ(to_ascii(gen.read_bits(20)), "10100111101111110011");
}

TEST(GenerateBits, StreamingMatchesOneShot) {
  const auto config = scheme_config("scheme-6", TimeSeed{484076});
  const auto whole = generate_bits(config, 1000);
  Generator gen(config);
  BitSequence pieces;
  std::mt19937 rng(5);
  while (pieces.size() < whole.size()) {
    const auto part = gen.read_bits(std::min<std::size_t>(rng() % 13, whole.size() - pieces.size()));
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  EXPECT_EQ(pieces, whole);
}

TEST(GenerateBits, TruncationAndEmpty) {
  const auto config = scheme_config("scheme-4", TimeSeed{484076});
  EXPECT_TRUE(generate_bits(config, 0).empty());
  const auto ten = generate_bits(config, 10);
  const auto seven = generate_bits(config, 7);
  EXPECT_EQ(seven, BitSequence(ten.begin(), ten.begin() + 7));
}

TEST(GenerateBits, IndependentOracleStreams) {
  // Frozen from tests/oracles/generator_oracle.py, a separate implementation.
  EXPECT_EQ(to_ascii(generate_bits(scheme_config("scheme-6", TimeSeed{484076}), 64)),
            "0110001010011001110101010100001101001110001000001111111110011010");
  EXPECT_EQ(to_ascii(generate_bits(scheme_config("scheme-4", TimeSeed{484076}), 40)),
            "0110001010000111101101001110001010100011");
  EXPECT_EQ(to_ascii(generate_bits(scheme_config("scheme-3", TimeSeed{123457}), 48)),
            "010000010100001101000110010001110001001110110111");
  EXPECT_EQ(to_ascii(generate_bits(scheme_config("scheme-6", TimeSeed{484076}, false), 30)),
            "010100110011101010101000011010");
}

TEST(GenerateBits, Deterministic) {
  const auto config = scheme_config("scheme-5", TimeSeed{987654});
  EXPECT_EQ(generate_bits(config, 5000), generate_bits(config, 5000));
}

TEST(GeneratorInvariants, HammingStepAndBlockArithmetic) {
  const auto config = scheme_config("scheme-3", TimeSeed{424242});
  Generator gen(config);
  gen.next_block();  // x0
  std::uint64_t total_gap = 0;
  for (int block = 0; block < 500; ++block) {
    // Replay the block one cell update at a time.
    const auto before = gen.x();
    const auto cells = gen.upcoming_strategy(64);
    const auto& after = gen.next_block();
    total_gap += gen.last_gap();
    EXPECT_EQ(gen.iter_count(), total_gap);
    auto replay = before;
    for (unsigned k = 0; k < gen.last_gap(); ++k) {
      const auto next = chaotic_step(replay, cells[k]);
      std::size_t differing = 0;
      for (std::size_t i = 0; i < next.size(); ++i) differing += next[i] != replay[i];
      EXPECT_EQ(differing, 1u);
      replay = next;
    }
    EXPECT_EQ(replay, after);
    const auto state = gen.state();
    EXPECT_GE(state.y, 0.0);
    EXPECT_LE(state.y, 1.0);
  }
}

TEST(GeneratorInvariants, DriverInterleaving) {
  // Block 1 draws y^0 for m, then y^1 .. y^m for the cells.
  const auto config = scheme_config("scheme-4", TimeSeed{484076});
  Generator gen(config);
  gen.next_block();
  const auto cells = gen.upcoming_strategy(4);
  double y = 0.484076;
  EXPECT_EQ(m_from_y(y, config.m_set()), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    y = logistic_step(y);
    EXPECT_EQ(cells[k], strategy_from_y(y, 5));
  }
  gen.next_block();
  EXPECT_EQ(gen.last_gap(), 4u);
  EXPECT_EQ(gen.state().y, logistic_step(y));
}

TEST(GeneratorInvariants, StrictModeSkipsInitialState) {
  const auto with = generate_bits(scheme_config("scheme-6", TimeSeed{484076}, true), 55);
  const auto without = generate_bits(scheme_config("scheme-6", TimeSeed{484076}, false), 50);
  EXPECT_EQ(BitSequence(with.begin() + 5, with.end()), without);
}

TEST(DeadSeed, FixedPointIsReported) {
  // 0.14644660940672624 -> 0.5 -> 1 -> 0 -> 0 in binary64.
  const GeneratorConfig config(5, {14, 15}, ExplicitSeed{{1, 0, 1, 0, 0}, 0.14644660940672624});
  EXPECT_THROW(generate_bits(config, 100), DegenerateSeedError);

  LogisticDriver driver(0.14644660940672624);
  EXPECT_EQ(driver.draw(), 0.14644660940672624);
  EXPECT_EQ(driver.draw(), 0.5);
  EXPECT_EQ(driver.draw(), 1.0);
  EXPECT_THROW(driver.draw(), DegenerateSeedError);
}

TEST(TranscriptDriver, Validation) {
  EXPECT_THROW(TranscriptDriver({}, {1}), ConfigError);
  EXPECT_THROW(TranscriptDriver({0}, {1}), ConfigError);
  EXPECT_THROW(TranscriptDriver({1}, {0}), ConfigError);
  EXPECT_THROW(Generator({0, 0}, TranscriptDriver({3}, {1})), ConfigError);
}

}  // namespace
}  // namespace ciprng
