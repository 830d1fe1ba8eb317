#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace feynman {
namespace {

TEST(Properties, SeriesRingAxioms) { EXPECT_EQ(properties::series_ring_axioms(11), ""); }
TEST(Properties, ExpLogRoundTrips) { EXPECT_EQ(properties::exp_log_round_trips(12), ""); }
TEST(Properties, MoebiusValues) { EXPECT_EQ(properties::moebius_values(), ""); }
TEST(Properties, ReversalAntisymmetry) { EXPECT_EQ(properties::reversal_antisymmetry(), ""); }
TEST(Properties, WindingIntegrality) { EXPECT_EQ(properties::winding_integrality(13), ""); }

}  // namespace
}  // namespace feynman
