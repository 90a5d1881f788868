// Copyright 2026 The qdla Authors
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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qdla/error.hpp"
#include "qdla/optim.hpp"

namespace qdla {
namespace {

// Textbook scalar Adam for one coordinate.
struct ScalarAdam {
  double m = 0.0, v = 0.0;
  int t = 0;
  double step(double x, double g, const AdamConfig& c) {
    ++t;
    m = c.beta1 * m + (1 - c.beta1) * g;
    v = c.beta2 * v + (1 - c.beta2) * g * g;
    const double mh = m / (1 - std::pow(c.beta1, t));
    const double vh = v / (1 - std::pow(c.beta2, t));
    return x - c.lr * mh / (std::sqrt(vh) + c.epsilon);
  }
};

TEST(Adam, MatchesScalarReference) {
  AdamConfig cfg;
  cfg.lr = 0.01;
  std::vector<double> x = {1.0, -2.0, 0.5};
  std::vector<ScalarAdam> ref(3);
  std::vector<double> rx = x;
  AdamState st;
  for (int it = 0; it < 100; ++it) {
    std::vector<double> g(3);
    for (std::size_t i = 0; i < 3; ++i) g[i] = std::sin(x[i] * (1.0 + static_cast<double>(i))) + 0.1 * it;
    for (std::size_t i = 0; i < 3; ++i) {
      rx[i] = ref[i].step(rx[i], std::sin(rx[i] * (1.0 + static_cast<double>(i))) + 0.1 * it, cfg);
    }
    adam_step(x, g, st, cfg);
    for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(x[i], rx[i], 1e-12) << it;
  }
  EXPECT_EQ(st.t, 100u);
}

TEST(Adam, ConvergesOnQuadraticBowl) {
  AdamConfig cfg;
  std::vector<double> x = {0.8, -0.6};
  const double centre[2] = {0.3, 0.1};
  AdamState st;
  for (int it = 0; it < 5000; ++it) {
    std::vector<double> g = {2 * (x[0] - centre[0]), 8 * (x[1] - centre[1])};
    adam_step(x, g, st, cfg);
  }
  EXPECT_NEAR(x[0], centre[0], 1e-6);
  EXPECT_NEAR(x[1], centre[1], 1e-6);
}

TEST(Adam, ZeroGradientLeavesParameters) {
  std::vector<double> x = {0.25, -1.5};
  const std::vector<double> zero(2, 0.0);
  AdamState st;
  for (int it = 0; it < 10; ++it) adam_step(x, zero, st, AdamConfig{});
  EXPECT_EQ(x[0], 0.25);
  EXPECT_EQ(x[1], -1.5);
  EXPECT_EQ(st.t, 10u);
}

TEST(Adam, ShapeAndConfigErrors) {
  std::vector<double> x(3, 0.0);
  const std::vector<double> g2(2, 1.0);
  AdamState st;
  EXPECT_THROW(adam_step(x, g2, st, AdamConfig{}), DimensionError);
  const std::vector<double> g3(3, 1.0);
  adam_step(x, g3, st, AdamConfig{});
  std::vector<double> y(4, 0.0);
  const std::vector<double> g4(4, 1.0);
  EXPECT_THROW(adam_step(y, g4, st, AdamConfig{}), DimensionError);

  AdamConfig bad;
  bad.lr = 0.0;
  EXPECT_THROW(validate(bad), InvalidInput);
  bad = {};
  bad.beta1 = 1.0;
  EXPECT_THROW(validate(bad), InvalidInput);
  bad = {};
  bad.beta2 = -0.1;
  EXPECT_THROW(validate(bad), InvalidInput);
  bad = {};
  bad.epsilon = 0.0;
  EXPECT_THROW(validate(bad), InvalidInput);
  EXPECT_NO_THROW(validate(AdamConfig{}));
}

}  // namespace
}  // namespace qdla
