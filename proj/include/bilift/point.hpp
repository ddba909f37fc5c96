// Copyright 2026 The Bilift Authors
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

#ifndef BILIFT_POINT_HPP_
#define BILIFT_POINT_HPP_

#include <vector>

namespace bilift {

// A candidate point (x, y) in [0,1]^{2n} with its constraint slack
// sum_i a_i x_i y_i - d. The slack is always recomputed from the instance,
// never trusted from input.
struct PointPair {
  std::vector<double> x;
  std::vector<double> y;
  double slack = 0.0;
};

}  // namespace bilift

#endif  // BILIFT_POINT_HPP_
