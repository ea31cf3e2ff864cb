// Copyright 2026 The SQNN Authors.
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

// Generated by tests/oracles/qnn_oracle.py. Do not edit.
#pragma once

#include <vector>

namespace frozen {

struct CircuitCase {
    const char *axes;
    const char *prep;
    const char *encoding_axis;
    std::vector<double> params;
    std::vector<double> angles;
    double expectation;
    std::vector<double> param_grad;
    std::vector<double> input_grad;
};

inline const std::vector<CircuitCase> &circuit_cases() {
    static const std::vector<CircuitCase> cases = {
        {"X", "zero", "X", {3.141592653589793},
         {0.0}, -1.0,
         {0.0},
         {0.0}},
        {"XYX", "plus", "X", {0.3, -1.1, 2.0, 0.7, -0.4, 1.9},
         {0.5, 2.5}, 0.10530308423768067,
         {-0.22640055861999908, -0.539761956269702, 0.20337817813187442, 0.33183102325640146, -0.1778398952753668, -0.003724305502883496},
         {-0.22640055864775466, -0.53976195653338}},
        {"YXY", "plus", "X", {1.2, -0.3, 0.9, -2.2, 0.1, 0.6, 1.7, -1.4, 0.25},
         {0.1, 1.3, 2.9}, 0.565433404459343,
         {0.2953488911772162, 0.17049757994325176, -0.4527197202675026, -0.0630949148483495, 0.011513077602387511, -0.2731966717850476, 0.3293637639290026, -0.42635786057232394, 0.515173035287031},
         {-0.3840057850590384, 0.1440745313052716, -0.15785715506977382}},
        {"XZ", "zero", "Y", {0.8, -0.6, 1.5, 2.4, -1.9, 0.35, -0.75, 1.05},
         {2.0, 0.4, 1.1, 3.0}, 0.15153333770049673,
         {0.5035404539027732, 0.3590753926974166, 0.5786589687556409, 0.266249061783852, 1.3877787807814457e-11, -6.938893903907228e-11, -2.7755575615628914e-11, -5.551115123125783e-11},
         {-0.15086310230227884, -0.28151852092539453, 0.0975209771547636, 0.44530567012979194}},
        {"ZYX", "plus", "Y", {-0.9, 1.4, 0.2, -2.7, 0.55, 1.15},
         {0.9, 1.8}, 0.3988232166132684,
         {-0.26472526645782146, -0.006329895246848238, 0.13751455116284284, 0.002138357019232373, -0.2677081714641538, 0.2061965082844619},
         {-0.482733968132365, 0.08873493848038372}},
    };
    return cases;
}

} // namespace frozen
