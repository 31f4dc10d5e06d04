// Copyright 2026 The squeezekit Authors
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

// JSON forms of the library's value types:
//   DickeVector      {"N": int, "amps": [real]}
//   TwoQubitDensity  {"A":..,"B":..,"C":..,"D":..,"E":..,"F":..}
//   SqueezingReport  {"xi", "tperp_min", "n_min", "mean_spin_len", "squeezed", "degenerate"}

#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "squeezekit/reduction.hpp"
#include "squeezekit/squeezing.hpp"
#include "squeezekit/state_family.hpp"

namespace squeezekit {

inline void to_json(nlohmann::json& j, const DickeVector& v) {
  j = nlohmann::json{{"N", v.n()}, {"amps", v.amps()}};
}

inline DickeVector dicke_from_json(const nlohmann::json& j) {
  try {
    return DickeVector(j.at("N").get<int>(), j.at("amps").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("DickeVector JSON: ") + e.what());
  }
}

inline void to_json(nlohmann::json& j, const TwoQubitDensity& r) {
  j = nlohmann::json{{"A", r.A}, {"B", r.B}, {"C", r.C}, {"D", r.D}, {"E", r.E}, {"F", r.F}};
}

inline void from_json(const nlohmann::json& j, TwoQubitDensity& r) {
  j.at("A").get_to(r.A);
  j.at("B").get_to(r.B);
  j.at("C").get_to(r.C);
  j.at("D").get_to(r.D);
  j.at("E").get_to(r.E);
  j.at("F").get_to(r.F);
}

inline void to_json(nlohmann::json& j, const SqueezingReport& rep) {
  j = nlohmann::json::object();
  j["xi"] = rep.xi ? nlohmann::json(*rep.xi) : nlohmann::json(nullptr);
  j["tperp_min"] = rep.degenerate ? nlohmann::json(nullptr) : nlohmann::json(rep.tperp_min);
  j["n_min"] = rep.degenerate ? nlohmann::json(nullptr)
                              : nlohmann::json{rep.n_min.x(), rep.n_min.y(), rep.n_min.z()};
  j["mean_spin_len"] = rep.mean_spin_len;
  j["squeezed"] = rep.squeezed;
  j["degenerate"] = rep.degenerate;
}

}  // namespace squeezekit
