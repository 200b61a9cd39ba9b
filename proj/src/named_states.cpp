// Copyright 2026 The oddrank authors.
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

#include "oddrank/named_states.hpp"

#include <stdexcept>

namespace oddrank {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

int require_n(const std::optional<int>& n, const std::string& name) {
  if (!n) {
    throw std::invalid_argument("state '" + name + "' needs a qubit count n");
  }
  return *n;
}

void require_n_equals(const std::optional<int>& n, int expected,
                      const std::string& name) {
  if (n && *n != expected) {
    throw std::invalid_argument("state '" + name + "' is defined for n = " +
                                std::to_string(expected) + ", got n = " +
                                std::to_string(*n));
  }
}

bool want_rational(NumericMode mode) { return mode != NumericMode::kFloat; }

template <class Maker>
AnyState pick_mode(NumericMode mode, Maker&& make) {
  if (want_rational(mode)) return make(ComplexRational{});
  return make(complex_t{});
}

AnyState float_only(NumericMode mode, const std::string& name,
                    FloatState state) {
  if (mode == NumericMode::kRational) {
    throw std::invalid_argument("state '" + name +
                                "' has irrational amplitudes and is float-only");
  }
  return state;
}

ThreeQubitClass class_by_name(const std::string& name) {
  if (name == "a-bc") return ThreeQubitClass::kABc;
  if (name == "b-ac") return ThreeQubitClass::kBAc;
  if (name == "c-ab") return ThreeQubitClass::kCAb;
  return ThreeQubitClass::kFullySeparable;  // "a-b-c"
}

}  // namespace

AnyState make_named_state(const std::string& raw_name, std::optional<int> n,
                          std::optional<int> l, NumericMode mode) {
  const std::string name = lower(raw_name);

  if (name == "ghz") {
    const int nn = require_n(n, raw_name);
    return pick_mode(mode, [nn](auto tag) -> AnyState {
      return ghz_state<decltype(tag)>(nn);
    });
  }
  if (name == "w") {
    const int nn = require_n(n, raw_name);
    return pick_mode(mode, [nn](auto tag) -> AnyState {
      return w_state<decltype(tag)>(nn);
    });
  }
  if (name == "dicke") {
    const int nn = require_n(n, raw_name);
    if (!l) throw std::invalid_argument("Dicke state needs an excitation count l");
    const int ll = *l;
    return pick_mode(mode, [nn, ll](auto tag) -> AnyState {
      return dicke_state<decltype(tag)>(nn, ll);
    });
  }
  if (name == "zero") {
    const int nn = require_n(n, raw_name);
    return pick_mode(mode, [nn](auto tag) -> AnyState {
      return PureState<decltype(tag)>::basis(nn, 0);
    });
  }
  if (name.rfind("basis:", 0) == 0) {
    const std::string bits = name.substr(6);
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument("basis state expects a bit string, e.g. basis:01011");
    }
    const int nn = static_cast<int>(bits.size());
    require_n_equals(n, nn, raw_name);
    std::uint64_t idx = 0;
    for (char c : bits) idx = (idx << 1) | static_cast<std::uint64_t>(c - '0');
    return pick_mode(mode, [nn, idx](auto tag) -> AnyState {
      return PureState<decltype(tag)>::basis(nn, idx);
    });
  }
  if (name == "phi1") {
    require_n_equals(n, 5, raw_name);
    return pick_mode(mode, [](auto tag) -> AnyState {
      return ghz_state<decltype(tag)>(5);
    });
  }
  if (name == "phi2") {
    require_n_equals(n, 5, raw_name);
    return pick_mode(mode, [](auto tag) -> AnyState {
      return phi2_state<decltype(tag)>();
    });
  }
  if (name == "phi3") {
    require_n_equals(n, 5, raw_name);
    return float_only(mode, raw_name, phi3_state());
  }
  if (name == "phi4") {
    require_n_equals(n, 5, raw_name);
    return float_only(mode, raw_name, phi4_state());
  }
  if (name.rfind("table5:", 0) == 0) {
    const std::string pair = name.substr(7);
    if (pair.size() != 2 || pair.find_first_not_of("012") != std::string::npos) {
      throw std::invalid_argument(
          "table5 representative expects a rank pair, e.g. table5:21");
    }
    require_n_equals(n, 5, raw_name);
    const int r1 = pair[0] - '0';
    const int r2 = pair[1] - '0';
    return pick_mode(mode, [r1, r2](auto tag) -> AnyState {
      return table5_representative<decltype(tag)>(r1, r2);
    });
  }
  if (name == "a-bc" || name == "b-ac" || name == "c-ab" || name == "a-b-c") {
    require_n_equals(n, 3, raw_name);
    const ThreeQubitClass cls = class_by_name(name);
    return pick_mode(mode, [cls](auto tag) -> AnyState {
      return three_qubit_class_state<decltype(tag)>(cls);
    });
  }

  std::string known;
  for (const auto& k : named_state_catalog()) {
    if (!known.empty()) known += ", ";
    known += k;
  }
  throw std::invalid_argument("unknown state '" + raw_name +
                              "'; recognized names: " + known);
}

std::vector<std::string> named_state_catalog() {
  return {"GHZ",  "W",    "Dicke (with --l)", "zero",      "basis:<bits>",
          "Phi1", "Phi2", "Phi3",             "Phi4",      "table5:<r1><r2>",
          "A-BC", "B-AC", "C-AB",             "A-B-C"};
}

}  // namespace oddrank
