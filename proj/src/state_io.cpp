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

#include "oddrank/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace oddrank {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "oddrank-state";
constexpr const char* kConvention = "qubit1=MSB";

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error("state file: " + message);
}

rational_t parse_rational(const json& j) {
  if (!j.is_string()) fail("rational amplitudes must be \"p/q\" strings");
  try {
    return rational_t(j.get<std::string>());
  } catch (const std::exception&) {
    fail("cannot parse rational value '" + j.get<std::string>() + "'");
  }
}

std::string rational_to_string(const rational_t& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

double parse_finite_double(const json& j) {
  if (!j.is_number()) fail("float amplitudes must be JSON numbers");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail("amplitudes must be finite");
  return v;
}

AnyState parse_state(const json& doc) {
  if (!doc.is_object()) fail("document must be a JSON object");
  if (doc.value("format", std::string{}) != kFormatName) {
    fail("missing or unexpected \"format\" (want \"" +
         std::string(kFormatName) + "\")");
  }
  if (const auto it = doc.find("convention");
      it != doc.end() && *it != kConvention) {
    fail("unsupported qubit convention '" + it->get<std::string>() +
         "' (this tool uses " + std::string(kConvention) + ")");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail("missing integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n % 2 == 0) {
    fail("n = " + std::to_string(n) +
         " is even; the rank invariants are defined for odd n >= 3 only");
  }
  if (n < 3 || n > 30) fail("n must be an odd integer in 3..29");

  const std::string mode = doc.value("mode", "float");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    fail("missing \"amplitudes\" array");
  }
  const auto& amps = doc["amplitudes"];
  const auto dim = Eigen::Index{1} << n;
  if (static_cast<Eigen::Index>(amps.size()) != dim) {
    fail("expected 2^n = " + std::to_string(dim) + " amplitudes, got " +
         std::to_string(amps.size()));
  }

  const auto entry = [](const json& j) -> const json& {
    if (!j.is_array() || j.size() != 2) {
      fail("each amplitude must be a [real, imaginary] pair");
    }
    return j;
  };

  if (mode == "rational") {
    RationalState::Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const json& pair = entry(amps[static_cast<std::size_t>(i)]);
      v[i] = ComplexRational(parse_rational(pair[0]), parse_rational(pair[1]));
    }
    return RationalState(n, std::move(v));
  }
  if (mode == "float") {
    FloatState::Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const json& pair = entry(amps[static_cast<std::size_t>(i)]);
      v[i] = complex_t(parse_finite_double(pair[0]),
                       parse_finite_double(pair[1]));
    }
    return FloatState(n, std::move(v));
  }
  fail("mode must be \"float\" or \"rational\", got '" + mode + "'");
}

json serialize(const AnyState& state) {
  json doc;
  doc["format"] = kFormatName;
  doc["convention"] = kConvention;
  doc["n"] = num_qubits(state);
  json amps = json::array();
  if (const auto* rs = std::get_if<RationalState>(&state)) {
    doc["mode"] = "rational";
    for (Eigen::Index i = 0; i < rs->size(); ++i) {
      const ComplexRational& z = (*rs)[i];
      amps.push_back({rational_to_string(z.real()),
                      rational_to_string(z.imag())});
    }
  } else {
    const auto& fs = std::get<FloatState>(state);
    doc["mode"] = "float";
    for (Eigen::Index i = 0; i < fs.size(); ++i) {
      const complex_t& z = fs[i];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        fail("refusing to write non-finite amplitude");
      }
      amps.push_back({z.real(), z.imag()});
    }
  }
  doc["amplitudes"] = std::move(amps);
  return doc;
}

}  // namespace

AnyState read_state(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  try {
    return parse_state(doc);
  } catch (const json::exception& e) {
    fail(std::string("malformed document: ") + e.what());
  }
}

AnyState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "' for reading");
  return read_state(in);
}

void write_state(std::ostream& out, const AnyState& state) {
  out << serialize(state).dump(2) << '\n';
}

void write_state_file(const std::string& path, const AnyState& state) {
  std::ofstream out(path);
  if (!out) fail("cannot open '" + path + "' for writing");
  write_state(out, state);
  if (!out) fail("write to '" + path + "' failed");
}

std::string state_format_name() { return kFormatName; }

}  // namespace oddrank
