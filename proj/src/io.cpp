// Copyright 2026 The stabkit authors
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

#include "stabkit/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "stabkit/errors.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/oracle.hpp"
#include "stabkit/stabilizer.hpp"

namespace stabkit {

namespace {

using ojson = nlohmann::ordered_json;

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open " + path);
  }
  return in;
}

ojson witness_json(const StabilizerState& phi) {
  ojson w;
  auto& gens = w["generators"] = ojson::array();
  for (const F2Vec& g : phi.generators()) {
    gens.push_back(g.to_string());
  }
  auto& signs = w["signs"] = ojson::array();
  for (const uint8_t s : phi.signs()) {
    signs.push_back(static_cast<int>(s));
  }
  return w;
}

}  // namespace

const char* mode_name(SampleMode mode) {
  return mode == SampleMode::Exact ? "exact" : "physical";
}

SampleMode parse_mode(const std::string& name) {
  if (name == "exact") {
    return SampleMode::Exact;
  }
  if (name == "physical") {
    return SampleMode::Physical;
  }
  throw param_error("mode must be one of {exact, physical}, got '" + name + "'");
}

PureState load_state_file(const std::string& path, int n_override, const Caps& caps) {
  std::ifstream in = open_or_throw(path);
  std::vector<cplx> amps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    double re = 0.0;
    if (!(ls >> re)) {
      continue;  // blank or comment-only line
    }
    double im = 0.0;
    ls >> im;  // second value optional; absent means a real amplitude
    std::string extra;
    if (ls >> extra) {
      throw io_error(path + " line " + std::to_string(lineno) + ": trailing tokens");
    }
    amps.emplace_back(re, im);
  }
  if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
    throw io_error(path + ": amplitude count must be a power of two >= 2, got " +
                   std::to_string(amps.size()));
  }
  const int n = std::countr_zero(amps.size());
  if (n_override != 0 && n_override != n) {
    throw param_error("state file holds " + std::to_string(amps.size()) +
                      " amplitudes, which disagrees with n = " + std::to_string(n_override));
  }
  return PureState::from_amplitudes(n, std::move(amps), caps);
}

PureState load_circuit_state(const std::string& path, int n_override, const Caps& caps) {
  std::ifstream in = open_or_throw(path);
  const std::vector<Gate> gates = parse_circuit(in);
  int highest = -1;
  for (const Gate& g : gates) {
    highest = std::max(highest, g.q0);
    if (g.kind == Gate::Kind::CNOT) {
      highest = std::max(highest, g.q1);
    }
  }
  int n = n_override;
  if (n == 0) {
    if (highest < 0) {
      throw param_error("cannot infer the qubit count of an empty circuit; pass n explicitly");
    }
    n = highest + 1;
  } else if (highest >= n) {
    throw param_error("circuit touches qubit " + std::to_string(highest) +
                      " but n = " + std::to_string(n));
  }
  return from_circuit(n, gates, caps);
}

std::string report_json(const DistinguishReport& r) {
  ojson j;
  j["kind"] = "distinguish";
  j["n"] = r.n;
  j["verdict"] = r.verdict;
  j["span_dim"] = r.span_dim;
  j["m_used"] = r.m_used;
  j["seed"] = r.seed;
  j["mode"] = mode_name(r.mode);
  j["delta"] = r.delta;
  return j.dump();
}

std::string report_json(const FidelityReport& r) {
  ojson j;
  j["kind"] = "fidelity";
  j["n"] = r.n;
  j["estimate"] = r.estimate;
  j["raw_estimate"] = r.raw_estimate;
  j["witness"] = witness_json(r.witness);
  j["clique_count"] = r.clique_count;
  j["candidate_count"] = r.candidate_count;
  j["m_clique"] = r.m_clique;
  j["m_shadow"] = r.m_shadow;
  j["batch_count"] = r.batch_count;
  j["seed"] = r.seed;
  j["mode"] = mode_name(r.mode);
  j["tau"] = r.tau;
  j["eps"] = r.eps;
  j["delta"] = r.delta;
  return j.dump();
}

std::string report_json(const TestReport& r) {
  ojson j;
  j["kind"] = "test";
  j["n"] = r.n;
  j["verdict"] = r.verdict;
  j["eta_hat"] = r.eta_hat;
  j["threshold"] = r.threshold;
  j["gamma"] = r.gamma;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["mode"] = mode_name(r.mode);
  j["alpha1"] = r.alpha1;
  j["alpha2"] = r.alpha2;
  j["delta"] = r.delta;
  return j.dump();
}

std::string eta_report_json(int n, uint64_t m, uint64_t seed, SampleMode mode, double eta_hat) {
  ojson j;
  j["kind"] = "eta";
  j["n"] = n;
  j["eta_hat"] = eta_hat;
  j["m"] = m;
  j["seed"] = seed;
  j["mode"] = mode_name(mode);
  return j.dump();
}

std::string verify_report_json(const IdentitySuiteResult& r) {
  ojson j;
  j["kind"] = "verify";
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["passed"] = r.all_passed();
  j["mass_duality_failures"] = r.mass_duality_failures;
  j["conv_mass_failures"] = r.conv_mass_failures;
  j["fourier_fixed_point_failures"] = r.fourier_fixed_point_failures;
  j["fourier_product_failures"] = r.fourier_product_failures;
  j["worst_error"] = r.worst_error;
  return j.dump();
}

std::string samples_json(int n, uint64_t seed, SampleMode mode, std::span<const F2Vec> samples) {
  ojson j;
  j["kind"] = "samples";
  j["n"] = n;
  j["seed"] = seed;
  j["mode"] = mode_name(mode);
  j["count"] = samples.size();
  auto& rows = j["samples"] = ojson::array();
  for (const F2Vec& x : samples) {
    rows.push_back(x.to_string());
  }
  return j.dump();
}

std::string samples_csv(std::span<const F2Vec> samples) {
  std::string out = "label\n";
  for (const F2Vec& x : samples) {
    out += x.to_string();
    out += '\n';
  }
  return out;
}

std::string distributions_json(const CharDistribution& p, const WeylDistribution& q) {
  if (p.n() != q.n()) {
    throw param_error("distribution widths must agree");
  }
  ojson j;
  j["kind"] = "distributions";
  j["n"] = p.n();
  j["p"] = p.values();
  j["q"] = q.values();
  return j.dump();
}

std::string distributions_csv(const CharDistribution& p, const WeylDistribution& q) {
  if (p.n() != q.n()) {
    throw param_error("distribution widths must agree");
  }
  std::string out = "label,p,q\n";
  char buf[80];
  for (uint64_t w = 0; w < p.size(); ++w) {
    out += F2Vec(p.n(), w).to_string();
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", p[w], q[w]);
    out += buf;
  }
  return out;
}

std::string catalog_json(int n) {
  const StabilizerCatalog& catalog = stabilizer_catalog(n);
  ojson j;
  j["kind"] = "catalog";
  j["n"] = n;
  j["count"] = catalog.size();
  auto& states = j["states"] = ojson::array();
  for (const CatalogEntry& entry : catalog.entries()) {
    ojson e;
    auto& gens = e["generators"] = ojson::array();
    for (const uint64_t row : entry.generator_rows) {
      gens.push_back(F2Vec(n, row).to_string());
    }
    auto& signs = e["signs"] = ojson::array();
    for (size_t i = 0; i < entry.generator_rows.size(); ++i) {
      signs.push_back(static_cast<int>((entry.sign_bits >> i) & 1));
    }
    auto& amps = e["amplitudes"] = ojson::array();
    for (const cplx& a : entry.state.amplitudes()) {
      amps.push_back(ojson::array({a.real(), a.imag()}));
    }
    states.push_back(std::move(e));
  }
  return j.dump();
}

std::string regime_grid_csv(double step) {
  if (!(step > 0.0) || !(step <= 1.0)) {
    throw param_error("grid step must satisfy 0 < step <= 1");
  }
  const int count = static_cast<int>(std::floor(1.0 / step + 1e-9)) + 1;
  std::string out = "alpha1,alpha2,ours,gnw\n";
  char buf[96];
  for (int i = 0; i < count; ++i) {
    const double a1 = std::min(1.0, i * step);
    for (int k = 0; k < count; ++k) {
      const double a2 = std::min(1.0, k * step);
      const RegimeCheck rc = regime_check(a1, a2);
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,%d,%d\n", a1, a2, rc.ours ? 1 : 0,
                    rc.gnw ? 1 : 0);
      out += buf;
    }
  }
  return out;
}

void save_shadows(std::ostream& out, const ShadowSet& shadows) {
  ojson header;
  header["kind"] = "shadows";
  header["n"] = shadows.n();
  header["batch_count"] = shadows.batch_count();
  header["count"] = shadows.size();
  out << header.dump() << '\n';
  for (const ShadowSample& sample : shadows.samples()) {
    // Build the arrays before inserting: ordered_json storage may move on insert.
    ojson rows = ojson::array();
    ojson phases = ojson::array();
    for (int j = 0; j < 2 * shadows.n(); ++j) {
      rows.push_back(sample.clifford.image(j).to_string());
      phases.push_back(sample.clifford.phase_bit(j));
    }
    ojson rec;
    rec["rows"] = std::move(rows);
    rec["phases"] = std::move(phases);
    rec["outcome"] = sample.outcome;
    out << rec.dump() << '\n';
  }
}

ShadowSet load_shadows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw io_error("shadow stream is empty");
  }
  const ojson header = ojson::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object() || header.value("kind", "") != "shadows" ||
      !header.contains("n") || !header.contains("batch_count") || !header.contains("count")) {
    throw io_error("malformed shadow header");
  }
  const int n = header["n"].get<int>();
  const int batch_count = header["batch_count"].get<int>();
  const auto count = header["count"].get<uint64_t>();
  if (n < 1 || n > kMaxF2Qubits) {
    throw io_error("shadow header has invalid n");
  }

  std::vector<ShadowSample> samples;
  samples.reserve(static_cast<size_t>(std::min<uint64_t>(count, uint64_t{1} << 20)));
  for (uint64_t rec_index = 0; rec_index < count; ++rec_index) {
    if (!std::getline(in, line)) {
      throw io_error("shadow stream ends after " + std::to_string(rec_index) + " of " +
                     std::to_string(count) + " records");
    }
    const std::string where = "shadow record " + std::to_string(rec_index + 1);
    const ojson rec = ojson::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("rows") ||
        !rec.contains("phases") || !rec.contains("outcome")) {
      throw io_error(where + " is malformed");
    }
    const auto& rows = rec["rows"];
    const auto& phases = rec["phases"];
    if (!rows.is_array() || !phases.is_array() || rows.size() != static_cast<size_t>(2 * n) ||
        phases.size() != static_cast<size_t>(2 * n)) {
      throw io_error(where + " must carry 2n rows and 2n phase bits");
    }
    std::vector<uint64_t> words(static_cast<size_t>(2 * n));
    std::vector<uint8_t> bits(static_cast<size_t>(2 * n));
    try {
      for (int j = 0; j < 2 * n; ++j) {
        const F2Vec row = F2Vec::from_string(rows[static_cast<size_t>(j)].get<std::string>());
        if (row.n() != n) {
          throw param_error("row width mismatch");
        }
        words[static_cast<size_t>(j)] = row.bits();
        const int bit = phases[static_cast<size_t>(j)].get<int>();
        if (bit != 0 && bit != 1) {
          throw param_error("phase bits must be 0 or 1");
        }
        bits[static_cast<size_t>(j)] = static_cast<uint8_t>(bit);
      }
      const auto outcome = rec["outcome"].get<uint64_t>();
      if (outcome >> n != 0) {
        throw param_error("outcome exceeds the basis range");
      }
      samples.push_back(ShadowSample{tableau_from_rows(n, words, bits), outcome});
    } catch (const param_error& e) {
      throw io_error(where + ": " + e.what());
    }
  }
  return ShadowSet(n, std::move(samples), batch_count);
}

}  // namespace stabkit
