// Copyright 2026 The Fairmeter Authors
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

#ifndef FAIRMETER_CENSUS_HPP_
#define FAIRMETER_CENSUS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairmeter/member.hpp"
#include "fairmeter/race.hpp"

namespace fairmeter {

// Uppercases, keeps letters and hyphens, collapses whitespace runs to a
// single space, trims. Census surname files are uppercase; member names are
// normalized to match before lookup.
std::string normalize_name(std::string_view raw);

bool is_valid_zcta(std::string_view zcta);

// Pr(r|s) rows keyed by normalized surname. Every row is on the simplex
// within 1e-9 after load.
struct SurnameTable {
  std::unordered_map<std::string, RaceVector> entries;

  const RaceVector* find(std::string_view surname) const;
};

// Pr(g|r) likelihood rows keyed by ZCTA. For each race the column over all
// ZCTAs is a probability distribution (sums to 1 within 1e-6).
struct GeoTable {
  std::unordered_map<std::string, RaceVector> entries;

  const RaceVector* find(std::string_view zcta) const;
};

// Pr(f|r) likelihood rows keyed by normalized first name. Partial coverage
// allowed: columns sum to at most 1.
struct FirstnameTable {
  std::unordered_map<std::string, RaceVector> entries;

  const RaceVector* find(std::string_view first_name) const;
};

// National marginal Pr(r), the fallback for out-of-table surnames.
struct RacePrior {
  RaceVector marginal = uniform_race_vector();
};

struct CensusTables {
  SurnameTable surnames;
  GeoTable geo;
  FirstnameTable firstnames;
  RacePrior prior;
};

// CSV schemas are documented in docs/formats.md. Loaders reject rows whose
// simplex/distribution drift exceeds 1e-6 and renormalize drift above 1e-9;
// values already within 1e-9 are kept bit-exact so canonical files
// round-trip.
SurnameTable load_surname_table(const std::filesystem::path& path);
GeoTable load_geo_table(const std::filesystem::path& path);
FirstnameTable load_firstname_table(const std::filesystem::path& path);
RacePrior load_race_prior(const std::filesystem::path& path);

void save_surname_table(const SurnameTable& table,
                        const std::filesystem::path& path);
void save_geo_table(const GeoTable& table, const std::filesystem::path& path);
void save_firstname_table(const FirstnameTable& table,
                          const std::filesystem::path& path);
void save_race_prior(const RacePrior& prior,
                     const std::filesystem::path& path);

// Standard file names inside a data directory: surnames.csv, geo.csv,
// firstnames.csv, prior.csv.
CensusTables load_census_tables(const std::filesystem::path& dir);
void save_census_tables(const CensusTables& tables,
                        const std::filesystem::path& dir);

// Full joint distribution Pr(r, s, g[, f]) used by the brute-force
// posterior oracle and by synthetic member sampling. The first-name
// dimension is optional.
class JointTable {
 public:
  JointTable(std::vector<std::string> surnames, std::vector<std::string> zctas,
             std::vector<std::string> firstnames);

  double cell(int r, std::size_t s, std::size_t g, std::size_t f = 0) const;
  double& cell(int r, std::size_t s, std::size_t g, std::size_t f = 0);

  std::optional<std::size_t> surname_index(std::string_view surname) const;
  std::optional<std::size_t> zcta_index(std::string_view zcta) const;
  std::optional<std::size_t> firstname_index(std::string_view name) const;

  bool has_firstnames() const { return !firstnames_.empty(); }
  std::size_t surname_count() const { return surnames_.size(); }
  std::size_t zcta_count() const { return zctas_.size(); }
  std::size_t firstname_count() const { return firstnames_.size(); }
  std::size_t cell_count() const { return cells_.size(); }

  const std::vector<std::string>& surnames() const { return surnames_; }
  const std::vector<std::string>& zctas() const { return zctas_; }
  const std::vector<std::string>& firstnames() const { return firstnames_; }

 private:
  std::size_t index_of(int r, std::size_t s, std::size_t g,
                       std::size_t f) const;

  std::vector<std::string> surnames_;
  std::vector<std::string> zctas_;
  std::vector<std::string> firstnames_;
  std::unordered_map<std::string, std::size_t> surname_idx_;
  std::unordered_map<std::string, std::size_t> zcta_idx_;
  std::unordered_map<std::string, std::size_t> firstname_idx_;
  std::vector<double> cells_;
};

struct SyntheticCensus {
  CensusTables tables;
  // Pr(s), aligned with joint.surnames().
  std::vector<double> surname_marginal;
  // Factorized ground truth: Pr(r,s,g,f) = Pr(s) Pr(r|s) Pr(g|r) Pr(f|r).
  JointTable joint;
};

// Deterministic in (seed, sizes, concentration). Surname rows are symmetric
// Dirichlet(concentration) draws; geography and first-name columns are
// Dirichlet draws over their locations/names. All probabilities are rounded
// to the canonical 9-digit grid so saved tables reload bit-exactly.
SyntheticCensus generate_synthetic_census(std::uint64_t seed, int n_surnames,
                                          int n_zctas, int n_firstnames,
                                          double concentration);

struct SyntheticMember {
  MemberIdentity identity;
  RaceCategory true_race;
};

// Samples members from the synthetic joint: s ~ Pr(s), r ~ Pr(r|s),
// g ~ Pr(g|r), f ~ Pr(f|r).
std::vector<SyntheticMember> sample_members(const SyntheticCensus& census,
                                            std::size_t count,
                                            std::uint64_t seed);

}  // namespace fairmeter

#endif  // FAIRMETER_CENSUS_HPP_
