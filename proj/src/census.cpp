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

#include "fairmeter/census.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "fairmeter/error.hpp"
#include "fairmeter/rng.hpp"

namespace fairmeter {

namespace {

constexpr double kRowDriftLimit = 1e-6;
constexpr double kRenormalizeBelow = 1e-9;

constexpr std::string_view kSurnameHeader =
    "surname,p_white,p_black,p_hispanic,p_aian,p_api,p_other";
constexpr std::string_view kGeoHeader =
    "zcta,l_white,l_black,l_hispanic,l_aian,l_api,l_other";
constexpr std::string_view kFirstnameHeader =
    "first_name,l_white,l_black,l_hispanic,l_aian,l_api,l_other";
constexpr std::string_view kPriorHeader =
    "p_white,p_black,p_hispanic,p_aian,p_api,p_other";

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIoError,
          "cannot open '" + path.string() + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_prob(const std::string& field, std::size_t row) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  require(end == begin + field.size() && !field.empty() && std::isfinite(v),
          ErrorCode::kParseError,
          "row " + std::to_string(row) + ": bad probability '" + field + "'");
  return v;
}

std::string format_prob(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

RaceVector parse_row_values(const std::vector<std::string>& fields,
                            std::size_t first_value_col, std::size_t row) {
  RaceVector v;
  for (int i = 0; i < kNumGroups; ++i) {
    v[i] = parse_prob(fields[first_value_col + i], row);
  }
  return v;
}

// Simplex rows: drift above 1e-6 is rejected, drift in (1e-9, 1e-6] is
// renormalized, drift within 1e-9 is kept bit-exact so canonical files
// round-trip.
RaceVector settle_simplex_row(RaceVector v, std::size_t row) {
  require((v.array() >= 0.0).all(), ErrorCode::kSimplexViolation,
          "row " + std::to_string(row) + ": negative probability");
  const double sum = v.sum();
  require(std::abs(sum - 1.0) <= kRowDriftLimit, ErrorCode::kSimplexViolation,
          "row " + std::to_string(row) + ": probabilities sum to " +
              std::to_string(sum));
  if (std::abs(sum - 1.0) > kRenormalizeBelow) v /= sum;
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::trunc);
  require(out.good(), ErrorCode::kIoError,
          "cannot write '" + path.string() + "'");
  out << body;
  require(out.good(), ErrorCode::kIoError,
          "write failed for '" + path.string() + "'");
}

void check_header(const std::vector<std::string>& lines,
                  std::string_view expected,
                  const std::filesystem::path& path) {
  require(!lines.empty() && lines[0] == expected, ErrorCode::kParseError,
          "'" + path.string() + "': missing or wrong header");
}

// Rounds a non-negative vector summing to ~1 onto the 9-fraction-digit
// decimal grid with the units adding up exactly; the largest coordinate
// absorbs the rounding slack.
template <typename Vec>
Vec round_to_grid(const Vec& v) {
  constexpr double kGrid = 1e9;
  Vec out = v;
  long long total = 0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(v.size()); ++i) {
    const long long units = std::llround(v[i] * kGrid);
    out[i] = static_cast<double>(units);
    total += units;
    if (v[i] > v[argmax]) argmax = i;
  }
  out[argmax] += static_cast<double>(1000000000LL - total);
  for (std::size_t i = 0; i < static_cast<std::size_t>(v.size()); ++i) {
    require(out[i] >= 0.0, ErrorCode::kInternalError, "grid rounding slack");
    out[i] /= kGrid;
  }
  return out;
}

std::string base26(std::size_t value, int width) {
  std::string s(width, 'A');
  for (int i = width - 1; i >= 0; --i) {
    s[i] = static_cast<char>('A' + value % 26);
    value /= 26;
  }
  return s;
}

std::string surname_name(std::size_t i) { return "S" + base26(i, 5); }
std::string firstname_name(std::size_t i) { return "F" + base26(i, 5); }

std::string zcta_name(std::size_t i) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%05zu", i);
  return buf;
}

}  // namespace

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '-') {
      if (pending_space) {
        out.push_back(' ');
        pending_space = false;
      }
      out.push_back(static_cast<char>(
          std::toupper(static_cast<unsigned char>(c))));
    }
    // Other punctuation and digits are stripped.
  }
  return out;
}

bool is_valid_zcta(std::string_view zcta) {
  if (zcta.size() != 5) return false;
  return std::all_of(zcta.begin(), zcta.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

const RaceVector* SurnameTable::find(std::string_view surname) const {
  const auto it = entries.find(normalize_name(surname));
  return it == entries.end() ? nullptr : &it->second;
}

const RaceVector* GeoTable::find(std::string_view zcta) const {
  const auto it = entries.find(std::string(zcta));
  return it == entries.end() ? nullptr : &it->second;
}

const RaceVector* FirstnameTable::find(std::string_view first_name) const {
  const auto it = entries.find(normalize_name(first_name));
  return it == entries.end() ? nullptr : &it->second;
}

SurnameTable load_surname_table(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  check_header(lines, kSurnameHeader, path);
  SurnameTable table;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    const auto fields = split_csv(lines[row]);
    require(fields.size() == 1 + kNumGroups, ErrorCode::kParseError,
            "row " + std::to_string(row) + ": expected 7 columns");
    const std::string key = normalize_name(fields[0]);
    require(!key.empty(), ErrorCode::kParseError,
            "row " + std::to_string(row) + ": empty surname");
    const RaceVector v =
        settle_simplex_row(parse_row_values(fields, 1, row), row);
    const bool inserted = table.entries.emplace(key, v).second;
    require(inserted, ErrorCode::kParseError,
            "row " + std::to_string(row) + ": duplicate surname " + key);
  }
  return table;
}

GeoTable load_geo_table(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  check_header(lines, kGeoHeader, path);
  GeoTable table;
  RaceVector column_sums = RaceVector::Zero();
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    const auto fields = split_csv(lines[row]);
    require(fields.size() == 1 + kNumGroups, ErrorCode::kParseError,
            "row " + std::to_string(row) + ": expected 7 columns");
    require(is_valid_zcta(fields[0]), ErrorCode::kParseError,
            "row " + std::to_string(row) + ": bad ZCTA '" + fields[0] + "'");
    const RaceVector v = parse_row_values(fields, 1, row);
    require((v.array() >= 0.0).all(), ErrorCode::kDistributionViolation,
            "row " + std::to_string(row) + ": negative likelihood");
    const bool inserted = table.entries.emplace(fields[0], v).second;
    require(inserted, ErrorCode::kParseError,
            "row " + std::to_string(row) + ": duplicate ZCTA " + fields[0]);
    column_sums += v;
  }
  if (!table.entries.empty()) {
    for (int r = 0; r < kNumGroups; ++r) {
      require(std::abs(column_sums[r] - 1.0) <= kRowDriftLimit,
              ErrorCode::kDistributionViolation,
              "race column '" + std::string(kGroupKeys[r]) + "' sums to " +
                  std::to_string(column_sums[r]));
    }
  }
  return table;
}

FirstnameTable load_firstname_table(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  check_header(lines, kFirstnameHeader, path);
  FirstnameTable table;
  RaceVector column_sums = RaceVector::Zero();
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    const auto fields = split_csv(lines[row]);
    require(fields.size() == 1 + kNumGroups, ErrorCode::kParseError,
            "row " + std::to_string(row) + ": expected 7 columns");
    const std::string key = normalize_name(fields[0]);
    require(!key.empty(), ErrorCode::kParseError,
            "row " + std::to_string(row) + ": empty first name");
    const RaceVector v = parse_row_values(fields, 1, row);
    require((v.array() >= 0.0).all(), ErrorCode::kDistributionViolation,
            "row " + std::to_string(row) + ": negative likelihood");
    const bool inserted = table.entries.emplace(key, v).second;
    require(inserted, ErrorCode::kParseError,
            "row " + std::to_string(row) + ": duplicate first name " + key);
    column_sums += v;
  }
  for (int r = 0; r < kNumGroups; ++r) {
    require(column_sums[r] <= 1.0 + kRowDriftLimit,
            ErrorCode::kDistributionViolation,
            "race column '" + std::string(kGroupKeys[r]) +
                "' sums above 1");
  }
  return table;
}

RacePrior load_race_prior(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  check_header(lines, kPriorHeader, path);
  require(lines.size() >= 2 && !lines[1].empty(), ErrorCode::kParseError,
          "'" + path.string() + "': missing prior row");
  const auto fields = split_csv(lines[1]);
  require(fields.size() == kNumGroups, ErrorCode::kParseError,
          "prior row: expected 6 columns");
  RacePrior prior;
  prior.marginal = settle_simplex_row(parse_row_values(fields, 0, 1), 1);
  return prior;
}

void save_surname_table(const SurnameTable& table,
                        const std::filesystem::path& path) {
  std::map<std::string, RaceVector> sorted(table.entries.begin(),
                                           table.entries.end());
  std::ostringstream out;
  out << kSurnameHeader << '\n';
  for (const auto& [key, v] : sorted) {
    out << key;
    for (int i = 0; i < kNumGroups; ++i) out << ',' << format_prob(v[i]);
    out << '\n';
  }
  write_file(path, out.str());
}

void save_geo_table(const GeoTable& table,
                    const std::filesystem::path& path) {
  std::map<std::string, RaceVector> sorted(table.entries.begin(),
                                           table.entries.end());
  std::ostringstream out;
  out << kGeoHeader << '\n';
  for (const auto& [key, v] : sorted) {
    out << key;
    for (int i = 0; i < kNumGroups; ++i) out << ',' << format_prob(v[i]);
    out << '\n';
  }
  write_file(path, out.str());
}

void save_firstname_table(const FirstnameTable& table,
                          const std::filesystem::path& path) {
  std::map<std::string, RaceVector> sorted(table.entries.begin(),
                                           table.entries.end());
  std::ostringstream out;
  out << kFirstnameHeader << '\n';
  for (const auto& [key, v] : sorted) {
    out << key;
    for (int i = 0; i < kNumGroups; ++i) out << ',' << format_prob(v[i]);
    out << '\n';
  }
  write_file(path, out.str());
}

void save_race_prior(const RacePrior& prior,
                     const std::filesystem::path& path) {
  std::ostringstream out;
  out << kPriorHeader << '\n';
  for (int i = 0; i < kNumGroups; ++i) {
    if (i > 0) out << ',';
    out << format_prob(prior.marginal[i]);
  }
  out << '\n';
  write_file(path, out.str());
}

CensusTables load_census_tables(const std::filesystem::path& dir) {
  CensusTables tables;
  tables.surnames = load_surname_table(dir / "surnames.csv");
  tables.geo = load_geo_table(dir / "geo.csv");
  tables.firstnames = load_firstname_table(dir / "firstnames.csv");
  tables.prior = load_race_prior(dir / "prior.csv");
  return tables;
}

void save_census_tables(const CensusTables& tables,
                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  save_surname_table(tables.surnames, dir / "surnames.csv");
  save_geo_table(tables.geo, dir / "geo.csv");
  save_firstname_table(tables.firstnames, dir / "firstnames.csv");
  save_race_prior(tables.prior, dir / "prior.csv");
}

JointTable::JointTable(std::vector<std::string> surnames,
                       std::vector<std::string> zctas,
                       std::vector<std::string> firstnames)
    : surnames_(std::move(surnames)),
      zctas_(std::move(zctas)),
      firstnames_(std::move(firstnames)) {
  for (std::size_t i = 0; i < surnames_.size(); ++i) {
    surname_idx_.emplace(surnames_[i], i);
  }
  for (std::size_t i = 0; i < zctas_.size(); ++i) {
    zcta_idx_.emplace(zctas_[i], i);
  }
  for (std::size_t i = 0; i < firstnames_.size(); ++i) {
    firstname_idx_.emplace(firstnames_[i], i);
  }
  const std::size_t f_dim = std::max<std::size_t>(1, firstnames_.size());
  cells_.assign(kNumGroups * surnames_.size() * zctas_.size() * f_dim, 0.0);
}

std::size_t JointTable::index_of(int r, std::size_t s, std::size_t g,
                                 std::size_t f) const {
  const std::size_t f_dim = std::max<std::size_t>(1, firstnames_.size());
  return ((static_cast<std::size_t>(r) * surnames_.size() + s) *
              zctas_.size() +
          g) *
             f_dim +
         f;
}

double JointTable::cell(int r, std::size_t s, std::size_t g,
                        std::size_t f) const {
  return cells_[index_of(r, s, g, f)];
}

double& JointTable::cell(int r, std::size_t s, std::size_t g, std::size_t f) {
  return cells_[index_of(r, s, g, f)];
}

std::optional<std::size_t> JointTable::surname_index(
    std::string_view surname) const {
  const auto it = surname_idx_.find(normalize_name(surname));
  if (it == surname_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> JointTable::zcta_index(
    std::string_view zcta) const {
  const auto it = zcta_idx_.find(std::string(zcta));
  if (it == zcta_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> JointTable::firstname_index(
    std::string_view name) const {
  const auto it = firstname_idx_.find(normalize_name(name));
  if (it == firstname_idx_.end()) return std::nullopt;
  return it->second;
}

SyntheticCensus generate_synthetic_census(std::uint64_t seed, int n_surnames,
                                          int n_zctas, int n_firstnames,
                                          double concentration) {
  require(n_surnames >= 1, ErrorCode::kInvalidParameter, "n_surnames >= 1");
  require(n_zctas >= 1 && n_zctas <= 100000, ErrorCode::kInvalidParameter,
          "n_zctas in [1, 100000]");
  require(n_firstnames >= 0, ErrorCode::kInvalidParameter,
          "n_firstnames >= 0");
  require(concentration > 0.0 && std::isfinite(concentration),
          ErrorCode::kInvalidParameter, "concentration must be positive");

  std::vector<std::string> surnames(n_surnames);
  for (int i = 0; i < n_surnames; ++i) surnames[i] = surname_name(i);
  std::vector<std::string> zctas(n_zctas);
  for (int i = 0; i < n_zctas; ++i) zctas[i] = zcta_name(i);
  std::vector<std::string> firstnames(n_firstnames);
  for (int i = 0; i < n_firstnames; ++i) firstnames[i] = firstname_name(i);

  // Pr(s): moderate-variation Dirichlet, fixed shape.
  auto marginal_rng = DeterministicRng::derive(seed, "census.surname-marginal");
  std::vector<double> surname_marginal = round_to_grid(
      sample_dirichlet(marginal_rng, std::vector<double>(n_surnames, 2.0)));

  // Pr(r|s) rows.
  std::vector<RaceVector> surname_rows(n_surnames);
  for (int s = 0; s < n_surnames; ++s) {
    auto rng = DeterministicRng::derive(
        seed, "census.surname-row:" + std::to_string(s));
    surname_rows[s] = round_to_grid(
        sample_dirichlet6(rng, RaceVector::Constant(concentration)));
  }

  // Pr(g|r) columns: one distribution over ZCTAs per race.
  std::vector<std::vector<double>> geo_cols(kNumGroups);
  for (int r = 0; r < kNumGroups; ++r) {
    auto rng =
        DeterministicRng::derive(seed, "census.geo-col:" + std::to_string(r));
    geo_cols[r] = round_to_grid(sample_dirichlet(
        rng, std::vector<double>(n_zctas, concentration)));
  }

  // Pr(f|r) columns over first names.
  std::vector<std::vector<double>> firstname_cols(kNumGroups);
  if (n_firstnames > 0) {
    for (int r = 0; r < kNumGroups; ++r) {
      auto rng = DeterministicRng::derive(
          seed, "census.firstname-col:" + std::to_string(r));
      firstname_cols[r] = round_to_grid(sample_dirichlet(
          rng, std::vector<double>(n_firstnames, concentration)));
    }
  }

  SyntheticCensus census{
      CensusTables{},
      surname_marginal,
      JointTable(surnames, zctas, firstnames)};

  for (int s = 0; s < n_surnames; ++s) {
    census.tables.surnames.entries.emplace(surnames[s], surname_rows[s]);
  }
  for (int g = 0; g < n_zctas; ++g) {
    RaceVector row;
    for (int r = 0; r < kNumGroups; ++r) row[r] = geo_cols[r][g];
    census.tables.geo.entries.emplace(zctas[g], row);
  }
  for (int f = 0; f < n_firstnames; ++f) {
    RaceVector row;
    for (int r = 0; r < kNumGroups; ++r) row[r] = firstname_cols[r][f];
    census.tables.firstnames.entries.emplace(firstnames[f], row);
  }

  RaceVector prior = RaceVector::Zero();
  for (int s = 0; s < n_surnames; ++s) {
    prior += surname_marginal[s] * surname_rows[s];
  }
  census.tables.prior.marginal = round_to_grid(prior);

  // Ground-truth joint built from the same rounded values the tables carry,
  // so the factorization assumption holds exactly for the saved tables.
  for (int r = 0; r < kNumGroups; ++r) {
    for (int s = 0; s < n_surnames; ++s) {
      const double rs = surname_marginal[s] * surname_rows[s][r];
      for (int g = 0; g < n_zctas; ++g) {
        const double rsg = rs * geo_cols[r][g];
        if (n_firstnames == 0) {
          census.joint.cell(r, s, g) = rsg;
        } else {
          for (int f = 0; f < n_firstnames; ++f) {
            census.joint.cell(r, s, g, f) = rsg * firstname_cols[r][f];
          }
        }
      }
    }
  }
  return census;
}

std::vector<SyntheticMember> sample_members(const SyntheticCensus& census,
                                            std::size_t count,
                                            std::uint64_t seed) {
  const auto& joint = census.joint;
  std::vector<SyntheticMember> members(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = DeterministicRng::derive(seed, "census.member:" +
                                                  std::to_string(i));
    const std::size_t s = sample_categorical(rng, census.surname_marginal);
    const RaceVector& row =
        census.tables.surnames.entries.at(joint.surnames()[s]);
    std::vector<double> row_probs(row.data(), row.data() + kNumGroups);
    const int r = static_cast<int>(sample_categorical(rng, row_probs));

    std::vector<double> geo_col(joint.zcta_count());
    for (std::size_t g = 0; g < joint.zcta_count(); ++g) {
      geo_col[g] = census.tables.geo.entries.at(joint.zctas()[g])[r];
    }
    const std::size_t g = sample_categorical(rng, geo_col);

    std::string first_name;
    if (joint.has_firstnames()) {
      std::vector<double> fn_col(joint.firstname_count());
      for (std::size_t f = 0; f < joint.firstname_count(); ++f) {
        fn_col[f] = census.tables.firstnames.entries.at(joint.firstnames()[f])[r];
      }
      first_name = joint.firstnames()[sample_categorical(rng, fn_col)];
    }

    char id[16];
    std::snprintf(id, sizeof(id), "m%07zu", i);
    members[i] = SyntheticMember{
        MemberIdentity{id, first_name, joint.surnames()[s], joint.zctas()[g]},
        static_cast<RaceCategory>(r)};
  }
  return members;
}

}  // namespace fairmeter
