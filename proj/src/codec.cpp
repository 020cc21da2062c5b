// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#include "qci/codec.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "qci/errors.hpp"
#include "qci/rng.hpp"

namespace qci {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
  int n = 0;
  while ((std::size_t(1) << n) < v) ++n;
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Case 1
// ---------------------------------------------------------------------------

Case1Codec make_case1_codec(int n, CostLedger& ledger) {
  detail::check_qubit_count(n);
  // The whole data definition is the one-bit convention "binary, register
  // order".
  ledger.charge(Counter::kDefinitionSteps, 1);
  return Case1Codec{n, true};
}

Eigen::Index c1_encode(const Case1Codec& codec, std::int64_t x) {
  const std::int64_t dim = std::int64_t(1) << codec.n;
  if (x < 0 || x >= dim) {
    throw DomainError("integer " + std::to_string(x) +
                      " not encodable in " + std::to_string(codec.n) +
                      " qubits");
  }
  return static_cast<Eigen::Index>(x);
}

InterpretedValue c1_interpret(const Case1Codec& codec,
                              const MeasurementOutcome& outcome,
                              CostLedger& ledger) {
  if (!outcome.is_digital()) {
    throw KindError("case-1 interpretation is digital only");
  }
  (void)codec;
  // One step: reading the convention bit.
  ledger.charge(Counter::kInterpretationSteps, 1);
  return InterpretedValue::integer(outcome.basis_index);
}

// ---------------------------------------------------------------------------
// Case 2
// ---------------------------------------------------------------------------

Case2Codec c2_define(const std::vector<std::string>& referents,
                     const std::string& null_label, CostLedger& ledger) {
  std::unordered_set<std::string> seen;
  seen.insert(null_label);
  for (const auto& label : referents) {
    if (!seen.insert(label).second) {
      throw ValidationError("duplicate referent label: " + label);
    }
  }
  Case2Codec codec;
  codec.null_referent = null_label;
  codec.entries.reserve(referents.size());
  for (int i = 0; i < static_cast<int>(referents.size()); ++i) {
    codec.entries.emplace_back(i, referents[i]);
    ledger.charge(Counter::kDefinitionSteps, 1);  // one row write per entry
  }
  return codec;
}

InterpretedValue c2_interpret(const Case2Codec& codec,
                              const MeasurementOutcome& outcome,
                              CostLedger& ledger) {
  if (!outcome.is_analog()) {
    throw KindError("case-2 interpretation reads analog outcomes");
  }
  if (outcome.qubit_marginals.size() != codec.qubit_count()) {
    throw ShapeError("expected " + std::to_string(codec.qubit_count()) +
                     " marginals, got " +
                     std::to_string(outcome.qubit_marginals.size()));
  }
  CoefficientList coefficients;
  coefficients.reserve(codec.entries.size());
  for (const auto& [qubit, label] : codec.entries) {
    ledger.charge(Counter::kInterpretationSteps, 1);  // one table lookup
    coefficients.emplace_back(label, outcome.qubit_marginals(qubit));
  }
  return InterpretedValue::coefficients(std::move(coefficients));
}

// ---------------------------------------------------------------------------
// Case 3
// ---------------------------------------------------------------------------

GlobalAssignmentTable GlobalAssignmentTable::from_rows(
    std::vector<DirectoryRow> rows, CostLedger& ledger) {
  const std::size_t n_rows = rows.size();
  if (!is_power_of_two(n_rows) || n_rows < 2) {
    throw ValidationError("row count must be a power of two, got " +
                          std::to_string(n_rows));
  }
  std::vector<bool> state_seen(n_rows, false);
  std::unordered_set<std::string> phones;
  std::unordered_set<std::uint64_t> uids;
  for (const auto& row : rows) {
    if (row.state_index < 0 ||
        row.state_index >= static_cast<Eigen::Index>(n_rows) ||
        state_seen[static_cast<std::size_t>(row.state_index)]) {
      throw ValidationError("state indices must be a permutation of 0..N-1");
    }
    state_seen[static_cast<std::size_t>(row.state_index)] = true;
    if (!phones.insert(row.phone_number).second) {
      throw ValidationError("duplicate phone number: " + row.phone_number);
    }
    if (!uids.insert(row.uid).second) {
      throw ValidationError("duplicate uid: " + std::to_string(row.uid));
    }
  }
  GlobalAssignmentTable table;
  table.rows_ = std::move(rows);
  ledger.charge(Counter::kDefinitionSteps, n_rows);  // one write per row
  return table;
}

GlobalAssignmentTable c3_define(
    const std::vector<std::pair<std::string, std::uint64_t>>& records,
    CostLedger& ledger) {
  const std::size_t n_rows = records.size();
  if (!is_power_of_two(n_rows) || n_rows < 2) {
    throw ValidationError("record count must be a power of two, got " +
                          std::to_string(n_rows));
  }
  std::vector<DirectoryRow> rows;
  rows.reserve(n_rows);
  for (std::size_t p = 0; p < n_rows; ++p) {
    rows.push_back(DirectoryRow{
        static_cast<Eigen::Index>((p + 1) % n_rows),
        records[p].first,
        records[p].second,
    });
  }
  return GlobalAssignmentTable::from_rows(std::move(rows), ledger);
}

void GlobalAssignmentTable::build_index(CostLedger& ledger) {
  row_by_state_.assign(rows_.size(), 0);
  row_by_phone_.clear();
  for (std::size_t p = 0; p < rows_.size(); ++p) {
    row_by_state_[static_cast<std::size_t>(rows_[p].state_index)] =
        static_cast<Eigen::Index>(p);
    row_by_phone_.emplace(rows_[p].phone_number, static_cast<Eigen::Index>(p));
    ledger.charge(Counter::kDefinitionSteps, 1);  // one index write per row
  }
}

InterpretedValue c3_interpret(const GlobalAssignmentTable& table,
                              const MeasurementOutcome& outcome,
                              CostLedger& ledger) {
  if (!outcome.is_digital()) {
    throw KindError("analog outcomes have no case-3 interpretation");
  }
  if (table.has_index()) {
    ledger.charge(Counter::kInterpretationSteps, 1);
    if (outcome.basis_index >= 0 && outcome.basis_index < table.size()) {
      const auto& row = table.rows_[static_cast<std::size_t>(
          table.row_by_state_[static_cast<std::size_t>(outcome.basis_index)])];
      return InterpretedValue::record({row.phone_number, row.uid});
    }
    throw CorruptionError("measured state has no table row");
  }
  for (std::size_t p = 0; p < table.rows_.size(); ++p) {
    if (table.rows_[p].state_index == outcome.basis_index) {
      ledger.charge(Counter::kInterpretationSteps, p + 1);
      return InterpretedValue::record(
          {table.rows_[p].phone_number, table.rows_[p].uid});
    }
  }
  ledger.charge(Counter::kInterpretationSteps, table.rows_.size());
  throw CorruptionError("measured state " +
                        std::to_string(outcome.basis_index) +
                        " has no table row");
}

Eigen::Index c3_find_marked(const GlobalAssignmentTable& table,
                            const std::string& query, CostLedger& ledger) {
  if (table.has_index()) {
    ledger.charge(Counter::kParameterSteps, 1);
    auto it = table.row_by_phone_.find(query);
    if (it == table.row_by_phone_.end()) {
      throw NotFoundError("phone number not in directory: " + query);
    }
    return table.rows_[static_cast<std::size_t>(it->second)].state_index;
  }
  for (std::size_t p = 0; p < table.rows_.size(); ++p) {
    if (table.rows_[p].phone_number == query) {
      ledger.charge(Counter::kParameterSteps, p + 1);
      return table.rows_[p].state_index;
    }
  }
  ledger.charge(Counter::kParameterSteps, table.rows_.size());
  throw NotFoundError("phone number not in directory: " + query);
}

std::vector<DirectoryRow> load_directory_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  std::vector<DirectoryRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string state, phone, uid;
    if (!std::getline(fields, state, ',') ||
        !std::getline(fields, phone, ',') || !std::getline(fields, uid)) {
      throw ValidationError("malformed directory row: " + line);
    }
    rows.push_back(DirectoryRow{static_cast<Eigen::Index>(std::stoll(state)),
                                phone,
                                static_cast<std::uint64_t>(std::stoull(uid))});
  }
  return rows;
}

void save_directory_rows(const std::string& path,
                         const std::vector<DirectoryRow>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  for (const auto& row : rows) {
    out << row.state_index << ',' << row.phone_number << ',' << row.uid
        << '\n';
  }
}

std::vector<DirectoryRow> sample_directory_rows() {
  return {
      {1, "415-389-1133", 1},
      {2, "415-486-6129", 2},
      {3, "415-492-0206", 3},
      {0, "415-472-6775", 4},
  };
}

std::vector<std::pair<std::string, std::uint64_t>> make_synthetic_records(
    int n, std::uint64_t seed) {
  detail::check_qubit_count(n);
  const std::size_t n_rows = std::size_t(1) << n;
  std::vector<std::pair<std::string, std::uint64_t>> records;
  records.reserve(n_rows);
  std::unordered_set<std::string> used;
  for (std::size_t row = 0; row < n_rows; ++row) {
    std::string phone;
    for (std::uint64_t nonce = 0;; ++nonce) {
      const std::uint64_t digits =
          derive_seed(seed, (row << 16) | nonce) % 10000000000ULL;
      char buffer[16];
      std::snprintf(buffer, sizeof(buffer), "%03llu-%03llu-%04llu",
                    static_cast<unsigned long long>(digits / 10000000ULL),
                    static_cast<unsigned long long>((digits / 10000ULL) % 1000ULL),
                    static_cast<unsigned long long>(digits % 10000ULL));
      phone = buffer;
      if (used.insert(phone).second) break;
    }
    records.emplace_back(phone, row + 1);
  }
  return records;
}

// ---------------------------------------------------------------------------
// Nonlinear interpretation
// ---------------------------------------------------------------------------

InterpretedValue nonlinear_mf(const Case2Codec& codec,
                              const StateVectord& state,
                              const InstrumentedMap& algorithm,
                              CostLedger& ledger) {
  const MeasurementOutcome marginals = measure_qubit_marginals(state);
  if (marginals.qubit_marginals.size() != codec.qubit_count()) {
    throw ShapeError("codec does not match register width");
  }

  // Decode: find which referent the register holds. Always n table reads.
  std::string input = codec.null_referent;
  for (const auto& [qubit, label] : codec.entries) {
    ledger.charge(Counter::kInterpretationSteps, 1);
    if (marginals.qubit_marginals(qubit) > 0.5) {
      input = label;
    }
  }

  std::uint64_t algorithm_steps = 0;
  std::string output = algorithm.apply(input, algorithm_steps);
  ledger.charge(Counter::kInterpretationSteps, algorithm_steps);
  return InterpretedValue::referent_label(std::move(output));
}

}  // namespace qci
