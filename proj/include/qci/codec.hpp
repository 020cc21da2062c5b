// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "qci/cost_ledger.hpp"
#include "qci/state_vector.hpp"

namespace qci {

// ---------------------------------------------------------------------------
// Interpreted values
// ---------------------------------------------------------------------------

struct DirectoryRecord {
  std::string phone_number;
  std::uint64_t uid = 0;

  friend bool operator==(const DirectoryRecord&,
                         const DirectoryRecord&) = default;
};

using CoefficientList = std::vector<std::pair<std::string, double>>;

/// The UI-level value recovered from a measurement: an integer (case 1), a
/// labelled coefficient list (case 2), a directory record (case 3), or a
/// referent label (nonlinear interpretation).
class InterpretedValue {
 public:
  enum class Kind { kInteger, kCoefficientList, kRecord, kReferentLabel };

  static InterpretedValue integer(std::int64_t v) {
    return InterpretedValue(v);
  }
  static InterpretedValue coefficients(CoefficientList v) {
    return InterpretedValue(std::move(v));
  }
  static InterpretedValue record(DirectoryRecord v) {
    return InterpretedValue(std::move(v));
  }
  static InterpretedValue referent_label(std::string v) {
    return InterpretedValue(Label{std::move(v)});
  }

  Kind kind() const { return static_cast<Kind>(payload_.index()); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(payload_); }
  const CoefficientList& as_coefficients() const {
    return std::get<CoefficientList>(payload_);
  }
  const DirectoryRecord& as_record() const {
    return std::get<DirectoryRecord>(payload_);
  }
  const std::string& as_referent_label() const {
    return std::get<Label>(payload_).value;
  }

 private:
  struct Label {
    std::string value;
  };
  using Payload =
      std::variant<std::int64_t, CoefficientList, DirectoryRecord, Label>;

  template <typename T>
  explicit InterpretedValue(T&& payload) : payload_(std::forward<T>(payload)) {}

  Payload payload_;
};

// ---------------------------------------------------------------------------
// Case 1: direct integer encoding
// ---------------------------------------------------------------------------

/// Integers 0 .. 2^n - 1 encoded directly as basis indices. The only
/// stipulation is the one-bit convention "binary, register order", charged
/// once at construction.
struct Case1Codec {
  int n = 0;
  bool binary_register_order = true;
};

Case1Codec make_case1_codec(int n, CostLedger& ledger);

Eigen::Index c1_encode(const Case1Codec& codec, std::int64_t x);

InterpretedValue c1_interpret(const Case1Codec& codec,
                              const MeasurementOutcome& outcome,
                              CostLedger& ledger);

// ---------------------------------------------------------------------------
// Case 2: arbitrary per-qubit assignment
// ---------------------------------------------------------------------------

/// Explicit association of referent labels to individual qubits, plus the
/// label assigned to the all-zeros NULL state.
struct Case2Codec {
  std::vector<std::pair<int, std::string>> entries;  // (qubit, label), qubit order
  std::string null_referent;

  int qubit_count() const { return static_cast<int>(entries.size()); }
};

Case2Codec c2_define(const std::vector<std::string>& referents,
                     const std::string& null_label, CostLedger& ledger);

InterpretedValue c2_interpret(const Case2Codec& codec,
                              const MeasurementOutcome& outcome,
                              CostLedger& ledger);

// ---------------------------------------------------------------------------
// Case 3: arbitrary global-state assignment
// ---------------------------------------------------------------------------

struct DirectoryRow {
  Eigen::Index state_index = 0;
  std::string phone_number;
  std::uint64_t uid = 0;

  friend bool operator==(const DirectoryRow&, const DirectoryRow&) = default;
};

/// Association list of N (global state, phone number, uid) rows kept in
/// construction order. Lookups scan linearly and charge one step per row
/// read. An optional direct-address index can be built for N further steps,
/// after which lookups charge a single step; the total stays Omega(N)
/// either way.
class GlobalAssignmentTable {
 public:
  /// Adopts explicit rows (e.g. a fixture file) and charges N definition
  /// steps. Rows must cover each state index exactly once with pairwise
  /// distinct phone numbers and uids, and N must be a power of two.
  static GlobalAssignmentTable from_rows(std::vector<DirectoryRow> rows,
                                         CostLedger& ledger);

  Eigen::Index size() const {
    return static_cast<Eigen::Index>(rows_.size());
  }
  const std::vector<DirectoryRow>& rows() const { return rows_; }

  void build_index(CostLedger& ledger);
  bool has_index() const { return !row_by_state_.empty(); }

 private:
  friend InterpretedValue c3_interpret(const GlobalAssignmentTable&,
                                       const MeasurementOutcome&, CostLedger&);
  friend Eigen::Index c3_find_marked(const GlobalAssignmentTable&,
                                     const std::string&, CostLedger&);

  std::vector<DirectoryRow> rows_;
  std::vector<Eigen::Index> row_by_state_;                  // index, optional
  std::unordered_map<std::string, Eigen::Index> row_by_phone_;  // index, optional
};

/// Assigns the p-th record to global state (p + 1) mod N, the natural
/// reading order |1>, |2>, ..., |N> with |N> the all-zeros state. Charges
/// one definition step per row written.
GlobalAssignmentTable c3_define(
    const std::vector<std::pair<std::string, std::uint64_t>>& records,
    CostLedger& ledger);

InterpretedValue c3_interpret(const GlobalAssignmentTable& table,
                              const MeasurementOutcome& outcome,
                              CostLedger& ledger);

Eigen::Index c3_find_marked(const GlobalAssignmentTable& table,
                            const std::string& query, CostLedger& ledger);

/// Reads/writes the table fixture format: one "state_index,phone_number,uid"
/// line per row.
std::vector<DirectoryRow> load_directory_rows(const std::string& path);
void save_directory_rows(const std::string& path,
                         const std::vector<DirectoryRow>& rows);

/// The bundled 4-row reverse-directory fixture (n = 2).
std::vector<DirectoryRow> sample_directory_rows();

/// Deterministic synthetic (phone_number, uid) records: phone digits are
/// derived from (seed, row), uid is row + 1. Phones are pairwise distinct.
std::vector<std::pair<std::string, std::uint64_t>> make_synthetic_records(
    int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Nonlinear final-state interpretation
// ---------------------------------------------------------------------------

/// A classical referent-level map that counts its own steps. Every concrete
/// map adds one to `steps` per row read, comparison, or arithmetic
/// operation it performs.
class InstrumentedMap {
 public:
  virtual ~InstrumentedMap() = default;
  virtual std::string name() const = 0;
  virtual std::string apply(const std::string& label,
                            std::uint64_t& steps) const = 0;
};

/// Nonlinear digitizing interpretation: decodes the referent held by the
/// register through the case-2 codec (n table reads), then runs the
/// classical map A on it. Interpretation is charged n + (A's own count)
/// steps; the map's work is not saved by the quantum detour.
InterpretedValue nonlinear_mf(const Case2Codec& codec,
                              const StateVectord& state,
                              const InstrumentedMap& algorithm,
                              CostLedger& ledger);

}  // namespace qci
