#pragma once

// Batch reconciliation of closed forms against the oracle over a mutation
// class: closed-form h, the determinant route and oracle dims must agree
// coefficientwise, and HH^2 must vanish.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cthh/classifier.hpp"
#include "cthh/field.hpp"
#include "cthh/integer.hpp"
#include "cthh/oracle.hpp"
#include "cthh/quiver.hpp"
#include "cthh/series.hpp"

namespace cthh {

struct VerifyOptions {
  DynkinType type;
  std::vector<FieldSpec> fields;
  std::size_t max_i = 8;
  /// nullopt = the whole class.
  std::optional<std::size_t> sample;
  /// 0 = CT_HH_THREADS or the hardware concurrency.
  std::size_t threads = 0;
  std::size_t class_cap = kDefaultClassCap;
  OracleOptions oracle;
};

struct FieldDims {
  FieldSpec field;
  std::vector<std::size_t> oracle;
  std::vector<std::size_t> expected;  // from the closed form
};

struct VerifyRecord {
  std::string canonical;  // hex
  Quiver quiver;
  std::size_t zero_relations = 0;
  std::size_t commutativity_relations = 0;
  std::size_t dimension = 0;
  BigInt cartan_det;
  IntPolynomial assoc_poly;
  std::size_t hh1 = 0;
  std::optional<HSeries> closed_form;
  std::string method;
  std::optional<DTypeParams> d_params;
  std::optional<HSeries> universal;
  std::vector<FieldDims> dims;
  std::vector<std::string> failures;
  [[nodiscard]] bool pass() const noexcept { return failures.empty(); }
};

struct VerifyReport {
  DynkinType type;
  std::size_t class_size = 0;
  std::vector<FieldSpec> fields;
  std::size_t max_i = 0;
  std::vector<VerifyRecord> records;  // sorted by canonical form
  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] bool pass() const { return failures() == 0; }
  [[nodiscard]] std::string summary() const;
};

/// Worker count: CT_HH_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
[[nodiscard]] std::size_t worker_count();

/// Runs fn(i) for i in [0, count) on a pool of the given size (0 = worker_count()).
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

/// Deterministic pseudo-random subset of size k keyed by an FNV-1a hash of
/// the canonical forms, returned in canonical order.
[[nodiscard]] std::vector<ClassMember> sample_class(std::vector<ClassMember> members, std::size_t k);

/// Full check of one quiver. Errors are recorded as failures, not thrown.
[[nodiscard]] VerifyRecord verify_quiver(const Quiver& q, const DynkinType& type, const std::vector<FieldSpec>& fields,
                                         std::size_t max_i, const OracleOptions& oracle = {});

[[nodiscard]] VerifyReport verify_suite(const VerifyOptions& options);

[[nodiscard]] nlohmann::json to_json(const VerifyRecord& r);
[[nodiscard]] nlohmann::json to_json(const VerifyReport& r);

}  // namespace cthh
