#pragma once

// Verification reports: one item per checked identity, in a fixed order.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ydual/op.hpp"

namespace ydual {

enum class Status { pass, fail, not_asserted, error };

std::string to_string(Status s);

struct ReportItem {
  std::string id;
  std::string description;
  Status status = Status::pass;
  std::string witness;  // first failing basis input, when there is one
  std::string detail;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string scenario) : scenario_(std::move(scenario)) {}

  void add(ReportItem item) { items_.push_back(std::move(item)); }
  void append(const Report& other);

  [[nodiscard]] const std::string& scenario() const { return scenario_; }
  [[nodiscard]] const std::vector<ReportItem>& items() const { return items_; }
  [[nodiscard]] const ReportItem* find(const std::string& id) const;
  [[nodiscard]] std::size_t count(Status s) const;
  /// True when every item passed or was not asserted.
  [[nodiscard]] bool ok() const;
  /// 0 when ok(), 1 otherwise.
  [[nodiscard]] int exit_code() const { return ok() ? 0 : 1; }

  [[nodiscard]] std::string to_json(bool timestamp) const;
  [[nodiscard]] std::string to_text() const;

 private:
  std::string scenario_;
  std::vector<ReportItem> items_;
};

/// Pass iff lhs and rhs agree on every basis input of total degree <= max_degree.
ReportItem compare(std::string id, std::string description, const Op& lhs, const Op& rhs,
                   std::optional<int> max_degree = std::nullopt);

ReportItem verdict(std::string id, std::string description, bool ok, std::string witness = {},
                   std::string detail = {});

ReportItem not_asserted(std::string id, std::string description, std::string reason);

/// Runs body; any exception becomes an error item carrying the message.
ReportItem guarded(const std::string& id, const std::string& description,
                   const std::function<ReportItem()>& body);

}  // namespace ydual
