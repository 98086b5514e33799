#include "ydual/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace ydual {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_asserted: return "not_asserted";
    case Status::error: return "error";
  }
  return "error";
}

void Report::append(const Report& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

const ReportItem* Report::find(const std::string& id) const {
  for (const auto& it : items_)
    if (it.id == id) return &it;
  return nullptr;
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& it : items_) n += it.status == s ? 1 : 0;
  return n;
}

bool Report::ok() const { return count(Status::fail) == 0 && count(Status::error) == 0; }

std::string Report::to_json(bool timestamp) const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario_;
  auto& items = j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : items_) {
    nlohmann::ordered_json e;
    e["id"] = it.id;
    e["description"] = it.description;
    e["status"] = to_string(it.status);
    if (!it.witness.empty()) e["witness"] = it.witness;
    if (!it.detail.empty()) e["detail"] = it.detail;
    items.push_back(std::move(e));
  }
  j["summary"] = {{"total", items_.size()},
                  {"pass", count(Status::pass)},
                  {"fail", count(Status::fail)},
                  {"not_asserted", count(Status::not_asserted)},
                  {"error", count(Status::error)}};
  if (timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    j["timestamp"] = buf;
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "scenario: " << scenario_ << "\n";
  for (const auto& it : items_) {
    os << "[" << to_string(it.status) << "] " << it.id << ": " << it.description << "\n";
    if (!it.witness.empty()) os << "    witness: " << it.witness << "\n";
    if (!it.detail.empty()) os << "    " << it.detail << "\n";
  }
  os << "summary: " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
     << count(Status::not_asserted) << " not asserted, " << count(Status::error) << " error\n";
  return os.str();
}

ReportItem compare(std::string id, std::string description, const Op& lhs, const Op& rhs,
                   std::optional<int> max_degree) {
  ReportItem item{std::move(id), std::move(description), Status::pass, {}, {}};
  if (auto mm = first_mismatch(lhs, rhs, max_degree)) {
    item.status = Status::fail;
    item.witness = mm->input_label;
    item.detail = mm->describe();
  }
  if (max_degree && item.status == Status::pass)
    item.detail = "checked on inputs of total degree <= " + std::to_string(*max_degree);
  return item;
}

ReportItem verdict(std::string id, std::string description, bool ok, std::string witness,
                   std::string detail) {
  return ReportItem{std::move(id), std::move(description), ok ? Status::pass : Status::fail,
                    std::move(witness), std::move(detail)};
}

ReportItem not_asserted(std::string id, std::string description, std::string reason) {
  return ReportItem{std::move(id), std::move(description), Status::not_asserted, {},
                    std::move(reason)};
}

ReportItem guarded(const std::string& id, const std::string& description,
                   const std::function<ReportItem()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return ReportItem{id, description, Status::error, {}, e.what()};
  }
}

}  // namespace ydual
