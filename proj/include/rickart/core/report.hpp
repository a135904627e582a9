#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace rickart {

/// Outcome of one named check, aggregated over all trials that share the name.
struct CheckRecord {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<nlohmann::json> witness;  // first failure, always present when !pass
  std::string detail;
};

/// Pass/fail record of an audit. Checks are keyed by name, so merging two
/// reports does not depend on the order in which trials ran.
class AxiomReport {
 public:
  AxiomReport() = default;
  AxiomReport(std::uint64_t seed, std::size_t samples) : seed_(seed), samples_(samples) {}

  void pass(const std::string& name, std::string detail = {}) {
    auto& rec = slot(name);
    ++rec.trials;
    if (rec.detail.empty()) rec.detail = std::move(detail);
  }

  void fail(const std::string& name, nlohmann::json witness, std::string detail) {
    auto& rec = slot(name);
    ++rec.trials;
    ++rec.failures;
    if (rec.pass) {
      rec.pass = false;
      rec.witness = std::move(witness);
      rec.detail = std::move(detail);
    }
  }

  /// Records `ok` under `name`; the witness thunk is only evaluated on failure.
  template <class WitnessFn>
  void check(const std::string& name, bool ok, WitnessFn&& witness, const std::string& detail = {}) {
    if (ok) {
      pass(name, detail);
    } else {
      fail(name, std::forward<WitnessFn>(witness)(), detail.empty() ? "check failed" : detail);
    }
  }

  void merge(const AxiomReport& other) {
    for (const auto& [name, rec] : other.checks_) {
      auto& mine = slot(name);
      mine.trials += rec.trials;
      mine.failures += rec.failures;
      if (!rec.pass && mine.pass) {
        mine.pass = false;
        mine.witness = rec.witness;
        mine.detail = rec.detail;
      } else if (mine.detail.empty()) {
        mine.detail = rec.detail;
      }
    }
    samples_ += other.samples_;
  }

  bool all_passed() const {
    for (const auto& [_, rec] : checks_)
      if (!rec.pass) return false;
    return true;
  }

  bool passed(const std::string& name) const {
    auto it = checks_.find(name);
    return it != checks_.end() && it->second.pass;
  }

  bool has(const std::string& name) const { return checks_.count(name) != 0; }
  const CheckRecord& at(const std::string& name) const { return checks_.at(name); }
  const std::map<std::string, CheckRecord>& checks() const { return checks_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t sample_count() const { return samples_; }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["seed"] = seed_;
    out["sample_count"] = samples_;
    out["pass"] = all_passed();
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, rec] : checks_) {
      nlohmann::json c;
      c["pass"] = rec.pass;
      c["trials"] = rec.trials;
      c["failures"] = rec.failures;
      c["detail"] = rec.detail;
      c["witness"] = rec.witness ? *rec.witness : nlohmann::json(nullptr);
      checks[name] = std::move(c);
    }
    out["checks"] = std::move(checks);
    return out;
  }

 private:
  CheckRecord& slot(const std::string& name) {
    auto [it, inserted] = checks_.try_emplace(name);
    if (inserted) it->second.name = name;
    return it->second;
  }

  std::uint64_t seed_ = 0;
  std::size_t samples_ = 0;
  std::map<std::string, CheckRecord> checks_;
};

}  // namespace rickart
