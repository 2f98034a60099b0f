#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace hecke {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "skip";
  }
}

/// One verified statement. `anchor` names the fact being checked; `detail`
/// carries the witness on failure.
struct Check {
  std::string name;
  std::string anchor;
  Status status = Status::pass;
  std::string detail;
  double seconds = 0.0;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, std::string anchor, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), std::move(anchor), ok ? Status::pass : Status::fail,
                      std::move(detail), 0.0});
  }
  void skip(std::string name, std::string anchor, std::string why) {
    checks.push_back({std::move(name), std::move(anchor), Status::skip, std::move(why), 0.0});
  }

  /// Runs fn, records its outcome and wall-clock time. fn returns an empty
  /// string on success or a witness on failure; exceptions become failures.
  void run(std::string name, std::string anchor, const std::function<std::string()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Check c{std::move(name), std::move(anchor), Status::pass, {}, 0.0};
    try {
      c.detail = fn();
      if (!c.detail.empty()) c.status = Status::fail;
    } catch (const std::exception& e) {
      c.status = Status::fail;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.push_back(std::move(c));
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool ok() const {
    for (const auto& c : checks) {
      if (c.status == Status::fail) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == Status::fail ? 1 : 0;
    return n;
  }
  const Check* first_failure() const {
    for (const auto& c : checks) {
      if (c.status == Status::fail) return &c;
    }
    return nullptr;
  }
};

}  // namespace hecke
