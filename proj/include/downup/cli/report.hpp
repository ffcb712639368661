#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "downup/gdu/algebra.hpp"

namespace downup::cli {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skipped";
  }
}

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string summary;             // one line; the skip reason for skipped checks
  std::vector<std::string> lines;  // extra text-mode lines
  Json data = Json::object();
};

struct Report {
  std::string command;
  Json algebra = nullptr;
  std::vector<std::string> notes;
  std::vector<CheckRecord> checks;

  CheckRecord& add(std::string name, Status status, std::string summary, Json data = Json::object()) {
    checks.push_back({std::move(name), status, std::move(summary), {}, std::move(data)});
    return checks.back();
  }

  CheckRecord& skip(std::string name, std::string reason) {
    return add(std::move(name), Status::Skipped, std::move(reason));
  }

  bool failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == Status::Fail; });
  }

  int exit_code() const { return failed() ? 1 : 0; }
};

inline Json scalar_json(const Scalar& s) { return downup::to_string(s); }

inline Json algebra_json(const gdu::GDUAlgebra& alg) {
  const auto& p = alg.params();
  Json f = Json::array();
  for (const auto& c : p.f_coeffs)
    f.push_back(scalar_json(c));
  const auto& w = alg.order().weights();
  return Json{{"label", alg.label()},
              {"lambda", scalar_json(p.lambda)},
              {"omega", scalar_json(p.omega)},
              {"gamma", scalar_json(p.gamma)},
              {"f", f},
              {"deg_f", alg.degree_f()},
              {"scheme", gdu::to_string(alg.scheme())},
              {"weights", {{"X1", w[gdu::X1]}, {"X2", w[gdu::X2]}, {"X3", w[gdu::X3]}}}};
}

inline std::string render_machine(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"summary", c.summary}, {"data", c.data}});
  Json doc{{"schema", "downup-report/1"},
           {"command", r.command},
           {"algebra", r.algebra},
           {"checks", checks},
           {"notes", r.notes},
           {"ok", !r.failed()}};
  return doc.dump(2) + "\n";
}

inline std::string render_text(const Report& r) {
  std::string out = "downup " + r.command;
  if (!r.algebra.is_null()) {
    const auto& a = r.algebra;
    std::string f;
    for (const auto& c : a["f"])
      f += (f.empty() ? "" : ", ") + c.get<std::string>();
    out += ": " + a["label"].get<std::string>() + " [" + a["scheme"].get<std::string>() + "]\n";
    out += "  lambda = " + a["lambda"].get<std::string>() + ", omega = " + a["omega"].get<std::string>() +
           ", gamma = " + a["gamma"].get<std::string>() + ", f = [" + f + "]\n";
  } else {
    out += "\n";
  }
  std::size_t width = 0;
  for (const auto& c : r.checks)
    width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    out += "  " + tag + "  " + c.name + std::string(width - c.name.size() + 2, ' ') + c.summary + "\n";
    for (const auto& line : c.lines)
      out += "        " + line + "\n";
  }
  for (const auto& n : r.notes)
    out += "  note: " + n + "\n";
  return out;
}

}  // namespace downup::cli
