#pragma once

#include <cctype>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "downup/gdu/presets.hpp"

namespace downup::cli {

/// Input error pinned to a 1-based line and column of the source text.
class ParseError : public InputError {
public:
  ParseError(int line, int column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

struct PresetCall {
  std::string name;
  std::vector<Scalar> args;

  friend bool operator==(const PresetCall&, const PresetCall&) = default;
};

/// Contents of an algebra spec file: either explicit parameters or a
/// preset, and an optional weight scheme.
struct AlgebraSpec {
  std::optional<gdu::GDUParams> params;
  std::optional<PresetCall> preset;
  std::optional<gdu::WeightScheme> scheme;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

namespace detail {

inline std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  if (lead)
    *lead = b;
  return s.substr(b, e - b);
}

/// Comma-separated rationals; `offset` is the column of text[0].
inline std::vector<Scalar> parse_scalar_list(const std::string& text, int line, int offset) {
  std::vector<Scalar> out;
  if (trim(text).empty())
    return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t lead = 0;
    std::string value = trim(item, &lead);
    auto s = try_parse_scalar(value);
    if (!s)
      throw ParseError(line, offset + static_cast<int>(start + lead),
                       value.empty() ? "missing value in list" : "not a rational literal: '" + value + "'");
    out.push_back(*s);
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses "name" or "name(a, b, ...)". Columns are reported relative to
/// `offset`, the column of text[0].
inline PresetCall parse_preset_call(const std::string& text, int line = 1, int offset = 1) {
  std::size_t lead = 0;
  std::string body = detail::trim(text, &lead);
  PresetCall call;
  std::size_t open = body.find('(');
  call.name = detail::trim(body.substr(0, open));
  if (call.name.empty())
    throw ParseError(line, offset + static_cast<int>(lead), "missing preset name");
  for (char c : call.name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw ParseError(line, offset + static_cast<int>(lead), "bad preset name '" + call.name + "'");
  if (open == std::string::npos)
    return call;
  if (body.back() != ')')
    throw ParseError(line, offset + static_cast<int>(lead + body.size()), "expected ')'");
  call.args = detail::parse_scalar_list(body.substr(open + 1, body.size() - open - 2), line,
                                        offset + static_cast<int>(lead + open + 1));
  return call;
}

/// Parses `key = value` lines; `#` starts a comment. Keys: lambda, omega,
/// gamma, f = [c0, c1, ...], scheme, preset.
inline AlgebraSpec parse_spec(const std::string& text) {
  AlgebraSpec spec;
  std::optional<Scalar> lambda, omega, gamma;
  std::optional<std::vector<Scalar>> f;
  std::vector<std::string> seen;
  int first_param_line = 0, preset_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string content = raw.substr(0, raw.find('#'));
    if (detail::trim(content).empty())
      continue;
    std::size_t eq = content.find('=');
    std::size_t key_lead = 0;
    std::string key = detail::trim(content.substr(0, eq), &key_lead);
    const int key_col = static_cast<int>(key_lead) + 1;
    if (eq == std::string::npos)
      throw ParseError(line, static_cast<int>(content.size()) + 1, "expected '=' after '" + key + "'");
    if (key.empty())
      throw ParseError(line, static_cast<int>(eq) + 1, "missing key before '='");
    for (const auto& k : seen)
      if (k == key)
        throw ParseError(line, key_col, "duplicate key '" + key + "'");
    seen.push_back(key);

    std::size_t value_lead = 0;
    std::string value = detail::trim(content.substr(eq + 1), &value_lead);
    const int value_col = static_cast<int>(eq + 1 + value_lead) + 1;
    if (value.empty())
      throw ParseError(line, static_cast<int>(content.size()) + 1, "missing value for '" + key + "'");

    auto scalar = [&]() {
      auto s = try_parse_scalar(value);
      if (!s)
        throw ParseError(line, value_col, "not a rational literal: '" + value + "'");
      return *s;
    };
    if (key == "lambda" || key == "omega" || key == "gamma") {
      (key == "lambda" ? lambda : key == "omega" ? omega : gamma) = scalar();
      if (!first_param_line)
        first_param_line = line;
    } else if (key == "f") {
      if (value.front() != '[')
        throw ParseError(line, value_col, "expected '[' to open the coefficient list");
      if (value.back() != ']')
        throw ParseError(line, value_col + static_cast<int>(value.size()), "expected ']'");
      f = detail::parse_scalar_list(value.substr(1, value.size() - 2), line, value_col + 1);
      if (f->empty())
        throw ParseError(line, value_col, "f needs at least one coefficient");
      if (!first_param_line)
        first_param_line = line;
    } else if (key == "scheme") {
      try {
        spec.scheme = gdu::parse_scheme(value);
      } catch (const InputError& e) {
        throw ParseError(line, value_col, e.what());
      }
    } else if (key == "preset") {
      spec.preset = parse_preset_call(value, line, value_col);
      preset_line = line;
    } else {
      throw ParseError(line, key_col, "unknown key '" + key + "'");
    }
  }

  if (spec.preset && first_param_line)
    throw ParseError(std::max(preset_line, first_param_line), 1,
                     "give either a preset or explicit parameters, not both");
  if (!spec.preset) {
    const char* missing = !lambda ? "lambda" : !omega ? "omega" : !gamma ? "gamma" : !f ? "f" : nullptr;
    if (missing)
      throw ParseError(line + 1, 1, std::string("missing key '") + missing + "'");
    spec.params = gdu::GDUParams{*lambda, *omega, *gamma, *f};
    try {
      spec.params->validate();
    } catch (const InputError& e) {
      throw ParseError(first_param_line, 1, e.what());
    }
  }
  return spec;
}

inline std::string serialize_preset_call(const PresetCall& call) {
  std::string out = call.name;
  if (call.args.empty())
    return out;
  out += "(";
  for (std::size_t i = 0; i < call.args.size(); ++i)
    out += (i ? ", " : "") + to_string(call.args[i]);
  return out + ")";
}

inline std::string serialize_spec(const AlgebraSpec& spec) {
  std::string out;
  if (spec.preset) {
    out += "preset = " + serialize_preset_call(*spec.preset) + "\n";
  } else if (spec.params) {
    const auto& p = *spec.params;
    out += "lambda = " + to_string(p.lambda) + "\n";
    out += "omega = " + to_string(p.omega) + "\n";
    out += "gamma = " + to_string(p.gamma) + "\n";
    out += "f = [";
    for (std::size_t i = 0; i < p.f_coeffs.size(); ++i)
      out += (i ? ", " : "") + to_string(p.f_coeffs[i]);
    out += "]\n";
  }
  if (spec.scheme)
    out += "scheme = " + gdu::to_string(*spec.scheme) + "\n";
  return out;
}

/// `random(n)` draws parameters with deg f = n from a generator seeded by
/// `seed`; the other names go to gdu::preset.
inline gdu::GDUAlgebra resolve(const AlgebraSpec& spec, std::uint64_t seed) {
  if (spec.params) {
    auto scheme = spec.scheme.value_or(gdu::default_scheme(*spec.params));
    return gdu::GDUAlgebra(*spec.params, scheme, "explicit");
  }
  if (!spec.preset)
    throw InputError("spec has neither parameters nor a preset");
  const auto& call = *spec.preset;
  if (call.name == "random") {
    if (call.args.size() != 1 || call.args[0].get_den() != 1 || call.args[0] < 0 || call.args[0] > 8)
      throw InputError("random takes one integer argument 0..8 (deg f)");
    std::mt19937_64 rng(seed);
    auto params = gdu::random_params(rng, static_cast<int>(call.args[0].get_num().get_si()));
    auto scheme = spec.scheme.value_or(gdu::default_scheme(params));
    return gdu::GDUAlgebra(params, scheme, serialize_preset_call(call) + " seed=" + std::to_string(seed));
  }
  return gdu::preset(call.name, call.args, spec.scheme);
}

}  // namespace downup::cli
