#include <charconv>
#include <map>
#include <string>

#include "favard/curve.hpp"
#include "favard/error.hpp"

namespace favard {

namespace {

const char* kGrammar =
    "circle:R=<r> | halfcircle:R=<r>,sign=+|- | ellipse:a=<a>,b=<b> | "
    "parabola:c2=<c2>[,c1=<c1>][,c0=<c0>],t0=<t0>,t1=<t1> | "
    "segment:slope=<m>,len=<l> | vsegment:len=<l> | "
    "logspiral:R=<r>,k=<k>,turns=<m>";

struct SpecFields {
  std::string name;
  std::map<std::string, std::string> fields;
};

SpecFields split_spec(std::string_view spec) {
  SpecFields out;
  const auto colon = spec.find(':');
  out.name = std::string(spec.substr(0, colon));
  if (out.name.empty()) throw_parse(std::string("empty curve name; grammar: ") + kGrammar);
  if (colon == std::string_view::npos) return out;

  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw_parse("expected key=value in curve spec; grammar: " + std::string(kGrammar));
    }
    out.fields[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
  }
  return out;
}

double number_field(const SpecFields& spec, const std::string& key) {
  const auto it = spec.fields.find(key);
  if (it == spec.fields.end()) {
    throw_parse("curve '" + spec.name + "' needs field '" + key + "'; grammar: " + kGrammar);
  }
  const std::string& text = it->second;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw_parse("field '" + key + "' is not a number in '" + spec.name + "'");
  }
  return value;
}

double number_field_or(const SpecFields& spec, const std::string& key, double fallback) {
  return spec.fields.count(key) ? number_field(spec, key) : fallback;
}

int sign_field(const SpecFields& spec, const std::string& key, int fallback) {
  const auto it = spec.fields.find(key);
  if (it == spec.fields.end()) return fallback;
  if (it->second == "+" || it->second == "+1" || it->second == "1") return +1;
  if (it->second == "-" || it->second == "-1") return -1;
  throw_parse("field '" + key + "' must be + or -");
}

}  // namespace

const char* curve_grammar() { return kGrammar; }

CurveSpec parse_curve(std::string_view spec) {
  const SpecFields parsed = split_spec(spec);
  try {
    CurveSpec curve = [&]() -> CurveSpec {
      if (parsed.name == "circle") {
        return make_circle(number_field(parsed, "R"));
      }
      if (parsed.name == "halfcircle") {
        return make_half_circle(number_field(parsed, "R"), sign_field(parsed, "sign", -1));
      }
      if (parsed.name == "ellipse") {
        return make_ellipse(number_field(parsed, "a"), number_field(parsed, "b"));
      }
      if (parsed.name == "parabola") {
        return make_parabola(number_field(parsed, "c2"), number_field_or(parsed, "c1", 0.0),
                             number_field_or(parsed, "c0", 0.0), number_field(parsed, "t0"),
                             number_field(parsed, "t1"));
      }
      if (parsed.name == "segment") {
        return make_segment(number_field(parsed, "slope"), number_field(parsed, "len"));
      }
      if (parsed.name == "vsegment") {
        return make_vertical_segment(number_field(parsed, "len"));
      }
      if (parsed.name == "logspiral") {
        return make_log_spiral(number_field(parsed, "R"), number_field(parsed, "k"),
                               number_field(parsed, "turns"));
      }
      throw_parse("unknown curve '" + parsed.name + "'; grammar: " + kGrammar);
    }();
    curve.set_description(std::string(spec));
    return curve;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::argument) {
      throw_parse(std::string(e.what()) + "; grammar: " + kGrammar);
    }
    throw;
  }
}

}  // namespace favard
