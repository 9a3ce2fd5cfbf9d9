#include "embsec/canonical_json.hpp"

#include <cmath>
#include <cstdio>

namespace embsec {
namespace {

void append_indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

void dump_value(const nlohmann::json& value, std::string& out, int depth) {
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // nlohmann::json stores object members in key order already.
      for (const auto& [key, member] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        append_indent(out, depth + 1);
        out += nlohmann::json(key).dump();
        out += ": ";
        dump_value(member, out, depth + 1);
      }
      out += "\n";
      append_indent(out, depth);
      out += "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ",\n";
        append_indent(out, depth + 1);
        dump_value(value[i], out, depth + 1);
      }
      out += "\n";
      append_indent(out, depth);
      out += "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      double d = value.get<double>();
      if (d == 0.0) d = 0.0;  // normalize negative zero
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "%.9f", d);
      out += buffer;
      return;
    }
    default:
      // strings (escaped), integers, booleans, null
      out += value.dump();
      return;
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& value) {
  std::string out;
  dump_value(value, out, 0);
  return out;
}

double quantize9(double value) {
  return std::round(value * 1e9) / 1e9;
}

}  // namespace embsec
