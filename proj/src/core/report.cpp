#include "core/report.hpp"

#include <cmath>
#include <cstdio>

namespace qdm::rep {

namespace {

void write_double(std::string& out, double d) {
  if (!std::isfinite(d)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  out += buf;
  // bare integers stay valid JSON numbers either way; nothing to fix up
}

void write_value(std::string& out, const ojson& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += ojson(it.key()).dump();  // escaped key
        out += ": ";
        write_value(out, it.value(), depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_value(out, v, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case ojson::value_t::number_float:
      write_double(out, j.get<double>());
      return;
    default:
      out += j.dump();  // strings, integers, booleans, null
      return;
  }
}

}  // namespace

std::string dump(const ojson& j) {
  std::string out;
  write_value(out, j, 0);
  out += "\n";
  return out;
}

std::string csv_confinement(const std::vector<ex::ConfinementRow>& rows) {
  std::string out = "L,deltaE_magnetic,deltaE_electric\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", r.L, r.dE_magnetic, r.dE_electric);
    out += buf;
  }
  return out;
}

}  // namespace qdm::rep
