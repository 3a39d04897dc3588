#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gl2::cli {

std::string format_number(double x)
{
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_json(std::ostringstream & os, const Json & j, int indent)
{
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write_json(os, j[i], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_number(x) : "null");
      return;
    }
    default: os << j.dump(); return;
  }
}

std::string leaf_text(const Json & j)
{
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_number(j.get<double>());
  return j.dump();
}

void flatten(const Json & j, const std::string & path, std::vector<std::pair<std::string, std::string>> & rows)
{
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "/" + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), rows);
  } else {
    rows.emplace_back(path, leaf_text(j));
  }
}

std::string csv_field(const std::string & s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::pair<std::string, std::string>> all_rows(const Report & r)
{
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(r.results, "", rows);
  for (std::size_t i = 0; i < r.warnings.size(); ++i) rows.emplace_back("warnings/" + std::to_string(i), r.warnings[i]);
  return rows;
}

}  // namespace

std::string to_json(const Report & r)
{
  Json doc = Json::object();
  doc["command"]  = r.command;
  doc["config"]   = r.config;
  doc["results"]  = r.results;
  doc["warnings"] = r.warnings;
  std::ostringstream os;
  write_json(os, doc, 0);
  os << "\n";
  return os.str();
}

std::string to_csv(const Report & r)
{
  std::ostringstream os;
  os << "section,key,value\n";
  for (const auto & [path, value] : all_rows(r)) {
    const auto cut           = path.find('/');
    const std::string section = path.substr(0, cut);
    const std::string key     = cut == std::string::npos ? "" : path.substr(cut + 1);
    os << csv_field(section) << "," << csv_field(key) << "," << csv_field(value) << "\n";
  }
  return os.str();
}

std::string to_text(const Report & r)
{
  std::ostringstream os;
  os << r.command << "\n";
  if (r.results.contains("checks")) {
    for (const Json & c : r.results["checks"]) {
      os << c["status"].get<std::string>() << " " << c["module"].get<std::string>() << "/" << c["name"].get<std::string>()
         << " observed=" << leaf_text(c["observed"]) << " tol=" << leaf_text(c["tolerance"]);
      if (!c["detail"].get<std::string>().empty()) os << "  " << c["detail"].get<std::string>();
      os << "\n";
    }
    const Json & s = r.results["summary"];
    os << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["warn"] << " warn\n";
    return os.str();
  }
  for (const auto & [path, value] : all_rows(r)) os << path << " = " << value << "\n";
  return os.str();
}

std::string render(const Report & r, Format f)
{
  switch (f) {
    case Format::Json: return to_json(r);
    case Format::Csv: return to_csv(r);
    case Format::Text: return to_text(r);
  }
  return {};
}

}  // namespace gl2::cli
