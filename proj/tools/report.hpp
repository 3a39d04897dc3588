#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gl2::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Report
{
  std::string command;
  Json config  = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
};

/// %.17g; non-finite values become null (JSON) or nan/inf text.
std::string format_number(double x);

/// Two-space indented JSON, keys in insertion order, numbers via format_number.
std::string to_json(const Report & r);
/// Long format: section,key,value with one row per scalar leaf.
std::string to_csv(const Report & r);
/// "section/key = value" per scalar leaf.
std::string to_text(const Report & r);

std::string render(const Report & r, Format f);

}  // namespace gl2::cli
