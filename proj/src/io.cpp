#include "ultraseq/io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ultraseq {

using nlohmann::json;

namespace {

json numbers(std::span<const BigInt> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json rule_to_json(const ExtRule& r) {
  if (r.is_undefined()) return {{"kind", "undefined"}, {"unit", json::array()}};
  return {{"kind", "periodic"}, {"unit", numbers(r.unit())}};
}

BigInt number_from_json(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected a decimal string, got " + j.dump());
}

std::vector<BigInt> numbers_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(number_from_json(x));
  return out;
}

ExtRule rule_from_json(const json& j, const char* side) {
  if (j.is_null()) return ExtRule::undefined();
  if (!j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument(std::string(side) + ": expected an object with \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "undefined") return ExtRule::undefined();
  if (kind != "periodic") {
    throw std::invalid_argument(std::string(side) + ": unknown kind '" + kind + "'");
  }
  auto unit = numbers_from_json(j.value("unit", json::array()), "unit");
  if (unit.empty()) throw std::invalid_argument(std::string(side) + ": empty periodic unit");
  return ExtRule::periodic(std::move(unit));
}

}  // namespace

std::string to_json(const SeqWindow& w) {
  const json doc = {{"lo", w.lo()},
                    {"values", numbers(w.values())},
                    {"left", rule_to_json(w.left())},
                    {"right", rule_to_json(w.right())}};
  return doc.dump(2) + "\n";
}

SeqWindow from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lo") || !doc.contains("values")) {
    throw std::invalid_argument("sequence document needs \"lo\" and \"values\"");
  }
  try {
    return SeqWindow(doc.at("lo").get<Index>(), numbers_from_json(doc.at("values"), "values"),
                     rule_from_json(doc.value("left", json()), "left"),
                     rule_from_json(doc.value("right", json()), "right"));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed sequence document: ") + e.what());
  }
}

std::string to_csv(const SeqWindow& w) {
  std::string out = "index,value\n";
  Index k = w.lo();
  for (const auto& v : w.values()) {
    out += std::to_string(k++);
    out += ',';
    out += to_string(v);
    out += '\n';
  }
  return out;
}

SeqWindow from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,value") throw std::invalid_argument("CSV header must be 'index,value'");

  std::optional<Index> lo;
  std::vector<BigInt> values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("CSV row " + std::to_string(row) + ": expected index,value");
    }
    const Index k = to_int64(parse_bigint(std::string_view(line).substr(0, comma)));
    if (!lo) lo = k;
    if (k != *lo + static_cast<Index>(values.size())) {
      throw std::invalid_argument("CSV row " + std::to_string(row) + ": index " +
                                  std::to_string(k) + " is not consecutive");
    }
    values.push_back(parse_bigint(std::string_view(line).substr(comma + 1)));
  }
  if (!lo) throw std::invalid_argument("CSV has no rows");
  return SeqWindow(*lo, std::move(values));
}

std::string to_table(const SeqWindow& w) {
  std::size_t wi = 5, wv = 5;
  for (Index k = w.lo(); k <= w.hi(); ++k) {
    wi = std::max(wi, std::to_string(k).size());
    wv = std::max(wv, to_string(w.value_at(k)).size());
  }
  std::ostringstream os;
  auto row = [&](const std::string& a, const std::string& b) {
    os << std::string(wi - a.size(), ' ') << a << "  " << std::string(wv - b.size(), ' ') << b
       << '\n';
  };
  row("index", "value");
  for (Index k = w.lo(); k <= w.hi(); ++k) row(std::to_string(k), to_string(w.value_at(k)));
  return os.str();
}

}  // namespace ultraseq
