#include "ultraseq/descriptor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ultraseq {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Splits "k1=v1,k2=v2" on commas, gluing a piece onto the previous value
// unless it starts with one of `keys` followed by '='. Values may therefore
// contain commas (unit lists, nested descriptors).
std::map<std::string, std::string> key_values(std::string_view family, std::string_view body,
                                              const std::vector<std::string>& keys) {
  std::map<std::string, std::string> out;
  if (body.empty()) return out;
  std::string current;
  for (const auto& piece : split(body, ',')) {
    const auto eq = piece.find('=');
    const std::string key = eq == std::string::npos ? "" : piece.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
      if (out.count(key)) bad(std::string(family) + ": duplicate key '" + key + "'");
      out[key] = piece.substr(eq + 1);
      current = key;
    } else if (!current.empty()) {
      out[current] += "," + piece;
    } else {
      bad(std::string(family) + ": unknown key in '" + piece + "'");
    }
  }
  return out;
}

Index parse_index(const std::string& s, const std::string& what) {
  try {
    return to_int64(parse_bigint(s));
  } catch (const std::exception&) {
    bad(what + ": expected an integer, got '" + s + "'");
  }
}

std::vector<Index> parse_index_list(const std::string& s, const std::string& what) {
  std::vector<Index> out;
  for (const auto& p : split(s, ';')) out.push_back(parse_index(p, what));
  return out;
}

std::vector<BigInt> parse_value_list(const std::string& s, const std::string& what) {
  std::vector<BigInt> out;
  for (const auto& p : split(s, ';')) {
    try {
      out.push_back(parse_bigint(p));
    } catch (const std::exception&) {
      bad(what + ": expected an integer, got '" + p + "'");
    }
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key,
                        const std::string& family) {
  const auto it = kv.find(key);
  if (it == kv.end()) bad(family + ": missing key '" + key + "'");
  return it->second;
}

TauConfig parse_tau(std::string_view body) {
  const auto kv = key_values("tau", body, {"m", "P", "N"});
  TauConfig c{parse_index(need(kv, "m", "tau"), "tau m"),
              parse_index_list(need(kv, "P", "tau"), "tau P"),
              parse_index_list(need(kv, "N", "tau"), "tau N")};
  try {
    c.validate();
  } catch (const InvalidConfig& e) {
    bad(e.what());
  }
  return c;
}

std::pair<std::string_view, std::string_view> head_body(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {text, {}};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

std::pair<Index, Index> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) bad("range must look like a..b, got '" + std::string(text) + "'");
  const Index a = parse_index(std::string(text.substr(0, dots)), "range start");
  const Index b = parse_index(std::string(text.substr(dots + 2)), "range end");
  if (a > b) bad("range start exceeds end in '" + std::string(text) + "'");
  return {a, b};
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
  const auto [head, body] = head_body(text);
  FamilyDescriptor d;
  if (head == "pi" || head == "pistar") {
    d.kind = head == "pi" ? Kind::pi : Kind::pistar;
    const auto kv = key_values(head, body, {"m"});
    d.m = parse_index(need(kv, "m", std::string(head)), std::string(head) + " m");
    if (d.m < 1) bad(std::string(head) + ": m must be >= 1");
  } else if (head == "tau") {
    d.kind = Kind::tau;
    d.tau = parse_tau(body);
  } else if (head == "omega") {
    d.kind = Kind::omega;
    const auto kv = key_values(head, body, {"extent"});
    if (kv.count("extent")) {
      d.extent = parse_index(kv.at("extent"), "omega extent");
      if (*d.extent < 2) bad("omega: extent must be >= 2");
    }
  } else if (head == "opower") {
    d.kind = Kind::opower;
    const auto kv = key_values(head, body, {"r", "unit", "m"});
    if (kv.count("m")) {
      d.opower = OPowerConfig::odd_family(parse_index(kv.at("m"), "opower m"));
    } else {
      d.opower.r = parse_index(need(kv, "r", "opower"), "opower r");
      for (const auto& s : split(need(kv, "unit", "opower"), ',')) {
        if (s == "+") d.opower.placement.push_back(1);
        else if (s == "-") d.opower.placement.push_back(-1);
        else if (s == "0") d.opower.placement.push_back(0);
        else bad("opower: unit entries must be +, - or 0, got '" + s + "'");
      }
    }
    try {
      d.opower.validate();
    } catch (const InvalidConfig& e) {
      bad(e.what());
    }
  } else if (head == "composite") {
    d.kind = Kind::composite;
    const auto kv = key_values(head, body, {"left", "mid", "seed", "steps"});
    const auto [lhead, lbody] = head_body(need(kv, "left", "composite"));
    if (lhead != "tau") bad("composite: left must be a tau descriptor");
    d.tau = parse_tau(lbody);
    if (kv.count("mid") && !kv.at("mid").empty()) {
      const auto& mid = kv.at("mid");
      const auto [mhead, mbody] = head_body(mid);
      if (mhead == "omega") {
        const auto [a, b] = parse_range(mbody);
        d.mid = omega_segment(a, b);
      } else {
        d.mid = parse_value_list(mid, "composite mid");
      }
    }
    d.seed = parse_value_list(need(kv, "seed", "composite"), "composite seed").at(0);
    if (d.seed <= 0) bad("composite: seed must be positive");
    if (kv.count("steps")) d.steps = parse_index(kv.at("steps"), "composite steps");
  } else if (head == "grec") {
    d.kind = Kind::grec;
    const auto kv = key_values(head, body, {"P", "Q", "r", "init"});
    d.g = {parse_value_list(need(kv, "P", "grec"), "grec P").at(0),
           parse_value_list(need(kv, "Q", "grec"), "grec Q").at(0)};
    d.r = parse_index(need(kv, "r", "grec"), "grec r");
    if (d.r < 1) bad("grec: r must be >= 1");
    d.init = parse_value_list(need(kv, "init", "grec"), "grec init");
    if (static_cast<Index>(d.init.size()) != 2 * d.r) {
      bad("grec: init needs 2r = " + std::to_string(2 * d.r) + " values");
    }
  } else {
    bad("unknown family '" + std::string(head) +
        "' (known: pi, pistar, tau, omega, opower, composite, grec)");
  }
  return d;
}

SeqWindow FamilyDescriptor::window(Index a, Index b) const {
  const Index need_hi = b + 1;
  switch (kind) {
    case Kind::pi:
      return pi_window(m, std::max<Index>(need_hi, 0));
    case Kind::pistar: {
      // Widen the left edge so that the heads in [a, b] can read back fully.
      const Index n = std::max<Index>(need_hi, 3);
      const SeqWindow w = pi_star_window(m, n, std::min<Index>(a, 0));
      Index reach = std::min<Index>(a, 0);
      for (Index p = std::max(a, w.lo()); p <= b; ++p) {
        const BigInt h = w.value_at(p);
        if (h > 0) reach = std::min(reach, to_int64(p - h + 1));
      }
      return reach < w.lo() ? pi_star_window(m, n, reach) : w;
    }
    case Kind::tau:
      return tau_window(tau, 1);
    case Kind::omega: {
      Index e = extent.value_or(2);
      if (!extent) {
        while (-2 * e > a || 2 * e + 2 < need_hi) ++e;
      }
      return omega_window(e);
    }
    case Kind::opower:
      return o_power_window(opower, 1);
    case Kind::composite:
      return composite_family(tau, mid, seed, steps.value_or(std::max<Index>(need_hi, 0)));
    case Kind::grec:
      return recurrence_1_3_extend(g, r, init, std::max<Index>(need_hi + 1 - 2 * r, 0));
  }
  throw std::logic_error("unreachable");
}

}  // namespace ultraseq
