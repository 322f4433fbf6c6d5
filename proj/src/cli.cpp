#include "ultraseq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ultraseq/descriptor.hpp"
#include "ultraseq/exactmath.hpp"
#include "ultraseq/io.hpp"
#include "ultraseq/reference.hpp"

namespace ultraseq::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  std::string range;
  std::string format;
  std::string output;
  std::string input;
  std::string apply;
  Index order = 1;
  bool strict = false;
  bool canonical = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string render(const SeqWindow& w, const std::string& format) {
  if (format == "json") return to_json(w);
  if (format == "table") return to_table(w);
  return to_csv(w);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("--input: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SeqWindow read_document(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return from_csv(text);
}

std::pair<Index, Index> range_of(const Options& o) {
  if (o.range.empty()) throw UsageError("--range is required");
  return parse_range(o.range);
}

FamilyDescriptor family_of(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  return FamilyDescriptor::parse(o.family);
}

// --- subcommands ------------------------------------------------------------

int run_gen(const Options& o, std::ostream& out) {
  const auto [a, b] = range_of(o);
  if (o.order < 1) throw UsageError("--order must be >= 1");
  const Index extra = o.apply.empty() ? 0 : o.order;
  SeqWindow w = o.input.empty() ? family_of(o).window(a, b + extra) : read_document(o.input);
  if (!o.apply.empty()) w = iterate(Transformation::by_name(o.apply), o.order, w);
  out << render(w.slice(a, b), o.format);
  return 0;
}

int run_export(const Options& o, std::ostream& out) {
  if (o.input.empty()) return run_gen(o, out);
  SeqWindow w = read_document(o.input);
  if (!o.range.empty()) {
    const auto [a, b] = parse_range(o.range);
    w = w.slice(a, b);
  }
  out << render(w, o.format);
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  SeqWindow w = o.input.empty() ? SeqWindow(0, {0}) : read_document(o.input);
  Index a = 0, b = 0;
  if (!o.range.empty()) {
    std::tie(a, b) = parse_range(o.range);
  } else if (!o.input.empty()) {
    a = w.lo();
    b = w.hi();
  } else {
    throw UsageError("--range is required");
  }
  if (o.input.empty()) w = family_of(o).window(a, b);

  const CheckReport rep = verify_O_range(w, a, b);
  for (const auto& e : rep.entries) {
    if (e.status == CheckStatus::violation) {
      out << "violation at " << e.position << ": rule gives " << to_string(*e.expected)
          << " at " << e.position + 1 << ", found " << to_string(*e.actual) << "\n";
    } else if (e.status == CheckStatus::uncheckable && o.strict) {
      out << "uncheckable at " << e.position << "\n";
    }
  }
  out << rep.ok << " ok, " << rep.violations << " violations, " << rep.uncheckable
      << " uncheckable\n";
  if (rep.violations > 0) return 1;
  if (o.strict && rep.uncheckable > 0) return 1;
  return 0;
}

int run_diff(const Options& o, std::ostream& out) {
  const auto [a, b] = range_of(o);
  if (o.order < 0) throw UsageError("--order must be >= 0");
  const SeqWindow w = o.input.empty() ? family_of(o).window(a, b + o.order)
                                      : read_document(o.input);
  out << render(difference(w, o.order).slice(a, b), o.format);
  return 0;
}

int run_closed_form(const Options& o, std::ostream& out) {
  const auto [a, b] = range_of(o);
  const auto d = family_of(o);
  if (d.kind != FamilyDescriptor::Kind::pi && d.kind != FamilyDescriptor::Kind::pistar) {
    throw UsageError("closed-form supports pi and pistar families");
  }
  if (a < 0) throw UsageError("--range must start at 0 or later for closed forms");
  const SeqWindow w = d.window(a, b);

  std::vector<std::string> header{"n", "generated"};
  std::vector<std::vector<std::string>> rows;
  bool all_agree = true;
  for (Index n = a; n <= b; ++n) {
    const BigInt g = w.value_at(n);
    std::vector<std::string> row{std::to_string(n), to_string(g)};
    if (d.kind == FamilyDescriptor::Kind::pi) {
      const BigInt f = pi_closed(d.m, n, ClosedFormMethod::fib);
      const BigInt q = pi_closed(d.m, n, ClosedFormMethod::quad);
      const bool ok = f == g && q == g;
      all_agree = all_agree && ok;
      row.insert(row.end(), {to_string(f), to_string(q), ok ? "yes" : "no"});
    } else if (n >= 4 && n % 2 == 0) {
      const BigInt c = pi_star_even_closed(d.m, n / 2);
      all_agree = all_agree && c == g;
      row.insert(row.end(), {to_string(c), c == g ? "yes" : "no"});
    } else {
      row.insert(row.end(), {"", ""});
    }
    rows.push_back(std::move(row));
  }
  if (d.kind == FamilyDescriptor::Kind::pi) {
    header.insert(header.end(), {"fib", "quad", "agree"});
  } else {
    header.insert(header.end(), {"even_closed", "agree"});
  }

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
      arr.push_back(obj);
    }
    out << arr.dump(2) << "\n";
  } else {
    const char* sep = o.format == "table" ? "  " : ",";
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? sep : "") << r[i];
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
  return all_agree ? 0 : 1;
}

std::string join(const std::vector<Index>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

int run_enumerate(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("--family is required (tau:m=M)");
  const auto colon = o.family.find(':');
  const std::string head = o.family.substr(0, colon);
  if (head != "tau" || colon == std::string::npos || o.family.compare(colon + 1, 2, "m=") != 0) {
    throw UsageError("--family: enumerate expects 'tau:m=M', got '" + o.family + "'");
  }
  const Index m = to_int64(parse_bigint(o.family.substr(colon + 3)));
  const auto configs = tau_enumerate(m, o.canonical);

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : configs) {
      json unit = json::array();
      for (const auto& v : c.unit()) unit.push_back(to_string(v));
      arr.push_back({{"m", c.m}, {"P", c.P}, {"N", c.N}, {"unit", unit}});
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  const char* sep = o.format == "table" ? "  " : ",";
  out << "P" << sep << "N" << sep << "unit\n";
  for (const auto& c : configs) {
    std::string unit;
    for (const auto& v : c.unit()) unit += (unit.empty() ? "" : ";") + to_string(v);
    out << join(c.P) << sep << join(c.N) << sep << unit << "\n";
  }
  if (o.format == "table") out << configs.size() << " configurations\n";
  return 0;
}

int run_approx(const Options& o, std::ostream& out) {
  const auto [a, b] = range_of(o);
  const auto d = family_of(o);
  if (d.kind != FamilyDescriptor::Kind::composite) {
    throw UsageError("approx expects a composite family with a tau left tail");
  }
  const SeqWindow w = d.window(a, b + 1);
  const ApproxReport rep = approx_report(d.tau.m, w, a, b - a);

  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"r", r.r},
                      {"n", a + r.r},
                      {"predicted", r.predicted},
                      {"exact", to_string(r.exact)},
                      {"relative_error", r.relative_error}});
    }
    out << json{{"m", rep.model.m},
                {"phi_m", rep.model.phi_m},
                {"kappa_plus", rep.model.kappa_plus},
                {"kappa_minus", rep.model.kappa_minus},
                {"empirical_ratio", rep.empirical_ratio},
                {"ratio_relative_error", rep.ratio_relative_error},
                {"rows", rows}}
                   .dump(2)
        << "\n";
    return 0;
  }
  const char* sep = o.format == "table" ? "  " : ",";
  if (o.format == "table") {
    out << "phi_" << rep.model.m << " = " << std::setprecision(10) << rep.model.phi_m
        << ", u_{n+1}/u_n = " << rep.empirical_ratio << " (relative error "
        << rep.ratio_relative_error << ")\n";
  }
  out << "r" << sep << "n" << sep << "predicted" << sep << "exact" << sep << "relative_error\n";
  out << std::setprecision(12);
  for (const auto& r : rep.rows) {
    out << r.r << sep << a + r.r << sep << r.predicted << sep << to_string(r.exact) << sep
        << r.relative_error << "\n";
  }
  return 0;
}

int run_reference(const Options& o, std::ostream& out) {
  const auto [a, b] = range_of(o);
  if (a < 1) throw UsageError("--range: reference sequences start at index 1");
  MemoTable::Rule rule;
  if (o.family == "hofstadter-q" || o.family == "q") {
    rule = MemoTable::Rule::hofstadter_q;
  } else if (o.family == "conway") {
    rule = MemoTable::Rule::conway;
  } else {
    throw UsageError("--family: reference expects 'hofstadter-q' or 'conway', got '" +
                     o.family + "'");
  }
  MemoTable t(rule);
  std::vector<BigInt> values;
  for (Index n = a; n <= b; ++n) values.push_back(t.at(n));
  out << render(SeqWindow(a, std::move(values)), o.format);
  return 0;
}

void add_common(CLI::App* sub, Options& o, const std::string& default_format) {
  sub->description(sub->get_description() + " [default format: " + default_format + "]");
  sub->add_option("--family", o.family, "family descriptor, e.g. pi:m=1");
  sub->add_option("--range", o.range, "inclusive index range a..b");
  sub->add_option("--format", o.format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  sub->add_option("--output", o.output, "write to this file instead of stdout");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* cap = std::getenv("ULTRASEQ_MAX_WINDOW")) {
    try {
      const BigInt v = parse_bigint(cap);
      if (v < 1) throw std::invalid_argument("must be positive");
      set_max_window_length(static_cast<std::size_t>(to_int64(v)));
    } catch (const std::exception& e) {
      err << "error: ULTRASEQ_MAX_WINDOW: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App app{"Ultra-recursive sequence toolkit", "ultraseq"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "materialize a family over a range");
  add_common(gen, o, "csv");
  gen->add_option("--input", o.input, "read a sequence document instead of --family");
  gen->add_option("--apply", o.apply, "transformation to apply: O, L, fib-like, G:P,Q");
  gen->add_option("--order", o.order, "number of applications of --apply");

  auto* verify = app.add_subcommand("verify", "check the self-generation rule");
  add_common(verify, o, "table");
  verify->add_option("--input", o.input, "read a sequence document instead of --family");
  verify->add_flag("--strict", o.strict, "treat uncheckable positions as failures");

  auto* diff = app.add_subcommand("diff", "k-th forward difference");
  add_common(diff, o, "csv");
  diff->add_option("--input", o.input, "read a sequence document instead of --family");
  diff->add_option("--order", o.order, "difference order k");

  auto* closed = app.add_subcommand("closed-form", "compare generated values with closed forms");
  add_common(closed, o, "csv");

  auto* enumerate = app.add_subcommand("enumerate", "list periodic tau configurations");
  add_common(enumerate, o, "csv");
  enumerate->add_flag("--canonical", o.canonical, "one representative per rotation class");

  auto* approx = app.add_subcommand("approx", "growth approximation report (range = base..base+horizon)");
  add_common(approx, o, "csv");

  auto* reference = app.add_subcommand("reference", "hofstadter-q or conway terms");
  add_common(reference, o, "csv");

  auto* exp = app.add_subcommand("export", "convert a sequence document between formats");
  add_common(exp, o, "json");
  exp->add_option("--input", o.input, "CSV or JSON sequence document");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (o.format.empty()) {
    o.format = exp->parsed() ? "json" : verify->parsed() ? "table" : "csv";
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (gen->parsed()) code = run_gen(o, buffer);
    else if (verify->parsed()) code = run_verify(o, buffer);
    else if (diff->parsed()) code = run_diff(o, buffer);
    else if (closed->parsed()) code = run_closed_form(o, buffer);
    else if (enumerate->parsed()) code = run_enumerate(o, buffer);
    else if (approx->parsed()) code = run_approx(o, buffer);
    else if (reference->parsed()) code = run_reference(o, buffer);
    else if (exp->parsed()) code = run_export(o, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "usage error: --output: cannot write '" << o.output << "'\n";
      return 2;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace ultraseq::cli
