#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "matdecomp/acceptance.hpp"
#include "matdecomp/canonical.hpp"
#include "matdecomp/error.hpp"
#include "matdecomp/ffsearch.hpp"
#include "matdecomp/fingerprint.hpp"
#include "matdecomp/io.hpp"
#include "matdecomp/rota.hpp"

using namespace matdecomp;
using io::json;

namespace {

constexpr int kValidation = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string output;
  std::string field = "Q";
  std::string input;
  std::string label;
  bool as_json = false;
  bool no_extend = false;
  bool all = false;
  std::string weight = "1";
  std::uint64_t seed = 0;
  int dims = 0;
  std::int64_t p = 0;
  std::string m;
  std::uint64_t samples = 0;
  std::uint64_t budget = SearchOptions{}.budget;
  unsigned threads = 0;
  std::vector<int> criteria;
};

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "QQ") return Field::rational();
  std::string digits = s;
  if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits.erase(0, 1);
  if (!digits.empty() && digits[0] == '_') digits.erase(0, 1);
  try {
    std::size_t used = 0;
    const long p = std::stol(digits, &used);
    if (used == digits.size()) return Field::prime(p);
  } catch (const std::logic_error&) {
  }
  throw UsageError("field must be Q or F<p>, got '" + s + "'");
}

CanonLabel parse_label_arg(const std::string& s) {
  if (auto l = parse_label(s)) return *l;
  throw UsageError("unknown label '" + s + "'");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

std::string render(const Mat3& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int k = 0; k < 3; ++k) s += (k ? " " : "") + m(i, k).to_string();
  }
  return s + "]";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void emit(const json& j) { stream() << j.dump(2) << '\n'; }

 private:
  std::ofstream file_;
};

int cmd_catalog(const CommandConfig& c) {
  const Field f = parse_field(c.field);
  Output out(c.output);
  std::vector<CanonLabel> labels;
  if (c.label.empty())
    labels.assign(kAllLabels.begin(), kAllLabels.end());
  else
    labels.push_back(parse_label_arg(c.label));
  if (c.as_json) {
    if (labels.size() == 1) {
      out.emit(io::to_json(catalog_entry(labels[0], f)));
    } else {
      json all = json::array();
      for (auto l : labels) all.push_back(io::to_json(catalog_entry(l, f)));
      out.emit({{"schema", io::kSchema}, {"entries", all}});
    }
    return 0;
  }
  for (auto l : labels) {
    const auto d = catalog_entry(l, f);
    out.stream() << to_string(l) << "  M = " << to_string(standard_m_of(l)) << "  S = span{";
    const auto& b = d.S().basis();
    for (std::size_t i = 0; i < b.size(); ++i) out.stream() << (i ? ", " : "") << render(b[i]);
    out.stream() << "}\n";
  }
  return 0;
}

int cmd_verify(const CommandConfig& c) {
  const json j = read_json(c.input);
  Output out(c.output);
  json report;
  bool ok = false;
  try {
    auto [s, m] = io::halves_from_json(j);
    const auto check = check_decomposition(s, m);
    report = io::to_json(check);
    report["closed"] = true;
    ok = check.ok();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotClosed) throw;
    report = {{"closed", false}, {"ok", false}, {"failures", {"NotClosed"}}, {"message", e.what()}};
  }
  report["schema"] = io::kSchema;
  out.emit(report);
  if (!ok) {
    std::string names;
    for (const auto& n : report["failures"]) names += (names.empty() ? "" : " ") + n.get<std::string>();
    std::cerr << "invalid decomposition: " << names << '\n';
  }
  return ok ? 0 : kValidation;
}

int cmd_canonicalize(const CommandConfig& c) {
  const auto d = io::decomposition_from_json(read_json(c.input));
  CanonOptions opts;
  opts.allow_extension = !c.no_extend;
  Output(c.output).emit(io::to_json(canonicalize(d, opts)));
  return 0;
}

int cmd_scramble(const CommandConfig& c) {
  const auto sc = scramble(parse_label_arg(c.label), c.seed, parse_field(c.field));
  json j = io::to_json(sc.decomposition);
  j.erase("label");
  Output(c.output).emit(j);
  return 0;
}

int cmd_fingerprint(const CommandConfig& c) {
  if (c.input.empty() == c.label.empty()) throw UsageError("give exactly one of <file> or --label");
  const Subalgebra s = c.label.empty() ? io::decomposition_from_json(read_json(c.input)).S()
                                       : catalog_entry(parse_label_arg(c.label), parse_field(c.field)).S();
  json j = io::to_json(fingerprint(s));
  j["schema"] = io::kSchema;
  Output(c.output).emit(j);
  return 0;
}

int cmd_separate(const CommandConfig& c) {
  const auto report = separate_catalog(false);
  Output out(c.output);
  if (c.as_json)
    out.emit(io::to_json(report));
  else
    out.stream() << render_table(report);
  return report.ok() ? 0 : kValidation;
}

int cmd_rb(const CommandConfig& c) {
  const Field f = parse_field(c.field);
  const FieldValue w = f.parse(c.weight);
  std::vector<CanonLabel> labels;
  if (c.all)
    labels.assign(kAllLabels.begin(), kAllLabels.end());
  else if (!c.label.empty())
    labels.push_back(parse_label_arg(c.label));
  else
    throw UsageError("give --label or --all");
  json ops = json::array();
  bool all_ok = true;
  for (auto l : labels) {
    const auto r = rb_from_splitting(catalog_entry(l, f), w);
    json j = io::to_json(r);
    const bool ok = verify_rb(r) && verify_rb(complementary_rb(r));
    j["verified"] = ok;
    all_ok = all_ok && ok;
    ops.push_back(j);
  }
  Output(c.output).emit(labels.size() == 1 ? ops[0] : json{{"schema", io::kSchema}, {"operators", ops}});
  if (!all_ok) fail(ErrorCode::Internal, "Rota-Baxter identity failed");
  return 0;
}

int cmd_search(const CommandConfig& c) {
  std::vector<StandardM> ms;
  if (c.dims == 63) {
    if (!c.m.empty() && c.m != "M6") throw UsageError("--dims 63 pairs only with M6");
    ms.push_back(StandardM::M6);
  } else if (c.dims == 54) {
    if (c.m.empty()) {
      ms = {StandardM::M5a, StandardM::M5b};
    } else {
      auto m = parse_standard_m(c.m);
      if (!m || *m == StandardM::M6) throw UsageError("--m must be M5a or M5b");
      ms.push_back(*m);
    }
  } else {
    throw UsageError("--dims must be 63 or 54");
  }
  json reports = json::array();
  bool ok = true;
  for (auto m : ms) {
    SearchReport r = c.samples ? sample_search(c.p, m, c.samples, c.seed)
                               : search(c.p, m, SearchOptions{c.budget, c.threads});
    ok = ok && r.ok();
    reports.push_back(io::to_json(r));
  }
  Output(c.output).emit(reports.size() == 1 ? reports[0] : json{{"schema", io::kSchema}, {"reports", reports}});
  if (!ok) fail(ErrorCode::Internal, "search reported classification failures");
  return 0;
}

int cmd_selftest(const CommandConfig& c) {
  Output out(c.output);
  return acceptance::run_all(out.stream(), c.criteria) ? 0 : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonunital direct decompositions of 3x3 matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  CommandConfig c;
  app.add_option("-o,--output", c.output, "Write the result here instead of stdout");

  auto* catalog_cmd = app.add_subcommand("catalog", "Print the canonical decompositions");
  catalog_cmd->add_option("--label", c.label);
  catalog_cmd->add_flag("--json", c.as_json);
  catalog_cmd->add_option("--field", c.field, "Q or F<p>");

  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition file");
  verify_cmd->add_option("file", c.input)->required();

  auto* canon_cmd = app.add_subcommand("canonicalize", "Reduce a decomposition to its canonical form");
  canon_cmd->add_option("file", c.input)->required();
  canon_cmd->add_flag("--no-extend", c.no_extend, "Fail instead of adjoining a square root");

  auto* scramble_cmd = app.add_subcommand("scramble", "Apply a random M-preserving transform to a catalog entry");
  scramble_cmd->add_option("--label", c.label)->required();
  scramble_cmd->add_option("--seed", c.seed)->required();
  scramble_cmd->add_option("--field", c.field, "Q or F<p>");

  auto* fp_cmd = app.add_subcommand("fingerprint", "Orbit invariants of S");
  fp_cmd->add_option("file", c.input);
  fp_cmd->add_option("--label", c.label);
  fp_cmd->add_option("--field", c.field, "Q or F<p>");

  auto* sep_cmd = app.add_subcommand("separate", "Fingerprint table for the catalog");
  sep_cmd->add_flag("--json", c.as_json);

  auto* rb_cmd = app.add_subcommand("rb", "Rota-Baxter operators of the catalog splittings");
  rb_cmd->add_option("--label", c.label);
  rb_cmd->add_option("--weight", c.weight)->required();
  rb_cmd->add_flag("--all", c.all);
  rb_cmd->add_option("--field", c.field, "Q or F<p>");

  auto* search_cmd = app.add_subcommand("search", "Enumerate complements over F_p");
  search_cmd->add_option("--dims", c.dims)->required();
  search_cmd->add_option("--p", c.p)->required();
  search_cmd->add_option("--m", c.m);
  search_cmd->add_option("--samples", c.samples);
  search_cmd->add_option("--seed", c.seed);
  search_cmd->add_option("--budget", c.budget);
  search_cmd->add_option("--threads", c.threads);

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  self_cmd->add_option("--criterion", c.criteria, "Run only these (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(c);
    if (*verify_cmd) return cmd_verify(c);
    if (*canon_cmd) return cmd_canonicalize(c);
    if (*scramble_cmd) return cmd_scramble(c);
    if (*fp_cmd) return cmd_fingerprint(c);
    if (*sep_cmd) return cmd_separate(c);
    if (*rb_cmd) return cmd_rb(c);
    if (*search_cmd) return cmd_search(c);
    if (*self_cmd) return cmd_selftest(c);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return is_internal(e.code()) ? kInternal : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
