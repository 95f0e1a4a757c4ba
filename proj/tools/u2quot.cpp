// Command-line front end. Talks to the library through the C interface only.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "u2quot/u2quot.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::string> family;
  std::optional<std::int64_t> m, n, q, p;
  std::optional<double> tolerance;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> config;
  std::optional<std::string> eta;
  std::string graph = "resolution";
  // verify only
  std::optional<std::string> families;
  std::optional<std::int64_t> m_max, n_max, p_max, hj_max;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw UsageError(key + " must be an integer, got '" + v + "'");
}

// Keys the CLI consumes itself; everything else in a config file belongs to the sweep.
bool apply_spec_key(Options& o, const std::string& key, const std::string& value) {
  if (key == "family") o.family = value;
  else if (key == "m") o.m = to_int(key, value);
  else if (key == "n") o.n = to_int(key, value);
  else if (key == "q") o.q = to_int(key, value);
  else if (key == "p") o.p = to_int(key, value);
  else if (key == "format") o.format = value;
  else if (key == "eta") o.eta = value;
  else if (key == "graph") o.graph = value;
  else return false;
  return true;
}

// Splits a config file into CLI keys (merged into `file`) and sweep lines.
std::string split_config(const std::string& text, Options& file) {
  std::stringstream in(text);
  std::string line, sweep;
  while (std::getline(in, line)) {
    std::string body = line.substr(0, line.find('#'));
    auto eq = body.find('=');
    if (eq != std::string::npos) {
      std::string key = trim(body.substr(0, eq)), value = trim(body.substr(eq + 1));
      if (key == "tolerance") {
        try {
          file.tolerance = std::stod(value);
        } catch (const std::exception&) {
          throw UsageError("tolerance must be a number, got '" + value + "'");
        }
      } else if (key == "out") {
        file.out = value;
      }
      if (apply_spec_key(file, key, value)) continue;
    }
    sweep += line + "\n";
  }
  return sweep;
}

template <class T>
void override_with(std::optional<T>& base, const std::optional<T>& flag) {
  if (flag) base = flag;
}

Options merge(Options file, const Options& flags) {
  override_with(file.family, flags.family);
  override_with(file.m, flags.m);
  override_with(file.n, flags.n);
  override_with(file.q, flags.q);
  override_with(file.p, flags.p);
  override_with(file.tolerance, flags.tolerance);
  override_with(file.format, flags.format);
  override_with(file.out, flags.out);
  override_with(file.eta, flags.eta);
  override_with(file.families, flags.families);
  override_with(file.m_max, flags.m_max);
  override_with(file.n_max, flags.n_max);
  override_with(file.p_max, flags.p_max);
  override_with(file.hj_max, flags.hj_max);
  if (flags.graph != "resolution") file.graph = flags.graph;
  return file;
}

[[noreturn]] void library_failure(u2q_status s) {
  std::string msg = *u2q_last_error() ? u2q_last_error() : u2q_status_name(s);
  if (s == U2Q_CONFIG_ERROR || s == U2Q_INVALID_PARAMETERS || s == U2Q_NOT_COPRIME) throw UsageError(msg);
  throw std::runtime_error(msg);
}

void check(u2q_status s) {
  if (s != U2Q_OK) library_failure(s);
}

struct SpecDeleter {
  void operator()(u2q_spec* s) const { u2q_spec_free(s); }
};
struct ReportDeleter {
  void operator()(u2q_report* r) const { u2q_report_free(r); }
};
struct SummaryDeleter {
  void operator()(u2q_summary* s) const { u2q_summary_free(s); }
};
using SpecPtr = std::unique_ptr<u2q_spec, SpecDeleter>;
using ReportPtr = std::unique_ptr<u2q_report, ReportDeleter>;
using SummaryPtr = std::unique_ptr<u2q_summary, SummaryDeleter>;

std::pair<std::int64_t, std::int64_t> parse_eta(const std::string& text) {
  auto slash = text.find('/');
  std::int64_t num = to_int("eta", trim(text.substr(0, slash)));
  std::int64_t den = slash == std::string::npos ? 1 : to_int("eta", trim(text.substr(slash + 1)));
  if (den == 0) throw UsageError("eta has zero denominator");
  return {num, den};
}

SpecPtr make_spec(const Options& o) {
  if (!o.family) throw UsageError("--family is required");
  u2q_family family;
  if (u2q_parse_family(o.family->c_str(), &family) != U2Q_OK) throw UsageError("unknown family '" + *o.family + "'");
  auto need = [&](const std::optional<std::int64_t>& v, const char* name) {
    if (!v) throw UsageError(std::string("--") + name + " is required for family " + *o.family);
    return *v;
  };
  std::int64_t m = 1, n = 0, q = 0, p = 0;
  switch (family) {
    case U2Q_CYCLIC:
      q = need(o.q, "q");
      p = need(o.p, "p");
      break;
    case U2Q_DIHEDRAL:
    case U2Q_INDEX2:
      m = need(o.m, "m");
      n = need(o.n, "n");
      break;
    default:
      m = need(o.m, "m");
  }
  u2q_spec* raw = nullptr;
  check(u2q_spec_new(family, m, n, q, p, &raw));
  SpecPtr spec(raw);
  if (o.eta) {
    auto [num, den] = parse_eta(*o.eta);
    check(u2q_spec_set_eta(spec.get(), num, den));
  }
  return spec;
}

std::string stem_of(const json& report) {
  std::string id = report.at("spec").at("id").get<std::string>(), s;
  for (char c : id) {
    if (c == ':') s += '_';
    else if (c != '=') s += c;
  }
  return s;
}

void emit(const Options& o, const std::string& stem, const std::string& ext, const std::string& body) {
  if (!o.out) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::create_directories(*o.out);
  auto path = std::filesystem::path(*o.out) / (stem + "." + ext);
  std::ofstream f(path);
  if (!f) throw std::runtime_error("IoError: cannot write " + path.string());
  f << body;
  if (!body.empty() && body.back() != '\n') f << '\n';
  std::cerr << "wrote " << path.string() << "\n";
}

json select(const json& full, const std::vector<std::string>& keys) {
  json j;
  for (const auto& k : keys) j[k] = full.at(k);
  return j;
}

int run_report(const Options& o, const std::string& command) {
  SpecPtr spec = make_spec(o);
  u2q_report* raw = nullptr;
  check(u2q_describe(spec.get(), o.tolerance.value_or(1e-6), &raw));
  ReportPtr report(raw);
  const json full = json::parse(u2q_report_json(report.get()));
  const std::string stem = stem_of(full);
  const std::string format = o.format.value_or(command == "export" ? "dot" : "json");

  u2q_graph_kind kind = U2Q_GRAPH_RESOLUTION;
  if (command == "compactify" || (command == "export" && o.graph == "compactification"))
    kind = U2Q_GRAPH_COMPACTIFICATION;
  else if (command == "export" && o.graph != "resolution")
    throw UsageError("--graph must be resolution or compactification");

  if (format == "json") {
    json j = full;
    if (command == "resolve")
      j = select(full, {"spec", "order", "cyclic_type", "singularities", "b_gamma", "k_gamma", "signature",
                        "resolution", "h1_theta", "checks"});
    else if (command == "compactify")
      j = select(full, {"spec", "order", "singularities", "b_gamma", "compactification", "checks"});
    emit(o, stem, "json", j.dump(2));
  } else if (format == "text") {
    emit(o, stem, "txt", u2q_report_text(report.get()));
  } else if (format == "dot") {
    const char* dot = nullptr;
    check(u2q_report_dot(report.get(), kind, &dot));
    emit(o, stem + (kind == U2Q_GRAPH_RESOLUTION ? "_resolution" : "_compactification"), "dot", dot);
  } else {
    throw UsageError("--format must be json, text or dot");
  }
  return u2q_report_all_pass(report.get()) ? kExitPass : kExitFail;
}

int run_hj(std::int64_t q, std::int64_t p, const Options& o) {
  std::vector<std::int64_t> entries(64);
  std::size_t len = 0;
  u2q_status s = u2q_hj_string(q, p, entries.data(), entries.size(), &len);
  if (s == U2Q_BUFFER_TOO_SMALL) {
    entries.resize(len);
    s = u2q_hj_string(q, p, entries.data(), entries.size(), &len);
  }
  if (s != U2Q_OK && s != U2Q_TRIVIAL_TYPE) library_failure(s);
  entries.resize(len);
  const std::string format = o.format.value_or("json");
  if (format == "json") {
    json j = {{"q", q}, {"p", p}, {"string", entries}, {"length", len}};
    std::cout << j.dump() << "\n";
  } else if (format == "text") {
    std::cout << "L(" << q << "," << p << "): [";
    for (std::size_t i = 0; i < len; ++i) std::cout << (i ? ", " : "") << entries[i];
    std::cout << "]\n";
  } else {
    throw UsageError("hj supports --format json or text");
  }
  return kExitPass;
}

int run_verify(const Options& o, const std::string& file_sweep) {
  // later lines win, so flags go last
  std::string text = file_sweep;
  auto line = [&](const std::string& k, const std::string& v) { text += k + " = " + v + "\n"; };
  if (o.families) line("families", *o.families);
  else if (o.family) line("families", *o.family);
  if (o.m_max) line("m_max", std::to_string(*o.m_max));
  if (o.n_max) line("n_max", std::to_string(*o.n_max));
  if (o.p_max) line("p_max", std::to_string(*o.p_max));
  if (o.hj_max) line("hj_max", std::to_string(*o.hj_max));
  if (o.tolerance) {
    std::ostringstream os;
    os.precision(17);
    os << *o.tolerance;
    line("tolerance", os.str());
  }
  if (o.out) line("out", *o.out);

  u2q_summary* raw = nullptr;
  check(u2q_verify(text.c_str(), &raw));
  SummaryPtr summary(raw);
  const std::string format = o.format.value_or("text");
  if (format == "json")
    std::cout << u2q_summary_json(summary.get()) << "\n";
  else if (format == "text")
    std::cout << u2q_summary_text(summary.get());
  else
    throw UsageError("verify supports --format json or text");
  return u2q_summary_exit_code(summary.get());
}

void add_spec_options(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "cyclic|dihedral|tetrahedral|octahedral|icosahedral|index2|index3");
  app->add_option("--m", o.m, "fibre parameter m");
  app->add_option("--n", o.n, "dihedral parameter n");
  app->add_option("--q", o.q, "cyclic weight q");
  app->add_option("--p", o.p, "cyclic order p");
  app->add_option("--eta", o.eta, "eta invariant of the boundary, e.g. -3/4");
}

void add_global_options(CLI::App* app, Options& o) {
  app->add_option("--tolerance", o.tolerance, "snap tolerance for floating-point sums");
  app->add_option("--format", o.format, "json|text|dot");
  app->add_option("--out", o.out, "output directory");
  app->add_option("--config", o.config, "key = value config file; flags override it");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite subgroups of U(2) acting freely on the 3-sphere"};
  app.require_subcommand(1);
  Options flags;
  std::int64_t hj_q = 0, hj_p = 0;

  auto* describe = app.add_subcommand("describe", "full invariant report for one group");
  auto* resolve = app.add_subcommand("resolve", "singularities and minimal resolution graph");
  auto* compactify = app.add_subcommand("compactify", "compactification graph and b'");
  auto* exporter = app.add_subcommand("export", "DOT export of a graph");
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung string of L(q,p)");
  auto* verify = app.add_subcommand("verify", "sweep every identity over a parameter range");

  for (auto* sub : {describe, resolve, compactify, exporter}) {
    add_spec_options(sub, flags);
    add_global_options(sub, flags);
  }
  exporter->add_option("--graph", flags.graph, "resolution|compactification");
  hj->add_option("q", hj_q, "weight")->required();
  hj->add_option("p", hj_p, "order")->required();
  hj->add_option("--format", flags.format, "json|text");
  add_global_options(verify, flags);
  verify->add_option("--families,--family", flags.families, "comma-separated family list");
  verify->add_option("--m-max", flags.m_max);
  verify->add_option("--n-max", flags.n_max);
  verify->add_option("--p-max", flags.p_max);
  verify->add_option("--hj-max", flags.hj_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Options file;
    std::string sweep_text;
    if (flags.config) sweep_text = split_config(read_file(*flags.config), file);
    Options o = merge(file, flags);
    if (*hj) return run_hj(hj_q, hj_p, o);
    if (*verify) return run_verify(o, sweep_text);
    for (auto* sub : {describe, resolve, compactify, exporter})
      if (*sub) return run_report(o, sub->get_name());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
