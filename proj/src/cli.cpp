#include "orbispec/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "orbispec/errors.hpp"
#include "orbispec/lambda_power.hpp"
#include "orbispec/macdonald.hpp"

namespace orbispec {

std::size_t max_truncation_order() {
  const char* env = std::getenv(kMaxOrderEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  std::string_view text(env);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw InputError(std::string(kMaxOrderEnv) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string without_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::string option_or(const JobDecl& job, const std::string& key, const std::string& fallback) {
  const std::string* v = job.option(key);
  return v ? *v : fallback;
}

std::size_t size_option(const JobDecl& job, const std::string& key, std::size_t fallback) {
  const std::string* v = job.option(key);
  if (!v) return fallback;
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw InputError("option " + key + " expects a non-negative integer, got '" + *v + "'");
  }
  return out;
}

std::size_t truncation_option(const JobDecl& job, const std::string& key, std::size_t fallback) {
  const std::size_t n = size_option(job, key, fallback);
  if (n == 0) throw InputError("option " + key + " must be >= 1");
  const std::size_t cap = max_truncation_order();
  if (n > cap) {
    throw InputError("option " + key + "=" + std::to_string(n) + " exceeds " + kMaxOrderEnv + "=" +
                     std::to_string(cap));
  }
  return n;
}

bool bool_option(const JobDecl& job, const std::string& key) {
  const std::string v = option_or(job, key, "no");
  if (v == "yes" || v == "true" || v == "1") return true;
  if (v == "no" || v == "false" || v == "0") return false;
  throw InputError("option " + key + " expects yes|no, got '" + v + "'");
}

PowerMode mode_option(const JobDecl& job) {
  try {
    return parse_power_mode(option_or(job, "mode", "substitution"));
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
}

const Workspace& need_workspace(const Workspace* ws, const std::string& command) {
  if (ws == nullptr) throw InputError(command + " needs a workspace file");
  return *ws;
}

// ---- spectrum ---------------------------------------------------------------

JobOutput run_spectrum(const Workspace& ws, const JobDecl& job, OutputFormat format) {
  const std::size_t k = size_option(job, "order", 1);
  const std::string kind = option_or(job, "kind", "hsp");
  static const char* kinds[] = {"hsp", "pair", "triple", "ehd", "poincare"};
  if (std::find(std::begin(kinds), std::end(kinds), kind) == std::end(kinds)) {
    throw InputError("unknown spectrum kind '" + kind + "' (hsp|pair|triple|ehd|poincare)");
  }

  std::string target = option_or(job, "target", "");
  if (target.empty()) {
    if (!ws.node_decls().empty()) {
      target = ws.node_decls().front().name;
    } else if (!ws.explicit_decls().empty()) {
      target = ws.explicit_decls().front().name;
    } else if (!ws.brieskorn_decls().empty()) {
      target = ws.brieskorn_decls().front().name;
    } else {
      throw InputError("workspace has no node or explicit set to evaluate");
    }
  }

  std::shared_ptr<const TripleModel> model;
  std::size_t node = 0;
  if (const ExplicitGSet* x = ws.explicit_set(target)) {
    model = std::make_shared<TripleModel>(node_from_explicit(*x, k, target));
  } else if (auto n = ws.node(target)) {
    model = ws.model();
    node = *n;
  } else {
    throw InputError("unknown spectrum target '" + target + "'");
  }

  GroupRingElement value;
  if (kind == "hsp" || kind == "poincare") {
    value = model->hsp_k(node, k);
  } else if (kind == "pair") {
    value = model->hsp2_k(node, k);
  } else if (kind == "triple") {
    value = model->hsp3_k(node, k);
  } else {
    value = model->e_k(node, k);
  }

  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "exponent,multiplicity\n";
    for (const auto& [a, c] : value.terms()) out << csv_field(a.str()) << ',' << c.get_str() << '\n';
  } else {
    out << "# spectrum target=" << target << " order=" << k << " kind=" << kind << '\n';
    out << (kind == "poincare" ? hsp_to_poincare(value) : value.str()) << '\n';
  }
  return {out.str(), kExitOk, {}};
}

// ---- verify -------------------------------------------------------------------

int reports_exit(const std::vector<ComparisonReport>& reports) {
  bool mismatch = false;
  bool unsupported = false;
  for (const auto& r : reports) {
    mismatch = mismatch || r.verdict == Verdict::Mismatch;
    unsupported = unsupported || r.verdict == Verdict::Unsupported;
  }
  if (mismatch) return kExitMismatch;
  return unsupported ? kExitUnsupported : kExitOk;
}

std::string reports_csv(const std::vector<ComparisonReport>& reports) {
  std::ostringstream out;
  out << "theorem,fixture,degree,lhs,rhs,verdict\n";
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Unsupported) {
      out << csv_field(r.theorem) << ',' << csv_field(r.fixture) << ",,,,unsupported\n";
      continue;
    }
    for (const auto& row : r.rows) {
      out << csv_field(r.theorem) << ',' << csv_field(r.fixture) << ',' << row.degree << ',' << csv_field(row.lhs.str())
          << ',' << csv_field(row.rhs.str()) << ',' << (row.equal ? "equal" : "MISMATCH") << '\n';
    }
  }
  return out.str();
}

JobOutput run_verify(const Workspace& ws, const JobDecl& job, OutputFormat format) {
  const std::string theorem = option_or(job, "theorem", "all");
  if (theorem != "1" && theorem != "2" && theorem != "all") {
    throw InputError("option theorem expects 1|2|all, got '" + theorem + "'");
  }
  const std::size_t k = size_option(job, "k", 1);
  const std::size_t order = truncation_option(job, "N", 6);
  const std::size_t n_max = truncation_option(job, "n-max", 3);
  const PowerMode mode = mode_option(job);
  ShiftChoice shift;
  try {
    shift = parse_shift_choice(option_or(job, "shift", "audit"));
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  const std::string fixture = option_or(job, "fixture", option_or(job, "hodge", ""));

  std::vector<ComparisonReport> reports;
  bool selected = false;
  if (theorem != "2") {
    for (const auto& h : ws.hodge_decls()) {
      if (!fixture.empty() && h.name != fixture) continue;
      selected = true;
      reports.push_back(verify_theorem1(h.name, h.rows, order));
      reports.push_back(verify_corollary1(h.name, h.rows, order));
    }
  }
  if (theorem != "1") {
    for (const auto& f : ws.theorem2_fixtures()) {
      if (!fixture.empty() && fixture_name(f) != fixture) continue;
      selected = true;
      auto r = verify_theorem2(f, k, n_max, shift, mode);
      reports.insert(reports.end(), r.begin(), r.end());
    }
  }
  if (!selected) {
    throw InputError(fixture.empty() ? "workspace has no fixture for theorem " + theorem
                                     : "no fixture '" + fixture + "' for theorem " + theorem);
  }

  std::string text;
  if (format == OutputFormat::Csv) {
    text = reports_csv(reports);
  } else {
    for (const auto& r : reports) text += r.to_text();
  }
  return {text, reports_exit(reports), {}};
}

// ---- audit --------------------------------------------------------------------

JobOutput run_audit(const Workspace& ws, const JobDecl& job, OutputFormat format) {
  const std::size_t k = size_option(job, "k", 1);
  const std::string fixture = option_or(job, "fixture", "");
  std::vector<AuditResult> results;
  for (const auto& f : ws.theorem2_fixtures()) {
    if (!fixture.empty() && fixture_name(f) != fixture) continue;
    results.push_back(normalization_audit(f, k));
  }
  if (results.empty()) {
    throw InputError(fixture.empty() ? "workspace has no fixture to audit" : "no fixture '" + fixture + "' to audit");
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "fixture,k,d,lhs,literal,shifted,winner\n";
    for (const auto& a : results) {
      out << csv_field(a.fixture) << ',' << a.k << ',' << a.dim.str() << ',';
      if (a.supported) {
        out << csv_field(a.lhs.str()) << ',' << csv_field(a.rhs_literal.str()) << ',' << csv_field(a.rhs_shifted.str())
            << ',' << a.winner() << '\n';
      } else {
        out << ",,,unsupported\n";
      }
    }
  } else {
    for (const auto& a : results) out << a.to_text();
  }
  return {out.str(), kExitOk, {}};
}

// ---- expand -------------------------------------------------------------------

JobOutput run_expand(const JobDecl& job, OutputFormat format) {
  const std::string* expr = job.option("expr");
  if (!expr) throw InputError("expand needs an expression");
  Signature sig;
  try {
    sig = Signature::parse(option_or(job, "signature", "c"));
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  const std::size_t order = truncation_option(job, "N", 6);
  const PowerMode mode = mode_option(job);
  const bool formula = bool_option(job, "formula");

  ExpandRequest req = parse_expand_expression(*expr, sig, order, option_or(job, "series", ""));
  TruncatedSeries result;
  try {
    result = formula ? power_direct_formula(req.base, req.exponent) : power_expand(req.base, req.exponent, mode);
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "degree,coefficient\n";
    out << "0," << csv_field(GroupRingElement::unit(sig).str()) << '\n';
    for (std::size_t n = 1; n <= result.order(); ++n) {
      if (!result.coeff(n).is_zero()) out << n << ',' << csv_field(result.coeff(n).str()) << '\n';
    }
  } else {
    out << result.str() << '\n';
  }
  return {out.str(), kExitOk, {}};
}

std::size_t top_level_caret(std::string_view s) {
  int depth = 0;
  std::size_t pos = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw InputError("unbalanced brackets in expression");
    if (c == '^' && depth == 0) pos = i;
  }
  if (depth != 0) throw InputError("unbalanced brackets in expression");
  return pos;
}

TruncatedSeries parse_series_text(std::string_view text, const Signature& sig, std::size_t order) {
  try {
    return TruncatedSeries::parse(trim(text), sig, order);
  } catch (const std::invalid_argument& err) {
    throw InputError(std::string("bad series: ") + err.what());
  }
}

}  // namespace

ExpandRequest parse_expand_expression(std::string_view expr_in, const Signature& sig, std::size_t order,
                                      std::string_view series_text) {
  const std::string expr = trim(expr_in);
  const std::size_t caret = top_level_caret(expr);
  if (caret == std::string_view::npos) throw InputError("expression needs the form <series>^<exponent>");
  const std::string base_text = trim(std::string_view(expr).substr(0, caret));
  std::string exp_text = trim(std::string_view(expr).substr(caret + 1));

  ExpandRequest req;
  const std::string compact = without_spaces(base_text);
  if (compact == "(1-T)" || compact == "(1+T)") {
    req.base = TruncatedSeries(sig, order);
    req.base.set_coeff(1, GroupRingElement::monomial(sig, sig.zero(), compact == "(1-T)" ? -1 : 1));
  } else if (compact == "A") {
    if (series_text.empty()) {
      req.base = TruncatedSeries(sig, order);
      for (std::size_t n = 1; n <= order; ++n) req.base.set_coeff(n, GroupRingElement::unit(sig));
    } else {
      req.base = parse_series_text(series_text, sig, order);
    }
  } else if (base_text.size() >= 2 && base_text.front() == '(' && base_text.back() == ')') {
    req.base = parse_series_text(std::string_view(base_text).substr(1, base_text.size() - 2), sig, order);
  } else {
    throw InputError("unknown series '" + base_text + "' (use (1-T), (1+T), A or (<series text>))");
  }

  bool negate = false;
  if (!exp_text.empty() && exp_text.front() == '-' && exp_text.size() > 1 &&
      (exp_text[1] == '{' || exp_text[1] == '[')) {
    negate = true;
    exp_text = trim(std::string_view(exp_text).substr(1));
  }
  try {
    if (exp_text.empty()) throw InputError("missing exponent");
    if (exp_text.front() == '{' && exp_text.back() == '}') {
      std::vector<Rational> coords;
      std::string inner = without_spaces(std::string_view(exp_text).substr(1, exp_text.size() - 2));
      std::size_t start = 0;
      while (true) {
        std::size_t comma = inner.find(',', start);
        coords.push_back(Rational::parse(std::string_view(inner).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      req.exponent = GroupRingElement::monomial(sig, coords);
    } else if (exp_text.front() == '[' && exp_text.back() == ']') {
      req.exponent = GroupRingElement::parse(trim(std::string_view(exp_text).substr(1, exp_text.size() - 2)), sig);
    } else {
      std::int64_t n = 0;
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), n);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
        throw InputError("bad exponent '" + exp_text + "' (use n, {label}, -{label}, [element] or -[element])");
      }
      req.exponent = mpz_class(static_cast<long>(n)) * GroupRingElement::unit(sig);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    throw InputError(std::string("bad exponent: ") + err.what());
  }
  if (negate) req.exponent = -req.exponent;
  return req;
}

JobOutput execute_job(const Workspace* ws, const JobDecl& job, OutputFormat format) {
  try {
    if (job.command == "spectrum") return run_spectrum(need_workspace(ws, "spectrum"), job, format);
    if (job.command == "verify") return run_verify(need_workspace(ws, "verify"), job, format);
    if (job.command == "audit") return run_audit(need_workspace(ws, "audit"), job, format);
    if (job.command == "expand") return run_expand(job, format);
    throw InputError("unknown command '" + job.command + "'");
  } catch (const DepthError& err) {
    return {{}, kExitUnsupported, err.what()};
  } catch (const UnsupportedError& err) {
    return {{}, kExitUnsupported, err.what()};
  } catch (const std::length_error& err) {
    return {{}, kExitUnsupported, err.what()};
  } catch (const InputError& err) {
    return {{}, kExitInput, err.what()};
  } catch (const std::invalid_argument& err) {
    return {{}, kExitInput, err.what()};
  } catch (const std::overflow_error& err) {
    return {{}, kExitUnsupported, err.what()};
  }
}

namespace {

int combine_exit(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case kExitInput:
        return 3;
      case kExitMismatch:
        return 2;
      case kExitUnsupported:
        return 1;
      default:
        return 0;
    }
  };
  return rank(b) > rank(a) ? b : a;
}

OutputFormat parse_format(const std::string& s) {
  return s == "csv" ? OutputFormat::Csv : OutputFormat::Text;
}

std::string job_header(std::size_t index, const JobDecl& job) {
  std::string out = "## job " + std::to_string(index + 1) + ": " + job.command;
  for (const auto& [k, v] : job.options) out += ' ' + k + '=' + v;
  return out + '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold spectra, power structures and Macdonald-type identities"};
  app.name("orbispec");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  const std::vector<std::string> formats{"text", "csv"};

  std::string file;
  std::string format;
  JobDecl job;
  std::map<std::string, std::string> flags;
  auto add = [&](CLI::App* sub, const std::string& name, const std::string& key, const std::string& def,
                 const std::string& help) {
    flags[key] = def;
    return sub->add_option(name, flags[key], help)->capture_default_str();
  };

  auto* spectrum = app.add_subcommand("spectrum", "Order-k spectra of a node or explicit set");
  spectrum->add_option("file", file, "Workspace file")->required();
  spectrum->add_option("--target", flags["target"], "Node or explicit set (default: first node, else first set)");
  add(spectrum, "--order,-k", "order", "1", "Recursion order k");
  add(spectrum, "--kind", "kind", "hsp", "hsp|pair|triple|ehd|poincare")
      ->check(CLI::IsMember({"hsp", "pair", "triple", "ehd", "poincare"}));
  std::string spectrum_format = "csv";
  spectrum->add_option("--format", spectrum_format, "csv|text")->capture_default_str()->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Compare both sides of the symmetric-power identities");
  verify->add_option("file", file, "Workspace file")->required();
  add(verify, "--theorem", "theorem", "all", "1|2|all")->check(CLI::IsMember({"1", "2", "all"}));
  verify->add_option("--fixture", flags["fixture"], "Restrict to one fixture (default: all)");
  add(verify, "--k", "k", "1", "Recursion order k for theorem 2");
  add(verify, "--N", "N", "6", "Truncation order for theorem 1");
  add(verify, "--n-max", "n-max", "3", "Largest wreath degree for theorem 2");
  add(verify, "--shift", "shift", "audit", "Exponent shift: literal|shifted|audit")
      ->check(CLI::IsMember({"literal", "shifted", "audit"}));
  add(verify, "--mode", "mode", "substitution", "Power structure: substitution|geometric")
      ->check(CLI::IsMember({"substitution", "geometric"}));
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text|csv")->capture_default_str()->check(CLI::IsMember(formats));

  auto* expand = app.add_subcommand("expand", "Expand a power A(T)^m as a truncated series");
  std::string expr;
  expand->add_option("expr", expr, "e.g. \"(1-T)^-{1/2}\", \"(1+T)^{1/2}\", \"A^0\"")->required();
  expand->add_option("--series", flags["series"], "Series text for A (default: 1 + T + T^2 + ...)");
  add(expand, "--signature", "signature", "c", "Grading group, e.g. c or c,q");
  add(expand, "--N", "N", "6", "Truncation order");
  add(expand, "--mode", "mode", "substitution", "Power structure: substitution|geometric")
      ->check(CLI::IsMember({"substitution", "geometric"}));
  bool use_formula = false;
  expand->add_flag("--formula", use_formula, "Use the explicit combinatorial formula (effective inputs only)");
  std::string expand_format = "text";
  expand->add_option("--format", expand_format, "text|csv")->capture_default_str()->check(CLI::IsMember(formats));

  auto* audit = app.add_subcommand("audit", "Check both exponent-shift conventions against the n = 1 term");
  audit->add_option("file", file, "Workspace file")->required();
  audit->add_option("--fixture", flags["fixture"], "Restrict to one fixture (default: all)");
  add(audit, "--k", "k", "1", "Recursion order k");
  std::string audit_format = "text";
  audit->add_option("--format", audit_format, "text|csv")->capture_default_str()->check(CLI::IsMember(formats));

  auto* run = app.add_subcommand("run", "Run every job declared in a workspace file");
  run->add_option("file", file, "Workspace file")->required();
  std::string run_format = "text";
  run->add_option("--format", run_format, "text|csv")->capture_default_str()->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  auto collect = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) {
      const std::string& v = flags[k];
      if (!v.empty()) job.options.emplace_back(k, v);
    }
  };

  std::optional<Workspace> ws;
  auto load = [&]() -> bool {
    try {
      ws = Workspace::load(file);
      return true;
    } catch (const InputError& e) {
      err << "error: " << file << ": " << e.what() << '\n';
      return false;
    }
  };

  OutputFormat fmt = OutputFormat::Text;
  if (spectrum->parsed()) {
    job.command = "spectrum";
    collect({"target", "order", "kind"});
    fmt = parse_format(spectrum_format);
  } else if (verify->parsed()) {
    job.command = "verify";
    collect({"theorem", "fixture", "k", "N", "n-max", "shift", "mode"});
    fmt = parse_format(verify_format);
  } else if (expand->parsed()) {
    job.command = "expand";
    job.options.emplace_back("expr", expr);
    collect({"series", "signature", "N", "mode"});
    if (use_formula) job.options.emplace_back("formula", "yes");
    fmt = parse_format(expand_format);
  } else if (audit->parsed()) {
    job.command = "audit";
    collect({"fixture", "k"});
    fmt = parse_format(audit_format);
  } else if (run->parsed()) {
    if (!load()) return kExitInput;
    const auto& jobs = ws->jobs();
    if (jobs.empty()) {
      err << "error: " << file << ": no jobs declared\n";
      return kExitInput;
    }
    std::vector<JobOutput> results(jobs.size());
    const auto count = static_cast<std::int64_t>(jobs.size());
    const OutputFormat f = parse_format(run_format);
#pragma omp parallel for schedule(dynamic) if (count > 1)
    for (std::int64_t j = 0; j < count; ++j) results[j] = execute_job(&*ws, jobs[j], f);
    int code = kExitOk;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      out << job_header(j, jobs[j]) << results[j].text;
      if (!results[j].error.empty()) err << "error: job " << j + 1 << ": " << results[j].error << '\n';
      code = combine_exit(code, results[j].exit_code);
    }
    return code;
  }

  if (job.command != "expand" && !load()) return kExitInput;
  JobOutput result = execute_job(ws ? &*ws : nullptr, job, fmt);
  out << result.text;
  if (!result.error.empty()) err << "error: " << result.error << '\n';
  return result.exit_code;
}

}  // namespace orbispec
