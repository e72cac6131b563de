#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "mpchoice/bounds.hpp"
#include "mpchoice/certify.hpp"
#include "mpchoice/charroots.hpp"
#include "mpchoice/core.hpp"
#include "mpchoice/error.hpp"
#include "mpchoice/exact.hpp"
#include "mpchoice/json_io.hpp"

namespace mpchoice::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw Error(ErrorCode::BadArgs, std::string("cannot parse ") + what + " '" + text + "'");
  return value;
}

double parse_real(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadArgs, std::string("cannot parse ") + what + " '" + text + "'");
}

// "1024,1024" keeps exact sizes; any "log2:<x>" entry switches to magnitudes.
GraphSpec parse_sizes(const std::string& text) {
  const auto items = split(text, ',');
  bool any_log2 = false;
  for (const auto& it : items) any_log2 |= it.rfind("log2:", 0) == 0;
  if (!any_log2) {
    std::vector<std::uint64_t> sizes;
    for (const auto& it : items) sizes.push_back(parse_number<std::uint64_t>(it, "part size"));
    return make_spec(sizes);
  }
  std::vector<double> l2;
  for (const auto& it : items) {
    if (it.rfind("log2:", 0) == 0) {
      l2.push_back(parse_real(it.substr(5), "log2 size"));
    } else {
      const auto n = parse_number<std::uint64_t>(it, "part size");
      l2.push_back(n == 0 ? -1.0 : std::log2(static_cast<double>(n)));
    }
  }
  return make_spec_log2(l2);
}

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& it : split(text, ',')) out.push_back(parse_number<std::int64_t>(it, what));
  return out;
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& it : split(text, ',')) out.push_back(parse_real(it, what));
  return out;
}

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::BadArgs, "cannot open " + path);
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadArgs, std::string("invalid JSON input: ") + e.what());
  }
}

std::string csv_real(double x) {
  std::ostringstream ss;
  ss << std::setprecision(17) << x;
  return ss.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InstanceTooLarge: return kBudgetExceeded;
    case ErrorCode::NoSignChange:
    case ErrorCode::NotConverged:
    case ErrorCode::InternalInconsistency: return kInternalInconsistency;
    default: return kInvalidInput;
  }
}

struct Options {
  std::string sizes;
  double epsilon = kDefaultEpsilon;
  std::optional<double> root_epsilon;
  std::optional<int> r;
  std::optional<int> t;
  std::string l;
  std::string p;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  double tol = kDefaultRootTol;
  std::string format = "json";
  std::string table_format = "csv";
  int threads = 1;
  std::string input;
  std::string sweep;
  double k_ratio = 1.0;
  int parts = 2;
};

}  // namespace

CommandResult run(const std::vector<std::string>& argv, std::istream& in) {
  CLI::App app{"Bounds, certificates and exact oracles for the choice number of complete "
               "multipartite graphs"};
  app.name("mpchoice");
  app.require_subcommand(1);
  Options o;

  auto sizes_opt = [&](CLI::App* sub) {
    sub->add_option("--sizes", o.sizes,
                    "Comma-separated part sizes; 'log2:<x>' gives a part of size 2^x")
        ->required();
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto threads_opt = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Monte Carlo worker threads")->check(CLI::Range(1, 256));
  };

  auto* x0 = app.add_subcommand("x0", "Root of the characteristic equation");
  sizes_opt(x0);
  x0->add_option("--epsilon", o.root_epsilon, "Epsilon in (s + epsilon) x (default 0)");
  x0->add_option("--tol", o.tol, "Residual tolerance");

  auto* estimate = app.add_subcommand("estimate", "Asymptotic choice number estimate");
  sizes_opt(estimate);

  auto* upper = app.add_subcommand("upper", "Certified upper bound");
  sizes_opt(upper);
  upper->add_option("--epsilon", o.epsilon, "Epsilon for multipartite specs");

  auto* lower = app.add_subcommand("lower", "Prescribed and searched lower-bound certificates");
  sizes_opt(lower);
  lower->add_option("--r", o.r, "Largest r to try (default: ceil(estimate))");

  auto* certify = app.add_subcommand("certify", "Evaluate the lower-bound inequality at (r, t, l)");
  sizes_opt(certify);
  certify->add_option("--r", o.r)->required();
  certify->add_option("--t", o.t)->required();
  certify->add_option("--l", o.l, "Comma-separated split of t")->required();

  auto* decide = app.add_subcommand("decide", "Decide colorability of a list assignment");
  decide->add_option("--input", o.input, "List assignment JSON file (default: stdin)");

  auto* cover = app.add_subcommand("cover", "Minimum covers of each part's list hypergraph");
  cover->add_option("--input", o.input, "List assignment JSON file (default: stdin)");
  cover->add_option("--l", o.l, "Thresholds; also report the lower-witness verdict");

  auto* sample = app.add_subcommand("sample", "Sample adversarial random lists");
  sizes_opt(sample);
  sample->add_option("--r", o.r)->required();
  sample->add_option("--t", o.t)->required();
  sample->add_option("--seed", o.seed);

  auto* oracle = app.add_subcommand("oracle", "Exact choice number by exhaustive search");
  sizes_opt(oracle);
  oracle->add_option("--r", o.r, "Only decide r-choosability");

  auto* mc_split = app.add_subcommand("mc-split", "Monte Carlo of the random color split");
  sizes_opt(mc_split);
  mc_split->add_option("--r", o.r)->required();
  mc_split->add_option("--t", o.t, "Universe size (default 2r)");
  mc_split->add_option("--p", o.p, "Class probabilities (default: upper-certificate p at r)");
  mc_split->add_option("--trials", o.trials);
  mc_split->add_option("--seed", o.seed);
  threads_opt(mc_split);

  auto* mc_cover = app.add_subcommand("mc-cover", "Monte Carlo of adversarial cover failure");
  sizes_opt(mc_cover);
  mc_cover->add_option("--r", o.r)->required();
  mc_cover->add_option("--t", o.t)->required();
  mc_cover->add_option("--l", o.l)->required();
  mc_cover->add_option("--trials", o.trials);
  mc_cover->add_option("--seed", o.seed);
  threads_opt(mc_cover);

  auto* report = app.add_subcommand("report", "Estimate, upper and lower bounds together");
  sizes_opt(report);
  report->add_option("--epsilon", o.epsilon);

  auto* table = app.add_subcommand("table", "Sweep sizes and emit a CSV table");
  table->add_option("--sweep", o.sweep, "start:stop:step over log2 n_0")->required();
  table->add_option("--k", o.k_ratio, "log2 n_last = k * log2 n_0")->check(CLI::Range(1.0, 1e6));
  table->add_option("--parts", o.parts, "Number of parts")->check(CLI::Range(2, 16));
  table->add_option("--epsilon", o.epsilon);
  table->add_option("--format", o.table_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  for (auto* sub : app.get_subcommands({})) {
    if (sub != table) format_opt(sub);
  }

  CommandResult res;
  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    // --help and --version print to stdout; parse errors go to stderr.
    res.exit_code = code == 0 ? kOk : kInvalidInput;
    if (code == 0) {
      res.payload = out.str();
      res.diagnostics = err.str();
    } else {
      res.diagnostics = out.str() + err.str();
    }
    return res;
  }

  if (o.format == "csv") {
    res.exit_code = kInvalidInput;
    res.diagnostics = "csv output is only available for `table`\n";
    return res;
  }

  try {
    json out;
    if (x0->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      const RootProblem problem = RootProblem::from_spec(spec, o.root_epsilon.value_or(0.0));
      out = solve_x0(problem, o.tol);
      out["k"] = exponents(spec).k;
      out["epsilon"] = problem.epsilon;
    } else if (estimate->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      const RootResult root = solve_x0(RootProblem::from_spec(spec));
      out = json{{"estimate", estimate_choice(spec)},
                 {"x0", root.x0},
                 {"k", exponents(spec).k},
                 {"diagnostics", diagnostics(spec)},
                 {"spec", spec}};
    } else if (upper->parsed()) {
      out = upper_bound(parse_sizes(o.sizes), o.epsilon);
    } else if (lower->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      try {
        out["prescription"] = lower_prescription(spec);
        out["prescription_error"] = nullptr;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RegimeDegenerate && e.code() != ErrorCode::InstanceTooLarge)
          throw;
        out["prescription"] = nullptr;
        out["prescription_error"] = e.what();
      }
      out["certificate"] = lower_bound_search(spec, o.r);
    } else if (certify->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      const auto l = parse_ints(o.l, "l");
      out = star_lhs_log(spec, *o.r, *o.t, l);
      out["r"] = *o.r;
      out["t"] = *o.t;
      out["l"] = l;
    } else if (decide->parsed()) {
      out = decide_list_colorable(assignment_from_json(read_json(o.input, in)));
    } else if (cover->parsed()) {
      const ListAssignment a = assignment_from_json(read_json(o.input, in));
      json covers = json::array();
      for (std::size_t i = 0; i < a.parts.size(); ++i) {
        json c = min_cover(part_hypergraph(a, i));
        c["part"] = i;
        covers.push_back(std::move(c));
      }
      out["covers"] = std::move(covers);
      if (!o.l.empty()) {
        const auto l = parse_ints(o.l, "l");
        out["l"] = l;
        out["witness_verified"] = verify_lower_witness(a, l);
      }
    } else if (sample->parsed()) {
      out = sample_adversarial(parse_sizes(o.sizes), *o.r, *o.t, o.seed);
    } else if (oracle->parsed()) {
      std::vector<std::uint64_t> sizes;
      for (const auto& it : split(o.sizes, ',')) {
        if (it.rfind("log2:", 0) == 0)
          throw Error(ErrorCode::ExactSizesRequired, "oracle needs exact part sizes");
        sizes.push_back(parse_number<std::uint64_t>(it, "part size"));
      }
      if (o.r) {
        out = json{{"r", *o.r}, {"choosable", is_r_choosable(sizes, *o.r)}};
      } else {
        out = json{{"choice_number", choice_number_exact(sizes)}};
      }
    } else if (mc_split->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      const int universe = o.t.value_or(2 * *o.r);
      std::vector<double> p;
      if (o.p.empty()) {
        const UpperCertificate c = upper_certificate_for_r(spec, *o.r);
        if (!c.valid) throw Error(ErrorCode::BadArgs, "no valid split at this r; pass --p");
        p = c.p;
      } else {
        p = parse_reals(o.p, "p");
      }
      out = mc_split_bad_events(spec, *o.r, p, universe, o.trials, o.seed, o.threads);
      out["p"] = p;
      out["universe"] = universe;
    } else if (mc_cover->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      const auto l = parse_ints(o.l, "l");
      out = mc_cover_failure(spec, *o.r, *o.t, l, o.trials, o.seed, o.threads);
    } else if (report->parsed()) {
      const GraphSpec spec = parse_sizes(o.sizes);
      out = bound_report(spec, o.epsilon);
      out["spec"] = spec;
    } else if (table->parsed()) {
      const auto range = parse_reals([&] {
        std::string s = o.sweep;
        std::replace(s.begin(), s.end(), ':', ',');
        return s;
      }(), "sweep");
      if (range.size() != 3 || !(range[2] > 0.0) || range[1] < range[0])
        throw Error(ErrorCode::BadArgs, "sweep must be start:stop:step with step > 0");
      std::ostringstream csv;
      csv << "log2_n0,log2_n1,estimate,upper_r,lower_r,ratio\n";
      json rows = json::array();
      const auto steps = static_cast<long>(std::floor((range[1] - range[0]) / range[2] + 1e-9));
      for (long i = 0; i <= steps; ++i) {
        const double m = range[0] + static_cast<double>(i) * range[2];
        std::vector<double> l2(o.parts - 1, m);
        l2.push_back(o.k_ratio * m);
        const GraphSpec spec = make_spec_log2(l2);
        const BoundReport rep = bound_report(spec, o.epsilon);
        const int lower_r = rep.lower.valid ? rep.lower.prescription.r : 0;
        const double ratio = rep.ratio.value_or(0.0);
        csv << csv_real(spec.log2_size(0)) << ',' << csv_real(spec.log2_largest()) << ','
            << csv_real(rep.estimate) << ',' << rep.upper.r << ',' << lower_r << ','
            << csv_real(ratio) << '\n';
        rows.push_back(json{{"log2_n0", spec.log2_size(0)},
                            {"log2_n1", spec.log2_largest()},
                            {"estimate", rep.estimate},
                            {"upper_r", rep.upper.r},
                            {"lower_r", lower_r},
                            {"ratio", ratio}});
      }
      if (o.table_format == "csv") {
        res.payload = csv.str();
        return res;
      }
      out["rows"] = std::move(rows);
    }
    res.payload = out.dump() + "\n";
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.code());
    res.payload = json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() + "\n";
    res.diagnostics = std::string("mpchoice: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace mpchoice::cli
