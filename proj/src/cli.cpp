#include "ildtt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ildtt/checker.hpp"
#include "ildtt/generator.hpp"
#include "ildtt/interpreter.hpp"
#include "ildtt/model.hpp"
#include "ildtt/parser.hpp"
#include "ildtt/theorems.hpp"

namespace ildtt::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string command;
  std::vector<std::string> files;
  std::size_t step_limit = default_step_limit();
  bool json = false;
  std::string term;
  bool trace = false;
  std::size_t max_index = 3;
  std::size_t max_fiber = 4;
  std::uint64_t seed = 0;
  std::string fault;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json config_json(const Config& c) {
  json j{{"files", c.files}, {"step_limit", c.step_limit}};
  if (c.command == "norm" || c.command == "eval") j["term"] = c.term;
  if (c.command == "norm") j["trace"] = c.trace;
  if (c.command == "verify-model" || c.command == "theorems") {
    j["max_index"] = c.max_index;
    j["max_fiber"] = c.max_fiber;
  }
  if (c.command == "theorems") j["seed"] = c.seed;
  if (c.command == "verify-model" && !c.fault.empty()) j["fault"] = c.fault;
  return j;
}

int emit(const Config& c, const std::vector<Item>& items, std::ostream& out) {
  bool pass = std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
  if (c.json) {
    json arr = json::array();
    for (const auto& i : items) {
      json e{{"name", i.name}, {"status", i.pass ? "pass" : "fail"}, {"details", i.details}};
      if (i.witness) e["witness"] = *i.witness;
      arr.push_back(std::move(e));
    }
    out << json{{"command", c.command}, {"config", config_json(c)}, {"items", arr}}.dump(2) << "\n";
  } else {
    for (const auto& i : items) {
      out << (i.pass ? "pass  " : "FAIL  ") << i.name;
      if (!i.details.empty()) out << ": " << i.details;
      out << "\n";
      if (i.witness) out << "      witness: " << *i.witness << "\n";
    }
    std::size_t failed = std::count_if(items.begin(), items.end(), [](const Item& i) { return !i.pass; });
    out << items.size() - failed << "/" << items.size() << " passed\n";
  }
  return pass ? 0 : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string position(const std::string& text, const SourceSpan& span) {
  if (span.file.empty() && span.begin == 0 && span.end == 0) return "";
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < span.begin && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col) + ": ";
}

struct Loaded {
  std::string path;
  std::string text;
  std::optional<Module> module;
  std::optional<std::string> parse_error;
};

std::vector<Loaded> load(const Config& c) {
  if (c.files.empty()) throw UsageError("no input files");
  std::vector<Loaded> out;
  for (const auto& f : c.files) {
    Loaded l{f, read_file(f), std::nullopt, std::nullopt};
    try {
      l.module = parse_module(l.text, f);
    } catch (const ParseError& e) {
      l.parse_error = std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::string check_error(const Loaded& l, const CheckError& e) {
  return position(l.text, e.span) + error_kind_name(e.kind) + ": " + e.what();
}

std::vector<Item> run_check(const Config& c) {
  std::vector<Item> items;
  for (const auto& l : load(c)) {
    if (l.parse_error) {
      items.push_back({l.path, false, "parse error at " + *l.parse_error, std::nullopt});
      continue;
    }
    Checker checker(l.module->sig, {c.step_limit, false});
    try {
      checker.check_signature();
    } catch (const CheckError& e) {
      items.push_back({l.path + ":signature", false, check_error(l, e), std::nullopt});
      continue;
    }
    for (const auto& d : l.module->defs) {
      Item it{l.path + ":" + d.name, true, "", std::nullopt};
      try {
        auto j = checker.check_definition(d);
        it.details = to_string(j.type);
      } catch (const CheckError& e) {
        it.pass = false;
        it.details = check_error(l, e);
        if (!e.variable.empty()) it.witness = e.variable;
      } catch (const StepLimitExceeded& e) {
        it.pass = false;
        it.details = e.what();
      }
      items.push_back(std::move(it));
    }
  }
  return items;
}

/// The named definition, checked; the last file defining it wins.
struct Found {
  const Loaded* file;
  const Definition* def;
};

Found find(const std::vector<Loaded>& files, const std::string& name) {
  Found f{nullptr, nullptr};
  for (const auto& l : files) {
    if (l.parse_error) throw UsageError(l.path + ": parse error at " + *l.parse_error);
    if (const auto* d = l.module->find_def(name)) f = {&l, d};
  }
  if (!f.def) throw UsageError("no definition named " + name);
  return f;
}

std::string path_string(const std::vector<std::size_t>& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "," : "") + std::to_string(path[i]);
  return s + "]";
}

std::vector<Item> run_norm(const Config& c) {
  auto files = load(c);
  auto [file, def] = find(files, c.term);
  EqualityConfig eq{c.step_limit, c.trace};
  Checker checker(file->module->sig, eq);
  std::vector<Item> items;
  try {
    auto j = checker.check_definition(*def);
    auto nf = normalize(j.term, eq);
    if (c.trace) {
      for (std::size_t i = 0; i < nf.trace.size(); ++i) {
        const auto& s = nf.trace[i];
        items.push_back({"step " + std::to_string(i + 1) + " " + s.rule + " at " + path_string(s.path), true,
                         to_string(s.before) + "  ~>  " + to_string(s.after), std::nullopt});
      }
    }
    items.push_back({c.term, true, to_string(nf.term) + " : " + to_string(j.type), std::nullopt});
  } catch (const CheckError& e) {
    items.push_back({c.term, false, check_error(*file, e), std::nullopt});
  } catch (const StepLimitExceeded& e) {
    items.push_back({c.term, false, e.what(), std::nullopt});
  }
  return items;
}

// Fibers with more points than this are described, not listed.
constexpr std::size_t kListLimit = 256;

/// Largest bound fiber of the signature's model.
std::size_t widest_fiber(const Signature& sig) {
  std::size_t n = 2;
  for (const auto& m : sig.models)
    if (m.is_type)
      for (const auto& e : m.entries) n = std::max(n, e.set.labels.size());
  return n;
}

std::vector<Item> run_eval(const Config& c) {
  auto files = load(c);
  auto [file, def] = find(files, c.term);
  const auto& sig = file->module->sig;
  Checker checker(sig, {c.step_limit, false});
  sem::ModelOptions opts;
  opts.allow_random = false;
  sem::Interpreter in(sig, opts);
  std::vector<Item> items;
  try {
    auto j = checker.check_definition(*def);
    sem::Env env;
    auto v = in.eval(j.term, env);
    std::size_t n = widest_fiber(sig);
    auto listed = [&](const TypePtr& a) { return gen::fiber_bound(a, n) <= kListLimit; };
    std::string fiber_details = "too large to list";
    if (listed(j.type)) {
      auto fiber = in.type_fiber(j.type, env);
      std::string labels;
      for (const auto& e : fiber.elems) labels += (labels.empty() ? "" : ", ") + in.label(e, j.type, env);
      fiber_details = std::to_string(fiber.size()) + " points {" + labels + "}";
    }
    bool table = j.type->kind == TypeKind::Lollipop && listed(j.type->lhs);
    std::vector<Item> rows;
    if (table) {
      // the full table, including inputs the sparse value leaves implicit
      for (const auto& x : in.type_fiber(j.type->lhs, env).non_base())
        rows.push_back({c.term + " " + in.label(x, j.type->lhs, env), true,
                        in.label(fam::apply(v, x), j.type->rhs, env), std::nullopt});
    }
    std::string model = in.describe_model();
    std::replace(model.begin(), model.end(), '\n', ';');
    if (!model.empty()) items.push_back({"model", true, model, std::nullopt});
    items.push_back({"fiber " + to_string(j.type), true, fiber_details, std::nullopt});
    if (table) {
      items.insert(items.end(), rows.begin(), rows.end());
    } else {
      items.push_back({c.term, true, in.label(v, j.type, env), std::nullopt});
    }
  } catch (const CheckError& e) {
    items.push_back({c.term, false, check_error(*file, e), std::nullopt});
  } catch (const sem::SemanticError& e) {
    items.push_back({c.term, false, e.what(), std::nullopt});
  }
  return items;
}

std::vector<Item> run_verify_model(const Config& c) {
  std::unique_ptr<model::ModelInstance> m;
  if (c.fault.empty()) {
    m = std::make_unique<model::ModelInstance>();
  } else {
    for (auto f : model::all_faults())
      if (c.fault == model::fault_name(f)) m = std::make_unique<model::FaultyInstance>(f);
    if (!m) throw UsageError("unknown fault " + c.fault);
  }
  std::vector<Item> items;
  for (const auto& r : model::verify_all(*m, {c.max_index, c.max_fiber})) {
    Item it{r.condition, r.pass, std::to_string(r.cases) + " cases on " + r.instance, std::nullopt};
    if (r.witness) {
      it.witness = model::to_string(*r.witness);
      if (!model::replay_witness(*m, *r.witness)) it.details += "; witness does not replay";
    }
    items.push_back(std::move(it));
  }
  return items;
}

std::vector<Item> run_theorems(const Config& c) {
  std::vector<Item> items;
  for (auto& t : thm::run_all({c.max_index, c.max_fiber}, c.seed))
    items.push_back({t.name, t.pass, t.details, t.witness});
  return items;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Checker, normalizer and model verifier for intuitionistic linear dependent type theory", "ildtt"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool files) {
    sub->add_flag("--json", c.json, "Print the report as JSON");
    sub->add_option("--step-limit", c.step_limit, "Normalization step limit (default: ILDTT_STEP_LIMIT or 10000)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
    if (files) sub->add_option("files", c.files, "Source files")->required();
  };
  auto bounds = [&](CLI::App* sub) {
    sub->add_option("--max-index", c.max_index, "Largest index set")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
    sub->add_option("--max-fiber", c.max_fiber, "Largest fiber, basepoint included")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
  };

  auto* check = app.add_subcommand("check", "Typecheck every definition");
  common(check, true);
  auto* norm = app.add_subcommand("norm", "Normalize a definition");
  common(norm, true);
  norm->add_option("--term", c.term, "Definition name")->required();
  norm->add_flag("--trace", c.trace, "Print every rewrite step");
  auto* eval = app.add_subcommand("eval", "Evaluate a definition in its bound model");
  common(eval, true);
  eval->add_option("--term", c.term, "Definition name")->required();
  auto* verify = app.add_subcommand("verify-model", "Check the model conditions by enumeration");
  common(verify, false);
  bounds(verify);
  verify->add_option("--fault", c.fault, "Break one construction of the model");
  auto* theorems = app.add_subcommand("theorems", "Run the theorem checks");
  common(theorems, false);
  bounds(theorems);
  theorems->add_option("--seed", c.seed, "Seed for randomized checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  c.command = app.get_subcommands().front()->get_name();
  try {
    std::vector<Item> items;
    if (c.command == "check") items = run_check(c);
    else if (c.command == "norm") items = run_norm(c);
    else if (c.command == "eval") items = run_eval(c);
    else if (c.command == "verify-model") items = run_verify_model(c);
    else items = run_theorems(c);
    return emit(c, items, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ildtt::cli
