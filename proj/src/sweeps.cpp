#include "ildtt/sweeps.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "ildtt/generator.hpp"
#include "ildtt/interpreter.hpp"
#include "ildtt/oracle.hpp"
#include "ildtt/parser.hpp"

namespace ildtt::sweep {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

EqualityConfig quiet() {
  EqualityConfig cfg;
  cfg.record_trace = false;
  return cfg;
}

/// η-expansion of `t : a` at the root, or null when `a` has no η rule.
TermPtr eta_expand(const TermPtr& t, const TypePtr& a, const std::set<std::string>& avoid) {
  auto u = fresh_name("eu", avoid), v = fresh_name("ev", avoid);
  switch (a->kind) {
    case TypeKind::Lollipop: return tm::lam(u, a->lhs, tm::app(t, tm::lvar(u)));
    case TypeKind::Tensor: return tm::let_tensor(t, u, v, tm::tensor(tm::lvar(u), tm::lvar(v)));
    case TypeKind::With: return tm::with(tm::fst(t), tm::snd(t));
    case TypeKind::Unit: return tm::let_star(t, tm::star());
    case TypeKind::Bang: return tm::let_bang(t, u, tm::bang(tm::ivar(u)));
    case TypeKind::Plus: return tm::case_of(t, u, tm::inl(tm::lvar(u)), v, tm::inr(tm::lvar(v)));
    case TypeKind::Sigma: return tm::let_sigma(t, u, v, tm::sigma_pair(tm::ivar(u), tm::lvar(v)));
    case TypeKind::Pi: return tm::pi_lam(u, a->lhs, tm::pi_app(t, tm::ivar(u)));
    default: return nullptr;
  }
}

std::set<std::string> names_in(const DualContext& ctx, const TermPtr& t) {
  auto avoid = ctx.names();
  auto fv = free_vars(t);
  avoid.insert(fv.intuitionistic.begin(), fv.intuitionistic.end());
  avoid.insert(fv.linear.begin(), fv.linear.end());
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& s) {
    for (const auto& b : s->binders) avoid.insert(b);
    for (const auto& k : s->kids) walk(k);
  };
  walk(t);
  return avoid;
}

/// A closed term of type `a` from the constants, including parameterised
/// ones applied to the arguments of `a`.
TermPtr inhabitant(const Signature& sig, const TypePtr& a) {
  if (a->kind == TypeKind::Base && !a->args.empty()) {
    for (const auto& c : sig.consts) {
      if (c.params.size() != a->args.size() || c.type->kind != TypeKind::Base || c.type->name != a->name) continue;
      bool direct = c.type->args.size() == c.params.size();
      for (std::size_t i = 0; direct && i < c.params.size(); ++i)
        direct = c.type->args[i]->kind == TermKind::IntVar && c.type->args[i]->name == c.params[i].name;
      if (direct) return tm::constant(c.name, a->args);
    }
    return nullptr;
  }
  return closed_inhabitant(sig, a);
}

std::string where(const Entry& e) { return e.name; }

// Points of ⟦Δ⟧ times linear inputs when base fibers have n points.
std::size_t input_space(const DualContext& ctx, std::size_t n) {
  std::size_t s = 1;
  for (const auto& [x, a] : ctx.intuitionistic) s *= std::max<std::size_t>(1, gen::fiber_bound(a, n));
  for (const auto& [x, a] : ctx.linear) s *= std::max<std::size_t>(1, gen::fiber_bound(a, n) - 1);
  return s;
}

// Largest fiber bound n <= max_fiber at which comparing a and b stays
// within budget, or 0.
std::size_t affordable_fiber(const DualContext& ctx, const TermPtr& a, const TermPtr& b, std::size_t max_fiber) {
  constexpr std::size_t kBudget = 400000;
  for (std::size_t n = max_fiber; n >= 2; --n) {
    std::size_t space = input_space(ctx, n);
    std::size_t cost = gen::eval_cost(a, n) + (b ? gen::eval_cost(b, n) : 0);
    if (space <= kBudget && cost <= kBudget && space * cost <= kBudget) return n;
  }
  return 0;
}

}  // namespace

void Report::fail(std::string what) {
  pass = false;
  if (failures.size() < 5) failures.push_back(std::move(what));
}

std::vector<std::string> fixture_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".ildtt") out.push_back(f.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

Entry open_lambdas(const Entry& e, std::size_t max_linear) {
  Entry out = e;
  out.name += "/open";
  while (true) {
    const auto& t = out.term;
    if (t->kind == TermKind::Lam && out.type->kind == TypeKind::Lollipop && out.ctx.linear.size() < max_linear) {
      out.ctx.linear.emplace_back(t->binders[0], t->annots[0]);
      out.type = out.type->rhs;
      out.term = t->kids[0];
    } else if (t->kind == TermKind::PiLam && out.type->kind == TypeKind::Pi) {
      out.ctx.intuitionistic.emplace_back(t->binders[0], t->annots[0]);
      out.type = subst_int(out.type->rhs, out.type->name, tm::ivar(t->binders[0]));
      out.term = t->kids[0];
    } else {
      break;
    }
  }
  return out;
}

Corpus load_fixtures(const std::vector<std::string>& files, std::size_t max_linear) {
  Corpus c;
  for (const auto& path : files) {
    std::shared_ptr<const Module> m;
    try {
      m = std::make_shared<const Module>(parse_module(read_file(path), path));
    } catch (const std::exception& e) {
      c.rejected.push_back(path + ": " + e.what());
      continue;
    }
    Checker checker(m->sig);
    for (const auto& d : m->defs) {
      try {
        auto j = checker.check_definition(d);
        Entry e{stem(path) + ":" + d.name, m, {}, j.term, j.type};
        ++c.definitions;
        auto opened = open_lambdas(e, max_linear);
        c.entries.push_back(std::move(e));
        if (!opened.ctx.intuitionistic.empty() || !opened.ctx.linear.empty()) c.entries.push_back(std::move(opened));
      } catch (const std::exception& e) {
        c.rejected.push_back(stem(path) + ":" + d.name + ": " + e.what());
      }
    }
  }
  return c;
}

void add_generated(Corpus& c, std::size_t count, std::uint64_t seed) {
  auto m = std::make_shared<const Module>(parse_module(gen::generator_source(), "<generator>"));
  Checker checker(m->sig);
  gen::TermGenerator g(m->sig, seed);
  int group = 0;
  for (auto& e : c.entries) group = std::max(group, e.group + 1);
  std::size_t added = 0;
  for (std::size_t round = 0; added < count && round < 20 * count; ++round) {
    auto s = g.sample(std::min<std::size_t>(3, count - added), round % 5);
    for (const auto& t : s.terms) {
      try {
        auto j = checker.check_term(s.ctx, t, s.type);
        c.entries.push_back(Entry{"gen:" + std::to_string(added), m, s.ctx, j.term, j.type, true, group});
        ++added;
      } catch (const CheckError& e) {
        c.rejected.push_back("generated term " + to_string(t) + ": " + e.what());
      }
    }
    ++group;
  }
}

Report soundness(const Corpus& c, const SoundnessOptions& opts, std::vector<Step>* steps) {
  Report r;
  std::map<std::tuple<const Module*, std::uint64_t, std::size_t>, std::unique_ptr<sem::Interpreter>> models;
  auto model = [&](const Entry& e, std::uint64_t seed, std::size_t n) -> const sem::Interpreter& {
    auto& slot = models[{e.module.get(), seed, n}];
    if (!slot) {
      sem::ModelOptions mo;
      mo.use_bindings = false;
      mo.seed = seed;
      mo.max_fiber = n;
      slot = std::make_unique<sem::Interpreter>(e.module->sig, mo);
    }
    return *slot;
  };
  std::map<int, std::vector<const Entry*>> groups;
  for (const auto& e : c.entries)
    if (e.group >= 0) groups[e.group].push_back(&e);

  std::size_t candidates = 0, accepted = 0, equations = 0, inputs = 0, step_count = 0, reduced = 0, skipped = 0;
  auto compare = [&](const Entry& e, const TermPtr& a, const TermPtr& b, const char* what) {
    ++candidates;
    bool eq = false;
    try {
      eq = judg_equal(a, b, e.type, quiet());
    } catch (const StepLimitExceeded&) {
      return;
    }
    if (!eq) return;
    ++accepted;
    std::size_t n = affordable_fiber(e.ctx, a, b, opts.max_fiber);
    if (n == 0) {
      ++skipped;
      return;
    }
    if (n < opts.max_fiber) ++reduced;
    for (auto seed : opts.seeds) {
      try {
        auto res = sem::check_equation(model(e, seed, n), e.ctx, a, b, e.type);
        ++equations;
        inputs += res.inputs;
        if (!res.ok)
          r.fail(where(e) + " (" + what + ", seed " + std::to_string(seed) + "): " + to_string(a) + " vs " +
                 to_string(b) + ": " + res.detail);
      } catch (const sem::SemanticError& ex) {
        r.fail(where(e) + " (" + what + "): " + ex.what());
      }
    }
  };

  for (const auto& e : c.entries) {
    std::size_t n = affordable_fiber(e.ctx, e.term, nullptr, opts.max_fiber);
    for (auto seed : opts.seeds) {
      if (n == 0) break;
      try {
        auto res = sem::check_typing(model(e, seed, n), e.ctx, e.term, e.type);
        if (!res.ok) r.fail(where(e) + " (typing, seed " + std::to_string(seed) + "): " + res.detail);
      } catch (const sem::SemanticError& ex) {
        r.fail(where(e) + " (typing): " + ex.what());
      }
    }
    std::vector<NormalForm> nfs;
    for (auto order : {HoistOrder::OutermostFirst, HoistOrder::InnermostFirst}) {
      try {
        nfs.push_back(normalize(e.term, EqualityConfig{}, order));
      } catch (const StepLimitExceeded& ex) {
        r.fail(where(e) + ": " + ex.what());
      }
    }
    for (const auto& nf : nfs) {
      compare(e, e.term, nf.term, "normal form");
      for (const auto& s : nf.trace) {
        ++step_count;
        compare(e, s.before, s.after, s.rule.c_str());
        if (steps) steps->push_back({&e, s});
      }
    }
    if (nfs.size() == 2) compare(e, nfs[0].term, nfs[1].term, "hoisting orders");
    if (auto eta = eta_expand(e.term, e.type, names_in(e.ctx, e.term))) {
      try {
        auto j = Checker(e.module->sig).check_term(e.ctx, eta, e.type);
        compare(e, e.term, j.term, "eta");
      } catch (const CheckError& ex) {
        r.fail(where(e) + " (eta expansion does not check): " + ex.what());
      }
    }
  }
  for (const auto& [g, members] : groups)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        compare(*members[i], members[i]->term, members[j]->term, "same group");

  std::size_t fixtures = 0, generated = 0;
  for (const auto& e : c.entries) (e.generated ? generated : fixtures)++;
  r.summary = std::to_string(fixtures) + " fixture entries (" + std::to_string(c.definitions) + " definitions), " +
              std::to_string(generated) + " generated; " + std::to_string(accepted) + "/" +
              std::to_string(candidates) + " pairs proved equal, " + std::to_string(equations) +
              " model comparisons over " + std::to_string(inputs) + " inputs, " + std::to_string(opts.seeds.size()) +
              " seeds (" + std::to_string(reduced) + " pairs with smaller fibers, " + std::to_string(skipped) +
              " too large to enumerate); " + std::to_string(step_count) + " rewrite steps";
  if (skipped > 0) r.fail(std::to_string(skipped) + " proved pairs were too large to compare");
  return r;
}

Report linearity(const Corpus& c, std::size_t required_rejections) {
  Report r;
  std::size_t refuted = 0, reused = 0, unused = 0, derivable = 0, agreed = 0, small = 0;
  for (const auto& e : c.entries) {
    bool ok = partition_derivable(e.ctx, e.term);
    ++agreed;
    if (linear_variable_count(e.ctx, e.term) <= 4) ++small;
    if (!ok) r.fail(where(e) + ": accepted by the checker but refuted by the partition oracle");
    if (e.generated) continue;
    Checker checker(e.module->sig);
    for (const auto& m : mutants(e.module->sig, e.ctx, e.term)) {
      bool oracle = partition_derivable(m.ctx, m.term);
      bool accepted = true;
      ErrorKind kind{};
      std::string message;
      try {
        checker.check_term(m.ctx, m.term, e.type);
      } catch (const CheckError& ex) {
        accepted = false;
        kind = ex.kind;
        message = ex.what();
      }
      std::string tag = where(e) + " [" + mutation_name(m.kind) + " " + m.description + "]";
      if (oracle != accepted) {
        r.fail(tag + ": checker " + (accepted ? "accepts" : "rejects (" + message + ")") + ", oracle " +
               (oracle ? "derives" : "refutes"));
        continue;
      }
      ++agreed;
      if (linear_variable_count(m.ctx, m.term) <= 4) ++small;
      if (oracle) {
        ++derivable;
        continue;
      }
      ++refuted;
      if (kind == ErrorKind::LinearReused) {
        ++reused;
      } else if (kind == ErrorKind::LinearUnused) {
        ++unused;
      } else {
        r.fail(tag + ": rejected with kind " + error_kind_name(kind) + ": " + message);
      }
    }
  }
  if (refuted < required_rejections)
    r.fail("only " + std::to_string(refuted) + " linearity mutants, " + std::to_string(required_rejections) +
           " required");
  r.summary = std::to_string(refuted) + " mutants rejected (" + std::to_string(reused) + " reused, " +
              std::to_string(unused) + " unused), " + std::to_string(derivable) +
              " mutants derivable and accepted; checker and partition oracle agree on " + std::to_string(agreed) +
              " terms (" + std::to_string(small) + " with at most 4 linear variables)";
  return r;
}

Report metatheory(const Corpus& c, const std::vector<Step>& steps) {
  Report r;
  std::map<std::string, std::size_t> counts;
  auto run = [&](const Entry& e, const Checker& checker, const HarnessCase& h, const HarnessArgs& args) {
    try {
      auto res = admissibility(checker, h, args);
      ++counts[transform_name(args.transform)];
      if (!res.ok) r.fail(where(e) + ": " + res.defect);
    } catch (const std::invalid_argument& ex) {
      r.fail(where(e) + " (" + transform_name(args.transform) + " refused): " + ex.what());
    }
  };
  for (const auto& e : c.entries) {
    if (e.generated) continue;
    const auto& sig = e.module->sig;
    Checker checker(sig);
    HarnessCase h{e.ctx, e.term, e.type, nullptr, nullptr};
    HarnessCase heq = h;
    heq.term2 = normalize(e.term, quiet()).term;
    HarnessCase hty{DualContext{e.ctx.intuitionistic, {}}, nullptr, e.type, nullptr, nullptr};
    HarnessCase htyeq = hty;
    htyeq.type2 = normalize_type(e.type, quiet());
    auto avoid = names_in(e.ctx, e.term);
    for (const auto& n : names_in(e.ctx, heq.term2)) avoid.insert(n);

    TypePtr weak_ty = ty::unit();
    for (const auto& t : sig.types)
      if (t.params.empty()) {
        weak_ty = ty::base(t.name);
        break;
      }
    const auto& ints = e.ctx.intuitionistic;
    const auto& lins = e.ctx.linear;
    for (std::size_t pos = 0; pos <= ints.size(); ++pos) {
      HarnessArgs a;
      a.transform = Transform::Weaken;
      a.var = fresh_name("wk", avoid);
      a.var_type = weak_ty;
      a.position = pos;
      run(e, checker, h, a);
    }
    for (std::size_t pos = 0; pos + 1 < ints.size(); ++pos) {
      if (occurs_int(ints[pos].first, ints[pos + 1].second)) continue;
      HarnessArgs a;
      a.transform = Transform::ExchangeInt;
      a.position = pos;
      run(e, checker, h, a);
    }
    for (std::size_t pos = 0; pos + 1 < lins.size(); ++pos) {
      HarnessArgs a;
      a.transform = Transform::ExchangeLin;
      a.position = pos;
      run(e, checker, h, a);
    }
    for (const auto& [x, xt] : ints) {
      auto rep = inhabitant(sig, xt);
      if (!rep) continue;
      HarnessArgs a;
      a.var = x;
      a.replacement = rep;
      for (auto [tr, hc] : {std::pair{Transform::SubstIntTerm, &h}, std::pair{Transform::SubstIntTermEq, &heq},
                            std::pair{Transform::SubstIntType, &hty}, std::pair{Transform::SubstIntTypeEq, &htyeq}}) {
        a.transform = tr;
        run(e, checker, *hc, a);
      }
    }
    for (const auto& [x, xt] : lins) {
      auto x2 = fresh_name(x + "r", avoid);
      std::vector<HarnessArgs> reps;
      HarnessArgs a;
      a.var = x;
      a.replacement_lin = {{x2, xt}};
      a.replacement = tm::lvar(x2);
      reps.push_back(a);
      auto z = fresh_name("rz", avoid);
      a.replacement = tm::app(tm::lam(z, xt, tm::lvar(z)), tm::lvar(x2));
      reps.push_back(a);
      if (auto rep = inhabitant(sig, xt)) {
        a.replacement_lin = {};
        a.replacement = rep;
        reps.push_back(a);
      }
      for (auto& ra : reps) {
        ra.transform = Transform::SubstLinTerm;
        run(e, checker, h, ra);
        ra.transform = Transform::SubstLinTermEq;
        run(e, checker, heq, ra);
      }
    }
  }
  std::size_t reduced = 0;
  for (const auto& s : steps) {
    try {
      Checker(s.entry->module->sig).check_term(s.entry->ctx, s.step.after, s.entry->type);
      ++reduced;
    } catch (const CheckError& ex) {
      r.fail(where(*s.entry) + " (subject reduction, " + s.step.rule + "): " + to_string(s.step.after) + ": " +
             ex.what());
    }
  }
  std::string per;
  for (const auto& [name, n] : counts) per += (per.empty() ? "" : ", ") + name + " " + std::to_string(n);
  r.summary = per + "; subject reduction " + std::to_string(reduced) + "/" + std::to_string(steps.size()) + " steps";
  return r;
}

}  // namespace ildtt::sweep
