// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ildtt/model.hpp"
#include "ildtt/sweeps.hpp"
#include "ildtt/theorems.hpp"

using namespace ildtt;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
};

Outcome from(const sweep::Report& r) { return {r.pass, r.summary, r.failures}; }

/// Items whose name starts with one of `prefixes`; all must pass.
Outcome theorem_items(const std::vector<thm::Item>& items, const std::vector<std::string>& prefixes) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& i : items) {
    bool selected = false;
    for (const auto& p : prefixes) selected |= i.name.rfind(p, 0) == 0;
    if (!selected) continue;
    ++n;
    if (!i.pass) {
      o.pass = false;
      o.failures.push_back(i.name + ": " + i.details + (i.witness ? " [" + *i.witness + "]" : ""));
    }
  }
  if (n == 0) {
    o.pass = false;
    o.failures.push_back("no items ran");
  }
  o.summary = std::to_string(n - o.failures.size()) + "/" + std::to_string(n) + " items pass";
  return o;
}

Outcome model_sweep(const model::Bounds& b) {
  Outcome o;
  std::size_t cases = 0, conditions = 0;
  model::ModelInstance fam;
  for (const auto& r : model::verify_all(fam, b)) {
    ++conditions;
    cases += r.cases;
    if (!r.pass) {
      o.pass = false;
      o.failures.push_back(r.condition + ": " + (r.witness ? model::to_string(*r.witness) : "no witness"));
    }
  }
  std::size_t caught = 0;
  for (auto f : model::all_faults()) {
    model::FaultyInstance broken(f);
    bool found = false;
    // one replayable witness per fault suffices
    for (const auto& name : model::condition_names()) {
      if (found) break;
      auto r = model::verify(broken, name, b);
      if (r.pass) continue;
      if (!r.witness) {
        o.failures.push_back(std::string(model::fault_name(f)) + ": " + r.condition + " failed without a witness");
        continue;
      }
      // the witness must fail again on the broken instance and pass on Fam(Set*)
      if (model::replay_witness(broken, *r.witness) && !model::replay_witness(fam, *r.witness)) {
        found = true;
      } else {
        o.failures.push_back(std::string(model::fault_name(f)) + ": witness does not replay: " +
                             model::to_string(*r.witness));
      }
    }
    if (found) {
      ++caught;
    } else {
      o.pass = false;
      o.failures.push_back(std::string(model::fault_name(f)) + " not detected");
    }
  }
  o.pass = o.pass && o.failures.empty();
  std::ostringstream s;
  s << conditions << " conditions, " << cases << " cases on Fam(Set*) at |S| <= " << b.max_index
    << ", fibers <= " << b.max_fiber << "; " << caught << "/" << model::all_faults().size()
    << " injected faults caught with replayable witnesses";
  o.summary = s.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixtures = ILDTT_FIXTURE_DIR;
  std::uint64_t seed = 2024;
  std::size_t generated = 500;
  std::size_t mutations = 1000;
  bool verbose = false;
  CLI::App app{"Acceptance criteria"};
  app.add_option("fixtures", fixtures, "Fixture directory")->check(CLI::ExistingDirectory);
  app.add_option("--seed", seed, "Seed for generated terms and models");
  app.add_option("--generated", generated, "Random well-typed terms for the soundness sweep");
  app.add_option("--mutations", mutations, "Mutants that must be rejected");
  app.add_flag("-v,--verbose", verbose, "Print every failure, not just the first few");
  CLI11_PARSE(app, argc, argv);

  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
      o.pass = false;
      o.failures.push_back("took " + std::to_string(secs) + "s, limit " + std::to_string(limit_s) + "s");
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << " " << name << " (" << std::fixed
              << std::setprecision(1) << secs << "s): " << o.summary << "\n";
    std::size_t shown = 0;
    for (const auto& f : o.failures)
      if (verbose || shown++ < 5) std::cout << "      " << f << "\n";
    std::cout.flush();
  };

  sweep::Corpus corpus;
  std::vector<sweep::Step> steps;
  report(1, "soundness", 120, [&] {
    corpus = sweep::load_fixtures(sweep::fixture_files(fixtures));
    std::size_t fixture_entries = corpus.entries.size();
    sweep::add_generated(corpus, generated, seed);
    Outcome o = from(sweep::soundness(corpus, {{seed, seed + 1, seed + 2}, 4}, &steps));
    std::size_t made = corpus.entries.size() - fixture_entries;
    if (corpus.definitions < 50) {
      o.pass = false;
      o.failures.push_back("only " + std::to_string(corpus.definitions) + " checked definitions");
    }
    if (made < generated) {
      o.pass = false;
      o.failures.push_back("only " + std::to_string(made) + " generated terms");
    }
    for (const auto& r : corpus.rejected) {
      o.pass = false;
      o.failures.push_back("rejected: " + r);
    }
    return o;
  });
  report(2, "linearity", 60, [&] { return from(sweep::linearity(corpus, mutations)); });

  thm::Bounds tb{3, 4};
  std::vector<thm::Item> items;
  report(3, "Pi/lolli and Sigma/tensor", 0, [&] {
    items = thm::run_all(tb, seed);
    return theorem_items(items, {"bang-index."});
  });
  report(4, "Sigma(!x:!A)I as !A, Seely, bangFam = sigmaFam", 0,
         [&] { return theorem_items(items, {"bang-sigma.", "seely."}); });
  report(5, "Pi/with and Sigma/plus over 2", 0, [&] { return theorem_items(items, {"two-index."}); });
  report(6, "model sweep and fault injection", 300, [&] { return model_sweep({3, 4}); });
  report(7, "tt and ff are distinct", 0, [&] { return theorem_items(items, {"consistency."}); });
  report(8, "structural rules and subject reduction", 0, [&] { return from(sweep::metatheory(corpus, steps)); });
  return all ? 0 : 1;
}
