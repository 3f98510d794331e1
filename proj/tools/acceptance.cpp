#include <fmt/format.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "parb/cyclic.hpp"
#include "parb/sampling.hpp"
#include "parb/suites.hpp"
#include "parb/tangle.hpp"
#include "parb/tl.hpp"

using namespace parb;
using namespace parb::sampling;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Failing records of the listed ids, or of every record when ids is empty.
Verdict from_report(const Report& r, const std::vector<std::string>& ids = {}) {
  Verdict v;
  int checked = 0;
  auto consider = [&](const Record& rec) {
    ++checked;
    if (rec.status != Status::fail) return;
    v.pass = false;
    v.detail += fmt::format(" [{}: {} {}]", rec.id, rec.detail, rec.witness.substr(0, 200));
  };
  if (ids.empty()) {
    for (const Record& rec : r.records) consider(rec);
  } else {
    for (const std::string& id : ids) {
      if (const Record* rec = r.find(id)) {
        consider(*rec);
      } else {
        v.pass = false;
        v.detail += fmt::format(" [{}: missing]", id);
      }
    }
  }
  if (v.pass) v.detail = fmt::format("{} {} records pass", checked, r.suite);
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_command(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// The CLI's report bytes agree across two runs with one seed.
Verdict determinism(const std::string& cli, const std::filesystem::path& dir) {
  Verdict v;
  int compared = 0;
  for (const char* suite : {"cyclic-axioms", "gt-relations", "tangle-relations"}) {
    auto run = [&](int seed, const char* tag) {
      std::filesystem::path out = dir / fmt::format("{}-{}-{}.jsonl", suite, seed, tag);
      std::string cmd = fmt::format("{} verify {} --seed {} --budget 40 --out {} > /dev/null", shell_quote(cli), suite,
                                    seed, shell_quote(out.string()));
      run_command(cmd);
      return slurp(out);
    };
    std::string a = run(7, "a"), b = run(7, "b");
    if (a.empty() || a != b) {
      v.pass = false;
      v.detail += fmt::format(" [{} reports differ]", suite);
    }
    ++compared;
  }
  if (v.pass) v.detail = fmt::format("{} suites byte-identical across runs", compared);
  return v;
}

// Print/parse round trips of 200 generated texts, and idempotent CLI
// normalization on a sample of them.
Verdict round_trips(const std::string& cli, const std::filesystem::path& dir, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  struct Item {
    std::string kind, text;
    std::function<std::string(const std::string&)> reprint;
  };
  std::vector<Item> corpus;
  for (int k = 0; static_cast<int>(corpus.size()) < 200; ++k) {
    switch (k % 7) {
      case 0:
        corpus.push_back({"braid", to_string(random_word(rng, draw(rng, 1, 6), 10)),
                          [](const std::string& s) { return to_string(parse_braid(s)); }});
        break;
      case 1:
        corpus.push_back({"rbraid", to_string(random_rb(rng, draw(rng, 1, 5), 8)),
                          [](const std::string& s) { return to_string(parse_rbraid(s)); }});
        break;
      case 2:
        corpus.push_back({"expr", to_string(express(random_morphism(rng, draw(rng, 1, 4), 4))),
                          [](const std::string& s) { return to_string(parse_expr(s)); }});
        break;
      case 3:
        corpus.push_back({"paren", random_object(rng, draw(rng, 1, 7)).str(),
                          [](const std::string& s) { return parse_paren(s).str(); }});
        break;
      case 4:
        corpus.push_back({"tangle", to_string(turaev_functor(random_metric(rng, draw(rng, 0, 3), draw(rng, 1, 6), 5))),
                          [](const std::string& s) { return to_string(parse_tangle(s)); }});
        break;
      case 5:
        corpus.push_back({"gt", to_string(GtElement::discrete(random_odd(rng), random_free_word(rng, 6))),
                          [](const std::string& s) { return to_string(parse_gt(s)); }});
        break;
      default:
        corpus.push_back({"tl", to_string(TLModel().eval(random_morphism(rng, draw(rng, 1, 3), 5))),
                          [](const std::string& s) { return to_string(parse_tl(s)); }});
    }
  }

  Verdict v;
  for (const Item& it : corpus) {
    std::string again;
    try {
      again = it.reprint(it.text);
    } catch (const std::exception& e) {
      again = e.what();
    }
    if (again != it.text) {
      v.pass = false;
      v.detail += fmt::format(" [{} does not round trip: {}]", it.kind, it.text.substr(0, 120));
    }
  }

  int normalized = 0;
  for (const Item& it : corpus) {
    if (it.kind != "braid" && it.kind != "rbraid" && it.kind != "tangle") continue;
    if (normalized >= 30) break;
    std::filesystem::path in = dir / fmt::format("item-{}.txt", normalized);
    std::filesystem::path once = dir / fmt::format("item-{}.once", normalized);
    std::filesystem::path twice = dir / fmt::format("item-{}.twice", normalized);
    std::ofstream(in, std::ios::binary) << it.text;
    int rc1 = run_command(fmt::format("{} normalize - < {} > {}", shell_quote(cli), shell_quote(in.string()),
                                      shell_quote(once.string())));
    int rc2 = run_command(fmt::format("{} normalize - < {} > {}", shell_quote(cli), shell_quote(once.string()),
                                      shell_quote(twice.string())));
    if (rc1 != 0 || rc2 != 0 || slurp(once) != slurp(twice)) {
      v.pass = false;
      v.detail += fmt::format(" [normalize not idempotent on {}]", it.text.substr(0, 120));
    }
    ++normalized;
  }
  if (v.pass) v.detail = fmt::format("{} items round trip; normalize idempotent on {}", corpus.size(), normalized);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli;
  std::uint64_t seed = 1;
  app.add_option("--cli", cli, "Path of the parb executable")->required();
  app.add_option("--seed", seed, "Seed of the sample generator");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::path dir = std::filesystem::temp_directory_path() / fmt::format("parb-acceptance-{}", ::getpid());
  std::filesystem::create_directories(dir);

  SuiteOptions options;
  options.seed = seed;

  struct Criterion {
    int number;
    std::string name;
    std::function<Verdict()> check;
  };
  Report braids;
  const std::vector<Criterion> criteria{
      {1, "braid oracle agreement",
       [&] {
         braids = run_suite("braid-oracle", options);
         return from_report(braids, {"br3-exhaustive-lk", "br4-random-lk"});
       }},
      {2, "presentation suites",
       [&] {
         return from_report(braids, {"br-relations", "pb-generators", "full-twist-central", "rb-relations",
                                     "rb-doubled-model", "garside-canonical"});
       }},
      {3, "operad axioms", [&] { return from_report(run_suite("operad-axioms", options)); }},
      {4, "cyclic structure", [&] { return from_report(run_suite("cyclic-axioms", options)); }},
      {5, "rotation identities", [&] { return from_report(run_suite("lemma-identities", options)); }},
      {6, "GT", [&] { return from_report(run_suite("gt-relations", options)); }},
      {7, "metric prop and tangles", [&] { return from_report(run_suite("tangle-relations", options)); }},
      {8, "TL model", [&] { return from_report(run_suite("tl-equivariance", options)); }},
      {9, "CLI",
       [&] {
         Verdict a = determinism(cli, dir), b = round_trips(cli, dir, seed);
         return Verdict{a.pass && b.pass, a.detail + "; " + b.detail};
       }},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, fmt::format("exception: {}", e.what())};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << fmt::format("criterion {}: {} {} ({}) [{:.2f}s]\n", c.number, v.pass ? "PASS" : "FAIL", c.name,
                             v.detail, secs);
    all = all && v.pass;
  }
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  return all ? 0 : 1;
}
