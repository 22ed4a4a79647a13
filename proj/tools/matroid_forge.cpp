// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 true/ok, 1 false/violation,
// 2 usage or domain error, 3 unknown.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "matroid_forge/matroid_forge.hpp"
#include "run_report.hpp"

namespace mf = matroid_forge;
using matroid_forge::cli::Digest;
using matroid_forge::cli::RunReport;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

struct Options {
  bool json = false;
  bool timing = false;
  std::string report_path;
  std::string out_path;
  std::string matroid_path;
  std::string other_path;
  std::string family_path;
  std::string tasks_path;
  std::string i_arg;
  std::string j_arg;
  std::string level;
  std::string prefix;
  std::size_t depth = 0;
  std::size_t task_index = 0;
  std::size_t fuel = mf::kDefaultFuel;
  std::uint64_t seed = mf::kDefaultSeed;
  bool raw = false;
};

class Session {
 public:
  Session(const Options& opt, std::string command)
      : opt_(opt), report_(std::move(command)) {}

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    digest_.add(buf.str());
    return buf.str();
  }

  mf::MatroidFile matroid_file(const std::string& path) {
    return mf::parse_matroid_file(read(path));
  }

  // A set argument: a file holding one expression, or the expression itself.
  mf::TemplateSet set_argument(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::istringstream in(read(arg));
      std::string line;
      while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return mf::parse_set_expression(line);
      }
      throw std::invalid_argument("no set expression in '" + arg + "'");
    }
    digest_.add(arg);
    return mf::parse_set_expression(arg);
  }

  mf::ElementSet finite_argument(const std::string& arg) {
    auto finite = set_argument(arg).as_finite();
    if (!finite) {
      throw std::invalid_argument("'" + arg + "' is infinite; a finite set is needed");
    }
    return *finite;
  }

  RunReport& report() { return report_; }

  int finish(int code, std::chrono::steady_clock::time_point start) {
    report_.set_digest(digest_.hex());
    report_.add("exit", std::to_string(code));
    if (opt_.timing) {
      report_.set_timing_ms(std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count());
    }
    const std::string body = opt_.json ? report_.json() : report_.text();
    if (!opt_.report_path.empty()) {
      std::ofstream out(opt_.report_path);
      out << body;
    } else if (!quiet_) {
      std::cout << body;
    }
    return code;
  }

  // Commands whose primary output is a file keep the report off stdout.
  void set_quiet(bool quiet) { quiet_ = quiet; }

 private:
  const Options& opt_;
  RunReport report_;
  Digest digest_;
  bool quiet_ = false;
};

void write_primary(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::invalid_argument("cannot write '" + opt.out_path + "'");
    out << text;
  }
}

mf::TruncationLevel parse_level(const std::string& s) {
  if (s == "trivial") return mf::TruncationLevel::trivial();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw std::invalid_argument("level must be an integer or 'trivial'");
  }
  if (v == 0 && s[0] == '-') throw std::invalid_argument("level -0 is the trivial truncation; write 'trivial'");
  return mf::TruncationLevel::of(v);
}

std::string family_text(const mf::SetFamily& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ", ";
    out += mf::to_string(f[i]);
  }
  return out + "}";
}

mf::TruncationFamily load_family(Session& s, const mf::FinitaryMatroid& m,
                                 const std::string& path) {
  const mf::FamilyFile file = mf::parse_family_file(s.read(path));
  mf::TruncationFamily f{file.name, {}};
  for (const auto& t : file.classes) {
    f.representatives.push_back(mf::IndepSet::certify(m, t));
  }
  for (const auto& set : file.members) {
    f.representatives.push_back(mf::IndepSet::certify(m, set));
  }
  return f;
}

std::vector<mf::Task> load_tasks(Session& s, const mf::FinitaryMatroid& m,
                                 const std::string& path) {
  std::vector<mf::Task> out;
  for (const auto& spec : mf::parse_task_file(s.read(path))) {
    out.push_back(mf::make_task(m, spec.i, spec.j));
  }
  return out;
}

int cmd_axioms(Session& s, const Options& opt) {
  const mf::MatroidFile file = s.matroid_file(opt.matroid_path);
  const auto* d = std::get_if<mf::FiniteMatroid::Description>(&file.body);
  if (d == nullptr) throw std::invalid_argument("axioms check needs a finite matroid");
  mf::ElementSet ground;
  mf::SetFamily bases;
  if (!opt.family_path.empty()) {
    ground = mf::FiniteMatroid::construct(*d).ground_set();
    bases = mf::parse_family_file(s.read(opt.family_path)).members;
  } else if (const auto* e = std::get_if<mf::FiniteMatroid::Explicit>(d)) {
    // Checked before construction, which would refuse a non-matroid.
    ground = e->ground;
    bases = e->bases;
  } else {
    const mf::FiniteMatroid m = mf::FiniteMatroid::construct(*d);
    ground = m.ground_set();
    bases = m.base_family();
  }
  const mf::Verdict v = mf::check_base_axioms(ground, bases);
  s.report().add("verdict", v.to_string());
  return v.is_ok() ? kExitOk : kExitFalse;
}

int cmd_truncate(Session& s, const Options& opt) {
  const mf::MatroidFile file = s.matroid_file(opt.matroid_path);
  const mf::FiniteMatroid m = mf::build_finite(file);
  const mf::TruncationLevel level = parse_level(opt.level);
  const mf::FiniteMatroid t = mf::apply_level(m, level);
  const std::string name = file.name + "-trunc" + level.to_string();
  write_primary(opt, mf::emit_matroid_file({name, t.describe()}));
  s.report().add("level", level.to_string());
  s.report().add("rank", std::to_string(t.rank()));
  s.report().add("bases", std::to_string(t.bases().size()));
  s.set_quiet(opt.report_path.empty());
  return kExitOk;
}

int cmd_classify_truncation(Session& s, const Options& opt) {
  const mf::FiniteMatroid m = mf::build_finite(s.matroid_file(opt.matroid_path));
  const mf::FiniteMatroid n = mf::build_finite(s.matroid_file(opt.other_path));
  const auto level = mf::classify_truncation(m, n);
  s.report().add("level", level ? level->to_string() : "none");
  return level ? kExitOk : kExitFalse;
}

int cmd_equiv(Session& s, const Options& opt, const std::string& which) {
  const mf::MatroidFile file = s.matroid_file(opt.matroid_path);
  bool truth = true;
  if (!file.is_finitary()) {
    const mf::FiniteMatroid m = mf::build_finite(file);
    const mf::ElementSet i = s.finite_argument(opt.i_arg);
    if (which == "classify") {
      s.report().add("class", mf::classify_class(m, i).to_string());
      return kExitOk;
    }
    const mf::ElementSet j = s.finite_argument(opt.j_arg);
    truth = which == "strong" ? mf::strongly_equivalent(m, i, j)
                              : mf::almost_spans(m, i, j);
  } else {
    const mf::FinitaryMatroid m = mf::build_finitary(file);
    const mf::IndepSet i = mf::IndepSet::certify(m, s.set_argument(opt.i_arg));
    if (which == "classify") {
      s.report().add("class", mf::classify_class(m, i).to_string());
      return kExitOk;
    }
    const mf::IndepSet j = mf::IndepSet::certify(m, s.set_argument(opt.j_arg));
    truth = which == "strong" ? mf::strongly_equivalent(m, i, j)
                              : mf::almost_spans(m, i, j);
    s.report().add("r(I|J)", mf::relative_rank(m, i, j).to_string());
    s.report().add("r(J|I)", mf::relative_rank(m, j, i).to_string());
  }
  s.report().add("result", truth ? "true" : "false");
  return truth ? kExitOk : kExitFalse;
}

int cmd_gentrunc_verify(Session& s, const Options& opt) {
  const mf::FiniteMatroid m = mf::build_finite(s.matroid_file(opt.matroid_path));
  const mf::FamilyFile fam = mf::parse_family_file(s.read(opt.family_path));
  if (!fam.classes.empty()) {
    throw std::invalid_argument("gentrunc verify takes 'set' lines; use verify-finitary for classes");
  }
  const mf::Verdict v = mf::verify_family(m, fam.members);
  s.report().add("verdict", v.to_string());
  return v.is_ok() ? kExitOk : kExitFalse;
}

int cmd_gentrunc_enumerate(Session& s, const Options& opt) {
  const mf::FiniteMatroid m = mf::build_finite(s.matroid_file(opt.matroid_path));
  const auto families = opt.raw ? mf::enumerate_raw(m) : mf::enumerate_gen_truncations(m);
  s.report().add("method", opt.raw ? "raw" : "levels");
  s.report().add("families", std::to_string(families.size()));
  for (std::size_t k = 0; k < families.size(); ++k) {
    s.report().add("family[" + std::to_string(k) + "]", family_text(families[k]));
  }
  return kExitOk;
}

int cmd_gentrunc_verify_finitary(Session& s, const Options& opt) {
  const mf::FinitaryMatroid m = mf::build_finitary(s.matroid_file(opt.matroid_path));
  const mf::TruncationFamily fam = load_family(s, m, opt.family_path);
  const std::vector<mf::Task> tasks =
      opt.tasks_path.empty() ? std::vector<mf::Task>{} : load_tasks(s, m, opt.tasks_path);
  const mf::FinitaryVerdict v = mf::verify_family_finitary(m, fam, tasks, opt.fuel);
  s.report().add("verdict", v.to_string());
  for (std::size_t k = 0; k < v.tasks.size(); ++k) {
    s.report().add("task[" + std::to_string(k) + "]", v.tasks[k].to_string());
  }
  switch (v.status) {
    case mf::FinitaryVerdict::Status::kOk:
      return kExitOk;
    case mf::FinitaryVerdict::Status::kViolation:
      return kExitFalse;
    case mf::FinitaryVerdict::Status::kUnknown:
      break;
  }
  return kExitUnknown;
}

const mf::Task& pick_task(const std::vector<mf::Task>& tasks, std::size_t index) {
  if (index >= tasks.size()) throw std::invalid_argument("task index out of range");
  return tasks[index];
}

int cmd_forcing_step(Session& s, const Options& opt) {
  const mf::FinitaryMatroid m = mf::build_finitary(s.matroid_file(opt.matroid_path));
  const mf::TruncationFamily fam = load_family(s, m, opt.family_path);
  const auto tasks = load_tasks(s, m, opt.tasks_path);
  const mf::Task& task = pick_task(tasks, opt.task_index);
  mf::StepCertificate cert;
  try {
    cert = mf::forcing_step(m, fam, task, opt.depth, opt.fuel);
  } catch (const mf::ClaimFailure& e) {
    s.report().add("claims", e.what());
    return kExitFalse;
  }
  s.report().add("depth", std::to_string(cert.depth));
  s.report().add("condition", mf::to_string(cert.condition));
  s.report().add("b_low", mf::emit_set_expression(cert.b_low));
  s.report().add("b_excluded", mf::to_string(cert.b_excluded));
  for (std::size_t k : cert.lower_side) {
    s.report().add("lower_side", "B" + std::to_string(k));
  }
  for (std::size_t k : cert.upper_side) {
    s.report().add("upper_side", "B" + std::to_string(k));
  }
  for (const auto& ev : cert.evidence) {
    s.report().add(std::string("met ") + ev.dense_set + "(B" +
                       std::to_string(ev.representative) + "," + std::to_string(ev.n) + ")",
                   ev.to_string());
  }
  for (const auto& ev : cert.final_checks) s.report().add("final", ev.to_string());
  return kExitOk;
}

int cmd_forcing_check_claims(Session& s, const Options& opt) {
  const mf::FinitaryMatroid m = mf::build_finitary(s.matroid_file(opt.matroid_path));
  const mf::TruncationFamily fam = load_family(s, m, opt.family_path);
  const auto tasks = load_tasks(s, m, opt.tasks_path);
  const mf::ClaimOutcome out =
      mf::check_claim_preconditions(m, fam, pick_task(tasks, opt.task_index), opt.fuel);
  s.report().add("claims", out.to_string());
  return out.is_ok() ? kExitOk : kExitFalse;
}

int cmd_forcing_seed(Session& s, const Options& opt) {
  const mf::FinitaryMatroid m = opt.matroid_path.empty()
                                    ? mf::FinitaryMatroid::free()
                                    : mf::build_finitary(s.matroid_file(opt.matroid_path));
  s.report().add("prefix", opt.prefix);
  const mf::TruncationFamily f = mf::seed_family(m, opt.prefix);
  mf::FamilyFile file{f.name, {}, {}};
  for (const auto& rep : f.representatives) file.classes.push_back(rep.set());
  if (!opt.out_path.empty()) write_primary(opt, mf::emit_family_file(file));
  for (const auto& rep : f.representatives) {
    s.report().add("class", mf::emit_set_expression(rep.set()));
  }
  s.report().add("incomparable", "true");
  return kExitOk;
}

int cmd_selftest(Session& s, const Options& opt, const std::string& suite) {
  s.report().set_seed(opt.seed);
  const mf::SelftestReport r =
      suite == "lemmas" ? mf::run_lemma_suite(opt.seed) : mf::run_oracle_suite(opt.seed);
  s.report().add("suite", r.suite);
  s.report().add("checks", std::to_string(r.checks));
  s.report().add("failures", std::to_string(r.failures.size()));
  for (const auto& f : r.failures) s.report().add("failure", f);
  return r.ok() ? kExitOk : kExitFalse;
}

int cmd_normalize(Session& s, const Options& opt) {
  std::string text;
  if (!opt.matroid_path.empty()) {
    text = mf::emit_matroid_file(s.matroid_file(opt.matroid_path));
  } else if (!opt.family_path.empty()) {
    text = mf::emit_family_file(mf::parse_family_file(s.read(opt.family_path)));
  } else if (!opt.tasks_path.empty()) {
    text = mf::emit_task_file(mf::parse_task_file(s.read(opt.tasks_path)));
  } else {
    throw std::invalid_argument("normalize needs --matroid, --family or --tasks");
  }
  write_primary(opt, text);
  s.set_quiet(opt.report_path.empty());
  return kExitOk;
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += " ";
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid_forge: finite and finitary matroid workbench"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit the report as JSON");
  app.add_flag("--timing", opt.timing, "Include wall-clock timing in the report");
  app.add_option("--report", opt.report_path, "Write the report to this file");

  auto matroid_opt = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--matroid", opt.matroid_path, "Matroid file");
    if (required) o->required();
  };

  auto* axioms = app.add_subcommand("axioms", "Base-axiom checks");
  axioms->require_subcommand(1);
  auto* axioms_check = axioms->add_subcommand("check", "Check (B1), (B2), (BM)");
  matroid_opt(axioms_check);
  axioms_check->add_option("--family", opt.family_path, "Check this family's sets instead");

  auto* truncate = app.add_subcommand("truncate", "Truncate a finite matroid");
  matroid_opt(truncate);
  truncate->add_option("--level", opt.level, "k, -n or trivial")->required();
  truncate->add_option("--out", opt.out_path, "Write the matroid file here");

  auto* classify = app.add_subcommand("classify-truncation",
                                      "Find k with N the k-truncation of M");
  matroid_opt(classify);
  classify->add_option("--other", opt.other_path, "Matroid file for N")->required();

  auto* equiv = app.add_subcommand("equiv", "Strong equivalence and almost spanning");
  equiv->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> equiv_cmds;
  for (const char* name : {"strong", "almost-spans", "classify"}) {
    auto* c = equiv->add_subcommand(name, name);
    matroid_opt(c);
    c->add_option("--I", opt.i_arg, "Set expression or file")->required();
    if (std::string(name) != "classify") {
      c->add_option("--J", opt.j_arg, "Set expression or file")->required();
    }
    equiv_cmds.emplace_back(name, c);
  }

  auto* gentrunc = app.add_subcommand("gentrunc", "Generalised truncations");
  gentrunc->require_subcommand(1);
  auto* gt_verify = gentrunc->add_subcommand("verify", "Verify a finite family");
  matroid_opt(gt_verify);
  gt_verify->add_option("--family", opt.family_path, "Family file")->required();
  auto* gt_enum = gentrunc->add_subcommand("enumerate", "Enumerate all of them");
  matroid_opt(gt_enum);
  gt_enum->add_flag("--raw", opt.raw, "Brute force over all subfamilies");
  auto* gt_fin = gentrunc->add_subcommand("verify-finitary",
                                          "Verify a family of classes against tasks");
  matroid_opt(gt_fin);
  gt_fin->add_option("--family", opt.family_path, "Family file")->required();
  gt_fin->add_option("--tasks", opt.tasks_path, "Task file");
  gt_fin->add_option("--fuel", opt.fuel, "Search budget");

  auto* forcing = app.add_subcommand("forcing", "Finite-depth forcing step");
  forcing->require_subcommand(1);
  auto* f_step = forcing->add_subcommand("step", "Run one step to a given depth");
  matroid_opt(f_step);
  f_step->add_option("--family", opt.family_path, "Family file")->required();
  f_step->add_option("--task", opt.tasks_path, "Task file")->required();
  f_step->add_option("--task-index", opt.task_index, "Which task in the file");
  f_step->add_option("--depth", opt.depth, "Depth N")->required();
  f_step->add_option("--fuel", opt.fuel, "Search budget");
  auto* f_claims = forcing->add_subcommand("check-claims", "Check the step preconditions");
  matroid_opt(f_claims);
  f_claims->add_option("--family", opt.family_path, "Family file")->required();
  f_claims->add_option("--task", opt.tasks_path, "Task file")->required();
  f_claims->add_option("--task-index", opt.task_index, "Which task in the file");
  f_claims->add_option("--fuel", opt.fuel, "Search budget");
  auto* f_seed = forcing->add_subcommand("seed", "Seed family for a bit prefix");
  matroid_opt(f_seed, false);
  f_seed->add_option("--prefix", opt.prefix, "Bit string")->required();
  f_seed->add_option("--out", opt.out_path, "Write the family file here");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->require_subcommand(1);
  auto* st_lemmas = selftest->add_subcommand("lemmas", "Rank and equivalence laws");
  auto* st_oracle = selftest->add_subcommand("oracle", "Cross-checks against brute force");
  for (auto* c : {st_lemmas, st_oracle}) {
    c->add_option("--seed", opt.seed, "Random seed");
  }

  auto* normalize = app.add_subcommand("normalize", "Print a file in normal form");
  normalize->add_option("--matroid", opt.matroid_path, "Matroid file");
  normalize->add_option("--family", opt.family_path, "Family file");
  normalize->add_option("--tasks", opt.tasks_path, "Task file");
  normalize->add_option("--out", opt.out_path, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  const auto start = std::chrono::steady_clock::now();
  Session session(opt, echo(argc, argv));
  try {
    int code = kExitError;
    if (*axioms_check) {
      code = cmd_axioms(session, opt);
    } else if (*truncate) {
      code = cmd_truncate(session, opt);
    } else if (*classify) {
      code = cmd_classify_truncation(session, opt);
    } else if (*equiv) {
      for (const auto& [name, c] : equiv_cmds) {
        if (*c) code = cmd_equiv(session, opt, name);
      }
    } else if (*gt_verify) {
      code = cmd_gentrunc_verify(session, opt);
    } else if (*gt_enum) {
      code = cmd_gentrunc_enumerate(session, opt);
    } else if (*gt_fin) {
      code = cmd_gentrunc_verify_finitary(session, opt);
    } else if (*f_step) {
      code = cmd_forcing_step(session, opt);
    } else if (*f_claims) {
      code = cmd_forcing_check_claims(session, opt);
    } else if (*f_seed) {
      code = cmd_forcing_seed(session, opt);
    } else if (*st_lemmas) {
      code = cmd_selftest(session, opt, "lemmas");
    } else if (*st_oracle) {
      code = cmd_selftest(session, opt, "oracle");
    } else if (*normalize) {
      code = cmd_normalize(session, opt);
    }
    return session.finish(code, start);
  } catch (const mf::FuelExhausted& e) {
    session.report().add("error", e.what());
    std::cerr << "matroid_forge: " << e.what() << "\n";
    return session.finish(kExitUnknown, start);
  } catch (const std::exception& e) {
    std::cerr << "matroid_forge: " << e.what() << "\n";
    session.set_quiet(true);
    session.report().add("error", e.what());
    return session.finish(kExitError, start);
  }
}
