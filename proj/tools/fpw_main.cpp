// fpw: command-line front end. Talks to the library only through fpw.h.
//
// Exit codes: 0 success, 1 invalid input or failed check, 2 search exhausted,
// 64 usage error.

#include <fpw/fpw.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 64;

constexpr std::uint64_t kDefaultHomBudget = 100000;
constexpr std::uint64_t kDefaultSearchSteps = 1000000;
constexpr std::uint64_t kDefaultCandidates = 100000;
constexpr std::uint64_t kDefaultMoveBudget = 10000;

// Raised when a library call fails; carries the exit code to use.
struct Failure {
  int code;
};

struct StringDeleter {
  void operator()(char* s) const { fpw_string_free(s); }
};
using Owned = std::unique_ptr<char, StringDeleter>;

struct PresentationDeleter {
  void operator()(fpw_presentation* p) const { fpw_presentation_free(p); }
};
using Presentation = std::unique_ptr<fpw_presentation, PresentationDeleter>;

struct OracleDeleter {
  void operator()(fpw_oracle* o) const { fpw_oracle_free(o); }
};
using Oracle = std::unique_ptr<fpw_oracle, OracleDeleter>;

struct StreamDeleter {
  void operator()(fpw_stream* s) const { fpw_stream_free(s); }
};
using Stream = std::unique_ptr<fpw_stream, StreamDeleter>;

// Throws on errors; returns true for FPW_OK and false for FPW_EXHAUSTED.
bool check(fpw_status st) {
  if (st == FPW_OK) return true;
  if (st == FPW_EXHAUSTED) return false;
  std::cerr << "error: " << fpw_status_name(st) << ": " << fpw_last_error() << "\n";
  throw Failure{kExitDomain};
}

std::string take(char* s) {
  Owned owned(s);
  return s ? std::string(s) : std::string();
}

// Options shared by the subcommands.
struct Options {
  std::string m = "2", n = "3";
  std::uint64_t index = 1;
  std::string p, q;
  std::string map;
  std::uint64_t budget = 0;
  bool budget_set = false;
  std::uint64_t candidates = kDefaultCandidates;
  std::string set;
  std::uint64_t kmax = 4;
  bool json = false;
  bool compact = false;
  bool syllables = false;
  std::uint64_t count = 20;
  std::string oracle = "bs";
  std::string gens;
  std::string moves, move;
  std::string word_check;
  std::string cert;
  std::vector<std::string> words;
  std::vector<std::uint64_t> nums;
};

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) { return o.budget_set ? o.budget : fallback; }

// `-p`/`-q` take a file path; text starting with '<' is read inline.
std::string presentation_text(const std::string& arg) {
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '<') return arg;
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot read presentation file '" << arg << "'\n";
    throw Failure{kExitDomain};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Presentation load(const std::string& arg) {
  fpw_presentation* raw = nullptr;
  check(fpw_presentation_parse(presentation_text(arg).c_str(), &raw));
  return Presentation(raw);
}

// Defaults to BS(m,n) when no presentation is given.
Presentation load_or_bs(const Options& o) {
  if (!o.p.empty()) return load(o.p);
  fpw_presentation* raw = nullptr;
  check(fpw_presentation_bs(o.m.c_str(), o.n.c_str(), &raw));
  return Presentation(raw);
}

// "bs" (uses -m/-n), "cyclic:N" (N = 0 for Z), "tower:K".
Oracle make_oracle(const Options& o) {
  fpw_oracle* raw = nullptr;
  const std::string& choice = o.oracle;
  auto number = [&](std::size_t from) -> std::uint64_t {
    std::string digits = choice.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      std::cerr << "error: bad oracle '" << choice << "'\n";
      throw Failure{kExitUsage};
    }
    return std::stoull(digits);
  };
  if (choice == "bs")
    check(fpw_oracle_bs(o.m.c_str(), o.n.c_str(), &raw));
  else if (choice.rfind("cyclic:", 0) == 0)
    check(fpw_oracle_cyclic(number(7), &raw));
  else if (choice.rfind("tower:", 0) == 0)
    check(fpw_oracle_tower(number(6), &raw));
  else
    number(choice.size());  // reports the bad oracle name
  return Oracle(raw);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::string map_text(const Json& m) {
  std::string out;
  for (std::size_t i = 0; i < m["domain"].size(); ++i) {
    if (i) out += ",";
    out += m["domain"][i].get<std::string>() + "=" + m["images"][i].get<std::string>();
  }
  return out;
}

std::string abelian_text(const Json& a) {
  std::vector<std::string> parts;
  auto rank = a["free_rank"].get<std::uint64_t>();
  if (rank == 1) parts.push_back("Z");
  else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& d : a["torsion"]) parts.push_back("Z/" + d.get<std::string>());
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

// ---- subcommands ----

int cmd_reduce(const Options& o) {
  Presentation p = o.p.empty() ? nullptr : load(o.p);
  char* out = nullptr;
  check(fpw_reduce(p.get(), o.words[0].c_str(), o.compact, &out));
  std::string w = take(out);
  emit(o, {{"word", w}}, w);
  return kExitOk;
}

int cmd_bs_triv(const Options& o) {
  int t = 0;
  check(fpw_bs_is_trivial(o.m.c_str(), o.n.c_str(), o.words[0].c_str(), &t));
  emit(o, {{"trivial", t != 0}}, t ? "trivial" : "nontrivial");
  return kExitOk;
}

int cmd_bs_equal(const Options& o) {
  int eq = 0;
  check(fpw_bs_equal(o.m.c_str(), o.n.c_str(), o.words[0].c_str(), o.words[1].c_str(), &eq));
  emit(o, {{"equal", eq != 0}}, eq ? "equal" : "not equal");
  return kExitOk;
}

int cmd_bs_reduce(const Options& o) {
  char* out = nullptr;
  check(fpw_bs_reduce(o.m.c_str(), o.n.c_str(), o.words[0].c_str(), &out));
  std::string s = take(out);
  emit(o, {{"syllables", s}}, s);
  return kExitOk;
}

int cmd_apply_f(const Options& o) {
  char* out = nullptr;
  check(fpw_apply_f(o.words[0].c_str(), o.index, o.syllables ? 1 : 0, &out));
  std::string s = take(out);
  emit(o, {{"word", s}}, s);
  return kExitOk;
}

int cmd_wfam(const Options& o) {
  char* out = nullptr;
  check(fpw_w_family(o.index, o.compact, &out));
  std::string s = take(out);
  emit(o, {{"index", o.index}, {"word", s}}, s);
  return kExitOk;
}

int cmd_kernel_enum(const Options& o) {
  fpw_stream* raw = nullptr;
  check(fpw_kernel_stream_new(o.index, &raw));
  Stream s(raw);
  Json all = Json::array();
  std::string text;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    char* w = nullptr;
    check(fpw_stream_next(s.get(), o.compact, &w, nullptr));
    std::string word = take(w);
    all.push_back(word);
    text += (i ? "\n" : "") + word;
  }
  emit(o, all, text);
  return kExitOk;
}

int cmd_enum_trivial(const Options& o) {
  Presentation p = load_or_bs(o);
  fpw_stream* raw = nullptr;
  check(fpw_trivial_stream_new(p.get(), &raw));
  Stream s(raw);
  Json all = Json::array();
  std::string text;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    char* w = nullptr;
    char* c = nullptr;
    check(fpw_stream_next(s.get(), o.compact, &w, &c));
    std::string word = take(w);
    all.push_back({{"word", word}, {"certificate", Json::parse(take(c))}});
    text += (i ? "\n" : "") + word;
  }
  emit(o, all, text);
  return kExitOk;
}

int cmd_check_cert(const Options& o) {
  Presentation p = load_or_bs(o);
  char* out = nullptr;
  check(fpw_certificate_word(p.get(), o.cert.c_str(), &out));
  std::string product = take(out);
  if (o.word_check.empty() && !o.json) {
    std::cout << product << "\n";
    return kExitOk;
  }
  Json j{{"word", product}};
  if (o.word_check.empty()) {
    emit(o, j, product);
    return kExitOk;
  }
  char* expected = nullptr;
  check(fpw_reduce(p.get(), o.word_check.c_str(), 0, &expected));
  bool match = take(expected) == product;
  j["valid"] = match;
  emit(o, j, match ? "valid" : "invalid: certificate evaluates to " + product);
  return match ? kExitOk : kExitDomain;
}

int cmd_abelian(const Options& o) {
  Presentation p = load_or_bs(o);
  char* out = nullptr;
  check(fpw_abelianization(p.get(), &out));
  Json a = Json::parse(take(out));
  emit(o, a, abelian_text(a));
  return kExitOk;
}

int cmd_perfect(const Options& o) {
  Presentation p = load_or_bs(o);
  int perfect = 0;
  check(fpw_is_perfect(p.get(), &perfect));
  emit(o, {{"perfect", perfect != 0}}, perfect ? "perfect" : "not perfect");
  return kExitOk;
}

int cmd_hom_check(const Options& o) {
  Presentation p = load_or_bs(o);
  Presentation q = o.q.empty() ? load_or_bs(o) : load(o.q);
  char* certs = nullptr;
  std::uint64_t steps = 0;
  if (!check(fpw_hom_check(p.get(), q.get(), o.map.c_str(), budget_or(o, kDefaultHomBudget), &certs, &steps))) {
    emit(o, {{"verdict", "exhausted"}, {"steps", steps}}, "exhausted after " + std::to_string(steps) + " steps");
    return kExitExhausted;
  }
  Json c = Json::parse(take(certs));
  std::string text = "homomorphism (" + std::to_string(steps) + " steps)";
  for (std::size_t i = 0; i < c.size(); ++i) text += "\nrelator " + std::to_string(i) + ": " + c[i].dump();
  emit(o, {{"verdict", "homomorphism"}, {"steps", steps}, {"certificates", c}}, text);
  return kExitOk;
}

int cmd_hom_decide(const Options& o) {
  Presentation p = load_or_bs(o);
  Presentation q = o.q.empty() ? load_or_bs(o) : load(o.q);
  Oracle oracle = make_oracle(o);
  int hom = 0;
  check(fpw_hom_decide(p.get(), q.get(), o.map.c_str(), oracle.get(), &hom));
  emit(o, {{"homomorphism", hom != 0}}, hom ? "homomorphism" : "not a homomorphism");
  return kExitOk;
}

int cmd_iso_search(const Options& o) {
  Presentation p = load_or_bs(o);
  Presentation q = load(o.q);
  char* witness = nullptr;
  std::uint64_t steps = 0;
  if (!check(fpw_iso_search(p.get(), q.get(), o.candidates, budget_or(o, kDefaultSearchSteps), &witness, &steps))) {
    emit(o, {{"verdict", "exhausted"}, {"steps", steps}}, "exhausted after " + std::to_string(steps) + " steps");
    return kExitExhausted;
  }
  Json w = Json::parse(take(witness));
  emit(o, w,
       "isomorphic (candidate " + w["candidate"].dump() + ", " + std::to_string(steps) + " steps)\nforward: " +
           map_text(w["forward"]) + "\nbackward: " + map_text(w["backward"]));
  return kExitOk;
}

int cmd_subgroup(const Options& o) {
  Presentation p = load_or_bs(o);
  Presentation q = load(o.q);
  Oracle oracle = make_oracle(o);
  char* result = nullptr;
  std::uint64_t steps = 0;
  if (!check(fpw_subgroup_search(p.get(), oracle.get(), o.gens.c_str(), q.get(), o.candidates,
                                 budget_or(o, kDefaultSearchSteps), &result, &steps))) {
    emit(o, {{"verdict", "exhausted"}, {"steps", steps}}, "exhausted after " + std::to_string(steps) + " steps");
    return kExitExhausted;
  }
  Json r = Json::parse(take(result));
  const Json& lift = r["lift"];
  std::ostringstream text;
  text << "presentation: " << r["presentation"].get<std::string>() << "\n"
       << "relators used: " << r["k"] << "\n"
       << "forward: " << map_text(r["witness"]["forward"]) << "\n"
       << "backward: " << map_text(r["witness"]["backward"]) << "\n"
       << "lift: " << lift["map"].get<std::string>() << " (homomorphism "
       << (lift["homomorphism_verified"].get<bool>() ? "verified" : "not verified") << ", injectivity "
       << (lift["injectivity_certified"].get<bool>() ? "certified" : "not certified") << ")";
  emit(o, r, text.str());
  return kExitOk;
}

// `--moves`/`--move` take JSON text, or a file path when not starting with '[' or '{'.
std::string json_arg(const std::string& arg) {
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return arg;
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot read '" << arg << "'\n";
    throw Failure{kExitDomain};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_tietze_apply(const Options& o) {
  Presentation p = load_or_bs(o);
  char* out = nullptr;
  check(fpw_tietze_apply(p.get(), json_arg(o.moves).c_str(), &out));
  Json r = Json::parse(take(out));
  std::string text = r["presentation"].get<std::string>();
  for (const auto& entry : r["log"]) text += "\n" + entry.dump();
  emit(o, r, text);
  return kExitOk;
}

int cmd_tietze_check(const Options& o) {
  Presentation p = load_or_bs(o);
  char* out = nullptr;
  fpw_status st = fpw_tietze_check(p.get(), json_arg(o.move).c_str(), budget_or(o, kDefaultMoveBudget), &out);
  if (!out) check(st);  // argument errors produce no verdict
  Json r = Json::parse(take(out));
  std::string text = r["verdict"].get<std::string>();
  if (r.contains("reason")) text += ": " + r["reason"].get<std::string>();
  if (r.contains("certificate")) text += "\ncertificate: " + r["certificate"].dump();
  emit(o, r, text);
  if (st == FPW_OK) return kExitOk;
  return st == FPW_EXHAUSTED ? kExitExhausted : kExitDomain;
}

int cmd_pair(const Options& o) {
  std::uint64_t z = o.nums[0];
  for (std::size_t i = 1; i < o.nums.size(); ++i) check(fpw_cantor_pair(z, o.nums[i], &z));
  emit(o, {{"pair", z}}, std::to_string(z));
  return kExitOk;
}

int cmd_unpair(const Options& o) {
  std::uint64_t x = 0, y = 0;
  check(fpw_cantor_unpair(o.nums[0], &x, &y));
  emit(o, {{"x", x}, {"y", y}}, std::to_string(x) + " " + std::to_string(y));
  return kExitOk;
}

int cmd_compress(const Options& o) {
  std::vector<std::uint64_t> out(o.nums.size());
  std::size_t n = 0;
  check(fpw_compress(o.nums.data(), o.nums.size(), out.data(), &n));
  out.resize(n);
  std::string text;
  for (std::size_t i = 0; i < n; ++i) text += (i ? " " : "") + std::to_string(out[i]);
  emit(o, out, text);
  return kExitOk;
}

int cmd_demo_non_hopfian(const Options& o) {
  char* report = nullptr;
  int pass = 0;
  check(fpw_demo_non_hopfian(&report, &pass));
  std::string r = take(report);
  while (!r.empty() && r.back() == '\n') r.pop_back();
  emit(o, {{"all_pass", pass != 0}, {"report", r}}, r);
  return pass ? kExitOk : kExitDomain;
}

int cmd_demo_recover(const Options& o) {
  std::uint64_t k = 0;
  check(fpw_recover_cardinality(o.set.c_str(), o.kmax, &k));
  emit(o, {{"cardinality", k}}, "|W| = " + std::to_string(k));
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"fpw: a workbench for finitely and recursively presented groups"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "JSON output");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto bs_flags = [&](CLI::App* sub) {
    sub->add_option("-m", o.m, "BS parameter m")->capture_default_str();
    sub->add_option("-n", o.n, "BS parameter n")->capture_default_str();
  };
  auto p_flag = [&](CLI::App* sub, const char* help) { sub->add_option("-p", o.p, help); };
  auto budget_flag = [&](CLI::App* sub, std::uint64_t fallback) {
    sub->add_option_function<std::uint64_t>(
           "--budget", [&](std::uint64_t b) { o.budget = b, o.budget_set = true; }, "step budget")
        ->default_str(std::to_string(fallback));
  };
  auto word_arg = [&](CLI::App* sub, int count) {
    sub->add_option("words", o.words, "word(s)")->required()->expected(count);
  };

  CLI::App* sub = add("reduce", "free reduction of a word", cmd_reduce);
  p_flag(sub, "presentation supplying the alphabet");
  sub->add_flag("--compact", o.compact, "write runs as powers");
  word_arg(sub, 1);

  sub = add("bs-triv", "decide triviality in BS(m,n)", cmd_bs_triv);
  bs_flags(sub);
  word_arg(sub, 1);

  sub = add("bs-equal", "decide equality in BS(m,n)", cmd_bs_equal);
  bs_flags(sub);
  word_arg(sub, 2);

  sub = add("bs-reduce", "Britton-reduced syllable form", cmd_bs_reduce);
  bs_flags(sub);
  word_arg(sub, 1);

  sub = add("apply-f", "apply the i-th iterate of s->s, t->t^2", cmd_apply_f);
  sub->add_option("-i", o.index, "iterate")->capture_default_str();
  sub->add_flag("--syllables", o.syllables, "syllable form (handles huge iterates)");
  word_arg(sub, 1);

  sub = add("wfam", "the i-th word of the kernel family", cmd_wfam);
  sub->add_option("-i", o.index, "index")->capture_default_str();
  sub->add_flag("--compact", o.compact, "write runs as powers");

  sub = add("kernel-enum", "enumerate the kernel of the i-th iterate", cmd_kernel_enum);
  sub->add_option("-i", o.index, "iterate")->capture_default_str();
  sub->add_option("--count", o.count, "number of words")->capture_default_str();
  sub->add_flag("--compact", o.compact, "write runs as powers");

  sub = add("enum-trivial", "enumerate certified trivial words", cmd_enum_trivial);
  bs_flags(sub);
  p_flag(sub, "presentation (default BS(m,n))");
  sub->add_option("--count", o.count, "number of words")->capture_default_str();
  sub->add_flag("--compact", o.compact, "write runs as powers");

  sub = add("check-cert", "evaluate a certificate, optionally against a word", cmd_check_cert);
  bs_flags(sub);
  p_flag(sub, "presentation (default BS(m,n))");
  sub->add_option("--word", o.word_check, "expected word");
  sub->add_option("certificate", o.cert, "certificate JSON")->required();

  sub = add("abelian", "abelian invariants", cmd_abelian);
  bs_flags(sub);
  p_flag(sub, "presentation (default BS(m,n))");

  sub = add("perfect", "decide perfectness", cmd_perfect);
  bs_flags(sub);
  p_flag(sub, "presentation (default BS(m,n))");

  sub = add("hom-check", "semi-decide that a map is a homomorphism", cmd_hom_check);
  bs_flags(sub);
  p_flag(sub, "domain (default BS(m,n))");
  sub->add_option("-q", o.q, "codomain (default BS(m,n))");
  sub->add_option("--map", o.map, "generator map, e.g. s=s,t=t^2")->required();
  budget_flag(sub, kDefaultHomBudget);

  sub = add("hom-decide", "decide homomorphism with a codomain oracle", cmd_hom_decide);
  bs_flags(sub);
  p_flag(sub, "domain (default BS(m,n))");
  sub->add_option("-q", o.q, "codomain (default BS(m,n))");
  sub->add_option("--map", o.map, "generator map")->required();
  sub->add_option("--oracle", o.oracle, "bs, cyclic:N or tower:K")->capture_default_str();

  sub = add("iso-search", "search for an isomorphism", cmd_iso_search);
  bs_flags(sub);
  p_flag(sub, "first presentation (default BS(m,n))");
  sub->add_option("-q", o.q, "second presentation")->required();
  sub->add_option("--candidates", o.candidates, "candidate budget")->capture_default_str();
  budget_flag(sub, kDefaultSearchSteps);

  sub = add("subgrp-presentation", "search for a presentation of a subgroup", cmd_subgroup);
  bs_flags(sub);
  p_flag(sub, "ambient presentation (default BS(m,n))");
  sub->add_option("--oracle", o.oracle, "word-problem oracle: bs, cyclic:N or tower:K")->capture_default_str();
  sub->add_option("--gens", o.gens, "comma-separated subgroup generators")->required();
  sub->add_option("-q", o.q, "target presentation")->required();
  sub->add_option("--candidates", o.candidates, "candidate budget")->capture_default_str();
  budget_flag(sub, kDefaultSearchSteps);

  sub = add("tietze-apply", "apply a sequence of Tietze moves", cmd_tietze_apply);
  bs_flags(sub);
  p_flag(sub, "presentation (default BS(m,n))");
  sub->add_option("--moves", o.moves, "JSON array of moves, or a file")->required();

  sub = add("tietze-check", "check a single Tietze move", cmd_tietze_check);
  bs_flags(sub);
  p_flag(sub, "presentation (default BS(m,n))");
  sub->add_option("--move", o.move, "JSON move, or a file")->required();
  budget_flag(sub, kDefaultMoveBudget);

  sub = add("pair", "Cantor pairing (folds left for more than two)", cmd_pair);
  sub->add_option("values", o.nums, "naturals")->required()->expected(2, 1 << 20);

  sub = add("unpair", "inverse Cantor pairing", cmd_unpair);
  sub->add_option("value", o.nums, "natural")->required()->expected(1);

  sub = add("compress", "compress a finite list onto an initial segment", cmd_compress);
  sub->add_option("values", o.nums, "naturals")->expected(0, 1 << 20);

  CLI::App* demo = app.add_subcommand("demo", "demonstrations");
  demo->require_subcommand(1);
  CLI::App* nh = demo->add_subcommand("non-hopfian", "machine-check that BS(2,3) is not Hopfian");
  nh->add_flag("--json", o.json, "JSON output");
  nh->callback([&] { action = cmd_demo_non_hopfian; });
  CLI::App* rc = demo->add_subcommand("recover-card", "recover |W| through the quotient tower");
  rc->add_flag("--json", o.json, "JSON output");
  rc->add_option("--set", o.set, "comma-separated naturals")->required();
  rc->add_option("--kmax", o.kmax, "largest iterate probed")->capture_default_str();
  rc->callback([&] { action = cmd_demo_recover; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action(o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
