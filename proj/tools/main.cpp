// collapse: command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "collapse/acceptance.hpp"
#include "collapse/io.hpp"

namespace {

using collapse::Error;
using collapse::io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

collapse::Automaton load_automaton(const std::string& path) {
  try {
    return collapse::io::parse_automaton(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compressing and collapsing words over two-letter automata"};
  app.require_subcommand(1);

  std::string file;
  std::string word;
  std::string patterns_file;
  std::vector<std::string> constraints;
  std::vector<std::string> families;
  int k = 3;
  int m = 3;
  int n = 4;
  int threads = default_threads();
  bool all = false;
  bool no_reduce = false;

  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
  };

  auto* classify = app.add_subcommand("classify", "Letter types, family and closed-form verdict of an automaton");
  classify->add_option("file", file, "Automaton JSON")->required();

  auto* compress = app.add_subcommand("compress", "Shortest k-compressing word of an automaton");
  compress->add_option("file", file, "Automaton JSON")->required();
  compress->add_option("--k", k, "Deficiency to reach")->required();

  auto* msa_dot = app.add_subcommand("msa-dot", "Graphviz rendering of the m-missing-state automaton");
  msa_dot->add_option("file", file, "Automaton JSON")->required();
  msa_dot->add_option("--m", m, "Missing-state threshold")->required();

  auto* verify_word = app.add_subcommand("verify-word", "Check a word against every k-compressible n-state automaton");
  verify_word->add_option("--word", word, "Word over {a,b}")->required();
  verify_word->add_option("--n", n, "State count")->required()->check(CLI::Range(2, 6));
  verify_word->add_option("--k", k, "Deficiency")->required();
  add_threads(verify_word);

  auto* verify_char = app.add_subcommand("verify-characterization", "Compare closed-form verdicts with the MSA oracle");
  verify_char->add_option("--n", n, "State count")->required()->check(CLI::Range(2, 8));
  verify_char->add_option("--family", families, "Family such as (3,p); repeatable; default all automata");
  verify_char->add_flag("--no-reduce", no_reduce, "Enumerate family runs without the witness reduction");
  add_threads(verify_char);

  auto* sweep5 = app.add_subcommand("sweep5", "Five-state sweep of s32 and its dual");
  add_threads(sweep5);

  auto* scs = app.add_subcommand("scs", "Shortest words containing every listed pattern");
  scs->add_option("--patterns", patterns_file, "One pattern per line")->required();
  scs->add_flag("--all", all, "List every optimal word");
  scs->add_option("--constraint", constraints, "Keep optima having a factor in this regex; repeatable");

  auto* certificate = app.add_subcommand("certificate", "Sufficient check for 3-collapsing words");
  certificate->add_option("--word", word, "Word over {a,b}")->required();

  auto* dump_words = app.add_subcommand("words", "Print s32, w3, u, v, L, W and W0");

  auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance suite");
  add_threads(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const collapse::SweepOptions sweep_opt{threads, !no_reduce};

    if (*classify) {
      const collapse::Automaton A = load_automaton(file);
      Json j;
      j["automaton"] = collapse::io::to_json(A);
      j["class"] = collapse::io::to_json(collapse::classify_automaton(A));
      j["characterization"] = collapse::io::to_json(collapse::characterize(A));
      print(j);
      return kOk;
    }
    if (*compress) {
      const collapse::Automaton A = load_automaton(file);
      print(collapse::io::to_json(collapse::shortest_compressing_word(A, k), k));
      return kOk;
    }
    if (*msa_dot) {
      const collapse::Automaton A = load_automaton(file);
      std::cout << collapse::export_dot(collapse::build_msa(A, m));
      return kOk;
    }
    if (*verify_word) {
      const collapse::SweepReport r = collapse::verify_word(collapse::Word(word), n, k, sweep_opt);
      print(collapse::io::to_json(r));
      return r.passed() ? kOk : kFailed;
    }
    if (*verify_char) {
      const collapse::SweepReport r = collapse::verify_characterization(n, families, sweep_opt);
      print(collapse::io::to_json(r));
      return r.passed() ? kOk : kFailed;
    }
    if (*sweep5) {
      const collapse::SweepReport r = collapse::five_state_pair_sweep(sweep_opt);
      print(collapse::io::to_json(r));
      return r.passed() ? kOk : kFailed;
    }
    if (*scs) {
      std::vector<collapse::Regex> regexes;
      for (const auto& c : constraints) regexes.push_back(collapse::Regex::parse(c));
      const bool filtering = !regexes.empty();
      collapse::ScsSolution sol = collapse::scs_solve(collapse::parse_pattern_list(read_file(patterns_file)), all || filtering);
      if (filtering) {
        sol = collapse::scs_filter(sol, regexes);
        if (!all && sol.words.size() > 1) sol.words.resize(1);
      }
      print(collapse::io::to_json(sol));
      if (sol.words.empty()) {
        std::cerr << "no optimal word satisfies the constraints\n";
        return kFailed;
      }
      return kOk;
    }
    if (*certificate) {
      const collapse::words::CertificateReport r = collapse::words::certificate_3_collapsing(collapse::Word(word));
      print(collapse::io::to_json(r));
      return r.is_certified ? kOk : kFailed;
    }
    if (*dump_words) {
      namespace w = collapse::words;
      const auto list = [](const std::vector<collapse::Word>& ws) {
        Json out = Json::array();
        for (const auto& x : ws) out.push_back(x.str());
        return out;
      };
      Json j;
      j["s32"] = w::kS32.str();
      j["w3"] = w::kW3.str();
      j["u"] = w::kU.str();
      j["v"] = w::kV.str();
      j["L"] = w::kLanguageL;
      j["dual_L"] = w::language_l_dual().to_string();
      j["W"] = list(w::set_w());
      j["W0"] = list(w::set_w0());
      print(j);
      return kOk;
    }
    if (*reproduce) {
      bool ok = true;
      collapse::acceptance::run_all({threads}, [&](const collapse::acceptance::CriterionResult& r) {
        ok = ok && r.passed;
        std::cout << collapse::acceptance::format_line(r) << '\n';
        for (const auto& note : r.notes) std::cout << "      " << note << '\n';
        std::cout.flush();
      });
      std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
      return ok ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
