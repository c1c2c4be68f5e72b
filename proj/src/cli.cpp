#include "hol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "hol/checker.hpp"
#include "hol/errors.hpp"
#include "hol/kernel.hpp"
#include "hol/kuroda.hpp"
#include "hol/lemmas.hpp"
#include "hol/parse.hpp"
#include "hol/print.hpp"
#include "hol/prooffile.hpp"
#include "hol/transform.hpp"

namespace hol::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write " + out_path);
  f << text;
}

std::string describe_judgment(const Judgment& j) {
  std::string s;
  for (std::size_t i = 0; i < j.context.size(); ++i) {
    if (i) s += ", ";
    s += print_term(j.context[i]);
  }
  if (!j.context.empty()) s += " ";
  s += "|- " + print_term(j.goal);
  return s;
}

Signature load_signature(const std::string& path) {
  if (path.empty()) return {};
  return parse_signature(slurp(path));
}

std::vector<Term> parse_formula_lines(const std::string& text,
                                      const Signature& sig) {
  std::vector<Term> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_term(line, sig));
  }
  return out;
}

int do_check(const std::string& path, std::ostream& out) {
  DerivPtr d = load_proof(slurp(path));
  CheckResult r = check(d);
  if (r) {
    out << "accepted: " << describe_judgment(d->conclusion()) << "\n";
    return 0;
  }
  out << r.describe() << "\n";
  return 1;
}

int do_translate(const std::string& term_text, const std::string& formula_text,
                 bool normalize, const std::string& sig_path,
                 std::ostream& out) {
  Signature sig = load_signature(sig_path);
  Term input = parse_term(term_text.empty() ? formula_text : term_text, sig);
  Term result =
      term_text.empty() ? kuroda_formula(input) : kuroda_term(input);
  if (normalize) result = beta_normalize(result);
  out << print_term(result) << "\n";
  return 0;
}

int do_transform(const std::string& path, const std::string& out_path,
                 std::ostream& out) {
  DerivPtr d = load_proof(slurp(path));
  DerivPtr translated = soundness_translate(d);
  emit(store_proof(translated), out_path, out);
  return 0;
}

int do_reverse(const std::string& path, const std::string& gamma_path,
               const std::string& goal_text, const std::string& sig_path,
               const std::string& out_path, std::ostream& out) {
  Signature sig = load_signature(sig_path);
  DerivPtr di = load_proof(slurp(path));
  std::vector<Term> gamma;
  if (!gamma_path.empty())
    gamma = parse_formula_lines(slurp(gamma_path), sig);
  Term goal = parse_term(goal_text, sig);
  DerivPtr reversed = reverse_translate(gamma, goal, di);
  emit(store_proof(reversed), out_path, out);
  return 0;
}

int do_lemma(int id, const std::vector<std::string>& arg_texts,
             const std::string& sig_path, const std::string& out_path,
             std::ostream& out) {
  Signature sig = load_signature(sig_path);
  std::vector<Term> args;
  for (const std::string& text : arg_texts)
    args.push_back(parse_term(text, sig));
  DerivPtr d = dn_lemma(id, args, {});
  emit(store_proof(d), out_path, out);
  return 0;
}

int do_charac(const std::string& formula_text, const std::string& sig_path,
              const std::string& out_path, std::ostream& out) {
  Signature sig = load_signature(sig_path);
  Term a = parse_term(formula_text, sig);
  DerivPtr d = characterization_derivation(a);
  emit(store_proof(d), out_path, out);
  return 0;
}

int do_demo(const std::string& which, const std::string& out_path,
            std::ostream& out) {
  if (which == "reverse-counterexample") {
    ReverseCounterexample ce = reverse_counterexample();
    out << "gamma: " << print_term(ce.gamma[0]) << "\n";
    out << "goal:  " << print_term(ce.goal) << "\n";
    out << "note:  " << ce.note << "\n";
    std::string path =
        out_path.empty() ? "reverse-counterexample.proof" : out_path;
    emit(store_proof(ce.derivation), path, out);
    out << "proof of the translated judgment written to " << path << "\n";
    return 0;
  }
  CharacterizationCounterexample ce = characterization_counterexample();
  out << "predicate:   " << print_term(ce.predicate) << "\n";
  out << "formula:     " << print_term(ce.formula) << "\n";
  out << "translation: " << print_term(ce.translation) << "\n";
  out << "note:        " << ce.note << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  // Generated names restart at every invocation so output is a function
  // of the command alone.
  reset_fresh_counter();

  CLI::App app{"Kuroda's double-negation translation for higher-order logic"};
  app.require_subcommand(1);

  std::string proof_path, out_path, sig_path;
  std::string term_text, formula_text, gamma_path, goal_text;
  bool normalize = false;
  int lemma_id = 0;
  std::vector<std::string> lemma_args;
  std::string demo_which;

  CLI::App* c_check = app.add_subcommand("check", "check a proof file");
  c_check->add_option("prooffile", proof_path)->required();

  CLI::App* c_tr = app.add_subcommand("translate", "translate a term");
  c_tr->add_option("--term", term_text);
  c_tr->add_option("--formula", formula_text);
  c_tr->add_flag("--normalize", normalize);
  c_tr->add_option("--signature", sig_path);

  CLI::App* c_tf =
      app.add_subcommand("transform", "soundness-translate a classical proof");
  c_tf->add_option("prooffile", proof_path)->required();
  c_tf->add_option("--out", out_path);

  CLI::App* c_rev =
      app.add_subcommand("reverse", "reverse-translate an intuitionistic proof");
  c_rev->add_option("prooffile", proof_path)->required();
  c_rev->add_option("--gamma", gamma_path);
  c_rev->add_option("--goal", goal_text)->required();
  c_rev->add_option("--signature", sig_path);
  c_rev->add_option("--out", out_path);

  CLI::App* c_lem = app.add_subcommand("lemma", "emit a lemma derivation");
  c_lem->add_option("id", lemma_id)->required();
  c_lem->add_option("args", lemma_args);
  c_lem->add_option("--signature", sig_path);
  c_lem->add_option("--out", out_path);

  CLI::App* c_demo = app.add_subcommand("demo", "counter-example demos");
  c_demo->add_option("which", demo_which)
      ->required()
      ->check(CLI::IsMember({"reverse-counterexample",
                             "characterization-counterexample"}));
  c_demo->add_option("--out", out_path);

  CLI::App* c_ch =
      app.add_subcommand("charac", "derive |- A^Ku <=> A classically");
  c_ch->add_option("formula", formula_text)->required();
  c_ch->add_option("--signature", sig_path);
  c_ch->add_option("--out", out_path);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_check)) return do_check(proof_path, out);
    if (app.got_subcommand(c_tr)) {
      if (term_text.empty() == formula_text.empty()) {
        err << "translate needs exactly one of --term or --formula\n";
        return 2;
      }
      return do_translate(term_text, formula_text, normalize, sig_path, out);
    }
    if (app.got_subcommand(c_tf)) return do_transform(proof_path, out_path, out);
    if (app.got_subcommand(c_rev))
      return do_reverse(proof_path, gamma_path, goal_text, sig_path, out_path,
                        out);
    if (app.got_subcommand(c_lem))
      return do_lemma(lemma_id, lemma_args, sig_path, out_path, out);
    if (app.got_subcommand(c_demo)) return do_demo(demo_which, out_path, out);
    if (app.got_subcommand(c_ch))
      return do_charac(formula_text, sig_path, out_path, out);
    err << "no command\n";
    return 2;
  } catch (const InputDoesNotCheck& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace hol::cli
