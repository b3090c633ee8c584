// taufact: command-line front end for the tau-factorization library.
//
// Exit status: 0 success, 1 domain error or failed verification, 2 usage.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taufact/error.hpp"
#include "taufact/lemma_predictors.hpp"
#include "taufact/quotient.hpp"
#include "taufact/tau_engine.hpp"
#include "taufact/ufd.hpp"
#include "taufact/verify_suites.hpp"
#include "taufact/version.hpp"

using json = nlohmann::ordered_json;
using namespace taufact;

namespace {

struct Common {
  std::string ring = "zx";
  std::string ideal;
  std::string format = "json";
  unsigned budget = EnumerationBudget{}.max_primes;
  std::uint64_t seed = 1;
  bool timing = false;
};

RingTag ring_of(const std::string& s) { return s == "z" ? RingTag::IntegerRing : RingTag::IntPolyRing; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// "p1:e1, p2:e2" with the exponent optional.
std::vector<std::pair<Element, unsigned>> parse_primes(RingTag ring, const std::string& spec) {
  std::vector<std::pair<Element, unsigned>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw Error(ErrorCode::ParseError, "empty entry in primes spec '" + spec + "'");
    unsigned e = 1;
    const auto colon = item.find(':');
    std::string base = item;
    if (colon != std::string::npos) {
      base = trim(item.substr(0, colon));
      const std::string ex = trim(item.substr(colon + 1));
      if (ex.empty() || ex.size() > 4 || ex.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError, "bad exponent '" + ex + "' in primes spec");
      }
      e = static_cast<unsigned>(std::stoul(ex));
      if (e == 0) throw Error(ErrorCode::ParseError, "exponent 0 in primes spec");
    }
    out.emplace_back(parse_element(ring, base), e);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty primes spec");
  return out;
}

std::optional<TrustedRegistry> load_registry() {
  const char* path = std::getenv("TAUFACT_REGISTRY");
  if (path == nullptr || *path == '\0') return std::nullopt;
  return TrustedRegistry::load(path);
}

json lengths_json(const std::set<std::size_t>& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

json elasticity_json(const ElasticityReport& r) {
  json j;
  j["is_atomic"] = r.is_atomic;
  j["atomic_lengths"] = lengths_json(r.atomic_lengths);
  j["min_len"] = r.min_len ? json(*r.min_len) : json(nullptr);
  j["max_len"] = r.max_len ? json(*r.max_len) : json(nullptr);
  j["elasticity"] = r.elasticity ? json(r.elasticity->str()) : json(nullptr);
  j["factorization_count"] = r.factorization_count;
  j["atomic_count"] = r.atomic_count;
  return j;
}

std::string sign_str(Sign s) { return s > 0 ? "+" : "-"; }

json factorization_json(const TauFactorization& f) {
  json j;
  j["lambda"] = f.lambda;
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back(to_string(expand(b)));
  j["blocks"] = blocks;
  json factored = json::array();
  for (const auto& b : f.blocks) factored.push_back(to_string(b));
  j["block_factors"] = factored;
  json signs = json::array();
  for (Sign s : f.sign_witness) signs.push_back(sign_str(s));
  j["signs"] = signs;
  j["length"] = f.length();
  j["atom_blocks"] = f.atom_blocks;
  j["atomic"] = f.is_atomic();
  return j;
}

json cayley_json(const CayleyTable& t) {
  json res = json::array();
  for (const auto& r : t.residues()) res.push_back(to_string(r));
  json prod = json::array();
  json sum = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json prow = json::array();
    json srow = json::array();
    for (std::size_t j = 0; j < t.size(); ++j) {
      prow.push_back(to_string(t.residues()[t.product(i, j)]));
      srow.push_back(to_string(t.residues()[t.sum(i, j)]));
    }
    prod.push_back(prow);
    sum.push_back(srow);
  }
  json j;
  j["residues"] = res;
  j["product"] = prod;
  j["sum"] = sum;
  return j;
}

std::string cayley_text(const CayleyTable& t, bool product) {
  std::vector<std::string> names;
  std::size_t w = 1;
  for (const auto& r : t.residues()) {
    names.push_back(to_string(r));
    w = std::max(w, names.back().size());
  }
  std::ostringstream os;
  const auto cell = [&](const std::string& s) { os << std::left << std::setw(static_cast<int>(w) + 1) << s; };
  cell(product ? "*" : "+");
  os << "|";
  for (const auto& n : names) os << " " << std::setw(static_cast<int>(w)) << std::left << n;
  os << "\n" << std::string(w + 1, '-') << "+" << std::string(names.size() * (w + 1), '-') << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    cell(names[i]);
    os << "|";
    for (std::size_t j = 0; j < t.size(); ++j) {
      os << " " << std::setw(static_cast<int>(w)) << std::left
         << names[product ? t.product(i, j) : t.sum(i, j)];
    }
    os << "\n";
  }
  std::string text = os.str();
  std::string trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
  }
  return trimmed;
}

std::string cayley_table_text(const CayleyTable& t) { return cayley_text(t, true) + "\n" + cayley_text(t, false); }

// Everything a command produces: structured result plus text and csv renderings.
struct Output {
  json input = json::object();
  json result;
  std::string text;
  std::string csv;
  bool ok = true;
};

class Runner {
 public:
  explicit Runner(const Common& c) : common_(c) {}

  Ideal ideal() const { return parse_ideal(ring_of(common_.ring), common_.ideal); }
  EnumerationBudget budget() const {
    EnumerationBudget b;
    b.max_primes = common_.budget;
    return b;
  }

  FactoredElement element(const std::string& primes, int unit) const {
    if (unit != 1 && unit != -1) throw Error(ErrorCode::ParseError, "--unit must be 1 or -1");
    const auto registry = load_registry();
    return build_factored(ring_of(common_.ring), unit, parse_primes(ring_of(common_.ring), primes),
                          registry ? &*registry : nullptr);
  }

  void base_input(Output& out, bool with_ideal = true) const {
    out.input["ring"] = common_.ring;
    if (with_ideal) out.input["ideal"] = to_string(ideal());
  }

 private:
  const Common& common_;
};

Output cmd_reduce(const Runner& run, const Common& c, const std::string& elem) {
  Output out;
  const Ideal I = run.ideal();
  const Element e = parse_element(ring_of(c.ring), elem);
  run.base_input(out);
  out.input["elem"] = to_string(e);
  const std::string r = to_string(reduce(e, I));
  out.result = json::object({{"residue", r}});
  out.text = r + "\n";
  out.csv = "residue\n" + r + "\n";
  return out;
}

Output cmd_classify(const Runner& run) {
  Output out;
  const Ideal I = run.ideal();
  run.base_input(out);
  const CayleyTable table(I);
  const QuotientFingerprint fp = fingerprint(table);
  const std::string cls(to_string(classify(fp)));
  out.result["iso_class"] = cls;
  out.result["fingerprint"] = json::object({{"size", fp.size},
                                            {"characteristic", fp.characteristic},
                                            {"nilpotents", fp.nilpotent_count},
                                            {"idempotents", fp.idempotent_count},
                                            {"units", fp.unit_count}});
  out.result["table"] = cayley_json(table);
  std::ostringstream t;
  t << "ideal: " << to_string(I) << "\n"
    << "class: " << cls << "\n"
    << "size=" << fp.size << " characteristic=" << fp.characteristic << " nilpotents=" << fp.nilpotent_count
    << " idempotents=" << fp.idempotent_count << " units=" << fp.unit_count << "\n\n"
    << cayley_table_text(table);
  out.text = t.str();
  std::ostringstream csv;
  csv << "iso_class,size,characteristic,nilpotents,idempotents,units\n"
      << cls << "," << fp.size << "," << fp.characteristic << "," << fp.nilpotent_count << ","
      << fp.idempotent_count << "," << fp.unit_count << "\n";
  out.csv = csv.str();
  return out;
}

Output cmd_factorizations(const Runner& run, const std::string& primes, int unit) {
  Output out;
  const Ideal I = run.ideal();
  const FactoredElement fe = run.element(primes, unit);
  run.base_input(out);
  out.input["element"] = to_string(expand(fe));
  out.input["factored"] = to_string(fe);
  const TauEngine engine(run.budget());
  const auto fs = engine.factorizations(fe, I);
  out.result = json::array();
  std::ostringstream t, csv;
  csv << "index,length,lambda,blocks,signs,atomic\n";
  std::size_t idx = 0;
  for (const auto& f : fs) {
    out.result.push_back(factorization_json(f));
    std::string blocks, signs;
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
      blocks += (b ? " " : "") + to_string(expand(f.blocks[b]));
      signs += sign_str(f.sign_witness[b]);
    }
    t << "[" << idx << "] length=" << f.length() << " lambda=" << f.lambda << " signs=" << signs
      << (f.is_atomic() ? " atomic" : "") << "\n";
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
      t << "    " << to_string(expand(f.blocks[b])) << " = " << to_string(f.blocks[b])
        << (f.atom_blocks[b] ? " (atom)" : "") << "\n";
    }
    csv << idx << "," << f.length() << "," << f.lambda << "," << blocks << "," << signs << ","
        << (f.is_atomic() ? "true" : "false") << "\n";
    ++idx;
  }
  out.text = t.str();
  out.csv = csv.str();
  return out;
}

std::string lengths_text(const std::set<std::size_t>& s) {
  std::string out;
  for (std::size_t v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

Output cmd_elasticity(const Runner& run, const std::string& primes, int unit) {
  Output out;
  const Ideal I = run.ideal();
  const FactoredElement fe = run.element(primes, unit);
  run.base_input(out);
  out.input["element"] = to_string(expand(fe));
  out.input["factored"] = to_string(fe);
  const ElasticityReport r = TauEngine(run.budget()).elasticity(fe, I);
  out.result = elasticity_json(r);
  const auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  const std::string el = r.elasticity ? r.elasticity->str() : "-";
  std::ostringstream t;
  t << "is_atomic: " << (r.is_atomic ? "true" : "false") << "\n"
    << "atomic_lengths: " << lengths_text(r.atomic_lengths) << "\n"
    << "min_len: " << opt(r.min_len) << "\n"
    << "max_len: " << opt(r.max_len) << "\n"
    << "elasticity: " << el << "\n"
    << "factorization_count: " << r.factorization_count << "\n"
    << "atomic_count: " << r.atomic_count << "\n";
  out.text = t.str();
  std::ostringstream csv;
  csv << "is_atomic,atomic_lengths,min_len,max_len,elasticity,factorization_count,atomic_count\n"
      << (r.is_atomic ? "true" : "false") << "," << lengths_text(r.atomic_lengths) << "," << opt(r.min_len) << ","
      << opt(r.max_len) << "," << el << "," << r.factorization_count << "," << r.atomic_count << "\n";
  out.csv = csv.str();
  return out;
}

Output cmd_verify(const Common& c, const std::string& suite, const SuiteOptions& opts) {
  Output out;
  out.input["suite"] = suite;
  out.input["samples"] = opts.samples;
  out.input["seed"] = c.seed;
  out.input["budget"] = c.budget;
  out.input["max_i"] = opts.max_i;
  const SuiteReport rep = run_suite(suite, opts);
  json cases = json::array();
  std::ostringstream t, csv;
  csv << "suite,index,pass\n";
  std::size_t idx = 0;
  for (const auto& cr : rep.cases) {
    cases.push_back(json::object({{"label", cr.label}, {"pass", cr.pass}, {"detail", cr.detail}}));
    t << (cr.pass ? "PASS " : "FAIL ") << cr.label << ": " << cr.detail << "\n";
    csv << rep.suite << "," << idx++ << "," << (cr.pass ? "true" : "false") << "\n";
  }
  out.result["suite"] = rep.suite;
  out.result["cases"] = cases;
  out.result["summary"] = json::object({{"total", rep.cases.size()}, {"passed", rep.passed()}, {"failed", rep.failed()}});
  t << rep.suite << ": " << rep.passed() << "/" << rep.cases.size() << " passed\n";
  out.text = t.str();
  out.csv = csv.str();
  out.ok = rep.ok();
  return out;
}

Output cmd_sequence(const Runner& run, unsigned max_i) {
  if (max_i < 1) throw Error(ErrorCode::ParseError, "--max-i must be at least 1");
  Output out;
  const Ideal I = model_ideal(IsoClass::Z2X_X2PX);
  out.input["ideal"] = to_string(I);
  out.input["max_i"] = max_i;
  const TauEngine engine(run.budget());
  out.result = json::array();
  std::ostringstream t, csv;
  csv << "i,min_len,max_len,elasticity\n";
  t << "i  min_len  max_len  elasticity\n";
  for (unsigned i = 1; i <= max_i; ++i) {
    const ElasticityReport r = engine.elasticity(sequence_element(i), I);
    if (!r.is_atomic) throw Error(ErrorCode::InternalCheckFailed, "sequence element is not atomic");
    const std::string el = r.elasticity->str();
    out.result.push_back(json::object({{"i", i}, {"min_len", *r.min_len}, {"max_len", *r.max_len}, {"elasticity", el}}));
    csv << i << "," << *r.min_len << "," << *r.max_len << "," << el << "\n";
    t << std::left << std::setw(3) << i << std::setw(9) << *r.min_len << std::setw(9) << *r.max_len << el << "\n";
  }
  out.text = t.str();
  out.csv = csv.str();
  return out;
}

void emit(const Common& c, const std::string& command, Output& out, std::optional<double> elapsed_ms) {
  if (c.format == "text") {
    std::cout << out.text;
  } else if (c.format == "csv") {
    std::cout << out.csv;
  } else {
    json rec;
    rec["command"] = command;
    rec["version"] = kVersion;
    rec["input"] = out.input;
    rec["result"] = out.result;
    if (elapsed_ms) rec["timing"] = json::object({{"elapsed_ms", *elapsed_ms}});
    std::cout << rec.dump(2) << "\n";
  }
}

void add_common(CLI::App* sub, Common& c, bool needs_ideal) {
  sub->add_option("--ring", c.ring, "Ring: z or zx")->check(CLI::IsMember({"z", "zx"}))->capture_default_str();
  auto* ideal = sub->add_option("--ideal", c.ideal, "Ideal, \"m\" or \"m, g\"");
  if (needs_ideal) ideal->required();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--budget", c.budget, "Maximum total prime multiplicity")->capture_default_str();
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_flag("--timing", c.timing, "Add wall-clock timing to JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorizations, atoms and elasticity modulo an ideal in Z and Z[x]"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  std::string elem, primes, suite;
  int unit = 1;
  unsigned max_i_verify = 5, max_i_seq = 4;
  SuiteOptions sopts;

  auto* reduce_cmd = app.add_subcommand("reduce", "Canonical residue of an element");
  add_common(reduce_cmd, common, true);
  reduce_cmd->add_option("--elem", elem, "Element")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Iso class, fingerprint and Cayley tables of R/I");
  add_common(classify_cmd, common, true);

  auto* fact_cmd = app.add_subcommand("factorizations", "Every tau-factorization of an element");
  add_common(fact_cmd, common, true);
  fact_cmd->add_option("--primes", primes, "Prime factorization \"p1:e1, p2:e2\"")->required();
  fact_cmd->add_option("--unit", unit, "Unit, 1 or -1")->capture_default_str();

  auto* el_cmd = app.add_subcommand("elasticity", "Atomic lengths and elasticity of an element");
  add_common(el_cmd, common, true);
  el_cmd->add_option("--primes", primes, "Prime factorization \"p1:e1, p2:e2\"")->required();
  el_cmd->add_option("--unit", unit, "Unit, 1 or -1")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run a predictor-versus-oracle suite");
  add_common(verify_cmd, common, false);
  verify_cmd->add_option("suite", suite, "lemma1..lemma4, main, hfd-z-small")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames), std::end(kSuiteNames))));
  verify_cmd->add_option("--samples", sopts.samples, "Random censuses per suite")->capture_default_str();
  verify_cmd->add_option("--max-i", max_i_verify, "Largest i for the main suite")->capture_default_str();

  auto* seq_cmd = app.add_subcommand("sequence", "Elasticity of x^i (x+1)^i under (2, x^2+x)");
  add_common(seq_cmd, common, false);
  seq_cmd->add_option("--max-i", max_i_seq, "Largest i")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const Runner run(common);
  const auto start = std::chrono::steady_clock::now();
  try {
    Output out;
    if (sub == reduce_cmd) {
      out = cmd_reduce(run, common, elem);
    } else if (sub == classify_cmd) {
      out = cmd_classify(run);
    } else if (sub == fact_cmd) {
      out = cmd_factorizations(run, primes, unit);
    } else if (sub == el_cmd) {
      out = cmd_elasticity(run, primes, unit);
    } else if (sub == verify_cmd) {
      sopts.seed = common.seed;
      sopts.budget = run.budget();
      sopts.max_i = max_i_verify;
      out = cmd_verify(common, suite, sopts);
    } else {
      out = cmd_sequence(run, max_i_seq);
    }
    std::optional<double> elapsed;
    if (common.timing) {
      elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(common, command, out, elapsed);
    return out.ok ? 0 : 1;
  } catch (const Error& e) {
    json err;
    err["error"] = std::string(to_string(e.code()));
    err["detail"] = e.detail();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
