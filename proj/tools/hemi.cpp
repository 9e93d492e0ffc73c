#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hemi/congr.hpp"
#include "hemi/document.hpp"
#include "hemi/finord.hpp"
#include "hemi/kalman.hpp"
#include "hemi/search.hpp"
#include "hemi/varieties.hpp"

using namespace hemi;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct Options {
  std::string file;
  std::string output;
  std::string level;
  std::string theta;
  std::string label;
  std::string predicate;
  std::size_t max_size = 4;
  int jobs = 1;
  bool modulo_iso = false;
  bool witness = false;
  bool congruent = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

// Failing property: loadable witness document, then one line saying what broke.
int fail(const Options& o, const std::string& document, const std::string& violation) {
  emit(o, document);
  std::cout << "violation: " << violation << "\n";
  return kFails;
}

std::string join_names(const FiniteAlgebra& a, const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : ", ") + a.name(x);
  return out;
}

std::string blocks_text(const FiniteAlgebra& a, const Congruence& theta) {
  std::string out;
  for (Elem r : theta.representatives()) {
    std::vector<Elem> members;
    for (Elem x = 0; x < theta.size(); ++x)
      if (theta.block(x) == r) members.push_back(x);
    out += (out.empty() ? "{" : " {") + join_names(a, members) + "}";
  }
  return out;
}

Congruence parse_theta(const std::string& spec, std::size_t n) {
  std::vector<Elem> labels;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      labels.push_back(static_cast<Elem>(v));
    } catch (const std::logic_error&) {
      throw InputError("--theta expects comma-separated block labels, got '" + item + "'");
    }
  }
  if (labels.size() != n)
    throw InputError("--theta has " + std::to_string(labels.size()) + " labels for " + std::to_string(n) +
                     " elements");
  return Congruence(labels);
}

int cmd_validate(const Options& o) {
  const FiniteAlgebra a = load_algebra_file(o.file, false);
  auto poset = validate_poset(a.leq);
  if (!poset.ok()) return fail(o, serialize_algebra(a), poset.violations.front().describe());
  try {
    validate_algebra(a);
  } catch (const ConsistencyError& e) {
    return fail(o, serialize_algebra(a), e.what());
  }
  std::cout << "valid: " << a.size() << " elements; " << describe(signature_of(a)) << "\n";
  return kOk;
}

int cmd_classify(const Options& o) {
  const FiniteAlgebra a = load_algebra_file(o.file);
  const auto labels = classify(a);
  for (auto l : labels) std::cout << to_string(l) << "\n";
  if (o.witness) {
    AlgebraView v(a);
    for (auto l : kAllLabels) {
      if (std::find(labels.begin(), labels.end(), l) != labels.end()) continue;
      try {
        auto r = check(l, v);
        std::cout << "not " << to_string(l) << ": " << r.violations.front().detail << "\n";
      } catch (const PreconditionError& e) {
        std::cout << "not " << to_string(l) << ": " << e.what() << "\n";
      }
    }
  }
  return kOk;
}

int cmd_kalman(const Options& o) {
  const FiniteAlgebra h = load_algebra_file(o.file);
  const auto k = kalman_of(h, parse_level(o.level));
  emit(o, serialize_algebra(k.algebra));
  return kOk;
}

int cmd_center(const Options& o) {
  const FiniteAlgebra t = load_algebra_file(o.file);
  emit(o, serialize_algebra(center_algebra(t)));
  return kOk;
}

int cmd_ck(const Options& o) {
  const FiniteAlgebra t = load_algebra_file(o.file);
  auto r = check_ck(AlgebraView(t));
  if (!r.holds)
    return fail(o, serialize_algebra(t),
                "CK fails for x = " + t.name(r.witness->first) + ", y = " + t.name(r.witness->second));
  std::cout << "CK holds\n";
  return kOk;
}

int cmd_roundtrip(const Options& o) {
  const FiniteAlgebra h = load_algebra_file(o.file);
  const auto level = parse_level(o.level);
  const auto alpha = alpha_map(h, level);
  std::cout << "alpha: " << alpha.report().describe() << "\n";
  const auto k = kalman_of(h, level);
  const auto beta = beta_map(k.algebra);
  const auto rb = beta.report();
  std::cout << "beta: " << rb.describe() << "\n";
  if (!rb.isomorphism()) return fail(o, serialize_algebra(k.algebra), "beta is not an isomorphism");
  return kOk;
}

int cmd_congruences(const Options& o, bool wb) {
  const FiniteAlgebra a = load_algebra_file(o.file);
  const auto all = wb ? enumerate_wb_congruences(AlgebraView(a)) : enumerate_congruences(a);
  for (const auto& theta : all) std::cout << blocks_text(a, theta) << "\n";
  std::cout << all.size() << (wb ? " well-behaved congruences\n" : " congruences\n");
  return kOk;
}

int cmd_filters(const Options& o) {
  const FiniteAlgebra h = load_algebra_file(o.file);
  AlgebraView v(h);
  std::size_t count = 0;
  for (const auto& f : enumerate_filters(v)) {
    if (o.congruent && !is_congruent_filter(v, f).ok) continue;
    std::cout << f.describe(h) << "\n";
    ++count;
  }
  std::cout << count << (o.congruent ? " congruent filters\n" : " filters\n");
  return kOk;
}

int cmd_quotient(const Options& o) {
  const FiniteAlgebra t = load_algebra_file(o.file);
  const Congruence theta = parse_theta(o.theta, t.size());
  AlgebraView v(t);
  auto wb = is_well_behaved(v, theta);
  if (!wb.ok)
    return fail(o, serialize_algebra(t),
                "theta " + blocks_text(t, theta) + " is not well-behaved: " + wb.clause + " fails at (" +
                    join_names(t, wb.witness) + ")");
  emit(o, serialize_algebra(quotient_wb(v, theta)));
  return kOk;
}

int cmd_search(const Options& o) {
  EnumerationSpec spec{parse_label(o.label), o.max_size, o.modulo_iso, o.predicate, o.jobs};
  auto r = find_counterexample(spec);
  if (r.status == SearchOutcome::Status::CounterexampleFound)
    return fail(o, serialize_algebra(*r.witness),
                o.predicate + " fails after " + std::to_string(r.examined) + " instances: " + r.detail);
  std::cout << "all " << r.examined << " instances satisfy " << o.predicate << " (" << to_string(spec.target)
            << ", size <= " << o.max_size << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hemi-implicative structures and the Kalman construction"};
  app.require_subcommand(1);
  Options o;

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Algebra document")->required();
    return sub;
  };
  auto* validate = file_cmd("validate", "Check the order and every supplied table");
  auto* classify_cmd = file_cmd("classify", "Print every class the algebra belongs to");
  classify_cmd->add_flag("--witness", o.witness, "Also explain each failing class");
  auto* kalman = file_cmd("kalman", "Write K(H)");
  kalman->add_option("--as", o.level, "poset, ms, his, bdl, hbdl or ha")->required();
  auto* center = file_cmd("center", "Write C(T)");
  auto* ck = file_cmd("ck", "Check the CK condition");
  auto* roundtrip = file_cmd("roundtrip", "Check that alpha and beta are isomorphisms");
  roundtrip->add_option("--as", o.level, "poset, ms, his, bdl, hbdl or ha")->required();
  auto* congruences = file_cmd("congruences", "List all congruences");
  auto* wb = file_cmd("wb-congruences", "List the well-behaved congruences");
  auto* filters = file_cmd("filters", "List the filters");
  filters->add_flag("--congruent", o.congruent, "Only congruent filters");
  auto* quotient = file_cmd("quotient", "Write T/theta");
  quotient->add_option("--theta", o.theta, "Block label per element, comma separated")->required();
  auto* search = app.add_subcommand("search", "Look for a counterexample");
  search->add_option("--class", o.label, "Population class")->required();
  search->add_option("--max-size", o.max_size, "Largest size searched")->required()->check(CLI::PositiveNumber);
  search->add_option("--predicate", o.predicate, "Property to test")->required();
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--modulo-iso", o.modulo_iso, "One instance per isomorphism class");
  search->add_flag("--witness", o.witness, "Accepted for symmetry; witnesses are always printed");
  for (auto* sub : app.get_subcommands({}))
    sub->add_option("--output", o.output, "Write the document or witness to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*kalman) return cmd_kalman(o);
    if (*center) return cmd_center(o);
    if (*ck) return cmd_ck(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*congruences) return cmd_congruences(o, false);
    if (*wb) return cmd_congruences(o, true);
    if (*filters) return cmd_filters(o);
    if (*quotient) return cmd_quotient(o);
    if (*search) return cmd_search(o);
  } catch (const TheoremViolation& e) {
    return fail(o, e.witness(), e.what());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
