// Command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 domain error, 4 closure cap exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotgroup/error.hpp"
#include "rotgroup/generator_file.hpp"
#include "rotgroup/group.hpp"
#include "rotgroup/properties.hpp"
#include "rotgroup/suite.hpp"

namespace {

using namespace rotgroup;

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kParse = 2, kDomain = 3, kCap = 4 };

std::string decomposition_label(const FiniteRotGroup& g, const Decomposition& d) {
  return to_string(classify_iso_type(g, d.factor_h)) + " × " + to_string(classify_iso_type(g, d.factor_k));
}

std::string index_list(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

int cmd_theta(const std::string& text, Ambient d) {
  const Quaternion q = parse_quaternion_tuple(text, d);
  std::cout << rotation_to_json(theta(q)).dump() << '\n';
  return kOk;
}

int cmd_closure(const std::string& path, std::size_t cap) {
  const GeneratorFile file = load_generator_file(path);
  const FiniteRotGroup g = generate_closure(file.generators(), cap);
  std::cout << "order " << g.order() << ", " << to_string(classify_iso_type(g));
  if (g.order() > kMaxEnumerableOrder) {
    std::cout << "\ncenter order " << center(g).order() << ", subgroups not enumerated\n";
    return kOk;
  }
  const auto all = subgroups(g);
  const auto decs = direct_product_decompositions(g, g.whole(), all);
  if (decs.empty()) {
    std::cout << ", indecomposable";
  } else {
    // One label per factor-type pair; the second line gives the internal count.
    std::cout << ", decompositions: ";
    const auto types = decomposition_types(g, decs);
    for (std::size_t i = 0; i < types.size(); ++i) std::cout << (i > 0 ? "; " : "") << to_string(types[i]);
  }
  std::cout << "\ncenter order " << center(g).order() << ", " << all.size() << " subgroups, " << decs.size()
            << " internal decomposition(s)\n";
  return kOk;
}

int cmd_order(const std::string& path, std::uint64_t cap) {
  const GeneratorFile file = load_generator_file(path);
  const auto gens = file.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const OrderResult r = element_order(gens[i], cap);
    std::cout << "g" << i + 1 << ": " << to_string(r) << " (" << r.certificate << ")\n";
  }
  return kOk;
}

int cmd_props(const std::string& path, std::size_t cap, const std::vector<std::string>& tags) {
  const GeneratorFile file = load_generator_file(path);
  const FiniteRotGroup g = generate_closure(file.generators(), cap);
  std::vector<PropertyTag> selected;
  for (const auto& t : tags) {
    const auto tag = parse_property_tag(t);
    if (!tag) throw ParseError("unknown property tag " + t);
    selected.push_back(*tag);
  }
  if (selected.empty()) selected.assign(std::begin(kAllPropertyTags), std::end(kAllPropertyTags));

  for (PropertyTag tag : selected) {
    const PropertyReport r = check_property(g, tag);
    std::cout << to_string(tag) << ' ' << (r.holds ? "holds" : "fails");
    if (r.vacuous) std::cout << " (vacuous)";
    if (r.witness) {
      std::cout << ", witness";
      if (!r.witness->elements.empty()) {
        std::cout << " elements";
        for (ElementIndex e : r.witness->elements) std::cout << ' ' << to_string(g.element(e));
      }
      if (r.witness->subgroup) std::cout << " subgroup " << index_list(*r.witness->subgroup);
      if (r.witness->decomposition) std::cout << " decomposition " << decomposition_label(g, *r.witness->decomposition);
    }
    std::cout << '\n';
  }
  return kOk;
}

int cmd_decompose(const std::string& path, std::size_t cap) {
  const GeneratorFile file = load_generator_file(path);
  const FiniteRotGroup g = generate_closure(file.generators(), cap);
  const auto decs = direct_product_decompositions(g);
  std::cout << decs.size() << " decomposition(s)\n";
  for (const auto& d : decs) {
    std::cout << decomposition_label(g, d) << "  H=" << index_list(d.factor_h) << " K=" << index_list(d.factor_k)
              << '\n';
  }
  return kOk;
}

int cmd_words(const std::string& path, std::size_t max_len) {
  const GeneratorFile file = load_generator_file(path);
  const auto r = word_no_relation_search(file.generators(), max_len);
  std::cout << (r.abelian_mode ? "abelian mode: " : "free mode: ");
  if (r.all_distinct) {
    std::cout << "AllDistinct(" << r.count << ")\n";
  } else {
    std::cout << "RelationFound(" << to_string(r.relation) << ")\n";
  }
  return kOk;
}

int cmd_verify(const std::string& json_out, std::uint64_t seed, bool rational_only) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.rational_only = rational_only;
  const SuiteReport report = run_verification_suite(opt);
  std::cout << report_summary(report);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw ParseError("cannot write " + json_out);
    out << report_to_json(report).dump(2) << '\n';
  }
  return report.all_passed() ? kOk : kAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rotation-group toolkit"};
  app.require_subcommand(1);

  std::string quat;
  Ambient ambient = 0;
  auto* theta_cmd = app.add_subcommand("theta", "Print the rotation of a quaternion \"a,b,c,d\"");
  theta_cmd->add_option("quaternion", quat, "Components as scalar strings")->required();
  theta_cmd->add_option("-d,--ambient", ambient, "Squarefree d of Q(sqrt d), 0 for Q");

  std::string file;
  std::size_t cap = 1000;
  auto* closure_cmd = app.add_subcommand("closure", "Generate a finite group and summarise it");
  closure_cmd->add_option("file", file, "Generator file")->required();
  closure_cmd->add_option("--cap", cap, "Element budget");

  std::uint64_t order_cap = kDefaultOrderCap;
  auto* order_cmd = app.add_subcommand("order", "Element order of each generator");
  order_cmd->add_option("file", file, "Generator file")->required();
  order_cmd->add_option("--cap", order_cap, "Power iteration budget");

  std::vector<std::string> tags;
  auto* props_cmd = app.add_subcommand("props", "Decide the commutation and direct-product properties");
  props_cmd->add_option("file", file, "Generator file")->required();
  props_cmd->add_option("--cap", cap, "Element budget");
  props_cmd->add_option("--tag", tags, "Restrict to these tags (P1..P8, R3, R4, R6)");

  auto* decompose_cmd = app.add_subcommand("decompose", "List internal direct product decompositions");
  decompose_cmd->add_option("file", file, "Generator file")->required();
  decompose_cmd->add_option("--cap", cap, "Element budget");

  std::size_t max_len = 8;
  auto* words_cmd = app.add_subcommand("words", "Search for relations among short words");
  words_cmd->add_option("file", file, "Generator file")->required();
  words_cmd->add_option("--max-len", max_len, "Maximum word length / exponent bound");

  std::string json_out;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool rational_only = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");
  verify_cmd->add_option("--json", json_out, "Write the structured report here");
  verify_cmd->add_option("--seed", seed, "Fuzzing seed");
  verify_cmd->add_flag("--rational-only", rational_only, "Restrict to d = 0 contexts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*theta_cmd) return cmd_theta(quat, ambient);
    if (*closure_cmd) return cmd_closure(file, cap);
    if (*order_cmd) return cmd_order(file, order_cap);
    if (*props_cmd) return cmd_props(file, cap, tags);
    if (*decompose_cmd) return cmd_decompose(file, cap);
    if (*words_cmd) return cmd_words(file, max_len);
    if (*verify_cmd) return cmd_verify(json_out, seed, rational_only);
  } catch (const ClosureExceedsCap& e) {
    std::cout << "ClosureExceedsCap(" << e.count_so_far() << ")\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidAmbient& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kParse;
}
