#include "hcsp/cli.hpp"

#include "hcsp/construct.hpp"
#include "hcsp/error.hpp"
#include "hcsp/format.hpp"
#include "hcsp/numerics.hpp"
#include "hcsp/search.hpp"
#include "hcsp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hcsp::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string &path, std::istream &in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Json sets_json(const SetSystem &sys) {
  Json arr = Json::array();
  for (const auto &b : sorted_block_lists(sys))
    arr.push_back(b);
  return arr;
}

Json classification_json(const SetSystem &sys, const SystemClassification &c, bool witnesses) {
  Json j;
  j["s"] = sys.ground_size();
  j["blocks"] = sys.size();
  j["min_size"] = min_size(sys.ground_size());
  j["separating"] = c.separating;
  j["completely_separating"] = c.completely_separating;
  j["hcsp"] = c.hcsp;
  j["inclusion_minimal_hcsp"] = c.inclusion_minimal_hcsp;
  j["size_minimal"] = c.size_minimal;
  if (!c.failing_certificate) {
    j["failing_certificate"] = nullptr;
  } else if (auto *pair = std::get_if<ElementPair>(&*c.failing_certificate)) {
    j["failing_certificate"] = Json{{"kind", "pair"}, {"elements", {pair->first, pair->second}}};
  } else {
    j["failing_certificate"] =
        Json{{"kind", "element"}, {"element", std::get<std::size_t>(*c.failing_certificate)}};
  }
  if (witnesses) {
    Json list = Json::array();
    for (std::size_t a = 1; a <= sys.ground_size(); ++a) {
      Json pairs = Json::array();
      for (const auto &[x, y] : c.witnesses.at(a))
        pairs.push_back(Json::array({to_elements(sys.block(x)), to_elements(sys.block(y))}));
      list.push_back(Json{{"element", a}, {"pairs", pairs}});
    }
    j["witnesses"] = list;
  }
  return j;
}

struct BudgetFlags {
  std::size_t max_s = 0;
  std::uint64_t max_candidates = 0;
  std::size_t jobs = 1;

  void attach(CLI::App *sub, bool with_jobs) {
    sub->add_option("--max-s", max_s, "Largest ground size the exhaustive search accepts");
    sub->add_option("--max-candidates", max_candidates, "Cap on candidates examined");
    if (with_jobs)
      sub->add_option("--jobs", jobs, "Worker threads for the enumeration")
          ->check(CLI::PositiveNumber);
  }

  SearchBudget resolve(SearchBudget base) const {
    if (const char *env = std::getenv("HCSP_MAX_S"); env != nullptr && *env != '\0') {
      std::string_view sv(env);
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
      if (ec != std::errc() || p != sv.data() + sv.size())
        throw InvalidArgument("HCSP_MAX_S must be a decimal integer");
      base.max_ground_size = v;
    }
    if (max_s != 0)
      base.max_ground_size = max_s;
    if (max_candidates != 0)
      base.max_candidates = max_candidates;
    base.parallel_chunks = jobs;
    return base;
  }
};

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Construct, verify and classify hypercompletely separating set systems", "hcsp"};
  app.require_subcommand(1);

  std::uint64_t number = 0;
  auto *tau_cmd = app.add_subcommand("tau", "Print ceil((1 + sqrt(8N+1)) / 2)");
  tau_cmd->add_option("N", number)->required();
  auto *alpha_cmd = app.add_subcommand("alpha", "Print the triangular number N(N+1)/2");
  alpha_cmd->add_option("N", number)->required();
  auto *min_cmd = app.add_subcommand("min-size", "Print the size of a size-minimal HCSP system on N points");
  min_cmd->add_option("N", number)->required();

  std::uint64_t limit = 0;
  auto *seq_cmd = app.add_subcommand("seq", "Print every k <= limit with tau(k) = ceil(sqrt(2k))");
  seq_cmd->add_option("--limit", limit)->required();

  std::size_t ground = 0;
  std::string out_path = "-";
  std::string name;
  auto *construct_cmd = app.add_subcommand("construct", "Emit a size-minimal HCSP system on S points");
  construct_cmd->add_option("S", ground)->required();
  construct_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");
  construct_cmd->add_option("--name", name, "Name recorded in the document");

  auto *catalog_cmd = app.add_subcommand("catalog", "Dump every size-minimal class for S in 1..6");
  catalog_cmd->add_option("S", ground)->required();

  std::string file_a;
  std::string file_b;
  bool witnesses = false;
  std::string expect;
  auto *verify_cmd = app.add_subcommand("verify", "Classify a system read from F");
  verify_cmd->add_option("F", file_a)->required();
  verify_cmd->add_flag("--witnesses", witnesses, "Include the witness map");
  verify_cmd->add_option("--expect", expect, "Exit 1 unless this property holds")
      ->check(CLI::IsMember(
          {"separating", "completely-separating", "hcsp", "inclusion-minimal", "size-minimal"}));

  auto *minimal_cmd = app.add_subcommand("minimal", "Exit 0 iff the system in F is size-minimal HCSP");
  minimal_cmd->add_option("F", file_a)->required();

  BudgetFlags budget_flags;
  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force the minimum HCSP size on S points");
  oracle_cmd->add_option("S", ground)->required();
  budget_flags.attach(oracle_cmd, false);

  auto *enum_cmd = app.add_subcommand("enumerate", "List size-minimal classes on S points");
  enum_cmd->add_option("S", ground)->required();
  budget_flags.attach(enum_cmd, true);

  auto *iso_cmd = app.add_subcommand("iso", "Find an isomorphism between the systems in F and G");
  iso_cmd->add_option("F", file_a)->required();
  iso_cmd->add_option("G", file_b)->required();
  budget_flags.attach(iso_cmd, false);

  auto *canon_cmd = app.add_subcommand("canon", "Emit the canonical form of the system in F");
  canon_cmd->add_option("F", file_a)->required();
  budget_flags.attach(canon_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "hcsp: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (tau_cmd->parsed()) {
      out << tau(number) << "\n";
    } else if (alpha_cmd->parsed()) {
      out << alpha(number) << "\n";
    } else if (min_cmd->parsed()) {
      out << min_size(number) << "\n";
    } else if (seq_cmd->parsed()) {
      auto seq = scholium_sequence(limit);
      for (std::size_t i = 0; i < seq.size(); ++i)
        out << (i ? "," : "") << seq[i];
      out << "\n";
    } else if (construct_cmd->parsed()) {
      SystemDocument doc{construct_min(ground), std::nullopt};
      if (!name.empty())
        doc.name = name;
      std::string text = emit_document(doc);
      if (out_path == "-") {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
          throw InvalidArgument("cannot write " + out_path);
        f << text;
      }
    } else if (catalog_cmd->parsed()) {
      CatalogEntry entry = base_catalog(ground);
      Json reps = Json::array();
      for (std::size_t i = 0; i < entry.representatives.size(); ++i)
        reps.push_back(Json{{"name", entry.names[i]}, {"sets", sets_json(entry.representatives[i])}});
      Json partners = Json::array();
      for (auto [i, j] : entry.complement_partners)
        partners.push_back(Json{{"system", entry.names[i]}, {"complement_isomorphic_to", entry.names[j]}});
      Json j;
      j["s"] = ground;
      j["min_size"] = min_size(ground);
      j["representatives"] = reps;
      j["complement_partners"] = partners;
      out << j.dump(2) << "\n";
    } else if (verify_cmd->parsed()) {
      SetSystem sys = parse_system(read_input(file_a, in));
      SystemClassification c = classify(sys);
      out << classification_json(sys, c, witnesses).dump(2) << "\n";
      if (!expect.empty()) {
        bool ok = expect == "separating"              ? c.separating
                  : expect == "completely-separating" ? c.completely_separating
                  : expect == "hcsp"                  ? c.hcsp
                  : expect == "inclusion-minimal"     ? c.inclusion_minimal_hcsp
                                                      : c.size_minimal;
        if (!ok)
          return kNegative;
      }
    } else if (minimal_cmd->parsed()) {
      SetSystem sys = parse_system(read_input(file_a, in));
      bool hcsp = is_hcsp(sys).holds;
      bool minimal = is_size_minimal(sys);
      Json j;
      j["s"] = sys.ground_size();
      j["blocks"] = sys.size();
      j["min_size"] = min_size(sys.ground_size());
      j["hcsp"] = hcsp;
      j["size_minimal"] = minimal;
      out << j.dump(2) << "\n";
      if (!minimal)
        return kNegative;
    } else if (oracle_cmd->parsed()) {
      out << min_hcsp_size_oracle(ground, budget_flags.resolve(SearchBudget::oracle())) << "\n";
    } else if (enum_cmd->parsed()) {
      auto classes = enumerate_min_classes(ground, budget_flags.resolve(SearchBudget::oracle()));
      Json list = Json::array();
      for (const auto &c : classes)
        list.push_back(sets_json(c.to_system()));
      Json j;
      j["s"] = ground;
      j["min_size"] = min_size(ground);
      j["count"] = classes.size();
      j["classes"] = list;
      out << j.dump(2) << "\n";
    } else if (iso_cmd->parsed()) {
      if (file_a == "-" && file_b == "-")
        throw InvalidArgument("iso: at most one input may be read from stdin");
      SetSystem a = parse_system(read_input(file_a, in));
      SetSystem b = parse_system(read_input(file_b, in));
      auto sigma = are_isomorphic(a, b, budget_flags.resolve(SearchBudget::isomorphism()));
      Json j;
      j["isomorphic"] = sigma.has_value();
      j["bijection"] = sigma ? Json(*sigma) : Json(nullptr);
      out << j.dump(2) << "\n";
      if (!sigma)
        return kNegative;
    } else if (canon_cmd->parsed()) {
      SetSystem sys = parse_system(read_input(file_a, in));
      CanonicalForm cf = canonical_form(sys, budget_flags.resolve(SearchBudget::isomorphism()));
      out << emit_system(cf.to_system());
    }
  } catch (const Error &e) {
    err << "hcsp: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

} // namespace hcsp::cli
