// Command-line front end for the posets library.
//
//   posets poset info|covers|moebius|dilworth|distributive <poset-file>
//   posets lcm lattice|betti [--multidegree m] [--index i] <ideal-file>
//   posets hibi gens|betti|pdim <poset-file>
//   posets arr lattice|central|regions|bounded|betti <arrangement-file>
//   posets export --format dot|tikz <poset-file>
//
// Add --json for a machine-readable document. Exit status: 0 success,
// 1 bad input, 2 internal invariant failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "posets/io.hpp"
#include "posets/posets.hpp"

namespace {

using nlohmann::json;
using namespace posets;

constexpr int kSchemaVersion = 1;

struct Output {
  bool as_json = false;
  std::string command;
  json result;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

json tally_json(const CoverTally& t) {
  json out = json::object();
  for (const auto& [k, v] : t.counts) out[std::to_string(k)] = v;
  return out;
}

std::string tally_text(const CoverTally& t) {
  std::string out;
  for (const auto& [k, v] : t.counts)
    out += (out.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  return out;
}

std::vector<std::size_t> block_sizes(const std::vector<std::vector<Label>>& blocks) {
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks) sizes.push_back(b.size());
  return sizes;
}

void run_poset(const std::string& action, const std::string& file, Output& out) {
  const Poset p = io::parse_poset(read_file(file));
  if (action == "info") {
    const auto blocks = rank_partition(p);
    const auto covers = covering_relations(p);
    out.result = {{"elements", p.size()},
                  {"covers", covers.size()},
                  {"rank_sizes", block_sizes(blocks)},
                  {"minimal", minimal_elements(p)},
                  {"maximal", maximal_elements(p)},
                  {"dilworth", dilworth_number(p)},
                  {"is_lattice", is_lattice(p)}};
    out.result["height"] = p.empty() ? json(nullptr) : json(height(p));
    std::ostringstream os;
    os << "elements: " << p.size() << "\ncovers: " << covers.size() << "\nheight: "
       << (p.empty() ? std::string("-") : std::to_string(height(p)))
       << "\nrank sizes: " << join(block_sizes(blocks)) << "\nminimal: " << join(minimal_elements(p))
       << "\nmaximal: " << join(maximal_elements(p)) << "\ndilworth: " << dilworth_number(p)
       << "\nlattice: " << (is_lattice(p) ? "yes" : "no") << "\n";
    out.text = os.str();
  } else if (action == "covers") {
    out.result = json::array();
    for (const auto& c : covering_relations(p)) {
      out.result.push_back({c.lower, c.upper});
      out.text += c.lower + " < " + c.upper + "\n";
    }
  } else if (action == "moebius") {
    out.result = json::array();
    for (const auto& [pair, value] : moebius_table(p).entries()) {
      out.result.push_back({pair.first, pair.second, value});
      out.text += "mu(" + pair.first + ", " + pair.second + ") = " + std::to_string(value) + "\n";
    }
  } else if (action == "dilworth") {
    out.result = dilworth_number(p);
    out.text = std::to_string(dilworth_number(p)) + "\n";
  } else if (action == "distributive") {
    const Poset lattice = distributive_lattice(p);
    const auto tally = cover_statistics(lattice);
    out.result = {{"lattice", io::poset_json(lattice)}, {"cover_tally", tally_json(tally)}};
    out.text = "elements: " + std::to_string(lattice.size()) +
               "\ncovers: " + std::to_string(covering_relations(lattice).size()) +
               "\ncover tally: " + tally_text(tally) + "\n";
  }
}

void run_lcm(const std::string& action, const std::string& file, const std::string& multidegree,
             int index, Output& out) {
  const MonomialIdeal ideal = io::parse_ideal(read_file(file));
  const LcmLattice lattice = lcm_lattice(ideal);
  if (action == "lattice") {
    const auto blocks = rank_partition(lattice.poset);
    const auto covers = covering_relations(lattice.poset);
    json rows = json::array();
    std::ostringstream os;
    os << "elements: " << lattice.poset.size() << "\ncovers: " << covers.size()
       << "\ntop: " << lattice.top << "\n";
    for (std::size_t r = 0; r < blocks.size(); ++r) {
      rows.push_back(blocks[r]);
      os << "rank " << r << ": " << join(blocks[r]) << "\n";
    }
    json edges = json::array();
    for (const auto& c : covers) edges.push_back({c.lower, c.upper});
    out.result = {{"elements", lattice.poset.size()}, {"covers", edges},
                  {"top", lattice.top},              {"rows", rows}};
    out.text = os.str();
    return;
  }
  // betti
  if (!multidegree.empty()) {
    const Monomial b = io::parse_monomial(multidegree, ideal.variables());
    if (index > 0) {
      const auto v = multigraded_betti(lattice, b, index);
      out.result = {{"multidegree", ideal.to_string(b)}, {"index", index}, {"betti", v}};
      out.text = std::to_string(v) + "\n";
      return;
    }
    const Label label = ideal.to_string(b);
    const auto values = multigraded_betti_row(lattice, b);
    out.result = {{"multidegree", label}, {"betti_from_index_1", values}};
    out.text = join(values) + "\n";
    return;
  }
  const auto beta = betti_numbers(lattice);
  if (index > 0) {
    const std::size_t v = static_cast<std::size_t>(index) < beta.size() ? beta[index] : 0;
    out.result = {{"index", index}, {"betti", v}};
    out.text = std::to_string(v) + "\n";
    return;
  }
  out.result = {{"betti", beta}};
  out.text = join(beta) + "\n";
}

void run_hibi(const std::string& action, const std::string& file, const std::string& route,
              Output& out) {
  const Poset p = io::parse_poset(read_file(file));
  if (action == "gens") {
    const MonomialIdeal ideal = hibi_ideal(p);
    json gens = json::array();
    for (const auto& g : ideal.generators()) {
      gens.push_back(ideal.to_string(g));
      out.text += ideal.to_string(g) + "\n";
    }
    out.result = {{"variables", ideal.variables()}, {"generators", gens}};
    return;
  }
  // Betti numbers of R/H_P: β_0 = 1, then β_{i+1} from the cover-count formula
  // or from lcm-lattice homology.
  std::vector<std::uint64_t> beta{1};
  if (route == "homology") {
    const auto all = betti_numbers(hibi_ideal(p));
    beta.assign(all.begin(), all.end());
  } else {
    for (auto b : hibi_betti(cover_statistics(distributive_lattice(p)))) beta.push_back(b);
  }
  while (beta.size() > 1 && beta.back() == 0) beta.pop_back();
  if (action == "betti") {
    out.result = {{"route", route}, {"betti", beta}};
    out.text = join(beta) + "\n";
    return;
  }
  // pdim: projective dimension of the ideal = (index of last nonzero β of R/H_P) - 1.
  const std::size_t pdim = beta.size() >= 2 ? beta.size() - 2 : 0;
  const std::size_t width = dilworth_number(p);
  out.result = {{"route", route}, {"pdim", pdim}, {"dilworth", width}, {"equal", pdim == width}};
  out.text = "pdim " + std::to_string(pdim) + "\ndilworth " + std::to_string(width) + "\nequal " +
             (pdim == width ? "true" : "false") + "\n";
}

void run_arr(const std::string& action, const std::string& file, Output& out) {
  const Arrangement a = io::parse_arrangement(read_file(file));
  if (action == "lattice") {
    const auto all = flats(a);
    const Poset lattice = intersection_lattice(all);
    const auto names = default_coordinate_names(a.ambient_dim());
    const auto blocks = rank_partition(lattice);
    json rows = json::array();
    std::ostringstream os;
    os << "elements: " << lattice.size() << "\ncovers: " << covering_relations(lattice).size()
       << "\nlattice: " << (is_lattice(lattice) ? "yes" : "no") << "\n";
    for (std::size_t r = 0; r < blocks.size(); ++r) {
      json row = json::array();
      os << "codim " << r << ":";
      for (const auto& label : blocks[r]) {
        const auto& f = all[lattice.index_of(label)];
        row.push_back({{"label", label}, {"equations", describe(f, names)}});
        os << " " << describe(f, names);
      }
      os << "\n";
      rows.push_back(row);
    }
    json edges = json::array();
    for (const auto& c : covering_relations(lattice)) edges.push_back({c.lower, c.upper});
    out.result = {{"elements", lattice.size()}, {"rows", rows}, {"covers", edges}};
    out.text = os.str();
  } else if (action == "central") {
    out.result = is_central(a);
    out.text = is_central(a) ? "true\n" : "false\n";
  } else if (action == "regions") {
    out.result = real_regions(a);
    out.text = std::to_string(real_regions(a)) + "\n";
  } else if (action == "bounded") {
    out.result = bounded_regions(a);
    out.text = std::to_string(bounded_regions(a)) + "\n";
  } else if (action == "betti") {
    const auto beta = complement_betti(a);
    out.result = beta;
    out.text = join(beta) + "\n";
  }
}

void run_export(const std::string& format, const std::string& file, Output& out) {
  const Poset p = io::parse_poset(read_file(file));
  io::RenderSpec spec;
  spec.format = format == "tikz" ? io::HasseFormat::tikz : io::HasseFormat::dot;
  out.text = io::export_hasse(p, spec);
  out.result = {{"format", format}, {"text", out.text}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite posets: intersection lattices, lcm-lattices, Hibi ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a machine-readable JSON document");

  std::string action, file, multidegree, route = "covers", format = "dot";
  int index = 0;

  auto* poset_cmd = app.add_subcommand("poset", "Structural queries on a poset file");
  poset_cmd->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"info", "covers", "moebius", "dilworth", "distributive"}));
  poset_cmd->add_option("file", file)->required();

  auto* lcm_cmd = app.add_subcommand("lcm", "Lcm-lattice and Betti numbers of a monomial ideal");
  lcm_cmd->add_option("action", action)->required()->check(CLI::IsMember({"lattice", "betti"}));
  lcm_cmd->add_option("file", file)->required();
  lcm_cmd->add_option("--multidegree", multidegree, "Monomial b for β_{i,b}");
  lcm_cmd->add_option("--index", index, "Homological index i ≥ 1")->check(CLI::PositiveNumber);

  auto* hibi_cmd = app.add_subcommand("hibi", "Hibi ideal of a poset");
  hibi_cmd->add_option("action", action)->required()->check(CLI::IsMember({"gens", "betti", "pdim"}));
  hibi_cmd->add_option("file", file)->required();
  hibi_cmd->add_option("--route", route, "Betti computation: covers or homology")
      ->check(CLI::IsMember({"covers", "homology"}));

  auto* arr_cmd = app.add_subcommand("arr", "Rational hyperplane arrangements");
  arr_cmd->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"lattice", "central", "regions", "bounded", "betti"}));
  arr_cmd->add_option("file", file)->required();

  auto* export_cmd = app.add_subcommand("export", "Hasse diagram as DOT or TikZ");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "tikz"}));
  export_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Output out;
  out.as_json = as_json;
  try {
    if (poset_cmd->parsed()) {
      out.command = "poset " + action;
      run_poset(action, file, out);
    } else if (lcm_cmd->parsed()) {
      out.command = "lcm " + action;
      run_lcm(action, file, multidegree, index, out);
    } else if (hibi_cmd->parsed()) {
      out.command = "hibi " + action;
      run_hibi(action, file, route, out);
    } else if (arr_cmd->parsed()) {
      out.command = "arr " + action;
      run_arr(action, file, out);
    } else if (export_cmd->parsed()) {
      out.command = "export";
      run_export(format, file, out);
    }
  } catch (const posets::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const posets::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }

  if (out.as_json) {
    json doc = {{"schema_version", kSchemaVersion}, {"command", out.command}, {"result", out.result}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return 0;
}
