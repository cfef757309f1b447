// Command-line front end. Exit codes: 0 yes/ok, 1 no, 2 error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bouquet/bouquet.hpp"
#include "bouquet/braid.hpp"
#include "bouquet/cyclepres.hpp"
#include "bouquet/io.hpp"
#include "bouquet/moves.hpp"
#include "bouquet/render.hpp"

using namespace bouquet;

namespace {

// Thrown for bad input; carries the one-line diagnostic.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
public:
  explicit Report(bool json) : json_(json) {}
  void add(const std::string& tag, const std::string& value) { lines_.emplace_back(tag, value); }
  void emit(std::ostream& os) const {
    if (!json_) {
      for (const auto& [tag, value] : lines_) os << tag << (value.empty() ? "" : " ") << value << "\n";
      return;
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [tag, value] : lines_) {
      auto it = out.find(tag);
      if (it == out.end())
        out[tag] = value;
      else if (it->is_array())
        it->push_back(value);
      else
        *it = nlohmann::ordered_json::array({*it, value});
    }
    os << out.dump(2) << "\n";
  }

private:
  bool json_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError(path + ": cannot open file");
    ss << in.rdbuf();
  }
  return ss.str();
}

CurveSystem load_system(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    throw UsageError((path == "-" ? "<stdin>" : path) + ": " + e.what());
  } catch (const InvalidSystem& e) {
    throw UsageError((path == "-" ? "<stdin>" : path) + ": " + e.what());
  }
}

int curve_index(const CurveSystem& s, const std::string& name) {
  if (!s.has_curve(name)) throw UsageError("no curve named '" + name + "'");
  return s.curve(name);
}

std::vector<int> curve_list(const CurveSystem& s, const std::string& text) {
  std::vector<int> out;
  if (text.empty()) {
    for (int c = 0; c < s.curve_count(); ++c) out.push_back(c);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(curve_index(s, item));
  }
  return out;
}

std::string names(const CurveSystem& s, const std::vector<int>& curves) {
  std::string out;
  for (int c : curves) out += (out.empty() ? "" : " ") + s.name(c);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError(path + ": cannot write file");
  out << text;
}

// Word argument, or one line of stdin for "-".
std::string word_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  if (!std::getline(std::cin, line)) throw UsageError("<stdin>: expected a word");
  return line;
}

BraidWord parse_braid(const std::string& text, int strands) {
  try {
    return BraidWord::parse(text, strands);
  } catch (const ParseError& e) {
    throw UsageError("word '" + text + "': " + e.what());
  }
}

std::string witness_text(const CurveSystem& s, const Witness& w) {
  std::string out = "triple=" + s.name(w.triple[0]) + "," + s.name(w.triple[1]) + "," + s.name(w.triple[2]);
  out += " twisted_intersection=" + std::to_string(w.twisted_intersection);
  out += " triangle=" + w.triangle.value_or("none");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bouquet and chain decisions for curves on surfaces, with a braid-group engine"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Wrap report lines in a JSON object");
  int code = 0;

  // ---- braid
  auto* braid = app.add_subcommand("braid", "Braid words");
  braid->require_subcommand(1);
  std::string w1, w2;
  int strands = -1;
  auto* nf = braid->add_subcommand("nf", "Garside normal form");
  nf->add_option("word", w1, "Braid word, '-' for stdin")->required();
  nf->add_option("--strands", strands, "Strand count when the word has no B<k>: header");
  auto* beq = braid->add_subcommand("eq", "Decide equality of two braids");
  beq->add_option("w1", w1)->required();
  beq->add_option("w2", w2)->required();
  beq->add_option("--strands", strands);

  // ---- pres
  auto* pres = app.add_subcommand("pres", "The cycle presentation");
  pres->require_subcommand(1);
  int n = 0;
  auto* verify = pres->add_subcommand("verify", "Map every relator into the braid group");
  verify->add_option("--n", n, "Number of twist generators")->required()->check(CLI::Range(2, 64));
  auto* peq = pres->add_subcommand("eq", "Compare two twist words through the braid embedding");
  peq->add_option("--n", n)->required()->check(CLI::Range(1, 64));
  peq->add_option("w1", w1)->required();
  peq->add_option("w2", w2)->required();

  // ---- curves
  auto* curves = app.add_subcommand("curves", "Curve-system files");
  curves->require_subcommand(1);
  std::string file, out_path, name_a, name_b, target, along, list;
  int power = 1, trials = 1;
  std::uint64_t seed = 0;
  bool seeded = false;
  auto* cval = curves->add_subcommand("validate", "Check a curve-system file");
  cval->add_option("file", file)->required();
  auto* cinfo = curves->add_subcommand("info", "Surface and face statistics");
  cinfo->add_option("file", file)->required();
  auto* cint = curves->add_subcommand("intersect", "Geometric intersection number of two curves");
  cint->add_option("file", file)->required();
  cint->add_option("--a", name_a)->required();
  cint->add_option("--b", name_b)->required();
  cint->add_option("--seed", seed, "Random bigon order")->each([&](const std::string&) { seeded = true; });
  cint->add_option("--trials", trials, "Number of random reduction orders")->check(CLI::PositiveNumber);
  auto* ctw = curves->add_subcommand("twist", "Dehn twist of one curve along another");
  ctw->add_option("file", file)->required();
  ctw->add_option("--target", target)->required();
  ctw->add_option("--along", along)->required();
  ctw->add_option("--power", power)->check(CLI::IsMember({-2, -1, 1, 2}));
  ctw->add_option("-o,--output", out_path);
  auto* cred = curves->add_subcommand("reduce", "Remove bigons");
  cred->add_option("file", file)->required();
  cred->add_option("--a", name_a, "First curve of the pair (default: all pairs)");
  cred->add_option("--b", name_b);
  cred->add_option("--seed", seed)->each([&](const std::string&) { seeded = true; });
  cred->add_option("-o,--output", out_path);

  // ---- bouquet
  auto* bq = app.add_subcommand("bouquet", "Bouquet decisions");
  bq->require_subcommand(1);
  std::string order_text;
  auto* bcheck = bq->add_subcommand("check", "Decide whether curves form a bouquet");
  bcheck->add_option("file", file)->required();
  bcheck->add_option("--curves", list, "Comma-separated curve names (default: all)");
  bcheck->add_option("--order", order_text, "Also run the linear criterion on this cyclic order");
  auto* bchain = bq->add_subcommand("chain", "Transform a bouquet into a chain");
  bchain->add_option("file", file)->required();
  bchain->add_option("--curves", list);
  bchain->add_option("-o,--output", out_path);

  // ---- gen
  auto* gen = app.add_subcommand("gen", "Canonical systems");
  gen->require_subcommand(1);
  auto* gbq = gen->add_subcommand("bouquet", "Standard bouquet of n curves");
  gbq->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  auto* gch = gen->add_subcommand("chain", "Chain of n curves");
  gch->add_option("--n", n)->required()->check(CLI::Range(2, 64));

  // ---- render
  auto* render = app.add_subcommand("render", "DOT or SVG picture of the map");
  std::string format = "dot";
  render->add_option("file", file)->required();
  render->add_option("--format", format)->check(CLI::IsMember({"dot", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report report(json);
  try {
    if (nf->parsed()) {
      auto w = parse_braid(word_arg(w1), strands);
      report.add("NF", normal_form(w).str());
    } else if (beq->parsed()) {
      const std::string ta = word_arg(w1), tb = word_arg(w2);
      int k = strands;
      for (const auto& t : {ta, tb}) {
        int h = 0;
        try {
          h = parse_word_text(t).header_size;
        } catch (const ParseError& e) {
          throw UsageError("word '" + t + "': " + e.what());
        }
        if (h > 0 && k > 0 && h != k) throw UsageError("words live in different braid groups");
        if (h > 0) k = h;
      }
      auto a = parse_braid(ta, k);
      auto b = parse_braid(tb, k);
      if (a.strands() != b.strands()) {
        const int m = std::max(a.strands(), b.strands());
        a = BraidWord(m, std::vector<int>(a.letters().begin(), a.letters().end()));
        b = BraidWord(m, std::vector<int>(b.letters().begin(), b.letters().end()));
      }
      const bool eq = equals(a, b);
      report.add("VERDICT", eq ? "yes" : "no");
      code = eq ? 0 : 1;
    } else if (verify->parsed()) {
      bool all = true;
      for (const auto& r : verify_relators(n)) {
        report.add("RELATOR", r.id + (r.ok ? " OK" : " FAIL"));
        all = all && r.ok;
      }
      for (const auto& r : round_trip(n)) {
        report.add("ROUNDTRIP", r.id + (r.ok ? " OK" : " FAIL"));
        all = all && r.ok;
      }
      report.add("VERDICT", all ? "yes" : "no");
      code = all ? 0 : 1;
    } else if (peq->parsed()) {
      Word a = parse_twist_word(word_arg(w1), n);
      Word b = parse_twist_word(word_arg(w2), n);
      const bool eq = twist_word_equals(n, a, b);
      report.add("VERDICT", eq ? "yes" : "no");
      report.add("NOTE", "decided in B_" + std::to_string(n + 1) + "; faithful for twists along a pi1-injective bouquet");
      code = eq ? 0 : 1;
    } else if (cval->parsed()) {
      const std::string text = read_input(file);
      try {
        auto s = parse_system(text);
        report.add("VERDICT", "yes");
        report.add("CURVES", std::to_string(s.curve_count()));
      } catch (const InvalidSystem& e) {
        report.add("VERDICT", "no");
        report.add("DIAGNOSTIC", e.what());
        code = 1;
      } catch (const ParseError& e) {
        throw UsageError((file == "-" ? "<stdin>" : file) + ": " + e.what());
      }
    } else if (cinfo->parsed()) {
      auto s = load_system(file);
      const auto info = s.surface();
      report.add("CURVES", names(s, curve_list(s, "")));
      report.add("CROSSINGS", std::to_string(s.crossing_count()));
      report.add("VERTICES", std::to_string(info.vertices));
      report.add("EDGES", std::to_string(info.edges));
      report.add("FACES", std::to_string(info.faces));
      report.add("EULER", std::to_string(info.euler));
      report.add("GENUS", std::to_string(info.genus) + " punctures " + std::to_string(info.punctures));
      for (const auto& f : s.faces()) {
        const int k = face_sides(s, f);
        report.add("FACE", f.key + " sides " + std::to_string(k) + " " + polygon_name(k) +
                               (f.punctures ? " punctured" : ""));
      }
      report.add("NOTE", "closed surface generated by the map, every face a disk");
    } else if (cint->parsed()) {
      auto s = load_system(file);
      const int a = curve_index(s, name_a), b = curve_index(s, name_b);
      if (a == b) throw UsageError("--a and --b name the same curve");
      std::mt19937_64 rng(seed);
      std::optional<int> first;
      bool confluent = true, blocked = false;
      for (int t = 0; t < trials; ++t) {
        auto r = intersection_number(s, a, b, seeded || trials > 1 ? &rng : nullptr);
        blocked = blocked || r.blocked;
        if (!first) first = r.count;
        confluent = confluent && *first == r.count;
      }
      report.add("INTERSECT", std::to_string(*first));
      if (blocked) report.add("BLOCKED", "punctured bigon left in place; the count is an upper bound");
      if (trials > 1) report.add("CONFLUENT", confluent ? "yes" : "no");
    } else if (ctw->parsed()) {
      auto s = load_system(file);
      const int c = curve_index(s, target), b = curve_index(s, along);
      if (c == b) throw UsageError("--target and --along name the same curve");
      write_output(out_path, serialize_system(dehn_twist(s, c, b, power)));
    } else if (cred->parsed()) {
      auto s = load_system(file);
      std::mt19937_64 rng(seed);
      ReduceResult r{s, 0, false, {}};
      if (!name_a.empty() || !name_b.empty()) {
        if (name_a.empty() || name_b.empty()) throw UsageError("--a and --b go together");
        const int a = curve_index(s, name_a), b = curve_index(s, name_b);
        if (a == b) throw UsageError("--a and --b name the same curve");
        r = reduce_pair(s, a, b, seeded ? &rng : nullptr);
      } else {
        r = reduce_all(s, seeded ? &rng : nullptr);
      }
      write_output(out_path, serialize_system(r.system));
      std::cerr << "REMOVED " << r.removed << "\n";
      for (const auto& k : r.blocked_keys) std::cerr << "BLOCKED " << k << "\n";
    } else if (bcheck->parsed()) {
      auto s = load_system(file);
      const auto cs = curve_list(s, list);
      if (cs.empty()) throw UsageError("no curves selected");
      const auto cert = detect_bouquet(s, cs);
      report.add("VERDICT", cert.yes ? "yes" : "no");
      if (cert.yes) report.add("ORDER", names(s, cert.order));
      for (const auto& w : cert.witnesses) report.add("WITNESS", witness_text(s, w));
      if (!cert.yes) {
        report.add("REASON", failure_text(cert.failure));
        report.add("DETAIL", cert.detail);
      }
      for (const auto& note : cert.notes) report.add("NOTE", note);
      code = cert.yes ? 0 : 1;
      if (!order_text.empty()) {
        const auto order = curve_list(s, order_text);
        const auto lin = check_linear_criterion(s, order);
        report.add("LINEAR", lin.yes ? "yes" : "no");
        report.add("TRIPLE_CHECKS", std::to_string(lin.triple_checks));
        if (!lin.yes) {
          report.add("FAILING_INDEX", std::to_string(lin.failing_index));
          report.add("DETAIL", lin.detail);
        }
      }
    } else if (bchain->parsed()) {
      auto s = load_system(file);
      const auto cs = curve_list(s, list);
      if (cs.empty()) throw UsageError("no curves selected");
      const auto cert = detect_bouquet(s, cs);
      if (!cert.yes) {
        report.add("VERDICT", "no");
        report.add("REASON", failure_text(cert.failure));
        report.add("DETAIL", cert.detail);
        report.emit(std::cerr);
        return 1;
      }
      write_output(out_path, serialize_system(bouquet_to_chain(s, cert)));
      return 0;
    } else if (gbq->parsed()) {
      std::cout << serialize_system(build_bouquet(n));
      return 0;
    } else if (gch->parsed()) {
      std::cout << serialize_system(build_chain(n));
      return 0;
    } else if (render->parsed()) {
      auto s = load_system(file);
      std::cout << (format == "svg" ? render_svg(s) : render_dot(s));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MoveRefused& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (ctw->parsed() || cred->parsed()) return 0;
  report.emit(std::cout);
  return code;
}
