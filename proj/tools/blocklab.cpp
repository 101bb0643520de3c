// blocklab: command-line front end. Exit codes: 0 pass, 1 verification
// failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "blocklab/errors.hpp"
#include "blocklab/serialize.hpp"

using namespace blocklab;

namespace {

struct Options {
  int n = 3;
  int m = 2;
  std::string fcase;
  bool json = false;
  std::string grid;
  std::string kind;
  std::string rows;
  std::uint64_t seed = 1;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Cell {
  int n, m;
  FusionCase c;
};

struct Range {
  int lo, hi;
};

std::pair<Range, Range> parse_grid(const std::string& s) {
  static const std::regex part(R"(\s*([nm])\s*=\s*(\d+)(?:\.\.(\d+))?\s*)");
  Range n{3, 3}, m{2, 2};
  bool have_n = false, have_m = false;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::smatch mt;
    if (!std::regex_match(tok, mt, part)) throw Usage("bad grid component '" + tok + "' (expected n=A..B,m=C..D)");
    Range r{std::stoi(mt[2]), mt[3].matched ? std::stoi(mt[3]) : std::stoi(mt[2])};
    if (r.lo > r.hi) throw Usage("empty grid range in '" + tok + "'");
    if (mt[1] == "n") {
      n = r;
      have_n = true;
    } else {
      m = r;
      have_m = true;
    }
  }
  if (!have_n || !have_m) throw Usage("grid needs both n and m ranges");
  return {n, m};
}

// Cells of the grid (or the single point), filtered by --case.
std::vector<Cell> cells(const Options& o, const std::string& default_grid = "") {
  std::optional<FusionCase> only;
  if (!o.fcase.empty()) only = parse_case(o.fcase);
  std::vector<Cell> out;
  const std::string g = o.grid.empty() ? default_grid : o.grid;
  if (g.empty()) {
    GroupParams p(o.n, o.m);
    if (only) {
      if (!case_valid(*only, p.n)) throw Usage("case " + o.fcase + " needs n >= 4");
      out.push_back({p.n, p.m, *only});
    } else {
      for (FusionCase c : valid_cases(p.n)) out.push_back({p.n, p.m, c});
    }
    return out;
  }
  auto [nr, mr] = parse_grid(g);
  for (int n = nr.lo; n <= nr.hi; ++n)
    for (int m = mr.lo; m <= mr.hi; ++m) {
      GroupParams p(n, m);
      for (FusionCase c : valid_cases(n))
        if (!only || *only == c) out.push_back({n, m, c});
    }
  return out;
}

FusionCase single_case(const Options& o) {
  if (o.fcase.empty()) throw Usage("--case is required");
  FusionCase c = parse_case(o.fcase);
  if (!case_valid(c, o.n)) throw Usage("case " + o.fcase + " needs n >= 4");
  return c;
}

Json cell_json(const Cell& c) { return Json{{"n", c.n}, {"m", c.m}, {"case", to_string(c.c)}}; }

void emit(const Json& j, bool single) {
  if (single && j.is_array() && j.size() == 1) std::cout << j[0].dump(2) << '\n';
  else std::cout << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- commands

int cmd_invariants(const Options& o) {
  auto cs = cells(o);
  Json arr = Json::array();
  bool ok = true;
  if (!o.json) std::cout << "n\tm\tcase\tk\tk0\tk1\tkn2\tl\te\n";
  for (const auto& c : cs) {
    BlockInvariants inv = theorem_main(GroupParams(c.n, c.m), c.c);
    long long sum = 0;
    for (const auto& [h, v] : inv.k_height) sum += v;
    ok = ok && sum == inv.k;
    if (o.json) {
      Json j = o.grid.empty() ? to_json(inv) : cell_json(c);
      if (!o.grid.empty()) j.update(to_json(inv));
      arr.push_back(j);
    } else {
      std::cout << c.n << '\t' << c.m << '\t' << to_string(c.c) << '\t' << inv.k << '\t' << inv.k0 << '\t' << inv.k1
                << '\t' << (inv.separate_kn2 ? std::to_string(inv.kn2) : "-") << '\t' << inv.l << '\t' << inv.e
                << '\n';
    }
  }
  if (o.json) emit(arr, o.grid.empty() && cs.size() == 1);
  return ok ? 0 : 1;
}

int cmd_subsections(const Options& o) {
  GroupParams p(o.n, o.m);
  FusionCase c = single_case(o);
  BlockInvariants inv = theorem_main(p, c);
  FusionSystem fs = build_fusion(p, c);
  SubsectionSum s = subsection_sum(p, c);
  auto reps = subsection_reps(fs, inv.l);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reps)
      arr.push_back({{"u", fs.group->coords(r.u)}, {"centralizer", r.defect_group.order()}, {"major", r.major},
                     {"l", r.l}});
    Json j = to_json(s);
    j["subsection_list"] = arr;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "u\t|C_D(u)|\tmajor\tl\n";
    for (const auto& r : reps)
      std::cout << fs.group->label(r.u) << '\t' << r.defect_group.order() << '\t' << (r.major ? "yes" : "no") << '\t'
                << r.l << '\n';
    std::cout << "# k-l = " << s.k_minus_l << ", sum of l over nontrivial subsections = " << s.sum_l << ": "
              << (s.ok() ? "PASS" : "FAIL") << '\n';
  }
  return s.ok() ? 0 : 1;
}

int cmd_chartable(const Options& o) {
  GroupParams p(o.n, o.m);
  const std::string kind = o.kind.empty() ? "family" : o.kind;
  CharacterTable t;
  if (kind == "family") t = family_table(p);
  else if (kind == "dixon") t = dixon_table(make_group(p));
  else throw Usage("chartable --kind must be family or dixon");
  std::string why;
  bool ok = t.verify(&why);
  if (o.json) std::cout << to_json(t).dump(2) << '\n';
  else std::cout << table_tsv(t);
  if (!ok) std::cerr << "verification failed: " << why << '\n';
  return ok ? 0 : 1;
}

int cmd_contrib(const Options& o) {
  GroupParams p(o.n, o.m);
  FusionCase c = single_case(o);
  if (c == FusionCase::bb) throw Usage("contrib needs case aa or ab");
  if (o.rows.empty()) {
    CensusReport r = census_check(p, c);
    if (o.json) std::cout << to_json(r).dump(2) << '\n';
    else std::cout << r.to_string() << (r.pass() ? "PASS" : "FAIL") << '\n';
    return r.pass() ? 0 : 1;
  }
  std::ifstream in(o.rows);
  if (!in) throw Usage("cannot open rows file " + o.rows);
  Json data;
  try {
    data = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Usage(std::string("rows file is not JSON: ") + e.what());
  }
  auto rows = rows_from_json(data);
  CycloMatrix mm = contributions(rows, cartan_case(p, c), p);
  std::vector<HeightResult> hs;
  for (const auto& r : rows) hs.push_back(height_classify(r, p, c));
  if (o.json) {
    Json mat = Json::array();
    for (const auto& r : mm) {
      Json row = Json::array();
      for (const auto& v : r) row.push_back(to_json(v));
      mat.push_back(row);
    }
    Json heights = Json::array();
    for (const auto& h : hs) heights.push_back(to_json(h));
    std::cout << Json{{"scale", 1LL << (p.n + p.m - 1)}, {"matrix", mat}, {"heights", heights}}.dump(2) << '\n';
  } else {
    for (const auto& r : mm) {
      for (std::size_t j = 0; j < r.size(); ++j) std::cout << (j ? "\t" : "") << r[j].to_string();
      std::cout << '\n';
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
      std::cout << "row " << i << ": ";
      if (hs[i].kind == HeightResult::Kind::height) std::cout << "height " << hs[i].height;
      else if (hs[i].kind == HeightResult::Kind::contradiction) std::cout << "contradiction";
      else std::cout << "undetermined";
      std::cout << " (" << hs[i].reason << ")\n";
    }
  }
  // A row the calculus rules out cannot belong to the block.
  for (const auto& h : hs)
    if (h.kind == HeightResult::Kind::contradiction) return 1;
  return 0;
}

int cmd_owc(const Options& o) {
  auto cs = cells(o);
  Json arr = Json::array();
  bool ok = true;
  for (const auto& c : cs) {
    WeightLedger l = owc_check(GroupParams(c.n, c.m), c.c);
    ok = ok && l.pass();
    if (o.json) arr.push_back(to_json(l));
    else std::cout << "# n=" << c.n << " m=" << c.m << " case " << to_string(c.c) << '\n' << l.to_string();
  }
  if (o.json) emit(arr, cs.size() == 1);
  return ok ? 0 : 1;
}

int cmd_gluing(const Options& o) {
  auto cs = cells(o);
  Json arr = Json::array();
  bool ok = true;
  for (const auto& c : cs) {
    GluingReport r = gluing_check(GroupParams(c.n, c.m), c.c);
    ok = ok && r.pass();
    if (o.json) {
      Json j = cell_json(c);
      j.update(to_json(r));
      arr.push_back(j);
    } else {
      std::cout << "# n=" << c.n << " m=" << c.m << " case " << to_string(c.c) << ": " << (r.pass() ? "PASS" : "FAIL")
                << '\n'
                << r.to_string();
    }
  }
  if (o.json) emit(arr, cs.size() == 1);
  return ok ? 0 : 1;
}

bool witness_matches(const WitnessReport& w, const GroupParams& p, std::string* detail) {
  FusionCase c = w.kind == "semidirect" ? FusionCase::aa : FusionCase::bb;
  BlockInvariants want = theorem_main(p, c);
  const auto& got = w.invariants;
  std::ostringstream os;
  os << "blocks " << w.partition.blocks.size() << ", (k,k0,k1,l) = (" << got.k << ',' << got.k0 << ',' << got.k1 << ','
     << got.l << "), expected (" << want.k << ',' << want.k0 << ',' << want.k1 << ',' << want.l << ')';
  if (detail) *detail = os.str();
  return w.partition.blocks.size() == 1 && got.k == want.k && got.k0 == want.k0 && got.k1 == want.k1 &&
         got.kn2 == want.kn2 && got.l == want.l;
}

int cmd_witness(const Options& o) {
  GroupParams p(o.n, o.m);
  const std::string kind = o.kind.empty() ? "semidirect" : o.kind;
  if (kind != "semidirect" && kind != "nilpotent") throw Usage("witness --kind must be semidirect or nilpotent");
  if (kind == "semidirect" && p.n != 3) throw Usage("the semidirect witness needs n = 3");
  WitnessReport w = run_witness(kind, p);
  std::string detail;
  bool ok = witness_matches(w, p, &detail);
  if (o.json) {
    Json j{{"blocks", w.partition.blocks.size()}, {"k", w.invariants.k}, {"k0", w.invariants.k0},
           {"k1", w.invariants.k1}};
    if (w.invariants.separate_kn2) j["kn2"] = w.invariants.kn2;
    j["l"] = w.invariants.l;
    j["group"] = to_json(*w.table.group);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << kind << " witness, group order " << w.table.group_order() << ": " << detail << ": "
              << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_awc(const Options& o) {
  auto cs = cells(o);
  Json arr = Json::array();
  bool ok = true;
  if (!o.json) std::cout << "n\tm\tcase\tweights\tl\tstatus\n";
  for (const auto& c : cs) {
    GroupParams p(c.n, c.m);
    long long w = alperin_weight_count(build_fusion(p, c.c));
    long long l = theorem_main(p, c.c).l;
    ok = ok && w == l;
    if (o.json) {
      Json j = cell_json(c);
      j.update(Json{{"weights", w}, {"l", l}, {"pass", w == l}});
      arr.push_back(j);
    } else {
      std::cout << c.n << '\t' << c.m << '\t' << to_string(c.c) << '\t' << w << '\t' << l << '\t'
                << (w == l ? "PASS" : "FAIL") << '\n';
    }
  }
  if (o.json) emit(arr, cs.size() == 1);
  return ok ? 0 : 1;
}

// Every verification on every cell. Local-structure checks whose cost grows
// with |D| (weights, gluing) run up to |D| = 2^8.
int cmd_suite(const Options& o) {
  auto cs = cells(o, "n=3..5,m=2..3");
  Report rep;
  std::mt19937_64 rng(o.seed);
  std::set<std::pair<int, int>> seen;
  for (const auto& c : cs) {
    GroupParams p(c.n, c.m);
    const std::string tag = "n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " " + to_string(c.c);
    BlockInvariants inv = theorem_main(p, c.c);
    long long sum = 0;
    for (const auto& [h, v] : inv.k_height) sum += v;
    rep.add("invariants " + tag, sum == inv.k && inv.k0 == (1LL << (c.m + 1)) && inv.k <= p.order(),
            inv.to_string());
    Report conj = conjecture_suite(inv, p);
    rep.add("conjectures " + tag, conj.pass(), std::to_string(conj.lines.size()) + " checks");
    SubsectionSum ss = subsection_sum(p, c.c);
    rep.add("subsections " + tag, ss.ok(),
            "k-l=" + std::to_string(ss.k_minus_l) + " sum=" + std::to_string(ss.sum_l));
    FusionSystem fs = build_fusion(p, c.c);
    long long w = alperin_weight_count(fs);
    rep.add("awc " + tag, w == inv.l, std::to_string(w) + " weights, l=" + std::to_string(inv.l));
    if (c.n + c.m - 1 <= 8) {
      WeightLedger l = owc_check(p, c.c);
      rep.add("owc " + tag, l.pass(), std::to_string(l.labels.size()) + " classes");
      GluingReport g = gluing_check(p, c.c);
      rep.add("gluing " + tag, g.pass(),
              std::to_string(g.objects) + " objects, H0=" + g.h0_a2.to_string() + " H1=" + g.h1_a1.to_string());
    }
    if (c.c != FusionCase::bb) {
      CensusReport cr = census_check(p, c.c);
      rep.add("census " + tag, cr.pass(), "max k " + std::to_string(cr.max_k));
      // closed form against the matrix product on random rows
      bool agree = true;
      std::uniform_int_distribution<int> coef(-2, 2);
      std::uniform_int_distribution<long> ex(0, (1L << c.m) - 1);
      CartanMatrix cm = cartan_case(p, c.c);
      for (int t = 0; t < 50; ++t) {
        std::vector<DecompRow> rows(2);
        for (auto& r : rows)
          for (std::size_t i = 0; i < cm.dim(); ++i)
            r.push_back(Cyclotomic::root_of_unity(1L << c.m, ex(rng)).scaled(coef(rng)));
        CycloMatrix mm = contributions(rows, cm, p);
        Cyclotomic cf = c.c == FusionCase::ab ? contribution_closed_form_ab(rows[0], rows[1], c.n)
                                              : contribution_closed_form_aa(rows[0], rows[1], c.n);
        agree = agree && mm[0][1] == cf;
      }
      rep.add("contributions " + tag, agree, "50 random row pairs");
    }
    if (seen.insert({c.n, c.m}).second && c.n == 3 && c.m <= 3) {
      std::string detail;
      WitnessReport wr = run_witness("semidirect", p);
      rep.add("witness semidirect n=3 m=" + std::to_string(c.m), witness_matches(wr, p, &detail), detail);
    }
    if (c.c == FusionCase::bb && c.n <= 4 && c.m <= 3) {
      std::string detail;
      WitnessReport wr = run_witness("nilpotent", p);
      rep.add("witness nilpotent " + tag, witness_matches(wr, p, &detail), detail);
    }
  }
  if (o.json) std::cout << to_json(rep).dump(2) << '\n';
  else std::cout << rep.to_string();
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blocklab: invariants of 2-blocks with defect group D_{2^n} * C_{2^m}"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* s, bool grid) {
    s->add_option("--n", o.n, "n >= 3");
    s->add_option("--m", o.m, "m >= 2");
    s->add_option("--case", o.fcase, "fusion case: aa, ab (alias ba) or bb");
    s->add_flag("--json", o.json, "JSON output");
    if (grid) s->add_option("--grid", o.grid, "grid such as n=3..6,m=2..4");
  };
  std::map<std::string, std::function<int(const Options&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, bool grid, std::function<int(const Options&)> f) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s, grid);
    commands[name] = std::move(f);
    return s;
  };
  add("invariants", "closed-form block invariants", true, cmd_invariants);
  add("subsections", "subsection representatives and the k - l identity", false, cmd_subsections);
  add("chartable", "character table of D(n,m)", false, cmd_chartable)->add_option("--kind", o.kind, "family or dixon");
  add("contrib", "contribution matrix and heights of decomposition rows (census without --rows)", false, cmd_contrib)
      ->add_option("--rows", o.rows, "JSON file with decomposition rows");
  add("owc", "ordinary weight ledger", true, cmd_owc);
  add("gluing", "obstruction groups of the gluing problem", true, cmd_gluing);
  add("witness", "end-to-end block of a concrete group", false, cmd_witness)
      ->add_option("--kind", o.kind, "semidirect or nilpotent");
  add("awc", "Alperin weight count against l", true, cmd_awc);
  add("suite", "every check on a grid", true, cmd_suite)->add_option("--seed", o.seed, "seed for random checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto* s : app.get_subcommands()) return commands.at(s->get_name())(o);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
