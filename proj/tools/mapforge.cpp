// mapforge: command line front end over the flag-system library.
//
// Exit codes: 0 success, 1 property or precondition failure,
// 2 parse or validation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "mapforge/coloring.hpp"
#include "mapforge/construct.hpp"
#include "mapforge/corpus.hpp"
#include "mapforge/doubles.hpp"
#include "mapforge/error.hpp"
#include "mapforge/flag_io.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/properties.hpp"
#include "mapforge/realize.hpp"
#include "mapforge/surgery.hpp"

using namespace mapforge;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kProperty = 1;
constexpr int kInvalid = 2;

struct Exit {
  int code;
};

bool g_json = false;

FlagSystem load(const std::string& path) {
  if (path == "-") return read_flag_system(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  return read_flag_system(in);
}

Perm load_perm(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(Errc::Parse, "cannot open '" + path + "'");
    in = &file;
  }
  Perm p;
  std::string tok;
  while (*in >> tok) {
    if (tok.rfind("#", 0) == 0) {
      std::string rest;
      std::getline(*in, rest);
      continue;
    }
    try {
      p.push_back(static_cast<Flag>(std::stol(tok)));
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "not an integer: '" + tok + "'");
    }
  }
  return p;
}

json to_json(const FlagSystem& m) {
  json j;
  j["rank"] = m.rank();
  j["flags"] = m.size();
  j["connections"] = m.connections();
  return j;
}

std::string perm_line(const Perm& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
  return os.str();
}

// Writes a flag system to -o (or stdout).
void emit(const FlagSystem& m, const std::string& out, const json& extra = json::object()) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty() && out != "-") {
    file.open(out);
    if (!file) throw Error(Errc::Parse, "cannot write '" + out + "'");
    os = &file;
  }
  if (g_json) {
    json j = to_json(m);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    *os << j.dump() << "\n";
  } else {
    write_flag_system(*os, m);
  }
}

// Sidecar for covers: "split: true|false" and the projection.
void emit_sidecar(const std::string& path, const std::vector<std::pair<std::string, std::string>>& lines) {
  std::ofstream file;
  std::ostream* os = &std::cerr;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw Error(Errc::Parse, "cannot write '" + path + "'");
    os = &file;
  }
  for (const auto& [k, v] : lines) *os << k << ": " << v << "\n";
}

std::string degree_summary(const FlagSystem& m, int dim) {
  std::map<std::size_t, std::size_t> hist;
  for (const Cell& c : cells(m, dim)) ++hist[c.degree()];
  std::string out;
  for (const auto& [deg, count] : hist) {
    if (!out.empty()) out += ",";
    out += std::to_string(deg) + "x" + std::to_string(count);
  }
  return out;
}

int cmd_info(const std::string& path) {
  FlagSystem m = load(path);
  ColoringGroup t = coloring_group(m);
  if (m.rank() == 2) {
    auto v = cell_count(m, 0), e = cell_count(m, 1), f = cell_count(m, 2);
    SurfaceSignature s = surface_signature(m);
    if (g_json) {
      json j{{"rank", 2}, {"flags", m.size()}, {"V", v}, {"E", e}, {"F", f}, {"chi", s.euler_characteristic},
             {"surface", s.to_string()}, {"orientable", s.orientable}, {"genus", s.genus}, {"T", t.to_string()},
             {"vertex_degrees", degree_summary(m, 0)}, {"face_degrees", degree_summary(m, 2)}};
      std::cout << j.dump() << "\n";
      return kOk;
    }
    std::cout << "rank=2 flags=" << m.size() << "\n";
    std::cout << "V=" << v << " E=" << e << " F=" << f << " chi=" << s.euler_characteristic
              << " surface=" << s.to_string() << " T=" << t.to_string() << "\n";
    std::cout << "vertex_degrees=" << degree_summary(m, 0) << "\n";
    std::cout << "face_degrees=" << degree_summary(m, 2) << "\n";
    return kOk;
  }
  std::vector<std::size_t> counts;
  for (int i = 0; i <= m.rank(); ++i) counts.push_back(cell_count(m, i));
  if (g_json) {
    std::cout << json{{"rank", m.rank()}, {"flags", m.size()}, {"cells", counts}, {"T", t.to_string()}}.dump() << "\n";
    return kOk;
  }
  std::cout << "rank=" << m.rank() << " flags=" << m.size() << "\n";
  std::cout << "cells=";
  for (std::size_t i = 0; i < counts.size(); ++i) std::cout << (i ? "," : "") << counts[i];
  std::cout << " T=" << t.to_string() << "\n";
  for (int i = 0; i <= m.rank(); ++i) std::cout << "degrees" << i << "=" << degree_summary(m, i) << "\n";
  return kOk;
}

int cmd_verify(CorpusSpec spec, const std::vector<std::string>& extra, const std::string& dump_dir, unsigned threads) {
  std::vector<CorpusEntry> corpus = build_corpus(spec);
  int code = kOk;
  for (const std::string& path : extra) {
    try {
      corpus.push_back({path, load(path)});
    } catch (const Error& e) {
      std::cout << "invalid " << path << ": " << e.what() << "\n";
      code = kProperty;
    }
  }
  std::vector<const Property*> props;
  if (spec.operations.empty()) {
    for (const auto& p : registered_properties()) props.push_back(&p);
  } else {
    for (const auto& name : spec.operations) {
      const Property* p = find_property(name);
      if (!p) throw Error(Errc::UnknownName, "unknown property '" + name + "'");
      props.push_back(p);
    }
  }
  auto reports = run_properties(corpus, props, spec.seed, threads);
  json j;
  j["seed"] = spec.seed;
  j["maps"] = corpus.size();
  if (!g_json) std::cout << "seed=" << spec.seed << " maps=" << corpus.size() << "\n";
  for (const auto& r : reports) {
    if (r.failed) code = kProperty;
    if (g_json) {
      json fails = json::array();
      for (const auto& [i, msg] : r.failures) fails.push_back({{"map", corpus[i].name}, {"message", msg}});
      j["properties"].push_back({{"name", r.property}, {"passed", r.passed}, {"failed", r.failed}, {"failures", fails}});
    } else {
      std::cout << r.property << " passed=" << r.passed << " failed=" << r.failed << "\n";
      for (const auto& [i, msg] : r.failures) std::cout << "  " << corpus[i].name << ": " << msg << "\n";
    }
    if (!dump_dir.empty()) {
      for (const auto& [i, msg] : r.failures) {
        std::filesystem::create_directories(dump_dir);
        std::ofstream out(std::filesystem::path(dump_dir) / (r.property + "-" + std::to_string(i) + ".flags"));
        out << "# " << corpus[i].name << "\n# " << msg << "\n";
        write_flag_system(out, corpus[i].map);
      }
    }
  }
  if (g_json) std::cout << j.dump() << "\n";
  return code;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::Parse:
    case Errc::OutOfRange:
    case Errc::NotInvolution:
    case Errc::FixedPoint:
    case Errc::NonCommuting:
    case Errc::NotDisjoint:
    case Errc::Disconnected:
      return kInvalid;
    default:
      return kProperty;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag systems of maps and maniplexes: colorings, operators, double covers, realizations."};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");

  std::string in, in2, out, set_text, kind, sidecar, deck_path, flags_pair, group_text, surface_text, gen_name;
  std::vector<std::string> gen_params;
  int edge = -1;

  auto input = [&](CLI::App* sub) { sub->add_option("file", in, "flag file, '-' for stdin")->required(); };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", out, "write here instead of stdout"); };

  auto* validate = app.add_subcommand("validate", "check a flag file");
  input(validate);
  auto* info = app.add_subcommand("info", "cell counts, surface and coloring group");
  input(info);
  auto* color = app.add_subcommand("color", "find an I-coloring");
  input(color);
  color->add_option("-I,--set", set_text, "color set, e.g. 02 or e")->required();
  auto* tgroup = app.add_subcommand("tgroup", "print the coloring group");
  input(tgroup);
  auto* pso = app.add_subcommand("pso", "pseudo-orientation arrows");
  input(pso);
  pso->add_option("--kind", kind, "face, vertex, edge or full")->default_val("full");
  pso->add_option("-I,--set", set_text, "instead: test I-pseudo-orientability");

  std::map<std::string, CLI::App*> unary;
  for (const char* name : {"dual", "petrie", "opp", "medial", "sherk"}) {
    auto* sub = app.add_subcommand(name, std::string("apply ") + name);
    input(sub);
    output(sub);
    unary[name] = sub;
  }
  auto* dbl = app.add_subcommand("double", "I-double cover");
  input(dbl);
  output(dbl);
  dbl->add_option("-I,--set", set_text, "color set")->required();
  dbl->add_option("--sidecar", sidecar, "file for split flag and projection (default stderr)");
  auto* rec = app.add_subcommand("recognize-double", "find a base map M with N = I-double of M");
  input(rec);
  output(rec);
  rec->add_option("-I,--set", set_text, "color set")->required();
  rec->add_option("--sidecar", sidecar, "file for deck involution and projection (default stderr)");
  auto* quo = app.add_subcommand("quotient", "quotient by a deck involution");
  input(quo);
  output(quo);
  quo->add_option("--deck", deck_path, "file with the involution as N integers")->required();
  quo->add_option("--sidecar", sidecar, "file for the projection (default stderr)");
  auto* sum = app.add_subcommand("sum", "connected sum along two faces");
  sum->add_option("fileA", in, "first map")->required();
  sum->add_option("fileB", in2, "second map")->required();
  sum->add_option("--flags", flags_pair, "fA,fN")->required();
  output(sum);
  std::map<std::string, CLI::App*> edge_ops;
  for (const char* name : {"subdivide", "double-edge", "triple-edge"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " an edge");
    input(sub);
    output(sub);
    sub->add_option("--edge", edge, "edge number")->required();
    edge_ops[name] = sub;
  }
  auto* gen = app.add_subcommand("gen", "generate a named map");
  gen->add_option("name", gen_name, "generator name")->required();
  gen->add_option("params", gen_params, "generator parameters");
  output(gen);
  gen->footer([] {
    std::string s = "Generators:";
    for (const auto& n : generator_names()) s += "\n  " + n;
    return s;
  }());
  auto* build = app.add_subcommand("build-group", "map on a surface with a prescribed coloring group");
  build->add_option("--group", group_text, "e.g. e,1 or e,0,12,012")->required();
  build->add_option("--surface", surface_text, "o<g> or n<k>")->required();
  output(build);
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("fileA", in, "first map")->required();
  iso->add_option("fileB", in2, "second map")->required();
  auto* verify = app.add_subcommand("verify", "run the property suite over the corpus");
  CorpusSpec spec = default_corpus_spec();
  std::string props_text, dump_dir;
  std::vector<std::string> extra;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool seed_given = false;
  verify->add_option("--seed", spec.seed, "corpus seed (MAPFORGE_SEED overrides the default)")->each([&](const std::string&) { seed_given = true; });
  verify->add_option("--depth", spec.surgery_depth, "random insertions per surgery map");
  verify->add_option("--random", spec.random_maps, "number of random surgery maps");
  verify->add_option("--max-flags", spec.max_flags, "skip corpus maps larger than this");
  verify->add_option("--properties", props_text, "comma-separated property names (default all)");
  verify->add_option("--dump-dir", dump_dir, "write failing maps here");
  verify->add_option("--extra", extra, "additional flag files to include");
  verify->add_option("--threads", threads, "worker threads");
  bool list_props = false;
  verify->add_flag("--list", list_props, "list properties and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    auto set_of = [&](int rank) { return ColorSet::parse(set_text, rank); };
    if (*validate) {
      FlagSystem m = load(in);
      if (g_json) std::cout << json{{"valid", true}, {"rank", m.rank()}, {"flags", m.size()}}.dump() << "\n";
      else std::cout << "valid rank=" << m.rank() << " flags=" << m.size() << "\n";
      return kOk;
    }
    if (*info) return cmd_info(in);
    if (*color) {
      FlagSystem m = load(in);
      auto c = find_coloring(m, set_of(m.rank()));
      if (g_json) {
        json j{{"set", set_of(m.rank()).to_string()}, {"colorable", c.has_value()}};
        if (c) j["coloring"] = c->to_string();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (c ? c->to_string() : std::string("none")) << "\n";
      }
      return c ? kOk : kProperty;
    }
    if (*tgroup) {
      FlagSystem m = load(in);
      ColoringGroup t = coloring_group(m);
      if (g_json) std::cout << json{{"T", t.to_string()}, {"order", t.size()}}.dump() << "\n";
      else std::cout << t.to_string() << "\n";
      return kOk;
    }
    if (*pso) {
      FlagSystem m = load(in);
      if (!set_text.empty()) {
        bool ok = is_pseudo_orientable(m, set_of(m.rank()));
        if (g_json) std::cout << json{{"set", set_text}, {"pseudo_orientable", ok}}.dump() << "\n";
        else std::cout << (ok ? "pseudo-orientable" : "not pseudo-orientable") << "\n";
        return ok ? kOk : kProperty;
      }
      PsoKind k = parse_pso_kind(kind);
      auto a = direct_pso(m, k);
      std::string arrows;
      if (a) for (auto b : a->arrows) arrows += b ? '1' : '0';
      if (g_json) {
        json j{{"kind", kind}, {"present", a.has_value()}};
        if (a) j["arrows"] = arrows;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (a ? "present " + arrows : std::string("absent")) << "\n";
      }
      return a ? kOk : kProperty;
    }
    for (const auto& [name, sub] : unary) {
      if (!*sub) continue;
      FlagSystem m = load(in);
      if (name == "dual") emit(dual(m), out);
      else if (name == "petrie") emit(petrie(m), out);
      else if (name == "opp") emit(opposite(m), out);
      else if (name == "medial") emit(medial(m), out);
      else emit(sherk_double(m), out);
      return kOk;
    }
    if (*dbl) {
      FlagSystem m = load(in);
      DoubleResult d = i_double(m, set_of(m.rank()));
      emit(d.system, out, json{{"split", d.split}, {"projection", d.projection}});
      if (!g_json) emit_sidecar(sidecar, {{"split", d.split ? "true" : "false"}, {"projection", perm_line(d.projection)}});
      return kOk;
    }
    if (*rec) {
      FlagSystem n = load(in);
      auto r = recognize_i_double(n, set_of(n.rank()));
      if (!r) {
        std::cerr << "not an " << set_text << "-double\n";
        return kProperty;
      }
      emit(r->base, out, json{{"deck", r->deck}, {"projection", r->projection}});
      if (!g_json) emit_sidecar(sidecar, {{"deck", perm_line(r->deck)}, {"projection", perm_line(r->projection)}});
      return kOk;
    }
    if (*quo) {
      FlagSystem n = load(in);
      Quotient q = quotient(n, load_perm(deck_path));
      emit(q.system, out, json{{"projection", q.projection}});
      if (!g_json) emit_sidecar(sidecar, {{"projection", perm_line(q.projection)}});
      return kOk;
    }
    if (*sum) {
      FlagSystem a = load(in);
      FlagSystem b = load(in2);
      auto comma = flags_pair.find(',');
      if (comma == std::string::npos) throw Error(Errc::Parse, "--flags expects fA,fN");
      Flag fa, fb;
      try {
        fa = static_cast<Flag>(std::stol(flags_pair.substr(0, comma)));
        fb = static_cast<Flag>(std::stol(flags_pair.substr(comma + 1)));
      } catch (const std::exception&) {
        throw Error(Errc::Parse, "--flags expects two integers");
      }
      emit(connected_sum(a, b, fa, fb), out);
      return kOk;
    }
    for (const auto& [name, sub] : edge_ops) {
      if (!*sub) continue;
      FlagSystem m = load(in);
      if (name == "subdivide") emit(subdivide_edge(m, edge), out);
      else if (name == "double-edge") emit(double_edge(m, edge), out);
      else emit(triple_edge(m, edge), out);
      return kOk;
    }
    if (*gen) {
      emit(generate(gen_name, gen_params), out);
      return kOk;
    }
    if (*build) {
      ColoringGroup h = ColoringGroup::parse(group_text, 2);
      if (!h.is_subgroup()) throw Error(Errc::BadParameters, group_text + " is not a subgroup");
      emit(build_map_with_group(h, SurfaceSignature::parse(surface_text)), out);
      return kOk;
    }
    if (*iso) {
      FlagSystem a = load(in);
      FlagSystem b = load(in2);
      auto phi = is_isomorphic(a, b);
      if (g_json) {
        json j{{"isomorphic", phi.has_value()}};
        if (phi) j["bijection"] = *phi;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (phi ? "isomorphic\n" + perm_line(*phi) : std::string("not isomorphic")) << "\n";
      }
      return phi ? kOk : kProperty;
    }
    if (*verify) {
      if (list_props) {
        for (const auto& p : registered_properties()) std::cout << p.name << "  " << p.summary << "\n";
        return kOk;
      }
      if (!seed_given) spec.seed = seed_from_env(spec.seed);
      if (!props_text.empty()) {
        std::stringstream ss(props_text);
        for (std::string item; std::getline(ss, item, ',');) spec.operations.push_back(item);
      }
      return cmd_verify(spec, extra, dump_dir, threads);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kProperty;
  }
  return kOk;
}
