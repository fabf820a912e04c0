#include "mintri/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mintri/certificate.hpp"
#include "mintri/isosig.hpp"
#include "mintri/lst.hpp"
#include "mintri/monodromy.hpp"
#include "mintri/moves.hpp"
#include "mintri/search.hpp"

namespace mintri::cli {

namespace {

using json = nlohmann::json;
using Idx = std::size_t;

class CliError : public std::runtime_error {
 public:
  CliError(int code, std::string kind, const std::string& message)
      : std::runtime_error(message), code_(code), kind_(std::move(kind)) {}
  int code() const { return code_; }
  const std::string& kind() const { return kind_; }

 private:
  int code_;
  std::string kind_;
};

json error_json(int code, const std::string& kind, const std::string& message) {
  return {{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
}

// Turns the active exception into an (exit code, error object) pair.
std::pair<int, json> current_error() {
  try {
    throw;
  } catch (const CliError& e) {
    return {e.code(), error_json(e.code(), e.kind(), e.what())};
  } catch (const TriangulationError& e) {
    const int code = e.kind() == ErrorKind::kBrokenInvariant ? kInternal : kMalformed;
    return {code, error_json(code, to_string(e.kind()), e.what())};
  } catch (const std::exception& e) {
    return {kInternal, error_json(kInternal, "internal", e.what())};
  }
}

std::string bit_string(const Bits& b) {
  std::string s(b.size(), '0');
  for (Idx i = 0; i < b.size(); ++i)
    if (b[i]) s[i] = '1';
  return s;
}

json histogram(const std::map<int, int>& h) {
  json j = json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

json gluings_json(const Triangulation& tri) {
  json rows = json::array();
  for (int t = 0; t < tri.size(); ++t) {
    json row = json::array();
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      row.push_back(g ? json{{"tet", g->tet}, {"perm", g->perm.str()}} : json(nullptr));
    }
    rows.push_back(row);
  }
  return rows;
}

FaceTable table_from_json(const json& doc) {
  auto bad = [](const std::string& m) { return CliError(kMalformed, "malformed_gluing", m); };
  if (!doc.is_object() || !doc.contains("gluings") || !doc["gluings"].is_array())
    throw bad("expected an object with a \"gluings\" array");
  const json& rows = doc["gluings"];
  FaceTable table(rows.size());
  for (Idx t = 0; t < rows.size(); ++t) {
    if (!rows[t].is_array() || rows[t].size() != 4) throw bad("each tetrahedron needs four face entries");
    for (Idx f = 0; f < 4; ++f) {
      const json& e = rows[t][f];
      if (e.is_null()) continue;
      if (!e.is_object() || !e.contains("tet") || !e.contains("perm") || !e["tet"].is_number_integer() ||
          !e["perm"].is_string())
        throw bad("face entry must be null or {\"tet\": int, \"perm\": \"abcd\"}");
      try {
        table[t][f] = Gluing{e["tet"].get<int>(), Perm4::from_string(e["perm"].get<std::string>())};
      } catch (const std::invalid_argument& ex) {
        throw bad(ex.what());
      }
    }
  }
  return table;
}

json decode_report(const Triangulation& tri, const std::string& input) {
  return {{"input", input},
          {"signature", encode_canonical(tri)},
          {"tetrahedra", tri.size()},
          {"gluings", gluings_json(tri)}};
}

json analyze_report(const Triangulation& tri) {
  const Skeleton sk = skeleton(tri);
  const AnatomyReport ar = anatomy_report(sk);
  json links = json::array();
  for (const auto& v : sk.vertices)
    links.push_back({{"euler", v.link.euler},
                     {"orientable", v.link.orientable},
                     {"vertices", v.link.vertices},
                     {"edges", v.link.edges},
                     {"triangles", v.link.triangles}});
  json faces = json::object();
  for (FaceType t : {FaceType::kTriangle, FaceType::kCone, FaceType::kMoebius, FaceType::kThreeFold, FaceType::kDunce})
    faces[to_string(t)] = ar.face_types.count(t) ? ar.face_types.at(t) : 0;
  json degrees = json::array();
  for (const auto& e : sk.edges) degrees.push_back(e.degree);
  return {{"signature", encode_canonical(tri)},
          {"tetrahedra", tri.size()},
          {"edge_degrees", degrees},
          {"min_degree", ar.min_degree},
          {"degree_histogram", histogram(ar.degree_histogram)},
          {"face_types", faces},
          {"vertex_classes", ar.vertex_classes},
          {"links", links},
          {"all_links_tori", ar.all_links_tori},
          {"orientable", ar.orientable},
          {"admissible", is_admissible(sk)},
          {"passes", ar.passes}};
}

json cohomology_report(const Triangulation& tri) {
  const Skeleton sk = skeleton(tri);
  const CocycleBasis basis = cocycle_space(sk);
  json b = json::array();
  json rank1 = json::array();
  for (const auto& phi : basis.basis) {
    b.push_back(bit_string(phi));
    const Rank1Census c = classify_rank1(sk, phi);
    rank1.push_back({{"n_q", c.n_q}, {"n_t", c.n_t}, {"n_empty", c.n_empty}});
  }
  return {{"signature", encode_canonical(tri)},
          {"edges", sk.edges.size()},
          {"rank", basis.rank()},
          {"basis", b},
          {"rank1", rank1},
          {"nonzero_cocycles", nonzero_cocycles(basis).size()},
          {"rank_two_subgroups", rank_two_subgroups(basis).size()}};
}

json subgroup_json(const SubgroupAnalysis& a) {
  const RankTwoColouring& rc = a.colouring;
  const IdentityReport& id = a.identities;
  json phi = json::array();
  for (const auto& p : rc.phi) phi.push_back(bit_string(p));
  json components = json::array();
  for (const auto& parts : a.parts) {
    json list = json::array();
    for (const auto& c : parts.parts) list.push_back({{"euler", c.euler}, {"orientable", c.orientable}});
    components.push_back(list);
  }
  int sum_neg_chi = 0;
  for (int c : a.chi) sum_neg_chi -= c;
  return {{"phi", phi},
          {"n_qtt", rc.n_qtt},
          {"n_qq", rc.n_qq},
          {"n_tt", rc.n_tt},
          {"n_empty", rc.n_empty},
          {"n_qqq", rc.n_qqq},
          {"e0even", rc.e0even},
          {"e_tilde", rc.e_tilde},
          {"e_histogram", histogram(rc.e_histogram)},
          {"chi", a.chi},
          {"sum_neg_chi", sum_neg_chi},
          {"components", components},
          {"identities",
           {{"type_count", id.type_count()},
            {"edge_count", id.edge_count()},
            {"degree3", id.degree3()},
            {"degree3_applicable", id.degree3_applicable},
            {"degree3_general", id.degree3_general()},
            {"chi_k", id.chi_k()},
            {"all", id.all()}}}};
}

json certificate_report(const Triangulation& tri) {
  const Skeleton sk = skeleton(tri);
  const CocycleBasis basis = cocycle_space(sk);
  const auto groups = rank_two_subgroups(basis);
  json subgroups = json::array();
  for (const auto& g : groups) subgroups.push_back(subgroup_json(analyze_subgroup(tri, sk, g)));
  json r = {{"signature", encode_canonical(tri)},
            {"tetrahedra", tri.size()},
            {"rank", basis.rank()},
            {"subgroups", subgroups},
            {"certificate_found", false}};
  const auto cert = bound_certificate(tri, sk);
  if (cert) {
    r.update(subgroup_json(cert->analysis));
    r["certificate_found"] = cert->holds();
    r["even"] = cert->even;
    r["alternates"] = cert->alternates;
    r["no_spheres"] = cert->no_spheres;
    r["sum_neg_chi"] = cert->sum_neg_chi;
  }
  return r;
}

json matrix_json(const Mat2& m) { return json::array({json(m[0]), json(m[1])}); }

json monodromy_report(const std::string& word) {
  const BundleCertificate bc = bundle_certificate(word);
  const BundleTriangulation base = build_bundle(word);
  json r = {{"word", bc.base.word},
            {"matrix", matrix_json(bc.base.matrix)},
            {"trace", bc.base.trace},
            {"mod2_order", bc.base.order},
            {"lifted_word", bc.lifted.word},
            {"base_tetrahedra", base.tri.size()},
            {"base_signature", encode_canonical(base.tri)},
            {"tetrahedra", bc.tetrahedra},
            {"convention", "R = [[1,1],[0,1]], L = [[1,0],[1,1]]; each letter layers one tetrahedron whose "
                           "bottom edge pair is the flipped diagonal; quad 0 is horizontal"},
            {"certificate_found", bc.found()},
            {"horizontal_count", bc.horizontal_count},
            {"horizontal_once", bc.horizontal_once}};
  if (bc.certificate) {
    r.update(subgroup_json(bc.certificate->analysis));
    r["sum_neg_chi"] = bc.sum_neg_chi;
  }
  return r;
}

json lst_json(const LstCertificate& c) {
  return {{"tets", c.tets},
          {"core", c.core},
          {"params", {c.params.a, c.params.b, c.params.c}},
          {"boundary_edges", c.boundary_edges},
          {"degrees", c.degrees},
          {"maximal", c.maximal}};
}

json lst_report(const Triangulation& tri) {
  const auto found = detect_degree3(tri);
  json edges = json::array();
  std::vector<std::pair<int, LstCertificate>> maximal;
  for (Idx i = 0; i < found.size(); ++i) {
    const auto& d = found[i];
    json e = {{"edge", d.edge}, {"three_two", d.three_two}};
    if (d.certificate) {
      const LstCertificate m = maximal_extension(*d.certificate, tri);
      e["certificate"] = lst_json(*d.certificate);
      e["maximal"] = lst_json(m);
      maximal.emplace_back(static_cast<int>(i), m);
    } else {
      e["failure"] = d.failure;
    }
    edges.push_back(e);
  }
  json pairs = json::array();
  for (Idx i = 0; i < maximal.size(); ++i)
    for (Idx j = i + 1; j < maximal.size(); ++j)
      pairs.push_back({{"pair", {maximal[i].first, maximal[j].first}},
                       {"kind", to_string(pairwise_intersection(maximal[i].second, maximal[j].second, tri))}});
  return {{"signature", encode_canonical(tri)}, {"degree3", edges}, {"intersections", pairs}};
}

json moves_report(const Triangulation& tri) {
  json sites = json::array();
  std::map<std::string, int> counts{{"2-3", 0}, {"3-2", 0}, {"4-4", 0}};
  for (const auto& s : enumerate_moves(tri)) {
    json j = {{"kind", to_string(s.kind)}, {"cell", s.cell}, {"description", describe(s)}};
    if (s.kind == MoveKind::kFourFour) j["axis"] = s.axis;
    sites.push_back(j);
    ++counts[to_string(s.kind)];
  }
  return {{"signature", encode_canonical(tri)}, {"sites", sites}, {"counts", counts}};
}

struct SearchOptions {
  int cap = 3;
  int depth = 8;
  std::size_t max_states = 200000;
  unsigned seed = 0;
};

json minsearch_report(const Triangulation& tri, const SearchOptions& o) {
  const MoveSearchResult r = bounded_move_search(tri, o.cap, o.depth, o.max_states, o.seed);
  json j = {{"signature", encode_canonical(tri)},
            {"start_tets", r.start_tets},
            {"cap", o.cap},
            {"depth", o.depth},
            {"reachable", r.reachable.size()},
            {"min_tets", r.min_tets},
            {"found_smaller", r.found_smaller},
            {"truncated", r.truncated},
            {"depth_reached", r.depth_reached}};
  if (r.found_smaller) {
    j["smaller"] = r.smaller;
    j["smaller_depth"] = r.smaller_depth;
  }
  return j;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kIo, "io", "cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  if (in.bad()) throw CliError(kIo, "io", "read error on " + path);
  return lines;
}

using SigCommand = std::function<json(const Triangulation&, const std::string&)>;

// A signature, or a census file processed as JSON lines in input order.
int run_on_target(const std::string& target, const SigCommand& cmd, unsigned jobs, std::ostream& out) {
  if (!std::filesystem::is_regular_file(target)) {
    try {
      out << cmd(decode(target), target).dump(2) << "\n";
      return kOk;
    } catch (...) {
      auto [code, err] = current_error();
      err["error"]["input"] = target;
      out << err.dump(2) << "\n";
      return code;
    }
  }
  std::vector<std::string> sigs;
  for (const auto& line : read_lines(target)) {
    std::string s = census_entry(line);
    if (!s.empty()) sigs.push_back(std::move(s));
  }
  std::vector<std::string> results(sigs.size());
  std::vector<int> codes(sigs.size(), kOk);
  std::atomic<Idx> next{0};
  auto worker = [&] {
    for (Idx i = next++; i < sigs.size(); i = next++) {
      try {
        results[i] = cmd(decode(sigs[i]), sigs[i]).dump();
      } catch (...) {
        auto [code, err] = current_error();
        err["error"]["input"] = sigs[i];
        results[i] = err.dump();
        codes[i] = code;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(sigs.size())));
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& line : results) out << line << "\n";
  const auto bad = std::find_if(codes.begin(), codes.end(), [](int c) { return c != kOk; });
  return bad == codes.end() ? kOk : *bad;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Ideal triangulation toolkit: signatures, anatomy, Z2 cohomology, bound certificates", "mintri"};
  app.require_subcommand(1);
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("-j,--jobs", jobs, "Worker threads for census files")->check(CLI::PositiveNumber);

  std::string target;
  std::string file;
  auto* decode_cmd = app.add_subcommand("decode", "Decode a signature into its gluing table");
  decode_cmd->add_option("sig", target, "Signature or census file")->required();
  auto* encode_cmd = app.add_subcommand("encode", "Canonical signature of a JSON gluing table");
  encode_cmd->add_option("file", file, "JSON file as printed by decode")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Edge degrees, vertex links and face types");
  analyze_cmd->add_option("sig", target, "Signature or census file")->required();
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Z2 cocycle space");
  cohomology_cmd->add_option("sig", target, "Signature or census file")->required();
  auto* certificate_cmd = app.add_subcommand("certificate", "Canonical surfaces and the all-quad bound certificate");
  certificate_cmd->add_option("sig", target, "Signature or census file")->required();
  std::string word;
  auto* monodromy_cmd = app.add_subcommand("monodromy", "Layered punctured torus bundle of a word in R and L");
  monodromy_cmd->add_option("-w,--word", word, "Monodromy word")->required();
  auto* lst_cmd = app.add_subcommand("lst", "Layered solid tori around degree-3 edges");
  lst_cmd->add_option("sig", target, "Signature or census file")->required();
  auto* moves_cmd = app.add_subcommand("moves", "Applicable 2-3, 3-2 and 4-4 moves");
  moves_cmd->add_option("sig", target, "Signature or census file")->required();

  int tets = 2;
  std::string filter = "census";
  std::vector<std::string> names;
  for (const auto& p : predicates()) names.push_back(p.name);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All complexes on one or two tetrahedra passing a filter");
  enumerate_cmd->add_option("-n,--tets", tets, "Number of tetrahedra")->required()->check(CLI::Range(1, 2));
  enumerate_cmd->add_option("-f,--filter", filter, "Filter name")->check(CLI::IsMember(names))->capture_default_str();

  SearchOptions search;
  auto* minsearch_cmd = app.add_subcommand("minsearch", "Bounded breadth-first search over moves");
  minsearch_cmd->add_option("sig", target, "Signature or census file")->required();
  minsearch_cmd->add_option("--cap", search.cap, "Maximum tetrahedra")->capture_default_str();
  minsearch_cmd->add_option("--depth", search.depth, "Maximum number of moves")->capture_default_str();
  minsearch_cmd->add_option("--max-states", search.max_states, "Truncate after this many signatures")
      ->capture_default_str();
  minsearch_cmd->add_option("--seed", search.seed, "Shuffle move order")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_json(kUsage, "usage", e.what()).dump(2) << "\n";
    return kUsage;
  }

  try {
    if (*decode_cmd) return run_on_target(target, decode_report, jobs, out);
    if (*analyze_cmd)
      return run_on_target(target, [](const Triangulation& t, const std::string&) { return analyze_report(t); },
                           jobs, out);
    if (*cohomology_cmd)
      return run_on_target(target, [](const Triangulation& t, const std::string&) { return cohomology_report(t); },
                           jobs, out);
    if (*certificate_cmd)
      return run_on_target(
          target, [](const Triangulation& t, const std::string&) { return certificate_report(t); }, jobs, out);
    if (*lst_cmd)
      return run_on_target(target, [](const Triangulation& t, const std::string&) { return lst_report(t); }, jobs,
                           out);
    if (*moves_cmd)
      return run_on_target(target, [](const Triangulation& t, const std::string&) { return moves_report(t); }, jobs,
                           out);
    if (*minsearch_cmd)
      return run_on_target(
          target, [&](const Triangulation& t, const std::string&) { return minsearch_report(t, search); }, jobs, out);
    if (*encode_cmd) {
      std::ifstream in(file);
      if (!in) throw CliError(kIo, "io", "cannot open " + file);
      json doc;
      try {
        in >> doc;
      } catch (const json::parse_error& e) {
        throw CliError(kMalformed, "malformed_json", e.what());
      }
      const Triangulation tri = Triangulation::build(table_from_json(doc));
      out << json{{"signature", encode_canonical(tri)}, {"tetrahedra", tri.size()}}.dump(2) << "\n";
      return kOk;
    }
    if (*monodromy_cmd) {
      out << monodromy_report(word).dump(2) << "\n";
      return kOk;
    }
    if (*enumerate_cmd) {
      const NamedPredicate& p = predicate(filter);
      json sigs = json::array();
      for (const auto& f : enumerate_complexes(tets, p)) sigs.push_back(f.sig);
      out << json{{"filter", p.name},
                  {"description", p.description},
                  {"tetrahedra", tets},
                  {"count", sigs.size()},
                  {"signatures", sigs}}
                 .dump(2)
          << "\n";
      return kOk;
    }
  } catch (...) {
    auto [code, err] = current_error();
    out << err.dump(2) << "\n";
    return code;
  }
  out << error_json(kUsage, "usage", "no subcommand").dump(2) << "\n";
  return kUsage;
}

}  // namespace mintri::cli
