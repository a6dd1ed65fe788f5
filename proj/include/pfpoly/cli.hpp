#pragma once

// The pfpoly command line. run() parses argv, dispatches, and writes JSON or
// CSV to `out` and "error: ..." lines to `err`.

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "pfpoly/check.hpp"
#include "pfpoly/ehrhart.hpp"
#include "pfpoly/enumerative.hpp"
#include "pfpoly/parallel.hpp"
#include "pfpoly/polytope.hpp"

namespace pfpoly::cli {

enum Exit { kOk = 0, kInternal = 1, kInvalid = 2, kUnsupported = 3, kDisagree = 4 };

constexpr int kMaxEnumerate = 12;
constexpr int kMaxCheckFull = 6;
constexpr int kMaxCheckQuick = 7;
constexpr int kMaxEhrhart = 6;

using json = nlohmann::ordered_json;

namespace detail {

inline json strings(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ";" : "") + scalar(j[i]);
    return s;
  }
  return j.dump();
}

// Arrays of scalars become one line; arrays of arrays one line per row;
// arrays of objects get a header row; objects become key,value lines.
inline void write_csv(std::ostream& out, const json& j) {
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\n";
  };
  if (j.is_array() && !j.empty() && j[0].is_object()) {
    std::vector<std::string> head;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) head.push_back(it.key());
    row(head);
    for (const auto& o : j) {
      std::vector<std::string> cells;
      for (const auto& k : head) cells.push_back(scalar(o.at(k)));
      row(cells);
    }
  } else if (j.is_array() && !j.empty() && j[0].is_array()) {
    for (const auto& r : j) {
      std::vector<std::string> cells;
      for (const auto& x : r) cells.push_back(scalar(x));
      row(cells);
    }
  } else if (j.is_array()) {
    std::vector<std::string> cells;
    for (const auto& x : j) cells.push_back(scalar(x));
    row(cells);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_array() && !it->empty() && ((*it)[0].is_object() || (*it)[0].is_array())) {
        out << it.key() << "\n";
        write_csv(out, *it);
      } else {
        row({it.key(), scalar(*it)});
      }
    }
  } else {
    row({scalar(j)});
  }
}

inline std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::size_t p = 0;
  while (p <= s.size()) {
    std::size_t q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    const std::string tok = s.substr(p, q - p);
    if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad integer '" + tok + "'");
    v.push_back(std::stoi(tok));
    p = q + 1;
  }
  return v;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> v;
  std::size_t p = 0;
  while (p <= s.size()) {
    std::size_t q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    v.push_back(parse_rational(s.substr(p, q - p)));
    p = q + 1;
  }
  return v;
}

inline json face_poset_json(const FacePosetStructure& fp) {
  json nodes = json::array(), covers = json::array();
  for (std::size_t i = 0; i < fp.nodes.size(); ++i) nodes.push_back({{"partition", fp.nodes[i].to_string()}, {"dim", fp.dims[i]}});
  for (auto [i, j] : fp.covers) covers.push_back({i, j});
  return {{"nodes", nodes}, {"covers", covers}};
}

}  // namespace detail

struct Options {
  std::string u, m, d, format = "json", level = "quick", c;
  int jobs = 0;
  long t = -1;
  bool force = false, facets_only = false;
};

inline UVector resolve_u(const Options& o) {
  if (!o.u.empty()) {
    if (!o.m.empty() || !o.d.empty()) throw InvalidInput("give either --u or --m/--d, not both");
    return UVector::parse(o.u);
  }
  if (o.m.empty()) throw InvalidInput("missing --u or --m");
  const auto m = detail::parse_ints(o.m);
  if (o.d.empty()) return default_u(m);
  return MDPair(m, detail::parse_rationals(o.d)).u();
}

inline void guard(bool over, bool force, const std::string& what) {
  if (over && !force) throw Unsupported(what + " (pass --force to run anyway)");
}

/// Result of one subcommand; code is kOk or kDisagree.
struct Outcome {
  json value;
  int code = kOk;
};

inline Outcome dispatch(const std::string& cmd, const Options& o) {
  const UVector u = resolve_u(o);
  const int n = u.n();
  const int jobs = o.jobs > 0 ? o.jobs : default_jobs();
  const auto pair = md_pair(u);
  const std::string too_big = "n = " + std::to_string(n) + " exceeds the size limit";

  if (cmd == "vertices") {
    guard(n > kMaxEnumerate, o.force, too_big);
    json a = json::array();
    for (const auto& v : vertices(u, jobs)) a.push_back(detail::strings(v));
    return {a};
  }
  if (cmd == "facets") {
    guard(n > kMaxEnumerate, o.force, too_big);
    json a = json::array();
    for (const auto& q : facet_description(u, o.facets_only))
      a.push_back({{"coeffs", detail::strings(q.coeffs)}, {"rhs", to_string(q.rhs)}, {"facet", q.facet}});
    return {a};
  }
  if (cmd == "rays") {
    guard(n > kMaxEnumerate, o.force, too_big);
    return {json(rays(u))};
  }
  if (cmd == "fvector") {
    json a = json::array();
    for (const auto& f : f_vector(u)) a.push_back(detail::integer(f));
    return {a};
  }
  if (cmd == "hpoly") return {json(h_polynomial(u).to_strings())};
  if (cmd == "ehrhart") {
    guard(n > kMaxEhrhart, o.force, too_big);
    const auto p = ehrhart_polynomial(u, jobs);
    if (o.t >= 0) return {json{{"t", o.t}, {"count", to_string(p.eval(o.t))}}};
    return {json(p.to_strings())};
  }
  if (cmd == "volume") {
    guard(n > kMaxEhrhart, o.force, too_big);
    return {json(to_string(volume(u, jobs)))};
  }
  if (cmd == "decompose") {
    json hyper = json::array(), simp = json::array();
    for (const auto& h : minkowski_hypersimplex(u)) hyper.push_back({{"k", h.k}, {"coeff", to_string(h.coeff)}});
    for (const auto& [k, y] : y_coefficients(u)) simp.push_back({{"size", k}, {"y", to_string(y)}});
    return {json{{"hypersimplices", hyper}, {"simplices", simp}}};
  }
  if (cmd == "faceposet") {
    guard(n > kMaxEnumerate, o.force, too_big);
    return {detail::face_poset_json(face_poset(u, jobs))};
  }
  if (cmd == "classify") {
    json d = json::array();
    for (const auto& x : pair.d) d.push_back(to_string(x));
    return {json{{"m", pair.m}, {"d", d}, {"simple", is_simple(u)}, {"simplicial", is_simplicial_polytope(u)}}};
  }
  if (cmd == "locate") {
    if (o.c.empty()) throw InvalidInput("locate needs --c");
    const Point c = detail::parse_rationals(o.c);
    const auto b = locate_vertex(u, c);
    return {json{{"partition", b.to_string()}, {"vertex", detail::strings(vertex_of(b, pair))}}};
  }
  if (cmd == "check") {
    const bool full = o.level == "full";
    guard(full && n > kMaxCheckFull, o.force, too_big);
    guard(!full && n > kMaxCheckQuick, o.force, too_big);
    json suites = json::array();
    bool ok = true;
    for (const auto& r : check::run_suites(u, full, jobs)) {
      ok = ok && r.ok;
      suites.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    }
    return {json{{"level", o.level}, {"ok", ok}, {"suites", suites}}, ok ? kOk : kDisagree};
  }
  throw InvalidInput("unknown subcommand " + cmd);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking function polytopes PF(u)", "pfpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--u", o.u, "u as comma-separated p or p/q");
  app.add_option("--m", o.m, "multiplicity vector m_0,...,m_l");
  app.add_option("--d", o.d, "data vector d_1,...,d_l (default 1,...,l)");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", o.jobs, "worker threads (default $PFPOLY_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--force", o.force, "ignore the size guards");

  const std::vector<std::pair<std::string, std::string>> cmds{
      {"vertices", "vertices of PF(u)"},
      {"facets", "inequality description with facet flags"},
      {"rays", "rays of the normal fan"},
      {"fvector", "f-vector (f_0, ..., f_n)"},
      {"hpoly", "h-polynomial (simple u only)"},
      {"ehrhart", "Ehrhart polynomial (integral u only)"},
      {"volume", "normalized Euclidean volume"},
      {"decompose", "Minkowski decompositions"},
      {"faceposet", "face poset as skewed binary partitions"},
      {"classify", "MD pair and simple / simplicial"},
      {"locate", "vertex partition whose normal cone contains c"},
      {"check", "oracle agreement suites"}};
  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : cmds) sub[name] = app.add_subcommand(name, help);
  sub["ehrhart"]->add_option("--t", o.t, "evaluate at t = K instead")->check(CLI::NonNegativeNumber);
  sub["facets"]->add_flag("--facets-only", o.facets_only, "drop redundant inequalities");
  sub["locate"]->add_option("--c", o.c, "point c as comma-separated rationals");
  sub["check"]->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  std::string cmd;
  for (const auto* s : app.get_subcommands()) cmd = s->get_name();
  try {
    const auto res = dispatch(cmd, o);
    if (o.format == "csv") detail::write_csv(out, res.value);
    else out << res.value.dump() << "\n";
    if (res.code == kDisagree) err << "error: oracle disagreement\n";
    return res.code;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Unsupported& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace pfpoly::cli
