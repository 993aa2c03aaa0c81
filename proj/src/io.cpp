#include "hibound/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <vector>

namespace hibound {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_u64(std::string_view s, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string line_msg(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text, const ParseOptions& opts) {
  std::optional<std::uint32_t> n, k;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!k) {
      std::uint64_t kv = 0, nv = 0;
      if (tokens.size() != 2 || !to_u64(tokens[0], kv) || !to_u64(tokens[1], nv))
        throw Error(ErrorCode::MalformedHeader,
                    line_msg(line_no, "expected header \"k n\""), line_no);
      if (kv < 2 || nv == 0 || nv > UINT32_MAX)
        throw Error(ErrorCode::MalformedHeader,
                    line_msg(line_no, "header needs k >= 2 and n >= 1"), line_no);
      k = static_cast<std::uint32_t>(kv);
      n = static_cast<std::uint32_t>(nv);
      continue;
    }

    if (tokens.size() != *k)
      throw Error(ErrorCode::EdgeArity,
                  line_msg(line_no, "expected " + std::to_string(*k) +
                                        " vertices, found " +
                                        std::to_string(tokens.size())),
                  line_no);
    Edge e;
    e.reserve(*k);
    for (std::string_view t : tokens) {
      std::uint64_t v = 0;
      if (!to_u64(t, v))
        throw Error(ErrorCode::EdgeArity,
                    line_msg(line_no, "\"" + std::string(t) +
                                          "\" is not a vertex index"),
                    line_no);
      if (opts.one_based) {
        if (v == 0)
          throw Error(ErrorCode::IndexOutOfRange,
                      line_msg(line_no, "index 0 in a one-based file"), line_no);
        --v;
      }
      if (v >= *n)
        throw Error(ErrorCode::IndexOutOfRange,
                    line_msg(line_no, "vertex " + std::string(t) +
                                          " out of range for n = " +
                                          std::to_string(*n)),
                    line_no);
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(ErrorCode::EdgeArity,
                  line_msg(line_no, "edge repeats a vertex"), line_no);
    if (!seen.insert(e).second)
      throw Error(ErrorCode::DuplicateEdgeLine,
                  line_msg(line_no, "duplicate edge"), line_no);
    edges.push_back(std::move(e));
  }
  if (!k)
    throw Error(ErrorCode::MalformedHeader, "missing header \"k n\"",
                line_no == 0 ? 1 : line_no);
  return Hypergraph::from_edges(*n, *k, std::move(edges));
}

Hypergraph load_hypergraph(const std::filesystem::path& path,
                           const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str(), opts);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.k()) + " " + std::to_string(h.n()) + "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw Error(ErrorCode::InvalidParams,
              "unknown format \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------

namespace {

Json entry_json(const BoundEntry& e) {
  if (e.value) return *e.value;
  return Json{{"na", e.na_reason}};
}

std::string entry_text(const BoundEntry& e) {
  return e.value ? std::to_string(*e.value) : "na";
}

std::string alpha_text(const BoundReport& r) {
  return r.alpha ? std::to_string(*r.alpha) : "na";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* kReportCsvHeader = "n,m,k,ell,turan,turan_spencer,caro_tuza,cps,alpha\n";

}  // namespace

Json report_to_json(const BoundReport& r) {
  Json bounds = Json::object();
  bounds["ell"] = r.ell;
  bounds["turan"] = entry_json(r.turan);
  bounds["turan_spencer"] = entry_json(r.turan_spencer);
  bounds["caro_tuza"] = entry_json(r.caro_tuza);
  bounds["cps"] = entry_json(r.cps);
  Json j = Json::object();
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["bounds"] = std::move(bounds);
  j["alpha"] = r.alpha ? Json(*r.alpha) : Json(nullptr);
  j["alpha_exhausted"] = r.alpha_exhausted;
  j["warnings"] = r.warnings;
  return j;
}

std::string format_report(const BoundReport& r, Format f) {
  switch (f) {
    case Format::Json:
      return dump(report_to_json(r));
    case Format::Csv: {
      std::string out = kReportCsvHeader;
      out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
             std::to_string(r.k) + "," + std::to_string(r.ell) + "," +
             entry_text(r.turan) + "," + entry_text(r.turan_spencer) + "," +
             entry_text(r.caro_tuza) + "," + entry_text(r.cps) + "," +
             alpha_text(r) + "\n";
      return out;
    }
    case Format::Table: {
      std::ostringstream os;
      os << "n = " << r.n << ", m = " << r.m << ", k = " << r.k << "\n";
      os << std::left << std::setw(15) << "ell" << r.ell << "\n";
      for (BoundKind kind : {BoundKind::Turan, BoundKind::TuranSpencer,
                             BoundKind::CaroTuza, BoundKind::Cps}) {
        const BoundEntry& e = *r.entry(kind);
        os << std::setw(15) << bound_key(kind);
        if (e.value)
          os << *e.value;
        else
          os << "na: " << e.na_reason;
        os << "\n";
      }
      if (r.alpha_requested) {
        os << std::setw(15) << "alpha";
        if (r.alpha)
          os << *r.alpha;
        else
          os << ">= " << r.alpha_best_found << " (search not exhausted)";
        os << "\n";
      }
      for (const auto& w : r.warnings) os << "warning: " << w << "\n";
      return os.str();
    }
  }
  return {};
}

Json alpha_to_json(const Hypergraph& h, const AlphaResult& a) {
  Json j = Json::object();
  j["n"] = h.n();
  j["m"] = h.m();
  j["k"] = h.k();
  j["alpha"] = a.exhausted ? Json(a.alpha) : Json(nullptr);
  j["best_found"] = a.alpha;
  j["witness"] = a.witness.vertices;
  j["nodes_explored"] = a.nodes_explored;
  j["exhausted"] = a.exhausted;
  return j;
}

std::string format_alpha(const Hypergraph& h, const AlphaResult& a, Format f) {
  switch (f) {
    case Format::Json:
      return dump(alpha_to_json(h, a));
    case Format::Csv: {
      std::string out = "n,m,k,alpha,best_found,nodes_explored,exhausted\n";
      out += std::to_string(h.n()) + "," + std::to_string(h.m()) + "," +
             std::to_string(h.k()) + "," +
             (a.exhausted ? std::to_string(a.alpha) : "na") + "," +
             std::to_string(a.alpha) + "," + std::to_string(a.nodes_explored) +
             "," + (a.exhausted ? "true" : "false") + "\n";
      return out;
    }
    case Format::Table: {
      std::ostringstream os;
      os << "n = " << h.n() << ", m = " << h.m() << ", k = " << h.k() << "\n";
      if (a.exhausted)
        os << "alpha = " << a.alpha << "\n";
      else
        os << "alpha >= " << a.alpha << " (budget exhausted)\n";
      os << "witness = {";
      for (std::size_t i = 0; i < a.witness.vertices.size(); ++i)
        os << (i ? ", " : "") << a.witness.vertices[i];
      os << "}\nnodes explored = " << a.nodes_explored << "\n";
      return os.str();
    }
  }
  return {};
}

namespace {

Json range_json(const ValueRange& r) {
  if (r.present == 0) return nullptr;
  return Json{{"min", r.min}, {"max", r.max}, {"present", r.present}};
}

std::string pair_name(const DominanceCount& d) {
  return std::string(bound_key(d.first)) + "_vs_" + bound_key(d.second);
}

}  // namespace

Json sweep_to_json(const SweepResult& s) {
  Json spec = Json::object();
  spec["n_min"] = s.spec.n_min;
  spec["n_max"] = s.spec.n_max;
  spec["k_min"] = s.spec.k_min;
  spec["k_max"] = s.spec.k_max;
  spec["m_policy"] = s.spec.m_policy == MPolicy::Exhaustive ? "exhaustive" : "random";
  spec["instances_per_cell"] = s.spec.instances_per_cell;
  spec["seed"] = s.spec.seed;
  spec["with_alpha"] = s.spec.with_alpha;
  spec["alpha_budget"] = s.spec.alpha_budget;
  spec["regular_degree"] =
      s.spec.regular_degree ? Json(*s.spec.regular_degree) : Json(nullptr);

  Json cells = Json::array();
  for (const SweepCell& c : s.cells) {
    Json b = Json::object();
    for (BoundKind kind : kAllBounds)
      b[bound_key(kind)] = range_json(c.bounds[static_cast<std::size_t>(kind)]);
    cells.push_back(Json{{"n", c.n},
                         {"m", c.m},
                         {"k", c.k},
                         {"instances", c.instances},
                         {"bounds", std::move(b)},
                         {"alpha", range_json(c.alpha)}});
  }
  Json violations = Json::array();
  for (const Violation& v : s.violations)
    violations.push_back(Json{{"n", v.n},
                              {"m", v.m},
                              {"k", v.k},
                              {"bound", bound_key(v.bound)},
                              {"value", v.value},
                              {"alpha", v.alpha},
                              {"instance", v.instance}});
  Json dominance = Json::array();
  for (const DominanceCount& d : s.dominance)
    dominance.push_back(Json{{"pair", pair_name(d)},
                             {"wins", d.wins},
                             {"ties", d.ties},
                             {"losses", d.losses}});
  Json flagged = Json::array();
  for (const Flagged& f : s.flagged)
    flagged.push_back(
        Json{{"n", f.n}, {"m", f.m}, {"k", f.k}, {"reason", f.reason}});

  Json j = Json::object();
  j["ok"] = s.ok();
  j["instances"] = s.instances;
  j["spec"] = std::move(spec);
  j["violations"] = std::move(violations);
  j["dominance"] = std::move(dominance);
  j["flagged"] = std::move(flagged);
  j["cells"] = std::move(cells);
  return j;
}

std::string format_sweep(const SweepResult& s, Format f) {
  switch (f) {
    case Format::Json:
      return dump(sweep_to_json(s));
    case Format::Csv: {
      std::string out = "n,m,k,instances";
      for (BoundKind kind : kAllBounds)
        out += std::string(",") + bound_key(kind) + "_min," + bound_key(kind) + "_max";
      out += ",alpha_min,alpha_max\n";
      auto cols = [](const ValueRange& r) {
        if (r.present == 0) return std::string(",na,na");
        return "," + std::to_string(r.min) + "," + std::to_string(r.max);
      };
      for (const SweepCell& c : s.cells) {
        out += std::to_string(c.n) + "," + std::to_string(c.m) + "," +
               std::to_string(c.k) + "," + std::to_string(c.instances);
        for (const ValueRange& r : c.bounds) out += cols(r);
        out += cols(c.alpha) + "\n";
      }
      return out;
    }
    case Format::Table: {
      std::ostringstream os;
      os << "instances: " << s.instances << ", cells: " << s.cells.size()
         << ", violations: " << s.violations.size()
         << ", flagged: " << s.flagged.size() << "\n\n";
      os << std::left << std::setw(30) << "pair" << std::right << std::setw(10)
         << "wins" << std::setw(10) << "ties" << std::setw(10) << "losses"
         << "\n";
      for (const DominanceCount& d : s.dominance)
        os << std::left << std::setw(30) << pair_name(d) << std::right
           << std::setw(10) << d.wins << std::setw(10) << d.ties
           << std::setw(10) << d.losses << "\n";
      for (const Violation& v : s.violations)
        os << "VIOLATION n=" << v.n << " m=" << v.m << " k=" << v.k << ": "
           << bound_key(v.bound) << "=" << v.value << " > alpha=" << v.alpha
           << "\n";
      for (const Flagged& fl : s.flagged)
        os << "flagged n=" << fl.n << " m=" << fl.m << " k=" << fl.k << ": "
           << fl.reason << "\n";
      os << (s.ok() ? "OK" : "FAILED") << "\n";
      return os.str();
    }
  }
  return {};
}

Json examples_to_json(const ExampleReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(Json{{"id", c.id},
                          {"title", c.title},
                          {"passed", c.passed},
                          {"cases", c.cases},
                          {"detail", c.detail},
                          {"failures", c.failures}});
  Json j = Json::object();
  j["passed"] = r.passed();
  j["cps_threshold"] = r.cps_threshold ? Json(*r.cps_threshold) : Json(nullptr);
  j["checks"] = std::move(checks);
  return j;
}

std::string format_examples(const ExampleReport& r, Format f) {
  switch (f) {
    case Format::Json:
      return dump(examples_to_json(r));
    case Format::Csv: {
      std::string out = "id,passed,cases\n";
      for (const CheckResult& c : r.checks)
        out += c.id + "," + (c.passed ? "true" : "false") + "," +
               std::to_string(c.cases) + "\n";
      return out;
    }
    case Format::Table: {
      std::ostringstream os;
      for (const CheckResult& c : r.checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << "(" << c.id << ") "
           << c.title << "\n       " << c.detail << "\n";
        for (const auto& why : c.failures) os << "       - " << why << "\n";
      }
      os << (r.passed() ? "all checks passed" : "some checks FAILED") << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace hibound
