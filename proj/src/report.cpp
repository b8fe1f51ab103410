#include "invsub/report.hpp"

#include "invsub/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace invsub {

using ojson = nlohmann::ordered_json;

std::vector<int> ReportFamily::free_parameters() const {
  std::vector<int> out;
  for (int j = 0; j < parameters; ++j)
    if (!substitution[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

ReportFamily to_report_family(const InvariantFamily& f, int n) {
  ReportFamily r;
  r.eigen = f.eigen;
  r.parameters = f.chart;
  r.substitution = f.substitution;
  if (f.dimension > 0) r.multivector = f.multivector(n).coords();
  r.generators = f.generators;
  r.residual = f.residual;
  r.solved = f.solved;
  return r;
}

Report make_report(const MatrixSet& ms, const std::map<int, std::vector<InvariantFamily>>& families) {
  Report rep;
  rep.n = ms.n();
  rep.matrix_count = static_cast<int>(ms.matrices.size());
  rep.shift = ms.shift;
  for (const auto& [d, fs] : families) {
    ReportSection sec;
    sec.dimension = d;
    for (const auto& f : fs) {
      sec.families.push_back(to_report_family(f, rep.n));
      if (!f.solved) rep.complete = false;
    }
    rep.sections.push_back(std::move(sec));
  }
  return rep;
}

// Text rendering

namespace {

const char* const kGreek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ",
                              "ν", "ξ", "ο", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};

std::string subscript(int i) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(i)) out += digits[c - '0'];
  return out;
}

std::string basis_name(int i) { return "e" + subscript(i); }

std::string compact(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '*') out += c;
  return out;
}

std::string magnitude(const Rational& q) {
  if (q == 1) return "";
  return is_integer(q) ? to_string(q) : "(" + to_string(q) + ")";
}

// Coefficient written in front of a basis vector (or a bracketed group),
// without its leading sign.
std::string poly_factor(const ParamPoly& p, const std::vector<std::string>& names, bool& negative) {
  negative = false;
  if (p.term_count() == 1) {
    const auto [m, c] = *p.terms().begin();
    negative = sgn(c) < 0;
    const ParamPoly mono = ParamPoly::from_terms(p.k(), {{m, Rational(1)}});
    return magnitude(abs(c)) + compact(mono.to_string(names));
  }
  const ParamPoly s = p.sign_normalized();
  negative = s != p;
  return "(" + compact(s.to_string(names)) + ")";
}

std::string dimension_title(int d) {
  static const char* const words[] = {"Zero", "One", "Two", "Three", "Four", "Five", "Six", "Seven", "Eight", "Nine", "Ten"};
  const std::string w = d <= 10 ? words[d] : std::to_string(d);
  return w + "-dimensional subspaces";
}

std::string tuple_text(const EigenTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + to_string(t[i]);
  return out + ")";
}

std::string multivector_text(const std::vector<ParamPoly>& coords, int n, int d, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t r = 0; r < coords.size(); ++r) {
    const ParamPoly& x = coords[r];
    if (x.is_zero()) continue;
    std::string basis;
    const IndexSet s = IndexSet::unrank(n, d, r);
    for (int e : s.elems()) basis += (basis.empty() ? "" : "∧") + basis_name(e);
    bool neg = false;
    std::string factor;
    if (x.is_constant()) {
      neg = sgn(x.constant()) < 0;
      factor = magnitude(abs(x.constant()));
    } else {
      factor = poly_factor(x, names, neg);
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += factor + basis;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<std::string> text_parameter_names(const ReportFamily& family) {
  std::vector<std::string> names = default_parameter_names(family.parameters);
  std::size_t next = 0;
  for (int j : family.free_parameters()) {
    names[static_cast<std::size_t>(j)] = next < std::size(kGreek) ? kGreek[next] : "t" + std::to_string(j + 1);
    ++next;
  }
  return names;
}

std::string render_vector(const std::vector<ParamPoly>& v, const std::vector<std::string>& names) {
  std::string out;
  auto append = [&](bool negative, const std::string& body) {
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? "-" : "+";
    out += body;
  };
  // Constant entries first, then parametric entries grouped by coefficient.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || !v[i].is_constant()) continue;
    const Rational c = v[i].constant();
    append(sgn(c) < 0, magnitude(abs(c)) + basis_name(static_cast<int>(i) + 1));
  }
  std::vector<bool> done(v.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (done[i] || v[i].is_constant()) continue;
    std::vector<int> group;
    for (std::size_t j = i; j < v.size(); ++j) {
      if (v[j] == v[i]) {
        group.push_back(static_cast<int>(j) + 1);
        done[j] = true;
      }
    }
    bool negative = false;
    const std::string factor = poly_factor(v[i], names, negative);
    std::string body;
    for (int e : group) body += (body.empty() ? "" : "+") + basis_name(e);
    append(negative, factor + (group.size() > 1 ? "(" + body + ")" : body));
  }
  return out.empty() ? "0" : out;
}

std::string render_text(const Report& report, bool color) {
  const std::string bold = color ? "\033[1m" : "";
  const std::string yellow = color ? "\033[33m" : "";
  const std::string reset = color ? "\033[0m" : "";
  std::ostringstream os;
  os << "Common invariant subspaces of " << report.matrix_count << (report.matrix_count == 1 ? " matrix" : " matrices")
     << " on Q^" << report.n << ", shift s = " << to_string(report.shift) << "\n";
  std::size_t unsolved = 0;
  for (const auto& sec : report.sections) {
    os << "\n" << bold << dimension_title(sec.dimension) << reset << "\n";
    if (sec.dimension == 0) {
      os << "  {0}\n";
      continue;
    }
    if (sec.families.empty()) {
      os << "  (none)\n";
      continue;
    }
    std::size_t width = 0;
    for (const auto& f : sec.families) width = std::max(width, tuple_text(f.eigen).size());
    const EigenTuple* previous = nullptr;
    for (const auto& f : sec.families) {
      const std::string tuple = (previous && *previous == f.eigen) ? "" : tuple_text(f.eigen);
      previous = &f.eigen;
      os << "  " << tuple << std::string(width - tuple.size() + 3, ' ');
      const auto names = text_parameter_names(f);
      if (f.solved) {
        os << "⟨";
        for (std::size_t i = 0; i < f.generators.size(); ++i) os << (i ? ", " : "") << render_vector(f.generators[i], names);
        os << "⟩\n";
      } else {
        ++unsolved;
        os << yellow << "unsolved" << reset << ": " << multivector_text(f.multivector, report.n, sec.dimension, names);
        os << " subject to ";
        for (std::size_t i = 0; i < f.residual.size(); ++i) os << (i ? ", " : "") << compact(f.residual[i].to_string(names)) << " = 0";
        os << "\n";
      }
    }
  }
  if (unsolved > 0) {
    os << "\n" << yellow << "warning" << reset << ": " << unsolved << (unsolved == 1 ? " family" : " families")
       << " left unsolved; the listing above is incomplete\n";
  }
  if (!report.timings.empty()) {
    os << "\nTimings (seconds)\n";
    for (const auto& [phase, secs] : report.timings) os << "  " << phase << ": " << secs << "\n";
  }
  return os.str();
}

// Machine format

namespace {

ojson poly_json(const ParamPoly& p) { return p.to_string(); }

ojson vector_json(const std::vector<ParamPoly>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(poly_json(x));
  return a;
}

}  // namespace

std::string render_machine(const Report& report) {
  ojson doc;
  doc["format"] = "invsub-report";
  doc["version"] = Report::kVersion;
  doc["n"] = report.n;
  doc["matrices"] = report.matrix_count;
  doc["shift"] = to_string(report.shift);
  doc["complete"] = report.complete;
  ojson sections = ojson::array();
  for (const auto& sec : report.sections) {
    ojson s;
    s["dimension"] = sec.dimension;
    ojson fams = ojson::array();
    for (const auto& f : sec.families) {
      ojson j;
      ojson eigen = ojson::array();
      for (const auto& x : f.eigen) eigen.push_back(to_string(x));
      j["eigen"] = eigen;
      j["status"] = f.solved ? "solved" : "unsolved";
      j["parameters"] = f.parameters;
      ojson subst = ojson::object();
      for (std::size_t i = 0; i < f.substitution.size(); ++i)
        if (f.substitution[i]) subst["t" + std::to_string(i + 1)] = poly_json(*f.substitution[i]);
      j["substitution"] = subst;
      j["multivector"] = vector_json(f.multivector);
      ojson gens = ojson::array();
      for (const auto& g : f.generators) gens.push_back(vector_json(g));
      j["generators"] = gens;
      j["residual"] = vector_json(f.residual);
      fams.push_back(j);
    }
    s["families"] = fams;
    sections.push_back(s);
  }
  doc["sections"] = sections;
  if (!report.timings.empty()) {
    ojson t = ojson::object();
    for (const auto& [phase, secs] : report.timings) t[phase] = secs;
    doc["timings"] = t;
  }
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("report: " + what, 0, 0); }

const ojson& field(const ojson& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Rational rational_field(const ojson& v) {
  Rational q;
  if (!v.is_string() || !parse_rational(v.get<std::string>(), q)) schema_error("bad rational " + v.dump());
  return q;
}

ParamPoly poly_field(const ojson& v, int k) {
  if (!v.is_string()) schema_error("polynomial must be a string, got " + v.dump());
  try {
    return parse_param_poly(v.get<std::string>(), k);
  } catch (const std::invalid_argument& e) {
    schema_error(e.what());
  }
}

std::vector<ParamPoly> poly_list(const ojson& v, int k) {
  if (!v.is_array()) schema_error("expected an array of polynomials");
  std::vector<ParamPoly> out;
  for (const auto& x : v) out.push_back(poly_field(x, k));
  return out;
}

int int_field(const ojson& v) {
  if (!v.is_number_integer()) schema_error("expected an integer, got " + v.dump());
  return v.get<int>();
}

}  // namespace

Report parse_report(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("report: invalid JSON", line, col);
  }
  if (field(doc, "format") != "invsub-report") schema_error("not an invsub report");
  if (int_field(field(doc, "version")) != Report::kVersion) schema_error("unsupported version " + field(doc, "version").dump());
  Report rep;
  rep.n = int_field(field(doc, "n"));
  rep.matrix_count = int_field(field(doc, "matrices"));
  rep.shift = rational_field(field(doc, "shift"));
  if (!field(doc, "complete").is_boolean()) schema_error("'complete' must be a boolean");
  rep.complete = field(doc, "complete").get<bool>();
  for (const auto& s : field(doc, "sections")) {
    ReportSection sec;
    sec.dimension = int_field(field(s, "dimension"));
    for (const auto& j : field(s, "families")) {
      ReportFamily f;
      for (const auto& x : field(j, "eigen")) f.eigen.push_back(rational_field(x));
      const auto& status = field(j, "status");
      if (status != "solved" && status != "unsolved") schema_error("bad status " + status.dump());
      f.solved = status == "solved";
      f.parameters = int_field(field(j, "parameters"));
      if (f.parameters < 0) schema_error("negative parameter count");
      const int k = f.parameters;
      f.substitution.assign(static_cast<std::size_t>(k), std::nullopt);
      for (const auto& [name, value] : field(j, "substitution").items()) {
        const ParamPoly var = poly_field(ojson(name), k);
        const auto vars = var.variables();
        if (vars.size() != 1 || var != ParamPoly::variable(k, vars.front())) schema_error("bad substitution key " + name);
        f.substitution[static_cast<std::size_t>(vars.front())] = poly_field(value, k);
      }
      f.multivector = poly_list(field(j, "multivector"), k);
      for (const auto& g : field(j, "generators")) f.generators.push_back(poly_list(g, k));
      f.residual = poly_list(field(j, "residual"), k);
      sec.families.push_back(std::move(f));
    }
    rep.sections.push_back(std::move(sec));
  }
  if (doc.contains("timings")) {
    for (const auto& [phase, secs] : doc["timings"].items()) {
      if (!secs.is_number()) schema_error("timing '" + phase + "' is not a number");
      rep.timings[phase] = secs.get<double>();
    }
  }
  return rep;
}

}  // namespace invsub
