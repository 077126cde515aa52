#include "kmroots/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "kmroots/error.hpp"
#include "kmroots/lattice.hpp"

namespace kmroots {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw Error(ErrorKind::InvalidInput, "unknown format '" + std::string(text) + "'");
}

std::vector<RootRow> root_rows(const MultiplicityTable& table, int h) {
  std::vector<RootRow> rows;
  for (auto& [x, m] : enumerate_roots(table, h)) {
    RootRow r;
    r.height = x.height();
    r.kind = classify_root(table.matrix(), table.gram(), x);
    r.norm = form(table.gram(), x, x);
    r.mult = m;
    r.coeffs = std::move(x);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json vec(const RootVector& v) {
  json out = json::array();
  for (auto c : v.coeffs()) out.push_back(c);
  return out;
}

std::string csv_vec(const RootVector& v) {
  std::string s = "\"";
  for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "\"";
}

// Left-aligned text table with a header rule.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> w(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(rows[0]);
  std::vector<std::string> rule;
  for (auto x : w) rule.emplace_back(x, '-');
  line(rule);
  for (std::size_t i = 1; i < rows.size(); ++i) line(rows[i]);
  return out.str();
}

std::string kind_name(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::NotARoot: return "not-a-root";
  }
  return "?";
}

json string_json(const RootString& s) {
  const auto& c = s.classification;
  json j;
  j["alpha"] = vec(s.alpha);
  j["beta"] = vec(s.beta);
  j["requested"] = {s.requested.lo, s.requested.hi};
  j["window"] = {s.window.lo, s.window.hi};
  j["clipped"] = s.clipped;
  json dims = json::array();
  for (const auto& p : s.points) dims.push_back(big(p.dim));
  j["dims"] = dims;
  j["origin"] = nullptr;
  for (const auto& p : s.points)
    if (p.kind == PointKind::Origin) j["origin"] = p.n;
  j["members"] = {s.run_lo, s.run_hi};
  j["classification"] = {{"tag", to_string(c.tag)},
                         {"evidence", c.evidence},
                         {"beta_kind", kind_name(c.beta_kind)},
                         {"beta_norm", c.beta_norm},
                         {"alpha_beta", c.alpha_beta},
                         {"plus_infinite", c.plus_infinite},
                         {"minus_infinite", c.minus_infinite},
                         {"unknown_at_bound", c.unknown_at_bound},
                         {"endpoint_formula_checked", c.endpoint_formula_checked}};
  j["growth"] = {{"tag", to_string(s.growth.tag)},
                 {"direction", s.growth.direction},
                 {"shift", s.growth.shift},
                 {"witt_s", s.growth.witt_s},
                 {"witt_m", big(s.growth.witt_m)}};
  json certs = json::array();
  for (const auto& cert : s.certificates) {
    json samples = json::array();
    for (const auto& p : cert.samples)
      samples.push_back({{"n", p.n}, {"lower_bound", big(p.lower_bound)}, {"actual", big(p.actual)}});
    json values = json::array();
    for (const auto& v : cert.values) values.push_back(big(v));
    certs.push_back({{"kind", to_string(cert.kind)},
                     {"description", cert.description},
                     {"samples", samples},
                     {"values", values},
                     {"period", cert.period}});
  }
  j["certificates"] = certs;
  return j;
}

}  // namespace

std::string render_roots(const MultiplicityTable& table, const std::vector<RootRow>& rows, Format f) {
  switch (f) {
    case Format::Json: {
      json j;
      j["name"] = table.matrix().name();
      j["matrix_id"] = table.id();
      j["max_height"] = table.max_height();
      json rs = json::array();
      for (const auto& r : rows)
        rs.push_back({{"coeffs", vec(r.coeffs)},
                      {"height", r.height},
                      {"kind", kind_name(r.kind)},
                      {"norm", r.norm},
                      {"mult", big(r.mult)}});
      j["roots"] = rs;
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = "coeffs,height,kind,norm,mult\n";
      for (const auto& r : rows)
        out += csv_vec(r.coeffs) + "," + std::to_string(r.height) + "," + kind_name(r.kind) + "," +
               std::to_string(r.norm) + "," + r.mult.get_str() + "\n";
      return out;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> t{{"coeffs", "height", "kind", "norm", "mult"}};
      for (const auto& r : rows)
        t.push_back({r.coeffs.str(), std::to_string(r.height), kind_name(r.kind), std::to_string(r.norm),
                     r.mult.get_str()});
      return text_table(t);
    }
  }
  return {};
}

std::string render_string(const RootString& s, Format f) {
  switch (f) {
    case Format::Json: return string_json(s).dump(2) + "\n";
    case Format::Csv: {
      std::string out = "n,vector,kind,dim,member\n";
      for (const auto& p : s.points)
        out += std::to_string(p.n) + "," + csv_vec(p.vector) + "," + std::string(to_string(p.kind)) + "," +
               p.dim.get_str() + "," + (s.member(p.n) ? "1" : "0") + "\n";
      return out;
    }
    case Format::Table: {
      const auto& c = s.classification;
      std::ostringstream out;
      out << "alpha " << s.alpha.str() << "  beta " << s.beta.str() << "  window " << s.window.lo << ".."
          << s.window.hi << (s.clipped ? " (clipped)" : "") << '\n';
      out << "tag " << to_string(c.tag) << (c.unknown_at_bound ? " (second direction unknown at bound)" : "")
          << "  growth " << to_string(s.growth.tag) << '\n';
      out << "evidence: " << c.evidence << "\n\n";
      std::vector<std::vector<std::string>> t{{"n", "vector", "kind", "dim"}};
      for (const auto& p : s.points)
        t.push_back({std::to_string(p.n), p.vector.str(), std::string(to_string(p.kind)), p.dim.get_str()});
      out << text_table(t);
      for (const auto& cert : s.certificates) {
        out << '\n' << to_string(cert.kind) << ": " << cert.description << '\n';
        std::vector<std::vector<std::string>> ct{{"n", "lower_bound", "actual"}};
        for (const auto& p : cert.samples)
          ct.push_back({std::to_string(p.n), p.lower_bound.get_str(), p.actual.get_str()});
        out << text_table(ct);
      }
      return out.str();
    }
  }
  return {};
}

std::string render_report(const VerificationReport& r, Format f, bool timings) {
  switch (f) {
    case Format::Json: {
      json j;
      j["passed"] = r.passed();
      j["failures"] = r.failure_count();
      json ms = json::array();
      for (const auto& m : r.matrices) {
        json jm;
        jm["name"] = m.name;
        jm["matrix_id"] = m.matrix_id;
        jm["rows"] = m.rows;
        jm["max_height"] = m.max_height;
        jm["table_height"] = m.table_height;
        jm["passed"] = m.passed();
        json cs = json::array();
        for (const auto& c : m.checks) {
          json jc;
          jc["name"] = c.name;
          jc["anchor"] = c.anchor;
          jc["instances"] = c.instances;
          jc["passed"] = c.passed();
          json fs = json::array();
          for (const auto& fl : c.failures) {
            json w = json::array();
            for (const auto& v : fl.witness) w.push_back(vec(v));
            fs.push_back({{"witness", w}, {"detail", fl.detail}});
          }
          jc["failures"] = fs;
          if (timings) jc["runtime_ms"] = c.runtime_ms;
          cs.push_back(jc);
        }
        jm["checks"] = cs;
        ms.push_back(jm);
      }
      j["matrices"] = ms;
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = timings ? "matrix,check,instances,failures,passed,runtime_ms\n"
                                : "matrix,check,instances,failures,passed\n";
      for (const auto& m : r.matrices)
        for (const auto& c : m.checks) {
          out += m.name + "," + c.name + "," + std::to_string(c.instances) + "," + std::to_string(c.failures.size()) +
                 "," + (c.passed() ? "1" : "0");
          if (timings) {
            std::ostringstream t;
            t.precision(3);
            t << std::fixed << c.runtime_ms;
            out += "," + t.str();
          }
          out += "\n";
        }
      return out;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> t{{"matrix", "check", "instances", "failures", "status"}};
      if (timings) t[0].push_back("ms");
      for (const auto& m : r.matrices)
        for (const auto& c : m.checks) {
          t.push_back({m.name, c.name, std::to_string(c.instances), std::to_string(c.failures.size()),
                       c.passed() ? "pass" : "FAIL"});
          if (timings) {
            std::ostringstream s;
            s.precision(1);
            s << std::fixed << c.runtime_ms;
            t.back().push_back(s.str());
          }
        }
      std::ostringstream out;
      out << text_table(t);
      for (const auto& m : r.matrices)
        for (const auto& c : m.checks)
          for (const auto& fl : c.failures) {
            out << m.name << " " << c.name << ":";
            for (const auto& v : fl.witness) out << " " << v.str();
            out << "  " << fl.detail << '\n';
          }
      out << (r.passed() ? "all checks passed" : std::to_string(r.failure_count()) + " failure(s)") << '\n';
      return out.str();
    }
  }
  return {};
}

}  // namespace kmroots
