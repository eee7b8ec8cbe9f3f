#include "trisqueeze/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace trisqueeze::io {

namespace {

using json = nlohmann::ordered_json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

json to_json(const Params& p) { return {{"r1", p.r1}, {"r2", p.r2}, {"r3", p.r3}}; }

json to_json(const Coeffs& c) {
  json doc;
  for (int j = 1; j <= 3; ++j) {
    doc["mode" + std::to_string(j)] = {{"f1", c.f1(j)}, {"f2", c.f2(j)}, {"g1", c.g1(j)},
                                       {"g2", c.g2(j)}, {"h1", c.h1(j)}, {"h2", c.h2(j)}};
  }
  return doc;
}

json to_json(const MomentTable& t) {
  json doc;
  doc["mean_n"] = json::array({number(t.mean_n[0]), number(t.mean_n[1]), number(t.mean_n[2])});
  doc["g2"] = json::array({optional_number(t.g2(1)), optional_number(t.g2(2)), optional_number(t.g2(3))});
  doc["v_jk"] = {{"12", optional_number(t.cauchy_schwarz(1, 2))},
                 {"13", optional_number(t.cauchy_schwarz(1, 3))},
                 {"23", optional_number(t.cauchy_schwarz(2, 3))}};
  return doc;
}

json to_json(const WignerAux& a) {
  return {{"lambda1", a.lambda1},        {"lambda2", a.lambda2},         {"b", a.b},
          {"k", a.k},                    {"theta_plus", a.theta_plus},   {"theta_minus", a.theta_minus},
          {"eta_plus", a.eta_plus},      {"eta_minus", a.eta_minus}};
}

json to_json(const TruncationReport& r) {
  return {{"norm_defect", r.norm_defect},
          {"top_shell", json::array({r.top_shell[0], r.top_shell[1], r.top_shell[2]})},
          {"acceptable", r.acceptable()}};
}

json to_json(const InputState& state) {
  if (const auto n = state.occupations()) return {{"n", json::array({(*n)[0], (*n)[1], (*n)[2]})}};
  json modes = json::array();
  for (const ModeState& m : state.modes()) {
    if (const auto* num = std::get_if<NumberState>(&m)) {
      modes.push_back({{"n", num->n}});
    } else {
      const auto a = std::get<CoherentState>(m).alpha;
      modes.push_back({{"alpha", json::array({a.real(), a.imag()})}});
    }
  }
  return {{"modes", modes}};
}

json to_json(const QuasiprobGrid& g) {
  json doc;
  doc["s"] = static_cast<int>(g.s);
  doc["x_min"] = g.grid.x_min;
  doc["x_max"] = g.grid.x_max;
  doc["nx"] = g.grid.nx;
  doc["y_min"] = g.grid.y_min;
  doc["y_max"] = g.grid.y_max;
  doc["ny"] = g.grid.ny;
  json values = json::array();
  for (int i = 0; i < g.grid.nx; ++i)
    for (int j = 0; j < g.grid.ny; ++j) values.push_back(number(g.values(i, j)));
  doc["values"] = std::move(values);
  return doc;
}

void write_csv(std::ostream& out, const QuasiprobGrid& g) {
  CsvWriter csv(out);
  csv.header({"x", "y", "w"});
  for (int i = 0; i < g.grid.nx; ++i)
    for (int j = 0; j < g.grid.ny; ++j) csv.row({g.grid.x(i), g.grid.y(j), g.values(i, j)});
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace trisqueeze::io
