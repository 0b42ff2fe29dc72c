#include "versal/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "versal/errors.hpp"

namespace versal {

namespace {

using nlohmann::json;

std::string degreeLabel(const Degree& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(d[i]);
  }
  return s + "}";
}

json matrixJson(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(printExpr(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json seriesJson(const TOrderSeries& s) {
  json pieces = json::array();
  for (std::size_t k = 0; k < s.size(); ++k) pieces.push_back(matrixJson(s.piece(k)));
  return pieces;
}

json degreesJson(const std::vector<Degree>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(d);
  return out;
}

void requireDegreeShape(const InputSystem& sys, const std::optional<Degree>& d) {
  if (d && d->size() != sys.ring->gradingRank())
    throw UsageError("--degree needs " + std::to_string(sys.ring->gradingRank()) +
                     " component(s), got " + std::to_string(d->size()));
}

std::string pieceName(const std::string& base, const std::optional<Degree>& d) {
  return d ? base + "_" + toString(*d) : base;
}

}  // namespace

std::string formatMatrix(const PolyMatrix& m) {
  if (m.rows() == 0) return "0\n";
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = printExpr(m(r, c));
      width[c] = std::max(width[c], cells[r][c].size());
    }
  std::vector<std::string> labels(m.rows());
  std::size_t labelWidth = 0;
  if (m.hasDegrees() && m.rowDegrees().size() == m.rows())
    for (std::size_t r = 0; r < m.rows(); ++r) {
      labels[r] = degreeLabel(m.rowDegrees()[r]);
      labelWidth = std::max(labelWidth, labels[r].size());
    }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (labelWidth) out << labels[r] << std::string(labelWidth - labels[r].size() + 1, ' ');
    out << "|";
    for (std::size_t c = 0; c < m.cols(); ++c)
      out << ' ' << cells[r][c] << std::string(width[c] - cells[r][c].size(), ' ');
    out << " |\n";
  }
  return out.str();
}

Report runCommand(const InputSystem& sys, const RunRequest& req) {
  auto start = std::chrono::steady_clock::now();
  requireDegreeShape(sys, req.degree);
  json doc;
  doc["command"] = req.command;
  doc["dims"] = json::object();
  doc["matrices"] = json::object();
  doc["series"] = json::object();
  doc["status"] = "ok";
  doc["orders_log"] = json::array();
  std::ostringstream text;
  PolyMatrix F0 = sys.generatorRow();

  if (req.command == "t1" || req.command == "t2" || req.command == "normal") {
    if (req.command == "normal" && !req.degree) throw UsageError("normal requires --degree");
    CotangentComplex cx(F0);
    TangentBasis b = req.command == "t1"       ? cx.cotangent1(req.degree)
                     : req.command == "t2"     ? cx.cotangent2(req.degree)
                                               : cx.normalMatrix(*req.degree);
    std::string name = req.command == "t1" ? "T1" : req.command == "t2" ? "T2" : "normal";
    name = pieceName(name, req.degree);
    text << "dim " << name << " = " << b.dimension() << "\n";
    if (b.dimension() > 0) text << formatMatrix(b.columns);
    doc["dims"][name] = b.dimension();
    doc["matrices"][name] = matrixJson(b.columns);
    doc["column_degrees"] = degreesJson(b.columnDegrees);
  } else if (req.command == "deform") {
    CotangentComplex cx(F0);
    std::optional<TangentBasis> t1, t2;
    if (req.degree) {
      t1 = cx.normalMatrix(*req.degree);
      t2 = cx.cotangent2(*req.degree);
    }
    std::vector<std::string> lines;
    DeformationOptions opts;
    opts.maxOrder = req.maxOrder;
    opts.verbosity = 2;
    opts.log = [&](const std::string& line) {
      lines.push_back(line);
      bool status = line.rfind("Solution", 0) == 0 || line.rfind("Stopped", 0) == 0;
      if (req.log && (req.verbosity >= 2 || (req.verbosity >= 1 && status))) req.log(line);
    };
    DeformationState st = versalDeformation(cx, t1, t2, opts);
    VerificationReport check = verifyState(st);
    if (!check.ok) throw Error("internal: lifted family fails verification: " + check.failures[0]);

    PolyMatrix G = st.G.sum();
    std::size_t equations = 0;
    for (std::size_t k = 0; k < G.rows(); ++k) equations += !G(k, 0).isZero();
    text << "status: " << toString(st.status) << "\n";
    text << "order: " << st.order << "\n";
    text << "parameters: " << st.ring->numT() << "\n";
    text << "equations: " << equations << "\n";
    text << "sum G =\n" << formatMatrix(G);
    PolyMatrix Ft = st.F.sum().transpose();
    std::vector<Degree> rowDeg;
    if (cx.homogeneous()) {
      for (const auto& d : cx.generators().colDegrees()) rowDeg.push_back(-d);
      Ft.setDegrees(rowDeg, {sys.ring->zeroDegree()});
    }
    text << "transpose sum F =\n" << formatMatrix(Ft);

    doc["status"] = toString(st.status);
    doc["order"] = st.order;
    doc["parameters"] = st.ring->tVars();
    doc["dims"] = {{"generators", F0.cols()},
                   {"relations", cx.relations().cols()},
                   {"T1", st.ring->numT()},
                   {"T2", st.V.cols()},
                   {"equations", equations}};
    doc["matrices"] = {{"F", matrixJson(st.F.sum())},
                       {"R", matrixJson(st.R.sum())},
                       {"G", matrixJson(G)},
                       {"C", matrixJson(st.C.sum())}};
    doc["series"] = {{"F", seriesJson(st.F)},
                     {"R", seriesJson(st.R)},
                     {"G", seriesJson(st.G)},
                     {"C", seriesJson(st.C)}};
    doc["orders_log"] = lines;
  } else if (req.command == "gb") {
    GroebnerBasis gb = GroebnerBasis::ofIdeal(sys.generators);
    std::vector<Polynomial> polys = gb.polynomials();
    text << "GB (" << polys.size() << " elements):\n";
    json arr = json::array();
    for (const auto& p : polys) {
      text << "  " << printExpr(p) << "\n";
      arr.push_back(printExpr(p));
    }
    doc["dims"]["gb"] = polys.size();
    doc["matrices"]["gb"] = json::array({arr});
  } else if (req.command == "hilbert") {
    GroebnerBasis gb = GroebnerBasis::ofIdeal(sys.generators);
    json values = json::array();
    if (req.degree) {
      std::size_t h = hilbertFunction(gb, *req.degree);
      text << "H" << toString(*req.degree) << " = " << h << "\n";
      values.push_back({{"degree", *req.degree}, {"value", h}});
    } else {
      if (sys.ring->gradingRank() != 1)
        throw UsageError("hilbert on a multigraded ring needs --degree");
      if (req.hilbertUpto < 0) throw UsageError("--upto must be non-negative");
      for (int e = 0; e <= req.hilbertUpto; ++e) {
        std::size_t h = hilbertFunction(gb, Degree{e});
        text << "H(" << e << ") = " << h << "\n";
        values.push_back({{"degree", Degree{e}}, {"value", h}});
      }
    }
    doc["hilbert"] = values;
  } else {
    throw UsageError("unknown command '" + req.command + "'");
  }

  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  doc["timing"] = {{"seconds", seconds}};
  return {text.str(), doc.dump(2) + "\n"};
}

}  // namespace versal
