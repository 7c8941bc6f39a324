#include "symdisc/json_io.hpp"

#include <sstream>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

using nlohmann::json;

mpq_class parse_fraction(const json& j) {
  try {
    if (j.is_number_integer()) {
      return mpq_class(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
      mpq_class q(j.get<std::string>());
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    // fall through
  }
  throw ParseError("expected a fraction string, got: " + j.dump());
}

}  // namespace

json to_json(const ClosedFormScalar& s) {
  return json{{"q", s.rational_part().get_str()},
              {"sqrt2_exp", s.sqrt2_exp()},
              {"sqrtpi_exp", s.sqrtpi_exp()}};
}

ClosedFormScalar closed_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("sqrt2_exp") ||
      !j.contains("sqrtpi_exp")) {
    throw ParseError("scalar: expected {q, sqrt2_exp, sqrtpi_exp}");
  }
  if (!j["sqrt2_exp"].is_number_integer() ||
      !j["sqrtpi_exp"].is_number_integer()) {
    throw ParseError("scalar: exponents must be integers");
  }
  return ClosedFormScalar::make(parse_fraction(j["q"]),
                                j["sqrt2_exp"].get<long>(),
                                j["sqrtpi_exp"].get<long>());
}

json to_json(const RatPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

json to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

RatPolynomial rat_polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array");
  std::vector<mpq_class> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(parse_fraction(e));
  return RatPolynomial(std::move(c));
}

json to_json(const SymmetricMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return json{{"n", m.dim()}, {"rows", rows}};
}

namespace {

std::vector<std::vector<double>> rows_from_json(const json& rows_j) {
  if (!rows_j.is_array() || rows_j.empty()) {
    throw ParseError("matrix: rows must be a nonempty array");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(rows_j.size());
  for (const auto& row : rows_j) {
    if (!row.is_array()) throw ParseError("matrix: each row must be an array");
    std::vector<double> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number()) throw ParseError("matrix: entries must be numbers");
      r.push_back(x.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

SymmetricMatrix matrix_from_json(const json& j, double sym_tol) {
  const json* rows_j = nullptr;
  if (j.is_object()) {
    if (!j.contains("rows")) throw ParseError("matrix: missing \"rows\"");
    rows_j = &j["rows"];
  } else if (j.is_array()) {
    rows_j = &j;
  } else {
    throw ParseError("matrix: expected an object or an array of rows");
  }
  auto rows = rows_from_json(*rows_j);
  if (j.is_object() && j.contains("n")) {
    if (!j["n"].is_number_integer() ||
        j["n"].get<int>() != static_cast<int>(rows.size())) {
      throw ParseError("matrix: \"n\" does not match the number of rows");
    }
  }
  return SymmetricMatrix::from_rows(rows, sym_tol);
}

std::string matrix_to_text(const SymmetricMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << m.dim() << "\n";
  for (const auto& row : m.to_rows()) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << " ";
      os << row[j];
    }
    os << "\n";
  }
  return os.str();
}

SymmetricMatrix matrix_from_text(const std::string& text, double sym_tol) {
  std::istringstream is(text);
  int n = 0;
  if (!(is >> n) || n < 1) {
    throw ParseError("matrix text: expected a positive dimension first");
  }
  std::vector<std::vector<double>> rows(
      static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
  for (auto& row : rows) {
    for (auto& x : row) {
      if (!(is >> x)) throw ParseError("matrix text: too few entries");
    }
  }
  return SymmetricMatrix::from_rows(rows, sym_tol);
}

SymmetricMatrix matrix_from_string(const std::string& text, double sym_tol) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw ParseError("matrix: empty input");
  if (text[pos] == '{' || text[pos] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("matrix: invalid JSON: ") + e.what());
    }
    return matrix_from_json(j, sym_tol);
  }
  return matrix_from_text(text, sym_tol);
}

json to_json(const SetPartition& p) {
  json arr = json::array();
  for (const auto& block : p.blocks()) {
    json b = json::array();
    for (int e : block) b.push_back(e + 1);  // 1-based on the wire
    arr.push_back(std::move(b));
  }
  return arr;
}

SetPartition partition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("partition: expected a nonempty array of blocks");
  }
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (const auto& b : j) {
    if (!b.is_array()) throw ParseError("partition: block must be an array");
    std::vector<int> block;
    for (const auto& e : b) {
      if (!e.is_number_integer()) {
        throw ParseError("partition: elements must be integers");
      }
      block.push_back(e.get<int>() - 1);
      ++n;
    }
    blocks.push_back(std::move(block));
  }
  try {
    return SetPartition(n, std::move(blocks));
  } catch (const OutOfRangeError& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

json to_json(const MultiplicityVector& w) { return json(w.counts()); }

MultiplicityVector multiplicity_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("multiplicity vector: expected an array");
  std::vector<int> counts;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw ParseError("multiplicity vector: entries must be integers");
    }
    counts.push_back(e.get<int>());
  }
  try {
    return MultiplicityVector(std::move(counts));
  } catch (const OutOfRangeError& e) {
    throw ParseError(std::string("multiplicity vector: ") + e.what());
  }
}

json to_json(const CriticalPoint& cp) {
  return json{{"partition", to_json(cp.partition)},
              {"distance", cp.distance},
              {"matrix", to_json(cp.matrix)},
              {"global_min", cp.global_min},
              {"degenerate", cp.degenerate}};
}

json to_json(const MonteCarloReport& r) {
  json j{{"experiment", r.experiment}, {"params", r.params},
         {"estimate", r.estimate},     {"std_error", r.std_error},
         {"n_samples", r.n_samples},   {"seed", r.seed},
         {"extras", r.extras}};
  if (!r.per_trial.empty()) j["per_trial"] = r.per_trial;
  return j;
}

MonteCarloReport report_from_json(const json& j) {
  MonteCarloReport r;
  try {
    r.experiment = j.at("experiment").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, double>>();
    r.estimate = j.at("estimate").get<double>();
    r.std_error = j.at("std_error").get<double>();
    r.n_samples = j.at("n_samples").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.extras = j.at("extras").get<std::map<std::string, double>>();
    if (j.contains("per_trial")) {
      r.per_trial = j["per_trial"].get<std::vector<double>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return r;
}

}  // namespace symdisc
