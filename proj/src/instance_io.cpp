#include "hypoly/instance_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hypoly {

namespace {

Mat parse_matrix(const nlohmann::json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument(std::string(what) + ": row length mismatch");
    for (int k = 0; k < cols; ++k) m(i, k) = row[k].get<double>();
  }
  return m;
}

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Instance parse_instance_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance: expected a JSON object");
  if (!j.contains("kind") || !j.contains("n"))
    throw std::invalid_argument("instance: missing \"kind\" or \"n\"");
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("instance: n must be positive");

  if (kind == "determinantal") {
    const auto& ms = j.at("matrices");
    if (!ms.is_array() || static_cast<int>(ms.size()) != n)
      throw std::invalid_argument("determinantal: need exactly n matrices");
    DeterminantalInstance inst{n, {}};
    inst.matrices.reserve(n);
    for (const auto& m : ms) inst.matrices.push_back(parse_matrix(m, n, n, "determinantal"));
    return inst;
  }
  if (kind == "product")
    return ProductInstance{n, parse_matrix(j.at("matrix"), n, n, "product")};
  if (kind == "trace")
    return TraceInstance{n, parse_matrix(j.at("adjacency"), n, n, "trace")};
  if (kind == "powersum") return PowerSumInstance{n};
  if (kind == "explicit") {
    ExplicitPolynomial poly{n, {}};
    for (const auto& term : j.at("terms")) {
      ExponentVector exp = term.at("exp").get<std::vector<int>>();
      const double coef = term.at("coef").get<double>();
      if (!is_exponent_vector(exp, n))
        throw std::invalid_argument("explicit: exponent vector not in I_{n,n}");
      if (poly.terms.count(exp))
        throw std::invalid_argument("explicit: duplicate exponent vector");
      poly.terms[exp] = coef;
    }
    return poly;
  }
  throw std::invalid_argument("instance: unknown kind \"" + kind + "\"");
}

nlohmann::json instance_to_json(const Instance& inst) {
  struct Visitor {
    nlohmann::json operator()(const ExplicitPolynomial& p) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [exp, coef] : p.terms)
        terms.push_back({{"exp", exp}, {"coef", coef}});
      return {{"kind", "explicit"}, {"n", p.n}, {"terms", terms}};
    }
    nlohmann::json operator()(const DeterminantalInstance& d) {
      nlohmann::json ms = nlohmann::json::array();
      for (const auto& m : d.matrices) ms.push_back(matrix_to_json(m));
      return {{"kind", "determinantal"}, {"n", d.n}, {"matrices", ms}};
    }
    nlohmann::json operator()(const ProductInstance& p) {
      return {{"kind", "product"}, {"n", p.n}, {"matrix", matrix_to_json(p.matrix)}};
    }
    nlohmann::json operator()(const TraceInstance& t) {
      return {{"kind", "trace"}, {"n", t.n}, {"adjacency", matrix_to_json(t.adjacency)}};
    }
    nlohmann::json operator()(const PowerSumInstance& p) {
      return {{"kind", "powersum"}, {"n", p.n}};
    }
  };
  return std::visit(Visitor{}, inst);
}

NamedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  NamedInstance named;
  named.instance = parse_instance_json(j);
  named.name = j.value("name", std::filesystem::path(path).stem().string());
  if (j.contains("labels")) named.labels = j.at("labels");
  return named;
}

std::vector<NamedInstance> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::invalid_argument("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedInstance> corpus;
  corpus.reserve(files.size());
  for (const auto& f : files) corpus.push_back(load_instance_file(f.string()));
  return corpus;
}

}  // namespace hypoly
