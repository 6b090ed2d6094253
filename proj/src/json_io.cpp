#include "liebra/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace liebra {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

std::vector<std::vector<Rational>> read_entry_rows(const json& j, std::size_t rows,
                                                   std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("matrix: wrong number of entry rows");
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& r = j[i];
    if (!r.is_array() || r.size() != cols)
      throw std::invalid_argument("matrix: wrong entry row length");
    for (std::size_t k = 0; k < cols; ++k)
      out[i].push_back(Rational::parse(r[k].get<std::string>()));
  }
  return out;
}

} // namespace

LieAlgebra read_algebra_json(const std::string& text) {
  json j = parse_json(text);
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != dim)
    throw std::invalid_argument("algebra: basis length disagrees with dim");

  std::vector<LieAlgebra::BracketEntry> entries;
  for (const json& b : j.at("brackets")) {
    LieAlgebra::BracketEntry e;
    e.i = b.at("i").get<std::size_t>();
    e.j = b.at("j").get<std::size_t>();
    e.value = zero_vector(dim);
    for (const json& term : b.at("value")) {
      const std::size_t k = term.at(0).get<std::size_t>();
      if (k >= dim) throw std::invalid_argument("algebra: bracket component out of range");
      e.value[k] = Rational::parse(term.at(1).get<std::string>());
    }
    entries.push_back(std::move(e));
  }
  std::vector<std::vector<std::size_t>> grading;
  if (j.contains("grading"))
    grading = j.at("grading").get<std::vector<std::vector<std::size_t>>>();
  return LieAlgebra(std::move(labels), entries, std::move(grading));
}

LieAlgebra read_algebra_file(const std::string& path) {
  return read_algebra_json(read_text_file(path));
}

std::string write_algebra_json(const LieAlgebra& a) {
  json j;
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  json brackets = json::array();
  for (const auto& e : a.nonzero_brackets()) {
    json value = json::array();
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!e.value[k].is_zero()) value.push_back({k, e.value[k].str()});
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"value", value}});
  }
  j["brackets"] = std::move(brackets);
  if (a.has_grading()) j["grading"] = a.grading();
  return j.dump(2) + "\n";
}

Matrix read_matrix_json(const std::string& text) {
  json j = parse_json(text);
  std::size_t rows, cols;
  if (j.contains("size")) {
    rows = cols = j.at("size").get<std::size_t>();
  } else {
    rows = j.at("rows").get<std::size_t>();
    cols = j.at("cols").get<std::size_t>();
  }
  return Matrix::from_rows(read_entry_rows(j.at("entries"), rows, cols));
}

Matrix read_matrix_file(const std::string& path) {
  return read_matrix_json(read_text_file(path));
}

std::string write_matrix_json(const Matrix& m) {
  json j;
  if (m.is_square())
    j["size"] = m.rows();
  else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AffineExpr AffineExpr::parse(const std::string& s) {
  AffineExpr out;
  // Split into signed terms at top level; each term is "coef", "name" or
  // "coef*name" with coef a rational literal.
  std::size_t pos = 0;
  const std::size_t n = s.size();
  auto skip_ws = [&] { while (pos < n && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
  skip_ws();
  if (pos == n) throw std::invalid_argument("empty expression");
  bool first = true;
  while (pos < n) {
    skip_ws();
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms: " + s);
    }
    first = false;
    const std::size_t term_start = pos;
    while (pos < n && s[pos] != '+' && s[pos] != '-') ++pos;
    std::string term = s.substr(term_start, pos - term_start);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
      term.pop_back();
    if (term.empty()) throw std::invalid_argument("empty term in expression: " + s);

    Rational coef(sign);
    std::string name;
    const std::size_t star = term.find('*');
    if (star != std::string::npos) {
      coef *= Rational::parse(term.substr(0, star));
      name = term.substr(star + 1);
    } else if (std::isalpha(static_cast<unsigned char>(term[0])) || term[0] == '_') {
      name = term;
    } else {
      coef *= Rational::parse(term);
    }
    if (name.empty()) {
      out.constant += coef;
    } else {
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw std::invalid_argument("bad parameter name '" + name + "'");
      out.linear[name] += coef;
    }
  }
  // Normalize away cancelled parameter terms.
  for (auto it = out.linear.begin(); it != out.linear.end();)
    it = it->second.is_zero() ? out.linear.erase(it) : std::next(it);
  return out;
}

Rational AffineExpr::eval(const std::map<std::string, Rational>& values) const {
  Rational v = constant;
  for (const auto& [name, coef] : linear) {
    auto it = values.find(name);
    if (it == values.end())
      throw std::invalid_argument("expression needs a value for parameter '" + name + "'");
    v += coef * it->second;
  }
  return v;
}

} // namespace liebra
