#include "invsub/problem.hpp"

#include "invsub/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace invsub {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), lineno, start + 1});
  }
  return out;
}

Rational entry(const Token& t) {
  Rational q;
  if (!parse_rational(t.text, q)) throw ParseError("malformed entry '" + t.text + "'", t.line, t.column);
  return q;
}

void check_square(ProblemFile& p, const std::vector<std::vector<Rational>>& rows, std::size_t line, std::size_t index) {
  if (p.n == 0) p.n = static_cast<int>(rows.front().size());
  if (rows.size() != static_cast<std::size_t>(p.n))
    throw ParseError("matrix " + std::to_string(index) + " has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(p.n),
                     line, 1);
  RatMatrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  p.matrices.push_back(std::move(m));
}

ProblemFile parse_lines(std::string_view text) {
  ProblemFile p;
  std::vector<std::vector<Rational>> block;
  std::size_t block_line = 0;
  std::size_t lineno = 0;
  std::size_t last_line = 1;
  auto close_block = [&] {
    if (block.empty()) return;
    check_square(p, block, block_line, p.matrices.size() + 1);
    block.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    pos = end + 1;
    const auto tokens = tokenize(line, lineno);
    if (tokens.empty()) {
      // Comment-only lines do not separate blocks.
      if (line.find('#') == std::string_view::npos) close_block();
      continue;
    }
    last_line = lineno;
    const std::string& head = tokens.front().text;
    if (head == "n" || head == "shift") {
      if (!block.empty()) throw ParseError("'" + head + "' inside a matrix block", lineno, tokens.front().column);
      if (!p.matrices.empty()) throw ParseError("'" + head + "' must precede the matrices", lineno, tokens.front().column);
      if (tokens.size() != 2) throw ParseError("'" + head + "' takes exactly one value", lineno, tokens.front().column);
      if (head == "n") {
        const Rational v = entry(tokens[1]);
        if (!is_integer(v) || v < 1) throw ParseError("n must be a positive integer", lineno, tokens[1].column);
        p.n = static_cast<int>(v.get_num().get_si());
      } else {
        p.shift = entry(tokens[1]);
      }
      continue;
    }
    if (block.empty()) block_line = lineno;
    std::vector<Rational> row;
    for (const auto& t : tokens) row.push_back(entry(t));
    const std::size_t width = p.n > 0 ? static_cast<std::size_t>(p.n) : (block.empty() ? row.size() : block.front().size());
    if (row.size() != width) {
      // Point at the first surplus entry, or at the last one present.
      const std::size_t at = row.size() > width ? width : row.size() - 1;
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(width), lineno,
                       tokens[at].column);
    }
    block.push_back(std::move(row));
    if (block.size() > width) throw ParseError("matrix has more than " + std::to_string(width) + " rows", lineno, 1);
  }
  close_block();
  if (p.matrices.empty()) throw ParseError("no matrices given", last_line, 1);
  return p;
}

// JSON

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// nlohmann::json keeps no source positions, so structural errors are
// located by searching for the offending key; the JSON path goes into the
// message.
Rational json_entry(const nlohmann::json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Rational q;
    if (parse_rational(v.get<std::string>(), q)) return q;
    throw ParseError("malformed entry " + v.dump() + " at " + path, 0, 0);
  }
  throw ParseError("entry at " + path + " must be an integer or a \"p/q\" string", 0, 0);
}

ProblemFile parse_json_problem(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, col);
  }
  auto locate = [&](const std::string& key) {
    const auto at = text.find("\"" + key + "\"");
    return at == std::string_view::npos ? std::pair<std::size_t, std::size_t>{1, 1} : line_column(text, at);
  };
  auto error = [&](const std::string& what, const std::string& key) {
    const auto [line, col] = locate(key);
    return ParseError(what, line, col);
  };

  if (!doc.is_object()) throw ParseError("top level must be an object", 1, 1);
  ProblemFile p;
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "shift" && key != "matrices") throw error("unknown key '" + key + "'", key);
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) throw error("n must be a positive integer", "n");
    p.n = static_cast<int>(doc["n"].get<long long>());
  }
  try {
    if (doc.contains("shift")) p.shift = json_entry(doc["shift"], "shift");
    if (!doc.contains("matrices") || !doc["matrices"].is_array()) throw error("'matrices' must be an array", "matrices");
    const auto& ms = doc["matrices"];
    if (ms.empty()) throw error("no matrices given", "matrices");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string path = "matrices[" + std::to_string(i) + "]";
      if (!ms[i].is_array() || ms[i].empty()) throw error(path + " must be a non-empty array of rows", "matrices");
      std::vector<std::vector<Rational>> rows;
      for (std::size_t r = 0; r < ms[i].size(); ++r) {
        const auto& row = ms[i][r];
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array()) throw error(rpath + " must be an array", "matrices");
        const std::size_t width = p.n > 0 ? static_cast<std::size_t>(p.n) : ms[i].size();
        if (row.size() != width)
          throw error(rpath + " has " + std::to_string(row.size()) + " entries, expected " + std::to_string(width), "matrices");
        std::vector<Rational> out;
        for (std::size_t c = 0; c < row.size(); ++c) out.push_back(json_entry(row[c], rpath + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(out));
      }
      if (p.n == 0) p.n = static_cast<int>(rows.size());
      if (rows.size() != static_cast<std::size_t>(p.n))
        throw error(path + " has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(p.n), "matrices");
      check_square(p, rows, 0, i + 1);
    }
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    const auto [line, col] = locate("matrices");
    std::string msg = e.what();
    throw ParseError(msg, line, col);
  }
  return p;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  if (i < text.size() && text[i] == '{') return parse_json_problem(text);
  return parse_lines(text);
}

std::string format_problem(const ProblemFile& problem) {
  std::ostringstream os;
  os << "n " << problem.n << '\n';
  if (problem.shift) os << "shift " << to_string(*problem.shift) << '\n';
  for (const auto& m : problem.matrices) {
    os << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace invsub
