#include "rayleigh/mtr_format.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rayleigh/errors.hpp"
#include "rayleigh/field_matrix.hpp"

namespace rayleigh {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream row(raw);
    Line line;
    line.number = number;
    std::string token;
    while (row >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& token) {
  try {
    size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + token + "'");
  }
}

// Labels on a body line, each validated against the ground set.
std::vector<std::string> label_row(const Line& line,
                                   const std::set<std::string>& known) {
  for (const std::string& t : line.tokens) {
    if (!known.count(t))
      throw ParseError(line.number,
                       "'" + t + "' is not a declared element");
  }
  return line.tokens;
}

}  // namespace

MtrContent parse_mtr(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  size_t at = 0;

  std::string name;
  if (at < lines.size() && lines[at].tokens[0] == "name") {
    const Line& l = lines[at];
    if (l.tokens.size() < 2)
      throw ParseError(l.number, "'name' needs a value");
    for (size_t i = 1; i < l.tokens.size(); ++i) {
      if (i > 1) name += " ";
      name += l.tokens[i];
    }
    ++at;
  }

  if (at >= lines.size() || lines[at].tokens[0] != "elements")
    throw ParseError(at < lines.size() ? lines[at].number : 0,
                     "expected an 'elements' line");
  const Line& elem_line = lines[at];
  std::vector<std::string> elements(elem_line.tokens.begin() + 1,
                                    elem_line.tokens.end());
  std::set<std::string> known;
  for (const std::string& e : elements) {
    if (!known.insert(e).second)
      throw ParseError(elem_line.number, "duplicate element '" + e + "'");
  }
  ++at;

  if (at >= lines.size())
    throw ParseError(elem_line.number, "missing body section after 'elements'");
  const Line& body = lines[at];
  const std::string& kind = body.tokens[0];
  ++at;

  MtrContent out;
  if (kind == "field") {
    if (body.tokens.size() != 2)
      throw ParseError(body.number, "'field' needs gf2, gf3 or rational");
    Field field;
    try {
      field = parse_field(body.tokens[1]);
    } catch (const Error& e) {
      throw ParseError(body.number, e.what());
    }
    if (at >= lines.size() || lines[at].tokens != std::vector<std::string>{"matrix"})
      throw ParseError(at < lines.size() ? lines[at].number : body.number,
                       "'field' must be followed by a 'matrix' line");
    ++at;
    std::vector<std::vector<Scalar>> rows;
    for (; at < lines.size(); ++at) {
      const Line& l = lines[at];
      if (l.tokens.size() != elements.size())
        throw ParseError(l.number,
                         "matrix row has " + std::to_string(l.tokens.size()) +
                             " entries for " + std::to_string(elements.size()) +
                             " elements");
      std::vector<Scalar> row;
      for (const std::string& t : l.tokens) {
        try {
          row.push_back(parse_scalar(t));
        } catch (const Error& e) {
          throw ParseError(l.number, e.what());
        }
      }
      rows.push_back(std::move(row));
    }
    try {
      out.matroid = from_matrix(FieldMatrix::make(field, std::move(rows)),
                                std::move(elements), std::move(name));
    } catch (const Error& e) {
      throw ParseError(body.number, e.what());
    }
    return out;
  }

  if (kind == "bases" || kind == "transversal" || kind == "lines3") {
    if (body.tokens.size() != 1)
      throw ParseError(body.number, "'" + kind + "' takes no arguments");
    std::vector<std::vector<std::string>> sets;
    for (; at < lines.size(); ++at) sets.push_back(label_row(lines[at], known));
    try {
      if (kind == "bases")
        out.matroid = from_bases(std::move(elements), sets, std::move(name));
      else if (kind == "transversal")
        out.matroid =
            from_transversal(std::move(elements), sets, std::move(name));
      else
        out.matroid =
            from_lines_rank3(std::move(elements), sets, std::move(name));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      // family-level failures (empty body, exchange violations, bad line
      // geometry) are still faults of this document section
      throw ParseError(body.number, e.what());
    }
    return out;
  }

  if (kind == "uniform") {
    if (body.tokens.size() != 3)
      throw ParseError(body.number, "'uniform' needs a rank and a size");
    int r = parse_int(body, body.tokens[1]);
    int m = parse_int(body, body.tokens[2]);
    if (m != static_cast<int>(elements.size()))
      throw ParseError(body.number,
                       "uniform size " + std::to_string(m) + " does not match " +
                           std::to_string(elements.size()) + " elements");
    if (r < 0 || r > m)
      throw ParseError(body.number, "uniform rank must lie between 0 and " +
                                        std::to_string(m));
    if (at < lines.size())
      throw ParseError(lines[at].number, "'uniform' takes no body lines");
    out.matroid = from_bases_masks(std::move(elements), combinations(m, r),
                                   std::move(name), false);
    return out;
  }

  if (kind == "graph") {
    if (body.tokens.size() != 1)
      throw ParseError(body.number, "'graph' takes no arguments");
    std::map<std::string, GraphEdge> by_label;
    std::vector<std::string> vertices;
    std::set<std::string> vertex_seen;
    for (; at < lines.size(); ++at) {
      const Line& l = lines[at];
      if (l.tokens.size() != 3)
        throw ParseError(l.number, "graph lines read <edge> <tail> <head>");
      if (!known.count(l.tokens[0]))
        throw ParseError(l.number,
                         "'" + l.tokens[0] + "' is not a declared element");
      if (by_label.count(l.tokens[0]))
        throw ParseError(l.number, "edge '" + l.tokens[0] + "' appears twice");
      by_label[l.tokens[0]] = {l.tokens[0], l.tokens[1], l.tokens[2]};
      for (int side = 1; side <= 2; ++side) {
        const std::string& v = l.tokens[static_cast<size_t>(side)];
        if (vertex_seen.insert(v).second) vertices.push_back(v);
      }
    }
    std::vector<GraphEdge> edges;
    for (const std::string& e : elements) {
      auto found = by_label.find(e);
      if (found == by_label.end())
        throw ParseError(body.number, "element '" + e + "' has no edge line");
      edges.push_back(found->second);
    }
    Graph g = Graph::make(std::move(vertices), std::move(edges));
    out.matroid = graphic_matroid(g);
    out.matroid.name = std::move(name);
    out.graph = std::move(g);
    return out;
  }

  throw ParseError(body.number, "unknown body section '" + kind + "'");
}

MtrContent parse_mtr_text(const std::string& text) {
  std::istringstream in(text);
  return parse_mtr(in);
}

MtrContent load_mtr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_mtr(in);
}

std::string write_mtr(const Matroid& m) {
  std::ostringstream out;
  if (!m.name.empty()) out << "name " << m.name << "\n";
  out << "elements";
  for (const std::string& l : m.labels) out << " " << l;
  if (m.rank == 0) {
    // The empty basis cannot be spelled as a row of labels.
    out << "\nuniform 0 " << m.size() << "\n";
    return out.str();
  }
  out << "\nbases\n";
  for (Subset b : m.bases) {
    bool first = true;
    for (const std::string& l : m.labels_of(b)) {
      if (!first) out << " ";
      out << l;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string write_mtr(const Graph& g, const std::string& name) {
  std::ostringstream out;
  if (!name.empty()) out << "name " << name << "\n";
  out << "elements";
  for (const GraphEdge& e : g.edges) out << " " << e.label;
  out << "\ngraph\n";
  for (const GraphEdge& e : g.edges)
    out << e.label << " " << e.tail << " " << e.head << "\n";
  return out.str();
}

}  // namespace rayleigh
