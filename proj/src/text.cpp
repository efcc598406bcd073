#include "permdual/text.hpp"

#include <cctype>
#include <sstream>

namespace permdual {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(ErrorKind::ParseError,
           std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool try_consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      fail(ErrorKind::ParseError, "expected a number at offset " + std::to_string(start));
    int value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1000000) fail(ErrorKind::ParseError, "number too large");
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int parse_header_field(Cursor& cur, std::string_view name) {
  if (!cur.try_consume_word(name))
    fail(ErrorKind::ParseError, "expected '" + std::string(name) + "'");
  cur.expect('=');
  int value = cur.integer();
  cur.expect(';');
  return value;
}

}  // namespace

std::string format_sequence(const TranspositionSequence& s) {
  std::ostringstream out;
  out << "n=" << s.n() << ';';
  for (const auto& t : s) out << " (" << t.x() << ',' << t.y() << ')';
  return out.str();
}

TranspositionSequence parse_sequence(std::string_view text) {
  Cursor cur(text);
  int n = parse_header_field(cur, "n");
  std::vector<Transposition> entries;
  while (!cur.at_end()) {
    cur.expect('(');
    int x = cur.integer();
    cur.expect(',');
    int y = cur.integer();
    cur.expect(')');
    if (x == y) fail(ErrorKind::ParseError, "transposition endpoints must differ");
    entries.emplace_back(x, y);
  }
  return TranspositionSequence(n, std::move(entries));
}

std::string format_graph(const LabeledMultigraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "; m=" << g.edge_count() << ";\n";
  for (int k = 1; k <= g.edge_count(); ++k)
    out << k << ": " << g.edge(k).u << ' ' << g.edge(k).v << '\n';
  return out.str();
}

LabeledMultigraph parse_graph(std::string_view text) {
  Cursor cur(text);
  int n = parse_header_field(cur, "n");
  int m = parse_header_field(cur, "m");
  std::vector<Edge> edges(static_cast<std::size_t>(m), Edge(1, 2));
  std::vector<bool> seen(m + 1, false);
  for (int i = 0; i < m; ++i) {
    int label = cur.integer();
    cur.expect(':');
    int x = cur.integer();
    int y = cur.integer();
    if (label < 1 || label > m) fail(ErrorKind::ParseError, "edge label out of range");
    if (seen[label]) fail(ErrorKind::ParseError, "duplicate edge label");
    if (x == y) fail(ErrorKind::ParseError, "loop edges are not allowed");
    seen[label] = true;
    edges[label - 1] = Edge(x, y);
  }
  return LabeledMultigraph(n, std::move(edges));
}

std::string format_tree(const VertexLabeledTree& t) {
  std::ostringstream out;
  out << "n=" << t.n << ';';
  for (auto [a, b] : t.edges) out << " {" << a << ',' << b << '}';
  return out.str();
}

VertexLabeledTree parse_tree(std::string_view text) {
  Cursor cur(text);
  int n = parse_header_field(cur, "n");
  std::vector<std::pair<int, int>> edges;
  while (!cur.at_end()) {
    cur.expect('{');
    int a = cur.integer();
    cur.expect(',');
    int b = cur.integer();
    cur.expect('}');
    edges.emplace_back(a, b);
  }
  return VertexLabeledTree(n, std::move(edges));
}

std::string format_trail(const Trail& t) {
  std::ostringstream out;
  out << t.start() << ": " << t.vertices.front();
  for (std::size_t i = 0; i < t.edge_labels.size(); ++i)
    out << " -" << t.edge_labels[i] << "- " << t.vertices[i + 1];
  return out.str();
}

Trail parse_trail(std::string_view line) {
  Cursor cur(line);
  int start = cur.integer();
  cur.expect(':');
  Trail trail;
  trail.vertices.push_back(cur.integer());
  if (trail.vertices.front() != start)
    fail(ErrorKind::ParseError, "trail start does not match its first vertex");
  while (!cur.at_end()) {
    cur.expect('-');
    int label = cur.integer();
    cur.expect('-');
    trail.edge_labels.push_back(label);
    trail.vertices.push_back(cur.integer());
  }
  return trail;
}

std::string format_cover(const TrailDoubleCover& c) {
  std::ostringstream out;
  out << format_graph(c.graph());
  out << "trails:\n";
  for (const Trail& t : c.trails()) out << format_trail(t) << '\n';
  return out.str();
}

ParsedCover parse_cover(std::string_view text) {
  std::size_t marker = text.find("trails:");
  if (marker == std::string_view::npos)
    fail(ErrorKind::ParseError, "cover file is missing its 'trails:' line");
  LabeledMultigraph graph = parse_graph(text.substr(0, marker));
  std::vector<Trail> trails;
  std::istringstream lines{std::string(text.substr(marker + 7))};
  std::string line;
  while (std::getline(lines, line)) {
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    trails.push_back(parse_trail(line));
  }
  return ParsedCover{std::move(graph), std::move(trails)};
}

std::string format_assignment(const MindBodyAssignment& a) { return a.to_string(); }

std::string format_cycles(const Permutation& p) { return p.cycle_string(); }

Permutation parse_cycles(std::string_view text, int n) {
  Cursor cur(text);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  bool any = false;
  while (!cur.at_end()) {
    cur.expect('(');
    std::vector<int> cycle;
    if (!cur.try_consume(')')) {
      cycle.push_back(cur.integer());
      while (cur.try_consume(',')) cycle.push_back(cur.integer());
      cur.expect(')');
    }
    any = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n) fail(ErrorKind::ParseError, "cycle entry out of range");
      images[from - 1] = to;
    }
  }
  if (!any) fail(ErrorKind::ParseError, "expected at least one cycle");
  return Permutation::from_images(std::move(images));
}

}  // namespace permdual
