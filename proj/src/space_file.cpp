#include "wildcat/space_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace wildcat {

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

[[noreturn]] void fail(Pos p, const std::string& message) { throw ParseError(p.line, p.column, message); }

// Parsed s-expression: an atom or a list.
struct Sx {
  Pos pos;
  std::string atom;
  std::vector<Sx> items;
  bool is_list = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Pos pos() const { return pos_; }
  bool done() const { return i_ >= text_.size(); }

  // Skips spaces and a trailing comment, staying on the current line. A '#'
  // inside a word is part of it (truncation ids use it).
  void skip_inline() {
    while (!done()) {
      const char c = text_[i_];
      if (c == '#') {
        while (!done() && text_[i_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  void skip_all() {
    for (;;) {
      skip_inline();
      if (done() || text_[i_] != '\n') return;
      advance();
    }
  }

  bool at_eol() {
    skip_inline();
    return done() || text_[i_] == '\n';
  }

  void expect_eol(const char* what) {
    if (!at_eol()) fail(pos_, std::string("unexpected text after ") + what);
  }

  // A word on the current line.
  std::string word(const char* what) {
    skip_inline();
    const Pos start = pos_;
    std::string out;
    while (!done() && !is_break(text_[i_])) {
      out += text_[i_];
      advance();
    }
    if (out.empty()) fail(start, std::string("expected ") + what);
    return out;
  }

  Sx sexpr() {
    skip_all();
    if (done()) fail(pos_, "expected an expression");
    Sx out;
    out.pos = pos_;
    if (text_[i_] == ')') fail(pos_, "unbalanced ')'");
    if (text_[i_] != '(') {
      while (!done() && !is_break(text_[i_])) {
        out.atom += text_[i_];
        advance();
      }
      return out;
    }
    advance();
    out.is_list = true;
    for (;;) {
      skip_all();
      if (done()) fail(out.pos, "unclosed '('");
      if (text_[i_] == ')') {
        advance();
        return out;
      }
      out.items.push_back(sexpr());
    }
  }

 private:
  static bool is_break(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '(' || c == ')';
  }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

std::vector<std::string> last_ids(const GraphSpec& spec, const std::string& kind) {
  if (kind == "vertex") return {spec.vertices.back()};
  const auto& e = spec.edges.back();
  return {e.id, e.v0, e.v1};
}

struct PendingExpr {
  std::string name;
  Pos pos;
  Sx body;
};

// Reports graph errors at the position of the form being built.
template <class F>
auto guarded(const Sx& at, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const GraphError& e) {
    fail(at.pos, e.what());
  }
}

class ExprReader {
 public:
  explicit ExprReader(const std::map<std::string, std::shared_ptr<const MultiGraph>>& graphs) : graphs_(graphs) {}

  ExprPtr read(const Sx& s) {
    const std::string& head = keyword(s);
    if (head == "selfwild" || head == "zerodimwild") {
      arity(s, 1);
      return head == "selfwild" ? make_self_wild() : make_zero_dim_wild();
    }
    if (head == "graph") {
      arity(s, 2);
      const std::string name = atom(s.items[1], "graph name");
      return guarded(s, [&] { return make_graph_expr(name, graph(s.items[1])); });
    }
    if (head != "node") fail(s.items[0].pos, "unknown expression '" + head + "'");
    if (s.items.size() < 2 || keyword(s.items[1]) != "base") fail(s.pos, "node needs (base NAME) first");
    arity(s.items[1], 2);
    const std::string name = atom(s.items[1].items[1], "graph name");
    const auto base = graph(s.items[1].items[1]);
    std::vector<Attachment> fin;
    std::vector<SeqFamily> seq;
    for (std::size_t i = 2; i < s.items.size(); ++i) {
      const Sx& part = s.items[i];
      const std::string& kind = keyword(part);
      arity(part, 4);
      if (kind == "attach") {
        if (!seq.empty()) fail(part.pos, "attach entries must precede seqfam entries");
        fin.push_back({point(part.items[1]), read(part.items[2]), point(part.items[3])});
      } else if (kind == "seqfam") {
        const Sx& ids = part.items[1];
        if (!ids.is_list) fail(ids.pos, "expected a parenthesized list of vertex/edge ids");
        std::vector<std::string> names;
        for (const auto& id : ids.items) names.push_back(atom(id, "vertex or edge id"));
        Subcomplex k = guarded(ids, [&] { return make_subcomplex(*base, names); });
        seq.push_back({std::move(k), read(part.items[2]), point(part.items[3])});
      } else {
        fail(part.items[0].pos, "expected attach or seqfam, got '" + kind + "'");
      }
    }
    return guarded(s, [&] { return make_node(name, base, std::move(fin), std::move(seq)); });
  }

 private:
  static const std::string& keyword(const Sx& s) {
    if (!s.is_list || s.items.empty() || s.items[0].is_list) fail(s.pos, "expected a form '(keyword ...)'");
    return s.items[0].atom;
  }

  static void arity(const Sx& s, std::size_t n) {
    if (s.items.size() != n) {
      fail(s.pos, "'" + s.items[0].atom + "' takes " + std::to_string(n - 1) + " argument(s)");
    }
  }

  static const std::string& atom(const Sx& s, const char* what) {
    if (s.is_list) fail(s.pos, std::string("expected ") + what);
    return s.atom;
  }

  std::shared_ptr<const MultiGraph> graph(const Sx& s) const {
    const std::string& name = atom(s, "graph name");
    auto it = graphs_.find(name);
    if (it == graphs_.end()) fail(s.pos, "unknown graph '" + name + "'");
    return it->second;
  }

  static PointRef point(const Sx& s) {
    const std::string& kind = keyword(s);
    if (kind == "vertex") {
      arity(s, 2);
      return PointRef::vertex(atom(s.items[1], "vertex id"));
    }
    if (kind == "edge") {
      arity(s, 3);
      try {
        return PointRef::edge(atom(s.items[1], "edge id"), parse_rational(atom(s.items[2], "NUM/DEN")));
      } catch (const std::invalid_argument& e) {
        fail(s.items[2].pos, e.what());
      }
    }
    fail(s.pos, "expected (vertex ID) or (edge ID NUM/DEN)");
  }

  const std::map<std::string, std::shared_ptr<const MultiGraph>>& graphs_;
};

std::string point_text(const PointRef& p) {
  return p.on_edge ? "(edge " + p.id + " " + to_string(p.t) + ")" : "(vertex " + p.id + ")";
}

void print_expr(std::ostream& out, const SpaceExpr& e, std::size_t indent) {
  if (e.is_self_wild()) {
    out << "(selfwild)";
    return;
  }
  if (e.is_zero_dim_wild()) {
    out << "(zerodimwild)";
    return;
  }
  const Node& n = *e.node();
  if (n.fin.empty() && n.seq.empty()) {
    out << "(graph " << n.base_name << ")";
    return;
  }
  const std::string pad(indent + 2, ' ');
  out << "(node (base " << n.base_name << ")";
  for (const auto& a : n.fin) {
    out << "\n" << pad << "(attach " << point_text(a.at) << " ";
    print_expr(out, *a.child, indent + 2);
    out << " " << point_text(a.anchor) << ")";
  }
  for (const auto& s : n.seq) {
    out << "\n" << pad << "(seqfam (";
    const auto ids = subcomplex_ids(*n.base, s.k);
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    out << ") ";
    print_expr(out, *s.pattern, indent + 2);
    out << " " << point_text(s.anchor) << ")";
  }
  out << ")";
}

}  // namespace

std::shared_ptr<const MultiGraph> SpaceFile::find_graph(std::string_view name) const {
  for (const auto& g : graphs) {
    if (g.name == name) return g.graph;
  }
  return nullptr;
}

ExprPtr SpaceFile::find_expr(std::string_view name) const {
  for (const auto& e : exprs) {
    if (e.name == name) return e.expr;
  }
  return nullptr;
}

ExprPtr SpaceFile::main_expr() const {
  if (auto e = find_expr(main)) return e;
  if (auto g = find_graph(main)) return make_graph_expr(main, g);
  throw Error("no definition named '" + main + "'");
}

std::shared_ptr<const MultiGraph> SpaceFile::plain_graph(std::string_view name) const {
  if (auto g = find_graph(name)) return g;
  if (auto e = find_expr(name)) {
    const Node* n = e->node();
    if (n && n->fin.empty() && n->seq.empty()) return n->base;
    throw Error("'" + std::string(name) + "' is not a plain graph");
  }
  throw Error("no definition named '" + std::string(name) + "'");
}

SpaceFile parse_space_file(std::string_view text) {
  Lexer lex(text);
  SpaceFile out;
  std::map<std::string, std::shared_ptr<const MultiGraph>> graphs;
  std::map<std::string, Pos> names;
  std::vector<PendingExpr> pending;
  std::optional<Pos> main_pos;
  GraphSpec loose;  // records outside any graph block
  std::optional<Pos> loose_pos;

  const auto declare = [&](const std::string& name, Pos p) {
    if (!is_valid_identifier(name)) fail(p, "invalid name '" + name + "'");
    if (names.count(name)) fail(p, "'" + name + "' is already defined");
    names[name] = p;
  };
  // Every record's position and the ids it mentions, to place build errors.
  std::vector<std::pair<Pos, std::vector<std::string>>> records;
  const auto graph_record = [&](GraphSpec& spec, const std::string& kind) {
    const Pos at = lex.pos();
    if (kind == "vertex") {
      spec.vertices.push_back(lex.word("vertex id"));
    } else {
      const std::string id = lex.word("edge id");
      const std::string a = lex.word("endpoint");
      const std::string b = lex.word("endpoint");
      spec.edges.push_back({id, a, b});
    }
    records.push_back({at, last_ids(spec, kind)});
    lex.expect_eol("the record");
  };
  const auto build = [&](const GraphSpec& spec, Pos p, std::size_t first_record) {
    try {
      return std::make_shared<const MultiGraph>(MultiGraph::build(spec));
    } catch (const GraphError& e) {
      // The last record naming the offending id is where the problem shows.
      for (std::size_t r = records.size(); r-- > first_record;) {
        const auto& ids = records[r].second;
        if (std::find(ids.begin(), ids.end(), e.offending_id()) != ids.end()) fail(records[r].first, e.what());
      }
      fail(p, e.what());
    }
  };

  for (;;) {
    lex.skip_all();
    if (lex.done()) break;
    const Pos at = lex.pos();
    const std::string kw = lex.word("a record");
    if (kw == "vertex" || kw == "edge") {
      if (!loose_pos) loose_pos = at;
      graph_record(loose, kw);
    } else if (kw == "graph") {
      const Pos name_pos = lex.pos();
      const std::string name = lex.word("graph name");
      declare(name, name_pos);
      lex.expect_eol("the graph name");
      GraphSpec spec;
      const std::size_t first_record = records.size();
      for (;;) {
        lex.skip_all();
        if (lex.done()) fail(at, "graph '" + name + "' is missing 'end'");
        const Pos rp = lex.pos();
        const std::string r = lex.word("a record");
        if (r == "end") {
          lex.expect_eol("'end'");
          break;
        }
        if (r != "vertex" && r != "edge") fail(rp, "expected vertex, edge or end, got '" + r + "'");
        graph_record(spec, r);
      }
      graphs[name] = build(spec, at, first_record);
      out.graphs.push_back({name, graphs[name]});
    } else if (kw == "expr") {
      const Pos name_pos = lex.pos();
      const std::string name = lex.word("expression name");
      declare(name, name_pos);
      Sx body = lex.sexpr();
      lex.expect_eol("the expression");
      pending.push_back({name, at, std::move(body)});
    } else if (kw == "main") {
      if (main_pos) fail(at, "'main' is given twice");
      main_pos = at;
      out.main = lex.word("a definition name");
      lex.expect_eol("the main name");
    } else {
      fail(at, "unknown record '" + kw + "'");
    }
  }

  if (loose_pos) {
    if (!out.graphs.empty() || !pending.empty()) {
      fail(*loose_pos, "vertex/edge records must sit inside a graph block");
    }
    declare("main", *loose_pos);
    graphs["main"] = build(loose, *loose_pos, 0);
    out.graphs.push_back({"main", graphs["main"]});
    if (main_pos && out.main != "main") fail(*main_pos, "unknown definition '" + out.main + "'");
    out.main = "main";
    main_pos = loose_pos;
  }

  ExprReader reader(graphs);
  for (const auto& p : pending) out.exprs.push_back({p.name, reader.read(p.body)});

  if (!main_pos) fail(lex.pos(), "missing 'main'");
  if (!names.count(out.main)) fail(*main_pos, "unknown definition '" + out.main + "'");
  return out;
}

SpaceFile read_space_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_file(buf.str());
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.vertex_id(v) << "\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out << "edge " << g.edge_id(e) << " " << g.vertex_id(g.edge(e).v0) << " " << g.vertex_id(g.edge(e).v1) << "\n";
  }
  return out.str();
}

std::string print_expr(const SpaceExpr& e) {
  std::ostringstream out;
  print_expr(out, e, 0);
  return out.str();
}

std::string print_space_file(const SpaceFile& file) {
  std::ostringstream out;
  for (const auto& g : file.graphs) out << "graph " << g.name << "\n" << format_graph(*g.graph) << "end\n\n";
  for (const auto& e : file.exprs) out << "expr " << e.name << " " << print_expr(*e.expr) << "\n\n";
  out << "main " << file.main << "\n";
  return out.str();
}

bool structurally_equal(const SpaceFile& a, const SpaceFile& b) {
  if (a.main != b.main || a.graphs.size() != b.graphs.size() || a.exprs.size() != b.exprs.size()) return false;
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    if (a.graphs[i].name != b.graphs[i].name || !(*a.graphs[i].graph == *b.graphs[i].graph)) return false;
  }
  for (std::size_t i = 0; i < a.exprs.size(); ++i) {
    if (a.exprs[i].name != b.exprs[i].name || !structurally_equal(*a.exprs[i].expr, *b.exprs[i].expr)) return false;
  }
  return true;
}

}  // namespace wildcat
