#include "orbispec/workspace.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "orbispec/errors.hpp"

namespace orbispec {

const std::string* JobDecl::option(const std::string& key) const {
  for (const auto& [k, v] : options) {
    if (k == key) return &v;
  }
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string raw;
  std::vector<Token> tokens;
};

// Splits on whitespace; '#' outside quotes ends the line; double quotes group
// characters into one token and are removed.
std::vector<Token> tokenize(const std::string& raw, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
    if (i >= raw.size() || raw[i] == '#') break;
    Token t;
    t.column = i + 1;
    bool quoted = false;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == '"') {
        quoted = !quoted;
        ++i;
        continue;
      }
      if (!quoted && (c == ' ' || c == '\t' || c == '\r' || c == '#')) break;
      t.text += c;
      ++i;
    }
    if (quoted) throw InputError("unterminated quote", line_no, t.column);
    out.push_back(std::move(t));
  }
  return out;
}

[[noreturn]] void fail(const std::string& what, const Line& line, const Token& tok) {
  throw InputError(what, line.number, tok.column);
}

[[noreturn]] void fail(const std::string& what, const Line& line) { throw InputError(what, line.number, 1); }

std::size_t parse_size(const Line& line, const Token& tok, std::string_view text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) fail("expected a non-negative integer, got '" + std::string(text) + "'", line, tok);
  return v;
}

int parse_int(const Line& line, const Token& tok, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) fail("expected an integer, got '" + std::string(text) + "'", line, tok);
  return v;
}

Rational parse_rational(const Line& line, const Token& tok, std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    fail("expected a rational number, got '" + std::string(text) + "'", line, tok);
  }
}

std::pair<std::string, std::string> key_value(const Line& line, const Token& tok) {
  auto eq = tok.text.find('=');
  if (eq == std::string::npos || eq == 0) fail("expected key=value, got '" + tok.text + "'", line, tok);
  return {tok.text.substr(0, eq), tok.text.substr(eq + 1)};
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-' || c == '.' || c == '+' || c == '^';
    if (!ok) return false;
  }
  return true;
}

const Token& need(const Line& line, std::size_t idx, const std::string& what) {
  if (idx >= line.tokens.size()) {
    Token end{"", line.raw.size() + 1};
    throw InputError("missing " + what, line.number, end.column);
  }
  return line.tokens[idx];
}

std::string quote_if_needed(const std::string& v) {
  bool plain = !v.empty();
  for (char c : v) {
    if (c == ' ' || c == '\t' || c == '#' || c == '"') plain = false;
  }
  return plain ? v : "\"" + v + "\"";
}

const std::map<std::string, std::set<std::string>>& job_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"spectrum", {"target", "order", "kind"}},
      {"verify", {"theorem", "fixture", "hodge", "k", "N", "n-max", "shift", "mode"}},
      {"expand", {"expr", "series", "signature", "N", "mode", "formula"}},
      {"audit", {"fixture", "k"}},
  };
  return keys;
}

struct Pos {
  std::size_t line = 0;
  std::size_t column = 0;
};

}  // namespace

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Workspace Workspace::parse(std::string_view text) {
  Workspace ws;
  std::vector<Line> lines;
  {
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      Line l;
      l.number = number++;
      l.raw = std::string(text.substr(start, end - start));
      l.tokens = tokenize(l.raw, l.number);
      if (!l.tokens.empty()) lines.push_back(std::move(l));
      start = end + 1;
    }
  }

  std::set<std::string> fixture_names;
  std::vector<Pos> node_pos;
  std::vector<std::vector<Pos>> child_pos;
  std::vector<Pos> node_group_pos;
  std::vector<std::pair<std::size_t, Pos>> job_refs;  // job index, position of the reference

  auto claim_fixture_name = [&](const Line& line, const Token& tok) {
    if (!valid_name(tok.text)) fail("invalid name '" + tok.text + "'", line, tok);
    if (!fixture_names.insert(tok.text).second) fail("duplicate name '" + tok.text + "'", line, tok);
  };

  // Collects the lines of a block up to its "end".
  std::size_t i = 0;
  auto block = [&](const Line& head) {
    std::vector<const Line*> body;
    while (true) {
      ++i;
      if (i >= lines.size()) fail("block opened here is missing 'end'", head, head.tokens[0]);
      if (lines[i].tokens[0].text == "end") {
        if (lines[i].tokens.size() > 1) fail("unexpected text after 'end'", lines[i], lines[i].tokens[1]);
        return body;
      }
      body.push_back(&lines[i]);
    }
  };

  for (i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0].text;

    if (kw == "group") {
      GroupDecl g;
      const Token& name = need(line, 1, "group name");
      if (!valid_name(name.text)) fail("invalid name '" + name.text + "'", line, name);
      if (ws.built_groups_.count(name.text)) fail("duplicate group '" + name.text + "'", line, name);
      g.name = name.text;
      const Token& kind = need(line, 2, "group kind (trivial|cyclic|wreath|table)");
      std::shared_ptr<const FiniteGroup> built;
      std::size_t expected_tokens = 0;
      try {
        if (kind.text == "trivial") {
          g.kind = GroupDecl::Kind::Trivial;
          built = std::make_shared<FiniteGroup>(FiniteGroup::trivial());
          expected_tokens = 3;
        } else if (kind.text == "cyclic") {
          g.kind = GroupDecl::Kind::Cyclic;
          const Token& n = need(line, 3, "cyclic order");
          g.n = parse_size(line, n, n.text);
          if (g.n == 0) fail("cyclic order must be >= 1", line, n);
          built = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(g.n));
          expected_tokens = 4;
        } else if (kind.text == "wreath") {
          g.kind = GroupDecl::Kind::Wreath;
          const Token& base = need(line, 3, "wreath base group");
          const Token& n = need(line, 4, "wreath degree");
          auto it = ws.built_groups_.find(base.text);
          if (it == ws.built_groups_.end()) fail("unknown group '" + base.text + "'", line, base);
          g.base = base.text;
          g.n = parse_size(line, n, n.text);
          if (g.n == 0) fail("wreath degree must be >= 1", line, n);
          try {
            built = wreath_product(it->second, g.n).group_ptr();
          } catch (const std::length_error& err) {
            fail(err.what(), line, n);
          }
          expected_tokens = 5;
        } else if (kind.text == "table") {
          g.kind = GroupDecl::Kind::Table;
          const Token& n = need(line, 3, "table order");
          g.n = parse_size(line, n, n.text);
          if (g.n == 0) fail("table order must be >= 1", line, n);
          expected_tokens = 4;
          if (line.tokens.size() > expected_tokens) fail("unexpected token", line, line.tokens[expected_tokens]);
          auto rows = block(line);
          if (rows.size() != g.n) fail("table needs " + std::to_string(g.n) + " rows", line, n);
          for (const Line* row : rows) {
            if (row->tokens.size() != g.n) fail("table row needs " + std::to_string(g.n) + " entries", *row);
            for (const auto& t : row->tokens) {
              std::size_t v = parse_size(*row, t, t.text);
              if (v >= g.n) fail("table entry out of range", *row, t);
              g.table.push_back(static_cast<Elem>(v));
            }
          }
          built = std::make_shared<FiniteGroup>(FiniteGroup::from_table(g.n, g.table));
        } else {
          fail("unknown group kind '" + kind.text + "'", line, kind);
        }
      } catch (const std::invalid_argument& err) {
        fail(err.what(), line, kind);
      }
      if (g.kind != GroupDecl::Kind::Table && line.tokens.size() > expected_tokens) {
        fail("unexpected token", line, line.tokens[expected_tokens]);
      }
      ws.built_groups_.emplace(g.name, built);
      ws.groups_.push_back(std::move(g));
      continue;
    }

    if (kw == "hodge") {
      HodgeDecl h;
      const Token& name = need(line, 1, "hodge block name");
      claim_fixture_name(line, name);
      if (line.tokens.size() > 2) fail("unexpected token", line, line.tokens[2]);
      h.name = name.text;
      for (const Line* row : block(line)) {
        if (row->tokens[0].text != "row") fail("expected 'row'", *row, row->tokens[0]);
        MixedHodgeEigenDatum d;
        std::set<std::string> seen;
        for (std::size_t t = 1; t < row->tokens.size(); ++t) {
          const Token& tok = row->tokens[t];
          auto [key, value] = key_value(*row, tok);
          if (!seen.insert(key).second) fail("repeated key '" + key + "'", *row, tok);
          if (key == "k") {
            d.k = parse_int(*row, tok, value);
          } else if (key == "p") {
            d.p = parse_int(*row, tok, value);
          } else if (key == "q") {
            d.q = parse_int(*row, tok, value);
          } else if (key == "alpha") {
            d.alpha = CyclicRational(parse_rational(*row, tok, value));
          } else if (key == "dim") {
            d.dim = parse_int(*row, tok, value);
          } else {
            fail("unknown key '" + key + "'", *row, tok);
          }
        }
        for (const char* req : {"k", "p", "q"}) {
          if (!seen.count(req)) fail(std::string("row needs ") + req + "=", *row, row->tokens[0]);
        }
        if (d.k < 0 || d.p < 0 || d.q < 0) fail("negative Hodge index", *row, row->tokens[0]);
        if (d.dim <= 0) fail("dim must be positive", *row, row->tokens[0]);
        h.rows.push_back(d);
      }
      ws.hodge_.push_back(std::move(h));
      continue;
    }

    if (kw == "explicit") {
      ExplicitDecl e;
      const Token& name = need(line, 1, "explicit set name");
      claim_fixture_name(line, name);
      e.name = name.text;
      bool have_points = false;
      Token group_tok;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        auto [key, value] = key_value(line, line.tokens[t]);
        if (key == "points") {
          e.points = parse_size(line, line.tokens[t], value);
          have_points = true;
        } else if (key == "group") {
          e.group = value;
          group_tok = line.tokens[t];
        } else {
          fail("unknown key '" + key + "'", line, line.tokens[t]);
        }
      }
      if (!have_points) fail("explicit set needs points=", line, name);
      if (e.group.empty()) fail("explicit set needs group=", line, name);
      auto git = ws.built_groups_.find(e.group);
      if (git == ws.built_groups_.end()) fail("unknown group '" + e.group + "'", line, group_tok);
      bool have_phi = false;
      for (const Line* row : block(line)) {
        const std::string& what = row->tokens[0].text;
        std::size_t first = 1;
        Elem elem = 0;
        if (what == "act") {
          const Token& et = need(*row, 1, "group element");
          std::size_t v = parse_size(*row, et, et.text);
          if (v >= git->second->order()) fail("group element out of range", *row, et);
          elem = static_cast<Elem>(v);
          first = 2;
        } else if (what != "phi") {
          fail("expected 'phi' or 'act'", *row, row->tokens[0]);
        }
        Permutation p;
        for (std::size_t t = first; t < row->tokens.size(); ++t) {
          const Token& tok = row->tokens[t];
          std::size_t v = parse_size(*row, tok, tok.text);
          if (v >= e.points) fail("point index out of range", *row, tok);
          p.push_back(v);
        }
        if (p.size() != e.points) fail("expected " + std::to_string(e.points) + " images", *row, row->tokens[0]);
        if (what == "phi") {
          if (have_phi) fail("phi given twice", *row, row->tokens[0]);
          e.phi = std::move(p);
          have_phi = true;
        } else {
          e.generators.emplace_back(elem, std::move(p));
        }
      }
      if (!have_phi) {
        e.phi.resize(e.points);
        for (std::size_t p = 0; p < e.points; ++p) e.phi[p] = p;
      }
      try {
        ws.built_sets_.emplace(e.name, ExplicitGSet::from_generators(e.points, git->second, e.generators, e.phi));
      } catch (const std::invalid_argument& err) {
        fail(err.what(), line, name);
      }
      ws.explicit_.push_back(std::move(e));
      continue;
    }

    if (kw == "brieskorn") {
      BrieskornDecl b;
      const Token& name = need(line, 1, "brieskorn name");
      claim_fixture_name(line, name);
      b.name = name.text;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        auto [key, value] = key_value(line, line.tokens[t]);
        if (key == "a") {
          b.a = parse_size(line, line.tokens[t], value);
        } else if (key == "order") {
          b.order = parse_size(line, line.tokens[t], value);
        } else {
          fail("unknown key '" + key + "'", line, line.tokens[t]);
        }
      }
      try {
        ws.built_sets_.emplace(b.name, brieskorn_zero_dim(b.a, b.order));
      } catch (const std::invalid_argument& err) {
        fail(err.what(), line, name);
      }
      ws.brieskorn_.push_back(std::move(b));
      continue;
    }

    if (kw == "node") {
      NodeDecl n;
      const Token& name = need(line, 1, "node name");
      claim_fixture_name(line, name);
      n.name = name.text;
      Pos gpos{line.number, name.column};
      bool have_dim = false;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        const Token& tok = line.tokens[t];
        auto [key, value] = key_value(line, tok);
        if (key == "group") {
          n.group = value;
          gpos = {line.number, tok.column};
        } else if (key == "dim") {
          if (value != "mixed") {
            n.dim = parse_int(line, tok, value);
            if (*n.dim < 0) fail("dim must be >= 0", line, tok);
          }
          have_dim = true;
        } else {
          fail("unknown key '" + key + "'", line, tok);
        }
      }
      if (n.group.empty()) fail("node needs group=", line, name);
      if (!have_dim) fail("node needs dim=<d|mixed>", line, name);
      if (!ws.built_groups_.count(n.group)) throw InputError("unknown group '" + n.group + "'", gpos.line, gpos.column);
      std::vector<Pos> cpos;
      for (const Line* row : block(line)) {
        const Token& head = row->tokens[0];
        if (head.text == "quotient") {
          const std::size_t from = row->tokens.size() > 1 ? row->tokens[1].column - 1 : row->raw.size();
          std::string body = row->raw.substr(from);
          if (auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
          while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r')) body.pop_back();
          try {
            EquivariantHD q = GroupRingElement::parse(body, ehd_signature());
            validate_ehd(q);
            n.quotient += q;
          } catch (const std::exception& err) {
            throw InputError(err.what(), row->number, from + 1);
          }
        } else if (head.text == "child") {
          ChildDecl c;
          bool have_class = false;
          bool have_target = false;
          Pos target_pos{row->number, head.column};
          for (std::size_t t = 1; t < row->tokens.size(); ++t) {
            const Token& tok = row->tokens[t];
            if (tok.text == "self") {
              if (have_target) fail("child target given twice", *row, tok);
              c.self = true;
              have_target = true;
              continue;
            }
            auto [key, value] = key_value(*row, tok);
            if (key == "class") {
              c.class_index = parse_size(*row, tok, value);
              have_class = true;
            } else if (key == "beta") {
              c.beta = parse_rational(*row, tok, value);
            } else if (key == "node") {
              if (have_target) fail("child target given twice", *row, tok);
              c.target = value;
              have_target = true;
              target_pos = {row->number, tok.column};
            } else {
              fail("unknown key '" + key + "'", *row, tok);
            }
          }
          if (!have_class) fail("child needs class=", *row, head);
          if (!have_target) fail("child needs node=<name> or self", *row, head);
          n.children.push_back(std::move(c));
          cpos.push_back(target_pos);
        } else {
          fail("expected 'quotient' or 'child'", *row, head);
        }
      }
      node_pos.push_back({line.number, name.column});
      node_group_pos.push_back(gpos);
      child_pos.push_back(std::move(cpos));
      ws.nodes_.push_back(std::move(n));
      continue;
    }

    if (kw == "job") {
      JobDecl j;
      const Token& cmd = need(line, 1, "job command");
      auto kit = job_keys().find(cmd.text);
      if (kit == job_keys().end()) fail("unknown job command '" + cmd.text + "'", line, cmd);
      j.command = cmd.text;
      std::set<std::string> seen;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        const Token& tok = line.tokens[t];
        auto [key, value] = key_value(line, tok);
        if (!kit->second.count(key)) fail("unknown option '" + key + "' for job " + cmd.text, line, tok);
        if (!seen.insert(key).second) fail("repeated option '" + key + "'", line, tok);
        if (key == "target" || key == "fixture" || key == "hodge") {
          job_refs.push_back({ws.jobs_.size(), {line.number, tok.column}});
        }
        j.options.emplace_back(key, value);
      }
      ws.jobs_.push_back(std::move(j));
      continue;
    }

    if (kw == "end") fail("'end' without an open block", line, line.tokens[0]);
    fail("unknown statement '" + kw + "'", line, line.tokens[0]);
  }

  // Nodes: build the shared model once every name is known.
  for (std::size_t n = 0; n < ws.nodes_.size(); ++n) {
    const NodeDecl& d = ws.nodes_[n];
    TripleNode tn;
    tn.name = d.name;
    tn.dim = d.dim;
    tn.group = ws.built_groups_.at(d.group);
    tn.quotient_hodge = d.quotient;
    ws.model_->add_node(std::move(tn));
  }
  for (std::size_t n = 0; n < ws.nodes_.size(); ++n) {
    const NodeDecl& d = ws.nodes_[n];
    for (std::size_t c = 0; c < d.children.size(); ++c) {
      const ChildDecl& cd = d.children[c];
      std::optional<std::size_t> target;
      if (!cd.self) {
        target = ws.model_->find(cd.target);
        if (!target) {
          throw InputError("unknown node '" + cd.target + "'", child_pos[n][c].line, child_pos[n][c].column);
        }
      }
      ws.model_->add_child(n, cd.class_index, cd.beta, target);
    }
  }
  try {
    ws.model_->finalize();
  } catch (const InvalidTripleNode& err) {
    throw InputError(err.what(), node_pos[err.node()].line, node_pos[err.node()].column);
  }

  for (const auto& [job, pos] : job_refs) {
    for (const auto& [key, value] : ws.jobs_[job].options) {
      const bool found = key == "hodge" ? ws.hodge(value) != nullptr
                         : key == "target" || key == "fixture"
                             ? ws.explicit_set(value) != nullptr || ws.node(value).has_value() ||
                                   (key == "fixture" && ws.hodge(value) != nullptr)
                             : true;
      if (!found) throw InputError("unknown reference '" + value + "'", pos.line, pos.column);
    }
  }
  return ws;
}

std::string Workspace::serialize() const {
  std::ostringstream out;
  bool any = false;
  auto section = [&] {
    if (any) out << '\n';
    any = true;
  };

  if (!groups_.empty()) section();
  for (const auto& g : groups_) {
    out << "group " << g.name << ' ';
    switch (g.kind) {
      case GroupDecl::Kind::Trivial:
        out << "trivial\n";
        break;
      case GroupDecl::Kind::Cyclic:
        out << "cyclic " << g.n << '\n';
        break;
      case GroupDecl::Kind::Wreath:
        out << "wreath " << g.base << ' ' << g.n << '\n';
        break;
      case GroupDecl::Kind::Table:
        out << "table " << g.n << '\n';
        for (std::size_t r = 0; r < g.n; ++r) {
          out << ' ';
          for (std::size_t c = 0; c < g.n; ++c) out << ' ' << g.table[r * g.n + c];
          out << '\n';
        }
        out << "end\n";
        break;
    }
  }
  for (const auto& h : hodge_) {
    section();
    out << "hodge " << h.name << '\n';
    for (const auto& d : h.rows) {
      out << "  row k=" << d.k << " p=" << d.p << " q=" << d.q << " alpha=" << d.alpha.value().str()
          << " dim=" << d.dim << '\n';
    }
    out << "end\n";
  }
  for (const auto& e : explicit_) {
    section();
    out << "explicit " << e.name << " points=" << e.points << " group=" << e.group << '\n';
    out << "  phi";
    for (auto v : e.phi) out << ' ' << v;
    out << '\n';
    for (const auto& [elem, perm] : e.generators) {
      out << "  act " << elem;
      for (auto v : perm) out << ' ' << v;
      out << '\n';
    }
    out << "end\n";
  }
  if (!brieskorn_.empty()) section();
  for (const auto& b : brieskorn_) out << "brieskorn " << b.name << " a=" << b.a << " order=" << b.order << '\n';
  for (const auto& n : nodes_) {
    section();
    out << "node " << n.name << " group=" << n.group << " dim=" << (n.dim ? std::to_string(*n.dim) : "mixed") << '\n';
    if (!n.quotient.is_zero()) out << "  quotient " << n.quotient.str() << '\n';
    for (const auto& c : n.children) {
      out << "  child class=" << c.class_index << " beta=" << c.beta.str() << ' '
          << (c.self ? std::string("self") : "node=" + c.target) << '\n';
    }
    out << "end\n";
  }
  if (!jobs_.empty()) section();
  for (const auto& j : jobs_) {
    out << "job " << j.command;
    for (const auto& [k, v] : j.options) out << ' ' << k << '=' << quote_if_needed(v);
    out << '\n';
  }
  return out.str();
}

bool Workspace::same_declarations(const Workspace& o) const {
  return groups_ == o.groups_ && hodge_ == o.hodge_ && explicit_ == o.explicit_ && brieskorn_ == o.brieskorn_ &&
         nodes_ == o.nodes_ && jobs_ == o.jobs_;
}

std::shared_ptr<const FiniteGroup> Workspace::group(const std::string& name) const {
  auto it = built_groups_.find(name);
  return it == built_groups_.end() ? nullptr : it->second;
}

const HodgeDecl* Workspace::hodge(const std::string& name) const {
  for (const auto& h : hodge_) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

const ExplicitGSet* Workspace::explicit_set(const std::string& name) const {
  auto it = built_sets_.find(name);
  return it == built_sets_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> Workspace::node(const std::string& name) const { return model_->find(name); }

std::optional<Theorem2Fixture> Workspace::theorem2_fixture(const std::string& name) const {
  if (const ExplicitGSet* x = explicit_set(name)) return ExplicitFixture{name, *x};
  if (auto n = node(name)) return NodeFixture{name, model_, *n};
  return std::nullopt;
}

std::vector<Theorem2Fixture> Workspace::theorem2_fixtures() const {
  std::vector<Theorem2Fixture> out;
  for (const auto& e : explicit_) out.push_back(ExplicitFixture{e.name, built_sets_.at(e.name)});
  for (const auto& b : brieskorn_) out.push_back(ExplicitFixture{b.name, built_sets_.at(b.name)});
  for (std::size_t n = 0; n < nodes_.size(); ++n) out.push_back(NodeFixture{nodes_[n].name, model_, n});
  return out;
}

}  // namespace orbispec
