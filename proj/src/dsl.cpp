#include "hocolim/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hocolim::dsl {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += sep;
    out += parts[k];
  }
  return out;
}

std::string position_text(std::size_t line, std::size_t column, const std::string& message,
                          const std::vector<std::string>& expected) {
  std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  if (!expected.empty()) out += " (expected " + join(expected, ", ") + ")";
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line_, std::size_t column_, std::string message_,
                       std::vector<std::string> expected_)
    : std::runtime_error(position_text(line_, column_, message_, expected_)),
      line(line_),
      column(column_),
      message(std::move(message_)),
      expected(std::move(expected_)) {}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    if (!out.empty()) out += "\n";
    out += position_text(d.line, d.column, d.message, {});
  }
  return out;
}

}  // namespace

SemanticError::SemanticError(std::vector<Diagnostic> diagnostics_)
    : std::runtime_error(summarize(diagnostics_)), diagnostics(std::move(diagnostics_)) {}

// ---------------------------------------------------------------------------
// Document

void Document::check_new_name(const std::string& name) const {
  if (!is_valid_name(name)) throw std::invalid_argument("invalid declaration name '" + name + "'");
  if (find(name)) throw std::invalid_argument("duplicate declaration '" + name + "'");
}

std::shared_ptr<const SimplicialSet> Document::add_sset(std::string name, SimplicialSet K) {
  check_new_name(name);
  auto ptr = std::make_shared<const SimplicialSet>(std::move(K));
  decls_.push_back({std::move(name), ptr});
  return ptr;
}

void Document::add_map(std::string name, std::string source, std::string target, SimplicialMap f) {
  check_new_name(name);
  if (!sset(source) || !sset(target)) throw std::invalid_argument("map '" + name + "' refers to an unknown sset");
  decls_.push_back({std::move(name), MapDecl{std::move(source), std::move(target), std::move(f)}});
}

void Document::add_category(std::string name, FiniteCategory C) {
  check_new_name(name);
  decls_.push_back({std::move(name), std::move(C)});
}

void Document::add_poset(std::string name, Poset P) {
  check_new_name(name);
  decls_.push_back({std::move(name), std::move(P)});
}

void Document::add_diagram(std::string name, std::string index, std::vector<std::string> fibers,
                           DiagramOfPosets D) {
  check_new_name(name);
  if (!category(index)) throw std::invalid_argument("diagram '" + name + "' refers to an unknown category");
  if (fibers.size() != D.index().object_count()) throw std::invalid_argument("diagram '" + name + "' needs one fiber name per object");
  for (const std::string& f : fibers) {
    if (!poset(f)) throw std::invalid_argument("diagram '" + name + "' refers to unknown poset '" + f + "'");
  }
  decls_.push_back({std::move(name), DiagramDecl{std::move(index), std::move(fibers), std::move(D)}});
}

void Document::add_weights(std::string name, std::string over, VertexWeights w) {
  check_new_name(name);
  if (!sset(over)) throw std::invalid_argument("weights '" + name + "' refer to an unknown sset");
  decls_.push_back({std::move(name), WeightsDecl{std::move(over), std::move(w)}});
}

const Declaration* Document::find(std::string_view name) const {
  for (const Declaration& d : decls_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

namespace {

template <typename T>
const T* entity_as(const Document& doc, std::string_view name) {
  const Declaration* d = doc.find(name);
  return d ? std::get_if<T>(&d->entity) : nullptr;
}

}  // namespace

std::shared_ptr<const SimplicialSet> Document::sset(std::string_view name) const {
  const auto* p = entity_as<std::shared_ptr<const SimplicialSet>>(*this, name);
  return p ? *p : nullptr;
}
const MapDecl* Document::map(std::string_view name) const { return entity_as<MapDecl>(*this, name); }
const FiniteCategory* Document::category(std::string_view name) const {
  return entity_as<FiniteCategory>(*this, name);
}
const Poset* Document::poset(std::string_view name) const { return entity_as<Poset>(*this, name); }
const DiagramDecl* Document::diagram(std::string_view name) const {
  return entity_as<DiagramDecl>(*this, name);
}
const WeightsDecl* Document::weights(std::string_view name) const {
  return entity_as<WeightsDecl>(*this, name);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  name,
  integer,
  lbrace,
  rbrace,
  colon,
  equals,
  comma,
  semicolon,
  arrow,
  maps_to,
  less,
  star,
  lbracket,
  rbracket,
  end,
  invalid,
};

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::name: return "name";
    case Tok::integer: return "integer";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::colon: return "':'";
    case Tok::equals: return "'='";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::arrow: return "'->'";
    case Tok::maps_to: return "'|->'";
    case Tok::less: return "'<'";
    case Tok::star: return "'*'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::end: return "end of input";
    case Tok::invalid: return "invalid character";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_degeneracy_symbol(std::string_view text) {
  return text.size() >= 2 && text[0] == 's' && std::all_of(text.begin() + 1, text.end(), is_digit);
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blanks();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::end;
      return t;
    }
    const char c = src_[pos_];
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
      t.kind = Tok::name;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (is_digit(c) || (c == '-' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
      const std::size_t start = pos_;
      advance();
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
      t.kind = Tok::integer;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (src_.substr(pos_, 2) == "->") return symbol(t, Tok::arrow, 2);
    if (src_.substr(pos_, 3) == "|->") return symbol(t, Tok::maps_to, 3);
    switch (c) {
      case '{': return symbol(t, Tok::lbrace, 1);
      case '}': return symbol(t, Tok::rbrace, 1);
      case ':': return symbol(t, Tok::colon, 1);
      case '=': return symbol(t, Tok::equals, 1);
      case ',': return symbol(t, Tok::comma, 1);
      case ';': return symbol(t, Tok::semicolon, 1);
      case '<': return symbol(t, Tok::less, 1);
      case '*': return symbol(t, Tok::star, 1);
      case '[': return symbol(t, Tok::lbracket, 1);
      case ']': return symbol(t, Tok::rbracket, 1);
      default: break;
    }
    t.kind = Tok::invalid;
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) {
      t.text = std::string(1, c);
    } else {
      static const char* hex = "0123456789abcdef";
      t.text = std::string("\\x") + hex[u >> 4] + hex[u & 15];
    }
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token symbol(Token t, Tok kind, std::size_t width) {
    t.kind = kind;
    t.text = std::string(src_.substr(pos_, width));
    for (std::size_t k = 0; k < width; ++k) advance();
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

struct RawPointer {
  std::vector<Token> degeneracies;
  Token target;
};

struct RawGenerator {
  Token name;
  Token dim;
  bool has_faces = false;
  std::vector<RawPointer> faces;
};

const std::vector<std::string> kDeclarationKeywords = {"'sset'", "'map'", "'category'",
                                                       "'poset'", "'diagram'", "'weights'"};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  Document run() {
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::name) {
        if (t.text == "sset") {
          parse_sset();
          continue;
        }
        if (t.text == "map") {
          parse_map();
          continue;
        }
        if (t.text == "category") {
          parse_category();
          continue;
        }
        if (t.text == "poset") {
          parse_poset();
          continue;
        }
        if (t.text == "diagram") {
          parse_diagram();
          continue;
        }
        if (t.text == "weights") {
          parse_weights();
          continue;
        }
      }
      fail(t, "expected a declaration", kDeclarationKeywords);
    }
    if (!diagnostics_.empty()) throw SemanticError(std::move(diagnostics_));
    return std::move(doc_);
  }

 private:
  const Token& peek(std::size_t k = 0) {
    while (buffer_.size() <= k) {
      if (!buffer_.empty() && (buffer_.back().kind == Tok::end || buffer_.back().kind == Tok::invalid)) {
        buffer_.push_back(buffer_.back());
      } else {
        buffer_.push_back(lexer_.next());
      }
    }
    return buffer_[k];
  }

  Token take() {
    Token t = peek();
    buffer_.pop_front();
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::string message, std::vector<std::string> expected) {
    if (at.kind == Tok::invalid) message = "unexpected character '" + at.text + "'";
    else if (at.kind == Tok::end) message += ", found end of input";
    else message += ", found '" + at.text + "'";
    throw ParseError(at.line, at.column, std::move(message), std::move(expected));
  }

  Token expect(Tok kind, std::string_view what = {}) {
    if (peek().kind != kind) {
      const std::string label = what.empty() ? describe(kind) : std::string(what);
      fail(peek(), "expected " + label, {label});
    }
    return take();
  }

  Token expect_keyword(std::string_view keyword) {
    if (peek().kind != Tok::name || peek().text != keyword) {
      const std::string label = "'" + std::string(keyword) + "'";
      fail(peek(), "expected " + label, {label});
    }
    return take();
  }

  bool at_keyword(std::string_view keyword, std::size_t k = 0) {
    return peek(k).kind == Tok::name && peek(k).text == keyword;
  }

  void diag(const Token& at, std::string message) {
    diagnostics_.push_back({at.line, at.column, std::move(message)});
  }

  std::optional<std::size_t> unsigned_value(const Token& t) {
    std::size_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      diag(t, "'" + t.text + "' is not a non-negative integer in range");
      return std::nullopt;
    }
    return value;
  }

  RawPointer parse_pointer() {
    RawPointer p;
    for (;;) {
      if (peek().kind == Tok::name && is_degeneracy_symbol(peek().text) && peek(1).kind == Tok::name) {
        p.degeneracies.push_back(take());
      } else if (at_keyword("s") && peek(1).kind == Tok::integer) {
        // "s 1" spelled with a space
        Token s = take();
        s.text += take().text;
        p.degeneracies.push_back(std::move(s));
      } else {
        break;
      }
    }
    p.target = expect(Tok::name, "generator name");
    return p;
  }

  // Resolves a raw pointer against K. Returns nullopt after reporting.
  std::optional<FacePointer> resolve_pointer(const RawPointer& raw, const SimplicialSet& K,
                                             std::size_t expected_dim) {
    const auto target = K.find(raw.target.text);
    if (!target) {
      diag(raw.target, "unknown generator '" + raw.target.text + "'");
      return std::nullopt;
    }
    return check_word(raw, *target, expected_dim);
  }

  std::optional<FacePointer> check_word(const RawPointer& raw, SimplexId target, std::size_t expected_dim) {
    std::vector<std::size_t> indices;
    for (const Token& t : raw.degeneracies) {
      std::size_t j = 0;
      const char* first = t.text.data() + 1;
      const char* last = t.text.data() + t.text.size();
      auto [ptr, ec] = std::from_chars(first, last, j);
      if (ec != std::errc() || ptr != last) {
        diag(t, "degeneracy index out of range");
        return std::nullopt;
      }
      if (!indices.empty() && indices.back() <= j) {
        diag(t, "degeneracy word must be strictly decreasing");
        return std::nullopt;
      }
      indices.push_back(j);
    }
    FacePointer fp(DegeneracyWord(std::move(indices)), target);
    const Token& at = raw.degeneracies.empty() ? raw.target : raw.degeneracies.front();
    if (fp.dimension() != expected_dim) {
      diag(at, "'" + raw.target.text + "' with this degeneracy word has dimension " +
                   std::to_string(fp.dimension()) + ", expected " + std::to_string(expected_dim));
      return std::nullopt;
    }
    if (!fp.word.applies_to(target.dim)) {
      diag(at, "degeneracy index too large for '" + raw.target.text + "'");
      return std::nullopt;
    }
    return fp;
  }

  bool check_decl_name(const Token& name) {
    if (!is_valid_name(name.text)) {
      diag(name, "'" + name.text + "' is reserved for degeneracy symbols");
      return false;
    }
    if (doc_.find(name.text)) {
      diag(name, "duplicate declaration '" + name.text + "'");
      return false;
    }
    return true;
  }

  void parse_sset() {
    expect_keyword("sset");
    const Token name = expect(Tok::name, "declaration name");
    expect(Tok::lbrace);
    std::vector<RawGenerator> gens;
    while (peek().kind != Tok::rbrace) {
      if (peek().kind != Tok::name) fail(peek(), "expected a generator", {"generator name", "'}'"});
      RawGenerator g;
      g.name = take();
      expect(Tok::colon);
      g.dim = expect(Tok::integer, "dimension");
      if (at_keyword("faces") && peek(1).kind == Tok::equals) {
        take();
        take();
        g.has_faces = true;
        g.faces.push_back(parse_pointer());
        while (peek().kind == Tok::comma) {
          take();
          g.faces.push_back(parse_pointer());
        }
      }
      gens.push_back(std::move(g));
    }
    expect(Tok::rbrace);

    const std::size_t before = diagnostics_.size();
    check_decl_name(name);
    std::set<std::string> seen;
    std::vector<std::pair<std::size_t, const RawGenerator*>> order;
    for (const RawGenerator& g : gens) {
      if (!is_valid_name(g.name.text)) diag(g.name, "'" + g.name.text + "' is reserved for degeneracy symbols");
      if (!seen.insert(g.name.text).second) diag(g.name, "duplicate generator '" + g.name.text + "'");
      if (auto d = unsigned_value(g.dim)) order.emplace_back(*d, &g);
    }
    if (diagnostics_.size() != before) return;
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    SimplicialSet K;
    for (const auto& [dim, g] : order) {
      if (dim == 0 && g->has_faces) {
        diag(g->name, "vertex '" + g->name.text + "' cannot have faces");
        continue;
      }
      if (dim > 0 && !g->has_faces) {
        diag(g->name, "missing faces for '" + g->name.text + "'");
        continue;
      }
      if (dim > 0 && g->faces.size() != dim + 1) {
        diag(g->name, "'" + g->name.text + "' has dimension " + std::to_string(dim) + " and needs " +
                          std::to_string(dim + 1) + " faces, got " + std::to_string(g->faces.size()));
        continue;
      }
      std::vector<FacePointer> faces;
      bool ok = true;
      for (const RawPointer& raw : g->faces) {
        auto fp = resolve_pointer(raw, K, dim - 1);
        if (!fp) {
          ok = false;
          break;
        }
        faces.push_back(std::move(*fp));
      }
      if (!ok) continue;
      try {
        K.add(dim, g->name.text, std::move(faces));
      } catch (const std::exception& e) {
        diag(g->name, e.what());
      }
    }
    if (diagnostics_.size() != before) return;
    doc_.add_sset(name.text, std::move(K));
  }

  void parse_map() {
    expect_keyword("map");
    const Token name = expect(Tok::name, "declaration name");
    expect(Tok::colon);
    const Token source = expect(Tok::name, "sset name");
    expect(Tok::arrow);
    const Token target = expect(Tok::name, "sset name");
    expect(Tok::lbrace);
    std::vector<std::pair<Token, RawPointer>> entries;
    while (peek().kind != Tok::rbrace) {
      if (peek().kind != Tok::name) fail(peek(), "expected a map entry", {"generator name", "'}'"});
      Token from = take();
      expect(Tok::maps_to);
      entries.emplace_back(std::move(from), parse_pointer());
    }
    expect(Tok::rbrace);

    const std::size_t before = diagnostics_.size();
    check_decl_name(name);
    auto A = doc_.sset(source.text);
    auto B = doc_.sset(target.text);
    if (!A) diag(source, "unknown sset '" + source.text + "'");
    if (!B) diag(target, "unknown sset '" + target.text + "'");
    if (diagnostics_.size() != before) return;
    std::vector<std::vector<std::optional<FacePointer>>> images(A->num_dimensions());
    for (std::size_t d = 0; d < A->num_dimensions(); ++d) images[d].resize(A->count(d));
    for (const auto& [from, raw] : entries) {
      const auto id = A->find(from.text);
      if (!id) {
        diag(from, "'" + from.text + "' is not a generator of '" + source.text + "'");
        continue;
      }
      if (images[id->dim][id->index]) {
        diag(from, "'" + from.text + "' is assigned twice");
        continue;
      }
      if (auto fp = resolve_pointer(raw, *B, id->dim)) images[id->dim][id->index] = std::move(*fp);
    }
    if (diagnostics_.size() != before) return;
    std::vector<std::vector<FacePointer>> assignment(A->num_dimensions());
    for (SimplexId id : A->ids()) {
      if (!images[id.dim][id.index]) {
        diag(name, "map '" + name.text + "' gives no image for '" + A->name(id) + "'");
        continue;
      }
      assignment[id.dim].push_back(*images[id.dim][id.index]);
    }
    if (diagnostics_.size() != before) return;
    doc_.add_map(name.text, source.text, target.text, SimplicialMap(A, B, std::move(assignment)));
  }

  std::vector<Token> parse_name_list(std::string_view what) {
    std::vector<Token> names;
    names.push_back(expect(Tok::name, what));
    while (peek().kind == Tok::name) names.push_back(take());
    expect(Tok::semicolon);
    return names;
  }

  void parse_category() {
    expect_keyword("category");
    const Token name = expect(Tok::name, "declaration name");
    expect(Tok::lbrace);
    expect_keyword("objects");
    const std::vector<Token> objects = parse_name_list("object name");
    struct RawMor {
      Token name, source, target;
    };
    struct RawComp {
      Token outer, inner, result;
    };
    std::vector<RawMor> mors;
    std::vector<RawComp> comps;
    while (at_keyword("mor")) {
      take();
      RawMor m;
      m.name = expect(Tok::name, "morphism name");
      expect(Tok::colon);
      m.source = expect(Tok::name, "object name");
      expect(Tok::arrow);
      m.target = expect(Tok::name, "object name");
      expect(Tok::semicolon);
      mors.push_back(std::move(m));
    }
    while (at_keyword("comp")) {
      take();
      RawComp c;
      c.outer = expect(Tok::name, "morphism name");
      expect(Tok::star);
      c.inner = expect(Tok::name, "morphism name");
      expect(Tok::equals);
      c.result = expect(Tok::name, "morphism name");
      expect(Tok::semicolon);
      comps.push_back(std::move(c));
    }
    if (peek().kind != Tok::rbrace) {
      fail(peek(), "expected a category entry", {"'mor'", "'comp'", "'}'"});
    }
    take();

    const std::size_t before = diagnostics_.size();
    check_decl_name(name);
    FiniteCategory::Builder b;
    try {
      for (const Token& o : objects) {
        try {
          b.add_object(o.text);
        } catch (const CategoryError& e) {
          diag(o, e.what());
        }
      }
      for (const RawMor& m : mors) {
        const auto s = b.find_object(m.source.text);
        const auto t = b.find_object(m.target.text);
        if (!s) diag(m.source, "unknown object '" + m.source.text + "'");
        if (!t) diag(m.target, "unknown object '" + m.target.text + "'");
        if (!s || !t) continue;
        try {
          b.add_morphism(m.name.text, *s, *t);
        } catch (const CategoryError& e) {
          diag(m.name, e.what());
        }
      }
      for (const RawComp& c : comps) {
        bool ok = true;
        std::size_t idx[3] = {0, 0, 0};
        const Token* parts[3] = {&c.outer, &c.inner, &c.result};
        for (int k = 0; k < 3; ++k) {
          const auto m = b.find_morphism(parts[k]->text);
          if (!m) {
            diag(*parts[k], "unknown morphism '" + parts[k]->text +
                                "' (identities are implicit and may not appear in comp entries)");
            ok = false;
          } else {
            idx[k] = *m;
          }
        }
        if (ok) b.set_composite(idx[0], idx[1], idx[2]);
      }
      if (diagnostics_.size() != before) return;
      doc_.add_category(name.text, std::move(b).build());
    } catch (const CategoryError& e) {
      diag(name, e.what());
    }
  }

  void parse_poset() {
    expect_keyword("poset");
    const Token name = expect(Tok::name, "declaration name");
    expect(Tok::lbrace);
    expect_keyword("elements");
    const std::vector<Token> elements = parse_name_list("element name");
    std::vector<std::pair<Token, Token>> rels;
    while (at_keyword("rel")) {
      take();
      Token a = expect(Tok::name, "element name");
      expect(Tok::less);
      Token b = expect(Tok::name, "element name");
      expect(Tok::semicolon);
      rels.emplace_back(std::move(a), std::move(b));
    }
    if (peek().kind != Tok::rbrace) fail(peek(), "expected a poset entry", {"'rel'", "'}'"});
    take();

    const std::size_t before = diagnostics_.size();
    check_decl_name(name);
    std::vector<std::string> names;
    for (const Token& e : elements) names.push_back(e.text);
    auto index_of = [&](const Token& t) -> std::optional<std::size_t> {
      auto it = std::find(names.begin(), names.end(), t.text);
      if (it == names.end()) {
        diag(t, "unknown element '" + t.text + "'");
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> strict;
    for (const auto& [a, b] : rels) {
      const auto ia = index_of(a);
      const auto ib = index_of(b);
      if (ia && ib) strict.emplace_back(*ia, *ib);
    }
    if (diagnostics_.size() != before) return;
    try {
      doc_.add_poset(name.text, Poset(std::move(names), strict));
    } catch (const PosetError& e) {
      diag(name, e.what());
    }
  }

  void parse_diagram() {
    expect_keyword("diagram");
    const Token name = expect(Tok::name, "declaration name");
    expect(Tok::lbrace);
    expect_keyword("index");
    const Token index = expect(Tok::name, "category name");
    expect(Tok::semicolon);
    std::vector<std::pair<Token, Token>> fibers;
    while (at_keyword("fiber")) {
      take();
      Token obj = expect(Tok::name, "object name");
      expect(Tok::equals);
      Token poset = expect(Tok::name, "poset name");
      expect(Tok::semicolon);
      fibers.emplace_back(std::move(obj), std::move(poset));
    }
    struct RawTransition {
      Token morphism;
      std::vector<std::pair<Token, Token>> entries;
    };
    std::vector<RawTransition> transitions;
    while (at_keyword("transition")) {
      take();
      RawTransition t;
      t.morphism = expect(Tok::name, "morphism name");
      expect(Tok::equals);
      expect(Tok::lbrace);
      while (peek().kind != Tok::rbrace) {
        if (peek().kind != Tok::name) fail(peek(), "expected a transition entry", {"element name", "'}'"});
        Token from = take();
        expect(Tok::maps_to);
        Token to = expect(Tok::name, "element name");
        t.entries.emplace_back(std::move(from), std::move(to));
      }
      take();
      expect(Tok::semicolon);
      transitions.push_back(std::move(t));
    }
    if (peek().kind != Tok::rbrace) fail(peek(), "expected a diagram entry", {"'fiber'", "'transition'", "'}'"});
    take();

    const std::size_t before = diagnostics_.size();
    check_decl_name(name);
    const FiniteCategory* C = doc_.category(index.text);
    if (!C) {
      diag(index, "unknown category '" + index.text + "'");
      return;
    }
    std::vector<std::optional<std::string>> fiber_names(C->object_count());
    for (const auto& [obj, poset] : fibers) {
      const auto o = C->find_object(obj.text);
      if (!o) {
        diag(obj, "unknown object '" + obj.text + "'");
        continue;
      }
      if (!doc_.poset(poset.text)) {
        diag(poset, "unknown poset '" + poset.text + "'");
        continue;
      }
      if (fiber_names[*o]) {
        diag(obj, "fiber of '" + obj.text + "' given twice");
        continue;
      }
      fiber_names[*o] = poset.text;
    }
    for (std::size_t o = 0; o < C->object_count(); ++o) {
      if (!fiber_names[o]) diag(name, "no fiber for object '" + C->object(o) + "'");
    }
    if (diagnostics_.size() != before) return;
    std::vector<Poset> fiber_posets;
    std::vector<std::string> fiber_list;
    for (const auto& f : fiber_names) {
      fiber_posets.push_back(*doc_.poset(*f));
      fiber_list.push_back(*f);
    }
    std::vector<std::vector<std::size_t>> maps(C->morphism_count());
    std::vector<bool> given(C->morphism_count(), false);
    for (const RawTransition& t : transitions) {
      const auto m = C->find_morphism(t.morphism.text);
      if (!m) {
        diag(t.morphism, "unknown morphism '" + t.morphism.text + "'");
        continue;
      }
      if (given[*m]) {
        diag(t.morphism, "transition of '" + t.morphism.text + "' given twice");
        continue;
      }
      given[*m] = true;
      const Poset& P = fiber_posets[C->morphism(*m).source];
      const Poset& Q = fiber_posets[C->morphism(*m).target];
      std::vector<std::optional<std::size_t>> image(P.size());
      for (const auto& [from, to] : t.entries) {
        const auto p = P.find(from.text);
        const auto q = Q.find(to.text);
        if (!p) diag(from, "'" + from.text + "' is not in the source fiber");
        if (!q) diag(to, "'" + to.text + "' is not in the target fiber");
        if (!p || !q) continue;
        if (image[*p]) {
          diag(from, "'" + from.text + "' is mapped twice");
          continue;
        }
        image[*p] = *q;
      }
      for (std::size_t p = 0; p < P.size(); ++p) {
        if (!image[p]) {
          diag(t.morphism, "transition of '" + t.morphism.text + "' gives no image for '" + P.element(p) + "'");
        } else {
          maps[*m].push_back(*image[p]);
        }
      }
    }
    for (std::size_t m : C->nonidentity_morphisms()) {
      if (!given[m]) diag(name, "no transition for morphism '" + C->morphism(m).name + "'");
    }
    if (diagnostics_.size() != before) return;
    try {
      DiagramOfPosets D(*C, std::move(fiber_posets), std::move(maps));
      doc_.add_diagram(name.text, index.text, std::move(fiber_list), std::move(D));
    } catch (const DiagramError& e) {
      diag(name, e.what());
    }
  }

  void parse_weights() {
    expect_keyword("weights");
    const Token name = expect(Tok::name, "declaration name");
    expect(Tok::lbrace);
    expect_keyword("over");
    const Token over = expect(Tok::name, "sset name");
    expect(Tok::semicolon);
    expect_keyword("arity");
    const Token arity = expect(Tok::integer, "arity");
    expect(Tok::semicolon);
    std::vector<std::pair<Token, std::vector<Token>>> entries;
    while (peek().kind != Tok::rbrace) {
      if (peek().kind != Tok::name) fail(peek(), "expected a weight entry", {"vertex name", "'}'"});
      Token vertex = take();
      expect(Tok::equals);
      expect(Tok::lbracket);
      std::vector<Token> values;
      values.push_back(expect(Tok::integer));
      while (peek().kind == Tok::comma) {
        take();
        values.push_back(expect(Tok::integer));
      }
      expect(Tok::rbracket);
      expect(Tok::semicolon);
      entries.emplace_back(std::move(vertex), std::move(values));
    }
    take();

    const std::size_t before = diagnostics_.size();
    check_decl_name(name);
    auto K = doc_.sset(over.text);
    if (!K) diag(over, "unknown sset '" + over.text + "'");
    const auto k = unsigned_value(arity);
    if (k && *k == 0) diag(arity, "arity must be at least 1");
    if (diagnostics_.size() != before) return;
    VertexWeights w(*k);
    std::set<std::string> mentioned;
    for (const auto& [vertex, values] : entries) {
      mentioned.insert(vertex.text);
      const auto id = K->find(vertex.text);
      if (!id || id->dim != 0) {
        diag(vertex, "'" + vertex.text + "' is not a vertex of '" + over.text + "'");
        continue;
      }
      if (w.values().contains(vertex.text)) {
        diag(vertex, "weight for '" + vertex.text + "' given twice");
        continue;
      }
      if (values.size() != *k) {
        diag(vertex, "weight for '" + vertex.text + "' has length " + std::to_string(values.size()) +
                         ", expected " + std::to_string(*k));
        continue;
      }
      std::vector<Integer> v;
      for (const Token& t : values) v.emplace_back(t.text);
      w.set(vertex.text, std::move(v));
    }
    for (const Generator& g : K->generators(0)) {
      if (!mentioned.contains(g.name)) diag(name, "no weight for vertex '" + g.name + "'");
    }
    if (diagnostics_.size() != before) return;
    doc_.add_weights(name.text, over.text, std::move(w));
  }

  Lexer lexer_;
  std::deque<Token> buffer_;
  Document doc_;
  std::vector<Diagnostic> diagnostics_;
};

// ---------------------------------------------------------------------------
// Serialization

std::vector<SimplexId> canonical_order(const SimplicialSet& K) {
  std::vector<SimplexId> ids = K.ids();
  std::stable_sort(ids.begin(), ids.end(), [&K](SimplexId a, SimplexId b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return K.name(a) < K.name(b);
  });
  return ids;
}

std::string serialize_map(std::string_view name, const MapDecl& m) {
  const SimplicialSet& A = m.map.source();
  std::string out = "map " + std::string(name) + " : " + m.source + " -> " + m.target + " {\n";
  for (SimplexId id : canonical_order(A)) {
    out += "  " + A.name(id) + " |-> " + to_string(m.map(id), m.map.target()) + "\n";
  }
  return out + "}\n";
}

std::string serialize_diagram(std::string_view name, const DiagramDecl& d) {
  const FiniteCategory& C = d.diagram.index();
  std::string out = "diagram " + std::string(name) + " {\n  index " + d.index + ";\n";
  for (std::size_t o = 0; o < C.object_count(); ++o) {
    out += "  fiber " + C.object(o) + " = " + d.fibers[o] + ";\n";
  }
  for (std::size_t m : C.nonidentity_morphisms()) {
    const auto& mor = C.morphism(m);
    const Poset& P = d.diagram.fiber(mor.source);
    const Poset& Q = d.diagram.fiber(mor.target);
    const auto T = d.diagram.transition(m);
    out += "  transition " + mor.name + " = {";
    for (std::size_t p = 0; p < P.size(); ++p) out += " " + P.element(p) + " |-> " + Q.element(T[p]);
    out += " };\n";
  }
  return out + "}\n";
}

std::string serialize_weights(std::string_view name, const WeightsDecl& w) {
  std::string out = "weights " + std::string(name) + " {\n  over " + w.over + ";\n  arity " +
                    std::to_string(w.weights.arity()) + ";\n";
  for (const auto& [vertex, value] : w.weights.values()) {
    out += "  " + vertex + " = [";
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (k > 0) out += ", ";
      out += value[k].str();
    }
    out += "];\n";
  }
  return out + "}\n";
}

bool same_map(const SimplicialMap& a, const SimplicialMap& b) {
  if (!same_presentation(a.source(), b.source())) return false;
  for (SimplexId id : a.source().ids()) {
    const auto other = b.source().find(a.source().name(id));
    if (!other) return false;
    if (to_string(a(id), a.target()) != to_string(b(*other), b.target())) return false;
  }
  return true;
}

}  // namespace

Document parse(std::string_view text) { return Parser(text).run(); }

std::string serialize_sset(std::string_view name, const SimplicialSet& K) {
  std::string out = "sset " + std::string(name) + " {\n";
  for (SimplexId id : canonical_order(K)) {
    out += "  " + K.name(id) + ":" + std::to_string(id.dim);
    const auto& faces = K[id].faces;
    if (!faces.empty()) {
      out += " faces =";
      for (std::size_t i = 0; i < faces.size(); ++i) out += (i ? ", " : " ") + to_string(faces[i], K);
    }
    out += "\n";
  }
  return out + "}\n";
}

std::string serialize_category(std::string_view name, const FiniteCategory& C) {
  std::string out = "category " + std::string(name) + " {\n  objects";
  for (const std::string& o : C.objects()) out += " " + o;
  out += ";\n";
  const auto mors = C.nonidentity_morphisms();
  for (std::size_t m : mors) {
    const auto& mor = C.morphism(m);
    out += "  mor " + mor.name + " : " + C.object(mor.source) + " -> " + C.object(mor.target) + ";\n";
  }
  for (std::size_t g : mors) {
    for (std::size_t f : mors) {
      if (C.morphism(f).target != C.morphism(g).source) continue;
      const std::size_t h = C.compose(g, f);
      if (C.morphism(h).identity) {
        throw std::invalid_argument("category '" + std::string(name) + "': composite " +
                                    C.morphism(g).name + " * " + C.morphism(f).name +
                                    " is an identity, which the format cannot express");
      }
      out += "  comp " + C.morphism(g).name + " * " + C.morphism(f).name + " = " + C.morphism(h).name + ";\n";
    }
  }
  return out + "}\n";
}

std::string serialize_poset(std::string_view name, const Poset& P) {
  std::string out = "poset " + std::string(name) + " {\n  elements";
  for (const std::string& e : P.elements()) out += " " + e;
  out += ";\n";
  for (const auto& [a, b] : P.covers()) out += "  rel " + P.element(a) + " < " + P.element(b) + ";\n";
  return out + "}\n";
}

std::string serialize(const Document& doc) {
  std::string out;
  for (const Declaration& d : doc.declarations()) {
    if (!out.empty()) out += "\n";
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, std::shared_ptr<const SimplicialSet>>) {
            out += serialize_sset(d.name, *e);
          } else if constexpr (std::is_same_v<T, MapDecl>) {
            out += serialize_map(d.name, e);
          } else if constexpr (std::is_same_v<T, FiniteCategory>) {
            out += serialize_category(d.name, e);
          } else if constexpr (std::is_same_v<T, Poset>) {
            out += serialize_poset(d.name, e);
          } else if constexpr (std::is_same_v<T, DiagramDecl>) {
            out += serialize_diagram(d.name, e);
          } else {
            out += serialize_weights(d.name, e);
          }
        },
        d.entity);
  }
  return out;
}

bool equivalent(const Document& a, const Document& b) {
  const auto& da = a.declarations();
  const auto& db = b.declarations();
  if (da.size() != db.size()) return false;
  for (std::size_t k = 0; k < da.size(); ++k) {
    if (da[k].name != db[k].name || da[k].entity.index() != db[k].entity.index()) return false;
    const bool same = std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(db[k].entity);
          if constexpr (std::is_same_v<T, std::shared_ptr<const SimplicialSet>>) {
            return same_presentation(*x, *y);
          } else if constexpr (std::is_same_v<T, MapDecl>) {
            return x.source == y.source && x.target == y.target && same_map(x.map, y.map);
          } else if constexpr (std::is_same_v<T, DiagramDecl>) {
            return x.index == y.index && x.fibers == y.fibers && x.diagram == y.diagram;
          } else if constexpr (std::is_same_v<T, WeightsDecl>) {
            return x.over == y.over && x.weights == y.weights;
          } else {
            return x == y;
          }
        },
        da[k].entity);
    if (!same) return false;
  }
  return true;
}

}  // namespace hocolim::dsl
