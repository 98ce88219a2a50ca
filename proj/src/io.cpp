#include "slackmat/io.hpp"

#include <fstream>
#include <sstream>

#include "slackmat/errors.hpp"

namespace slackmat {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      const std::size_t b = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({std::string(raw.substr(b, i - b)), b + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) fail_eof();
    return lines_[pos_];
  }

  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

  [[noreturn]] void fail_eof() const {
    const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError("unexpected end of input", line, 1);
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(const std::string& what, const Line& line, std::size_t token) {
  const std::size_t col = token < line.tokens.size() ? line.tokens[token].column : 1;
  throw ParseError(what, line.number, col);
}

std::size_t parse_count(const Line& line, std::size_t token) {
  if (token >= line.tokens.size()) fail("missing count", line, token);
  const std::string& t = line.tokens[token].text;
  if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos)
    fail("expected a nonnegative count, got '" + t + "'", line, token);
  return std::stoul(t);
}

Rational parse_entry(const Line& line, std::size_t token) {
  try {
    return Rational::parse(line.tokens[token].text);
  } catch (const InvalidInput& e) {
    fail(e.what(), line, token);
  }
}

void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    fail("expected " + std::to_string(count) + " tokens, found " + std::to_string(line.tokens.size()), line,
         std::min(line.tokens.size(), count));
}

Vector parse_values(const Line& line, std::size_t first, std::size_t count) {
  expect_tokens(line, first + count);
  Vector v;
  v.reserve(count);
  for (std::size_t k = 0; k < count; ++k) v.push_back(parse_entry(line, first + k));
  return v;
}

// `count` rows of `width` entries; zero-width rows occupy no lines.
std::vector<Vector> parse_rows(Reader& in, std::size_t count, std::size_t width) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(width == 0 ? Vector{} : parse_values(in.next(), 0, width));
  return rows;
}

const Line& expect_label(Reader& in, const std::string& label) {
  const Line& l = in.next();
  if (l.tokens.front().text != label) fail("expected " + label, l, 0);
  return l;
}

std::vector<Halfspace> to_halfspaces(const std::vector<Vector>& rows) {
  std::vector<Halfspace> out;
  for (const auto& r : rows) out.push_back({r[0], Vector(r.begin() + 1, r.end())});
  return out;
}

Matrix parse_factor(Reader& in, const std::string& label, std::size_t rows, std::size_t cols) {
  expect_tokens(expect_label(in, label), 1);
  return Matrix::from_rows(parse_rows(in, rows, cols), cols);
}

PolytopeRep parse_poly_block(Reader& in, const std::string& label, bool halfspaces) {
  const Line& h = expect_label(in, label);
  expect_tokens(h, 3);
  const std::size_t k = parse_count(h, 1);
  const std::size_t n = parse_count(h, 2);
  auto rows = parse_rows(in, k, halfspaces ? n + 1 : n);
  return halfspaces ? PolytopeRep::from_halfspaces(n, to_halfspaces(rows))
                    : PolytopeRep::from_points(n, std::move(rows));
}

Certificate parse_certificate(Reader& in, const Line& header) {
  if (header.tokens.size() < 2) fail("expected YES or NO", header, 1);
  const std::string& verdict = header.tokens[1].text;
  if (verdict == "NO") {
    expect_tokens(header, 6);
    NoCertificate c;
    const std::string& reason = header.tokens[2].text;
    if (reason == to_string(RejectReason::NotConeGenerating))
      c.reason = RejectReason::NotConeGenerating;
    else if (reason == to_string(RejectReason::OnesNotInColumnSpan))
      c.reason = RejectReason::OnesNotInColumnSpan;
    else if (reason == to_string(RejectReason::RankBelowTwo))
      c.reason = RejectReason::RankBelowTwo;
    else
      fail("unknown rejection reason '" + reason + "'", header, 2);
    const std::string& conv = header.tokens[3].text;
    if (conv == "column")
      c.convention = SpanConvention::Column;
    else if (conv == "row")
      c.convention = SpanConvention::Row;
    else
      fail("expected 'column' or 'row'", header, 3);
    const std::size_t w = parse_count(header, 4);
    const std::size_t s = parse_count(header, 5);
    c.witness_point = parse_values(expect_label(in, "WITNESS"), 1, w);
    c.separator = parse_values(expect_label(in, "SEPARATOR"), 1, s);
    return c;
  }
  if (verdict != "YES") fail("expected YES or NO", header, 1);
  expect_tokens(header, 5);
  const std::size_t p = parse_count(header, 2);
  const std::size_t k = parse_count(header, 3);
  const std::size_t q = parse_count(header, 4);
  YesCertificate c;
  c.a = parse_factor(in, "FACTOR_A", p, k);
  c.b = parse_factor(in, "FACTOR_B", k, q);
  if (!in.done() && in.peek().tokens.front().text == "MU") c.mu = parse_values(in.next(), 1, q);
  if (!in.done() && in.peek().tokens.front().text == "VERTICES") c.vertices = parse_poly_block(in, "VERTICES", false);
  if (!in.done() && in.peek().tokens.front().text == "FACETS") c.facets = parse_poly_block(in, "FACETS", true);
  return c;
}

void write_row(std::ostringstream& os, std::span<const Rational> row, const char* label = nullptr) {
  bool first = true;
  if (label) {
    os << label;
    first = false;
  }
  for (const auto& x : row) {
    if (!first) os << ' ';
    os << x.to_string();
    first = false;
  }
  os << '\n';
}

void write_rows(std::ostringstream& os, const std::vector<Vector>& rows, std::size_t width) {
  if (width == 0) return;
  for (const auto& r : rows) write_row(os, r);
}

std::vector<Vector> halfspace_rows(const std::vector<Halfspace>& hs) {
  std::vector<Vector> rows;
  for (const auto& h : hs) {
    Vector r{h.bound};
    r.insert(r.end(), h.normal.begin(), h.normal.end());
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_poly(std::ostringstream& os, const PolytopeRep& p, const char* label) {
  if (p.form == Form::V) {
    os << label << ' ' << p.points.size() << ' ' << p.ambient_dim << '\n';
    write_rows(os, p.points, p.ambient_dim);
  } else {
    os << label << ' ' << p.inequalities.size() << ' ' << p.ambient_dim << '\n';
    write_rows(os, halfspace_rows(p.inequalities), p.ambient_dim + 1);
  }
}

}  // namespace

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Matrix:
      return "MATRIX";
    case DocumentKind::ConeV:
      return "CONE_V";
    case DocumentKind::ConeH:
      return "CONE_H";
    case DocumentKind::PolyV:
      return "POLY_V";
    case DocumentKind::PolyH:
      return "POLY_H";
    case DocumentKind::Cert:
      return "CERT";
  }
  return "UNKNOWN";
}

DocumentKind Document::kind() const {
  if (std::holds_alternative<Matrix>(payload)) return DocumentKind::Matrix;
  if (const auto* c = std::get_if<ConeRep>(&payload)) return c->form == Form::V ? DocumentKind::ConeV : DocumentKind::ConeH;
  if (const auto* p = std::get_if<PolytopeRep>(&payload))
    return p->form == Form::V ? DocumentKind::PolyV : DocumentKind::PolyH;
  return DocumentKind::Cert;
}

Document parse(std::string_view text) {
  Reader in(tokenize(text));
  const Line& header = in.next();
  const std::string& kind = header.tokens.front().text;
  Document doc;

  if (kind == "CERT") {
    doc.payload = parse_certificate(in, header);
  } else {
    expect_tokens(header, 3);
    const std::size_t k = parse_count(header, 1);
    const std::size_t n = parse_count(header, 2);
    if (kind == "MATRIX") {
      doc.payload = Matrix::from_rows(parse_rows(in, k, n), n);
    } else if (kind == "CONE_V") {
      auto gens = parse_rows(in, k, n);
      std::vector<Vector> lineality;
      if (!in.done() && in.peek().tokens.front().text == "LINEALITY") {
        const Line& l = in.next();
        expect_tokens(l, 2);
        lineality = parse_rows(in, parse_count(l, 1), n);
      }
      doc.payload = ConeRep::generated_by(n, std::move(gens), std::move(lineality));
    } else if (kind == "CONE_H") {
      doc.payload = ConeRep::defined_by(n, parse_rows(in, k, n));
    } else if (kind == "POLY_V") {
      doc.payload = PolytopeRep::from_points(n, parse_rows(in, k, n));
    } else if (kind == "POLY_H") {
      doc.payload = PolytopeRep::from_halfspaces(n, to_halfspaces(parse_rows(in, k, n + 1)));
    } else {
      fail("unknown document kind '" + kind + "'", header, 0);
    }
  }
  if (!in.done()) fail("unexpected trailing content", in.peek(), 0);
  return doc;
}

std::string serialize(const Document& doc) {
  std::ostringstream os;
  if (const auto* m = std::get_if<Matrix>(&doc.payload)) {
    os << "MATRIX " << m->rows() << ' ' << m->cols() << '\n';
    write_rows(os, m->row_list(), m->cols());
  } else if (const auto* c = std::get_if<ConeRep>(&doc.payload)) {
    os << (c->form == Form::V ? "CONE_V " : "CONE_H ") << c->vectors.size() << ' ' << c->ambient_dim << '\n';
    write_rows(os, c->vectors, c->ambient_dim);
    if (c->form == Form::V && !c->lineality_basis.empty()) {
      os << "LINEALITY " << c->lineality_basis.size() << '\n';
      write_rows(os, c->lineality_basis, c->ambient_dim);
    }
  } else if (const auto* p = std::get_if<PolytopeRep>(&doc.payload)) {
    write_poly(os, *p, p->form == Form::V ? "POLY_V" : "POLY_H");
  } else {
    const auto& cert = std::get<Certificate>(doc.payload);
    if (const auto* no = std::get_if<NoCertificate>(&cert)) {
      os << "CERT NO " << to_string(no->reason) << ' ' << (no->convention == SpanConvention::Column ? "column" : "row")
         << ' ' << no->witness_point.size() << ' ' << no->separator.size() << '\n';
      write_row(os, no->witness_point, "WITNESS");
      write_row(os, no->separator, "SEPARATOR");
    } else {
      const auto& yes = std::get<YesCertificate>(cert);
      os << "CERT YES " << yes.a.rows() << ' ' << yes.a.cols() << ' ' << yes.b.cols() << '\n';
      os << "FACTOR_A\n";
      write_rows(os, yes.a.row_list(), yes.a.cols());
      os << "FACTOR_B\n";
      write_rows(os, yes.b.row_list(), yes.b.cols());
      if (yes.mu) write_row(os, *yes.mu, "MU");
      if (yes.vertices) write_poly(os, *yes.vertices, "VERTICES");
      if (yes.facets) write_poly(os, *yes.facets, "FACETS");
    }
  }
  return os.str();
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_document(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << serialize(doc);
  if (!out) throw InvalidInput("write failed for '" + path.string() + "'");
}

Matrix parse_matrix(std::string_view text) {
  Document d = parse(text);
  if (auto* m = std::get_if<Matrix>(&d.payload)) return std::move(*m);
  throw ParseError("expected a MATRIX document", 1, 1);
}

}  // namespace slackmat
