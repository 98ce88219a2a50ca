#ifndef SLACKMAT_IO_HPP
#define SLACKMAT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "slackmat/matrix.hpp"
#include "slackmat/polyhedral.hpp"
#include "slackmat/recognition.hpp"

namespace slackmat {

// Plain-text documents, one header line followed by rows of rationals.
//
//   MATRIX p q                 p rows of q entries
//   CONE_V k n                 k generator rows, then optionally
//     LINEALITY l              l lineality rows
//   CONE_H k n                 k normal rows b, meaning b.x >= 0
//   POLY_V k n                 k point rows
//   POLY_H k n                 k rows "beta a_1 ... a_n", meaning a.x <= beta
//   CERT NO reason convention w s
//     WITNESS x_1 ... x_w
//     SEPARATOR h_1 ... h_s
//   CERT YES p k q
//     FACTOR_A                 p rows of k
//     FACTOR_B                 k rows of q
//     [MU m_1 ... m_q]
//     [VERTICES k n + rows]    realized polytope, polytope verdicts only
//     [FACETS k n + rows]
//
// Entries are integers or "a/b". Blank lines and lines starting with '#' are
// skipped. Serialization is canonical: reduced rationals, single spaces, LF.

using Certificate = std::variant<YesCertificate, NoCertificate>;

enum class DocumentKind { Matrix, ConeV, ConeH, PolyV, PolyH, Cert };

std::string_view to_string(DocumentKind k);

struct Document {
  std::variant<Matrix, ConeRep, PolytopeRep, Certificate> payload;

  DocumentKind kind() const;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError with line and column on malformed text.
Document parse(std::string_view text);

std::string serialize(const Document& doc);

Document read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Document& doc);

/// parse() restricted to one payload type; throws ParseError on a kind mismatch.
Matrix parse_matrix(std::string_view text);

}  // namespace slackmat

#endif  // SLACKMAT_IO_HPP
