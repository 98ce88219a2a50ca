#include "slackmat/verification.hpp"

#include "slackmat/errors.hpp"
#include "slackmat/linalg.hpp"

namespace slackmat {

std::string_view to_string(VerificationReason r) {
  switch (r) {
    case VerificationReason::NotPointed:
      return "not_pointed";
    case VerificationReason::DimMismatch:
      return "dim_mismatch";
    case VerificationReason::SlackReject:
      return "slack_reject";
    case VerificationReason::Equal:
      return "equal";
  }
  return "unknown";
}

bool containment_check(const PolytopeRep& q, const PolytopeRep& p) {
  if (q.form != Form::V || p.form != Form::H) throw InvalidInput("containment_check: expected (V-form, H-form)");
  if (q.ambient_dim != p.ambient_dim) throw InvalidInput("containment_check: ambient dimensions differ");
  for (const auto& v : q.points)
    for (const auto& h : p.inequalities)
      if (dot(h.normal, v) > h.bound) return false;
  return true;
}

VerificationResult verify_polytope_equality(const PolytopeRep& q, const PolytopeRep& p) {
  if (!containment_check(q, p)) throw InvalidInput("verify_polytope_equality: Q is not contained in P");
  if (q.points.empty()) throw InvalidInput("verify_polytope_equality: Q has no points");
  const std::size_t n = p.ambient_dim;

  VerificationResult out;
  out.dim_q = dimension(q);

  std::vector<Vector> normals;
  for (const auto& h : p.inequalities) normals.push_back(h.normal);
  if (right_kernel_basis(Matrix::from_rows(normals, n)).size() != 0) {
    out.reason = VerificationReason::NotPointed;
    return out;
  }

  out.dim_p = dimension(p);
  if (*out.dim_p != out.dim_q) {
    out.reason = VerificationReason::DimMismatch;
    return out;
  }

  // phi(x) = w - W x applied to every point of Q
  out.slack = slack_of_polytope(q, p);
  if (out.dim_q == 0) {
    // P is a pointed polyhedron of dimension 0 containing Q: a single point.
    out.equal = true;
    out.reason = VerificationReason::Equal;
    return out;
  }
  RecognitionResult r = is_polytope_slack(out.slack);
  out.equal = r.verdict;
  out.reason = r.verdict ? VerificationReason::Equal : VerificationReason::SlackReject;
  out.certificate = std::move(r.no);
  return out;
}

}  // namespace slackmat
