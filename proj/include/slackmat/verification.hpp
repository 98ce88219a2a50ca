#ifndef SLACKMAT_VERIFICATION_HPP
#define SLACKMAT_VERIFICATION_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "slackmat/polyhedral.hpp"
#include "slackmat/recognition.hpp"

namespace slackmat {

enum class VerificationReason { NotPointed, DimMismatch, SlackReject, Equal };

std::string_view to_string(VerificationReason r);

struct VerificationResult {
  bool equal = false;
  VerificationReason reason = VerificationReason::SlackReject;
  std::size_t dim_q = 0;
  std::optional<std::size_t> dim_p;  // absent when P was found not pointed first
  Matrix slack;                      // the reduction's matrix, when built
  std::optional<NoCertificate> certificate;
};

/// Every point of q satisfies every inequality of p. Throws InvalidInput on
/// mismatched forms or ambient dimensions.
bool containment_check(const PolytopeRep& q, const PolytopeRep& p);

/**
 * Decides P == Q for a V-polytope Q contained in an H-polyhedron P.
 *
 * Stages: P pointed (W has trivial right kernel), dim P == dim Q (LP
 * implicit-equality detection for P), then M with rows w - W v_i and the
 * polytope slack test on M. Throws InvalidInput when Q is not contained in P.
 */
VerificationResult verify_polytope_equality(const PolytopeRep& q, const PolytopeRep& p);

}  // namespace slackmat

#endif  // SLACKMAT_VERIFICATION_HPP
