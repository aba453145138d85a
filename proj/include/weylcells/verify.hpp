#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylcells/coxeter.hpp"
#include "weylcells/report.hpp"

namespace weylcells {

/// Exhaustive Weyl-group verification suites. Each returns one record per
/// check with a witness element on failure. Suites that must materialize
/// the group throw GuardExceeded past `limit`.

/// M = {m_J : J in enumerate_J} = {m_J : J in catalog_J}, plus the
/// involution property and J_{m_J} = J.
Report verify_theorem_main(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// M is contained in M', every m in M' equals w0 w_{0,J_m} with J_m
/// satisfying the w0-compatibility condition, and J -> m_J is onto M'.
Report verify_m_prime(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// The involution-only scan of M agrees with the scan over all classes.
Report verify_m_modes(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// For J, K with the w0-compatibility condition: m_J ~ m_K iff some delta0-fixed w maps J onto K.
/// Requires |W| <= kSimSearchLimit.
Report verify_conjugate_J(const RootSystem& rs);

/// For every m in M, w0 m is the unique minimal-length element of its
/// delta0-twisted class.
Report verify_cor_min_twisted(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// u -> w0 u carries the maximal-length elements of each class onto the
/// minimal-length elements of the delta0-twisted class of w0 w.
Report verify_phi(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// Every Coxeter element lies below every non-identity m in M.
Report verify_coxeter_below_M(const RootSystem& rs, int max_rank = 6,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// Every element ascends to some maximal-length element of its class.
Report verify_ascent(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// Maximal-length elements of each class are pairwise ~-related.
/// Requires |W| <= kSimSearchLimit.
Report verify_sim(const RootSystem& rs);

/// Bruhat-maximal elements of each class coincide with its maximal-length
/// elements. Requires |W| <= kSimSearchLimit.
Report verify_bruhat_maximal(const RootSystem& rs);

/// Names accepted by run_weyl_checks, in execution order.
const std::vector<std::string>& weyl_check_names();

/// Runs the named suites ("all" expands to every suite). Under "all", suites
/// whose own guard is exceeded are recorded as SKIP; a guard hit in an
/// explicitly named suite propagates as GuardExceeded.
/// Throws std::invalid_argument on an unknown name.
Report run_weyl_checks(const RootSystem& rs, const std::vector<std::string>& names,
                       std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace weylcells
