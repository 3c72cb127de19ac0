#pragma once

// One function per CLI command; each returns a Report or throws Error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/presentation.hpp"
#include "core/report.hpp"

namespace schurmult {

struct SchurOptions {
  bool witness = false;
  bool check_order = false;
};

Report run_validate(const ClassTwoPresentation& P);
Report run_order(const ClassTwoPresentation& P);
Report run_schur(const ClassTwoPresentation& P, const SchurOptions& opts = {});
Report run_epicenter(const ClassTwoPresentation& P, const std::optional<std::vector<GroupVec>>& subgroup = std::nullopt);
Report run_decompose(const ClassTwoPresentation& P);
Report run_family(const FamilySpec& spec);
Report run_realize(const TargetAbelian& target);
Report run_oracle(const ClassTwoPresentation& P, std::uint64_t max_order = 256);

/// "c1,...,ck;c1,...,ck" -> W elements. Throws Error(Parse).
std::vector<GroupVec> parse_subgroup(const std::string& text, std::size_t k);

/// "gk(p=3, s=1, d=4, k=2)" and similar.
std::string describe(const FamilySpec& spec);

/// Exit status for an error code: 2 for consistency and internal failures,
/// 1 otherwise.
int exit_status(ErrorCode code) noexcept;

}  // namespace schurmult
