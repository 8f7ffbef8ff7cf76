#pragma once

#include <cstdint>

#include "uqosp/report.hpp"
#include "uqosp/rewrite/rewrite_system.hpp"
#include "uqosp/superalg/tensor.hpp"

namespace uqosp {

/// Slotwise normal form of a tensor.
Tensor tensor_normal_form(const Tensor& t, const RewriteSystem& sys);

/// The defining relations as elements lhs - rhs, labelled: k k^-1 = 1,
/// commuting k's, k e k^-1, the Cartan relations [E(b),E(-b')] and the two
/// Serre relations of each sign.
std::vector<std::pair<std::string, Element>> defining_relations();

/// Each relation reduces to 0, and so does its coproduct slotwise.
CheckReport verify_hopf_relations(const RewriteSystem& sys);
/// The quintic and cubic Serre relations of both signs reduce to 0.
CheckReport verify_serre(const RewriteSystem& sys);

struct SoundnessOptions {
  int samples = 120;
  int max_length = 6;
  /// Independent random reduction paths per sample.
  int paths = 3;
  std::uint64_t seed = 20240601;
};

/// Random words with random Cartan prefixes: every random reduction path
/// ends at normal_form, and normal_form is idempotent.
CheckReport check_soundness(const RewriteSystem& sys, const SoundnessOptions& options = {});

}  // namespace uqosp
