#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symalg/algebra.hpp"
#include "symalg/wedderburn.hpp"

namespace symalg {

using IntMatrix2 = std::vector<std::vector<std::int64_t>>;
using Sequence = std::vector<std::int64_t>;

struct CartanData {
  IntMatrix2 matrix;  // c_ij = dim e_i B e_j over class representatives
  std::size_t l = 0;
  std::int64_t trace = 0;
};

CartanData cartan_matrix(const Algebra& b, const IdempotentDecomposition& dec);

/// c(B, n) = sum_i dim e_i B e_i - dim e_i J^n e_i, for one n >= 1.
std::int64_t c_value(const Algebra& b, const IdempotentDecomposition& dec, const RadicalData& rad, std::size_t n);
/// (c(B, 1), ..., c(B, lambda)).
Sequence c_sequence(const Algebra& b, const IdempotentDecomposition& dec, const RadicalData& rad);

/// dim soc^n(B) cap Z(B) for n = 1..count, by the two routes
/// Ann(J^n) cap Z and (J^n)^perp cap Z.
struct SocleCenterPaths {
  Sequence via_annihilator;
  Sequence via_perp;
};
SocleCenterPaths socle_center_paths(const Algebra& b, const SymmetrizingForm& form, const RadicalData& rad,
                                    std::size_t count);
/// Annihilator route, cross-checked against the perp route; a mismatch throws
/// ValidationError.
Sequence socle_center_dims(const Algebra& b, const SymmetrizingForm& form, const RadicalData& rad);

/// Idempotent data transported into the basic algebra eBe.
struct BasicContext {
  const CornerAlgebra* basic = nullptr;
  std::vector<Vector> reps;  // class representatives in eBe coordinates
  RadicalData rad;           // radical of eBe, computed directly

  const Algebra& algebra() const { return basic->algebra(); }
};

BasicContext make_basic_context(const CornerAlgebra& basic, const IdempotentDecomposition& dec);

/// B(n) = sum_i e_i J^n e_i + sum_{i != j} e_i B e_j inside eBe. Throws
/// ValidationError unless dim B(n)^perp equals `expected_c` (when given).
Subspace b_subspace(const BasicContext& ctx, std::size_t n, std::optional<std::int64_t> expected_c = std::nullopt);

/// [e_i B e_j, e_j B e_i] contained in e_i J^n e_i + e_j J^n e_j for all i, j.
bool commutator_criterion(const BasicContext& ctx, std::size_t n);

/// dim e_i (J / J^2) e_i per class.
Sequence ext_diagonal(const BasicContext& ctx);

struct InvariantProfile {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t lambda = 1;
  Sequence c_seq;
  Sequence socz_seq;
  std::optional<std::int64_t> m;  // nullopt when lambda = 1
  Sequence ext_diag;
};

/// Largest m <= lambda with equality socz(n) = c(n) for every n <= m; nullopt
/// when lambda = 1.
std::optional<std::int64_t> threshold_m(const InvariantProfile& profile);

struct CheckResult {
  std::string name;
  bool passed = true;
  nlohmann::ordered_json witness;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void add(std::string name, bool passed, nlohmann::ordered_json witness = nlohmann::ordered_json::object());
  const CheckResult* find(const std::string& name) const;
};

/// Everything computed for one block.
struct BlockAnalysis {
  std::size_t dim = 0;
  RadicalData rad;
  IdempotentDecomposition dec;
  std::optional<CornerAlgebra> basic;
  CartanData cartan;
  InvariantProfile profile;
  CheckReport checks;
};

struct BatteryOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_trials = 50;
};

/// Runs the whole per-block pipeline: radical, idempotents, basic algebra,
/// invariants and the check battery. Failed checks are recorded, not thrown.
BlockAnalysis analyze_block(const CornerAlgebra& block, const BatteryOptions& options);

/// Random-subspace identities for the perp and commutator calculus on a
/// symmetric algebra.
void check_subspace_calculus(const Algebra& a, const SymmetrizingForm& form, const BatteryOptions& options,
                             CheckReport& report);

}  // namespace symalg
